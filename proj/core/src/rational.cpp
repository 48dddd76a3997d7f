#include "jetbrackets/rational.hpp"

#include "jetbrackets/errors.hpp"

#include <cctype>

namespace jetbrackets {

Rational rat(long num, long den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view text) {
  // Validate shape by hand; mpq_class's string constructor accepts
  // whitespace and bases we do not want here.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ConfigError("malformed rational: '" + std::string(text) + "'");
  i = num_end;
  if (i != text.size()) {
    if (text[i] != '/') throw ConfigError("malformed rational: '" + std::string(text) + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != text.size())
      throw ConfigError("malformed rational: '" + std::string(text) + "'");
  }
  Rational q{std::string(text)};
  if (q.get_den() == 0) throw ConfigError("rational with zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

bool rational_is_integer(const Rational& q) {
  return q.get_den() == 1;
}

int rational_sign(const Rational& q) {
  return sgn(q);
}

} // namespace jetbrackets
