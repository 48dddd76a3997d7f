#include "jetbrackets/metric.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>
#include <map>

namespace jetbrackets {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat identity_matrix(std::size_t s) {
  Mat m(s, std::vector<Rational>(s, rat(0)));
  for (std::size_t i = 0; i < s; ++i) m[i][i] = rat(1);
  return m;
}

bool is_symmetric(const Mat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

// Exact Gauss-Jordan inverse; throws ConfigError when singular.
Mat invert(Mat m, const char* what) {
  std::size_t s = m.size();
  Mat inv = identity_matrix(s);
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    while (pivot < s && m[pivot][col] == 0) ++pivot;
    if (pivot == s) throw ConfigError(std::string(what) + " is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < s; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < s; ++j) {
        Rational mf = f;
        mf *= m[col][j];
        m[r][j] -= mf;
        Rational inf = f;
        inf *= inv[col][j];
        inv[r][j] -= inf;
      }
    }
  }
  return inv;
}

// Determinant of the leading k x k block, exact.
Rational leading_minor(const Mat& m, std::size_t k) {
  Mat a(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
  Rational det = rat(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return rat(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < k; ++j) {
        Rational mf = f;
        mf *= a[col][j];
        a[r][j] -= mf;
      }
    }
  }
  return det;
}

} // namespace

Metric::Metric(CtxPtr ctx) : ctx_(std::move(ctx)) {}

Metric Metric::identity(const CtxPtr& ctx) {
  std::size_t n = static_cast<std::size_t>(ctx->n());
  Metric g(ctx);
  g.base_ = identity_matrix(n);
  g.base_inv_ = identity_matrix(n);
  return g;
}

Metric Metric::create(const CtxPtr& ctx, std::vector<std::vector<Rational>> base_block,
                      const std::vector<FiberEntry>& fiber_entries,
                      bool allow_indefinite_fiber) {
  std::size_t n = static_cast<std::size_t>(ctx->n());
  if (base_block.size() != n)
    throw ConfigError("metric base block must be " + std::to_string(n) + " rows");
  for (const auto& row : base_block)
    if (row.size() != n) throw ConfigError("metric base block must be square");
  if (!is_symmetric(base_block)) throw ConfigError("metric base block must be symmetric");

  Metric g(ctx);
  g.allow_indefinite_ = allow_indefinite_fiber;
  g.base_inv_ = invert(base_block, "metric base block");
  g.base_ = std::move(base_block);

  if (!fiber_entries.empty()) {
    // Collect the support and stage entries, mirroring for symmetry.
    std::map<std::pair<FiberKey, FiberKey>, Rational> staged;
    std::vector<FiberKey> keys;
    for (const auto& e : fiber_entries) {
      ctx->check_fiber_index(e.row.first);
      ctx->check_jet_order(e.row.second);
      ctx->check_fiber_index(e.col.first);
      ctx->check_jet_order(e.col.second);
      keys.push_back(e.row);
      keys.push_back(e.col);
      auto key = std::make_pair(e.row, e.col);
      auto mirror = std::make_pair(e.col, e.row);
      auto it = staged.find(key);
      if (it != staged.end() && it->second != e.value)
        throw ConfigError("conflicting fiber metric entries");
      auto im = staged.find(mirror);
      if (im != staged.end() && im->second != e.value)
        throw ConfigError("fiber metric entries are not symmetric");
      staged[key] = e.value;
      staged[mirror] = e.value;
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::size_t s = keys.size();
    Mat block(s, std::vector<Rational>(s, rat(0)));
    for (std::size_t i = 0; i < s; ++i) block[i][i] = rat(1);
    for (const auto& [rc, v] : staged) {
      auto ri = static_cast<std::size_t>(
          std::lower_bound(keys.begin(), keys.end(), rc.first) - keys.begin());
      auto ci = static_cast<std::size_t>(
          std::lower_bound(keys.begin(), keys.end(), rc.second) - keys.begin());
      block[ri][ci] = v;
    }
    if (!allow_indefinite_fiber) {
      for (std::size_t k = 1; k <= s; ++k)
        if (rational_sign(leading_minor(block, k)) <= 0)
          throw ConfigError("fiber metric block is not positive-definite "
                            "(set the indefinite override to allow this)");
    }
    g.fiber_block_inv_ = invert(block, "metric fiber block");
    g.fiber_block_ = std::move(block);
    g.support_ = std::move(keys);
  }
  return g;
}

Rational Metric::base(int i, int j) const {
  ctx_->check_base_index(i);
  ctx_->check_base_index(j);
  return base_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Rational Metric::fiber(const FiberKey& a, const FiberKey& b) const {
  auto ia = std::lower_bound(support_.begin(), support_.end(), a);
  auto ib = std::lower_bound(support_.begin(), support_.end(), b);
  bool a_in = ia != support_.end() && *ia == a;
  bool b_in = ib != support_.end() && *ib == b;
  if (a_in && b_in)
    return fiber_block_[static_cast<std::size_t>(ia - support_.begin())]
                       [static_cast<std::size_t>(ib - support_.begin())];
  return (a == b) ? rat(1) : rat(0);
}

std::vector<std::pair<FiberKey, Rational>> Metric::fiber_row(const FiberKey& k) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || !(*it == k)) return {{k, rat(1)}};
  std::size_t r = static_cast<std::size_t>(it - support_.begin());
  std::vector<std::pair<FiberKey, Rational>> out;
  for (std::size_t c = 0; c < support_.size(); ++c)
    if (fiber_block_[r][c] != 0) out.emplace_back(support_[c], fiber_block_[r][c]);
  return out;
}

std::vector<std::pair<FiberKey, Rational>> Metric::fiber_inverse_row(const FiberKey& k) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || !(*it == k)) return {{k, rat(1)}};
  std::size_t r = static_cast<std::size_t>(it - support_.begin());
  std::vector<std::pair<FiberKey, Rational>> out;
  for (std::size_t c = 0; c < support_.size(); ++c)
    if (fiber_block_inv_[r][c] != 0) out.emplace_back(support_[c], fiber_block_inv_[r][c]);
  return out;
}

std::vector<std::pair<int, Rational>> Metric::base_row(int i) const {
  ctx_->check_base_index(i);
  std::vector<std::pair<int, Rational>> out;
  for (int j = 1; j <= ctx_->n(); ++j) {
    const Rational& v = base_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (v != 0) out.emplace_back(j, v);
  }
  return out;
}

std::vector<std::pair<int, Rational>> Metric::base_inverse_row(int i) const {
  ctx_->check_base_index(i);
  std::vector<std::pair<int, Rational>> out;
  for (int j = 1; j <= ctx_->n(); ++j) {
    const Rational& v = base_inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (v != 0) out.emplace_back(j, v);
  }
  return out;
}

std::vector<Metric::FiberEntry> Metric::fiber_entries() const {
  std::vector<FiberEntry> out;
  for (std::size_t r = 0; r < support_.size(); ++r)
    for (std::size_t c = 0; c < support_.size(); ++c) {
      Rational expected = (r == c) ? rat(1) : rat(0);
      if (fiber_block_[r][c] != expected)
        out.push_back({support_[r], support_[c], fiber_block_[r][c]});
    }
  return out;
}

namespace {

// One factor mapped through a block row, as a degree-1 sum on the other side.
template <Variance To, Variance From>
GradedSum<To> map_factor(const BasisElem& e, const Metric& g, bool inverse) {
  GradedSum<To> out(g.ctx());
  if (!e.fiber) {
    auto row = inverse ? g.base_inverse_row(e.idx) : g.base_row(e.idx);
    for (const auto& [j, v] : row)
      out += GradedSum<To>::base_elem(g.ctx(), j).scaled(v);
  } else {
    FiberKey k{e.idx, e.mi};
    auto row = inverse ? g.fiber_inverse_row(k) : g.fiber_row(k);
    for (const auto& [key, v] : row)
      out += GradedSum<To>::fiber_elem(g.ctx(), key.first, key.second).scaled(v);
  }
  return out;
}

template <Variance To, Variance From>
GradedSum<To> musical(const GradedSum<From>& s, const Metric& g, bool inverse) {
  require_same_context(s.ctx(), g.ctx());
  GradedSum<To> out(s.ctx());
  for (const auto& [mono, c] : s.terms()) {
    GradedSum<To> acc = GradedSum<To>::scalar(c);
    for (const auto& e : mono) acc = wedge(acc, map_factor<To, From>(e, g, inverse));
    out += acc;
  }
  return out;
}

} // namespace

Form flat(const Multivector& X, const Metric& g) {
  return musical<Variance::Covector, Variance::Vector>(X, g, false);
}

Multivector sharp(const Form& alpha, const Metric& g) {
  return musical<Variance::Vector, Variance::Covector>(alpha, g, true);
}

} // namespace jetbrackets
