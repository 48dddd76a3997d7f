#include "jetbrackets/jsonschema.hpp"

#include <regex>

#include <nlohmann/json.hpp>

namespace jetbrackets {

namespace {

using nlohmann::json;

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

void validate(const json& schema, const json& value, const std::string& path,
              std::vector<std::string>& out) {
  if (schema.is_boolean()) {
    if (!schema.get<bool>()) out.push_back(path + ": disallowed by schema");
    return;
  }
  if (!schema.is_object()) return;

  if (auto it = schema.find("type"); it != schema.end()) {
    bool ok = false;
    if (it->is_string()) {
      ok = type_matches(it->get<std::string>(), value);
    } else if (it->is_array()) {
      for (const json& t : *it)
        if (t.is_string() && type_matches(t.get<std::string>(), value)) ok = true;
    }
    if (!ok) {
      out.push_back(path + ": expected type " + it->dump());
      return; // the remaining keyword checks assume the right shape
    }
  }

  if (auto it = schema.find("enum"); it != schema.end() && it->is_array()) {
    bool ok = false;
    for (const json& candidate : *it)
      if (candidate == value) ok = true;
    if (!ok) out.push_back(path + ": value not in enum " + it->dump());
  }

  if (auto it = schema.find("anyOf"); it != schema.end() && it->is_array()) {
    bool ok = false;
    for (const json& sub : *it) {
      std::vector<std::string> trial;
      validate(sub, value, path, trial);
      if (trial.empty()) {
        ok = true;
        break;
      }
    }
    if (!ok) out.push_back(path + ": no anyOf branch matched");
  }

  if (value.is_string()) {
    if (auto it = schema.find("pattern"); it != schema.end() && it->is_string()) {
      std::regex re(it->get<std::string>(), std::regex::ECMAScript);
      if (!std::regex_search(value.get<std::string>(), re))
        out.push_back(path + ": string does not match pattern " + it->dump());
    }
  }

  if (value.is_number()) {
    if (auto it = schema.find("minimum"); it != schema.end() && it->is_number()) {
      if (value.get<double>() < it->get<double>())
        out.push_back(path + ": below minimum " + it->dump());
    }
    if (auto it = schema.find("maximum"); it != schema.end() && it->is_number()) {
      if (value.get<double>() > it->get<double>())
        out.push_back(path + ": above maximum " + it->dump());
    }
  }

  if (value.is_object()) {
    const json* props = nullptr;
    if (auto it = schema.find("properties"); it != schema.end() && it->is_object())
      props = &*it;
    if (auto it = schema.find("required"); it != schema.end() && it->is_array()) {
      for (const json& name : *it)
        if (name.is_string() && !value.contains(name.get<std::string>()))
          out.push_back(path + ": missing required property '" + name.get<std::string>() + "'");
    }
    for (const auto& [key, sub] : value.items()) {
      const std::string sub_path = path + "/" + key;
      if (props && props->contains(key)) {
        validate(props->at(key), sub, sub_path, out);
      } else if (auto it = schema.find("additionalProperties"); it != schema.end()) {
        if (it->is_boolean() && !it->get<bool>())
          out.push_back(sub_path + ": property not allowed");
        else if (it->is_object())
          validate(*it, sub, sub_path, out);
      }
    }
  }

  if (value.is_array()) {
    std::size_t prefix_len = 0;
    if (auto it = schema.find("prefixItems"); it != schema.end() && it->is_array()) {
      prefix_len = it->size();
      for (std::size_t i = 0; i < value.size() && i < prefix_len; ++i)
        validate((*it)[i], value[i], path + "/" + std::to_string(i), out);
    }
    if (auto it = schema.find("items"); it != schema.end()) {
      for (std::size_t i = prefix_len; i < value.size(); ++i)
        validate(*it, value[i], path + "/" + std::to_string(i), out);
    }
    if (auto it = schema.find("minItems"); it != schema.end() && it->is_number_integer()) {
      if (value.size() < it->get<std::size_t>())
        out.push_back(path + ": fewer than " + it->dump() + " items");
    }
    if (auto it = schema.find("maxItems"); it != schema.end() && it->is_number_integer()) {
      if (value.size() > it->get<std::size_t>())
        out.push_back(path + ": more than " + it->dump() + " items");
    }
  }
}

} // namespace

std::vector<std::string> schema_violations(const json& schema, const json& value) {
  std::vector<std::string> out;
  validate(schema, value, "#", out);
  return out;
}

bool matches_schema(const json& schema, const json& value) {
  return schema_violations(schema, value).empty();
}

} // namespace jetbrackets
