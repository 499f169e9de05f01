#include "sharpbound/json_io.hpp"

#include <algorithm>
#include <cstdint>

namespace sharpbound {

Json to_json(const InequalityReport& report) {
  return Json{{"lhs", report.lhs},
              {"rhs", report.rhs},
              {"margin", report.margin},
              {"holds", report.holds},
              {"guaranteed", report.guaranteed},
              {"tolerance_used", report.tolerance_used}};
}

Json to_json(const BoundCertificate& cert) {
  return Json{{"lambda_bar", cert.lambda_bar},
              {"Q", cert.Q},
              {"x_star", cert.x_star}};
}

Json to_json(const RefinedBound& bound) {
  return Json{{"main_term", bound.main_term},
              {"correction", bound.correction},
              {"total", bound.total},
              {"A", bound.A},
              {"weighted_mean", bound.weighted_mean}};
}

Json to_json(const GapBound& gap) {
  return Json{{"gap", gap.gap}, {"upper", gap.upper}};
}

Json to_json(const FuzzInstance& instance) {
  return Json{{"p", instance.p},
              {"mu", instance.mu},
              {"a", instance.a},
              {"x", instance.x},
              {"lambda", instance.lambda}};
}

Json to_json(const Violation& violation) {
  return Json{{"trial", violation.trial},
              {"kind", violation.kind},
              {"margin", violation.margin},
              {"guaranteed", violation.guaranteed},
              {"instance", to_json(violation.instance)}};
}

Json to_json(const CampaignReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(to_json(v));
  }
  Json out{{"instances_tested", report.instances_tested},
           {"violations", std::move(violations)},
           {"worst_margin", report.worst_margin}};
  if (report.best_ratio_found) {
    out["best_ratio_found"] = *report.best_ratio_found;
  }
  return out;
}

void require_keys(const Json& obj,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const std::string& context) {
  if (!obj.is_object()) {
    throw ParseError(context + ": expected a JSON object");
  }
  for (const char* key : required) {
    if (!obj.contains(key)) {
      throw ParseError(context + ": missing required key \"" + key + "\"");
    }
  }
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    const auto matches = [&key](const char* k) { return key == k; };
    if (std::any_of(required.begin(), required.end(), matches)) continue;
    if (std::any_of(optional.begin(), optional.end(), matches)) continue;
    throw ParseError(context + ": unknown key \"" + key + "\"");
  }
}

double get_number(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_number()) {
    throw ParseError(std::string("\"") + key + "\" must be a number");
  }
  return v.get<double>();
}

Complex parse_complex(const Json& value, const std::string& context) {
  if (value.is_number()) return Complex(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return Complex(value[0].get<double>(), value[1].get<double>());
  }
  throw ParseError(context + ": expected a number or a [re, im] pair");
}

std::vector<Complex> get_complex_vector(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const Json& entry : v) {
    out.push_back(parse_complex(entry, std::string("\"") + key + "\" entry"));
  }
  return out;
}

std::vector<double> get_real_vector(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& entry : v) {
    if (!entry.is_number()) {
      throw ParseError(std::string("\"") + key +
                       "\" entries must be real numbers");
    }
    out.push_back(entry.get<double>());
  }
  return out;
}

SearchConfig search_config_from(const Json& obj, const SearchConfig& base) {
  require_keys(obj, {}, {"seed", "trials", "local_steps", "step_decay", "box"},
               "search");
  SearchConfig cfg = base;
  if (obj.contains("seed")) {
    const Json& v = obj.at("seed");
    if (!v.is_number_unsigned()) {
      throw ParseError("\"seed\" must be a nonnegative integer");
    }
    cfg.seed = v.get<std::uint64_t>();
  }
  if (obj.contains("trials")) {
    const Json& v = obj.at("trials");
    if (!v.is_number_integer()) {
      throw ParseError("\"trials\" must be an integer");
    }
    cfg.trials = v.get<int>();
  }
  if (obj.contains("local_steps")) {
    const Json& v = obj.at("local_steps");
    if (!v.is_number_integer()) {
      throw ParseError("\"local_steps\" must be an integer");
    }
    cfg.local_steps = v.get<int>();
  }
  if (obj.contains("step_decay")) cfg.step_decay = get_number(obj, "step_decay");
  if (obj.contains("box")) {
    const Json& box = obj.at("box");
    if (!box.is_array()) throw ParseError("\"box\" must be an array");
    cfg.box.clear();
    for (const Json& entry : box) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError("\"box\" entries must be [lo, hi] pairs");
      }
      cfg.box.push_back(Interval{entry[0].get<double>(),
                                 entry[1].get<double>()});
    }
  }
  return cfg;
}

}  // namespace sharpbound
