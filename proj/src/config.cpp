#include "scatterbound/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scatterbound {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError("config error at '" + path + "': " + message);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!keys.contains(item.key())) fail(path + "." + item.key(), "unknown key");
  }
}

double get_number(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "missing required number");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& path, const char* key, double fallback) {
  return obj.contains(key) ? get_number(obj, path, key) : fallback;
}

std::vector<double> get_numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

PotentialSpec potential_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) fail(path + ".kind", "missing kind");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    switch (potential_kind_from_string(kind)) {
      case PotentialKind::free:
        reject_unknown(j, path, {"kind", "level"});
        return PotentialSpec::free(get_number_or(j, path, "level", 0.0));
      case PotentialKind::step:
        reject_unknown(j, path, {"kind", "v_minus", "v_plus", "center"});
        return PotentialSpec::step(get_number_or(j, path, "v_minus", 0.0),
                                   get_number(j, path, "v_plus"),
                                   get_number_or(j, path, "center", 0.0));
      case PotentialKind::square_barrier:
        reject_unknown(j, path, {"kind", "height", "width", "center"});
        return PotentialSpec::square_barrier(get_number(j, path, "height"),
                                             get_number(j, path, "width"),
                                             get_number_or(j, path, "center", 0.0));
      case PotentialKind::delta:
        reject_unknown(j, path, {"kind", "strength", "center"});
        return PotentialSpec::delta(get_number(j, path, "strength"),
                                    get_number_or(j, path, "center", 0.0));
      case PotentialKind::gaussian:
        reject_unknown(j, path, {"kind", "height", "sigma", "center"});
        return PotentialSpec::gaussian(get_number(j, path, "height"),
                                       get_number(j, path, "sigma"),
                                       get_number_or(j, path, "center", 0.0));
      case PotentialKind::tabulated:
        reject_unknown(j, path, {"kind", "x", "v", "v_minus", "v_plus"});
        if (!j.contains("x") || !j.contains("v")) fail(path, "tabulated needs x and v arrays");
        return PotentialSpec::tabulated(get_numbers(j.at("x"), path + ".x"),
                                        get_numbers(j.at("v"), path + ".v"),
                                        get_number(j, path, "v_minus"),
                                        get_number(j, path, "v_plus"));
      case PotentialKind::shifted:
        reject_unknown(j, path, {"kind", "base", "delta_v", "epsilon"});
        if (!j.contains("base") || !j.contains("delta_v")) {
          fail(path, "shifted needs base and delta_v");
        }
        return PotentialSpec::shifted(potential_from_json(j.at("base"), path + ".base"),
                                      potential_from_json(j.at("delta_v"), path + ".delta_v"),
                                      get_number(j, path, "epsilon"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unsupported kind");
}

json potential_to_json(const PotentialSpec& s) {
  json j;
  j["kind"] = to_string(s.kind());
  switch (s.kind()) {
    case PotentialKind::free:
      j["level"] = s.v_minus_inf();
      break;
    case PotentialKind::step:
      j["v_minus"] = s.v_minus_inf();
      j["v_plus"] = s.v_plus_inf();
      j["center"] = s.center();
      break;
    case PotentialKind::square_barrier:
      j["height"] = s.height();
      j["width"] = s.width();
      j["center"] = s.center();
      break;
    case PotentialKind::delta:
      j["strength"] = s.strength();
      j["center"] = s.center();
      break;
    case PotentialKind::gaussian:
      j["height"] = s.height();
      j["sigma"] = s.sigma();
      j["center"] = s.center();
      break;
    case PotentialKind::tabulated:
      j["x"] = s.table_x();
      j["v"] = s.table_v();
      j["v_minus"] = s.v_minus_inf();
      j["v_plus"] = s.v_plus_inf();
      break;
    case PotentialKind::shifted:
      j["base"] = potential_to_json(s.base());
      j["delta_v"] = potential_to_json(s.shift());
      j["epsilon"] = s.epsilon();
      break;
  }
  return j;
}

std::string describe_parse_error(const std::string& text, const json::parse_error& e) {
  std::size_t line = 1, column = 1;
  const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::ostringstream os;
  os << "config parse error at line " << line << ", column " << column << ": " << e.what();
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(describe_parse_error(text, e));
  }
}

}  // namespace

std::vector<double> ScenarioConfig::energies() const {
  std::vector<double> out = energy_list;
  if (energy_range) {
    const auto& r = *energy_range;
    for (long i = 0; i < r.count; ++i) {
      out.push_back(r.count == 1 ? r.min
                                 : r.min + (r.max - r.min) * static_cast<double>(i) /
                                               static_cast<double>(r.count - 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ScenarioConfig::validate() const {
  if (energy_range) {
    if (energy_range->count < 1) fail("energies.count", "must be at least 1");
    if (energy_range->max < energy_range->min) fail("energies", "max must not be below min");
  }
  const auto es = energies();
  if (es.empty()) fail("energies", "no energies given");
  const double floor = std::max(potential.v_minus_inf(), potential.v_plus_inf());
  for (double e : es) {
    if (!std::isfinite(e) || !(e > floor)) {
      fail("energies", "every energy must exceed max(V(-inf), V(+inf)) = " + std::to_string(floor));
    }
  }
  if (!(quad_tol > 0.0)) fail("quad_tol", "must be positive");
  try {
    solver.validate();
  } catch (const DomainError& e) {
    fail("solver", e.what());
  }
}

bool ScenarioConfig::operator==(const ScenarioConfig& other) const {
  return potential == other.potential && comparison == other.comparison &&
         energy_range == other.energy_range && energy_list == other.energy_list &&
         solver == other.solver && quad_tol == other.quad_tol &&
         epsilon_ladder == other.epsilon_ladder && output == other.output;
}

ScenarioConfig parse_config(const std::string& text) {
  const json root = parse_json(text);
  reject_unknown(root, "$",
                 {"potential", "comparison", "energies", "solver", "quad_tol", "epsilon_ladder",
                  "output"});
  ScenarioConfig cfg;
  if (!root.contains("potential")) fail("$.potential", "missing");
  cfg.potential = potential_from_json(root.at("potential"), "$.potential");
  cfg.comparison = root.contains("comparison")
                       ? potential_from_json(root.at("comparison"), "$.comparison")
                       : PotentialSpec::free(cfg.potential.v_minus_inf());

  if (!root.contains("energies")) fail("$.energies", "missing");
  const json& e = root.at("energies");
  if (e.is_array()) {
    cfg.energy_list = get_numbers(e, "$.energies");
  } else if (e.is_object()) {
    reject_unknown(e, "$.energies", {"min", "max", "count"});
    EnergyRange r;
    r.min = get_number(e, "$.energies", "min");
    r.max = get_number(e, "$.energies", "max");
    const double count = get_number(e, "$.energies", "count");
    if (count != std::floor(count)) fail("$.energies.count", "expected an integer");
    r.count = static_cast<long>(count);
    cfg.energy_range = r;
  } else {
    fail("$.energies", "expected a range object or an array");
  }

  if (root.contains("solver")) {
    const json& s = root.at("solver");
    reject_unknown(s, "$.solver",
                   {"rel_tol", "abs_tol", "asymptote_tol", "domain_pad", "max_steps",
                    "node_spacing"});
    auto& st = cfg.solver;
    st.rel_tol = get_number_or(s, "$.solver", "rel_tol", st.rel_tol);
    st.abs_tol = get_number_or(s, "$.solver", "abs_tol", st.abs_tol);
    st.asymptote_tol = get_number_or(s, "$.solver", "asymptote_tol", st.asymptote_tol);
    st.domain_pad = get_number_or(s, "$.solver", "domain_pad", st.domain_pad);
    st.max_steps = static_cast<long>(
        get_number_or(s, "$.solver", "max_steps", static_cast<double>(st.max_steps)));
    st.node_spacing = get_number_or(s, "$.solver", "node_spacing", st.node_spacing);
  }
  cfg.quad_tol = get_number_or(root, "$", "quad_tol", cfg.quad_tol);
  if (root.contains("epsilon_ladder")) {
    cfg.epsilon_ladder = get_numbers(root.at("epsilon_ladder"), "$.epsilon_ladder");
  }
  if (root.contains("output")) {
    const json& o = root.at("output");
    reject_unknown(o, "$.output", {"path", "format"});
    if (o.contains("path")) {
      if (!o.at("path").is_string()) fail("$.output.path", "expected a string");
      cfg.output.path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      const json& f = o.at("format");
      if (f == "csv") {
        cfg.output.format = OutputFormat::csv;
      } else if (f == "json") {
        cfg.output.format = OutputFormat::json;
      } else {
        fail("$.output.format", "expected \"csv\" or \"json\"");
      }
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  json root;
  root["potential"] = potential_to_json(cfg.potential);
  root["comparison"] = potential_to_json(cfg.comparison);
  if (cfg.energy_range) {
    root["energies"] = {{"min", cfg.energy_range->min},
                        {"max", cfg.energy_range->max},
                        {"count", cfg.energy_range->count}};
  } else {
    root["energies"] = cfg.energy_list;
  }
  const auto& s = cfg.solver;
  root["solver"] = {{"rel_tol", s.rel_tol},
                    {"abs_tol", s.abs_tol},
                    {"asymptote_tol", s.asymptote_tol},
                    {"domain_pad", s.domain_pad},
                    {"max_steps", s.max_steps},
                    {"node_spacing", s.node_spacing}};
  root["quad_tol"] = cfg.quad_tol;
  if (!cfg.epsilon_ladder.empty()) root["epsilon_ladder"] = cfg.epsilon_ladder;
  root["output"] = {{"path", cfg.output.path},
                    {"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"}};
  return root.dump(2);
}

PotentialSpec parse_potential(const std::string& json_text) {
  return potential_from_json(parse_json(json_text), "$");
}

std::string serialize_potential(const PotentialSpec& spec) {
  return potential_to_json(spec).dump();
}

}  // namespace scatterbound
