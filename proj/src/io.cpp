#include "eulab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "eulab/error.hpp"

namespace eulab::io {

double round12(double v) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

Json pair_json(EInt x) { return Json::array({x.a, x.b}); }

Json set_json(const std::vector<EInt>& set) {
  Json out = Json::array();
  for (const EInt& x : set) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json to_json(const EFactorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json{{"p", pair_json(pp.prime)}, {"e", pp.exponent}});
  return Json{{"unit", pair_json(f.unit.value())}, {"factors", std::move(factors)}};
}

Json to_json(const RationalFactorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json{{"p", pp.p}, {"e", pp.e}});
  Json out{{"factors", std::move(factors)}};
  if (f.sign < 0) out["sign"] = -1;
  return out;
}

Json to_json(const bounds::RhoConstants& k) {
  Json primes = Json::array();
  for (const auto& p : k.primes)
    primes.push_back(Json{{"prime", to_string(p.prime)},
                          {"gamma", p.gamma},
                          {"delta", p.delta},
                          {"negative_prime_power", p.negative_prime_power},
                          {"c", p.c}});
  return Json{{"c_rho", to_string(k.c_rho_value())},
              {"tau", k.tau},
              {"threshold", k.threshold},
              {"rho", to_string(k.rho)},
              {"constant", round12(k.constant)},
              {"primes", std::move(primes)}};
}

Json to_json(const bounds::BoundReport& r, std::optional<std::size_t> trial) {
  Json out;
  out["theorem"] = r.theorem;
  out["trial"] = trial ? Json(*trial) : Json(nullptr);
  out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  out["rho"] = r.rho ? Json(to_string(*r.rho)) : Json(nullptr);
  out["size"] = r.set.size();
  out["omega"] = r.omega ? Json(*r.omega) : Json("infinite");
  out["bound"] = round12(r.bound);
  out["comparison"] = r.comparison == bounds::Comparison::greater ? ">" : ">=";
  out["passed"] = r.passed;
  out["zero_factor"] = r.zero_factor;
  out["primes"] = r.primes;
  Json set = Json::array();
  for (const EInt& x : r.set) {
    if (r.rational_set)
      set.push_back(x.a);
    else
      set.push_back(to_string(x));
  }
  out["set"] = std::move(set);
  return out;
}

Json to_json(const bounds::RefinementTrace& t) {
  Json out;
  out["rho"] = t.rho ? Json(to_string(*t.rho)) : Json(nullptr);
  out["sector"] = t.sector ? Json(*t.sector) : Json(nullptr);
  out["initial_size"] = t.chain.front().size();
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"prime", to_string(s.prime)},
                         {"rule", bounds::to_string(s.rule)},
                         {"size_before", s.size_before},
                         {"size_after", s.size_after}});
  out["steps"] = std::move(steps);
  out["final_set"] = set_json(t.final_set());
  Json checks;
  checks["sizes"] = t.sizes_ok;
  checks["nested"] = t.nested_ok;
  checks["guarantee"] = t.guarantee_ok;
  checks["combination_count"] = t.combination_count_ok ? Json(*t.combination_count_ok) : Json(nullptr);
  checks["combination_divides"] = t.combination_divides_ok ? Json(*t.combination_divides_ok) : Json(nullptr);
  out["checks"] = std::move(checks);
  out["distinct_combinations"] = t.distinct_combinations;
  out["ok"] = t.ok();
  return out;
}

Json to_json(const search::SearchResult& r, const search::SearchConfig& cfg) {
  return Json{{"k", cfg.k},
              {"max", cfg.max_element},
              {"minimum", r.minimum},
              {"witness_count", r.witness_count},
              {"witnesses", r.witnesses},
              {"nodes_visited", r.nodes_visited},
              {"seconds", round12(r.seconds)}};
}

std::string to_csv(const search::SearchResult& r, const search::SearchConfig& cfg, bool header) {
  std::ostringstream os;
  if (header) os << "size,max_element,minimum,witness_count,examples\n";
  os << cfg.k << ',' << cfg.max_element << ',' << r.minimum << ',' << r.witness_count << ",\"";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i) os << ' ';
    os << '{';
    for (std::size_t j = 0; j < r.witnesses[i].size(); ++j) os << (j ? "," : "") << r.witnesses[i][j];
    os << '}';
  }
  os << "\"\n";
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T, typename Parse>
std::vector<T> read_lines(std::istream& in, std::string_view source, Parse parse) {
  std::vector<T> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      out.push_back(parse(t));
    } catch (const std::exception& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return in;
}

}  // namespace

std::vector<EInt> read_eint_set(std::istream& in, std::string_view source) {
  return read_lines<EInt>(in, source, [](const std::string& t) { return parse_eint(t); });
}

std::vector<std::int64_t> read_integer_set(std::istream& in, std::string_view source) {
  return read_lines<std::int64_t>(in, source, [](const std::string& t) {
    const EInt x = parse_eint(t);
    if (x.b != 0) throw ParseError("expected an integer, got '" + t + "'");
    return x.a;
  });
}

std::vector<EInt> read_eint_set_file(const std::string& path) {
  auto in = open(path);
  return read_eint_set(in, path);
}

std::vector<std::int64_t> read_integer_set_file(const std::string& path) {
  auto in = open(path);
  return read_integer_set(in, path);
}

polyprod::SparsePoly read_poly(std::istream& in, std::string_view source) {
  polyprod::SparsePoly f;
  try {
    const Json j = Json::parse(in);
    f.n = j.at("n").get<int>();
    f.r = j.at("r").get<std::vector<std::int64_t>>();
    f.m = j.at("m").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
  f.validate();
  return f;
}

polyprod::SparsePoly read_poly_file(const std::string& path) {
  auto in = open(path);
  return read_poly(in, path);
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Schemas

namespace {

const char* const kSchemas = R"json({
  "factor-e": {
    "type": "object", "required": ["unit", "factors"], "additionalProperties": false,
    "properties": {
      "unit": {"type": "array", "items": {"type": "integer"}},
      "factors": {"type": "array", "items": {
        "type": "object", "required": ["p", "e"], "additionalProperties": false,
        "properties": {"p": {"type": "array", "items": {"type": "integer"}},
                       "e": {"type": "integer", "minimum": 1}}}}
    }
  },
  "factor-n": {
    "type": "object", "required": ["factors"], "additionalProperties": false,
    "properties": {
      "sign": {"type": "integer", "enum": [-1]},
      "factors": {"type": "array", "items": {
        "type": "object", "required": ["p", "e"], "additionalProperties": false,
        "properties": {"p": {"type": "integer", "minimum": 2},
                       "e": {"type": "integer", "minimum": 1}}}}
    }
  },
  "omega": {
    "type": "object", "required": ["value", "omega", "primes"], "additionalProperties": false,
    "properties": {
      "value": {"type": "string"},
      "omega": {"type": "integer", "minimum": 0},
      "primes": {"type": "array", "items": {"type": "string"}}
    }
  },
  "tau": {
    "type": "object", "required": ["value", "tau"], "additionalProperties": false,
    "properties": {"value": {"type": "string"}, "tau": {"type": "integer", "minimum": 6}}
  },
  "crho": {
    "type": "object", "required": ["c_rho", "tau", "threshold", "rho", "constant", "primes"],
    "additionalProperties": false,
    "properties": {
      "c_rho": {"type": "string"},
      "tau": {"type": "integer", "minimum": 6},
      "threshold": {"type": "integer", "minimum": 38},
      "rho": {"type": "string"},
      "constant": {"type": "number"},
      "primes": {"type": "array", "items": {
        "type": "object", "required": ["prime", "gamma", "delta", "negative_prime_power", "c"],
        "additionalProperties": false,
        "properties": {"prime": {"type": "string"},
                       "gamma": {"type": "integer", "minimum": 0},
                       "delta": {"type": "integer", "minimum": 0},
                       "negative_prime_power": {"type": "boolean"},
                       "c": {"type": "integer", "minimum": 0}}}}
    }
  },
  "bound-report": {
    "type": "object",
    "required": ["theorem", "trial", "seed", "rho", "size", "omega", "bound", "comparison",
                 "passed", "zero_factor", "primes", "set"],
    "additionalProperties": false,
    "properties": {
      "theorem": {"type": "string", "enum": ["t1", "t2", "cor1", "cor2", "rho-minus1", "erdos-turan"]},
      "trial": {"type": ["integer", "null"], "minimum": 0},
      "seed": {"type": ["integer", "null"]},
      "rho": {"type": ["string", "null"]},
      "size": {"type": "integer", "minimum": 2},
      "omega": {"type": ["integer", "string"]},
      "bound": {"type": "number"},
      "comparison": {"type": "string", "enum": [">", ">="]},
      "passed": {"type": "boolean"},
      "zero_factor": {"type": "boolean"},
      "primes": {"type": "array", "items": {"type": "string"}},
      "set": {"type": "array", "items": {"type": ["string", "integer"]}}
    }
  },
  "refinement-trace": {
    "type": "object",
    "required": ["rho", "sector", "initial_size", "steps", "final_set", "checks",
                 "distinct_combinations", "ok"],
    "additionalProperties": false,
    "properties": {
      "rho": {"type": ["string", "null"]},
      "sector": {"type": ["integer", "null"]},
      "initial_size": {"type": "integer", "minimum": 0},
      "steps": {"type": "array", "items": {
        "type": "object", "required": ["prime", "rule", "size_before", "size_after"],
        "additionalProperties": false,
        "properties": {"prime": {"type": "string"},
                       "rule": {"type": "string", "enum": ["uv", "lemma2", "lemma4"]},
                       "size_before": {"type": "integer", "minimum": 0},
                       "size_after": {"type": "integer", "minimum": 0}}}},
      "final_set": {"type": "array", "items": {"type": "string"}},
      "checks": {"type": "object",
                 "required": ["sizes", "nested", "guarantee", "combination_count", "combination_divides"],
                 "properties": {"sizes": {"type": "boolean"}, "nested": {"type": "boolean"},
                                "guarantee": {"type": "boolean"},
                                "combination_count": {"type": ["boolean", "null"]},
                                "combination_divides": {"type": ["boolean", "null"]}}},
      "distinct_combinations": {"type": "integer", "minimum": 0},
      "ok": {"type": "boolean"}
    }
  },
  "search": {
    "type": "object",
    "required": ["k", "max", "minimum", "witness_count", "witnesses", "nodes_visited", "seconds"],
    "additionalProperties": false,
    "properties": {
      "k": {"type": "integer", "minimum": 2},
      "max": {"type": "integer", "minimum": 2},
      "minimum": {"type": "integer", "minimum": 0},
      "witness_count": {"type": "integer", "minimum": 0},
      "witnesses": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 1}}},
      "nodes_visited": {"type": "integer", "minimum": 0},
      "seconds": {"type": "number", "minimum": 0}
    }
  },
  "polyprod": {
    "type": "object",
    "required": ["n", "size_a", "size_b", "dot_identity", "omega", "primes"],
    "additionalProperties": false,
    "properties": {
      "n": {"type": "integer", "minimum": 2},
      "size_a": {"type": "integer", "minimum": 0},
      "size_b": {"type": "integer", "minimum": 0},
      "dot_identity": {"type": "boolean"},
      "omega": {"type": "integer", "minimum": 0},
      "primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
      "independence": {"type": "object", "required": ["independent", "subsets_checked", "singular_subset"],
                       "additionalProperties": false,
                       "properties": {"independent": {"type": "boolean"},
                                      "subsets_checked": {"type": "integer", "minimum": 0},
                                      "singular_subset": {"type": ["array", "null"],
                                                          "items": {"type": "integer", "minimum": 0}}}}
    }
  },
  "manifest": {
    "type": "object",
    "required": ["subcommand", "params", "seed", "version", "wall_seconds", "output_digest"],
    "additionalProperties": false,
    "properties": {
      "subcommand": {"type": "string"},
      "params": {"type": "object"},
      "seed": {"type": ["integer", "null"]},
      "version": {"type": "string"},
      "wall_seconds": {"type": "number", "minimum": 0},
      "output_digest": {"type": "string"}
    }
  }
})json";

const Json& all_schemas() {
  static const Json schemas = Json::parse(kSchemas);
  return schemas;
}

bool has_type(const Json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  return false;
}

void check(const Json& v, const Json& s, const std::string& path, std::vector<std::string>& errors) {
  if (const auto t = s.find("type"); t != s.end()) {
    bool ok = false;
    if (t->is_string())
      ok = has_type(v, t->get<std::string>());
    else
      for (const auto& alt : *t) ok = ok || has_type(v, alt.get<std::string>());
    if (!ok) {
      errors.push_back(path + ": expected type " + t->dump());
      return;
    }
  }
  if (const auto e = s.find("enum"); e != s.end()) {
    bool found = false;
    for (const auto& c : *e) found = found || c == v;
    if (!found) errors.push_back(path + ": value " + v.dump() + " not in " + e->dump());
  }
  if (const auto m = s.find("minimum"); m != s.end() && v.is_number()) {
    if (v.get<double>() < m->get<double>()) errors.push_back(path + ": below minimum " + m->dump());
  }
  if (v.is_object()) {
    if (const auto r = s.find("required"); r != s.end())
      for (const auto& key : *r)
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing '" + key.get<std::string>() + "'");
    const auto props = s.find("properties");
    const bool closed = s.value("additionalProperties", true) == false;
    for (const auto& [key, child] : v.items()) {
      if (props != s.end() && props->contains(key))
        check(child, (*props)[key], path + "." + key, errors);
      else if (closed)
        errors.push_back(path + ": unexpected '" + key + "'");
    }
  }
  if (v.is_array()) {
    if (const auto items = s.find("items"); items != s.end())
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], *items, path + "[" + std::to_string(i) + "]", errors);
  }
}

}  // namespace

std::vector<std::string> schema_names() {
  std::vector<std::string> names;
  for (const auto& [key, _] : all_schemas().items()) names.push_back(key);
  return names;
}

const Json& schema(std::string_view name) {
  const Json& all = all_schemas();
  const auto it = all.find(std::string(name));
  if (it == all.end()) throw DomainError("unknown schema '" + std::string(name) + "'");
  return *it;
}

std::vector<std::string> validate(const Json& doc, std::string_view schema_name) {
  std::vector<std::string> errors;
  check(doc, schema(schema_name), "$", errors);
  return errors;
}

}  // namespace eulab::io
