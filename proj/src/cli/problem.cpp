#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "lingapprox/cli.hpp"

namespace lingapprox::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFuzzySet:
    case ErrorCode::EmptyReference:
      return kEmptySet;
    case ErrorCode::UnknownToken:
    case ErrorCode::EmptyExpression:
    case ErrorCode::DanglingModifier:
    case ErrorCode::UnbalancedParens:
    case ErrorCode::ExpressionTooDeep:
    case ErrorCode::UnknownName:
      return kBadLabel;
    default:
      return kValidation;
  }
}

const FuzzySet& ProblemFile::set(const std::string& name) const {
  for (const auto& [n, s] : sets)
    if (n == name) return s;
  std::string known;
  for (const auto& [n, s] : sets) known += (known.empty() ? "" : ", ") + n;
  throw InputError(kValidation, fmt::format("no set named '{}' (available: {})", name, known));
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw InputError(kFileOrParse, "problem file: " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(kFileOrParse, fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(kFileOrParse, fmt::format("{}: invalid JSON: {}", origin, e.what()));
  }
}

std::vector<double> number_list(const Json& j, const std::string& what) {
  if (!j.is_array()) schema_error(what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) schema_error(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j.at(key).is_number()) schema_error(what + "." + key + " must be a number");
  return j.at(key).get<double>();
}

std::string string_field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j.at(key).is_string()) schema_error(what + "." + key + " must be a string");
  return j.at(key).get<std::string>();
}

FuzzySet named_set(const std::string& name, const UniversePtr& u, std::vector<double> mu) {
  try {
    return FuzzySet(u, std::move(mu));
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("set '{}': {}", name, e.what()));
  }
}

UniversePtr parse_universe(const Json& j) {
  if (!j.is_object()) schema_error("universe must be an object");
  const std::string name = j.contains("name") ? string_field(j, "name", "universe") : "x";
  std::optional<std::string> unit;
  if (j.contains("unit")) unit = string_field(j, "unit", "universe");
  if (j.contains("points")) {
    return make_universe(Universe(name, number_list(j.at("points"), "universe.points"), unit));
  }
  return make_universe(Universe::from_range(name, number_field(j, "min", "universe"),
                                            number_field(j, "max", "universe"),
                                            number_field(j, "step", "universe"), unit));
}

std::vector<double> shape_params(const Json& t, std::size_t n, const std::string& what) {
  if (!t.contains("params")) schema_error(what + " needs params");
  auto p = number_list(t.at("params"), what + ".params");
  if (p.size() != n) schema_error(fmt::format("{} needs {} params, got {}", what, n, p.size()));
  return p;
}

Json shape_json(const Triangular& t) { return {{"shape", "triangular"}, {"params", {t.a, t.b, t.c}}}; }
Json shape_json(const Trapezoidal& t) {
  return {{"shape", "trapezoidal"}, {"params", {t.a, t.b, t.c, t.d}}};
}
Json shape_json(const Explicit& e) { return {{"shape", "explicit"}, {"memberships", e.memberships}}; }

}  // namespace

Vocabulary parse_vocabulary(const Json& j, const UniversePtr& universe) {
  if (!j.is_object()) schema_error("vocabulary must be an object");
  std::vector<TermDef> terms;
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) schema_error("vocabulary.terms must be an array");
    for (const auto& t : j.at("terms")) {
      const std::string name = string_field(t, "name", "term");
      const std::string shape = string_field(t, "shape", "term '" + name + "'");
      const std::string what = "term '" + name + "'";
      if (shape == "triangular") {
        auto p = shape_params(t, 3, what);
        terms.push_back({name, Triangular{p[0], p[1], p[2]}});
      } else if (shape == "trapezoidal") {
        auto p = shape_params(t, 4, what);
        terms.push_back({name, Trapezoidal{p[0], p[1], p[2], p[3]}});
      } else if (shape == "explicit") {
        if (!t.contains("memberships")) schema_error(what + " needs memberships");
        terms.push_back({name, Explicit{number_list(t.at("memberships"), what + ".memberships")}});
      } else {
        schema_error(fmt::format("{} has unknown shape '{}'", what, shape));
      }
    }
  } else {
    terms = default_terms(*universe);
  }

  std::vector<ModifierDef> modifiers;
  if (j.contains("modifiers")) {
    if (!j.at("modifiers").is_array()) schema_error("vocabulary.modifiers must be an array");
    for (const auto& m : j.at("modifiers")) {
      if (m.is_string()) {
        const auto name = m.get<std::string>();
        modifiers.push_back({name, modifier_rule_from_name(name)});
      } else {
        const auto name = string_field(m, "name", "modifier");
        modifiers.push_back({name, modifier_rule_from_name(string_field(m, "rule", "modifier"))});
      }
    }
  } else {
    modifiers = default_modifiers();
  }

  std::vector<QuantifierDef> quantifiers;
  if (j.contains("quantifiers")) {
    if (!j.at("quantifiers").is_array()) schema_error("vocabulary.quantifiers must be an array");
    for (const auto& q : j.at("quantifiers")) {
      const std::string name = string_field(q, "name", "quantifier");
      const std::string what = "quantifier '" + name + "'";
      const std::string shape = string_field(q, "shape", what);
      if (shape == "triangular") {
        auto p = shape_params(q, 3, what);
        quantifiers.push_back({name, Triangular{p[0], p[1], p[2]}});
      } else if (shape == "trapezoidal") {
        auto p = shape_params(q, 4, what);
        quantifiers.push_back({name, Trapezoidal{p[0], p[1], p[2], p[3]}});
      } else {
        schema_error(fmt::format("{} has unknown shape '{}'", what, shape));
      }
    }
  } else {
    quantifiers = default_quantifiers();
  }
  return Vocabulary(universe, std::move(terms), std::move(modifiers), std::move(quantifiers));
}

Json vocabulary_to_json(const Vocabulary& vocab) {
  Json terms = Json::array();
  for (const auto& t : vocab.terms()) {
    Json e = {{"name", t.name}};
    e.update(std::visit([](const auto& s) { return shape_json(s); }, t.shape));
    terms.push_back(e);
  }
  Json mods = Json::array();
  for (const auto& m : vocab.modifiers()) {
    if (m.name == "more or less" || m.name == modifier_rule_name(m.rule))
      mods.push_back(m.name);
    else
      mods.push_back({{"name", m.name}, {"rule", modifier_rule_name(m.rule)}});
  }
  Json qs = Json::array();
  for (const auto& q : vocab.quantifiers()) {
    Json e = {{"name", q.name}};
    e.update(std::visit([](const auto& s) { return shape_json(s); }, q.shape));
    qs.push_back(e);
  }
  return {{"terms", terms}, {"modifiers", mods}, {"quantifiers", qs}};
}

Json problem_to_json(const ProblemFile& p) {
  Json u = {{"name", p.universe->name()}};
  if (p.universe->unit()) u["unit"] = *p.universe->unit();
  u["points"] = p.universe->points();
  Json sets = Json::object();
  for (const auto& [name, s] : p.sets) sets[name] = s.memberships();
  Json out = {{"universe", u}, {"sets", sets}};
  if (p.vocabulary) out["vocabulary"] = vocabulary_to_json(*p.vocabulary);
  return out;
}

ProblemFile parse_problem_json(const std::string& text) {
  const Json j = parse_json_text(text, "problem file");
  if (!j.is_object()) schema_error("top level must be an object");
  if (!j.contains("universe")) schema_error("missing 'universe'");
  if (!j.contains("sets") || !j.at("sets").is_object()) schema_error("'sets' must be an object");
  ProblemFile p;
  p.universe = parse_universe(j.at("universe"));
  for (const auto& [name, mu] : j.at("sets").items())
    p.sets.emplace_back(name, named_set(name, p.universe, number_list(mu, "sets." + name)));
  if (j.contains("vocabulary")) p.vocabulary = parse_vocabulary(j.at("vocabulary"), p.universe);
  p.digest = fnv1a_hex(text);
  return p;
}

ProblemFile parse_problem_csv(const std::string& text, const std::string& set_name) {
  std::vector<double> xs, mus;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto parse_num = [&](std::string s, double& out) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return false;
    s = s.substr(b, e - b + 1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto comma = line.find(',');
    double x = 0, m = 0;
    const bool ok = comma != std::string::npos && parse_num(line.substr(0, comma), x) &&
                    parse_num(line.substr(comma + 1), m);
    if (!ok) {
      if (xs.empty() && lineno == 1) continue;  // header row
      throw InputError(kFileOrParse, fmt::format("csv line {}: expected 'x,mu'", lineno));
    }
    xs.push_back(x);
    mus.push_back(m);
  }
  ProblemFile p;
  p.universe = make_universe(Universe("x", std::move(xs)));
  p.sets.emplace_back(set_name, named_set(set_name, p.universe, std::move(mus)));
  p.digest = fnv1a_hex(text);
  return p;
}

ProblemFile load_problem(const std::string& path) {
  const std::string text = read_file(path);
  const std::filesystem::path fp(path);
  if (fp.extension() == ".csv") return parse_problem_csv(text, fp.stem().string());
  return parse_problem_json(text);
}

Vocabulary resolve_vocabulary(const ProblemFile& problem) {
  if (problem.vocabulary) return *problem.vocabulary;
  if (const char* env = std::getenv("LINGAPPROX_VOCAB"); env && *env) {
    const Json j = parse_json_text(read_file(env), env);
    return parse_vocabulary(j, problem.universe);
  }
  return Vocabulary::defaults(problem.universe);
}

}  // namespace lingapprox::cli
