#include <fmt/core.h>

#include "lingapprox/cli.hpp"

namespace lingapprox::cli {

namespace {

std::string f4(double v) { return fmt::format("{:.4f}", v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string config_value(const Json& v) {
  if (v.is_number_float()) return f4(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Json report_to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  j["input"] = {{"digest", r.input_digest}, {"set", r.set}, {"universe", r.universe},
                {"points", r.points}};
  j["config"] = r.config;
  if (r.label) j["label"] = *r.label;
  if (!r.approximations.empty()) {
    Json arr = Json::array();
    for (const auto& a : r.approximations) {
      Json segs = Json::array();
      for (const auto& s : a.segments)
        segs.push_back({{"segment", s.segment}, {"clause", s.clause}, {"value", s.value}});
      arr.push_back({{"rank", a.rank}, {"label", a.label}, {"score", a.score},
                     {"adjusted_score", a.adjusted_score}, {"nodes", a.nodes},
                     {"segments", segs}});
    }
    j["approximations"] = arr;
  }
  if (!r.propositions.empty()) {
    Json arr = Json::array();
    for (const auto& p : r.propositions)
      arr.push_back({{"method", p.method}, {"scope", p.scope}, {"quantifier", p.quantifier},
                     {"clause", p.clause}, {"compatibility", p.compatibility},
                     {"proportion", p.proportion}, {"sentence", p.sentence}});
    j["propositions"] = arr;
  }
  if (!r.summaries.empty()) {
    Json s = Json::object();
    for (const auto& [m, text] : r.summaries) s[m] = text;
    j["summary"] = s;
  }
  if (!r.curve.empty()) {
    Json xs = Json::array(), mus = Json::array();
    for (const auto& [x, m] : r.curve) {
      xs.push_back(x);
      mus.push_back(m);
    }
    j["points"] = xs;
    j["memberships"] = mus;
  }
  if (!r.cardinalities.empty()) {
    Json arr = Json::array();
    for (const auto& c : r.cardinalities) {
      Json sup = Json::array();
      for (const auto& [v, m] : c.support) sup.push_back({v, m});
      arr.push_back({{"name", c.name}, {"kind", c.kind}, {"completion", c.completion},
                     {"support", sup}});
    }
    j["cardinalities"] = arr;
  }
  if (r.quantifier) j["quantifier"] = *r.quantifier;
  if (r.truth) j["truth"] = *r.truth;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  const auto& in = j.at("input");
  r.input_digest = in.at("digest").get<std::string>();
  r.set = in.at("set").get<std::string>();
  r.universe = in.at("universe").get<std::string>();
  r.points = in.at("points").get<std::size_t>();
  r.config = j.at("config");
  if (j.contains("label")) r.label = j.at("label").get<std::string>();
  if (j.contains("approximations"))
    for (const auto& a : j.at("approximations")) {
      ApproximationEntry e{a.at("rank").get<std::size_t>(), a.at("label").get<std::string>(),
                           a.at("score").get<double>(), a.at("adjusted_score").get<double>(),
                           a.at("nodes").get<std::size_t>(), {}};
      for (const auto& s : a.at("segments"))
        e.segments.push_back({s.at("segment").get<std::size_t>(),
                              s.at("clause").get<std::string>(), s.at("value").get<double>()});
      r.approximations.push_back(std::move(e));
    }
  if (j.contains("propositions"))
    for (const auto& p : j.at("propositions"))
      r.propositions.push_back({p.at("method").get<std::string>(),
                                p.at("scope").get<std::string>(),
                                p.at("quantifier").get<std::vector<std::string>>(),
                                p.at("clause").get<std::string>(),
                                p.at("compatibility").get<double>(),
                                p.at("proportion").get<double>(),
                                p.at("sentence").get<std::string>()});
  if (j.contains("summary"))
    for (const auto& [m, text] : j.at("summary").items())
      r.summaries.emplace_back(m, text.get<std::string>());
  if (j.contains("memberships")) {
    const auto xs = j.at("points").get<std::vector<double>>();
    const auto mus = j.at("memberships").get<std::vector<double>>();
    for (std::size_t i = 0; i < xs.size() && i < mus.size(); ++i) r.curve.emplace_back(xs[i], mus[i]);
  }
  if (j.contains("cardinalities"))
    for (const auto& c : j.at("cardinalities")) {
      CardinalityEntry e{c.at("name").get<std::string>(), c.at("kind").get<std::string>(),
                         c.at("completion").get<std::string>(), {}};
      for (const auto& p : c.at("support"))
        e.support.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      r.cardinalities.push_back(std::move(e));
    }
  if (j.contains("quantifier")) r.quantifier = j.at("quantifier").get<std::string>();
  if (j.contains("truth")) r.truth = j.at("truth").get<double>();
  return r;
}

std::string report_to_text(const Report& r) {
  std::string out;
  auto line = [&](const std::string& s) {
    out += s;
    out += '\n';
  };
  if (r.timestamp) line("generated " + *r.timestamp);
  if (r.command == "truth") {
    line(f4(r.truth.value_or(0.0)));
    return out;
  }
  std::string head = fmt::format("{} input {}", r.command, r.input_digest);
  if (!r.set.empty()) head += " set " + r.set;
  head += fmt::format(" universe {} ({} points)", r.universe, r.points);
  line(head);
  if (!r.config.empty()) {
    std::string cfg = "config";
    for (const auto& [k, v] : r.config.items()) cfg += " " + k + "=" + config_value(v);
    line(cfg);
  }
  if (r.label) line("label " + *r.label);

  if (!r.approximations.empty()) {
    line("rank  score   adjusted  label");
    for (const auto& a : r.approximations) {
      line(fmt::format("{:>4}  {}  {}    {}", a.rank, f4(a.score), f4(a.adjusted_score), a.label));
      for (const auto& s : a.segments)
        line(fmt::format("        segment {}  {}  {}", s.segment, f4(s.value), s.clause));
    }
    const auto& top = r.approximations.front();
    std::vector<std::string> parts;
    for (const auto& s : top.segments) parts.push_back(fmt::format("{} ({})", s.clause, f4(s.value)));
    line(fmt::format("LA({}) = {} with ({})", r.set, join(parts, " or "), f4(top.score)));
  }

  const auto& props = r.propositions;
  for (std::size_t i = 0; i < props.size(); ++i) {
    const auto& p = props[i];
    if (i == 0 || props[i - 1].method != p.method) {
      line("method " + p.method);
      line(fmt::format("  {:<6}  {:<22}  {:<6}  {:<10}  {}", "scope", "quantifier", "compat",
                       "proportion", "clause"));
    }
    const std::string q = p.quantifier.empty() ? "(none)" : join(p.quantifier, "/");
    line(fmt::format("  {:<6}  {:<22}  {}  {:<10}  {}", p.scope, q, f4(p.compatibility),
                     f4(p.proportion), p.clause));
    if (i + 1 == props.size() || props[i + 1].method != p.method)
      for (const auto& [m, text] : r.summaries)
        if (m == p.method) line("  => " + text);
  }

  if (!r.curve.empty()) {
    line("x  mu");
    for (const auto& [x, m] : r.curve) line(fmt::format("{}  {}", f4(x), f4(m)));
  }
  for (const auto& c : r.cardinalities) {
    line(fmt::format("{} {} {}", c.name, c.kind, c.completion));
    for (const auto& [v, m] : c.support) line(fmt::format("  {}  {}", f4(v), f4(m)));
  }
  return out;
}

}  // namespace lingapprox::cli
