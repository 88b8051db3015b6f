#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "lingapprox/cli.hpp"

namespace lingapprox::cli {

namespace {

struct SearchFlags {
  std::string measure = "hamming";
  std::size_t max_clauses = 2;
  std::size_t max_modifiers = 1;
  std::size_t top_k = 5;
  double penalty = 0.0;
  std::size_t threads = 1;
};

struct Common {
  std::string format = "text";
  bool timestamps = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--measure", f.measure, "height | hamming | similarity | relcount")
      ->check(CLI::IsMember({"height", "hamming", "similarity", "relcount"}));
  cmd->add_option("--max-clauses", f.max_clauses, "clauses per label (1-4)");
  cmd->add_option("--max-modifiers", f.max_modifiers, "stacked modifiers per term (0-4)");
  cmd->add_option("--top-k", f.top_k, "number of ranked labels to report");
  cmd->add_option("--penalty", f.penalty, "score penalty per AST node");
  cmd->add_option("--threads", f.threads, "scoring threads, 0 = all cores");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timestamps", c.timestamps, "stamp the report with the current UTC time");
}

SearchConfig to_config(const SearchFlags& f) {
  SearchConfig c;
  c.measure = *measure_from_name(f.measure);
  c.max_clauses = f.max_clauses;
  c.max_modifiers_per_term = f.max_modifiers;
  c.top_k = f.top_k;
  c.complexity_penalty = f.penalty;
  c.threads = f.threads;
  return c;
}

void echo_search(Json& cfg, const SearchFlags& f) {
  cfg["measure"] = f.measure;
  cfg["max_clauses"] = f.max_clauses;
  cfg["max_modifiers"] = f.max_modifiers;
  cfg["top_k"] = f.top_k;
  cfg["penalty"] = f.penalty;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report base_report(const std::string& command, const ProblemFile& p, const std::string& set,
                   const Common& c) {
  Report r;
  r.command = command;
  r.input_digest = p.digest;
  r.set = set;
  r.universe = p.universe->name();
  r.points = p.universe->size();
  if (c.timestamps) r.timestamp = utc_now();
  return r;
}

void emit(const Report& r, const Common& c, std::ostream& out) {
  if (c.format == "json")
    out << report_to_json(r).dump(2) << '\n';
  else
    out << report_to_text(r);
}

std::vector<ApproximationEntry> entries(const std::vector<Approximation>& found) {
  std::vector<ApproximationEntry> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& a = found[i];
    ApproximationEntry e{i + 1, a.text, a.score, a.adjusted_score, a.expr.node_count(), {}};
    for (const auto& s : a.segment_scores) e.segments.push_back({s.segment, s.clause, s.value});
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<PropositionEntry> entries(const std::vector<QuantifiedProposition>& props) {
  std::vector<PropositionEntry> out;
  for (const auto& p : props)
    out.push_back({std::string(method_name(p.method)), p.whole_label ? "whole" : "clause",
                   p.quantifier.names, p.clause_text, p.compatibility, p.proportion,
                   p.sentence()});
  return out;
}

CardinalityEntry entry(const std::string& name, const FuzzyCardinality& c) {
  CardinalityEntry e{name, c.kind() == CardinalityKind::Absolute ? "absolute" : "relative",
                     c.completion() == Completion::AtLeast  ? "at-least"
                     : c.completion() == Completion::AtMost ? "at-most"
                                                            : "none",
                     {}};
  for (const auto& p : c.support()) e.support.emplace_back(p.value, p.membership);
  return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linguistic approximation and quantification of fuzzy sets", "lingapprox"};
  app.require_subcommand(1);

  Common common;
  SearchFlags search;

  std::string file, set_name, label_text, quantifier_name, plot_path, relative_to;
  std::string method = "both";
  bool auto_label = false, cardinality = false, normalize = false, full_levels = false;
  AssignOptions assign;

  auto* approx = app.add_subcommand("approximate", "rank labels for a fuzzy set");
  approx->add_option("file", file, "problem file (.json or .csv)")->required();
  approx->add_option("set", set_name, "set name")->required();
  add_search_flags(approx, search);
  add_common(approx, common);

  auto* quant = app.add_subcommand("quantify", "attach quantifiers to the clauses of a label");
  quant->add_option("file", file, "problem file (.json or .csv)")->required();
  quant->add_option("set", set_name, "set name")->required();
  quant->add_option("label", label_text, "label to quantify");
  quant->add_flag("--auto", auto_label, "quantify the top approximation");
  quant->add_option("--method", method, "sigma | fuzzy | both")
      ->check(CLI::IsMember({"sigma", "fuzzy", "both"}));
  quant->add_option("--threshold", assign.threshold, "minimum compatibility");
  quant->add_option("--tie-tolerance", assign.tie_tolerance, "gap below which two names tie");
  quant->add_flag("--normalize", normalize, "normalize a subnormal FECount before matching");
  quant->add_flag("--full-levels", full_levels, "match FECount over the full alpha range");
  add_search_flags(quant, search);
  add_common(quant, common);

  auto* eval = app.add_subcommand("eval", "evaluate a label on a problem universe");
  eval->add_option("label", label_text, "label")->required();
  eval->add_option("file", file, "problem file (.json or .csv)")->required();
  eval->add_option("--plot", plot_path, "write whitespace-separated (x, mu) rows");
  eval->add_flag("--cardinality", cardinality, "print FGCount/FLCount/FECount");
  eval->add_option("--relative-to", relative_to, "reference set for relative cardinalities");
  add_common(eval, common);

  auto* truth = app.add_subcommand("truth", "degree of 'Q X are A'");
  truth->add_option("quantifier", quantifier_name, "quantifier name")->required();
  truth->add_option("label", label_text, "label")->required();
  truth->add_option("file", file, "problem file (.json or .csv)")->required();
  truth->add_option("set", set_name, "set name")->required();
  add_common(truth, common);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*approx) {
      const auto problem = load_problem(file);
      const auto vocab = resolve_vocabulary(problem);
      const auto& target = problem.set(set_name);
      const auto found = approximate(target, vocab, to_config(search));
      auto r = base_report("approximate", problem, set_name, common);
      echo_search(r.config, search);
      r.approximations = entries(found);
      emit(r, common, out);
    } else if (*quant) {
      if (auto_label == !label_text.empty())
        throw InputError(kUsage, "quantify needs exactly one of a label or --auto");
      const auto problem = load_problem(file);
      const auto vocab = resolve_vocabulary(problem);
      const auto& target = problem.set(set_name);
      auto r = base_report("quantify", problem, set_name, common);
      r.config["method"] = method;
      r.config["threshold"] = assign.threshold;
      r.config["tie_tolerance"] = assign.tie_tolerance;
      r.config["normalize"] = normalize;
      r.config["levels"] = full_levels ? "full" : "overlap";
      std::optional<LabelExpr> label;
      if (auto_label) {
        echo_search(r.config, search);
        const auto found = approximate(target, vocab, to_config(search));
        if (found.empty()) throw Error(ErrorCode::EmptyFuzzySet, "no label scored against the set");
        label = found.front().expr;
      } else {
        label = parse(label_text, vocab);
      }
      r.label = render(*label);
      QuantifyOptions opts;
      opts.assign = assign;
      opts.subject = set_name;
      opts.normalize = normalize;
      opts.cap_levels = !full_levels;
      for (const auto m : {QuantifyMethod::Sigma, QuantifyMethod::Fuzzy}) {
        if (method != "both" && method != method_name(m)) continue;
        const auto props = m == QuantifyMethod::Sigma ? quantify_sigma(target, *label, vocab, opts)
                                                      : quantify_fuzzy(target, *label, vocab, opts);
        const auto rows = entries(props);
        r.propositions.insert(r.propositions.end(), rows.begin(), rows.end());
        r.summaries.emplace_back(std::string(method_name(m)), summary(props));
      }
      emit(r, common, out);
    } else if (*eval) {
      const auto problem = load_problem(file);
      const auto vocab = resolve_vocabulary(problem);
      const auto expr = parse(label_text, vocab);
      const auto set = evaluate(expr, vocab);
      auto r = base_report("eval", problem, "", common);
      r.label = render(expr);
      const auto& pts = problem.universe->points();
      for (std::size_t i = 0; i < pts.size(); ++i) r.curve.emplace_back(pts[i], set[i]);
      if (cardinality) {
        const FuzzySet* ref = relative_to.empty() ? nullptr : &problem.set(relative_to);
        if (ref) r.config["relative_to"] = relative_to;
        r.cardinalities.push_back(entry("fg_count", fg_count(set, ref)));
        r.cardinalities.push_back(entry("fl_count", fl_count(set, ref)));
        r.cardinalities.push_back(entry("fe_count", fe_count(set, ref)));
      }
      if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw InputError(kFileOrParse, fmt::format("cannot write '{}'", plot_path));
        for (const auto& [x, m] : r.curve) plot << fmt::format("{} {}\n", x, m);
      }
      emit(r, common, out);
    } else if (*truth) {
      const auto problem = load_problem(file);
      const auto vocab = resolve_vocabulary(problem);
      const auto expr = parse(label_text, vocab);
      const auto& target = problem.set(set_name);
      auto r = base_report("truth", problem, set_name, common);
      r.label = render(expr);
      r.quantifier = quantifier_name;
      r.truth = truth_of(quantifier_name, expr, target, vocab);
      emit(r, common, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: problem file: " << e.what() << '\n';
    return kFileOrParse;
  }
  return kOk;
}

}  // namespace lingapprox::cli
