#include "lingapprox/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <thread>

#include <fmt/core.h>

namespace lingapprox {

std::string_view measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Height: return "height";
    case MeasureKind::HammingComplement: return "hamming";
    case MeasureKind::Similarity: return "similarity";
    case MeasureKind::RelativeCount: return "relcount";
  }
  return "";
}

std::optional<MeasureKind> measure_from_name(std::string_view name) {
  for (auto k : {MeasureKind::Height, MeasureKind::HammingComplement, MeasureKind::Similarity,
                 MeasureKind::RelativeCount})
    if (measure_name(k) == name) return k;
  return std::nullopt;
}

namespace {

double measure_values(MeasureKind kind, const std::vector<double>& t,
                      const std::vector<double>& l) {
  const std::size_t n = t.size();
  switch (kind) {
    case MeasureKind::Height:
      return *std::max_element(t.begin(), t.end());
    case MeasureKind::HammingComplement: {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += std::abs(t[i] - l[i]);
      return 1.0 - d / static_cast<double>(n);
    }
    case MeasureKind::RelativeCount: {
      double inter = 0.0, total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        inter += std::min(t[i], l[i]);
        total += l[i];
      }
      if (total == 0.0)
        throw Error(ErrorCode::EmptyReference, "relative count of an all-zero label set");
      return inter / total;
    }
    case MeasureKind::Similarity: {
      double diff = 0.0, st = 0.0, sl = 0.0;
      std::size_t nu = 0, nt = 0, nl = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] > 0.0 || l[i] > 0.0) {
          ++nu;
          diff += std::abs(t[i] - l[i]);
        }
        if (t[i] > 0.0) ++nt, st += t[i];
        if (l[i] > 0.0) ++nl, sl += l[i];
      }
      if (nu == 0)
        throw Error(ErrorCode::EmptyReference, "similarity of two all-zero sets");
      const double mean_t = nt ? st / static_cast<double>(nt) : 0.0;
      const double mean_l = nl ? sl / static_cast<double>(nl) : 0.0;
      const double v = 1.0 - (diff / static_cast<double>(nu)) / (mean_t + mean_l);
      return std::clamp(v, 0.0, 1.0);
    }
  }
  return 0.0;
}

}  // namespace

double measure(MeasureKind kind, const FuzzySet& target, const FuzzySet& label_set) {
  require_same_universe(target, label_set);
  return measure_values(kind, target.memberships(), label_set.memberships());
}

std::vector<FuzzySet> segment(const FuzzySet& target) {
  if (sigma_count(target) == 0.0)
    throw Error(ErrorCode::EmptyFuzzySet, "cannot segment an all-zero set");
  const auto& m = target.memberships();
  const std::size_t n = m.size();
  // Half-open index ranges [first, last) of each segment.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t start = 0;
  std::size_t i = 1;
  while (i + 1 < n) {
    std::size_t r = i;
    while (r + 1 < n && m[r + 1] == m[i]) ++r;
    if (r + 1 < n && m[i - 1] > m[i] && m[r + 1] > m[i]) {
      if (m[i] == 0.0) {
        ranges.emplace_back(start, i);
      } else {
        ranges.emplace_back(start, r + 1);
      }
      start = r + 1;
    }
    i = r + 1;
  }
  ranges.emplace_back(start, n);

  std::vector<FuzzySet> out;
  for (const auto& [lo, hi] : ranges) {
    std::vector<double> mu(n, 0.0);
    std::copy(m.begin() + static_cast<std::ptrdiff_t>(lo),
              m.begin() + static_cast<std::ptrdiff_t>(hi),
              mu.begin() + static_cast<std::ptrdiff_t>(lo));
    out.emplace_back(target.universe(), std::move(mu));
  }
  return out;
}

void validate(const SearchConfig& c) {
  if (c.max_clauses < 1 || c.max_clauses > 4)
    throw Error(ErrorCode::InvalidConfig, "max_clauses must be in [1, 4]");
  if (c.max_modifiers_per_term > 4)
    throw Error(ErrorCode::InvalidConfig, "max_modifiers_per_term must be in [0, 4]");
  if (c.top_k < 1) throw Error(ErrorCode::InvalidConfig, "top_k must be at least 1");
  if (!(c.complexity_penalty >= 0.0) || !std::isfinite(c.complexity_penalty))
    throw Error(ErrorCode::InvalidConfig, "complexity_penalty must be finite and >= 0");
}

namespace {

constexpr std::size_t kMaxCandidates = 4'000'000;

struct Item {
  LabelExpr expr;
  std::string text;
  std::size_t clauses;
  std::vector<double> mu;
};

struct Candidate {
  LabelExpr expr;
  std::string text;
  Connective conn;
  std::vector<const Item*> parts;
};

std::vector<double> combine(Connective c, const std::vector<const Item*>& parts) {
  std::vector<double> mu = parts.front()->mu;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& v = parts[k]->mu;
    for (std::size_t i = 0; i < mu.size(); ++i)
      mu[i] = c == Connective::And ? std::min(mu[i], v[i]) : std::max(mu[i], v[i]);
  }
  return mu;
}

class SearchSpace {
 public:
  SearchSpace(const Vocabulary& vocab, const SearchConfig& cfg) {
    validate(cfg);
    if (vocab.terms().empty()) throw Error(ErrorCode::VocabularyEmpty, "vocabulary has no terms");
    build_clauses(vocab, cfg.max_modifiers_per_term);
    for (const auto& c : clauses_) candidates_.push_back({c->expr, c->text, Connective::Or, {c}});

    const std::size_t k = cfg.max_clauses;
    // composites_[c][n]: materialized labels with top connective c and n clauses.
    composites_[0].resize(k + 1);
    composites_[1].resize(k + 1);
    for (std::size_t n = 2; n <= k; ++n) {
      for (Connective conn : {Connective::And, Connective::Or}) {
        const auto pool = pool_for(conn, n);
        std::vector<const Item*> pick;
        enumerate(pool, 0, n, pick, [&](const std::vector<const Item*>& parts) {
          LabelExpr e = parts.front()->expr;
          for (std::size_t j = 1; j < parts.size(); ++j)
            e = LabelExpr::composite(e, conn, parts[j]->expr);
          std::string text = render(e);
          if (n < k) {
            auto& item = storage_.emplace_back(Item{e, text, n, combine(conn, parts)});
            composites_[idx(conn)][n].push_back(&item);
          }
          candidates_.push_back({std::move(e), std::move(text), conn, parts});
          if (candidates_.size() > kMaxCandidates)
            throw Error(ErrorCode::InvalidConfig,
                        fmt::format("search space exceeds {} labels; lower the bounds",
                                    kMaxCandidates));
        });
      }
    }
  }

  const std::vector<Candidate>& candidates() const { return candidates_; }

 private:
  static std::size_t idx(Connective c) { return c == Connective::And ? 0 : 1; }

  void build_clauses(const Vocabulary& vocab, std::size_t max_mods) {
    std::vector<std::vector<const ModifierDef*>> chains{{}};
    std::vector<std::vector<const ModifierDef*>> frontier{{}};
    for (std::size_t len = 1; len <= max_mods && !vocab.modifiers().empty(); ++len) {
      std::vector<std::vector<const ModifierDef*>> next;
      for (const auto& ch : frontier)
        for (const auto& m : vocab.modifiers()) {
          auto ext = ch;
          ext.push_back(&m);
          next.push_back(std::move(ext));
        }
      chains.insert(chains.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (const auto& t : vocab.terms()) {
      for (const auto& ch : chains) {
        LabelExpr e = LabelExpr::term(t.name);
        FuzzySet s = vocab.term_set(t.name);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
          e = LabelExpr::modified((*it)->name, e);
          s = apply_modifier(**it, s);
        }
        std::string text = render(e);
        storage_.push_back(Item{e, std::move(text), 1, s.memberships()});
        clauses_.push_back(&storage_.back());
      }
    }
    std::sort(clauses_.begin(), clauses_.end(),
              [](const Item* a, const Item* b) { return a->text < b->text; });
  }

  std::vector<const Item*> pool_for(Connective conn, std::size_t n) const {
    std::vector<const Item*> pool = clauses_;
    const auto& other = composites_[1 - idx(conn)];
    for (std::size_t m = 2; m < n && m < other.size(); ++m)
      pool.insert(pool.end(), other[m].begin(), other[m].end());
    std::sort(pool.begin(), pool.end(),
              [](const Item* a, const Item* b) { return a->text < b->text; });
    return pool;
  }

  // Strictly increasing pool picks, at least two operands, exactly `need`
  // clauses in total.
  void enumerate(const std::vector<const Item*>& pool, std::size_t from, std::size_t need,
                 std::vector<const Item*>& pick,
                 const std::function<void(const std::vector<const Item*>&)>& emit) {
    for (std::size_t i = from; i < pool.size(); ++i) {
      const std::size_t c = pool[i]->clauses;
      if (c > need) continue;
      pick.push_back(pool[i]);
      if (c == need) {
        if (pick.size() >= 2) emit(pick);
      } else {
        enumerate(pool, i + 1, need - c, pick, emit);
      }
      pick.pop_back();
    }
  }

  std::deque<Item> storage_;
  std::vector<const Item*> clauses_;
  std::vector<std::vector<const Item*>> composites_[2];
  std::vector<Candidate> candidates_;
};

struct Scored {
  std::size_t index;
  double score;
  double adjusted;
  bool valid;
};

void score_range(const std::vector<Candidate>& cands, const std::vector<double>& target,
                 const SearchConfig& cfg, std::size_t lo, std::size_t hi,
                 std::vector<Scored>& out) {
  for (std::size_t i = lo; i < hi; ++i) {
    const auto& c = cands[i];
    const auto mu = c.parts.size() == 1 ? c.parts.front()->mu : combine(c.conn, c.parts);
    try {
      const double s = measure_values(cfg.measure, target, mu);
      out[i] = {i, s, s - cfg.complexity_penalty * static_cast<double>(c.expr.node_count()),
                true};
    } catch (const Error&) {
      out[i] = {i, 0.0, 0.0, false};
    }
  }
}

double safe_measure(MeasureKind kind, const FuzzySet& t, const FuzzySet& l) {
  try {
    return measure(kind, t, l);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyReference) throw;
    return 0.0;
  }
}

}  // namespace

std::vector<LabelExpr> enumerate_labels(const Vocabulary& vocab, const SearchConfig& config) {
  SearchSpace space(vocab, config);
  std::vector<LabelExpr> out;
  out.reserve(space.candidates().size());
  for (const auto& c : space.candidates()) out.push_back(c.expr);
  return out;
}

std::vector<SegmentScore> annotate_segments(const LabelExpr& expr, const FuzzySet& target,
                                            const Vocabulary& vocab, MeasureKind kind) {
  const auto clauses = top_level_clauses(expr);
  const auto segs = segment(target);
  struct Pair {
    std::size_t clause, seg;
    double value, hamming;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto set = evaluate(clauses[i], vocab);
    texts.push_back(render(clauses[i]));
    for (std::size_t j = 0; j < segs.size(); ++j)
      pairs.push_back({i, j, safe_measure(kind, segs[j], set),
                       measure(MeasureKind::HammingComplement, segs[j], set)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.hamming != b.hamming) return a.hamming > b.hamming;
    if (a.clause != b.clause) return a.clause < b.clause;
    return a.seg < b.seg;
  });
  std::vector<bool> clause_done(clauses.size(), false), seg_done(segs.size(), false);
  std::vector<Pair> chosen;
  for (const auto& p : pairs) {
    if (clause_done[p.clause] || seg_done[p.seg]) continue;
    clause_done[p.clause] = seg_done[p.seg] = true;
    chosen.push_back(p);
  }
  // Clauses left over when they outnumber segments take their best segment.
  for (const auto& p : pairs) {
    if (clause_done[p.clause]) continue;
    clause_done[p.clause] = true;
    chosen.push_back(p);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Pair& a, const Pair& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.clause < b.clause;
  });
  std::vector<SegmentScore> out;
  for (const auto& p : chosen) out.push_back({p.seg, texts[p.clause], p.value});
  return out;
}

std::vector<Approximation> approximate(const FuzzySet& target, const Vocabulary& vocab,
                                       const SearchConfig& config) {
  if (sigma_count(target) == 0.0)
    throw Error(ErrorCode::EmptyFuzzySet, "approximation target is the all-zero set");
  if (target.universe() != vocab.universe() && !(*target.universe() == *vocab.universe()))
    throw Error(ErrorCode::UniverseMismatch, "target and vocabulary use different universes");
  SearchSpace space(vocab, config);
  const auto& cands = space.candidates();
  std::vector<Scored> scored(cands.size());

  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, cands.size()));
  if (threads == 1) {
    score_range(cands, target.memberships(), config, 0, cands.size(), scored);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cands.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(cands.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(score_range, std::cref(cands), std::cref(target.memberships()),
                        std::cref(config), lo, hi, std::ref(scored));
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Scored> valid;
  for (const auto& s : scored)
    if (s.valid) valid.push_back(s);
  auto better = [&](const Scored& a, const Scored& b) {
    if (a.adjusted != b.adjusted) return a.adjusted > b.adjusted;
    const auto na = cands[a.index].expr.node_count(), nb = cands[b.index].expr.node_count();
    if (na != nb) return na < nb;
    return cands[a.index].text < cands[b.index].text;
  };
  const std::size_t k = std::min(config.top_k, valid.size());
  std::partial_sort(valid.begin(), valid.begin() + static_cast<std::ptrdiff_t>(k), valid.end(),
                    better);

  std::vector<Approximation> out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = cands[valid[i].index];
    out.push_back({c.expr, c.text, valid[i].score, valid[i].adjusted,
                   annotate_segments(c.expr, target, vocab, config.measure)});
  }
  return out;
}

}  // namespace lingapprox
