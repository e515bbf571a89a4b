#include "pencil/campaign.hpp"

#include "pencil/builder.hpp"
#include "pencil/errors.hpp"

namespace pencil {

namespace {

constexpr int kAttempts = 50;
constexpr size_t kKeep = 10;

Int& slot(std::vector<std::pair<Level, Int>>& v, Level l) {
  for (auto& [k, n] : v)
    if (k == l) return n;
  v.emplace_back(l, 0);
  return v.back().second;
}

Json level_counts(const std::vector<std::pair<Level, Int>>& v) {
  Json j = Json::object();
  for (const auto& [l, n] : v) j[to_string(l)] = n;
  return j;
}

// -e_i H_i(s) (column kind) or -H(s) e_j e_j^T (row kind): cancels a row or
// column of H, which tends to lower the rank. Null if that row or column
// is zero.
std::optional<Pencil> cancelling(Rng& rng, const Pencil& h, RankOneKind kind) {
  const bool col = kind == RankOneKind::Column;
  const size_t k = rng() % (col ? h.rows() : h.cols());
  Pencil p = Pencil::zero(h.rows(), h.cols());
  bool nonzero = false;
  for (size_t t = 0; t < (col ? h.cols() : h.rows()); ++t) {
    const size_t i = col ? k : t, j = col ? t : k;
    p.a(i, j) = -h.a(i, j);
    p.b(i, j) = -h.b(i, j);
    nonzero = nonzero || sgn(h.a(i, j)) != 0 || sgn(h.b(i, j)) != 0;
  }
  if (!nonzero) return std::nullopt;
  return p;
}

}  // namespace

std::string to_string(Level l) {
  switch (l) {
    case Level::Exact: return "exact";
    case Level::KindOnly: return "kind-only";
    case Level::RankOnly: return "rank-only";
    default: return "none";
  }
}

Level level_from_string(const std::string& s) {
  for (Level l : {Level::Exact, Level::KindOnly, Level::RankOnly, Level::None})
    if (to_string(l) == s) return l;
  throw InputError("unknown scenario \"" + s + "\"");
}

Scenario scenario_for(Level l, RankOneKind kind, RankChange change) {
  switch (l) {
    case Level::Exact: return {kind, change};
    case Level::KindOnly: return {kind, RankChange::Unknown};
    case Level::RankOnly: return {std::nullopt, change};
    default: return {std::nullopt, RankChange::Unknown};
  }
}

bool CampaignSummary::passed() const {
  if (concordance && concordance->mismatch_count > 0) return false;
  return config.fault_injection || violations == 0;
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw InputError("trial count must be at least 1");
  if (cfg.budget < 1 || cfg.max_size < 1) throw InputError("budget and size must be positive");
  if (cfg.kinds.empty() || cfg.levels.empty()) throw InputError("no perturbation kinds or scenarios selected");
  CampaignSummary sum;
  sum.config = cfg;
  for (Level l : cfg.levels) {
    slot(sum.checks, l);
    slot(sum.violations_by_level, l);
    slot(sum.endpoint_hits, l);
  }
  for (Int t = 0; t < cfg.trials; ++t) {
    Rng rng = stream(cfg.seed, static_cast<std::uint64_t>(t));
    bool done = false;
    for (int attempt = 0; attempt < kAttempts && !done; ++attempt) {
      WeyrCharacteristic before = random_weyr(rng, cfg.budget);
      if (before.rows() < 1 || before.cols() < 1 || before.rows() > cfg.max_size || before.cols() > cfg.max_size)
        continue;
      const RankOneKind kind = cfg.kinds[rng() % cfg.kinds.size()];
      const Pencil h = random_equivalent(rng, build_pencil(before));
      const size_t m = h.rows(), n = h.cols();
      Pencil p = random_rank_one(rng, m, n, kind);
      if (rng() % 4 == 0)
        if (auto c = cancelling(rng, h, kind)) p = *c;
      if (cfg.fault_injection) p = p + random_rank_one(rng, m, n, cfg.kinds[rng() % cfg.kinds.size()]);
      WeyrCharacteristic after;
      try {
        after = weyr_characteristic(h + p);
      } catch (const IrrationalSpectrum&) {
        ++sum.redraws;
        continue;
      }
      done = true;
      ++sum.trials_run;
      ++(kind == RankOneKind::Column ? sum.kind_col : sum.kind_row);
      const Int delta = after.rank() - before.rank();
      RankChange change = RankChange::Unknown;
      if (delta >= -1 && delta <= 1) change = rank_change_from(delta);
      ++(delta == 0 ? sum.rank_equal : delta == -1 ? sum.rank_minus_one : delta == 1 ? sum.rank_plus_one : sum.rank_other);
      for (Level l : cfg.levels) {
        BoundReport rep = check_bounds(before, after, scenario_for(l, kind, change));
        ++slot(sum.checks, l);
        sum.differences_checked += static_cast<Int>(rep.differences.size());
        for (const auto& d : rep.differences) {
          const Interval& iv = d.component == 'w' ? rep.bounds.w : d.component == 'r' ? rep.bounds.r : rep.bounds.s;
          if (d.value != 0 && (d.value == iv.lower || d.value == iv.upper)) ++slot(sum.endpoint_hits, l);
        }
        if (rep.violations.empty()) continue;
        slot(sum.violations_by_level, l) += static_cast<Int>(rep.violations.size());
        sum.violations += static_cast<Int>(rep.violations.size());
        if (sum.counterexamples.size() < kKeep)
          sum.counterexamples.push_back({t, l, kind, h, p, before, after, std::move(rep)});
      }
    }
    if (!done) ++sum.skipped;
  }
  if (cfg.concordance_weight > 0) {
    ConcordanceConfig cc;
    cc.max_weight = cfg.concordance_weight;
    sum.concordance = run_concordance(cc);
  }
  return sum;
}

Json to_json(const CampaignConfig& c) {
  Json kinds = Json::array(), levels = Json::array();
  for (auto k : c.kinds) kinds.push_back(to_string(k));
  for (auto l : c.levels) levels.push_back(to_string(l));
  return Json{{"seed", c.seed},         {"trials", c.trials}, {"budget", c.budget},
              {"max_size", c.max_size}, {"kinds", kinds},     {"scenarios", levels},
              {"fault_injection", c.fault_injection}, {"concordance_weight", c.concordance_weight}};
}

Json to_json(const ConcordanceSummary& s) {
  Json j{{"subpencils", s.subpencils},
         {"rows_enumerated", s.rows_enumerated},
         {"rows_distinct", s.rows_distinct},
         {"rows_irrational", s.rows_irrational},
         {"pairs_checked", s.pairs_checked},
         {"pairs_feasible", s.pairs_feasible},
         {"pairs_relabeled", s.pairs_relabeled},
         {"escalations", s.escalations},
         {"pairs_widened", s.pairs_widened},
         {"mismatches", s.mismatch_count}};
  Json list = Json::array();
  for (const auto& m : s.mismatches) {
    Json e{{"sub", to_json(m.sub)}, {"full", to_json(m.full)}, {"predicate", m.predicate}};
    if (m.completion) e["completion"] = to_json(*m.completion);
    list.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(list);
  return j;
}

Json to_json(const CampaignSummary& s) {
  Json j;
  j["config"] = to_json(s.config);
  j["trials_run"] = s.trials_run;
  j["redraws"] = s.redraws;
  j["skipped"] = s.skipped;
  j["kinds"] = Json{{"col", s.kind_col}, {"row", s.kind_row}};
  j["rank_changes"] = Json{{"equal", s.rank_equal},
                           {"minus-one", s.rank_minus_one},
                           {"plus-one", s.rank_plus_one},
                           {"other", s.rank_other}};
  j["checks"] = level_counts(s.checks);
  j["differences_checked"] = s.differences_checked;
  j["endpoint_hits"] = level_counts(s.endpoint_hits);
  j["violations_by_scenario"] = level_counts(s.violations_by_level);
  j["violations"] = s.violations;
  Json ce = Json::array();
  for (const auto& c : s.counterexamples) {
    Json v = to_json(c.report)["violations"];
    ce.push_back(Json{{"trial", c.trial},
                      {"scenario", to_string(c.level)},
                      {"kind", to_string(c.kind)},
                      {"H", to_json(c.h)},
                      {"P", to_json(c.p)},
                      {"before", to_json(c.before)},
                      {"after", to_json(c.after)},
                      {"violations", std::move(v)}});
  }
  j["counterexamples"] = std::move(ce);
  if (s.concordance) j["concordance"] = to_json(*s.concordance);
  j["passed"] = s.passed();
  return j;
}

}  // namespace pencil
