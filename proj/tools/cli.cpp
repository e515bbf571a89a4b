#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "pencil/builder.hpp"
#include "pencil/campaign.hpp"
#include "pencil/errors.hpp"
#include "pencil/fixtures.hpp"
#include "pencil/json_io.hpp"

#ifndef PENCIL_FIXTURE_FILE
#define PENCIL_FIXTURE_FILE "data/reachability_fixtures.json"
#endif

namespace pencil {

namespace {

constexpr int kOk = 0, kFailed = 1, kBadInput = 2;

std::string seq(const std::vector<Int>& v) {
  std::ostringstream o;
  o << '(';
  for (size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ')';
  return o.str();
}

void print_weyr(std::ostream& out, const WeyrCharacteristic& w) {
  out << "size " << w.rows() << "x" << w.cols() << ", rank " << w.rank() << "\n";
  for (const auto& [l, p] : w.regular) out << "  w(" << l.to_string() << ") = " << seq(p.parts()) << "\n";
  out << "  r* = " << seq(w.r_star.to_sequence()) << "\n";
  out << "  s* = " << seq(w.s_star.to_sequence()) << "\n";
}

void print_matrix(std::ostream& out, const char* name, const Matrix& m) {
  out << name << " =\n";
  for (size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (size_t j = 0; j < m.cols(); ++j) out << " " << format_rational(m(i, j));
    out << "\n";
  }
}

void print_report(std::ostream& out, const BoundReport& r) {
  const auto& b = r.bounds;
  out << "scenario kind=" << (r.scenario.kind ? to_string(*r.scenario.kind) : "unknown")
      << " rank=" << to_string(r.scenario.change) << ": w in [" << b.w.lower << "," << b.w.upper << "] "
      << b.w.tag << "; r in [" << b.r.lower << "," << b.r.upper << "] " << b.r.tag << "; s in [" << b.s.lower
      << "," << b.s.upper << "] " << b.s.tag << "; violations " << r.violations.size() << "\n";
  for (const auto& d : r.violations) {
    out << "  violated: " << d.component << "_" << d.index;
    if (d.lambda) out << "(" << d.lambda->to_string() << ")";
    out << " = " << d.value << "\n";
  }
}

struct Options {
  std::string format = "json";
  std::string file1, file2;
  std::optional<std::uint64_t> seed;
  bool random = false;
  std::string kind, scenario, direction = "sub", component = "regular", rank = "auto";
  std::string fixture_file = PENCIL_FIXTURE_FILE;
  Int trials = 1000, budget = 6, max_size = 6, concordance = 0;
  bool fault = false;
};

void emit(std::ostream& out, const Options& o, const Json& j, const std::function<void()>& text) {
  if (o.format == "text") text();
  else out << j.dump(2) << "\n";
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Pencil h = pencil_from_json(read_json_file(o.file1));
  const KroneckerStructure k = kronecker_structure(h);
  const WeyrCharacteristic w = weyr_from_kronecker(k);
  emit(out, o, to_json(w), [&] {
    print_weyr(out, w);
    for (const auto& [l, z] : k.multiplicities) out << "  z(" << l.to_string() << ") = " << seq(z.parts()) << "\n";
    out << "  column indices " << seq(k.column_indices.values()) << "\n";
    out << "  row indices " << seq(k.row_indices.values()) << "\n";
  });
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const WeyrCharacteristic w = weyr_from_json(read_json_file(o.file1));
  Pencil h = build_pencil(w);
  if (o.seed) {
    Rng rng = stream(*o.seed, 0);
    h = random_equivalent(rng, h);
  }
  emit(out, o, to_json(h), [&] {
    out << h.rows() << "x" << h.cols() << " pencil A + sB\n";
    print_matrix(out, "A", h.a);
    print_matrix(out, "B", h.b);
  });
  return kOk;
}

std::vector<Level> selected_levels(const Options& o) {
  if (!o.scenario.empty()) return {level_from_string(o.scenario)};
  return {Level::Exact, Level::KindOnly, Level::RankOnly, Level::None};
}

int cmd_perturb(const Options& o, std::ostream& out) {
  const Pencil h = pencil_from_json(read_json_file(o.file1));
  Pencil p;
  if (o.random) {
    if (!o.file2.empty()) throw InputError("give a perturbation file or --random, not both");
    if (h.rows() == 0 || h.cols() == 0) throw InputError("empty pencil");
    Rng rng = stream(o.seed.value_or(1), 0);
    p = random_rank_one(rng, h.rows(), h.cols(), kind_from_string(o.kind.empty() ? "col" : o.kind));
  } else {
    if (o.file2.empty()) throw InputError("perturbation file or --random required");
    p = pencil_from_json(read_json_file(o.file2));
    if (p.rows() != h.rows() || p.cols() != h.cols()) throw InputError("perturbation has the wrong size");
  }
  const RankOneKind kind = classify_rank_one(p).kind;
  const WeyrCharacteristic before = weyr_characteristic(h), after = weyr_characteristic(h + p);
  const RankChange change = rank_change_from(after.rank() - before.rank());
  std::vector<BoundReport> reports;
  size_t violations = 0;
  for (Level l : selected_levels(o)) {
    reports.push_back(check_bounds(before, after, scenario_for(l, kind, change)));
    violations += reports.back().violations.size();
  }
  Json j;
  j["P"] = to_json(p);
  j["kind"] = to_string(kind);
  j["rank_change"] = to_string(change);
  j["before"] = to_json(before);
  j["after"] = to_json(after);
  Json reps = Json::array();
  for (const auto& r : reports) reps.push_back(to_json(r));
  j["reports"] = std::move(reps);
  j["violations"] = violations;
  emit(out, o, j, [&] {
    out << "perturbation kind " << to_string(kind) << ", rank " << to_string(change) << "\nbefore: ";
    print_weyr(out, before);
    out << "after: ";
    print_weyr(out, after);
    for (const auto& r : reports) print_report(out, r);
  });
  return violations ? kFailed : kOk;
}

Prescription prescription_from(const Json& j, Component c) {
  Prescription p;
  if (c == Component::Regular) p.regular = spectrum_from_json(j.is_object() && j.contains("regular") ? j.at("regular") : j);
  else p.star = star_from_json(j);
  return p;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  const Json known = read_json_file(o.file1), second = read_json_file(o.file2);
  Verdict v;
  if (o.direction == "pair") {
    const WeyrCharacteristic sub = weyr_from_json(known), full = weyr_from_json(second);
    RankChange c;
    if (o.rank == "auto") {
      const Int delta = full.rank() - sub.rank();
      if (delta != 0 && delta != 1) {
        v.feasible = false;
        v.conditions.push_back({"rank-step", false});
      }
      c = delta == 1 ? RankChange::PlusOne : RankChange::Equal;
    } else {
      c = rank_change_from_string(o.rank);
    }
    if (v.conditions.empty()) v = check_completion_full(sub, full, c);
  } else {
    if (o.rank == "auto") throw InputError("--rank is required for prescribed problems");
    const Component comp = component_from_string(o.component);
    const Direction d = o.direction == "sub" ? Direction::FullPrescribed : Direction::SubpencilPrescribed;
    const Target t{d, comp, rank_change_from_string(o.rank)};
    const WeyrCharacteristic w = weyr_from_json(known);
    const Prescription p = prescription_from(second, comp);
    v = d == Direction::FullPrescribed ? feasible_prescribed_sub(w, t, p) : feasible_prescribed_completion(w, t, p);
    if (v.feasible) v.companion = realize_companion(w, t, p);
  }
  emit(out, o, to_json(v), [&] {
    out << (v.feasible ? "feasible" : "infeasible") << "\n";
    for (const auto& c : v.conditions) out << "  " << (c.holds ? "holds " : "fails ") << c.tag << "\n";
    if (v.companion) {
      out << "companion: ";
      print_weyr(out, *v.companion);
    }
  });
  return kOk;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  const auto cases = load_fixtures(o.fixture_file);
  Json list = Json::array();
  std::vector<FixtureResult> results;
  size_t failed = 0;
  for (const auto& c : cases) {
    results.push_back(run_fixture(c));
    failed += !results.back().passed;
    list.push_back(to_json(results.back()));
  }
  Json j{{"fixtures", std::move(list)}, {"passed", cases.size() - failed}, {"failed", failed}};
  emit(out, o, j, [&] {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.id;
      for (const auto& c : r.checked) out << "  " << c.at << "=" << c.value;
      out << "\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    out << cases.size() - failed << "/" << cases.size() << " fixtures passed\n";
  });
  return failed ? kFailed : kOk;
}

int cmd_campaign(const Options& o, std::ostream& out) {
  CampaignConfig cfg;
  cfg.seed = o.seed.value_or(1);
  cfg.trials = o.trials;
  cfg.budget = o.budget;
  cfg.max_size = o.max_size;
  if (!o.kind.empty()) cfg.kinds = {kind_from_string(o.kind)};
  cfg.levels = selected_levels(o);
  cfg.fault_injection = o.fault;
  cfg.concordance_weight = o.concordance;
  const CampaignSummary s = run_campaign(cfg);
  emit(out, o, to_json(s), [&] {
    out << "trials " << s.trials_run << " (redraws " << s.redraws << ", skipped " << s.skipped << ")\n";
    out << "rank changes: equal " << s.rank_equal << ", minus-one " << s.rank_minus_one << ", plus-one "
        << s.rank_plus_one << ", other " << s.rank_other << "\n";
    for (const auto& [l, n] : s.violations_by_level) out << "  " << to_string(l) << ": " << n << " violations\n";
    if (s.concordance)
      out << "concordance: " << s.concordance->pairs_checked << " pairs, " << s.concordance->mismatch_count
          << " mismatches\n";
    out << (s.passed() ? "passed" : "FAILED") << (cfg.fault_injection ? " (fault injection)" : "") << "\n";
  });
  return s.passed() ? kOk : kFailed;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Pencil g = pencil_from_json(read_json_file(o.file1)), h = pencil_from_json(read_json_file(o.file2));
  const bool eq = strictly_equivalent(g, h);
  emit(out, o, Json{{"equivalent", eq}}, [&] { out << (eq ? "equivalent" : "not equivalent") << "\n"; });
  return eq ? kOk : kFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact laboratory for matrix pencils and their rank one perturbations", "pencil_lab"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "text"}, kinds{"col", "row"},
      scenarios{"exact", "kind-only", "rank-only", "none"};
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* inv = app.add_subcommand("invariants", "Weyr characteristic of a pencil");
  inv->add_option("pencil", o.file1, "Pencil JSON file")->required();
  common(inv);

  auto* gen = app.add_subcommand("generate", "Pencil with a given Weyr characteristic");
  gen->add_option("weyr", o.file1, "Weyr characteristic JSON file")->required();
  gen->add_option("--seed", o.seed, "Randomize by a strict equivalence drawn from this seed");
  common(gen);

  auto* per = app.add_subcommand("perturb", "Check the bounds for H + P");
  per->add_option("pencil", o.file1, "Pencil JSON file")->required();
  per->add_option("perturbation", o.file2, "Rank one pencil JSON file");
  per->add_flag("--random", o.random, "Draw a random rank one perturbation");
  per->add_option("--kind", o.kind, "Kind of the random perturbation")->check(CLI::IsMember(kinds));
  per->add_option("--seed", o.seed, "Seed for --random");
  per->add_option("--scenario", o.scenario, "Report only this scenario")->check(CLI::IsMember(scenarios));
  common(per);

  auto* fea = app.add_subcommand("feasible", "Completion feasibility");
  fea->add_option("known", o.file1, "Known characteristic (sub for --direction pair)")->required();
  fea->add_option("prescribed", o.file2, "Prescribed part, or the full characteristic for pair")->required();
  fea->add_option("--direction", o.direction, "sub: H known; completion: H1 known; pair: both known")
      ->check(CLI::IsMember({"sub", "completion", "pair"}));
  fea->add_option("--component", o.component, "Prescribed component")->check(CLI::IsMember({"regular", "col", "row"}));
  fea->add_option("--rank", o.rank, "rank H - rank H1")->check(CLI::IsMember({"auto", "equal", "plus-one"}));
  common(fea);

  auto* fix = app.add_subcommand("fixtures", "Run the reachability fixtures");
  fix->add_option("--file", o.fixture_file, "Fixture file");
  common(fix);

  auto* cam = app.add_subcommand("campaign", "Seeded randomized soundness campaign");
  cam->add_option("--seed", o.seed, "Seed");
  cam->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  cam->add_option("--budget", o.budget, "Total weight of the random characteristics")->check(CLI::PositiveNumber);
  cam->add_option("--max-size", o.max_size, "Largest row or column count")->check(CLI::PositiveNumber);
  cam->add_option("--kind", o.kind, "Only this perturbation kind")->check(CLI::IsMember(kinds));
  cam->add_option("--scenario", o.scenario, "Only this scenario")->check(CLI::IsMember(scenarios));
  cam->add_flag("--fault-injection", o.fault, "Perturb with rank two pencils; violations are not failures");
  cam->add_option("--concordance", o.concordance, "Also run the exhaustive concordance to this weight")
      ->check(CLI::NonNegativeNumber);
  common(cam);

  auto* eqv = app.add_subcommand("equiv", "Strict equivalence of two pencils");
  eqv->add_option("first", o.file1, "Pencil JSON file")->required();
  eqv->add_option("second", o.file2, "Pencil JSON file")->required();
  common(eqv);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (inv->parsed()) return cmd_invariants(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (per->parsed()) return cmd_perturb(o, out);
    if (fea->parsed()) return cmd_feasible(o, out);
    if (fix->parsed()) return cmd_fixtures(o, out);
    if (cam->parsed()) return cmd_campaign(o, out);
    return cmd_equiv(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const IrrationalSpectrum& e) {
    err << "error: irrational spectrum: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace pencil
