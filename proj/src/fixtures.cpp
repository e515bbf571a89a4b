#include "pencil/fixtures.hpp"

#include <sstream>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("fixture: missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw InputError(std::string("fixture: \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Int integer(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("fixture: \"") + key + "\" must be an integer");
  return v.get<Int>();
}

FixtureStep step_from_json(const Json& j) {
  FixtureStep s{component_from_string(text(j, "component")), rank_change_from_string(text(j, "rank")), {}};
  if (s.change != RankChange::Equal && s.change != RankChange::PlusOne)
    throw InputError("fixture: completion rank must be equal or plus-one");
  const Json& p = need(j, "prescribed");
  if (s.component == Component::Regular) s.prescribed.regular = spectrum_from_json(p);
  else s.prescribed.star = star_from_json(p);
  return s;
}

ExpectedDifference expected_from_json(const Json& j) {
  ExpectedDifference e;
  const std::string c = text(j, "component");
  if (c != "w" && c != "r" && c != "s") throw InputError("fixture: component must be w, r or s");
  e.component = c[0];
  if (j.contains("lambda")) e.lambda = Eigenvalue::parse(text(j, "lambda"));
  if (e.component == 'w' && !e.lambda) throw InputError("fixture: w entries need a lambda");
  e.index = integer(j, "index");
  e.value = integer(j, "value");
  e.attains = text(j, "attains");
  if (e.attains != "lower" && e.attains != "upper") throw InputError("fixture: attains must be lower or upper");
  e.formula_tag = text(j, "formula_tag");
  return e;
}

std::string where(const ExpectedDifference& e) {
  std::ostringstream o;
  o << e.component << '_' << e.index;
  if (e.lambda) o << '(' << e.lambda->to_string() << ')';
  return o.str();
}

}  // namespace

std::vector<FixtureCase> fixtures_from_json(const Json& j) {
  std::vector<FixtureCase> out;
  const Json& list = need(j, "fixtures");
  if (!list.is_array()) throw InputError("fixture: \"fixtures\" must be an array");
  for (const Json& f : list) {
    FixtureCase c;
    c.id = text(f, "id");
    c.example = integer(f, "example");
    c.h = weyr_from_json(need(f, "H"));
    c.sub_step = step_from_json(need(f, "sub_step"));
    c.completion_step = step_from_json(need(f, "completion_step"));
    c.perturbation_rank = rank_change_from_string(text(f, "perturbation_rank"));
    for (const Json& e : need(f, "expected")) c.expected.push_back(expected_from_json(e));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FixtureCase> load_fixtures(const std::string& path) { return fixtures_from_json(read_json_file(path)); }

FixtureResult run_fixture(const FixtureCase& c) {
  FixtureResult res;
  res.id = c.id;
  auto fail = [&](std::string msg) { res.failures.push_back(std::move(msg)); };

  const Target sub{Direction::FullPrescribed, c.sub_step.component, c.sub_step.change};
  const Verdict v1 = feasible_prescribed_sub(c.h, sub, c.sub_step.prescribed);
  if (!v1.feasible) {
    fail("subpencil prescription infeasible");
    return res;
  }
  res.h1 = realize_companion(c.h, sub, c.sub_step.prescribed);
  if (!check_completion_full(*res.h1, c.h, sub.change).feasible) fail("H is not a completion of H1");

  const Target comp{Direction::SubpencilPrescribed, c.completion_step.component, c.completion_step.change};
  const Verdict v2 = feasible_prescribed_completion(*res.h1, comp, c.completion_step.prescribed);
  if (!v2.feasible) {
    fail("completion prescription infeasible");
    return res;
  }
  res.g = realize_companion(*res.h1, comp, c.completion_step.prescribed);
  if (!check_completion_full(*res.h1, *res.g, comp.change).feasible) fail("G is not a completion of H1");

  const RankChange observed = rank_change_from(res.g->rank() - c.h.rank());
  if (observed != c.perturbation_rank)
    fail("rank relation " + to_string(observed) + ", expected " + to_string(c.perturbation_rank));

  res.report = check_bounds(c.h, *res.g, {RankOneKind::Column, c.perturbation_rank});
  for (const auto& d : res.report->violations)
    fail(std::string("bound violated at ") + d.component + '_' + std::to_string(d.index) + " = " +
         std::to_string(d.value));

  const DeltaBounds& b = res.report->bounds;
  for (const auto& e : c.expected) {
    const Interval& iv = e.component == 'w' ? b.w : e.component == 'r' ? b.r : b.s;
    Int value = 0;
    for (const auto& d : res.report->differences)
      if (d.component == e.component && d.index == e.index && d.lambda == e.lambda) value = d.value;
    if (value != e.value)
      fail(where(e) + ": difference " + std::to_string(value) + ", expected " + std::to_string(e.value));
    const Int end = e.attains == "lower" ? iv.lower : iv.upper;
    res.checked.push_back({where(e), value, end, iv.tag});
    if (end != e.value)
      fail(where(e) + ": " + e.attains + " bound is " + std::to_string(end) + ", expected " + std::to_string(e.value));
    if (iv.tag != e.formula_tag) fail(where(e) + ": formula " + iv.tag + ", expected " + e.formula_tag);
  }
  res.passed = res.failures.empty();
  return res;
}

Json to_json(const FixtureResult& r) {
  Json j;
  j["id"] = r.id;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  Json checked = Json::array();
  for (const auto& c : r.checked)
    checked.push_back(Json{{"at", c.at}, {"value", c.value}, {"endpoint", c.endpoint}, {"formula_tag", c.formula_tag}});
  j["checked"] = std::move(checked);
  return j;
}

}  // namespace pencil
