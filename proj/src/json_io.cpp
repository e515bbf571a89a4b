#include "pencil/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

Int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<Int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// "v x k"
void expand_run(const std::string& text, std::vector<Int>& out) {
  std::istringstream in(text);
  Int v = 0, k = 0;
  std::string x, rest;
  if (!(in >> v >> x >> k) || x != "x" || (in >> rest) || k < 0)
    throw InputError("bad run-length entry \"" + text + "\"");
  out.insert(out.end(), static_cast<size_t>(k), v);
}

std::string entry(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<Int>());
  throw InputError("matrix entry must be a string or an integer");
}

Matrix matrix_from_json(const Json& j, size_t m, size_t n, const char* name) {
  if (!j.is_array() || j.size() != m) throw InputError(std::string(name) + ": expected " + std::to_string(m) + " rows");
  Matrix out(m, n);
  for (size_t i = 0; i < m; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw InputError(std::string(name) + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (size_t k = 0; k < n; ++k) out(i, k) = parse_rational(entry(j[i][k]));
  }
  return out;
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < a.cols(); ++k) row.push_back(format_rational(a(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json sequence_to_json(const FiniteSequence& s) {
  Json j = Json::array();
  for (Int v : s.values()) j.push_back(v);
  return j;
}

const Interval& interval_for(const DeltaBounds& b, char c) { return c == 'w' ? b.w : c == 'r' ? b.r : b.s; }

Json difference_to_json(const Difference& d, const DeltaBounds& b) {
  const Interval& i = interval_for(b, d.component);
  Json j;
  j["component"] = std::string(1, d.component);
  if (d.lambda) j["lambda"] = d.lambda->to_string();
  j["index"] = d.index;
  j["value"] = d.value;
  j["lower"] = i.lower;
  j["upper"] = i.upper;
  j["formula_tag"] = i.tag;
  j["violation"] = !i.contains(d.value);
  return j;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const StarPartition& p) {
  Json j;
  j["zeroth"] = p.zeroth();
  j["tail"] = to_json(p.tail());
  return j;
}

Json to_json(const Pencil& h) {
  Json j;
  j["m"] = h.rows();
  j["n"] = h.cols();
  j["A"] = matrix_to_json(h.a);
  j["B"] = matrix_to_json(h.b);
  return j;
}

Json to_json(const WeyrCharacteristic& w) {
  Json j;
  Json reg = Json::array();
  for (const auto& [l, p] : w.regular) reg.push_back(Json{{"lambda", l.to_string()}, {"weyr", to_json(p)}});
  j["regular"] = std::move(reg);
  j["r_star"] = to_json(w.r_star);
  j["s_star"] = to_json(w.s_star);
  return j;
}

Json to_json(const KroneckerStructure& k) {
  Json j;
  j["m"] = k.rows;
  j["n"] = k.cols;
  j["rank"] = k.rank;
  Json mult = Json::array();
  for (const auto& [l, z] : k.multiplicities) mult.push_back(Json{{"lambda", l.to_string()}, {"sizes", to_json(z)}});
  j["partial_multiplicities"] = std::move(mult);
  j["column_indices"] = sequence_to_json(k.column_indices);
  j["row_indices"] = sequence_to_json(k.row_indices);
  return j;
}

Json to_json(const Interval& i) {
  return Json{{"lower", i.lower}, {"upper", i.upper}, {"formula_tag", i.tag}};
}

Json to_json(const Scenario& s) {
  return Json{{"kind", s.kind ? to_string(*s.kind) : "unknown"}, {"rank", to_string(s.change)}};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["scenario"] = to_json(r.scenario);
  j["bounds"] = Json{{"w", to_json(r.bounds.w)}, {"r", to_json(r.bounds.r)}, {"s", to_json(r.bounds.s)}};
  Json diffs = Json::array(), viol = Json::array();
  for (const auto& d : r.differences) diffs.push_back(difference_to_json(d, r.bounds));
  for (const auto& d : r.violations) viol.push_back(difference_to_json(d, r.bounds));
  j["differences"] = std::move(diffs);
  j["violations"] = std::move(viol);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["feasible"] = v.feasible;
  Json conds = Json::array();
  for (const auto& c : v.conditions) conds.push_back(Json{{"tag", c.tag}, {"holds", c.holds}});
  j["conditions"] = std::move(conds);
  if (v.companion) j["companion"] = to_json(*v.companion);
  return j;
}

std::vector<Int> int_list_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<Int> out;
  for (const auto& e : j) {
    if (e.is_string()) expand_run(e.get<std::string>(), out);
    else out.push_back(as_int(e, "partition entry"));
  }
  return out;
}

Partition partition_from_json(const Json& j) { return Partition(int_list_from_json(j)); }

StarPartition star_from_json(const Json& j) {
  return StarPartition(as_int(field(j, "zeroth"), "zeroth"), partition_from_json(field(j, "tail")));
}

Pencil pencil_from_json(const Json& j) {
  const Int m = as_int(field(j, "m"), "m"), n = as_int(field(j, "n"), "n");
  if (m < 0 || n < 0) throw InputError("negative dimension");
  const auto um = static_cast<size_t>(m), un = static_cast<size_t>(n);
  return {matrix_from_json(field(j, "A"), um, un, "A"), matrix_from_json(field(j, "B"), um, un, "B")};
}

Spectrum spectrum_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("regular: expected an array");
  Spectrum out;
  for (const auto& e : j) {
    const Json& l = field(e, "lambda");
    const Eigenvalue lambda = Eigenvalue::parse(l.is_string() ? l.get<std::string>() : entry(l));
    if (out.count(lambda)) throw InputError("eigenvalue " + lambda.to_string() + " listed twice");
    Partition p = partition_from_json(field(e, "weyr"));
    if (!p.empty()) out[lambda] = std::move(p);
  }
  return out;
}

WeyrCharacteristic weyr_from_json(const Json& j) {
  WeyrCharacteristic w;
  w.regular = spectrum_from_json(j.contains("regular") ? j.at("regular") : Json::array());
  w.r_star = j.contains("r_star") ? star_from_json(j.at("r_star")) : StarPartition();
  w.s_star = j.contains("s_star") ? star_from_json(j.at("s_star")) : StarPartition();
  return w;
}

RankOneKind kind_from_string(const std::string& s) {
  if (s == "col") return RankOneKind::Column;
  if (s == "row") return RankOneKind::Row;
  throw InputError("kind must be col or row, got \"" + s + "\"");
}

RankChange rank_change_from_string(const std::string& s) {
  for (RankChange c : {RankChange::Equal, RankChange::MinusOne, RankChange::PlusOne, RankChange::Unknown})
    if (to_string(c) == s) return c;
  throw InputError("unknown rank relation \"" + s + "\"");
}

Component component_from_string(const std::string& s) {
  for (Component c : {Component::Regular, Component::ColumnStar, Component::RowStar})
    if (to_string(c) == s) return c;
  throw InputError("unknown component \"" + s + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace pencil
