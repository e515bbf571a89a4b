#include "pencil/bounds.hpp"

#include <algorithm>
#include <set>

#include "pencil/errors.hpp"

namespace pencil {

std::string to_string(RankChange c) {
  switch (c) {
    case RankChange::Equal: return "equal";
    case RankChange::MinusOne: return "minus-one";
    case RankChange::PlusOne: return "plus-one";
    default: return "unknown";
  }
}

RankChange rank_change_from(Int delta) {
  if (delta == 0) return RankChange::Equal;
  if (delta == 1) return RankChange::PlusOne;
  if (delta == -1) return RankChange::MinusOne;
  throw InputError("rank changed by more than one");
}

namespace {

Interval hull(const Interval& a, const Interval& b) {
  Interval h{std::min(a.lower, b.lower), std::max(a.upper, b.upper), a.tag};
  if (b.tag != a.tag) h.tag = a.tag + "|" + b.tag;
  return h;
}

DeltaBounds hull(const DeltaBounds& a, const DeltaBounds& b) { return {hull(a.w, b.w), hull(a.r, b.r), hull(a.s, b.s)}; }

// Quantities the formulas are written in, for one characteristic.
struct Sizes {
  Int r, r_star, s, s_star;
  explicit Sizes(const WeyrCharacteristic& w)
      : r(w.r_star.tail_weight()),
        r_star(w.r_star.star_weight()),
        s(w.s_star.tail_weight()),
        s_star(w.s_star.star_weight()) {}
};

// [0,2] if x = (0), else [-[sqrt|x|] - 1, [sqrt(|x|-1)] + 2]
Interval widening_plus(Int x, const char* tag) {
  if (x == 0) return {0, 2, tag};
  return {-isqrt(x) - 1, isqrt(x - 1) + 2, tag};
}

// [0,1] if x = (0), else [-[sqrt|x*|], [sqrt|x*|]]
Interval symmetric_star(Int x, Int x_star, const char* tag) {
  if (x == 0) return {0, 1, tag};
  return {-isqrt(x_star), isqrt(x_star), tag};
}

// Perturbation u v(s)^T: a row completion on both sides.
DeltaBounds column_kind(const Sizes& z, RankChange c) {
  switch (c) {
    case RankChange::Equal:
      return {{-1, 1, "eqgpboundwrrr1"}, widening_plus(z.r, "eqgpboundrrrr1+"),
              symmetric_star(z.s, z.s_star, "eqgpboundsrrr1")};
    case RankChange::MinusOne:
      return {{-2, 0, "eqgpboundwrr+"},
              {-isqrt(z.r), 1, "eqgpboundrrr+"},
              {1 - isqrt(z.s_star + 1), 1, "eqgpboundsrr+"}};
    case RankChange::PlusOne:
      return {{0, 2, "eqgpboundwr+r"},
              {-1, isqrt(z.r + 1), "eqgpboundrr+r"},
              {-1, -1 + isqrt(z.s_star), "eqgpboundsr+r"}};
    default: break;
  }
  return hull(hull(column_kind(z, RankChange::Equal), column_kind(z, RankChange::MinusOne)),
              column_kind(z, RankChange::PlusOne));
}

// Perturbation u(s) v^T: the transposed statements.
DeltaBounds row_kind(const Sizes& z, RankChange c) {
  switch (c) {
    case RankChange::Equal:
      return {{-1, 1, "eqgpboundwrrr1"}, symmetric_star(z.r, z.r_star, "eqgpboundrrrr1col"),
              widening_plus(z.s, "eqgpboundsrrr1+col")};
    case RankChange::MinusOne:
      return {{-2, 0, "eqgpboundwrr+"},
              {1 - isqrt(z.r_star + 1), 1, "eqgpboundrrr+col"},
              {-isqrt(z.s), 1, "eqgpboundsrr+col"}};
    case RankChange::PlusOne:
      return {{0, 2, "eqgpboundwr+r"},
              {-1, -1 + isqrt(z.r_star), "eqgpboundrr+rcol"},
              {-1, isqrt(z.s + 1), "eqgpboundsr+rcol"}};
    default: break;
  }
  return hull(hull(row_kind(z, RankChange::Equal), row_kind(z, RankChange::MinusOne)),
              row_kind(z, RankChange::PlusOne));
}

// Kind unknown, rank change known.
DeltaBounds either_kind(const Sizes& z, RankChange c) {
  switch (c) {
    case RankChange::Equal: {
      auto merged = [](Int x, Int x_star, const char* tag) -> Interval {
        if (x == 0) return {0, 2, tag};
        return {std::min(-isqrt(x) - 1, -isqrt(x_star)), std::max(isqrt(x - 1) + 2, isqrt(x_star)), tag};
      };
      return {{-1, 1, "eqgpboundwrrr1"}, merged(z.r, z.r_star, "eqgpboundrrrr1gilt"),
              merged(z.s, z.s_star, "eqgpboundrrrr1gilts")};
    }
    case RankChange::MinusOne:
      return {{-2, 0, "eqgpboundwrr+"},
              {std::min(1 - isqrt(z.r_star + 1), -isqrt(z.r)), 1, "eqgpboundrrr+rowcol"},
              {std::min(1 - isqrt(z.s_star + 1), -isqrt(z.s)), 1, "eqgpboundsrr+rowcol"}};
    case RankChange::PlusOne:
      return {{0, 2, "eqgpboundwr+r"},
              {-1, std::max(-1 + isqrt(z.r_star), isqrt(z.r + 1)), "eqgpboundrr+rrowcol"},
              {-1, std::max(-1 + isqrt(z.s_star), isqrt(z.s + 1)), "eqgpboundsr+rrowcol"}};
    default: break;
  }
  // nothing known
  auto outer = [](Int x, Int x_star, const char* tag) -> Interval {
    if (x == 0) return {std::min(1 - isqrt(x_star + 1), Int{-1}), std::max(Int{2}, -1 + isqrt(x_star)), tag};
    return {std::min(-isqrt(x_star), -1 - isqrt(x)), std::max(2 + isqrt(x - 1), isqrt(x_star)), tag};
  };
  return {{-2, 2, "eqgpboundw"}, outer(z.r, z.r_star, "eqgpboundr"), outer(z.s, z.s_star, "eqgpbounds")};
}

}  // namespace

DeltaBounds completion_bounds(const WeyrCharacteristic& sub, const WeyrCharacteristic& full, RankChange change) {
  const Sizes s1(sub), h(full);
  switch (change) {
    case RankChange::Equal:
      return {{-1, 0, "eqgpboundw01req"}, {0, 0, "eqgpboundr01lreq"}, {1 - isqrt(s1.s_star + 1), 1, "eqgpbounds01lreq"}};
    case RankChange::PlusOne:
      return {{0, 1, "eqgpboundw01rdif"}, {-1, isqrt(h.r), "eqgpboundr01lrdif"}, {0, 0, "eqgpbounds01lrdif"}};
    default: throw InputError("completion_bounds: rank change must be equal or plus-one");
  }
}

DeltaBounds completion_bounds_any_rank(const WeyrCharacteristic& sub, const WeyrCharacteristic& full) {
  const Sizes s1(sub), h(full);
  return {{-1, 1, "eqgpboundw01"}, {-1, isqrt(h.r), "eqgpboundr01l"}, {1 - isqrt(s1.s_star + 1), 1, "eqgpbounds01l"}};
}

DeltaBounds two_sided_completion_bounds(const WeyrCharacteristic& h, int which) {
  const Sizes z(h);
  switch (which) {
    case 1:
      return {{-1, 1, "eqgpboundwrrr1"}, {0, 0, "eqgpboundrrrr1"}, symmetric_star(z.s, z.s_star, "eqgpboundsrrr1")};
    case 2:
      return {{-1, 1, "eqgpboundwrrr1"}, widening_plus(z.r, "eqgpboundrrrr1+"), {0, 0, "eqgpboundsrrr1+"}};
    case 3: return column_kind(z, RankChange::MinusOne);
    case 4: return column_kind(z, RankChange::PlusOne);
    default: throw InputError("two_sided_completion_bounds: case must be 1..4");
  }
}

DeltaBounds perturbation_bounds(const WeyrCharacteristic& h, const Scenario& sc) {
  const Sizes z(h);
  if (!sc.kind) return either_kind(z, sc.change);
  return *sc.kind == RankOneKind::Column ? column_kind(z, sc.change) : row_kind(z, sc.change);
}

std::vector<Difference> all_differences(const WeyrCharacteristic& before, const WeyrCharacteristic& after) {
  if (before.rows() != after.rows() || before.cols() != after.cols())
    throw InputError("characteristics describe pencils of different sizes");
  std::vector<Difference> out;
  std::set<Eigenvalue> lambdas;
  for (const auto& [l, w] : before.regular) lambdas.insert(l);
  for (const auto& [l, w] : after.regular) lambdas.insert(l);
  for (const auto& l : lambdas) {
    const Partition &x = before.weyr(l), &y = after.weyr(l);
    const Int top = std::max(x.length(), y.length()) + 1;
    for (Int i = 1; i <= top; ++i) out.push_back({'w', l, i, y.part(i) - x.part(i)});
  }
  auto star = [&](char c, const StarPartition& x, const StarPartition& y) {
    const Int top = std::max(x.tail().length(), y.tail().length()) + 1;
    for (Int i = 0; i <= top; ++i) out.push_back({c, std::nullopt, i, y.at(i) - x.at(i)});
  };
  star('r', before.r_star, after.r_star);
  star('s', before.s_star, after.s_star);
  return out;
}

BoundReport check_bounds(const WeyrCharacteristic& before, const WeyrCharacteristic& after, const Scenario& sc) {
  BoundReport rep;
  rep.scenario = sc;
  rep.bounds = perturbation_bounds(before, sc);
  rep.differences = all_differences(before, after);
  for (const auto& d : rep.differences) {
    const Interval& iv = d.component == 'w' ? rep.bounds.w : d.component == 'r' ? rep.bounds.r : rep.bounds.s;
    if (!iv.contains(d.value)) rep.violations.push_back(d);
  }
  return rep;
}

}  // namespace pencil
