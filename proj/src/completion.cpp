#include "pencil/completion.hpp"

#include <set>

#include "pencil/builder.hpp"
#include "pencil/errors.hpp"

namespace pencil {

std::string to_string(Component c) {
  switch (c) {
    case Component::Regular: return "regular";
    case Component::ColumnStar: return "col";
    default: return "row";
  }
}

std::string to_string(Direction d) { return d == Direction::FullPrescribed ? "sub" : "completion"; }

namespace {

// lo <= w_i(l) - w1_i(l) <= hi over every eigenvalue and index
bool interlaced(const Spectrum& w, const Spectrum& w1, Int lo, Int hi) {
  std::set<Eigenvalue> ls;
  for (const auto& [l, p] : w) ls.insert(l);
  for (const auto& [l, p] : w1) ls.insert(l);
  static const Partition kEmpty;
  for (const auto& l : ls) {
    auto a = w.find(l), b = w1.find(l);
    const Partition& x = a == w.end() ? kEmpty : a->second;
    const Partition& y = b == w1.end() ? kEmpty : b->second;
    const Int top = std::max(x.length(), y.length());
    for (Int i = 1; i <= top; ++i) {
      const Int d = x.part(i) - y.part(i);
      if (d < lo || d > hi) return false;
    }
  }
  return true;
}

Int weight_of(const Spectrum& s) {
  Int t = 0;
  for (const auto& [l, p] : s) t += p.weight();
  return t;
}

// sum over lambda of z_1(lambda), the largest block sizes
Int block_count(const Spectrum& s) {
  Int t = 0;
  for (const auto& [l, p] : s) t += p.length();
  return t;
}

// (1, ..., 1) with k ones, the conjugate of (k)
Partition ones(Int k) { return Partition(std::vector<Int>(static_cast<size_t>(std::max<Int>(k, 0)), 1)); }

// Remove x Jordan blocks' worth of length one from the last rows: at each
// eigenvalue take x(l) <= z_1(l) greedily, lowering w_i for the last x(l)
// nonzero rows.
Spectrum drop_last_rows(const Spectrum& s, Int x) {
  Spectrum out;
  for (const auto& [l, p] : s) {
    std::vector<Int> v = p.parts();
    const Int z1 = p.length(), take = std::min(x, z1);
    for (Int i = z1 - take; i < z1; ++i) --v[static_cast<size_t>(i)];
    x -= take;
    Partition q(v);
    if (!q.empty()) out[l] = q;
  }
  if (x != 0) throw std::logic_error("not enough Jordan blocks to remove");
  return out;
}

// (p0 + 1, p1, ..., p_{c1} - 1, ...): one more zero minimal index, the
// largest index lowered by one.
StarPartition shift_to_zeroth(const StarPartition& r) {
  std::vector<Int> seq = r.to_sequence();
  ++seq[0];
  const Int c1 = r.tail().length();
  if (c1 > 0) --seq[static_cast<size_t>(c1)];
  return StarPartition::from_sequence(seq);
}

// (p_i - 1 for 0 <= i <= len), zero afterwards
StarPartition lower_all(const StarPartition& p) {
  std::vector<Int> seq = p.to_sequence();
  for (auto& v : seq) --v;
  return StarPartition::from_sequence(seq);
}

Spectrum plus_at(const Spectrum& s, const Eigenvalue& l, const Partition& add_on) {
  Spectrum out = s;
  auto it = out.find(l);
  Partition p = add(it == out.end() ? Partition() : it->second, add_on);
  if (p.empty()) out.erase(l);
  else out[l] = p;
  return out;
}

Eigenvalue fresh_in(const Spectrum& s) {
  for (long k = 0;; ++k) {
    const long v = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    if (!s.count(Eigenvalue(v))) return Eigenvalue(v);
  }
}

WeyrCharacteristic make(Spectrum w, StarPartition r, StarPartition s) {
  WeyrCharacteristic out;
  for (auto& [l, p] : w)
    if (!p.empty()) out.regular[l] = p;
  out.r_star = std::move(r);
  out.s_star = std::move(s);
  return out;
}

Verdict finish(std::vector<Condition> conds) {
  Verdict v;
  v.conditions = std::move(conds);
  v.feasible = true;
  for (const auto& c : v.conditions) v.feasible = v.feasible && c.holds;
  return v;
}

void require_change(RankChange c) {
  if (c != RankChange::Equal && c != RankChange::PlusOne)
    throw InputError("completion rank change must be equal or plus-one");
}

}  // namespace

Eigenvalue fresh_eigenvalue(const WeyrCharacteristic& w) { return fresh_in(w.regular); }

Verdict check_completion_full(const WeyrCharacteristic& sub, const WeyrCharacteristic& full, RankChange change) {
  require_change(change);
  if (sub.rows() + 1 != full.rows() || sub.cols() != full.cols()) return finish({{"one-more-row", false}});
  if (change == RankChange::Equal)
    return finish({{"interww1w+1", interlaced(sub.regular, full.regular, 0, 1)},
                   {"coleqconj", full.r_star == sub.r_star},
                   {"rowprecconj", is_conjugate_majorized(sub.s_star, full.s_star)}});
  return finish({{"interw-1w1w", interlaced(sub.regular, full.regular, -1, 0)},
                 {"colprecconj", is_conjugate_majorized(full.r_star, sub.r_star)},
                 {"roweqconj", full.s_star == sub.s_star}});
}

bool completion_exists(const WeyrCharacteristic& sub, const WeyrCharacteristic& full) {
  const Int d = full.rank() - sub.rank();
  if (d != 0 && d != 1) return false;
  return check_completion_full(sub, full, d == 0 ? RankChange::Equal : RankChange::PlusOne).feasible;
}

Verdict feasible_prescribed_sub(const WeyrCharacteristic& h, const Target& t, const Prescription& p) {
  if (t.direction != Direction::FullPrescribed) throw InputError("feasible_prescribed_sub expects a known full pencil");
  require_change(t.change);
  const StarPartition &r = h.r_star, &s = h.s_star;
  Verdict v;
  if (t.change == RankChange::Equal) {
    switch (t.component) {
      case Component::Regular: {
        const Int x = weight_of(p.regular) - h.regular_weight();
        v = finish({{"interww1w+1", interlaced(p.regular, h.regular, 0, 1)},
                    {"eqs0geq1", s.zeroth() >= 1},
                    {s.zeroth() == 1 ? "eqws1" : "eqws", deficit_feasible(s, x)}});
        if (v.feasible) v.companion = make(p.regular, r, deficit_construct(s, x));
        break;
      }
      case Component::ColumnStar: {
        v = finish({{"coleqconj", p.star == r}, {"eqs0geq1", s.zeroth() >= 1}});
        if (v.feasible) {
          const Int u1 = s.tail().length();
          v.companion = make(plus_at(h.regular, fresh_in(h.regular), ones(u1)), r, lower_all(s));
        }
        break;
      }
      case Component::RowStar: {
        v = finish({{"rowprecconj", is_conjugate_majorized(p.star, s)},
                    {"star-weight-drop", p.star.star_weight() < s.star_weight()}});
        if (v.feasible) {
          const Int x = s.tail_weight() - p.star.tail_weight();
          v.companion = make(plus_at(h.regular, fresh_in(h.regular), ones(x)), r, p.star);
        }
        break;
      }
    }
    return v;
  }
  switch (t.component) {
    case Component::Regular: {
      const Int x = h.regular_weight() - weight_of(p.regular) - 1;
      v = finish({{"interw-1w1w", interlaced(p.regular, h.regular, -1, 0)},
                  {"eqwr+", weight_of(p.regular) - h.regular_weight() + 1 <= r.tail_weight()}});
      if (v.feasible) v.companion = make(p.regular, x == -1 ? shift_to_zeroth(r) : add_at_zero(r, ones(x + 1)), s);
      break;
    }
    case Component::ColumnStar: {
      const Int x = p.star.tail_weight() - r.tail_weight() + 1;
      v = finish({{"colprecconj", is_conjugate_majorized(r, p.star)},
                  {"eqrmins1leqz1", 0 <= x && x <= block_count(h.regular)}});
      if (v.feasible) v.companion = make(drop_last_rows(h.regular, x), p.star, s);
      break;
    }
    case Component::RowStar: {
      v = finish({{"roweqconj", p.star == s},
                  {"eqabswabsrgeq1", h.regular_weight() + r.star_weight() > r.zeroth()}});
      if (v.feasible) {
        if (r.tail_weight() == 0) {
          const auto& [l0, w0] = *h.regular.begin();
          std::vector<Int> w = w0.parts();
          --w.back();
          Spectrum reg = h.regular;
          reg[l0] = Partition(w);
          v.companion = make(reg, StarPartition(r.zeroth() + 1, {}), s);
        } else {
          v.companion = make(h.regular, shift_to_zeroth(r), s);
        }
      }
      break;
    }
  }
  return v;
}

Verdict feasible_prescribed_completion(const WeyrCharacteristic& h1, const Target& t, const Prescription& p) {
  if (t.direction != Direction::SubpencilPrescribed)
    throw InputError("feasible_prescribed_completion expects a known subpencil");
  require_change(t.change);
  const StarPartition &r1 = h1.r_star, &s1 = h1.s_star;
  Verdict v;
  if (t.change == RankChange::Equal) {
    switch (t.component) {
      case Component::Regular: {
        v = finish({{"interww1w+1", interlaced(h1.regular, p.regular, 0, 1)}});
        if (v.feasible) {
          const Int x = h1.regular_weight() - weight_of(p.regular);
          v.companion = make(p.regular, r1, add_at_zero(s1, ones(x + 1)));
        }
        break;
      }
      case Component::ColumnStar: {
        v = finish({{"coleqconj", p.star == r1}});
        if (v.feasible) v.companion = make(h1.regular, r1, StarPartition(s1.zeroth() + 1, s1.tail()));
        break;
      }
      case Component::RowStar: {
        const Int y = p.star.tail_weight() - s1.tail_weight();
        v = finish({{"rowprecconj", is_conjugate_majorized(s1, p.star)},
                    {"eqqsmins1leqz", 0 <= y && y <= block_count(h1.regular)}});
        if (v.feasible) v.companion = make(drop_last_rows(h1.regular, y), r1, p.star);
        break;
      }
    }
    return v;
  }
  switch (t.component) {
    case Component::Regular: {
      const Int x = weight_of(p.regular) - h1.regular_weight() - 1;
      v = finish({{"interw-1w1w", interlaced(h1.regular, p.regular, -1, 0)},
                  {"eqr10", r1.zeroth() >= 1},
                  {r1.zeroth() == 1 ? "eqwr1" : "eqwr", deficit_feasible(r1, x)}});
      if (v.feasible) v.companion = make(p.regular, deficit_construct(r1, x), s1);
      break;
    }
    case Component::ColumnStar: {
      const Int x = r1.tail_weight() - p.star.tail_weight() + 1;
      v = finish({{"colprecconj", is_conjugate_majorized(p.star, r1)}, {"eqrr1", 0 <= x}});
      if (v.feasible) v.companion = make(plus_at(h1.regular, fresh_in(h1.regular), ones(x)), p.star, s1);
      break;
    }
    case Component::RowStar: {
      v = finish({{"roweqconj", p.star == s1}, {"eqr10", r1.zeroth() >= 1}});
      if (v.feasible) {
        const Int c1 = r1.tail().length();
        v.companion = make(plus_at(h1.regular, fresh_in(h1.regular), ones(c1 + 1)), lower_all(r1), s1);
      }
      break;
    }
  }
  return v;
}

WeyrCharacteristic realize_companion(const WeyrCharacteristic& known, const Target& t, const Prescription& p) {
  const bool full_known = t.direction == Direction::FullPrescribed;
  const Verdict v = full_known ? feasible_prescribed_sub(known, t, p) : feasible_prescribed_completion(known, t, p);
  if (!v.feasible) throw DomainError("prescription is not feasible");
  const WeyrCharacteristic& c = *v.companion;
  const bool ok = full_known ? check_completion_full(c, known, t.change).feasible
                             : check_completion_full(known, c, t.change).feasible;
  if (!ok) throw std::logic_error("companion does not satisfy the completion conditions");
  return c;
}

namespace {

Int sparse_entry(Rng& rng) {
  const Int v = std::uniform_int_distribution<Int>(0, 3)(rng);
  return v == 0 ? -1 : v == 1 ? 1 : 0;
}

Matrix sparse_vector(Rng& rng, size_t n) {
  Matrix v(n, 1);
  for (size_t i = 0; i < n; ++i) v(i, 0) = static_cast<long>(sparse_entry(rng));
  return v;
}

}  // namespace

std::optional<Witness> search_rank_one_witness(const Pencil& h, const WeyrCharacteristic& target, RankOneKind kind,
                                               std::uint64_t seed, Int budget) {
  if (target.rows() != static_cast<Int>(h.rows()) || target.cols() != static_cast<Int>(h.cols()))
    throw InputError("target characteristic has the wrong size");
  if (h.rows() == 0 || h.cols() == 0) return std::nullopt;
  for (Int trial = 0; trial < budget; ++trial) {
    Rng rng = stream(seed, static_cast<std::uint64_t>(trial));
    RankOneDecomposition d;
    d.kind = kind;
    const size_t fixed = kind == RankOneKind::Column ? h.rows() : h.cols();
    const size_t moving = kind == RankOneKind::Column ? h.cols() : h.rows();
    d.constant = sparse_vector(rng, fixed);
    d.poly0 = sparse_vector(rng, moving);
    d.poly1 = sparse_vector(rng, moving);
    if (d.constant.is_zero() || (d.poly0.is_zero() && d.poly1.is_zero())) continue;
    const Pencil p = d.reconstruct();
    try {
      if (weyr_characteristic(h + p) == target) return Witness{p, trial};
    } catch (const IrrationalSpectrum&) {
    }
  }
  return std::nullopt;
}

}  // namespace pencil
