#include "t2w/equivalence.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "t2w/arith.hpp"
#include "t2w/localmodels.hpp"

namespace t2w {

using arith::add;
using arith::mul;
using arith::neg;

std::int64_t Matrix2::det() const { return arith::det2(a, b, c, d); }

Pair Matrix2::apply(Pair p) const {
  return {add(mul(a, p.m), mul(b, p.n)), add(mul(c, p.m), mul(d, p.n))};
}

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
  return {add(mul(a, rhs.a), mul(b, rhs.c)), add(mul(a, rhs.b), mul(b, rhs.d)),
          add(mul(c, rhs.a), mul(d, rhs.c)), add(mul(c, rhs.b), mul(d, rhs.d))};
}

Matrix2 Matrix2::inverse() const {
  const std::int64_t dt = det();
  if (dt != 1 && dt != -1) throw Error(ErrorCode::kNotUnimodular, "matrix is not unimodular");
  return {mul(dt, d), mul(dt, neg(b)), mul(dt, neg(c)), mul(dt, a)};
}

namespace {

using EntryKey = std::array<std::int64_t, 4>;

EntryKey entry_key(const CycleEntry& e) { return {arith::abs(e.f), e.f, e.pair.m, e.pair.n}; }

std::int64_t sgn(std::int64_t x) { return x < 0 ? -1 : 1; }

// Greedy minimal presentation of the rotation starting at `start`.
void minimal_rotation(const FixedCycle& c, std::size_t start, std::vector<CycleEntry>& out) {
  const std::size_t r = c.size();
  out.resize(r);
  auto at = [&](std::size_t w) -> const CycleEntry& { return c.entries[(start + w) % r]; };

  const Pair first = at(0).pair;
  std::int64_t sigma = (first.m > 0 || (first.m == 0 && first.n > 0)) ? -1 : 1;
  const std::int64_t sigma0 = sigma;
  for (std::size_t w = 0; w < r; ++w) {
    const CycleEntry& e = at(w);
    out[w].pair = sigma < 0 ? -e.pair : e.pair;
    const std::int64_t next_sigma = (w + 1 < r) ? -sgn(e.f) * sigma : sigma0;
    out[w].f = (sigma * next_sigma < 0) ? neg(e.f) : e.f;
    sigma = next_sigma;
  }
}

bool entries_less(const std::vector<CycleEntry>& x, const std::vector<CycleEntry>& y) {
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(),
      [](const CycleEntry& a, const CycleEntry& b) { return entry_key(a) < entry_key(b); });
}

Pair canonical_sign(Pair p) { return (p.m < 0 || (p.m == 0 && p.n < 0)) ? -p : p; }

void append_cycle_key(const FixedCycle& c, std::vector<std::int64_t>& key) {
  key.push_back(static_cast<std::int64_t>(c.size()));
  for (const auto& e : c.entries) {
    const EntryKey k = entry_key(e);
    key.insert(key.end(), k.begin(), k.end());
  }
}

CanonicalForm strict_canonical(const WeightSystem& w) {
  CanonicalForm form;
  WeightSystem& out = form.system;
  out.obstruction = w.obstruction;
  out.orientation = w.orientation;
  out.genus = w.genus;
  out.circle_boundaries.reserve(w.s());
  for (Pair p : w.circle_boundaries) out.circle_boundaries.push_back(canonical_sign(p));
  std::sort(out.circle_boundaries.begin(), out.circle_boundaries.end());
  out.fixed_cycles.reserve(w.t());
  for (const auto& c : w.fixed_cycles) out.fixed_cycles.push_back(canonical_cycle(c));
  std::sort(out.fixed_cycles.begin(), out.fixed_cycles.end(),
            [](const FixedCycle& a, const FixedCycle& b) {
              return entries_less(a.entries, b.entries);
            });
  out.exceptional = w.exceptional;
  std::sort(out.exceptional.begin(), out.exceptional.end());

  auto& key = form.key;
  key.reserve(8 + 2 * out.s() + 4 * 4 * out.t() + 3 * out.k());
  key.push_back(sign(out.orientation));
  key.push_back(out.genus);
  key.push_back(out.obstruction.b1);
  key.push_back(out.obstruction.b2);
  key.push_back(static_cast<std::int64_t>(out.s()));
  for (Pair p : out.circle_boundaries) {
    key.push_back(p.m);
    key.push_back(p.n);
  }
  key.push_back(static_cast<std::int64_t>(out.t()));
  for (const auto& c : out.fixed_cycles) append_cycle_key(c, key);
  key.push_back(static_cast<std::int64_t>(out.k()));
  for (const auto& e : out.exceptional) {
    key.push_back(e.alpha);
    key.push_back(e.gamma1);
    key.push_back(e.gamma2);
  }
  return form;
}

// Basis changes sending some anchor direction to (1,0), followed by the
// stabilizer element [[1,t],[0,delta]] whose shear t reduces the first
// coordinate of another pair modulo its second. The set is defined from the
// pairs themselves, so candidates(B.W) = candidates(W).B^{-1}, which makes
// the minimum over it a GL(2,Z) invariant.
std::set<Matrix2> weak_candidates(const WeightSystem& w) {
  std::vector<Pair> pairs;
  for (Pair p : w.circle_boundaries) pairs.push_back(canonical_sign(p));
  for (const auto& c : w.fixed_cycles) {
    for (const auto& e : c.entries) pairs.push_back(canonical_sign(e.pair));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<Pair> anchors = pairs;
  if (!w.obstruction.is_zero()) {
    const std::int64_t g = arith::gcd(w.obstruction.b1, w.obstruction.b2);
    anchors.push_back(canonical_sign({w.obstruction.b1 / g, w.obstruction.b2 / g}));
  }

  std::set<Matrix2> out;
  if (anchors.empty()) {
    out.insert(Matrix2::identity());
    return out;
  }
  for (Pair anchor : anchors) {
    for (Pair dir : {anchor, -anchor}) {
      const Pair comp = bezout_complement(dir);  // comp.m*n - comp.n*m == 1
      const Matrix2 to_axis{neg(comp.n), comp.m, neg(dir.n), dir.m};
      std::vector<std::int64_t> shears;
      for (Pair other : pairs) {
        Pair moved = to_axis.apply(other);
        if (moved.n == 0) continue;
        if (moved.n < 0) moved = -moved;
        // t with moved.m + t*moved.n in [0, y), and the one landing in
        // (-y, 0]; a determinant -1 change of basis swaps the two windows.
        const std::int64_t y = moved.n;
        const std::int64_t reduced = arith::floor_mod(moved.m, y);
        const std::int64_t t = arith::sub(reduced, moved.m) / y;
        shears.push_back(t);
        if (reduced != 0) shears.push_back(t - 1);
      }
      if (shears.empty()) shears.push_back(0);
      for (std::int64_t t : shears) {
        for (std::int64_t delta : {1, -1}) {
          out.insert(Matrix2{1, t, 0, delta} * to_axis);
        }
      }
    }
  }
  return out;
}

struct WeakResult {
  CanonicalForm form;
  Matrix2 basis_change;
  bool reversed = false;
};

WeakResult weak_canonical(const WeightSystem& w) {
  std::optional<WeakResult> best;
  for (bool reversed : {false, true}) {
    const WeightSystem base = reversed ? reverse_orientation(w) : w;
    for (const Matrix2& a : weak_candidates(base)) {
      CanonicalForm form = strict_canonical(apply_basis_change(base, a));
      if (!best || form < best->form) best = WeakResult{std::move(form), a, reversed};
    }
  }
  return std::move(*best);
}

}  // namespace

FixedCycle canonical_cycle(const FixedCycle& c) {
  if (c.entries.empty()) return c;
  FixedCycle best;
  std::vector<CycleEntry> candidate;
  for (std::size_t start = 0; start < c.size(); ++start) {
    minimal_rotation(c, start, candidate);
    if (start == 0 || entries_less(candidate, best.entries)) best.entries.swap(candidate);
  }
  return best;
}

CanonicalForm canonical_form(const WeightSystem& w, EquivalenceMode mode) {
  require_legal(w);
  if (mode == EquivalenceMode::kStrict) return strict_canonical(w);
  return weak_canonical(w).form;
}

bool is_isomorphic(const WeightSystem& w1, const WeightSystem& w2, EquivalenceMode mode) {
  return canonical_form(w1, mode) == canonical_form(w2, mode);
}

std::optional<Witness> find_isomorphism(const WeightSystem& w1, const WeightSystem& w2,
                                        EquivalenceMode mode) {
  require_legal(w1);
  require_legal(w2);
  if (mode == EquivalenceMode::kStrict) {
    if (strict_canonical(w1) == strict_canonical(w2)) return Witness{};
    return std::nullopt;
  }
  const WeakResult r1 = weak_canonical(w1);
  const WeakResult r2 = weak_canonical(w2);
  if (r1.form != r2.form) return std::nullopt;
  // A1.R1(w1) ~ A2.R2(w2), and reversal commutes with basis changes.
  return Witness{r2.basis_change.inverse() * r1.basis_change, r1.reversed != r2.reversed};
}

WeightSystem apply_basis_change(const WeightSystem& w, const Matrix2& a) {
  const std::int64_t dt = a.det();
  if (dt != 1 && dt != -1) {
    throw Error(ErrorCode::kNotUnimodular, "basis change must have determinant +-1");
  }
  WeightSystem out = w;
  const Pair b = a.apply({w.obstruction.b1, w.obstruction.b2});
  out.obstruction = {b.m, b.n};
  for (Pair& p : out.circle_boundaries) p = a.apply(p);
  for (auto& c : out.fixed_cycles) {
    for (auto& e : c.entries) {
      e.pair = a.apply(e.pair);
      e.f = mul(dt, e.f);
    }
  }
  return out;
}

FiniteIsotropyInvariant reverse_seifert(const FiniteIsotropyInvariant& e) {
  return {e.alpha, arith::floor_mod(arith::sub(e.alpha, e.gamma1), e.alpha),
          arith::floor_mod(arith::sub(e.alpha, e.gamma2), e.alpha)};
}

WeightSystem reverse_orientation(const WeightSystem& w) {
  WeightSystem out = w;
  out.orientation = flip(w.orientation);
  out.obstruction = {neg(w.obstruction.b1), neg(w.obstruction.b2)};
  for (auto& c : out.fixed_cycles) {
    const std::size_t r = c.size();
    // Reversed order: pair_w -> pair_{r-1-w}, f_w -> -f_{r-2-w}.
    FixedCycle rev;
    rev.entries.resize(r);
    for (std::size_t w2 = 0; w2 < r; ++w2) {
      rev.entries[w2].pair = c.entries[r - 1 - w2].pair;
      rev.entries[w2].f = neg(c.entries[(2 * r - 2 - w2) % r].f);
    }
    c = std::move(rev);
  }
  for (auto& e : out.exceptional) e = reverse_seifert(e);
  return out;
}

}  // namespace t2w
