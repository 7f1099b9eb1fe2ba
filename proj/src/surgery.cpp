#include "t2w/surgery.hpp"

#include <sstream>

#include "t2w/arith.hpp"
#include "t2w/equivalence.hpp"

namespace t2w {

namespace {

std::string describe(const CircleSelection& sel) {
  std::ostringstream out;
  if (sel.kind == CircleSelection::Kind::kCircle) {
    out << "circle " << sel.component;
  } else {
    out << "cycle " << sel.component << " arc " << sel.arc;
  }
  return out.str();
}

bool has_singular_point(const FixedCycle& c) {
  for (const auto& e : c.entries) {
    if (e.f != 1 && e.f != -1) return true;
  }
  return false;
}

template <typename T>
std::vector<T> without(const std::vector<T>& items, std::size_t skip, bool active) {
  std::vector<T> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!active || i != skip) out.push_back(items[i]);
  }
  return out;
}

// Arc `ia` of `a` is cut open and joined to arc `ib` of `b`:
//   a_ia ~ b_ib, b_{ib+1}, ..., b_{ib-1}, b_ib ~ a_ia, a_{ia+1}, ..., a_{ia-1}
FixedCycle splice(const FixedCycle& a, std::size_t ia, const FixedCycle& b, std::size_t ib) {
  std::vector<Pair> pairs;
  pairs.reserve(a.size() + b.size());
  pairs.push_back(a.entries[ia].pair);
  for (std::size_t k = 1; k < b.size(); ++k) pairs.push_back(b.entries[(ib + k) % b.size()].pair);
  pairs.push_back(b.entries[ib].pair);
  for (std::size_t k = 1; k < a.size(); ++k) pairs.push_back(a.entries[(ia + k) % a.size()].pair);

  FixedCycle out = FixedCycle::from_pairs(pairs);
  const std::size_t junction_b = 0;
  const std::size_t junction_a = b.size();
  for (std::size_t w : {junction_b, junction_a}) {
    if (out.entries[w].f == 0) {
      throw Error(ErrorCode::kIllegalJunction, "spliced cycle has a zero junction determinant");
    }
  }
  return out;
}

}  // namespace

Pair selected_isotropy(const WeightSystem& w, const CircleSelection& sel) {
  if (sel.kind == CircleSelection::Kind::kCircle) {
    if (sel.component < w.circle_boundaries.size()) return w.circle_boundaries[sel.component];
  } else if (sel.component < w.fixed_cycles.size() &&
             sel.arc < w.fixed_cycles[sel.component].size()) {
    return w.fixed_cycles[sel.component].entries[sel.arc].pair;
  }
  throw Error(ErrorCode::kInvalidArgument, "selection " + describe(sel) + " does not exist");
}

bool is_simple(const WeightSystem& w) {
  require_legal(w);
  return w.genus == 0 && w.obstruction.is_zero() && w.s() == 0 && w.t() == 1 && w.k() == 0;
}

WeightSystem c_connected_sum(const WeightSystem& w1, const CircleSelection& sel1,
                             const WeightSystem& w2, const CircleSelection& sel2) {
  require_legal(w1);
  require_legal(w2);
  const Pair iso1 = selected_isotropy(w1, sel1);
  const Pair iso2 = selected_isotropy(w2, sel2);
  if (make_pair(iso1) != make_pair(iso2)) {
    std::ostringstream msg;
    msg << "selected isotropies differ: <" << iso1.m << "," << iso1.n << "> at "
        << describe(sel1) << " vs <" << iso2.m << "," << iso2.n << "> at " << describe(sel2);
    throw Error(ErrorCode::kIsotropyMismatch, msg.str());
  }
  if (w1.orientation != w2.orientation) {
    throw Error(ErrorCode::kOrientationMismatch, "summands carry opposite orientations");
  }

  using Kind = CircleSelection::Kind;
  const bool circle1 = sel1.kind == Kind::kCircle;
  const bool circle2 = sel2.kind == Kind::kCircle;

  WeightSystem out;
  out.orientation = w1.orientation;
  out.genus = arith::add(w1.genus, w2.genus);
  out.obstruction = {arith::add(w1.obstruction.b1, w2.obstruction.b1),
                     arith::add(w1.obstruction.b2, w2.obstruction.b2)};
  out.circle_boundaries = without(w1.circle_boundaries, sel1.component, circle1);
  for (Pair p : without(w2.circle_boundaries, sel2.component, circle2)) {
    out.circle_boundaries.push_back(p);
  }
  out.fixed_cycles = without(w1.fixed_cycles, sel1.component, !circle1);
  for (auto& c : without(w2.fixed_cycles, sel2.component, !circle2)) {
    out.fixed_cycles.push_back(std::move(c));
  }
  out.exceptional = w1.exceptional;
  out.exceptional.insert(out.exceptional.end(), w2.exceptional.begin(), w2.exceptional.end());

  if (circle1 && circle2) {
    out.circle_boundaries.push_back(iso1);
  } else if (circle1) {
    out.fixed_cycles.push_back(w2.fixed_cycles[sel2.component]);
  } else if (circle2) {
    out.fixed_cycles.push_back(w1.fixed_cycles[sel1.component]);
  } else {
    out.fixed_cycles.push_back(splice(w1.fixed_cycles[sel1.component], sel1.arc,
                                      w2.fixed_cycles[sel2.component], sel2.arc));
  }
  return out;
}

Decomposition decompose(const WeightSystem& w) {
  require_legal(w);
  Decomposition d;
  WeightSystem& manifold = d.manifold_part;
  manifold.obstruction = w.obstruction;
  manifold.orientation = w.orientation;
  manifold.genus = w.genus;
  manifold.circle_boundaries = w.circle_boundaries;
  manifold.exceptional = w.exceptional;
  for (const auto& c : w.fixed_cycles) {
    if (!has_singular_point(c)) {
      manifold.fixed_cycles.push_back(c);
      continue;
    }
    FixedCycle canon = canonical_cycle(c);
    const Pair first = make_pair(canon.entries.front().pair).rep();
    WeightSystem piece;
    piece.orientation = w.orientation;
    piece.fixed_cycles.push_back(std::move(canon));
    d.gluings.push_back({CircleSelection::circle(manifold.circle_boundaries.size()),
                         CircleSelection::cycle_arc(0, 0)});
    manifold.circle_boundaries.push_back(first);
    d.simple_pieces.push_back(std::move(piece));
  }
  return d;
}

WeightSystem reassemble(const Decomposition& d) {
  if (d.gluings.size() != d.simple_pieces.size()) {
    throw Error(ErrorCode::kInvalidArgument, "decomposition needs exactly one gluing per piece");
  }
  constexpr std::size_t kGone = static_cast<std::size_t>(-1);
  // Current position of each original manifold component.
  std::vector<std::size_t> circle_at(d.manifold_part.s());
  std::vector<std::size_t> cycle_at(d.manifold_part.t());
  for (std::size_t i = 0; i < circle_at.size(); ++i) circle_at[i] = i;
  for (std::size_t i = 0; i < cycle_at.size(); ++i) cycle_at[i] = i;

  WeightSystem acc = d.manifold_part;
  for (std::size_t i = 0; i < d.gluings.size(); ++i) {
    CircleSelection sel = d.gluings[i].manifold;
    auto& index = sel.kind == CircleSelection::Kind::kCircle ? circle_at : cycle_at;
    if (sel.component >= index.size() || index[sel.component] == kGone) {
      throw Error(ErrorCode::kInvalidArgument,
                  "gluing " + std::to_string(i) + " selects a missing or already used component");
    }
    const std::size_t current = index[sel.component];
    sel.component = current;
    acc = c_connected_sum(acc, sel, d.simple_pieces[i], d.gluings[i].piece);
    for (auto& pos : index) {
      if (pos == kGone) continue;
      if (pos == current) {
        pos = kGone;
      } else if (pos > current) {
        --pos;
      }
    }
  }
  return acc;
}

}  // namespace t2w
