#pragma once

// C-equivariant connected sums of weight systems and the splitting of a
// system into a manifold part plus simple pieces.

#include <cstddef>
#include <vector>

#include "t2w/core.hpp"

namespace t2w {

/// Selects a circular orbit: either a pure-C boundary component, or the arc
/// `arc` (carrying entries[arc].pair) of fixed cycle `component`.
struct CircleSelection {
  enum class Kind { kCircle, kArc };

  Kind kind = Kind::kCircle;
  std::size_t component = 0;
  std::size_t arc = 0;

  static CircleSelection circle(std::size_t index) { return {Kind::kCircle, index, 0}; }
  static CircleSelection cycle_arc(std::size_t cycle, std::size_t arc) {
    return {Kind::kArc, cycle, arc};
  }

  bool operator==(const CircleSelection&) const = default;
};

/// Isotropy representative at the selection. Throws Error(kInvalidArgument)
/// if the selection does not exist in w.
Pair selected_isotropy(const WeightSystem& w, const CircleSelection& sel);

/// Disk orbit space, no exceptional orbits, and a single boundary component
/// carrying fixed points. Throws Error(kIllegalWeightSystem).
bool is_simple(const WeightSystem& w);

/// Glues w1 and w2 along the boundaries of tubes around the selected circular
/// orbits. Unselected components keep their order (w1's first, then w2's);
/// the merged component is appended last to its list.
///
/// Throws Error(kIsotropyMismatch), Error(kOrientationMismatch),
/// Error(kIllegalJunction), Error(kIllegalWeightSystem).
WeightSystem c_connected_sum(const WeightSystem& w1, const CircleSelection& sel1,
                             const WeightSystem& w2, const CircleSelection& sel2);

struct Gluing {
  CircleSelection manifold;
  CircleSelection piece;

  bool operator==(const Gluing&) const = default;
};

/// gluings[i] attaches simple_pieces[i] to manifold_part.
struct Decomposition {
  WeightSystem manifold_part;
  std::vector<WeightSystem> simple_pieces;
  std::vector<Gluing> gluings;

  bool operator==(const Decomposition&) const = default;
};

/// Every fixed cycle containing a singular fixed point (|f| != 1) is cut off
/// as a simple piece and replaced in the manifold part by a pure-C circle
/// carrying the first pair of its canonical presentation.
Decomposition decompose(const WeightSystem& w);

/// Folds c_connected_sum over the gluings. Selections into the manifold part
/// refer to its original component indices.
WeightSystem reassemble(const Decomposition& d);

}  // namespace t2w
