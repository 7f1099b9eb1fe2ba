#pragma once

// Example families (suspensions of lens spaces, weighted projective planes)
// and a bounded enumerator of legal weight systems.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "t2w/core.hpp"

namespace t2w {

/// Disk orbit space with two fixed points: cycle [(p,q), r, (m,n), -r] where
/// r = det(first, second). Throws Error(kIllegalDeterminant) when r == 0.
WeightSystem suspension_of_lens(const IsotropyPair& first, const IsotropyPair& second,
                                Orientation orientation = Orientation::kPositive);

/// Disk orbit space with the three-point cycle
///   [(m1,n1), r2, (m2,n2), -r3, (m3,n3), r1]
/// seeded with (m1,n1) = (1,0). The pairs are found by scanning m2 by
/// increasing |m2| (positive first) up to 4*max(r1,r2,r3).
///
/// Throws Error(kIllegalParameters) unless r1, r2, r3 are positive and
/// pairwise coprime, Error(kNoSolutionInBound) if the scan is exhausted.
WeightSystem weighted_projective(std::int64_t r1, std::int64_t r2, std::int64_t r3);

struct EnumerationBounds {
  std::int64_t max_genus = 0;
  /// Bound on boundary components s + t (pure-C circles and fixed cycles).
  std::int64_t max_cycles = 1;
  std::int64_t max_cycle_length = 3;
  /// Bound on |entry| of every isotropy pair, on every |f|, and on |b1|, |b2|.
  std::int64_t max_weight_entry = 2;
  std::int64_t max_exceptional = 0;
  std::int64_t max_alpha = 2;

  /// Throws Error(kInvalidArgument) on negative fields, or on
  /// max_cycle_length < 2 while cycles are allowed.
  void check() const;
};

/// Streams every legal weight system within the bounds exactly once up to
/// STRICT canonical form, in a deterministic order. Each yielded system is in
/// canonical presentation.
class Enumerator {
 public:
  explicit Enumerator(const EnumerationBounds& bounds);

  std::optional<WeightSystem> next();

  /// Number of distinct boundary components (circles and cycle classes).
  std::size_t component_count() const { return circles_.size() + cycles_.size(); }

 private:
  bool advance_components();
  bool advance_exceptional_multiset();

  EnumerationBounds bounds_;
  std::vector<Pair> circles_;
  std::vector<FixedCycle> cycles_;
  std::vector<FiniteIsotropyInvariant> triples_;

  // Odometer state.
  std::vector<std::size_t> components_;  // nondecreasing indices
  std::int64_t genus_ = 0;
  int orientation_ = 0;  // 0 -> +1, 1 -> -1
  std::int64_t b1_ = 0;
  std::int64_t b2_ = 0;
  std::vector<std::size_t> exceptional_;  // nondecreasing indices
  bool started_ = false;
  bool done_ = false;
};

/// Convenience: drains an Enumerator.
std::vector<WeightSystem> enumerate_legal(const EnumerationBounds& bounds);

}  // namespace t2w
