#pragma once

// Canonical forms of weight systems and the isomorphism decision.
//
// STRICT mode quotients by the presentation freedom of the tuple itself:
// order of the multisets, starting point of each fixed cycle, and the sign
// representative of every isotropy pair. WEAK mode additionally quotients by
// reparametrizations of T^2 (GL(2,Z) acting on all pairs at once) and by
// orientation reversal.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "t2w/core.hpp"

namespace t2w {

enum class EquivalenceMode { kStrict, kWeak };

/// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors.
struct Matrix2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  static Matrix2 identity() { return {}; }

  std::int64_t det() const;
  Pair apply(Pair p) const;
  Matrix2 operator*(const Matrix2& rhs) const;
  /// Inverse of a unimodular matrix; Error(kNotUnimodular) otherwise.
  Matrix2 inverse() const;

  auto operator<=>(const Matrix2&) const = default;
};

/// Lexicographically minimal presentation of a cycle over all rotations and
/// all per-entry sign flips; entries compare by (|f|, f, m, n).
///
/// Flipping entry w negates its pair and f_{w-1}, f_w. Per rotation the
/// minimum is reached greedily (make every f but the last negative, and the
/// first pair lexicographically negative), so the search costs O(r^2)
/// instead of r * 2^r. prod sign(f_w) is invariant and is a cheap pre-filter
/// when comparing two cycles.
FixedCycle canonical_cycle(const FixedCycle& c);

struct CanonicalForm {
  /// Representative system in canonical presentation.
  WeightSystem system;
  /// Injective integer serialization; the total order on canonical forms.
  std::vector<std::int64_t> key;

  bool operator==(const CanonicalForm& rhs) const { return key == rhs.key; }
  auto operator<=>(const CanonicalForm& rhs) const { return key <=> rhs.key; }
};

/// Throws Error(kIllegalWeightSystem) when w is not legal.
CanonicalForm canonical_form(const WeightSystem& w, EquivalenceMode mode);

/// A WEAK isomorphism: w2 is STRICT-isomorphic to
/// apply_basis_change(reverse ? reverse_orientation(w1) : w1, basis_change).
struct Witness {
  Matrix2 basis_change;
  bool reverse = false;
};

bool is_isomorphic(const WeightSystem& w1, const WeightSystem& w2, EquivalenceMode mode);

/// Returns a witness when the systems are isomorphic in the given mode (for
/// STRICT the witness is always the identity without reversal).
std::optional<Witness> find_isomorphism(const WeightSystem& w1, const WeightSystem& w2,
                                        EquivalenceMode mode);

/// Pairs (m,n) -> A(m,n), every f -> det(A) f, obstruction -> A(b1,b2).
/// Seifert triples are carried verbatim. Throws Error(kNotUnimodular).
WeightSystem apply_basis_change(const WeightSystem& w, const Matrix2& a);

/// eps -> -eps, cycles reversed (f -> -f), gamma -> (alpha - gamma) mod alpha,
/// obstruction negated.
WeightSystem reverse_orientation(const WeightSystem& w);

/// The Seifert-triple convention under orientation reversal.
FiniteIsotropyInvariant reverse_seifert(const FiniteIsotropyInvariant& e);

}  // namespace t2w
