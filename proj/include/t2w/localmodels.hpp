#pragma once

// Local models at fixed points: the lens space L(r, s) arising as the space of
// directions, lens equivalence, and the boundary gluing matrix of the two
// solid tori whose union is that lens space.

#include <compare>
#include <cstdint>
#include <string>

#include "t2w/core.hpp"

namespace t2w {

/// L(r, s) with r >= 1 and 0 <= s < r; L(1, 0) is the 3-sphere.
struct LensClass {
  std::int64_t r = 1;
  std::int64_t s = 0;

  /// Representative of {s, -s} mod r, i.e. min(s, r - s).
  LensClass normalized() const;
  std::string to_string() const;

  auto operator<=>(const LensClass&) const = default;
};

/// Returns (p, q) with p*n - q*m == 1 for the coprime pair (m, n). Among all
/// solutions p has minimal |p|, ties broken toward p >= 0; when m == 0 the
/// free coordinate q is 0. Throws Error(kNotCoprime).
Pair bezout_complement(Pair mn);

/// Space of directions at the fixed point between arcs with isotropy `left`
/// and `right`, using the deterministic complement of `left`.
/// Throws Error(kIllegalDeterminant) when det(left, right) == 0.
LensClass space_of_directions(Pair left, Pair right);

/// Same construction with an explicit complement (p, q) of `left`, which must
/// satisfy p*n - q*m == 1 (Error(kInvalidArgument) otherwise).
LensClass space_of_directions(Pair left, Pair right, Pair complement);

enum class LensCriterion {
  /// s1 == +-s2 (mod r).
  kSign,
  /// s1 == +-s2^{+-1} (mod r), the full homeomorphism classification.
  kSignOrInverse,
};

bool lens_equivalent(const LensClass& a, const LensClass& b,
                     LensCriterion criterion = LensCriterion::kSign);

/// The boundary torus map (alpha, beta) -> (u*alpha + v*beta, r*alpha + s*beta).
struct GluingMatrix {
  std::int64_t u = 1;
  std::int64_t v = 0;
  std::int64_t r = 0;
  std::int64_t s = 1;

  std::int64_t det() const;
  auto operator<=>(const GluingMatrix&) const = default;
};

/// Gluing of the solid torus acted on through (p, q; m, n), with
/// p*n - q*m == 1, to the one acted on through (p', q'; m', n'), with
/// p'*n' - q'*m' == -1.
///
///   r = m*n' - m'*n      s = p*n' - q*m'
///   u = q'*m - p'*n      v = p*q' - p'*q
///
/// The sign of u is the one making u*s - v*r == 1 for every admissible choice
/// of complements (with u = p'*n - q'*m one gets u*s + v*r == -1 instead).
GluingMatrix gluing_matrix(Pair left, Pair right);
GluingMatrix gluing_matrix(Pair left, Pair right, Pair complement, Pair complement_right);

}  // namespace t2w
