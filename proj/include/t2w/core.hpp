#pragma once

// Domain types for the weight system of an effective T^2-action on a closed
// orientable Alexandrov 4-space, together with legality validation and the
// orbit-type taxonomy of fixed points.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "t2w/error.hpp"

namespace t2w {

/// Signed integer pair (m, n). Used for stored representatives of circle
/// subgroups G(m, n); no coprimality or sign normalization is implied.
struct Pair {
  std::int64_t m = 0;
  std::int64_t n = 0;

  Pair operator-() const;
  auto operator<=>(const Pair&) const = default;
};

/// The circle subgroup G(m, n) = {(phi, theta) | m*phi + n*theta = 0}.
/// Always coprime, with canonical sign: m > 0, or (m, n) == (0, 1).
class IsotropyPair {
 public:
  Pair rep() const { return rep_; }
  std::int64_t m() const { return rep_.m; }
  std::int64_t n() const { return rep_.n; }

  auto operator<=>(const IsotropyPair&) const = default;

 private:
  friend IsotropyPair make_pair(std::int64_t m, std::int64_t n);
  explicit IsotropyPair(Pair rep) : rep_(rep) {}
  Pair rep_;
};

/// Throws Error(kNotCoprime) when gcd(|m|, |n|) != 1.
IsotropyPair make_pair(std::int64_t m, std::int64_t n);
inline IsotropyPair make_pair(Pair p) { return make_pair(p.m, p.n); }

bool is_coprime(Pair p);

/// a.m * b.n - b.m * a.n, checked.
std::int64_t det_pair(Pair a, Pair b);

/// Oriented Seifert invariant (alpha; gamma1, gamma2) of an exceptional orbit.
struct FiniteIsotropyInvariant {
  std::int64_t alpha = 2;
  std::int64_t gamma1 = 0;
  std::int64_t gamma2 = 1;

  auto operator<=>(const FiniteIsotropyInvariant&) const = default;
};

/// One arc of a fixed-point boundary component: the isotropy representative
/// of the arc and the determinant f at the fixed point ending it.
struct CycleEntry {
  Pair pair;
  std::int64_t f = 0;

  bool operator==(const CycleEntry&) const = default;
};

/// Cyclic sequence ((a_1,b_1), f_1, ..., (a_r,b_r), f_r) of a boundary
/// component of the orbit space containing fixed points. Sign representatives
/// are stored verbatim since f depends on them.
struct FixedCycle {
  std::vector<CycleEntry> entries;

  std::size_t size() const { return entries.size(); }

  /// Builds the cycle with every f recomputed from the given representatives.
  static FixedCycle from_pairs(std::span<const Pair> pairs);

  bool operator==(const FixedCycle&) const = default;
};

enum class Orientation : int { kPositive = 1, kNegative = -1 };

inline Orientation flip(Orientation o) {
  return o == Orientation::kPositive ? Orientation::kNegative : Orientation::kPositive;
}
inline int sign(Orientation o) { return static_cast<int>(o); }

struct Obstruction {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;

  bool is_zero() const { return b1 == 0 && b2 == 0; }
  auto operator<=>(const Obstruction&) const = default;
};

/// The invariant tuple
///   {(b1,b2); eps; g; {<p_i,q_i>}; {((a,b), f)}; {(alpha; gamma1, gamma2)}}.
/// Plain data: legality is established by validate(), not by construction.
struct WeightSystem {
  Obstruction obstruction;
  Orientation orientation = Orientation::kPositive;
  std::int64_t genus = 0;
  std::vector<Pair> circle_boundaries;
  std::vector<FixedCycle> fixed_cycles;
  std::vector<FiniteIsotropyInvariant> exceptional;

  std::size_t s() const { return circle_boundaries.size(); }
  std::size_t t() const { return fixed_cycles.size(); }
  std::size_t m() const { return s() + t(); }
  std::size_t k() const { return exceptional.size(); }

  bool operator==(const WeightSystem&) const = default;
};

enum class OrbitType { kPrincipal, kExceptional, kCircle, kRegularFixed, kSingularFixed };

const char* orbit_type_name(OrbitType type);

/// RF when |f| == 1, SF otherwise. Throws Error(kIllegalDeterminant) on f == 0.
OrbitType classify_fixed_point(std::int64_t f);

enum class Rule {
  kCoprimePair,
  kDeterminantMismatch,
  kZeroDeterminant,
  kCycleLength,
  kTwoPointSign,
  kObstructionClosedOnly,
  kGenusNonnegative,
  kSeifertInvariant,
  kArithmeticOverflow,
};

const char* rule_name(Rule rule);

struct Violation {
  Rule rule;
  std::string location;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool legal() const { return violations.empty(); }
  bool has(Rule rule) const;
  std::string to_string() const;

  bool operator==(const ValidationReport&) const = default;
};

ValidationReport validate(const WeightSystem& w);

/// Throws Error(kIllegalWeightSystem) carrying the report text if w is not legal.
void require_legal(const WeightSystem& w);

}  // namespace t2w
