#include "t2w/localmodels.hpp"

#include <sstream>

#include "t2w/arith.hpp"

namespace t2w {

using arith::floor_mod;
using arith::mul;
using arith::sub;

LensClass LensClass::normalized() const {
  if (r <= 2) return *this;
  return {r, std::min(s, r - s)};
}

std::string LensClass::to_string() const {
  std::ostringstream out;
  out << "L(" << r << "," << s << ")";
  return out.str();
}

Pair bezout_complement(Pair mn) {
  if (!is_coprime(mn)) {
    std::ostringstream msg;
    msg << "(" << mn.m << "," << mn.n << ") is not coprime; no complement exists";
    throw Error(ErrorCode::kNotCoprime, msg.str());
  }
  const auto [m, n] = mn;
  if (m == 0) return {n, 0};  // n == +-1
  // p*n == 1 (mod |m|); q follows from p.
  auto eg = arith::extended_gcd(n, m);  // x*n + y*m == 1
  const std::int64_t am = arith::abs(m);
  std::int64_t p = floor_mod(eg.x, am);
  if (p > am - p) p -= am;  // |p| minimal; on a tie (p == am - p) keep p >= 0
  const std::int64_t q = sub(mul(p, n), 1) / m;
  return {p, q};
}

namespace {

std::int64_t complement_det(Pair complement, Pair mn) {
  return arith::det2(complement.m, mn.m, complement.n, mn.n);  // p*n - m*q
}

void require_complement(Pair complement, Pair mn, std::int64_t expected) {
  if (complement_det(complement, mn) != expected) {
    std::ostringstream msg;
    msg << "(" << complement.m << "," << complement.n << ") is not a complement of (" << mn.m
        << "," << mn.n << ") with determinant " << expected;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

std::int64_t nonzero_det(Pair left, Pair right) {
  const std::int64_t r = det_pair(left, right);
  if (r == 0) {
    std::ostringstream msg;
    msg << "isotropies (" << left.m << "," << left.n << ") and (" << right.m << "," << right.n
        << ") have zero determinant";
    throw Error(ErrorCode::kIllegalDeterminant, msg.str());
  }
  return r;
}

}  // namespace

LensClass space_of_directions(Pair left, Pair right) {
  nonzero_det(left, right);
  return space_of_directions(left, right, bezout_complement(left));
}

LensClass space_of_directions(Pair left, Pair right, Pair complement) {
  const std::int64_t det = nonzero_det(left, right);
  require_complement(complement, left, 1);
  const std::int64_t r = arith::abs(det);
  const std::int64_t s = floor_mod(complement_det(complement, right), r);
  // m*s == m' and n*s == n' (mod r).
  if (floor_mod(sub(mul(left.m, s), right.m), r) != 0 ||
      floor_mod(sub(mul(left.n, s), right.n), r) != 0) {
    throw Error(ErrorCode::kInternal, "lens parameter fails its defining congruences");
  }
  return {r, s};
}

bool lens_equivalent(const LensClass& a, const LensClass& b, LensCriterion criterion) {
  if (a.r != b.r) return false;
  const std::int64_t r = a.r;
  if (r == 1) return true;
  auto sign_equal = [r](std::int64_t x, std::int64_t y) {
    return floor_mod(sub(x, y), r) == 0 || floor_mod(arith::add(x, y), r) == 0;
  };
  if (sign_equal(a.s, b.s)) return true;
  if (criterion == LensCriterion::kSign) return false;
  auto eg = arith::extended_gcd(b.s, r);
  if (eg.g != 1) return false;
  return sign_equal(a.s, floor_mod(eg.x, r));
}

std::int64_t GluingMatrix::det() const { return arith::det2(u, v, r, s); }

GluingMatrix gluing_matrix(Pair left, Pair right) {
  nonzero_det(left, right);
  return gluing_matrix(left, right, bezout_complement(left), -bezout_complement(right));
}

GluingMatrix gluing_matrix(Pair left, Pair right, Pair complement, Pair complement_right) {
  const std::int64_t r = nonzero_det(left, right);
  require_complement(complement, left, 1);
  require_complement(complement_right, right, -1);
  const auto [p, q] = complement;
  const auto [p2, q2] = complement_right;
  GluingMatrix h;
  h.r = r;
  h.s = complement_det(complement, right);
  h.u = sub(mul(q2, left.m), mul(p2, left.n));
  h.v = sub(mul(p, q2), mul(p2, q));
  if (arith::abs(h.det()) != 1) {
    throw Error(ErrorCode::kInternal, "gluing matrix is not unimodular");
  }
  return h;
}

}  // namespace t2w
