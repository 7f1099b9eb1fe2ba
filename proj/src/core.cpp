#include "t2w/core.hpp"

#include <sstream>

#include "t2w/arith.hpp"

namespace t2w {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kIllegalDeterminant: return "IllegalDeterminant";
    case ErrorCode::kIllegalWeightSystem: return "IllegalWeightSystem";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kIsotropyMismatch: return "IsotropyMismatch";
    case ErrorCode::kOrientationMismatch: return "OrientationMismatch";
    case ErrorCode::kIllegalJunction: return "IllegalJunction";
    case ErrorCode::kNoSolutionInBound: return "NoSolutionInBound";
    case ErrorCode::kIllegalParameters: return "IllegalParameters";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Pair Pair::operator-() const { return {arith::neg(m), arith::neg(n)}; }

bool is_coprime(Pair p) { return arith::ugcd(p.m, p.n) == 1; }

IsotropyPair make_pair(std::int64_t m, std::int64_t n) {
  Pair p{m, n};
  if (!is_coprime(p)) {
    std::ostringstream msg;
    msg << "isotropy pair (" << m << "," << n << ") is not coprime";
    throw Error(ErrorCode::kNotCoprime, msg.str());
  }
  if (p.m < 0 || (p.m == 0 && p.n < 0)) p = -p;
  return IsotropyPair(p);
}

std::int64_t det_pair(Pair a, Pair b) { return arith::det2(a.m, b.m, a.n, b.n); }

FixedCycle FixedCycle::from_pairs(std::span<const Pair> pairs) {
  FixedCycle cycle;
  cycle.entries.reserve(pairs.size());
  for (std::size_t w = 0; w < pairs.size(); ++w) {
    cycle.entries.push_back({pairs[w], det_pair(pairs[w], pairs[(w + 1) % pairs.size()])});
  }
  return cycle;
}

const char* orbit_type_name(OrbitType type) {
  switch (type) {
    case OrbitType::kPrincipal: return "P";
    case OrbitType::kExceptional: return "E";
    case OrbitType::kCircle: return "C";
    case OrbitType::kRegularFixed: return "RF";
    case OrbitType::kSingularFixed: return "SF";
  }
  return "?";
}

OrbitType classify_fixed_point(std::int64_t f) {
  if (f == 0) {
    throw Error(ErrorCode::kIllegalDeterminant,
                "adjacent isotropy determinant is zero (not legally weighted)");
  }
  return (f == 1 || f == -1) ? OrbitType::kRegularFixed : OrbitType::kSingularFixed;
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kCoprimePair: return "coprime-pair";
    case Rule::kDeterminantMismatch: return "determinant-mismatch";
    case Rule::kZeroDeterminant: return "legally-weighted";
    case Rule::kCycleLength: return "cycle-length";
    case Rule::kTwoPointSign: return "r=2 rule";
    case Rule::kObstructionClosedOnly: return "obstruction-closed-only";
    case Rule::kGenusNonnegative: return "genus-nonnegative";
    case Rule::kSeifertInvariant: return "seifert-invariant";
    case Rule::kArithmeticOverflow: return "arithmetic-overflow";
  }
  return "?";
}

bool ValidationReport::has(Rule rule) const {
  for (const auto& v : violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

std::string ValidationReport::to_string() const {
  if (legal()) return "legal\n";
  std::ostringstream out;
  out << "illegal: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) {
    out << "  [" << rule_name(v.rule) << "] " << v.location << ": " << v.detail << "\n";
  }
  return out.str();
}

namespace {

std::string pair_text(Pair p) {
  std::ostringstream out;
  out << "(" << p.m << "," << p.n << ")";
  return out.str();
}

class Validator {
 public:
  explicit Validator(const WeightSystem& w) : w_(w) {}

  ValidationReport run() {
    if (w_.genus < 0) {
      add(Rule::kGenusNonnegative, "genus", "genus " + std::to_string(w_.genus) + " is negative");
    }
    if (!w_.obstruction.is_zero() && (w_.s() > 0 || w_.t() > 0)) {
      add(Rule::kObstructionClosedOnly, "obstruction",
          "obstruction (" + std::to_string(w_.obstruction.b1) + "," +
              std::to_string(w_.obstruction.b2) +
              ") must be (0,0) when the orbit space has boundary");
    }
    for (std::size_t i = 0; i < w_.circle_boundaries.size(); ++i) {
      check_pair(w_.circle_boundaries[i], "circle_boundaries[" + std::to_string(i) + "]");
    }
    for (std::size_t l = 0; l < w_.fixed_cycles.size(); ++l) {
      check_cycle(w_.fixed_cycles[l], "fixed_cycles[" + std::to_string(l) + "]");
    }
    for (std::size_t j = 0; j < w_.exceptional.size(); ++j) {
      check_seifert(w_.exceptional[j], "exceptional[" + std::to_string(j) + "]");
    }
    return std::move(report_);
  }

 private:
  void add(Rule rule, std::string location, std::string detail) {
    report_.violations.push_back({rule, std::move(location), std::move(detail)});
  }

  void check_pair(Pair p, const std::string& where) {
    if (!is_coprime(p)) {
      add(Rule::kCoprimePair, where, "pair " + pair_text(p) + " is not coprime");
    }
  }

  void check_cycle(const FixedCycle& c, const std::string& where) {
    const std::size_t r = c.size();
    if (r < 2) {
      add(Rule::kCycleLength, where,
          "a boundary component with fixed points needs at least 2 of them, got " +
              std::to_string(r));
    }
    for (std::size_t w = 0; w < r; ++w) {
      check_pair(c.entries[w].pair, where + ".entries[" + std::to_string(w) + "].pair");
    }
    for (std::size_t w = 0; w < r; ++w) {
      const std::string at = where + ".entries[" + std::to_string(w) + "].f";
      const auto& e = c.entries[w];
      const Pair next = c.entries[(w + 1) % r].pair;
      if (e.f == 0) {
        add(Rule::kZeroDeterminant, at, "f is zero; adjacent weights must have nonzero determinant");
      }
      try {
        std::int64_t d = det_pair(e.pair, next);
        if (d == 0 && e.f != 0) {
          add(Rule::kZeroDeterminant, at,
              "adjacent weights " + pair_text(e.pair) + "," + pair_text(next) +
                  " have zero determinant");
        }
        if (d != e.f) {
          add(Rule::kDeterminantMismatch, at,
              "stored f = " + std::to_string(e.f) + " but det" + pair_text(e.pair) +
                  pair_text(next) + " = " + std::to_string(d));
        }
      } catch (const Error&) {
        add(Rule::kArithmeticOverflow, at, "determinant exceeds the 64-bit range");
      }
    }
    if (r == 2 && c.entries[0].f != -c.entries[1].f) {
      add(Rule::kTwoPointSign, where,
          "r=2 rule: a boundary component with two fixed points requires f_1 = -f_2, got f = (" +
              std::to_string(c.entries[0].f) + "," + std::to_string(c.entries[1].f) + ")");
    }
  }

  void check_seifert(const FiniteIsotropyInvariant& e, const std::string& where) {
    std::ostringstream text;
    text << "(" << e.alpha << ";" << e.gamma1 << "," << e.gamma2 << ")";
    if (e.alpha < 2) {
      add(Rule::kSeifertInvariant, where, "alpha must be >= 2 in " + text.str());
      return;
    }
    if (e.gamma1 < 0 || e.gamma1 >= e.alpha || e.gamma2 < 0 || e.gamma2 >= e.alpha) {
      add(Rule::kSeifertInvariant, where, "gammas must lie in [0, alpha) in " + text.str());
    }
    if (arith::ugcd(arith::gcd(e.alpha, e.gamma1), e.gamma2) != 1) {
      add(Rule::kSeifertInvariant, where, "gcd(alpha, gamma1, gamma2) must be 1 in " + text.str());
    }
  }

  const WeightSystem& w_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const WeightSystem& w) { return Validator(w).run(); }

void require_legal(const WeightSystem& w) {
  ValidationReport report = validate(w);
  if (!report.legal()) throw Error(ErrorCode::kIllegalWeightSystem, report.to_string());
}

}  // namespace t2w
