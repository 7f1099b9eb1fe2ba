#include "t2w/constructors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "t2w/arith.hpp"
#include "t2w/equivalence.hpp"

namespace t2w {

WeightSystem suspension_of_lens(const IsotropyPair& first, const IsotropyPair& second,
                                Orientation orientation) {
  const std::int64_t r = det_pair(first.rep(), second.rep());
  if (r == 0) {
    throw Error(ErrorCode::kIllegalDeterminant, "suspension needs isotropies with det != 0");
  }
  WeightSystem w;
  w.orientation = orientation;
  w.fixed_cycles.push_back(
      FixedCycle{{{first.rep(), r}, {second.rep(), arith::neg(r)}}});
  return w;
}

WeightSystem weighted_projective(std::int64_t r1, std::int64_t r2, std::int64_t r3) {
  if (r1 <= 0 || r2 <= 0 || r3 <= 0) {
    throw Error(ErrorCode::kIllegalParameters, "weights must be positive");
  }
  if (arith::gcd(r1, r2) != 1 || arith::gcd(r2, r3) != 1 || arith::gcd(r1, r3) != 1) {
    std::ostringstream msg;
    msg << "weights (" << r1 << "," << r2 << "," << r3 << ") are not pairwise coprime";
    throw Error(ErrorCode::kIllegalParameters, msg.str());
  }
  const std::int64_t bound = arith::mul(4, std::max({r1, r2, r3}));
  // (m1,n1) = (1,0) forces n2 = r2 and n3 = -r1; the middle equation
  // m2*n3 - m3*n2 = -r3 then gives m3 = (r3 - m2*r1) / r2.
  const Pair p1{1, 0};
  for (std::int64_t mag = 0; mag <= bound; ++mag) {
    for (std::int64_t m2 : {mag, -mag}) {
      if (mag == 0 && m2 < 0) continue;
      const std::int64_t num = arith::sub(r3, arith::mul(m2, r1));
      if (num % r2 != 0) continue;
      const Pair p2{m2, r2};
      const Pair p3{num / r2, arith::neg(r1)};
      if (arith::abs(p3.m) > bound || !is_coprime(p2) || !is_coprime(p3)) continue;
      if (det_pair(p1, p2) != r2 || det_pair(p2, p3) != -r3 || det_pair(p3, p1) != r1) {
        throw Error(ErrorCode::kInternal, "weighted projective solution fails its equations");
      }
      WeightSystem w;
      w.fixed_cycles.push_back(FixedCycle{{{p1, r2}, {p2, -r3}, {p3, r1}}});
      return w;
    }
  }
  std::ostringstream msg;
  msg << "no isotropy pairs with entries bounded by " << bound << " for weights (" << r1 << ","
      << r2 << "," << r3 << ")";
  throw Error(ErrorCode::kNoSolutionInBound, msg.str());
}

void EnumerationBounds::check() const {
  for (std::int64_t v : {max_genus, max_cycles, max_cycle_length, max_weight_entry,
                         max_exceptional, max_alpha}) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "enumeration bounds must be nonnegative");
  }
  if (max_cycles > 0 && max_cycle_length < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_cycle_length must be >= 2 when cycles are allowed");
  }
}

namespace {

using EntryKey = std::array<std::int64_t, 4>;

std::vector<EntryKey> cycle_key(const FixedCycle& c) {
  std::vector<EntryKey> key;
  key.reserve(c.size());
  for (const auto& e : c.entries) key.push_back({arith::abs(e.f), e.f, e.pair.m, e.pair.n});
  return key;
}

// Subgroups G(m,n) with |m|, |n| <= bound, canonical signs, sorted.
std::vector<Pair> subgroups(std::int64_t bound) {
  std::vector<Pair> out;
  for (std::int64_t m = 0; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (m == 0 && n <= 0) continue;
      if (arith::gcd(m, n) == 1) out.push_back({m, n});
    }
  }
  return out;
}

class CycleClasses {
 public:
  CycleClasses(const std::vector<Pair>& subs, std::int64_t max_f) : subs_(subs), max_f_(max_f) {}

  std::vector<FixedCycle> collect(std::int64_t max_length) {
    for (std::int64_t r = 2; r <= max_length; ++r) {
      seq_.clear();
      extend(static_cast<std::size_t>(r));
    }
    std::vector<FixedCycle> out;
    out.reserve(classes_.size());
    for (auto& [key, cycle] : classes_) out.push_back(std::move(cycle));
    return out;
  }

 private:
  bool admissible(std::size_t i, std::size_t j) const {
    const std::int64_t d = arith::abs(det_pair(subs_[i], subs_[j]));
    return d != 0 && d <= max_f_;
  }

  void extend(std::size_t length) {
    if (seq_.size() == length) {
      if (!admissible(seq_.back(), seq_.front())) return;
      // One subgroup sequence per rotation class: keep the minimal rotation.
      std::vector<std::size_t> rotated(length);
      for (std::size_t k = 1; k < length; ++k) {
        std::rotate_copy(seq_.begin(), seq_.begin() + k, seq_.end(), rotated.begin());
        if (rotated < seq_) return;
      }
      std::vector<Pair> pairs;
      for (std::size_t i : seq_) pairs.push_back(subs_[i]);
      FixedCycle canon = canonical_cycle(FixedCycle::from_pairs(pairs));
      classes_.emplace(cycle_key(canon), std::move(canon));
      return;
    }
    // The first index is the rotation minimum, so later ones are >= it.
    const std::size_t lo = seq_.empty() ? 0 : seq_.front();
    for (std::size_t i = lo; i < subs_.size(); ++i) {
      if (!seq_.empty() && !admissible(seq_.back(), i)) continue;
      seq_.push_back(i);
      extend(length);
      seq_.pop_back();
    }
  }

  const std::vector<Pair>& subs_;
  std::int64_t max_f_;
  std::vector<std::size_t> seq_;
  std::map<std::vector<EntryKey>, FixedCycle> classes_;
};

// Next nondecreasing index sequence over [0, n), growing the length up to
// max_size once a length is exhausted.
bool advance_multiset(std::vector<std::size_t>& idx, std::size_t n, std::size_t max_size) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (idx[i] + 1 < n) {
      const std::size_t v = idx[i] + 1;
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = v;
      return true;
    }
  }
  if (n == 0 || idx.size() >= max_size) return false;
  idx.assign(idx.size() + 1, 0);
  return true;
}

}  // namespace

Enumerator::Enumerator(const EnumerationBounds& bounds) : bounds_(bounds) {
  bounds_.check();
  const std::int64_t e = bounds_.max_weight_entry;
  if (bounds_.max_cycles > 0) {
    circles_ = subgroups(e);
    cycles_ = CycleClasses(circles_, e).collect(bounds_.max_cycle_length);
  }
  for (std::int64_t alpha = 2; alpha <= bounds_.max_alpha && bounds_.max_exceptional > 0; ++alpha) {
    for (std::int64_t g1 = 0; g1 < alpha; ++g1) {
      for (std::int64_t g2 = 0; g2 < alpha; ++g2) {
        if (arith::gcd(arith::gcd(alpha, g1), g2) == 1) triples_.push_back({alpha, g1, g2});
      }
    }
  }
}

bool Enumerator::advance_components() {
  return advance_multiset(components_, component_count(),
                          static_cast<std::size_t>(bounds_.max_cycles));
}

bool Enumerator::advance_exceptional_multiset() {
  return advance_multiset(exceptional_, triples_.size(),
                          static_cast<std::size_t>(bounds_.max_exceptional));
}

std::optional<WeightSystem> Enumerator::next() {
  if (done_) return std::nullopt;
  const std::int64_t e = bounds_.max_weight_entry;
  // Obstruction ranges over the box only for closed orbit spaces.
  auto reset_obstruction = [&] { b1_ = b2_ = components_.empty() ? -e : 0; };
  auto advance_obstruction = [&] {
    if (!components_.empty()) return false;
    if (b2_ < e) {
      ++b2_;
      return true;
    }
    if (b1_ < e) {
      ++b1_;
      b2_ = -e;
      return true;
    }
    return false;
  };

  if (!started_) {
    started_ = true;
    reset_obstruction();
  } else if (!advance_exceptional_multiset()) {
    // Innermost first: exceptional, obstruction, orientation, genus, components.
    exceptional_.clear();
    if (!advance_obstruction()) {
      reset_obstruction();
      if (orientation_ == 0) {
        orientation_ = 1;
      } else {
        orientation_ = 0;
        if (genus_ < bounds_.max_genus) {
          ++genus_;
        } else {
          genus_ = 0;
          if (!advance_components()) {
            done_ = true;
            return std::nullopt;
          }
          reset_obstruction();
        }
      }
    }
  }

  WeightSystem w;
  w.genus = genus_;
  w.orientation = orientation_ == 0 ? Orientation::kPositive : Orientation::kNegative;
  w.obstruction = {b1_, b2_};
  for (std::size_t i : components_) {
    if (i < circles_.size()) {
      w.circle_boundaries.push_back(circles_[i]);
    } else {
      w.fixed_cycles.push_back(cycles_[i - circles_.size()]);
    }
  }
  for (std::size_t i : exceptional_) w.exceptional.push_back(triples_[i]);
  return w;
}

std::vector<WeightSystem> enumerate_legal(const EnumerationBounds& bounds) {
  std::vector<WeightSystem> out;
  Enumerator en(bounds);
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace t2w
