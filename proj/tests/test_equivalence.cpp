#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "t2w/constructors.hpp"
#include "t2w/equivalence.hpp"
#include "t2w/localmodels.hpp"

using namespace t2w;

namespace {

Matrix2 random_unimodular(oracle::Gen& g) {
  static const auto box = oracle::unimodular_box(2);
  const auto& e = box[static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(box.size()) - 1))];
  return {e[0], e[1], e[2], e[3]};
}

bool witness_holds(const WeightSystem& w1, const WeightSystem& w2, const Witness& wit) {
  const WeightSystem moved =
      apply_basis_change(wit.reverse ? reverse_orientation(w1) : w1, wit.basis_change);
  return is_isomorphic(moved, w2, EquivalenceMode::kStrict);
}

WeightSystem disk_with(FixedCycle c, Orientation o = Orientation::kPositive) {
  WeightSystem w;
  w.orientation = o;
  w.fixed_cycles.push_back(std::move(c));
  return w;
}

}  // namespace

TEST_SUITE("equivalence") {

TEST_CASE("Matrix2 basics") {
  const Matrix2 a{2, 1, 1, 1};
  CHECK(a.det() == 1);
  CHECK(a * a.inverse() == Matrix2::identity());
  CHECK(a.apply({1, 0}) == Pair{2, 1});
  CHECK_THROWS_AS((Matrix2{2, 0, 0, 1}.inverse()), Error);
}

TEST_CASE("canonical_cycle matches the exhaustive rotation-and-flip oracle") {
  oracle::Gen g(31);
  for (int i = 0; i < 3000; ++i) {
    const FixedCycle c = g.legal_cycle(static_cast<std::size_t>(g.uniform(2, 6)), 4);
    const FixedCycle fast = canonical_cycle(c);
    const FixedCycle slow = oracle::exhaustive_canonical_cycle(c);
    REQUIRE(fast == slow);
    CHECK(canonical_cycle(fast) == fast);
  }
}

TEST_CASE("canonical_cycle is invariant under rotation and sign flips") {
  oracle::Gen g(32);
  for (int i = 0; i < 1000; ++i) {
    const WeightSystem w = disk_with(g.legal_cycle(static_cast<std::size_t>(g.uniform(2, 6)), 5));
    const WeightSystem v = oracle::shuffle_presentation(w, g);
    CHECK(canonical_cycle(v.fixed_cycles[0]) == canonical_cycle(w.fixed_cycles[0]));
  }
}

TEST_CASE("product of f signs survives canonicalization") {
  oracle::Gen g(33);
  for (int i = 0; i < 500; ++i) {
    const FixedCycle c = g.legal_cycle(static_cast<std::size_t>(g.uniform(2, 6)), 5);
    auto sign = [](const FixedCycle& x) {
      int s = 1;
      for (const auto& e : x.entries) s *= e.f < 0 ? -1 : 1;
      return s;
    };
    CHECK(sign(canonical_cycle(c)) == sign(c));
  }
}

TEST_CASE("STRICT canonical form is invariant under presentation symmetries") {
  oracle::Gen g(34);
  for (int i = 0; i < 2000; ++i) {
    const WeightSystem w = g.legal_system();
    const WeightSystem v = oracle::shuffle_presentation(w, g);
    REQUIRE(validate(v).legal());
    CHECK(canonical_form(w, EquivalenceMode::kStrict) == canonical_form(v, EquivalenceMode::kStrict));
    CHECK(is_isomorphic(w, v, EquivalenceMode::kStrict));
  }
}

TEST_CASE("STRICT canonical representative is a legal presentation of the input") {
  oracle::Gen g(35);
  for (int i = 0; i < 500; ++i) {
    const WeightSystem w = g.legal_system();
    const CanonicalForm f = canonical_form(w, EquivalenceMode::kStrict);
    CHECK(validate(f.system).legal());
    CHECK(canonical_form(f.system, EquivalenceMode::kStrict) == f);
  }
}

TEST_CASE("WEAK canonical form is invariant under basis change and reversal") {
  oracle::Gen g(36);
  for (int i = 0; i < 1000; ++i) {
    const WeightSystem w = g.legal_system(3);
    WeightSystem v = apply_basis_change(oracle::shuffle_presentation(w, g), random_unimodular(g));
    if (g.coin()) v = reverse_orientation(v);
    v = oracle::shuffle_presentation(v, g);
    REQUIRE(validate(v).legal());
    CHECK(canonical_form(w, EquivalenceMode::kWeak) == canonical_form(v, EquivalenceMode::kWeak));
    const auto wit = find_isomorphism(w, v, EquivalenceMode::kWeak);
    REQUIRE(wit.has_value());
    CHECK(witness_holds(w, v, *wit));
  }
}

TEST_CASE("basis change and reversal preserve legality and compose") {
  oracle::Gen g(37);
  for (int i = 0; i < 500; ++i) {
    const WeightSystem w = g.legal_system();
    const Matrix2 a = random_unimodular(g), b = random_unimodular(g);
    CHECK(validate(apply_basis_change(w, a)).legal());
    CHECK(validate(reverse_orientation(w)).legal());
    CHECK(apply_basis_change(apply_basis_change(w, a), b) == apply_basis_change(w, b * a));
    CHECK(apply_basis_change(apply_basis_change(w, a), a.inverse()) == w);
    CHECK(is_isomorphic(reverse_orientation(reverse_orientation(w)), w, EquivalenceMode::kStrict));
  }
  CHECK_THROWS_AS(apply_basis_change(WeightSystem{}, Matrix2{2, 0, 0, 1}), Error);
}

TEST_CASE("reverse_seifert convention") {
  CHECK(reverse_seifert({5, 2, 3}) == FiniteIsotropyInvariant{5, 3, 2});
  CHECK(reverse_seifert({3, 0, 1}) == FiniteIsotropyInvariant{3, 0, 2});
}

TEST_CASE("suspensions of L(5,2) and L(5,3) differ STRICT although the lens classes agree") {
  const WeightSystem a = suspension_of_lens(make_pair(1, 0), make_pair(2, 5));
  const WeightSystem b = suspension_of_lens(make_pair(1, 0), make_pair(3, 5));
  CHECK_FALSE(is_isomorphic(a, b, EquivalenceMode::kStrict));
  CHECK(lens_equivalent(space_of_directions({1, 0}, {2, 5}), space_of_directions({1, 0}, {3, 5})));
}

TEST_CASE("an asymmetric three-point cycle is WEAK but not STRICT isomorphic to its reversal") {
  const WeightSystem w = weighted_projective(1, 2, 3);
  const WeightSystem r = reverse_orientation(w);
  CHECK_FALSE(is_isomorphic(w, r, EquivalenceMode::kStrict));
  CHECK(is_isomorphic(w, r, EquivalenceMode::kWeak));
  const auto wit = find_isomorphism(w, r, EquivalenceMode::kWeak);
  REQUIRE(wit.has_value());
  CHECK(witness_holds(w, r, *wit));
}

TEST_CASE("a shear leaves the WEAK form of a suspension unchanged") {
  const WeightSystem w = suspension_of_lens(make_pair(1, 0), make_pair(2, 5));
  const WeightSystem v = apply_basis_change(w, {1, 1, 0, 1});
  CHECK(canonical_form(v, EquivalenceMode::kWeak) == canonical_form(w, EquivalenceMode::kWeak));
  CHECK_FALSE(is_isomorphic(v, w, EquivalenceMode::kStrict));
}

TEST_CASE("the swap matrix exchanges the coordinate circles and negates f") {
  const WeightSystem w = disk_with(FixedCycle::from_pairs(std::vector<Pair>{{1, 0}, {0, 1}}));
  const WeightSystem v = apply_basis_change(w, {0, 1, 1, 0});
  REQUIRE(v.fixed_cycles.size() == 1);
  CHECK(v.fixed_cycles[0].entries[0].pair == Pair{0, 1});
  CHECK(v.fixed_cycles[0].entries[1].pair == Pair{1, 0});
  CHECK(v.fixed_cycles[0].entries[0].f == -w.fixed_cycles[0].entries[0].f);
  CHECK(v.fixed_cycles[0].entries[1].f == -w.fixed_cycles[0].entries[1].f);
}

TEST_CASE("orientation and obstruction are STRICT invariants") {
  WeightSystem closed;
  closed.obstruction = {1, 0};
  WeightSystem flipped = closed;
  flipped.orientation = Orientation::kNegative;
  CHECK_FALSE(is_isomorphic(closed, flipped, EquivalenceMode::kStrict));
  WeightSystem other = closed;
  other.obstruction = {0, 1};
  CHECK_FALSE(is_isomorphic(closed, other, EquivalenceMode::kStrict));
  CHECK(is_isomorphic(closed, other, EquivalenceMode::kWeak));
  CHECK(is_isomorphic(closed, flipped, EquivalenceMode::kWeak));
}

TEST_CASE("equivalence relation laws and STRICT implies WEAK") {
  oracle::Gen g(38);
  std::vector<WeightSystem> sample;
  for (int i = 0; i < 60; ++i) {
    WeightSystem w;
    w.fixed_cycles.push_back(g.legal_cycle(static_cast<std::size_t>(g.uniform(2, 3)), 2));
    w.orientation = g.coin() ? Orientation::kPositive : Orientation::kNegative;
    sample.push_back(w);
    sample.push_back(oracle::shuffle_presentation(w, g));
  }
  for (auto mode : {EquivalenceMode::kStrict, EquivalenceMode::kWeak}) {
    for (const auto& a : sample) {
      CHECK(is_isomorphic(a, a, mode));
      for (const auto& b : sample) {
        const bool ab = is_isomorphic(a, b, mode);
        CHECK(ab == is_isomorphic(b, a, mode));
        if (mode == EquivalenceMode::kStrict && ab) CHECK(is_isomorphic(a, b, EquivalenceMode::kWeak));
      }
    }
  }
  // Transitivity through the canonical forms of a chain.
  for (std::size_t i = 0; i + 2 < sample.size(); ++i) {
    const auto& a = sample[i];
    const auto& b = sample[i + 1];
    const auto& c = sample[i + 2];
    if (is_isomorphic(a, b, EquivalenceMode::kWeak) && is_isomorphic(b, c, EquivalenceMode::kWeak)) {
      CHECK(is_isomorphic(a, c, EquivalenceMode::kWeak));
    }
  }
}

TEST_CASE("WEAK agrees with a brute-force search over small matrices") {
  const auto box = oracle::unimodular_box(3);
  std::vector<WeightSystem> systems;
  for (const Pair& a : std::vector<Pair>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}}) {
    for (const Pair& b : std::vector<Pair>{{0, 1}, {1, 1}, {2, 1}, {1, 2}, {-1, 2}, {3, 1}}) {
      if (oracle::det(a, b) == 0) continue;
      systems.push_back(disk_with(FixedCycle::from_pairs(std::vector<Pair>{a, b})));
    }
  }
  int found = 0;
  for (const auto& w1 : systems) {
    for (const auto& w2 : systems) {
      bool brute = false;
      for (bool rev : {false, true}) {
        const WeightSystem base = rev ? reverse_orientation(w1) : w1;
        for (const auto& e : box) {
          if (is_isomorphic(apply_basis_change(base, {e[0], e[1], e[2], e[3]}), w2,
                            EquivalenceMode::kStrict)) {
            brute = true;
            break;
          }
        }
        if (brute) break;
      }
      const bool fast = is_isomorphic(w1, w2, EquivalenceMode::kWeak);
      if (brute) {
        ++found;
        CHECK(fast);
      }
      if (fast) {
        const auto wit = find_isomorphism(w1, w2, EquivalenceMode::kWeak);
        REQUIRE(wit.has_value());
        CHECK(witness_holds(w1, w2, *wit));
      }
    }
  }
  CHECK(found > static_cast<int>(systems.size()));
}

TEST_CASE("illegal systems are rejected") {
  const WeightSystem bad = disk_with(FixedCycle{{{{1, 0}, 1}, {{0, 1}, 1}}});
  CHECK_THROWS_AS(canonical_form(bad, EquivalenceMode::kStrict), Error);
  CHECK_THROWS_AS(is_isomorphic(bad, bad, EquivalenceMode::kWeak), Error);
}

}  // TEST_SUITE
