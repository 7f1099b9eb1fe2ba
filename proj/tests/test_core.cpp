#include <doctest.h>

#include <cstdint>
#include <limits>

#include "oracles.hpp"
#include "t2w/core.hpp"

using namespace t2w;

namespace {

WeightSystem disk(std::vector<CycleEntry> entries) {
  WeightSystem w;
  w.fixed_cycles.push_back(FixedCycle{std::move(entries)});
  return w;
}

std::int64_t sign_product(const FixedCycle& c) {
  std::int64_t s = 1;
  for (const auto& e : c.entries) s *= e.f < 0 ? -1 : 1;
  return s;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("make_pair normalizes signs and rejects non-coprime input") {
  CHECK(make_pair(2, -5).rep() == Pair{2, -5});
  CHECK(make_pair(-1, 0).rep() == Pair{1, 0});
  CHECK(make_pair(0, -1).rep() == Pair{0, 1});
  CHECK(make_pair(-3, 7).rep() == Pair{3, -7});
  CHECK(make_pair(-2, -5) == make_pair(2, 5));

  for (Pair bad : {Pair{2, 4}, Pair{0, 0}, Pair{0, 2}, Pair{-6, 9}}) {
    try {
      make_pair(bad);
      FAIL("expected NotCoprime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotCoprime);
    }
  }
}

TEST_CASE("det_pair") {
  CHECK(det_pair({1, 0}, {0, 1}) == 1);
  CHECK(det_pair({1, 0}, {2, 5}) == 5);
  CHECK(det_pair({0, 1}, {1, 0}) == -1);
  // (1,0),(p,q) -> q
  oracle::Gen g(11);
  for (int i = 0; i < 100; ++i) {
    const Pair pq = g.coprime(40);
    CHECK(det_pair({1, 0}, pq) == pq.n);
  }
}

TEST_CASE("det_pair fails loudly on overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  CHECK_THROWS_AS(det_pair({big, 3}, {-3, big}), Error);
}

TEST_CASE("classify_fixed_point") {
  CHECK(classify_fixed_point(1) == OrbitType::kRegularFixed);
  CHECK(classify_fixed_point(-1) == OrbitType::kRegularFixed);
  CHECK(classify_fixed_point(5) == OrbitType::kSingularFixed);
  CHECK(classify_fixed_point(-2) == OrbitType::kSingularFixed);
  CHECK_THROWS_AS(classify_fixed_point(0), Error);
  for (std::int64_t f = -50; f <= 50; ++f) {
    if (f == 0) continue;
    CHECK(classify_fixed_point(f) == classify_fixed_point(-f));
  }
}

TEST_CASE("validate: suspension of a lens space is legal") {
  const Pair pq{1, 0}, mn{2, 5};
  const std::int64_t r = det_pair(pq, mn);
  const auto report = validate(disk({{pq, r}, {mn, -r}}));
  CHECK(report.legal());
  CHECK(report.to_string() == "legal\n");
}

TEST_CASE("validate: the excluded two-point disk violates the r=2 rule") {
  // {(a,b), delta, (c,d), 1} with delta != -1
  const auto report = validate(disk({{{1, 0}, 5}, {{2, 5}, 1}}));
  CHECK_FALSE(report.legal());
  CHECK(report.has(Rule::kTwoPointSign));
  CHECK(report.to_string().find("r=2 rule") != std::string::npos);
}

TEST_CASE("validate: obstruction only on closed orbit spaces") {
  WeightSystem w = disk({{{1, 0}, 1}, {{0, 1}, -1}});
  w.obstruction = {1, 0};
  const auto report = validate(w);
  CHECK(report.has(Rule::kObstructionClosedOnly));

  WeightSystem closed;
  closed.obstruction = {3, -2};
  closed.genus = 2;
  CHECK(validate(closed).legal());

  WeightSystem with_circle;
  with_circle.circle_boundaries.push_back({1, 1});
  with_circle.obstruction = {0, 1};
  CHECK(validate(with_circle).has(Rule::kObstructionClosedOnly));
}

TEST_CASE("validate reports each violated rule with its location") {
  WeightSystem w;
  w.genus = -1;
  w.circle_boundaries.push_back({2, 4});
  w.fixed_cycles.push_back(FixedCycle{{{{1, 0}, 7}}});                   // r = 1
  w.fixed_cycles.push_back(FixedCycle{{{{1, 0}, 0}, {{1, 0}, 0}, {{0, 1}, -1}}});
  w.exceptional.push_back({1, 0, 0});
  w.exceptional.push_back({4, 2, 2});
  w.exceptional.push_back({3, 3, 1});
  const auto report = validate(w);
  CHECK(report.has(Rule::kGenusNonnegative));
  CHECK(report.has(Rule::kCoprimePair));
  CHECK(report.has(Rule::kCycleLength));
  CHECK(report.has(Rule::kDeterminantMismatch));
  CHECK(report.has(Rule::kZeroDeterminant));
  CHECK(report.has(Rule::kSeifertInvariant));
  bool located = false;
  for (const auto& v : report.violations) {
    located = located || (v.rule == Rule::kCoprimePair && v.location == "circle_boundaries[0]");
  }
  CHECK(located);
  int seifert = 0;
  for (const auto& v : report.violations) seifert += v.rule == Rule::kSeifertInvariant;
  CHECK(seifert == 3);
}

TEST_CASE("validate records determinant overflow instead of throwing") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  WeightSystem w = disk({{{big, 1}, 1}, {{-1, big}, -1}});
  ValidationReport report;
  CHECK_NOTHROW(report = validate(w));
  CHECK(report.has(Rule::kArithmeticOverflow));
}

TEST_CASE("validate is deterministic and side-effect free") {
  oracle::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    WeightSystem w = g.legal_system();
    if (g.coin() && !w.fixed_cycles.empty()) w.fixed_cycles[0].entries[0].f += 1;
    const WeightSystem copy = w;
    CHECK(validate(w) == validate(w));
    CHECK(w == copy);
  }
}

TEST_CASE("legal systems reproduce every stored f from their pairs") {
  oracle::Gen g(7);
  for (int i = 0; i < 500; ++i) {
    const WeightSystem w = g.legal_system(6);
    REQUIRE(validate(w).legal());
    for (const auto& c : w.fixed_cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        CHECK(c.entries[k].f == oracle::det(c.entries[k].pair, c.entries[(k + 1) % c.size()].pair));
      }
    }
  }
}

TEST_CASE("sign flips negate the two adjacent determinants and keep legality") {
  oracle::Gen g(9);
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = static_cast<std::size_t>(g.uniform(2, 7));
    FixedCycle c = g.legal_cycle(r, 5);
    const std::int64_t product = sign_product(c);
    for (int flips = 0; flips < 6; ++flips) {
      const std::size_t w = static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(r) - 1));
      std::vector<Pair> pairs;
      for (const auto& e : c.entries) pairs.push_back(e.pair);
      pairs[w] = -pairs[w];
      const FixedCycle flipped = FixedCycle::from_pairs(pairs);
      const std::size_t prev = (w + r - 1) % r;
      for (std::size_t k = 0; k < r; ++k) {
        if (k == w || k == prev) {
          // r == 2: both entries are adjacent to w, each negated once.
          CHECK(flipped.entries[k].f == -c.entries[k].f);
        } else {
          CHECK(flipped.entries[k].f == c.entries[k].f);
        }
      }
      WeightSystem sys;
      sys.fixed_cycles.push_back(flipped);
      CHECK(validate(sys).legal());
      CHECK(sign_product(flipped) == product);
      c = flipped;
    }
  }
}

TEST_CASE("derived counts") {
  WeightSystem w;
  w.circle_boundaries = {{1, 0}, {0, 1}};
  w.fixed_cycles.push_back(FixedCycle::from_pairs(std::vector<Pair>{{1, 0}, {0, 1}}));
  w.exceptional.push_back({3, 1, 2});
  CHECK(w.s() == 2);
  CHECK(w.t() == 1);
  CHECK(w.m() == 3);
  CHECK(w.k() == 1);
}

}  // TEST_SUITE
