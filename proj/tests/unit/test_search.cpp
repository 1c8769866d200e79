#include <doctest.h>

#include "roughmap/enumeration.hpp"
#include "roughmap/report_io.hpp"
#include "roughmap/search.hpp"

using namespace roughmap;

namespace {

SearchOptions with_workers(std::size_t workers) {
  SearchOptions o;
  o.workers = workers;
  return o;
}

}  // namespace

TEST_CASE("verify tallies cover the whole space") {
  // T42 runs over bijections: sum over n of n! * B(n) * 2^n.
  const SearchReport r = verify(claim(ClaimId::T42_1), {4, 4}, with_workers(2));
  std::uint64_t expected = 0, fact = 1;
  for (std::size_t n = 1; n <= 4; ++n) {
    fact *= n;
    expected += fact * bell_number(n) * subset_count(n);
  }
  CHECK(r.tallies.total() == expected);
  CHECK(r.effort.instances == expected);
  CHECK(r.tallies.fails == 0);
  CHECK_FALSE(r.first_counterexample);
  CHECK_FALSE(r.canonical_maps);

  // Surjective two-partition claims: sum over n, m <= n of surj(n, m) * B(n)^2.
  const SearchReport l = verify(claim(ClaimId::L31_1Fwd), {4, 3}, with_workers(3));
  std::uint64_t space = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= std::min<std::size_t>(n, 3); ++m)
      space += surjection_count(n, m) * bell_number(n) * bell_number(n);
  CHECK(l.tallies.total() == space);
  CHECK(l.tallies.fails > 0);
  CHECK(l.failures.size() == 10);
  REQUIRE(l.first_counterexample);
  CHECK(evaluate(claim(ClaimId::L31_1Fwd), l.first_counterexample->instance).witness ==
        l.first_counterexample->witness);
}

TEST_CASE("falsify is deterministic across worker counts") {
  for (auto id : {ClaimId::L31_1Fwd, ClaimId::L31_2Inc, ClaimId::T41_2, ClaimId::T43_1}) {
    const SearchReport one = falsify(claim(id), {6, 3}, with_workers(1));
    REQUIRE(one.first_counterexample);
    const std::string expected = report_to_json(one)["first_counterexample"].dump();
    for (std::size_t w : {2, 8}) {
      const SearchReport many = falsify(claim(id), {6, 3}, with_workers(w));
      CHECK(many.tallies == one.tallies);
      CHECK(report_to_json(many)["first_counterexample"].dump() == expected);
    }
    // Tallies stop at the first failure.
    CHECK(one.tallies.fails == 1);
    CHECK(one.stopped_early);
  }
}

TEST_CASE("verify is deterministic across worker counts") {
  const SearchReport one = verify(claim(ClaimId::T31), {5, 3}, with_workers(1));
  const SearchReport four = verify(claim(ClaimId::T31), {5, 3}, with_workers(4));
  CHECK(one.tallies == four.tallies);
  CHECK(report_to_json(one)["failures"] == report_to_json(four)["failures"]);
}

TEST_CASE("set difference is never an equivalence") {
  const SearchReport r = verify(claim(ClaimId::L32), {4, 4}, with_workers(2));
  CHECK(r.tallies.total() > 0);
  CHECK(r.tallies.ill_typed == r.tallies.total());
}

TEST_CASE("f(R) is reflexive exactly when f is onto, for every map") {
  const SearchReport r = verify(claim(ClaimId::T31Refl), {5, 5}, with_workers(2));
  CHECK(r.tallies.fails == 0);
  // All maps, not only surjections: sum over n, m of m^n * B(n).
  std::uint64_t space = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 5; ++m) {
      std::uint64_t maps = 1;
      for (std::size_t i = 0; i < n; ++i) maps *= m;
      space += maps * bell_number(n);
    }
  CHECK(r.tallies.total() == space);
}

TEST_CASE("empty bounds") {
  // Bijective claims need |U| = |V|; with |V| capped at 1 only |U| = 1 fits.
  const SearchReport r = falsify(claim(ClaimId::T42_1), {1, 1}, with_workers(1));
  CHECK(r.tallies.total() == 2);
  CHECK_FALSE(r.first_counterexample);
  CHECK_FALSE(r.stopped_early);
}
