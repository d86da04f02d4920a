#include <vector>

#include "doctest.h"
#include "nestrec/hofstadter.hpp"

using namespace nestrec;

namespace {

// Textbook recursion on a plain vector, no death handling.
std::vector<long long> classic(int n) {
  std::vector<long long> q{0, 1, 1};
  for (int k = 3; k <= n; ++k) q.push_back(q[k - q[k - 1]] + q[k - q[k - 2]]);
  return {q.begin() + 1, q.end()};
}

}  // namespace

TEST_SUITE("hofstadter") {
  TEST_CASE("classic sequence") {
    const auto r = hofstadter_q(10);
    CHECK(r.survived);
    CHECK(r.terms == std::vector<std::uint32_t>{1, 1, 2, 3, 3, 4, 5, 5, 6, 6});
    const auto big = hofstadter_q(5000);
    const auto ref = classic(5000);
    for (Index n = 1; n <= 5000; ++n) CHECK(big(n) == ref[n - 1]);
    CHECK_THROWS_AS(hofstadter_q(1), InputError);
  }

  TEST_CASE("mod 3 by hand and for long") {
    const auto r = mod_m_run(3, 5);
    CHECK(r.terms == std::vector<std::uint32_t>{1, 1, 2, 3, 3});
    const auto longer = mod_m_run(3, 1 << 18, false);
    CHECK(longer.survived);
    CHECK_FALSE(longer.death);
    CHECK(longer.terms.empty());
    CHECK_THROWS_AS(mod_m_run(2, 10), InputError);
  }

  TEST_CASE("inactive modulus agrees with the classic sequence") {
    const auto a = mod_m_run(1'000'000, 1000);
    const auto b = hofstadter_q(1000);
    CHECK(a.terms == b.terms);
  }

  TEST_CASE("small moduli agree with the recursion until the mod acts") {
    for (Value M = 4; M <= 20; ++M) {
      const auto r = mod_m_run(M, 2000);
      REQUIRE(r.survived);
      std::vector<long long> q{0, 1, 1};
      for (int k = 3; k <= 2000; ++k) q.push_back(q[k - q[k - 1]] + q[k - q[k - 2]] % M);
      for (Index n = 1; n <= 2000; ++n) CHECK(r(n) == q[n]);
    }
  }

  TEST_CASE("scan is ordered and independent of worker count") {
    const auto one = mod_m_scan(3, 20, 1 << 14, 1);
    const auto four = mod_m_scan(3, 20, 1 << 14, 4);
    CHECK(mod_m_csv(one) == mod_m_csv(four));
    CHECK(one.front().M == 3);
    CHECK(one.back().M == 20);
    CHECK(mod_m_csv({one.front()}, true) == "M,horizon,survived,death_index\n3,16384,1,\n");
  }
}
