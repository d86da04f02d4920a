#include <cmath>
#include <vector>

#include "doctest.h"
#include "nestrec/counterexamples.hpp"
#include "oracles.hpp"

using namespace nestrec;
using V = std::vector<Value>;

namespace {
V as_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_SUITE("counterexamples") {
  TEST_CASE("f_d prefixes") {
    CHECK(as_vec(build_fd(6, 30).terms()) ==
          V{0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 1, 3, 0, 3, 1, 4, 1, 4, 1, 4, 1, 5});
    CHECK(as_vec(build_fd(4, 11).terms()) == V{0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 0});
    CHECK(as_vec(build_fd(2, 5).terms()) == V{0, 1, 0, 2, 0});
    CHECK_THROWS_AS(build_fd(5, 10), InputError);
    CHECK_THROWS_AS(build_fd(0, 10), InputError);
  }

  TEST_CASE("d=6 run: prefix agrees with the recursion, death at 30") {
    const auto run = steered_run(6);
    CHECK(run.kill_index == 30);
    CHECK(run.q_prefix.size() == 29);
    // Independent recomputation from the published f.
    const oracle::Vec f{0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 1, 3, 0, 3, 1, 4, 1, 4, 1, 4, 1, 5};
    const auto [q, death] = oracle::run_q(f);
    CHECK(death == 30);
    CHECK(q[30 - q[29]] + f[29] == run.kill_value);
    CHECK(run.kill_value == 33);
  }

  TEST_CASE("kill index table and its estimate") {
    const V K{8, 18, 30, 40, 50, 62, 72, 82, 94, 104};
    const V est{6, 17, 28, 39, 50, 60, 71, 82, 93, 103};
    for (Index d = 2, i = 0; d <= 20; d += 2, ++i) {
      CHECK(kill_index(d) == K[i]);
      CHECK(ceil_d_times_x(d) == est[i]);
      CHECK(std::ceil(d * x_estimate(d) - 1e-9) == doctest::Approx(est[i]));
      CHECK(std::abs(ceil_d_times_x(d) - K[i]) <= 2);
    }
  }

  TEST_CASE("steered runs: odd q stay at 2, stars only at star positions") {
    for (Index d = 2; d <= 40; d += 2) {
      const auto run = steered_run(d);
      for (Index k = 2 * d + 1; k < run.kill_index; k += 2) CHECK(run.q_prefix(k) == 2);
      std::size_t stars = 0;
      for (Index k = 1; k < run.kill_index; ++k) {
        if (!is_star_position(d, k) && k % 2 == 1) CHECK(run.f(k) == 0);
        if (is_star_position(d, k)) {
          CHECK(run.f(k) == run.star_choices[stars]);
          ++stars;
        }
      }
      CHECK(run.kill_value > run.kill_index);
    }
  }

  TEST_CASE("closed form for q at multiples of d") {
    CHECK(r_closed_form(1, 6) == 2);
    CHECK(r_closed_form(2, 6) == 3);
    CHECK(r_closed_form(5, 6) == 33);
    // Calibration: q(l d) from the steered run (or the dying candidate at K).
    for (Index d = 2; d <= 40; d += 2) {
      const auto run = steered_run(d);
      for (Index ell = 1; ell * d <= run.kill_index; ++ell) {
        const Value seen = ell * d < run.kill_index ? run.q_prefix(ell * d) : run.kill_value;
        CHECK_MESSAGE(seen == r_closed_form(ell, d), "d=" << d << " l=" << ell);
      }
    }
    // Quadratic growth in l.
    for (Index ell = 10; ell <= 1000; ell *= 10)
      CHECK(static_cast<double>(r_closed_form(ell, 8)) / static_cast<double>(ell * ell) == doctest::Approx(2.0).epsilon(0.5));
  }

  TEST_CASE("custom star policy is honoured") {
    const auto always_zero = [](Index, std::optional<Value>) { return 0; };
    const FSeq f = build_fd(6, 60, always_zero);
    for (Index k = 1; k <= 60; k += 2) CHECK(f(k) == 0);
    const auto bad = [](Index, std::optional<Value>) { return 2; };
    CHECK_THROWS_AS(build_fd(6, 60, bad), InputError);
  }

  TEST_CASE("near-diagonal cone witness") {
    CHECK(as_vec(cone1_witness(3).terms()) == V{0, 1, 2, 2, 4});
    const auto r3 = q_from_f(cone1_witness(3));
    REQUIRE(r3.death);
    CHECK(*r3.death == Death{5, DeathKind::AboveIndex, 6});
    CHECK(q_from_f(cone1_witness(1)).survived());
    CHECK(q_from_f(cone1_witness(10)).death->index == 12);
    for (Index N = 2; N <= 50; ++N) {
      const auto r = q_from_f(cone1_witness(N));
      REQUIRE(r.death);
      CHECK(r.death->index == N + 2);
      CHECK(r.death->candidate == N + 3);
      const Rational t = cone1_epsilon_threshold(N);
      CHECK(in_linear_cone(cone1_witness(N), 1 - (t + Rational(1, 1000)), Rational(1)));
      CHECK_FALSE(in_linear_cone(cone1_witness(N), 1 - t, Rational(1)));
    }
  }

  TEST_CASE("jump counterexample") {
    const auto j1 = thm1_jump_counterexample(1);
    CHECK(as_vec(j1.f.terms()) == V{0, 1, 1, 3});
    CHECK(j1.death == Death{4, DeathKind::AboveIndex, 5});
    CHECK(thm1_jump_counterexample(2).death.index == 8);
    CHECK(thm1_jump_counterexample(5).death.index == 20);
    for (Index m = 1; m <= 40; ++m) {
      const auto j = thm1_jump_counterexample(m);
      CHECK(j.death.index == 4 * m);
      CHECK(j.death.candidate == 4 * m + 1);
    }
  }
}
