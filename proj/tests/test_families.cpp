#include <set>
#include <vector>

#include "doctest.h"
#include "nestrec/enumeration.hpp"
#include "nestrec/families.hpp"
#include "oracles.hpp"

using namespace nestrec;
using V = std::vector<Value>;

namespace {

V as_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }

V q_of(const FSeq& f) {
  const auto r = q_from_f(f);
  REQUIRE(r.survived());
  return as_vec(r.prefix.terms());
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("slow alpha") {
    CHECK(as_vec(slow_alpha_f(Rational(1, 2), 8).terms()) == V{0, 1, 1, 1, 1, 2, 2, 2});
    for (Index k = 1; k <= 200; ++k) CHECK(slow_alpha_f(Rational(1, 2), 200)(k) == (k + 2) / 4);
    CHECK(as_vec(slow_alpha_f(Rational(1, 2), 1).terms()) == V{0});
    for (const Rational a : {Rational(1, 2), Rational(2, 3), Rational(5, 7), Rational(99, 100), Rational(13, 21)}) {
      const FSeq f = slow_alpha_f(a, 3000);
      const V q = q_of(f);
      for (Index k = 1; k <= 3000; ++k) CHECK(q[k - 1] == 1 + floor(a * k));
      CHECK(is_slow(f.terms()));
      CHECK(is_slow(q));
    }
    CHECK_THROWS_AS(slow_alpha_f(Rational(1, 3), 5), InputError);
    CHECK_THROWS_AS(slow_alpha_f(Rational(1), 5), InputError);
  }

  TEST_CASE("delta step") {
    CHECK(as_vec(delta_step_f(3, 7).terms()) == V{0, 0, 0, 3, 3, 3, 6});
    CHECK(as_vec(delta_step_f(1, 5).terms()) == V{0, 1, 2, 3, 4});
    CHECK(q_of(delta_step_f(1, 5)) == V{1, 2, 3, 4, 5});
    for (Value d = 2; d <= 9; ++d) {
      const FSeq f = delta_step_f(d, 500);
      const V q = q_of(f);
      for (Index k = 1; k <= 500; ++k) CHECK(q[k - 1] == 1 + d * ((k - 1) / d));
      const auto qp = qprime(QSeq(q));
      CHECK(std::all_of(qp.begin(), qp.end(), [](Value v) { return v == 1; }));
      CHECK_FALSE(is_slow(f.terms()));
      CHECK(std::is_sorted(q.begin(), q.end()));
    }
  }

  TEST_CASE("witnesses attain the f bounds") {
    CHECK(as_vec(witness_lower_f(5).terms()) == V{0, 0, 2, 1, -2});
    CHECK(q_of(witness_lower_f(5)) == V{1, 1, 3, 2, 1});
    CHECK(as_vec(witness_lower_f(4).terms()) == V{0, 1, 1, -1});
    CHECK(q_of(witness_lower_f(4)) == V{1, 2, 2, 1});
    for (Index n = 4; n <= 60; ++n) {
      const FSeq f = witness_lower_f(n);
      CHECK(f(n) == f_bounds(n).low);
      CHECK(q_of(f).back() == 1);
      CHECK(witness_upper_f(n)(n) == f_bounds(n).high);
      CHECK(q_of(witness_upper_f(n)).back() == n);
    }
    CHECK_THROWS_AS(witness_lower_f(3), InputError);
  }

  TEST_CASE("powers of two choices") {
    CHECK(as_vec(sample_powtwo_f({false, false, false}, 4).terms()) == V{0, 0, 0, 0});
    CHECK(q_of(sample_powtwo_f({true, true, true}, 4)) == V{1, 2, 3, 4});
    const FSeq alt = sample_powtwo_f({true, false, true, false}, 5);
    CHECK(as_vec(alt.terms()) == V{0, 1, 0, 3, 0});
    CHECK(q_of(alt) == V{1, 2, 1, 4, 1});
    CHECK(q_of(sample_powtwo_f({false, true, false, true}, 5)) == V{1, 1, 3, 1, 5});
  }

  TEST_CASE("strip {0,1,2}") {
    CHECK(q_from_f(sample_strip012_f(FSeq({0, 1, 2}), V{2, 2, 2})).survived());
    for (Value a = 0; a <= 2; ++a)
      for (Value b = 0; b <= 2; ++b)
        for (Value c = 0; c <= 2; ++c)
          CHECK(q_from_f(sample_strip012_f(FSeq({0, 0, 0}), V{a, b, c})).survived());
    CHECK_THROWS_AS(sample_strip012_f(FSeq({0, 1, 2, -1}), V{0}), PreconditionError);
    CHECK_THROWS_AS(sample_strip012_f(FSeq({0, 0, 0}), V{3}), InputError);

    // Members of F_n inside the strip, counted by enumeration.
    for (Index n = 3; n <= 8; ++n) {
      long long inside = 0;
      for_each_F(n, [&](const FSeq& f) {
        bool ok = f(2) <= 1;
        for (Index k = 3; k <= n && ok; ++k) ok = f(k) >= 0 && f(k) <= 2;
        inside += ok;
      });
      long long expect = 2;
      for (Index k = 3; k <= n; ++k) expect *= 3;
      CHECK(inside == expect);
    }
  }

  TEST_CASE("ladder") {
    CHECK(as_vec(sample_ladder_f(3, V{}, 4).terms()) == V{0, 1, 1, 0});
    CHECK(q_of(sample_ladder_f(3, V{}, 4)) == V{1, 2, 2, 2});
    CHECK(q_of(sample_ladder_f(3, V{1}, 5))[4] == 3);
    CHECK_THROWS_AS(sample_ladder_f(3, V{0}, 5), InputError);

    // Exhaustive choice enumeration against (l-1) l^(n-l-2).
    for (Index ell = 3; ell <= 5; ++ell) {
      for (Index n = ell + 2; n <= ell + 4; ++n) {
        std::set<V> distinct;
        V choices;
        std::function<void(Index)> rec = [&](Index idx) {
          if (idx > n) {
            const FSeq f = sample_ladder_f(ell, choices, n);
            const V q = q_of(f);
            const auto qp = qprime(QSeq(q));
            for (Index m = 4; m <= n; ++m) CHECK(qp[m - 1] == 2);
            distinct.insert(as_vec(f.terms()));
            return;
          }
          const auto r = ladder_choice_range(ell, idx);
          for (Value v = r.low; v <= r.high; ++v) {
            choices.push_back(v);
            rec(idx + 1);
            choices.pop_back();
          }
        };
        rec(ell + 2);
        long long expect = ell - 1;
        for (Index k = 0; k < n - ell - 2; ++k) expect *= ell;
        CHECK(static_cast<long long>(distinct.size()) == expect);
      }
    }
  }

  TEST_CASE("y-driven sets and counts") {
    const YSeq ones(std::vector<int>(12, 1));
    for (const auto& s : ydriven_sets(ones, 12)) CHECK(s == V{1});
    CHECK(ydriven_count(ones, 12) == 1);

    const auto s = ydriven_sets(YSeq({1, 0}), 2);
    CHECK(s[1] == V{1, 2});
    CHECK(ydriven_count(YSeq({1, 0}), 2) == 2);
    CHECK_THROWS_AS(YSeq({0, 1}), InputError);

    for (Index m = 2; m <= 4; ++m) {
      for (Index n = m; n <= 24; n += m) {
        BigInt fact = factorial(static_cast<unsigned>((n + m) / m));
        BigInt expect = 1;
        for (Index i = 0; i < m - 1; ++i) expect *= fact;
        CHECK(ydriven_count(YSeq::periodic(m, n), n) == expect);
      }
    }
    for (Index n = 2; n <= 20; ++n)
      CHECK(ydriven_count(YSeq::periodic(2, n), n) == factorial(static_cast<unsigned>((n + 2) / 2)));
  }

  TEST_CASE("y-driven: every pick sequence gives q' = 1 and the count is exact") {
    const YSeq y({1, 0, 0, 1, 0, 1, 0, 0});
    const Index n = y.size();
    const auto sets = ydriven_sets(y, n);
    for (Index k = 1; k <= n; ++k) {
      CHECK(sets[k - 1].front() == 1);
      CHECK(sets[k - 1].back() == (y(k) == 1 ? 1 : k));
    }
    long long total = 0;
    V picks;
    std::function<void(Index)> rec = [&](Index k) {
      if (k > n) {
        ++total;
        const V q = q_of(ydriven_f(y, picks));
        CHECK(q == picks);
        const auto qp = qprime(QSeq(q));
        CHECK(std::all_of(qp.begin(), qp.end(), [](Value v) { return v == 1; }));
        return;
      }
      for (Value p : sets[k - 1]) {
        picks.push_back(p);
        rec(k + 1);
        picks.pop_back();
      }
    };
    rec(1);
    CHECK(BigInt(total) == ydriven_count(y, n));
    CHECK_THROWS_AS(ydriven_f(y, V{1, 3}), InputError);
  }

  TEST_CASE("seeded sampling is reproducible") {
    const FamilySpec spec = family::Ladder{4};
    CHECK(sample_family(spec, 300, 7) == sample_family(spec, 300, 7));
    CHECK_FALSE(sample_family(spec, 300, 7) == sample_family(spec, 300, 8));
  }

  TEST_CASE("samplers survive (reduced size; full size runs in acceptance)") {
    const std::vector<FamilySpec> specs{family::SlowAlpha{Rational(3, 5)}, family::DeltaStep{4},
                                        family::PowTwo{},  family::Strip012{},
                                        family::Ladder{5}, family::YDriven{YSeq::periodic(3, 2000)}};
    for (const auto& spec : specs)
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto f = sample_family(spec, 2000, seed);
        const auto [q, death] = oracle::run_q({f.terms().begin(), f.terms().end()});
        CHECK(death == 0);
      }
  }
}
