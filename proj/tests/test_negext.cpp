#include <map>
#include <vector>

#include "doctest.h"
#include "nestrec/negext.hpp"
#include "nestrec/random.hpp"

using namespace nestrec;
using V = std::vector<Value>;

namespace {

struct Brute {
  long long best = 0, count = 0;
  std::map<long long, long long> by_b;
};

// Plain recursive enumeration of Q_n0 with an explicit -1 tail.
Brute brute(int n0) {
  Brute out;
  std::vector<long long> q(200, 0);
  q[1] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i > n0) {
      long long b = 0;
      for (int k = 1; k <= n0; ++k) b = std::max(b, q[k]);
      std::vector<long long> w(q.begin(), q.begin() + n0 + 1);
      long long n = n0 + 1;
      while (true) {
        const long long v = w[n - w[n - 1]] - 1;
        if (v < 1 || v > n) break;
        w.push_back(v);
        ++n;
      }
      if (n > out.best) {
        out.best = n;
        out.count = 0;
        out.by_b.clear();
      }
      if (n == out.best) {
        ++out.count;
        ++out.by_b[b];
      }
      return;
    }
    for (int v = 1; v <= i; ++v) {
      q[i] = v;
      rec(i + 1);
    }
  };
  rec(2);
  return out;
}

}  // namespace

TEST_SUITE("negext") {
  TEST_CASE("death bound and ladder") {
    CHECK(death_bound(4, 3) == 10);
    CHECK(death_bound(12, 11) == 78);
    for (Index n0 = 3; n0 <= 12; ++n0) CHECK(death_bound(n0, 1) == n0 + 1);
    CHECK(nk_ladder(4, 3) == std::vector<Index>{7, 9, 10});
    CHECK(nk_ladder(3, 1) == std::vector<Index>{4});
    for (Index n0 = 3; n0 <= 12; ++n0)
      for (Value B = 1; B <= n0; ++B) {
        const auto l = nk_ladder(n0, B);
        CHECK(std::is_sorted(l.begin(), l.end()));
        CHECK(std::adjacent_find(l.begin(), l.end()) == l.end());
        CHECK(l.back() == death_bound(n0, B));
        for (Value k = 1; k <= B; ++k) CHECK(l[k - 1] == n0 + k * B - k * (k - 1) / 2);
      }
    CHECK_THROWS_AS(death_bound(2, 1), InputError);
    CHECK_THROWS_AS(death_bound(5, 6), InputError);
  }

  TEST_CASE("exhaustive search against a plain brute force") {
    for (Index n0 = 4; n0 <= 8; ++n0) {
      const auto rep = exhaustive_negext(n0);
      const auto ref = brute(static_cast<int>(n0));
      CHECK(rep.D_comp == ref.best);
      CHECK(rep.N_D == ref.count);
      CHECK(rep.B_comp == ref.by_b.rbegin()->first);
      for (const auto& [b, c] : ref.by_b) CHECK(rep.maximizer_B.at(b) == c);
      long long fact = 1;
      for (Index k = 2; k <= n0; ++k) fact *= k;
      CHECK(rep.sequences == fact);
    }
  }

  TEST_CASE("known columns") {
    auto r = exhaustive_negext(4);
    CHECK(negext_csv_row(r) == "4,3,7,10,2");
    r = exhaustive_negext(5);
    CHECK(r.maximizer_B == std::map<Value, BigInt>{{3, 6}, {4, 8}});
    CHECK(r.B_comp == 4);
    r = exhaustive_negext(9);
    CHECK(r.B_comp == 8);
    CHECK(r.D_comp == 37);
    CHECK(r.N_D == 280);
  }

  TEST_CASE("report invariants") {
    for (Index n0 = 4; n0 <= 9; ++n0) {
      const auto r = exhaustive_negext(n0, {3, false});
      CHECK(r.D_comp <= r.D_formula);
      CHECK(r.B_comp <= n0 - 1);
      CHECK(r.above_index_deaths == 0);
      CHECK(r.bound_violations == 0);
    }
  }

  TEST_CASE("worker count does not change the result") {
    const auto a = exhaustive_negext(8, {1, false});
    const auto b = exhaustive_negext(8, {4, false});
    CHECK(negext_csv_row(a) == negext_csv_row(b));
    CHECK(a.maximizer_B == b.maximizer_B);
  }

  TEST_CASE("range and opt-in checks") {
    CHECK_THROWS_AS(exhaustive_negext(3), InputError);
    CHECK_THROWS_AS(exhaustive_negext(13, {1, true}), InputError);
    CHECK_THROWS_AS(exhaustive_negext(11), InputError);
  }

  TEST_CASE("a more negative tail can die later than the all -1 tail") {
    const QSeq q0({1, 2, 3, 4, 5, 6, 2});
    const auto minus_one = extend_with_tail(q0, [](Index) { return -1; });
    const auto mixed = extend_with_tail(q0, [](Index n) { return n == 9 ? -2 : -1; });
    CHECK(minus_one.index == 11);
    CHECK(mixed.index == 12);
  }

  TEST_CASE("arbitrary tails <= -1 still die by D(n0, B)") {
    SeededSource rng(99);
    const Index n0 = 6;
    std::vector<Value> q{1};
    std::function<void()> rec = [&] {
      if (static_cast<Index>(q.size()) == n0) {
        const Value B = *std::max_element(q.begin(), q.end());
        for (int t = 0; t < 20; ++t) {
          const auto d = extend_with_tail(QSeq(q), [&](Index) { return -rng.uniform(1, 4); });
          CHECK(d.index <= death_bound(n0, B));
          CHECK(d.kind == DeathKind::BelowOne);
        }
        return;
      }
      const auto i = static_cast<Value>(q.size()) + 1;
      for (Value v = 1; v <= i; ++v) {
        q.push_back(v);
        rec();
        q.pop_back();
      }
    };
    rec();
  }
}
