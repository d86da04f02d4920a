#include <set>
#include <vector>

#include "doctest.h"
#include "nestrec/enumeration.hpp"
#include "oracles.hpp"

using namespace nestrec;
using V = std::vector<Value>;

namespace {
V as_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("F_3 is the six sequences of the worked example") {
    std::set<V> got;
    for_each_F(3, [&](const FSeq& f) { got.insert(as_vec(f.terms())); });
    CHECK(got == std::set<V>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  }

  TEST_CASE("F_1 and lazy iteration") {
    FEnumerator it(1);
    auto f = it.next();
    REQUIRE(f);
    CHECK(as_vec(f->terms()) == V{0});
    CHECK_FALSE(it.next());
    CHECK_FALSE(it.next());
  }

  TEST_CASE("|F_n| = n!, each member once, lexicographic in q") {
    for (Index n = 1; n <= 8; ++n) {
      std::set<V> seen;
      V prev_q;
      FEnumerator it(n);
      long long count = 0;
      while (auto f = it.next()) {
        ++count;
        CHECK(seen.insert(as_vec(f->terms())).second);
        if (!prev_q.empty()) CHECK(prev_q < it.current_q());
        prev_q = it.current_q();
      }
      CHECK(count == oracle::factorial(static_cast<int>(n)));
    }
  }

  TEST_CASE("limit is explicit") {
    CHECK_THROWS_AS(FEnumerator(11), InputError);
    CHECK_NOTHROW(FEnumerator(11, 11));
  }

  TEST_CASE("membership") {
    CHECK(is_member_F(V{0, 1, 1, -1}));
    CHECK_FALSE(is_member_F(V{0, 1, 2, -1}));
    CHECK(is_member_F(V{0}));
    CHECK_FALSE(is_member_F(V{1, 0}));
    CHECK_FALSE(is_member_F(V{}));
  }

  TEST_CASE("potential count") {
    CHECK(potential_count(3) == 6);
    CHECK(potential_count(4) == 30);
    for (Index n = 3; n <= 30; ++n) CHECK(potential_count(n) == potential_count_by_widths(n));
    long long f3 = 0;
    for_each_F(3, [&](const FSeq&) { ++f3; });
    CHECK(potential_count(3) == f3);
    CHECK_THROWS_AS(potential_count(2), InputError);
  }

  TEST_CASE("gap between phi(n) and n! grows") {
    double prev = 0;
    for (Index n = 4; n <= 40; ++n) {
      const BigInt phi = potential_count(n);
      const BigInt fact = factorial(static_cast<unsigned>(n));
      CHECK(phi > fact);
      const double ratio = phi.convert_to<double>() / fact.convert_to<double>();
      CHECK(ratio > prev);
      prev = ratio;
    }
  }

  TEST_CASE("every potential sequence is classified correctly, n <= 6") {
    for (Index n = 1; n <= 6; ++n) {
      std::set<V> members;
      for_each_F(n, [&](const FSeq& f) { members.insert(as_vec(f.terms())); });
      long long potentials = 0;
      for_each_potential(n, [&](std::span<const Value> f) {
        ++potentials;
        const auto [q, death] = oracle::run_q({f.begin(), f.end()});
        CHECK(is_member_F(f) == (death == 0));
        CHECK(members.count(as_vec(f)) == (death == 0 ? 1u : 0u));
      });
      CHECK(BigInt(potentials) == potential_count_by_widths(n));
    }
  }

  TEST_CASE("potential sequences negative from index 4 on") {
    // 6 (n-3)! in total: (n-3)! negative tails times 6 choices of f(2), f(3).
    for (Index n = 4; n <= 9; ++n) {
      long long all = 0;
      for_each_potential(n, [&](std::span<const Value> f) {
        bool neg = true;
        for (std::size_t i = 3; i < f.size() && neg; ++i) neg = f[i] < 0;
        all += neg;
      });
      CHECK(all == 6 * oracle::factorial(static_cast<int>(n - 3)));
    }
  }

  TEST_CASE("tree structure") {
    const FTreeNode root = build_tree(4);
    CHECK(root.value == 0);
    CHECK(root.depth == 1);
    std::multiset<Value> leaves;
    std::function<void(const FTreeNode&, V&)> walk = [&](const FTreeNode& node, V& path) {
      path.push_back(node.value);
      if (node.depth == 4) {
        CHECK(node.children.empty());
        CHECK(is_member_F(path));
        leaves.insert(node.value);
      } else {
        CHECK(static_cast<Index>(node.children.size()) == node.depth + 1);
        CHECK(next_f_range(FSeq(path)) == ValueRange{node.children.front().value, node.children.back().value});
        for (const auto& c : node.children) walk(c, path);
      }
      path.pop_back();
    };
    V path;
    walk(root, path);
    CHECK(leaves.size() == 24);
    std::multiset<Value> expect;
    for_each_F(4, [&](const FSeq& f) { expect.insert(f(4)); });
    CHECK(leaves == expect);
  }

  TEST_CASE("DOT export") {
    const std::string one = export_tree_dot(1);
    CHECK(one.find("n0 [label=\"0\"]") != std::string::npos);
    CHECK(one.find("->") == std::string::npos);
    const std::string two = export_tree_dot(2);
    CHECK(two.find("n1 [label=\"0\"]") != std::string::npos);
    CHECK(two.find("n2 [label=\"1\"]") != std::string::npos);
    const std::string four = export_tree_dot(4);
    std::size_t edges = 0;
    for (std::size_t p = 0; (p = four.find("->", p)) != std::string::npos; ++p) ++edges;
    CHECK(edges == 2 + 6 + 24);
    CHECK(four.rfind("// nestrec f-tree v1", 0) == 0);
    CHECK_THROWS_AS(export_tree_dot(7), InputError);
  }

  TEST_CASE("counts CSV") {
    CHECK(counts_csv(4) == "n,n_factorial,phi\n3,6,6\n4,24,30\n");
    CHECK(counts_csv(3, false) == "3,6,6\n");
  }
}
