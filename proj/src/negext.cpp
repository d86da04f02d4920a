#include "nestrec/negext.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

namespace nestrec {

Index death_bound(Index n0, Value B) {
  if (n0 < 3) throw InputError("n0 must be >= 3");
  if (B < 1 || B > n0) throw InputError("B must lie in 1..n0");
  return n0 + B * (B + 1) / 2;
}

std::vector<Index> nk_ladder(Index n0, Value B) {
  death_bound(n0, B);
  std::vector<Index> ladder;
  Index n = n0;
  for (Value k = 1; k <= B; ++k) {
    n += B - (k - 1);
    ladder.push_back(n);
  }
  return ladder;
}

Death extend_with_tail(const QSeq& q0, const std::function<Value(Index)>& tail, Index guard) {
  std::vector<Value> q(q0.terms().begin(), q0.terms().end());
  for (Index n = q0.size() + 1; n <= guard; ++n) {
    const Value candidate =
        detail::checked_add(q[static_cast<std::size_t>(n - q.back() - 1)], tail(n));
    if (candidate < 1) return {n, DeathKind::BelowOne, candidate};
    if (candidate > n) return {n, DeathKind::AboveIndex, candidate};
    q.push_back(candidate);
  }
  throw std::logic_error("extension survived past the guard");
}

namespace {

constexpr Index kMaxN0 = 12;
// D(12, 12) = 90 bounds every death index.
constexpr std::size_t kSlots = 128;

struct Partial {
  Index best = 0;
  std::uint64_t count = 0;
  std::array<std::uint64_t, kMaxN0 + 1> by_b{};
  std::uint64_t sequences = 0;
  std::uint64_t above_index = 0;
  std::uint64_t violations = 0;

  void record(Index d, Value b, std::uint64_t times = 1) {
    if (d > best) {
      best = d;
      count = 0;
      by_b.fill(0);
    }
    if (d == best) {
      count += times;
      by_b[static_cast<std::size_t>(b)] += times;
    }
  }

  void merge(const Partial& o) {
    if (o.best > best) {
      best = o.best;
      count = o.count;
      by_b = o.by_b;
    } else if (o.best == best) {
      count += o.count;
      for (std::size_t i = 0; i < by_b.size(); ++i) by_b[i] += o.by_b[i];
    }
    sequences += o.sequences;
    above_index += o.above_index;
    violations += o.violations;
  }
};

// DFS over q(i) in 1..i. Slots past n0 are scratch for the -1 tail.
class Searcher {
 public:
  explicit Searcher(Index n0) : n0_(n0) { q_[1] = 1; }

  Partial run(Value q2, Value q3) {
    q_[2] = q2;
    q_[3] = q3;
    dfs(4, std::max<Value>({1, q2, q3}));
    return out_;
  }

 private:
  void dfs(Index i, Value b) {
    if (i > n0_) {
      leaf(b);
      return;
    }
    for (Value v = 1; v <= i; ++v) {
      q_[static_cast<std::size_t>(i)] = v;
      dfs(i + 1, v > b ? v : b);
    }
  }

  void leaf(Value b) {
    ++out_.sequences;
    Index n = n0_ + 1;
    for (;; ++n) {
      const Value v = q_[static_cast<std::size_t>(n - q_[static_cast<std::size_t>(n - 1)])] - 1;
      if (v < 1) break;
      if (v > n) {
        ++out_.above_index;
        break;
      }
      q_[static_cast<std::size_t>(n)] = v;
    }
    if (n > n0_ + b * (b + 1) / 2) ++out_.violations;
    out_.record(n, b);
  }

  Index n0_;
  std::array<Value, kSlots> q_{};
  Partial out_;
};

}  // namespace

NegExtReport exhaustive_negext(Index n0, const NegExtOptions& options) {
  if (n0 < 4 || n0 > kMaxN0) throw InputError("n0 must lie in 4..12");
  if (n0 >= 11 && !options.allow_long)
    throw InputError("n0 >= 11 is a long run; opt in explicitly");

  std::vector<std::pair<Value, Value>> tasks;
  for (Value q2 = 1; q2 <= 2; ++q2)
    for (Value q3 = 1; q3 <= 3; ++q3) tasks.emplace_back(q2, q3);

  std::vector<Partial> partials(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
      partials[t] = Searcher(n0).run(tasks[t].first, tasks[t].second);
  };
  const unsigned jobs = std::clamp<unsigned>(options.jobs, 1, static_cast<unsigned>(tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  Partial total;
  for (const auto& p : partials) total.merge(p);

  NegExtReport report;
  report.n0 = n0;
  report.D_comp = total.best;
  report.N_D = total.count;
  for (std::size_t b = 0; b < total.by_b.size(); ++b) {
    if (total.by_b[b] == 0) continue;
    report.maximizer_B[static_cast<Value>(b)] = total.by_b[b];
    report.B_comp = static_cast<Value>(b);
  }
  report.D_formula = death_bound(n0, report.B_comp);
  report.sequences = total.sequences;
  report.above_index_deaths = total.above_index;
  report.bound_violations = total.violations;
  return report;
}

std::string negext_csv_header() { return "n0,B_comp,D_comp,D_formula,N_D"; }

std::string negext_csv_row(const NegExtReport& r) {
  std::ostringstream out;
  out << r.n0 << ',' << r.B_comp << ',' << r.D_comp << ',' << r.D_formula << ',' << r.N_D;
  return out.str();
}

}  // namespace nestrec
