#include "nestrec/hofstadter.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace nestrec {
namespace {

ModMRun run(std::optional<Value> M, Index n_max, bool keep_terms) {
  if (n_max < 2) throw InputError("n_max must be >= 2");
  if (n_max > std::numeric_limits<std::uint32_t>::max()) throw InputError("n_max too large");
  std::vector<std::uint32_t> q(static_cast<std::size_t>(n_max) + 1);
  q[1] = q[2] = 1;
  ModMRun out;
  out.M = M;
  out.horizon = n_max;
  auto bad = [](Index n, Index j) -> std::optional<Death> {
    if (j < 1) return Death{n, DeathKind::BelowOne, j};
    if (j > n - 1) return Death{n, DeathKind::AboveIndex, j};
    return std::nullopt;
  };
  Index n = 3;
  for (; n <= n_max; ++n) {
    const Index i = n - q[static_cast<std::size_t>(n - 1)];
    const Index j = n - q[static_cast<std::size_t>(n - 2)];
    if ((out.death = bad(n, i)) || (out.death = bad(n, j))) break;
    Value second = q[static_cast<std::size_t>(j)];
    if (M) second %= *M;
    const Value v = q[static_cast<std::size_t>(i)] + second;
    if (v > std::numeric_limits<std::uint32_t>::max()) throw OverflowError("q exceeds 32 bits");
    q[static_cast<std::size_t>(n)] = static_cast<std::uint32_t>(v);
  }
  out.survived = !out.death;
  if (keep_terms) out.terms.assign(q.begin() + 1, q.begin() + n);
  return out;
}

}  // namespace

ModMRun hofstadter_q(Index n_max, bool keep_terms) { return run(std::nullopt, n_max, keep_terms); }

ModMRun mod_m_run(Value M, Index n_max, bool keep_terms) {
  if (M < 3) throw InputError("M must be >= 3");
  return run(M, n_max, keep_terms);
}

std::vector<ModMRun> mod_m_scan(Value m_lo, Value m_hi, Index n_max, unsigned jobs) {
  if (m_lo < 3 || m_hi < m_lo) throw InputError("need 3 <= m_lo <= m_hi");
  std::vector<ModMRun> runs(static_cast<std::size_t>(m_hi - m_lo + 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < runs.size();)
      runs[t] = mod_m_run(m_lo + static_cast<Value>(t), n_max, false);
  };
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(runs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  return runs;
}

std::string mod_m_csv(const std::vector<ModMRun>& runs, bool header) {
  std::ostringstream out;
  if (header) out << "M,horizon,survived,death_index\n";
  for (const auto& r : runs) {
    out << (r.M ? std::to_string(*r.M) : "inf") << ',' << r.horizon << ',' << (r.survived ? 1 : 0) << ',';
    if (r.death) out << r.death->index;
    out << '\n';
  }
  return out.str();
}

}  // namespace nestrec
