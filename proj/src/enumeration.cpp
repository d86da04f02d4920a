#include "nestrec/enumeration.hpp"

#include <sstream>

namespace nestrec {

FEnumerator::FEnumerator(Index n, Index limit) : n_(n) {
  if (n < 1) throw InputError("n must be positive");
  if (n > limit)
    throw InputError("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                     std::to_string(limit) + "; raise the limit explicitly");
  q_.assign(static_cast<std::size_t>(n), 1);
}

std::optional<FSeq> FEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Odometer: position i (0-based) ranges over 1..i+1.
    auto i = static_cast<std::size_t>(n_);
    while (i-- > 1) {
      if (q_[i] < static_cast<Value>(i) + 1) {
        ++q_[i];
        break;
      }
      q_[i] = 1;
    }
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  return f_from_q(QSeq(q_));
}

void for_each_F(Index n, const std::function<void(const FSeq&)>& fn, Index limit) {
  FEnumerator it(n, limit);
  while (auto f = it.next()) fn(*f);
}

void for_each_potential(Index n, const std::function<void(std::span<const Value>)>& fn) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<Value> f(static_cast<std::size_t>(n));
  std::function<void(Index)> rec = [&](Index i) {
    if (i > n) {
      fn(f);
      return;
    }
    const ValueRange r = f_bounds(i);
    for (Value v = r.low; v <= r.high; ++v) {
      f[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
}

bool is_member_F(std::span<const Value> f) {
  if (f.empty() || f[0] != 0) return false;
  return q_from_f_fn([&](Index i) { return f[static_cast<std::size_t>(i - 1)]; },
                     static_cast<Index>(f.size()))
      .survived();
}

bool is_member_F(const FSeq& f) { return is_member_F(f.terms()); }

BigInt potential_count(Index n) {
  if (n < 3) throw InputError("phi(n) needs n >= 3");
  const BigInt num = factorial(static_cast<unsigned>(2 * n - 3));
  const BigInt den = (BigInt(1) << static_cast<unsigned>(n - 3)) * factorial(static_cast<unsigned>(n - 2));
  return num / den;
}

BigInt potential_count_by_widths(Index n) {
  if (n < 1) throw InputError("n must be positive");
  BigInt p = 1;
  for (Index i = 1; i <= n; ++i) p *= f_bounds(i).width();
  return p;
}

namespace {

void grow(FTreeNode& node, std::vector<Value>& q, Index n) {
  const auto depth = static_cast<Index>(q.size());
  if (depth == n) return;
  const Index next = depth + 1;
  const Value nested = q[static_cast<std::size_t>(next - q.back() - 1)];
  for (Value v = 1; v <= next; ++v) {
    q.push_back(v);
    FTreeNode child{v - nested, next, {}};
    grow(child, q, n);
    node.children.push_back(std::move(child));
    q.pop_back();
  }
}

void emit(const FTreeNode& node, std::size_t& next_id, std::size_t id, std::ostringstream& out) {
  out << "  n" << id << " [label=\"" << node.value << "\"];\n";
  for (const auto& child : node.children) {
    const std::size_t cid = next_id++;
    out << "  n" << id << " -> n" << cid << ";\n";
    emit(child, next_id, cid, out);
  }
}

}  // namespace

FTreeNode build_tree(Index n) {
  if (n < 1 || n > 8) throw InputError("tree depth must lie in 1..8");
  FTreeNode root{0, 1, {}};
  std::vector<Value> q{1};
  grow(root, q, n);
  return root;
}

std::string export_tree_dot(Index n) {
  if (n < 1 || n > 6) throw InputError("DOT export supports n in 1..6");
  const FTreeNode root = build_tree(n);
  std::ostringstream out;
  out << "// nestrec f-tree v1, n=" << n << ", children ordered by q\n";
  out << "digraph F" << n << " {\n";
  std::size_t next_id = 1;
  emit(root, next_id, 0, out);
  out << "}\n";
  return out.str();
}

std::string counts_csv(Index n_max, bool header) {
  if (n_max < 3) throw InputError("n_max must be >= 3");
  std::ostringstream out;
  if (header) out << "n,n_factorial,phi\n";
  for (Index n = 3; n <= n_max; ++n)
    out << n << ',' << factorial(static_cast<unsigned>(n)) << ',' << potential_count(n) << '\n';
  return out.str();
}

}  // namespace nestrec
