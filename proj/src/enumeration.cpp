#include "gyroloop/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gyroloop/morphisms.hpp"

namespace gyroloop {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first completion of a normalized partial table. Cells are filled in
// row-major order; row/column availability is tracked in bitsets, and two
// reverse indexes (value -> column within a row, value -> row within a
// column) make the incremental left Bol checks O(n) per assignment.
class TableSearch {
 public:
  TableSearch(int n, bool check_bol)
      : n_(n), check_bol_(check_bol),
        cells_(static_cast<size_t>(n) * n, int8_t{-1}),
        row_used_(static_cast<size_t>(n), 0),
        col_used_(static_cast<size_t>(n), 0),
        row_where_(static_cast<size_t>(n) * n, int8_t{-1}),
        col_where_(static_cast<size_t>(n) * n, int8_t{-1}) {
    for (int j = 0; j < n_; ++j) place(0, j, j);
    for (int i = 1; i < n_; ++i) place(i, 0, i);
  }

  // Applies one fill-in; callers guarantee Latin feasibility.
  void place(int r, int c, int v) {
    cells_[idx(r, c)] = static_cast<int8_t>(v);
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
    row_where_[idx(r, v)] = static_cast<int8_t>(c);
    col_where_[idx(c, v)] = static_cast<int8_t>(r);
  }

  void unplace(int r, int c, int v) {
    cells_[idx(r, c)] = -1;
    row_used_[r] &= ~(1u << v);
    col_used_[c] &= ~(1u << v);
    row_where_[idx(r, v)] = -1;
    col_where_[idx(c, v)] = -1;
  }

  std::uint32_t candidates(int r, int c) const {
    return ~(row_used_[r] | col_used_[c]) & ((1u << n_) - 1u);
  }

  int at(int r, int c) const { return cells_[idx(r, c)]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_),
                                      std::vector<int>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
  }

  // True when every left Bol triple whose six lookups became fully known
  // through cell (r,c) still holds. The six roles a cell can play in
  // a*(b*(a*x)) == (a*(b*a))*x drive the scan.
  bool bol_consistent_after(int r, int c) {
    // (a,x) = (r,c): t1 just became the new value.
    for (int b = 0; b < n_; ++b)
      if (!triple_holds(r, b, c)) return false;
    // (b,t1) = (r,c): find (a,x) with a*x == c.
    for (int a = 0; a < n_; ++a) {
      const int x = row_where_[idx(a, c)];
      if (x >= 0 && !triple_holds(a, r, x)) return false;
    }
    // (a,t2) = (r,c): need b with b*t1 == c and x with r*x == t1.
    for (int b = 0; b < n_; ++b) {
      const int t1 = row_where_[idx(b, c)];
      if (t1 < 0) continue;
      const int x = row_where_[idx(r, t1)];
      if (x >= 0 && !triple_holds(r, b, x)) return false;
    }
    // (b,a) = (r,c): u1 just became v.
    for (int x = 0; x < n_; ++x)
      if (!triple_holds(c, r, x)) return false;
    // (a,u1) = (r,c): b solves b*r == c.
    {
      const int b = col_where_[idx(r, c)];
      if (b >= 0)
        for (int x = 0; x < n_; ++x)
          if (!triple_holds(r, b, x)) return false;
    }
    // (u2,x) = (r,c): pairs (a,b) with a*(b*a) == r.
    for (int a = 0; a < n_; ++a) {
      const int u1 = row_where_[idx(a, r)];
      if (u1 < 0) continue;
      const int b = col_where_[idx(a, u1)];
      if (b >= 0 && !triple_holds(a, b, c)) return false;
    }
    return true;
  }

  bool triple_holds(int a, int b, int x) const {
    const int t1 = at(a, x);
    if (t1 < 0) return true;
    const int t2 = at(b, t1);
    if (t2 < 0) return true;
    const int lhs = at(a, t2);
    if (lhs < 0) return true;
    const int u1 = at(b, a);
    if (u1 < 0) return true;
    const int u2 = at(a, u1);
    if (u2 < 0) return true;
    const int rhs = at(u2, x);
    if (rhs < 0) return true;
    return lhs == rhs;
  }

  bool check_bol() const { return check_bol_; }
  int order() const { return n_; }

 private:
  size_t idx(int r, int c) const { return static_cast<size_t>(r) * n_ + c; }

  int n_;
  bool check_bol_;
  std::vector<int8_t> cells_;
  std::vector<std::uint32_t> row_used_, col_used_;
  std::vector<int8_t> row_where_, col_where_;
};

struct SearchLimits {
  Clock::time_point deadline{};
  bool bounded = false;
  std::atomic<bool>* aborted = nullptr;
  std::uint64_t ticks = 0;

  bool out_of_time() {
    if (aborted == nullptr) return false;
    if (aborted->load(std::memory_order_relaxed)) return true;
    if (!bounded) return false;
    if ((++ticks & 0xfff) != 0) return false;
    if (Clock::now() >= deadline) {
      aborted->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

// Runs the DFS over all cells at linear position >= pos (row-major, skipping
// preset row 0 / column 0 cells) and hands each completed table to sink.
template <typename Sink>
void dfs(TableSearch& st, int pos, SearchLimits& limits, Sink&& sink) {
  const int n = st.order();
  const int total = (n - 1) * (n - 1);
  if (pos == total) {
    sink(st);
    return;
  }
  if (limits.out_of_time()) return;
  const int r = 1 + pos / (n - 1);
  const int c = 1 + pos % (n - 1);
  std::uint32_t cand = st.candidates(r, c);
  while (cand) {
    const int v = __builtin_ctz(cand);
    cand &= cand - 1;
    st.place(r, c, v);
    if (!st.check_bol() || st.bol_consistent_after(r, c))
      dfs(st, pos + 1, limits, sink);
    st.unplace(r, c, v);
  }
}

struct Collected {
  std::map<std::vector<std::uint8_t>, CayleyTable> by_key;

  // Normalized search tables have their identity at 0.
  void admit(const TableSearch& st, bool non_assoc_only) {
    CayleyTable table = CayleyTable::from_rows(st.rows());
    if (non_assoc_only && is_associative(table)) return;
    CayleyTable canon = canonical_table(table, 0);
    std::vector<std::uint8_t> key = canonical_key(canon, 0);
    by_key.emplace(std::move(key), std::move(canon));
  }
};

EnumerationResult finish(Collected&& got, bool complete) {
  EnumerationResult out;
  out.complete = complete;
  out.loops.reserve(got.by_key.size());
  for (auto& [key, table] : got.by_key) out.loops.push_back(Loop::from_table(table));
  return out;
}

SearchLimits make_limits(const EnumOptions& opts, std::atomic<bool>& aborted) {
  SearchLimits limits;
  limits.aborted = &aborted;
  if (opts.time_budget_secs > 0) {
    limits.bounded = true;
    limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(opts.time_budget_secs));
  }
  return limits;
}

void check_order(int n) {
  if (n < 1) throw Error("order must be at least 1");
  if (n > 31) throw OrderTooLargeError("orders above 31 are not supported");
}

// All consistent completions of row 1; the parallel split points.
std::vector<std::vector<int>> row_one_seeds(int n, bool check_bol) {
  std::vector<std::vector<int>> seeds;
  if (n == 1) return seeds;
  TableSearch st(n, check_bol);
  std::atomic<bool> aborted{false};
  SearchLimits limits;
  limits.aborted = &aborted;

  // Reuse the DFS machinery restricted to the first n-1 positions.
  const int row_cells = n - 1;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == row_cells) {
      std::vector<int> seed(static_cast<size_t>(row_cells));
      for (int c = 1; c < n; ++c) seed[c - 1] = st.at(1, c);
      seeds.push_back(std::move(seed));
      return;
    }
    const int r = 1, c = 1 + pos;
    std::uint32_t cand = st.candidates(r, c);
    while (cand) {
      const int v = __builtin_ctz(cand);
      cand &= cand - 1;
      st.place(r, c, v);
      if (!check_bol || st.bol_consistent_after(r, c)) self(self, pos + 1);
      st.unplace(r, c, v);
    }
  };
  rec(rec, 0);
  return seeds;
}

}  // namespace

EnumerationResult enumerate_left_bol_serial(int n, const EnumOptions& opts) {
  check_order(n);
  Collected got;
  std::atomic<bool> aborted{false};
  SearchLimits limits = make_limits(opts, aborted);
  TableSearch st(n, true);
  dfs(st, 0, limits, [&](const TableSearch& s) { got.admit(s, opts.non_associative_only); });
  return finish(std::move(got), !aborted.load());
}

EnumerationResult enumerate_left_bol(int n, const EnumOptions& opts) {
#ifndef _OPENMP
  return enumerate_left_bol_serial(n, opts);
#else
  check_order(n);
  if (n <= 4) return enumerate_left_bol_serial(n, opts);

  const std::vector<std::vector<int>> seeds = row_one_seeds(n, true);
  std::atomic<bool> aborted{false};

  std::vector<Collected> per_seed(seeds.size());
  const int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long long i = 0; i < static_cast<long long>(seeds.size()); ++i) {
    if (aborted.load(std::memory_order_relaxed)) continue;
    SearchLimits limits = make_limits(opts, aborted);
    TableSearch st(n, true);
    const auto& seed = seeds[static_cast<size_t>(i)];
    bool ok = true;
    for (int c = 1; c < n && ok; ++c) {
      st.place(1, c, seed[c - 1]);
      ok = st.bol_consistent_after(1, c);
    }
    if (!ok) continue;  // cannot happen: seeds were generated consistently
    dfs(st, n - 1, limits, [&](const TableSearch& s) {
      per_seed[static_cast<size_t>(i)].admit(s, opts.non_associative_only);
    });
  }

  Collected merged;
  for (Collected& part : per_seed)
    for (auto& [key, loop] : part.by_key) merged.by_key.emplace(key, std::move(loop));
  return finish(std::move(merged), !aborted.load());
#endif
}

std::vector<CayleyTable> enumerate_all_loops(int n) {
  if (n < 1) throw Error("order must be at least 1");
  if (n > 6) throw OrderTooLargeError("enumerate_all_loops supports orders up to 6");
  Collected got;
  std::atomic<bool> aborted{false};
  SearchLimits limits;
  limits.aborted = &aborted;
  TableSearch st(n, false);
  std::vector<CayleyTable> out;
  dfs(st, 0, limits, [&](const TableSearch& s) { got.admit(s, false); });
  out.reserve(got.by_key.size());
  for (auto& [key, table] : got.by_key) out.push_back(std::move(table));
  return out;
}

}  // namespace gyroloop
