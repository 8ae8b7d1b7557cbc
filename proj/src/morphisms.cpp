#include "gyroloop/morphisms.hpp"

#include <algorithm>

namespace gyroloop {

int left_power_order(const Loop& loop, int a) {
  const int e = loop.identity();
  int x = a;
  int k = 1;
  while (x != e) {
    x = loop.mul_unchecked(a, x);
    ++k;
  }
  return k;
}

std::vector<std::array<int, 3>> element_signatures(const Loop& loop) {
  const int n = loop.order();
  std::vector<std::array<int, 3>> sig(static_cast<size_t>(n));
  std::vector<int> lord(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) lord[a] = left_power_order(loop, a);
  for (int a = 0; a < n; ++a) {
    int fix = 0;
    for (int j = 0; j < n; ++j)
      if (loop.mul_unchecked(a, j) == j) ++fix;
    sig[a] = {lord[a], fix, lord[loop.mul_unchecked(a, a)]};
  }
  return sig;
}

IsoInvariant iso_invariant(const Loop& loop) {
  const int n = loop.order();
  IsoInvariant inv;
  inv.order = n;
  auto sig = element_signatures(loop);
  for (int a = 0; a < n; ++a) {
    inv.left_order_spectrum.push_back(sig[a][0]);
    inv.row_fixpoint_counts.push_back(sig[a][1]);
    inv.diagonal_left_orders.push_back(sig[a][2]);
  }
  std::sort(inv.left_order_spectrum.begin(), inv.left_order_spectrum.end());
  std::sort(inv.row_fixpoint_counts.begin(), inv.row_fixpoint_counts.end());
  std::sort(inv.diagonal_left_orders.begin(), inv.diagonal_left_orders.end());
  return inv;
}

namespace {

// Backtracking homomorphism search shared by automorphism_group and
// are_isomorphic. Propagates forced images: whenever x and y are mapped,
// x*y must map to phi(x)*phi(y).
class IsoSearch {
 public:
  IsoSearch(const Loop& lhs, const Loop& rhs, bool collect_all)
      : lhs_(lhs), rhs_(rhs), collect_all_(collect_all), n_(lhs.order()) {
    sig_lhs_ = element_signatures(lhs);
    sig_rhs_ = element_signatures(rhs);
  }

  std::vector<Perm> run() {
    if (lhs_.order() != rhs_.order()) return {};
    phi_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), 0);
    if (sig_lhs_[lhs_.identity()] != sig_rhs_[rhs_.identity()]) return {};
    phi_[lhs_.identity()] = rhs_.identity();
    used_[rhs_.identity()] = 1;
    extend();
    return std::move(found_);
  }

 private:
  // Applies the product constraints until a fixed point; records assignments
  // in undo. Returns false on contradiction.
  bool propagate(std::vector<int>& undo) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n_; ++x) {
        if (phi_[x] < 0) continue;
        for (int y = 0; y < n_; ++y) {
          if (phi_[y] < 0) continue;
          const int z = lhs_.mul_unchecked(x, y);
          const int w = rhs_.mul_unchecked(phi_[x], phi_[y]);
          if (phi_[z] >= 0) {
            if (phi_[z] != w) return false;
          } else {
            if (used_[w] || sig_lhs_[z] != sig_rhs_[w]) return false;
            phi_[z] = w;
            used_[w] = 1;
            undo.push_back(z);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool complete() const {
    for (int x = 0; x < n_; ++x)
      if (phi_[x] < 0) return false;
    return true;
  }

  bool verify() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (phi_[lhs_.mul_unchecked(x, y)] !=
            rhs_.mul_unchecked(phi_[x], phi_[y]))
          return false;
    return true;
  }

  // Returns true when the search should stop (first witness found and not
  // collecting all).
  bool extend() {
    std::vector<int> undo;
    if (!propagate(undo)) {
      unwind(undo);
      return false;
    }
    if (complete()) {
      bool stop = false;
      if (verify()) {
        found_.push_back(Perm::from_map(phi_));
        stop = !collect_all_;
      }
      unwind(undo);
      return stop;
    }
    int x = 0;
    while (phi_[x] >= 0) ++x;
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || sig_lhs_[x] != sig_rhs_[w]) continue;
      phi_[x] = w;
      used_[w] = 1;
      const bool stop = extend();
      phi_[x] = -1;
      used_[w] = 0;
      if (stop) {
        unwind(undo);
        return true;
      }
    }
    unwind(undo);
    return false;
  }

  void unwind(const std::vector<int>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      used_[phi_[*it]] = 0;
      phi_[*it] = -1;
    }
  }

  const Loop& lhs_;
  const Loop& rhs_;
  bool collect_all_;
  int n_;
  std::vector<std::array<int, 3>> sig_lhs_, sig_rhs_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<Perm> found_;
};

}  // namespace

std::vector<Perm> automorphism_group(const Loop& loop) {
  IsoSearch search(loop, loop, true);
  std::vector<Perm> out = search.run();
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Perm> are_isomorphic(const Loop& lhs, const Loop& rhs) {
  if (lhs.order() != rhs.order()) return std::nullopt;
  if (!(iso_invariant(lhs) == iso_invariant(rhs))) return std::nullopt;
  IsoSearch search(lhs, rhs, false);
  std::vector<Perm> out = search.run();
  if (out.empty()) return std::nullopt;
  return out.front();
}

namespace {

// Branch-and-bound search for the lexicographically smallest relabeled table.
// Labels are assigned on demand while walking cells in row-major order; when a
// cell's value has no label yet, the smallest free label is forced (any other
// choice is lexicographically worse at this first undetermined position).
class CanonSearch {
 public:
  CanonSearch(const CayleyTable& table, int identity)
      : table_(table), identity_(identity), n_(table.order()) {}

  std::vector<std::uint8_t> run() {
    p_.assign(static_cast<size_t>(n_), -1);
    q_.assign(static_cast<size_t>(n_), -1);
    p_[identity_] = 0;
    q_[0] = identity_;
    cur_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int j = 0; j < n_; ++j) cur_[j] = static_cast<std::uint8_t>(j);
    have_best_ = false;
    walk(n_, 0);  // row 0 and column 0 are forced; start at cell (1,0)
    return best_;
  }

 private:
  // cmp: 0 = prefix equal to best, 1 = strictly smaller somewhere.
  void walk(int pos, int cmp) {
    if (pos == n_ * n_) {
      if (!have_best_ || cmp == 1) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    const int r = pos / n_;
    const int c = pos % n_;

    if (c == 0) {
      emit(pos, r, cmp);
      return;
    }
    if (q_[c] < 0) {
      branch_column(pos, cmp);
      return;
    }
    const int v = table_.at(q_[r], q_[c]);
    if (p_[v] >= 0) {
      emit(pos, p_[v], cmp);
      return;
    }
    const int lab = next_free_label();
    p_[v] = lab;
    q_[lab] = v;
    emit(pos, lab, cmp);
    p_[v] = -1;
    q_[lab] = -1;
  }

  void emit(int pos, int value, int cmp) {
    if (cmp == 0 && have_best_) {
      const std::uint8_t b = best_[pos];
      if (static_cast<std::uint8_t>(value) > b) return;  // prune
      if (static_cast<std::uint8_t>(value) < b) cmp = 1;
    }
    cur_[pos] = static_cast<std::uint8_t>(value);
    walk(pos + 1, cmp);
  }

  void branch_column(int pos, int cmp) {
    const int r = pos / n_;
    const int c = pos % n_;
    // Candidates ordered by the value this cell would take, ties by element.
    // At cell (1,1) the row element is the candidate itself.
    std::vector<std::pair<int, int>> cands;
    const int mf = next_free_label_excluding(c);
    for (int x = 0; x < n_; ++x) {
      if (p_[x] >= 0) continue;
      const int v = table_.at(q_[r] >= 0 ? q_[r] : x, x);
      int val;
      if (v == x)
        val = c;
      else if (p_[v] >= 0)
        val = p_[v];
      else
        val = mf;
      cands.emplace_back(val, x);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [val, x] : cands) {
      q_[c] = x;
      p_[x] = c;
      walk(pos, cmp);
      q_[c] = -1;
      p_[x] = -1;
    }
  }

  int next_free_label() const {
    for (int l = 0; l < n_; ++l)
      if (q_[l] < 0) return l;
    return n_;
  }

  int next_free_label_excluding(int skip) const {
    for (int l = 0; l < n_; ++l)
      if (l != skip && q_[l] < 0) return l;
    return n_;
  }

  const CayleyTable& table_;
  int identity_;
  int n_;
  std::vector<int> p_, q_;
  std::vector<std::uint8_t> cur_, best_;
  bool have_best_ = false;
};

}  // namespace

CayleyTable relabel(const CayleyTable& table, const Perm& p) {
  const int n = table.order();
  if (p.size() != n) throw SizeMismatchError("relabel: permutation size mismatch");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[p.apply(i)][p.apply(j)] = p.apply(table.at(i, j));
  return CayleyTable::from_rows(rows);
}

CayleyTable canonical_table(const CayleyTable& table, int identity) {
  CanonSearch search(table, identity);
  const std::vector<std::uint8_t> cells = search.run();
  const int n = table.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = cells[static_cast<size_t>(i) * n + j];
  return CayleyTable::from_rows(rows);
}

Loop canonical_form(const Loop& loop) {
  return Loop::from_table(canonical_table(loop.table(), loop.identity()));
}

std::vector<std::uint8_t> canonical_key(const CayleyTable& table, int identity) {
  CanonSearch search(table, identity);
  std::vector<std::uint8_t> cells = search.run();
  std::vector<std::uint8_t> key;
  key.reserve(cells.size() + 1);
  key.push_back(static_cast<std::uint8_t>(table.order()));
  key.insert(key.end(), cells.begin(), cells.end());
  return key;
}

std::vector<std::uint8_t> canonical_key(const Loop& loop) {
  return canonical_key(loop.table(), loop.identity());
}

std::string key_digest(const std::vector<std::uint8_t>& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : key) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Loop normalize_identity(const Loop& loop) {
  const int e = loop.identity();
  if (e == 0) return loop;
  std::vector<int> swap_map(static_cast<size_t>(loop.order()));
  for (int i = 0; i < loop.order(); ++i) swap_map[i] = i;
  swap_map[0] = e;
  swap_map[e] = 0;
  return Loop::from_table(relabel(loop.table(), Perm::from_map(swap_map)));
}

}  // namespace gyroloop
