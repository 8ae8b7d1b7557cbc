#include "gyroloop/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gyroloop {

Perm Perm::identity(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) m[i] = i;
  return Perm(std::move(m));
}

Perm Perm::from_map(std::vector<int> map) {
  const int n = static_cast<int>(map.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : map) {
    if (v < 0 || v >= n) throw LabelOutOfRangeError(v);
    if (seen[v]) throw RepeatedElementError(v);
    seen[v] = 1;
  }
  return Perm(std::move(map));
}

Perm Perm::inverse() const {
  std::vector<int> m(map_.size());
  for (int i = 0; i < size(); ++i) m[map_[i]] = i;
  return Perm(std::move(m));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size())
    throw SizeMismatchError("compose: sizes " + std::to_string(p.size()) +
                            " vs " + std::to_string(q.size()));
  std::vector<int> m(static_cast<size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) m[x] = p.apply(q.apply(x));
  return Perm::from_map(std::move(m));
}

Perm parse_cycles(const std::string& s, int n, bool one_based) {
  std::vector<int> map(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) map[i] = i;
  std::vector<char> used(static_cast<size_t>(n), 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  while (pos < s.size()) {
    if (s[pos] != '(') throw MalformedCycleError("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      if (!cycle.empty()) {
        if (s[pos] != ',') throw MalformedCycleError("expected ',' at offset " + std::to_string(pos));
        ++pos;
        skip_ws();
      }
      bool any_digit = false;
      int lab = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        lab = lab * 10 + (s[pos] - '0');
        ++pos;
        any_digit = true;
      }
      if (!any_digit) throw MalformedCycleError("expected a label at offset " + std::to_string(pos));
      const int x = one_based ? lab - 1 : lab;
      if (x < 0 || x >= n) throw LabelOutOfRangeError(lab);
      if (used[x]) throw RepeatedElementError(lab);
      used[x] = 1;
      cycle.push_back(x);
      skip_ws();
    }
    if (pos >= s.size()) throw MalformedCycleError("unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i)
      map[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm::from_map(std::move(map));
}

std::string format_cycles(const Perm& p, bool one_based) {
  const int n = p.size();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p.apply(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + (one_based ? 1 : 0));
      seen[j] = 1;
      j = p.apply(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n) {
  for (const Perm& g : gens)
    if (g.size() != n)
      throw SizeMismatchError("group_closure: generator size " +
                              std::to_string(g.size()) + " vs " + std::to_string(n));
  std::set<Perm> seen;
  std::vector<Perm> todo;
  const Perm id = Perm::identity(n);
  seen.insert(id);
  todo.push_back(id);
  for (const Perm& g : gens)
    if (seen.insert(g).second) todo.push_back(g);

  // Plain breadth-first multiplication; orders here are tiny.
  for (size_t k = 0; k < todo.size(); ++k) {
    const Perm cur = todo[k];
    for (const Perm& g : gens) {
      for (const Perm& prod : {compose(cur, g), compose(g, cur)})
        if (seen.insert(prod).second) todo.push_back(prod);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

ClosureCheck is_closed_set(const std::vector<Perm>& s, int n) {
  std::set<Perm> set(s.begin(), s.end());
  set.insert(Perm::identity(n));
  for (const Perm& p : set)
    for (const Perm& q : set) {
      Perm r = compose(p, q);
      if (!set.count(r)) return ClosureCheck{false, std::make_pair(p, q)};
    }
  return ClosureCheck{true, std::nullopt};
}

}  // namespace gyroloop
