#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"

namespace kk {

class FiniteGroup;

/// Groups are immutable after construction and shared freely between
/// homs, extensions and wreath structures.
using group_ptr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table.  Elements are
/// dense indices 0..n-1 with the identity pinned at index 0.  Construction
/// validates the group axioms exhaustively, so a FiniteGroup value is a
/// certificate that the table really is a group.
class FiniteGroup {
 public:
  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int mul(int x, int y) const { return table_[x * order_ + y]; }
  int inv(int x) const { return inverse_[x]; }

  /// x * y * x^-1
  int conj(int x, int y) const { return mul(mul(x, y), inv(x)); }

  bool is_abelian() const;
  int element_order(int x) const;

  /// Structural equality of carriers (same table, names ignored).
  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  std::vector<std::vector<int>> table_rows() const;

  /// Validates and wraps an explicit multiplication table.
  static group_ptr from_table(std::string name,
                              const std::vector<std::vector<int>>& table);

  /// Generates the closure of a set of equal-length permutations
  /// (0-based points).  Element ordering is canonical: identity first,
  /// then breadth-first over right products by the generators in input
  /// order.
  static group_ptr from_permutations(std::string name,
                                     const std::vector<std::vector<int>>& perms);

 private:
  FiniteGroup(std::string name, int order, std::vector<int> table);
  void validate() const;

  std::string name_;
  int order_;
  std::vector<int> table_;    // row-major, table_[x*order_+y] = x*y
  std::vector<int> inverse_;  // total by the Latin-square property
};

group_ptr cyclic(int n);
group_ptr trivial_group();
group_ptr direct_product(const group_ptr& g, const group_ptr& h);
group_ptr symmetric3();
group_ptr dihedral(int n);
group_ptr klein_four();

/// A homomorphism between validated groups, stored as the full image
/// array.  Only hom_check (and the few constructions that prove the law
/// by other means) create these.
struct GroupHom {
  group_ptr domain;
  group_ptr codomain;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

GroupHom hom_check(group_ptr domain, group_ptr codomain, std::vector<int> map);
GroupHom identity_hom(group_ptr g);
GroupHom zero_hom(group_ptr domain, group_ptr codomain);

/// g after f; domains must match structurally.
GroupHom compose(const GroupHom& g, const GroupHom& f);

bool is_injective(const GroupHom& h);
bool is_surjective(const GroupHom& h);

struct Subgroup {
  group_ptr parent;
  std::vector<int> elements;  // sorted

  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
};

Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);

inline constexpr long long kDefaultHomBudget = 1'000'000;

/// Greedy generating set: repeatedly adjoin the smallest-index element
/// outside the current closure.
std::vector<int> generating_set(const FiniteGroup& g);

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& seed);

/// All homomorphisms G -> H, found by assigning generator images and
/// closing.  Throws budget_exceeded when |H|^#gens > budget.
std::vector<GroupHom> enumerate_homs(const group_ptr& g, const group_ptr& h,
                                     long long budget = kDefaultHomBudget);

/// An isomorphism G -> H if one exists within budget.
std::optional<GroupHom> find_isomorphism(const group_ptr& g, const group_ptr& h,
                                         long long budget = kDefaultHomBudget);

// ---------------------------------------------------------------------------

inline FiniteGroup::FiniteGroup(std::string name, int order,
                                std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  validate();
  inverse_.assign(order_, -1);
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      if (mul(x, y) == 0) inverse_[x] = y;
}

inline void FiniteGroup::validate() const {
  for (int x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw not_a_group("element 0 is not a two-sided identity at x=" +
                        std::to_string(x));
  }
  std::vector<char> seen(order_);
  for (int x = 0; x < order_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < order_; ++y) {
      int v = mul(x, y);
      if (v < 0 || v >= order_ || seen[v])
        throw not_a_group("row " + std::to_string(x) +
                          " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < order_; ++y) {
      int v = mul(y, x);
      if (seen[v])
        throw not_a_group("column " + std::to_string(x) +
                          " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      for (int z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw not_a_group("associativity fails at (" + std::to_string(x) +
                            "," + std::to_string(y) + "," + std::to_string(z) +
                            ")");
}

inline bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order_; ++x)
    for (int y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

inline int FiniteGroup::element_order(int x) const {
  int n = 1;
  for (int p = x; p != 0; p = mul(p, x)) ++n;
  return n;
}

inline std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_);
  for (int x = 0; x < order_; ++x) {
    rows[x].resize(order_);
    for (int y = 0; y < order_; ++y) rows[x][y] = mul(x, y);
  }
  return rows;
}

inline group_ptr FiniteGroup::from_table(
    std::string name, const std::vector<std::vector<int>>& table) {
  if (table.empty()) throw empty_spec("empty multiplication table");
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw not_a_group("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return group_ptr(new FiniteGroup(std::move(name), n, std::move(flat)));
}

inline group_ptr FiniteGroup::from_permutations(
    std::string name, const std::vector<std::vector<int>>& perms) {
  if (perms.empty()) throw empty_spec("no permutation generators");
  const size_t npts = perms[0].size();
  if (npts == 0) throw empty_spec("permutations on zero points");
  for (const auto& p : perms) {
    if (p.size() != npts)
      throw not_a_group("permutation generators have unequal lengths");
    std::vector<char> seen(npts);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(npts) || seen[v])
        throw not_a_group("generator is not a permutation");
      seen[v] = 1;
    }
  }

  using Perm = std::vector<int>;
  auto pcompose = [npts](const Perm& p, const Perm& q) {
    Perm r(npts);
    for (size_t i = 0; i < npts; ++i) r[i] = p[q[i]];
    return r;
  };

  Perm id(npts);
  for (size_t i = 0; i < npts; ++i) id[i] = static_cast<int>(i);

  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (const auto& gen : perms) {
      Perm next = pcompose(elems[e], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        queue.push_back(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[x * n + y] = index.at(pcompose(elems[x], elems[y]));
  return group_ptr(new FiniteGroup(std::move(name), n, std::move(flat)));
}

inline group_ptr cyclic(int n) {
  if (n < 1) throw empty_spec("cyclic(n) needs n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  return FiniteGroup::from_table("Z" + std::to_string(n), table);
}

inline group_ptr trivial_group() { return cyclic(1); }

inline group_ptr direct_product(const group_ptr& g, const group_ptr& h) {
  const int n = g->order(), m = h->order();
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  for (int x = 0; x < n * m; ++x)
    for (int y = 0; y < n * m; ++y)
      table[x][y] = g->mul(x / m, y / m) * m + h->mul(x % m, y % m);
  return FiniteGroup::from_table(g->name() + "x" + h->name(), table);
}

inline group_ptr symmetric3() {
  return FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}});
}

inline group_ptr dihedral(int n) {
  std::vector<int> rot(n), flip(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations("D" + std::to_string(n), {rot, flip});
}

inline group_ptr klein_four() {
  auto z2 = cyclic(2);
  return direct_product(z2, z2);
}

inline GroupHom hom_check(group_ptr domain, group_ptr codomain,
                          std::vector<int> map) {
  if (static_cast<int>(map.size()) != domain->order())
    throw not_a_hom("map length != domain order");
  for (int v : map)
    if (v < 0 || v >= codomain->order())
      throw not_a_hom("map value out of codomain range");
  if (map[0] != 0) throw not_a_hom("map does not fix the identity");
  for (int x = 0; x < domain->order(); ++x)
    for (int y = 0; y < domain->order(); ++y)
      if (map[domain->mul(x, y)] != codomain->mul(map[x], map[y]))
        throw not_a_hom("law fails at pair (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
  return GroupHom{std::move(domain), std::move(codomain), std::move(map)};
}

inline GroupHom identity_hom(group_ptr g) {
  std::vector<int> map(g->order());
  for (int x = 0; x < g->order(); ++x) map[x] = x;
  return GroupHom{g, g, std::move(map)};
}

inline GroupHom zero_hom(group_ptr domain, group_ptr codomain) {
  std::vector<int> map(domain->order(), 0);
  return GroupHom{std::move(domain), std::move(codomain), std::move(map)};
}

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!f.codomain->same_table(*g.domain))
    throw not_a_hom("compose: codomain/domain mismatch");
  std::vector<int> map(f.map.size());
  for (size_t x = 0; x < f.map.size(); ++x) map[x] = g.map[f.map[x]];
  return GroupHom{f.domain, g.codomain, std::move(map)};
}

inline bool is_injective(const GroupHom& h) {
  std::vector<char> seen(h.codomain->order());
  for (int v : h.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_surjective(const GroupHom& h) {
  std::vector<char> seen(h.codomain->order());
  for (int v : h.map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline Subgroup kernel(const GroupHom& h) {
  std::vector<int> elems;
  for (int x = 0; x < h.domain->order(); ++x)
    if (h.map[x] == 0) elems.push_back(x);
  return Subgroup{h.domain, std::move(elems)};
}

inline Subgroup image(const GroupHom& h) {
  std::vector<int> elems(h.map.begin(), h.map.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{h.codomain, std::move(elems)};
}

inline std::vector<int> subgroup_closure(const FiniteGroup& g,
                                         const std::vector<int>& seed) {
  std::vector<char> in(g.order());
  in[0] = 1;
  std::deque<int> queue{0};
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  std::vector<int> gens = seed;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
      y = g.mul(s, x);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closed = subgroup_closure(g, gens);
  while (static_cast<int>(closed.size()) < g.order()) {
    int next = 0;
    std::vector<char> in(g.order());
    for (int x : closed) in[x] = 1;
    while (in[next]) ++next;
    gens.push_back(next);
    closed = subgroup_closure(g, gens);
  }
  return gens;
}

namespace detail {

/// Breadth-first expression of every element as a product of generators:
/// pred/gen give x = pred[x] * gens[gen[x]]; discovery lists the elements
/// in an order where predecessors come first.
struct GeneratorWords {
  std::vector<int> pred;
  std::vector<int> gen;
  std::vector<int> discovery;
};

inline GeneratorWords generator_words(const FiniteGroup& g,
                                      const std::vector<int>& gens) {
  GeneratorWords w{std::vector<int>(g.order(), -1),
                   std::vector<int>(g.order(), -1),
                   {}};
  w.pred[0] = 0;
  w.discovery.push_back(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      if (w.pred[y] < 0) {
        w.pred[y] = x;
        w.gen[y] = static_cast<int>(i);
        w.discovery.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return w;
}

}  // namespace detail

inline std::vector<GroupHom> enumerate_homs(const group_ptr& g,
                                            const group_ptr& h,
                                            long long budget) {
  const std::vector<int> gens = generating_set(*g);
  long long candidates = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    candidates *= h->order();
    if (candidates > budget)
      throw budget_exceeded("hom enumeration needs " + std::to_string(h->order()) +
                            "^" + std::to_string(gens.size()) + " candidates");
  }
  const auto words = detail::generator_words(*g, gens);

  std::vector<GroupHom> out;
  std::vector<int> assign(gens.size(), 0);
  const int n = g->order();
  std::vector<int> img(n);
  for (long long c = 0; c < candidates; ++c) {
    long long t = c;
    for (size_t i = 0; i < gens.size(); ++i) {
      assign[i] = static_cast<int>(t % h->order());
      t /= h->order();
    }
    img[0] = 0;
    // images propagate along the BFS tree; discovery order guarantees
    // predecessors are already assigned
    bool ok = true;
    for (int x : words.discovery)
      if (x != 0) img[x] = h->mul(img[words.pred[x]], assign[words.gen[x]]);
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (img[g->mul(x, y)] != h->mul(img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(GroupHom{g, h, img});
  }
  return out;
}

inline std::optional<GroupHom> find_isomorphism(const group_ptr& g,
                                                const group_ptr& h,
                                                long long budget) {
  if (g->order() != h->order()) return std::nullopt;
  if (g->is_abelian() != h->is_abelian()) return std::nullopt;
  auto order_profile = [](const FiniteGroup& k) {
    std::vector<int> p(k.order());
    for (int x = 0; x < k.order(); ++x) p[x] = k.element_order(x);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (order_profile(*g) != order_profile(*h)) return std::nullopt;
  for (const GroupHom& cand : enumerate_homs(g, h, budget))
    if (is_injective(cand)) return cand;
  return std::nullopt;
}

}  // namespace kk
