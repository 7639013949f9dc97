#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"

namespace kk {

inline constexpr long long kDefaultWreathBudget = 100'000;

/// A total function B -> A, the kernel-side data of a wreath element.
struct FunctionElement {
  group_ptr B, A;
  std::vector<int> values;  // length |B|, values[b] in A
};

/// Right translation: result(b) = h(b * b').
inline FunctionElement translate(const FunctionElement& h, int b_prime) {
  FunctionElement out{h.B, h.A, std::vector<int>(h.values.size())};
  for (int b = 0; b < h.B->order(); ++b)
    out.values[b] = h.values[h.B->mul(b, b_prime)];
  return out;
}

struct WreathElement {
  std::vector<int> h;  // function values, length |B|
  int b = 0;
};

namespace detail {

inline long long checked_power(long long base, int exp, long long budget,
                               const char* what) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > budget)
      throw budget_exceeded(std::string(what) + " exceeds budget");
  }
  return v;
}

/// Lexicographic index of a value tuple (big-endian in the values).
inline int tuple_index(const std::vector<int>& values, int radix) {
  int idx = 0;
  for (int v : values) idx = idx * radix + v;
  return idx;
}

inline std::vector<int> tuple_values(int index, int radix, int len) {
  std::vector<int> values(len);
  for (int i = len - 1; i >= 0; --i) {
    values[i] = index % radix;
    index /= radix;
  }
  return values;
}

}  // namespace detail

/// The pointwise-product group on functions B -> A, of order |A|^|B|.
/// Function h has index Σ h(b)·|A|^(|B|-1-b), so index order is the
/// lexicographic order on value tuples; the constant identity is 0.
inline group_ptr function_space(const group_ptr& B, const group_ptr& A,
                                long long budget = kDefaultWreathBudget) {
  const int na = A->order(), nb = B->order();
  const long long n =
      detail::checked_power(na, nb, budget, "function space order");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    auto xv = detail::tuple_values(x, na, nb);
    for (int y = 0; y < n; ++y) {
      auto yv = detail::tuple_values(y, na, nb);
      std::vector<int> prod(nb);
      for (int b = 0; b < nb; ++b) prod[b] = A->mul(xv[b], yv[b]);
      table[x][y] = detail::tuple_index(prod, na);
    }
  }
  return FiniteGroup::from_table("Fun(" + B->name() + "," + A->name() + ")",
                                 table);
}

/// The wreath product Set(B,A) ⋊ B, materialized as a table group with its
/// split extension (kappa, pi, sigma).  Multiplication is
///   (h1,b1)(h2,b2) = (b ↦ h1(b)·h2(b·b1), b1·b2),
/// the unique semidirect orientation under right translation that makes
/// the classical embedding a homomorphism.  Pair (h,b) has index
/// fs_index(h)·|B| + b.
struct WreathStructure {
  group_ptr A, B;
  group_ptr FS;  // Set(B,A) with pointwise product
  group_ptr W;   // the full wreath table
  GroupHom kappa;  // FS -> W
  GroupHom pi;     // W -> B
  GroupHom sigma;  // B -> W
  SplitExtension split;  // validated (kappa, pi, sigma)

  int fs_index(const std::vector<int>& values) const {
    return detail::tuple_index(values, A->order());
  }
  std::vector<int> fs_values(int index) const {
    return detail::tuple_values(index, A->order(), B->order());
  }
  int pair_index(const std::vector<int>& values, int b) const {
    return fs_index(values) * B->order() + b;
  }
  int pair_index(const WreathElement& w) const { return pair_index(w.h, w.b); }
  WreathElement decode(int windex) const {
    return WreathElement{fs_values(windex / B->order()), windex % B->order()};
  }
};

inline WreathStructure wreath_product(const group_ptr& A, const group_ptr& B,
                                      long long budget = kDefaultWreathBudget) {
  const int na = A->order(), nb = B->order();
  const long long fs_order =
      detail::checked_power(na, nb, budget / nb, "wreath order");
  const long long n = fs_order * nb;

  group_ptr FS = function_space(B, A, budget);

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (long long x = 0; x < n; ++x) {
    auto h1 = detail::tuple_values(static_cast<int>(x / nb), na, nb);
    int b1 = static_cast<int>(x % nb);
    for (long long y = 0; y < n; ++y) {
      auto h2 = detail::tuple_values(static_cast<int>(y / nb), na, nb);
      int b2 = static_cast<int>(y % nb);
      std::vector<int> prod(nb);
      for (int b = 0; b < nb; ++b)
        prod[b] = A->mul(h1[b], h2[B->mul(b, b1)]);
      table[x][y] = detail::tuple_index(prod, na) * nb + B->mul(b1, b2);
    }
  }
  group_ptr W = FiniteGroup::from_table(A->name() + "wr" + B->name(), table);

  std::vector<int> kmap(fs_order), pmap(n), smap(nb);
  for (long long h = 0; h < fs_order; ++h) kmap[h] = static_cast<int>(h * nb);
  for (long long x = 0; x < n; ++x) pmap[x] = static_cast<int>(x % nb);
  for (int b = 0; b < nb; ++b) smap[b] = b;

  GroupHom kappa = hom_check(FS, W, kmap);
  GroupHom pi = hom_check(W, B, pmap);
  GroupHom sigma = hom_check(B, W, smap);
  Extension ext = make_extension(FS, W, B, kappa, pi);
  SplitExtension split = make_split_extension(ext, sigma);
  return WreathStructure{A,
                         B,
                         FS,
                         W,
                         std::move(kappa),
                         std::move(pi),
                         std::move(sigma),
                         std::move(split)};
}

/// The wreath functor on a morphism gamma: A -> C over a fixed B:
/// (h,b) ↦ (gamma∘h, b), validated as a morphism of split extensions.
inline SplitExtMorphism R_on_morphism(const WreathStructure& wa,
                                      const WreathStructure& wc,
                                      const GroupHom& gamma) {
  if (!wa.B->same_table(*wc.B))
    throw mismatched_base("wreath structures live over different bases");
  if (!gamma.domain->same_table(*wa.A) || !gamma.codomain->same_table(*wc.A))
    throw mismatched_base("gamma does not map kernel object to kernel object");

  const int nb = wa.B->order();
  std::vector<int> fs_map(wa.FS->order());
  for (int h = 0; h < wa.FS->order(); ++h) {
    std::vector<int> values = wa.fs_values(h);
    for (int& v : values) v = gamma(v);
    fs_map[h] = wc.fs_index(values);
  }
  std::vector<int> w_map(wa.W->order());
  for (int x = 0; x < wa.W->order(); ++x)
    w_map[x] = fs_map[x / nb] * nb + x % nb;

  return check_split_morphism(wa.split, wc.split,
                              hom_check(wa.FS, wc.FS, fs_map),
                              hom_check(wa.W, wc.W, w_map));
}

}  // namespace kk
