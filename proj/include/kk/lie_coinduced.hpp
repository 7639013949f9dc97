#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/lie.hpp"
#include "kk/lie_wreath.hpp"
#include "kk/pbw.hpp"
#include "kk/rational.hpp"

namespace kk {

/// A module over a Lie algebra B: a vector space with
/// rho([b,b']) = rho(b)rho(b') - rho(b')rho(b), validated on basis pairs.
struct LieModule {
  lie_ptr B;
  int dim = 0;
  std::vector<Mat> rho;  // one dim x dim matrix per B basis vector

  Vec act_basis(int j, const Vec& m) const { return mat_vec(rho[j], m); }

  Vec act(const Vec& b, const Vec& m) const {
    Vec out = zero_vec(dim);
    for (size_t j = 0; j < rho.size(); ++j)
      if (b[j] != Rat(0)) out = add(out, scale(b[j], act_basis(static_cast<int>(j), m)));
    return out;
  }

  /// u·m for a PBW monomial u, letters applied innermost-last:
  /// (b_{i1}...b_{ir})·m = b_{i1}·(b_{i2}·(...(b_{ir}·m))).
  Vec monomial_act(const PBWMonomial& u, const Vec& m) const {
    Vec v = m;
    for (auto it = u.indices.rbegin(); it != u.indices.rend(); ++it)
      v = act_basis(*it, v);
    return v;
  }

  Vec uenv_act(const UEnvElement& u, const Vec& m) const {
    Vec out = zero_vec(dim);
    for (const auto& [mon, q] : u.terms)
      out = add(out, scale(q, monomial_act(mon, m)));
    return out;
  }
};

inline LieModule make_lie_module(lie_ptr B, int dim, std::vector<Mat> rho) {
  if (static_cast<int>(rho.size()) != B->dim())
    throw not_a_module("need one action matrix per basis vector of B");
  LieModule mod{std::move(B), dim, std::move(rho)};
  for (int i = 0; i < mod.B->dim(); ++i)
    for (int j = i + 1; j < mod.B->dim(); ++j) {
      // rho([ei,ej]) extended linearly
      const Vec& br = mod.B->basis_bracket(i, j);
      Mat lhs = zero_mat(mod.dim, mod.dim);
      for (int t = 0; t < mod.B->dim(); ++t)
        if (br[t] != Rat(0))
          for (int r = 0; r < mod.dim; ++r)
            for (int c = 0; c < mod.dim; ++c)
              lhs[r][c] += br[t] * mod.rho[t][r][c];
      Mat rhs = mat_mul(mod.rho[i], mod.rho[j]);
      Mat ji = mat_mul(mod.rho[j], mod.rho[i]);
      for (int r = 0; r < mod.dim; ++r)
        for (int c = 0; c < mod.dim; ++c) rhs[r][c] -= ji[r][c];
      if (lhs != rhs)
        throw not_a_module("module law fails at basis pair (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return mod;
}

/// The unit of the coinduction adjunction: m ↦ (u ↦ u·m).
inline DualTable lie_coinduced_unit(const LieModule& mod, const Vec& m,
                                    int d) {
  DualTable t{mod.dim, d, {}};
  for (const auto& u : monomials_up_to(mod.B->dim(), d))
    t.entries.emplace(u, mod.monomial_act(u, m));
  return t;
}

/// The lift of a linear map gamma: M -> A along the coinduced module:
/// m ↦ (u ↦ gamma(u·m)); gamma is a_dim x dim.
inline DualTable lie_coinduced_lift(const LieModule& mod, const Mat& gamma,
                                    const Vec& m, int d) {
  DualTable t{static_cast<int>(gamma.size()), d, {}};
  for (const auto& u : monomials_up_to(mod.B->dim(), d))
    t.entries.emplace(u, mat_vec(gamma, mod.monomial_act(u, m)));
  return t;
}

struct LieCoinducedReport {
  bool unit_injective = false;
  bool unit_equivariant = false;   // at degrees <= d-1
  bool lift_evaluation = false;    // ev_1 ∘ lift = gamma
  bool lift_equivariant = false;   // at degrees <= d-1
  bool uniqueness = false;         // determined-by-evaluation identity

  bool all_ok() const {
    return unit_injective && unit_equivariant && lift_evaluation &&
           lift_equivariant && uniqueness;
  }
};

namespace detail {

/// Whether beta (a linear map M -> DualTables, given on the basis of M)
/// satisfies the two identities that pin a module map down to its
/// evaluation row: beta(m)(1) = gamma(m), and on each sorted monomial
/// u·b_j the module law beta(m)(u·b_j) = beta(b_j·m)(u).
inline bool determined_by_evaluation(const LieModule& mod,
                                     const std::vector<DualTable>& beta,
                                     const Mat& gamma, int d) {
  for (int mb = 0; mb < mod.dim; ++mb) {
    Vec unit_m = zero_vec(mod.dim);
    unit_m[mb] = Rat(1);
    if (beta[mb].entries.at(PBWMonomial{}) != mat_vec(gamma, unit_m))
      return false;
    for (const auto& u : monomials_up_to(mod.B->dim(), d)) {
      if (u.degree() == 0) continue;
      int j = u.indices.back();
      PBWMonomial prefix{std::vector<int>(u.indices.begin(),
                                          u.indices.end() - 1)};
      Vec rotated = mod.act_basis(j, unit_m);
      Vec expect = zero_vec(beta[mb].coeff_dim);
      for (int t = 0; t < mod.dim; ++t)
        if (rotated[t] != Rat(0))
          expect = add(expect, scale(rotated[t], beta[t].entries.at(prefix)));
      if (beta[mb].entries.at(u) != expect) return false;
    }
  }
  return true;
}

/// The family those identities define, built degree by degree; the
/// uniqueness argument is that it is the only candidate.
inline std::vector<DualTable> reconstruct_from_evaluation(const LieModule& mod,
                                                          const Mat& gamma,
                                                          int d) {
  const int a_dim = static_cast<int>(gamma.size());
  std::vector<DualTable> out(mod.dim, DualTable{a_dim, d, {}});
  for (const auto& u : monomials_up_to(mod.B->dim(), d)) {
    for (int mb = 0; mb < mod.dim; ++mb) {
      Vec unit_m = zero_vec(mod.dim);
      unit_m[mb] = Rat(1);
      if (u.degree() == 0) {
        out[mb].entries.emplace(u, mat_vec(gamma, unit_m));
        continue;
      }
      int j = u.indices.back();
      PBWMonomial prefix{std::vector<int>(u.indices.begin(),
                                          u.indices.end() - 1)};
      Vec rotated = mod.act_basis(j, unit_m);
      Vec value = zero_vec(a_dim);
      for (int t = 0; t < mod.dim; ++t)
        if (rotated[t] != Rat(0))
          value = add(value, scale(rotated[t], out[t].entries.at(prefix)));
      out[mb].entries.emplace(u, std::move(value));
    }
  }
  return out;
}

}  // namespace detail

/// Full check of the coinduced-module universal property for a module M
/// and a linear gamma: M -> A, at degree bound d.
inline LieCoinducedReport lie_coinduced_check(const LieModule& mod,
                                              const Mat& gamma, int d) {
  LieCoinducedReport rep;

  std::vector<DualTable> unit(mod.dim, DualTable{});
  std::vector<DualTable> lift(mod.dim, DualTable{});
  for (int mb = 0; mb < mod.dim; ++mb) {
    Vec m = zero_vec(mod.dim);
    m[mb] = Rat(1);
    unit[mb] = lie_coinduced_unit(mod, m, d);
    lift[mb] = lie_coinduced_lift(mod, gamma, m, d);
  }

  // injectivity of the unit: stacked tables have rank dim M
  Mat stacked;
  for (int mb = 0; mb < mod.dim; ++mb) {
    Vec col;
    for (const auto& [u, v] : unit[mb].entries)
      col.insert(col.end(), v.begin(), v.end());
    if (stacked.empty()) stacked.assign(col.size(), zero_vec(mod.dim));
    for (size_t r = 0; r < col.size(); ++r) stacked[r][mb] = col[r];
  }
  rep.unit_injective = rank(stacked) == mod.dim;

  // equivariance at degrees <= d-1: unit(b·m) = b·unit(m), lift likewise
  auto equivariant = [&](const std::vector<DualTable>& tables,
                         auto&& rebuild) {
    for (int j = 0; j < mod.B->dim(); ++j)
      for (int mb = 0; mb < mod.dim; ++mb) {
        Vec m = zero_vec(mod.dim);
        m[mb] = Rat(1);
        DualTable lhs = rebuild(mod.act_basis(j, m));
        DualTable rhs =
            dual_translate(*mod.B, tables[mb], mod.B->basis_vec(j));
        if (!table_equal_up_to(lhs, rhs, d - 1)) return false;
      }
    return true;
  };
  rep.unit_equivariant = equivariant(
      unit, [&](const Vec& m) { return lie_coinduced_unit(mod, m, d); });
  rep.lift_equivariant = equivariant(lift, [&](const Vec& m) {
    return lie_coinduced_lift(mod, gamma, m, d);
  });

  rep.lift_evaluation = true;
  for (int mb = 0; mb < mod.dim; ++mb) {
    Vec m = zero_vec(mod.dim);
    m[mb] = Rat(1);
    if (lift[mb].entries.at(PBWMonomial{}) != mat_vec(gamma, m))
      rep.lift_evaluation = false;
  }

  // the lift satisfies the pinning identities, and the family they
  // determine is the lift again: no other module map can share the ev row
  rep.uniqueness =
      detail::determined_by_evaluation(mod, lift, gamma, d) &&
      detail::reconstruct_from_evaluation(mod, gamma, d) == lift;
  return rep;
}

/// The group-side and Lie-side coinduced modules share one identity:
/// the action translates the argument on the right, (b·h)(u) = h(u·b).
/// For a one-dimensional B this reads (b·h)(b^r) = h(b^{r+1}).
inline bool translation_identity_holds(const LieModule& mod, int d) {
  if (mod.B->dim() != 1) return false;
  DualTable h{1, d, {}};
  for (const auto& u : monomials_up_to(1, d)) {
    Vec v = zero_vec(1);
    v[0] = Rat(u.degree() + 1);  // distinct value per degree
    h.entries.emplace(u, v);
  }
  DualTable moved = dual_translate(*mod.B, h, mod.B->basis_vec(0));
  for (const auto& [u, v] : moved.entries) {
    if (u.degree() == d) continue;  // one past the window
    PBWMonomial shifted = u;
    shifted.indices.push_back(0);
    if (v != h.entries.at(shifted)) return false;
  }
  return true;
}

}  // namespace kk
