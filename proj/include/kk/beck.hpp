#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"
#include "kk/wreath.hpp"

namespace kk {

/// A Beck module over B in groups: a B-action on an abelian group M,
/// stored as permutation tables with the same orientation that
/// semidirect_from_action uses (rho[b1·b2] = rho[b1]∘rho[b2]).
struct BeckModule {
  GroupAction action;  // action.A is the abelian carrier

  const group_ptr& B() const { return action.B; }
  const group_ptr& M() const { return action.A; }
  int act(int b, int m) const { return action.apply(b, m); }
};

inline BeckModule make_beck_module(group_ptr B, group_ptr M,
                                   std::vector<std::vector<int>> rho) {
  if (!M->is_abelian())
    throw not_abelian("Beck module carrier must be abelian");
  return BeckModule{action_check(std::move(B), std::move(M), std::move(rho))};
}

/// An equivariant homomorphism of Beck modules over the same B.
struct BeckMorphism {
  GroupHom map;  // underlying abelian groups
};

inline BeckMorphism check_beck_morphism(const BeckModule& src,
                                        const BeckModule& tgt, GroupHom map) {
  if (!src.B()->same_table(*tgt.B()))
    throw diagram_failure("Beck morphism endpoints over different B");
  if (!map.domain->same_table(*src.M()) || !map.codomain->same_table(*tgt.M()))
    throw diagram_failure("Beck morphism signature mismatch");
  for (int b = 0; b < src.B()->order(); ++b)
    for (int m = 0; m < src.M()->order(); ++m)
      if (map(src.act(b, m)) != tgt.act(b, map(m)))
        throw diagram_failure("equivariance fails at (b=" + std::to_string(b) +
                              ", m=" + std::to_string(m) + ")");
  return BeckMorphism{std::move(map)};
}

/// The coinduced module with its coefficient group and tuple decoding:
/// carrier Fun(B,A) under pointwise addition, right-translation action
/// (b·h)(x) = h(x·b).  This is the kernel of the abelian wreath of A by B.
struct CoinducedModule {
  BeckModule module;
  group_ptr A;

  int fs_index(const std::vector<int>& values) const {
    return detail::tuple_index(values, A->order());
  }
  std::vector<int> fs_values(int h) const {
    return detail::tuple_values(h, A->order(), module.B()->order());
  }
};

inline CoinducedModule coinduced(const group_ptr& B, const group_ptr& A,
                                 long long budget = kDefaultWreathBudget) {
  if (!A->is_abelian()) throw not_abelian("coinduction needs an abelian A");
  group_ptr fs = function_space(B, A, budget);
  const int nb = B->order(), na = A->order();

  std::vector<std::vector<int>> rho(nb, std::vector<int>(fs->order()));
  for (int b = 0; b < nb; ++b)
    for (int h = 0; h < fs->order(); ++h) {
      auto values = detail::tuple_values(h, na, nb);
      std::vector<int> moved(nb);
      for (int x = 0; x < nb; ++x) moved[x] = values[B->mul(x, b)];
      rho[b][h] = detail::tuple_index(moved, na);
    }
  return CoinducedModule{make_beck_module(B, fs, std::move(rho)), A};
}

/// The abelian wreath (the underlined one): the split extension of the
/// coinduced module.
inline SplitExtension abelian_wreath(const group_ptr& B, const group_ptr& A,
                                     long long budget = kDefaultWreathBudget) {
  return semidirect_from_action(coinduced(B, A, budget).module.action);
}

/// The unit of the coinduction adjunction: m ↦ (x ↦ rho[x](m)),
/// an injective equivariant map into coinduced(B, M).
inline BeckMorphism beck_unit(const BeckModule& mod,
                              const CoinducedModule& coind) {
  const int nb = mod.B()->order();
  std::vector<int> map(mod.M()->order());
  for (int m = 0; m < mod.M()->order(); ++m) {
    std::vector<int> values(nb);
    for (int x = 0; x < nb; ++x) values[x] = mod.act(x, m);
    map[m] = coind.fs_index(values);
  }
  return check_beck_morphism(mod, coind.module,
                             hom_check(mod.M(), coind.module.M(), map));
}

inline BeckMorphism beck_unit(const BeckModule& mod,
                              long long budget = kDefaultWreathBudget) {
  return beck_unit(mod, coinduced(mod.B(), mod.M(), budget));
}

struct BeckUniversal {
  BeckMorphism lift;      // Mod -> coinduced(B, A)
  GroupHom recovered;     // ev_1 ∘ lift, equals gamma
  int uniqueness_count;   // equivariant maps with ev_1∘beta = gamma; must be 1
};

/// The adjunction bijection with its uniqueness certificate: for
/// gamma: M -> A, the lift m ↦ (x ↦ gamma(rho[x](m))) is the unique
/// equivariant map whose evaluation at the identity recovers gamma.
inline BeckUniversal beck_universal(const BeckModule& mod,
                                    const GroupHom& gamma,
                                    long long budget = kDefaultHomBudget) {
  if (!gamma.domain->same_table(*mod.M()))
    throw not_a_hom("gamma must start at the module carrier");
  const group_ptr& a_obj = gamma.codomain;
  if (!a_obj->is_abelian()) throw not_abelian("gamma must land abelian");

  CoinducedModule coind = coinduced(mod.B(), a_obj);
  const int nb = mod.B()->order();

  std::vector<int> lift_map(mod.M()->order());
  for (int m = 0; m < mod.M()->order(); ++m) {
    std::vector<int> values(nb);
    for (int x = 0; x < nb; ++x) values[x] = gamma(mod.act(x, m));
    lift_map[m] = coind.fs_index(values);
  }
  BeckMorphism lift = check_beck_morphism(
      mod, coind.module, hom_check(mod.M(), coind.module.M(), lift_map));

  std::vector<int> ev(mod.M()->order());
  for (int m = 0; m < mod.M()->order(); ++m)
    ev[m] = coind.fs_values(lift.map(m))[0];
  if (ev != gamma.map)
    throw factorization_failure("evaluation at identity does not recover gamma");

  int count = 0;
  for (const GroupHom& beta : enumerate_homs(mod.M(), coind.module.M(), budget)) {
    try {
      check_beck_morphism(mod, coind.module, beta);
    } catch (const diagram_failure&) {
      continue;
    }
    bool agrees = true;
    for (int m = 0; m < mod.M()->order() && agrees; ++m)
      agrees = coind.fs_values(beta(m))[0] == gamma(m);
    if (agrees) ++count;
  }
  if (count != 1)
    throw uniqueness_failure("expected exactly one equivariant lift, found " +
                             std::to_string(count));
  return BeckUniversal{std::move(lift), hom_check(mod.M(), a_obj, ev), count};
}

/// Number of equivariant Beck morphisms Mod -> coinduced(B, A); the
/// adjunction says it equals the number of plain homs M -> A.
inline int count_equivariant_maps(const BeckModule& mod, const group_ptr& a,
                                  long long budget = kDefaultHomBudget) {
  CoinducedModule coind = coinduced(mod.B(), a);
  int count = 0;
  for (const GroupHom& beta : enumerate_homs(mod.M(), coind.module.M(), budget)) {
    try {
      check_beck_morphism(mod, coind.module, beta);
      ++count;
    } catch (const diagram_failure&) {
    }
  }
  return count;
}

}  // namespace kk
