#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kk/beck.hpp"
#include "kk/fixtures.hpp"
#include "kk/group.hpp"
#include "kk/wreath.hpp"

using namespace kk;

TEST_CASE("coinduced module structure") {
  auto z2 = cyclic(2), z3 = cyclic(3);

  auto c = coinduced(z2, z3);
  CHECK(c.module.M()->order() == 9);
  // translation by the nontrivial element swaps coordinates
  for (int h = 0; h < 9; ++h) {
    auto v = c.fs_values(h);
    CHECK(c.module.act(1, h) == c.fs_index({v[1], v[0]}));
  }

  // trivial B: the module is A itself with the trivial action
  auto c1 = coinduced(trivial_group(), z3);
  CHECK(c1.module.M()->order() == 3);
  for (int m = 0; m < 3; ++m) CHECK(c1.module.act(0, m) == m);

  CHECK_NOTHROW(coinduced(cyclic(3), cyclic(2)));
  CHECK_THROWS_AS(coinduced(z2, symmetric3()), not_abelian);
  CHECK_THROWS_AS(make_beck_module(z2, symmetric3(), {}), not_abelian);
}

TEST_CASE("beck_unit values on the inversion fixture") {
  auto mod = fixtures::z3_inversion_module();
  auto coind = coinduced(mod.B(), mod.M());
  auto unit = beck_unit(mod, coind);

  CHECK(coind.fs_values(unit.map(1)) == std::vector<int>{1, 2});
  CHECK(coind.fs_values(unit.map(2)) == std::vector<int>{2, 1});

  // trivial action: the unit is the constant-function embedding
  auto triv = fixtures::trivial_module(cyclic(2), cyclic(3));
  auto ct = coinduced(triv.B(), triv.M());
  auto ut = beck_unit(triv, ct);
  for (int m = 0; m < 3; ++m)
    CHECK(ct.fs_values(ut.map(m)) == std::vector<int>{m, m});
}

TEST_CASE("beck_unit is injective and equivariant on the whole catalog") {
  for (const auto& [name, mod] : fixtures::small_beck_modules()) {
    INFO(name);
    auto unit = beck_unit(mod);
    CHECK(is_injective(unit.map));
  }
}

TEST_CASE("the unit embeds the abelian split extension into the wreath") {
  // middle map (m,b) ↦ (unit(m), b) between the semidirect products
  for (const auto& [name, mod] : fixtures::small_beck_modules()) {
    if (mod.M()->order() > 3 || mod.B()->order() > 2) continue;  // table size
    INFO(name);
    auto s = semidirect_from_action(mod.action);
    auto coind = coinduced(mod.B(), mod.M());
    auto w = semidirect_from_action(coind.module.action);
    auto unit = beck_unit(mod, coind);

    const int nb = mod.B()->order();
    std::vector<int> mid(s.ext.G->order());
    for (int m = 0; m < mod.M()->order(); ++m)
      for (int b = 0; b < nb; ++b)
        mid[m * nb + b] = unit.map(m) * nb + b;
    auto morph = check_split_morphism(s, w, unit.map,
                                      hom_check(s.ext.G, w.ext.G, mid));
    CHECK(morph.base.mono);
  }
}

TEST_CASE("beck_universal round-trips every gamma with a unique lift") {
  auto mod = fixtures::z3_inversion_module();
  auto z3 = cyclic(3);

  // gamma = identity: the lift is the unit
  auto coind = coinduced(mod.B(), mod.M());
  auto u = beck_universal(mod, identity_hom(mod.M()));
  CHECK(u.lift.map.map == beck_unit(mod, coind).map.map);
  CHECK(u.uniqueness_count == 1);

  // gamma = zero: the lift is the zero morphism
  auto z = beck_universal(mod, zero_hom(mod.M(), z3));
  for (int m = 0; m < 3; ++m) CHECK(z.lift.map(m) == 0);

  // full round trip over every hom M -> A
  for (const auto& gamma : enumerate_homs(mod.M(), z3)) {
    auto r = beck_universal(mod, gamma);
    CHECK(r.recovered.map == gamma.map);
    CHECK(r.uniqueness_count == 1);
  }
}

TEST_CASE("beck_universal across the catalog") {
  for (const auto& [name, mod] : fixtures::small_beck_modules()) {
    INFO(name);
    for (const auto& gamma : enumerate_homs(mod.M(), mod.M())) {
      auto r = beck_universal(mod, gamma);
      CHECK(r.recovered.map == gamma.map);
      CHECK(r.uniqueness_count == 1);
    }
  }
}

TEST_CASE("adjunction bijection counts") {
  struct Case {
    BeckModule mod;
    group_ptr a;
  };
  const Case cases[] = {
      {fixtures::z3_inversion_module(), cyclic(3)},
      {fixtures::z3_inversion_module(), cyclic(2)},
      {fixtures::trivial_module(cyclic(2), cyclic(3)), cyclic(3)},
      {BeckModule{fixtures::inversion_action(4)}, cyclic(4)},
  };
  for (const auto& [mod, a] : cases) {
    CHECK(count_equivariant_maps(mod, a) ==
          static_cast<int>(enumerate_homs(mod.M(), a).size()));
  }
}

TEST_CASE("naturality of the unit along a module morphism") {
  auto mod = fixtures::z3_inversion_module();
  // inversion of Z3 commutes with the action, so it is equivariant
  auto mu = check_beck_morphism(mod, mod,
                                hom_check(mod.M(), mod.M(), {0, 2, 1}));
  auto coind = coinduced(mod.B(), mod.M());
  auto unit = beck_unit(mod, coind);

  // coinduced functor on mu: post-composition on values
  for (int m = 0; m < 3; ++m) {
    auto lhs = coind.fs_values(unit.map(mu.map(m)));
    auto rhs = coind.fs_values(unit.map(m));
    for (int& v : rhs) v = mu.map(v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("abelian wreath materializes for small coefficients") {
  auto w = abelian_wreath(cyclic(2), cyclic(3));
  CHECK(w.ext.G->order() == 18);
  CHECK(w.ext.A->order() == 9);
}
