#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kk/fixtures.hpp"
#include "kk/group.hpp"
#include "kk/wreath.hpp"

using namespace kk;

TEST_CASE("function space orders and structure") {
  auto z2 = cyclic(2), z3 = cyclic(3);

  auto f22 = function_space(z2, z2);
  CHECK(f22->order() == 4);
  CHECK(find_isomorphism(f22, klein_four()).has_value());

  auto f23 = function_space(z2, z3);
  CHECK(f23->order() == 9);
  CHECK(find_isomorphism(f23, direct_product(z3, z3)).has_value());

  // one-point exponent: Fun(1, G) is G itself
  auto f1g = function_space(trivial_group(), symmetric3());
  CHECK(f1g->same_table(*symmetric3()));

  CHECK_THROWS_AS(function_space(cyclic(12), cyclic(12)), budget_exceeded);
}

TEST_CASE("translate") {
  auto z2 = cyclic(2), z3 = cyclic(3);
  FunctionElement h{z2, z2, {0, 1}};
  CHECK(translate(h, 1).values == std::vector<int>{1, 0});
  CHECK(translate(h, 0).values == h.values);

  // action axiom, exhaustive over Z3 functions and translators
  for (int hidx = 0; hidx < 27; ++hidx) {
    FunctionElement g{z3, z3, detail::tuple_values(hidx, 3, 3)};
    for (int b1 = 0; b1 < 3; ++b1)
      for (int b2 = 0; b2 < 3; ++b2)
        CHECK(translate(translate(g, b1), b2).values ==
              translate(g, z3->mul(b1, b2)).values);
  }
}

TEST_CASE("wreath product of Z2 by Z2") {
  auto z2 = cyclic(2);
  auto w = wreath_product(z2, z2);
  CHECK(w.W->order() == 8);

  // hand evaluation of the product rule
  int x = w.pair_index({0, 1}, 1);
  CHECK(w.W->mul(x, x) == w.pair_index({1, 1}, 0));

  CHECK(find_isomorphism(w.W, dihedral(4)).has_value());
}

TEST_CASE("wreath split extension data") {
  auto z3 = cyclic(3), z2 = cyclic(2);
  auto w = wreath_product(z3, z2);
  CHECK(w.W->order() == 18);

  // sigma is a homomorphism (explicitly, on top of hom_check)
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      CHECK(w.W->mul(w.sigma(b1), w.sigma(b2)) == w.sigma(z2->mul(b1, b2)));

  // semidirect compatibility: (h,b) = kappa(h)·sigma(b)
  for (int x = 0; x < w.W->order(); ++x) {
    auto e = w.decode(x);
    CHECK(w.W->mul(w.kappa(w.fs_index(e.h)), w.sigma(e.b)) == x);
  }

  // conjugation by sigma(b) realizes right translation on the kernel
  for (int h = 0; h < w.FS->order(); ++h)
    for (int b = 0; b < 2; ++b) {
      int conj = w.W->conj(w.sigma(b), w.kappa(h));
      FunctionElement fe{w.B, w.A, w.fs_values(h)};
      CHECK(conj == w.kappa(w.fs_index(translate(fe, b).values)));
    }
}

TEST_CASE("wreath structures across small fixtures") {
  struct Case {
    group_ptr a, b;
    int order;
  };
  const Case cases[] = {
      {cyclic(2), cyclic(2), 8},
      {cyclic(3), cyclic(2), 18},
      {cyclic(2), cyclic(3), 24},
      {cyclic(4), cyclic(2), 32},
  };
  for (const auto& c : cases) {
    auto w = wreath_product(c.a, c.b);
    CHECK(w.W->order() == c.order);
    CHECK(image(w.kappa).elements == kernel(w.pi).elements);
  }
}

TEST_CASE("R on morphisms") {
  auto z2 = cyclic(2);
  auto wa = wreath_product(z2, z2);

  auto r_id = R_on_morphism(wa, wa, identity_hom(z2));
  CHECK(r_id.base.phi_G.map == identity_hom(wa.W).map);

  // zero map collapses the kernel to constant-identity functions
  auto r_zero = R_on_morphism(wa, wa, zero_hom(z2, z2));
  for (int h = 0; h < wa.FS->order(); ++h)
    CHECK(r_zero.base.phi_A(h) == 0);

  // functoriality, exhaustive over all homs Z2 -> Z2 -> Z2
  for (const auto& g1 : enumerate_homs(z2, z2))
    for (const auto& g2 : enumerate_homs(z2, z2)) {
      auto lhs = R_on_morphism(wa, wa, compose(g2, g1));
      auto rhs = compose(R_on_morphism(wa, wa, g2).base,
                         R_on_morphism(wa, wa, g1).base);
      CHECK(lhs.base.phi_G.map == rhs.phi_G.map);
      CHECK(lhs.base.phi_A.map == rhs.phi_A.map);
    }

  auto wz3 = wreath_product(cyclic(3), cyclic(3));
  CHECK_THROWS_AS(R_on_morphism(wa, wz3, identity_hom(z2)), mismatched_base);
}
