#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kk/embedding.hpp"
#include "kk/fixtures.hpp"
#include "kk/group.hpp"
#include "kk/wreath.hpp"

using namespace kk;

TEST_CASE("classical embedding of the Z4 extension") {
  auto e = fixtures::z4_over_z2();
  auto emb = kk_embed(e, section_check(e, {0, 1}));
  const auto& w = emb.target;

  // frozen hand computations: h_1 = (0,1), h_2 = (1,1), h_3 = (1,0)
  CHECK(emb.morphism.phi_G(1) == w.pair_index({0, 1}, 1));
  CHECK(emb.morphism.phi_G(2) == w.pair_index({1, 1}, 0));
  CHECK(emb.morphism.phi_G(3) == w.pair_index({1, 0}, 1));

  // conjugation is trivial in the abelian middle: phi_A(a) is constant a
  for (int a = 0; a < 2; ++a)
    CHECK(emb.morphism.phi_A(a) == w.fs_index({a, a}));

  CHECK_FALSE(emb.split);
}

TEST_CASE("every section of the Z4 extension embeds") {
  auto e = fixtures::z4_over_z2();
  auto secs = sections(e);
  REQUIRE(secs.size() == 4);
  for (const auto& s : secs) {
    auto emb = kk_embed(e, s);
    auto rep = verify_embedding(emb);
    CHECK(rep.injective_A);
    CHECK(rep.injective_G);
    CHECK(rep.diagram_ok);
    CHECK(rep.witnesses.empty());
    CHECK_FALSE(rep.equivariant.has_value());
    CHECK(image_order(emb.morphism) == 4);
  }
}

TEST_CASE("eta on the S3 split extension") {
  auto s = fixtures::s3_split();
  auto emb = eta_split(s);
  CHECK(emb.target.W->order() == 18);
  CHECK(image_order(emb.morphism) == 6);
  CHECK(emb.split);

  auto rep = verify_embedding(emb);
  CHECK(rep.all_ok());
  REQUIRE(rep.equivariant.has_value());
  CHECK(*rep.equivariant);
}

TEST_CASE("eta on a direct product has constant functions") {
  auto s = fixtures::trivial_action_split(cyclic(3), cyclic(2));
  auto emb = eta_split(s);
  const auto& w = emb.target;
  for (int g = 0; g < s.ext.G->order(); ++g) {
    auto we = w.decode(emb.morphism.phi_G(g));
    for (int b = 1; b < s.ext.B->order(); ++b) CHECK(we.h[b] == we.h[0]);
  }
  CHECK(verify_embedding(emb).all_ok());
}

TEST_CASE("eta on the identity extension lands on sigma") {
  auto b = cyclic(3);
  auto e = fixtures::identity_extension(b);
  auto s = make_split_extension(e, identity_hom(b));
  auto emb = eta_split(s);
  for (int x = 0; x < 3; ++x)
    CHECK(emb.morphism.phi_G(x) == emb.target.sigma(x));
}

TEST_CASE("embedding across every small fixture and every section") {
  for (const auto& [name, e] : fixtures::small_extensions()) {
    INFO(name);
    for (const auto& s : sections(e)) {
      auto emb = kk_embed(e, s);
      auto rep = verify_embedding(emb);
      CHECK(rep.all_ok());
    }
  }
}

TEST_CASE("split equivariance on S3 and D4") {
  for (const auto& [name, se] : fixtures::small_split_extensions()) {
    INFO(name);
    auto rep = verify_embedding(eta_split(se));
    REQUIRE(rep.equivariant.has_value());
    CHECK(*rep.equivariant);
    CHECK(rep.witnesses.empty());
  }
}

TEST_CASE("universal factorization recovers every gamma") {
  auto s = fixtures::s3_split();
  auto eta = eta_split(s);
  auto target = wreath_product(cyclic(3), cyclic(2));

  // alpha = eta itself factors through the identity
  auto fact = universal_factorization(s, eta.target, *eta.split_morphism);
  CHECK(fact.alpha_bar.map == identity_hom(s.ext.A).map);
  CHECK(fact.uniqueness_count == 1);

  // alpha = R(gamma)∘eta round-trips for every hom Z3 -> Z3
  auto gammas = enumerate_homs(cyclic(3), cyclic(3));
  REQUIRE(gammas.size() == 3);
  for (const auto& gamma : gammas) {
    auto r = R_on_morphism(eta.target, target, gamma);
    auto alpha = check_split_morphism(
        SplitExtension{s.ext, hom_check(s.ext.B, s.ext.G, s.s.map)},
        target.split, compose(r.base.phi_A, eta.morphism.phi_A),
        compose(r.base.phi_G, eta.morphism.phi_G));
    auto f = universal_factorization(s, target, alpha);
    CHECK(f.alpha_bar.map == gamma.map);
    CHECK(f.uniqueness_count == 1);
  }
}

TEST_CASE("naturality of eta along an automorphism of S3") {
  auto s = fixtures::s3_split();
  const auto& g = s.ext.G;

  // (a,b) ↦ (-a,b) is a morphism of split extensions with kernel map
  // the inversion of Z3
  std::vector<int> phi_g(6), gamma_map = {0, 2, 1};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) phi_g[a * 2 + b] = gamma_map[a] * 2 + b;
  auto gamma = hom_check(s.ext.A, s.ext.A, gamma_map);
  auto m = check_split_morphism(s, s, gamma, hom_check(g, g, phi_g));

  auto eta = eta_split(s);
  auto r = R_on_morphism(eta.target, eta.target, gamma);

  // R(gamma)∘eta_S = eta_T∘m (here T = S)
  CHECK(compose(r.base.phi_A, eta.morphism.phi_A).map ==
        compose(eta.morphism.phi_A, m.base.phi_A).map);
  CHECK(compose(r.base.phi_G, eta.morphism.phi_G).map ==
        compose(eta.morphism.phi_G, m.base.phi_G).map);
}
