#pragma once

#include <vector>

#include "kk/beck.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"
#include "kk/lie.hpp"

namespace kk::fixtures {

/// 0 -> Z2 -(x↦2x)-> Z4 -(mod 2)-> Z2 -> 0, the classical non-split example.
inline Extension z4_over_z2() {
  auto z4 = cyclic(4), z2 = cyclic(2);
  return make_extension(z2, z4, z2, hom_check(z2, z4, {0, 2}),
                        hom_check(z4, z2, {0, 1, 0, 1}));
}

/// 0 -> Z2 -(a↦(a,0))-> Z2xZ2 -(second projection)-> Z2 -> 0.
inline Extension klein_projection() {
  auto v4 = klein_four(), z2 = cyclic(2);
  return make_extension(z2, v4, z2, hom_check(z2, v4, {0, 2}),
                        hom_check(v4, z2, {0, 1, 0, 1}));
}

/// The shear (m,n) ↦ (m+n,n) on Z2xZ2: a second endomorphism of
/// klein_projection with the same kernel component as the identity.
inline GroupHom klein_shear() {
  auto v4 = klein_four();
  return hom_check(v4, v4, {0, 3, 2, 1});
}

/// Inversion action of Z2 on Zn.
inline GroupAction inversion_action(int n) {
  auto zn = cyclic(n), z2 = cyclic(2);
  std::vector<int> id(n), inv(n);
  for (int a = 0; a < n; ++a) {
    id[a] = a;
    inv[a] = (n - a) % n;
  }
  return action_check(z2, zn, {id, inv});
}

/// Z3 ⋊ Z2 with inversion; the middle group is S3.
inline SplitExtension s3_split() {
  return semidirect_from_action(inversion_action(3));
}

/// Z4 ⋊ Z2 with inversion; the middle group is D4.
inline SplitExtension d4_split() {
  return semidirect_from_action(inversion_action(4));
}

/// A ⋊ B with every rho[b] = id, i.e. the direct product split extension.
inline SplitExtension trivial_action_split(const group_ptr& A,
                                           const group_ptr& B) {
  std::vector<int> id(A->order());
  for (int a = 0; a < A->order(); ++a) id[a] = a;
  std::vector<std::vector<int>> rho(B->order(), id);
  return semidirect_from_action(action_check(B, A, rho));
}

/// 0 -> 1 -> B -(id)-> B -> 0.
inline Extension identity_extension(const group_ptr& B) {
  auto one = trivial_group();
  return make_extension(one, B, B, hom_check(one, B, {0}),
                        identity_hom(B));
}

/// 0 -> 1 -> Z2 -(id)-> Z2 -> 0, the base fixture for free-product words.
inline Extension z2_identity() { return identity_extension(cyclic(2)); }

/// Every catalog extension with |G| <= 8, with a label.
struct NamedExtension {
  const char* name;
  Extension ext;
};

inline std::vector<NamedExtension> small_extensions() {
  return {
      {"z4-over-z2", z4_over_z2()},
      {"klein-projection", klein_projection()},
      {"s3-over-z2", s3_split().ext},
      {"d4-over-z2", d4_split().ext},
      {"z2-identity", z2_identity()},
      {"z2xz2-trivial", trivial_action_split(cyclic(2), cyclic(2)).ext},
  };
}

struct NamedSplitExtension {
  const char* name;
  SplitExtension split;
};

inline std::vector<NamedSplitExtension> small_split_extensions() {
  return {
      {"s3-over-z2", s3_split()},
      {"d4-over-z2", d4_split()},
      {"z3xz2-direct", trivial_action_split(cyclic(3), cyclic(2))},
      {"z2xz2-direct", trivial_action_split(cyclic(2), cyclic(2))},
  };
}

/// Z3 with the inversion action of Z2, the running Beck example.
inline BeckModule z3_inversion_module() {
  return BeckModule{inversion_action(3)};
}

inline BeckModule trivial_module(const group_ptr& B, const group_ptr& M) {
  std::vector<int> id(M->order());
  for (int m = 0; m < M->order(); ++m) id[m] = m;
  return make_beck_module(B, M,
                          std::vector<std::vector<int>>(B->order(), id));
}

struct NamedBeckModule {
  const char* name;
  BeckModule mod;
};

/// The Beck catalog: every |M| <= 4, |B| <= 4 fixture used by the suites.
inline std::vector<NamedBeckModule> small_beck_modules() {
  std::vector<NamedBeckModule> out;
  out.push_back({"z3-inversion", z3_inversion_module()});
  out.push_back({"z3-trivial", trivial_module(cyclic(2), cyclic(3))});
  out.push_back({"z4-inversion", BeckModule{inversion_action(4)}});
  out.push_back({"z2-over-z3", trivial_module(cyclic(3), cyclic(2))});

  {  // Z4 acting on Z4 through inversion of the parity
    auto z4 = cyclic(4);
    std::vector<int> id = {0, 1, 2, 3}, inv = {0, 3, 2, 1};
    out.push_back({"z4-parity-inversion",
                   make_beck_module(z4, z4, {id, inv, id, inv})});
  }
  {  // Klein group acting on Z3 through the sum of coordinates
    auto v4 = klein_four();
    auto z3 = cyclic(3);
    std::vector<int> id = {0, 1, 2}, inv = {0, 2, 1};
    out.push_back({"klein-on-z3",
                   make_beck_module(v4, z3, {id, inv, inv, id})});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lie fixtures

struct LieFixture {
  const char* name;
  LieExtension ext;
  LinearSection s;
};

/// Heisenberg algebra: basis (x, y, z) with [x,y] = z.
inline lie_ptr heisenberg() {
  return make_lie("h3", 3, {{0, 1, {Rat(0), Rat(0), Rat(1)}}});
}

/// The non-split central extension 0 -> span{z} -> h3 -> K^2 -> 0 with
/// the obvious (non-hom) section.
inline LieFixture h3_fixture() {
  auto g = heisenberg();
  auto a = abelian_lie(1, "span-z");
  auto b = abelian_lie(2, "K2");
  LieHom k = lie_hom_check(a, g, {{Rat(0)}, {Rat(0)}, {Rat(1)}});
  LieHom f = lie_hom_check(g, b,
                           {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
  LieExtension e = make_lie_extension(a, g, b, k, f);
  LinearSection s = make_section(
      e, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
  return LieFixture{"heisenberg", std::move(e), std::move(s)};
}

/// aff(1): basis (a, b) with [b,a] = a; A = span{a}, B = span{b},
/// s(b) = b is a Lie homomorphism, so the fixture is split.
inline LieFixture aff1_fixture() {
  auto g = make_lie("aff1", 2, {{0, 1, {Rat(-1), Rat(0)}}});
  auto a = abelian_lie(1, "span-a");
  auto b = abelian_lie(1, "span-b");
  LieHom k = lie_hom_check(a, g, {{Rat(1)}, {Rat(0)}});
  LieHom f = lie_hom_check(g, b, {{Rat(0), Rat(1)}});
  LieExtension e = make_lie_extension(a, g, b, k, f);
  LinearSection s = make_section(e, {{Rat(0)}, {Rat(1)}});
  return LieFixture{"aff1", std::move(e), std::move(s)};
}

/// The 2-dimensional solvable algebra [b1, b2] = b2.
inline lie_ptr solvable2() {
  return make_lie("solv2", 2, {{0, 1, {Rat(0), Rat(1)}}});
}

/// A split fixture with non-abelian base: basis (a, b1, b2) with
/// [b1,b2] = b2 and [b1,a] = a; A = span{a}, B = solvable2.
inline LieFixture split3_fixture() {
  auto g = make_lie("solv3", 3,
                    {{0, 1, {Rat(-1), Rat(0), Rat(0)}},
                     {1, 2, {Rat(0), Rat(0), Rat(1)}}});
  auto a = abelian_lie(1, "span-a");
  auto b = solvable2();
  LieHom k = lie_hom_check(a, g, {{Rat(1)}, {Rat(0)}, {Rat(0)}});
  LieHom f = lie_hom_check(g, b,
                           {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  LieExtension e = make_lie_extension(a, g, b, k, f);
  LinearSection s = make_section(
      e, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  return LieFixture{"solv3", std::move(e), std::move(s)};
}

/// Everything abelian: 0 -> K -> K^2 -> K -> 0, split.
inline LieFixture abelian_lie_fixture() {
  auto g = abelian_lie(2, "K2");
  auto a = abelian_lie(1, "K-a");
  auto b = abelian_lie(1, "K-b");
  LieHom k = lie_hom_check(a, g, {{Rat(1)}, {Rat(0)}});
  LieHom f = lie_hom_check(g, b, {{Rat(0), Rat(1)}});
  LieExtension e = make_lie_extension(a, g, b, k, f);
  LinearSection s = make_section(e, {{Rat(0)}, {Rat(1)}});
  return LieFixture{"abelian", std::move(e), std::move(s)};
}

inline std::vector<LieFixture> lie_fixtures() {
  return {aff1_fixture(), split3_fixture(), abelian_lie_fixture(),
          h3_fixture()};
}

}  // namespace kk::fixtures
