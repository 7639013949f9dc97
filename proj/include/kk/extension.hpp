#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/group.hpp"

namespace kk {

/// A short exact sequence 0 -> A -k-> G -f-> B -> 0, validated exhaustively
/// at construction: k injective, f surjective, image(k) = kernel(f).
struct Extension {
  group_ptr A, G, B;
  GroupHom k;  // A -> G
  GroupHom f;  // G -> B

  /// Index of the unique a with k(a) = g, or -1 when g is outside image(k).
  int pull_back(int g) const { return kernel_index_[g]; }

  std::vector<int> kernel_index_;  // filled by make_extension
};

Extension make_extension(group_ptr A, group_ptr G, group_ptr B, GroupHom k,
                         GroupHom f);

/// A set-theoretic section of f: any right inverse, no homomorphism law,
/// and s(identity) = identity is NOT required.
struct Section {
  std::vector<int> map;  // length |B|, f(map[b]) = b

  int operator()(int b) const { return map[b]; }
};

Section section_check(const Extension& e, std::vector<int> map);

/// All set-theoretic sections, enumerated fiberwise.  The order is the
/// mixed-radix odometer over the fibers with b = |B|-1 moving fastest;
/// fiber entries ascend.  CLI section indices refer to this order.
std::vector<Section> sections(const Extension& e);

/// A homomorphic section, if any section passes hom_check.
std::optional<GroupHom> is_split(const Extension& e);

struct SplitExtension {
  Extension ext;
  GroupHom s;  // B -> G, f∘s = id
};

SplitExtension make_split_extension(Extension e, GroupHom s);

/// A morphism of extensions over the same B: phi_G∘k = l∘phi_A and
/// g∘phi_G = f.
struct ExtMorphism {
  Extension source, target;
  GroupHom phi_A;  // A -> C
  GroupHom phi_G;  // G -> H
  bool mono = false;
};

ExtMorphism check_morphism(const Extension& source, const Extension& target,
                           GroupHom phi_A, GroupHom phi_G);

/// Additionally phi_G∘s = t.
struct SplitExtMorphism {
  ExtMorphism base;
};

SplitExtMorphism check_split_morphism(const SplitExtension& source,
                                      const SplitExtension& target,
                                      GroupHom phi_A, GroupHom phi_G);

ExtMorphism identity_morphism(const Extension& e);
ExtMorphism compose(const ExtMorphism& outer, const ExtMorphism& inner);
SplitExtMorphism compose(const SplitExtMorphism& outer,
                         const SplitExtMorphism& inner,
                         const SplitExtension& source,
                         const SplitExtension& target);

/// An action of B on A: one automorphism per element of B, with
/// rho[0] = id and rho[b1*b2] = rho[b1]∘rho[b2].
struct GroupAction {
  group_ptr B, A;
  std::vector<std::vector<int>> rho;

  int apply(int b, int a) const { return rho[b][a]; }
};

GroupAction action_check(group_ptr B, group_ptr A,
                         std::vector<std::vector<int>> rho);

/// The split extension A -> A⋊B <-> B with
/// (a,b)(a',b') = (a·rho[b](a'), b·b'), pair index a*|B|+b.
SplitExtension semidirect_from_action(const GroupAction& action);

// ---------------------------------------------------------------------------

inline Extension make_extension(group_ptr A, group_ptr G, group_ptr B,
                                GroupHom k, GroupHom f) {
  if (!k.domain->same_table(*A) || !k.codomain->same_table(*G) ||
      !f.domain->same_table(*G) || !f.codomain->same_table(*B))
    throw not_exact("component homs do not match the stated groups");
  if (!is_injective(k)) throw not_exact("k is not injective");
  if (!is_surjective(f)) throw not_exact("f is not surjective");
  Subgroup im = image(k), ker = kernel(f);
  if (im.elements != ker.elements) {
    for (int g : im.elements)
      if (!ker.contains(g))
        throw not_exact("image(k) not contained in kernel(f), witness g=" +
                        std::to_string(g));
    throw not_exact("kernel(f) strictly larger than image(k)");
  }
  Extension e{std::move(A), std::move(G), std::move(B), std::move(k),
              std::move(f), {}};
  e.kernel_index_.assign(e.G->order(), -1);
  for (int a = 0; a < e.A->order(); ++a) e.kernel_index_[e.k(a)] = a;
  return e;
}

inline Section section_check(const Extension& e, std::vector<int> map) {
  if (static_cast<int>(map.size()) != e.B->order())
    throw not_a_section("section length != |B|");
  for (int b = 0; b < e.B->order(); ++b) {
    if (map[b] < 0 || map[b] >= e.G->order())
      throw not_a_section("section value out of range");
    if (e.f(map[b]) != b)
      throw not_a_section("f∘s != id at b=" + std::to_string(b));
  }
  return Section{std::move(map)};
}

inline std::vector<Section> sections(const Extension& e) {
  const int nb = e.B->order();
  std::vector<std::vector<int>> fiber(nb);
  for (int g = 0; g < e.G->order(); ++g) fiber[e.f(g)].push_back(g);

  std::vector<Section> out;
  std::vector<int> pick(nb, 0);
  for (;;) {
    std::vector<int> map(nb);
    for (int b = 0; b < nb; ++b) map[b] = fiber[b][pick[b]];
    out.push_back(Section{std::move(map)});
    int b = nb - 1;
    while (b >= 0 && ++pick[b] == static_cast<int>(fiber[b].size()))
      pick[b--] = 0;
    if (b < 0) break;
  }
  return out;
}

inline std::optional<GroupHom> is_split(const Extension& e) {
  for (const Section& s : sections(e)) {
    try {
      return hom_check(e.B, e.G, s.map);
    } catch (const not_a_hom&) {
    }
  }
  return std::nullopt;
}

inline SplitExtension make_split_extension(Extension e, GroupHom s) {
  if (!s.domain->same_table(*e.B) || !s.codomain->same_table(*e.G))
    throw not_a_section("splitting has wrong signature");
  for (int b = 0; b < e.B->order(); ++b)
    if (e.f(s(b)) != b)
      throw not_a_section("f∘s != id at b=" + std::to_string(b));
  return SplitExtension{std::move(e), std::move(s)};
}

inline ExtMorphism check_morphism(const Extension& source,
                                  const Extension& target, GroupHom phi_A,
                                  GroupHom phi_G) {
  if (!source.B->same_table(*target.B))
    throw diagram_failure("morphism endpoints live over different B");
  if (!phi_A.domain->same_table(*source.A) ||
      !phi_A.codomain->same_table(*target.A) ||
      !phi_G.domain->same_table(*source.G) ||
      !phi_G.codomain->same_table(*target.G))
    throw diagram_failure("component signatures do not match");
  for (int a = 0; a < source.A->order(); ++a)
    if (phi_G(source.k(a)) != target.k(phi_A(a)))
      throw diagram_failure("kernel square fails at a=" + std::to_string(a));
  for (int g = 0; g < source.G->order(); ++g)
    if (target.f(phi_G(g)) != source.f(g))
      throw diagram_failure("projection triangle fails at g=" +
                            std::to_string(g));
  bool mono = is_injective(phi_A) && is_injective(phi_G);
  return ExtMorphism{source, target, std::move(phi_A), std::move(phi_G), mono};
}

inline SplitExtMorphism check_split_morphism(const SplitExtension& source,
                                             const SplitExtension& target,
                                             GroupHom phi_A, GroupHom phi_G) {
  ExtMorphism base = check_morphism(source.ext, target.ext, std::move(phi_A),
                                    std::move(phi_G));
  for (int b = 0; b < source.ext.B->order(); ++b)
    if (base.phi_G(source.s(b)) != target.s(b))
      throw diagram_failure("splitting square fails at b=" + std::to_string(b));
  return SplitExtMorphism{std::move(base)};
}

inline ExtMorphism identity_morphism(const Extension& e) {
  return check_morphism(e, e, identity_hom(e.A), identity_hom(e.G));
}

inline ExtMorphism compose(const ExtMorphism& outer, const ExtMorphism& inner) {
  if (!inner.target.G->same_table(*outer.source.G))
    throw diagram_failure("composition endpoints do not match");
  return check_morphism(inner.source, outer.target,
                        compose(outer.phi_A, inner.phi_A),
                        compose(outer.phi_G, inner.phi_G));
}

inline SplitExtMorphism compose(const SplitExtMorphism& outer,
                                const SplitExtMorphism& inner,
                                const SplitExtension& source,
                                const SplitExtension& target) {
  ExtMorphism base = compose(outer.base, inner.base);
  return check_split_morphism(source, target, base.phi_A, base.phi_G);
}

inline GroupAction action_check(group_ptr B, group_ptr A,
                                std::vector<std::vector<int>> rho) {
  if (static_cast<int>(rho.size()) != B->order())
    throw not_an_action("need one automorphism per element of B");
  for (int b = 0; b < B->order(); ++b) {
    try {
      GroupHom h = hom_check(A, A, rho[b]);
      if (!is_injective(h))
        throw not_an_action("rho[" + std::to_string(b) +
                            "] is not an automorphism");
    } catch (const not_a_hom&) {
      throw not_an_action("rho[" + std::to_string(b) +
                          "] is not an automorphism");
    }
  }
  for (int a = 0; a < A->order(); ++a)
    if (rho[0][a] != a) throw not_an_action("rho[identity] is not id");
  for (int b1 = 0; b1 < B->order(); ++b1)
    for (int b2 = 0; b2 < B->order(); ++b2)
      for (int a = 0; a < A->order(); ++a)
        if (rho[B->mul(b1, b2)][a] != rho[b1][rho[b2][a]])
          throw not_an_action("rho is not a homomorphism at (" +
                              std::to_string(b1) + "," + std::to_string(b2) +
                              ")");
  return GroupAction{std::move(B), std::move(A), std::move(rho)};
}

inline SplitExtension semidirect_from_action(const GroupAction& action) {
  const auto& A = action.A;
  const auto& B = action.B;
  const int na = A->order(), nb = B->order();
  auto pair_index = [nb](int a, int b) { return a * nb + b; };

  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[pair_index(a1, b1)][pair_index(a2, b2)] =
              pair_index(A->mul(a1, action.apply(b1, a2)), B->mul(b1, b2));
  group_ptr M =
      FiniteGroup::from_table(A->name() + ":" + B->name(), table);

  std::vector<int> kmap(na), fmap(na * nb), smap(nb);
  for (int a = 0; a < na; ++a) kmap[a] = pair_index(a, 0);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) fmap[pair_index(a, b)] = b;
  for (int b = 0; b < nb; ++b) smap[b] = pair_index(0, b);

  Extension e = make_extension(A, M, B, hom_check(A, M, kmap),
                               hom_check(M, B, fmap));
  return make_split_extension(std::move(e), hom_check(B, M, smap));
}

}  // namespace kk
