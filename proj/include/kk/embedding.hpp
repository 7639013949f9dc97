#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"
#include "kk/wreath.hpp"

namespace kk {

/// The classical embedding of an extension into the wreath product of its
/// end groups, for a chosen set-theoretic section:
///   phi_G(g) = (h_g, f(g)),  h_g(b) = k^{-1}(s(b)·g·s(b·f(g))^{-1}).
/// When the section happens to be a homomorphism the embedding is also
/// compatible with the canonical splitting (phi_G∘s = sigma) and the
/// split morphism is filled in.
struct KKEmbedding {
  Extension source;
  WreathStructure target;
  Section section;
  ExtMorphism morphism;  // source -> target.split.ext, validated
  bool split = false;
  std::optional<SplitExtMorphism> split_morphism;  // present iff split
};

inline KKEmbedding kk_embed(const Extension& e, const Section& s,
                            long long budget = kDefaultWreathBudget) {
  WreathStructure w = wreath_product(e.A, e.B, budget);
  const int nb = e.B->order();

  std::vector<int> phi_g(e.G->order());
  for (int g = 0; g < e.G->order(); ++g) {
    const int fg = e.f(g);
    std::vector<int> hvals(nb);
    for (int b = 0; b < nb; ++b) {
      int conj = e.G->mul(e.G->mul(s(b), g), e.G->inv(s(e.B->mul(b, fg))));
      int a = e.pull_back(conj);
      if (a < 0)
        throw value_outside_kernel(
            "h_g(b) outside image(k) at g=" + std::to_string(g) +
            ", b=" + std::to_string(b));
      hvals[b] = a;
    }
    phi_g[g] = w.pair_index(hvals, fg);
  }

  std::vector<int> phi_a(e.A->order());
  for (int a = 0; a < e.A->order(); ++a) phi_a[a] = phi_g[e.k(a)] / nb;

  ExtMorphism m = check_morphism(e, w.split.ext, hom_check(e.A, w.FS, phi_a),
                                 hom_check(e.G, w.W, phi_g));

  KKEmbedding out{e, std::move(w), s, std::move(m), false, std::nullopt};
  try {
    GroupHom hom_s = hom_check(e.B, e.G, s.map);
    SplitExtension src{e, hom_s};
    out.split_morphism = check_split_morphism(
        src, out.target.split, out.morphism.phi_A, out.morphism.phi_G);
    out.split = true;
  } catch (const not_a_hom&) {
  }
  return out;
}

/// The unit of the adjunction at a split extension: the classical
/// embedding along the homomorphic section.
inline KKEmbedding eta_split(const SplitExtension& s,
                             long long budget = kDefaultWreathBudget) {
  KKEmbedding emb = kk_embed(s.ext, Section{s.s.map}, budget);
  if (!emb.split)
    throw internal_failure("eta_split: splitting did not survive embedding");
  return emb;
}

struct EmbeddingReport {
  bool injective_A = false;
  bool injective_G = false;
  bool diagram_ok = false;
  std::optional<bool> equivariant;  // present only for split sources
  std::vector<std::string> witnesses;

  bool all_ok() const {
    return injective_A && injective_G && diagram_ok &&
           equivariant.value_or(true);
  }
};

namespace detail {

inline void check_diagram(const ExtMorphism& m, EmbeddingReport& rep) {
  rep.diagram_ok = true;
  for (int a = 0; a < m.source.A->order(); ++a)
    if (m.phi_G(m.source.k(a)) != m.target.k(m.phi_A(a))) {
      rep.diagram_ok = false;
      rep.witnesses.push_back("kernel square fails at a=" + std::to_string(a));
    }
  for (int g = 0; g < m.source.G->order(); ++g)
    if (m.target.f(m.phi_G(g)) != m.source.f(g)) {
      rep.diagram_ok = false;
      rep.witnesses.push_back("projection fails at g=" + std::to_string(g));
    }
}

}  // namespace detail

/// Reports injectivity of both components and both diagram squares.
inline EmbeddingReport verify_embedding(const ExtMorphism& m) {
  EmbeddingReport rep;
  rep.injective_A = is_injective(m.phi_A);
  if (!rep.injective_A) rep.witnesses.push_back("phi_A not injective");
  rep.injective_G = is_injective(m.phi_G);
  if (!rep.injective_G) rep.witnesses.push_back("phi_G not injective");
  detail::check_diagram(m, rep);
  return rep;
}

/// Full report for an embedding; when the section is a homomorphism this
/// additionally checks equivariance
///   translate(phi_A(a), b) = phi_A(a^b),  a^b = k^{-1}(s(b)·k(a)·s(b)^{-1})
/// for every pair (a, b).
inline EmbeddingReport verify_embedding(const KKEmbedding& emb) {
  EmbeddingReport rep = verify_embedding(emb.morphism);
  if (!emb.split) return rep;

  const Extension& e = emb.source;
  const WreathStructure& w = emb.target;
  bool ok = true;
  for (int a = 0; a < e.A->order(); ++a) {
    FunctionElement fa{e.B, e.A, w.fs_values(emb.morphism.phi_A(a))};
    for (int b = 0; b < e.B->order(); ++b) {
      int sb = emb.section(b);
      int a_b = e.pull_back(e.G->mul(e.G->mul(sb, e.k(a)), e.G->inv(sb)));
      if (a_b < 0)
        throw value_outside_kernel("conjugate outside kernel at a=" +
                                   std::to_string(a));
      if (translate(fa, b).values != w.fs_values(emb.morphism.phi_A(a_b))) {
        ok = false;
        rep.witnesses.push_back("equivariance fails at (a=" +
                                std::to_string(a) + ", b=" +
                                std::to_string(b) + ")");
      }
    }
  }
  rep.equivariant = ok;
  return rep;
}

/// Order of the image of the middle component.
inline int image_order(const ExtMorphism& m) {
  return static_cast<int>(image(m.phi_G).elements.size());
}

struct Factorization {
  GroupHom alpha_bar;     // A -> C
  int uniqueness_count;   // satisfiers among all homs A -> C; must be 1
};

/// Universality of the wreath product: any morphism of split extensions
/// alpha: S -> R(C) factors as R(alpha_bar)∘eta_S for the unique
/// alpha_bar(a) = K(alpha)(a)(identity).  Both the factorization and the
/// uniqueness count are certified by enumeration.
inline Factorization universal_factorization(
    const SplitExtension& s, const WreathStructure& target,
    const SplitExtMorphism& alpha, long long budget = kDefaultHomBudget) {
  const group_ptr& a_obj = s.ext.A;
  const group_ptr& c_obj = target.A;
  if (!alpha.base.source.G->same_table(*s.ext.G) ||
      !alpha.base.target.G->same_table(*target.W))
    throw mismatched_base("alpha does not go from S to the given wreath");

  std::vector<int> abar(a_obj->order());
  for (int a = 0; a < a_obj->order(); ++a)
    abar[a] = target.fs_values(alpha.base.phi_A(a))[0];
  GroupHom alpha_bar = [&] {
    try {
      return hom_check(a_obj, c_obj, abar);
    } catch (const not_a_hom&) {
      throw factorization_failure("K(alpha)(-)(1) is not a homomorphism");
    }
  }();

  KKEmbedding eta = eta_split(s);
  auto matches = [&](const GroupHom& gamma) {
    SplitExtMorphism r = R_on_morphism(eta.target, target, gamma);
    GroupHom mid = compose(r.base.phi_G, eta.morphism.phi_G);
    GroupHom ker = compose(r.base.phi_A, eta.morphism.phi_A);
    return mid.map == alpha.base.phi_G.map && ker.map == alpha.base.phi_A.map;
  };

  if (!matches(alpha_bar))
    throw factorization_failure("R(alpha_bar)∘eta_S != alpha");

  int count = 0;
  for (const GroupHom& gamma : enumerate_homs(a_obj, c_obj, budget))
    if (matches(gamma)) ++count;
  if (count != 1)
    throw uniqueness_failure("expected exactly one factorization, found " +
                             std::to_string(count));
  return Factorization{std::move(alpha_bar), count};
}

}  // namespace kk
