#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kk/embedding.hpp"
#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/free_product.hpp"
#include "kk/group.hpp"

namespace kk {

/// An element of the wreath product of the presented kernel KL(E) by B:
/// a table of presentation words (one per element of B, kept in normal
/// form) and a B-part.  The group KL(E) is infinite, so these tables are
/// the only finite carrier; equality is direct table comparison.
struct CrudeElement {
  std::vector<PresWord> table;
  int b = 0;

  friend bool operator==(const CrudeElement&, const CrudeElement&) = default;
};

inline CrudeElement crude_identity(const Extension& e) {
  return CrudeElement{std::vector<PresWord>(e.B->order()), 0};
}

/// Wreath multiplication with pointwise concatenation and the same
/// right-translation convention as the finite wreath:
///   (t1,b1)(t2,b2) = (b ↦ nf(t1[b]·t2[b·b1]), b1·b2).
inline CrudeElement crude_mul(const Extension& e, const CrudeElement& u,
                              const CrudeElement& v) {
  const int nb = e.B->order();
  CrudeElement out{std::vector<PresWord>(nb), e.B->mul(u.b, v.b)};
  for (int b = 0; b < nb; ++b)
    out.table[b] = pres_concat(e, u.table[b], v.table[e.B->mul(b, u.b)]);
  return out;
}

/// The unit of the composite adjunction at E: g ↦ (b ↦ (g,b), f(g)).
inline CrudeElement upsilon_at(const Extension& e, int g) {
  const int nb = e.B->order();
  CrudeElement out{std::vector<PresWord>(nb), e.f(g)};
  for (int b = 0; b < nb; ++b)
    out.table[b] = pres_normal_form(e, PresWord{{PresGen{g, b}}});
  return out;
}

inline std::vector<CrudeElement> upsilon(const Extension& e) {
  std::vector<CrudeElement> out;
  out.reserve(e.G->order());
  for (int g = 0; g < e.G->order(); ++g) out.push_back(upsilon_at(e, g));
  return out;
}

/// chi on a single generator: (g,b) ↦ k^{-1}(s(b)·g·s(b·f(g))^{-1}).
inline int chi_generator(const Extension& e, const Section& s, const PresGen& x) {
  int conj = e.G->mul(e.G->mul(s(x.b), x.g),
                      e.G->inv(s(e.B->mul(x.b, e.f(x.g)))));
  int a = e.pull_back(conj);
  if (a < 0)
    throw value_outside_kernel("chi generator value outside image(k)");
  return a;
}

/// chi extended multiplicatively over the generators of a word, with the
/// product taken in A.
inline int chi_apply(const Extension& e, const Section& s, const PresWord& p) {
  int acc = 0;
  for (const PresGen& x : p.gens) acc = e.A->mul(acc, chi_generator(e, s, x));
  return acc;
}

struct ChiCertificate {
  int relation_instances = 0;  // |G|^2·|B| product relations + |B| unit ones
};

/// Exhaustive well-definedness certificate: chi respects both defining
/// relations of the presentation.
inline ChiCertificate chi_certify(const Extension& e, const Section& s) {
  ChiCertificate cert;
  for (int b = 0; b < e.B->order(); ++b) {
    if (chi_generator(e, s, PresGen{0, b}) != 0)
      throw well_definedness_failure("chi(1, b) != 1 at b=" +
                                     std::to_string(b));
    ++cert.relation_instances;
  }
  for (int g = 0; g < e.G->order(); ++g)
    for (int gp = 0; gp < e.G->order(); ++gp)
      for (int b = 0; b < e.B->order(); ++b) {
        int lhs = e.A->mul(
            chi_generator(e, s, PresGen{g, b}),
            chi_generator(e, s, PresGen{gp, e.B->mul(b, e.f(g))}));
        int rhs = chi_generator(e, s, PresGen{e.G->mul(g, gp), b});
        if (lhs != rhs)
          throw well_definedness_failure(
              "chi breaks the merge relation at (g=" + std::to_string(g) +
              ", g'=" + std::to_string(gp) + ", b=" + std::to_string(b) + ")");
        ++cert.relation_instances;
      }
  return cert;
}

struct RecoveryResult {
  ExtMorphism morphism;  // W(chi)∘upsilon_E, validated
  ChiCertificate certificate;
};

/// Post-composes every upsilon table with chi and certifies pointwise
/// equality with the classical embedding for the same section.
inline RecoveryResult compose_recover(const Extension& e, const Section& s,
                                      long long budget = kDefaultWreathBudget) {
  ChiCertificate cert = chi_certify(e, s);
  KKEmbedding classical = kk_embed(e, s, budget);
  const WreathStructure& w = classical.target;

  std::vector<int> phi_g(e.G->order());
  for (int g = 0; g < e.G->order(); ++g) {
    CrudeElement ce = upsilon_at(e, g);
    std::vector<int> values(e.B->order());
    for (int b = 0; b < e.B->order(); ++b)
      values[b] = chi_apply(e, s, ce.table[b]);
    phi_g[g] = w.pair_index(values, ce.b);
    if (phi_g[g] != classical.morphism.phi_G(g))
      throw classical_mismatch("W(chi)∘upsilon disagrees with the classical "
                               "embedding at g=" + std::to_string(g));
  }

  std::vector<int> phi_a(e.A->order());
  for (int a = 0; a < e.A->order(); ++a) phi_a[a] = phi_g[e.k(a)] / e.B->order();
  ExtMorphism m =
      check_morphism(e, w.split.ext, hom_check(e.A, w.FS, phi_a),
                     hom_check(e.G, w.W, phi_g));
  return RecoveryResult{std::move(m), cert};
}

}  // namespace kk
