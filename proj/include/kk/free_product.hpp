#pragma once

#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"

namespace kk {

// ---------------------------------------------------------------------------
// Words in the free product G + B

enum class Factor : unsigned char { G, B };

struct FPLetter {
  Factor factor;
  int elt;

  friend auto operator<=>(const FPLetter&, const FPLetter&) = default;
};

/// A word in the free product G + B.  Reduced words have no identity
/// letters and strictly alternate factors; reduce_word establishes that
/// form and every operation below keeps it.
struct FPWord {
  group_ptr G, B;
  std::vector<FPLetter> letters;

  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }

  friend bool operator==(const FPWord& a, const FPWord& b) {
    return a.letters == b.letters;
  }
};

inline FPWord make_word(group_ptr G, group_ptr B,
                        std::vector<FPLetter> letters) {
  for (const auto& l : letters) {
    int n = l.factor == Factor::G ? G->order() : B->order();
    if (l.elt < 0 || l.elt >= n) throw error("letter index out of range");
  }
  return FPWord{std::move(G), std::move(B), std::move(letters)};
}

/// Merges adjacent same-factor letters and deletes identity letters to a
/// fixpoint (single stack pass).  Idempotent and length-nonincreasing.
inline FPWord reduce_word(const FPWord& w) {
  std::vector<FPLetter> out;
  for (const FPLetter& l : w.letters) {
    FPLetter cur = l;
    if (cur.elt == 0) continue;
    while (!out.empty() && out.back().factor == cur.factor) {
      const auto& tbl = cur.factor == Factor::G ? w.G : w.B;
      cur.elt = tbl->mul(out.back().elt, cur.elt);
      out.pop_back();
      if (cur.elt == 0) break;
    }
    if (cur.elt != 0) out.push_back(cur);
  }
  return FPWord{w.G, w.B, std::move(out)};
}

inline FPWord concat(const FPWord& a, const FPWord& b) {
  std::vector<FPLetter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return reduce_word(FPWord{a.G, a.B, std::move(letters)});
}

inline FPWord inverse(const FPWord& w) {
  std::vector<FPLetter> letters;
  letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto& tbl = it->factor == Factor::G ? w.G : w.B;
    letters.push_back(FPLetter{it->factor, tbl->inv(it->elt)});
  }
  return FPWord{w.G, w.B, std::move(letters)};
}

/// Co-pairing out of the coproduct: folds the letter images of u on
/// G-letters and v on B-letters, left to right.
inline int copair_eval(const GroupHom& u, const GroupHom& v, const FPWord& w) {
  if (!u.codomain->same_table(*v.codomain))
    throw not_a_hom("copair components have different codomains");
  int acc = 0;
  for (const FPLetter& l : w.letters)
    acc = u.codomain->mul(acc, l.factor == Factor::G ? u(l.elt) : v(l.elt));
  return acc;
}

/// Membership in Ker<f, 1_B>.
inline bool in_kernel(const Extension& e, const FPWord& w) {
  return copair_eval(e.f, identity_hom(e.B), w) == 0;
}

/// All reduced words of length <= maxlen in the kernel of the fold map,
/// generated directly in alternating form (so each appears once).
inline std::vector<FPWord> enumerate_kernel_words(const Extension& e,
                                                  int maxlen,
                                                  long long budget = 1'000'000) {
  std::vector<FPWord> out;
  long long generated = 0;
  std::vector<FPLetter> cur;

  auto emit = [&] {
    if (++generated > budget)
      throw budget_exceeded("kernel word enumeration budget");
    FPWord w{e.G, e.B, cur};
    if (in_kernel(e, w)) out.push_back(std::move(w));
  };

  // depth-first over alternating non-identity letters
  auto rec = [&](auto&& self, std::optional<Factor> last) -> void {
    emit();
    if (static_cast<int>(cur.size()) == maxlen) return;
    for (Factor f : {Factor::G, Factor::B}) {
      if (last && *last == f) continue;
      int n = f == Factor::G ? e.G->order() : e.B->order();
      for (int x = 1; x < n; ++x) {
        cur.push_back(FPLetter{f, x});
        self(self, f);
        cur.pop_back();
      }
    }
  };
  rec(rec, std::nullopt);
  return out;
}

// ---------------------------------------------------------------------------
// The presentation <G x B | (1,b)=1, (g,b)(g',b·f(g)) = (gg',b)> of the
// kernel of the fold map.

struct PresGen {
  int g, b;

  friend auto operator<=>(const PresGen&, const PresGen&) = default;
};

struct PresWord {
  std::vector<PresGen> gens;

  bool empty() const { return gens.empty(); }
  size_t length() const { return gens.size(); }

  friend bool operator==(const PresWord&, const PresWord&) = default;
};

/// Applies the two defining relations leftmost-first to a fixpoint.  Both
/// relations strictly shrink the word, so this terminates; idempotence
/// and agreement with the free-product side are covered by tests.
inline PresWord pres_normal_form(const Extension& e, PresWord p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < p.gens.size(); ++i) {
      if (p.gens[i].g == 0) {
        p.gens.erase(p.gens.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (i + 1 < p.gens.size() &&
          p.gens[i + 1].b == e.B->mul(p.gens[i].b, e.f(p.gens[i].g))) {
        p.gens[i].g = e.G->mul(p.gens[i].g, p.gens[i + 1].g);
        p.gens.erase(p.gens.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return p;
}

inline PresWord pres_concat(const Extension& e, const PresWord& a,
                            const PresWord& b) {
  PresWord out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return pres_normal_form(e, std::move(out));
}

/// The generator reading (g,b) ↦ b·g·(b·f(g))^{-1}, extended over the
/// word and reduced; lands in the kernel of the fold map.
inline FPWord pres_to_word(const Extension& e, const PresWord& p) {
  std::vector<FPLetter> letters;
  for (const PresGen& x : p.gens) {
    letters.push_back(FPLetter{Factor::B, x.b});
    letters.push_back(FPLetter{Factor::G, x.g});
    letters.push_back(
        FPLetter{Factor::B, e.B->inv(e.B->mul(x.b, e.f(x.g)))});
  }
  FPWord w = reduce_word(FPWord{e.G, e.B, std::move(letters)});
  if (!in_kernel(e, w))
    throw internal_failure("pres_to_word left the kernel");
  return w;
}

/// Reads a reduced kernel word b1 g1 ... bn gn
/// (b1 and the trailing g may be the identity) and emits the generator
/// sequence (g1, b1)(g2, b1 f(g1) b2)..., then normalizes.
inline PresWord word_to_pres(const Extension& e, const FPWord& w) {
  FPWord r = reduce_word(w);
  if (!in_kernel(e, r)) throw not_in_kernel("word is not in the kernel");

  PresWord p;
  int prefix = 0;  // b1 f(g1) ... b_{i-1} f(g_{i-1}) before the i-th pair
  size_t i = 0;
  while (i < r.letters.size()) {
    int b = 0, g = 0;
    if (r.letters[i].factor == Factor::B) b = r.letters[i++].elt;
    if (i < r.letters.size() && r.letters[i].factor == Factor::G)
      g = r.letters[i++].elt;
    prefix = e.B->mul(prefix, b);
    p.gens.push_back(PresGen{g, prefix});
    prefix = e.B->mul(prefix, e.f(g));
  }
  return pres_normal_form(e, std::move(p));
}

// ---------------------------------------------------------------------------
// The split extension L(E) = (KL(E) -> G+B <-> B) induced by an extension,
// with its unit, and the transposition across the adjunction L -| P.

/// Word-level arithmetic of the split extension L(E).  The middle object
/// G+B is infinite, so it exists here only through its words; the kernel
/// KL(E) is carried by presentation words kept in normal form.
struct LData {
  Extension e;

  FPWord iota1(int g) const {
    return reduce_word(FPWord{e.G, e.B, {FPLetter{Factor::G, g}}});
  }
  FPWord iota2(int b) const {
    return reduce_word(FPWord{e.G, e.B, {FPLetter{Factor::B, b}}});
  }
  /// <f, 1_B>: the retraction of iota2.
  int fold(const FPWord& w) const {
    return copair_eval(e.f, identity_hom(e.B), w);
  }
  /// A-component of the unit lambda_E: a ↦ psi(k(a)).
  PresWord lambda_A(int a) const { return word_to_pres(e, iota1(e.k(a))); }
};

inline LData L_of_extension(Extension e) { return LData{std::move(e)}; }

/// A morphism of split extensions L(E) -> S, carried procedurally: the
/// middle component evaluates words through <phi_G, t>.
struct TransposedMorphism {
  Extension e;        // source data
  SplitExtension s;   // target
  GroupHom phi_G;     // E.G -> S.G, the G-side of the middle component

  int middle_eval(const FPWord& w) const { return copair_eval(phi_G, s.s, w); }

  /// Kernel component KL(E) -> C, evaluated through the generator reading.
  int kernel_eval(const PresWord& p) const {
    int v = middle_eval(pres_to_word(e, p));
    int c = -1;
    for (int a = 0; a < s.ext.A->order(); ++a)
      if (s.ext.k(a) == v) c = a;
    if (c < 0) throw value_outside_kernel("transposed kernel value escapes");
    return c;
  }
};

/// Forward direction of the natural bijection: a morphism of extensions
/// phi: E -> P(S) becomes the split-extension morphism L(E) -> S with
/// middle map <phi_G, t>.  The splitting and projection laws are checked
/// on single letters; multiplicativity is structural in the fold.
inline TransposedMorphism adjunction_transpose(const Extension& e,
                                               const SplitExtension& s,
                                               const ExtMorphism& phi) {
  if (!phi.source.G->same_table(*e.G) || !phi.target.G->same_table(*s.ext.G))
    throw diagram_failure("transpose endpoints do not match");
  TransposedMorphism t{e, s, phi.phi_G};
  for (int b = 0; b < e.B->order(); ++b)
    if (t.middle_eval(FPWord{e.G, e.B, {FPLetter{Factor::B, b}}}) != s.s(b))
      throw diagram_failure("transpose does not preserve the splitting");
  for (int g = 0; g < e.G->order(); ++g)
    if (s.ext.f(t.middle_eval(FPWord{e.G, e.B, {FPLetter{Factor::G, g}}})) !=
        e.f(g))
      throw diagram_failure("transpose does not cover the projection");
  return t;
}

/// Backward direction: precomposition with the unit lambda_E recovers the
/// morphism of extensions E -> P(S).
inline ExtMorphism transpose_back(const TransposedMorphism& t) {
  const Extension& e = t.e;
  std::vector<int> phi_g(e.G->order());
  for (int g = 0; g < e.G->order(); ++g)
    phi_g[g] = t.middle_eval(LData{e}.iota1(g));
  std::vector<int> phi_a(e.A->order());
  for (int a = 0; a < e.A->order(); ++a) {
    int v = phi_g[e.k(a)];
    int c = -1;
    for (int x = 0; x < t.s.ext.A->order(); ++x)
      if (t.s.ext.k(x) == v) c = x;
    if (c < 0) throw value_outside_kernel("unit composite escapes the kernel");
    phi_a[a] = c;
  }
  return check_morphism(e, t.s.ext, hom_check(e.A, t.s.ext.A, phi_a),
                        hom_check(e.G, t.s.ext.G, phi_g));
}

/// The counit at S: the transpose of the identity on P(S); its middle map
/// evaluates words through <1_G, s>.
inline TransposedMorphism counit(const SplitExtension& s) {
  return adjunction_transpose(s.ext, s, identity_morphism(s.ext));
}

/// Triangle identity P(eps_S)∘lambda_{P(S)} = 1: single G-letters map to
/// themselves and the kernel unit composes to the identity on A.
inline bool triangle_check(const SplitExtension& s) {
  TransposedMorphism eps = counit(s);
  LData l = L_of_extension(s.ext);
  for (int g = 0; g < s.ext.G->order(); ++g)
    if (eps.middle_eval(l.iota1(g)) != g) return false;
  for (int a = 0; a < s.ext.A->order(); ++a)
    if (eps.kernel_eval(l.lambda_A(a)) != a) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Literal syntax used by the CLI and the test fixtures:
//   word      "b:1 g:3"          (tokens factor:index)
//   pres word "(1,0) (2,1)"      (pairs g,b)

inline FPWord parse_word(const group_ptr& G, const group_ptr& B,
                         const std::string& text) {
  std::vector<FPLetter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3 || tok[1] != ':' || (tok[0] != 'g' && tok[0] != 'b'))
      throw error("bad word token '" + tok + "'");
    letters.push_back(FPLetter{tok[0] == 'g' ? Factor::G : Factor::B,
                               std::stoi(tok.substr(2))});
  }
  return make_word(G, B, std::move(letters));
}

inline std::string format_word(const FPWord& w) {
  std::string out;
  for (const FPLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += (l.factor == Factor::G ? "g:" : "b:") + std::to_string(l.elt);
  }
  return out;
}

inline PresWord parse_pres_word(const std::string& text) {
  PresWord p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int g, b;
    if (std::sscanf(tok.c_str(), "(%d,%d)", &g, &b) != 2)
      throw error("bad presentation token '" + tok + "'");
    p.gens.push_back(PresGen{g, b});
  }
  return p;
}

inline std::string format_pres_word(const PresWord& p) {
  std::string out;
  for (const PresGen& x : p.gens) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(x.g) + "," + std::to_string(x.b) + ")";
  }
  return out;
}

}  // namespace kk
