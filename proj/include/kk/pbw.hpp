#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/lie.hpp"
#include "kk/rational.hpp"

namespace kk {

/// An ordered basis monomial of the truncated enveloping algebra:
/// a non-decreasing index sequence.  Monomials sort by degree first,
/// then lexicographically.
struct PBWMonomial {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.indices.size() != b.indices.size())
      return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  }
};

inline std::string format_monomial(const PBWMonomial& m) {
  if (m.indices.empty()) return "1";
  std::string out;
  for (int i : m.indices) out += "b" + std::to_string(i);
  return out;
}

/// An element of the enveloping algebra truncated at total degree d;
/// zero coefficients are never stored.
struct UEnvElement {
  std::map<PBWMonomial, Rat> terms;

  void add_term(const PBWMonomial& m, const Rat& q) {
    if (q == Rat(0)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, q);
    } else {
      it->second += q;
      if (it->second == Rat(0)) terms.erase(it);
    }
  }

  friend bool operator==(const UEnvElement&, const UEnvElement&) = default;
};

inline UEnvElement uenv_add(const UEnvElement& a, const UEnvElement& b) {
  UEnvElement out = a;
  for (const auto& [m, q] : b.terms) out.add_term(m, q);
  return out;
}

inline UEnvElement uenv_scale(const Rat& c, const UEnvElement& a) {
  UEnvElement out;
  for (const auto& [m, q] : a.terms) out.add_term(m, c * q);
  return out;
}

/// Rewrites an arbitrary word in the generators into the ordered PBW
/// basis using x_j x_i = x_i x_j + [x_j, x_i], discarding monomials above
/// degree d (bracket corrections of lower degree survive).  Each rewrite
/// either lowers the inversion count or the degree, so the recursion
/// terminates.
inline UEnvElement pbw_straighten(const LieAlgebra& b,
                                  const std::vector<int>& word, int d) {
  UEnvElement out;

  int pos = -1;
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) {
      pos = static_cast<int>(i);
      break;
    }
  if (pos < 0) {
    if (static_cast<int>(word.size()) <= d)
      out.add_term(PBWMonomial{word}, Rat(1));
    return out;
  }

  std::vector<int> swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  out = pbw_straighten(b, swapped, d);

  const Vec& corr = b.basis_bracket(word[pos], word[pos + 1]);
  for (int t = 0; t < b.dim(); ++t) {
    if (corr[t] == Rat(0)) continue;
    std::vector<int> shorter;
    shorter.reserve(word.size() - 1);
    shorter.insert(shorter.end(), word.begin(), word.begin() + pos);
    shorter.push_back(t);
    shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
    out = uenv_add(out, uenv_scale(corr[t], pbw_straighten(b, shorter, d)));
  }
  return out;
}

/// Right multiplication of a truncated element by the generator e_j.
inline UEnvElement uenv_mul_gen(const LieAlgebra& b, const UEnvElement& u,
                                int j, int d) {
  UEnvElement out;
  for (const auto& [m, q] : u.terms) {
    std::vector<int> word = m.indices;
    word.push_back(j);
    out = uenv_add(out, uenv_scale(q, pbw_straighten(b, word, d)));
  }
  return out;
}

/// All monomials of degree <= d over the given dimension, in map order.
inline std::vector<PBWMonomial> monomials_up_to(int dim, int d) {
  std::vector<PBWMonomial> out{PBWMonomial{}};
  std::vector<PBWMonomial> layer = out;
  for (int deg = 1; deg <= d; ++deg) {
    std::vector<PBWMonomial> next;
    for (const auto& m : layer) {
      int lo = m.indices.empty() ? 0 : m.indices.back();
      for (int i = lo; i < dim; ++i) {
        PBWMonomial ext = m;
        ext.indices.push_back(i);
        next.push_back(std::move(ext));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

struct CoproductTerm {
  PBWMonomial left, right;
  Rat multiplicity;
};

/// All ordered subsequence splits of a monomial, with multiplicities
/// collected over repeated letters; both sides pass through the
/// straightener (a no-op on subsequences of an ordered monomial).
inline std::vector<CoproductTerm> coproduct_split(const LieAlgebra& b,
                                                  const PBWMonomial& m, int d) {
  std::map<std::pair<PBWMonomial, PBWMonomial>, Rat> acc;
  const int deg = m.degree();
  for (unsigned mask = 0; mask < (1u << deg); ++mask) {
    std::vector<int> left, right;
    for (int i = 0; i < deg; ++i)
      (mask >> i & 1u ? left : right).push_back(m.indices[i]);
    UEnvElement ls = pbw_straighten(b, left, d);
    UEnvElement rs = pbw_straighten(b, right, d);
    for (const auto& [lm, lq] : ls.terms)
      for (const auto& [rm, rq] : rs.terms) acc[{lm, rm}] += lq * rq;
  }
  std::vector<CoproductTerm> out;
  out.reserve(acc.size());
  for (const auto& [key, mult] : acc)
    if (mult != Rat(0))
      out.push_back(CoproductTerm{key.first, key.second, mult});
  return out;
}

}  // namespace kk
