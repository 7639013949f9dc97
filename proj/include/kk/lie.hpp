#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kk/error.hpp"
#include "kk/rational.hpp"

namespace kk {

struct not_a_lie_algebra : error {
  using error::error;
};

class LieAlgebra;
using lie_ptr = std::shared_ptr<const LieAlgebra>;

/// A finite-dimensional Lie algebra over the rationals, given by
/// structure constants.  Antisymmetry and the Jacobi identity are
/// validated exhaustively (and exactly) at construction.
class LieAlgebra {
 public:
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  /// Bracket of basis elements: [e_i, e_j] as a coordinate vector.
  const Vec& basis_bracket(int i, int j) const { return c_[i][j]; }

  /// Bilinear extension.
  Vec bracket(const Vec& u, const Vec& v) const {
    Vec out = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (u[i] == Rat(0)) continue;
      for (int j = 0; j < dim_; ++j) {
        if (v[j] == Rat(0)) continue;
        Rat q = u[i] * v[j];
        for (int t = 0; t < dim_; ++t) out[t] += q * c_[i][j][t];
      }
    }
    return out;
  }

  Vec basis_vec(int i) const {
    Vec v = zero_vec(dim_);
    v[i] = Rat(1);
    return v;
  }

  bool is_abelian() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (!is_zero(c_[i][j])) return false;
    return true;
  }

  static lie_ptr make(std::string name, int dim,
                      std::vector<std::vector<Vec>> c) {
    auto out = lie_ptr(new LieAlgebra(std::move(name), dim, std::move(c)));
    out->validate();
    return out;
  }

 private:
  LieAlgebra(std::string name, int dim, std::vector<std::vector<Vec>> c)
      : name_(std::move(name)), dim_(dim), c_(std::move(c)) {}

  void validate() const {
    if (static_cast<int>(c_.size()) != dim_)
      throw not_a_lie_algebra("structure constant shape mismatch");
    for (int i = 0; i < dim_; ++i) {
      if (static_cast<int>(c_[i].size()) != dim_)
        throw not_a_lie_algebra("structure constant shape mismatch");
      for (int j = 0; j < dim_; ++j)
        if (static_cast<int>(c_[i][j].size()) != dim_)
          throw not_a_lie_algebra("structure constant shape mismatch");
    }
    for (int i = 0; i < dim_; ++i) {
      if (!is_zero(c_[i][i]))
        throw not_a_lie_algebra("[e" + std::to_string(i) + ",e" +
                                std::to_string(i) + "] != 0");
      for (int j = 0; j < dim_; ++j)
        if (c_[i][j] != scale(Rat(-1), c_[j][i]))
          throw not_a_lie_algebra("antisymmetry fails at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ")");
    }
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int t = j + 1; t < dim_; ++t) {
          Vec jac = add(bracket(c_[i][j], basis_vec(t)),
                        add(bracket(c_[j][t], basis_vec(i)),
                            bracket(c_[t][i], basis_vec(j))));
          if (!is_zero(jac))
            throw jacobi_failure("Jacobi fails at (" + std::to_string(i) +
                                 "," + std::to_string(j) + "," +
                                 std::to_string(t) + ")");
        }
  }

  std::string name_;
  int dim_;
  std::vector<std::vector<Vec>> c_;  // c_[i][j] = [e_i, e_j]
};

/// Convenience: build from a sparse list of (i, j, value) brackets with
/// i < j; antisymmetric counterparts are filled in.
inline lie_ptr make_lie(std::string name, int dim,
                        const std::vector<std::tuple<int, int, Vec>>& brackets) {
  std::vector<std::vector<Vec>> c(
      static_cast<size_t>(dim),
      std::vector<Vec>(static_cast<size_t>(dim), zero_vec(dim)));
  for (const auto& [i, j, v] : brackets) {
    if (i < 0 || i >= dim || j < 0 || j >= dim)
      throw not_a_lie_algebra("bracket index out of range");
    c[i][j] = v;
    c[j][i] = scale(Rat(-1), v);
  }
  return LieAlgebra::make(std::move(name), dim, std::move(c));
}

inline lie_ptr abelian_lie(int dim, std::string name = "") {
  return make_lie(name.empty() ? "K^" + std::to_string(dim) : std::move(name),
                  dim, {});
}

/// A linear map preserving brackets, stored as codomain_dim x domain_dim.
struct LieHom {
  lie_ptr domain, codomain;
  Mat matrix;

  Vec apply(const Vec& v) const { return mat_vec(matrix, v); }
  Vec apply_basis(int i) const { return column(matrix, i); }
};

inline LieHom lie_hom_check(lie_ptr domain, lie_ptr codomain, Mat matrix) {
  if (static_cast<int>(matrix.size()) != codomain->dim())
    throw not_a_hom("matrix row count != codomain dim");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != domain->dim())
      throw not_a_hom("matrix column count != domain dim");
  LieHom h{std::move(domain), std::move(codomain), std::move(matrix)};
  for (int i = 0; i < h.domain->dim(); ++i)
    for (int j = i + 1; j < h.domain->dim(); ++j) {
      Vec lhs = h.apply(h.domain->basis_bracket(i, j));
      Vec rhs = h.codomain->bracket(h.apply_basis(i), h.apply_basis(j));
      if (lhs != rhs)
        throw not_a_hom("bracket preservation fails at basis pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return h;
}

inline LieHom lie_identity_hom(const lie_ptr& g) {
  return LieHom{g, g, identity_mat(g->dim())};
}

inline LieHom lie_compose(const LieHom& outer, const LieHom& inner) {
  return LieHom{inner.domain, outer.codomain,
                mat_mul(outer.matrix, inner.matrix)};
}

/// A short exact sequence of Lie algebras 0 -> A -k-> G -f-> B -> 0 with
/// exactness certified by exact rank computations.
struct LieExtension {
  lie_ptr A, G, B;
  LieHom k, f;

  /// Unique preimage under k; exactness guarantees existence for any
  /// vector in the kernel ideal, so a miss is an internal failure.
  Vec pull_back(const Vec& g_vec) const {
    auto x = solve(k.matrix, g_vec);
    if (!x) throw value_outside_kernel("vector is not in image(k)");
    return *x;
  }
};

inline LieExtension make_lie_extension(lie_ptr A, lie_ptr G, lie_ptr B,
                                       LieHom k, LieHom f) {
  if (rank(k.matrix) != A->dim()) throw not_exact("k is not injective");
  if (rank(f.matrix) != B->dim()) throw not_exact("f is not surjective");
  Mat fk = mat_mul(f.matrix, k.matrix);
  for (const auto& row : fk)
    if (!is_zero(row)) throw not_exact("f∘k != 0");
  if (A->dim() + B->dim() != G->dim())
    throw not_exact("image(k) is a proper subspace of kernel(f)");
  return LieExtension{std::move(A), std::move(G), std::move(B), std::move(k),
                      std::move(f)};
}

/// A linear right inverse of f.  No bracket condition: a section is a
/// choice of basis complementing A in G.
struct LinearSection {
  Mat matrix;  // G_dim x B_dim

  Vec apply(const Vec& b) const { return mat_vec(matrix, b); }
  Vec apply_basis(int i) const { return column(matrix, i); }
};

inline LinearSection make_section(const LieExtension& e, Mat matrix) {
  if (static_cast<int>(matrix.size()) != e.G->dim())
    throw not_a_section("section row count != dim G");
  Mat fs = mat_mul(e.f.matrix, matrix);
  if (fs != identity_mat(e.B->dim()))
    throw not_a_section("f∘s != id");
  return LinearSection{std::move(matrix)};
}

/// Whether the section also preserves brackets (the split tier).
inline bool section_is_hom(const LieExtension& e, const LinearSection& s) {
  for (int i = 0; i < e.B->dim(); ++i)
    for (int j = i + 1; j < e.B->dim(); ++j) {
      Vec lhs = s.apply(e.B->basis_bracket(i, j));
      Vec rhs = e.G->bracket(s.apply_basis(i), s.apply_basis(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace kk
