#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varwit/subspace.hpp"

namespace varwit {

/// Finite-dimensional Lie algebra as a structure-constant table:
/// [x_i, x_j] = sum_k c[i][j][k] x_k on a fixed basis x_0..x_{n-1}.
class LieAlgebra {
 public:
  struct BracketEntry {
    std::size_t i, j;                                  // requires i < j
    std::vector<std::pair<std::size_t, Scalar>> coeffs;
  };

  /// Builds the table from i<j entries, filling in antisymmetry.
  static LieAlgebra from_brackets(const FieldSpec& f, std::size_t n,
                                  const std::vector<BracketEntry>& entries,
                                  std::vector<std::string> labels = {}) {
    LieAlgebra L(f, n, std::move(labels));
    for (const auto& e : entries) {
      if (e.i >= e.j || e.j >= n)
        throw std::invalid_argument("LieAlgebra: bracket entry needs i < j < dim");
      for (const auto& [k, c] : e.coeffs) {
        if (k >= n)
          throw std::invalid_argument("LieAlgebra: coefficient index out of range");
        if (c.field() != f)
          throw std::invalid_argument("LieAlgebra: coefficient field mismatch");
        L.c_at(e.i, e.j, k) = c;
        L.c_at(e.j, e.i, k) = -c;
      }
    }
    return L;
  }

  static LieAlgebra abelian(const FieldSpec& f, std::size_t n,
                            std::vector<std::string> labels = {}) {
    return LieAlgebra(f, n, std::move(labels));
  }

  /// Heisenberg on basis (g, a, b). Variant 1: [x,a] = b; variant 2: [y,b] = a.
  static LieAlgebra heisenberg3(const FieldSpec& f, int variant) {
    if (variant == 1)
      return from_brackets(f, 3, {{0, 1, {{2, Scalar::one(f)}}}},
                           {"x", "a", "b"});
    if (variant == 2)
      return from_brackets(f, 3, {{0, 2, {{1, Scalar::one(f)}}}},
                           {"y", "a", "b"});
    throw std::invalid_argument("heisenberg3: variant must be 1 or 2");
  }

  /// gl(n) on the elementary-matrix basis e_{ij}, flat index n(i-1)+(j-1)
  /// for 1-based (i,j). [e_ab, e_cd] = d_bc e_ad - d_da e_cb.
  static LieAlgebra gl(const FieldSpec& f, std::size_t n) {
    LieAlgebra L(f, n * n);
    L.labels_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        L.labels_[i * n + j] =
            "e" + std::to_string(i + 1) + std::to_string(j + 1);
    Scalar one = Scalar::one(f);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            std::size_t p = a * n + b, q = c * n + d;
            if (b == c) L.c_at(p, q, a * n + d) += one;
            if (d == a) L.c_at(p, q, c * n + b) -= one;
          }
    return L;
  }

  /// Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  static LieAlgebra sl2(const FieldSpec& f) {
    if (f.characteristic() == 2)
      throw std::invalid_argument("sl2: not available in characteristic 2");
    Scalar two = Scalar::of_int(f, 2);
    return from_brackets(
        f, 3,
        {{0, 1, {{0, -two}}}, {0, 2, {{1, Scalar::one(f)}}}, {1, 2, {{2, -two}}}},
        {"e", "h", "f"});
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(std::size_t i) const {
    return i < labels_.size() && !labels_[i].empty()
               ? labels_[i]
               : "x" + std::to_string(i);
  }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  /// [x_i, x_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const {
    Vector r(n_, Scalar::zero(field_));
    for (std::size_t k = 0; k < n_; ++k) r[k] = c(i, j, k);
    return r;
  }

  Vector bracket(const Vector& u, const Vector& v) const {
    if (u.size() != n_ || v.size() != n_)
      throw std::invalid_argument("bracket: vector length mismatch");
    Vector r(n_, Scalar::zero(field_));
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        Scalar uv = u[i] * v[j];
        for (std::size_t k = 0; k < n_; ++k)
          if (!c(i, j, k).is_zero()) r[k] += uv * c(i, j, k);
      }
    }
    return r;
  }

  struct Validation {
    bool ok = true;
    std::string detail;  // first violating triple, when not ok
  };

  /// Antisymmetry and the Jacobi identity over all basis triples.
  Validation validate() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (!c(i, i, k).is_zero())
          return {false, "alternating fails at [x" + std::to_string(i) + ",x" +
                             std::to_string(i) + "]"};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (c(i, j, k) != -c(j, i, k))
            return {false, "antisymmetry fails at (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")"};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          Vector s = bracket(basis_unit(i), basis_bracket(j, k));
          Vector t = bracket(basis_unit(j), basis_bracket(k, i));
          Vector u = bracket(basis_unit(k), basis_bracket(i, j));
          for (std::size_t m = 0; m < n_; ++m)
            if (!(s[m] + t[m] + u[m]).is_zero())
              return {false, "Jacobi fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ")"};
        }
    return {};
  }

  Vector basis_unit(std::size_t i) const {
    Vector v(n_, Scalar::zero(field_));
    v[i] = Scalar::one(field_);
    return v;
  }

  Subspace full_space() const { return Subspace::full(field_, n_); }
  Subspace zero_space() const { return Subspace::zero(field_, n_); }

  bool operator==(const LieAlgebra& o) const {
    return field_ == o.field_ && n_ == o.n_ && c_ == o.c_;
  }

 private:
  LieAlgebra(const FieldSpec& f, std::size_t n,
             std::vector<std::string> labels = {})
      : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)),
        labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n)
      throw std::invalid_argument("LieAlgebra: label count mismatch");
  }

  Scalar& c_at(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }

  FieldSpec field_;
  std::size_t n_;
  std::vector<Scalar> c_;
  std::vector<std::string> labels_;
};

/// Span of all [a, b], a over a basis of A, b over a basis of B.
inline Subspace product_subspace(const LieAlgebra& L, const Subspace& A,
                                 const Subspace& B) {
  if (A.ambient() != L.dim() || B.ambient() != L.dim())
    throw std::invalid_argument("product_subspace: ambient mismatch");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j)
      rows.push_back(L.bracket(A.basis().row(i), B.basis().row(j)));
  return Subspace::span(L.field(), rows, L.dim());
}

struct SeriesReport {
  enum class Kind { lower_central, derived };

  Kind kind;
  std::vector<Subspace> terms;        // term 0 = the full algebra
  std::optional<std::size_t> length;  // nilpotency class / derived length

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
  }

  bool terminates() const { return length.has_value(); }
};

namespace detail {

template <typename Step>
SeriesReport compute_series(const LieAlgebra& L, SeriesReport::Kind kind,
                            Step step) {
  SeriesReport rep{kind, {L.full_space()}, std::nullopt};
  for (;;) {
    const Subspace& prev = rep.terms.back();
    if (prev.dim() == 0) {
      rep.length = rep.terms.size() - 1;
      return rep;
    }
    Subspace next = step(prev);
    if (next == prev) return rep;  // stabilized at a nonzero term
    rep.terms.push_back(next);
  }
}

}  // namespace detail

/// L^0 = L, L^k = [L, L^{k-1}]; k-nilpotent when L^{k-1} != 0 and L^k = 0.
inline SeriesReport lower_central_series(const LieAlgebra& L) {
  return detail::compute_series(
      L, SeriesReport::Kind::lower_central,
      [&](const Subspace& prev) { return product_subspace(L, L.full_space(), prev); });
}

/// L^(0) = L, L^(n) = [L^(n-1), L^(n-1)].
inline SeriesReport derived_series(const LieAlgebra& L) {
  return detail::compute_series(
      L, SeriesReport::Kind::derived,
      [&](const Subspace& prev) { return product_subspace(L, prev, prev); });
}

/// Least subspace containing the vectors and closed under bracket.
inline Subspace subalgebra_generated(const LieAlgebra& L,
                                     const std::vector<Vector>& vectors) {
  Subspace S = Subspace::span(L.field(), vectors, L.dim());
  for (;;) {
    Subspace next = S.sum(product_subspace(L, S, S));
    if (next == S) return S;
    S = next;
  }
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  return product_subspace(L, L.full_space(), S).leq(S);
}

inline Subspace ideal_generated(const LieAlgebra& L,
                                const std::vector<Vector>& vectors) {
  Subspace S = Subspace::span(L.field(), vectors, L.dim());
  for (;;) {
    Subspace next = S.sum(product_subspace(L, L.full_space(), S));
    if (next == S) return S;
    S = next;
  }
}

/// Linear map between Lie algebras, columns indexed by domain basis.
struct LinearMap {
  LieAlgebra domain;
  LieAlgebra codomain;
  ExactMatrix matrix;  // codomain-dim x domain-dim

  LinearMap(LieAlgebra dom, LieAlgebra cod, ExactMatrix m)
      : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
      throw std::invalid_argument("LinearMap: matrix shape mismatch");
  }

  static LinearMap from_basis_images(const LieAlgebra& dom,
                                     const LieAlgebra& cod,
                                     const std::vector<Vector>& images) {
    if (images.size() != dom.dim())
      throw std::invalid_argument("LinearMap: one image per domain basis vector");
    ExactMatrix m(cod.field(), cod.dim(), dom.dim());
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j].size() != cod.dim())
        throw std::invalid_argument("LinearMap: image length mismatch");
      for (std::size_t i = 0; i < cod.dim(); ++i) m.at(i, j) = images[j][i];
    }
    return LinearMap(dom, cod, std::move(m));
  }

  Vector apply(const Vector& v) const { return matrix.apply(v); }
};

enum class HomStatus { not_hom, hom, mono_hom };

/// f[u,v] = [fu, fv] over all basis pairs; mono when the matrix has full
/// column rank.
inline HomStatus check_hom(const LinearMap& f) {
  const LieAlgebra& D = f.domain;
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = i + 1; j < D.dim(); ++j) {
      Vector lhs = f.apply(D.basis_bracket(i, j));
      Vector rhs = f.codomain.bracket(f.apply(D.basis_unit(i)),
                                      f.apply(D.basis_unit(j)));
      if (lhs != rhs) return HomStatus::not_hom;
    }
  return rank(f.matrix) == D.dim() ? HomStatus::mono_hom : HomStatus::hom;
}

/// Witnessed isomorphism check: mono-hom plus equal dimensions.
inline bool is_isomorphic_via(const LinearMap& f) {
  return f.domain.dim() == f.codomain.dim() &&
         check_hom(f) == HomStatus::mono_hom;
}

struct DerivationAlgebra {
  LieAlgebra algebra;                   // Der(X) under commutator
  std::vector<ExactMatrix> basis_maps;  // matrix realization, one per basis vector
};

/// Solves D([x_i,x_j]) = [Dx_i, x_j] + [x_i, Dx_j] over n x n matrices D.
/// Unknowns are the entries D_{rs}, flattened row-major.
inline DerivationAlgebra derivations(const LieAlgebra& X) {
  const std::size_t n = X.dim();
  const FieldSpec& f = X.field();
  std::vector<Vector> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n, Scalar::zero(f));
        for (std::size_t m = 0; m < n; ++m) {
          row[k * n + m] += X.c(i, j, m);   // D applied to [x_i, x_j]
          row[m * n + i] -= X.c(m, j, k);   // [Dx_i, x_j]
          row[m * n + j] -= X.c(i, m, k);   // [x_i, Dx_j]
        }
        eqs.push_back(std::move(row));
      }
  Subspace ker = eqs.empty() ? Subspace::full(f, n * n)
                             : kernel(ExactMatrix::from_rows(f, eqs, n * n));

  std::vector<ExactMatrix> maps;
  for (std::size_t r = 0; r < ker.dim(); ++r)
    maps.push_back(ExactMatrix::unflatten(f, ker.basis().row(r), n, n));

  // Structure constants of Der(X) in the kernel basis, via RREF coordinates.
  const std::size_t d = maps.size();
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector comm = commutator(maps[a], maps[b]).flatten();
      auto coords = ker.coordinates(comm);
      if (!coords)
        throw std::logic_error("derivations: commutator escaped the solution space");
      LieAlgebra::BracketEntry e{a, b, {}};
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) e.coeffs.emplace_back(k, (*coords)[k]);
      entries.push_back(std::move(e));
    }
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = "D" + std::to_string(i);
  return {LieAlgebra::from_brackets(f, d, entries, std::move(labels)),
          std::move(maps)};
}

/// Semidirect product B ⋉ X for an action of B on X by derivations,
/// given as one dim(X) x dim(X) matrix per basis vector of B.
/// Basis order: B first, then X.
inline LieAlgebra semidirect(const LieAlgebra& B, const LieAlgebra& X,
                             const std::vector<ExactMatrix>& action) {
  if (B.field() != X.field())
    throw std::invalid_argument("semidirect: field mismatch");
  const FieldSpec& f = B.field();
  const std::size_t nb = B.dim(), nx = X.dim();
  if (action.size() != nb)
    throw std::invalid_argument("semidirect: one action matrix per basis vector of B");
  for (const auto& m : action)
    if (m.rows() != nx || m.cols() != nx || m.field() != f)
      throw std::invalid_argument("semidirect: action matrix shape mismatch");

  // The action must land in Der(X) and be a Lie homomorphism.
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t a = 0; a < nx; ++a)
      for (std::size_t b = a + 1; b < nx; ++b) {
        Vector lhs = action[i].apply(X.basis_bracket(a, b));
        Vector rhs = X.bracket(action[i].apply(X.basis_unit(a)), X.basis_unit(b));
        Vector rhs2 = X.bracket(X.basis_unit(a), action[i].apply(X.basis_unit(b)));
        for (std::size_t k = 0; k < nx; ++k)
          if (lhs[k] != rhs[k] + rhs2[k])
            throw std::invalid_argument("semidirect: action is not by derivations");
      }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Vector bij = B.basis_bracket(i, j);
      ExactMatrix lhs(f, nx, nx);
      for (std::size_t m = 0; m < nb; ++m)
        if (!bij[m].is_zero()) lhs = lhs + action[m] * bij[m];
      if (lhs != commutator(action[i], action[j]))
        throw std::invalid_argument("semidirect: action is not a Lie homomorphism");
    }

  const std::size_t n = nb + nx;
  std::vector<LieAlgebra::BracketEntry> entries;
  auto push = [&](std::size_t i, std::size_t j, const Vector& val,
                  std::size_t offset) {
    LieAlgebra::BracketEntry e{i, j, {}};
    for (std::size_t k = 0; k < val.size(); ++k)
      if (!val[k].is_zero()) e.coeffs.emplace_back(offset + k, val[k]);
    if (!e.coeffs.empty()) entries.push_back(std::move(e));
  };
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      push(i, j, B.basis_bracket(i, j), 0);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nx; ++j) {
      Vector v(nx, Scalar::zero(f));
      for (std::size_t k = 0; k < nx; ++k) v[k] = action[i].at(k, j);
      push(i, nb + j, v, nb);
    }
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i + 1; j < nx; ++j)
      push(nb + i, nb + j, X.basis_bracket(i, j), nb);

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < nb; ++i) labels[i] = B.label(i);
  for (std::size_t i = 0; i < nx; ++i) labels[nb + i] = X.label(i);
  return LieAlgebra::from_brackets(f, n, entries, std::move(labels));
}

/// The Lie algebra structure induced on a span of vectors that are linearly
/// independent and bracket-closed, with the vectors as the new basis.
inline LieAlgebra subalgebra_on_basis(const LieAlgebra& L,
                                      const std::vector<Vector>& basis,
                                      std::vector<std::string> labels = {}) {
  const std::size_t d = basis.size();
  ExactMatrix m = ExactMatrix::from_rows(L.field(), basis, L.dim());
  if (rank(m) != d)
    throw std::invalid_argument("subalgebra_on_basis: vectors are dependent");
  // Coordinates in the given (possibly non-RREF) basis: solve via the
  // augmented system [basis^T | v].
  auto coords = [&](const Vector& v) -> Vector {
    ExactMatrix aug(L.field(), L.dim(), d + 1);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = basis[j][i];
      aug.at(i, d) = v[i];
    }
    auto [r, rk] = rref(aug);
    Vector out(d, Scalar::zero(L.field()));
    for (std::size_t i = 0, col = 0; i < rk; ++i) {
      while (col <= d && r.at(i, col).is_zero()) ++col;
      if (col == d)
        throw std::invalid_argument("subalgebra_on_basis: not bracket-closed");
      out[col] = r.at(i, d);
      ++col;
    }
    return out;
  };
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector c = coords(L.bracket(basis[i], basis[j]));
      LieAlgebra::BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) e.coeffs.emplace_back(k, c[k]);
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  return LieAlgebra::from_brackets(L.field(), d, entries, std::move(labels));
}

struct AdjointResult {
  std::vector<ExactMatrix> maps;  // ad_p on U, one per basis vector of P
  Subspace image;                 // span of the maps, flattened in F^(dim U)^2
};

/// For each given element p spanning P, the matrix of [p, -] restricted to
/// the ideal U, in U's RREF basis. Maps are returned for the elements as
/// given, not for the normalized basis of their span.
inline AdjointResult adjoint_on_ideal(const LieAlgebra& L,
                                      const std::vector<Vector>& elems,
                                      const Subspace& U) {
  if (U.ambient() != L.dim())
    throw std::invalid_argument("adjoint_on_ideal: ambient mismatch");
  Subspace P = Subspace::span(L.field(), elems, L.dim());
  if (!product_subspace(L, P, P).leq(P))
    throw std::invalid_argument("adjoint_on_ideal: P is not a subalgebra");
  if (!product_subspace(L, P, U).leq(U))
    throw std::invalid_argument("adjoint_on_ideal: U is not an ideal of P");
  const std::size_t du = U.dim();
  std::vector<ExactMatrix> maps;
  std::vector<Vector> flat;
  for (const Vector& p : elems) {
    ExactMatrix m(L.field(), du, du);
    for (std::size_t j = 0; j < du; ++j) {
      Vector img = L.bracket(p, U.basis().row(j));
      auto co = U.coordinates(img);
      if (!co) throw std::logic_error("adjoint_on_ideal: image escaped U");
      for (std::size_t i = 0; i < du; ++i) m.at(i, j) = (*co)[i];
    }
    flat.push_back(m.flatten());
    maps.push_back(std::move(m));
  }
  return {std::move(maps), Subspace::span(L.field(), flat, du * du)};
}

inline AdjointResult adjoint_on_ideal(const LieAlgebra& L, const Subspace& P,
                                      const Subspace& U) {
  if (P.ambient() != L.dim())
    throw std::invalid_argument("adjoint_on_ideal: ambient mismatch");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < P.dim(); ++r) rows.push_back(P.basis().row(r));
  return adjoint_on_ideal(L, rows, U);
}

/// Split-extension data: k: X -> A, alpha: A -> B, beta: B -> A with
/// alpha ∘ beta = id and (X, k) the kernel of alpha.
inline bool verify_split_extension(const LinearMap& k, const LinearMap& alpha,
                                   const LinearMap& beta) {
  if (check_hom(alpha) == HomStatus::not_hom ||
      check_hom(beta) == HomStatus::not_hom)
    throw std::invalid_argument("verify_split_extension: non-homomorphism input");
  if (k.domain.dim() > 0 && check_hom(k) == HomStatus::not_hom)
    throw std::invalid_argument("verify_split_extension: non-homomorphism input");
  if (alpha.matrix * beta.matrix !=
      ExactMatrix::identity(alpha.matrix.field(), beta.matrix.cols()))
    return false;
  if (k.domain.dim() > 0 && check_hom(k) != HomStatus::mono_hom) return false;
  Subspace image = Subspace::from_rows(k.matrix.transpose());
  return image == kernel(alpha.matrix);
}

}  // namespace varwit
