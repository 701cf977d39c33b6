// Shared property checks: independent brute-force oracles and invariant
// sweeps used by both the unit suite and the acceptance runner.
#pragma once

#include <random>

#include "varwit/group.hpp"
#include "varwit/lie.hpp"
#include "varwit/paperlab.hpp"

namespace varwit::testsuite {

/// Random antisymmetric bracket table over GF(5), resampled until it
/// satisfies Jacobi (dims <= 2 always do).
inline LieAlgebra random_lie_gf5(std::mt19937& rng) {
  FieldSpec f5 = FieldSpec::gf(5);
  std::uniform_int_distribution<int> dim_d(1, 3), coeff_d(0, 4);
  for (;;) {
    std::size_t n = static_cast<std::size_t>(dim_d(rng));
    std::vector<LieAlgebra::BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        LieAlgebra::BracketEntry e{i, j, {}};
        for (std::size_t k = 0; k < n; ++k) {
          int c = coeff_d(rng);
          if (c) e.coeffs.emplace_back(k, Scalar::of_int(f5, c));
        }
        if (!e.coeffs.empty()) entries.push_back(std::move(e));
      }
    LieAlgebra L = LieAlgebra::from_brackets(f5, n, entries);
    if (L.validate().ok) return L;
  }
}

/// Oracle for product_subspace over GF(5): bracket *every* pair of vectors
/// of the two subspaces, then row-reduce with raw integer arithmetic mod 5.
/// Entirely separate from the Scalar/ExactMatrix code path.
inline bool product_matches_bruteforce(const LieAlgebra& L, const Subspace& A,
                                       const Subspace& B) {
  const int p = 5;
  const std::size_t n = L.dim();
  auto residue = [](const Scalar& s) { return static_cast<int>(s.residue()); };

  // all vectors of a subspace, as int arrays
  auto all_vectors = [&](const Subspace& S) {
    std::vector<std::vector<int>> out;
    std::size_t d = S.dim();
    std::vector<int> coeff(d, 0);
    for (;;) {
      std::vector<int> v(n, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < n; ++j)
          v[j] = (v[j] + coeff[r] * residue(S.basis().at(r, j))) % p;
      out.push_back(v);
      std::size_t pos = 0;
      while (pos < d && ++coeff[pos] == p) coeff[pos++] = 0;
      if (pos == d) break;
      if (d == 0) break;
    }
    return out;
  };

  auto bracket_ints = [&](const std::vector<int>& u,
                          const std::vector<int>& v) {
    std::vector<int> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int uv = u[i] * v[j] % p;
        if (!uv) continue;
        for (std::size_t k = 0; k < n; ++k)
          r[k] = (r[k] + uv * residue(L.c(i, j, k))) % p;
      }
    return r;
  };

  // raw RREF mod 5
  auto int_rref = [&](std::vector<std::vector<int>> rows) {
    auto inv5 = [](int a) {  // p = 5
      for (int x = 1; x < 5; ++x)
        if (a * x % 5 == 1) return x;
      return 0;
    };
    std::size_t pr = 0;
    for (std::size_t col = 0; col < n && pr < rows.size(); ++col) {
      std::size_t sel = pr;
      while (sel < rows.size() && rows[sel][col] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[pr]);
      int s = inv5(rows[pr][col]);
      for (auto& x : rows[pr]) x = x * s % p;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pr || rows[i][col] == 0) continue;
        int fct = rows[i][col];
        for (std::size_t j = 0; j < n; ++j)
          rows[i][j] = ((rows[i][j] - fct * rows[pr][j]) % p + p) % p;
      }
      ++pr;
    }
    rows.resize(pr);
    return rows;
  };

  std::vector<std::vector<int>> products;
  for (const auto& u : all_vectors(A))
    for (const auto& v : all_vectors(B)) products.push_back(bracket_ints(u, v));
  auto oracle = int_rref(std::move(products));

  Subspace got = product_subspace(L, A, B);
  if (got.dim() != oracle.size()) return false;
  for (std::size_t i = 0; i < oracle.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (residue(got.basis().at(i, j)) != oracle[i][j]) return false;
  return true;
}

inline bool product_subspace_fuzz(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    LieAlgebra L = random_lie_gf5(rng);
    if (!product_matches_bruteforce(L, L.full_space(), L.full_space()))
      return false;
  }
  return true;
}

/// Series invariants on a Lie algebra: terms decreasing and ideals,
/// derived term k inside lower central term k, nilpotent implies solvable.
inline bool series_invariants_lie(const LieAlgebra& L) {
  SeriesReport lcs = lower_central_series(L);
  SeriesReport der = derived_series(L);
  for (std::size_t k = 1; k < lcs.terms.size(); ++k) {
    if (!lcs.terms[k].leq(lcs.terms[k - 1])) return false;
    if (!is_ideal(L, lcs.terms[k])) return false;
  }
  for (std::size_t k = 1; k < der.terms.size(); ++k) {
    if (!der.terms[k].leq(der.terms[k - 1])) return false;
    if (!is_ideal(L, der.terms[k])) return false;
  }
  for (std::size_t k = 0; k < der.terms.size() && k < lcs.terms.size(); ++k)
    if (!der.terms[k].leq(lcs.terms[k])) return false;
  if (lcs.terminates() && !der.terminates()) return false;
  return true;
}

/// Series invariants on a matrix group: normality of every term,
/// weakly decreasing orders, derived term inside the gamma term, Lagrange.
inline bool series_invariants_grp(const MatrixGroup& G,
                                  std::size_t cap = kDefaultEnumerationCap) {
  GroupSeriesReport lcs = lower_central_series_grp(G, cap);
  GroupSeriesReport der = derived_series_grp(G, cap);
  std::size_t parent = lcs.terms.front().order();
  for (const auto* rep : {&lcs, &der}) {
    for (std::size_t k = 1; k < rep->terms.size(); ++k) {
      const ElementSet& term = rep->terms[k];
      if (term.order() > rep->terms[k - 1].order()) return false;
      if (parent % term.order() != 0) return false;
      for (const auto& s : term.elements())
        for (const auto& [label, g] : G.generators())
          if (!term.contains(conjugate(g, s))) return false;
    }
  }
  for (std::size_t k = 0; k < der.terms.size() && k < lcs.terms.size(); ++k)
    for (const auto& s : der.terms[k].elements())
      if (!lcs.terms[k].contains(s)) return false;
  return true;
}

/// Derivation condition re-checked directly on every basis map.
inline bool derivation_maps_check(const LieAlgebra& X) {
  DerivationAlgebra der = derivations(X);
  for (const ExactMatrix& D : der.basis_maps)
    for (std::size_t i = 0; i < X.dim(); ++i)
      for (std::size_t j = i + 1; j < X.dim(); ++j) {
        Vector lhs = D.apply(X.basis_bracket(i, j));
        Vector r1 = X.bracket(D.apply(X.basis_unit(i)), X.basis_unit(j));
        Vector r2 = X.bracket(X.basis_unit(i), D.apply(X.basis_unit(j)));
        for (std::size_t k = 0; k < X.dim(); ++k)
          if (lhs[k] != r1[k] + r2[k]) return false;
      }
  return true;
}

/// Commutator subgroups against all-element-pairs brute force, for every
/// witness group of order <= 625.
inline bool commutator_bruteforce_small_groups() {
  GroupWitness w = build_group_witness();
  std::vector<const MatrixGroup*> groups = {&w.S, &w.B, &w.Bprime};
  for (const MatrixGroup* G : groups) {
    ElementSet all = enumerate(*G);
    if (all.order() > 625) return false;
    ElementSet fast = commutator_subgroup(*G, all.elements());
    ElementSet brute =
        commutator_subgroup_bruteforce(*G, all.elements(), all.elements());
    if (!(fast == brute)) return false;
  }
  return true;
}

}  // namespace varwit::testsuite
