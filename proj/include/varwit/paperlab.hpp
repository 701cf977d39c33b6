#pragma once

#include "varwit/json_io.hpp"

namespace varwit {

struct CheckResult {
  enum class Status { pass, fail, skipped };

  std::string id;           // stable, e.g. "lie.Bpsi.lcs"
  std::string description;
  std::string anchor;       // claim the check pins down
  Status status;
  Json data;

  static const char* status_str(Status s) {
    switch (s) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      case Status::skipped: return "skipped";
    }
    return "?";
  }
};

struct Report {
  std::string scenario;  // "groups", "lie", "amalgam"
  std::string field;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool overall() const {
    for (const auto& c : checks)
      if (c.status == CheckResult::Status::fail) return false;
    return true;
  }

  void add(const std::string& id, const std::string& description,
           const std::string& anchor, bool ok, Json data = Json::object()) {
    checks.push_back({id, description, anchor,
                      ok ? CheckResult::Status::pass : CheckResult::Status::fail,
                      std::move(data)});
  }

  void skip(const std::string& id, const std::string& description,
            const std::string& anchor, const std::string& reason) {
    checks.push_back({id, description, anchor, CheckResult::Status::skipped,
                      Json{{"reason", reason}}});
  }

  Json to_json() const {
    Json j;
    j["scenario"] = scenario;
    j["field"] = field;
    Json cs = Json::array();
    for (const auto& c : checks)
      cs.push_back({{"id", c.id},
                    {"description", c.description},
                    {"anchor", c.anchor},
                    {"status", CheckResult::status_str(c.status)},
                    {"data", c.data}});
    j["checks"] = cs;
    if (!notes.empty()) j["notes"] = notes;
    j["overall"] = overall();
    return j;
  }
};

// ---------------------------------------------------------------------------
// Group scenario: unitriangular witnesses over GF(5).

struct GroupWitness {
  MatrixGroup B;       // <x, a, b>
  MatrixGroup Bprime;  // <y, a, b>
  MatrixGroup S;       // <a, b>
};

/// The GF(5) matrices realizing the three presented groups:
///   x -> I + E12,  y -> I + E21,  a -> I + E23,  b -> I + 4*E13.
inline GroupWitness build_group_witness() {
  const std::int64_t p = 5;
  GpMat x = GpMat::from_rows(p, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  GpMat y = GpMat::from_rows(p, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  GpMat a = GpMat::from_rows(p, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  GpMat b = GpMat::from_rows(p, {{1, 0, 4}, {0, 1, 0}, {0, 0, 1}});
  return {MatrixGroup(p, 3, {{"x", x}, {"a", a}, {"b", b}}),
          MatrixGroup(p, 3, {{"y", y}, {"a", a}, {"b", b}}),
          MatrixGroup(p, 3, {{"a", a}, {"b", b}})};
}

inline Report verify_group_counterexample(
    std::size_t cap = kDefaultEnumerationCap) {
  Report rep;
  rep.scenario = "groups";
  rep.field = "GF(5)";
  rep.notes.push_back(
      "convention: [g,h] = g^-1 h^-1 g h; under it the displayed matrices "
      "satisfy all presentation relations");
  rep.notes.push_back(
      "the second semidirect product is built from B' = <y,a,b> acting "
      "through its own representation (y -> I + E21)");

  GroupWitness w = build_group_witness();

  auto check_relations = [&](const MatrixGroup& G,
                             const std::vector<std::string>& rels) {
    Json detail = Json::object();
    bool ok = true;
    for (const auto& r : rels) {
      bool holds = evaluate_relation(G, RelationWord::parse(r));
      detail[r] = holds;
      ok = ok && holds;
    }
    return std::pair{ok, detail};
  };

  {
    auto [okB, dB] = check_relations(
        w.B, {"[x,a]*b", "[x,b]", "x^5", "a^5", "b^5"});
    auto [okBp, dBp] = check_relations(
        w.Bprime, {"[y,b]*a", "[y,a]", "y^5", "a^5", "b^5"});
    auto [okS, dS] = check_relations(w.S, {"[a,b]", "a^5", "b^5"});
    rep.add("grp.relations", "presentation relations hold for B, B', S",
            "groups/presentations", okB && okBp && okS,
            Json{{"B", dB}, {"B'", dBp}, {"S", dS}});
  }

  ElementSet eS = enumerate(w.S, cap);
  ElementSet eB = enumerate(w.B, cap);
  ElementSet eBp = enumerate(w.Bprime, cap);
  rep.add("grp.orders", "|S| = 25, |B| = |B'| = 125", "groups/orders",
          eS.order() == 25 && eB.order() == 125 && eBp.order() == 125,
          Json{{"S", eS.order()}, {"B", eB.order()}, {"B'", eBp.order()}});

  bool agree = *w.B.find("a") == *w.Bprime.find("a") &&
               *w.B.find("b") == *w.Bprime.find("b");
  rep.add("grp.agree_on_S", "the two representations agree on S",
          "groups/agreement", agree);

  MatrixGroup Bpsi = vector_semidirect(w.B);
  MatrixGroup Bppsi = vector_semidirect(w.Bprime);
  ElementSet eBpsi = enumerate(Bpsi, cap);
  ElementSet eBppsi = enumerate(Bppsi, cap);
  rep.add("grp.semidirect_orders", "|B ⋉ X| = 15625 for both products",
          "groups/semidirect", eBpsi.order() == 15625 && eBppsi.order() == 15625,
          Json{{"B_psi", eBpsi.order()}, {"B'_psi'", eBppsi.order()}});

  GroupSeriesReport lcs1 = lower_central_series_grp(Bpsi, cap);
  GroupSeriesReport lcs2 = lower_central_series_grp(Bppsi, cap);
  std::vector<std::size_t> want{15625, 125, 5, 1};
  rep.add("grp.lcs", "lower central orders [15625, 125, 5, 1], class 3, both",
          "groups/lower-central-series",
          lcs1.orders() == want && lcs2.orders() == want &&
              lcs1.length == 3 && lcs2.length == 3,
          Json{{"B_psi", lcs1.orders()}, {"B'_psi'", lcs2.orders()}});

  {
    // gamma_2 should be <b> ⋉ Z_5^2: order 125, containing the embedded b
    // and the e1, e2 translations.
    const ElementSet& g2 = lcs1.terms.at(1);
    GpMat bblk = GpMat::identity(5, 4);
    bblk.at(0, 2) = 4;
    GpMat t1 = GpMat::identity(5, 4);
    t1.at(0, 3) = 1;
    GpMat t2 = GpMat::identity(5, 4);
    t2.at(1, 3) = 1;
    rep.add("grp.gamma2",
            "gamma_2 of B_psi has order 125 and contains b and the e1, e2 "
            "translations",
            "groups/commutator-subgroup",
            g2.order() == 125 && g2.contains(bblk) && g2.contains(t1) &&
                g2.contains(t2),
            Json{{"order", g2.order()}});
  }

  GroupSeriesReport der1 = derived_series_grp(Bpsi, cap);
  GroupSeriesReport der2 = derived_series_grp(Bppsi, cap);
  std::vector<std::size_t> want_der{15625, 125, 1};
  rep.add("grp.derived", "derived orders [15625, 125, 1], 2-solvable, both",
          "groups/derived-series",
          der1.orders() == want_der && der2.orders() == want_der &&
              der1.length == 2 && der2.length == 2,
          Json{{"B_psi", der1.orders()}, {"B'_psi'", der2.orders()}});

  rep.add("grp.not_2nilpotent", "gamma_3 of B_psi is nontrivial",
          "groups/class-lower-bound",
          lcs1.orders().size() >= 3 && lcs1.orders()[2] != 1,
          Json{{"gamma_3", lcs1.orders().size() >= 3 ? lcs1.orders()[2] : 0}});

  rep.add("grp.exponent", "the exponent of B_psi is 5", "groups/exponent",
          group_exponent(eBpsi) == 5, Json{{"exponent", group_exponent(eBpsi)}});

  return rep;
}

// ---------------------------------------------------------------------------
// Lie scenario: the 6-dimensional semidirect products inside gl(3, F).

struct LieWitness {
  LieAlgebra S;        // abelian {a, b}
  LieAlgebra B;        // Heisenberg {x, a, b | [x,a] = b}
  LieAlgebra Bprime;   // Heisenberg {y, a, b | [y,b] = a}
  LieAlgebra X;        // abelian {e1, e2, e3}
  LieAlgebra gl3;
  LinearMap psi;       // B -> gl3: x -> -e23, a -> e12, b -> e13
  LinearMap psi_prime; // B' -> gl3: y -> -e32, a -> e12, b -> e13
  std::vector<ExactMatrix> psi_action;        // 3x3 action matrices, B basis
  std::vector<ExactMatrix> psi_prime_action;  // same, B' basis
};

inline LieWitness build_lie_witness(const FieldSpec& f) {
  LieAlgebra S = LieAlgebra::abelian(f, 2, {"a", "b"});
  LieAlgebra B = LieAlgebra::heisenberg3(f, 1);
  LieAlgebra Bp = LieAlgebra::heisenberg3(f, 2);
  LieAlgebra X = LieAlgebra::abelian(f, 3, {"e1", "e2", "e3"});
  LieAlgebra gl3 = LieAlgebra::gl(f, 3);

  auto unit9 = [&](std::size_t i, std::size_t j, int sign) {
    Vector v(9, Scalar::zero(f));
    v[(i - 1) * 3 + (j - 1)] = Scalar::of_int(f, sign);
    return v;
  };
  Vector im_x = unit9(2, 3, -1), im_a = unit9(1, 2, 1), im_b = unit9(1, 3, 1);
  Vector im_y = unit9(3, 2, -1);
  LinearMap psi = LinearMap::from_basis_images(B, gl3, {im_x, im_a, im_b});
  LinearMap psip = LinearMap::from_basis_images(Bp, gl3, {im_y, im_a, im_b});

  auto as_matrix = [&](const Vector& v) {
    return ExactMatrix::unflatten(f, v, 3, 3);
  };
  return {std::move(S),   std::move(B),    std::move(Bp),
          std::move(X),   std::move(gl3),  std::move(psi),
          std::move(psip),
          {as_matrix(im_x), as_matrix(im_a), as_matrix(im_b)},
          {as_matrix(im_y), as_matrix(im_a), as_matrix(im_b)}};
}

/// The expected bracket table of B ⋉ X on basis {x, a, b, e1, e2, e3}:
/// [x,a] = b, [x,e3] = -e2, [a,e2] = [b,e3] = e1.
inline LieAlgebra expected_semidirect_table(const FieldSpec& f) {
  Scalar one = Scalar::one(f);
  return LieAlgebra::from_brackets(
      f, 6,
      {{0, 1, {{2, one}}},
       {0, 5, {{4, -one}}},
       {1, 4, {{3, one}}},
       {2, 5, {{3, one}}}},
      {"x", "a", "b", "e1", "e2", "e3"});
}

inline Report verify_lie_counterexample(const FieldSpec& f) {
  Report rep;
  rep.scenario = "lie";
  rep.field = f.str();
  rep.notes.push_back(
      "the second semidirect product is B' ⋉ X via psi' (psi'(y) = -e32, "
      "agreeing with psi on a and b)");

  LieWitness w = build_lie_witness(f);
  LieAlgebra Bpsi = semidirect(w.B, w.X, w.psi_action);
  LieAlgebra Bppsi = semidirect(w.Bprime, w.X, w.psi_prime_action);

  {
    bool ok = true;
    Json d = Json::object();
    std::vector<std::pair<std::string, const LieAlgebra*>> algs = {
        {"S", &w.S},     {"B", &w.B},       {"B'", &w.Bprime}, {"X", &w.X},
        {"gl3", &w.gl3}, {"B_psi", &Bpsi},  {"B'_psi'", &Bppsi}};
    for (const auto& [name, L] : algs) {
      auto v = L->validate();
      d[name] = v.ok;
      ok = ok && v.ok;
    }
    rep.add("lie.validate", "all constructed algebras satisfy antisymmetry "
            "and Jacobi", "lie/structure-constants", ok, d);
  }

  {
    DerivationAlgebra der = derivations(w.X);
    bool mono = check_hom(w.psi) == HomStatus::mono_hom &&
                check_hom(w.psi_prime) == HomStatus::mono_hom;
    bool agree = w.psi.apply(w.B.basis_unit(1)) ==
                     w.psi_prime.apply(w.Bprime.basis_unit(1)) &&
                 w.psi.apply(w.B.basis_unit(2)) ==
                     w.psi_prime.apply(w.Bprime.basis_unit(2));
    rep.add("lie.monos",
            "psi, psi' are mono-homs into Der(X) = gl(3) and agree on S",
            "lie/faithful-representations",
            mono && agree && der.algebra.dim() == 9,
            Json{{"dim Der(X)", der.algebra.dim()}});
  }

  {
    std::vector<Vector> bimg, bpimg;
    for (std::size_t i = 0; i < 3; ++i) {
      bimg.push_back(w.psi.apply(w.B.basis_unit(i)));
      bpimg.push_back(w.psi_prime.apply(w.Bprime.basis_unit(i)));
    }
    LieAlgebra psiB = subalgebra_on_basis(w.gl3, bimg, {"x", "a", "b"});
    LieAlgebra psipBp = subalgebra_on_basis(w.gl3, bpimg, {"y", "a", "b"});
    bool ok1 = is_isomorphic_via(
        LinearMap(psiB, w.B, ExactMatrix::identity(f, 3)));
    bool ok2 = is_isomorphic_via(
        LinearMap(psipBp, w.Bprime, ExactMatrix::identity(f, 3)));
    // The two Heisenberg variants are the same algebra up to relabeling.
    ExactMatrix perm(f, 3, 3);
    perm.at(0, 0) = Scalar::one(f);  // y -> x
    perm.at(2, 1) = Scalar::one(f);  // a -> b
    perm.at(1, 2) = Scalar::one(f);  // b -> a
    bool ok3 = is_isomorphic_via(LinearMap(w.Bprime, w.B, perm));
    rep.add("lie.heisenberg_images",
            "psi(B) and psi'(B') are isomorphic to the 3-dimensional "
            "Heisenberg algebra",
            "lie/heisenberg-subalgebras", ok1 && ok2 && ok3);
  }

  rep.add("lie.bracket_table",
          "B ⋉ X has exactly the brackets [x,a]=b, [x,e3]=-e2, "
          "[a,e2]=[b,e3]=e1",
          "lie/semidirect-table", Bpsi == expected_semidirect_table(f));

  SeriesReport lcs1 = lower_central_series(Bpsi);
  SeriesReport lcs2 = lower_central_series(Bppsi);
  std::vector<std::size_t> want{6, 3, 1, 0};
  rep.add("lie.lcs", "lower central dims [6, 3, 1, 0], class 3, both",
          "lie/lower-central-series",
          lcs1.dims() == want && lcs2.dims() == want && lcs1.length == 3 &&
              lcs2.length == 3,
          Json{{"B_psi", lcs1.dims()}, {"B'_psi'", lcs2.dims()}});

  SeriesReport der1 = derived_series(Bpsi);
  SeriesReport der2 = derived_series(Bppsi);
  std::vector<std::size_t> want_der{6, 3, 0};
  rep.add("lie.derived", "derived dims [6, 3, 0], 2-solvable, both",
          "lie/derived-series",
          der1.dims() == want_der && der2.dims() == want_der &&
              der1.length == 2 && der2.length == 2,
          Json{{"B_psi", der1.dims()}, {"B'_psi'", der2.dims()}});

  {
    // L^2 = span{e1} != 0, so the product is not 2-nilpotent.
    bool ok = lcs1.terms.size() > 2 && lcs1.terms[2].dim() == 1 &&
              lcs1.terms[2].contains(Bpsi.basis_unit(3));
    rep.add("lie.not_2nilpotent", "L^2 of B ⋉ X is span{e1}, nonzero",
            "lie/class-lower-bound", ok,
            Json{{"dim L^2", lcs1.terms.size() > 2 ? lcs1.terms[2].dim() : 0}});
  }

  {
    auto split_ok = [&](const LieAlgebra& B, const LieAlgebra& A) {
      // Canonical inclusion/projection for the B-first basis order.
      ExactMatrix km(f, A.dim(), w.X.dim());
      for (std::size_t i = 0; i < w.X.dim(); ++i)
        km.at(B.dim() + i, i) = Scalar::one(f);
      ExactMatrix am(f, B.dim(), A.dim());
      for (std::size_t i = 0; i < B.dim(); ++i) am.at(i, i) = Scalar::one(f);
      ExactMatrix bm(f, A.dim(), B.dim());
      for (std::size_t i = 0; i < B.dim(); ++i) bm.at(i, i) = Scalar::one(f);
      return verify_split_extension(LinearMap(w.X, A, km),
                                    LinearMap(A, B, am), LinearMap(B, A, bm));
    };
    rep.add("lie.split_extension",
            "the canonical maps exhibit both products as split extensions",
            "lie/split-extension", split_ok(w.B, Bpsi) && split_ok(w.Bprime, Bppsi));
  }

  return rep;
}

/// The sl(2) obstruction inside gl(3): the images of B and B' generate a
/// 5-dimensional subalgebra whose adjoint action on U = span{e12, e13} is
/// the full sl(2), ruling out solvability of any common ambient algebra.
inline Report verify_amalgam_obstruction(const FieldSpec& f) {
  Report rep;
  rep.scenario = "amalgam";
  rep.field = f.str();

  if (f.characteristic() == 2) {
    rep.skip("amalgam.all", "sl(2) obstruction scenario",
             "lie/sl2-obstruction",
             "characteristic 2: sl(2) is not simple and the generated "
             "adjoint image degenerates");
    return rep;
  }

  LieWitness w = build_lie_witness(f);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < 3; ++i)
    gens.push_back(w.psi.apply(w.B.basis_unit(i)));
  gens.push_back(w.psi_prime.apply(w.Bprime.basis_unit(0)));

  Subspace P = subalgebra_generated(w.gl3, gens);
  rep.add("amalgam.P_dim", "the subalgebra generated by psi(B) and psi'(B') "
          "has dimension 5", "lie/generated-subalgebra", P.dim() == 5,
          Json{{"dim", P.dim()}});

  Subspace U = Subspace::span(
      f, {w.psi.apply(w.B.basis_unit(1)), w.psi.apply(w.B.basis_unit(2))}, 9);
  bool u_ideal = U.leq(P) && product_subspace(w.gl3, P, U).leq(U);
  rep.add("amalgam.U_ideal", "U = span{e12, e13} is an ideal of P",
          "lie/ideal", u_ideal, Json{{"dim U", U.dim()}});

  auto ad_of = [&](const Vector& p) {
    return adjoint_on_ideal(w.gl3, std::vector<Vector>{p}, U).maps.at(0);
  };
  ExactMatrix ad_x = ad_of(gens[0]);
  ExactMatrix ad_y = ad_of(gens[3]);
  ExactMatrix want_x(f, 2, 2), want_y(f, 2, 2);
  want_x.at(1, 0) = Scalar::one(f);  // rows (0,0),(1,0)
  want_y.at(0, 1) = Scalar::one(f);  // rows (0,1),(0,0)
  rep.add("amalgam.ad_matrices",
          "ad restricted to U sends psi(x), psi'(y) to the elementary 2x2 "
          "matrices", "lie/adjoint-matrices",
          ad_x == want_x && ad_y == want_y,
          Json{{"ad_x", matrix_to_json(ad_x)}, {"ad_y", matrix_to_json(ad_y)}});

  AdjointResult ad = adjoint_on_ideal(w.gl3, P, U);
  rep.add("amalgam.image_dim", "the adjoint image of P has dimension 3",
          "lie/adjoint-image", ad.image.dim() == 3,
          Json{{"dim", ad.image.dim()}});

  LieAlgebra gl2 = LieAlgebra::gl(f, 2);
  {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ad.image.dim(); ++i)
      rows.push_back(ad.image.basis().row(i));
    LieAlgebra adP = subalgebra_on_basis(gl2, rows);
    bool perfect = product_subspace(adP, adP.full_space(), adP.full_space()) ==
                   adP.full_space();
    SeriesReport der = derived_series(adP);
    rep.add("amalgam.perfect_not_solvable",
            "the adjoint image is perfect and not solvable",
            "lie/not-solvable", perfect && !der.terminates(),
            Json{{"derived dims", der.dims()}});
  }

  {
    // Basis (e, h, f) = (ad of psi'(y), [e, f-part], ad of psi(x)).
    Vector e_vec = ad_y.flatten(), f_vec = ad_x.flatten();
    Vector h_vec = gl2.bracket(e_vec, f_vec);
    bool inside = ad.image.contains(e_vec) && ad.image.contains(f_vec) &&
                  ad.image.contains(h_vec);
    LieAlgebra adP = subalgebra_on_basis(gl2, {e_vec, h_vec, f_vec},
                                         {"e", "h", "f"});
    bool iso = is_isomorphic_via(
        LinearMap(adP, LieAlgebra::sl2(f), ExactMatrix::identity(f, 3)));
    rep.add("amalgam.sl2_iso",
            "the explicit witness identifies the adjoint image with sl(2)",
            "lie/sl2-obstruction", inside && iso);
  }

  return rep;
}

}  // namespace varwit
