#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suites.hpp"

using namespace varwit;
using namespace varwit::testsuite;

namespace {

ExactMatrix random_matrix(const FieldSpec& f, std::size_t rows,
                          std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  ExactMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::of_int(f, d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> shape(1, 6);
  for (const FieldSpec& f :
       {FieldSpec::rationals(), FieldSpec::gf(5), FieldSpec::gf(7)})
    for (int t = 0; t < 40; ++t) {
      ExactMatrix m = random_matrix(f, shape(rng), shape(rng), rng);
      CHECK(rank(m) + kernel(m).dim() == m.cols());
      auto [r, rk] = rref(m);
      CHECK(rref(r).first == r);
    }
}

TEST_CASE("subspace lattice identities on random subspaces") {
  std::mt19937 rng(11);
  FieldSpec f = FieldSpec::gf(7);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> rows(0, 4);
    std::size_t n = 5;
    Subspace a = Subspace::from_rows(random_matrix(f, rows(rng) + 1, n, rng));
    Subspace b = Subspace::from_rows(random_matrix(f, rows(rng) + 1, n, rng));
    CHECK(a.leq(a.sum(b)));
    CHECK(a.intersect(b).leq(a));
    CHECK(a.intersect(b).leq(b));
    CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("GF(p) arithmetic agrees with rational arithmetic mod p") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-50, 50);
  for (std::int64_t p : {5, 7}) {
    FieldSpec fp = FieldSpec::gf(p);
    FieldSpec q = FieldSpec::rationals();
    for (int t = 0; t < 200; ++t) {
      int a = d(rng), b = d(rng);
      auto reduce = [&](const Scalar& s) {
        BigInt num = numerator(s.rational_value());
        std::int64_t r = static_cast<std::int64_t>(num % p);
        return Scalar::of_int(fp, r);
      };
      Scalar qa = Scalar::of_int(q, a), qb = Scalar::of_int(q, b);
      Scalar pa = Scalar::of_int(fp, a), pb = Scalar::of_int(fp, b);
      CHECK(reduce(qa + qb) == pa + pb);
      CHECK(reduce(qa - qb) == pa - pb);
      CHECK(reduce(qa * qb) == pa * pb);
    }
  }
}

TEST_CASE("product_subspace agrees with all-pairs brute force (GF(5))") {
  CHECK(product_subspace_fuzz(200, 42));
}

TEST_CASE("series invariants hold on the constructed algebras") {
  FieldSpec Q = FieldSpec::rationals();
  LieWitness w = build_lie_witness(Q);
  CHECK(series_invariants_lie(semidirect(w.B, w.X, w.psi_action)));
  CHECK(series_invariants_lie(semidirect(w.Bprime, w.X, w.psi_prime_action)));
  CHECK(series_invariants_lie(LieAlgebra::heisenberg3(Q, 1)));
  CHECK(series_invariants_lie(LieAlgebra::sl2(Q)));
  CHECK(series_invariants_lie(LieAlgebra::gl(Q, 2)));
  CHECK(series_invariants_lie(LieAlgebra::abelian(FieldSpec::gf(5), 3)));
}

TEST_CASE("series invariants hold on random small Lie algebras") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t)
    CHECK(series_invariants_lie(random_lie_gf5(rng)));
}

TEST_CASE("group series invariants") {
  GroupWitness w = build_group_witness();
  CHECK(series_invariants_grp(w.S));
  CHECK(series_invariants_grp(w.B));
  CHECK(series_invariants_grp(w.Bprime));
}

TEST_CASE("derivation condition holds on every returned basis map") {
  FieldSpec Q = FieldSpec::rationals();
  CHECK(derivation_maps_check(LieAlgebra::abelian(Q, 3)));
  CHECK(derivation_maps_check(LieAlgebra::heisenberg3(Q, 1)));
  CHECK(derivation_maps_check(LieAlgebra::heisenberg3(FieldSpec::gf(5), 2)));
  CHECK(derivation_maps_check(LieAlgebra::sl2(Q)));
}

TEST_CASE("commutator subgroup matches brute force on small groups") {
  CHECK(commutator_bruteforce_small_groups());
}

TEST_CASE("scalars stay canonical through random arithmetic") {
  std::mt19937 rng(5);
  FieldSpec q = FieldSpec::rationals();
  std::uniform_int_distribution<int> d(-9, 9);
  Scalar acc = Scalar::one(q);
  for (int t = 0; t < 100; ++t) {
    int num = d(rng), den = d(rng);
    if (den == 0) den = 1;
    Scalar s = Scalar::of_int(q, num) / Scalar::of_int(q, den);
    acc = (t % 2) ? acc * s : acc + s;
    const BigRat& v = acc.rational_value();
    CHECK(denominator(v) > 0);
    CHECK(gcd(BigInt(abs(numerator(v))), BigInt(denominator(v))) <= 1);
  }
}
