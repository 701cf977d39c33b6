// Acceptance runner: exercises every top-level criterion and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "property_suites.hpp"
#include "varwit/paperlab.hpp"

using namespace varwit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("VARWIT_CLI");
  if (!cli) return {-1, ""};
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const CheckResult* find_check(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

// Criterion 1: the lie scenario reproduces the series data exactly, in
// under a second, and the CLI agrees.
void criterion_lie_counterexample() {
  auto t0 = Clock::now();
  FieldSpec Q = FieldSpec::rationals();
  LieWitness w = build_lie_witness(Q);
  LieAlgebra Bpsi = semidirect(w.B, w.X, w.psi_action);
  LieAlgebra Bppsi = semidirect(w.Bprime, w.X, w.psi_prime_action);
  SeriesReport lcs1 = lower_central_series(Bpsi);
  SeriesReport lcs2 = lower_central_series(Bppsi);
  SeriesReport der1 = derived_series(Bpsi);
  SeriesReport der2 = derived_series(Bppsi);
  bool ok = lcs1.dims() == std::vector<std::size_t>{6, 3, 1, 0} &&
            lcs2.dims() == std::vector<std::size_t>{6, 3, 1, 0} &&
            der1.dims() == std::vector<std::size_t>{6, 3, 0} &&
            der2.dims() == std::vector<std::size_t>{6, 3, 0} &&
            lcs1.length == 3 && lcs2.length == 3;
  // L^2 = span{e1}
  ok = ok && lcs1.terms.size() > 2 && lcs1.terms[2].dim() == 1 &&
       lcs1.terms[2].contains(Bpsi.basis_unit(3));
  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 1.0;

  RunResult cli = run_cli("verify-paper --part lie --field Q");
  ok = ok && cli.exit_code == 0 &&
       cli.out.find("[6,3,1,0]") != std::string::npos;
  report("1. lie counterexample: dims [6,3,1,0] / [6,3,0], class 3, "
         "L^2 = span{e1}, < 1 s",
         ok);
}

// Criterion 2: the bracket table of B ⋉ X is exactly the expected one.
void criterion_bracket_table() {
  FieldSpec Q = FieldSpec::rationals();
  LieWitness w = build_lie_witness(Q);
  LieAlgebra Bpsi = semidirect(w.B, w.X, w.psi_action);
  report("2. bracket-table fidelity of B ⋉ X",
         Bpsi == expected_semidirect_table(Q));
}

// Criterion 3: the sl(2) obstruction over Q, GF(5), GF(7), each < 1 s.
void criterion_amalgam() {
  bool ok = true;
  for (const FieldSpec& f :
       {FieldSpec::rationals(), FieldSpec::gf(5), FieldSpec::gf(7)}) {
    auto t0 = Clock::now();
    Report r = verify_amalgam_obstruction(f);
    ok = ok && r.overall() && seconds_since(t0) < 1.0;
    for (const char* id :
         {"amalgam.P_dim", "amalgam.U_ideal", "amalgam.ad_matrices",
          "amalgam.image_dim", "amalgam.perfect_not_solvable",
          "amalgam.sl2_iso"}) {
      const CheckResult* c = find_check(r, id);
      ok = ok && c && c->status == CheckResult::Status::pass;
    }
  }
  report("3. amalgam obstruction: P dim 5, ad matrices, sl(2) image, over "
         "Q/GF(5)/GF(7), < 1 s each",
         ok);
}

// Criterion 4: the full group computation, < 30 s.
void criterion_group() {
  auto t0 = Clock::now();
  Report r = verify_group_counterexample();
  bool ok = r.overall();
  const CheckResult* lcs = find_check(r, "grp.lcs");
  ok = ok && lcs && lcs->data.at("B_psi") == Json({15625, 125, 5, 1}) &&
       lcs->data.at("B'_psi'") == Json({15625, 125, 5, 1});
  const CheckResult* der = find_check(r, "grp.derived");
  ok = ok && der && der->data.at("B_psi") == Json({15625, 125, 1});
  const CheckResult* exp = find_check(r, "grp.exponent");
  ok = ok && exp && exp->status == CheckResult::Status::pass;
  ok = ok && seconds_since(t0) < 30.0;
  report("4. group counterexample: relations, orders, series "
         "[15625,125,5,1] / [15625,125,1], exponent 5, < 30 s",
         ok);
}

// Criterion 5: the class-2 bound fails in both categories.
void criterion_negative_control() {
  FieldSpec Q = FieldSpec::rationals();
  LieWitness w = build_lie_witness(Q);
  LieAlgebra Bpsi = semidirect(w.B, w.X, w.psi_action);
  SeriesReport lcs = lower_central_series(Bpsi);
  bool lie_ok = lcs.terms.size() > 2 && lcs.terms[2].dim() != 0;

  GroupWitness gw = build_group_witness();
  GroupSeriesReport glcs = lower_central_series_grp(vector_semidirect(gw.B));
  bool grp_ok = glcs.orders().size() > 2 && glcs.orders()[2] != 1;
  report("5. negative control: gamma_3 nontrivial and L^2 nonzero",
         lie_ok && grp_ok);
}

// Criterion 6: property suites, zero failures allowed.
void criterion_properties() {
  using namespace varwit::testsuite;
  FieldSpec Q = FieldSpec::rationals();
  LieWitness w = build_lie_witness(Q);
  GroupWitness gw = build_group_witness();

  bool a = product_subspace_fuzz(200, 42);
  bool b = series_invariants_lie(semidirect(w.B, w.X, w.psi_action)) &&
           series_invariants_lie(semidirect(w.Bprime, w.X, w.psi_prime_action)) &&
           series_invariants_lie(LieAlgebra::heisenberg3(Q, 1)) &&
           series_invariants_lie(LieAlgebra::sl2(Q)) &&
           series_invariants_grp(gw.S) && series_invariants_grp(gw.B) &&
           series_invariants_grp(gw.Bprime);
  bool d = derivation_maps_check(LieAlgebra::abelian(Q, 3)) &&
           derivation_maps_check(LieAlgebra::heisenberg3(Q, 1)) &&
           derivation_maps_check(LieAlgebra::sl2(Q));
  bool e = commutator_bruteforce_small_groups();
  report("6. property suites: 200 random tables vs brute force, series "
         "invariants, derivation recheck, commutator oracle",
         a && b && d && e);
}

// Criterion 7: two CLI runs produce byte-identical JSON reports.
void criterion_determinism() {
  RunResult r1 = run_cli("verify-paper --json");
  RunResult r2 = run_cli("verify-paper --json");
  report("7. determinism: byte-identical verify-paper --json output",
         r1.exit_code == 0 && r2.exit_code == 0 && !r1.out.empty() &&
             r1.out == r2.out);
}

}  // namespace

int main() {
  criterion_lie_counterexample();
  criterion_bracket_table();
  criterion_amalgam();
  criterion_group();
  criterion_negative_control();
  criterion_properties();
  criterion_determinism();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
