// varwit command-line front end: exact Lie-algebra and matrix-group
// computations plus the bundled verification scenarios.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "varwit/json_io.hpp"
#include "varwit/paperlab.hpp"

namespace {

using namespace varwit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::size_t effective_cap(std::size_t flag_cap) {
  if (flag_cap != 0) return flag_cap;
  if (const char* env = std::getenv("VW_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("VW_CAP: not a number");
    }
  }
  return kDefaultEnumerationCap;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string span_str(const LieAlgebra& L, const Subspace& S) {
  if (S.dim() == 0) return "0";
  std::string out = "span{";
  for (std::size_t r = 0; r < S.dim(); ++r) {
    if (r) out += ", ";
    Vector row = S.basis().row(r);
    std::string term;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      if (!term.empty()) term += " + ";
      if (!row[i].is_one()) term += row[i].str() + "*";
      term += L.label(i);
    }
    out += term.empty() ? "0" : term;
  }
  return out + "}";
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(d[i]);
  }
  return out + "]";
}

Json series_json(const LieAlgebra& L, const SeriesReport& rep,
                 const std::string& not_label) {
  Json j;
  j["dims"] = rep.dims();
  if (rep.length)
    j["class"] = *rep.length;
  else
    j["class"] = not_label;
  Json terms = Json::array();
  for (const auto& t : rep.terms) terms.push_back(matrix_to_json(t.basis()));
  j["terms"] = terms;
  return j;
}

void print_series_human(const LieAlgebra& L, const SeriesReport& rep,
                        const std::string& name, const std::string& not_label) {
  std::cout << name << " dims: " << dims_str(rep.dims()) << "\n";
  for (std::size_t k = 0; k < rep.terms.size(); ++k)
    std::cout << "  term " << k << " = " << span_str(L, rep.terms[k]) << "\n";
  if (rep.length)
    std::cout << "  class: " << *rep.length << "\n";
  else
    std::cout << "  class: " << not_label << "\n";
}

void print_report_human(const Report& rep) {
  std::cout << "scenario: " << rep.scenario << " (field " << rep.field << ")\n";
  for (const auto& c : rep.checks) {
    std::cout << "  [" << CheckResult::status_str(c.status) << "] " << c.id
              << ": " << c.description;
    if (!c.data.empty()) std::cout << "  " << c.data.dump();
    std::cout << "\n";
  }
  for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  std::cout << "overall: " << (rep.overall() ? "pass" : "FAIL") << "\n";
}

int cmd_verify_paper(const std::string& part, const std::string& field_str,
                     bool json, std::size_t cap) {
  FieldSpec f = FieldSpec::parse(field_str);
  std::vector<Report> reports;
  if (part == "groups" || part == "all")
    reports.push_back(verify_group_counterexample(cap));
  if (part == "lie" || part == "all")
    reports.push_back(verify_lie_counterexample(f));
  if (part == "amalgam" || part == "all")
    reports.push_back(verify_amalgam_obstruction(f));

  bool ok = true;
  if (json) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    emit(out.size() == 1 ? out[0] : out);
  }
  for (const auto& r : reports) {
    if (!json) print_report_human(r);
    ok = ok && r.overall();
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_lie(const std::string& action, const std::string& input, bool json) {
  Json j = load_json(input);

  if (action == "validate") {
    LieAlgebra L = lie_from_json(j);
    auto v = L.validate();
    if (json)
      emit(Json{{"ok", v.ok}, {"detail", v.detail}});
    else
      std::cout << (v.ok ? "valid Lie algebra"
                         : "not a Lie algebra: " + v.detail)
                << "\n";
    return v.ok ? kExitOk : kExitVerificationFailure;
  }

  if (action == "series") {
    LieAlgebra L = lie_from_json(j);
    auto v = L.validate();
    if (!v.ok) throw std::invalid_argument("input is not a Lie algebra: " + v.detail);
    SeriesReport lcs = lower_central_series(L);
    SeriesReport der = derived_series(L);
    if (json) {
      emit(Json{{"lower_central", series_json(L, lcs, "not-nilpotent")},
                {"derived", series_json(L, der, "not-solvable")}});
    } else {
      print_series_human(L, lcs, "lower central", "not-nilpotent");
      print_series_human(L, der, "derived", "not-solvable");
    }
    return kExitOk;
  }

  if (action == "derive") {
    LieAlgebra L = lie_from_json(j);
    auto v = L.validate();
    if (!v.ok) throw std::invalid_argument("input is not a Lie algebra: " + v.detail);
    DerivationAlgebra der = derivations(L);
    if (json) {
      Json maps = Json::array();
      for (const auto& m : der.basis_maps) maps.push_back(matrix_to_json(m));
      emit(Json{{"dim", der.algebra.dim()},
                {"algebra", lie_to_json(der.algebra)},
                {"basis_maps", maps}});
    } else {
      std::cout << "dim Der = " << der.algebra.dim() << "\n";
    }
    return kExitOk;
  }

  if (action == "generate") {
    LieAlgebra L = lie_from_json(j.at("algebra"));
    std::vector<Vector> vecs;
    for (const auto& v : j.at("vectors"))
      vecs.push_back(vector_from_json(L.field(), v));
    Subspace S = subalgebra_generated(L, vecs);
    if (json)
      emit(Json{{"dim", S.dim()}, {"basis", matrix_to_json(S.basis())}});
    else
      std::cout << "generated subalgebra: dim " << S.dim() << " = "
                << span_str(L, S) << "\n";
    return kExitOk;
  }

  if (action == "semidirect") {
    LieAlgebra B = lie_from_json(j.at("b"));
    LieAlgebra X = lie_from_json(j.at("x"));
    std::vector<ExactMatrix> action_mats;
    for (const auto& m : j.at("action"))
      action_mats.push_back(matrix_from_json(B.field(), m));
    LieAlgebra prod = semidirect(B, X, action_mats);
    emit(lie_to_json(prod));
    return kExitOk;
  }

  if (action == "hom-check") {
    LieAlgebra D = lie_from_json(j.at("domain"));
    LieAlgebra C = lie_from_json(j.at("codomain"));
    ExactMatrix m = matrix_from_json(D.field(), j.at("matrix"));
    LinearMap f(D, C, m);
    HomStatus s = check_hom(f);
    const char* name = s == HomStatus::not_hom   ? "not-hom"
                       : s == HomStatus::hom     ? "hom"
                                                 : "mono-hom";
    if (json)
      emit(Json{{"status", name}});
    else
      std::cout << name << "\n";
    return kExitOk;
  }

  throw std::invalid_argument("unknown lie action '" + action + "'");
}

int cmd_grp(const std::string& action, const std::string& input,
            const std::string& relations_path, bool json, std::size_t cap) {
  MatrixGroup G = group_from_json(load_json(input));

  if (action == "order") {
    ElementSet e = enumerate(G, cap);
    if (json)
      emit(Json{{"order", e.order()}});
    else
      std::cout << e.order() << "\n";
    return kExitOk;
  }

  if (action == "series") {
    GroupSeriesReport lcs = lower_central_series_grp(G, cap);
    GroupSeriesReport der = derived_series_grp(G, cap);
    auto describe = [](const GroupSeriesReport& r, const std::string& not_label) {
      Json j;
      j["orders"] = r.orders();
      if (r.length)
        j["class"] = *r.length;
      else
        j["class"] = not_label;
      return j;
    };
    if (json) {
      emit(Json{{"lower_central", describe(lcs, "not-nilpotent")},
                {"derived", describe(der, "not-solvable")}});
    } else {
      std::cout << "lower central orders: " << dims_str(lcs.orders()) << "\n";
      std::cout << "derived orders: " << dims_str(der.orders()) << "\n";
    }
    return kExitOk;
  }

  if (action == "relations") {
    if (relations_path.empty())
      throw std::invalid_argument("grp relations requires -r <file>");
    std::ifstream in(relations_path);
    if (!in)
      throw std::invalid_argument("cannot open relations file '" +
                                  relations_path + "'");
    Json table = Json::object();
    bool all_ok = true;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      bool ok = evaluate_relation(G, RelationWord::parse(line));
      table[line] = ok;
      all_ok = all_ok && ok;
      if (!json)
        std::cout << (ok ? "pass" : "FAIL") << "  " << line << "\n";
    }
    if (json) emit(Json{{"relations", table}, {"all", all_ok}});
    return all_ok ? kExitOk : kExitVerificationFailure;
  }

  if (action == "semidirect") {
    emit(group_to_json(vector_semidirect(G)));
    return kExitOk;
  }

  throw std::invalid_argument("unknown grp action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-algebra and finite matrix-group toolkit"};
  app.require_subcommand(1);

  std::string part = "all", field = "Q", input, relations, action;
  bool json = false;
  std::size_t cap = 0;

  auto* verify = app.add_subcommand("verify-paper",
                                    "run the bundled verification scenarios");
  verify->add_option("--part", part, "groups, lie, amalgam, or all")
      ->check(CLI::IsMember({"groups", "lie", "amalgam", "all"}));
  verify->add_option("--field", field, "Q or GF(p)");
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_option("--cap", cap, "enumeration cap");

  auto* lie = app.add_subcommand("lie", "Lie algebra computations");
  lie->add_option("action", action,
                  "validate, series, derive, generate, semidirect, hom-check")
      ->required()
      ->check(CLI::IsMember({"validate", "series", "derive", "generate",
                             "semidirect", "hom-check"}));
  lie->add_option("-i,--input", input, "input JSON file")->required();
  lie->add_flag("--json", json, "machine-readable output");

  auto* grp = app.add_subcommand("grp", "matrix group computations");
  grp->add_option("action", action, "order, series, relations, semidirect")
      ->required()
      ->check(CLI::IsMember({"order", "series", "relations", "semidirect"}));
  grp->add_option("-i,--input", input, "generator JSON file")->required();
  grp->add_option("-r,--relations", relations, "relations file");
  grp->add_flag("--json", json, "machine-readable output");
  grp->add_option("--cap", cap, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify->parsed())
      return cmd_verify_paper(part, field, json, effective_cap(cap));
    if (lie->parsed()) return cmd_lie(action, input, json);
    if (grp->parsed())
      return cmd_grp(action, input, relations, json, effective_cap(cap));
  } catch (const varwit::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
