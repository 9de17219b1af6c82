// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Every comparison is exact rational arithmetic.

#include <cstdio>
#include <string>
#include <vector>

#include "superalg/verify.hpp"

using namespace superalg;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::printf("C%02d %s  %s%s%s\n", number, ok ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string first_mismatch(const VerificationReport& r) {
  for (const EvidenceRow& row : r.evidence)
    if (!row.ok)
      return row.item + ": expected " + row.expected + ", got " + row.computed;
  if (r.status == VerifyStatus::NotApplicable) return "not applicable: " + r.note;
  return "";
}

bool all_pass(const std::vector<VerificationReport>& reports,
              std::string& detail) {
  for (const VerificationReport& r : reports)
    if (!r.passed()) {
      detail = r.group_label + " " + r.theorem_id + ": " + first_mismatch(r);
      return false;
    }
  return true;
}

void criterion_1_solomon() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"S2", "S3", "B2", "B3", "I2-4", "I2-5", "G-3-1-2"})
    reports.push_back(verify("inv-upstairs-hilb", builtin_group(id), 8));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(1, ok, "Solomon invariant series = prod (1+q^(d-1)t)/(1-q^d)",
         detail);
}

void criterion_2_alternants_upstairs() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"S2", "S3", "B2", "B3", "I2-4", "I2-5", "G-3-1-2"})
    reports.push_back(verify("alt-hilb", builtin_group(id), 8));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(2, ok, "det series of k[V]xL(V) = prod (q^(d-1)+t)/(1-q^d)", detail);
}

void criterion_3_alt_upstairs_basis() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"B2", "I2-4", "G-3-1-2"})
    reports.push_back(verify("alt-upstairs-basis", builtin_group(id), 6));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(3, ok,
         "df_I (.) f^a Delta: construction rank = projector rank = series",
         detail);
}

void criterion_4_alt_harmonics() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"B2", "B3", "D3", "I2-3", "I2-4", "I2-5", "I2-6"}) {
    ReflectionGroup g = builtin_group(id);
    reports.push_back(verify("alt-harmonics", g, 8));
    reports.push_back(verify("alt-harmonics-hilb", g, 8));
  }
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(4, ok,
         "2^n harmonics df_I (.) Delta: independent, annihilated, and the "
         "quotient series matches prod (q^(d-1)+t)",
         detail);
}

void criterion_5_wallach() {
  std::vector<VerificationReport> reports;
  reports.push_back(verify("wallach", builtin_group("S3-standard"), 8));
  reports.push_back(verify("wallach", builtin_group("S4-standard"), 8));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(5, ok, "Wallach: det quotient series = prod_(i<n) (t+q^i) for "
                "S3/S4-standard (rank method, non-orthogonal)",
         detail);
}

void criterion_6_table1() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"B2", "G-3-1-2"})
    reports.push_back(verify("table1-orbits", builtin_group(id), 8));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(6, ok, "table of product formulas and its t/q/reflection orbits",
         detail);
}

void criterion_7_coexponents() {
  bool ok = true;
  std::string detail;
  for (const char* id : {"S2", "S3", "S4", "S3-powersum", "B2", "B3", "D3",
                         "I2-3", "I2-4", "I2-5", "I2-6"}) {
    ReflectionGroup g = builtin_group(id);
    ExponentData e = coexponents(g, 16);
    if (e.coexponents != e.exponents || e.delta != 0) {
      ok = false;
      detail = std::string(id) + ": coexponents differ from exponents";
      break;
    }
  }
  if (ok) {
    // G(3,1,2): n unit-coefficient terms (enforced by coexponents()) and
    // the delta shift of the first Table-1 column
    ReflectionGroup g = builtin_group("G-3-1-2");
    ExponentData e = coexponents(g, 12);
    if (static_cast<int>(e.coexponents.size()) != g.vars()) {
      ok = false;
      detail = "G-3-1-2 coexponent polynomial is not n unit terms";
    } else {
      auto cell = table_cell_formula(SymSpace::V, ExtSpace::Vdual,
                                     Character::Det, e);
      BiSeries raw = molien_series(g, Character::Det, SymSpace::V,
                                   ExtSpace::Vdual, 8, g.vars());
      if (!cell || !(cell->expand(8, g.vars()) == raw) || cell->qshift != e.delta) {
        ok = false;
        detail = "q^delta shift does not match the det column for G-3-1-2";
      }
    }
  }
  report(7, ok, "coexponents: e* = e, delta = 0 for orthogonal groups; "
                "G-3-1-2 delta matches the q^delta shift",
         detail);
}

void criterion_8_schur() {
  std::vector<VerificationReport> reports;
  reports.push_back(verify("schur-orthogonality", builtin_group("S2"), 8));
  reports.push_back(verify("schur-orthogonality", builtin_group("S3"), 8));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(8, ok,
         "<a_(l+d), a_(m+d)> = (l+d)! n! delta_(l,m) for n = 2, 3, |l| <= 4",
         detail);
}

void criterion_9_property_suite() {
  std::vector<VerificationReport> reports;
  for (const char* id : {"B2", "I2-5", "G-3-1-2"})
    reports.push_back(property_suite(builtin_group(id), 1, 100));
  std::string detail;
  bool ok = all_pass(reports, detail);
  report(9, ok, "operator identities: 100 seeded instances per identity, "
                "zero failures",
         detail);
}

void criterion_10_vandermonde() {
  ReflectionGroup g = builtin_group("S3-powersum");
  SuperPoly delta = vandermonde(g);
  SuperPoly prod = SuperPoly::constant(3, Flavor::Theta, Cyclotomic(1));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      prod *= SuperPoly::variable(3, Flavor::Theta, j) -
              SuperPoly::variable(3, Flavor::Theta, i);
  bool ok = !delta.is_zero() && delta.terms().size() == prod.terms().size();
  std::string detail;
  if (ok) {
    Cyclotomic ratio =
        delta.terms().begin()->second / prod.terms().begin()->second;
    ok = (delta == ratio * prod) && !ratio.is_zero();
    if (ok) {
      detail = "scalar c = " + ratio.to_string();
      Cyclotomic claimed(216);  // n!^n for n = 3
      detail += (ratio == claimed)
                    ? " (matches n!^n)"
                    : " (differs from the claimed n!^n = 216; logged, not "
                      "asserted)";
    }
  }
  report(10, ok,
         "power-sum Vandermonde for S3 is a nonzero multiple of "
         "prod (x_j - x_i)",
         detail);
}

}  // namespace

int main() {
  criterion_1_solomon();
  criterion_2_alternants_upstairs();
  criterion_3_alt_upstairs_basis();
  criterion_4_alt_harmonics();
  criterion_5_wallach();
  criterion_6_table1();
  criterion_7_coexponents();
  criterion_8_schur();
  criterion_9_property_suite();
  criterion_10_vandermonde();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
