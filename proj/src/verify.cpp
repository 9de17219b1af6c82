#include "superalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace superalg {

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

void VerificationReport::add_row(std::string item, std::string expected,
                                 std::string computed) {
  bool ok = expected == computed;
  evidence.push_back(
      {std::move(item), std::move(expected), std::move(computed), ok});
}

void VerificationReport::finalize() {
  if (status == VerifyStatus::NotApplicable) return;
  status = VerifyStatus::Pass;
  for (const EvidenceRow& row : evidence)
    if (!row.ok) {
      status = VerifyStatus::Fail;
      return;
    }
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "theorem:  " << theorem_id << "\n";
  os << "group:    " << group_label << "\n";
  os << "box:      qmax=" << qmax << " tmax=" << tmax;
  if (iterations > 0) os << " seed=" << seed << " iterations=" << iterations;
  os << "\n";
  os << "status:   " << verify_status_name(status) << "\n";
  if (!note.empty()) os << "note:     " << note << "\n";
  if (!evidence.empty()) {
    size_t w_item = 4, w_exp = 8, w_got = 8;
    for (const EvidenceRow& r : evidence) {
      w_item = std::max(w_item, r.item.size());
      w_exp = std::max(w_exp, r.expected.size());
      w_got = std::max(w_got, r.computed.size());
    }
    os << "  " << std::string(w_item - 4, ' ') << "item  "
       << std::string(w_exp - 8, ' ') << "expected  "
       << std::string(w_got - 8, ' ') << "computed  ok\n";
    for (const EvidenceRow& r : evidence) {
      os << "  " << std::string(w_item - r.item.size(), ' ') << r.item << "  "
         << std::string(w_exp - r.expected.size(), ' ') << r.expected << "  "
         << std::string(w_got - r.computed.size(), ' ') << r.computed << "  "
         << (r.ok ? "yes" : "NO") << "\n";
    }
  }
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["theorem"] = theorem_id;
  j["group"] = group_label;
  j["qmax"] = qmax;
  j["tmax"] = tmax;
  if (iterations > 0) {
    j["seed"] = seed;
    j["iterations"] = iterations;
  }
  j["status"] = verify_status_name(status);
  if (!note.empty()) j["note"] = note;
  nlohmann::json rows = nlohmann::json::array();
  for (const EvidenceRow& r : evidence) {
    nlohmann::json row;
    row["item"] = r.item;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["ok"] = r.ok;
    rows.push_back(row);
  }
  j["evidence"] = rows;
  return j.dump(2);
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "item,expected,computed,ok\n";
  for (const EvidenceRow& r : evidence)
    os << r.item << "," << r.expected << "," << r.computed << ","
       << (r.ok ? "yes" : "no") << "\n";
  return os.str();
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "inv-upstairs-hilb", "alt-hilb",           "alt-upstairs-basis",
      "alt-harmonics",     "alt-harmonics-hilb", "wallach",
      "table1-orbits",     "schur-orthogonality", "property-suite"};
  return ids;
}

uint64_t SuperPolyGen::next(uint64_t bound) {
  return bound == 0 ? 0 : engine_() % bound;
}

Rational SuperPolyGen::coefficient() {
  long pool[] = {1, -1, 2, -2, 3, -3};
  return Rational(pool[next(6)]);
}

SuperMonomial SuperPolyGen::random_monomial(int n, int max_xdeg) {
  SuperMonomial m{std::vector<unsigned>(static_cast<size_t>(n), 0u),
                  static_cast<uint32_t>(next(1u << n))};
  int total = static_cast<int>(next(static_cast<uint64_t>(max_xdeg) + 1));
  for (int k = 0; k < total; ++k)
    m.alpha[static_cast<size_t>(next(static_cast<uint64_t>(n)))] += 1;
  return m;
}

SuperPoly SuperPolyGen::random_poly(int n, Flavor flavor, int max_xdeg,
                                    int max_terms) {
  SuperPoly f(n, flavor, 1);
  int terms = 1 + static_cast<int>(next(static_cast<uint64_t>(max_terms)));
  for (int k = 0; k < terms; ++k)
    f.add_term(random_monomial(n, max_xdeg), Cyclotomic(coefficient()));
  return f;
}

SuperPoly SuperPolyGen::random_x_only(int n, int max_xdeg, int max_terms) {
  SuperPoly f(n, Flavor::Theta, 1);
  int terms = 1 + static_cast<int>(next(static_cast<uint64_t>(max_terms)));
  for (int k = 0; k < terms; ++k) {
    SuperMonomial m = random_monomial(n, max_xdeg);
    m.mask = 0;
    f.add_term(m, Cyclotomic(coefficient()));
  }
  return f;
}

SuperPoly SuperPolyGen::random_pure_extdeg(int n, Flavor flavor, int extdeg,
                                           int max_xdeg, int max_terms) {
  SuperPoly f(n, flavor, 1);
  int terms = 1 + static_cast<int>(next(static_cast<uint64_t>(max_terms)));
  for (int k = 0; k < terms; ++k) {
    SuperMonomial m = random_monomial(n, max_xdeg);
    std::vector<int> positions(static_cast<size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    m.mask = 0;
    for (int chosen = 0; chosen < extdeg; ++chosen) {
      size_t pick = next(positions.size());
      m.mask |= 1u << positions[pick];
      positions.erase(positions.begin() + static_cast<long>(pick));
    }
    f.add_term(m, Cyclotomic(coefficient()));
  }
  return f;
}

namespace {

std::string bidegree_name(int i, int j) {
  return "q^" + std::to_string(i) + " t^" + std::to_string(j);
}

void compare_series(VerificationReport& report, const BiSeries& expected,
                    const BiSeries& computed) {
  for (int i = 0; i <= expected.qmax(); ++i)
    for (int j = 0; j <= expected.tmax(); ++j) {
      const Rational& e = expected.at(i, j);
      const Rational& c = computed.at(i, j);
      if (e == 0 && c == 0) continue;
      report.add_row(bidegree_name(i, j), e.get_str(), c.get_str());
    }
  if (report.evidence.empty())
    report.add_row("series", "0", computed.is_zero() ? "0" : "nonzero");
}

int sum_exponents(const ReflectionGroup& g) {
  int s = 0;
  for (int d : g.degrees()) s += d - 1;
  return s;
}

bool harmonics_hypotheses(const ReflectionGroup& g, std::string& why) {
  if (!g.real_orthogonal()) {
    why = "group is not real orthogonal";
    return false;
  }
  for (int d : g.degrees())
    if (d < 2) {
      why = "a degree equals 1 (nonzero fixed space)";
      return false;
    }
  SuperPoly sum_squares(g.vars(), Flavor::Theta, 1);
  for (int i = 1; i <= g.vars(); ++i) {
    SuperPoly x = SuperPoly::variable(g.vars(), Flavor::Theta, i);
    sum_squares += x * x;
  }
  if (g.invariants()[0] != sum_squares) {
    why = "f_1 is not the sum of squares";
    return false;
  }
  return true;
}

SuperPoly odot_identified(const SuperPoly& a, const SuperPoly& h) {
  return reinterpret_flavor(odot(a, reinterpret_flavor(h, Flavor::Psi)),
                            Flavor::Theta);
}

void verify_inv_upstairs_hilb(VerificationReport& report,
                              const ReflectionGroup& g) {
  ExponentData e;
  e.degrees = g.degrees();
  for (int d : e.degrees) e.exponents.push_back(d - 1);
  BiSeries formula = solomon_formula(e).expand(report.qmax, report.tmax);
  BiSeries raw = molien_series(g, Character::Trivial, SymSpace::V,
                               ExtSpace::Vdual, report.qmax, report.tmax);
  compare_series(report, formula, raw);
}

void verify_alt_hilb(VerificationReport& report, const ReflectionGroup& g) {
  ExponentData e;
  e.degrees = g.degrees();
  for (int d : e.degrees) e.exponents.push_back(d - 1);
  BiSeries formula = alternant_formula(e).expand(report.qmax, report.tmax);
  BiSeries raw = molien_series(g, Character::Det, SymSpace::V, ExtSpace::V,
                               report.qmax, report.tmax);
  compare_series(report, formula, raw);
}

void verify_alt_upstairs_basis(VerificationReport& report,
                               const ReflectionGroup& g) {
  if (!g.unitary()) {
    report.status = VerifyStatus::NotApplicable;
    report.note = "group is not unitary";
    return;
  }
  BiSeries raw = molien_series(g, Character::Det, SymSpace::V, ExtSpace::V,
                               report.qmax, report.tmax);
  for (int i = 0; i <= report.qmax; ++i)
    for (int j = 0; j <= std::min(report.tmax, g.vars()); ++j) {
      Bidegree b{i, j};
      std::vector<SuperPoly> vectors = alt_upstairs_vectors(g, b);
      int construction_rank = rank_of_polys(vectors);
      int projector_rank =
          projector_multiplicity(g, Character::Det, b, Flavor::Psi);
      const Rational& coeff = raw.at(i, j);
      std::string expected = coeff.get_str();
      report.add_row(bidegree_name(i, j) + " rank", expected,
                     std::to_string(construction_rank));
      report.add_row(bidegree_name(i, j) + " projector", expected,
                     std::to_string(projector_rank));
      if (!vectors.empty()) {
        // spot check the det-isotypy of the first vector
        const SuperPoly& v = vectors.front();
        size_t idx = (i + 1) % g.order();
        bool iso = g.act(idx, v) == g.det_of(idx) * v;
        report.add_row(bidegree_name(i, j) + " det-isotypy", "yes",
                       iso ? "yes" : "no");
      }
    }
}

void verify_alt_harmonics(VerificationReport& report,
                          const ReflectionGroup& g) {
  std::string why;
  if (!harmonics_hypotheses(g, why)) {
    report.status = VerifyStatus::NotApplicable;
    report.note = why;
    return;
  }
  std::vector<SuperPoly> basis = harmonics_det_basis(g);
  size_t expected_count = 1ull << g.vars();
  report.add_row("count", std::to_string(expected_count),
                 std::to_string(basis.size()));
  report.add_row("rank", std::to_string(expected_count),
                 std::to_string(rank_of_polys(basis)));
  int harmonic = 0;
  for (const SuperPoly& h : basis)
    if (is_harmonic(g, h)) ++harmonic;
  report.add_row("annihilated by all f_i and df_i",
                 std::to_string(basis.size()), std::to_string(harmonic));
  // Bidegree multiset must match prod (q^{e_i} + t).
  ExponentData e;
  e.degrees = g.degrees();
  for (int d : e.degrees) e.exponents.push_back(d - 1);
  int qbox = sum_exponents(g);
  BiSeries formula =
      coinvariant_det_formula(e).expand(qbox, g.vars());
  BiSeries found(qbox, g.vars());
  for (const SuperPoly& h : basis) {
    if (h.is_zero() || !h.bihomogeneous()) {
      report.add_row("bihomogeneous basis element", "yes", "no");
      continue;
    }
    Bidegree b = h.terms().begin()->first.bidegree();
    found.add(b.qdeg, b.tdeg, Rational(1));
  }
  compare_series(report, formula, found);
}

void verify_alt_harmonics_hilb(VerificationReport& report,
                               const ReflectionGroup& g) {
  std::string why;
  if (!harmonics_hypotheses(g, why)) {
    report.status = VerifyStatus::NotApplicable;
    report.note = why;
    return;
  }
  ExponentData e;
  e.degrees = g.degrees();
  for (int d : e.degrees) e.exponents.push_back(d - 1);
  int qbox = std::max(report.qmax, sum_exponents(g));
  BiSeries formula = coinvariant_det_formula(e).expand(qbox, g.vars());
  BiSeries quotient = quotient_series(g, Character::Det, qbox, g.vars());
  compare_series(report, formula, quotient);
}

void verify_wallach(VerificationReport& report, const ReflectionGroup& g) {
  // Degrees 2, 3, ..., n+1: the standard reflection representation of S_{n+1}.
  for (int k = 0; k < g.vars(); ++k)
    if (g.degrees()[static_cast<size_t>(k)] != k + 2) {
      report.status = VerifyStatus::NotApplicable;
      report.note = "degrees are not 2..n+1 (not a standard S_n model)";
      return;
    }
  int qbox = std::max(report.qmax, sum_exponents(g));
  BiSeries formula = wallach_formula(g.vars() + 1).expand(qbox, g.vars());
  BiSeries quotient = quotient_series(g, Character::Det, qbox, g.vars());
  compare_series(report, formula, quotient);
}

struct TableCellId {
  SymSpace sym;
  ExtSpace ext;
  Character chi;
  std::string name() const {
    std::string row = std::string("k[") +
                      (sym == SymSpace::V ? "V" : "V*") + "]xL(" +
                      (ext == ExtSpace::V ? "V" : "V*") + ")";
    return row + " " + character_name(chi);
  }
};

void verify_table1_orbits(VerificationReport& report,
                          const ReflectionGroup& g) {
  int cmax = std::max(report.qmax, 2 * g.degrees().back());
  ExponentData e = coexponents(g, cmax);
  const SymSpace syms[] = {SymSpace::V, SymSpace::Vdual};
  const ExtSpace exts[] = {ExtSpace::V, ExtSpace::Vdual};
  const Character chis[] = {Character::Det, Character::Trivial,
                            Character::DetInv};
  std::map<std::string, BiSeries> raw;
  for (SymSpace sym : syms)
    for (ExtSpace ext : exts)
      for (Character chi : chis) {
        TableCellId cell{sym, ext, chi};
        raw.emplace(cell.name(),
                    molien_series(g, chi, sym, ext, report.qmax,
                                  report.tmax));
      }
  // filled cells against their product formulas
  for (SymSpace sym : syms)
    for (ExtSpace ext : exts)
      for (Character chi : chis) {
        TableCellId cell{sym, ext, chi};
        auto formula = table_cell_formula(sym, ext, chi, e);
        if (!formula) {
          report.add_row(cell.name() + " (no closed form)", "raw only",
                         "raw only");
          continue;
        }
        bool match =
            formula->expand(report.qmax, report.tmax) == raw.at(cell.name());
        report.add_row(cell.name() + " = formula", "yes",
                       match ? "yes" : "no");
      }
  // t-transform: rows 1 and 3 move down one and right one
  const std::pair<TableCellId, TableCellId> t_moves[] = {
      {{SymSpace::V, ExtSpace::V, Character::Det},
       {SymSpace::V, ExtSpace::Vdual, Character::Trivial}},
      {{SymSpace::V, ExtSpace::V, Character::Trivial},
       {SymSpace::V, ExtSpace::Vdual, Character::DetInv}},
      {{SymSpace::Vdual, ExtSpace::V, Character::Det},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::Trivial}},
      {{SymSpace::Vdual, ExtSpace::V, Character::Trivial},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::DetInv}},
  };
  for (const auto& [from, to] : t_moves) {
    bool match = series_transform_t(raw.at(from.name()), g.vars()) ==
                 raw.at(to.name());
    report.add_row("t^n F(1/t): " + from.name() + " -> " + to.name(), "yes",
                   match ? "yes" : "no");
  }
  // q-transform at the descriptor level: down two, right one
  const std::pair<TableCellId, TableCellId> q_moves[] = {
      {{SymSpace::V, ExtSpace::V, Character::Det},
       {SymSpace::Vdual, ExtSpace::V, Character::Trivial}},
      {{SymSpace::V, ExtSpace::V, Character::Trivial},
       {SymSpace::Vdual, ExtSpace::V, Character::DetInv}},
      {{SymSpace::V, ExtSpace::Vdual, Character::Det},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::Trivial}},
      {{SymSpace::V, ExtSpace::Vdual, Character::Trivial},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::DetInv}},
  };
  for (const auto& [from, to] : q_moves) {
    auto f_from = table_cell_formula(from.sym, from.ext, from.chi, e);
    auto f_to = table_cell_formula(to.sym, to.ext, to.chi, e);
    if (!f_from || !f_to) continue;
    bool match = formula_transform_q(*f_from).expand(report.qmax,
                                                     report.tmax) ==
                 f_to->expand(report.qmax, report.tmax);
    report.add_row("(-q)^-n F(1/q): " + from.name() + " -> " + to.name(),
                   "yes", match ? "yes" : "no");
  }
  // reflection through the middle (sigma -> sigma^{-1}) preserves series
  const std::pair<TableCellId, TableCellId> reflections[] = {
      {{SymSpace::V, ExtSpace::V, Character::Det},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::DetInv}},
      {{SymSpace::V, ExtSpace::V, Character::Trivial},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::Trivial}},
      {{SymSpace::V, ExtSpace::V, Character::DetInv},
       {SymSpace::Vdual, ExtSpace::Vdual, Character::Det}},
      {{SymSpace::V, ExtSpace::Vdual, Character::Det},
       {SymSpace::Vdual, ExtSpace::V, Character::DetInv}},
      {{SymSpace::V, ExtSpace::Vdual, Character::Trivial},
       {SymSpace::Vdual, ExtSpace::V, Character::Trivial}},
      {{SymSpace::V, ExtSpace::Vdual, Character::DetInv},
       {SymSpace::Vdual, ExtSpace::V, Character::Det}},
  };
  for (const auto& [a, b] : reflections) {
    bool match = raw.at(a.name()) == raw.at(b.name());
    report.add_row("reflect: " + a.name() + " = " + b.name(), "yes",
                   match ? "yes" : "no");
  }
  std::string exponent_info = "coexponents";
  for (int c : e.coexponents) exponent_info += " " + std::to_string(c);
  exponent_info += ", delta " + std::to_string(e.delta);
  report.evidence.push_back({"exponent data", exponent_info, exponent_info,
                             true});
}

std::vector<std::vector<int>> partitions_up_to(int max_size, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int budget, int largest) {
    out.push_back(current);
    if (budget == 0 || static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(budget, largest); part >= 1; --part) {
      current.push_back(part);
      rec(budget - part, part);
      current.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

void verify_schur_orthogonality(VerificationReport& report,
                                const ReflectionGroup& g) {
  for (int k = 0; k < g.vars(); ++k)
    if (g.degrees()[static_cast<size_t>(k)] != k + 1) {
      report.status = VerifyStatus::NotApplicable;
      report.note = "degrees are not 1..n (not the natural S_n model)";
      return;
    }
  const int n = g.vars();
  const int max_size = 4;
  auto partitions = partitions_up_to(max_size, n);
  std::vector<SuperPoly> alternants;
  std::vector<Rational> self_pairings;
  Rational nfact(1);
  for (int k = 2; k <= n; ++k) nfact *= k;
  for (const auto& lambda : partitions) {
    alternants.push_back(schur_alternant(lambda, n));
    Rational fact(1);
    for (int j = 0; j < n; ++j) {
      int part = (j < static_cast<int>(lambda.size()))
                     ? lambda[static_cast<size_t>(j)]
                     : 0;
      int exponent = part + n - 1 - j;
      for (int v = 2; v <= exponent; ++v) fact *= v;
    }
    self_pairings.push_back(fact * nfact);
  }
  int checked = 0, good = 0;
  for (size_t a = 0; a < partitions.size(); ++a)
    for (size_t b = 0; b < partitions.size(); ++b) {
      Cyclotomic value = hermitian_form(alternants[a], alternants[b]);
      Rational expected = (a == b) ? self_pairings[a] : Rational(0);
      ++checked;
      if (value.is_rational() && value.as_rational() == expected) ++good;
    }
  report.add_row("pairings (lambda, mu), |lambda| <= 4",
                 std::to_string(checked) + " exact",
                 std::to_string(good) + " exact");
}

using IdentityCheck =
    std::function<bool(SuperPolyGen&, const ReflectionGroup&)>;

struct Identity {
  std::string name;
  bool needs_unitary = false;
  IdentityCheck check;
};

std::vector<Identity> identity_list() {
  std::vector<Identity> ids;
  auto rand_sigma = [](SuperPolyGen& gen, const ReflectionGroup& g) {
    return gen.next(g.order());
  };

  ids.push_back({"partial-x-commute", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   int j = 1 + static_cast<int>(gen.next(g.vars()));
                   return partial_x(i, partial_x(j, f)) ==
                          partial_x(j, partial_x(i, f));
                 }});
  ids.push_back({"partial-theta-anticommute", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   int j = 1 + static_cast<int>(gen.next(g.vars()));
                   return partial_theta(i, partial_theta(j, f)) ==
                          -partial_theta(j, partial_theta(i, f));
                 }});
  ids.push_back({"mult-theta-anticommute", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   int j = 1 + static_cast<int>(gen.next(g.vars()));
                   return mult_theta(i, mult_theta(j, f)) ==
                          -mult_theta(j, mult_theta(i, f));
                 }});
  ids.push_back({"mixed-x-theta-commute", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   int j = 1 + static_cast<int>(gen.next(g.vars()));
                   return partial_x(i, partial_theta(j, f)) ==
                              partial_theta(j, partial_x(i, f)) &&
                          partial_x(i, mult_theta(j, f)) ==
                              mult_theta(j, partial_x(i, f));
                 }});
  ids.push_back({"theta-clifford", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   int j = 1 + static_cast<int>(gen.next(g.vars()));
                   SuperPoly lhs = mult_theta(i, partial_theta(j, f)) +
                                   partial_theta(j, mult_theta(i, f));
                   return lhs == (i == j ? f
                                         : SuperPoly(g.vars(), Flavor::Theta,
                                                     f.conductor()));
                 }});
  ids.push_back({"leibniz", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   int r = static_cast<int>(gen.next(g.vars() + 1));
                   SuperPoly f = gen.random_pure_extdeg(g.vars(),
                                                        Flavor::Theta, r, 3, 3);
                   SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   int i = 1 + static_cast<int>(gen.next(g.vars()));
                   SuperPoly rhs = partial_theta(i, f) * h;
                   SuperPoly second = f * partial_theta(i, h);
                   rhs = (r % 2 == 0) ? rhs + second : rhs - second;
                   return partial_theta(i, f * h) == rhs;
                 }});
  ids.push_back({"dd-zero", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 4, 4);
                   return exterior_derivative(exterior_derivative(f)).is_zero();
                 }});
  ids.push_back({"inv-complement-deg", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   uint32_t full = (1u << g.vars()) - 1u;
                   uint32_t I = static_cast<uint32_t>(gen.next(full + 1));
                   uint32_t J = static_cast<uint32_t>(gen.next(full + 1));
                   return inv_count(I, J) + inv_count(I, full & ~J) ==
                          deg_of_mask(I);
                 }});
  ids.push_back({"hodge-dot-compat", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   return odot(f, hodge_star(h)) == hodge_star(dot(f, h));
                 }});
  ids.push_back({"orth-monomials", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperMonomial a = gen.random_monomial(g.vars(), 4);
                   SuperMonomial b = gen.random_monomial(g.vars(), 4);
                   Cyclotomic lhs = hermitian_form(
                       SuperPoly::monomial(g.vars(), Flavor::Theta, a,
                                           Cyclotomic(1)),
                       SuperPoly::monomial(g.vars(), Flavor::Theta, b,
                                           Cyclotomic(1)));
                   Rational expected(0);
                   if (a == b) {
                     expected = 1;
                     for (unsigned e : a.alpha)
                       for (unsigned v = 2; v <= e; ++v)
                         expected *= static_cast<long>(v);
                     int r = a.extdeg();
                     if (((r * (r - 1)) / 2) % 2 == 1) expected = -expected;
                   }
                   return lhs == Cyclotomic(expected);
                 }});
  ids.push_back({"herm-symmetry", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   return hermitian_form(f, h) ==
                          hermitian_form(h, f).conjugate();
                 }});
  ids.push_back(
      {"herm-sesquilinear", false,
       [](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         Cyclotomic c = Cyclotomic(gen.coefficient()) +
                        Cyclotomic::zeta(g.conductor()) *
                            Cyclotomic(gen.coefficient());
         return hermitian_form(c * f, h) ==
                    c.conjugate() * hermitian_form(f, h) &&
                hermitian_form(f, c * h) == c * hermitian_form(f, h);
       }});
  ids.push_back({"herm-sign-definite", false,
                 [](SuperPolyGen& gen, const ReflectionGroup& g) {
                   int r = static_cast<int>(gen.next(g.vars() + 1));
                   SuperPoly f = gen.random_pure_extdeg(g.vars(),
                                                        Flavor::Theta, r, 3, 3);
                   if (f.is_zero()) return true;
                   Cyclotomic v = hermitian_form(f, f);
                   if (!v.is_rational()) return false;
                   Rational value = v.as_rational();
                   if (((r * (r - 1)) / 2) % 2 == 1) value = -value;
                   return value > 0;
                 }});
  ids.push_back(
      {"laplacian-polarization", false,
       [](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly f = gen.random_x_only(g.vars(), 4, 3);
         SuperPoly h = gen.random_x_only(g.vars(), 4, 3);
         SuperPoly lhs(g.vars(), Flavor::Theta, 1);
         for (int i = 1; i <= g.vars(); ++i)
           lhs += partial_x(i, f) * partial_x(i, h);
         SuperPoly rhs = laplacian(f * h) - laplacian(f) * h -
                         f * laplacian(h);
         return Cyclotomic(2) * lhs == rhs;
       }});
  ids.push_back(
      {"commuting-df", false,
       [](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly f = gen.random_x_only(g.vars(), 3, 2);
         SuperPoly p = gen.random_x_only(g.vars(), 3, 2);
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         SuperPoly df = exterior_derivative(f);
         SuperPoly dp = exterior_derivative(p);
         SuperPoly lhs = dot(df, odot_identified(dp, h));
         SuperPoly pol = laplacian(f * p) - laplacian(f) * p -
                         f * laplacian(p);
         SuperPoly rhs = -odot_identified(dp, dot(df, h)) +
                         Cyclotomic(Rational(1, 2)) * dot(pol, h);
         return lhs == rhs;
       }});
  ids.push_back({"d-commutes-action", false,
                 [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   size_t s = rand_sigma(gen, g);
                   return g.act(s, exterior_derivative(f)) ==
                          exterior_derivative(g.act(s, f));
                 }});
  ids.push_back({"delta-det", false,
                 [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly delta = vandermonde(g);
                   size_t s = rand_sigma(gen, g);
                   return g.act(s, delta) == g.det_of(s) * delta;
                 }});
  ids.push_back({"invariants-fixed", false,
                 [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
                   size_t s = rand_sigma(gen, g);
                   size_t k = gen.next(g.invariants().size());
                   const SuperPoly& f = g.invariants()[k];
                   return g.act(s, f) == f;
                 }});
  ids.push_back({"group-action-compose", false,
                 [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
                   SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
                   size_t s = rand_sigma(gen, g);
                   size_t t = rand_sigma(gen, g);
                   CycMatrix prod = g.element(s) * g.element(t);
                   return act(prod, f) == g.act(s, g.act(t, f));
                 }});
  ids.push_back(
      {"equivariance-dot", true,
       [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         size_t s = rand_sigma(gen, g);
         return g.act(s, dot(f, h)) == dot(g.act(s, f), g.act(s, h));
       }});
  ids.push_back(
      {"equivariance-odot", true,
       [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly f = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Psi, 3, 3);
         size_t s = rand_sigma(gen, g);
         return g.act(s, odot(f, h)) == odot(g.act(s, f), g.act(s, h));
       }});
  ids.push_back(
      {"unitary-conj-x", true,
       [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         size_t s = rand_sigma(gen, g);
         int i = 1 + static_cast<int>(gen.next(g.vars()));
         SuperPoly inner = act_with_inverse(g.element_inverse(s),
                                            g.element(s), h);
         SuperPoly lhs = g.act(s, partial_x(i, inner));
         SuperPoly xi = SuperPoly::variable(g.vars(), Flavor::Theta, i);
         return lhs == dot(g.act(s, xi), h);
       }});
  ids.push_back(
      {"unitary-conj-theta", true,
       [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Theta, 3, 3);
         size_t s = rand_sigma(gen, g);
         int i = 1 + static_cast<int>(gen.next(g.vars()));
         SuperPoly inner = act_with_inverse(g.element_inverse(s),
                                            g.element(s), h);
         SuperPoly lhs = g.act(s, partial_theta(i, inner));
         SuperPoly ti = SuperPoly::exterior(g.vars(), Flavor::Theta, i);
         return lhs == dot(g.act(s, ti), h);
       }});
  ids.push_back(
      {"unitary-conj-psi", true,
       [rand_sigma](SuperPolyGen& gen, const ReflectionGroup& g) {
         SuperPoly h = gen.random_poly(g.vars(), Flavor::Psi, 3, 3);
         size_t s = rand_sigma(gen, g);
         int i = 1 + static_cast<int>(gen.next(g.vars()));
         SuperPoly inner = act_with_inverse(g.element_inverse(s),
                                            g.element(s), h);
         SuperPoly lhs = g.act(s, mult_theta(i, inner));
         SuperPoly ti = SuperPoly::exterior(g.vars(), Flavor::Theta, i);
         return lhs == odot(g.act(s, ti), h);
       }});
  return ids;
}

}  // namespace

VerificationReport property_suite(const ReflectionGroup& g, uint64_t seed,
                                  int iterations) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = "property-suite";
  report.group_label = g.label();
  report.qmax = 4;
  report.tmax = g.vars();
  report.seed = seed;
  report.iterations = iterations;
  for (const Identity& identity : identity_list()) {
    if (identity.needs_unitary && !g.unitary()) {
      report.evidence.push_back({identity.name,
                                 std::to_string(iterations) + " pass",
                                 "skipped (group not unitary)", true});
      continue;
    }
    uint64_t name_hash = 1469598103934665603ull;  // FNV-1a, fixed across runs
    for (char c : identity.name) {
      name_hash ^= static_cast<unsigned char>(c);
      name_hash *= 1099511628211ull;
    }
    SuperPolyGen gen(seed ^ name_hash);
    int pass = 0;
    for (int k = 0; k < iterations; ++k)
      if (identity.check(gen, g)) ++pass;
    report.add_row(identity.name, std::to_string(iterations) + " pass",
                   std::to_string(pass) + " pass");
  }
  report.finalize();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

VerificationReport verify(const std::string& theorem_id,
                          const ReflectionGroup& g, int qmax, int tmax,
                          uint64_t seed, int iterations) {
  if (theorem_id == "property-suite")
    return property_suite(g, seed, iterations);
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = theorem_id;
  report.group_label = g.label();
  report.qmax = qmax;
  report.tmax = (tmax < 0) ? g.vars() : tmax;
  report.seed = seed;
  if (theorem_id == "inv-upstairs-hilb") {
    verify_inv_upstairs_hilb(report, g);
  } else if (theorem_id == "alt-hilb") {
    verify_alt_hilb(report, g);
  } else if (theorem_id == "alt-upstairs-basis") {
    verify_alt_upstairs_basis(report, g);
  } else if (theorem_id == "alt-harmonics") {
    verify_alt_harmonics(report, g);
  } else if (theorem_id == "alt-harmonics-hilb") {
    verify_alt_harmonics_hilb(report, g);
  } else if (theorem_id == "wallach") {
    verify_wallach(report, g);
  } else if (theorem_id == "table1-orbits") {
    verify_table1_orbits(report, g);
  } else if (theorem_id == "schur-orthogonality") {
    verify_schur_orthogonality(report, g);
  } else {
    std::string valid;
    for (const std::string& id : theorem_ids()) valid += " " + id;
    throw AlgebraError("unknown theorem '" + theorem_id + "'; valid:" + valid);
  }
  report.finalize();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace superalg
