#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "superalg/verify.hpp"

namespace {

using namespace superalg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

ReflectionGroup group_or_die(const std::string& id) {
  try {
    return builtin_group(id);
  } catch (const AlgebraError& e) {
    if (std::string(e.what()).find("unknown group id") == std::string::npos)
      throw;  // e.g. the order cap: keep the precise message
    std::ostringstream os;
    os << "unknown group '" << id << "'; built-in ids:";
    for (const std::string& g : builtin_catalog()) os << " " << g;
    os << "\n(parameterized ids like S5, B4, I2-7, G-4-1-2 also work)";
    throw CLI::ValidationError("--group", os.str());
  }
}

Character parse_character(const std::string& s) {
  if (s == "trivial") return Character::Trivial;
  if (s == "det") return Character::Det;
  if (s == "det-inv") return Character::DetInv;
  throw CLI::ValidationError("--char", "expected trivial, det or det-inv");
}

int run_groups_list() {
  for (const std::string& id : builtin_catalog()) {
    ReflectionGroup g = builtin_group(id);
    std::cout << id << "  n=" << g.vars() << "  order=" << g.order()
              << "  conductor=" << g.conductor() << "  degrees=";
    for (size_t k = 0; k < g.degrees().size(); ++k) {
      if (k) std::cout << ",";
      std::cout << g.degrees()[k];
    }
    std::cout << (g.real_orthogonal()
                      ? "  [orthogonal]"
                      : (g.unitary() ? "  [unitary]" : "  [non-unitary]"))
              << "\n";
  }
  return kExitPass;
}

int run_groups_check(const std::string& path) {
  ReflectionGroup g = load_group_file(path);
  std::cout << "ok: " << g.label() << "  n=" << g.vars()
            << "  order=" << g.order() << "  degrees=";
  for (size_t k = 0; k < g.degrees().size(); ++k) {
    if (k) std::cout << ",";
    std::cout << g.degrees()[k];
  }
  std::cout << "\n";
  return kExitPass;
}

int run_molien(const std::string& group_id, const std::string& chi,
               const std::string& sym, const std::string& ext, int qmax,
               int tmax, const std::string& format) {
  ReflectionGroup g = group_or_die(group_id);
  if (tmax < 0) tmax = g.vars();
  SymSpace s = (sym == "V") ? SymSpace::V : SymSpace::Vdual;
  ExtSpace e = (ext == "V") ? ExtSpace::V : ExtSpace::Vdual;
  BiSeries series = molien_series(g, parse_character(chi), s, e, qmax, tmax);
  if (format == "csv")
    std::cout << series.to_csv();
  else if (format == "json")
    std::cout << series.to_json() << "\n";
  else
    std::cout << series.to_text();
  return kExitPass;
}

int run_verify(const std::string& theorem, const std::string& group_id,
               int qmax, uint64_t seed, int iterations,
               const std::string& format) {
  bool known = false;
  for (const std::string& id : theorem_ids()) known |= (id == theorem);
  if (!known) {
    std::ostringstream os;
    os << "unknown theorem '" << theorem << "'; valid ids:";
    for (const std::string& id : theorem_ids()) os << " " << id;
    throw CLI::ValidationError("--theorem", os.str());
  }
  ReflectionGroup g = group_or_die(group_id);
  VerificationReport report = verify(theorem, g, qmax, -1, seed, iterations);
  if (format == "json")
    std::cout << report.to_json() << "\n";
  else if (format == "csv")
    std::cout << report.to_csv();
  else
    std::cout << report.to_text();
  std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
  switch (report.status) {
    case VerifyStatus::Pass: return kExitPass;
    case VerifyStatus::Fail: return kExitFail;
    case VerifyStatus::NotApplicable: return kExitUsage;
  }
  return kExitUsage;
}

Bidegree parse_bidegree(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--bidegree", "expected i,j");
  return {std::stoi(text.substr(0, comma)),
          std::stoi(text.substr(comma + 1))};
}

int run_basis(const std::string& group_id, const std::string& which,
              const std::string& bidegree_text) {
  ReflectionGroup g = group_or_die(group_id);
  if (which == "harmonics-det") {
    std::vector<SuperPoly> basis = harmonics_det_basis(g);
    for (const SuperPoly& h : basis) {
      Bidegree b = h.terms().begin()->first.bidegree();
      if (!bidegree_text.empty() && !(b == parse_bidegree(bidegree_text)))
        continue;
      std::cout << "(" << b.qdeg << "," << b.tdeg << ")  " << h.to_string()
                << "\n";
    }
    return kExitPass;
  }
  if (which == "alt-upstairs") {
    if (bidegree_text.empty())
      throw CLI::ValidationError("--bidegree",
                                 "alt-upstairs needs --bidegree i,j");
    Bidegree b = parse_bidegree(bidegree_text);
    for (const SuperPoly& v : alt_upstairs_vectors(g, b))
      std::cout << v.to_string() << "\n";
    return kExitPass;
  }
  throw CLI::ValidationError("--which",
                             "expected harmonics-det or alt-upstairs");
}

int run_vandermonde(const std::string& group_id) {
  ReflectionGroup g = group_or_die(group_id);
  std::cout << vandermonde(g).to_string() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact super-polynomial algebra over reflection groups"};
  app.require_subcommand(1);

  auto* groups = app.add_subcommand("groups", "group catalog and validation");
  groups->require_subcommand(1);
  groups->add_subcommand("list", "list built-in groups");
  auto* check = groups->add_subcommand("check", "validate a group-spec file");
  std::string check_path;
  check->add_option("file", check_path, "group-spec JSON file")->required();

  auto* molien = app.add_subcommand("molien", "bigraded Molien series");
  std::string m_group, m_char = "trivial", m_sym = "V", m_ext = "Vdual";
  std::string m_format = "text";
  int m_qmax = 8, m_tmax = -1;
  molien->add_option("--group", m_group)->required();
  molien->add_option("--char", m_char)
      ->check(CLI::IsMember({"trivial", "det", "det-inv"}));
  molien->add_option("--sym", m_sym)->check(CLI::IsMember({"V", "Vdual"}));
  molien->add_option("--ext", m_ext)->check(CLI::IsMember({"V", "Vdual"}));
  molien->add_option("--qmax", m_qmax);
  molien->add_option("--tmax", m_tmax);
  molien->add_option("--format", m_format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem check");
  std::string v_theorem, v_group, v_format = "text";
  int v_qmax = 8, v_iterations = 100;
  uint64_t v_seed = 1;
  verify_cmd->add_option("--theorem", v_theorem)->required();
  verify_cmd->add_option("--group", v_group)->required();
  verify_cmd->add_option("--qmax", v_qmax);
  verify_cmd->add_option("--seed", v_seed);
  verify_cmd->add_option("--iterations", v_iterations);
  verify_cmd->add_option("--format", v_format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* basis = app.add_subcommand("basis", "emit explicit bases");
  std::string b_group, b_which = "harmonics-det", b_bidegree;
  basis->add_option("--group", b_group)->required();
  basis->add_option("--which", b_which)
      ->check(CLI::IsMember({"harmonics-det", "alt-upstairs"}));
  basis->add_option("--bidegree", b_bidegree, "i,j");

  auto* vand = app.add_subcommand("vandermonde", "print the Vandermonde");
  std::string d_group;
  vand->add_option("--group", d_group)->required();

  try {
    app.parse(argc, argv);
    if (groups->parsed()) {
      if (groups->get_subcommand("list")->parsed()) return run_groups_list();
      return run_groups_check(check_path);
    }
    if (molien->parsed())
      return run_molien(m_group, m_char, m_sym, m_ext, m_qmax, m_tmax,
                        m_format);
    if (verify_cmd->parsed())
      return run_verify(v_theorem, v_group, v_qmax, v_seed, v_iterations,
                        v_format);
    if (basis->parsed()) return run_basis(b_group, b_which, b_bidegree);
    if (vand->parsed()) return run_vandermonde(d_group);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
