#ifndef SUPERALG_VERIFY_HPP
#define SUPERALG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superalg/isotypic.hpp"
#include "superalg/molien.hpp"

namespace superalg {

enum class VerifyStatus { Pass, Fail, NotApplicable };

const char* verify_status_name(VerifyStatus s);

struct EvidenceRow {
  std::string item;
  std::string expected;
  std::string computed;
  bool ok = true;
};

/// Structured pass/fail evidence for one theorem on one group. A report
/// passes exactly when every evidence row matches; elapsed time is kept
/// out of the serialized forms so output is byte-deterministic.
struct VerificationReport {
  std::string theorem_id;
  std::string group_label;
  int qmax = 0;
  int tmax = 0;
  uint64_t seed = 0;
  int iterations = 0;
  VerifyStatus status = VerifyStatus::Pass;
  std::string note;
  std::vector<EvidenceRow> evidence;
  double elapsed_seconds = 0.0;

  bool passed() const { return status == VerifyStatus::Pass; }
  void add_row(std::string item, std::string expected, std::string computed);
  void finalize();  // sets status from the evidence rows

  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
};

const std::vector<std::string>& theorem_ids();

/// Run one named theorem check. tmax < 0 means "use the group dimension".
/// Hypothesis violations yield status NotApplicable, not Fail.
VerificationReport verify(const std::string& theorem_id,
                          const ReflectionGroup& g, int qmax = 8,
                          int tmax = -1, uint64_t seed = 1,
                          int iterations = 100);

/// Seeded random instances of every operator identity; zero tolerance.
VerificationReport property_suite(const ReflectionGroup& g, uint64_t seed,
                                  int iterations);

/// Deterministic generator of bounded random super-polynomials: x-degree
/// at most 4, coefficients from a small integer pool.
class SuperPolyGen {
public:
  explicit SuperPolyGen(uint64_t seed) : engine_(seed) {}

  uint64_t next(uint64_t bound);  // uniform-ish in [0, bound)
  Rational coefficient();        // nonzero, from {-3..3}

  SuperPoly random_poly(int n, Flavor flavor, int max_xdeg, int max_terms);
  SuperPoly random_x_only(int n, int max_xdeg, int max_terms);
  SuperPoly random_pure_extdeg(int n, Flavor flavor, int extdeg, int max_xdeg,
                               int max_terms);
  SuperMonomial random_monomial(int n, int max_xdeg);

private:
  std::mt19937_64 engine_;
};

}  // namespace superalg

#endif
