#include <doctest.h>

#include "superalg/verify.hpp"

using namespace superalg;

TEST_CASE("reports are deterministic given the same seed") {
  ReflectionGroup b2 = builtin_group("B2");
  VerificationReport a = property_suite(b2, 42, 5);
  VerificationReport b = property_suite(b2, 42, 5);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.passed());
  VerificationReport c = property_suite(b2, 43, 5);
  CHECK(c.passed());
}

TEST_CASE("zero iterations pass vacuously") {
  ReflectionGroup s2 = builtin_group("S2");
  VerificationReport r = property_suite(s2, 1, 0);
  CHECK(r.passed());
  for (const EvidenceRow& row : r.evidence) CHECK(row.ok);
}

TEST_CASE("property suite covers the identity list on a complex group") {
  ReflectionGroup g = builtin_group("G-3-1-1");
  VerificationReport r = property_suite(g, 7, 10);
  CHECK(r.passed());
  bool saw_leibniz = false, saw_conj = false;
  for (const EvidenceRow& row : r.evidence) {
    if (row.item == "leibniz") saw_leibniz = true;
    if (row.item == "unitary-conj-psi") saw_conj = true;
  }
  CHECK(saw_leibniz);
  CHECK(saw_conj);
}

TEST_CASE("non-unitary groups skip the unitary-only identities") {
  ReflectionGroup g = builtin_group("S3-standard");
  VerificationReport r = property_suite(g, 3, 5);
  CHECK(r.passed());
  bool skipped = false;
  for (const EvidenceRow& row : r.evidence)
    if (row.item == "equivariance-dot" &&
        row.computed.find("skipped") != std::string::npos)
      skipped = true;
  CHECK(skipped);
}

TEST_CASE("verify: named theorems on small groups") {
  ReflectionGroup b2 = builtin_group("B2");
  CHECK(verify("inv-upstairs-hilb", b2, 6).passed());
  CHECK(verify("alt-hilb", b2, 6).passed());
  CHECK(verify("alt-upstairs-basis", b2, 4).passed());
  CHECK(verify("alt-harmonics", b2).passed());
  CHECK(verify("alt-harmonics-hilb", b2, 4).passed());
  CHECK(verify("table1-orbits", b2, 6).passed());

  ReflectionGroup s3std = builtin_group("S3-standard");
  VerificationReport wallach = verify("wallach", s3std, 4);
  CHECK(wallach.passed());

  ReflectionGroup s3 = builtin_group("S3");
  CHECK(verify("schur-orthogonality", s3, 4).passed());

  // hypothesis filtering is a first-class status
  VerificationReport na = verify("alt-harmonics", s3);
  CHECK(na.status == VerifyStatus::NotApplicable);
  CHECK_FALSE(na.note.empty());
  VerificationReport na2 = verify("wallach", b2);
  CHECK(na2.status == VerifyStatus::NotApplicable);

  CHECK_THROWS_AS(verify("no-such-theorem", b2), AlgebraError);
}

TEST_CASE("report serialization shapes") {
  ReflectionGroup s2 = builtin_group("S2");
  VerificationReport r = verify("inv-upstairs-hilb", s2, 4);
  std::string text = r.to_text();
  CHECK(text.find("status:   pass") != std::string::npos);
  std::string json = r.to_json();
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  // elapsed time never leaks into the serialized forms
  CHECK(json.find("elapsed") == std::string::npos);
  std::string csv = r.to_csv();
  CHECK(csv.rfind("item,expected,computed,ok", 0) == 0);
}

TEST_CASE("frozen leibniz instance appears in the harness generator") {
  // f = t1 t2 (r = 2), g = t3, i = 3: both sides equal t1 t2
  SuperPoly f = SuperPoly::exterior(3, Flavor::Theta, 1) *
                SuperPoly::exterior(3, Flavor::Theta, 2);
  SuperPoly g = SuperPoly::exterior(3, Flavor::Theta, 3);
  CHECK(partial_theta(3, f * g) == f);
  CHECK(partial_theta(3, f) * g + f * partial_theta(3, g) == f);
}
