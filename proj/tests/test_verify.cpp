#include <doctest.h>

#include <json.hpp>
#include <set>

#include "helpers.hpp"
#include "nqr/error.hpp"
#include "nqr/verify.hpp"

using namespace nqr;
using testing::doubled;

TEST_CASE("calibration selects a unique convention on the Jordan quiver") {
  auto q = doubled("jordan");
  auto r = calibrate(q, DimVector({2}));
  CHECK(r.selected == SkeinConvention{});
  CHECK(r.evidence.size() == 8);
  int admissible = 0;
  for (const auto& e : r.evidence) {
    admissible += e.admissible();
    if (e.convention.inter_hbar_power == 0 && e.convention.order == OperatorOrder::LowerLeft) {
      CHECK_FALSE(e.divisibility.passed);
      CHECK(e.divisibility.witness.find("(cyc(a), cyc(a*))") != std::string::npos);
    }
  }
  CHECK(admissible == 1);
  CHECK(calibrate(q, DimVector({2})).selected == r.selected);
  CHECK(calibrate(q, DimVector({2})).evidence_dump() == r.evidence_dump());
}

TEST_CASE("calibration fails loudly when the evidence is ambiguous") {
  auto q = doubled("a2");
  try {
    calibrate(q, DimVector({1, 1}));
    FAIL("expected a calibration error");
  } catch (const CalibrationError& e) {
    CHECK(std::string(e.what()).find("2 admissible") != std::string::npos);
    CHECK(e.evidence().find("ADMISSIBLE") != std::string::npos);
  }
  CHECK_THROWS_AS(calibrate(doubled("jordan"), DimVector({3})), ResourceLimit);
}

TEST_CASE("skein annihilation under the calibrated convention") {
  for (auto [name, dim] : {std::pair{"jordan", "2"}, std::pair{"a2", "1,1"}}) {
    auto q = doubled(name);
    SchedlerAlgebra alg(q, SkeinConvention{});
    TraceContext ctx(q, DimVector::parse(dim), SkeinConvention{});
    auto r = check_skein_annihilation(alg, ctx, 5, false);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("letter monomials enumerate every interleaving") {
  auto q = doubled("jordan");
  // two letters: one or two components, four arrow choices each, and the
  // two single-component orders coincide after canonicalization
  auto two = letter_monomials(*q, 2);
  std::set<HeightMonomial> distinct(two.begin(), two.end());
  CHECK(distinct.size() == 4 + 4);
}

TEST_CASE("all faces pass on the test quivers") {
  for (auto [name, dim] : {std::pair{"jordan", "2"}, std::pair{"a2", "1,1"}}) {
    auto r = verify_all(doubled(name), DimVector::parse(dim), SkeinConvention{}, VerifyOptions{});
    CHECK(r.faces.size() == 6);
    for (const auto& f : r.faces) {
      INFO(f.id << ": " << f.witness);
      CHECK(f.passed);
      CHECK(f.cases > 0);
      CHECK(f.surrogate == (f.id == "RIGHT"));
    }
    CHECK(r.all_passed());
  }
}

TEST_CASE("a corrupted character is detected by the TOP face") {
  auto q = doubled("jordan");
  Verifier v(q, DimVector({1}), SkeinConvention{}, VerifyOptions{});
  auto chi = chi0(v.context().coords) + trace_character(v.context().coords, 1);
  auto bad = v.run_top(chi);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.find("residual") != std::string::npos);
  CHECK(v.run_top(chi0(v.context().coords)).passed);
}

TEST_CASE("a rejected convention fails the quantization faces") {
  auto q = doubled("jordan");
  for (auto [inter, sign] : {std::pair{1, 1}, std::pair{0, -1}, std::pair{0, 1}}) {
    SkeinConvention wrong;
    wrong.inter_hbar_power = inter;
    wrong.sign = sign;
    Verifier v(q, DimVector({2}), wrong, VerifyOptions{});
    CHECK_FALSE(v.run(Face::Back).passed);
    CHECK_FALSE(v.run(Face::Front).passed);
  }
}

TEST_CASE("reports are reproducible and have a stable layout") {
  auto q = doubled("a2");
  VerifyOptions o;
  o.seed = 42;
  auto a = verify_all(q, DimVector({1, 1}), SkeinConvention{}, o);
  auto b = verify_all(q, DimVector({1, 1}), SkeinConvention{}, o);
  CHECK(a.to_json() == b.to_json());
  auto j = nlohmann::ordered_json::parse(a.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "quiver", "dim", "maxdeg", "seed", "convention", "faces"});
  CHECK(j["faces"].size() == 6);
  CHECK(j["faces"][5]["surrogate"] == true);
  CHECK_FALSE(j["faces"][0].contains("seconds"));
  CHECK(nlohmann::json::parse(a.to_json(true))["faces"][0].contains("seconds"));
  CHECK(a.summary().find("all faces pass") != std::string::npos);
}

TEST_CASE("face identifiers") {
  for (Face f : all_faces()) {
    CHECK(parse_face(face_id(f)) == f);
    CHECK_FALSE(face_statement(f).empty());
  }
  CHECK(parse_face("left") == Face::Left);
  CHECK_FALSE(parse_face("SIDEWAYS"));
}

TEST_CASE("verifier limits") {
  auto q = doubled("jordan");
  VerifyOptions o;
  o.maxdeg = 1;
  CHECK_THROWS_AS(Verifier(q, DimVector({2}), SkeinConvention{}, o), DegreeOverflow);
  o.maxdeg = 9;
  CHECK_THROWS_AS(Verifier(q, DimVector({2}), SkeinConvention{}, o), ResourceLimit);
}
