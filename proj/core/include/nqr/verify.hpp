#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nqr/schedler.hpp"
#include "nqr/trace.hpp"
#include "nqr/weyl.hpp"

namespace nqr {

// the six faces of the quantization/reduction cube
enum class Face { Top, Bottom, Back, Front, Left, Right };

std::string_view face_id(Face f);
std::optional<Face> parse_face(std::string_view id);
std::string_view face_statement(Face f);
const std::vector<Face>& all_faces();

struct FaceRecord {
  std::string id;
  std::string statement;
  std::size_t cases = 0;
  bool passed = false;
  std::string witness;  // first counterexample, empty on success
  bool surrogate = false;
  double seconds = 0;
};

struct CheckResult {
  std::size_t cases = 0;
  bool passed = true;
  std::string witness;
  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

// all idempotent-free height monomials with exactly n letters
std::vector<HeightMonomial> letter_monomials(const Quiver& q, std::size_t n);

// Tr^q(X - X' - c X'') = 0 for every skein relation on monomials with
// 2..max_letters letters
CheckResult check_skein_annihilation(const SchedlerAlgebra& alg, const TraceContext& ctx,
                                     std::size_t max_letters, bool stop_at_first);

// phi(hbar^-1 Tr^q(x^*y^ - y^*x^)) = {Tr x, Tr y} for necklaces of degree
// 1..maxdeg; divisibility_only skips the comparison
CheckResult check_quantization(const SchedlerAlgebra& alg, const TraceContext& ctx, int maxdeg,
                               bool divisibility_only, bool stop_at_first);

struct SettingEvidence {
  SkeinConvention convention;
  CheckResult skein;
  CheckResult divisibility;
  CheckResult identity;
  bool admissible() const { return skein.passed && divisibility.passed && identity.passed; }
};

struct CalibrationOptions {
  std::size_t max_letters = 6;
  int pair_degree = 2;
};

struct CalibrationResult {
  SkeinConvention selected;
  std::vector<SettingEvidence> evidence;
  std::string evidence_dump() const;
};

// Evaluates every switch setting; throws CalibrationError unless exactly
// one setting passes all three checks.
CalibrationResult calibrate(std::shared_ptr<const Quiver> q, const DimVector& d,
                            const CalibrationOptions& opts = {});

struct VerifyOptions {
  int maxdeg = 4;
  int hbar_truncation = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 6;
};

class Verifier {
 public:
  Verifier(std::shared_ptr<const Quiver> q, DimVector d, SkeinConvention c, VerifyOptions o);

  FaceRecord run(Face f) const;
  // TOP face against an arbitrary character
  FaceRecord run_top(const Character& chi) const;

  const SchedlerAlgebra& algebra() const noexcept { return alg_; }
  const TraceContext& context() const noexcept { return ctx_; }

 private:
  FaceRecord run_bottom() const;
  FaceRecord run_back() const;
  FaceRecord run_front() const;
  FaceRecord run_left() const;
  FaceRecord run_right() const;

  std::shared_ptr<const Quiver> quiver_;
  SchedlerAlgebra alg_;
  TraceContext ctx_;
  VerifyOptions opts_;
};

struct VerificationReport {
  std::string quiver;
  DimVector dim;
  int maxdeg = 4;
  std::uint64_t seed = 0;
  SkeinConvention convention;
  std::vector<FaceRecord> faces;

  bool all_passed() const;
  // stable field order; timings only on request so reports stay reproducible
  std::string to_json(bool include_timings = false) const;
  std::string summary() const;
};

VerificationReport verify_all(std::shared_ptr<const Quiver> q, const DimVector& d,
                              const SkeinConvention& c, const VerifyOptions& o,
                              const std::vector<Face>& faces = all_faces());

}  // namespace nqr
