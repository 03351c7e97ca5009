#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nqr/error.hpp"
#include "nqr/necklace.hpp"
#include "nqr/parse.hpp"
#include "nqr/quiver.hpp"
#include "nqr/schedler.hpp"
#include "nqr/trace.hpp"
#include "nqr/verify.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kDimension = 4,
  kResource = 5,
};

struct Options {
  std::string command;
  std::vector<std::string> args;
  std::string quiver = "jordan";
  std::optional<std::string> dim;
  int maxdeg = 4;
  int hbar_truncation = 4;
  std::uint64_t seed = 0;
  std::string report;
  std::string output;
  std::vector<std::string> faces;
  bool timings = false;
  bool calibrate = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const nqr::Quiver> load_quiver(const std::string& source) {
  auto q = nqr::builtin_quiver(source);
  nqr::Quiver base = q ? *q : nqr::load_quiver_file(source);
  return std::make_shared<const nqr::Quiver>(base.is_doubled() ? base : base.doubled());
}

nqr::DimVector require_dim(const Options& o, const nqr::Quiver& q) {
  if (!o.dim) throw UsageError(fmt::format("'{}' needs --dim", o.command));
  nqr::DimVector d = nqr::DimVector::parse(*o.dim);
  nqr::check_dimension(q, d);
  return d;
}

void require_args(const Options& o, std::size_t n) {
  if (o.args.size() != n)
    throw UsageError(fmt::format("'{}' takes {} expression argument{}, got {}", o.command, n, n == 1 ? "" : "s",
                                 o.args.size()));
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

int run(const Options& o) {
  auto q = load_quiver(o.quiver);
  const nqr::SkeinConvention convention;
  if (o.command == "bracket") {
    require_args(o, 2);
    auto x = nqr::parse_necklace_sum(o.args[0], *q);
    auto y = nqr::parse_necklace_sum(o.args[1], *q);
    emit(o, nqr::to_string(*q, nqr::necklace_bracket(*q, x, y)) + "\n");
    return kOk;
  }
  if (o.command == "star" || o.command == "commutator") {
    require_args(o, 2);
    nqr::SchedlerAlgebra alg(q, convention);
    auto x = alg.normal_form(nqr::parse_height_sum(o.args[0], *q));
    auto y = alg.normal_form(nqr::parse_height_sum(o.args[1], *q));
    auto r = o.command == "star" ? alg.star(x, y) : alg.commutator(x, y);
    emit(o, nqr::to_string(*q, r) + "\n");
    return kOk;
  }
  if (o.command == "trace") {
    require_args(o, 1);
    nqr::TraceContext ctx(q, require_dim(o, *q), convention);
    auto x = nqr::parse_necklace_sum(o.args[0], *q);
    emit(o, nqr::to_string(ctx.coords, nqr::classical_trace(ctx, x)) + "\n");
    return kOk;
  }
  if (o.command == "qtrace") {
    require_args(o, 1);
    nqr::TraceContext ctx(q, require_dim(o, *q), convention);
    auto x = nqr::parse_height_sum(o.args[0], *q);
    emit(o, nqr::to_string(ctx.coords, nqr::quantum_trace(ctx, x)) + "\n");
    return kOk;
  }
  if (o.command == "reduce-classical") {
    require_args(o, 1);
    auto x = nqr::parse_necklace_sum(o.args[0], *q);
    auto span = nqr::cyclified_ideal_span(*q, nqr::moment(*q), o.maxdeg);
    emit(o, nqr::to_string(*q, nqr::reduce_classical(*q, x, span, o.maxdeg)) + "\n");
    return kOk;
  }
  if (o.command == "calibrate") {
    require_args(o, 0);
    auto r = nqr::calibrate(q, require_dim(o, *q));
    emit(o, r.evidence_dump() + "selected " + r.selected.str() + "\n");
    return kOk;
  }
  if (o.command == "verify") {
    require_args(o, 0);
    auto d = require_dim(o, *q);
    nqr::SkeinConvention c = o.calibrate ? nqr::calibrate(q, d).selected : convention;
    std::vector<nqr::Face> faces;
    for (const auto& f : o.faces) {
      auto face = nqr::parse_face(f);
      if (!face) throw UsageError("unknown face " + f);
      faces.push_back(*face);
    }
    if (faces.empty()) faces = nqr::all_faces();
    nqr::VerifyOptions vo;
    vo.maxdeg = o.maxdeg;
    vo.hbar_truncation = o.hbar_truncation;
    vo.seed = o.seed;
    auto report = nqr::verify_all(q, d, c, vo, faces);
    std::string json = report.to_json(o.timings);
    if (!o.report.empty()) {
      std::ofstream out(o.report);
      if (!out) throw UsageError("cannot write " + o.report);
      out << json;
    }
    emit(o, report.summary());
    return report.all_passed() ? kOk : kVerificationFailed;
  }
  throw UsageError("unknown command " + o.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Necklace quantization and reduction toolkit"};
  Options o;
  app.add_option("command", o.command, "bracket | star | commutator | trace | qtrace | reduce-classical | calibrate | verify")
      ->required()
      ->check(CLI::IsMember({"bracket", "star", "commutator", "trace", "qtrace", "reduce-classical", "calibrate",
                             "verify"}));
  app.add_option("args", o.args, "element expressions; quiver=<name|file> is also accepted here");
  app.add_option("-q,--quiver", o.quiver, "built-in quiver (jordan, a2) or quiver file")->capture_default_str();
  app.add_option("-d,--dim", o.dim, "dimension vector, e.g. 2 or 1,1");
  app.add_option("-m,--maxdeg", o.maxdeg, "degree truncation")->capture_default_str()->check(CLI::Range(2, 6));
  app.add_option("--hbar-truncation", o.hbar_truncation, "hbar-degree truncation for span computations")
      ->capture_default_str()
      ->check(CLI::Range(0, 8));
  app.add_option("-s,--seed", o.seed, "seed for randomized case selection")->capture_default_str();
  app.add_option("-r,--report", o.report, "write the verification report as JSON");
  app.add_option("-o,--output", o.output, "write the result to a file instead of stdout");
  app.add_option("-f,--face", o.faces, "restrict verify to faces (TOP, BOTTOM, BACK, FRONT, LEFT, RIGHT)");
  app.add_flag("--timings", o.timings, "include wall-clock seconds in the JSON report");
  app.add_flag("--calibrate", o.calibrate, "calibrate on the given quiver and dimension before verifying");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::vector<std::string> rest;
  for (auto& a : o.args) {
    if (a.rfind("quiver=", 0) == 0)
      o.quiver = a.substr(7);
    else
      rest.push_back(std::move(a));
  }
  o.args = std::move(rest);

  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nqr::CalibrationError& e) {
    std::cerr << "calibration failed: " << e.what() << "\n" << e.evidence();
    return kVerificationFailed;
  } catch (const nqr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nqr::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const nqr::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const nqr::DegreeOverflow& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const nqr::ArithmeticOverflow& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const nqr::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  }
}
