// patchkit: evaluate, tessellate and certify parametric patches.
//
// Exit codes: 0 success, 2 input error, 3 domain error, 4 convergence failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patchkit/ipf.hpp"
#include "patchkit/mesh.hpp"
#include "patchkit/patch_file.hpp"
#include "patchkit/precision.hpp"

namespace {

using namespace patchkit;

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutsideDomain:
    case ErrorKind::NotInHull:
    case ErrorKind::AllZero:
    case ErrorKind::PoleAtArgument:
    case ErrorKind::NonPositiveArgument:
    case ErrorKind::SamplingFailure:
    case ErrorKind::TooFewSamples:
      return kExitDomain;
    case ErrorKind::NotConverged:
    case ErrorKind::NumericalUnderflow:
      return kExitConvergence;
    default:
      return kExitInput;
  }
}

std::string format_values(const std::vector<double>& values) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.15g", values[i] == 0.0 ? 0.0 : values[i]);
    if (i > 0) out += ' ';
    out += buf;
  }
  return out;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<Rational> out;
  std::string token;
  while (in >> token) out.push_back(parse_rational(token));
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty coordinate list");
  return out;
}

Point parse_point(const std::string& text, std::size_t dim) {
  std::vector<Rational> values = parse_list(text);
  if (values.size() != dim) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(dim) + " coordinates, got " +
                                             std::to_string(values.size()));
  }
  return to_double(values);
}

/// Loading failures are always input errors, whatever their kind.
PatchSpec load(const std::string& path) {
  try {
    return read_patch_file(path);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

int cmd_eval(const std::string& input, const std::string& at) {
  PatchSpec spec = load(input);
  Point x = parse_point(at, spec.dim());
  std::cout << format_values(eval_patch(spec, x)) << '\n';
  return 0;
}

int cmd_tessellate(const std::string& input, std::size_t grid, const std::string& out_path) {
  PatchSpec spec = load(input);
  Mesh mesh = tessellate(spec, grid);
  if (out_path.empty() || out_path == "-") {
    write_obj(mesh, std::cout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + out_path);
  write_obj(mesh, out);
  std::cerr << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces\n";
  return 0;
}

int cmd_ipf(const std::string& input, const std::string& at, double tol, std::size_t max_iter) {
  PatchSpec spec = load(input);
  Point x = parse_point(at, spec.dim());
  IpfSettings settings;
  settings.tol = tol;
  settings.max_iter = max_iter;
  LinearPrecisionSolver solver(spec.config(), spec.weights(), settings);
  IpfResult result = solver.solve(x);
  std::cout << format_values(result.p.coords()) << '\n';
  std::cout << "iterations " << result.iterations << '\n';
  return 0;
}

int cmd_check(const std::string& input, std::size_t samples, std::uint64_t seed) {
  PatchSpec spec = load(input);
  PrecisionReport report = check_linear_precision(spec, samples, kDefaultPassTol,
                                                  kDefaultFailTol, seed);
  std::cout << to_json(report) << '\n';
  return 0;
}

int cmd_lp1d(const std::string& input, const std::string& weights_text) {
  RationalLp1d result;
  if (!weights_text.empty()) {
    result = rational_lp_1d(WeightVector(parse_list(weights_text)));
  } else {
    PatchSpec spec = load(input);
    result = rational_lp_1d(spec.config(), spec.weights());
  }
  if (result.has_rational_lp) {
    std::cout << "true " << to_string(*result.alpha) << '\n';
  } else {
    std::cout << "false\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patchkit: parametric patches, linear precision and iterative proportional fitting"};
  app.require_subcommand(1);

  std::string input;
  std::string at;
  std::string out_path;
  std::string weights_text;
  std::size_t grid = 0;
  double tol = 1e-12;
  std::size_t max_iter = 100000;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate F(x) and print it");
  eval->add_option("--input", input, "PatchFile JSON")->required();
  eval->add_option("--at", at, "Parameter value, comma separated")->required();

  auto* tess = app.add_subcommand("tessellate", "Write an OBJ mesh of the patch");
  tess->add_option("--input", input, "PatchFile JSON")->required();
  tess->add_option("--grid", grid, "Grid points per axis (>= 2)")->required();
  tess->add_option("--out", out_path, "OBJ output path ('-' for stdout)");

  auto* ipf = app.add_subcommand("ipf", "Linear-precision blending values by IPF");
  ipf->add_option("--input", input, "PatchFile JSON")->required();
  ipf->add_option("--at", at, "Target point, comma separated")->required();
  ipf->add_option("--tol", tol, "Moment mismatch tolerance")->capture_default_str();
  ipf->add_option("--max-iter", max_iter, "Iteration budget")->capture_default_str();

  auto* check = app.add_subcommand("check", "Sample the tautological map and report");
  check->add_option("--input", input, "PatchFile JSON")->required();
  check->add_option("--samples", samples, "Number of samples")->capture_default_str();
  check->add_option("--seed", seed, "Sampling seed")->capture_default_str();

  auto* lp1d = app.add_subcommand("lp1d", "Exact rational linear precision test for d = 1");
  auto* lp1d_input = lp1d->add_option("--input", input, "PatchFile JSON (d = 1)");
  auto* lp1d_weights = lp1d->add_option("--weights", weights_text, "Weights w_0..w_n");
  lp1d_input->excludes(lp1d_weights);
  lp1d->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(input, at);
    if (*tess) {
      if (grid < 2) {
        std::cerr << "error: --grid must be at least 2\n";
        return kExitInput;
      }
      return cmd_tessellate(input, grid, out_path);
    }
    if (*ipf) return cmd_ipf(input, at, tol, max_iter);
    if (*check) return cmd_check(input, samples, seed);
    if (*lp1d) return cmd_lp1d(input, weights_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
