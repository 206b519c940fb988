// Command line driver: exact identity verification, descent decomposition,
// Maxwell sector reduction, and the staggered-grid simulator.
//
// Exit codes: 0 success, 1 identity failure, 2 bad arguments or input,
// 3 descent condition violated.

#include <descent/fdtd/grid.hpp>
#include <descent/json_io.hpp>
#include <descent/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace descent;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDescentViolation = 3;

int default_trials() {
  if (const char* env = std::getenv("DESCENT_TRIALS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 200;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run_verify(const VerifyOptions& opts, const std::string& out_path) {
  const auto results = run_identity_suites(opts);
  std::ostringstream out;
  out << "seed=" << opts.seed << " trials=" << opts.trials << " dims=";
  for (std::size_t i = 0; i < opts.dims.size(); ++i) out << (i ? "," : "") << opts.dims[i];
  out << "\n";
  int failures = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " " << r.id << ": " << r.description;
    if (!r.passed) {
      out << " [" << r.detail << "]";
      ++failures;
    }
    out << "\n";
  }
  out << (failures == 0 ? "RESULT PASS" : "RESULT FAIL") << " (" << results.size() << " checks, "
      << failures << " failures)\n";
  write_output(out_path, out.str());
  return failures == 0 ? kExitOk : kExitIdentityFailure;
}

int run_decompose(const std::string& in_path, const std::string& mode, const std::string& axis,
                  const std::string& out_path) {
  const nlohmann::json input = load_json(in_path);
  Form w(4);
  int dim = 4;
  if (json_is_emconfig(input)) {
    w = assemble_faraday(emconfig_from_json(input));
  } else {
    w = form_from_json(input);
    dim = w.dimension();
  }

  nlohmann::json out;
  if (mode == "single") {
    const int ax = axis == "y" ? 2 : 3;
    if (dim != 4) throw std::invalid_argument("single decomposition expects dimension 4 input");
    const DescentPair pair = DescentPair::coordinate(4, ax);
    if (!is_invariant(pair.direction(), w)) {
      throw descent_violation_error({{"form", ax}});
    }
    out = single_decomposition_to_json(decompose_single(pair, w), std::string(1, axis_letter(ax)));
  } else {
    if (dim != 4) throw std::invalid_argument("double decomposition expects dimension 4 input");
    const DescentPair py = DescentPair::coordinate(4, 2);
    const DescentPair pz = DescentPair::coordinate(4, 3);
    std::vector<DescentViolation> bad;
    if (!is_invariant(py.direction(), w)) bad.push_back({"form", 2});
    if (!is_invariant(pz.direction(), w)) bad.push_back({"form", 3});
    if (!bad.empty()) throw descent_violation_error(std::move(bad));
    out = double_decomposition_to_json(decompose_double(py, pz, w));
  }
  write_output(out_path, out.dump(2) + "\n");
  return kExitOk;
}

int run_reduce(const std::string& in_path, const std::string& mode, const std::string& format,
               const std::string& out_path) {
  const nlohmann::json input = load_json(in_path);
  if (!json_is_emconfig(input)) throw std::invalid_argument("reduce expects an EMConfig input");
  const EMConfig c = emconfig_from_json(input);
  const Metric g = Metric::lorentzian(4);
  const DescentPair py = DescentPair::coordinate(4, 2);
  const DescentPair pz = DescentPair::coordinate(4, 3);

  SectorReport rep;
  if (mode == "single") {
    rep = split_single(c, g, pz);
    rep.crosscheck = componentwise_crosscheck(c, g, SplitMode::single);
  } else {
    rep = split_double(c, g, py, pz);
    rep.crosscheck = componentwise_crosscheck(c, g, SplitMode::dbl);
  }
  if (format == "text") {
    write_output(out_path, report_to_text(rep));
  } else {
    write_output(out_path, report_to_json(rep, mode).dump(2) + "\n");
  }
  return kExitOk;
}

int run_simulate(const fdtd::GridSpec& spec, long steps, const std::string& init_path,
                 const std::string& out_path) {
  EMConfig config;  // all zero without --init
  if (!init_path.empty()) config = emconfig_from_json(load_json(init_path));
  fdtd::Grid grid = fdtd::Grid::sample(config, spec);

  // The intended pure sector is fixed from the initial energies; the leakage
  // column reports the complementary share of the total.
  const fdtd::SectorEnergies e0 = grid.energies();
  const fdtd::Sector intended = e0.bbe > e0.eeb ? fdtd::Sector::bbe : fdtd::Sector::eeb;

  std::ostringstream out;
  out << "step,time,eeb_energy,bbe_energy,total,divB_max,leakage\n";
  double max_leak = 0.0;
  auto emit = [&](long s) {
    const auto e = grid.energies();
    const double leak_abs = grid.leakage(intended);
    const double leak = e.total > 0.0 ? leak_abs / e.total : 0.0;
    if (leak > max_leak) max_leak = leak;
    out << s << "," << format_double(grid.time()) << "," << format_double(e.eeb) << ","
        << format_double(e.bbe) << "," << format_double(e.total) << ","
        << format_double(grid.divb_max()) << "," << format_double(leak) << "\n";
  };
  emit(0);
  for (long s = 1; s <= steps; ++s) {
    grid.step(1);
    emit(s);
  }
  out << "# max_leakage=" << format_double(max_leak) << "\n";
  write_output(out_path, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior calculus engine with descent reduction of Maxwell's equations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the exact identity suites");
  VerifyOptions vopts;
  vopts.trials = default_trials();
  std::string verify_out;
  verify->add_option("--dims", vopts.dims, "dimensions to sweep")->delimiter(',');
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--trials", vopts.trials, "trials per check");
  verify->add_option("--output", verify_out, "write the report to a file");

  auto* decompose = app.add_subcommand("decompose", "split a form or field configuration");
  std::string dec_input, dec_mode = "single", dec_axis = "z", dec_out;
  decompose->add_option("--input", dec_input, "input JSON file")->required();
  decompose->add_option("--mode", dec_mode, "single or double")
      ->check(CLI::IsMember({"single", "double"}));
  decompose->add_option("--axis", dec_axis, "descent axis for single mode")
      ->check(CLI::IsMember({"z", "y"}));
  decompose->add_option("--output", dec_out, "output file");

  auto* reduce = app.add_subcommand("reduce", "sector residual report for a field configuration");
  std::string red_input, red_mode = "single", red_format = "json", red_out;
  reduce->add_option("--input", red_input, "input JSON file")->required();
  reduce->add_option("--mode", red_mode, "single or double")
      ->check(CLI::IsMember({"single", "double"}));
  reduce->add_option("--format", red_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  reduce->add_option("--output", red_out, "output file");

  auto* simulate = app.add_subcommand("simulate", "run the staggered-grid evolver");
  fdtd::GridSpec spec;
  long steps = 0;
  std::string sim_init, sim_out;
  simulate->add_option("--nx", spec.nx, "cells along x")->required();
  simulate->add_option("--ny", spec.ny, "cells along y")->required();
  simulate->add_option("--nz", spec.nz, "cells along z")->required();
  simulate->add_option("--dx", spec.dx, "grid spacing")->required();
  simulate->add_option("--courant", spec.courant, "fraction of the stability limit");
  simulate->add_option("--steps", steps, "number of leapfrog steps")->required();
  simulate->add_option("--init", sim_init, "EMConfig JSON with initial fields");
  simulate->add_option("--output", sim_out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*verify) return run_verify(vopts, verify_out);
    if (*decompose) return run_decompose(dec_input, dec_mode, dec_axis, dec_out);
    if (*reduce) return run_reduce(red_input, red_mode, red_format, red_out);
    if (*simulate) return run_simulate(spec, steps, sim_init, sim_out);
  } catch (const descent::descent_violation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDescentViolation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
