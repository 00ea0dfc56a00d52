#include "naimark/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "naimark/error.hpp"
#include "naimark/fiducials.hpp"
#include "naimark/matrix_io.hpp"
#include "naimark/naimark_bell.hpp"
#include "naimark/naimark_block.hpp"
#include "naimark/qubit_decomp.hpp"
#include "naimark/simulate.hpp"

namespace naimark::cli {

namespace {

struct FiducialSource {
  std::string catalog;
  std::string ket_json;
  std::string ket_file;
  std::string m_file;
  bool complete = false;
};

struct ResolvedFiducial {
  Fiducial fiducial;
  ComplexMatrix m;
  std::string m_source;
};

void add_fiducial_options(CLI::App& cmd, FiducialSource& src) {
  auto* cat = cmd.add_option("--catalog", src.catalog, "Catalog fiducial label");
  auto* ket = cmd.add_option("--ket", src.ket_json, "Inline fiducial ket as JSON");
  auto* file = cmd.add_option("--ket-file", src.ket_file, "Fiducial ket JSON file");
  auto* mfile = cmd.add_option("--m-file", src.m_file,
                               "Unitary M matrix file; its first row defines the fiducial");
  cat->excludes(ket)->excludes(file)->excludes(mfile);
  ket->excludes(file)->excludes(mfile);
  file->excludes(mfile);
  cmd.add_flag("--complete", src.complete,
               "Use the deterministic completion of M even when a catalog M exists");
}

ResolvedFiducial resolve(const FiducialSource& src, double tol) {
  if (!src.m_file.empty()) {
    ComplexMatrix m = read_matrix_file(src.m_file);
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidInput, "M must be square");
    Fiducial phi = Fiducial::from_ket(m.row(0).adjoint(), "m-file-row-0", tol);
    return {std::move(phi), std::move(m), "file"};
  }
  std::optional<Fiducial> phi;
  if (!src.catalog.empty()) {
    phi = builtin_fiducial(src.catalog);
  } else if (!src.ket_json.empty()) {
    Json j;
    try {
      j = Json::parse(src.ket_json);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("--ket: ") + e.what());
    }
    phi = Fiducial::from_ket(ket_from_json(j), "inline", tol);
  } else if (!src.ket_file.empty()) {
    phi = Fiducial::from_ket(ket_from_json(read_json_file(src.ket_file)), "file", tol);
  } else {
    throw Error(ErrorCode::InvalidInput,
                "one of --catalog, --ket, --ket-file, --m-file is required");
  }
  if (!src.complete) {
    if (auto label = catalog_M_for_fiducial(phi->label())) {
      return {*phi, catalog_M(*label), "catalog:" + *label};
    }
  }
  ComplexMatrix m = complete_unitary_M(*phi);
  return {*phi, std::move(m), "completion"};
}

Construction parse_construction(const std::string& name) {
  if (name == "block") return Construction::Block;
  if (name == "bell") return Construction::Bell;
  if (name == "clock") return Construction::Clock;
  throw Error(ErrorCode::InvalidInput, "unknown construction '" + name + "'");
}

NaimarkExtension construct(const ComplexMatrix& m, Construction c, double tol) {
  switch (c) {
    case Construction::Block:
      return assemble_U(m, tol);
    case Construction::Bell:
      return build_bell_naimark(m, tol);
    case Construction::Clock: {
      NaimarkExtension ext = build_bell_naimark(m, tol);
      ext.u = clock_decomposition(m);
      ext.provenance = Construction::Clock;
      return ext;
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown construction");
}

Ket parse_state(const std::string& inline_json, const std::string& file, double tol) {
  Json j;
  if (!file.empty()) {
    j = read_json_file(file);
  } else {
    try {
      j = Json::parse(inline_json);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("--state: ") + e.what());
    }
  }
  Ket psi = ket_from_json(j);
  if (std::abs(psi.norm() - 1.0) > tol) {
    throw Error(ErrorCode::InvalidInput,
                "state is not normalized (norm = " + std::to_string(psi.norm()) + ")");
  }
  return psi;
}

Json check_entry(double value, double tol) {
  return Json{{"value", value}, {"pass", value <= tol}};
}

void emit(std::ostream& out, const Json& j, const std::string& path) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  FiducialSource src;
  std::string construction = "block";
  std::string out_path;
  std::string m_out_path;
};

int cmd_build(const BuildArgs& a, double tol, std::ostream& out, std::ostream& err) {
  const ResolvedFiducial r = resolve(a.src, tol);
  const Construction c = parse_construction(a.construction);
  const NaimarkExtension ext = construct(r.m, c, tol);
  const ICReport ic = is_informationally_complete(r.fiducial, tol);

  Json report{{"command", "build"},
              {"d", ext.dim},
              {"construction", std::string(to_string(ext.provenance))},
              {"fiducial", r.fiducial.label()},
              {"m_source", r.m_source},
              {"unitarity_residual", unitarity_residual(ext.u)},
              {"informationally_complete", ic.informationally_complete},
              {"ic_gram_rank", ic.gram_rank},
              {"sic_deviation", sic_report(r.fiducial)},
              {"warnings", Json::array()}};
  if (!ic.informationally_complete) {
    const std::string warning = "fiducial orbit is not informationally complete (Gram rank " +
                                std::to_string(ic.gram_rank) + ")";
    report["warnings"].push_back(warning);
    err << "warning: " << warning << '\n';
  }
  if (a.out_path.empty()) {
    report["U"] = matrix_to_json(ext.u, ext.dim);
  } else {
    write_matrix_file(a.out_path, ext.u, ext.dim);
    report["U_path"] = a.out_path;
  }
  if (a.m_out_path.empty()) {
    report["M"] = matrix_to_json(ext.m, ext.dim);
  } else {
    write_matrix_file(a.m_out_path, ext.m, ext.dim);
    report["M_path"] = a.m_out_path;
  }
  out << report.dump(2) << '\n';
  return kOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string u_path;
  std::string m_path;
};

int cmd_verify(const VerifyArgs& a, double tol, std::ostream& out) {
  const ComplexMatrix u = read_matrix_file(a.u_path);
  std::optional<ComplexMatrix> m;
  if (!a.m_path.empty()) m = read_matrix_file(a.m_path);

  Json checks = Json::object();
  checks["unitarity"] = check_entry(unitarity_residual(u), tol);

  const auto n = u.rows();
  const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  Json report{{"command", "verify"}, {"rows", u.rows()}, {"cols", u.cols()}};

  if (u.rows() != u.cols() || d < 2 || static_cast<Eigen::Index>(d) * d != n) {
    checks["block_structure"] = Json{{"pass", false}, {"reason", "U is not d^2 x d^2"}};
  } else {
    report["d"] = d;
    checks["block_circulant"] = check_entry(block_circulant_residual(u, d), tol);
    double outer = 0.0;
    const ComplexMatrix implied = implied_M(u, d, &outer);
    checks["outer_product_blocks"] = check_entry(outer, tol);
    checks["block_constraints"] = check_entry(verify_block_constraints(first_block_row(u, d)), tol);
    const double implied_residual = unitarity_residual(implied);
    checks["implied_M_unitary"] = check_entry(implied_residual, tol);
    report["implied_M"] = matrix_to_json(implied, d);
    if (implied_residual <= tol) {
      const auto devs = compound_sic_report(implied, tol);
      Json sic = Json::array();
      for (double dev : devs) sic.push_back(Json{{"deviation", dev}, {"sic", dev <= tol}});
      report["compound_sic"] = sic;
    }
    if (m) {
      if (m->rows() != d || m->cols() != d) {
        checks["matches_M"] = Json{{"pass", false}, {"reason", "M is not d x d"}};
      } else {
        checks["M_unitary"] = check_entry(unitarity_residual(*m), tol);
        checks["matches_M"] = check_entry(max_abs_diff(block_circulant(all_blocks_S(*m)), u), tol);
      }
    }
  }

  bool pass = true;
  for (const auto& [name, entry] : checks.items()) pass = pass && entry.at("pass").get<bool>();
  report["checks"] = checks;
  report["pass"] = pass;
  out << report.dump(2) << '\n';
  return pass ? kOk : kCheckFailed;
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
  FiducialSource src;
  std::string state_json;
  std::string state_file;
  int embedding = 0;
  std::string construction = "block";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool check = false;
  std::string out_path;
};

int cmd_simulate(const SimulateArgs& a, double tol, std::ostream& out) {
  const ResolvedFiducial r = resolve(a.src, tol);
  if (a.state_json.empty() && a.state_file.empty()) {
    throw Error(ErrorCode::InvalidInput, "--state or --state-file is required");
  }
  const Ket psi = parse_state(a.state_json, a.state_file, tol);
  const NaimarkExtension ext = construct(r.m, parse_construction(a.construction), tol);
  const OutcomeDistribution dist = measure_probabilities(ext, psi, a.embedding);
  const Fiducial realized = fiducial_for_embedding(r.m, a.embedding, tol);

  Json report{{"command", "simulate"},
              {"d", ext.dim},
              {"embedding", a.embedding},
              {"construction", std::string(to_string(ext.provenance))},
              {"realized_fiducial", ket_to_json(realized.ket())},
              {"probabilities", distribution_to_json(dist)},
              {"total", dist.total()}};
  if (a.shots > 0) {
    const OutcomeCounts counts = sample(dist, a.shots, a.seed);
    report["shots"] = a.shots;
    report["seed"] = a.seed;
    report["counts"] = counts_to_json(counts);
  }
  int status = kOk;
  if (a.check) {
    const OutcomeDistribution oracle = direct_probabilities(realized, psi);
    double worst = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
      worst = std::max(worst, std::abs(dist.probs[i] - oracle.probs[i]));
    }
    report["check"] = check_entry(worst, tol);
    if (worst > tol) status = kCheckFailed;
  }
  emit(out, report, a.out_path);
  return status;
}

// -------------------------------------------------------------- circuit

struct CircuitArgs {
  int n = 0;
  long d = 0;
  std::string target;
  std::string m_file;
  std::string catalog;
  bool expand_matrix = false;
  std::string out_path;
  std::string matrix_out_path;
};

int cmd_circuit(const CircuitArgs& a, double tol, std::ostream& out) {
  int n = a.n;
  if (a.d != 0) {
    n = qubits_for_dimension(a.d);
    if (a.n != 0 && a.n != n) throw Error(ErrorCode::InvalidInput, "--n and --d disagree");
  }
  if (n < 1) throw Error(ErrorCode::InvalidInput, "--n (>= 1) or --d (power of two) required");
  const int d = 1 << n;

  GateList circuit;
  ComplexMatrix closed_form;
  if (a.target == "z") {
    circuit = qudit_Z_circuit(n);
    closed_form = clock_op(d);
  } else if (a.target == "cz") {
    circuit = cz_qudit_circuit(n);
    closed_form = controlled_clock_power_sum(d);
  } else if (a.target == "cx") {
    circuit = cx_qudit_circuit(n);
    closed_form = controlled_shift_power_sum(d);
  } else if (a.target == "fourier") {
    circuit = qudit_fourier_circuit(n);
    closed_form = fourier(d);
  } else if (a.target == "bell") {
    circuit = full_naimark_circuit(ComplexMatrix::Identity(d, d), n);
    circuit.gates.erase(circuit.gates.begin());  // M^T = I
    closed_form = bell_change_of_basis(d);
  } else if (a.target == "naimark") {
    ComplexMatrix m;
    if (!a.m_file.empty()) {
      m = read_matrix_file(a.m_file);
    } else if (!a.catalog.empty()) {
      m = catalog_M(a.catalog);
    } else {
      throw Error(ErrorCode::InvalidInput, "naimark target needs --m-file or --catalog");
    }
    if (m.rows() != d || m.cols() != d) {
      throw Error(ErrorCode::InvalidInput, "M is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + ", expected " +
                                               std::to_string(d) + "x" + std::to_string(d));
    }
    circuit = full_naimark_circuit(m, n);
    closed_form = build_bell_naimark(m).u;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown target '" + a.target + "'");
  }

  Json report{{"command", "circuit"},
              {"target", a.target},
              {"n", n},
              {"d", d},
              {"gate_count", circuit.gates.size()}};
  if (a.out_path.empty()) {
    report["circuit"] = circuit_to_json(circuit);
  } else {
    write_json_file(a.out_path, circuit_to_json(circuit));
    report["circuit_path"] = a.out_path;
  }
  int status = kOk;
  if (a.expand_matrix) {
    const ComplexMatrix full = expand(circuit);
    const double dev = max_abs_diff(full, closed_form);
    report["closed_form_deviation"] = dev;
    report["pass"] = dev <= tol;
    if (a.matrix_out_path.empty()) {
      report["matrix"] = matrix_to_json(full, d);
    } else {
      write_matrix_file(a.matrix_out_path, full, d);
      report["matrix_path"] = a.matrix_out_path;
    }
    if (dev > tol) status = kCheckFailed;
  }
  out << report.dump(2) << '\n';
  return status;
}

// -------------------------------------------------------------- catalog

int cmd_catalog(const std::string& label, std::ostream& out) {
  Json fiducials = Json::array();
  for (const auto& entry : fiducial_catalog()) {
    if (!label.empty() && entry.label != label) continue;
    const Fiducial phi = builtin_fiducial(entry.dim, entry.label);
    Json item{{"d", entry.dim},
              {"label", entry.label},
              {"ket", ket_to_json(phi.ket())},
              {"sic_deviation", sic_report(phi)}};
    if (auto m = catalog_M_for_fiducial(entry.label)) item["catalog_M"] = *m;
    fiducials.push_back(std::move(item));
  }
  Json ms = Json::array();
  for (const auto& m_label : catalog_M_labels()) {
    if (!label.empty() && m_label != label) continue;
    const ComplexMatrix m = catalog_M(m_label);
    ms.push_back(Json{{"label", m_label},
                      {"d", m.rows()},
                      {"matrix", matrix_to_json(m, static_cast<int>(m.rows()))}});
  }
  if (!label.empty() && fiducials.empty() && ms.empty()) {
    throw Error(ErrorCode::CatalogMiss, "no catalog entry '" + label + "'");
  }
  out << Json{{"fiducials", fiducials}, {"m_matrices", ms}}.dump(2) << '\n';
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParseError;
    default:
      return kUsageError;
  }
}

}  // namespace

double default_tolerance(double fallback) {
  if (const char* env = std::getenv("NAIMARK_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return fallback;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Naimark extensions of Weyl-Heisenberg covariant POVMs"};
  app.name("naimark");
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  app.add_option("--tol", tol_flag, "Tolerance for all checks")->check(CLI::PositiveNumber);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct U (and M) for a fiducial");
  add_fiducial_options(*build_cmd, build.src);
  build_cmd->add_option("--construction", build.construction, "block | bell | clock")
      ->check(CLI::IsMember({"block", "bell", "clock"}));
  build_cmd->add_option("--out", build.out_path, "Write U to this matrix file");
  build_cmd->add_option("--m-out", build.m_out_path, "Write M to this matrix file");
  build_cmd->add_option("--tol", tol_flag, "Tolerance")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a Naimark unitary file");
  verify_cmd->add_option("--u", verify.u_path, "U matrix file")->required();
  verify_cmd->add_option("--m", verify.m_path, "Optional M matrix file");
  verify_cmd->add_option("--tol", tol_flag, "Tolerance")->check(CLI::PositiveNumber);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Outcome distribution of a state");
  add_fiducial_options(*sim_cmd, sim.src);
  sim_cmd->add_option("--state", sim.state_json, "Input state ket as JSON");
  sim_cmd->add_option("--state-file", sim.state_file, "Input state ket JSON file");
  sim_cmd->add_option("--embedding", sim.embedding, "Ancilla index i of |psi, i>");
  sim_cmd->add_option("--construction", sim.construction, "block | bell | clock")
      ->check(CLI::IsMember({"block", "bell", "clock"}));
  sim_cmd->add_option("--shots", sim.shots, "Number of sampled shots (0: exact only)");
  sim_cmd->add_option("--seed", sim.seed, "Sampling seed");
  sim_cmd->add_flag("--check", sim.check, "Compare against the direct overlap formula");
  sim_cmd->add_option("--out", sim.out_path, "Write the report to this file");
  sim_cmd->add_option("--tol", tol_flag, "Tolerance")->check(CLI::PositiveNumber);

  CircuitArgs circ;
  auto* circ_cmd = app.add_subcommand("circuit", "Qubit circuits for d = 2^n");
  circ_cmd->add_option("--n", circ.n, "Qubits per qudit");
  circ_cmd->add_option("--d", circ.d, "Qudit dimension (power of two)");
  circ_cmd->add_option("--target", circ.target, "z | cz | cx | fourier | bell | naimark")
      ->required();
  circ_cmd->add_option("--m-file", circ.m_file, "M matrix file for the naimark target");
  circ_cmd->add_option("--catalog", circ.catalog, "Catalog M label for the naimark target");
  circ_cmd->add_flag("--expand", circ.expand_matrix, "Expand and compare to the closed form");
  circ_cmd->add_option("--out", circ.out_path, "Write the circuit JSON to this file");
  circ_cmd->add_option("--matrix-out", circ.matrix_out_path, "Write the expanded matrix here");
  circ_cmd->add_option("--tol", tol_flag, "Tolerance")->check(CLI::PositiveNumber);

  std::string catalog_label;
  auto* cat_cmd = app.add_subcommand("catalog", "List catalog fiducials and M matrices");
  cat_cmd->add_option("--label", catalog_label, "Show only this entry");

  std::vector<std::string> argv_storage{"naimark"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*build_cmd) return cmd_build(build, tol_flag.value_or(default_tolerance(kPhysicalTol)), out, err);
    if (*verify_cmd) return cmd_verify(verify, tol_flag.value_or(default_tolerance(kPhysicalTol)), out);
    if (*sim_cmd) return cmd_simulate(sim, tol_flag.value_or(default_tolerance(kPhysicalTol)), out);
    if (*circ_cmd) return cmd_circuit(circ, tol_flag.value_or(default_tolerance(kExactTol)), out);
    if (*cat_cmd) return cmd_catalog(catalog_label, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace naimark::cli
