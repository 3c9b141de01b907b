#include "cli.hpp"

#include "dpp/counts.hpp"
#include "dpp/error.hpp"
#include "dpp/experiments.hpp"
#include "dpp/fock.hpp"
#include "dpp/io.hpp"
#include "dpp/kernel.hpp"
#include "dpp/linalg.hpp"
#include "dpp/measure.hpp"
#include "dpp/sampler.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

namespace dpp::cli {

namespace {

using io::Json;

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::DimensionTooLarge:
    return kResourceCap;
  case ErrorCode::ParseError:
  case ErrorCode::IoError:
    return kParseError;
  default:
    return kDomainError;
  }
}

struct Options {
  bool quiet = false;
  std::string output;
  std::string kernel;
  std::string subset;
  std::string mode = "inclusion";
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  int particles = 0;
  std::string basis = "identity";
  std::uint64_t basis_seed = 0;
  int cue_n = 0;
  double arc_length = 0.0;
  double arc_center = 0.0;
  int replicates = 0;
  std::string graph;
};

Json real_array(const RealVector &v) {
  Json out = Json::array();
  for (double x : v)
    out.push_back(x);
  return out;
}

Json validate_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  return Json{{"valid", true},
              {"n", k.n()},
              {"clipping", k.clipping()},
              {"eigenvalues", real_array(k.spectrum())}};
}

Json prob_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  Subset s = Subset::parse(opt.subset);
  double value = 0.0;
  if (opt.mode == "inclusion")
    value = inclusion_probability(k, s);
  else if (opt.mode == "elementary")
    value = elementary_probability(k, s);
  else if (opt.mode == "void")
    value = void_probability(k, s);
  else if (opt.mode == "janossy")
    value = janossy_weight(k, s);
  else
    throw Error(ErrorCode::ParseError, "unknown mode '" + opt.mode + "'");
  return Json{{"value", value}};
}

Json pmf_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  return Json{{"n", k.n()}, {"pmf", io::pmf_to_json(full_pmf(k))}};
}

Json sample_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  return io::histogram_to_json(sample_batch(spectral_decompose(k), opt.draws, {opt.seed, 0}));
}

Json counts_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  Subset e = opt.subset.empty() ? Subset::full(k.n()) : Subset::parse(opt.subset);
  PoissonBinomial pb = count_distribution(k, e);
  CountMoments moments = count_moments(pb);
  return Json{{"subset", io::subset_to_json(e)},
              {"eigenvalues", pb.lambdas},
              {"pmf", pb.pmf},
              {"moments", {{"mean", moments.mean}, {"variance", moments.variance}}}};
}

Json fock_check_cmd(const Options &opt) {
  HermitianKernel k = validate_kernel(io::load_kernel(opt.kernel));
  if (k.n() > Limits::fock_cap)
    throw Error(ErrorCode::DimensionTooLarge, "fock-check needs n <= " +
                                                  std::to_string(Limits::fock_cap));
  Matrix w;
  if (opt.basis == "identity") {
    w = Matrix::Identity(k.n(), k.n());
  } else if (opt.basis == "random") {
    Rng rng(opt.basis_seed);
    w = haar_unitary(k.n(), rng);
  } else {
    throw Error(ErrorCode::ParseError, "unknown basis '" + opt.basis + "'");
  }
  SpectralDecomposition spec = spectral_decompose(k);
  ExactPmf fock_side = fock::diagonal_pmf(fock::density_weights(spec), w);
  ExactPmf kernel_side = full_pmf(rotate_kernel(k, w));
  double discrepancy = 0.0;
  for (std::size_t mask = 0; mask < fock_side.by_mask().size(); ++mask)
    discrepancy = std::max(discrepancy,
                           std::abs(fock_side.at_mask(mask) - kernel_side.at_mask(mask)));

  Json out{{"n", k.n()},
           {"basis", opt.basis},
           {"basis_seed", opt.basis_seed},
           {"diagonal_max_discrepancy", discrepancy},
           {"diagonal_passed", discrepancy < 1e-9}};
  if (opt.particles > 0) {
    const double gap = fock::key_identity_gap(spec, opt.particles);
    out["key_identity"] = {{"m", opt.particles}, {"gap", gap}, {"passed", gap <= 1e-9}};
  }
  return out;
}

Json cue_cmd(const Options &opt) {
  Arc arc(opt.arc_length, opt.arc_center);
  return io::arc_report_to_json(arc_count_experiment(opt.cue_n, arc, opt.replicates, {opt.seed, 0}));
}

Json ust_cmd(const Options &opt) {
  SimpleGraph g = io::load_graph(opt.graph);
  return io::ust_report_to_json(ust_compare(g, opt.draws, {opt.seed, 0}));
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Finite determinantal point processes: probabilities, sampling, oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", opt.quiet, "Suppress progress messages on stderr");
  app.add_option("-o,--output", opt.output, "Write JSON here instead of stdout");

  auto kernel_option = [&](CLI::App *cmd) {
    cmd->add_option("--kernel", opt.kernel, "Kernel JSON/CSV file or diag(a,b,...)")
        ->required();
  };

  auto *validate = app.add_subcommand("validate", "Validate a kernel and print its spectrum");
  kernel_option(validate);

  auto *prob = app.add_subcommand("prob", "Probability of one subset");
  kernel_option(prob);
  prob->add_option("--subset", opt.subset, "Comma-separated 0-based indices")->required();
  prob->add_option("--mode", opt.mode, "inclusion | elementary | void | janossy")
      ->check(CLI::IsMember({"inclusion", "elementary", "void", "janossy"}));

  auto *pmf = app.add_subcommand("pmf", "Exact pmf over all subsets");
  kernel_option(pmf);

  auto *sample = app.add_subcommand("sample", "Histogram of exact DPP samples");
  kernel_option(sample);
  sample->add_option("--draws", opt.draws)->required();
  sample->add_option("--seed", opt.seed);

  auto *counts = app.add_subcommand("counts", "Law of the number of points in a subset");
  kernel_option(counts);
  counts->add_option("--subset", opt.subset, "Defaults to the whole ground set");

  auto *fock_check = app.add_subcommand("fock-check", "Compare against the Fock-space oracle");
  kernel_option(fock_check);
  fock_check->add_option("--m", opt.particles, "Also check the m-particle key identity");
  fock_check->add_option("--basis", opt.basis, "identity | random")
      ->check(CLI::IsMember({"identity", "random"}));
  fock_check->add_option("--basis-seed", opt.basis_seed);

  auto *experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  experiment->require_subcommand(1);
  auto *cue = experiment->add_subcommand("cue", "CUE eigenvalue counts in an arc");
  cue->add_option("--n", opt.cue_n)->required();
  cue->add_option("--arc-length", opt.arc_length)->required();
  cue->add_option("--arc-center", opt.arc_center);
  cue->add_option("--replicates", opt.replicates)->required();
  cue->add_option("--seed", opt.seed);
  auto *ust = experiment->add_subcommand("ust", "Uniform spanning trees: DPP vs Wilson");
  ust->add_option("--graph", opt.graph)->required();
  ust->add_option("--draws", opt.draws)->required();
  ust->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kParseError;
  }

  auto progress = [&](const std::string &msg) {
    if (!opt.quiet)
      err << "dpp: " << msg << '\n';
  };

  try {
    Json result;
    if (*validate) {
      result = validate_cmd(opt);
    } else if (*prob) {
      result = prob_cmd(opt);
    } else if (*pmf) {
      progress("enumerating subsets");
      result = pmf_cmd(opt);
    } else if (*sample) {
      progress("sampling " + std::to_string(opt.draws) + " draws");
      result = sample_cmd(opt);
    } else if (*counts) {
      result = counts_cmd(opt);
    } else if (*fock_check) {
      progress("running Fock-space oracle");
      result = fock_check_cmd(opt);
    } else if (*cue) {
      progress("sampling " + std::to_string(opt.replicates) + " CUE matrices");
      result = cue_cmd(opt);
    } else if (*ust) {
      progress("sampling " + std::to_string(opt.draws) + " spanning trees per method");
      result = ust_cmd(opt);
    }

    const std::string text = result.dump() + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.output, std::ios::binary);
      if (!file || !(file << text))
        throw Error(ErrorCode::IoError, "cannot write '" + opt.output + "'");
    }
    return kSuccess;
  } catch (const Error &e) {
    err << "dpp: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "dpp: " << e.what() << '\n';
    return kDomainError;
  }
}

} // namespace dpp::cli
