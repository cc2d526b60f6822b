#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qosc/compare.hpp"
#include "qosc/datasets.hpp"
#include "qosc/output.hpp"
#include "qosc/shells.hpp"

// exit codes: 0 success, 1 computation/validation error, 2 I/O or usage error

namespace {

using namespace qosc;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchemeOptions {
  std::string model = "qdeformed";
  double tau = 0.038;
  std::optional<double> mu_prime;
  double delta = 0.39;
  std::int64_t max_electrons = 1500;
  std::optional<int> nmax;
  std::string format = "table";
};

void add_model_options(CLI::App* cmd, SchemeOptions& o) {
  cmd->add_option("--model", o.model, "energy model")
      ->check(CLI::IsMember({"qdeformed", "taylor", "nilsson", "classical"}))
      ->capture_default_str();
  cmd->add_option("--tau", o.tau, "deformation parameter (q = e^tau)")
      ->capture_default_str();
  cmd->add_option("--mu-prime", o.mu_prime,
                  "l(l+1) coefficient, required with --model nilsson");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

void add_scheme_options(CLI::App* cmd, SchemeOptions& o) {
  add_model_options(cmd, o);
  cmd->add_option("--delta", o.delta, "shell-separating gap threshold")
      ->capture_default_str();
  cmd->add_option("--max-electrons", o.max_electrons,
                  "validity cutoff for magic numbers")
      ->capture_default_str();
  cmd->add_option("--nmax", o.nmax,
                  "enumeration depth (default: self-consistent)");
}

EnergyModel make_model(const SchemeOptions& o) {
  const Model kind = model_from_string(o.model);
  if (kind == Model::Nilsson) {
    if (!o.mu_prime)
      throw UsageError("--mu-prime is required with --model nilsson");
    return EnergyModel::nilsson(*o.mu_prime);
  }
  if (o.mu_prime)
    throw UsageError("--mu-prime applies to --model nilsson only");
  switch (kind) {
    case Model::QDeformed: return EnergyModel::q_deformed(o.tau);
    case Model::Taylor: return EnergyModel::taylor(o.tau);
    default: return EnergyModel::classical();
  }
}

ShellScheme make_scheme(const SchemeOptions& o, std::int64_t max_electrons) {
  const EnergyModel model = make_model(o);
  if (o.nmax)
    return build_scheme_at_depth(model, *o.nmax, o.delta, max_electrons);
  return build_scheme(model, o.delta, max_electrons);
}

void run_spectrum(const SchemeOptions& o) {
  const EnergyModel model = make_model(o);
  const int n_max = o.nmax ? *o.nmax : required_nmax(o.max_electrons, model);
  auto levels = enumerate_levels(n_max, model);
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.qn.n != b.qn.n) return a.qn.n < b.qn.n;
    return a.qn.l < b.qn.l;
  });
  std::cout << format_spectrum(levels, model, n_max,
                               output_format_from_string(o.format))
                   .payload;
}

void run_magic(const SchemeOptions& o) {
  std::cout << format_scheme(make_scheme(o, o.max_electrons),
                             output_format_from_string(o.format))
                   .payload;
}

void run_plotdata(const SchemeOptions& o) {
  std::cout << format_plotdata(make_scheme(o, o.max_electrons),
                               output_format_from_string(o.format))
                   .payload;
}

struct CompareOptions {
  SchemeOptions scheme;
  std::string dataset_path;
  bool bundled = false;
  std::int64_t cutoff = 1500;
  std::string family;
};

void run_compare(const CompareOptions& o) {
  const auto sets =
      o.bundled ? bundled_datasets() : load_datasets_file(o.dataset_path);
  // the scheme must cover the whole comparison window
  const auto scheme =
      make_scheme(o.scheme, std::max(o.scheme.max_electrons, o.cutoff));
  const auto families =
      compare_families(scheme.magic_numbers, sets, o.cutoff, o.family);
  std::cout << format_comparisons(families, scheme.model, scheme.delta,
                                  o.bundled ? "bundled" : o.dataset_path,
                                  output_format_from_string(o.scheme.format))
                   .payload;
}

struct SweepOptions {
  std::string model = "qdeformed";
  std::vector<double> tau_list;
  std::string tau_range;
  std::vector<double> delta_list;
  std::string delta_range;
  std::int64_t cutoff = 1500;
  std::string format = "table";
};

// inclusive ascending range "lo:hi:step"
std::vector<double> parse_range(const std::string& spec, const char* flag) {
  const auto bad = [&](const std::string& why) {
    return UsageError(std::string(flag) + ": " + why + " (expected lo:hi:step)");
  };
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw bad("malformed range '" + spec + "'");
  double lo = 0, hi = 0, step = 0;
  try {
    lo = std::stod(spec.substr(0, c1));
    hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    step = std::stod(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw bad("malformed range '" + spec + "'");
  }
  if (!(step > 0.0)) throw bad("step must be positive");
  if (hi < lo) throw bad("descending range");
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  std::vector<double> out;
  out.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + i * step);
  return out;
}

std::vector<double> resolve_values(const std::vector<double>& list,
                                   const std::string& range, const char* flag) {
  if (!list.empty() && !range.empty())
    throw UsageError(std::string(flag) + ": give either a list or a range");
  if (!list.empty()) return list;
  if (!range.empty()) return parse_range(range, flag);
  throw UsageError(std::string(flag) + ": a list or a range is required");
}

void run_sweep(const SweepOptions& o) {
  const auto taus = resolve_values(o.tau_list, o.tau_range, "--tau-list/--tau-range");
  const auto deltas =
      resolve_values(o.delta_list, o.delta_range, "--delta-list/--delta-range");
  const auto result = sweep(taus, deltas, model_from_string(o.model), o.cutoff);
  std::cout << format_sweep(result, output_format_from_string(o.format)).payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "3-D q-deformed harmonic oscillator: spectra, shell gaps and cluster "
      "magic numbers"};
  app.require_subcommand(1);

  SchemeOptions spectrum_opts;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "energy levels sorted by energy");
  add_model_options(spectrum_cmd, spectrum_opts);
  spectrum_cmd->add_option("--nmax", spectrum_opts.nmax,
                           "enumeration depth (default: self-consistent)");
  spectrum_cmd
      ->add_option("--max-electrons", spectrum_opts.max_electrons,
                   "capacity target for the default depth")
      ->capture_default_str();

  SchemeOptions magic_opts;
  CLI::App* magic_cmd =
      app.add_subcommand("magic", "shell scheme, gap table and magic numbers");
  add_scheme_options(magic_cmd, magic_opts);

  CompareOptions compare_opts;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "score predicted magic numbers against a dataset");
  add_scheme_options(compare_cmd, compare_opts.scheme);
  CLI::Option* ds_opt = compare_cmd->add_option(
      "--dataset", compare_opts.dataset_path, "magic-number CSV file");
  CLI::Option* bundled_opt = compare_cmd->add_flag(
      "--bundled", compare_opts.bundled, "use the built-in datasets");
  ds_opt->excludes(bundled_opt);
  bundled_opt->excludes(ds_opt);
  compare_cmd->add_option("--cutoff", compare_opts.cutoff, "comparison cutoff")
      ->capture_default_str();
  compare_cmd->add_option("--family", compare_opts.family,
                          "restrict to one dataset family");

  SweepOptions sweep_opts;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "magic numbers over a (tau, delta) grid");
  sweep_cmd->add_option("--model", sweep_opts.model, "energy model")
      ->check(CLI::IsMember({"qdeformed", "taylor", "nilsson", "classical"}))
      ->capture_default_str();
  sweep_cmd
      ->add_option("--tau-list", sweep_opts.tau_list,
                   "comma-separated tau values (mu' for nilsson)")
      ->delimiter(',');
  sweep_cmd->add_option("--tau-range", sweep_opts.tau_range,
                        "tau range lo:hi:step");
  sweep_cmd
      ->add_option("--delta-list", sweep_opts.delta_list,
                   "comma-separated gap thresholds")
      ->delimiter(',');
  sweep_cmd->add_option("--delta-range", sweep_opts.delta_range,
                        "delta range lo:hi:step");
  sweep_cmd->add_option("--cutoff", sweep_opts.cutoff, "validity cutoff")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_opts.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();

  SchemeOptions plot_opts;
  CLI::App* plot_cmd =
      app.add_subcommand("plotdata", "level-diagram columns for plotting");
  add_scheme_options(plot_cmd, plot_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*spectrum_cmd) run_spectrum(spectrum_opts);
    else if (*magic_cmd) run_magic(magic_opts);
    else if (*compare_cmd) run_compare(compare_opts);
    else if (*sweep_cmd) run_sweep(sweep_opts);
    else if (*plot_cmd) run_plotdata(plot_opts);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
