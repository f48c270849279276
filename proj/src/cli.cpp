// Copyright 2026 The evotomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evotomo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "evotomo/json_io.hpp"

namespace evotomo {

namespace {

const char* const kSchemaHelp = R"(File formats:
  operator  {"type": "operator", "dim": d, "re": [[...]], "im": [[...]]}
  channel   {"type": "channel", "dim": d, "basis": "gellmann-identity-last",
             "transfer": [[...]]}  real d^2 x d^2 transfer matrix in the
             Hilbert-Schmidt orthonormal generalized Gell-Mann basis, identity
             element 1/sqrt(d) last; channels act on observables.
  lindblad  {"type": "lindblad", "dim": d, "P_re": [[...]], "P_im": [[...]],
             "v_imag": [...]}  PSD (d^2-1) x (d^2-1) block P and Im v.
             Accepted wherever a channel is expected; used as e^{step L}.
  series    CSV "index_or_time,value"; integer indices for discrete series.
  landscape CSV "p,theta,sigma_min".
Exit codes: 0 ok, 1 bad input, 2 insufficient seed, 3 rank deficient,
  4 numerical ambiguity.
Outputs without -o go to $EVOTOMO_OUTPUT_DIR when set, else to stdout.)";

struct Io {
  std::ostream& out;
  std::ostream& err;
};

// Writes text to `path`, to the default directory, or to stdout.
void emit(const Io& io, const std::string& text, const std::string& path, const std::string& default_name) {
  if (!path.empty()) {
    write_text_file(path, text);
    return;
  }
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    write_text_file((std::filesystem::path(dir) / default_name).string(), text);
    return;
  }
  io.out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_generator_file(const Json& j) { return j.is_object() && j.value("type", "") == "lindblad"; }

SuperOperator load_channel(const std::string& path, double step) {
  const Json j = read_json_file(path);
  if (is_generator_file(j)) return exponentiate(lindblad_from_json(j), step);
  return channel_from_json(j);
}

LindbladGenerator load_generator(const std::string& path) {
  const Json j = read_json_file(path);
  if (!is_generator_file(j)) throw InvalidArgument(path + " is not a lindblad generator file");
  return lindblad_from_json(j);
}

HermitianOperator load_operator(const std::string& path) { return operator_from_json(read_json_file(path)); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: \"" + item + "\"");
    }
  }
  return out;
}

// "start:stop:count"
std::vector<double> parse_range(const std::string& text) {
  const std::vector<std::string> parts = [&] {
    std::vector<std::string> p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) p.push_back(item);
    return p;
  }();
  if (parts.size() != 3) throw InvalidArgument("range must look like start:stop:count");
  const double lo = parse_list(parts[0]).at(0);
  const double hi = parse_list(parts[1]).at(0);
  const double count = parse_list(parts[2]).at(0);
  if (count < 1 || count != std::floor(count)) throw InvalidArgument("range count must be a positive integer");
  return linspace(lo, hi, static_cast<int>(count));
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw InvalidArgument("grid must look like NxM");
  try {
    const int a = std::stoi(text.substr(0, x));
    const int b = std::stoi(text.substr(x + 1));
    if (a < 1 || b < 1) throw InvalidArgument("grid sizes must be positive");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidArgument("grid must look like NxM");
  }
}

MapKind parse_kind(const std::string& kind) {
  if (kind == "alpha") return MapKind::state_alpha;
  if (kind == "beta") return MapKind::observable_beta;
  throw InvalidArgument("map kind must be alpha or beta");
}

// ---------------------------------------------------------------- gen-channel

struct GenChannelOptions {
  std::string kind;
  int dim = 2;
  std::uint64_t seed = 0;
  bool cyclic = false;
  bool haar = false;
  double lambda = 0.4;
  double p = 0.0;
  double theta = 0.0;
  double scale = 0.0;
  double dissipation = LindbladScales{}.dissipation;
  double hamiltonian = LindbladScales{}.hamiltonian;
  std::string output;
};

int cmd_gen_channel(const GenChannelOptions& o, const Io& io) {
  Rng rng(o.seed);
  Json j;
  std::optional<ChannelReport> report;
  if (o.kind == "lindblad") {
    const LindbladGenerator l = o.scale > 0.0
                                    ? random_lindblad(o.dim, rng, o.scale)
                                    : random_lindblad(o.dim, rng, LindbladScales{o.dissipation, o.hamiltonian});
    j = to_json(l);
    report = validate_channel(exponentiate(l, 1.0));
  } else {
    SuperOperator t = SuperOperator::identity(2);
    if (o.kind == "unitary") {
      if (o.cyclic && o.haar) throw InvalidArgument("choose one of --cyclic-qubit and --haar");
      t = o.cyclic ? unitary_channel(cyclic_qubit_unitary()) : unitary_channel(haar_unitary(o.dim, rng));
    } else if (o.kind == "depolarizing") {
      const CMatrix u = o.cyclic ? cyclic_qubit_unitary() : haar_unitary(o.dim, rng);
      t = depolarizing_mixture(u, DensityOperator::maximally_mixed(static_cast<int>(u.rows())), o.lambda);
    } else {
      t = qubit_dephasing_depolarizing(o.p, o.theta);
    }
    j = to_json(t);
    report = validate_channel(t);
  }
  emit(io, dump(j), o.output, "channel.json");
  (o.output.empty() ? io.err : io.out) << "validation " << to_json(*report).dump() << "\n";
  return kExitOk;
}

// --------------------------------------------------------------------- series

struct SeriesOptions {
  std::string channel;
  std::string rho;
  std::string observable;
  std::uint64_t seed = 0;
  int t0 = 0;
  int len = 10;
  double step = 1.0;
  std::string times;
  std::string output;
};

std::pair<HermitianOperator, HermitianOperator> state_and_observable(const std::string& rho_path,
                                                                     const std::string& obs_path, int d,
                                                                     std::uint64_t seed) {
  Rng rng(seed);
  const HermitianOperator rho = rho_path.empty() ? HermitianOperator(random_density(d, rng)) : load_operator(rho_path);
  const HermitianOperator h0 = obs_path.empty() ? random_hermitian(d, rng) : load_operator(obs_path);
  static_cast<void>(DensityOperator(rho));  // validates
  return {rho, h0};
}

int cmd_series(const SeriesOptions& o, const Io& io) {
  TimeSeries s = TimeSeries::discrete(0, {0.0});
  if (!o.times.empty()) {
    const LindbladGenerator l = load_generator(o.channel);
    const auto [rho, h0] = state_and_observable(o.rho, o.observable, l.dim(), o.seed);
    s = generate_continuous(rho, h0, l, parse_list(o.times));
  } else {
    const SuperOperator t = load_channel(o.channel, o.step);
    const auto [rho, h0] = state_and_observable(o.rho, o.observable, t.dim(), o.seed);
    s = generate_discrete(rho, h0, t, o.t0, o.len);
  }
  emit(io, series_to_csv(s), o.output, "series.csv");
  return kExitOk;
}

// --------------------------------------------------------------------- extend

struct ExtendOptions {
  std::string channel;
  std::string series;
  std::string rho;
  std::string observable;
  std::uint64_t seed = 0;
  int horizon = 50;
  double step = 1.0;
  double tol = kDefaultSpectralTol;
  bool affine = false;
  bool verify = false;
  std::string grid = "0:5:101";
  std::string output;
  std::string report;
};

int cmd_extend(const ExtendOptions& o, const Io& io) {
  const TimeSeries seed = series_from_csv(read_text(o.series));
  Json report;
  TimeSeries extended = seed;
  std::optional<TimeSeries> direct;
  if (seed.mode() == TimeMode::continuous) {
    const LindbladGenerator l = load_generator(o.channel);
    const ExtensionOperator e = build_continuous_extension(l, seed.times());
    const std::vector<double> grid = parse_range(o.grid);
    extended = e.evaluate(seed, grid);
    double imag = 0.0;
    for (double t : grid) imag = std::max(imag, e.weights(t).imag_residual);
    report["kind"] = "continuous";
    report["sample_times"] = seed.times();
    report["condition_number"] = e.condition_number();
    report["max_imag_residual"] = imag;
    if (o.verify) {
      const auto [rho, h0] = state_and_observable(o.rho, o.observable, l.dim(), o.seed);
      direct = generate_continuous(rho, h0, l, grid);
    }
  } else {
    const SuperOperator t = load_channel(o.channel, o.step);
    ExtensionOperator e = ExtensionOperator();
    if (o.affine) {
      if (o.observable.empty()) throw InvalidArgument("--affine needs --observable");
      e = build_affine_extension(t, load_operator(o.observable), seed.start(), seed.size(), o.horizon, o.tol);
      const SpectralProfile pq = spectral_profile(restrict_traceless(t), o.tol);
      report["kind"] = "affine";
      report["delta"] = pq.delta;
      report["j0"] = pq.j0;
    } else {
      const SpectralProfile p = spectral_profile(t, o.tol);
      e = build_linear_extension(p, seed.start(), seed.size(), o.horizon);
      report["kind"] = "linear";
      report["delta"] = p.delta;
      report["j0"] = p.j0;
    }
    extended = e.apply(seed);
    report["kappa"] = e.kappa();
    report["seed_start"] = e.seed_start();
    report["seed_length"] = e.seed_length();
    report["horizon"] = e.horizon();
    report["condition_number"] = e.condition_number();
    if (o.verify) {
      const auto [rho, h0] = state_and_observable(o.rho, o.observable, t.dim(), o.seed);
      direct = generate_discrete(rho, h0, t, e.kappa(), extended.size());
    }
  }
  if (direct) {
    double dev = 0.0;
    double scale = 0.0;
    for (int k = 0; k < extended.size(); ++k) {
      dev = std::max(dev, std::abs(extended.at(k) - direct->at(k)));
      scale = std::max(scale, std::abs(direct->at(k)));
    }
    report["max_deviation"] = dev;
    report["max_relative_deviation"] = scale > 0.0 ? dev / scale : dev;
  }
  emit(io, series_to_csv(extended), o.output, "extended.csv");
  if (!o.report.empty())
    write_text_file(o.report, dump(report));
  else
    (o.output.empty() ? io.err : io.out) << dump(report);
  return kExitOk;
}

// ------------------------------------------------------ certify / reconstruct

struct MapOptions {
  std::string channel;
  std::string kind = "alpha";
  std::string probe;
  int t0 = 0;
  int t1 = -1;
  double step = 1.0;
  std::string times;
  double tol = kDefaultRankTol;
};

MeasurementMap load_map(const MapOptions& o) {
  const MapKind kind = parse_kind(o.kind);
  if (o.probe.empty()) throw InvalidArgument("--probe is required");
  const HermitianOperator probe = load_operator(o.probe);
  if (!o.times.empty()) return continuous_maps(load_generator(o.channel), probe, parse_list(o.times), kind);
  const SuperOperator t = load_channel(o.channel, o.step);
  const int d2 = t.dim() * t.dim();
  // Default windows have the minimal lengths d^2 - 1 (alpha) and d^2 (beta).
  const int t1 = o.t1 >= 0 ? o.t1 : o.t0 + (kind == MapKind::state_alpha ? d2 - 2 : d2 - 1);
  return kind == MapKind::state_alpha ? build_alpha(t, probe, o.t0, t1) : build_beta(t, probe, o.t0, t1);
}

int cmd_certify(const MapOptions& m, const std::string& output, const Io& io) {
  emit(io, dump(to_json(certify(load_map(m), m.tol))), output, "certificate.json");
  return kExitOk;
}

struct ReconstructOptions {
  std::string data;
  std::string truth;
  std::string output;
};

int cmd_reconstruct(const MapOptions& m, const ReconstructOptions& o, const Io& io) {
  const MeasurementMap map = load_map(m);
  RVector data;
  std::optional<HermitianOperator> truth;
  if (!o.truth.empty()) {
    truth = load_operator(o.truth);
    data = map.evaluate(*truth);
  } else if (!o.data.empty()) {
    const TimeSeries s = series_from_csv(read_text(o.data));
    data = Eigen::Map<const RVector>(s.values().data(), s.size());
  } else {
    throw InvalidArgument("give --data or --truth");
  }
  Json j;
  if (map.kind == MapKind::state_alpha) {
    const StateReconstruction r = reconstruct_state(map, data, m.tol);
    j = to_json(r.estimate);
    j["positive"] = r.positive;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["residual"] = r.residual;
    if (truth) j["error"] = (r.estimate - *truth).norm();
  } else {
    const HermitianOperator h = reconstruct_observable(map, data, m.tol);
    j = to_json(h);
    if (truth) j["error"] = (h - *truth).norm();
  }
  emit(io, dump(j), o.output, "reconstruction.json");
  return kExitOk;
}

// ----------------------------------------------------------------------- scan

struct ScanOptions {
  std::string grid = "101x101";
  int search = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_scan(const ScanOptions& o, const Io& io) {
  const auto [np, nt] = parse_grid(o.grid);
  const auto cells = qubit_landscape(linspace(0.0, 1.0, np), linspace(0.0, std::numbers::pi, nt));
  emit(io, landscape_to_csv(cells), o.output, "landscape.csv");
  if (o.search > 0) {
    Rng rng(o.seed);
    const SearchResult r = qubit_sigma_min_search(o.search, rng);
    io.err << "random search: best sigma_min " << format_double(r.best_sigma_min) << " over " << r.samples
           << " samples\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- estimate

struct EstimateOptions {
  std::string truth;
  int shots = 10000;
  int trials = 200;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_estimate(MapOptions m, const EstimateOptions& o, const Io& io) {
  // Default plan: cyclic qubit unitary, effect (1 + sigma_3)/2, i = 1..3.
  SuperOperator t = unitary_channel(cyclic_qubit_unitary());
  HermitianOperator probe = HermitianOperator((CMatrix::Identity(2, 2) + pauli(3)) * 0.5);
  const MapKind kind = parse_kind(m.kind);
  if (!m.channel.empty()) {
    t = load_channel(m.channel, m.step);
    if (m.probe.empty()) throw InvalidArgument("--probe is required with --channel");
  } else if (m.t1 < 0) {
    m.t0 = 1;
    m.t1 = 3;
  }
  if (!m.probe.empty()) probe = load_operator(m.probe);
  const int d2 = t.dim() * t.dim();
  const int t1 = m.t1 >= 0 ? m.t1 : m.t0 + (kind == MapKind::state_alpha ? d2 - 2 : d2 - 1);
  HermitianOperator truth = HermitianOperator::identity(t.dim());
  if (!o.truth.empty()) {
    truth = load_operator(o.truth);
  } else {
    Rng rng(derive_seed(o.seed, ~0ULL));
    const DensityOperator rho = random_density(t.dim(), rng);
    // For beta, a random effect with largest eigenvalue 1.
    truth = kind == MapKind::state_alpha ? HermitianOperator(rho)
                                         : HermitianOperator(rho.matrix() / rho.eigenvalues().maxCoeff());
  }
  const MseReport r = mse_experiment(t, probe, truth, kind, m.t0, t1, o.shots, o.trials, o.seed);
  emit(io, dump(to_json(r)), o.output, "estimate.json");
  return kExitOk;
}

void add_map_options(CLI::App* cmd, MapOptions& m) {
  cmd->add_option("--channel", m.channel, "channel or lindblad JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--kind", m.kind, "alpha (states) or beta (observables)")
      ->check(CLI::IsMember({"alpha", "beta"}));
  cmd->add_option("--probe", m.probe, "operator JSON: H0 for alpha, rho0 for beta")->check(CLI::ExistingFile);
  cmd->add_option("--t0", m.t0, "first evolution index")->check(CLI::NonNegativeNumber);
  cmd->add_option("--t1", m.t1, "last evolution index (default: minimal window)");
  cmd->add_option("--step", m.step, "time step when the channel file is a generator");
  cmd->add_option("--times", m.times, "comma-separated times; builds the continuous map from a generator");
  cmd->add_option("--tol", m.tol, "relative singular value cutoff")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Io io{out, err};
  CLI::App app{"Tomography from the time evolution of a single probe", "evotomo"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);

  GenChannelOptions gen;
  auto* c_gen = app.add_subcommand("gen-channel", "write a channel or generator file");
  c_gen->add_option("kind", gen.kind, "unitary | depolarizing | qubit-pt | lindblad")
      ->required()
      ->check(CLI::IsMember({"unitary", "depolarizing", "qubit-pt", "lindblad"}));
  c_gen->add_option("--dim", gen.dim, "Hilbert space dimension")->check(CLI::Range(2, 16));
  c_gen->add_option("--seed", gen.seed, "RNG seed");
  c_gen->add_flag("--cyclic-qubit", gen.cyclic, "the qubit unitary cycling sigma_1 -> sigma_2 -> sigma_3");
  c_gen->add_flag("--haar", gen.haar, "Haar-random unitary (default)");
  c_gen->add_option("--lambda", gen.lambda, "depolarizing weight")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c_gen->add_option("--p", gen.p, "qubit-pt depolarizing weight")->check(CLI::Range(0.0, 1.0));
  c_gen->add_option("--theta", gen.theta, "qubit-pt rotation angle");
  c_gen->add_option("--scale", gen.scale, "single scale for P and Im v (overrides the two below)");
  c_gen->add_option("--dissipation", gen.dissipation, "scale of P")->capture_default_str();
  c_gen->add_option("--hamiltonian", gen.hamiltonian, "scale of Im v")->capture_default_str();
  c_gen->add_option("-o,--output", gen.output, "output file");

  SeriesOptions ser;
  auto* c_series = app.add_subcommand("series", "generate an expectation-value series");
  c_series->add_option("--channel", ser.channel, "channel or lindblad JSON file")->required()->check(CLI::ExistingFile);
  c_series->add_option("--rho", ser.rho, "state JSON (default: random from --seed)")->check(CLI::ExistingFile);
  c_series->add_option("--observable", ser.observable, "observable JSON (default: random from --seed)")
      ->check(CLI::ExistingFile);
  c_series->add_option("--seed", ser.seed, "RNG seed for defaulted operators");
  c_series->add_option("--t0", ser.t0, "first index")->check(CLI::NonNegativeNumber);
  c_series->add_option("--len", ser.len, "number of values")->check(CLI::PositiveNumber);
  c_series->add_option("--step", ser.step, "time step when the channel file is a generator");
  c_series->add_option("--times", ser.times, "comma-separated times (continuous series from a generator)");
  c_series->add_option("-o,--output", ser.output, "output CSV");

  ExtendOptions ext;
  auto* c_ext = app.add_subcommand("extend", "extend a series from a seed window");
  c_ext->add_option("--channel", ext.channel, "channel or lindblad JSON file")->required()->check(CLI::ExistingFile);
  c_ext->add_option("--series", ext.series, "seed CSV")->required()->check(CLI::ExistingFile);
  c_ext->add_option("--horizon", ext.horizon, "last index to produce")->capture_default_str();
  c_ext->add_option("--step", ext.step, "time step when the channel file is a generator");
  c_ext->add_option("--tol", ext.tol, "spectral tolerance")->capture_default_str();
  c_ext->add_flag("--affine", ext.affine, "affine extension for unit-trace states (needs --observable)");
  c_ext->add_flag("--verify", ext.verify, "compare against direct generation");
  c_ext->add_option("--rho", ext.rho, "state JSON for --verify")->check(CLI::ExistingFile);
  c_ext->add_option("--observable", ext.observable, "observable JSON")->check(CLI::ExistingFile);
  c_ext->add_option("--seed", ext.seed, "RNG seed for defaulted operators");
  c_ext->add_option("--grid", ext.grid, "start:stop:count evaluation times (continuous)")->capture_default_str();
  c_ext->add_option("-o,--output", ext.output, "output CSV");
  c_ext->add_option("--report", ext.report, "report JSON path");

  MapOptions cert_map;
  std::string cert_out;
  auto* c_cert = app.add_subcommand("certify", "injectivity certificate of a measurement map");
  add_map_options(c_cert, cert_map);
  c_cert->add_option("-o,--output", cert_out, "output JSON");

  MapOptions rec_map;
  ReconstructOptions rec;
  auto* c_rec = app.add_subcommand("reconstruct", "invert a measurement map");
  add_map_options(c_rec, rec_map);
  c_rec->add_option("--data", rec.data, "measured values as a series CSV")->check(CLI::ExistingFile);
  c_rec->add_option("--truth", rec.truth, "operator JSON; exact data are computed from it")->check(CLI::ExistingFile);
  c_rec->add_option("-o,--output", rec.output, "output JSON");

  ScanOptions scan;
  auto* c_scan = app.add_subcommand("scan", "smallest singular value over the qubit (p, theta) grid");
  c_scan->add_option("--grid", scan.grid, "NxM points over [0,1] x [0,pi]")->capture_default_str();
  c_scan->add_option("--search", scan.search, "also run a random search with this many samples");
  c_scan->add_option("--seed", scan.seed, "RNG seed for --search");
  c_scan->add_option("-o,--output", scan.output, "output CSV");

  MapOptions est_map;
  EstimateOptions est;
  auto* c_est = app.add_subcommand("estimate", "Monte-Carlo mean squared error against its bound");
  add_map_options(c_est, est_map);
  c_est->add_option("--truth", est.truth, "true state (alpha) or effect (beta) JSON")->check(CLI::ExistingFile);
  c_est->add_option("--n,--shots", est.shots, "shots per measured operator")->check(CLI::PositiveNumber);
  c_est->add_option("--trials", est.trials, "Monte-Carlo trials")->check(CLI::Range(2, 100000000));
  c_est->add_option("--seed", est.seed, "RNG seed");
  c_est->add_option("-o,--output", est.output, "output JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*c_gen) return cmd_gen_channel(gen, io);
    if (*c_series) return cmd_series(ser, io);
    if (*c_ext) return cmd_extend(ext, io);
    if (*c_cert) {
      if (cert_map.channel.empty()) throw InvalidArgument("--channel is required");
      return cmd_certify(cert_map, cert_out, io);
    }
    if (*c_rec) {
      if (rec_map.channel.empty()) throw InvalidArgument("--channel is required");
      return cmd_reconstruct(rec_map, rec, io);
    }
    if (*c_scan) return cmd_scan(scan, io);
    if (*c_est) return cmd_estimate(est_map, est, io);
  } catch (const InsufficientSeed& e) {
    err << "error: " << e.what() << "\nrequired seed length: " << e.required() << "\n";
    return kExitInsufficientSeed;
  } catch (const RankDeficientMap& e) {
    err << "error: " << e.what() << "\n";
    out << dump(to_json(e.certificate()));
    return kExitRankDeficient;
  } catch (const NumericalAmbiguity& e) {
    err << "error: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace evotomo
