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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evotomo/json_io.hpp"
#include "evotomo/series.hpp"
#include "evotomo/statistics.hpp"
#include "evotomo/tomography.hpp"

namespace py = pybind11;
using namespace evotomo;

namespace {

HermitianOperator herm(const CMatrix& m) { return HermitianOperator(m); }

py::dict profile_dict(const SpectralProfile& p) {
  py::dict d;
  d["eigenvalues"] = p.eigenvalues;
  d["delta"] = p.delta;
  d["j0"] = p.j0;
  d["minpoly"] = RVector(p.minpoly.real());
  d["distinct"] = p.distinct;
  d["tolerance"] = p.tolerance_used;
  d["ambiguous_delta"] = p.ambiguous_delta;
  d["ambiguous_j0"] = p.ambiguous_j0;
  return d;
}

py::dict certificate_dict(const InjectivityCertificate& c) {
  py::dict d;
  d["kind"] = to_string(c.kind);
  d["rank"] = c.rank;
  d["ambient"] = c.ambient;
  d["sigma_min"] = c.sigma_min;
  d["sigma_max"] = c.sigma_max;
  d["verdict"] = to_string(c.verdict);
  d["lipschitz_inverse"] = c.lipschitz_inverse;
  d["singular_values"] = c.singular_values;
  return d;
}

}  // namespace

PYBIND11_MODULE(_evotomo, m) {
  m.doc() = "Tomography from the time evolution of a single probe";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InsufficientSeed>(m, "InsufficientSeed", error.ptr());
  py::register_exception<NumericalAmbiguity>(m, "NumericalAmbiguity", error.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", error.ptr());
  py::register_exception<IllConditioned>(m, "IllConditioned", error.ptr());
  py::register_exception<RankDeficientMap>(m, "RankDeficientMap", error.ptr());

  m.def("basis", [](int d) {
    std::vector<CMatrix> out;
    for (const auto& b : standard_basis(d).elements()) out.push_back(b.matrix());
    return out;
  }, py::arg("dim"), "Hilbert-Schmidt orthonormal Hermitian basis, identity last.");
  m.def("vectorize", [](const CMatrix& h) { return vectorize(herm(h)); }, py::arg("h"));
  m.def("devectorize", [](const RVector& v) { return devectorize(v).matrix(); }, py::arg("v"));
  m.def("pauli", &pauli, py::arg("index"));

  py::class_<SuperOperator>(m, "Channel")
      .def(py::init<int, RMatrix>(), py::arg("dim"), py::arg("transfer"))
      .def_property_readonly("dim", &SuperOperator::dim)
      .def_property_readonly("transfer", &SuperOperator::transfer)
      .def_property_readonly("unital", &SuperOperator::unital)
      .def("dual", &SuperOperator::dual)
      .def("power", &SuperOperator::power, py::arg("k"))
      .def("apply", [](const SuperOperator& t, const CMatrix& h) { return apply(t, herm(h)).matrix(); })
      .def("validate", [](const SuperOperator& t) {
        const ChannelReport r = validate_channel(t);
        py::dict d;
        d["unital"] = r.unital;
        d["completely_positive"] = r.completely_positive;
        d["trace_dual_preserving"] = r.trace_dual_preserving;
        d["choi_min_eigenvalue"] = r.choi_min_eigenvalue;
        return d;
      })
      .def("to_json", [](const SuperOperator& t) { return to_json(t).dump(); });

  py::class_<LindbladGenerator>(m, "Lindblad")
      .def(py::init<int, CMatrix, RVector>(), py::arg("dim"), py::arg("p"), py::arg("v_imag"))
      .def_property_readonly("dim", &LindbladGenerator::dim)
      .def_property_readonly("p", &LindbladGenerator::p)
      .def_property_readonly("v_imag", &LindbladGenerator::v_imag)
      .def_property_readonly("transfer", &LindbladGenerator::transfer)
      .def("choi_min_eigenvalue", [](const LindbladGenerator& l) { return l.choi().min_eigenvalue(); })
      .def("exp", [](const LindbladGenerator& l, double t) { return exponentiate(l, t); }, py::arg("t") = 1.0)
      .def("to_json", [](const LindbladGenerator& l) { return to_json(l).dump(); });

  m.def("unitary_channel", &unitary_channel, py::arg("u"));
  m.def("depolarizing_mixture",
        [](const CMatrix& u, const CMatrix& sigma, double lambda) {
          return depolarizing_mixture(u, DensityOperator(sigma), lambda);
        },
        py::arg("u"), py::arg("sigma"), py::arg("lam"));
  m.def("qubit_channel", &qubit_dephasing_depolarizing, py::arg("p"), py::arg("theta"));
  m.def("cyclic_qubit_unitary", &cyclic_qubit_unitary);
  m.def("haar_unitary", [](int d, std::uint64_t seed) { Rng rng(seed); return haar_unitary(d, rng); },
        py::arg("dim"), py::arg("seed"));
  m.def("random_density", [](int d, std::uint64_t seed) { Rng rng(seed); return random_density(d, rng).matrix(); },
        py::arg("dim"), py::arg("seed"));
  m.def("random_hermitian",
        [](int d, std::uint64_t seed) { Rng rng(seed); return random_hermitian(d, rng).matrix(); },
        py::arg("dim"), py::arg("seed"));
  m.def("random_lindblad",
        [](int d, std::uint64_t seed, double dissipation, double hamiltonian) {
          Rng rng(seed);
          return random_lindblad(d, rng, LindbladScales{dissipation, hamiltonian});
        },
        py::arg("dim"), py::arg("seed"), py::arg("dissipation") = LindbladScales{}.dissipation,
        py::arg("hamiltonian") = LindbladScales{}.hamiltonian);

  m.def("spectral_profile", [](const SuperOperator& t, double tol) { return profile_dict(spectral_profile(t, tol)); },
        py::arg("channel"), py::arg("tol") = kDefaultSpectralTol);

  m.def("generate_series",
        [](const CMatrix& rho, const CMatrix& h0, const SuperOperator& t, int t0, int len) {
          return generate_discrete(herm(rho), herm(h0), t, t0, len).values();
        },
        py::arg("rho"), py::arg("h0"), py::arg("channel"), py::arg("t0"), py::arg("length"));
  m.def("extend",
        [](const SuperOperator& t, const std::vector<double>& seed, int t0, int horizon, double tol) {
          const ExtensionOperator e =
              build_linear_extension(spectral_profile(t, tol), t0, static_cast<int>(seed.size()), horizon);
          const TimeSeries out = e.apply(TimeSeries::discrete(t0, seed));
          return py::make_tuple(out.start(), out.values());
        },
        py::arg("channel"), py::arg("seed"), py::arg("t0"), py::arg("horizon"), py::arg("tol") = kDefaultSpectralTol,
        "Linear extension; returns (first index, values).");
  m.def("extend_affine",
        [](const SuperOperator& t, const CMatrix& h0, const std::vector<double>& seed, int t0, int horizon) {
          const ExtensionOperator e =
              build_affine_extension(t, herm(h0), t0, static_cast<int>(seed.size()), horizon);
          const TimeSeries out = e.apply(TimeSeries::discrete(t0, seed));
          return py::make_tuple(out.start(), out.values());
        },
        py::arg("channel"), py::arg("h0"), py::arg("seed"), py::arg("t0"), py::arg("horizon"));
  m.def("extend_continuous",
        [](const LindbladGenerator& l, const std::vector<double>& times, const std::vector<double>& values,
           const std::vector<double>& grid) {
          const ExtensionOperator e = build_continuous_extension(l, times);
          return e.evaluate(TimeSeries::continuous(times, values), grid).values();
        },
        py::arg("generator"), py::arg("times"), py::arg("values"), py::arg("grid"));

  py::class_<MeasurementMap>(m, "MeasurementMap")
      .def_property_readonly("kind", [](const MeasurementMap& map) { return to_string(map.kind); })
      .def_readonly("dim", &MeasurementMap::dim)
      .def_readonly("rows", &MeasurementMap::rows)
      .def("__call__", [](const MeasurementMap& map, const CMatrix& x) { return map.evaluate(herm(x)); })
      .def("certify", [](const MeasurementMap& map, double tol) { return certificate_dict(certify(map, tol)); },
           py::arg("tol") = kDefaultRankTol)
      .def("reconstruct", [](const MeasurementMap& map, const RVector& data) {
        return map.kind == MapKind::state_alpha ? reconstruct_state(map, data).estimate.matrix()
                                                : reconstruct_observable(map, data).matrix();
      });
  m.def("build_alpha",
        [](const SuperOperator& t, const CMatrix& h0, int t0, int t1) { return build_alpha(t, herm(h0), t0, t1); },
        py::arg("channel"), py::arg("h0"), py::arg("t0"), py::arg("t1"));
  m.def("build_beta",
        [](const SuperOperator& t, const CMatrix& rho0, int t0, int t1) {
          return build_beta(t, herm(rho0), t0, t1);
        },
        py::arg("channel"), py::arg("rho0"), py::arg("t0"), py::arg("t1"));

  m.def("qubit_landscape",
        [](const std::vector<double>& ps, const std::vector<double>& thetas) {
          std::vector<std::tuple<double, double, double>> out;
          for (const auto& c : qubit_landscape(ps, thetas)) out.emplace_back(c.p, c.theta, c.sigma_min);
          return out;
        },
        py::arg("grid_p"), py::arg("grid_theta"));
  m.def("reference_constants", [](int d) {
    const ReferenceConstants r = reference_constants(d);
    py::dict out;
    out["pauli_alpha_invnorm_sq"] = r.pauli_alpha_invnorm_sq;
    if (r.sic_beta_invnorm_sq) {
      out["sic_beta_invnorm_sq"] = *r.sic_beta_invnorm_sq;
      out["sic_gram_eigenvalues"] = r.sic_gram_eigenvalues;
    }
    return out;
  }, py::arg("dim"));

  m.def("mse_experiment",
        [](const SuperOperator& t, const CMatrix& probe, const CMatrix& truth, const std::string& kind, int t0,
           int t1, int shots, int trials, std::uint64_t seed) {
          const MseReport r = mse_experiment(t, herm(probe), herm(truth),
                                             kind == "alpha" ? MapKind::state_alpha : MapKind::observable_beta,
                                             t0, t1, shots, trials, seed);
          py::dict d;
          d["empirical_mse"] = r.empirical_mse;
          d["bound"] = r.bound;
          d["ratio"] = r.ratio;
          d["sigma_min"] = r.sigma_min;
          d["within_bound"] = r.within_bound;
          return d;
        },
        py::arg("channel"), py::arg("probe"), py::arg("truth"), py::arg("kind"), py::arg("t0"), py::arg("t1"),
        py::arg("shots"), py::arg("trials"), py::arg("seed"));
}
