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

#include "evotomo/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "evotomo/errors.hpp"

namespace evotomo {

namespace {

Json matrix_to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols, const char* field) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw InvalidArgument(std::string(field) + ": expected " + std::to_string(rows) + " rows");
  RMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument(std::string(field) + ": expected " + std::to_string(cols) + " columns");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) throw InvalidArgument(std::string(field) + ": non-numeric entry");
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

RVector vector_from_json(const Json& j, Eigen::Index size, const char* field) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size)
    throw InvalidArgument(std::string(field) + ": expected " + std::to_string(size) + " entries");
  RVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const Json& x = j[static_cast<std::size_t>(i)];
    if (!x.is_number()) throw InvalidArgument(std::string(field) + ": non-numeric entry");
    v(i) = x.get<double>();
  }
  return v;
}

int read_dim(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidArgument("missing integer field \"dim\"");
  const int d = j["dim"].get<int>();
  if (d < 2) throw DimensionError("dim must be >= 2");
  return d;
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InvalidArgument(std::string("missing field \"") + name + "\"");
  return j[name];
}

void expect_type(const Json& j, const char* type) {
  if (j.contains("type") && j["type"] != type)
    throw InvalidArgument(std::string("expected a ") + type + " file, got \"" +
                          j["type"].get<std::string>() + "\"");
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Json to_json(const HermitianOperator& h) {
  Json j;
  j["type"] = "operator";
  j["dim"] = h.dim();
  j["re"] = matrix_to_json(h.matrix().real());
  j["im"] = matrix_to_json(h.matrix().imag());
  return j;
}

HermitianOperator operator_from_json(const Json& j) {
  expect_type(j, "operator");
  const int d = read_dim(j);
  CMatrix m(d, d);
  m.real() = matrix_from_json(field(j, "re"), d, d, "re");
  m.imag() = j.contains("im") ? matrix_from_json(j["im"], d, d, "im") : RMatrix::Zero(d, d);
  return HermitianOperator(m);
}

Json to_json(const SuperOperator& t) {
  Json j;
  j["type"] = "channel";
  j["dim"] = t.dim();
  j["basis"] = kBasisName;
  j["transfer"] = matrix_to_json(t.transfer());
  return j;
}

SuperOperator channel_from_json(const Json& j) {
  expect_type(j, "channel");
  const int d = read_dim(j);
  if (j.contains("basis") && j["basis"] != kBasisName)
    throw InvalidArgument(std::string("unsupported basis; expected \"") + kBasisName + "\"");
  return SuperOperator(d, matrix_from_json(field(j, "transfer"), d * d, d * d, "transfer"));
}

Json to_json(const LindbladGenerator& l) {
  Json j;
  j["type"] = "lindblad";
  j["dim"] = l.dim();
  j["P_re"] = matrix_to_json(l.p().real());
  j["P_im"] = matrix_to_json(l.p().imag());
  j["v_imag"] = vector_to_json(l.v_imag());
  return j;
}

LindbladGenerator lindblad_from_json(const Json& j) {
  expect_type(j, "lindblad");
  const int d = read_dim(j);
  const Eigen::Index m = d * d - 1;
  CMatrix p(m, m);
  p.real() = matrix_from_json(field(j, "P_re"), m, m, "P_re");
  p.imag() = j.contains("P_im") ? matrix_from_json(j["P_im"], m, m, "P_im") : RMatrix::Zero(m, m);
  return LindbladGenerator(d, p, vector_from_json(field(j, "v_imag"), m, "v_imag"));
}

Json to_json(const SpectralProfile& p) {
  Json j;
  Json eig = Json::array();
  for (Eigen::Index i = 0; i < p.eigenvalues.size(); ++i)
    eig.push_back(Json::array({p.eigenvalues(i).real(), p.eigenvalues(i).imag()}));
  Json poly = Json::array();
  for (Eigen::Index i = 0; i < p.minpoly.size(); ++i) poly.push_back(p.minpoly(i).real());
  j["delta"] = p.delta;
  j["j0"] = p.j0;
  j["minpoly"] = poly;
  j["eigenvalues"] = eig;
  j["tolerance"] = p.tolerance_used;
  j["distinct"] = p.distinct;
  j["ambiguous_delta"] = p.ambiguous_delta;
  j["ambiguous_j0"] = p.ambiguous_j0;
  return j;
}

Json to_json(const InjectivityCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["rank"] = c.rank;
  j["ambient"] = c.ambient;
  j["sigma_min"] = c.sigma_min;
  j["sigma_max"] = c.sigma_max;
  j["verdict"] = to_string(c.verdict);
  j["lipschitz_inverse"] = std::isfinite(c.lipschitz_inverse) ? Json(c.lipschitz_inverse) : Json(nullptr);
  j["tolerance"] = c.tolerance;
  j["singular_values"] = vector_to_json(c.singular_values);
  return j;
}

Json to_json(const ChannelReport& r) {
  Json j;
  j["unital"] = r.unital;
  j["completely_positive"] = r.completely_positive;
  j["trace_dual_preserving"] = r.trace_dual_preserving;
  j["choi_min_eigenvalue"] = r.choi_min_eigenvalue;
  return j;
}

Json to_json(const MseReport& r) {
  Json j;
  j["empirical_mse"] = r.empirical_mse;
  j["bound"] = r.bound;
  j["ratio"] = r.ratio;
  j["trials"] = r.trials;
  j["shots"] = r.shots;
  j["sigma_min"] = r.sigma_min;
  j["variance_bound"] = r.variance_bound;
  j["bias_norm"] = r.bias_norm;
  j["within_bound"] = r.within_bound;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string series_to_csv(const TimeSeries& s) {
  std::string out = "index_or_time,value\n";
  const std::vector<double> t = s.times();
  for (int k = 0; k < s.size(); ++k) {
    if (s.mode() == TimeMode::discrete) {
      out += std::to_string(s.start() + k);
    } else {
      // Times always carry a '.' or exponent so that reading them back keeps the mode.
      std::string time = format_double(t[static_cast<std::size_t>(k)]);
      if (time.find_first_of(".e") == std::string::npos) time += ".0";
      out += time;
    }
    out += ',';
    out += format_double(s.at(k));
    out += '\n';
  }
  return out;
}

TimeSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty series file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index_or_time,value") throw InvalidArgument("series header must be \"index_or_time,value\"");
  std::vector<double> times;
  std::vector<double> values;
  bool integral = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidArgument("malformed series row: " + line);
    double t = 0.0;
    double v = 0.0;
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    if (std::from_chars(a.data(), a.data() + a.size(), t).ec != std::errc() ||
        std::from_chars(b.data(), b.data() + b.size(), v).ec != std::errc())
      throw InvalidArgument("malformed series row: " + line);
    if (a.find_first_of(".eE") != std::string::npos) integral = false;
    times.push_back(t);
    values.push_back(v);
  }
  if (values.empty()) throw InvalidArgument("series file has no rows");
  bool consecutive = integral && times[0] >= 0.0;
  for (std::size_t k = 1; consecutive && k < times.size(); ++k) consecutive = times[k] == times[k - 1] + 1.0;
  if (consecutive) return TimeSeries::discrete(static_cast<int>(times[0]), std::move(values));
  return TimeSeries::continuous(std::move(times), std::move(values));
}

std::string landscape_to_csv(const std::vector<LandscapeCell>& cells) {
  std::string out = "p,theta,sigma_min\n";
  for (const auto& c : cells) out += format_double(c.p) + ',' + format_double(c.theta) + ',' + format_double(c.sigma_min) + '\n';
  return out;
}

}  // namespace evotomo
