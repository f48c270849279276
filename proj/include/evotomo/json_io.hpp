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

// File formats.
//
//   operator   {"type": "operator", "dim": d, "re": [[..]], "im": [[..]]}
//   channel    {"type": "channel", "dim": d, "basis": "gellmann-identity-last",
//               "transfer": [[..]]}              (rows of the real d^2 x d^2 matrix)
//   lindblad   {"type": "lindblad", "dim": d, "P_re": [[..]], "P_im": [[..]],
//               "v_imag": [..]}
//   series     CSV, header "index_or_time,value"
//   landscape  CSV, header "p,theta,sigma_min"

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "evotomo/series.hpp"
#include "evotomo/statistics.hpp"
#include "evotomo/tomography.hpp"

namespace evotomo {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBasisName = "gellmann-identity-last";

Json to_json(const HermitianOperator& h);
HermitianOperator operator_from_json(const Json& j);

Json to_json(const SuperOperator& t);
SuperOperator channel_from_json(const Json& j);

Json to_json(const LindbladGenerator& l);
LindbladGenerator lindblad_from_json(const Json& j);

Json to_json(const SpectralProfile& p);
Json to_json(const InjectivityCertificate& c);
Json to_json(const ChannelReport& r);
Json to_json(const MseReport& r);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string series_to_csv(const TimeSeries& s);
TimeSeries series_from_csv(const std::string& text);
std::string landscape_to_csv(const std::vector<LandscapeCell>& cells);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace evotomo
