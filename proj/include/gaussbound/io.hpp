// Copyright 2026 The gaussbound Authors
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

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gaussbound/fock.hpp"
#include "gaussbound/verify.hpp"

namespace gaussbound::io {

using nlohmann::json;

// A state description: either an explicit (modes, mean, cov) triple or a
// builder recipe. The two forms are mutually exclusive.
struct StateSpec {
  std::optional<GaussianState> explicit_state;
  std::optional<fock::StateBuilder> builder;

  bool is_builder() const { return builder.has_value(); }
  GaussianState state() const;  // builder target or the validated explicit state
};

fock::StateBuilder builder_from_json(const json& j);
json builder_to_json(const fock::StateBuilder& b);

StateSpec parse_state_spec(const json& j);
json state_spec_to_json(const StateSpec& spec);

// A document holds one state spec (bare object) or two ("state1"/"state2").
struct Document {
  StateSpec state1;
  std::optional<StateSpec> state2;
};

Document parse_document(const json& j);
Document load_document(const std::string& path);

// Resolve two states from one or two documents. Throws ParseError if the
// combination does not yield exactly two states.
std::pair<StateSpec, StateSpec> resolve_pair(const Document& first,
                                             const std::optional<Document>& second);

// Report payloads. JSON reports keep full double precision so a serialized
// report re-parses to identical numeric fields; fixed 12-significant-digit
// formatting is applied only to the human-readable tables and CSV output.
json inequality_row_json(const fock::InequalityRow& row);
json bound_report_json(const BoundReport& rep);
json metrics_json(const fock::ExactMetrics& ex);
json certificate_json(const fock::CertificateReport& rep);

json bounds_report(const StateSpec& s1, const StateSpec& s2);
json exact_report(const StateSpec& s1, const StateSpec& s2, int cutoff);
json verify_report(const std::vector<verify::PairOutcome>& outcomes);

// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double x);

std::string render_report_text(const json& report);

// CSV sweeps: header row mandatory, ',' separator, 12 significant digits.
std::string asymptotic_csv(const std::vector<verify::AsymptoticRow>& rows);
std::string squeeze_csv(const std::vector<verify::SqueezeRow>& rows);

}  // namespace gaussbound::io
