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

#include "gaussbound/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gaussbound::io {

namespace {

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex value must be a number or a [re, im] pair");
}

double number_field(const json& j, const char* key, std::optional<double> fallback = {}) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw ParseError(std::string("missing field '") + key + "'");
  }
  if (!j.at(key).is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace

fock::StateBuilder builder_from_json(const json& j) {
  using B = fock::StateBuilder;
  if (!j.is_object() || !j.contains("kind")) throw ParseError("builder spec needs a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "vacuum") {
    const int modes = static_cast<int>(number_field(j, "modes", 1.0));
    return B::vacuum(modes);
  }
  if (kind == "coherent") {
    if (!j.contains("z")) throw ParseError("coherent builder needs 'z'");
    return B::coherent(complex_from_json(j.at("z")));
  }
  if (kind == "thermal") return B::thermal(number_field(j, "nbar"));
  if (kind == "squeezed") return B::squeezed(number_field(j, "r"), number_field(j, "phi", 0.0));
  if (kind == "displaced_squeezed_thermal") {
    if (!j.contains("z")) throw ParseError("displaced_squeezed_thermal builder needs 'z'");
    return B::displaced_squeezed_thermal(complex_from_json(j.at("z")), number_field(j, "r"),
                                         number_field(j, "phi", 0.0), number_field(j, "nbar"));
  }
  if (kind == "two_mode_squeezed") return B::two_mode_squeezed(number_field(j, "r"));
  if (kind == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      throw ParseError("product builder needs a 'factors' array");
    std::vector<B> factors;
    for (const json& f : j.at("factors")) factors.push_back(builder_from_json(f));
    return B::product(std::move(factors));
  }
  throw ParseError("unknown builder kind '" + kind + "'");
}

json builder_to_json(const fock::StateBuilder& b) {
  using K = fock::StateBuilder::Kind;
  json out;
  switch (b.kind) {
    case K::vacuum: out["kind"] = "vacuum"; break;
    case K::coherent:
      out["kind"] = "coherent";
      out["z"] = complex_to_json(b.z);
      break;
    case K::thermal:
      out["kind"] = "thermal";
      out["nbar"] = b.nbar;
      break;
    case K::squeezed:
      out["kind"] = "squeezed";
      out["r"] = b.r;
      out["phi"] = b.phi;
      break;
    case K::displaced_squeezed_thermal:
      out["kind"] = "displaced_squeezed_thermal";
      out["z"] = complex_to_json(b.z);
      out["r"] = b.r;
      out["phi"] = b.phi;
      out["nbar"] = b.nbar;
      break;
    case K::two_mode_squeezed:
      out["kind"] = "two_mode_squeezed";
      out["r"] = b.r;
      break;
    case K::product: {
      out["kind"] = "product";
      json factors = json::array();
      for (const fock::StateBuilder& f : b.factors) factors.push_back(builder_to_json(f));
      out["factors"] = factors;
      break;
    }
  }
  return out;
}

GaussianState StateSpec::state() const {
  if (builder) return validate_state(builder->target().mean, builder->target().cov);
  if (explicit_state) return *explicit_state;
  throw ParseError("empty state spec");
}

StateSpec parse_state_spec(const json& j) {
  if (!j.is_object()) throw ParseError("state spec must be an object");
  const bool has_builder = j.contains("kind");
  const bool has_explicit = j.contains("cov") || j.contains("mean");
  if (has_builder && has_explicit)
    throw ParseError("state spec cannot mix builder and explicit forms");
  StateSpec spec;
  if (has_builder) {
    spec.builder = builder_from_json(j);
    return spec;
  }
  if (!j.contains("cov") || !j.contains("mean"))
    throw ParseError("explicit state spec needs both 'mean' and 'cov'");
  const json& jm = j.at("mean");
  const json& jc = j.at("cov");
  if (!jm.is_array() || !jc.is_array()) throw ParseError("'mean' and 'cov' must be arrays");
  Vector mean(jm.size());
  for (size_t i = 0; i < jm.size(); ++i) {
    if (!jm[i].is_number()) throw ParseError("'mean' entries must be numbers");
    mean(static_cast<Eigen::Index>(i)) = jm[i].get<double>();
  }
  const size_t dim = jc.size();
  Matrix cov(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (!jc[i].is_array() || jc[i].size() != dim) throw ParseError("'cov' must be a square matrix");
    for (size_t k = 0; k < dim; ++k) {
      if (!jc[i][k].is_number()) throw ParseError("'cov' entries must be numbers");
      cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = jc[i][k].get<double>();
    }
  }
  if (j.contains("modes") && static_cast<size_t>(2 * j.at("modes").get<int>()) != dim)
    throw ParseError("'modes' disagrees with the covariance dimension");
  spec.explicit_state = validate_state(mean, cov);
  return spec;
}

json state_spec_to_json(const StateSpec& spec) {
  if (spec.builder) return builder_to_json(*spec.builder);
  json out;
  out["modes"] = spec.explicit_state->modes;
  out["mean"] = vector_to_json(spec.explicit_state->mean);
  out["cov"] = matrix_to_json(spec.explicit_state->cov);
  return out;
}

Document parse_document(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  Document doc;
  if (j.contains("state1")) {
    doc.state1 = parse_state_spec(j.at("state1"));
    if (j.contains("state2")) doc.state2 = parse_state_spec(j.at("state2"));
    return doc;
  }
  if (j.contains("state2")) throw ParseError("document has 'state2' but no 'state1'");
  doc.state1 = parse_state_spec(j);
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return parse_document(j);
}

std::pair<StateSpec, StateSpec> resolve_pair(const Document& first,
                                             const std::optional<Document>& second) {
  if (second) {
    if (first.state2 || second->state2)
      throw ParseError("two documents given; each must hold exactly one state");
    return {first.state1, second->state1};
  }
  if (!first.state2) throw ParseError("a single document must hold 'state1' and 'state2'");
  return {first.state1, *first.state2};
}

json inequality_row_json(const fock::InequalityRow& row) {
  json out;
  out["tag"] = row.tag;
  out["description"] = row.description;
  out["lhs"] = row.lhs;
  out["rhs"] = row.rhs;
  out["margin"] = row.margin;
  out["tolerance"] = row.tolerance;
  out["pass"] = row.pass;
  return out;
}

json bound_report_json(const BoundReport& rep) {
  json out;
  out["overlap"] = rep.overlap;
  out["trace_delta"] = rep.trace_delta;
  out["trace_delta_via_identity"] = rep.trace_delta_via_identity;
  out["trace_delta_upper"] = rep.trace_delta_upper;
  out["mean_term"] = rep.mean_term;
  out["mean_term_unhatted"] = rep.mean_term_unhatted;
  out["mean_term_bound"] = rep.mean_term_bound;
  out["one_minus_overlap_bound"] = rep.one_minus_overlap_bound;
  out["bures_bound"] = rep.bures_bound;
  out["trace_norm_bound"] = rep.trace_norm_bound;
  if (rep.specialized_bound) {
    out["specialized_bound"] = *rep.specialized_bound;
    out["which_specialization"] = to_string(rep.which_specialization);
  } else {
    out["which_specialization"] = "none";
  }
  return out;
}

json metrics_json(const fock::ExactMetrics& ex) {
  json out;
  out["overlap"] = ex.overlap;
  out["fidelity_root"] = ex.fidelity_root;
  out["trace_distance"] = ex.trace_distance;
  out["bures"] = ex.bures;
  out["lambda_max"] = ex.lambda_max;
  return out;
}

json certificate_json(const fock::CertificateReport& rep) {
  json out;
  out["state1"] = builder_to_json(rep.builder1);
  out["state2"] = builder_to_json(rep.builder2);
  out["cutoff"] = rep.cutoff;
  out["trace_deficit1"] = rep.deficit1;
  out["trace_deficit2"] = rep.deficit2;
  out["oracle"] = metrics_json(rep.oracle);
  out["bounds"] = bound_report_json(rep.bounds);
  out["pure_pair"] = rep.pair_is_pure;
  json rows = json::array();
  for (const fock::InequalityRow& row : rep.rows) rows.push_back(inequality_row_json(row));
  out["inequalities"] = rows;
  out["all_pass"] = rep.all_pass;
  return out;
}

namespace {

// Formula-level inequality rows for a bounds report (no oracle involved).
std::vector<fock::InequalityRow> bounds_rows(const BoundReport& rep) {
  std::vector<fock::InequalityRow> rows;
  const auto push = [&rows](const char* tag, const char* desc, double lhs, double rhs,
                            double tolerance) {
    fock::InequalityRow row;
    row.tag = tag;
    row.description = desc;
    row.lhs = lhs;
    row.rhs = rhs;
    row.tolerance = tolerance;
    row.margin = rhs - lhs;
    row.pass = row.margin >= -tolerance;
    rows.push_back(std::move(row));
  };
  push("ineq6", "1 - overlap <= (1/4)(mean term + trace delta)", 1.0 - rep.overlap,
       rep.one_minus_overlap_bound, tol::rel);
  push("eb", "trace delta routes agree", std::abs(rep.trace_delta - rep.trace_delta_via_identity),
       0.0, tol::id * (1.0 + std::abs(rep.trace_delta)));
  push("ec", "trace delta <= Frobenius upper bound", rep.trace_delta, rep.trace_delta_upper,
       tol::rel);
  push("mean", "mean term <= 2(||a||+||b||)||m||^2", rep.mean_term, rep.mean_term_bound,
       tol::rel * std::max(1.0, rep.mean_term_bound));
  push("basic2", "trace-norm bound = 2 x bures bound", rep.trace_norm_bound,
       2.0 * rep.bures_bound, tol::rel);
  return rows;
}

}  // namespace

json bounds_report(const StateSpec& s1, const StateSpec& s2) {
  const GaussianState g1 = s1.state();
  const GaussianState g2 = s2.state();
  const BoundReport rep = proposition_bound(g1, g2);
  const OverlapResult ov = overlap(g1, g2);

  json out;
  out["command"] = "bounds";
  out["inputs"]["state1"] = state_spec_to_json(s1);
  out["inputs"]["state2"] = state_spec_to_json(s2);
  out["overlap"]["value"] = ov.overlap;
  out["overlap"]["log_prefactor"] = ov.log_prefactor;
  out["overlap"]["exponent_term"] = ov.exponent_term;
  out["bounds"] = bound_report_json(rep);
  json rows = json::array();
  for (const fock::InequalityRow& row : bounds_rows(rep)) rows.push_back(inequality_row_json(row));
  out["inequalities"] = rows;
  return out;
}

json exact_report(const StateSpec& s1, const StateSpec& s2, int cutoff) {
  const fock::StateBuilder& b1 = *s1.builder;
  const fock::StateBuilder& b2 = *s2.builder;
  if (b1.modes() != b2.modes()) throw ModeMismatch("builders have different mode counts");
  const int c = cutoff > 0 ? cutoff : fock::default_cutoff(b1.modes());
  const fock::FockDensityMatrix rho1 = fock::build(b1, c);
  const fock::FockDensityMatrix rho2 = fock::build(b2, c);
  const fock::ExactMetrics ex = fock::exact_metrics(rho1, rho2);

  json out;
  out["command"] = "exact";
  out["inputs"]["state1"] = builder_to_json(b1);
  out["inputs"]["state2"] = builder_to_json(b2);
  out["cutoff"] = c;
  out["trace_deficit1"] = rho1.trace_deficit;
  out["trace_deficit2"] = rho2.trace_deficit;
  out["oracle"] = metrics_json(ex);
  json rows = json::array();
  for (const fock::InequalityRow& row : fock::chain_rows(ex))
    rows.push_back(inequality_row_json(row));
  out["inequalities"] = rows;
  return out;
}

json verify_report(const std::vector<verify::PairOutcome>& outcomes) {
  json out;
  out["command"] = "verify";
  json pairs = json::array();
  bool all = true;
  json first_violation;
  for (const verify::PairOutcome& o : outcomes) {
    json p;
    p["state1"] = builder_to_json(o.builder1);
    p["state2"] = builder_to_json(o.builder2);
    p["ok"] = o.ok;
    if (!o.error.empty()) {
      p["error"] = o.error;
    } else {
      p["report"] = certificate_json(o.report);
    }
    if (!o.ok && all) {
      all = false;
      first_violation["state1"] = builder_to_json(o.builder1);
      first_violation["state2"] = builder_to_json(o.builder2);
      if (!o.error.empty()) {
        first_violation["error"] = o.error;
      } else if (const fock::InequalityRow* row = o.report.first_failure()) {
        first_violation["inequality"] = inequality_row_json(*row);
      }
    }
    pairs.push_back(std::move(p));
  }
  out["pairs"] = pairs;
  out["all_pass"] = all;
  if (!all) out["first_violation"] = first_violation;
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

void render_rows(std::ostringstream& os, const json& rows) {
  os << "  inequality checks:\n";
  for (const json& row : rows) {
    os << "    [" << (row.at("pass").get<bool>() ? "pass" : "FAIL") << "] "
       << row.at("tag").get<std::string>() << ": " << row.at("description").get<std::string>()
       << "  (lhs " << format_double(row.at("lhs").get<double>()) << ", rhs "
       << format_double(row.at("rhs").get<double>()) << ", margin "
       << format_double(row.at("margin").get<double>()) << ")\n";
  }
}

void render_scalars(std::ostringstream& os, const json& obj, const char* heading) {
  os << "  " << heading << ":\n";
  for (const auto& [key, value] : obj.items()) {
    if (value.is_number()) {
      os << "    " << key << " = " << format_double(value.get<double>()) << "\n";
    } else if (value.is_string()) {
      os << "    " << key << " = " << value.get<std::string>() << "\n";
    }
  }
}

}  // namespace

std::string render_report_text(const json& report) {
  std::ostringstream os;
  os << report.value("command", "report") << " report\n";
  if (report.contains("inputs")) {
    os << "  state1: " << report.at("inputs").at("state1").dump() << "\n";
    os << "  state2: " << report.at("inputs").at("state2").dump() << "\n";
  }
  if (report.contains("cutoff")) os << "  cutoff: " << report.at("cutoff").get<int>() << "\n";
  if (report.contains("overlap")) render_scalars(os, report.at("overlap"), "overlap");
  if (report.contains("oracle")) render_scalars(os, report.at("oracle"), "oracle metrics");
  if (report.contains("bounds")) render_scalars(os, report.at("bounds"), "bounds");
  if (report.contains("inequalities")) render_rows(os, report.at("inequalities"));
  if (report.contains("pairs")) {
    int index = 0;
    for (const json& p : report.at("pairs")) {
      os << "  pair " << index++ << ": " << p.at("state1").dump() << " vs "
         << p.at("state2").dump() << " -> " << (p.at("ok").get<bool>() ? "pass" : "FAIL") << "\n";
      if (p.contains("error")) os << "    error: " << p.at("error").get<std::string>() << "\n";
    }
    os << "  all_pass: " << (report.at("all_pass").get<bool>() ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string asymptotic_csv(const std::vector<verify::AsymptoticRow>& rows) {
  std::ostringstream os;
  os << "t,diff_trace_norm,bound,exact_2db,exact_trace_norm,ratio_2db_bound,ratio_trace_norm\n";
  for (const verify::AsymptoticRow& r : rows) {
    os << format_double(r.t) << ',' << format_double(r.diff_trace_norm) << ','
       << format_double(r.bound) << ',' << format_double(r.exact_two_bures) << ','
       << format_double(r.exact_trace_norm) << ',' << format_double(r.ratio_bures) << ','
       << format_double(r.ratio_trace) << '\n';
  }
  return os.str();
}

std::string squeeze_csv(const std::vector<verify::SqueezeRow>& rows) {
  std::ostringstream os;
  os << "r,e1_bound,exact_2db,exact_trace_norm,ratio_2db_e1\n";
  for (const verify::SqueezeRow& r : rows) {
    os << format_double(r.r) << ',' << format_double(r.e1_bound) << ','
       << format_double(r.exact_two_bures) << ',' << format_double(r.exact_trace_norm) << ','
       << format_double(r.ratio) << '\n';
  }
  return os.str();
}

}  // namespace gaussbound::io
