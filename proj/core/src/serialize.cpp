// Copyright 2026 The hmap authors
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

#include "hmap/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace hmap {

namespace {

using nlohmann::json;

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error("MalformedJson", "complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json exponent_to_json(double p) {
  if (std::isinf(p)) return json("inf");
  return json(p);
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error("MalformedJson", why);
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) malformed("input is not valid JSON");
  return j;
}

const char* method_name(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::kClosedForm: return "closed_form";
    case RadiusMethod::kBisection: return "bisection";
    case RadiusMethod::kSampled: return "sampled";
  }
  return "closed_form";
}

json params_to_json(const ClassParams& params) {
  json j = json::object();
  if (params.p) j["p"] = exponent_to_json(*params.p);
  if (params.q) j["q"] = exponent_to_json(*params.q);
  if (params.norm) j["norm"] = *params.norm;
  if (params.M) j["M"] = *params.M;
  if (params.a) j["a"] = *params.a;
  if (params.Lambda_bound) j["lambda"] = *params.Lambda_bound;
  return j;
}

}  // namespace

std::string to_json(const BoundarySpec& spec) {
  json j;
  j["kind"] = spec.kind();
  if (const auto* e = spec.get_if<ExponentialBoundary>()) {
    j["n"] = e->n;
    j["scale"] = complex_to_json(e->scale);
  } else if (const auto* tp = spec.get_if<TrigPolyBoundary>()) {
    json coeffs = json::object();
    for (const auto& [k, c] : tp->coeffs) {
      coeffs[std::to_string(k)] = complex_to_json(c);
    }
    j["coeffs"] = coeffs;
  } else if (const auto* ex = spec.get_if<ExtremalBoundary>()) {
    j["n"] = ex->n;
    j["M"] = ex->M;
    j["alpha"] = complex_to_json(ex->alpha);
    j["beta"] = complex_to_json(ex->beta);
  } else if (const auto* s = spec.get_if<SamplesBoundary>()) {
    json values = json::array();
    for (const auto& v : s->values) values.push_back(complex_to_json(v));
    j["values"] = values;
  }
  return j.dump();
}

BoundarySpec boundary_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    malformed("boundary spec needs a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "exponential") {
      ExponentialBoundary b;
      b.n = j.at("n").get<int>();
      b.scale = complex_from_json(j.at("scale"));
      return BoundarySpec(b);
    }
    if (kind == "trig_poly") {
      TrigPolyBoundary b;
      for (const auto& [key, value] : j.at("coeffs").items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) malformed("coefficient keys are integers");
        b.coeffs[k] = complex_from_json(value);
      }
      return BoundarySpec(b);
    }
    if (kind == "extremal") {
      ExtremalBoundary b;
      b.n = j.at("n").get<int>();
      b.M = j.at("M").get<double>();
      b.alpha = complex_from_json(j.at("alpha"));
      b.beta = complex_from_json(j.at("beta"));
      return BoundarySpec(b);
    }
    if (kind == "samples") {
      SamplesBoundary b;
      for (const auto& v : j.at("values")) {
        b.values.push_back(complex_from_json(v));
      }
      return BoundarySpec(b);
    }
  } catch (const json::exception&) {
    malformed("boundary spec fields are missing or mistyped");
  } catch (const std::invalid_argument&) {
    malformed("coefficient keys are integers");
  } catch (const std::out_of_range&) {
    malformed("coefficient keys are integers");
  }
  malformed("unknown boundary kind \"" + kind + "\"");
}

std::string to_json(const CoeffTable& table) {
  json j;
  const int N = table.truncation();
  j["N"] = N;
  json a = json::array();
  for (int k = 0; k <= N; ++k) {
    a.push_back(complex_to_json(table.a[static_cast<std::size_t>(k)]));
  }
  json b = json::array();
  for (int k = 1; k <= N; ++k) {
    b.push_back(complex_to_json(table.b[static_cast<std::size_t>(k)]));
  }
  j["a"] = a;
  j["b"] = b;
  j["tail_rate"] = table.tail_bound_rate;
  return j.dump();
}

CoeffTable table_from_json(const std::string& text) {
  const json j = parse(text);
  CoeffTable table;
  try {
    const int N = j.at("N").get<int>();
    const auto& a = j.at("a");
    const auto& b = j.at("b");
    if (N < 0 || a.size() != static_cast<std::size_t>(N) + 1 ||
        b.size() != static_cast<std::size_t>(N)) {
      malformed("coefficient arrays do not match N");
    }
    table.a.resize(static_cast<std::size_t>(N) + 1);
    table.b.assign(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= N; ++k) {
      table.a[static_cast<std::size_t>(k)] =
          complex_from_json(a[static_cast<std::size_t>(k)]);
    }
    for (int k = 1; k <= N; ++k) {
      table.b[static_cast<std::size_t>(k)] =
          complex_from_json(b[static_cast<std::size_t>(k - 1)]);
    }
    table.tail_bound_rate = j.value("tail_rate", 0.0);
  } catch (const json::exception&) {
    malformed("coefficient table fields are missing or mistyped");
  }
  return table;
}

std::string to_json(const RadiusReport& report) {
  json j;
  j["name"] = report.name;
  j["value"] = report.value;
  j["method"] = method_name(report.method);
  j["residual"] = report.residual;
  j["params"] = params_to_json(report.params);
  j["flags"] = report.flags;
  return j.dump();
}

std::string to_json(const Verdict& verdict) {
  json j;
  j["property_name"] = verdict.property_name;
  j["pass_count"] = verdict.pass_count;
  j["fail_count"] = verdict.fail_count;
  j["worst_margin"] = verdict.worst_margin;
  json witness = json::parse(verdict.witness, nullptr,
                             /*allow_exceptions=*/false);
  j["witness"] = witness.is_discarded() ? json(verdict.witness) : witness;
  if (!verdict.note.empty()) j["note"] = verdict.note;
  return j.dump();
}

std::string majorant_csv(const CoeffTable& table,
                         const std::vector<double>& r_values) {
  std::string out = "r,value,tail\n";
  char line[128];
  for (double r : r_values) {
    const MajorantValue m = majorant(table, r);
    std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g\n", r, m.value,
                  m.tail);
    out += line;
  }
  return out;
}

}  // namespace hmap
