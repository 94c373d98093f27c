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

#ifndef HMAP_SERIALIZE_HPP
#define HMAP_SERIALIZE_HPP

#include <string>

#include "hmap/boundary.hpp"
#include "hmap/mappings.hpp"
#include "hmap/radii.hpp"
#include "hmap/verify.hpp"

namespace hmap {

// JSON wire formats.  Complex numbers are [re, im] pairs throughout.
//
//   BoundarySpec  {"kind":"exponential","n":1,"scale":[1.0,0.0]}
//                 {"kind":"trig_poly","coeffs":{"3":[2.0,1.0]}}
//                 {"kind":"extremal","n":1,"M":1.0,"alpha":[1,0],"beta":[1,0]}
//                 {"kind":"samples","values":[[re,im],...]}
//   CoeffTable    {"N":...,"a":[[re,im],...],"b":[[re,im],...],"tail_rate":...}
//                 ("a" holds indices 0..N, "b" holds indices 1..N)
//   RadiusReport  {"name":...,"value":...,"method":...,"residual":...,
//                  "params":{...},"flags":[...]}
//   Verdict       {"property_name":...,"pass_count":...,"fail_count":...,
//                  "worst_margin":...,"witness":...}
//
// Doubles are emitted with shortest-round-trip precision, so parsing an
// emitted document reproduces the exact bit pattern.  An infinite exponent
// is encoded as the string "inf".
//
// Parsers throw Error{"MalformedJson"} on any structural problem; the CLI
// maps that to a usage error (exit 2).

std::string to_json(const BoundarySpec& spec);
BoundarySpec boundary_from_json(const std::string& text);

std::string to_json(const CoeffTable& table);
CoeffTable table_from_json(const std::string& text);

std::string to_json(const RadiusReport& report);
std::string to_json(const Verdict& verdict);

/// CSV row block for a majorant curve: header "r,value,tail", one row per
/// sample, 15 significant digits.
std::string majorant_csv(const CoeffTable& table,
                         const std::vector<double>& r_values);

}  // namespace hmap

#endif  // HMAP_SERIALIZE_HPP
