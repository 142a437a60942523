// Copyright 2026 The jameskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding of vectors, intervals, functionals and certificates.
//
//   vector      {"mode":"exact","coords":{"1":"2/3","3":"-1"}}
//   bidual      the vector object plus "omega":"1/2"
//   interval    [lo,hi] | {"tail":k} | "omega"
//   functional  {"mode":...,"terms":[{"interval":[1,2],"alpha":"2/3"}]}
//
// Exact scalars are written as "p/q" strings and read from strings or JSON
// integers; a JSON float in exact mode is a mode mismatch. Float scalars
// are JSON numbers.

#ifndef JAMESKIT_JSON_IO_HPP
#define JAMESKIT_JSON_IO_HPP

#include <optional>

#include "json.hpp"

#include "jameskit/bidual.hpp"
#include "jameskit/dual.hpp"

namespace jameskit {

using Json = nlohmann::json;

/// Mode named by doc["mode"], checked against `requested` when both exist.
/// Defaults to exact. ModeMismatchError on disagreement.
Mode resolve_mode(const Json& doc, std::optional<Mode> requested);

Mode parse_mode(std::string_view name);

template <ScalarType T>
T scalar_from_json(const Json& j);
template <ScalarType T>
Json scalar_to_json(const T& v);

template <ScalarType T>
BasicVector<T> vector_from_json(const Json& doc);
template <ScalarType T>
Json vector_to_json(const BasicVector<T>& x);

template <ScalarType T>
BidualVector<T> bidual_from_json(const Json& doc);
template <ScalarType T>
Json bidual_to_json(const BidualVector<T>& x);

Interval interval_from_json(const Json& j);
Json interval_to_json(const Interval& iv);

IntervalFamily family_from_json(const Json& j);
Json family_to_json(const IntervalFamily& fam);

template <ScalarType T>
DualFunctional<T> functional_from_json(const Json& doc);
template <ScalarType T>
Json functional_to_json(const DualFunctional<T>& f);

/// {"norm_sq":..., "witness":[...]}, plus "norm" in float mode.
template <ScalarType T>
Json certificate_to_json(const NormCertificate<T>& cert);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json_text(const std::string& text);

}  // namespace jameskit

#endif  // JAMESKIT_JSON_IO_HPP
