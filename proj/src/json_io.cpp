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

#include "jameskit/json_io.hpp"

#include <cmath>
#include <string>

#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

Index parse_index(const std::string& key) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw ParseError("coordinate key '" + key + "' is not an integer");
  if (v < 1) throw ValidationError("coordinate index must be >= 1, got " + key);
  return static_cast<Index>(v);
}

Index index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<Index>();
}

template <ScalarType T>
void check_mode_field(const Json& doc) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (doc.contains("mode")) {
    const Mode m = parse_mode(doc.at("mode").get<std::string>());
    if (m != mode_of<T>()) {
      throw ModeMismatchError("document is in " + std::string(mode_name(m)) + " mode, expected " +
                              std::string(mode_name(mode_of<T>())));
    }
  }
}

}  // namespace

Mode parse_mode(std::string_view name) {
  if (name == "exact") return Mode::kExact;
  if (name == "float") return Mode::kFloat;
  throw ParseError("unknown mode '" + std::string(name) + "' (expected exact or float)");
}

Mode resolve_mode(const Json& doc, std::optional<Mode> requested) {
  std::optional<Mode> declared;
  if (doc.is_object() && doc.contains("mode")) {
    if (!doc.at("mode").is_string()) throw ParseError("\"mode\" must be a string");
    declared = parse_mode(doc.at("mode").get<std::string>());
  }
  if (declared && requested && *declared != *requested) {
    throw ModeMismatchError("input is in " + std::string(mode_name(*declared)) + " mode but --mode " +
                            std::string(mode_name(*requested)) + " was given");
  }
  return declared.value_or(requested.value_or(Mode::kExact));
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) throw ModeMismatchError("float literal " + j.dump() + " in exact mode; quote it as \"p/q\"");
  throw ParseError("expected a rational scalar, got " + j.dump());
}

template <>
double scalar_from_json<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() && !text.empty()) return v;
    return Rational::parse(text).to_double();
  }
  throw ParseError("expected a float scalar, got " + j.dump());
}

template <>
Json scalar_to_json<Rational>(const Rational& v) {
  return v.to_string();
}

template <>
Json scalar_to_json<double>(const double& v) {
  if (!std::isfinite(v)) throw InternalError("non-finite float in output");
  return v;
}

template <ScalarType T>
BasicVector<T> vector_from_json(const Json& doc) {
  check_mode_field<T>(doc);
  if (!doc.contains("coords") || !doc.at("coords").is_object()) throw ParseError("vector needs a \"coords\" object");
  std::vector<typename BasicVector<T>::Entry> entries;
  for (const auto& [key, value] : doc.at("coords").items()) {
    entries.push_back({parse_index(key), scalar_from_json<T>(value)});
  }
  return BasicVector<T>::from_entries(std::move(entries));
}

template <ScalarType T>
Json vector_to_json(const BasicVector<T>& x) {
  Json coords = Json::object();
  for (const auto& e : x.entries()) coords[std::to_string(e.index)] = scalar_to_json(e.value);
  return {{"mode", mode_name(mode_of<T>())}, {"coords", coords}};
}

template <ScalarType T>
BidualVector<T> bidual_from_json(const Json& doc) {
  BidualVector<T> out{vector_from_json<T>(doc), T(0)};
  if (doc.contains("omega")) out.omega = scalar_from_json<T>(doc.at("omega"));
  return out;
}

template <ScalarType T>
Json bidual_to_json(const BidualVector<T>& x) {
  Json doc = vector_to_json(x.finite);
  doc["omega"] = scalar_to_json(x.omega);
  return doc;
}

Interval interval_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "omega") return Interval::omega();
    throw ParseError("unknown interval " + j.dump());
  }
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("finite interval must be [lo,hi], got " + j.dump());
    return Interval::finite(index_from_json(j[0], "interval end"), index_from_json(j[1], "interval end"));
  }
  if (j.is_object() && j.contains("tail") && j.size() == 1) {
    return Interval::tail_omega(index_from_json(j.at("tail"), "tail start"));
  }
  throw ParseError("cannot read interval " + j.dump());
}

Json interval_to_json(const Interval& iv) {
  switch (iv.kind()) {
    case Interval::Kind::kFinite:
      return Json::array({iv.lo(), iv.hi()});
    case Interval::Kind::kTailOmega:
      return {{"tail", iv.lo()}};
    case Interval::Kind::kOmegaSingleton:
      return "omega";
  }
  throw InternalError("unknown interval kind");
}

IntervalFamily family_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("interval family must be an array");
  std::vector<Interval> out;
  for (const auto& item : j) out.push_back(interval_from_json(item));
  return IntervalFamily(std::move(out));
}

Json family_to_json(const IntervalFamily& fam) {
  Json out = Json::array();
  for (const auto& iv : fam) out.push_back(interval_to_json(iv));
  return out;
}

template <ScalarType T>
DualFunctional<T> functional_from_json(const Json& doc) {
  check_mode_field<T>(doc);
  if (!doc.contains("terms") || !doc.at("terms").is_array()) throw ParseError("functional needs a \"terms\" array");
  DualFunctional<T> f;
  for (const auto& term : doc.at("terms")) {
    if (!term.is_object() || !term.contains("interval") || !term.contains("alpha")) {
      throw ParseError("functional term needs \"interval\" and \"alpha\"");
    }
    f.terms.push_back({interval_from_json(term.at("interval")), scalar_from_json<T>(term.at("alpha"))});
  }
  return f;
}

template <ScalarType T>
Json functional_to_json(const DualFunctional<T>& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    terms.push_back({{"interval", interval_to_json(t.interval)}, {"alpha", scalar_to_json(t.alpha)}});
  }
  return {{"mode", mode_name(mode_of<T>())}, {"terms", terms}};
}

template <ScalarType T>
Json certificate_to_json(const NormCertificate<T>& cert) {
  Json out = {{"norm_sq", scalar_to_json(cert.norm_sq)}, {"witness", family_to_json(cert.witness)}};
  if constexpr (std::is_same_v<T, double>) out["norm"] = std::sqrt(cert.norm_sq);
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

#define JAMESKIT_INSTANTIATE(T)                                                  \
  template BasicVector<T> vector_from_json<T>(const Json&);                      \
  template Json vector_to_json<T>(const BasicVector<T>&);                        \
  template BidualVector<T> bidual_from_json<T>(const Json&);                     \
  template Json bidual_to_json<T>(const BidualVector<T>&);                       \
  template DualFunctional<T> functional_from_json<T>(const Json&);               \
  template Json functional_to_json<T>(const DualFunctional<T>&);                 \
  template Json certificate_to_json<T>(const NormCertificate<T>&);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
