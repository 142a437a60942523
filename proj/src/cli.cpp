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

#include "jameskit/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "jameskit/constructions.hpp"
#include "jameskit/errors.hpp"
#include "jameskit/json_io.hpp"
#include "jameskit/verify.hpp"

namespace jameskit::cli {
namespace {

struct Options {
  std::string inline_json;
  std::string input_path;
  std::string mode;
  std::size_t limit = kDefaultEnumerationLimit;
  double tol = kDefaultTolerance;
  bool pretty = false;
  bool compact = false;

  Index k = 1;
  std::optional<double> a1;
  std::vector<double> radii;
  Index blocks = 1;
  Index m = 1;

  Index n = 8;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct Output {
  Json doc;
  std::string summary;
  int code = kExitOk;
};

void add_format(CLI::App* app, Options& o) {
  app->add_flag("--json", o.compact, "Compact JSON output (default)");
  app->add_flag("--pretty", o.pretty, "Indented JSON output");
}

void add_input(CLI::App* app, Options& o) {
  app->add_option("--inline", o.inline_json, "JSON document given on the command line");
  app->add_option("--input", o.input_path, "File holding the JSON document");
  app->add_option("--mode", o.mode, "Scalar mode")->check(CLI::IsMember({"exact", "float"}));
  app->add_option("--tol", o.tol, "Relative tolerance in float mode")->check(CLI::PositiveNumber);
  add_format(app, o);
}

Json load_document(const Options& o) {
  if (!o.inline_json.empty() && !o.input_path.empty()) throw ValidationError("give either --inline or --input, not both");
  if (!o.inline_json.empty()) return parse_json_text(o.inline_json);
  if (o.input_path.empty()) throw ValidationError("missing input: use --inline JSON or --input FILE");
  std::ifstream in(o.input_path);
  if (!in) throw ValidationError("cannot read " + o.input_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

std::optional<Mode> requested_mode(const Options& o) {
  if (o.mode.empty()) return std::nullopt;
  return parse_mode(o.mode);
}

/// Calls body.template operator()<T>() for the scalar type of the input.
template <class Body>
Output dispatch(const Json& doc, const Options& o, Body&& body) {
  if (resolve_mode(doc, requested_mode(o)) == Mode::kExact) return body.template operator()<Rational>();
  return body.template operator()<double>();
}

template <ScalarType T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v.to_string();
  } else {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }
}

template <ScalarType T>
Json with_mode(Json doc) {
  doc["mode"] = mode_name(mode_of<T>());
  return doc;
}

Output cmd_norm(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto cert = james_norm_sq(vector_from_json<T>(doc));
    return Output{with_mode<T>(certificate_to_json(cert)),
                  "||x||_J^2 = " + show(cert.norm_sq) + ", witness " + cert.witness.to_string()};
  });
}

Output cmd_s_norm(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const T value = s_norm_sq(vector_from_json<T>(doc));
    Json out = {{"norm_sq", scalar_to_json(value)}};
    if constexpr (std::is_same_v<T, double>) out["norm"] = std::sqrt(value);
    return Output{with_mode<T>(out), "||y||_s^2 = " + show(value)};
  });
}

Output cmd_partitions(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto found = enumerate_norming_partitions(vector_from_json<T>(doc), o.limit, o.tol);
    Json list = Json::array();
    for (const auto& p : found.partitions) list.push_back(family_to_json(p));
    Json out = {{"partitions", list}, {"count", found.partitions.size()}, {"truncated", found.truncated}};
    return Output{with_mode<T>(out), std::to_string(found.partitions.size()) + " norming partition(s)" +
                                         (found.truncated ? " (truncated)" : "")};
  });
}

Output cmd_finest(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto p = finest_partition(vector_from_json<T>(doc), o.tol);
    return Output{with_mode<T>({{"partition", family_to_json(p)}}), "finest partition " + p.to_string()};
  });
}

Output cmd_count(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto x = vector_from_json<T>(doc);
    const BigInt count = count_norming_partitions(x, o.tol);
    const auto margin = optimality_margin(x, o.tol);
    Json out = {{"count", count.get_str()}, {"margin", margin ? scalar_to_json(*margin) : Json(nullptr)}};
    return Output{with_mode<T>(out), count.get_str() + " norming partition(s)"};
  });
}

Output cmd_extreme(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto x = vector_from_json<T>(doc);
    if constexpr (std::is_same_v<T, Rational>) {
      const auto cert = is_extreme_BJ(x);
      Json out = {{"extreme", cert.verdict},
                  {"james_sq", scalar_to_json(cert.james_sq)},
                  {"l2_sq", scalar_to_json(cert.l2_sq)},
                  {"failing_interval", cert.failing_interval ? interval_to_json(*cert.failing_interval) : Json(nullptr)}};
      return Output{with_mode<T>(out), std::string(cert.verdict ? "extreme" : "not extreme") + " in B_J"};
    } else {
      const bool verdict = is_extreme_direction(x, o.tol);
      Json out = {{"extreme_direction", verdict},
                  {"advisory", true},
                  {"james_sq", james_norm_sq(x).norm_sq},
                  {"l2_sq", l2_norm_sq(x)}};
      return Output{with_mode<T>(out), std::string(verdict ? "extreme" : "not extreme") +
                                           " direction (float, advisory)"};
    }
  });
}

Output cmd_extreme_js(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto y = vector_from_json<T>(doc);
    const bool direction = is_extreme_direction_Js(y, o.tol);
    if constexpr (std::is_same_v<T, Rational>) {
      const bool verdict = is_extreme_BJs(y);
      return Output{with_mode<T>({{"extreme", verdict}, {"extreme_direction", direction}}),
                    std::string(verdict ? "extreme" : "not extreme") + " in B_Js"};
    } else {
      return Output{with_mode<T>({{"extreme_direction", direction}, {"advisory", true}}),
                    std::string(direction ? "extreme" : "not extreme") + " direction in J_s (float, advisory)"};
    }
  });
}

Output cmd_bidual_norm(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() {
    const auto cert = bidual_norm_sq(bidual_from_json<T>(doc));
    return Output{with_mode<T>(certificate_to_json(cert)),
                  "||x**||^2 = " + show(cert.norm_sq) + ", witness " + cert.witness.to_string()};
  });
}

Output cmd_bidual_extreme(const Options& o) {
  const Json doc = load_document(o);
  if (resolve_mode(doc, requested_mode(o)) != Mode::kExact) {
    throw ModeMismatchError("bidual-extreme decides an exact identity and needs exact mode");
  }
  const auto cert = is_extreme_BJss(bidual_from_json<Rational>(doc));
  Json out = {{"mode", "exact"},
              {"extreme", cert.verdict},
              {"norm_sq", cert.james_sq.to_string()},
              {"l2_sq", cert.l2_sq.to_string()},
              {"failing_interval", cert.failing_interval ? interval_to_json(*cert.failing_interval) : Json(nullptr)}};
  return {out, std::string(cert.verdict ? "extreme" : "not extreme") + " in B_J**"};
}

using DualBody = std::function<Output(const Json&, const Options&)>;

template <template <class> class Op>
Output dual_command(const Options& o) {
  const Json doc = load_document(o);
  return dispatch(doc, o, [&]<ScalarType T>() { return Op<T>::run(functional_from_json<T>(doc), o); });
}

template <class T>
struct DualNormOne {
  static Output run(const DualFunctional<T>& f, const Options& o) {
    const bool v = is_norm_one_D1(f, o.tol);
    return {with_mode<T>({{"norm_one", v}}), std::string(v ? "norm one" : "not norm one")};
  }
};

template <class T>
struct DualExtreme {
  static Output run(const DualFunctional<T>& f, const Options& o) {
    const auto v = is_extreme_BJstar(f, o.tol);
    Json out = {{"extreme", v.extreme}, {"reason", v.extreme ? Json(nullptr) : Json(v.reason)}};
    return {with_mode<T>(out), v.extreme ? "extreme in B_J*" : "not extreme in B_J*: " + v.reason};
  }
};

template <class T>
struct DualGaps {
  static Output run(const DualFunctional<T>& f, const Options&) {
    const auto gaps = gap_profile(f);
    std::string text;
    for (Index g : gaps) text += (text.empty() ? "" : ",") + std::to_string(g);
    return {with_mode<T>({{"gaps", gaps}}), "gaps (" + text + ")"};
  }
};

template <class T>
struct DualClosure {
  static Output run(const DualFunctional<T>& f, const Options& o) {
    const bool v = in_closure_of_extremes(f, o.tol);
    return {with_mode<T>({{"in_closure", v}}), std::string(v ? "in" : "not in") + " the closure of Ext(B_J*)"};
  }
};

template <class T>
struct DualApprox {
  static Output run(const DualFunctional<T>& f, const Options& o) {
    const auto step = approx_extreme_sequence(f, o.m, o.tol);
    Json out = {{"mode", "float"},
                {"m", o.m},
                {"functional", functional_to_json(step.functional)},
                {"distance_bound", step.distance_bound}};
    return {out, "extreme approximation with distance bound " + show(step.distance_bound)};
  }
};

Json construction_vector(const FloatVector& x, double tol) {
  const auto margin = optimality_margin(x, tol);
  return {{"vector", vector_to_json(x)},
          {"count", count_norming_partitions(x, tol).get_str()},
          {"margin", margin ? Json(*margin) : Json(nullptr)}};
}

Output cmd_construct_ek(const Options& o) {
  const auto x = multi_partition_vector(o.k);
  Json out = construction_vector(x, o.tol);
  return {out, "x_" + std::to_string(o.k) + " with " + out["count"].get<std::string>() + " norming partition(s)"};
}

Output cmd_construct_eset(const Options& o) {
  const auto p = e_set_point(o.a1.value_or(0.8));
  Json out = {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}, {"residual", e_set_residual(p)}};
  return {out, "(" + show(p.a1) + ", " + show(p.a2) + ", " + show(p.a3) + ")"};
}

Output cmd_construct_prop65(const Options& o) {
  const auto a = prop65_sequence(o.radii);
  const auto report = check_prop65(o.radii, a);
  Json out = {{"a", a},
              {"identity_residual", report.identity_residual},
              {"min_margin", report.min_margin},
              {"intervals_checked", report.intervals_checked}};
  return {out, std::to_string(a.size()) + " coefficients, min margin " + show(report.min_margin)};
}

Output cmd_construct_blocks(const Options& o) {
  const auto x = o.a1 ? block_product_vector(o.blocks, e_set_point(*o.a1)) : block_product_vector(o.blocks);
  Json out = construction_vector(x, o.tol);
  return {out, std::to_string(o.blocks) + " block(s) with " + out["count"].get<std::string>() + " norming partition(s)"};
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.n = o.n;
  v.trials = o.trials;
  v.seed = o.seed;
  v.threads = o.threads;
  v.bruteforce_cap = bruteforce_cap_from_env();
  return v;
}

Output cmd_verify(const Options& o) {
  const auto report = run_verify(verify_options(o));
  Json suites = Json::array();
  std::size_t failures = 0;
  for (const auto& s : report.suites) {
    failures += s.failures;
    suites.push_back({{"name", s.name},
                      {"trials", s.trials},
                      {"failures", s.failures},
                      {"first_failure", s.first_failure ? Json(*s.first_failure) : Json(nullptr)}});
  }
  Json out = {{"passed", report.passed()}, {"n", o.n}, {"trials", o.trials}, {"seed", o.seed}, {"suites", suites}};
  return {out,
          std::to_string(report.suites.size()) + " suites, " + std::to_string(failures) + " failing trial(s)",
          report.passed() ? kExitOk : kExitInternal};
}

Output cmd_fuzz(const Options& o) {
  const auto report = run_fuzz(verify_options(o));
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches) {
    mismatches.push_back({{"trial", mm.trial},
                          {"vector", parse_json_text(mm.vector_json)},
                          {"dp_norm_sq", mm.dp_norm_sq},
                          {"bruteforce_norm_sq", mm.bruteforce_norm_sq}});
  }
  Json out = {{"trials", report.trials}, {"seed", o.seed}, {"mismatches", mismatches}};
  return {out, std::to_string(report.trials) + " trials, " + std::to_string(report.mismatches.size()) + " mismatch(es)",
          report.mismatches.empty() ? kExitOk : kExitInternal};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Norms, norming partitions and extreme points in James space"};
  app.name("jameskit");
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<Output(const Options&)>>> commands;
  auto input_command = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub, o);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  input_command("norm", "James norm with a norming partition", cmd_norm);
  input_command("s-norm", "Squared-variation norm", cmd_s_norm);
  input_command("partitions", "Enumerate norming partitions", cmd_partitions)
      ->add_option("--limit", o.limit, "Stop after this many partitions");
  input_command("finest", "Finest norming partition", cmd_finest);
  input_command("count", "Count norming partitions", cmd_count);
  input_command("extreme", "Extreme point test for B_J", cmd_extreme);
  input_command("extreme-js", "Extreme point test for B_Js", cmd_extreme_js);
  input_command("bidual-norm", "Norm of a vector of J**", cmd_bidual_norm);
  input_command("bidual-extreme", "Extreme point test for B_J**", cmd_bidual_extreme);

  auto* dual = app.add_subcommand("dual", "Functionals of the form sum alpha_i I_i^*");
  dual->require_subcommand(1);
  auto dual_command_entry = [&](const std::string& name, const std::string& help,
                                std::function<Output(const Options&)> fn) {
    auto* sub = dual->add_subcommand(name, help);
    add_input(sub, o);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  dual_command_entry("norm-one", "Norm-one test", dual_command<DualNormOne>);
  dual_command_entry("extreme", "Extreme point test for B_J*", dual_command<DualExtreme>);
  dual_command_entry("gaps", "Gap profile", dual_command<DualGaps>);
  dual_command_entry("closure", "Closure of the extreme points", dual_command<DualClosure>);
  dual_command_entry("approx", "Extreme functional approximating the input", dual_command<DualApprox>)
      ->add_option("--m", o.m, "Index of the approximating functional")
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Explicit extreme points with many norming partitions");
  construct->require_subcommand(1);
  auto construct_entry = [&](const std::string& name, const std::string& help,
                             std::function<Output(const Options&)> fn) {
    auto* sub = construct->add_subcommand(name, help);
    sub->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    add_format(sub, o);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  construct_entry("ek", "Vector with exactly k norming partitions", cmd_construct_ek)
      ->add_option("--k", o.k, "Number of norming partitions")
      ->required();
  auto* eset = construct_entry("eset", "Point of the E-set", cmd_construct_eset);
  eset->add_option("--a1", o.a1, "First coordinate in (0,1)")->required();
  construct_entry("prop65", "Sequence built from a list of radii", cmd_construct_prop65)
      ->add_option("--r", o.radii, "Comma separated radii")
      ->delimiter(',')
      ->required();
  auto* blocks = construct_entry("blocks", "Block-product vector", cmd_construct_blocks);
  blocks->add_option("--b", o.blocks, "Number of blocks")->required();
  blocks->add_option("--a1", o.a1, "First coordinate of the E-set point (default 0.8)");

  auto suite_command = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "Largest vector length")->check(CLI::PositiveNumber);
    sub->add_option("--trials", o.trials, "Trials per suite");
    sub->add_option("--seed", o.seed, "Seed");
    sub->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
    add_format(sub, o);
    commands.emplace_back(sub, std::move(fn));
  };
  suite_command("verify", "Randomised cross-checks of every module", cmd_verify);
  suite_command("fuzz", "Random vectors, DP against brute force", cmd_fuzz);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      const Output result = fn(o);
      out << (o.pretty ? result.doc.dump(2) : result.doc.dump()) << '\n';
      err << result.summary << '\n';
      return result.code;
    }
    throw InternalError("no command selected");
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ModeMismatchError& e) {
    err << "mode mismatch: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace jameskit::cli
