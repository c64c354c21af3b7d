// Copyright 2026 the semilab authors
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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semilab/document.hpp"
#include "semilab/iso.hpp"
#include "semilab/render.hpp"
#include "semilab/report.hpp"
#include "semilab/semigroup.hpp"
#include "semilab/theorems.hpp"

namespace {

using namespace semilab;

// exit codes: 0 success / isomorphic / verified, 1 negative verdict,
// 2 usage error, 3 guard or budget exhaustion
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

BuildOptions options_from_env() {
  BuildOptions options;
  if (const char* value = std::getenv("SEMILAB_MAX_TABLE")) {
    options.max_table_size = std::stoull(value);
  }
  return options;
}

FiniteSemigroup load_semigroup(const std::string& builtin,
                               const std::string& in_path,
                               const BuildOptions& options) {
  if (!builtin.empty()) return builtin_semigroup(builtin, options);
  if (in_path.empty()) {
    throw std::invalid_argument("either --builtin or --in is required");
  }
  return document_to_semigroup(document_from_json(read_file(in_path)), options);
}

// iso arguments accept a document path or a builtin name
FiniteSemigroup load_path_or_builtin(const std::string& arg,
                                     const BuildOptions& options) {
  if (std::filesystem::exists(arg)) {
    return document_to_semigroup(document_from_json(read_file(arg)), options);
  }
  return builtin_semigroup(arg, options);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomically(out_path, text);
  }
}

std::size_t element_index(const FiniteSemigroup& S, const std::string& elem) {
  std::optional<std::size_t> index;
  switch (S.kind()) {
    case ElementKind::transformation:
      index = S.find(parse_transformation(elem, S.degree()));
      break;
    case ElementKind::partial_perm:
      index = S.find(parse_partial_perm(elem, S.degree()));
      break;
    case ElementKind::abstract_table:
      index = S.find_label(elem);
      break;
  }
  if (!index) {
    throw std::invalid_argument("element '" + elem +
                                "' does not belong to the semigroup");
  }
  return *index;
}

int exit_code_for(const VerificationReport& report) {
  if (report.passed()) return kExitOk;
  return report.failures.size() > report.inconclusive ? kExitNegative
                                                      : kExitGuard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semilab: finite transformation and partial-permutation "
               "semigroups, locals, variants, egg-boxes, isomorphism"};
  app.require_subcommand(1);

  std::string out_path, builtin, in_path, elem, format = "ascii";
  std::string gen_kind, arg_a, arg_b, verify_id;
  int gen_n = 0, max_n = 3;
  std::uint64_t budget = kDefaultIsoBudget, seed = 0;

  CLI::App* gen = app.add_subcommand("gen", "enumerate T_n or IS_n");
  gen->add_option("kind", gen_kind, "tn or isn")->required();
  gen->add_option("n", gen_n, "degree")->required();
  gen->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* local = app.add_subcommand("local", "local subsemigroup a S a");
  local->add_option("--builtin", builtin, "builtin name, e.g. tn4 or isn3");
  local->add_option("--in", in_path, "semigroup document");
  local->add_option("--elem", elem, "sandwich element, one-line notation")
      ->required();
  local->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* variant_cmd = app.add_subcommand("variant", "variant (S, *_a)");
  variant_cmd->add_option("--builtin", builtin, "builtin name");
  variant_cmd->add_option("--in", in_path, "semigroup document");
  variant_cmd->add_option("--elem", elem, "sandwich element")->required();
  variant_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* eggbox_cmd = app.add_subcommand("eggbox", "egg-box diagram");
  eggbox_cmd->add_option("--builtin", builtin, "builtin name");
  eggbox_cmd->add_option("--in", in_path, "semigroup document");
  eggbox_cmd->add_option("--format", format, "ascii, dot, or json")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));
  eggbox_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "decide isomorphism of two semigroups");
  iso_cmd->add_option("a", arg_a, "document path or builtin name")->required();
  iso_cmd->add_option("b", arg_b, "document path or builtin name")->required();
  iso_cmd->add_option("--budget", budget, "search node budget");
  iso_cmd->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run verification routines");
  verify->add_option("id", verify_id, "result id or 'all'")->required();
  verify->add_option("--max-n", max_n, "size bound for the sweeps (default 3)");
  verify->add_option("--seed", seed, "seed for the shuffle self-tests");
  verify->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const BuildOptions options = options_from_env();
  try {
    if (gen->parsed()) {
      if (gen_kind != "tn" && gen_kind != "isn") {
        throw std::invalid_argument("kind must be tn or isn");
      }
      const FiniteSemigroup S =
          builtin_semigroup(gen_kind + std::to_string(gen_n), options);
      emit(out_path, document_to_json(semigroup_to_document(S)));
      return kExitOk;
    }
    if (local->parsed()) {
      const FiniteSemigroup S = load_semigroup(builtin, in_path, options);
      const FiniteSemigroup L =
          local_subsemigroup(S, element_index(S, elem), options);
      emit(out_path, document_to_json(semigroup_to_document(L)));
      return kExitOk;
    }
    if (variant_cmd->parsed()) {
      const FiniteSemigroup S = load_semigroup(builtin, in_path, options);
      const FiniteSemigroup V =
          semilab::variant(S, element_index(S, elem), options);
      emit(out_path, document_to_json(semigroup_to_document(V)));
      return kExitOk;
    }
    if (eggbox_cmd->parsed()) {
      const FiniteSemigroup S = load_semigroup(builtin, in_path, options);
      std::string text;
      if (format == "ascii") {
        text = eggbox_to_ascii(S);
      } else if (format == "dot") {
        text = eggbox_to_dot(S);
      } else {
        text = eggbox_to_json(S);
      }
      emit(out_path, text);
      return kExitOk;
    }
    if (iso_cmd->parsed()) {
      const FiniteSemigroup A = load_path_or_builtin(arg_a, options);
      const FiniteSemigroup B = load_path_or_builtin(arg_b, options);
      const IsoResult iso = find_isomorphism(A, B, budget);
      VerificationReport report;
      report.result_id = "iso";
      report.parameters = {{"a", arg_a},
                           {"b", arg_b},
                           {"budget", std::to_string(budget)},
                           {"nodes", std::to_string(iso.nodes)}};
      report.instances = 1;
      report.elapsed_seconds = iso.seconds;
      if (iso.verdict == IsoVerdict::isomorphic) {
        WitnessRecord w;
        w.description = arg_a + " ~ " + arg_b;
        w.map = *iso.witness;
        report.witnesses.push_back(std::move(w));
      } else {
        FailureRecord f;
        f.fields = {{"a", arg_a},
                    {"b", arg_b},
                    {"observed", iso.verdict == IsoVerdict::inconclusive
                                     ? "inconclusive (budget exhausted)"
                                     : "not isomorphic (" + *iso.refutation + ")"},
                    {"expected", "isomorphic"}};
        if (iso.verdict == IsoVerdict::inconclusive) ++report.inconclusive;
        report.failures.push_back(std::move(f));
      }
      emit(out_path, report_to_json(report));
      if (iso.verdict == IsoVerdict::isomorphic) return kExitOk;
      return iso.verdict == IsoVerdict::inconclusive ? kExitGuard : kExitNegative;
    }
    if (verify->parsed()) {
      if (verify_id == "all") {
        std::vector<VerificationReport> reports;
        bool all_passed = true;
        std::size_t failures = 0, inconclusive = 0;
        for (const std::string& id : verification_ids()) {
          VerificationReport report = run_verification(id, max_n, seed);
          std::cerr << id << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                    << report.instances << " instances, " << std::fixed
                    << report.elapsed_seconds << " s)\n";
          all_passed = all_passed && report.passed();
          failures += report.failures.size();
          inconclusive += report.inconclusive;
          reports.push_back(std::move(report));
        }
        emit(out_path, reports_to_json("all", reports));
        if (all_passed) return kExitOk;
        return failures > inconclusive ? kExitNegative : kExitGuard;
      }
      const VerificationReport report = run_verification(verify_id, max_n, seed);
      std::cerr << verify_id << ": " << (report.passed() ? "pass" : "FAIL")
                << " (" << report.instances << " instances)\n";
      emit(out_path, report_to_json(report));
      return exit_code_for(report);
    }
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
