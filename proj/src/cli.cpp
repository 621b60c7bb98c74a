// Copyright 2026 The qonash Authors
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

#include "qonash/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qonash/error.hpp"
#include "qonash/oracle.hpp"
#include "qonash/variety_io.hpp"

namespace qonash::cli {
namespace {

struct Options {
  std::string input;
  std::string format = "text";
  bool oracle_check = false;
  std::size_t max_dim = 8;
  std::uint64_t max_index = 1'000'000;
};

void print_error(std::ostream& err, const Options& opt, std::string_view code,
                 const std::string& message) {
  if (opt.format == "json") {
    io::Json j;
    j["error"]["code"] = std::string(code);
    j["error"]["message"] = message;
    err << j.dump() << "\n";
  } else {
    err << "error[" << code << "]: " << message << "\n";
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void apply_guards(const std::vector<BranchInput>& branches,
                  const Options& opt) {
  const std::size_t dim = branches.front().spec.dim;
  if (dim > opt.max_dim) {
    throw Error(ErrorCode::kLimitExceeded, "dimension " + std::to_string(dim) +
                                               " exceeds --max-dim " +
                                               std::to_string(opt.max_dim));
  }
  for (const auto& b : branches) {
    std::optional<BranchLattices> lat;
    try {
      lat.emplace(build_tower(b.spec));
    } catch (const Error&) {
      continue;  // reported with full context by the analysis itself
    }
    if (lat->degree_n > Integer(static_cast<unsigned long>(opt.max_index))) {
      throw Error(ErrorCode::kLimitExceeded,
                  "branch '" + b.spec.label + "': lattice index " +
                      lat->degree_n.get_str() + " exceeds --max-index " +
                      std::to_string(opt.max_index));
    }
  }
}

// Returns a description of every disagreement with the brute-force oracle.
std::vector<std::string> oracle_mismatches(const VarietyReport& report) {
  std::vector<std::string> problems;
  for (const auto& b : report.branches) {
    const Lattice& n = b.lattices.N;
    std::int64_t bound = 1;
    for (const auto& f : b.faces) {
      if (f.indices.size() != 1) continue;
      const std::size_t axis = f.indices.axes().front();
      bound = std::max(bound, f.primgens.front()[axis].get_num().get_si());
    }
    for (const auto& f : b.faces) {
      const std::int64_t brute = oracle::brute_face_index(n, f.indices);
      if (Integer(static_cast<long>(brute)) != f.index) {
        problems.push_back("branch '" + b.label + "': face " +
                           f.indices.to_string() + " index " +
                           f.index.get_str() + " but oracle counts " +
                           std::to_string(brute));
      }
    }
    std::vector<RatVec> main_path;
    for (const auto& d : b.s_min) main_path.push_back(d.vector);
    std::sort(main_path.begin(), main_path.end());
    if (oracle::brute_minimal_S(n, bound) != main_path) {
      problems.push_back("branch '" + b.label +
                         "': minimal elements of S differ from the "
                         "exhaustive search");
    }
  }
  return problems;
}

int analyze(const Options& opt, std::istream& in, std::ostream& out,
            std::ostream& err) {
  std::string text;
  try {
    text = read_input(opt.input, in);
  } catch (const std::exception& e) {
    print_error(err, opt, "IO", e.what());
    return kUsage;
  }

  VarietyReport report;
  try {
    const auto branches = io::parse_variety_text(text);
    apply_guards(branches, opt);
    report = analyze_variety(branches);
  } catch (const Error& e) {
    print_error(err, opt, e.code_name(), e.what());
    return kInvalid;
  }

  if (opt.oracle_check) {
    std::vector<std::string> problems;
    try {
      problems = oracle_mismatches(report);
    } catch (const Error& e) {
      print_error(err, opt, e.code_name(), e.what());
      return kOracleMismatch;
    }
    if (!problems.empty()) {
      for (const auto& p : problems)
        print_error(err, opt, "ORACLE_MISMATCH", p);
      return kOracleMismatch;
    }
    err << "oracle-check: " << report.branches.size()
        << " branch(es) agree with exhaustive search\n";
  }

  for (const auto& b : report.branches) {
    for (const auto& d : b.diagnostics) {
      err << severity_name(d.severity) << "[" << d.code << "]: branch '"
          << b.label << "': " << d.message << "\n";
    }
  }
  for (const auto& d : report.diagnostics) {
    err << severity_name(d.severity) << "[" << d.code << "]: " << d.message
        << "\n";
  }

  try {
    out << (opt.format == "json" ? io::format_json(report)
                                 : io::format_text(report));
  } catch (const Error& e) {
    print_error(err, opt, e.code_name(), e.what());
    return kInvalid;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Essential divisors and Nash components of quasi-ordinary "
      "hypersurface germs"};
  app.name("qonash");
  app.require_subcommand(1);

  Options opt;
  auto* cmd =
      app.add_subcommand("analyze", "Analyze a variety description file");
  cmd->add_option("file", opt.input, "Variety JSON file, or - for stdin")
      ->required();
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--oracle-check", opt.oracle_check,
                "Cross-check face indices and minimal vectors by exhaustive "
                "search");
  cmd->add_option("--max-dim", opt.max_dim, "Largest accepted dimension")
      ->check(CLI::Range(std::size_t{1}, kMaxDimension));
  cmd->add_option("--max-index", opt.max_index,
                  "Largest accepted lattice index [M : Z^d]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  return analyze(opt, in, out, err);
}

}  // namespace qonash::cli
