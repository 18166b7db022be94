// Copyright 2026 The hyrec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hyrec: counting, generation, feasibility, reconstruction and verification
// for uniform hypergraphs with regular or span-one degree sequences.
//
// Exit codes: 0 success / feasible, 1 infeasible or unsupported, 2 usage or
// I/O error, 3 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hyrec/consistency.hpp"
#include "hyrec/hypergraph.hpp"
#include "hyrec/io.hpp"
#include "hyrec/numbers.hpp"
#include "hyrec/oracle.hpp"
#include "hyrec/reconstruct.hpp"

namespace {

using namespace hyrec;
using io::Json;
using io::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Largest vertex count accepted from --n/--v before any allocation.
constexpr long long kMaxVertices = 1 << 20;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DegreeSource {
  std::string inline_list;
  std::string file;
  std::optional<long long> n;
  std::optional<long long> v;

  void attach(CLI::App* cmd) {
    cmd->add_option("--degrees", inline_list, "Comma-separated degrees, e.g. 5,5,4");
    cmd->add_option("--degrees-file", file, "File with one degree per line");
    cmd->add_option("--n", n, "Vertex count of a regular sequence (with --v)");
    cmd->add_option("--v", v, "Common degree of a regular sequence (with --n)");
  }

  std::vector<int> load() const {
    const int given = static_cast<int>(!inline_list.empty()) + static_cast<int>(!file.empty()) +
                      static_cast<int>(n.has_value() || v.has_value());
    if (given != 1) {
      throw UsageError("give exactly one of --degrees, --degrees-file, or --n with --v");
    }
    if (!inline_list.empty()) return io::parse_int_list(inline_list);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read " + file);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return io::parse_int_list(text);
    }
    if (!n || !v) throw UsageError("--n and --v go together");
    if (*n < 1 || *n > kMaxVertices) throw UsageError("--n out of range");
    if (*v < 0 || *v > std::numeric_limits<int>::max()) throw UsageError("--v out of range");
    return std::vector<int>(static_cast<std::size_t>(*n), static_cast<int>(*v));
  }
};

void note_reorder(const ClassifiedDegrees& c) {
  if (c.was_reordered) std::cerr << "note: degrees sorted into nonincreasing order\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string render_matrix(const Reconstruction& r, OutputFormat f, int h) {
  switch (f) {
    case OutputFormat::lines: return r.matrix.to_string();
    case OutputFormat::csv: return io::to_csv(r.matrix);
    case OutputFormat::json: {
      Json j = io::reconstruction_json(r);
      if (j["h"].is_null()) j["h"] = h;
      return j.dump() + "\n";
    }
    case OutputFormat::edges: {
      auto g = from_incidence(r.matrix);
      g.edge_size = h;
      return io::to_edge_lines(g);
    }
  }
  return {};
}

std::string render_hypergraph(const Realization& r, OutputFormat f, int h) {
  switch (f) {
    case OutputFormat::edges: return io::to_edge_lines(r.hypergraph);
    case OutputFormat::json: return io::hypergraph_json(r.hypergraph).dump() + "\n";
    default: return render_matrix(r.construction, f, h);
  }
}

// Builds the verification target described by a degree sequence.
std::optional<std::variant<RegularInstance, SpanOneInstance>> instance_for(
    const ClassifiedDegrees& c, int h) {
  const auto& d = c.sorted;
  if (c.cls == DegreeClass::regular) {
    const long long n = static_cast<long long>(d.size());
    if (h == 0) return RegularInstance{static_cast<int>(n), 0, 0, d.front()};
    if ((n * d.front()) % h != 0) return std::nullopt;
    return regular_instance(d, h, n * d.front() / h);
  }
  if (c.cls == DegreeClass::span_one) return span_one_instance(d, h);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular and span-one uniform hypergraph realization via Lyndon words"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  int n = 0;
  int h = 0;
  int k = 0;
  std::string kind = "lyndon";
  std::optional<std::size_t> limit;
  std::string format;
  std::string output;
  std::string matrix_path;
  DegreeSource degrees;

  auto* count = app.add_subcommand("count", "Count fixed-density Lyndon words or necklaces");
  count->add_option("--n", n, "Word length")->required();
  count->add_option("--h", h, "Density (number of ones)")->required();
  count->add_option("--kind", kind, "lyndon | necklace")
      ->check(CLI::IsMember({"lyndon", "necklace"}));

  auto* gen = app.add_subcommand("gen", "List fixed-density Lyndon words or necklaces");
  gen->add_option("--n", n, "Word length")->required();
  gen->add_option("--h", h, "Density (number of ones)")->required();
  gen->add_option("--kind", kind, "lyndon | necklace")
      ->check(CLI::IsMember({"lyndon", "necklace"}));
  gen->add_option("--limit", limit, "Stop after this many words");

  auto* check = app.add_subcommand("check", "Decide feasibility of a degree sequence");
  check->add_option("--h", h, "Edge size (row sum)")->required();
  check->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  degrees.attach(check);

  auto* reconstruct = app.add_subcommand("reconstruct", "Build an incidence matrix");
  reconstruct->add_option("--h", h, "Edge size (row sum)")->required();
  reconstruct->add_option("--format", format, "lines | csv | json | edges");
  reconstruct->add_option("--output", output, "Output path (default stdout)");
  degrees.attach(reconstruct);

  auto* realize_cmd = app.add_subcommand("realize", "Build a hypergraph edge list");
  realize_cmd->add_option("--h", h, "Edge size")->required();
  realize_cmd->add_option("--format", format, "edges | json | lines | csv");
  realize_cmd->add_option("--output", output, "Output path (default stdout)");
  degrees.attach(realize_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a matrix against a degree sequence");
  verify_cmd->add_option("--h", h, "Edge size (row sum)")->required();
  verify_cmd->add_option("--matrix", matrix_path, "Matrix file ('-' for stdin)")->required();
  degrees.attach(verify_cmd);

  auto* bipartite = app.add_subcommand("bipartite", "Twin-free k-regular bipartite graph");
  bipartite->add_option("--n", n, "Vertices per side")->required();
  bipartite->add_option("--k", k, "Degree")->required();
  bipartite->add_option("--format", format, "lines | csv | json");

  auto* oracle = app.add_subcommand("oracle", "Brute-force existence check (n <= 8)");
  oracle->add_option("--h", h, "Edge size (row sum)")->required();
  degrees.attach(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) {
      const DensityClass c{n, h};
      std::cout << (kind == "lyndon" ? count_lyndon(c) : count_necklaces(c)) << '\n';
      return kExitOk;
    }

    if (*gen) {
      FixedDensityStream stream({n, h}, kind == "lyndon" ? WordKind::lyndon : WordKind::necklace);
      std::size_t emitted = 0;
      while (!limit || emitted < *limit) {
        auto w = stream.next();
        if (!w) break;
        std::cout << *w << '\n';
        ++emitted;
      }
      return kExitOk;
    }

    if (*check) {
      const auto result = check_degrees(degrees.load(), h);
      note_reorder(result.degrees);
      const auto& f = result.feasibility;
      const bool unsupported = result.degrees.cls == DegreeClass::unsupported;
      if (format == "text") {
        if (unsupported) {
          std::cout << "unsupported " << result.degrees.reason << '\n';
        } else if (f.feasible) {
          std::cout << "feasible m=" << *f.m << '\n';
        } else {
          std::cout << "infeasible " << to_string(*f.violated) << '\n';
        }
      } else {
        Json j = io::feasibility_json(f);
        j["class"] = unsupported ? "unsupported"
                     : result.degrees.cls == DegreeClass::regular ? "regular"
                                                                 : "span-one";
        if (unsupported) j["reason"] = result.degrees.reason;
        std::cout << j.dump() << '\n';
      }
      return f.feasible ? kExitOk : kExitNo;
    }

    if (*reconstruct || *realize_cmd) {
      const bool as_graph = static_cast<bool>(*realize_cmd);
      const auto fmt = io::parse_format(format.empty() ? (as_graph ? "edges" : "lines") : format);
      if (h < 1) throw UsageError("--h must be >= 1");
      const auto result = realize(degrees.load(), h);
      if (const auto* u = std::get_if<Unsupported>(&result)) {
        std::cerr << "unsupported degree sequence: " << u->reason << '\n';
        return kExitNo;
      }
      if (const auto* inf = std::get_if<Infeasible>(&result)) {
        std::cerr << "infeasible: " << to_string(*inf->feasibility.violated) << '\n';
        return kExitNo;
      }
      const auto& r = std::get<Realization>(result);
      if (r.reordered) std::cerr << "note: degrees sorted into nonincreasing order\n";
      write_output(output, as_graph ? render_hypergraph(r, fmt, h)
                                    : render_matrix(r.construction, fmt, h));
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto cls = classify_degrees(degrees.load());
      note_reorder(cls);
      const auto target = instance_for(cls, h);
      if (!target) {
        std::cout << "invalid: degree sequence has no valid target ("
                  << (cls.reason.empty() ? "non-integral edge count" : cls.reason) << ")\n";
        return kExitNo;
      }
      const auto a = io::parse_matrix(read_input(matrix_path), static_cast<int>(cls.sorted.size()));
      const auto report = std::visit([&](const auto& inst) { return verify(a, inst); }, *target);
      if (report) {
        std::cout << "valid\n";
        return kExitOk;
      }
      std::cout << "invalid: " << report.diagnostic << '\n';
      return kExitNo;
    }

    if (*bipartite) {
      const auto a = twin_free_bipartite(n, k);
      const auto fmt = io::parse_format(format.empty() ? "lines" : format);
      if (fmt == OutputFormat::edges) throw UsageError("edges format is for realizations only");
      write_output(output, render_matrix({a, {}, std::nullopt}, fmt, k));
      return kExitOk;
    }

    if (*oracle) {
      const auto d = degrees.load();
      const auto result = exists_distinct_rows(static_cast<int>(d.size()), h, d);
      Json j;
      j["exists"] = result.exists;
      if (result.witness) {
        Json rows = Json::array();
        for (const auto& w : result.witness->rows()) rows.push_back(w.to_string());
        j["witness"] = std::move(rows);
      } else {
        j["witness"] = nullptr;
      }
      std::cout << j.dump() << '\n';
      return result.exists ? kExitOk : kExitNo;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNo;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
