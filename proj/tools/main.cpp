// stirnum: exact counting triangles, identity sweeps, and sequence
// transforms on the command line.
//
// Exit codes: 0 = success / all checks pass, 1 = a mathematical
// counterexample or disagreement was found, 2 = usage or resource error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stirnum/identities.hpp"
#include "stirnum/numbers.hpp"
#include "stirnum/oracles.hpp"
#include "stirnum/transforms.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stirnum;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

enum class OutputFormat { plain, csv, json };

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw UsageError("unknown format: " + name);
}

// ---- triangle ----

struct TriangleArgs {
  std::string family = "binomial";
  std::int64_t rows = 0;
  std::string format = "plain";
  std::int64_t cap = default_row_cap;
};

int run_triangle(const TriangleArgs& args) {
  const auto family = parse_family(args.family);
  if (!family) throw UsageError("unknown family: " + args.family);
  if (args.rows < 0) throw UsageError("--rows must be nonnegative");
  if (args.cap < 0) throw UsageError("--cap must be nonnegative");
  const OutputFormat format = parse_format(args.format);

  const TriangleTable table = build_triangle(*family, args.rows, args.cap);

  switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv: {
      const char* sep = (format == OutputFormat::csv) ? "," : " ";
      for (std::int64_t n = 0; n <= table.n_max(); ++n) {
        const auto& row = table.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k > 0) std::cout << sep;
          std::cout << row[k].str();
        }
        std::cout << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      ordered_json doc;
      doc["family"] = std::string(family_name(*family));
      doc["n_max"] = table.n_max();
      ordered_json rows = ordered_json::array();
      for (std::int64_t n = 0; n <= table.n_max(); ++n) {
        ordered_json row = ordered_json::array();
        for (const Count& entry : table.row(n)) row.push_back(entry.str());
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  return exit_ok;
}

// ---- check ----

struct CheckArgs {
  std::vector<std::string> identities;
  std::int64_t n_max = 0;
  std::string format = "plain";
  std::int64_t cap = default_row_cap;
};

std::vector<IdentityId> resolve_identities(
    const std::vector<std::string>& tokens) {
  std::vector<IdentityId> ids;
  for (const std::string& token : tokens) {
    if (token == "all") {
      const auto all = all_identities();
      return {all.begin(), all.end()};
    }
    const auto id = parse_identity(token);
    if (!id) throw UsageError("unknown identity: " + token);
    ids.push_back(*id);
  }
  return ids;
}

void render_check_plain(const CheckReport& report, std::ostream& out) {
  out << identity_name(report.identity)
      << (report.passed ? " PASS" : " FAIL") << " cases="
      << report.cases_checked;
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    out << " n=" << ce.n << " p=";
    if (ce.p) {
      out << *ce.p;
    } else {
      out << "-";
    }
    out << " lhs=" << ce.sides.lhs.str() << " rhs=" << ce.sides.rhs.str();
  }
  out << "\n";
}

ordered_json check_to_json(const CheckReport& report) {
  ordered_json entry;
  entry["identity"] = std::string(identity_name(report.identity));
  entry["status"] = report.passed ? "pass" : "fail";
  entry["cases_checked"] = report.cases_checked;
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    ordered_json bad;
    bad["n"] = ce.n;
    if (ce.p) {
      bad["p"] = *ce.p;
    } else {
      bad["p"] = nullptr;
    }
    bad["lhs"] = ce.sides.lhs.str();
    bad["rhs"] = ce.sides.rhs.str();
    entry["counterexample"] = std::move(bad);
  }
  return entry;
}

int run_check(const CheckArgs& args) {
  if (args.n_max < 0) throw UsageError("--nmax must be nonnegative");
  if (args.n_max > args.cap) {
    throw UsageError("--nmax exceeds row cap " + std::to_string(args.cap));
  }
  const OutputFormat format = parse_format(args.format);
  const std::vector<IdentityId> ids = resolve_identities(args.identities);
  if (ids.empty()) throw UsageError("--identity requires at least one value");

  const TriangleSet tables = TriangleSet::build(args.n_max + 1, args.n_max + 1);
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) reports.push_back(sweep(id, args.n_max, tables));

  bool all_passed = true;
  switch (format) {
    case OutputFormat::plain:
      for (const CheckReport& report : reports) {
        render_check_plain(report, std::cout);
      }
      break;
    case OutputFormat::csv:
      for (const CheckReport& report : reports) {
        std::cout << identity_name(report.identity) << ","
                  << (report.passed ? "pass" : "fail") << ","
                  << report.cases_checked;
        if (report.counterexample) {
          const Counterexample& ce = *report.counterexample;
          std::cout << "," << ce.n << ",";
          if (ce.p) std::cout << *ce.p;
          std::cout << "," << ce.sides.lhs.str() << ","
                    << ce.sides.rhs.str();
        }
        std::cout << "\n";
      }
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["n_max"] = args.n_max;
      ordered_json checks = ordered_json::array();
      for (const CheckReport& report : reports) {
        checks.push_back(check_to_json(report));
      }
      doc["checks"] = std::move(checks);
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  for (const CheckReport& report : reports) all_passed &= report.passed;
  return all_passed ? exit_ok : exit_counterexample;
}

// ---- transform ----

struct TransformArgs {
  std::string direction;
  std::string terms;
};

IntegerSequence parse_terms(const std::string& text) {
  IntegerSequence terms;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream stream(normalized);
  std::string token;
  while (stream >> token) {
    try {
      terms.emplace_back(token);
    } catch (const std::exception&) {
      throw UsageError("not a decimal integer: " + token);
    }
  }
  if (terms.empty()) throw UsageError("--terms requires at least one integer");
  return terms;
}

void print_sequence(const IntegerSequence& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) std::cout << " ";
    std::cout << terms[i].str();
  }
  std::cout << "\n";
}

int run_transform(const TransformArgs& args) {
  const IntegerSequence input = parse_terms(args.terms);
  if (args.direction == "to_a") {
    print_sequence(stirling_first_signed_transform(input));
    return exit_ok;
  }
  if (args.direction == "to_b") {
    print_sequence(stirling_second_transform(input));
    return exit_ok;
  }
  if (args.direction == "roundtrip") {
    const bool ok = verify_inversion_roundtrip(input);
    std::cout << (ok ? "ROUNDTRIP-OK" : "ROUNDTRIP-FAIL") << "\n";
    return ok ? exit_ok : exit_counterexample;
  }
  throw UsageError("unknown direction: " + args.direction);
}

// ---- oracle-compare ----

struct OracleArgs {
  std::int64_t max_partitions = partition_oracle_cap;
  std::int64_t max_cycles = cycle_oracle_cap;
  std::int64_t max_subsets = subset_oracle_cap;
};

int run_oracle_compare(const OracleArgs& args) {
  struct Domain {
    const char* label;
    TriangleFamily family;
    std::int64_t n_max;
    std::int64_t cap;
    Count (*oracle)(std::int64_t, std::int64_t);
  };
  const Domain domains[] = {
      {"partitions", TriangleFamily::stirling_second, args.max_partitions,
       partition_oracle_cap, count_set_partitions},
      {"cycles", TriangleFamily::stirling_first_unsigned, args.max_cycles,
       cycle_oracle_cap, count_permutations_by_cycles},
      {"subsets", TriangleFamily::binomial, args.max_subsets,
       subset_oracle_cap, count_subsets},
  };

  for (const Domain& domain : domains) {
    if (domain.n_max < 0 || domain.n_max > domain.cap) {
      throw UsageError(std::string(domain.label) + " bound must be in 0.." +
                       std::to_string(domain.cap));
    }
  }

  std::uint64_t total = 0;
  for (const Domain& domain : domains) {
    const TriangleTable table =
        build_triangle(domain.family, domain.n_max, domain.cap);
    std::uint64_t entries = 0;
    for (std::int64_t n = 0; n <= domain.n_max; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const Count expected = domain.oracle(n, k);
        ++entries;
        if (table.entry(n, k) != expected) {
          std::cout << domain.label << " MISMATCH n=" << n << " k=" << k
                    << " triangle=" << table.entry(n, k).str()
                    << " oracle=" << expected.str() << "\n";
          return exit_counterexample;
        }
      }
    }
    total += entries;
    std::cout << domain.label << " nmax=" << domain.n_max
              << " entries=" << entries << " OK\n";
  }
  std::cout << "total entries=" << total << " OK\n";
  return exit_ok;
}

// ---- replay-proof ----

struct ReplayArgs {
  std::int64_t p = 0;
  std::int64_t n_max = 0;
  std::int64_t cap = default_row_cap;
};

void render_step(const char* label, const CheckReport& report) {
  std::cout << label << (report.passed ? " PASS" : " FAIL");
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    std::cout << " n=" << ce.n << " got=" << ce.sides.lhs.str()
              << " want=" << ce.sides.rhs.str();
  }
  std::cout << "\n";
}

int run_replay(const ReplayArgs& args) {
  if (args.p < 0 || args.n_max < 0 || args.p > args.n_max) {
    throw UsageError("need 0 <= p <= nmax");
  }
  if (args.n_max > args.cap) {
    throw UsageError("--nmax exceeds row cap " + std::to_string(args.cap));
  }
  const ProofReplayReport report = replay_proof_identity_2(args.p, args.n_max);
  render_step("STEP1", report.step1);
  render_step("STEP2", report.step2);
  return report.passed() ? exit_ok : exit_counterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stirling and binomial triangles, identity sweeps, and "
               "sequence transforms"};
  app.require_subcommand(1);

  TriangleArgs triangle_args;
  CLI::App* triangle = app.add_subcommand(
      "triangle", "print rows 0..N of one counting triangle");
  triangle
      ->add_option("--family", triangle_args.family,
                   "binomial | stirling_first_unsigned | stirling_second")
      ->required();
  triangle->add_option("--rows", triangle_args.rows, "highest row to print")
      ->required();
  triangle->add_option("--format", triangle_args.format, "plain | csv | json");
  triangle->add_option("--cap", triangle_args.cap, "row resource cap");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "sweep identities exhaustively up to --nmax");
  check
      ->add_option("--identity", check_args.identities,
                   "identity id (repeatable) or 'all'")
      ->required();
  check->add_option("--nmax", check_args.n_max, "largest n to check")
      ->required();
  check->add_option("--format", check_args.format, "plain | csv | json");
  check->add_option("--cap", check_args.cap, "row resource cap");

  TransformArgs transform_args;
  CLI::App* transform = app.add_subcommand(
      "transform", "apply the inverse-pair sequence transforms");
  transform
      ->add_option("--direction", transform_args.direction,
                   "to_a | to_b | roundtrip")
      ->required();
  transform
      ->add_option("--terms", transform_args.terms,
                   "integer terms, space or comma separated (one argument)")
      ->required();

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle-compare",
      "compare triangle recurrences against enumeration oracles");
  oracle->add_option("--max-partitions", oracle_args.max_partitions,
                     "second-kind comparison bound (<= 12)");
  oracle->add_option("--max-cycles", oracle_args.max_cycles,
                     "first-kind comparison bound (<= 9)");
  oracle->add_option("--max-subsets", oracle_args.max_subsets,
                     "binomial comparison bound (<= 20)");

  ReplayArgs replay_args;
  CLI::App* replay = app.add_subcommand(
      "replay-proof",
      "two-step transform derivation check for a fixed column p");
  replay->add_option("--p", replay_args.p, "column parameter")->required();
  replay->add_option("--nmax", replay_args.n_max, "sequence length - 1")
      ->required();
  replay->add_option("--cap", replay_args.cap, "row resource cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (triangle->parsed()) return run_triangle(triangle_args);
    if (check->parsed()) return run_check(check_args);
    if (transform->parsed()) return run_transform(transform_args);
    if (oracle->parsed()) return run_oracle_compare(oracle_args);
    if (replay->parsed()) return run_replay(replay_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
