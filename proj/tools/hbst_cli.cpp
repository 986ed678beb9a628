// hbst: demos, validation, differential fuzzing, benchmarking and export
// for the hidden binary search tree.
//
// Exit codes: 0 success, 1 domain failure (invalid tree, oracle mismatch),
// 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hbst/hbst.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
}

hbst::Tree figure_tree(int figure) {
  const hbst::KeyWidth width(4);
  if (figure == 1) return hbst::build_ideal_tree(width);
  hbst::Tree tree(width);
  for (hbst::Key k = 0; k < 16; ++k) tree.insert(k);
  return tree;
}

struct DemoOptions {
  int figure = 2;
  bool dump = false;
  std::vector<hbst::Key> lazy_deletes;
  std::string out;
};

int run_demo(const DemoOptions& opt) {
  hbst::Tree tree = figure_tree(opt.figure);
  for (hbst::Key k : opt.lazy_deletes) {
    if (tree.lazy_delete(k) == hbst::DeleteOutcome::kNotFound) {
      std::cerr << "hbst: key " << k << " not in the tree\n";
      return kExitUsage;
    }
  }
  write_output(opt.dump ? hbst::serialize(tree) : hbst::render_listing(tree), opt.out);
  return kExitOk;
}

int run_validate(const std::string& path) {
  hbst::Tree tree = hbst::parse_document(read_file(path));
  const hbst::ValidationReport report = hbst::validate(tree);
  std::cout << hbst::format_report(report);
  return report.valid() ? kExitOk : kExitDomain;
}

int run_dot(const std::string& path, const std::string& out) {
  const hbst::Tree tree = hbst::deserialize(read_file(path));
  write_output(hbst::render_dot(tree), out);
  return kExitOk;
}

struct BenchOptions {
  std::vector<std::string> workloads{"ascending"};
  std::uint64_t n = 0;
  unsigned bits = 32;
  std::uint64_t seed = 0;
  hbst::Key base = 0;
  std::vector<std::string> structures{"hbst", "naive_bst"};
  unsigned trials = 1;
  unsigned threads = 1;
  std::string format = "csv";
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  const hbst::KeyWidth width(opt.bits);
  std::vector<hbst::WorkloadSpec> specs;
  for (const std::string& name : opt.workloads) {
    const hbst::WorkloadKind kind = *hbst::parse_workload_kind(name);
    for (unsigned t = 0; t < opt.trials; ++t) {
      hbst::WorkloadSpec spec{kind, opt.n, width, opt.seed + t, opt.base};
      try {
        hbst::check_workload(spec);
      } catch (const hbst::WorkloadError& e) {
        std::cerr << "hbst: error: " << e.what() << "\n";
        return kExitUsage;
      }
      specs.push_back(spec);
    }
  }
  std::vector<hbst::Structure> structures;
  for (const std::string& name : opt.structures) structures.push_back(*hbst::parse_structure(name));

  const hbst::SweepResult result = hbst::sweep(specs, structures, opt.threads);
  const auto format = opt.format == "json" ? hbst::ReportFormat::kJson : hbst::ReportFormat::kCsv;
  write_output(hbst::emit_report(result.records, format), opt.out);
  for (const hbst::TrialError& e : result.errors) {
    std::cerr << "hbst: trial " << e.index << " (" << hbst::structure_name(e.structure) << ", "
              << hbst::workload_name(e.workload.kind) << ") failed: " << e.message << "\n";
  }
  return result.errors.empty() ? kExitOk : kExitDomain;
}

int run_oracle(const hbst::DifferentialConfig& config) {
  const hbst::DifferentialSummary summary = hbst::run_differential(config);
  std::cout << hbst::format_summary(summary);
  return summary.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden binary search tree toolkit"};
  app.require_subcommand(1);

  DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo", "Print the B=4 midpoint tree (1) or HBST of 0..15 (2)");
  demo_cmd->add_option("--figure", demo.figure, "Which tree to build")->check(CLI::IsMember({1, 2}));
  demo_cmd->add_flag("--dump", demo.dump, "Emit the tree document instead of the listing");
  demo_cmd->add_option("--lazy-delete", demo.lazy_deletes, "Tombstone these keys first");
  demo_cmd->add_option("--out", demo.out, "Write to a file instead of stdout");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a tree document's structural rules");
  validate_cmd->add_option("input", validate_path, "Tree document")->required();

  std::string dot_path;
  std::string dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "Render a tree document as a Graphviz digraph");
  dot_cmd->add_option("input", dot_path, "Tree document")->required();
  dot_cmd->add_option("--out", dot_out, "Write to a file instead of stdout");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run workload trials and emit a report");
  bench_cmd->add_option("--workload", bench.workloads, "ascending|descending|random|clustered")
      ->delimiter(',')
      ->check(CLI::IsMember({"ascending", "descending", "random", "clustered"}));
  bench_cmd->add_option("--n", bench.n, "Distinct keys per trial")->required();
  bench_cmd->add_option("--bits", bench.bits, "Key width B")->check(CLI::Range(1u, 64u));
  bench_cmd->add_option("--seed", bench.seed, "First trial seed; trial t uses seed + t");
  bench_cmd->add_option("--base", bench.base, "Start of the clustered interval");
  bench_cmd->add_option("--structure", bench.structures, "hbst|naive_bst")
      ->delimiter(',')
      ->check(CLI::IsMember({"hbst", "naive_bst"}));
  bench_cmd->add_option("--trials", bench.trials, "Trials per workload")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "Trials run concurrently")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--out", bench.out, "Write to a file instead of stdout");

  hbst::DifferentialConfig oracle;
  std::uint64_t oracle_ops = oracle.ops;
  unsigned oracle_bits = oracle.bits.bits();
  auto* oracle_cmd = app.add_subcommand("oracle", "Differential test against a set oracle");
  oracle_cmd->add_option("--ops", oracle_ops, "Number of operations")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--bits", oracle_bits, "Key width B")->check(CLI::Range(1u, 64u));
  oracle_cmd->add_option("--seed", oracle.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*demo_cmd) return run_demo(demo);
    if (*validate_cmd) return run_validate(validate_path);
    if (*dot_cmd) return run_dot(dot_path, dot_out);
    if (*bench_cmd) return run_bench(bench);
    if (*oracle_cmd) {
      oracle.ops = oracle_ops;
      oracle.bits = hbst::KeyWidth(oracle_bits);
      return run_oracle(oracle);
    }
  } catch (const IoError& e) {
    std::cerr << "hbst: I/O error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hbst::DocumentError& e) {
    std::cerr << "hbst: malformed document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hbst::ValidationError& e) {
    std::cerr << "hbst: " << e.what();
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "hbst: error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
