#include "hbst/bench.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hbst/naive_bst.hpp"
#include "hbst/tree.hpp"

namespace hbst {

using Json = nlohmann::ordered_json;

std::string_view structure_name(Structure s) {
  return s == Structure::kHbst ? "hbst" : "naive_bst";
}

std::optional<Structure> parse_structure(std::string_view name) {
  if (name == "hbst") return Structure::kHbst;
  if (name == "naive_bst") return Structure::kNaiveBst;
  return std::nullopt;
}

bool BenchRecord::same_measurements(const BenchRecord& other) const {
  return structure == other.structure && workload == other.workload && height == other.height &&
         avg_depth == other.avg_depth && comparisons_total == other.comparisons_total &&
         comparisons_per_search == other.comparisons_per_search;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

template <class Index>
void search_all(const Index& s, const std::vector<Key>& keys, std::uint64_t& visited) {
  for (Key k : keys) {
    const SearchOutcome out = s.search(k);
    if (!out.found) throw std::logic_error("inserted key not found during trial");
    visited += out.visited;
  }
}

}  // namespace

BenchRecord run_trial(Structure structure, const WorkloadSpec& spec) {
  const std::vector<Key> keys = generate(spec);
  BenchRecord rec;
  rec.structure = structure;
  rec.workload = spec;

  if (structure == Structure::kHbst) {
    Tree tree(spec.bits);
    auto t0 = Clock::now();
    for (Key k : keys) tree.insert(k);
    rec.build_ns = elapsed_ns(t0);
    t0 = Clock::now();
    search_all(tree, keys, rec.comparisons_total);
    rec.search_ns = elapsed_ns(t0);
    const TreeStats s = tree.stats();
    rec.height = s.height;
    rec.avg_depth = s.avg_live_depth;
  } else {
    NaiveBst bst;
    auto t0 = Clock::now();
    for (Key k : keys) bst.insert(k);
    rec.build_ns = elapsed_ns(t0);
    t0 = Clock::now();
    search_all(bst, keys, rec.comparisons_total);
    rec.search_ns = elapsed_ns(t0);
    const NaiveBst::Stats s = bst.stats();
    rec.height = s.height;
    rec.avg_depth = s.avg_depth;
  }
  rec.comparisons_per_search =
      keys.empty() ? 0.0
                   : static_cast<double>(rec.comparisons_total) / static_cast<double>(keys.size());
  return rec;
}

SweepResult sweep(std::span<const WorkloadSpec> specs, std::span<const Structure> structures,
                  unsigned threads) {
  const std::size_t total = specs.size() * structures.size();
  std::vector<std::optional<BenchRecord>> slots(total);
  std::vector<std::optional<std::string>> failures(total);

  auto run = [&](std::size_t i) {
    try {
      slots[i] = run_trial(structures[i % structures.size()], specs[i / structures.size()]);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };

  if (threads <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads && t < total; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < total;) run(i);
      });
    }
  }

  SweepResult result;
  for (std::size_t i = 0; i < total; ++i) {
    if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    } else {
      result.errors.push_back({i, structures[i % structures.size()],
                               specs[i / structures.size()], failures[i].value_or("unknown")});
    }
  }
  return result;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
      out << structure_name(r.structure) << ',' << workload_name(r.workload.kind) << ','
          << r.workload.bits.bits() << ',' << r.workload.n << ',' << r.workload.seed << ','
          << r.height << ',' << (r.avg_depth ? format_double(*r.avg_depth) : "") << ','
          << r.comparisons_total << ',' << format_double(r.comparisons_per_search) << ','
          << r.build_ns << ',' << r.search_ns << '\n';
    }
    return out.str();
  }

  Json doc = Json::array();
  for (const BenchRecord& r : records) {
    doc.push_back(Json{
        {"structure", structure_name(r.structure)},
        {"workload", workload_name(r.workload.kind)},
        {"bits", r.workload.bits.bits()},
        {"n", r.workload.n},
        {"seed", r.workload.seed},
        {"base", r.workload.base},
        {"height", r.height},
        {"avg_depth", r.avg_depth ? Json(*r.avg_depth) : Json(nullptr)},
        {"comparisons_total", r.comparisons_total},
        {"comparisons_per_search", r.comparisons_per_search},
        {"build_ns", r.build_ns},
        {"search_ns", r.search_ns},
    });
  }
  return doc.dump(2) + "\n";
}

std::vector<BenchRecord> parse_json_report(std::string_view text) {
  std::vector<BenchRecord> records;
  try {
    const Json doc = Json::parse(text);
    if (!doc.is_array()) throw std::runtime_error("report must be a JSON array");
    for (const Json& o : doc) {
      BenchRecord r;
      const auto structure = parse_structure(o.at("structure").get<std::string>());
      const auto kind = parse_workload_kind(o.at("workload").get<std::string>());
      if (!structure || !kind) throw std::runtime_error("unknown structure or workload name");
      r.structure = *structure;
      r.workload.kind = *kind;
      r.workload.bits = KeyWidth(o.at("bits").get<unsigned>());
      r.workload.n = o.at("n").get<std::uint64_t>();
      r.workload.seed = o.at("seed").get<std::uint64_t>();
      r.workload.base = o.at("base").get<Key>();
      r.height = o.at("height").get<int>();
      if (!o.at("avg_depth").is_null()) r.avg_depth = o.at("avg_depth").get<double>();
      r.comparisons_total = o.at("comparisons_total").get<std::uint64_t>();
      r.comparisons_per_search = o.at("comparisons_per_search").get<double>();
      r.build_ns = o.at("build_ns").get<std::uint64_t>();
      r.search_ns = o.at("search_ns").get<std::uint64_t>();
      records.push_back(r);
    }
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  return records;
}

}  // namespace hbst
