#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "commdetect/commdetect.hpp"

namespace commdetect::cli {

enum class Algorithm { agglomerative, girvan_newman, girvan_newman_static, louvain, fastgreedy };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

// "karate", "edgelist:<path>" or "random:<n>,<p>,<seed>".
struct DatasetSpec {
  enum class Kind { karate, edgelist, random };
  Kind kind = Kind::karate;
  std::filesystem::path path;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

DatasetSpec parse_dataset(std::string_view text);
Graph load_dataset(const DatasetSpec& spec);

// Parameters left unset take the algorithm's default. Setting one that the
// algorithm does not use is an error.
struct RunConfig {
  Algorithm algorithm = Algorithm::louvain;
  DatasetSpec dataset;
  std::optional<LinkageKind> linkage;
  std::optional<bool> self_neighboring;
  std::optional<HslSpec::Mode> hsl_mode;
  std::optional<double> hsl_value;
  std::optional<std::size_t> target_communities;
  std::optional<LouvainVariant> variant;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<std::filesystem::path> out;
};

// Throws ValidationError naming the first parameter the algorithm rejects.
void validate(const RunConfig& config);

struct RunOutcome {
  Partition partition;
  std::optional<double> modularity;
  std::vector<std::filesystem::path> files;
};

// Validates, loads, runs and writes the partition JSON to config.out (plus a
// dendrogram, cut sequence or Q trace next to it, where the algorithm has
// one). Without config.out the partition JSON goes to `log`. Either every
// output file is written or none is.
RunOutcome run(const RunConfig& config, std::ostream& log);

struct BenchRecord {
  std::string label;
  std::vector<double> q_values;
  std::vector<double> runtimes_ms;
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double mean_runtime_ms = 0.0;
};

struct BenchReport {
  std::string environment;
  std::vector<BenchRecord> records;
};

struct BenchConfig {
  Algorithm algorithm = Algorithm::louvain;
  std::vector<LouvainVariant> variants;  // empty: all five
  DatasetSpec dataset;
  std::size_t runs = 100;
  std::uint64_t base_seed = 0;
  std::size_t threads = 1;
  std::optional<std::size_t> target_communities;  // Girvan-Newman only
};

// One record per Louvain variant, or a single record of repeated runs for the
// other algorithms (with default parameters). Timing covers the algorithm
// call only.
BenchReport bench(const BenchConfig& config);

std::string report_to_json(const BenchReport& report);
BenchReport report_from_json(const std::string& text);
void write_report_table(std::ostream& out, const BenchReport& report);

// CSV for plotting. A report yields "variant,run_index,q" rows; a Q trace
// yields "step,q,num_communities" rows.
void write_report_csv(std::ostream& out, const BenchReport& report);
void write_trace_csv(std::ostream& out, std::span<const TraceStep> trace);

// Reads a bench report or Q trace JSON file and writes the matching CSV.
void emit_plot_data(const std::filesystem::path& input, const std::filesystem::path& output);

// Thread cap for bench: COMMDETECT_THREADS when set, else hardware threads.
std::size_t bench_threads_from_env();

// Full command line. Returns the process exit status.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace commdetect::cli
