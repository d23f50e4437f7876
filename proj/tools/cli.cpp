#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace commdetect::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::agglomerative: return "agglomerative";
    case Algorithm::girvan_newman: return "girvan-newman";
    case Algorithm::girvan_newman_static: return "girvan-newman-static";
    case Algorithm::louvain: return "louvain";
    case Algorithm::fastgreedy: return "fastgreedy";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::agglomerative, Algorithm::girvan_newman, Algorithm::girvan_newman_static,
                 Algorithm::louvain, Algorithm::fastgreedy}) {
    if (name == to_string(a)) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

DatasetSpec parse_dataset(std::string_view text) {
  DatasetSpec spec;
  if (text == "karate") return spec;
  constexpr std::string_view kEdgeList = "edgelist:";
  constexpr std::string_view kRandom = "random:";
  if (text.substr(0, kEdgeList.size()) == kEdgeList) {
    spec.kind = DatasetSpec::Kind::edgelist;
    spec.path = std::string(text.substr(kEdgeList.size()));
    if (spec.path.empty()) throw ValidationError("edgelist dataset needs a path");
    return spec;
  }
  if (text.substr(0, kRandom.size()) == kRandom) {
    std::string_view rest = text.substr(kRandom.size());
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw ValidationError("random dataset must be random:<n>,<p>,<seed>");
    spec.kind = DatasetSpec::Kind::random;
    spec.n = parse_number<std::size_t>(rest.substr(0, c1), "node count");
    spec.p = parse_number<double>(rest.substr(c1 + 1, c2 - c1 - 1), "edge probability");
    spec.seed = parse_number<std::uint64_t>(rest.substr(c2 + 1), "seed");
    return spec;
  }
  throw ValidationError("unknown dataset '" + std::string(text) + "'");
}

Graph load_dataset(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetSpec::Kind::karate: return karate_club();
    case DatasetSpec::Kind::edgelist: return load_edge_list(spec.path);
    case DatasetSpec::Kind::random: return random_graph(spec.n, spec.p, spec.seed);
  }
  throw ValidationError("unknown dataset kind");
}

void validate(const RunConfig& c) {
  const bool agglo = c.algorithm == Algorithm::agglomerative;
  const bool divisive = c.algorithm == Algorithm::girvan_newman || c.algorithm == Algorithm::girvan_newman_static;
  const bool lv = c.algorithm == Algorithm::louvain;
  auto reject = [&](bool present, bool allowed, std::string_view flag) {
    if (present && !allowed) {
      throw ValidationError("--" + std::string(flag) + " does not apply to " + std::string(to_string(c.algorithm)));
    }
  };
  reject(c.linkage.has_value(), agglo, "linkage");
  reject(c.self_neighboring.has_value(), agglo, "self-neighboring");
  reject(c.hsl_mode.has_value(), agglo, "hsl-mode");
  reject(c.hsl_value.has_value(), agglo, "hsl-value");
  reject(c.target_communities.has_value(), divisive, "target-communities");
  reject(c.variant.has_value(), lv, "variant");
  reject(c.seed.has_value(), lv, "seed");
  reject(c.runs.has_value(), false, "runs");

  if (c.hsl_value) {
    const HslSpec spec{c.hsl_mode.value_or(HslSpec::Mode::relative), *c.hsl_value};
    if (spec.mode == HslSpec::Mode::relative && !(spec.value >= 0.0 && spec.value <= 1.0)) {
      throw ValidationError("--hsl-value must lie in [0, 1] for relative mode");
    }
    if (spec.mode == HslSpec::Mode::absolute && (spec.value < 0.0 || spec.value != static_cast<double>(static_cast<std::int64_t>(spec.value)))) {
      throw ValidationError("--hsl-value must be a non-negative integer for absolute mode");
    }
  }
  if (c.target_communities && *c.target_communities == 0) {
    throw ValidationError("--target-communities must be positive");
  }
  if (c.dataset.kind == DatasetSpec::Kind::random && !(c.dataset.p >= 0.0 && c.dataset.p <= 1.0)) {
    throw ValidationError("random dataset edge probability must lie in [0, 1]");
  }
}

namespace {

fs::path sibling(const fs::path& out, std::string_view suffix) {
  fs::path stem = out;
  stem.replace_extension();
  return fs::path(stem.string() + std::string(suffix));
}

// Writes every file or none: contents go to temporaries first and are
// renamed into place only when all of them were written.
void write_all(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const auto& [path, content] : files) {
    fs::path tmp = path;
    tmp += ".tmp";
    temps.push_back(tmp);
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << content;
    if (content.empty() || content.back() != '\n') f << '\n';
    f.close();
    if (!f) {
      cleanup();
      throw Error("cannot write '" + path.string() + "'");
    }
  }
  std::vector<fs::path> placed;
  for (std::size_t k = 0; k < files.size(); ++k) {
    std::error_code ec;
    fs::rename(temps[k], files[k].first, ec);
    if (ec) {
      for (const auto& p : placed) fs::remove(p, ec);
      cleanup();
      throw Error("cannot write '" + files[k].first.string() + "': " + ec.message());
    }
    placed.push_back(files[k].first);
  }
}

}  // namespace

RunOutcome run(const RunConfig& config, std::ostream& log) {
  validate(config);
  const Graph g = load_dataset(config.dataset);
  const bool has_edges = g.total_weight() > 0.0;

  RunOutcome outcome;
  std::vector<std::pair<fs::path, std::string>> extra;
  auto add_extra = [&](std::string_view suffix, std::string content) {
    if (config.out) extra.emplace_back(sibling(*config.out, suffix), std::move(content));
  };

  switch (config.algorithm) {
    case Algorithm::agglomerative: {
      const Dendrogram d = agglomerate(g, config.linkage.value_or(LinkageKind::complete),
                                       config.self_neighboring.value_or(false));
      outcome.partition = cut(d, {config.hsl_mode.value_or(HslSpec::Mode::relative), config.hsl_value.value_or(0.5)});
      add_extra(".dendrogram.json", dendrogram_to_json(d));
      break;
    }
    case Algorithm::girvan_newman:
    case Algorithm::girvan_newman_static: {
      const std::size_t target = config.target_communities.value_or(2);
      const DivisiveResult r = config.algorithm == Algorithm::girvan_newman ? girvan_newman(g, target)
                                                                          : girvan_newman_static(g, target);
      outcome.partition = r.partition;
      add_extra(".cuts.json", cuts_to_json(r.cuts));
      break;
    }
    case Algorithm::louvain: {
      const LouvainResult r = louvain(g, config.variant.value_or(LouvainVariant::Normal), config.seed.value_or(0));
      outcome.partition = r.partition;
      break;
    }
    case Algorithm::fastgreedy: {
      const FastGreedyResult r = fastgreedy(g);
      outcome.partition = r.best;
      add_extra(".dendrogram.json", dendrogram_to_json(r.dendrogram));
      add_extra(".trace.json", trace_to_json(r.trace));
      break;
    }
  }
  if (has_edges) outcome.modularity = modularity(g, outcome.partition);

  const std::string partition_json = partition_to_json(outcome.partition, outcome.modularity);
  if (config.out) {
    std::vector<std::pair<fs::path, std::string>> files{{*config.out, partition_json}};
    files.insert(files.end(), extra.begin(), extra.end());
    write_all(files);
    for (const auto& f : files) outcome.files.push_back(f.first);
  } else {
    log << partition_json << '\n';
  }
  log << "communities: " << outcome.partition.num_communities() << '\n';
  if (outcome.modularity) {
    log << "modularity: " << std::setprecision(10) << *outcome.modularity << '\n';
  } else {
    log << "modularity: undefined (graph has no edges)\n";
  }
  return outcome;
}

namespace {

BenchRecord summarise(std::string label, std::vector<double> q, std::vector<double> ms) {
  BenchRecord r{std::move(label), std::move(q), std::move(ms)};
  if (r.q_values.empty()) return r;
  const double n = static_cast<double>(r.q_values.size());
  r.max = *std::max_element(r.q_values.begin(), r.q_values.end());
  r.min = *std::min_element(r.q_values.begin(), r.q_values.end());
  double sum = 0.0;
  for (double q : r.q_values) sum += q;
  r.mean = std::clamp(sum / n, r.min, r.max);
  double total_ms = 0.0;
  for (double t : r.runtimes_ms) total_ms += t;
  r.mean_runtime_ms = total_ms / n;
  return r;
}

std::string host_description() {
  std::ostringstream s;
  s << "commdetect " << "C++" << __cplusplus / 100 % 100 << ", " << std::thread::hardware_concurrency()
    << " hardware threads";
  return s.str();
}

}  // namespace

BenchReport bench(const BenchConfig& config) {
  if (config.runs == 0) throw ValidationError("--runs must be at least 1");
  if (config.algorithm != Algorithm::louvain && !config.variants.empty()) {
    throw ValidationError("--variant applies to louvain only");
  }
  const bool divisive = config.algorithm == Algorithm::girvan_newman || config.algorithm == Algorithm::girvan_newman_static;
  if (config.target_communities && !divisive) {
    throw ValidationError("--target-communities does not apply to " + std::string(to_string(config.algorithm)));
  }
  const Graph g = load_dataset(config.dataset);

  BenchReport report;
  report.environment = host_description();
  if (config.algorithm == Algorithm::louvain) {
    std::vector<LouvainVariant> variants = config.variants;
    if (variants.empty()) {
      variants = {LouvainVariant::Normal, LouvainVariant::Total, LouvainVariant::NoMerge,
                  LouvainVariant::TotalNoMerge, LouvainVariant::Exp};
    }
    for (auto v : variants) {
      RunStats s = run_stats(g, v, config.runs, config.base_seed, config.threads);
      report.records.push_back(summarise(std::string(to_string(v)), std::move(s.q_values), std::move(s.runtimes_ms)));
    }
    return report;
  }

  std::vector<double> q;
  std::vector<double> ms;
  for (std::size_t r = 0; r < config.runs; ++r) {
    Partition p;
    const auto start = std::chrono::steady_clock::now();
    switch (config.algorithm) {
      case Algorithm::agglomerative:
        p = cut(agglomerate(g, LinkageKind::complete, false), {HslSpec::Mode::relative, 0.5});
        break;
      case Algorithm::girvan_newman:
        p = girvan_newman(g, config.target_communities.value_or(2)).partition;
        break;
      case Algorithm::girvan_newman_static:
        p = girvan_newman_static(g, config.target_communities.value_or(2)).partition;
        break;
      case Algorithm::fastgreedy:
        p = fastgreedy(g).best;
        break;
      case Algorithm::louvain:
        break;
    }
    const auto stop = std::chrono::steady_clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    q.push_back(modularity(g, p));
  }
  report.records.push_back(summarise(std::string(to_string(config.algorithm)), std::move(q), std::move(ms)));
  return report;
}

std::string report_to_json(const BenchReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"variant", r.label},
                       {"runs", r.q_values.size()},
                       {"q_values", r.q_values},
                       {"max", r.max},
                       {"min", r.min},
                       {"mean", r.mean},
                       {"mean_runtime_ms", r.mean_runtime_ms}});
  }
  return json{{"environment", report.environment}, {"records", records}}.dump(2);
}

BenchReport report_from_json(const std::string& text) {
  try {
    const json in = json::parse(text);
    BenchReport report;
    report.environment = in.value("environment", "");
    for (const auto& r : in.at("records")) {
      BenchRecord rec;
      rec.label = r.at("variant").get<std::string>();
      rec.q_values = r.at("q_values").get<std::vector<double>>();
      rec.max = r.value("max", 0.0);
      rec.min = r.value("min", 0.0);
      rec.mean = r.value("mean", 0.0);
      rec.mean_runtime_ms = r.value("mean_runtime_ms", 0.0);
      report.records.push_back(std::move(rec));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid bench report: ") + e.what());
  }
}

void write_report_table(std::ostream& out, const BenchReport& report) {
  const std::ios::fmtflags flags = out.flags();
  out << std::left << std::setw(14) << "Label" << std::right << std::setw(6) << "Runs" << std::setw(12)
      << "Max. Score" << std::setw(12) << "Min Score" << std::setw(12) << "Mean" << std::setw(20)
      << "Avg. runtime (ms)" << '\n';
  out << std::fixed;
  for (const auto& r : report.records) {
    out << std::left << std::setw(14) << r.label << std::right << std::setw(6) << r.q_values.size()
        << std::setprecision(5) << std::setw(12) << r.max << std::setw(12) << r.min << std::setw(12) << r.mean
        << std::setprecision(3) << std::setw(20) << r.mean_runtime_ms << '\n';
  }
  out.flags(flags);
}

void write_report_csv(std::ostream& out, const BenchReport& report) {
  out << "variant,run_index,q\n" << std::setprecision(17);
  for (const auto& r : report.records) {
    for (std::size_t k = 0; k < r.q_values.size(); ++k) out << r.label << ',' << k << ',' << r.q_values[k] << '\n';
  }
}

void write_trace_csv(std::ostream& out, std::span<const TraceStep> trace) {
  out << "step,q,num_communities\n" << std::setprecision(17);
  for (const auto& t : trace) out << t.step << ',' << t.q << ',' << t.num_communities << '\n';
}

void emit_plot_data(const fs::path& input, const fs::path& output) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Error("cannot open '" + input.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::ostringstream csv;
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, "'" + input.string() + "' is not JSON: " + e.what());
  }
  if (parsed.is_object() && parsed.contains("records")) {
    write_report_csv(csv, report_from_json(text));
  } else if (parsed.is_array()) {
    std::vector<TraceStep> trace;
    try {
      for (const auto& t : parsed) {
        trace.push_back({t.at("step").get<std::size_t>(), t.value("i", Label{0}), t.value("j", Label{0}),
                         t.value("dq", 0.0), t.at("q").get<double>(), t.at("num_communities").get<std::size_t>()});
      }
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("invalid Q trace: ") + e.what());
    }
    write_trace_csv(csv, trace);
  } else {
    throw ParseError(0, "'" + input.string() + "' is neither a bench report nor a Q trace");
  }
  write_all({{output, csv.str()}});
}

std::size_t bench_threads_from_env() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COMMDETECT_THREADS"); env && *env) {
    const auto cap = parse_number<std::size_t>(env, "COMMDETECT_THREADS");
    threads = std::clamp<std::size_t>(cap, 1, threads);
  }
  return threads;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Community detection toolkit"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one dataset");
  std::string algorithm = "louvain";
  std::string dataset = "karate";
  std::string linkage;
  bool self_neighboring = false;
  std::string hsl_mode;
  double hsl_value = 0.0;
  std::size_t target = 0;
  std::string variant;
  std::uint64_t seed = 0;
  std::size_t runs = 0;
  std::string out_path;
  run_cmd->add_option("--algorithm", algorithm, "agglomerative | girvan-newman | girvan-newman-static | louvain | fastgreedy");
  run_cmd->add_option("--dataset", dataset, "karate | edgelist:<path> | random:<n>,<p>,<seed>");
  auto* o_linkage = run_cmd->add_option("--linkage", linkage, "single | complete | average");
  auto* o_self = run_cmd->add_flag("--self-neighboring", self_neighboring, "Count every node as its own neighbour");
  auto* o_mode = run_cmd->add_option("--hsl-mode", hsl_mode, "absolute | relative");
  auto* o_value = run_cmd->add_option("--hsl-value", hsl_value, "Merges undone (absolute) or level in [0,1] (relative)");
  auto* o_target = run_cmd->add_option("--target-communities", target, "Stop once this many components exist");
  auto* o_variant = run_cmd->add_option("--variant", variant, "normal | total | noMerge | totalNoMerge | Exp");
  auto* o_seed = run_cmd->add_option("--seed", seed, "Node-order seed");
  auto* o_runs = run_cmd->add_option("--runs", runs, "Not used by run");
  auto* o_out = run_cmd->add_option("--out", out_path, "Partition JSON path");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Repeated seeded runs with max/min/mean Q and runtime");
  std::string b_algorithm = "louvain";
  std::string b_dataset = "karate";
  std::vector<std::string> b_variants;
  std::size_t b_runs = 100;
  std::uint64_t b_seed = 0;
  std::size_t b_target = 0;
  std::string b_out;
  bench_cmd->add_option("--algorithm", b_algorithm, "Algorithm to time");
  bench_cmd->add_option("--dataset", b_dataset, "karate | edgelist:<path> | random:<n>,<p>,<seed>");
  bench_cmd->add_option("--variant", b_variants, "Louvain variants (default: all)")->delimiter(',');
  bench_cmd->add_option("--runs", b_runs, "Runs per variant");
  bench_cmd->add_option("--seed", b_seed, "Base seed; run r uses seed + r");
  auto* b_o_target = bench_cmd->add_option("--target-communities", b_target, "Girvan-Newman target");
  bench_cmd->add_option("--out", b_out, "Report JSON path");

  // plot-data
  auto* plot_cmd = app.add_subcommand("plot-data", "Convert a bench report or Q trace to CSV");
  std::string plot_in;
  std::string plot_out;
  plot_cmd->add_option("input", plot_in, "Bench report or Q trace JSON")->required();
  plot_cmd->add_option("--out", plot_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run_cmd) {
      RunConfig c;
      c.algorithm = parse_algorithm(algorithm);
      c.dataset = parse_dataset(dataset);
      if (o_linkage->count()) c.linkage = parse_linkage(linkage);
      if (o_self->count()) c.self_neighboring = self_neighboring;
      if (o_mode->count()) {
        if (hsl_mode == "absolute") c.hsl_mode = HslSpec::Mode::absolute;
        else if (hsl_mode == "relative") c.hsl_mode = HslSpec::Mode::relative;
        else throw ValidationError("--hsl-mode must be absolute or relative");
      }
      if (o_value->count()) c.hsl_value = hsl_value;
      if (o_target->count()) c.target_communities = target;
      if (o_variant->count()) c.variant = parse_variant(variant);
      if (o_seed->count()) c.seed = seed;
      if (o_runs->count()) c.runs = runs;
      if (o_out->count()) c.out = fs::path(out_path);
      run(c, out);
    } else if (*bench_cmd) {
      BenchConfig c;
      c.algorithm = parse_algorithm(b_algorithm);
      c.dataset = parse_dataset(b_dataset);
      for (const auto& v : b_variants) c.variants.push_back(parse_variant(v));
      c.runs = b_runs;
      c.base_seed = b_seed;
      c.threads = bench_threads_from_env();
      if (b_o_target->count()) c.target_communities = b_target;
      const BenchReport report = bench(c);
      write_report_table(out, report);
      if (!b_out.empty()) write_all({{fs::path(b_out), report_to_json(report)}});
    } else if (*plot_cmd) {
      emit_plot_data(plot_in, plot_out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace commdetect::cli
