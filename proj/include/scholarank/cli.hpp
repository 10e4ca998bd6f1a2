#pragma once

// Command-line front end. Every subcommand writes CSV/JSON-lines artifacts
// plus a `<file>.manifest.json` describing how each was produced.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scholarank/citations.hpp"
#include "scholarank/corpus.hpp"
#include "scholarank/dblp.hpp"
#include "scholarank/effect.hpp"
#include "scholarank/error.hpp"
#include "scholarank/manifest.hpp"
#include "scholarank/merge.hpp"
#include "scholarank/metric_suite.hpp"
#include "scholarank/overlap.hpp"
#include "scholarank/stability.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

namespace cli_detail {

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

inline std::set<std::string> read_venue_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open venue list '" + path + "'");
  std::set<std::string> venues;
  std::string line;
  while (std::getline(in, line)) {
    const std::string v = normalize_name(line);
    if (!v.empty() && v.front() != '#') venues.insert(v);
  }
  return venues;
}

// "start:stop:step"
inline std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string piece;
  while (std::getline(ss, piece, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw InvalidArgument("grid '" + spec + "' must be start:stop:step");
    }
  }
  if (parts.size() != 3) throw InvalidArgument("grid '" + spec + "' must be start:stop:step");
  return StatsConfig::make_grid(parts[0], parts[1], parts[2]);
}

inline nlohmann::json to_json(const MetricConfig& c) {
  return {{"theta", c.theta},
          {"tolerance", c.tolerance},
          {"max_iterations", c.max_iterations},
          {"weight_scheme", to_string(c.weight_scheme)}};
}

inline nlohmann::json to_json(const StatsConfig& c) {
  return {{"a12_threshold", c.a12_threshold},
          {"top_fraction", c.top_fraction},
          {"theta_grid", c.theta_grid},
          {"top_k", c.top_k}};
}

struct Options {
  std::string corpus, out, report, dblp, citations, venues, cache_out, grid = "0:1:0.05", metric;
  std::string api_base = CitationApiConfig{}.base;
  double rate = 2.0;
  int retries = 3;
  unsigned workers = 1;
  int year_min = 1992, year_max = 2016;
  std::optional<int> reference_year;
  MetricConfig metric_config;
  StatsConfig stats;
};

inline void add_metric_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--theta", o.metric_config.theta, "collaboration probability theta")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--tolerance", o.metric_config.tolerance, "L1 convergence tolerance")->capture_default_str();
  cmd->add_option("--max-iterations", o.metric_config.max_iterations, "iteration cap")->capture_default_str();
}

inline int do_ingest(const Options& o, RunManifest manifest, std::ostream& log) {
  std::ifstream dblp(o.dblp, std::ios::binary);
  if (!dblp) throw Error("cannot open DBLP dump '" + o.dblp + "'");
  const auto parsed = parse_dblp(dblp);
  manifest.inputs.push_back(o.dblp);

  std::optional<std::set<std::string>> venues;
  if (!o.venues.empty()) {
    venues = read_venue_list(o.venues);
    manifest.inputs.push_back(o.venues);
  }
  const auto records = select_records(parsed.records, o.year_min, o.year_max, venues);

  CitationSet citations;
  nlohmann::json fetch_report = nullptr;
  if (o.citations == "api") {
    CitationApiConfig api;
    api.base = o.api_base;
    api.requests_per_second = o.rate;
    api.retries = o.retries;
    api.clock = manifest_time;
    std::vector<std::string> dois;
    for (const auto& r : records)
      if (r.doi) dois.push_back(*r.doi);
    auto fetched = fetch_all(dois, api, o.workers);
    citations = std::move(fetched.found);
    fetch_report = {{"requested", dois.size()},
                    {"found", citations.size()},
                    {"not_found", fetched.not_found.size()},
                    {"failed", fetched.failed.size()}};
    for (const auto& [doi, why] : fetched.failed) log << "warning: " << why << '\n';
  } else {
    std::ifstream cache(o.citations, std::ios::binary);
    if (!cache) throw Error("cannot open citation cache '" + o.citations + "'");
    citations = read_citation_cache(cache);
    manifest.inputs.push_back(o.citations);
  }
  if (!o.cache_out.empty()) {
    auto out = open_output(o.cache_out);
    write_citation_cache(citations, out);
  }

  const auto merged = merge_citations(records, citations);
  {
    auto out = open_output(o.out);
    write_corpus(merged.corpus, out);
  }
  manifest.write_for(o.out);

  const std::string report_path = o.report.empty() ? o.out + ".report.json" : o.report;
  nlohmann::json report = to_json(merged.report);
  report["publication_elements"] = parsed.publication_elements;
  report["parsed_records"] = parsed.records.size();
  report["selected_records"] = records.size();
  report["diagnostics"] = nlohmann::json::array();
  for (const auto& d : parsed.diagnostics)
    report["diagnostics"].push_back({{"key", d.source_key}, {"element", d.element}, {"line", d.line}, {"message", d.message}});
  report["fetch"] = fetch_report;
  {
    auto out = open_output(report_path);
    out << report.dump(2) << '\n';
  }
  manifest.write_for(report_path);
  log << "ingested " << merged.report.papers << " papers (" << merged.report.matched << " with citations)\n";
  return 0;
}

inline int do_rank(const Options& o, RunManifest manifest) {
  const Corpus corpus = load_corpus(o.corpus);
  const MetricInputs inputs(corpus);
  const Metric metric = parse_metric(o.metric);
  MetricConfig config = o.metric_config;
  config.weight_scheme = weight_scheme_of(metric);
  manifest.config["metric"] = to_json(config);
  const Ranking ranking = rank_authors(compute_scores(inputs, metric, config));
  {
    auto out = open_output(o.out);
    write_ranking_csv(ranking, out);
  }
  manifest.write_for(o.out);
  return 0;
}

inline int do_overlap(const Options& o, RunManifest manifest) {
  const Corpus corpus = load_corpus(o.corpus);
  const MetricInputs inputs(corpus);
  std::vector<LabeledRanking> rankings;
  for (Metric m : kOverlapMetrics)
    rankings.push_back({std::string(metric_label(m)), rank_authors(compute_scores(inputs, m, o.metric_config))});
  const auto matrix = overlap_matrix(rankings, o.stats.top_fraction);
  {
    auto out = open_output(o.out);
    write_overlap_csv(matrix, out);
  }
  manifest.write_for(o.out);
  return 0;
}

inline int do_stability(const Options& o, RunManifest manifest, std::ostream& log) {
  const Corpus corpus = load_corpus(o.corpus);
  const MetricInputs inputs(corpus);
  const Metric metric = parse_metric(o.metric);
  if (!is_pagerank_family(metric)) throw InvalidArgument("stability sweeps need pr, pr-publ or pr-cite");
  MetricConfig config = o.metric_config;
  config.weight_scheme = weight_scheme_of(metric);
  manifest.config["metric"] = to_json(config);

  std::optional<std::vector<double>> weights;
  if (metric != Metric::pr) weights = inputs.weights(config.weight_scheme);
  const auto sweep = theta_sweep(inputs.graph, weights ? std::optional<std::span<const double>>(*weights) : std::nullopt,
                                 o.stats, config, std::string(metric_key(metric)));

  // Tracked authors: the top-k most cited.
  const Ranking cited = rank_authors(compute_scores(inputs, Metric::infl, config));
  std::vector<std::string> tracked;
  for (std::size_t i = 0; i < std::min(o.stats.top_k, cited.size()); ++i) tracked.push_back(cited[i].author);
  {
    auto out = open_output(o.out);
    write_sweep_csv(sweep, tracked, out);
  }
  manifest.write_for(o.out);

  bool failed = false;
  for (const auto& p : sweep)
    if (!p.scores) {
      log << "error: theta=" << format_real(p.theta) << ": " << p.error << '\n';
      failed = true;
    }
  if (failed) return 1;

  const std::string report_path = o.report.empty() ? o.out + ".stability.csv" : o.report;
  {
    auto out = open_output(report_path);
    write_stability_csv(rank_stability(sweep, o.stats.top_k), out);
  }
  manifest.write_for(report_path);
  return 0;
}

inline int do_trends(const Options& o, RunManifest manifest) {
  const Corpus corpus = load_corpus(o.corpus);
  std::map<int, std::size_t> papers_per_year;
  for (const auto& p : corpus.papers()) ++papers_per_year[p.year];
  {
    auto out = open_output(o.out);
    out << "year,papers";
    for (std::size_t b = 0; b < kCoauthorBuckets; ++b) out << ',' << coauthor_bucket_label(b);
    out << '\n';
    for (const auto& [year, f] : coauthor_distribution(corpus)) {
      out << year << ',' << papers_per_year[year];
      for (double v : f) out << ',' << format_real(v);
      out << '\n';
    }
  }
  manifest.write_for(o.out);
  return 0;
}

inline int do_table1(const Options& o, RunManifest manifest) {
  Corpus corpus = load_corpus(o.corpus);
  if (o.reference_year) corpus = corpus.with_reference_year(*o.reference_year);
  manifest.config["reference_year"] = corpus.reference_year();
  const auto table = median_cites_by_coauthors(corpus, o.stats);
  {
    auto out = open_output(o.out);
    out << "year,bucket,papers,median,group\n";
    for (const auto& [year, row] : table) {
      std::vector<const EffectCell*> cells;
      for (const auto& c : row.cells) cells.push_back(&c);
      // Column order 1..6, 7+ rather than median order.
      std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a->label < b->label; });
      for (const auto* c : cells)
        out << year << ',' << c->label << ',' << c->samples.size() << ',' << format_real(c->median) << ','
            << c->group << '\n';
    }
  }
  manifest.write_for(o.out);
  return 0;
}

}  // namespace cli_detail

// Exit status: 0 success, 1 runtime error from the library, 2 usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"Coauthorship-graph author rankings and their comparison", "scholarank"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "TOML/INI file mirroring the command-line flags")->envname("SCHOLARANK_CONFIG");
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Build a corpus from a DBLP XML dump and citation counts");
  ingest->add_option("--dblp", o.dblp, "DBLP XML dump")->required()->check(CLI::ExistingFile);
  ingest->add_option("--citations", o.citations, "'api' or a citation cache file (JSON lines)")->required();
  ingest->add_option("--out", o.out, "corpus output (JSON lines)")->required();
  ingest->add_option("--report", o.report, "merge report (default <out>.report.json)");
  ingest->add_option("--cache-out", o.cache_out, "write the citation counts used to this cache file");
  ingest->add_option("--venues", o.venues, "venue list, one DBLP venue string per line")->check(CLI::ExistingFile);
  ingest->add_option("--year-min", o.year_min)->capture_default_str();
  ingest->add_option("--year-max", o.year_max)->capture_default_str();
  ingest->add_option("--api-base", o.api_base, "citation API base URL")->capture_default_str();
  ingest->add_option("--rate", o.rate, "requests per second")->capture_default_str();
  ingest->add_option("--retries", o.retries, "retries on transient failures")->check(CLI::NonNegativeNumber)->capture_default_str();
  ingest->add_option("--workers", o.workers, "parallel fetch workers")->check(CLI::PositiveNumber)->capture_default_str();

  auto* rank = app.add_subcommand("rank", "Score and rank every author with one metric");
  rank->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  rank->add_option("--metric", o.metric, "h|infl|coa|frac|harm|pr|pr-publ|pr-cite")
      ->required()
      ->check(CLI::IsMember({"h", "infl", "coa", "frac", "harm", "pr", "pr-publ", "pr-cite"}));
  rank->add_option("--out", o.out, "author,score,rank CSV")->required();
  add_metric_flags(rank, o);

  auto* overlap = app.add_subcommand("overlap", "Top-fraction overlap matrix over the seven ranking metrics");
  overlap->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  overlap->add_option("--fraction", o.stats.top_fraction, "top fraction of authors compared")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  overlap->add_option("--out", o.out)->required();
  add_metric_flags(overlap, o);

  auto* stability = app.add_subcommand("stability", "Theta sweep with rank-stability report");
  stability->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  stability->add_option("--grid", o.grid, "theta grid start:stop:step")->capture_default_str();
  stability->add_option("--top", o.stats.top_k, "tracked authors (most cited) and displacement depth")->capture_default_str();
  stability->add_option("--metric", o.metric, "pr|pr-publ|pr-cite")
      ->check(CLI::IsMember({"pr", "pr-publ", "pr-cite"}))
      ->default_val("pr-cite");
  stability->add_option("--out", o.out, "theta,author,score,rank trajectories CSV")->required();
  stability->add_option("--report", o.report, "stability CSV (default <out>.stability.csv)");
  stability->add_option("--tolerance", o.metric_config.tolerance)->capture_default_str();
  stability->add_option("--max-iterations", o.metric_config.max_iterations)->capture_default_str();

  auto* trends = app.add_subcommand("trends", "Per-year share of papers by number of authors");
  trends->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  trends->add_option("--out", o.out)->required();

  auto* table1 = app.add_subcommand("table1", "Median cites per year by team size, grouped by A12 effect");
  table1->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  table1->add_option("--out", o.out)->required();
  table1->add_option("--a12-threshold", o.stats.a12_threshold)->check(CLI::Range(0.5, 1.0))->capture_default_str();
  table1->add_option("--reference-year", o.reference_year, "year used for per-year averaging (default: latest)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  RunManifest manifest;
  manifest.command = cmd->get_name();
  for (int i = 1; i < argc; ++i) manifest.arguments.emplace_back(argv[i]);

  try {
    if (cmd == stability) o.stats.theta_grid = parse_grid(o.grid);
    o.metric_config.validate();
    o.stats.validate();
    manifest.config["metric"] = to_json(o.metric_config);
    manifest.config["stats"] = to_json(o.stats);
    if (!o.corpus.empty()) manifest.inputs.push_back(o.corpus);

    if (cmd == ingest) {
      manifest.config["ingest"] = {{"api_base", o.api_base}, {"rate", o.rate},         {"retries", o.retries},
                                   {"workers", o.workers},   {"year_min", o.year_min}, {"year_max", o.year_max}};
      return do_ingest(o, manifest, err);
    }
    if (cmd == rank) return do_rank(o, manifest);
    if (cmd == overlap) return do_overlap(o, manifest);
    if (cmd == stability) return do_stability(o, manifest, err);
    if (cmd == trends) return do_trends(o, manifest);
    if (cmd == table1) return do_table1(o, manifest);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv{"scholarank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace scholarank
