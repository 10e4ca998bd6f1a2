// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion; exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scholarank/scholarank.hpp"
#include "stub_citation_server.hpp"

using namespace scholarank;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome pass(std::string d) { return {Verdict::pass, std::move(d)}; }
Outcome fail(std::string d) { return {Verdict::fail, std::move(d)}; }

std::string fixture(const std::string& name) { return std::string(SCHOLARANK_FIXTURES) + "/" + name; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CoauthorGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
  std::vector<CoauthorGraph::Edge> edges;
  if (n > 1) {
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    const auto m = std::uniform_int_distribution<std::size_t>(0, 4 * n)(rng);
    for (std::size_t e = 0; e < m; ++e) {
      const auto a = node(rng), b = node(rng);
      if (a != b) edges.push_back({a, b, std::uniform_int_distribution<std::uint32_t>(1, 3)(rng)});
    }
  }
  return CoauthorGraph(std::move(nodes), edges);
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& x : w) x = std::floor(std::uniform_real_distribution<double>(0.0, 60.0)(rng));
  w[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] += 1.0;
  return w;
}

MetricConfig at_theta(double theta) {
  MetricConfig c;
  c.theta = theta;
  return c;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Outcome normalization() {
  std::mt19937_64 rng(1001);
  double worst = 0.0, slowest = 0.0;
  std::size_t runs = 0, unconverged = 0;
  for (int g = 0; g < 100; ++g) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 1000)(rng);
    const auto graph = random_graph(rng, n);
    const auto w = random_weights(rng, n);
    for (double theta : {0.0, 0.25, 0.5, 0.85}) {
      for (bool weighted : {false, true}) {
        ++runs;
        const auto t = Clock::now();
        try {
          const double s = weighted ? weighted_pagerank(graph, w, at_theta(theta)).sum()
                                    : pagerank(graph, at_theta(theta)).sum();
          worst = std::max(worst, std::abs(s - 1.0));
        } catch (const ConvergenceError&) {
          ++unconverged;
        }
        slowest = std::max(slowest, seconds_since(t));
      }
    }
  }
  const std::string d = "max |sum-1| = " + fmt("%.3g", worst) + " over converged runs, " + std::to_string(unconverged) +
                        "/" + std::to_string(runs) + " runs without convergence in 200 iterations, slowest run " +
                        fmt("%.3g", slowest) + " s";
  return worst <= 1e-9 && slowest < 1.0 && unconverged == 0 ? pass(d) : fail(d);
}

Outcome weighted_reductions() {
  std::mt19937_64 rng(2002);
  double zero_dev = 0.0, uniform_dev = 0.0, rescale_dev = 0.0;
  for (int g = 0; g < 50; ++g) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 600)(rng);
    const auto graph = random_graph(rng, n);
    const auto w = random_weights(rng, n);
    double total = 0.0;
    for (double x : w) total += x;
    std::vector<double> share(n);
    for (std::size_t i = 0; i < n; ++i) share[i] = w[i] / total;
    zero_dev = std::max(zero_dev, max_abs_diff(weighted_pagerank(graph, w, at_theta(0.0)).scores(), share));

    const double theta = std::uniform_real_distribution<double>(0.0, 0.85)(rng);
    const std::vector<double> ones(n, 3.5);
    uniform_dev = std::max(uniform_dev, max_abs_diff(weighted_pagerank(graph, ones, at_theta(theta)).scores(),
                                                     pagerank(graph, at_theta(theta)).scores()));
    const double c = std::exp(std::uniform_real_distribution<double>(-8.0, 8.0)(rng));
    std::vector<double> scaled(w);
    for (auto& x : scaled) x *= c;
    rescale_dev = std::max(rescale_dev, max_abs_diff(weighted_pagerank(graph, scaled, at_theta(theta)).scores(),
                                                     weighted_pagerank(graph, w, at_theta(theta)).scores()));
  }
  const std::string d = "theta=0 dev " + fmt("%.3g", zero_dev) + ", uniform dev " + fmt("%.3g", uniform_dev) +
                        ", rescale dev " + fmt("%.3g", rescale_dev);
  return zero_dev <= 1e-12 && uniform_dev <= 1e-9 && rescale_dev <= 1e-9 ? pass(d) : fail(d);
}

Outcome credit_conservation() {
  std::mt19937_64 rng(3003);
  double frac_dev = 0.0, harm_dev = 0.0, uhc_dev = 0.0;
  const std::vector<Venue> venues{{"V", "V", VenueKind::journal}};
  for (int p = 0; p < 1000; ++p) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    const auto cites = std::uniform_int_distribution<std::int64_t>(0, 500)(rng);
    std::vector<Author> authors;
    Paper paper{std::nullopt, "t", "V", 2000, {}, cites};
    for (std::size_t i = 0; i < n; ++i) {
      authors.push_back({"a" + std::to_string(i), "a" + std::to_string(i)});
      paper.author_ids.push_back(authors.back().id);
    }
    const Corpus corpus({paper}, authors, venues);
    double frac = 0.0, harm = 0.0;
    for (const auto& c : author_credits(corpus)) {
      frac += c.frac;
      harm += c.harm;
    }
    frac_dev = std::max(frac_dev, std::abs(frac - static_cast<double>(cites)));
    harm_dev = std::max(harm_dev, std::abs(harm - static_cast<double>(cites)));
  }
  for (std::size_t n = 1; n <= 50; ++n) {
    double s = 0.0;
    for (std::size_t i = 1; i <= n; ++i) s += unit_harmonic_credit(i, n);
    uhc_dev = std::max(uhc_dev, std::abs(s - 1.0));
  }
  const std::string d = "frac dev " + fmt("%.3g", frac_dev) + ", harm dev " + fmt("%.3g", harm_dev) +
                        ", UHC dev " + fmt("%.3g", uhc_dev);
  return frac_dev <= 1e-9 && harm_dev <= 1e-9 && uhc_dev <= 1e-12 ? pass(d) : fail(d);
}

std::size_t h_oracle(const std::vector<std::int64_t>& xs) {
  std::size_t best = 0;
  for (std::size_t h = 0; h <= xs.size(); ++h) {
    const auto at_least = std::count_if(xs.begin(), xs.end(), [&](auto c) { return c >= static_cast<std::int64_t>(h); });
    if (static_cast<std::size_t>(at_least) >= h) best = h;
  }
  return best;
}

double a12_oracle(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::uint64_t g = 0, e = 0;
  for (double u : xs)
    for (double v : ys) {
      g += u > v;
      e += u == v;
    }
  return (static_cast<double>(g) + static_cast<double>(e) / 2.0) /
         (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(4004);
  std::size_t h_bad = 0, a_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::int64_t> xs(std::uniform_int_distribution<std::size_t>(0, 60)(rng));
    const auto hi = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
    for (auto& x : xs) x = std::uniform_int_distribution<std::int64_t>(0, hi)(rng);
    h_bad += h_index(xs) != h_oracle(xs);
  }
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> xs(std::uniform_int_distribution<std::size_t>(1, 100)(rng)),
        ys(std::uniform_int_distribution<std::size_t>(1, 100)(rng));
    const auto levels = std::uniform_int_distribution<int>(1, 200)(rng);
    std::uniform_int_distribution<int> v(0, levels);
    for (auto& x : xs) x = v(rng) / 4.0;
    for (auto& y : ys) y = v(rng) / 4.0;
    a_bad += a12_effect(xs, ys) != a12_oracle(xs, ys);
  }
  const std::string d = std::to_string(h_bad) + "/10000 h-index and " + std::to_string(a_bad) + "/1000 A12 mismatches";
  return h_bad == 0 && a_bad == 0 ? pass(d) : fail(d);
}

Ranking random_ranking(std::mt19937_64& rng, const std::vector<std::string>& ids) {
  ScoreMap scores("r", ids, [&] {
    std::vector<double> s(ids.size());
    for (auto& x : s) x = std::floor(std::uniform_real_distribution<double>(0.0, 40.0)(rng));
    return s;
  }());
  return rank_authors(scores);
}

Outcome overlap_properties() {
  std::mt19937_64 rng(5005);
  std::size_t bad = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::string> ids;
    const auto n = std::uniform_int_distribution<std::size_t>(1, 500)(rng);
    for (std::size_t i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
    const auto a = random_ranking(rng, ids), b = random_ranking(rng, ids);
    for (double f : {0.001, 0.01, 0.05, 0.1, 0.33, 0.5, 1.0, std::uniform_real_distribution<double>(0.0001, 1.0)(rng)}) {
      const double ab = top_fraction_overlap(a, b, f);
      bad += top_fraction_overlap(a, a, f) != 100.0;
      bad += ab != top_fraction_overlap(b, a, f);
      const auto k = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(f * static_cast<double>(n) - 1e-9)), 1, n);
      std::set<std::string> ta, tb;
      for (std::size_t i = 0; i < k; ++i) {
        ta.insert(a[i].author);
        tb.insert(b[i].author);
      }
      std::size_t shared = 0;
      for (const auto& x : ta) shared += tb.contains(x);
      bad += ab != 100.0 * static_cast<double>(shared) / static_cast<double>(k);
    }
  }
  const std::string d = std::to_string(bad) + " violations over 100 ranking pairs x 8 fractions";
  return bad == 0 ? pass(d) : fail(d);
}

Outcome stability() {
  const Corpus corpus = synthetic_corpus({});
  const MetricInputs inputs(corpus);
  std::string d = std::to_string(inputs.graph.size()) + " authors";
  bool ok = inputs.graph.size() == 500;
  for (Metric metric : {Metric::pr_publ, Metric::pr_cite}) {
    const auto t = Clock::now();
    MetricConfig config;
    config.weight_scheme = weight_scheme_of(metric);
    const auto w = inputs.weights(config.weight_scheme);
    const auto sweep = theta_sweep(inputs.graph, std::span<const double>(w), StatsConfig{}, config,
                                   std::string(metric_key(metric)));
    const double elapsed = seconds_since(t);
    for (const auto& p : sweep)
      if (!p.scores) return fail(std::string(metric_label(metric)) + " theta=" + format_real(p.theta) + ": " + p.error);

    auto at = [&](double theta) -> const ScoreMap& {
      for (const auto& p : sweep)
        if (std::abs(p.theta - theta) < 1e-9) return *p.scores;
      throw Error("theta missing from sweep");
    };
    const double low = kendall_tau(at(0.0), at(0.1));
    double weakest = 1.0, weakest_at = 0.0;
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
      if (sweep[i].theta < 0.15 - 1e-9) continue;
      const double tau = kendall_tau(*sweep[i].scores, *sweep[i + 1].scores);
      if (tau < weakest) {
        weakest = tau;
        weakest_at = sweep[i].theta;
      }
    }
    ok = ok && weakest > low && elapsed < 30.0;
    d += "; " + std::string(metric_label(metric)) + " tau(0,0.1) = " + fmt("%.4f", low) +
         ", min consecutive tau for theta>=0.15 = " + fmt("%.4f", weakest) + " (from theta=" + format_real(weakest_at) +
         "), 21-point sweep " + fmt("%.2f", elapsed) + " s";
  }
  return ok ? pass(d) : fail(d);
}

Outcome pipeline_fidelity() {
  const auto design = nlohmann::json::parse(std::ifstream(fixture("dblp50_design.json")));
  std::ifstream xml(fixture("dblp50.xml"), std::ios::binary);
  const auto parsed = parse_dblp(xml);
  std::map<std::string, long> counts;
  for (auto& [doi, n] : design["stub_counts"].items()) counts[doi] = n.get<long>();
  testing::StubCitationServer stub(counts);
  CitationApiConfig api;
  api.base = stub.base();
  api.requests_per_second = 50.0;
  std::vector<std::string> dois;
  for (const auto& r : parsed.records)
    if (r.doi) dois.push_back(*r.doi);
  const auto fetched = fetch_all(dois, api, 2);
  const auto merged = merge_citations(parsed.records, fetched.found);
  const bool counts_ok = parsed.records.size() + parsed.diagnostics.size() == parsed.publication_elements &&
                         parsed.publication_elements == design["elements"].get<std::size_t>();
  const bool merge_ok = merged.report.matched == design["matched"].get<std::size_t>() &&
                        merged.report.unmatched == design["unmatched"].get<std::size_t>() && fetched.failed.empty();
  const std::string d = std::to_string(parsed.records.size()) + " records + " + std::to_string(parsed.diagnostics.size()) +
                        " diagnostics / " + std::to_string(parsed.publication_elements) + " elements; matched " +
                        std::to_string(merged.report.matched) + ", unmatched " + std::to_string(merged.report.unmatched);
  return counts_ok && merge_ok ? pass(d) : fail(d);
}

Outcome replication() {
  const char* path = std::getenv("SCHOLARANK_REPLICATION_CORPUS");
  if (!path || !*path || !fs::exists(path))
    return {Verdict::skip, "set SCHOLARANK_REPLICATION_CORPUS to the original corpus (JSON lines) to run"};
  const Corpus corpus = load_corpus(path);
  const auto s = corpus_stats(corpus);
  const MetricInputs inputs(corpus);
  const MetricConfig config;
  const double overlap = top_fraction_overlap(rank_authors(compute_scores(inputs, Metric::pr, config)),
                                              rank_authors(compute_scores(inputs, Metric::pr_publ, config)), 0.01);
  const std::string d = std::to_string(s.papers) + " papers / " + std::to_string(s.authors) + " authors / " +
                        std::to_string(s.papers_with_citations) + " with citations; PR vs PR_publ top 1% = " +
                        fmt("%.2f", overlap);
  return s.papers == 35391 && s.authors == 35406 && s.papers_with_citations == 34015 && std::abs(overlap - 98.0) <= 1.0
             ? pass(d)
             : fail(d);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().filename() != "syn.jsonl") files[e.path().filename().string()] = slurp(e.path());
  return files;
}

Outcome determinism() {
  const char* cli = std::getenv("SCHOLARANK_CLI");
  if (!cli || !fs::exists(cli)) return fail("SCHOLARANK_CLI does not name the scholarank binary");
  const fs::path dir = fs::temp_directory_path() / "scholarank-acceptance-determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "syn.jsonl");
    write_corpus(synthetic_corpus({.authors = 120, .seed = 9}), f);
  }
  const auto design = nlohmann::json::parse(std::ifstream(fixture("dblp50_design.json")));
  std::map<std::string, long> counts;
  for (auto& [doi, n] : design["stub_counts"].items()) counts[doi] = n.get<long>();
  testing::StubCitationServer stub(counts);

  const std::string out = dir.string() + "/";
  const std::string syn = out + "syn.jsonl";
  const std::vector<std::string> commands{
      "ingest --dblp " + fixture("dblp50.xml") + " --citations api --api-base " + stub.base() +
          " --rate 0 --workers 3 --year-min 1900 --year-max 2100 --out " + out + "api.jsonl --cache-out " + out +
          "cache.jsonl",
      "ingest --dblp " + fixture("dblp50.xml") + " --citations " + out + "cache.jsonl --out " + out + "cached.jsonl",
      "rank --corpus " + syn + " --metric pr-cite --out " + out + "rank.csv",
      "rank --corpus " + syn + " --metric harm --out " + out + "harm.csv",
      "overlap --corpus " + syn + " --fraction 0.05 --out " + out + "overlap.csv",
      "stability --corpus " + syn + " --out " + out + "sweep.csv",
      "trends --corpus " + syn + " --out " + out + "trends.csv",
      "table1 --corpus " + syn + " --out " + out + "table1.csv",
  };
  std::map<std::string, std::string> first;
  for (int round = 0; round < 2; ++round) {
    for (const auto& args : commands) {
      const std::string line = "SOURCE_DATE_EPOCH=1500000000 '" + std::string(cli) + "' " + args + " 2>/dev/null";
      if (std::system(line.c_str()) != 0) return fail("command failed: scholarank " + args.substr(0, args.find(' ')));
    }
    if (round == 0) first = snapshot(dir);
  }
  const auto second = snapshot(dir);
  std::size_t differing = 0;
  for (const auto& [name, text] : first) differing += !second.contains(name) || second.at(name) != text;
  fs::remove_all(dir);
  const std::string d = std::to_string(commands.size()) + " invocations, " + std::to_string(first.size()) +
                        " artifacts, " + std::to_string(differing) + " differing";
  return differing == 0 && first.size() == second.size() && first.size() >= 2 * commands.size() ? pass(d) : fail(d);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"normalization", normalization},
      {"weighted reductions", weighted_reductions},
      {"credit conservation", credit_conservation},
      {"oracle equivalence", oracle_equivalence},
      {"overlap properties", overlap_properties},
      {"stability on synthetic corpus", stability},
      {"pipeline fidelity", pipeline_fidelity},
      {"conditional replication", replication},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
    failures += o.verdict == Verdict::fail;
    std::cout << tag << "  " << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
