#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "scholarank/metric_suite.hpp"
#include "scholarank/pagerank.hpp"
#include "scholarank/scores.hpp"
#include "scholarank/synthetic.hpp"

using namespace scholarank;
using Catch::Approx;

namespace {

using Edges = std::vector<CoauthorGraph::Edge>;

CoauthorGraph graph_of(std::vector<std::string> nodes, const Edges& edges) { return CoauthorGraph(std::move(nodes), edges); }

MetricConfig at_theta(double theta) {
  MetricConfig c;
  c.theta = theta;
  return c;
}

CoauthorGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
  Edges edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b, 1});
  return CoauthorGraph(std::move(nodes), edges);
}

}  // namespace

// Expected vectors below come from tests/oracles/pagerank_oracle.py.

TEST_CASE("theta zero is uniform", "[pagerank]") {
  const auto g = graph_of({"A", "B", "C", "D"}, {{0, 1, 1}, {1, 2, 1}});
  const auto s = pagerank(g, at_theta(0.0));
  for (double v : s.scores()) CHECK(v == Approx(0.25).margin(1e-15));
}

TEST_CASE("two-node graph is symmetric for any theta", "[pagerank]") {
  const auto g = graph_of({"A", "B"}, {{0, 1, 3}});
  for (double theta : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const auto s = pagerank(g, at_theta(theta));
    CHECK(s.at("A") == Approx(0.5).margin(1e-12));
    CHECK(s.at("B") == Approx(0.5).margin(1e-12));
  }
}

TEST_CASE("path A-B-C at theta 0.5", "[pagerank]") {
  const auto s = pagerank(graph_of({"A", "B", "C"}, {{0, 1, 1}, {1, 2, 1}}), at_theta(0.5));
  CHECK(s.at("A") == Approx(0.27777777777777779).margin(1e-9));
  CHECK(s.at("B") == Approx(0.44444444444444442).margin(1e-9));
  CHECK(s.at("C") == Approx(0.27777777777777779).margin(1e-9));
  CHECK(s.at("B") > s.at("A"));
}

TEST_CASE("isolated author keeps only teleport mass, renormalized", "[pagerank]") {
  const auto s = pagerank(graph_of({"A", "B", "C"}, {{0, 1, 1}}), at_theta(0.5));
  CHECK(s.at("A") == Approx(0.40000000000000002).margin(1e-9));
  CHECK(s.at("B") == Approx(0.40000000000000002).margin(1e-9));
  CHECK(s.at("C") == Approx(0.20000000000000001).margin(1e-9));
  CHECK(s.sum() == Approx(1.0).margin(1e-12));
}

TEST_CASE("star at theta 0.85", "[pagerank]") {
  const auto s = pagerank(graph_of({"H", "L1", "L2", "L3", "L4"}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}),
                          at_theta(0.85));
  CHECK(s.at("H") == Approx(0.47567567567567554).margin(1e-9));
  CHECK(s.at("L3") == Approx(0.1310810810810811).margin(1e-9));
}

TEST_CASE("weighted pagerank examples", "[pagerank]") {
  const auto tri = graph_of({"A", "B", "C"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const std::vector<double> w{2, 1, 1};

  SECTION("theta zero returns the normalized weights") {
    const auto s = weighted_pagerank(tri, w, at_theta(0.0));
    CHECK(std::abs(s.at("A") - 0.5) <= 1e-12);
    CHECK(std::abs(s.at("B") - 0.25) <= 1e-12);
  }
  SECTION("uniform weights reproduce pagerank") {
    const auto g = graph_of({"A", "B", "C", "D"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}});
    const std::vector<double> ones(4, 7.0);
    const auto a = weighted_pagerank(g, ones, at_theta(0.5));
    const auto b = pagerank(g, at_theta(0.5));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(a.scores()[i] - b.scores()[i]) <= 1e-9);
  }
  SECTION("triangle with weights (2,1,1) at theta 0.5") {
    const auto s = weighted_pagerank(tri, w, at_theta(0.5));
    CHECK(s.at("A") == Approx(0.40000000000000002).margin(1e-9));
    CHECK(s.at("B") == Approx(0.30000000000000004).margin(1e-9));
    CHECK(s.at("C") == Approx(0.30000000000000004).margin(1e-9));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(weighted_pagerank(tri, std::vector<double>{0, 0, 0}, at_theta(0.5)), InvalidArgument);
    CHECK_THROWS_AS(weighted_pagerank(tri, std::vector<double>{1, 1}, at_theta(0.5)), InvalidArgument);
    CHECK_THROWS_AS(weighted_pagerank(tri, std::vector<double>{1, -1, 1}, at_theta(0.5)), InvalidArgument);
  }
}

TEST_CASE("configuration and convergence errors", "[pagerank]") {
  const auto path = graph_of({"A", "B", "C"}, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(pagerank(path, at_theta(1.5)), InvalidArgument);
  MetricConfig bad_tol;
  bad_tol.tolerance = 0;
  CHECK_THROWS_AS(pagerank(path, bad_tol), InvalidArgument);
  CHECK_THROWS_AS(pagerank(CoauthorGraph{}, at_theta(0.5)), InvalidArgument);

  // A bipartite path oscillates forever at theta = 1.
  try {
    pagerank(path, at_theta(1.0));
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 200);
    CHECK(e.residual() > 0.1);
  }
  MetricConfig few = at_theta(0.5);
  few.max_iterations = 2;
  CHECK_THROWS_AS(pagerank(path, few), ConvergenceError);
}

TEST_CASE("pagerank-family invariants on random graphs", "[pagerank][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 120)(rng);
    const auto g = random_graph(rng, n, 0.04);
    std::vector<double> w(n);
    for (auto& x : w) x = std::uniform_real_distribution<double>(0.0, 50.0)(rng);
    w[0] += 1.0;
    for (double theta : {0.15, 0.5, 0.85}) {
      IterationTrace trace;
      std::vector<double> scaled = w;
      for (auto& x : scaled) x *= 1234.5;
      const auto pr = pagerank(g, at_theta(theta), &trace);
      const auto wpr = weighted_pagerank(g, w, at_theta(theta));
      const auto wpr2 = weighted_pagerank(g, scaled, at_theta(theta));
      CHECK(trace.residual < 1e-10);
      CHECK(pr.sum() == Approx(1.0).margin(1e-9));
      for (double v : pr.scores()) CHECK((v > 0.0 && v <= 1.0));
      CHECK(wpr.sum() == Approx(1.0).margin(1e-9));
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(wpr.scores()[i] - wpr2.scores()[i]) <= 1e-9);
    }
    const auto zero = weighted_pagerank(g, w, at_theta(0.0));
    double total = 0;
    for (double x : w) total += x;
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(zero.scores()[i] - w[i] / total) <= 1e-12);
  }
}

TEST_CASE("theta 1 without edges has no mass left", "[pagerank]") {
  const auto g = graph_of({"A", "B"}, {});
  CHECK_THROWS_WITH(pagerank(g, at_theta(1.0)), Catch::Matchers::ContainsSubstring("vanished"));
  CHECK(pagerank(g, at_theta(0.99)).at("A") == Approx(0.5));
}

TEST_CASE("rank_authors", "[ranking]") {
  SECTION("single author") {
    const auto r = rank_authors(ScoreMap("m", {"A"}, {0.3}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].rank == 1);
  }
  SECTION("strict order") {
    const auto r = rank_authors(ScoreMap("m", {"C", "A", "B"}, {0.2, 0.5, 0.3}));
    CHECK(r[0].author == "A");
    CHECK(r[1].author == "B");
    CHECK(r[2].author == "C");
    CHECK(r[2].rank == 3);
  }
  SECTION("ties share the minimum position and order by key") {
    const auto r = rank_authors(ScoreMap("m", {"B", "A", "C"}, {0.4, 0.4, 0.2}));
    CHECK(r[0] == RankedAuthor{"A", 0.4, 1});
    CHECK(r[1] == RankedAuthor{"B", 0.4, 1});
    CHECK(r[2] == RankedAuthor{"C", 0.2, 3});
  }
  SECTION("errors") {
    CHECK_THROWS_AS(rank_authors(ScoreMap{}), InvalidArgument);
    CHECK_THROWS_AS(rank_authors(ScoreMap("m", {"A", "B"}, {1.0, std::nan("")})), InvalidArgument);
    CHECK_THROWS_AS(ScoreMap("m", {"A", "A"}, {1.0, 2.0}), InvalidArgument);
  }
  SECTION("permutation of keys and deterministic") {
    const Corpus c = synthetic_corpus({.authors = 150, .seed = 8});
    const MetricInputs in(c);
    for (Metric m : kAllMetrics) {
      const auto s = compute_scores(in, m, MetricConfig{});
      const auto r1 = rank_authors(s), r2 = rank_authors(s);
      CHECK(r1 == r2);
      std::vector<std::string> keys;
      for (const auto& e : r1.entries()) keys.push_back(e.author);
      std::sort(keys.begin(), keys.end());
      CHECK(keys == s.authors());
      for (std::size_t i = 1; i < r1.size(); ++i) CHECK(r1[i - 1].score >= r1[i].score);
    }
  }
}

TEST_CASE("ranking CSV", "[ranking]") {
  std::ostringstream out;
  write_ranking_csv(rank_authors(ScoreMap("pr", {"Doe, J.", "Roe"}, {0.25, 0.75})), out);
  CHECK(out.str() == "author,score,rank\nRoe,0.75,1\n\"Doe, J.\",0.25,2\n");
}

TEST_CASE("metric dispatch", "[metrics]") {
  const Corpus c = synthetic_corpus({.authors = 80, .seed = 4});
  const MetricInputs in(c);
  CHECK(parse_metric("pr-cite") == Metric::pr_cite);
  CHECK_THROWS_AS(parse_metric("pagerank"), InvalidArgument);
  const auto infl = compute_scores(in, Metric::infl, {});
  CHECK(infl.metric() == "infl");
  CHECK(infl.at(c.authors().begin()->first) == static_cast<double>(infl_and_coa(c, c.authors().begin()->first).infl));
  const auto publ = compute_scores(in, Metric::pr_publ, {});
  const auto w = in.weights(WeightScheme::publications);
  const auto direct = weighted_pagerank(in.graph, w, MetricConfig{});
  CHECK(publ.scores() == direct.scores());
}
