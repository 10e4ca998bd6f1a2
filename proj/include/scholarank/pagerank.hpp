#pragma once

// PageRank and weighted PageRank over the coauthorship graph.
//
//   PR(a_i)   = (1 - theta) / N              + theta * sum_{k in N(a_i)} PR(a_k) / |N(a_k)|
//   PR_W(a_i) = (1 - theta) * W(a_i) / sum W + theta * sum_{k in N(a_i)} PR_W(a_k) / |N(a_k)|
//
// Both are solved by synchronous iteration from the uniform vector. The
// divisor is the unweighted degree; edge multiplicities do not steer mass.
// Isolated authors only receive the teleport term, and each iterate is
// renormalized to sum 1 so mass they fail to pass on is not lost.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "scholarank/error.hpp"
#include "scholarank/graph.hpp"
#include "scholarank/scores.hpp"

namespace scholarank {

enum class WeightScheme { uniform, publications, citations };

inline const char* to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::uniform: return "uniform";
    case WeightScheme::publications: return "publications";
    case WeightScheme::citations: return "citations";
  }
  return "?";
}

struct MetricConfig {
  double theta = 0.5;
  double tolerance = 1e-10;  // on the L1 change between iterates
  std::size_t max_iterations = 200;
  WeightScheme weight_scheme = WeightScheme::uniform;

  void validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidArgument("theta must lie in [0, 1]");
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (max_iterations == 0) throw InvalidArgument("max_iterations must be positive");
  }
};

struct IterationTrace {
  std::size_t iterations = 0;
  double residual = 0.0;
};

namespace detail {

// Iterates the affine update itself; isolated nodes leak their link share, so
// the iterate may sum to less than 1 until the final normalization.
inline std::vector<double> power_iterate(const CoauthorGraph& graph, std::span<const double> teleport,
                                         const MetricConfig& config, IterationTrace* trace) {
  const std::size_t n = graph.size();
  const double theta = config.theta;
  std::vector<double> current(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n), share(n);

  auto normalized = [](std::vector<double> v) {
    double total = 0.0;
    for (double x : v) total += x;
    if (!(total > 0.0)) throw Error("score mass vanished (theta=1 with no link mass to circulate)");
    for (double& x : v) x /= total;
    return v;
  };

  double residual = 0.0;
  for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto d = graph.degree(k);
      share[k] = d ? current[k] / static_cast<double>(d) : 0.0;
    }
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double link = 0.0;
      for (const auto& nb : graph.neighbors(i)) link += share[nb.node];
      next[i] = (1.0 - theta) * teleport[i] + theta * link;
      residual += std::abs(next[i] - current[i]);
    }
    current.swap(next);
    if (residual < config.tolerance) {
      if (trace) *trace = {iter, residual};
      return normalized(std::move(current));
    }
  }
  if (trace) *trace = {config.max_iterations, residual};
  throw ConvergenceError(theta, config.max_iterations, residual);
}

}  // namespace detail

inline ScoreMap pagerank(const CoauthorGraph& graph, const MetricConfig& config,
                         IterationTrace* trace = nullptr) {
  config.validate();
  if (graph.empty()) throw InvalidArgument("pagerank needs a non-empty graph");
  const std::vector<double> teleport(graph.size(), 1.0 / static_cast<double>(graph.size()));
  return ScoreMap("pr", graph.nodes(), detail::power_iterate(graph, teleport, config, trace));
}

// `weights` is aligned with graph.nodes().
inline ScoreMap weighted_pagerank(const CoauthorGraph& graph, std::span<const double> weights,
                                  const MetricConfig& config, IterationTrace* trace = nullptr,
                                  std::string metric = "pr-w") {
  config.validate();
  if (graph.empty()) throw InvalidArgument("weighted pagerank needs a non-empty graph");
  if (weights.size() != graph.size())
    throw InvalidArgument("weight vector covers " + std::to_string(weights.size()) + " of " +
                          std::to_string(graph.size()) + " authors");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidArgument("weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("all author weights are zero");
  std::vector<double> teleport(weights.begin(), weights.end());
  for (double& t : teleport) t /= total;
  return ScoreMap(std::move(metric), graph.nodes(), detail::power_iterate(graph, teleport, config, trace));
}

}  // namespace scholarank
