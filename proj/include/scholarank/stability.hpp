#pragma once

// Theta perturbation study: one converged score vector per grid point, then
// rank agreement (Kendall tau-b) and top-k rank displacement between
// consecutive points.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scholarank/effect.hpp"
#include "scholarank/error.hpp"
#include "scholarank/graph.hpp"
#include "scholarank/pagerank.hpp"
#include "scholarank/scores.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

namespace detail {

// Strict inversions (i < j, v[i] > v[j]) via bottom-up merge sort; sorts v.
inline std::uint64_t count_inversions(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> buf(n);
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n), hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inversions += mid - i;
          buf[k++] = v[j++];
        } else {
          buf[k++] = v[i++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
    }
    v.swap(buf);
  }
  return inversions;
}

// Sum of t(t-1)/2 over runs of equal values in a sorted range.
template <class It, class Eq>
std::uint64_t tied_pairs(It first, It last, Eq eq) {
  std::uint64_t pairs = 0;
  while (first != last) {
    It run = first;
    std::uint64_t t = 0;
    while (run != last && eq(*run, *first)) {
      ++run;
      ++t;
    }
    pairs += t * (t - 1) / 2;
    first = run;
  }
  return pairs;
}

}  // namespace detail

// Kendall tau-b with Knight's O(n log n) algorithm. NaN when either side is
// entirely tied.
inline double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("kendall tau: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw InvalidArgument("kendall tau needs at least two observations");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]); });

  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t ties_x = detail::tied_pairs(order.begin(), order.end(), [&](auto a, auto b) { return x[a] == x[b]; });
  const std::uint64_t ties_xy = detail::tied_pairs(order.begin(), order.end(),
                                                   [&](auto a, auto b) { return x[a] == x[b] && y[a] == y[b]; });
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::uint64_t discordant = detail::count_inversions(ys);
  const std::uint64_t ties_y = detail::tied_pairs(ys.begin(), ys.end(), std::equal_to<>{});

  const double numerator = static_cast<double>(total) - static_cast<double>(ties_x) - static_cast<double>(ties_y) +
                           static_cast<double>(ties_xy) - 2.0 * static_cast<double>(discordant);
  const double denominator =
      std::sqrt(static_cast<double>(total - ties_x) * static_cast<double>(total - ties_y));
  if (denominator == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return numerator / denominator;
}

// Rank positions (shared on ties) in ScoreMap author order.
inline std::vector<double> rank_vector(const ScoreMap& scores) {
  const Ranking r = rank_authors(scores);
  std::vector<double> ranks(scores.size());
  for (const auto& e : r.entries()) {
    const auto it = std::lower_bound(scores.authors().begin(), scores.authors().end(), e.author);
    ranks[static_cast<std::size_t>(it - scores.authors().begin())] = static_cast<double>(e.rank);
  }
  return ranks;
}

inline double kendall_tau(const ScoreMap& a, const ScoreMap& b) {
  if (a.authors() != b.authors()) throw InvalidArgument("kendall tau: score maps cover different author sets");
  return kendall_tau_b(rank_vector(a), rank_vector(b));
}

struct SweepPoint {
  double theta = 0.0;
  std::optional<ScoreMap> scores;  // empty when the point failed
  IterationTrace trace;
  std::string error;
};

// Every grid point is solved independently from the uniform start. Failures
// (typically non-convergence) are recorded on the point rather than thrown.
inline std::vector<SweepPoint> theta_sweep(const CoauthorGraph& graph, std::optional<std::span<const double>> weights,
                                           const StatsConfig& stats, const MetricConfig& metric,
                                           const std::string& metric_name = "pr") {
  stats.validate();
  std::vector<SweepPoint> out;
  out.reserve(stats.theta_grid.size());
  for (double theta : stats.theta_grid) {
    SweepPoint p;
    p.theta = theta;
    MetricConfig config = metric;
    config.theta = theta;
    try {
      p.scores = weights ? weighted_pagerank(graph, *weights, config, &p.trace, metric_name)
                         : pagerank(graph, config, &p.trace);
    } catch (const ConvergenceError& e) {
      p.trace = {e.iterations(), e.residual()};
      p.error = e.what();
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct StabilityStep {
  double theta_from = 0.0;
  double theta_to = 0.0;
  double kendall_tau = 0.0;
  std::size_t max_displacement = 0;  // over the top-k authors at theta_from
};

struct StabilityReport {
  std::size_t top_k = 0;
  std::vector<StabilityStep> steps;
};

inline StabilityReport rank_stability(std::span<const SweepPoint> sweep, std::size_t top_k) {
  if (sweep.size() < 2) throw InvalidArgument("stability needs at least two sweep points");
  for (const auto& p : sweep)
    if (!p.scores) throw InvalidArgument("sweep point theta=" + format_real(p.theta) + " has no scores: " + p.error);
  const auto& authors = sweep.front().scores->authors();
  for (const auto& p : sweep)
    if (p.scores->authors() != authors) throw InvalidArgument("sweep points cover different author sets");

  StabilityReport report{top_k, {}};
  std::vector<Ranking> rankings;
  std::vector<std::vector<double>> ranks;
  for (const auto& p : sweep) {
    rankings.push_back(rank_authors(*p.scores));
    ranks.push_back(rank_vector(*p.scores));
  }
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
    StabilityStep step{sweep[i].theta, sweep[i + 1].theta, kendall_tau_b(ranks[i], ranks[i + 1]), 0};
    const std::size_t k = std::min(top_k, rankings[i].size());
    for (std::size_t j = 0; j < k; ++j) {
      const auto& e = rankings[i][j];
      const auto slot = static_cast<std::size_t>(std::lower_bound(authors.begin(), authors.end(), e.author) - authors.begin());
      const auto later = static_cast<std::size_t>(ranks[i + 1][slot]);
      step.max_displacement = std::max(step.max_displacement, later > e.rank ? later - e.rank : e.rank - later);
    }
    report.steps.push_back(step);
  }
  return report;
}

// theta,author,score,rank for the tracked authors at every converged point.
inline void write_sweep_csv(std::span<const SweepPoint> sweep, std::span<const std::string> tracked, std::ostream& out) {
  out << "theta,author,score,rank\n";
  for (const auto& p : sweep) {
    if (!p.scores) continue;
    const auto ranks = rank_vector(*p.scores);
    const auto& authors = p.scores->authors();
    for (const auto& a : tracked) {
      const auto it = std::lower_bound(authors.begin(), authors.end(), a);
      if (it == authors.end() || *it != a) throw UnknownAuthor(a);
      const auto slot = static_cast<std::size_t>(it - authors.begin());
      out << format_real(p.theta) << ',' << csv_field(a) << ',' << format_real(p.scores->scores()[slot]) << ','
          << static_cast<std::size_t>(ranks[slot]) << '\n';
    }
  }
}

inline void write_stability_csv(const StabilityReport& report, std::ostream& out) {
  out << "theta_from,theta_to,kendall_tau,max_displacement_top" << report.top_k << '\n';
  for (const auto& s : report.steps)
    out << format_real(s.theta_from) << ',' << format_real(s.theta_to) << ',' << format_real(s.kendall_tau) << ','
        << s.max_displacement << '\n';
}

}  // namespace scholarank
