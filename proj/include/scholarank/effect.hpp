#pragma once

// Vargha-Delaney A12 effect size and the median-ordered grouping used to
// colour the citations-by-team-size table.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scholarank/corpus.hpp"
#include "scholarank/error.hpp"

namespace scholarank {

struct StatsConfig {
  double a12_threshold = 0.56;
  double top_fraction = 0.01;
  std::vector<double> theta_grid = default_theta_grid();
  std::size_t top_k = 20;

  static std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0) || stop < start) throw InvalidArgument("grid needs start <= stop and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    // Rounded to 1e-12 so that e.g. 3 * 0.05 lands on the double nearest 0.15.
    for (std::size_t i = 0; i < count; ++i)
      grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    return grid;
  }

  static std::vector<double> default_theta_grid() { return make_grid(0.0, 1.0, 0.05); }

  void validate() const {
    if (!(a12_threshold >= 0.5 && a12_threshold <= 1.0)) throw InvalidArgument("a12 threshold must lie in [0.5, 1]");
    if (!(top_fraction > 0.0 && top_fraction <= 1.0)) throw InvalidArgument("top fraction must lie in (0, 1]");
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
      if (!(theta_grid[i] >= 0.0 && theta_grid[i] <= 1.0)) throw InvalidArgument("theta grid values must lie in [0, 1]");
      if (i > 0 && !(theta_grid[i] > theta_grid[i - 1])) throw InvalidArgument("theta grid must be strictly increasing");
    }
  }
};

struct PairCounts {
  std::uint64_t greater = 0;  // #(u > v)
  std::uint64_t equal = 0;    // #(u == v)
};

// Counts over all pairs (u in xs, v in ys), in O((m + n) log n).
inline PairCounts a12_pair_counts(std::span<const double> xs, std::span<const double> ys) {
  std::vector<double> sorted(ys.begin(), ys.end());
  for (double v : sorted)
    if (std::isnan(v)) throw InvalidArgument("A12 input contains NaN");
  std::sort(sorted.begin(), sorted.end());
  PairCounts c;
  for (double u : xs) {
    if (std::isnan(u)) throw InvalidArgument("A12 input contains NaN");
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), u);
    const auto hi = std::upper_bound(lo, sorted.end(), u);
    c.greater += static_cast<std::uint64_t>(lo - sorted.begin());
    c.equal += static_cast<std::uint64_t>(hi - lo);
  }
  return c;
}

// (g + e/2) / (m n): probability that a draw from xs beats one from ys, ties
// counting half.
inline double a12_effect(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) throw InvalidArgument("A12 needs two non-empty samples");
  const PairCounts c = a12_pair_counts(xs, ys);
  return (static_cast<double>(c.greater) + static_cast<double>(c.equal) / 2.0) /
         (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

inline bool is_trivial_effect(double a12, double threshold) { return std::max(a12, 1.0 - a12) < threshold; }

inline double median(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const auto mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

struct SampleCell {
  std::string label;
  std::vector<double> samples;
};

struct EffectCell {
  std::string label;
  std::vector<double> samples;
  double median = 0.0;
  std::size_t group = 0;  // 1 = lowest-median group
};

struct EffectGroup {
  int key = 0;                    // row key, the publication year for citation tables
  std::vector<EffectCell> cells;  // ascending median

  std::size_t group_count() const { return cells.empty() ? 0 : cells.back().group; }
};

// Cells are ordered by median; walking that order, a cell joins the open
// group only if its effect against every member is trivially small,
// otherwise it opens the next group. Members of a group are therefore
// pairwise indistinguishable.
inline EffectGroup partition_by_effect(std::vector<SampleCell> cells, const StatsConfig& config, int key = 0) {
  config.validate();
  EffectGroup out{key, {}};
  out.cells.reserve(cells.size());
  for (auto& c : cells) {
    if (c.samples.empty()) throw InvalidArgument("cell '" + c.label + "' has no samples");
    const double m = median(c.samples);
    out.cells.push_back({std::move(c.label), std::move(c.samples), m, 0});
  }
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const EffectCell& a, const EffectCell& b) { return a.median < b.median; });

  std::size_t group = 0, open_from = 0;
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    bool joins = group > 0;
    for (std::size_t j = open_from; joins && j < i; ++j)
      joins = is_trivial_effect(a12_effect(out.cells[i].samples, out.cells[j].samples), config.a12_threshold);
    if (!joins) {
      ++group;
      open_from = i;
    }
    out.cells[i].group = group;
  }
  return out;
}

// Per year, average cites per year (citations / (reference_year - year + 1))
// of each paper with a known count, bucketed by byline size 1..6, 7+ and
// grouped by effect size. Empty buckets are absent.
inline std::map<int, EffectGroup> median_cites_by_coauthors(const Corpus& corpus, const StatsConfig& config) {
  const int reference = corpus.reference_year();
  std::map<int, std::map<std::size_t, std::vector<double>>> by_year;
  for (const auto& p : corpus.papers()) {
    if (!p.citations) continue;
    if (p.year > reference)
      throw InvalidArgument("paper year " + std::to_string(p.year) + " is after reference year " +
                            std::to_string(reference));
    const double span_years = static_cast<double>(reference - p.year + 1);
    by_year[p.year][coauthor_bucket(p.author_ids.size())].push_back(static_cast<double>(*p.citations) / span_years);
  }
  std::map<int, EffectGroup> out;
  for (auto& [year, buckets] : by_year) {
    std::vector<SampleCell> cells;
    for (auto& [bucket, samples] : buckets) cells.push_back({coauthor_bucket_label(bucket), std::move(samples)});
    out.emplace(year, partition_by_effect(std::move(cells), config, year));
  }
  return out;
}

}  // namespace scholarank
