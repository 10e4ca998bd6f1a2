#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "scholarank/error.hpp"
#include "scholarank/scores.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

// k = ceil(fraction * n), at least 1. The small slack keeps products such as
// 0.07 * 100 from rounding up to the next integer.
inline std::size_t top_count(double fraction, std::size_t n) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw InvalidArgument("fraction must lie in (0, 1]");
  const auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(n, 1));
}

namespace detail {

inline void require_same_authors(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size())
    throw InvalidArgument("rankings '" + a.metric() + "' and '" + b.metric() + "' cover different author sets");
  std::vector<std::string> x, y;
  x.reserve(a.size());
  y.reserve(b.size());
  for (const auto& e : a.entries()) x.push_back(e.author);
  for (const auto& e : b.entries()) y.push_back(e.author);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y)
    throw InvalidArgument("rankings '" + a.metric() + "' and '" + b.metric() + "' cover different author sets");
}

}  // namespace detail

// Percentage of the top-k authors of `a` that are also in the top-k of `b`.
inline double top_fraction_overlap(const Ranking& a, const Ranking& b, double fraction) {
  detail::require_same_authors(a, b);
  if (a.size() == 0) throw InvalidArgument("cannot compare empty rankings");
  const std::size_t k = top_count(fraction, a.size());
  std::unordered_set<std::string> top_a;
  for (std::size_t i = 0; i < k; ++i) top_a.insert(a[i].author);
  std::size_t common = 0;
  for (std::size_t i = 0; i < k; ++i) common += top_a.contains(b[i].author);
  return 100.0 * static_cast<double>(common) / static_cast<double>(k);
}

struct OverlapMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> percent;  // symmetric, diagonal 100
};

struct LabeledRanking {
  std::string label;
  Ranking ranking;
};

inline OverlapMatrix overlap_matrix(const std::vector<LabeledRanking>& rankings, double fraction) {
  if (rankings.size() < 2) throw InvalidArgument("overlap matrix needs at least two rankings");
  const auto n = rankings.size();
  OverlapMatrix m;
  m.percent.assign(n, std::vector<double>(n, 100.0));
  for (const auto& r : rankings) m.labels.push_back(r.label);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m.percent[i][j] = m.percent[j][i] = top_fraction_overlap(rankings[i].ranking, rankings[j].ranking, fraction);
  return m;
}

inline void write_overlap_csv(const OverlapMatrix& m, std::ostream& out) {
  out << "metric";
  for (const auto& l : m.labels) out << ',' << csv_field(l);
  out << '\n';
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    out << csv_field(m.labels[i]);
    for (double v : m.percent[i]) out << ',' << format_real(v);
    out << '\n';
  }
}

}  // namespace scholarank
