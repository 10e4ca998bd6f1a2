#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "scholarank/error.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

// Per-author scores for one metric, keyed by author in ascending order.
class ScoreMap {
 public:
  ScoreMap() = default;

  ScoreMap(std::string metric, std::vector<std::string> authors, std::vector<double> scores)
      : metric_(std::move(metric)) {
    if (authors.size() != scores.size()) throw InvalidArgument("score map: author/score length mismatch");
    std::vector<std::size_t> order(authors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (!std::is_sorted(authors.begin(), authors.end()))
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return authors[a] < authors[b]; });
    authors_.reserve(order.size());
    scores_.reserve(order.size());
    for (auto i : order) {
      if (!authors_.empty() && authors_.back() == authors[i])
        throw InvalidArgument("score map: duplicate author '" + authors[i] + "'");
      authors_.push_back(std::move(authors[i]));
      scores_.push_back(scores[i]);
    }
  }

  const std::string& metric() const noexcept { return metric_; }
  const std::vector<std::string>& authors() const noexcept { return authors_; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  std::size_t size() const noexcept { return authors_.size(); }
  bool empty() const noexcept { return authors_.empty(); }

  double at(const std::string& author) const {
    auto it = std::lower_bound(authors_.begin(), authors_.end(), author);
    if (it == authors_.end() || *it != author) throw UnknownAuthor(author);
    return scores_[static_cast<std::size_t>(it - authors_.begin())];
  }

  double sum() const {
    // Kahan summation.
    double s = 0.0, c = 0.0;
    for (double v : scores_) {
      const double y = v - c;
      const double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  }

 private:
  std::string metric_;
  std::vector<std::string> authors_;
  std::vector<double> scores_;
};

struct RankedAuthor {
  std::string author;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based; tied scores share the smallest position

  bool operator==(const RankedAuthor&) const = default;
};

class Ranking {
 public:
  Ranking() = default;
  Ranking(std::string metric, std::vector<RankedAuthor> entries)
      : metric_(std::move(metric)), entries_(std::move(entries)) {}

  const std::string& metric() const noexcept { return metric_; }
  const std::vector<RankedAuthor>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const RankedAuthor& operator[](std::size_t i) const { return entries_[i]; }

  bool operator==(const Ranking&) const = default;

 private:
  std::string metric_;
  std::vector<RankedAuthor> entries_;
};

// Descending score, ties ordered by ascending author key and sharing the
// minimum rank position (1, 1, 3, ...).
inline Ranking rank_authors(const ScoreMap& scores) {
  if (scores.empty()) throw InvalidArgument("cannot rank an empty score map");
  std::vector<RankedAuthor> entries;
  entries.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores.scores()[i]))
      throw InvalidArgument("non-finite score for author '" + scores.authors()[i] + "'");
    entries.push_back({scores.authors()[i], scores.scores()[i], 0});
  }
  // Keys are already ascending, so a stable sort on score alone applies the tie rule.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankedAuthor& a, const RankedAuthor& b) { return a.score > b.score; });
  for (std::size_t i = 0; i < entries.size(); ++i)
    entries[i].rank = (i > 0 && entries[i].score == entries[i - 1].score) ? entries[i - 1].rank : i + 1;
  return Ranking(scores.metric(), std::move(entries));
}

inline void write_ranking_csv(const Ranking& ranking, std::ostream& out) {
  out << "author,score,rank\n";
  for (const auto& e : ranking.entries())
    out << csv_field(e.author) << ',' << format_real(e.score) << ',' << e.rank << '\n';
}

}  // namespace scholarank
