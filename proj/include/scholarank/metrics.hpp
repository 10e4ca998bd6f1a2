#pragma once

// Citation-credit metrics: h-index, Infl, CoA, fractional and harmonic credit.
// Missing citation counts contribute zero throughout.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scholarank/corpus.hpp"
#include "scholarank/error.hpp"

namespace scholarank {

// Largest h such that at least h entries are >= h. Linear time via capped
// counting.
inline std::size_t h_index(std::span<const std::int64_t> citation_counts) {
  const std::size_t n = citation_counts.size();
  std::vector<std::size_t> at_least(n + 1, 0);
  for (auto c : citation_counts) {
    if (c <= 0) continue;
    ++at_least[std::min<std::size_t>(static_cast<std::size_t>(c), n)];
  }
  std::size_t cumulative = 0;
  for (std::size_t h = n; h > 0; --h) {
    cumulative += at_least[h];
    if (cumulative >= h) return h;
  }
  return 0;
}

inline double harmonic_number(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

// (1/i) / H_N for 1-based byline position i of N authors.
inline double unit_harmonic_credit(std::size_t position, std::size_t author_count) {
  if (position < 1 || position > author_count)
    throw InvalidArgument("byline position " + std::to_string(position) + " outside [1, " +
                          std::to_string(author_count) + "]");
  return (1.0 / static_cast<double>(position)) / harmonic_number(author_count);
}

inline std::int64_t citations_or_zero(const Paper& p) { return p.citations.value_or(0); }

struct InflCoa {
  std::int64_t infl = 0;
  std::size_t coa = 0;

  bool operator==(const InflCoa&) const = default;
};

namespace detail {

inline void require_author(const Corpus& corpus, const std::string& author) {
  if (!corpus.has_author(author)) throw UnknownAuthor(author);
}

// Calls fn(paper, 1-based position) for every paper the author is on.
template <class Fn>
void for_each_authorship(const Corpus& corpus, const std::string& author, Fn&& fn) {
  require_author(corpus, author);
  for (const auto& p : corpus.papers()) {
    auto it = std::find(p.author_ids.begin(), p.author_ids.end(), author);
    if (it != p.author_ids.end()) fn(p, static_cast<std::size_t>(it - p.author_ids.begin()) + 1);
  }
}

}  // namespace detail

// CoA counts every article the author is on, solo papers included.
inline InflCoa infl_and_coa(const Corpus& corpus, const std::string& author) {
  InflCoa r;
  detail::for_each_authorship(corpus, author, [&](const Paper& p, std::size_t) {
    r.infl += citations_or_zero(p);
    ++r.coa;
  });
  return r;
}

inline double frac_credit(const Corpus& corpus, const std::string& author) {
  double total = 0.0;
  detail::for_each_authorship(corpus, author, [&](const Paper& p, std::size_t) {
    total += static_cast<double>(citations_or_zero(p)) / static_cast<double>(p.author_ids.size());
  });
  return total;
}

inline double harm_credit(const Corpus& corpus, const std::string& author) {
  double total = 0.0;
  detail::for_each_authorship(corpus, author, [&](const Paper& p, std::size_t position) {
    total += static_cast<double>(citations_or_zero(p)) * unit_harmonic_credit(position, p.author_ids.size());
  });
  return total;
}

inline std::size_t author_h_index(const Corpus& corpus, const std::string& author) {
  std::vector<std::int64_t> counts;
  detail::for_each_authorship(corpus, author, [&](const Paper& p, std::size_t) {
    counts.push_back(citations_or_zero(p));
  });
  return h_index(counts);
}

struct AuthorCredit {
  std::string author;
  std::int64_t infl = 0;
  std::size_t coa = 0;
  double frac = 0.0;
  double harm = 0.0;
  std::size_t h = 0;
};

// All credit metrics for every author in one pass over the papers. Entries
// follow the corpus author order (ascending key), matching graph node order.
inline std::vector<AuthorCredit> author_credits(const Corpus& corpus) {
  std::vector<AuthorCredit> out;
  std::unordered_map<std::string, std::size_t> slot;
  out.reserve(corpus.authors().size());
  for (const auto& [id, a] : corpus.authors()) {
    slot.emplace(id, out.size());
    out.push_back({id});
  }
  std::vector<std::vector<std::int64_t>> per_author(out.size());
  for (const auto& p : corpus.papers()) {
    const auto n = p.author_ids.size();
    const auto c = citations_or_zero(p);
    const double h_n = harmonic_number(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = slot.at(p.author_ids[i]);
      out[s].infl += c;
      ++out[s].coa;
      out[s].frac += static_cast<double>(c) / static_cast<double>(n);
      out[s].harm += static_cast<double>(c) * ((1.0 / static_cast<double>(i + 1)) / h_n);
      per_author[s].push_back(c);
    }
  }
  for (std::size_t s = 0; s < out.size(); ++s) out[s].h = h_index(per_author[s]);
  return out;
}

}  // namespace scholarank
