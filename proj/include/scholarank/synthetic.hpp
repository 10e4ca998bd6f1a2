#pragma once

// Reproducible synthetic corpora grown by preferential attachment: each new
// paper's lead author is drawn proportionally to prior authorships, and
// coauthors are either newcomers or further preferential draws. Every paper
// after the first contains an existing author, so the coauthorship graph is
// connected, and 3+ author papers close triangles.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "scholarank/corpus.hpp"

namespace scholarank {

struct SyntheticConfig {
  std::size_t authors = 500;
  std::uint64_t seed = 42;
  int year_min = 1992;
  int year_max = 2016;
  double newcomer_probability = 0.35;
  double missing_citation_probability = 0.04;
};

inline std::string synthetic_author_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "A%05zu", i);
  return buf;
}

inline Corpus synthetic_corpus(const SyntheticConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::discrete_distribution<int> team_size({10, 25, 25, 18, 10, 7, 5});  // 1..7 authors
  std::uniform_int_distribution<int> year(cfg.year_min, cfg.year_max);
  std::bernoulli_distribution newcomer(cfg.newcomer_probability);
  std::bernoulli_distribution missing(cfg.missing_citation_probability);
  std::normal_distribution<double> log_cites(0.0, 1.2);

  std::size_t next_author = 0;
  std::vector<std::size_t> authorships;  // one entry per (author, paper)
  std::vector<Paper> papers;

  auto citations_for = [&](std::size_t team, int y) {
    const double age = static_cast<double>(cfg.year_max - y + 1);
    return static_cast<std::int64_t>(std::floor(std::exp(log_cites(rng) + 0.2 * static_cast<double>(team)) *
                                                std::sqrt(age) - 0.5));
  };

  while (next_author < cfg.authors) {
    std::vector<std::size_t> byline;
    std::unordered_set<std::size_t> seen;
    const std::size_t size = papers.empty() ? 3 : static_cast<std::size_t>(team_size(rng)) + 1;
    for (std::size_t slot = 0; slot < size; ++slot) {
      const bool lead_from_pool = slot == 0 && !authorships.empty();
      std::size_t who;
      if (!lead_from_pool && (authorships.empty() || newcomer(rng))) {
        if (next_author >= cfg.authors) continue;
        who = next_author++;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, authorships.size() - 1);
        who = authorships[pick(rng)];
        if (seen.contains(who)) continue;
      }
      seen.insert(who);
      byline.push_back(who);
    }
    for (auto a : byline) authorships.push_back(a);

    Paper p;
    p.title = "Synthetic paper " + std::to_string(papers.size() + 1);
    p.venue_id = papers.size() % 3 == 0 ? "J1" : "C1";
    p.year = year(rng);
    for (auto a : byline) p.author_ids.push_back(synthetic_author_name(a));
    const auto c = std::max<std::int64_t>(0, citations_for(byline.size(), p.year));
    if (!missing(rng)) p.citations = c;
    char doi[32];
    std::snprintf(doi, sizeof doi, "10.5555/syn.%zu", papers.size() + 1);
    p.doi = doi;
    papers.push_back(std::move(p));
  }

  std::vector<Author> authors;
  for (std::size_t i = 0; i < next_author; ++i) authors.push_back({synthetic_author_name(i), synthetic_author_name(i)});
  std::vector<Venue> venues{{"C1", "Synthetic Conference", VenueKind::conference},
                            {"J1", "Synthetic Journal", VenueKind::journal}};
  return Corpus(std::move(papers), std::move(authors), std::move(venues));
}

}  // namespace scholarank
