#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "scholarank/citations.hpp"
#include "scholarank/corpus.hpp"
#include "scholarank/dblp.hpp"
#include "scholarank/error.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

struct MergeReport {
  std::size_t records = 0;
  std::size_t papers = 0;
  std::size_t matched = 0;
  std::size_t unmatched = 0;      // papers - matched
  std::size_t without_doi = 0;    // part of unmatched
  std::size_t duplicate_doi = 0;  // records dropped because their DOI was already taken

  bool operator==(const MergeReport&) const = default;
};

inline nlohmann::json to_json(const MergeReport& r) {
  return {{"records", r.records},     {"papers", r.papers},           {"matched", r.matched},
          {"unmatched", r.unmatched}, {"without_doi", r.without_doi}, {"duplicate_doi", r.duplicate_doi}};
}

struct MergeResult {
  Corpus corpus;
  MergeReport report;
};

// Keeps the records published in [year_min, year_max] at the listed venues
// (all venues when none are given).
inline std::vector<RawRecord> select_records(const std::vector<RawRecord>& records, int year_min, int year_max,
                                             const std::optional<std::set<std::string>>& venues = std::nullopt) {
  if (year_min > year_max) throw InvalidArgument("inverted year range");
  std::vector<RawRecord> out;
  for (const auto& r : records)
    if (r.year >= year_min && r.year <= year_max && (!venues || venues->contains(r.venue))) out.push_back(r);
  return out;
}

// Attaches citation counts by normalized DOI. A record whose DOI is absent
// from `citations` (or that has no DOI) becomes a paper with a missing count.
// Authors are keyed by normalized name; a name repeated within one byline is
// kept at its first position.
inline MergeResult merge_citations(const std::vector<RawRecord>& records, const CitationSet& citations) {
  MergeReport report;
  report.records = records.size();
  std::vector<Paper> papers;
  std::map<std::string, Author> authors;
  std::map<std::string, Venue> venues;
  std::unordered_set<std::string> dois;

  for (const auto& r : records) {
    std::optional<std::string> doi;
    if (r.doi) {
      doi = normalize_doi(*r.doi);
      if (doi->empty()) doi.reset();
    }
    if (doi && !dois.insert(*doi).second) {
      ++report.duplicate_doi;
      continue;
    }
    Paper p;
    p.doi = doi;
    p.title = r.title;
    p.year = r.year;
    p.venue_id = normalize_name(r.venue);
    venues.try_emplace(p.venue_id, Venue{p.venue_id, p.venue_id,
                                         r.type == PublicationType::article ? VenueKind::journal : VenueKind::conference});
    std::unordered_set<std::string> byline;
    for (const auto& name : r.authors) {
      const std::string key = normalize_name(name);
      if (key.empty() || !byline.insert(key).second) continue;
      authors.try_emplace(key, Author{key, key});
      p.author_ids.push_back(key);
    }
    if (p.author_ids.empty()) continue;
    if (!doi) {
      ++report.without_doi;
    } else if (auto it = citations.find(*doi); it != citations.end()) {
      p.citations = it->second.count;
      ++report.matched;
    }
    papers.push_back(std::move(p));
  }
  report.papers = papers.size();
  report.unmatched = report.papers - report.matched;

  std::vector<Author> author_list;
  for (auto& [k, a] : authors) author_list.push_back(std::move(a));
  std::vector<Venue> venue_list;
  for (auto& [k, v] : venues) venue_list.push_back(std::move(v));
  return {Corpus(std::move(papers), std::move(author_list), std::move(venue_list)), report};
}

}  // namespace scholarank
