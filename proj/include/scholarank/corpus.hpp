#pragma once

// Canonical data model: papers, authors and venues plus JSON-lines
// persistence, filtering and descriptive statistics.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "scholarank/error.hpp"

namespace scholarank {

enum class VenueKind { conference, journal };

inline const char* to_string(VenueKind k) { return k == VenueKind::conference ? "conference" : "journal"; }

inline VenueKind parse_venue_kind(const std::string& s) {
  if (s == "conference") return VenueKind::conference;
  if (s == "journal") return VenueKind::journal;
  throw InvalidArgument("venue type must be 'conference' or 'journal', got '" + s + "'");
}

struct Paper {
  std::optional<std::string> doi;
  std::string title;
  std::string venue_id;
  int year = 0;
  std::vector<std::string> author_ids;  // byline order
  std::optional<std::int64_t> citations;

  bool operator==(const Paper&) const = default;
};

struct Author {
  std::string id;
  std::string name;

  bool operator==(const Author&) const = default;
};

struct Venue {
  std::string id;
  std::string name;
  VenueKind kind = VenueKind::conference;

  bool operator==(const Venue&) const = default;
};

// Immutable after construction. The constructor enforces referential
// integrity, unique DOIs, non-empty duplicate-free bylines and non-negative
// citation counts.
class Corpus {
 public:
  Corpus() = default;

  Corpus(std::vector<Paper> papers, std::vector<Author> authors, std::vector<Venue> venues,
         std::optional<int> reference_year = std::nullopt)
      : papers_(std::move(papers)), reference_year_override_(reference_year) {
    for (auto& a : authors) {
      std::string id = a.id;
      if (!authors_.emplace(id, std::move(a)).second)
        throw InvalidArgument("duplicate author id '" + id + "'");
    }
    for (auto& v : venues) {
      std::string id = v.id;
      if (!venues_.emplace(id, std::move(v)).second)
        throw InvalidArgument("duplicate venue id '" + id + "'");
    }
    std::unordered_map<std::string, std::size_t> seen_doi;
    for (std::size_t i = 0; i < papers_.size(); ++i) {
      const Paper& p = papers_[i];
      validate_paper(p, i + 1);
      if (p.doi && !p.doi->empty()) {
        auto [it, fresh] = seen_doi.emplace(*p.doi, i + 1);
        if (!fresh) throw DuplicateDoiError(*p.doi, it->second, i + 1);
      }
    }
  }

  const std::vector<Paper>& papers() const noexcept { return papers_; }
  const std::map<std::string, Author>& authors() const noexcept { return authors_; }
  const std::map<std::string, Venue>& venues() const noexcept { return venues_; }

  bool has_author(const std::string& id) const { return authors_.contains(id); }
  bool has_venue(const std::string& id) const { return venues_.contains(id); }

  // Explicit override when set, otherwise the latest publication year (0 for
  // an empty corpus).
  int reference_year() const noexcept {
    if (reference_year_override_) return *reference_year_override_;
    int y = 0;
    for (const auto& p : papers_) y = std::max(y, p.year);
    return y;
  }
  std::optional<int> reference_year_override() const noexcept { return reference_year_override_; }

  Corpus with_reference_year(int year) const {
    Corpus c = *this;
    c.reference_year_override_ = year;
    return c;
  }

  bool operator==(const Corpus&) const = default;

 private:
  void validate_paper(const Paper& p, std::size_t ordinal) const {
    const std::string where = "paper #" + std::to_string(ordinal);
    if (p.author_ids.empty()) throw InvalidArgument(where + " has no authors");
    std::unordered_set<std::string> byline;
    for (const auto& a : p.author_ids) {
      if (!byline.insert(a).second) throw InvalidArgument(where + " lists author '" + a + "' twice");
      if (!authors_.contains(a)) throw ReferenceError(where + " references unknown author '" + a + "'");
    }
    if (!venues_.contains(p.venue_id))
      throw ReferenceError(where + " references unknown venue '" + p.venue_id + "'");
    if (p.citations && *p.citations < 0) throw InvalidArgument(where + " has negative citations");
  }

  std::vector<Paper> papers_;
  std::map<std::string, Author> authors_;
  std::map<std::string, Venue> venues_;
  std::optional<int> reference_year_override_;
};

// ---------------------------------------------------------------------------
// JSON-lines persistence

namespace detail {

template <class T>
T require_field(const nlohmann::json& rec, const char* key, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end()) throw ParseError(std::string("missing field '") + key + "'", line);
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", line);
  }
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& rec, const char* key, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", line);
  }
}

}  // namespace detail

inline Corpus read_corpus(std::istream& in) {
  std::vector<Paper> papers;
  std::vector<std::size_t> paper_lines;
  std::vector<Author> authors;
  std::vector<Venue> venues;
  std::unordered_map<std::string, std::size_t> author_lines, venue_lines, doi_lines;

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;

    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line);
    }
    if (!rec.is_object()) throw ParseError("record is not a JSON object", line);
    const auto kind = detail::require_field<std::string>(rec, "kind", line);

    if (kind == "paper") {
      Paper p;
      p.doi = detail::optional_field<std::string>(rec, "doi", line);
      if (p.doi && p.doi->empty()) p.doi.reset();
      p.title = detail::require_field<std::string>(rec, "title", line);
      p.venue_id = detail::require_field<std::string>(rec, "venue", line);
      p.year = detail::require_field<int>(rec, "year", line);
      p.author_ids = detail::require_field<std::vector<std::string>>(rec, "authors", line);
      p.citations = detail::optional_field<std::int64_t>(rec, "citations", line);
      if (p.author_ids.empty()) throw ParseError("paper has no authors", line);
      if (std::set<std::string>(p.author_ids.begin(), p.author_ids.end()).size() != p.author_ids.size())
        throw ParseError("paper lists an author twice", line);
      if (p.citations && *p.citations < 0) throw ParseError("negative citation count", line);
      if (p.doi) {
        auto [it, fresh] = doi_lines.emplace(*p.doi, line);
        if (!fresh) throw DuplicateDoiError(*p.doi, it->second, line);
      }
      papers.push_back(std::move(p));
      paper_lines.push_back(line);
    } else if (kind == "author") {
      Author a{detail::require_field<std::string>(rec, "id", line),
               detail::require_field<std::string>(rec, "name", line)};
      if (auto [it, fresh] = author_lines.emplace(a.id, line); !fresh)
        throw ParseError("author '" + a.id + "' already defined on line " + std::to_string(it->second), line);
      authors.push_back(std::move(a));
    } else if (kind == "venue") {
      Venue v;
      v.id = detail::require_field<std::string>(rec, "id", line);
      v.name = detail::require_field<std::string>(rec, "name", line);
      try {
        v.kind = parse_venue_kind(detail::require_field<std::string>(rec, "type", line));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line);
      }
      if (auto [it, fresh] = venue_lines.emplace(v.id, line); !fresh)
        throw ParseError("venue '" + v.id + "' already defined on line " + std::to_string(it->second), line);
      venues.push_back(std::move(v));
    } else {
      throw ParseError("unknown record kind '" + kind + "'", line);
    }
  }

  // Referential integrity, reported against the offending paper line.
  for (std::size_t i = 0; i < papers.size(); ++i) {
    for (const auto& a : papers[i].author_ids)
      if (!author_lines.contains(a))
        throw ReferenceError("line " + std::to_string(paper_lines[i]) + ": unknown author '" + a + "'");
    if (!venue_lines.contains(papers[i].venue_id))
      throw ReferenceError("line " + std::to_string(paper_lines[i]) + ": unknown venue '" +
                           papers[i].venue_id + "'");
  }
  return Corpus(std::move(papers), std::move(authors), std::move(venues));
}

inline Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  return read_corpus(in);
}

// Venues, then authors (both ordered by key), then papers in corpus order.
inline void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& [id, v] : corpus.venues())
    out << nlohmann::json{{"kind", "venue"}, {"id", v.id}, {"name", v.name}, {"type", to_string(v.kind)}}.dump()
        << '\n';
  for (const auto& [id, a] : corpus.authors())
    out << nlohmann::json{{"kind", "author"}, {"id", a.id}, {"name", a.name}}.dump() << '\n';
  for (const auto& p : corpus.papers()) {
    nlohmann::json rec{{"kind", "paper"},  {"title", p.title},        {"venue", p.venue_id},
                       {"year", p.year},   {"authors", p.author_ids}, {"doi", nullptr},
                       {"citations", nullptr}};
    if (p.doi) rec["doi"] = *p.doi;
    if (p.citations) rec["citations"] = *p.citations;
    out << rec.dump() << '\n';
  }
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write corpus file '" + path + "'");
  write_corpus(corpus, out);
  if (!out) throw Error("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------

inline Corpus filter_corpus(const Corpus& corpus, int year_min, int year_max,
                            const std::optional<std::set<std::string>>& venues = std::nullopt) {
  if (year_min > year_max)
    throw InvalidArgument("inverted year range [" + std::to_string(year_min) + ", " +
                          std::to_string(year_max) + "]");
  std::vector<Paper> kept;
  std::set<std::string> author_ids, venue_ids;
  for (const auto& p : corpus.papers()) {
    if (p.year < year_min || p.year > year_max) continue;
    if (venues && !venues->contains(p.venue_id)) continue;
    author_ids.insert(p.author_ids.begin(), p.author_ids.end());
    venue_ids.insert(p.venue_id);
    kept.push_back(p);
  }
  std::vector<Author> authors;
  for (const auto& id : author_ids) authors.push_back(corpus.authors().at(id));
  std::vector<Venue> vs;
  for (const auto& id : venue_ids) vs.push_back(corpus.venues().at(id));
  return Corpus(std::move(kept), std::move(authors), std::move(vs), corpus.reference_year_override());
}

struct CorpusStats {
  std::size_t papers = 0;
  std::size_t authors = 0;
  std::size_t venues = 0;
  std::size_t papers_with_citations = 0;

  bool operator==(const CorpusStats&) const = default;
};

inline CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats s{corpus.papers().size(), corpus.authors().size(), corpus.venues().size(), 0};
  s.papers_with_citations = static_cast<std::size_t>(std::count_if(
      corpus.papers().begin(), corpus.papers().end(), [](const Paper& p) { return p.citations.has_value(); }));
  return s;
}

// Byline-size buckets 1..6 and 7+ (index 6).
inline constexpr std::size_t kCoauthorBuckets = 7;

inline std::size_t coauthor_bucket(std::size_t author_count) {
  return std::min(author_count, kCoauthorBuckets) - 1;
}

inline std::string coauthor_bucket_label(std::size_t bucket) {
  return bucket + 1 == kCoauthorBuckets ? "7+" : std::to_string(bucket + 1);
}

using CoauthorFractions = std::array<double, kCoauthorBuckets>;

// Per year, the fraction of that year's papers in each byline-size bucket.
// Years without papers are absent.
inline std::map<int, CoauthorFractions> coauthor_distribution(const Corpus& corpus) {
  std::map<int, std::array<std::size_t, kCoauthorBuckets>> counts;
  for (const auto& p : corpus.papers()) ++counts[p.year][coauthor_bucket(p.author_ids.size())];
  std::map<int, CoauthorFractions> out;
  for (const auto& [year, c] : counts) {
    std::size_t total = 0;
    for (auto n : c) total += n;
    CoauthorFractions f{};
    for (std::size_t b = 0; b < kCoauthorBuckets; ++b)
      f[b] = static_cast<double>(c[b]) / static_cast<double>(total);
    out.emplace(year, f);
  }
  return out;
}

}  // namespace scholarank
