#pragma once

// Citation-count client for a crossref-style works API, with a shared
// request-rate cap, exponential backoff on transient failures and a
// JSON-lines cache format for fetched counts.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "scholarank/error.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

using Timestamp = std::chrono::sys_seconds;

inline std::string format_utc(Timestamp t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Timestamp parse_utc(const std::string& s) {
  std::tm tm{};
  char z = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &tm.tm_year, &tm.tm_mon, &tm.tm_mday, &tm.tm_hour,
                  &tm.tm_min, &tm.tm_sec, &z) != 7 ||
      z != 'Z')
    throw InvalidArgument("timestamp '" + s + "' is not of the form YYYY-MM-DDTHH:MM:SSZ");
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  return std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::from_time_t(timegm(&tm)));
}

struct CitationEntry {
  std::string doi;  // normalized
  std::int64_t count = 0;
  Timestamp fetched_at{};

  bool operator==(const CitationEntry&) const = default;
};

// Keyed by normalized DOI.
using CitationSet = std::map<std::string, CitationEntry>;

struct CitationApiConfig {
  std::string base = "https://api.crossref.org";
  std::string path_template = "/works/{doi}";
  std::string count_pointer = "/message/is-referenced-by-count";
  double requests_per_second = 2.0;  // <= 0 disables the cap
  int retries = 3;
  std::chrono::milliseconds backoff_base{1000};
  std::chrono::seconds timeout{30};
  std::string user_agent = "scholarank/0.1 (mailto:unknown@example.org)";
  std::function<Timestamp()> clock = [] {
    return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  };
};

// Spaces request start times at least 1/rate apart across all callers.
class RateLimiter {
 public:
  explicit RateLimiter(double requests_per_second)
      : interval_(requests_per_second > 0.0
                      ? std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(1.0 / requests_per_second))
                      : std::chrono::steady_clock::duration::zero()) {}

  void acquire() {
    if (interval_ == std::chrono::steady_clock::duration::zero()) return;
    std::chrono::steady_clock::time_point slot;
    {
      std::lock_guard lock(mutex_);
      slot = std::max(std::chrono::steady_clock::now(), next_);
      next_ = slot + interval_;
    }
    std::this_thread::sleep_until(slot);
  }

 private:
  std::chrono::steady_clock::duration interval_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point next_{};
};

enum class FetchStatus { found, not_found };

struct FetchResult {
  FetchStatus status = FetchStatus::not_found;
  std::optional<CitationEntry> entry;
  int attempts = 0;
};

namespace detail {

inline std::string percent_encode_path(std::string_view s) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~' || c == '/' || c == ':' || c == ';' ||
        c == '(' || c == ')') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 15]);
    }
  }
  return out;
}

// "http://host:port/prefix" -> ("http://host:port", "/prefix")
inline std::pair<std::string, std::string> split_base(const std::string& base) {
  const auto scheme = base.find("://");
  const auto slash = base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash == std::string::npos) return {base, ""};
  std::string prefix = base.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base.substr(0, slash), prefix};
}

}  // namespace detail

class CitationClient {
 public:
  explicit CitationClient(CitationApiConfig config, std::shared_ptr<RateLimiter> limiter = nullptr)
      : config_(std::move(config)),
        limiter_(limiter ? std::move(limiter) : std::make_shared<RateLimiter>(config_.requests_per_second)) {
    auto [host, prefix] = detail::split_base(config_.base);
    prefix_ = std::move(prefix);
    http_ = std::make_unique<httplib::Client>(host);
    http_->set_connection_timeout(config_.timeout);
    http_->set_read_timeout(config_.timeout);
    http_->set_follow_location(true);
    http_->set_default_headers({{"User-Agent", config_.user_agent}, {"Accept", "application/json"}});
  }

  const CitationApiConfig& config() const noexcept { return config_; }
  std::shared_ptr<RateLimiter> limiter() const { return limiter_; }

  // 404 is a not-found result. Transport errors, 429 and 5xx are retried with
  // backoff base * 2^(attempt-1); other statuses fail immediately.
  FetchResult fetch(const std::string& raw_doi) {
    const std::string doi = normalize_doi(raw_doi);
    if (!is_doi_syntax(doi)) throw InvalidArgument("'" + raw_doi + "' is not a DOI (expected a 10. prefix)");
    std::string path = config_.path_template;
    if (auto at = path.find("{doi}"); at != std::string::npos) path.replace(at, 5, detail::percent_encode_path(doi));
    path = prefix_ + path;

    const int max_attempts = 1 + std::max(0, config_.retries);
    std::string last_problem;
    int last_status = 0;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
      limiter_->acquire();
      auto res = http_->Get(path);
      if (!res) {
        last_problem = "transport error: " + httplib::to_string(res.error());
        last_status = 0;
      } else if (res->status == 200) {
        return {FetchStatus::found, CitationEntry{doi, parse_count(res->body, doi, attempt), config_.clock()}, attempt};
      } else if (res->status == 404) {
        return {FetchStatus::not_found, std::nullopt, attempt};
      } else if (res->status == 429 || res->status >= 500) {
        last_problem = "HTTP " + std::to_string(res->status);
        last_status = res->status;
      } else {
        throw FetchError("citation lookup for " + doi + " failed with HTTP " + std::to_string(res->status),
                         res->status, attempt);
      }
      if (attempt < max_attempts)
        std::this_thread::sleep_for(config_.backoff_base * (1LL << (attempt - 1)));
    }
    throw FetchError("citation lookup for " + doi + " gave up after " + std::to_string(max_attempts) +
                         " attempts (" + last_problem + ")",
                     last_status, max_attempts);
  }

 private:
  std::int64_t parse_count(const std::string& body, const std::string& doi, int attempt) const {
    try {
      const auto json = nlohmann::json::parse(body);
      const auto& v = json.at(nlohmann::json::json_pointer(config_.count_pointer));
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw std::runtime_error("not a count");
      return v.get<std::int64_t>();
    } catch (const std::exception&) {
      throw FetchError("citation lookup for " + doi + ": response lacks an integer at " + config_.count_pointer,
                       200, attempt);
    }
  }

  CitationApiConfig config_;
  std::shared_ptr<RateLimiter> limiter_;
  std::string prefix_;
  std::unique_ptr<httplib::Client> http_;
};

inline FetchResult fetch_citation_count(const std::string& doi, CitationClient& client) { return client.fetch(doi); }

struct BulkFetchResult {
  CitationSet found;
  std::vector<std::string> not_found;
  std::vector<std::pair<std::string, std::string>> failed;  // doi, reason
};

// Bounded parallel fetch; all workers share one rate limiter. Output is
// independent of worker scheduling.
inline BulkFetchResult fetch_all(const std::vector<std::string>& dois, const CitationApiConfig& config,
                                 unsigned workers = 1) {
  struct Slot {
    std::optional<FetchResult> result;
    std::string error;
  };
  std::vector<Slot> slots(dois.size());
  auto limiter = std::make_shared<RateLimiter>(config.requests_per_second);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    CitationClient client(config, limiter);
    for (std::size_t i; (i = next.fetch_add(1)) < dois.size();) {
      try {
        slots[i].result = client.fetch(dois[i]);
      } catch (const Error& e) {
        slots[i].error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  }
  BulkFetchResult out;
  for (std::size_t i = 0; i < dois.size(); ++i) {
    if (!slots[i].result)
      out.failed.emplace_back(dois[i], slots[i].error);
    else if (slots[i].result->status == FetchStatus::found)
      out.found.insert_or_assign(slots[i].result->entry->doi, *slots[i].result->entry);
    else
      out.not_found.push_back(normalize_doi(dois[i]));
  }
  return out;
}

// Cache lines: {"doi": "...", "count": N, "fetched_at": "YYYY-MM-DDTHH:MM:SSZ"}.
// A later line for the same DOI replaces an earlier one.
inline CitationSet read_citation_cache(std::istream& in) {
  CitationSet set;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto rec = nlohmann::json::parse(text);
      CitationEntry e{normalize_doi(rec.at("doi").get<std::string>()), rec.at("count").get<std::int64_t>(),
                      parse_utc(rec.at("fetched_at").get<std::string>())};
      if (e.doi.empty()) throw InvalidArgument("empty DOI");
      if (e.count < 0) throw InvalidArgument("negative count");
      set.insert_or_assign(e.doi, e);
    } catch (const std::exception& ex) {
      throw ParseError(std::string("citation cache: ") + ex.what(), line);
    }
  }
  return set;
}

inline void write_citation_cache(const CitationSet& set, std::ostream& out) {
  for (const auto& [doi, e] : set)
    out << nlohmann::json{{"doi", e.doi}, {"count", e.count}, {"fetched_at", format_utc(e.fetched_at)}}.dump() << '\n';
}

}  // namespace scholarank
