#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "scholarank/corpus.hpp"
#include "scholarank/error.hpp"
#include "scholarank/graph.hpp"
#include "scholarank/metrics.hpp"
#include "scholarank/pagerank.hpp"
#include "scholarank/scores.hpp"

namespace scholarank {

enum class Metric { h, infl, coa, frac, harm, pr, pr_publ, pr_cite };

inline constexpr std::array<Metric, 8> kAllMetrics{Metric::h,    Metric::infl, Metric::coa,     Metric::frac,
                                                   Metric::harm, Metric::pr,   Metric::pr_publ, Metric::pr_cite};

// The seven metrics compared in the overlap matrix, in table order.
inline constexpr std::array<Metric, 7> kOverlapMetrics{Metric::infl, Metric::coa, Metric::harm,   Metric::frac,
                                                       Metric::pr,   Metric::pr_publ, Metric::pr_cite};

// CLI spelling.
inline std::string_view metric_key(Metric m) {
  switch (m) {
    case Metric::h: return "h";
    case Metric::infl: return "infl";
    case Metric::coa: return "coa";
    case Metric::frac: return "frac";
    case Metric::harm: return "harm";
    case Metric::pr: return "pr";
    case Metric::pr_publ: return "pr-publ";
    case Metric::pr_cite: return "pr-cite";
  }
  return "?";
}

// Report spelling.
inline std::string_view metric_label(Metric m) {
  switch (m) {
    case Metric::h: return "h-index";
    case Metric::infl: return "Infl";
    case Metric::coa: return "CoA";
    case Metric::frac: return "Frac";
    case Metric::harm: return "Harm";
    case Metric::pr: return "PR";
    case Metric::pr_publ: return "PR_publ";
    case Metric::pr_cite: return "PR_cite";
  }
  return "?";
}

inline Metric parse_metric(std::string_view key) {
  for (Metric m : kAllMetrics)
    if (metric_key(m) == key) return m;
  throw InvalidArgument("unknown metric '" + std::string(key) + "'");
}

// Graph and per-author credits derived once from a corpus and shared by all
// metrics computed on it.
struct MetricInputs {
  explicit MetricInputs(const Corpus& corpus)
      : graph(build_coauthor_graph(corpus)), credits(author_credits(corpus)) {}

  CoauthorGraph graph;
  std::vector<AuthorCredit> credits;  // aligned with graph.nodes()

  // W(a_i): publication count or total citations (Infl).
  std::vector<double> weights(WeightScheme scheme) const {
    std::vector<double> w(credits.size(), 1.0);
    if (scheme == WeightScheme::publications)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<double>(credits[i].coa);
    else if (scheme == WeightScheme::citations)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<double>(credits[i].infl);
    return w;
  }
};

inline WeightScheme weight_scheme_of(Metric m) {
  if (m == Metric::pr_publ) return WeightScheme::publications;
  if (m == Metric::pr_cite) return WeightScheme::citations;
  return WeightScheme::uniform;
}

inline bool is_pagerank_family(Metric m) { return m == Metric::pr || m == Metric::pr_publ || m == Metric::pr_cite; }

// `config.weight_scheme` is ignored; the metric picks its own weights.
inline ScoreMap compute_scores(const MetricInputs& in, Metric metric, const MetricConfig& config) {
  const std::string name(metric_key(metric));
  if (metric == Metric::pr) return pagerank(in.graph, config);
  if (is_pagerank_family(metric)) {
    MetricConfig c = config;
    c.weight_scheme = weight_scheme_of(metric);
    const auto w = in.weights(c.weight_scheme);
    return weighted_pagerank(in.graph, w, c, nullptr, name);
  }
  std::vector<double> s(in.credits.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& c = in.credits[i];
    switch (metric) {
      case Metric::h: s[i] = static_cast<double>(c.h); break;
      case Metric::infl: s[i] = static_cast<double>(c.infl); break;
      case Metric::coa: s[i] = static_cast<double>(c.coa); break;
      case Metric::frac: s[i] = c.frac; break;
      case Metric::harm: s[i] = c.harm; break;
      default: break;
    }
  }
  return ScoreMap(name, in.graph.nodes(), std::move(s));
}

}  // namespace scholarank
