#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scholarank/corpus.hpp"
#include "scholarank/error.hpp"

namespace scholarank {

// Undirected coauthorship graph. Nodes are author keys in ascending order, so
// node indices are stable for a given author set. Edge weight is the number of
// papers two authors share.
class CoauthorGraph {
 public:
  using Index = std::size_t;

  struct Neighbor {
    Index node;
    std::uint32_t weight;

    bool operator==(const Neighbor&) const = default;
  };

  struct Edge {
    Index a;
    Index b;
    std::uint32_t weight = 1;
  };

  CoauthorGraph() = default;

  // Node ids must be unique. Edges index into `nodes` as given; repeated
  // pairs accumulate their weights.
  CoauthorGraph(std::vector<std::string> nodes, std::span<const Edge> edges) {
    std::vector<Index> order(nodes.size());
    for (Index i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Index x, Index y) { return nodes[x] < nodes[y]; });
    std::vector<Index> remap(nodes.size());
    ids_.reserve(nodes.size());
    for (Index r = 0; r < order.size(); ++r) {
      remap[order[r]] = r;
      ids_.push_back(std::move(nodes[order[r]]));
    }
    for (Index i = 0; i < ids_.size(); ++i) {
      if (i > 0 && ids_[i] == ids_[i - 1]) throw InvalidArgument("duplicate graph node '" + ids_[i] + "'");
      index_.emplace(ids_[i], i);
    }

    std::unordered_map<std::uint64_t, std::uint32_t> weights;
    for (const Edge& e : edges) {
      if (e.a >= ids_.size() || e.b >= ids_.size()) throw InvalidArgument("edge endpoint out of range");
      if (e.a == e.b) throw InvalidArgument("self-edge on '" + ids_[remap[e.a]] + "'");
      if (e.weight == 0) throw InvalidArgument("edge weight must be >= 1");
      Index a = remap[e.a], b = remap[e.b];
      if (a > b) std::swap(a, b);
      weights[(static_cast<std::uint64_t>(a) << 32) | b] += e.weight;
    }
    adjacency_.resize(ids_.size());
    for (const auto& [key, w] : weights) {
      const Index a = key >> 32, b = key & 0xffffffffu;
      adjacency_[a].push_back({b, w});
      adjacency_[b].push_back({a, w});
    }
    for (auto& list : adjacency_)
      std::sort(list.begin(), list.end(), [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    edge_count_ = weights.size();
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<std::string>& nodes() const noexcept { return ids_; }
  const std::string& id(Index i) const { return ids_.at(i); }

  std::optional<Index> find(const std::string& author) const {
    auto it = index_.find(author);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Index index_of(const std::string& author) const {
    auto i = find(author);
    if (!i) throw UnknownAuthor(author);
    return *i;
  }

  std::span<const Neighbor> neighbors(Index i) const { return adjacency_.at(i); }

  // Number of distinct collaborators, independent of edge weights.
  std::size_t degree(Index i) const { return adjacency_.at(i).size(); }

  // Co-authored paper count for the pair, 0 when not adjacent.
  std::uint32_t weight(Index a, Index b) const {
    const auto& list = adjacency_.at(a);
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Neighbor& n, Index key) { return n.node < key; });
    return (it != list.end() && it->node == b) ? it->weight : 0;
  }

  // `a<TAB>b<TAB>weight`, each edge once with a < b, in index order.
  void write_edge_list(std::ostream& out) const {
    for (Index a = 0; a < ids_.size(); ++a)
      for (const Neighbor& n : adjacency_[a])
        if (a < n.node) out << ids_[a] << '\t' << ids_[n.node] << '\t' << n.weight << '\n';
  }

  bool operator==(const CoauthorGraph& o) const { return ids_ == o.ids_ && adjacency_ == o.adjacency_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Every corpus author becomes a node, including those who never coauthored.
inline CoauthorGraph build_coauthor_graph(const Corpus& corpus) {
  std::vector<std::string> nodes;
  nodes.reserve(corpus.authors().size());
  std::unordered_map<std::string, CoauthorGraph::Index> index;
  for (const auto& [id, author] : corpus.authors()) {
    index.emplace(id, nodes.size());
    nodes.push_back(id);
  }
  std::vector<CoauthorGraph::Edge> edges;
  for (const auto& p : corpus.papers()) {
    const auto& byline = p.author_ids;
    for (std::size_t i = 0; i < byline.size(); ++i)
      for (std::size_t j = i + 1; j < byline.size(); ++j)
        edges.push_back({index.at(byline[i]), index.at(byline[j]), 1});
  }
  return CoauthorGraph(std::move(nodes), edges);
}

inline std::size_t degree(const CoauthorGraph& graph, const std::string& author) {
  return graph.degree(graph.index_of(author));
}

}  // namespace scholarank
