#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csf/sym.hpp"

namespace csf {

/// Simple undirected graph on vertices 1..n.
class SimpleGraph {
 public:
  SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  static SimpleGraph path(int n);
  /// Legs of the given lengths glued at a common center (vertex 1); legs are
  /// numbered consecutively.
  static SimpleGraph spider(const Partition& legs);
  /// One "u v" pair per line, 1-indexed.
  static SimpleGraph from_edge_list_text(const std::string& text);
  /// "path:12", "spider:4,2,1", or "file:PATH".
  static SimpleGraph parse_spec(const std::string& spec);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::vector<int> degrees() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// X_G by inclusion-exclusion over spanning subgraphs (p basis).
SymElement csf_powersum(const SimpleGraph& g, int max_edges = 24, int threads = 1);

/// X_G by brute force over proper colorings (monomial basis); independent of
/// csf_powersum.
SymElement csf_colorings(const SimpleGraph& g, int max_vertices = 8);

/// X_{S(a,b,c)} assembled from path chromatic symmetric functions via the
/// triple-deletion reduction; monomial basis.
SymElement spider_csf_reduction(int a, int b, int c);

/// X_{P_n} in the monomial pivot (cached).
SymElement path_csf(int n);

}  // namespace csf
