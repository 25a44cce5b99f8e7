#pragma once

#include <vector>

#include "matchpoly/graphs.hpp"
#include "matchpoly/rng.hpp"

namespace matchpoly {

Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph star_graph(int leaves);
Multigraph bouquet_graph(int loops);  // one vertex, that many loops

// Isomorphism-class representatives of all simple connected graphs with
// 1 <= n <= max_n vertices (canonical minimum edge encoding under S_n).
std::vector<Multigraph> connected_simple_graphs_up_to(int max_n);

// Isomorphism-class representatives of all multigraphs (loops and parallel
// edges allowed) with 1 <= n <= max_n vertices and at most max_edges edges.
std::vector<Multigraph> multigraph_corpus(int max_n, int max_edges);

// All trees with 1 <= n <= max_n vertices, up to isomorphism.
std::vector<Multigraph> trees_up_to(int max_n);

Multigraph random_simple_graph(SeededRng& rng, int n);
Hypergraph random_hypergraph(SeededRng& rng, int max_n, int max_edges, int max_edge_size);
std::vector<Rational> random_probabilities(SeededRng& rng, int n);
std::vector<int> random_kappa(SeededRng& rng, int n, int max_kappa);

}  // namespace matchpoly
