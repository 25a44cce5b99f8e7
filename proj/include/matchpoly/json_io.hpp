#pragma once

#include <string>

#include <json.hpp>

#include "matchpoly/coverings.hpp"
#include "matchpoly/distributions.hpp"
#include "matchpoly/graphs.hpp"
#include "matchpoly/multipoly.hpp"
#include "matchpoly/stability.hpp"

namespace matchpoly {

// Polynomial JSON: {"nvars": n, "terms": [{"exp": [...], "num": "...",
// "den": "..."}]} with terms in ascending lexicographic exponent order and
// coefficients as decimal strings.
nlohmann::json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json unipoly_to_json(const UniPoly& p);

// {"type":"multigraph","n":...,"edges":[[u,v],...]}
nlohmann::json multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const nlohmann::json& j);

// {"type":"hypergraph","n":...,"edges":[[...],...]}
nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// {"n":...,"support":[{"set":[...],"num":"...","den":"..."},...]}
nlohmann::json distribution_to_json(const SubsetDistribution& p);
SubsetDistribution distribution_from_json(const nlohmann::json& j);

// {"order":...,"table":[[...],...]} or {"perm_gens":[[...],...]}
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const StabilityVerdict& v);

// Reads a graph file: JSON when the first non-space byte is '{', otherwise
// the plain-text edge list (first line n, then one "u v" pair per line;
// hyperedges may list more vertices).
Multigraph load_multigraph(const std::string& path);
Hypergraph load_hypergraph(const std::string& path);
SubsetDistribution load_distribution(const std::string& path);
FiniteGroup load_group(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace matchpoly
