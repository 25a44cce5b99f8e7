#include "matchpoly/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matchpoly {

using nlohmann::json;

json poly_to_json(const MultiPoly& f) {
    json terms = json::array();
    for (const auto& [exp, c] : f.terms()) {
        terms.push_back({{"exp", exp}, {"num", decimal_num(c)}, {"den", decimal_den(c)}});
    }
    return json{{"nvars", f.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
    MultiPoly f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        f.add_term(t.at("exp").get<std::vector<int>>(),
                   parse_rational(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
    }
    return f;
}

json unipoly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back({{"num", decimal_num(c)}, {"den", decimal_den(c)}});
    return json{{"poly", to_text(p)}, {"coeffs", coeffs}};
}

json multigraph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"type", "multigraph"}, {"n", g.vertex_count()}, {"edges", edges}};
}

Multigraph multigraph_from_json(const json& j) {
    if (j.contains("type") && j.at("type") != "multigraph")
        throw std::invalid_argument("expected a multigraph document");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph edges must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Multigraph(n, edges);
}

json hypergraph_to_json(const Hypergraph& h) {
    return json{{"type", "hypergraph"}, {"n", h.vertex_count()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const json& j) {
    if (j.contains("type") && j.at("type") != "hypergraph")
        throw std::invalid_argument("expected a hypergraph document");
    return Hypergraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>());
}

json distribution_to_json(const SubsetDistribution& p) {
    json support = json::array();
    for (const auto& [mask, prob] : p.support()) {
        std::vector<int> set;
        for (int i = 0; i < p.ground_size(); ++i)
            if (mask >> i & 1) set.push_back(i);
        support.push_back({{"set", set}, {"num", decimal_num(prob)}, {"den", decimal_den(prob)}});
    }
    return json{{"n", p.ground_size()}, {"support", support}};
}

SubsetDistribution distribution_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > 31) throw std::invalid_argument("distribution ground set out of range");
    std::map<std::uint32_t, Rational> support;
    for (const auto& item : j.at("support")) {
        std::uint32_t mask = 0;
        for (const auto& v : item.at("set")) {
            const int i = v.get<int>();
            if (i < 0 || i >= n) throw std::invalid_argument("support subset index out of range");
            mask |= std::uint32_t{1} << i;
        }
        const Rational prob =
            parse_rational(item.at("num").get<std::string>(), item.at("den").get<std::string>());
        if (!support.emplace(mask, prob).second)
            throw std::invalid_argument("support subsets must be distinct");
    }
    return SubsetDistribution(n, std::move(support));
}

FiniteGroup group_from_json(const json& j) {
    if (j.contains("table"))
        return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>());
    if (j.contains("perm_gens")) {
        std::vector<Permutation> gens;
        for (const auto& img : j.at("perm_gens")) gens.emplace_back(img.get<std::vector<int>>());
        return FiniteGroup::from_permutation_generators(gens);
    }
    throw std::invalid_argument("group document needs a \"table\" or \"perm_gens\" field");
}

json verdict_to_json(const StabilityVerdict& v) {
    json out{{"status", v.refuted ? "refuted" : "not-refuted"}};
    if (v.witness) {
        const StabilityWitness& w = *v.witness;
        json wj;
        json base = json::array();
        for (const auto& q : w.base) base.push_back(rational_string(q));
        wj["base"] = base;
        if (!w.direction.empty()) {
            json dir = json::array();
            for (const auto& q : w.direction) dir.push_back(rational_string(q));
            wj["direction"] = dir;
            wj["root_interval"] = {rational_string(w.interval_lo), rational_string(w.interval_hi)};
            wj["real_roots"] = w.real_roots;
            wj["squarefree_degree"] = w.squarefree_degree;
        }
        if (w.pair) wj["pair"] = {w.pair->first, w.pair->second};
        out["witness"] = wj;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

json parse_json(const std::string& text, const std::string& path) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON in " + path);
    return j;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

std::vector<std::vector<int>> parse_edge_lines(std::istream& in) {
    std::vector<std::vector<int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> edge;
        int v;
        while (ls >> v) edge.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("malformed edge line: " + line);
        if (!edge.empty()) edges.push_back(std::move(edge));
    }
    return edges;
}

}  // namespace

Multigraph load_multigraph(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) return multigraph_from_json(parse_json(text, path));
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list must start with the vertex count");
    std::string rest;
    std::getline(in, rest);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : parse_edge_lines(in)) {
        if (e.size() != 2) throw std::invalid_argument("graph edge lines need exactly two vertices");
        edges.emplace_back(e[0], e[1]);
    }
    return Multigraph(n, edges);
}

Hypergraph load_hypergraph(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) return hypergraph_from_json(parse_json(text, path));
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list must start with the vertex count");
    std::string rest;
    std::getline(in, rest);
    return Hypergraph(n, parse_edge_lines(in));
}

SubsetDistribution load_distribution(const std::string& path) {
    return distribution_from_json(parse_json(read_file(path), path));
}

FiniteGroup load_group(const std::string& path) {
    return group_from_json(parse_json(read_file(path), path));
}

}  // namespace matchpoly
