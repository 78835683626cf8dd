#ifndef NEUTROMAP_NGRAPH_HPP
#define NEUTROMAP_NGRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nmatrix.hpp"
#include "neutro_value.hpp"

namespace neutromap {

enum class EdgeKind { Determinate, Indeterminate };

struct Edge {
    std::string u, v;
    EdgeKind kind = EdgeKind::Determinate;
    std::optional<NeutroValue> weight;
    bool directed = false;

    /// Endpoint pair used for identity; undirected edges are unordered.
    std::pair<std::string, std::string> key() const {
        if (!directed && v < u) return {v, u};
        return {u, v};
    }
    bool same_relation(const Edge &o) const {
        return directed == o.directed && kind == o.kind && key() == o.key();
    }
};

/// Simple labeled graph; no self-loops, no parallel edges.  Indeterminate
/// edges model relations that cannot be decided (drawn dotted in DOT export).
class Graph {
  public:
    Graph() = default;

    void add_vertex(const std::string &label) {
        if (label.empty()) throw std::invalid_argument("empty vertex label");
        if (index_.count(label)) throw std::invalid_argument("duplicate vertex: " + label);
        index_[label] = vertices_.size();
        vertices_.push_back(label);
    }

    void add_edge(Edge e) {
        if (!index_.count(e.u)) throw std::invalid_argument("unknown vertex: " + e.u);
        if (!index_.count(e.v)) throw std::invalid_argument("unknown vertex: " + e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop at " + e.u);
        for (const auto &other : edges_)
            if (other.directed == e.directed && other.key() == e.key())
                throw std::invalid_argument("duplicate edge " + e.u + " / " + e.v);
        edges_.push_back(std::move(e));
    }

    bool has_vertex(const std::string &label) const { return index_.count(label) != 0; }
    const std::vector<std::string> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }

    bool has_indeterminate_edge() const {
        for (const auto &e : edges_)
            if (e.kind == EdgeKind::Indeterminate) return true;
        return false;
    }

    /// Count of incident edges (in + out for directed edges).
    std::size_t degree(const std::string &v) const {
        if (!index_.count(v)) throw std::out_of_range("unknown vertex: " + v);
        std::size_t d = 0;
        for (const auto &e : edges_)
            if (e.u == v || e.v == v) ++d;
        return d;
    }

    std::optional<std::size_t> regular_degree() const {
        if (vertices_.empty()) return std::nullopt;
        std::size_t d = degree(vertices_.front());
        for (const auto &v : vertices_)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    bool operator==(const Graph &o) const {
        if (std::set<std::string>(vertices_.begin(), vertices_.end()) !=
            std::set<std::string>(o.vertices_.begin(), o.vertices_.end()))
            return false;
        return edge_relation_set() == o.edge_relation_set();
    }
    bool operator!=(const Graph &o) const { return !(*this == o); }

    std::set<std::tuple<std::string, std::string, EdgeKind, bool>> edge_relation_set() const {
        std::set<std::tuple<std::string, std::string, EdgeKind, bool>> s;
        for (const auto &e : edges_) {
            auto k = e.key();
            s.insert({k.first, k.second, e.kind, e.directed});
        }
        return s;
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> index_;
};

/// Ordered sequence of component graphs over one shared label universe;
/// gluings are expressed by reusing a label in several components.
struct NGraph {
    std::vector<Graph> components;

    NGraph() = default;
    explicit NGraph(std::vector<Graph> comps) : components(std::move(comps)) {
        if (components.empty()) throw std::invalid_argument("n-graph needs at least one component");
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j)
                if (!valid_pair(components[i], components[j]))
                    throw std::invalid_argument("components " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) +
                                                " violate the bigraph condition");
    }

    std::size_t order() const { return components.size(); }

    /// Components must be distinct: vertex sets not nested unless the
    /// edge sets differ.
    static bool valid_pair(const Graph &a, const Graph &b) {
        std::set<std::string> va(a.vertices().begin(), a.vertices().end());
        std::set<std::string> vb(b.vertices().begin(), b.vertices().end());
        bool nested = std::includes(va.begin(), va.end(), vb.begin(), vb.end()) ||
                      std::includes(vb.begin(), vb.end(), va.begin(), va.end());
        if (!nested) return true;
        return a.edge_relation_set() != b.edge_relation_set();
    }
};

// ---- shared structure -----------------------------------------------------

/// Vertices in both graphs plus edges present (same endpoints, kind and
/// direction) in both.
inline Graph common_subgraph(const Graph &a, const Graph &b) {
    Graph out;
    for (const auto &v : a.vertices())
        if (b.has_vertex(v)) out.add_vertex(v);
    auto bset = b.edge_relation_set();
    for (const auto &e : a.edges()) {
        auto k = e.key();
        if (bset.count({k.first, k.second, e.kind, e.directed})) out.add_edge(e);
    }
    return out;
}

enum class GluingVerdict { Disjoint, VertexGlued, EdgeGlued, StrongSubgraphGlued };

struct GluingClass {
    GluingVerdict verdict;
    std::size_t shared_vertex_count = 0;
    Graph shared;
};

inline std::string to_string(const GluingClass &g) {
    switch (g.verdict) {
    case GluingVerdict::Disjoint: return "Disjoint";
    case GluingVerdict::VertexGlued:
        return "VertexGlued(" + std::to_string(g.shared_vertex_count) + ")";
    case GluingVerdict::EdgeGlued: return "EdgeGlued";
    case GluingVerdict::StrongSubgraphGlued: return "StrongSubgraphGlued";
    }
    return "?";
}

/// A single shared edge is EdgeGlued; two or more shared edges make the
/// shared subgraph strong.
inline GluingClass gluing_classify(const NGraph &g) {
    if (g.order() != 2) throw std::invalid_argument("gluing classification needs exactly 2 components");
    GluingClass out;
    out.shared = common_subgraph(g.components[0], g.components[1]);
    out.shared_vertex_count = out.shared.vertices().size();
    std::size_t e = out.shared.edges().size();
    if (out.shared_vertex_count == 0) out.verdict = GluingVerdict::Disjoint;
    else if (e == 0) out.verdict = GluingVerdict::VertexGlued;
    else if (e == 1) out.verdict = GluingVerdict::EdgeGlued;
    else out.verdict = GluingVerdict::StrongSubgraphGlued;
    return out;
}

// ---- matrix extractions ----------------------------------------------------

namespace detail {

inline std::vector<std::string> sorted_order(const Graph &g) {
    std::vector<std::string> order = g.vertices();
    std::sort(order.begin(), order.end());
    return order;
}

inline std::map<std::string, std::size_t> order_index(const std::vector<std::string> &order,
                                                      const Graph &g) {
    if (order.size() != g.vertices().size())
        throw std::invalid_argument("vertex ordering size mismatch");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.has_vertex(order[i])) throw std::invalid_argument("ordering names unknown vertex " + order[i]);
        if (!idx.emplace(order[i], i).second)
            throw std::invalid_argument("ordering repeats vertex " + order[i]);
    }
    return idx;
}

} // namespace detail

/// Per-component vertex orderings; empty inner vector means label-sorted.
using VertexOrderings = std::vector<std::vector<std::string>>;

inline std::vector<std::string> effective_order(const Graph &g, const VertexOrderings &ord,
                                                std::size_t k) {
    if (k < ord.size() && !ord[k].empty()) return ord[k];
    return detail::sorted_order(g);
}

/// Square 0/1/I matrix per component; symmetric for undirected components,
/// entry at (i,j) only for a directed edge i->j; zero diagonal.
inline NMatrix adjacency_nmatrix(const NGraph &g, const VertexOrderings &ord = {}) {
    std::vector<MatrixComponent> comps;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Graph &c = g.components[k];
        auto order = effective_order(c, ord, k);
        auto idx = detail::order_index(order, c);
        MatrixComponent m(order.size(), order.size());
        m.row_labels = order;
        m.col_labels = order;
        for (const auto &e : c.edges()) {
            NeutroValue val = (e.kind == EdgeKind::Indeterminate) ? NeutroValue::indeterminate()
                                                                  : NeutroValue::one();
            m.at(idx[e.u], idx[e.v]) = val;
            if (!e.directed) m.at(idx[e.v], idx[e.u]) = val;
        }
        comps.push_back(std::move(m));
    }
    return NMatrix(std::move(comps));
}

/// Weighted matrix with an Absent sentinel where vertices are non-adjacent
/// (rendered as an infinity symbol).
struct WeightedNMatrix {
    NMatrix values;
    std::vector<std::vector<bool>> present; // row-major per component

    std::string to_text() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < values.order(); ++k) {
            if (k > 0) os << "---\n";
            const auto &c = values.components[k];
            for (std::size_t i = 0; i < c.rows; ++i) {
                for (std::size_t j = 0; j < c.cols; ++j) {
                    if (j > 0) os << ' ';
                    if (present[k][i * c.cols + j]) os << format_entry(c.at(i, j), values.denom);
                    else os << "∞";
                }
                os << '\n';
            }
        }
        return os.str();
    }
};

inline WeightedNMatrix weighted_nmatrix(const NGraph &g, const VertexOrderings &ord = {}) {
    WeightedNMatrix out;
    std::vector<MatrixComponent> comps;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Graph &c = g.components[k];
        auto order = effective_order(c, ord, k);
        auto idx = detail::order_index(order, c);
        MatrixComponent m(order.size(), order.size());
        m.row_labels = order;
        m.col_labels = order;
        std::vector<bool> present(order.size() * order.size(), false);
        for (const auto &e : c.edges()) {
            if (e.directed) throw std::invalid_argument("weighted matrix needs undirected components");
            if (!e.weight) throw std::invalid_argument("missing weight on edge " + e.u + " -- " + e.v);
            std::size_t i = idx[e.u], j = idx[e.v];
            m.at(i, j) = *e.weight;
            m.at(j, i) = *e.weight;
            present[i * order.size() + j] = true;
            present[j * order.size() + i] = true;
        }
        comps.push_back(std::move(m));
        out.present.push_back(std::move(present));
    }
    out.values = NMatrix(std::move(comps));
    return out;
}

/// Rebuild a graph from a symmetric weighted matrix; inverse of
/// weighted_nmatrix up to edge declaration order.
inline Graph graph_from_weighted(const MatrixComponent &m, const std::vector<bool> &present,
                                 const std::vector<std::string> &labels) {
    Graph g;
    for (const auto &l : labels) g.add_vertex(l);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (present[i * m.cols + j])
                g.add_edge({labels[i], labels[j], EdgeKind::Determinate, m.at(i, j), false});
    return g;
}

/// Vertices x edges 0/1 matrix; edge columns follow declaration order.
inline NMatrix incidence_nmatrix(const NGraph &g, const VertexOrderings &ord = {}) {
    std::vector<MatrixComponent> comps;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Graph &c = g.components[k];
        auto order = effective_order(c, ord, k);
        auto idx = detail::order_index(order, c);
        MatrixComponent m(order.size(), c.edges().size());
        m.row_labels = order;
        for (std::size_t j = 0; j < c.edges().size(); ++j) {
            const auto &e = c.edges()[j];
            m.col_labels.push_back("e" + std::to_string(j + 1));
            m.at(idx[e.u], j) = NeutroValue::one();
            m.at(idx[e.v], j) = NeutroValue::one();
        }
        comps.push_back(std::move(m));
    }
    return NMatrix(std::move(comps));
}

/// Directed components only: diagonal holds the in-degree (indeterminate
/// arcs contribute I), off-diagonal the negated adjacency entry.
inline NMatrix kirchhoff_nmatrix(const NGraph &g, const VertexOrderings &ord = {}) {
    for (const auto &c : g.components)
        for (const auto &e : c.edges())
            if (!e.directed) throw std::invalid_argument("Kirchhoff matrix needs directed components");
    NMatrix adj = adjacency_nmatrix(g, ord);
    for (auto &m : adj.components) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            NeutroValue indeg = NeutroValue::zero();
            for (std::size_t i = 0; i < m.rows; ++i) indeg = nv_add(indeg, m.at(i, j));
            for (std::size_t i = 0; i < m.rows; ++i)
                if (i != j) m.at(i, j) = nv_neg(m.at(i, j));
            m.at(j, j) = indeg;
        }
    }
    return adj;
}

/// Componentwise complement over each component's own vertex set.
inline NGraph complement(const NGraph &g) {
    std::vector<Graph> comps;
    for (const auto &c : g.components) {
        for (const auto &e : c.edges()) {
            if (e.directed) throw std::invalid_argument("complement needs undirected components");
            if (e.kind == EdgeKind::Indeterminate)
                throw std::invalid_argument("complement of indeterminate edges is undefined");
        }
        Graph out;
        for (const auto &v : c.vertices()) out.add_vertex(v);
        auto eset = c.edge_relation_set();
        const auto &vs = c.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                auto key = std::minmax(vs[i], vs[j]);
                if (!eset.count({key.first, key.second, EdgeKind::Determinate, false}))
                    out.add_edge({vs[i], vs[j], EdgeKind::Determinate, std::nullopt, false});
            }
        comps.push_back(std::move(out));
    }
    return NGraph(std::move(comps));
}

/// Degree in G1 plus degree in G2 for a vertex both components share.
inline std::size_t bidegree(const NGraph &g, const std::string &v) {
    if (g.order() != 2) throw std::invalid_argument("bidegree needs exactly 2 components");
    if (!g.components[0].has_vertex(v) || !g.components[1].has_vertex(v))
        throw std::out_of_range("vertex " + v + " is not shared by both components");
    return g.components[0].degree(v) + g.components[1].degree(v);
}

/// (K1, K2) when G1 is K1-regular, G2 is K2-regular and every shared vertex
/// has bidegree K1+K2; nothing otherwise.  No shared vertex means no
/// bidegree at all, which is a domain error.
inline std::optional<std::pair<std::size_t, std::size_t>> is_biregular(const NGraph &g) {
    if (g.order() != 2) throw std::invalid_argument("biregularity needs exactly 2 components");
    Graph shared = common_subgraph(g.components[0], g.components[1]);
    if (shared.vertices().empty())
        throw std::domain_error("disjoint bigraph has no bidegree associated with it");
    auto k1 = g.components[0].regular_degree();
    auto k2 = g.components[1].regular_degree();
    if (!k1 || !k2) return std::nullopt;
    for (const auto &v : shared.vertices())
        if (bidegree(g, v) != *k1 + *k2) return std::nullopt;
    return std::make_pair(*k1, *k2);
}

// ---- neutrosophic taxonomy -------------------------------------------------

enum class NeutroGraphVerdict { FullyNeutrosophic, Weak, VeryWeak, NonNeutrosophic };

inline const char *to_string(NeutroGraphVerdict v) {
    switch (v) {
    case NeutroGraphVerdict::FullyNeutrosophic: return "FullyNeutrosophic";
    case NeutroGraphVerdict::Weak: return "Weak";
    case NeutroGraphVerdict::VeryWeak: return "VeryWeak";
    case NeutroGraphVerdict::NonNeutrosophic: return "NonNeutrosophic";
    }
    return "?";
}

/// All components indeterminate somewhere -> fully; exactly one of k >= 3
/// -> very weak; some but not all -> weak; none -> non-neutrosophic.
inline NeutroGraphVerdict neutrosophic_classify(const NGraph &g) {
    std::size_t n = 0;
    for (const auto &c : g.components)
        if (c.has_indeterminate_edge()) ++n;
    if (n == g.order()) return n == 0 ? NeutroGraphVerdict::NonNeutrosophic
                                      : NeutroGraphVerdict::FullyNeutrosophic;
    if (n == 0) return NeutroGraphVerdict::NonNeutrosophic;
    if (n == 1 && g.order() >= 3) return NeutroGraphVerdict::VeryWeak;
    return NeutroGraphVerdict::Weak;
}

struct PartitionReport {
    bool valid = false;
    std::size_t cross_indeterminate = 0;
};

/// p-partite check: parts must cover the vertex set exactly; valid when no
/// edge stays inside one part.  Counts indeterminate edges between parts.
inline PartitionReport partition_check(const Graph &g,
                                       const std::vector<std::set<std::string>> &parts) {
    std::map<std::string, std::size_t> part_of;
    bool disjoint = true;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto &v : parts[p]) {
            if (!g.has_vertex(v)) throw std::domain_error("partition names unknown vertex " + v);
            if (!part_of.emplace(v, p).second) disjoint = false;
        }
    for (const auto &v : g.vertices())
        if (!part_of.count(v)) throw std::domain_error("partition does not cover vertex " + v);
    PartitionReport out;
    out.valid = disjoint;
    for (const auto &e : g.edges()) {
        if (part_of[e.u] == part_of[e.v]) out.valid = false;
        else if (e.kind == EdgeKind::Indeterminate) ++out.cross_indeterminate;
    }
    return out;
}

// ---- bipartite structure ----------------------------------------------------

struct BipartiteStructure {
    /// one 2-coloring per component, when it exists
    std::vector<std::optional<std::pair<std::set<std::string>, std::set<std::string>>>> parts;
    bool is_bipartite_ngraph = false;
    bool is_strongly_biconnected = false; // meaningful for k = 2 only
};

namespace detail {

// connected pieces with a BFS 2-coloring; nullopt if an odd cycle exists
struct Pieces {
    bool bipartite = true;
    // per piece: the two sides
    std::vector<std::pair<std::set<std::string>, std::set<std::string>>> sides;
};

inline Pieces split_pieces(const Graph &g) {
    Pieces out;
    std::map<std::string, int> color;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto &e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto &start : g.vertices()) {
        if (color.count(start)) continue;
        std::set<std::string> a, b;
        std::vector<std::string> queue{start};
        color[start] = 0;
        a.insert(start);
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            for (const auto &w : adj[v]) {
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    (color[w] == 0 ? a : b).insert(w);
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    out.bipartite = false;
                }
            }
        }
        out.sides.push_back({std::move(a), std::move(b)});
    }
    return out;
}

// is S one color class of some proper 2-coloring of g?
inline bool is_part_of(const Graph &g, const std::set<std::string> &s) {
    for (const auto &v : s)
        if (!g.has_vertex(v)) return false;
    for (const auto &e : g.edges()) {
        bool inu = s.count(e.u) != 0, inv = s.count(e.v) != 0;
        if (inu == inv) return false; // every edge must cross
    }
    return true;
}

} // namespace detail

inline BipartiteStructure bipartite_structure(const NGraph &g) {
    BipartiteStructure out;
    std::vector<detail::Pieces> pieces;
    out.is_bipartite_ngraph = true;
    for (const auto &c : g.components) {
        auto p = detail::split_pieces(c);
        if (!p.bipartite) {
            out.parts.push_back(std::nullopt);
            out.is_bipartite_ngraph = false;
        } else {
            std::set<std::string> a, b;
            for (const auto &s : p.sides) {
                a.insert(s.first.begin(), s.first.end());
                b.insert(s.second.begin(), s.second.end());
            }
            out.parts.push_back(std::make_pair(std::move(a), std::move(b)));
        }
        pieces.push_back(std::move(p));
    }
    if (g.order() == 2 && out.is_bipartite_ngraph) {
        // search the 2^pieces side choices of G1 for a part that is also a
        // part of G2 (fixtures are small; cap keeps this bounded)
        const auto &p1 = pieces[0].sides;
        std::set<std::string> v2(g.components[1].vertices().begin(),
                                 g.components[1].vertices().end());
        if (p1.size() <= 20) {
            for (std::size_t mask = 0; mask < (std::size_t(1) << p1.size()); ++mask) {
                std::set<std::string> s;
                for (std::size_t i = 0; i < p1.size(); ++i) {
                    const auto &side = (mask >> i & 1) ? p1[i].second : p1[i].first;
                    s.insert(side.begin(), side.end());
                }
                if (s.empty() || !std::includes(v2.begin(), v2.end(), s.begin(), s.end()))
                    continue;
                if (detail::is_part_of(g.components[1], s)) {
                    out.is_strongly_biconnected = true;
                    break;
                }
            }
        }
    }
    return out;
}

/// Inclusion-exclusion vertex count o(G1) + o(G2) - o(G1 n G2).
inline std::size_t ngraph_order(const NGraph &g) {
    if (g.order() != 2) throw std::invalid_argument("ngraph_order needs exactly 2 components");
    Graph shared = common_subgraph(g.components[0], g.components[1]);
    return g.components[0].vertices().size() + g.components[1].vertices().size() -
           shared.vertices().size();
}

// ---- union-graph helpers (theorem checks) -----------------------------------

/// All vertices and all distinct edge relations of every component.
inline Graph union_graph(const NGraph &g) {
    Graph out;
    for (const auto &c : g.components)
        for (const auto &v : c.vertices())
            if (!out.has_vertex(v)) out.add_vertex(v);
    std::set<std::tuple<std::string, std::string, EdgeKind, bool>> seen;
    for (const auto &c : g.components)
        for (const auto &e : c.edges()) {
            auto k = e.key();
            if (seen.insert({k.first, k.second, e.kind, e.directed}).second) out.add_edge(e);
        }
    return out;
}

/// True when no path (edges taken both ways) connects a to b in g avoiding
/// the vertex `without`.
inline bool separated_without(const Graph &g, const std::string &without, const std::string &a,
                              const std::string &b) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto &e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<std::string> seen{without};
    std::vector<std::string> queue;
    if (a == without) return b != without;
    queue.push_back(a);
    seen.insert(a);
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        if (v == b) return false;
        for (const auto &w : adj[v])
            if (!seen.count(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
    }
    return true;
}

// ---- DOT export --------------------------------------------------------------

/// DOT-like text for one component; indeterminate edges dashed.
inline std::string to_dot(const Graph &g, const std::string &name = "G") {
    bool directed = false;
    for (const auto &e : g.edges())
        if (e.directed) directed = true;
    std::ostringstream os;
    os << (directed ? "digraph " : "graph ") << name << " {\n";
    for (const auto &v : g.vertices()) os << "  \"" << v << "\";\n";
    for (const auto &e : g.edges()) {
        os << "  \"" << e.u << "\" " << (e.directed ? "->" : "--") << " \"" << e.v << "\"";
        std::vector<std::string> attrs;
        if (e.kind == EdgeKind::Indeterminate) attrs.push_back("style=dashed");
        if (e.weight) attrs.push_back("label=\"" + to_string(*e.weight) + "\"");
        if (!attrs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace neutromap

#endif
