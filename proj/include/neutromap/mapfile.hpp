#ifndef NEUTROMAP_MAPFILE_HPP
#define NEUTROMAP_MAPFILE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cognitive.hpp"
#include "ngraph.hpp"
#include "nmatrix.hpp"
#include "neutro_value.hpp"
#include "relational.hpp"

// .nmap document format (UTF-8, '#' comments):
//
//   kind: cognitive | relational | graph
//   policy: threshold=K mode=real|indet
//   [component "name"]
//   nodes: A B C            (relational components use domain:/range:)
//   order: C A B            (optional explicit matrix ordering)
//   edges:
//   A -> B : w              (w is a scalar token: 1, -1, I, 2+I, ...)
//   A -- B                  (undirected; optional ": w")
//   A ~~ B                  (indeterminate undirected)
//   matrix:                 (alternative to edges: rows of scalar tokens;
//   0 1 I                    decimals allowed in graph documents only)
//   [scenario "name"]
//   on: A C
//
// A label reused across components denotes the same glued vertex.

namespace neutromap {

enum class MapKind { Cognitive, Relational, GraphOnly };

inline const char *to_string(MapKind k) {
    switch (k) {
    case MapKind::Cognitive: return "cognitive";
    case MapKind::Relational: return "relational";
    case MapKind::GraphOnly: return "graph";
    }
    return "?";
}

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::size_t line = 0;
    std::size_t col = 0;
    std::string message;

    std::string render() const {
        std::ostringstream os;
        os << line << ":" << col << ": " << (severity == Severity::Error ? "error" : "warning")
           << ": " << message;
        return os.str();
    }
};

/// Raw matrix block attached to a component (classification documents and
/// direct map input).  Entries are numerators over 10^scale.
struct MatrixBlock {
    MatrixComponent grid;
    int scale = 0;

    friend bool operator==(const MatrixBlock &a, const MatrixBlock &b) {
        return a.scale == b.scale && a.grid == b.grid;
    }
};

struct MapComponent {
    std::string name;
    std::vector<std::string> nodes;  // cognitive / graph kinds
    std::vector<std::string> domain; // relational kind
    std::vector<std::string> range;
    std::optional<std::vector<std::string>> order;       // explicit matrix ordering
    std::optional<std::vector<std::string>> range_order; // relational column ordering
    std::vector<Edge> edges;
    std::optional<MatrixBlock> matrix;

    /// Row ordering used for matrices: explicit order if given, otherwise
    /// the declared sequence.
    std::vector<std::string> effective_order() const {
        if (order) return *order;
        return nodes.empty() ? domain : nodes;
    }
    std::vector<std::string> effective_range_order() const {
        if (range_order) return *range_order;
        return range;
    }

    friend bool operator==(const MapComponent &a, const MapComponent &b) {
        auto key = [](const MapComponent &c) {
            return std::tuple(c.name, std::set<std::string>(c.nodes.begin(), c.nodes.end()),
                              std::set<std::string>(c.domain.begin(), c.domain.end()),
                              std::set<std::string>(c.range.begin(), c.range.end()),
                              c.effective_order(), c.effective_range_order());
        };
        if (key(a) != key(b)) return false;
        if (a.matrix != b.matrix) return false;
        if (a.edges.size() != b.edges.size()) return false;
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
            const Edge &x = a.edges[i], &y = b.edges[i];
            if (x.u != y.u || x.v != y.v || x.kind != y.kind || x.directed != y.directed ||
                x.weight != y.weight)
                return false;
        }
        return true;
    }
};

struct Scenario {
    std::string name;
    std::vector<std::string> on; // labels switched on

    friend bool operator==(const Scenario &a, const Scenario &b) {
        return a.name == b.name &&
               std::set<std::string>(a.on.begin(), a.on.end()) ==
                   std::set<std::string>(b.on.begin(), b.on.end());
    }
};

struct MapDocument {
    MapKind kind = MapKind::GraphOnly;
    ThresholdPolicy policy;
    std::vector<MapComponent> components;
    std::vector<Scenario> scenarios;

    const Scenario *find_scenario(const std::string &name) const {
        for (const auto &s : scenarios)
            if (s.name == name) return &s;
        return nullptr;
    }

    friend bool operator==(const MapDocument &a, const MapDocument &b) {
        return a.kind == b.kind && a.policy == b.policy && a.components == b.components &&
               a.scenarios == b.scenarios;
    }
};

struct ParseResult {
    std::optional<MapDocument> document; // present when no errors
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

// ---- parsing ----------------------------------------------------------------

namespace mapdetail {

inline std::string strip_comment(const std::string &line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        else if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

inline std::string trim(const std::string &s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline bool valid_label(const std::string &s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ':' || c == '"' || c == '#' || c == '[' || c == ']') return false;
    return true;
}

struct Cursor {
    std::vector<Diagnostic> *diags;
    void error(std::size_t line, std::size_t col, const std::string &msg) {
        diags->push_back({Diagnostic::Severity::Error, line, col, msg});
    }
    void warn(std::size_t line, std::size_t col, const std::string &msg) {
        diags->push_back({Diagnostic::Severity::Warning, line, col, msg});
    }
};

} // namespace mapdetail

/// Parse a map document.  Parsing is total: syntax and validation problems
/// are reported as positioned diagnostics and a document is produced only if
/// no error-level diagnostic was raised.
inline ParseResult parse(const std::string &text) {
    using namespace mapdetail;
    ParseResult result;
    Cursor cur{&result.diagnostics};
    MapDocument doc;
    bool kind_seen = false;

    enum class Block { None, Edges, Matrix, Scenario };
    Block block = Block::None;
    MapComponent *comp = nullptr;
    Scenario *scen = nullptr;
    std::vector<std::vector<NeutroValue>> matrix_rows;
    int matrix_scale = 0;
    std::size_t matrix_line = 0;
    std::vector<std::size_t> comp_line;              // header line per component
    std::vector<std::vector<std::size_t>> edge_line; // declaration line per edge
    std::vector<std::size_t> scen_line;

    auto flush_matrix = [&](MapComponent *c) {
        if (!c || matrix_rows.empty()) {
            matrix_rows.clear();
            matrix_scale = 0;
            return;
        }
        std::size_t cols = matrix_rows.front().size();
        for (const auto &r : matrix_rows)
            if (r.size() != cols) {
                cur.error(matrix_line, 1, "matrix rows have uneven lengths");
                matrix_rows.clear();
                matrix_scale = 0;
                return;
            }
        MatrixComponent grid(matrix_rows.size(), cols);
        for (std::size_t i = 0; i < matrix_rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) grid.at(i, j) = matrix_rows[i][j];
        c->matrix = MatrixBlock{std::move(grid), matrix_scale};
        matrix_rows.clear();
        matrix_scale = 0;
    };

    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            flush_matrix(comp);
            block = Block::None;
            // [component "name"] | [scenario "name"]
            auto close = line.find(']');
            if (close == std::string::npos) {
                cur.error(lineno, 1, "unterminated section header");
                continue;
            }
            std::string inner = trim(line.substr(1, close - 1));
            std::string kindword = inner.substr(0, inner.find_first_of(" \t"));
            std::string name;
            auto q1 = inner.find('"');
            auto q2 = inner.rfind('"');
            if (q1 != std::string::npos && q2 > q1) name = inner.substr(q1 + 1, q2 - q1 - 1);
            if (kindword == "component") {
                doc.components.emplace_back();
                comp = &doc.components.back();
                comp->name = name.empty() ? ("component-" + std::to_string(doc.components.size()))
                                          : name;
                comp_line.push_back(lineno);
                edge_line.emplace_back();
                scen = nullptr;
            } else if (kindword == "scenario") {
                if (name.empty()) {
                    cur.error(lineno, 1, "scenario needs a quoted name");
                    name = "scenario-" + std::to_string(doc.scenarios.size() + 1);
                }
                doc.scenarios.emplace_back();
                scen = &doc.scenarios.back();
                scen->name = name;
                scen_line.push_back(lineno);
                comp = nullptr;
                block = Block::Scenario;
            } else {
                cur.error(lineno, 1, "unknown section '" + kindword + "'");
            }
            continue;
        }

        auto colon = line.find(':');
        std::string key = (colon == std::string::npos) ? "" : trim(line.substr(0, colon));
        bool is_key = colon != std::string::npos && !key.empty() && key.find(' ') == std::string::npos &&
                      key.find('-') != 0 &&
                      (key == "kind" || key == "policy" || key == "nodes" || key == "domain" ||
                       key == "range" || key == "order" || key == "range-order" || key == "edges" ||
                       key == "matrix" || key == "on");

        if (is_key) {
            std::string value = trim(line.substr(colon + 1));
            if (key != "matrix" && key != "edges") {
                flush_matrix(comp);
                block = Block::None;
            }
            if (key == "kind") {
                if (value == "cognitive") doc.kind = MapKind::Cognitive;
                else if (value == "relational") doc.kind = MapKind::Relational;
                else if (value == "graph") doc.kind = MapKind::GraphOnly;
                else cur.error(lineno, colon + 2, "unknown kind '" + value + "'");
                kind_seen = true;
            } else if (key == "policy") {
                for (const auto &tok : split_ws(value)) {
                    auto eq = tok.find('=');
                    std::string pk = tok.substr(0, eq);
                    std::string pv = (eq == std::string::npos) ? "" : tok.substr(eq + 1);
                    if (pk == "threshold") {
                        try {
                            long long k = std::stoll(pv);
                            if (k < 1) throw std::invalid_argument("");
                            doc.policy.k = k;
                        } catch (...) {
                            cur.error(lineno, colon + 2, "threshold must be a positive integer");
                        }
                    } else if (pk == "mode") {
                        if (pv == "real") doc.policy.mode = ThresholdMode::RealDominant;
                        else if (pv == "indet") doc.policy.mode = ThresholdMode::IndetDominant;
                        else cur.error(lineno, colon + 2, "mode must be real or indet");
                    } else {
                        cur.error(lineno, colon + 2, "unknown policy field '" + pk + "'");
                    }
                }
            } else if (key == "on") {
                if (!scen) {
                    cur.error(lineno, 1, "'on' outside a scenario section");
                } else {
                    for (const auto &l : split_ws(value)) scen->on.push_back(l);
                }
            } else if (!comp) {
                cur.error(lineno, 1, "'" + key + "' outside a component section");
            } else if (key == "nodes" || key == "domain" || key == "range" || key == "order" ||
                       key == "range-order") {
                auto labels = split_ws(value);
                std::set<std::string> seen;
                for (const auto &l : labels) {
                    if (!valid_label(l)) cur.error(lineno, colon + 2, "bad label '" + l + "'");
                    if (!seen.insert(l).second)
                        cur.error(lineno, colon + 2, "duplicate node '" + l + "'");
                }
                if (key == "nodes") comp->nodes.insert(comp->nodes.end(), labels.begin(), labels.end());
                else if (key == "domain") comp->domain.insert(comp->domain.end(), labels.begin(), labels.end());
                else if (key == "range") comp->range.insert(comp->range.end(), labels.begin(), labels.end());
                else if (key == "order") comp->order = labels;
                else comp->range_order = labels;
            } else if (key == "edges") {
                block = Block::Edges;
            } else if (key == "matrix") {
                block = Block::Matrix;
                matrix_line = lineno;
            }
            continue;
        }

        // content line inside a block
        if (block == Block::Edges && comp) {
            auto toks = split_ws(line);
            // allow "A -> B : w" and "A -> B"
            if (toks.size() != 3 && !(toks.size() == 5 && toks[3] == ":")) {
                cur.error(lineno, 1, "malformed edge declaration");
                continue;
            }
            Edge e;
            e.u = toks[0];
            e.v = toks[2];
            const std::string &op = toks[1];
            if (op == "->") e.directed = true;
            else if (op == "--") e.directed = false;
            else if (op == "~~") { e.directed = false; e.kind = EdgeKind::Indeterminate; }
            else {
                cur.error(lineno, 1, "unknown edge operator '" + op + "'");
                continue;
            }
            if (!valid_label(e.u) || !valid_label(e.v)) {
                cur.error(lineno, 1, "bad edge endpoint label");
                continue;
            }
            if (toks.size() == 5) {
                auto parsed = parse_neutro(toks[4]);
                if (!parsed) {
                    cur.error(lineno, 1, "malformed weight token '" + toks[4] + "'");
                    continue;
                }
                if (parsed->scale > 0) {
                    cur.error(lineno, 1, "decimal weights are not allowed on edges");
                    continue;
                }
                if (parsed->value == NeutroValue::indeterminate()) {
                    e.kind = EdgeKind::Indeterminate;
                } else {
                    e.weight = parsed->value;
                }
            }
            if (e.u == e.v) {
                cur.error(lineno, 1, "self-loop at '" + e.u + "'");
                continue;
            }
            comp->edges.push_back(std::move(e));
            edge_line.back().push_back(lineno);
            continue;
        }
        if (block == Block::Matrix && comp) {
            std::vector<NeutroValue> row;
            bool bad = false;
            std::size_t col = 1;
            for (const auto &tok : split_ws(line)) {
                auto parsed = parse_neutro(tok);
                if (!parsed) {
                    cur.error(lineno, col, "malformed entry token '" + tok + "'");
                    bad = true;
                    break;
                }
                NeutroValue v = parsed->value;
                int s = parsed->scale;
                // bring previous rows and this entry onto a common scale
                try {
                    while (s < matrix_scale) {
                        v.real = detail::checked_mul(v.real, 10);
                        v.indet = detail::checked_mul(v.indet, 10);
                        ++s;
                    }
                    if (s > matrix_scale) {
                        long long f = 1;
                        for (int i = matrix_scale; i < s; ++i) f = detail::checked_mul(f, 10);
                        for (auto &r : matrix_rows)
                            for (auto &x : r) {
                                x.real = detail::checked_mul(x.real, f);
                                x.indet = detail::checked_mul(x.indet, f);
                            }
                        for (auto &x : row) {
                            x.real = detail::checked_mul(x.real, f);
                            x.indet = detail::checked_mul(x.indet, f);
                        }
                        matrix_scale = s;
                    }
                } catch (const std::overflow_error &) {
                    cur.error(lineno, col, "entry '" + tok + "' overflows the representation");
                    bad = true;
                    break;
                }
                row.push_back(v);
                col += tok.size() + 1;
            }
            if (!bad && !row.empty()) matrix_rows.push_back(std::move(row));
            continue;
        }
        if (block == Block::Scenario && scen) {
            for (const auto &l : split_ws(line)) scen->on.push_back(l);
            continue;
        }
        cur.error(lineno, 1, "unexpected line");
    }
    flush_matrix(comp);

    if (!kind_seen) cur.warn(1, 1, "no 'kind:' line; assuming graph");

    // ---- validation ----
    auto has_errors = [&] {
        for (const auto &d : result.diagnostics)
            if (d.severity == Diagnostic::Severity::Error) return true;
        return false;
    };

    if (doc.components.empty())
        cur.error(lineno ? lineno : 1, 1, "component must declare at least one node");

    for (std::size_t ci = 0; ci < doc.components.size(); ++ci) {
        auto &c = doc.components[ci];
        std::size_t cl = comp_line[ci];
        std::set<std::string> labels;
        auto declare = [&](const std::vector<std::string> &ls) {
            for (const auto &l : ls)
                if (!labels.insert(l).second)
                    cur.error(cl, 1, "duplicate node '" + l + "' in component \"" + c.name + "\"");
        };
        if (doc.kind == MapKind::Relational) {
            declare(c.domain);
            declare(c.range);
            if (!c.nodes.empty())
                cur.error(cl, 1, "relational component \"" + c.name +
                                     "\" must use domain:/range:, not nodes:");
            if (c.domain.empty() || c.range.empty())
                cur.error(cl, 1, "component must declare at least one node on each side (\"" +
                                     c.name + "\")");
        } else {
            declare(c.nodes);
            if (!c.domain.empty() || !c.range.empty())
                cur.error(cl, 1,
                          "component \"" + c.name + "\" uses domain/range outside relational kind");
            if (c.nodes.empty())
                cur.error(cl, 1, "component must declare at least one node (\"" + c.name + "\")");
        }
        std::set<std::tuple<std::string, std::string, bool>> edge_keys;
        for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
            const auto &e = c.edges[ei];
            std::size_t el = edge_line[ci][ei];
            if (!labels.count(e.u))
                cur.error(el, 1, "unknown label '" + e.u + "'");
            if (!labels.count(e.v))
                cur.error(el, 1, "unknown label '" + e.v + "'");
            auto k = e.key();
            if (!edge_keys.insert({k.first, k.second, e.directed}).second)
                cur.error(el, 1, "duplicate edge " + e.u + " / " + e.v);
        }
        if (c.order) {
            std::set<std::string> o(c.order->begin(), c.order->end());
            const auto &base = doc.kind == MapKind::Relational ? c.domain : c.nodes;
            if (o != std::set<std::string>(base.begin(), base.end()))
                cur.error(cl, 1, "order: must list exactly the declared nodes of \"" + c.name + "\"");
        }
        if (c.range_order) {
            if (doc.kind != MapKind::Relational)
                cur.error(cl, 1, "range-order: outside relational kind");
            else if (std::set<std::string>(c.range_order->begin(), c.range_order->end()) !=
                     std::set<std::string>(c.range.begin(), c.range.end()))
                cur.error(cl, 1, "range-order: must list exactly the declared range nodes of \"" +
                                     c.name + "\"");
        }
        if (c.matrix) {
            if (doc.kind != MapKind::GraphOnly && c.matrix->scale > 0)
                cur.error(cl, 1, "decimal entries are only allowed in graph documents (component \"" +
                                     c.name + "\")");
            std::size_t want_rows =
                doc.kind == MapKind::Relational ? c.domain.size() : c.nodes.size();
            // graph documents may hold arbitrary rectangular grids (the
            // classification-only matrices); maps must match their labels
            std::optional<std::size_t> want_cols;
            if (doc.kind == MapKind::Relational) want_cols = c.range.size();
            else if (doc.kind == MapKind::Cognitive) want_cols = c.nodes.size();
            if (c.matrix->grid.rows != want_rows ||
                (want_cols && c.matrix->grid.cols != *want_cols))
                cur.error(cl, 1, "matrix of component \"" + c.name + "\" is " +
                                     std::to_string(c.matrix->grid.rows) + "x" +
                                     std::to_string(c.matrix->grid.cols) + ", expected " +
                                     std::to_string(want_rows) + "x" +
                                     (want_cols ? std::to_string(*want_cols) : std::string("*")));
            else if (doc.kind == MapKind::Cognitive) {
                for (std::size_t i = 0; i < c.matrix->grid.rows; ++i)
                    if (!c.matrix->grid.at(i, i).is_zero())
                        cur.error(cl, 1, "nonzero diagonal at '" + c.effective_order()[i] +
                                             "' in component \"" + c.name + "\"");
            }
            if (!c.edges.empty())
                cur.error(cl, 1, "component \"" + c.name + "\" declares both edges and a matrix");
        }
        if (doc.kind == MapKind::Relational || doc.kind == MapKind::Cognitive) {
            std::set<std::string> dom(c.domain.begin(), c.domain.end());
            for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
                const auto &e = c.edges[ei];
                std::size_t el = edge_line[ci][ei];
                if (!e.directed)
                    cur.error(el, 1, "map edges must be directed (" + e.u + ", " + e.v + ")");
                else if (e.kind == EdgeKind::Determinate && !e.weight)
                    cur.error(el, 1, "edge " + e.u + " -> " + e.v + " needs a weight");
                else if (doc.kind == MapKind::Relational && labels.count(e.u) &&
                         labels.count(e.v) && (!dom.count(e.u) || dom.count(e.v)))
                    cur.error(el, 1, "edge " + e.u + " -> " + e.v +
                                         " must run from domain to range");
            }
        }
    }

    // scenario labels must resolve somewhere
    {
        std::set<std::string> all;
        for (const auto &c : doc.components) {
            all.insert(c.nodes.begin(), c.nodes.end());
            all.insert(c.domain.begin(), c.domain.end());
            all.insert(c.range.begin(), c.range.end());
        }
        std::set<std::string> names;
        for (std::size_t si = 0; si < doc.scenarios.size(); ++si) {
            const auto &s = doc.scenarios[si];
            std::size_t sl = si < scen_line.size() ? scen_line[si] : 1;
            if (!names.insert(s.name).second)
                cur.error(sl, 1, "duplicate scenario \"" + s.name + "\"");
            for (const auto &l : s.on)
                if (!all.count(l))
                    cur.error(sl, 1, "scenario \"" + s.name + "\" switches on unknown label '" + l + "'");
        }
    }

    // duplicate-component warning (distinctness of components)
    for (std::size_t i = 0; i < doc.components.size(); ++i)
        for (std::size_t j = i + 1; j < doc.components.size(); ++j) {
            const auto &a = doc.components[i], &b = doc.components[j];
            bool same = a.matrix && b.matrix ? a.matrix == b.matrix
                                             : (!a.matrix && !b.matrix && a.nodes == b.nodes &&
                                                a.domain == b.domain && a.range == b.range &&
                                                a.edges.size() == b.edges.size() &&
                                                std::equal(a.edges.begin(), a.edges.end(),
                                                           b.edges.begin(), [](const Edge &x, const Edge &y) {
                                                               return x.u == y.u && x.v == y.v &&
                                                                      x.kind == y.kind &&
                                                                      x.directed == y.directed &&
                                                                      x.weight == y.weight;
                                                           }));
            if (same)
                cur.warn(comp_line[j], 1, "components \"" + a.name + "\" and \"" + b.name +
                                              "\" are identical; an n-matrix expects distinct components");
        }

    if (!has_errors()) result.document = std::move(doc);
    return result;
}

// ---- serialization -----------------------------------------------------------

inline std::string serialize(const MapDocument &doc) {
    std::ostringstream os;
    os << "kind: " << to_string(doc.kind) << "\n";
    os << "policy: threshold=" << doc.policy.k << " mode="
       << (doc.policy.mode == ThresholdMode::RealDominant ? "real" : "indet") << "\n";
    auto emit_labels = [&](const char *key, std::vector<std::string> labels,
                           const std::vector<std::string> &effective, const char *order_key) {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        os << key << ":";
        for (const auto &l : sorted) os << ' ' << l;
        os << "\n";
        if (effective != sorted) {
            os << order_key << ":";
            for (const auto &l : effective) os << ' ' << l;
            os << "\n";
        }
    };
    for (const auto &c : doc.components) {
        os << "\n[component \"" << c.name << "\"]\n";
        if (!c.nodes.empty()) emit_labels("nodes", c.nodes, c.effective_order(), "order");
        if (!c.domain.empty()) emit_labels("domain", c.domain, c.effective_order(), "order");
        if (!c.range.empty()) emit_labels("range", c.range, c.effective_range_order(), "range-order");
        if (c.matrix) {
            long long denom = 1;
            for (int i = 0; i < c.matrix->scale; ++i) denom *= 10;
            os << "matrix:\n";
            const auto &g = c.matrix->grid;
            for (std::size_t i = 0; i < g.rows; ++i) {
                for (std::size_t j = 0; j < g.cols; ++j)
                    os << (j ? " " : "") << format_entry(g.at(i, j), denom);
                os << "\n";
            }
        } else if (!c.edges.empty()) {
            os << "edges:\n";
            for (const auto &e : c.edges) {
                const char *op = e.directed ? "->" : (e.kind == EdgeKind::Indeterminate ? "~~" : "--");
                os << e.u << ' ' << op << ' ' << e.v;
                if (e.directed && e.kind == EdgeKind::Indeterminate) os << " : I";
                else if (e.weight) os << " : " << to_string(*e.weight);
                os << "\n";
            }
        }
    }
    for (const auto &s : doc.scenarios) {
        os << "\n[scenario \"" << s.name << "\"]\n";
        std::vector<std::string> on = s.on;
        std::sort(on.begin(), on.end());
        on.erase(std::unique(on.begin(), on.end()), on.end());
        os << "on:";
        for (const auto &l : on) os << ' ' << l;
        os << "\n";
    }
    return os.str();
}

// ---- derivations ---------------------------------------------------------------

/// Underlying n-graph of an edge-based document.
inline NGraph to_ngraph(const MapDocument &doc) {
    std::vector<Graph> comps;
    for (const auto &c : doc.components) {
        if (c.matrix) throw std::invalid_argument("component \"" + c.name + "\" is matrix-only");
        Graph g;
        for (const auto &l : c.nodes) g.add_vertex(l);
        for (const auto &l : c.domain) g.add_vertex(l);
        for (const auto &l : c.range) g.add_vertex(l);
        for (const auto &e : c.edges) g.add_edge(e);
        comps.push_back(std::move(g));
    }
    return NGraph(std::move(comps));
}

/// The document's n-matrix: map matrix for cognitive/relational kinds, the
/// raw grid or the 0/1/I adjacency for graph documents.
inline NMatrix to_nmatrix(const MapDocument &doc);

inline CognitiveMap to_cognitive(const MapDocument &doc) {
    if (doc.kind != MapKind::Cognitive)
        throw std::invalid_argument("document is not a cognitive map");
    std::vector<MatrixComponent> comps;
    std::vector<std::vector<std::string>> labels;
    for (const auto &c : doc.components) {
        auto order = c.effective_order();
        if (c.matrix) {
            MatrixComponent m = c.matrix->grid;
            m.row_labels = order;
            m.col_labels = order;
            comps.push_back(std::move(m));
        } else {
            std::map<std::string, std::size_t> idx;
            for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
            MatrixComponent m(order.size(), order.size());
            m.row_labels = order;
            m.col_labels = order;
            for (const auto &e : c.edges)
                m.at(idx[e.u], idx[e.v]) = (e.kind == EdgeKind::Indeterminate)
                                               ? NeutroValue::indeterminate()
                                               : *e.weight;
            comps.push_back(std::move(m));
        }
        labels.push_back(order);
    }
    return CognitiveMap(NMatrix(std::move(comps)), std::move(labels));
}

inline RelationalMap to_relational(const MapDocument &doc) {
    if (doc.kind != MapKind::Relational)
        throw std::invalid_argument("document is not a relational map");
    std::vector<MatrixComponent> comps;
    std::vector<std::vector<std::string>> doms, rngs;
    for (const auto &c : doc.components) {
        auto dorder = c.effective_order();
        auto rorder = c.effective_range_order();
        if (c.matrix) {
            MatrixComponent m = c.matrix->grid;
            m.row_labels = dorder;
            m.col_labels = rorder;
            comps.push_back(std::move(m));
        } else {
            std::map<std::string, std::size_t> di, ri;
            for (std::size_t i = 0; i < dorder.size(); ++i) di[dorder[i]] = i;
            for (std::size_t j = 0; j < rorder.size(); ++j) ri[rorder[j]] = j;
            MatrixComponent m(dorder.size(), rorder.size());
            m.row_labels = dorder;
            m.col_labels = rorder;
            for (const auto &e : c.edges)
                m.at(di[e.u], ri[e.v]) = (e.kind == EdgeKind::Indeterminate)
                                             ? NeutroValue::indeterminate()
                                             : *e.weight;
            comps.push_back(std::move(m));
        }
        doms.push_back(dorder);
        rngs.push_back(rorder);
    }
    return RelationalMap(NMatrix(std::move(comps)), std::move(doms), std::move(rngs));
}

inline NMatrix to_nmatrix(const MapDocument &doc) {
    if (doc.kind == MapKind::Cognitive) return to_cognitive(doc).matrix;
    if (doc.kind == MapKind::Relational) return to_relational(doc).matrix;
    // graph documents: raw grids when present, otherwise adjacency
    bool any_matrix = false;
    for (const auto &c : doc.components)
        if (c.matrix) any_matrix = true;
    if (any_matrix) {
        std::vector<MatrixComponent> comps;
        int scale = 0;
        for (const auto &c : doc.components) {
            if (!c.matrix)
                throw std::invalid_argument("mixed matrix and edge components in one document");
            scale = std::max(scale, c.matrix->scale);
        }
        long long denom = 1;
        for (int i = 0; i < scale; ++i) denom *= 10;
        for (const auto &c : doc.components) {
            MatrixComponent m = c.matrix->grid;
            long long f = 1;
            for (int i = c.matrix->scale; i < scale; ++i) f *= 10;
            if (f > 1)
                for (auto &v : m.cells) { v.real *= f; v.indet *= f; }
            m.row_labels = c.effective_order();
            comps.push_back(std::move(m));
        }
        return NMatrix(std::move(comps), denom);
    }
    NGraph g = to_ngraph(doc);
    VertexOrderings ord;
    for (const auto &c : doc.components)
        ord.push_back(c.order ? *c.order : std::vector<std::string>{});
    return adjacency_nmatrix(g, ord);
}

/// Resolve a list of on-labels into a cognitive initial state.
inline StateVector scenario_state(const MapDocument &doc, const CognitiveMap &m,
                                  const std::vector<std::string> &on) {
    StateVector s = StateVector::zeros_like(m.component_sizes());
    for (const auto &label : on) {
        bool found = false;
        for (std::size_t k = 0; k < m.order(); ++k)
            for (std::size_t i = 0; i < m.node_labels[k].size(); ++i)
                if (m.node_labels[k][i] == label) {
                    s.components[k][i] = NeutroValue::one();
                    found = true;
                }
        if (!found) throw std::invalid_argument("scenario label '" + label + "' does not resolve");
    }
    (void)doc;
    return s;
}

/// Resolve on-labels into a relational start state; all labels must sit on
/// the same side of the split.
inline RelationalState scenario_state(const MapDocument &doc, const RelationalMap &m,
                                      const std::vector<std::string> &on) {
    bool any_domain = false, any_range = false;
    for (const auto &label : on) {
        bool found = false;
        for (std::size_t k = 0; k < m.order(); ++k) {
            for (const auto &l : m.domain_labels[k])
                if (l == label) { any_domain = true; found = true; }
            for (const auto &l : m.range_labels[k])
                if (l == label) { any_range = true; found = true; }
        }
        if (!found) throw std::invalid_argument("scenario label '" + label + "' does not resolve");
    }
    if (any_domain && any_range)
        throw std::invalid_argument("scenario mixes domain and range labels");
    RelationalState st;
    st.side = any_range ? Side::Range : Side::Domain;
    const auto &labels = (st.side == Side::Domain) ? m.domain_labels : m.range_labels;
    st.values = StateVector::zeros_like(st.side == Side::Domain ? m.domain_sizes() : m.range_sizes());
    for (const auto &label : on)
        for (std::size_t k = 0; k < m.order(); ++k)
            for (std::size_t i = 0; i < labels[k].size(); ++i)
                if (labels[k][i] == label) st.values.components[k][i] = NeutroValue::one();
    (void)doc;
    return st;
}

} // namespace neutromap

#endif
