#ifndef NEUTROMAP_CLI_HPP
#define NEUTROMAP_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapfile.hpp"

namespace neutromap::cli {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// ---- JSON mirror of the map document ---------------------------------------

inline json doc_to_json(const MapDocument &doc) {
    json j;
    j["kind"] = to_string(doc.kind);
    j["policy"] = {{"threshold", doc.policy.k},
                   {"mode", doc.policy.mode == ThresholdMode::RealDominant ? "real" : "indet"}};
    j["components"] = json::array();
    for (const auto &c : doc.components) {
        json jc;
        jc["name"] = c.name;
        if (!c.nodes.empty()) jc["nodes"] = c.nodes;
        if (!c.domain.empty()) jc["domain"] = c.domain;
        if (!c.range.empty()) jc["range"] = c.range;
        if (c.order) jc["order"] = *c.order;
        if (c.range_order) jc["range_order"] = *c.range_order;
        jc["edges"] = json::array();
        for (const auto &e : c.edges) {
            json je;
            je["from"] = e.u;
            je["to"] = e.v;
            je["directed"] = e.directed;
            je["indeterminate"] = e.kind == EdgeKind::Indeterminate;
            if (e.weight) je["weight"] = to_string(*e.weight);
            jc["edges"].push_back(je);
        }
        if (c.matrix) {
            long long denom = 1;
            for (int i = 0; i < c.matrix->scale; ++i) denom *= 10;
            json rows = json::array();
            for (std::size_t i = 0; i < c.matrix->grid.rows; ++i) {
                json row = json::array();
                for (std::size_t jx = 0; jx < c.matrix->grid.cols; ++jx)
                    row.push_back(format_entry(c.matrix->grid.at(i, jx), denom));
                rows.push_back(row);
            }
            jc["matrix"] = rows;
        }
        j["components"].push_back(jc);
    }
    j["scenarios"] = json::array();
    for (const auto &s : doc.scenarios) j["scenarios"].push_back({{"name", s.name}, {"on", s.on}});
    return j;
}

inline MapDocument doc_from_json(const json &j) {
    // round-trip through the text format keeps one validation path
    MapDocument doc;
    std::ostringstream os;
    os << "kind: " << j.value("kind", "graph") << "\n";
    if (j.contains("policy"))
        os << "policy: threshold=" << j["policy"].value("threshold", 1)
           << " mode=" << j["policy"].value("mode", "real") << "\n";
    for (const auto &jc : j.value("components", json::array())) {
        os << "[component \"" << jc.value("name", "c") << "\"]\n";
        auto emit_list = [&](const char *key) {
            if (!jc.contains(key)) return;
            os << key << ":";
            for (const auto &l : jc[key]) os << ' ' << l.get<std::string>();
            os << "\n";
        };
        emit_list("nodes");
        emit_list("domain");
        emit_list("range");
        emit_list("order");
        if (jc.contains("range_order")) {
            os << "range-order:";
            for (const auto &l : jc["range_order"]) os << ' ' << l.get<std::string>();
            os << "\n";
        }
        if (jc.contains("matrix")) {
            os << "matrix:\n";
            for (const auto &row : jc["matrix"]) {
                bool first = true;
                for (const auto &cell : row) {
                    os << (first ? "" : " ") << cell.get<std::string>();
                    first = false;
                }
                os << "\n";
            }
        }
        if (jc.contains("edges") && !jc["edges"].empty()) {
            os << "edges:\n";
            for (const auto &je : jc["edges"]) {
                bool directed = je.value("directed", true);
                bool indet = je.value("indeterminate", false);
                std::string op = directed ? "->" : (indet ? "~~" : "--");
                os << je["from"].get<std::string>() << ' ' << op << ' '
                   << je["to"].get<std::string>();
                if (directed && indet) os << " : I";
                else if (je.contains("weight")) os << " : " << je["weight"].get<std::string>();
                os << "\n";
            }
        }
    }
    for (const auto &js : j.value("scenarios", json::array())) {
        os << "[scenario \"" << js.value("name", "s") << "\"]\n";
        os << "on:";
        for (const auto &l : js.value("on", json::array())) os << ' ' << l.get<std::string>();
        os << "\n";
    }
    auto parsed = parse(os.str());
    if (!parsed.ok()) {
        std::string msg = "invalid JSON document";
        for (const auto &d : parsed.diagnostics) msg += "\n  " + d.render();
        throw UsageError(msg);
    }
    return *parsed.document;
}

/// Load a .nmap or .json map file; diagnostics land in `err`.
inline std::optional<MapDocument> load_document(const std::string &path, std::ostream &err) {
    std::string text = read_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        try {
            return doc_from_json(json::parse(text));
        } catch (const json::exception &e) {
            err << path << ": error: " << e.what() << "\n";
            return std::nullopt;
        }
    }
    auto result = parse(text);
    for (const auto &d : result.diagnostics) err << path << ":" << d.render() << "\n";
    return result.document;
}

// ---- classify ----------------------------------------------------------------

struct ClassifyReport {
    std::vector<std::pair<std::string, std::string>> dims; // name, RxC
    NMatrixKind matrix_kind{};
    std::optional<GluingClass> gluing;
    std::optional<NeutroGraphVerdict> neutro;
    std::optional<bool> bipartite;
    std::optional<bool> strongly_biconnected;
};

inline ClassifyReport classify_document(const MapDocument &doc) {
    ClassifyReport rep;
    NMatrix m = to_nmatrix(doc);
    for (std::size_t k = 0; k < m.order(); ++k) {
        const auto &c = m.components[k];
        rep.dims.emplace_back(doc.components[k].name,
                              std::to_string(c.rows) + "x" + std::to_string(c.cols));
    }
    rep.matrix_kind = nm_classify(m);
    bool edge_based = true;
    for (const auto &c : doc.components)
        if (c.matrix) edge_based = false;
    if (edge_based) {
        NGraph g = to_ngraph(doc);
        rep.neutro = neutrosophic_classify(g);
        auto bs = bipartite_structure(g);
        rep.bipartite = bs.is_bipartite_ngraph;
        if (g.order() == 2) {
            rep.gluing = gluing_classify(g);
            rep.strongly_biconnected = bs.is_strongly_biconnected;
        }
    }
    return rep;
}

inline std::string render_text(const ClassifyReport &rep) {
    std::ostringstream os;
    os << "components: " << rep.dims.size() << "\n";
    for (std::size_t i = 0; i < rep.dims.size(); ++i)
        os << "component " << (i + 1) << " \"" << rep.dims[i].first << "\": " << rep.dims[i].second
           << "\n";
    os << "shape: " << to_string(rep.matrix_kind.shape) << "\n";
    os << "content: " << to_string(rep.matrix_kind.content) << "\n";
    if (rep.gluing) os << "gluing: " << to_string(*rep.gluing) << "\n";
    if (rep.neutro) os << "neutrosophic: " << to_string(*rep.neutro) << "\n";
    if (rep.bipartite) os << "bipartite: " << (*rep.bipartite ? "yes" : "no") << "\n";
    if (rep.strongly_biconnected)
        os << "strongly-biconnected: " << (*rep.strongly_biconnected ? "yes" : "no") << "\n";
    return os.str();
}

inline json render_json(const ClassifyReport &rep) {
    json j;
    j["components"] = json::array();
    for (const auto &d : rep.dims) j["components"].push_back({{"name", d.first}, {"dims", d.second}});
    j["shape"] = to_string(rep.matrix_kind.shape);
    j["content"] = to_string(rep.matrix_kind.content);
    if (rep.gluing) j["gluing"] = to_string(*rep.gluing);
    if (rep.neutro) j["neutrosophic"] = to_string(*rep.neutro);
    if (rep.bipartite) j["bipartite"] = *rep.bipartite;
    if (rep.strongly_biconnected) j["strongly_biconnected"] = *rep.strongly_biconnected;
    return j;
}

// ---- run -----------------------------------------------------------------------

struct RunOptions {
    std::optional<std::string> scenario;       // named scenario
    std::vector<std::string> on;               // explicit on-node list
    std::optional<long long> threshold;        // --threshold override
    std::optional<ThresholdMode> mode;         // --mode override
    bool trace = false;
    bool json_format = false;
};

inline std::vector<std::string> resolve_on_labels(const MapDocument &doc, const RunOptions &opt) {
    if (opt.scenario) {
        const Scenario *s = doc.find_scenario(*opt.scenario);
        if (!s) throw UsageError("no scenario named \"" + *opt.scenario + "\"");
        return s->on;
    }
    return opt.on;
}

inline json state_to_json(const std::vector<NeutroValue> &s) {
    json out = json::array();
    for (const auto &v : s) out.push_back(to_string(v));
    return out;
}

inline json verdict_to_json(const ComponentVerdict &v) {
    json j;
    j["kind"] = v.kind == VerdictKind::FixedPoint ? "fixed" : "cycle";
    j["states"] = json::array();
    for (const auto &s : v.states) j["states"].push_back(state_to_json(s));
    return j;
}

inline std::string run_document(const MapDocument &doc, const RunOptions &opt) {
    ThresholdPolicy policy = doc.policy;
    if (opt.threshold) policy = ThresholdPolicy(*opt.threshold, policy.mode);
    if (opt.mode) policy.mode = *opt.mode;
    auto on = resolve_on_labels(doc, opt);

    if (doc.kind == MapKind::Cognitive) {
        CognitiveMap m = to_cognitive(doc);
        StateVector initial = scenario_state(doc, m, on);
        HiddenPattern hp = find_hidden_pattern(m, initial, policy);
        if (opt.json_format) {
            json j;
            j["iterations"] = hp.iterations;
            j["verdicts"] = json::array();
            for (std::size_t k = 0; k < hp.verdicts.size(); ++k) {
                json jv = verdict_to_json(hp.verdicts[k]);
                jv["component"] = k + 1;
                j["verdicts"].push_back(jv);
            }
            if (opt.trace) {
                j["trace"] = json::array();
                for (const auto &s : hp.trace) {
                    json js = json::array();
                    for (const auto &c : s.components) js.push_back(state_to_json(c));
                    j["trace"].push_back(js);
                }
            }
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        if (opt.trace) os << render_trace(hp);
        else
            for (std::size_t k = 0; k < hp.verdicts.size(); ++k)
                os << "HIDDEN: component " << (k + 1) << " = " << render_verdict(hp.verdicts[k])
                   << "\n";
        return os.str();
    }
    if (doc.kind == MapKind::Relational) {
        RelationalMap m = to_relational(doc);
        RelationalState start = scenario_state(doc, m, on);
        RelationalHiddenPattern hp = rfind_hidden_pattern(m, start, policy);
        if (opt.json_format) {
            json j;
            j["iterations"] = hp.iterations;
            j["start_side"] = start.side == Side::Domain ? "domain" : "range";
            j["verdicts"] = json::array();
            for (std::size_t k = 0; k < m.order(); ++k) {
                json jd = verdict_to_json(hp.domain_verdicts[k]);
                jd["component"] = k + 1;
                jd["side"] = "domain";
                j["verdicts"].push_back(jd);
                json jr = verdict_to_json(hp.range_verdicts[k]);
                jr["component"] = k + 1;
                jr["side"] = "range";
                j["verdicts"].push_back(jr);
            }
            if (opt.trace) {
                j["trace"] = json::array();
                for (const auto &r : hp.rounds) {
                    json jr;
                    jr["domain"] = json::array();
                    for (const auto &c : r.first.components) jr["domain"].push_back(state_to_json(c));
                    jr["range"] = json::array();
                    for (const auto &c : r.second.components) jr["range"].push_back(state_to_json(c));
                    j["trace"].push_back(jr);
                }
            }
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        if (opt.trace) os << render_trace(hp, start.side);
        else {
            for (std::size_t k = 0; k < m.order(); ++k) {
                os << "HIDDEN: component " << (k + 1)
                   << " domain = " << render_verdict(hp.domain_verdicts[k]) << "\n";
                os << "HIDDEN: component " << (k + 1)
                   << " range = " << render_verdict(hp.range_verdicts[k]) << "\n";
            }
        }
        return os.str();
    }
    throw UsageError("run needs a cognitive or relational map, not a graph document");
}

// ---- combine ---------------------------------------------------------------------

/// Rebuild a document around a combined matrix, preserving the first
/// document's labels and kind.
inline MapDocument combined_document(const MapDocument &first, const NMatrix &sum) {
    MapDocument out;
    out.kind = first.kind;
    out.policy = first.policy;
    for (std::size_t k = 0; k < sum.order(); ++k) {
        MapComponent c;
        c.name = first.components[k].name;
        c.nodes = first.components[k].nodes;
        c.domain = first.components[k].domain;
        c.range = first.components[k].range;
        c.order = first.components[k].order;
        c.range_order = first.components[k].range_order;
        auto dorder = first.components[k].effective_order();
        auto rorder = first.kind == MapKind::Relational ? first.components[k].effective_range_order()
                                                        : dorder;
        const auto &m = sum.components[k];
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) {
                if (m.at(i, j).is_zero()) continue;
                Edge e;
                e.u = dorder[i];
                e.v = rorder[j];
                e.directed = true;
                if (m.at(i, j) == NeutroValue::indeterminate()) e.kind = EdgeKind::Indeterminate;
                else e.weight = m.at(i, j);
                c.edges.push_back(std::move(e));
            }
        out.components.push_back(std::move(c));
    }
    out.scenarios = first.scenarios;
    return out;
}

inline MapDocument combine_documents(const std::vector<MapDocument> &docs) {
    if (docs.size() < 2) throw UsageError("combine needs at least two maps");
    MapKind kind = docs.front().kind;
    for (const auto &d : docs)
        if (d.kind != kind) throw UsageError("combine: maps have different kinds");
    if (kind == MapKind::Cognitive) {
        std::vector<CognitiveMap> maps;
        for (const auto &d : docs) maps.push_back(to_cognitive(d));
        return combined_document(docs.front(), combine_cmaps(maps).matrix);
    }
    if (kind == MapKind::Relational) {
        std::vector<RelationalMap> maps;
        for (const auto &d : docs) maps.push_back(to_relational(d));
        return combined_document(docs.front(), combine_rmaps(maps).matrix);
    }
    throw UsageError("combine needs cognitive or relational maps");
}

// ---- export-matrix ------------------------------------------------------------------

inline std::string export_matrix(const MapDocument &doc) { return nm_to_text(to_nmatrix(doc)); }

} // namespace neutromap::cli

#endif
