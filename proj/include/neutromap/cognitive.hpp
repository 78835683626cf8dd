#ifndef NEUTROMAP_COGNITIVE_HPP
#define NEUTROMAP_COGNITIVE_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ngraph.hpp"
#include "nmatrix.hpp"
#include "neutro_value.hpp"

namespace neutromap {

/// Per-component on/off/indeterminate state, one value per node.
struct StateVector {
    std::vector<std::vector<NeutroValue>> components;

    StateVector() = default;
    explicit StateVector(std::vector<std::vector<NeutroValue>> comps)
        : components(std::move(comps)) {}

    static StateVector zeros_like(const std::vector<std::size_t> &sizes) {
        StateVector s;
        for (auto n : sizes) s.components.emplace_back(n, NeutroValue::zero());
        return s;
    }

    bool binary() const {
        for (const auto &c : components)
            for (const auto &v : c)
                if (v != NeutroValue::zero() && v != NeutroValue::one()) return false;
        return true;
    }

    NVector to_nvector() const { return NVector(components); }

    friend bool operator==(const StateVector &a, const StateVector &b) {
        return a.components == b.components;
    }
    friend bool operator!=(const StateVector &a, const StateVector &b) { return !(a == b); }
};

inline std::string to_string(const StateVector &s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < s.components.size(); ++k) {
        if (k > 0) os << " ∪ ";
        for (std::size_t i = 0; i < s.components[k].size(); ++i) {
            if (i > 0) os << ' ';
            os << to_string(s.components[k][i]);
        }
    }
    return os.str();
}

/// Square n-matrix with zero diagonal plus per-component node labels: the
/// FCM / NCM family and their bi/tri/n generalizations.
struct CognitiveMap {
    NMatrix matrix;
    std::vector<std::vector<std::string>> node_labels;

    CognitiveMap() = default;
    CognitiveMap(NMatrix m, std::vector<std::vector<std::string>> labels)
        : matrix(std::move(m)), node_labels(std::move(labels)) {
        validate();
    }

    std::size_t order() const { return matrix.order(); }

    std::vector<std::size_t> component_sizes() const {
        std::vector<std::size_t> out;
        for (const auto &c : matrix.components) out.push_back(c.rows);
        return out;
    }

  private:
    void validate() const {
        if (matrix.denom != 1)
            throw std::invalid_argument("cognitive map entries must be integral");
        if (node_labels.size() != matrix.order())
            throw std::invalid_argument("label sequence count does not match component count");
        for (std::size_t k = 0; k < matrix.order(); ++k) {
            const auto &c = matrix.components[k];
            if (!c.square())
                throw std::invalid_argument("cognitive map component " + std::to_string(k + 1) +
                                            " is not square");
            if (node_labels[k].size() != c.rows)
                throw std::invalid_argument("label count mismatch in component " +
                                            std::to_string(k + 1));
            for (std::size_t i = 0; i < c.rows; ++i)
                if (!c.at(i, i).is_zero())
                    throw std::invalid_argument("nonzero diagonal at " + node_labels[k][i]);
        }
    }
};

/// Adjacency extraction for directed weighted n-graphs: entry e_ij at (i,j)
/// for edge Ci -> Cj; indeterminate arcs become I.
inline CognitiveMap cmap_from_ngraph(const NGraph &g, const VertexOrderings &ord = {}) {
    std::vector<MatrixComponent> comps;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Graph &c = g.components[k];
        auto order = effective_order(c, ord, k);
        auto idx = detail::order_index(order, c);
        MatrixComponent m(order.size(), order.size());
        m.row_labels = order;
        m.col_labels = order;
        for (const auto &e : c.edges()) {
            if (!e.directed)
                throw std::invalid_argument("cognitive maps need directed components");
            NeutroValue w;
            if (e.kind == EdgeKind::Indeterminate) w = NeutroValue::indeterminate();
            else if (e.weight) w = *e.weight;
            else throw std::invalid_argument("edge " + e.u + " -> " + e.v + " has no weight");
            m.at(idx[e.u], idx[e.v]) = w;
        }
        comps.push_back(std::move(m));
        labels.push_back(order);
    }
    return CognitiveMap(NMatrix(std::move(comps)), std::move(labels));
}

namespace detail {

inline void check_state_shape(const StateVector &s, const std::vector<std::size_t> &sizes,
                              const char *what) {
    if (s.components.size() != sizes.size())
        throw std::invalid_argument(std::string(what) + ": component count mismatch");
    for (std::size_t k = 0; k < sizes.size(); ++k)
        if (s.components[k].size() != sizes[k])
            throw std::invalid_argument(std::string(what) + ": length mismatch in component " +
                                        std::to_string(k + 1));
}

} // namespace detail

/// One synchronous step: multiply, threshold, then update (force
/// initially-on coordinates back to 1).
inline StateVector cstep(const CognitiveMap &m, const StateVector &s, const ThresholdPolicy &p,
                         const StateVector &initial) {
    detail::check_state_shape(initial, m.component_sizes(), "initial state");
    NVector raw = nm_vec_mul(s.to_nvector(), m.matrix);
    StateVector out;
    out.components.resize(raw.order());
    for (std::size_t k = 0; k < raw.order(); ++k) {
        auto &comp = out.components[k];
        comp.reserve(raw.components[k].size());
        for (std::size_t i = 0; i < raw.components[k].size(); ++i) {
            NeutroValue t = threshold_scalar(raw.components[k][i], p);
            if (initial.components[k][i] == NeutroValue::one()) t = NeutroValue::one();
            comp.push_back(t);
        }
    }
    return out;
}

enum class VerdictKind { FixedPoint, LimitCycle };

struct ComponentVerdict {
    VerdictKind kind;
    /// FixedPoint: single state; LimitCycle: the distinct states in cycle order.
    std::vector<std::vector<NeutroValue>> states;
};

struct HiddenPattern {
    std::vector<ComponentVerdict> verdicts; // one per component
    std::vector<StateVector> trace;         // initial state through detection
    std::size_t iterations = 0;             // steps taken until a repeat
    std::size_t cycle_start = 0;            // index into trace of the repeated state
};

/// Iterate cstep from the initial vector until the full joint state repeats,
/// then classify each component over the repeated segment.
inline HiddenPattern find_hidden_pattern(const CognitiveMap &m, const StateVector &initial,
                                         const ThresholdPolicy &p = {}) {
    if (!initial.binary())
        throw std::invalid_argument("initial state vectors take coordinates from {0,1} only");
    HiddenPattern out;
    out.trace.push_back(initial);
    for (;;) {
        StateVector next = cstep(m, out.trace.back(), p, initial);
        ++out.iterations;
        bool repeated = false;
        for (std::size_t j = 0; j < out.trace.size(); ++j) {
            if (out.trace[j] == next) {
                out.cycle_start = j;
                repeated = true;
                break;
            }
        }
        if (repeated) break;
        out.trace.push_back(std::move(next));
    }
    // classify each component over trace[cycle_start .. end]
    std::size_t len = out.trace.size() - out.cycle_start;
    for (std::size_t k = 0; k < m.order(); ++k) {
        ComponentVerdict v;
        bool constant = true;
        const auto &first = out.trace[out.cycle_start].components[k];
        for (std::size_t j = 1; j < len; ++j)
            if (out.trace[out.cycle_start + j].components[k] != first) constant = false;
        if (constant) {
            v.kind = VerdictKind::FixedPoint;
            v.states.push_back(first);
        } else {
            v.kind = VerdictKind::LimitCycle;
            for (std::size_t j = 0; j < len; ++j) {
                const auto &s = out.trace[out.cycle_start + j].components[k];
                bool seen = false;
                for (const auto &prev : v.states)
                    if (prev == s) seen = true;
                if (!seen) v.states.push_back(s);
            }
        }
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

/// Combined map: entrywise sum over aligned expert maps.
inline CognitiveMap combine_cmaps(const std::vector<CognitiveMap> &ms) {
    if (ms.empty()) throw std::invalid_argument("nothing to combine");
    const auto &first = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].order() != first.order())
            throw std::invalid_argument("combine: component counts differ");
        for (std::size_t k = 0; k < first.order(); ++k) {
            const auto &la = first.node_labels[k];
            const auto &lb = ms[i].node_labels[k];
            if (la.size() != lb.size())
                throw std::invalid_argument("combine: node counts differ in component " +
                                            std::to_string(k + 1));
            for (std::size_t j = 0; j < la.size(); ++j)
                if (la[j] != lb[j])
                    throw std::invalid_argument("combine: node labels diverge at " + lb[j]);
        }
    }
    NMatrix sum = first.matrix;
    for (std::size_t i = 1; i < ms.size(); ++i) sum = nm_add(sum, ms[i].matrix);
    return CognitiveMap(std::move(sum), first.node_labels);
}

inline std::string render_verdict(const ComponentVerdict &v) {
    auto render_state = [](const std::vector<NeutroValue> &s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0) out += ' ';
            out += to_string(s[i]);
        }
        return out;
    };
    if (v.kind == VerdictKind::FixedPoint) return "FIXED(" + render_state(v.states[0]) + ")";
    std::string out = "CYCLE(";
    for (std::size_t i = 0; i < v.states.size(); ++i) {
        if (i > 0) out += " -> ";
        out += "(" + render_state(v.states[i]) + ")";
    }
    return out + ")";
}

/// Trace text: one line per iteration, then one HIDDEN line per component.
inline std::string render_trace(const HiddenPattern &hp) {
    std::ostringstream os;
    for (std::size_t i = 0; i < hp.trace.size(); ++i)
        os << i << ": " << to_string(hp.trace[i]) << '\n';
    for (std::size_t k = 0; k < hp.verdicts.size(); ++k)
        os << "HIDDEN: component " << (k + 1) << " = " << render_verdict(hp.verdicts[k]) << '\n';
    return os.str();
}

} // namespace neutromap

#endif
