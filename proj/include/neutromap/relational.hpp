#ifndef NEUTROMAP_RELATIONAL_HPP
#define NEUTROMAP_RELATIONAL_HPP

#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cognitive.hpp"
#include "ngraph.hpp"
#include "nmatrix.hpp"
#include "neutro_value.hpp"

namespace neutromap {

enum class Side { Domain, Range };

/// Rectangular n-matrix (domain rows x range columns) with disjoint label
/// sets per component: the FRM / NRM family.
struct RelationalMap {
    NMatrix matrix;
    std::vector<std::vector<std::string>> domain_labels;
    std::vector<std::vector<std::string>> range_labels;

    RelationalMap() = default;
    RelationalMap(NMatrix m, std::vector<std::vector<std::string>> dom,
                  std::vector<std::vector<std::string>> rng)
        : matrix(std::move(m)), domain_labels(std::move(dom)), range_labels(std::move(rng)) {
        validate();
    }

    std::size_t order() const { return matrix.order(); }

    std::vector<std::size_t> domain_sizes() const {
        std::vector<std::size_t> out;
        for (const auto &c : matrix.components) out.push_back(c.rows);
        return out;
    }
    std::vector<std::size_t> range_sizes() const {
        std::vector<std::size_t> out;
        for (const auto &c : matrix.components) out.push_back(c.cols);
        return out;
    }

  private:
    void validate() const {
        if (matrix.denom != 1)
            throw std::invalid_argument("relational map entries must be integral");
        if (domain_labels.size() != matrix.order() || range_labels.size() != matrix.order())
            throw std::invalid_argument("label sequence count does not match component count");
        for (std::size_t k = 0; k < matrix.order(); ++k) {
            const auto &c = matrix.components[k];
            if (domain_labels[k].size() != c.rows || range_labels[k].size() != c.cols)
                throw std::invalid_argument("label count mismatch in component " +
                                            std::to_string(k + 1));
            std::set<std::string> dom(domain_labels[k].begin(), domain_labels[k].end());
            for (const auto &r : range_labels[k])
                if (dom.count(r))
                    throw std::invalid_argument("domain and range share the label " + r);
        }
    }
};

/// A state bound to one side of the map.
struct RelationalState {
    Side side = Side::Domain;
    StateVector values;

    friend bool operator==(const RelationalState &a, const RelationalState &b) {
        return a.side == b.side && a.values == b.values;
    }
    friend bool operator!=(const RelationalState &a, const RelationalState &b) { return !(a == b); }
};

/// Build the relational matrix from a bipartite directed n-graph whose parts
/// have been declared as (domain, range) per component.  Edges must point
/// across the split.
inline RelationalMap rmap_from_ngraph(const NGraph &g,
                                      const std::vector<std::vector<std::string>> &domains,
                                      const std::vector<std::vector<std::string>> &ranges) {
    if (domains.size() != g.order() || ranges.size() != g.order())
        throw std::invalid_argument("one (domain, range) split per component required");
    std::vector<MatrixComponent> comps;
    for (std::size_t k = 0; k < g.order(); ++k) {
        const Graph &c = g.components[k];
        std::map<std::string, std::size_t> dom, rng;
        for (std::size_t i = 0; i < domains[k].size(); ++i) dom[domains[k][i]] = i;
        for (std::size_t j = 0; j < ranges[k].size(); ++j) rng[ranges[k][j]] = j;
        for (const auto &v : c.vertices())
            if (!dom.count(v) && !rng.count(v))
                throw std::invalid_argument("vertex " + v + " is in neither part");
        MatrixComponent m(domains[k].size(), ranges[k].size());
        m.row_labels = domains[k];
        m.col_labels = ranges[k];
        for (const auto &e : c.edges()) {
            if (!e.directed) throw std::invalid_argument("relational maps need directed edges");
            if (!dom.count(e.u) || !rng.count(e.v))
                throw std::invalid_argument("edge " + e.u + " -> " + e.v +
                                            " does not cross the domain/range split");
            NeutroValue w;
            if (e.kind == EdgeKind::Indeterminate) w = NeutroValue::indeterminate();
            else if (e.weight) w = *e.weight;
            else throw std::invalid_argument("edge " + e.u + " -> " + e.v + " has no weight");
            m.at(dom[e.u], rng[e.v]) = w;
        }
        comps.push_back(std::move(m));
    }
    return RelationalMap(NMatrix(std::move(comps)), domains, ranges);
}

/// Domain state through the matrix: threshold(a_i E_i), then force
/// initially-on range coordinates.
inline StateVector rstep_forward(const RelationalMap &m, const StateVector &domain_state,
                                 const ThresholdPolicy &p, const StateVector &initial_range) {
    detail::check_state_shape(initial_range, m.range_sizes(), "initial range state");
    NVector raw = nm_vec_mul(NVector(domain_state.components), m.matrix);
    StateVector out;
    out.components.resize(raw.order());
    for (std::size_t k = 0; k < raw.order(); ++k)
        for (std::size_t j = 0; j < raw.components[k].size(); ++j) {
            NeutroValue t = threshold_scalar(raw.components[k][j], p);
            if (initial_range.components[k][j] == NeutroValue::one()) t = NeutroValue::one();
            out.components[k].push_back(t);
        }
    return out;
}

/// Range state through the transpose: threshold(b_i E_i^T), then force
/// initially-on domain coordinates.
inline StateVector rstep_backward(const RelationalMap &m, const StateVector &range_state,
                                  const ThresholdPolicy &p, const StateVector &initial_domain) {
    detail::check_state_shape(initial_domain, m.domain_sizes(), "initial domain state");
    NVector raw = nm_vec_mul(NVector(range_state.components), nm_transpose(m.matrix));
    StateVector out;
    out.components.resize(raw.order());
    for (std::size_t k = 0; k < raw.order(); ++k)
        for (std::size_t i = 0; i < raw.components[k].size(); ++i) {
            NeutroValue t = threshold_scalar(raw.components[k][i], p);
            if (initial_domain.components[k][i] == NeutroValue::one()) t = NeutroValue::one();
            out.components[k].push_back(t);
        }
    return out;
}

struct RelationalHiddenPattern {
    std::vector<ComponentVerdict> domain_verdicts;
    std::vector<ComponentVerdict> range_verdicts;
    /// rounds of (domain, range) states after each forward+backward pass;
    /// round 0 holds the start state on its own side.
    std::vector<std::pair<StateVector, StateVector>> rounds;
    std::size_t cycle_start = 0;
    std::size_t iterations = 0;
};

/// Alternate through E and E^T from the start side until a full
/// (domain, range) round repeats; classify per component per side.
inline RelationalHiddenPattern rfind_hidden_pattern(const RelationalMap &m,
                                                    const RelationalState &start,
                                                    const ThresholdPolicy &p = {}) {
    if (!start.values.binary())
        throw std::invalid_argument("start state vectors take coordinates from {0,1} only");
    StateVector zero_domain = StateVector::zeros_like(m.domain_sizes());
    StateVector zero_range = StateVector::zeros_like(m.range_sizes());
    const StateVector &initial_domain = (start.side == Side::Domain) ? start.values : zero_domain;
    const StateVector &initial_range = (start.side == Side::Range) ? start.values : zero_range;

    RelationalHiddenPattern out;
    out.rounds.emplace_back(initial_domain, initial_range);

    StateVector domain = initial_domain;
    StateVector range = initial_range;
    for (;;) {
        if (start.side == Side::Domain) {
            range = rstep_forward(m, domain, p, initial_range);
            domain = rstep_backward(m, range, p, initial_domain);
        } else {
            domain = rstep_backward(m, range, p, initial_domain);
            range = rstep_forward(m, domain, p, initial_range);
        }
        ++out.iterations;
        std::pair<StateVector, StateVector> round{domain, range};
        bool repeated = false;
        for (std::size_t j = 1; j < out.rounds.size(); ++j)
            if (out.rounds[j] == round) {
                out.cycle_start = j;
                repeated = true;
                break;
            }
        if (repeated) break;
        out.rounds.push_back(std::move(round));
    }

    std::size_t len = out.rounds.size() - out.cycle_start;
    auto classify = [&](bool domain_side, std::size_t k) {
        ComponentVerdict v;
        auto pick = [&](std::size_t r) -> const std::vector<NeutroValue> & {
            const auto &pairr = out.rounds[out.cycle_start + r];
            return domain_side ? pairr.first.components[k] : pairr.second.components[k];
        };
        bool constant = true;
        for (std::size_t j = 1; j < len; ++j)
            if (pick(j) != pick(0)) constant = false;
        if (constant) {
            v.kind = VerdictKind::FixedPoint;
            v.states.push_back(pick(0));
        } else {
            v.kind = VerdictKind::LimitCycle;
            for (std::size_t j = 0; j < len; ++j) {
                bool seen = false;
                for (const auto &prev : v.states)
                    if (prev == pick(j)) seen = true;
                if (!seen) v.states.push_back(pick(j));
            }
        }
        return v;
    };
    for (std::size_t k = 0; k < m.order(); ++k) {
        out.domain_verdicts.push_back(classify(true, k));
        out.range_verdicts.push_back(classify(false, k));
    }
    return out;
}

/// Combined relational map: entrywise sum over aligned experts.
inline RelationalMap combine_rmaps(const std::vector<RelationalMap> &ms) {
    if (ms.empty()) throw std::invalid_argument("nothing to combine");
    const auto &first = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].order() != first.order())
            throw std::invalid_argument("combine: component counts differ");
        for (std::size_t k = 0; k < first.order(); ++k) {
            auto check = [&](const std::vector<std::string> &a, const std::vector<std::string> &b) {
                if (a.size() != b.size())
                    throw std::invalid_argument("combine: node counts differ in component " +
                                                std::to_string(k + 1));
                for (std::size_t j = 0; j < a.size(); ++j)
                    if (a[j] != b[j])
                        throw std::invalid_argument("combine: node labels diverge at " + b[j]);
            };
            check(first.domain_labels[k], ms[i].domain_labels[k]);
            check(first.range_labels[k], ms[i].range_labels[k]);
        }
    }
    NMatrix sum = first.matrix;
    for (std::size_t i = 1; i < ms.size(); ++i) sum = nm_add(sum, ms[i].matrix);
    return RelationalMap(std::move(sum), first.domain_labels, first.range_labels);
}

/// Trace text with alternating D:/R: prefixes, then HIDDEN verdict lines.
inline std::string render_trace(const RelationalHiddenPattern &hp, Side start_side) {
    std::ostringstream os;
    for (std::size_t i = 0; i < hp.rounds.size(); ++i) {
        if (i == 0) {
            if (start_side == Side::Domain) os << "D: " << to_string(hp.rounds[0].first) << '\n';
            else os << "R: " << to_string(hp.rounds[0].second) << '\n';
            continue;
        }
        if (start_side == Side::Domain) {
            os << "R: " << to_string(hp.rounds[i].second) << '\n';
            os << "D: " << to_string(hp.rounds[i].first) << '\n';
        } else {
            os << "D: " << to_string(hp.rounds[i].first) << '\n';
            os << "R: " << to_string(hp.rounds[i].second) << '\n';
        }
    }
    for (std::size_t k = 0; k < hp.domain_verdicts.size(); ++k) {
        os << "HIDDEN: component " << (k + 1)
           << " domain = " << render_verdict(hp.domain_verdicts[k]) << '\n';
        os << "HIDDEN: component " << (k + 1)
           << " range = " << render_verdict(hp.range_verdicts[k]) << '\n';
    }
    return os.str();
}

} // namespace neutromap

#endif
