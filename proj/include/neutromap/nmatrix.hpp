#ifndef NEUTROMAP_NMATRIX_HPP
#define NEUTROMAP_NMATRIX_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "neutro_value.hpp"

namespace neutromap {

/// One rows x cols grid of NeutroValue with optional row/column labels.
struct MatrixComponent {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<NeutroValue> cells; // row-major
    std::vector<std::string> row_labels; // empty or size rows
    std::vector<std::string> col_labels; // empty or size cols

    MatrixComponent() = default;
    // cols may be 0 only for the incidence matrix of an edgeless graph
    MatrixComponent(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c) {
        if (r == 0) throw std::invalid_argument("matrix component must be non-empty");
    }

    NeutroValue &at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
    const NeutroValue &at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }

    bool square() const { return rows == cols; }

    friend bool operator==(const MatrixComponent &a, const MatrixComponent &b) {
        return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells;
    }
    friend bool operator!=(const MatrixComponent &a, const MatrixComponent &b) { return !(a == b); }
};

/// Ordered sequence of k >= 1 component matrices: a bimatrix for k = 2,
/// a trimatrix for k = 3.  `denom` scales every entry by 1/denom; it stays 1
/// except for classification-only documents that carry decimal entries.
struct NMatrix {
    std::vector<MatrixComponent> components;
    long long denom = 1;

    NMatrix() = default;
    explicit NMatrix(std::vector<MatrixComponent> comps, long long d = 1)
        : components(std::move(comps)), denom(d) {
        if (components.empty()) throw std::invalid_argument("n-matrix needs at least one component");
        if (denom < 1) throw std::invalid_argument("denominator must be positive");
        normalize_denom();
    }

    std::size_t order() const { return components.size(); }

    /// Two equal component grids make a degenerate n-matrix unless the
    /// whole thing is zero.  Reported as a query, not a construction failure, since sums
    /// of maps can legitimately collide.
    std::optional<std::pair<std::size_t, std::size_t>> duplicate_components() const {
        bool all_zero = true;
        for (const auto &c : components)
            for (const auto &v : c.cells)
                if (!v.is_zero()) { all_zero = false; break; }
        if (all_zero) return std::nullopt;
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j)
                if (components[i] == components[j]) return std::make_pair(i, j);
        return std::nullopt;
    }

  private:
    void normalize_denom() {
        while (denom % 10 == 0) {
            bool divisible = true;
            for (const auto &c : components)
                for (const auto &v : c.cells)
                    if (v.real % 10 != 0 || v.indet % 10 != 0) { divisible = false; break; }
            if (!divisible) break;
            for (auto &c : components)
                for (auto &v : c.cells) { v.real /= 10; v.indet /= 10; }
            denom /= 10;
        }
    }
};

/// Per-component row vector, the state side of every dynamical system here.
struct NVector {
    std::vector<std::vector<NeutroValue>> components;

    NVector() = default;
    explicit NVector(std::vector<std::vector<NeutroValue>> comps) : components(std::move(comps)) {}

    std::size_t order() const { return components.size(); }

    friend bool operator==(const NVector &a, const NVector &b) { return a.components == b.components; }
    friend bool operator!=(const NVector &a, const NVector &b) { return !(a == b); }
};

enum class NMatrixShape { Square, MixedSquare, Rectangular, MixedRectangular };
enum class NMatrixContent {
    Real,
    Fuzzy,
    SemiFuzzy,
    Neutrosophic,
    SemiNeutrosophic,
    FuzzyNeutrosophic,
    SemiFuzzyNeutrosophic
};

struct NMatrixKind {
    NMatrixShape shape;
    NMatrixContent content;
};

inline const char *to_string(NMatrixShape s) {
    switch (s) {
    case NMatrixShape::Square: return "Square";
    case NMatrixShape::MixedSquare: return "MixedSquare";
    case NMatrixShape::Rectangular: return "Rectangular";
    case NMatrixShape::MixedRectangular: return "MixedRectangular";
    }
    return "?";
}

inline const char *to_string(NMatrixContent c) {
    switch (c) {
    case NMatrixContent::Real: return "Real";
    case NMatrixContent::Fuzzy: return "Fuzzy";
    case NMatrixContent::SemiFuzzy: return "SemiFuzzy";
    case NMatrixContent::Neutrosophic: return "Neutrosophic";
    case NMatrixContent::SemiNeutrosophic: return "SemiNeutrosophic";
    case NMatrixContent::FuzzyNeutrosophic: return "FuzzyNeutrosophic";
    case NMatrixContent::SemiFuzzyNeutrosophic: return "SemiFuzzyNeutrosophic";
    }
    return "?";
}

/// Ordered-sequence equality: same k, same shapes, same entries.  Labels and
/// denominators are compared through normalized entry values.
inline bool nm_equal(const NMatrix &a, const NMatrix &b) {
    return a.denom == b.denom && a.components == b.components;
}

inline bool operator==(const NMatrix &a, const NMatrix &b) { return nm_equal(a, b); }
inline bool operator!=(const NMatrix &a, const NMatrix &b) { return !(a == b); }

inline NMatrix nm_scalar_mul(const NeutroValue &lambda, const NMatrix &a) {
    NMatrix out = a;
    for (auto &c : out.components)
        for (auto &v : c.cells) v = nv_mul(lambda, v);
    return out;
}

inline NMatrix nm_add(const NMatrix &a, const NMatrix &b) {
    if (a.order() != b.order())
        throw std::invalid_argument("n-matrix addition: component counts differ");
    if (a.denom != b.denom)
        throw std::invalid_argument("n-matrix addition: denominators differ");
    NMatrix out = a;
    for (std::size_t k = 0; k < a.order(); ++k) {
        const auto &ca = a.components[k];
        const auto &cb = b.components[k];
        if (ca.rows != cb.rows || ca.cols != cb.cols)
            throw std::invalid_argument("n-matrix addition: shape mismatch in component " +
                                        std::to_string(k + 1));
        for (std::size_t i = 0; i < ca.cells.size(); ++i)
            out.components[k].cells[i] = nv_add(ca.cells[i], cb.cells[i]);
    }
    return out;
}

/// Componentwise row-vector x matrix product, raw (no thresholding).
inline NVector nm_vec_mul(const NVector &v, const NMatrix &a) {
    if (v.order() != a.order())
        throw std::invalid_argument("vector-matrix product: component counts differ");
    NVector out;
    out.components.resize(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        const auto &row = v.components[k];
        const auto &m = a.components[k];
        if (row.size() != m.rows)
            throw std::invalid_argument("vector-matrix product: length mismatch in component " +
                                        std::to_string(k + 1));
        auto &res = out.components[k];
        res.assign(m.cols, NeutroValue::zero());
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (row[i].is_zero()) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                res[j] = nv_add(res[j], nv_mul(row[i], m.at(i, j)));
        }
    }
    return out;
}

inline NMatrix nm_transpose(const NMatrix &a) {
    NMatrix out;
    out.denom = a.denom;
    out.components.reserve(a.order());
    for (const auto &c : a.components) {
        MatrixComponent t(c.cols, c.rows);
        for (std::size_t i = 0; i < c.rows; ++i)
            for (std::size_t j = 0; j < c.cols; ++j) t.at(j, i) = c.at(i, j);
        t.row_labels = c.col_labels;
        t.col_labels = c.row_labels;
        out.components.push_back(std::move(t));
    }
    return out;
}

namespace detail {

enum class ComponentContent { Real, Fuzzy, Neutro, FuzzyNeutro };

inline ComponentContent component_content(const MatrixComponent &c, long long denom) {
    bool has_i = false;
    bool in_box = true; // every coefficient within [0, 1] after scaling
    for (const auto &v : c.cells) {
        if (v.indet != 0) has_i = true;
        if (v.real < 0 || v.real > denom || v.indet < 0 || v.indet > denom) in_box = false;
    }
    if (has_i) return in_box ? ComponentContent::FuzzyNeutro : ComponentContent::Neutro;
    return in_box ? ComponentContent::Fuzzy : ComponentContent::Real;
}

} // namespace detail

/// Shape/content taxonomy of Defs 1.1.2 and 1.2.1-1.2.3.  Total: every
/// n-matrix gets exactly one shape and one content kind.
inline NMatrixKind nm_classify(const NMatrix &a) {
    bool all_square = true, same_dims = true;
    const auto &c0 = a.components.front();
    for (const auto &c : a.components) {
        if (!c.square()) all_square = false;
        if (c.rows != c0.rows || c.cols != c0.cols) same_dims = false;
    }
    NMatrixShape shape;
    if (all_square) shape = same_dims ? NMatrixShape::Square : NMatrixShape::MixedSquare;
    else if (same_dims) shape = NMatrixShape::Rectangular;
    else shape = NMatrixShape::MixedRectangular;

    std::size_t n_fn = 0, n_n = 0, n_f = 0;
    for (const auto &c : a.components) {
        switch (detail::component_content(c, a.denom)) {
        case detail::ComponentContent::FuzzyNeutro: ++n_fn; break;
        case detail::ComponentContent::Neutro: ++n_n; break;
        case detail::ComponentContent::Fuzzy: ++n_f; break;
        case detail::ComponentContent::Real: break;
        }
    }
    std::size_t k = a.order();
    NMatrixContent content;
    if (n_fn == k) content = NMatrixContent::FuzzyNeutrosophic;
    else if (n_fn > 0) content = NMatrixContent::SemiFuzzyNeutrosophic;
    else if (n_n == k) content = NMatrixContent::Neutrosophic;
    else if (n_n > 0) content = NMatrixContent::SemiNeutrosophic;
    else if (n_f == k) content = NMatrixContent::Fuzzy;
    else if (n_f > 0) content = NMatrixContent::SemiFuzzy;
    else content = NMatrixContent::Real;
    return {shape, content};
}

// ---- textual form ---------------------------------------------------------

/// Render one entry taking the denominator into account ("0.3" when scaled).
inline std::string format_entry(const NeutroValue &v, long long denom) {
    if (denom == 1) return to_string(v);
    auto frac = [&](long long num) {
        bool neg = num < 0;
        long long mag = neg ? -num : num;
        long long ip = mag / denom, fp = mag % denom;
        std::string digits;
        long long d = denom;
        while (d > 1) {
            d /= 10;
            digits += char('0' + (fp / d) % 10);
        }
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        std::string s = (neg ? "-" : "") + std::to_string(ip);
        if (!digits.empty()) s += "." + digits;
        return s;
    };
    if (v.real == 0 && v.indet == 0) return "0";
    std::string out;
    if (v.real != 0) out += frac(v.real);
    if (v.indet != 0) {
        if (v.real != 0 && v.indet > 0) out += "+";
        std::string is = frac(v.indet);
        if (is == "1") is.clear();
        else if (is == "-1") is = "-";
        out += is + "I";
    }
    return out;
}

/// Inverse of nm_to_text: rows of whitespace-separated scalar tokens with
/// `---` lines between components.  Throws on malformed input.
inline NMatrix nm_from_text(const std::string &text) {
    std::vector<MatrixComponent> comps;
    std::vector<std::vector<NeutroValue>> rows;
    int scale = 0;
    auto flush = [&] {
        if (rows.empty()) throw std::invalid_argument("matrix literal: empty component");
        MatrixComponent m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols)
                throw std::invalid_argument("matrix literal: uneven row lengths");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
        }
        comps.push_back(std::move(m));
        rows.clear();
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line == "---") {
            flush();
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<NeutroValue> row;
        while (ls >> tok) {
            auto p = parse_neutro(tok);
            if (!p) throw std::invalid_argument("matrix literal: bad token '" + tok + "'");
            NeutroValue v = p->value;
            int s = p->scale;
            auto rescale = [](NeutroValue &x, long long f) {
                x.real = detail::checked_mul(x.real, f);
                x.indet = detail::checked_mul(x.indet, f);
            };
            while (s < scale) { rescale(v, 10); ++s; }
            if (s > scale) {
                long long f = 1;
                for (int i = scale; i < s; ++i) f = detail::checked_mul(f, 10);
                for (auto &c : comps)
                    for (auto &x : c.cells) rescale(x, f);
                for (auto &r : rows)
                    for (auto &x : r) rescale(x, f);
                for (auto &x : row) rescale(x, f);
                scale = s;
            }
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    flush();
    long long denom = 1;
    for (int i = 0; i < scale; ++i) denom *= 10;
    return NMatrix(std::move(comps), denom);
}

/// Matrix literal format: rows of whitespace-separated scalar tokens,
/// components separated by a `---` line.
inline std::string nm_to_text(const NMatrix &a) {
    std::ostringstream os;
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k > 0) os << "---\n";
        const auto &c = a.components[k];
        for (std::size_t i = 0; i < c.rows; ++i) {
            for (std::size_t j = 0; j < c.cols; ++j) {
                if (j > 0) os << ' ';
                os << format_entry(c.at(i, j), a.denom);
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace neutromap

#endif
