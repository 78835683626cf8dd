#ifndef NEUTROMAP_NEUTRO_VALUE_HPP
#define NEUTROMAP_NEUTRO_VALUE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace neutromap {

/// A scalar of the form a + b*I where I is the indeterminacy symbol with
/// I*I = I.  Both coefficients are exact integers; equality is coefficient
/// equality, which is what limit-cycle detection relies on.
struct NeutroValue {
    long long real = 0;
    long long indet = 0;

    constexpr NeutroValue() = default;
    constexpr NeutroValue(long long r, long long i = 0) : real(r), indet(i) {}

    static constexpr NeutroValue zero() { return {0, 0}; }
    static constexpr NeutroValue one() { return {1, 0}; }
    static constexpr NeutroValue indeterminate() { return {0, 1}; }

    constexpr bool is_zero() const { return real == 0 && indet == 0; }
    constexpr bool has_indet() const { return indet != 0; }

    friend constexpr bool operator==(const NeutroValue &a, const NeutroValue &b) {
        return a.real == b.real && a.indet == b.indet;
    }
    friend constexpr bool operator!=(const NeutroValue &a, const NeutroValue &b) {
        return !(a == b);
    }
};

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("neutrosophic scalar addition overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("neutrosophic scalar multiplication overflow");
    return r;
}

} // namespace detail

/// Componentwise sum: (a+bI) + (c+dI) = (a+c) + (b+d)I.
inline NeutroValue nv_add(const NeutroValue &x, const NeutroValue &y) {
    return {detail::checked_add(x.real, y.real), detail::checked_add(x.indet, y.indet)};
}

/// Product with I*I = I: (a+bI)(c+dI) = ac + (ad + bc + bd)I.
inline NeutroValue nv_mul(const NeutroValue &x, const NeutroValue &y) {
    long long r = detail::checked_mul(x.real, y.real);
    long long i = detail::checked_add(
        detail::checked_add(detail::checked_mul(x.real, y.indet),
                            detail::checked_mul(x.indet, y.real)),
        detail::checked_mul(x.indet, y.indet));
    return {r, i};
}

inline NeutroValue nv_neg(const NeutroValue &x) {
    return {detail::checked_mul(x.real, -1), detail::checked_mul(x.indet, -1)};
}

inline NeutroValue operator+(const NeutroValue &a, const NeutroValue &b) { return nv_add(a, b); }
inline NeutroValue operator*(const NeutroValue &a, const NeutroValue &b) { return nv_mul(a, b); }
inline NeutroValue operator-(const NeutroValue &a) { return nv_neg(a); }
inline NeutroValue operator-(const NeutroValue &a, const NeutroValue &b) { return nv_add(a, nv_neg(b)); }

enum class ThresholdMode { RealDominant, IndetDominant };

/// Threshold constant K plus the rule used to resolve values that carry both
/// a real part and an indeterminacy coefficient.  RealDominant reproduces the
/// 2+I -> 1 convention; IndetDominant the 2I+1 -> I convention.
struct ThresholdPolicy {
    long long k = 1;
    ThresholdMode mode = ThresholdMode::RealDominant;

    ThresholdPolicy() = default;
    ThresholdPolicy(long long k_, ThresholdMode m) : k(k_), mode(m) {
        if (k < 1) throw std::invalid_argument("threshold constant must be >= 1");
    }

    friend bool operator==(const ThresholdPolicy &a, const ThresholdPolicy &b) {
        return a.k == b.k && a.mode == b.mode;
    }
};

/// Collapse an arbitrary scalar onto {0, 1, I}.
inline NeutroValue threshold_scalar(const NeutroValue &v, const ThresholdPolicy &p) {
    if (p.mode == ThresholdMode::IndetDominant) {
        if (v.indet >= p.k && v.indet > v.real) return NeutroValue::indeterminate();
    }
    if (v.real >= p.k) return NeutroValue::one();
    if (v.indet != 0) return NeutroValue::indeterminate();
    return NeutroValue::zero();
}

// ---- textual form ---------------------------------------------------------
//
// Canonical rendering: "0", "5", "-1", "I", "-I", "2I", "2+I", "-1+I",
// "1-2I".  parse_neutro accepts exactly the same grammar; decimal magnitudes
// ("0.3", ".2I") are accepted too and reported through the `scale` output so
// the caller can keep them as scaled rationals.

inline std::string to_string(const NeutroValue &v) {
    if (v.real == 0 && v.indet == 0) return "0";
    std::string out;
    if (v.real != 0) out += std::to_string(v.real);
    if (v.indet != 0) {
        if (v.real != 0) out += (v.indet > 0) ? "+" : "-";
        long long mag = (v.real != 0) ? std::llabs(v.indet) : v.indet;
        if (mag == 1) out += "I";
        else if (mag == -1) out += "-I";
        else out += std::to_string(mag) + "I";
    }
    return out;
}

struct ParsedScalar {
    NeutroValue value; // numerators; actual value is value / 10^scale
    int scale = 0;     // decimal places used by the widest magnitude
};

namespace detail {

// magnitude := digits | digits '.' digits | '.' digits
// returns numerator and number of decimal places, or nullopt on bad syntax
inline std::optional<std::pair<long long, int>> parse_magnitude(const std::string &s, size_t &pos) {
    long long num = 0;
    int places = 0;
    bool any = false, dot = false;
    size_t start = pos;
    while (pos < s.size()) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            num = checked_add(checked_mul(num, 10), c - '0');
            if (dot) ++places;
            any = true;
            ++pos;
        } else if (c == '.' && !dot) {
            dot = true;
            ++pos;
        } else {
            break;
        }
    }
    if (!any) { pos = start; return std::nullopt; }
    return std::make_pair(num, places);
}

} // namespace detail

/// Parse one scalar token.  Returns nullopt on malformed input (including
/// magnitudes too large for the representation).
inline std::optional<ParsedScalar> parse_neutro(const std::string &token) try {
    if (token.empty()) return std::nullopt;
    size_t pos = 0;
    auto read_part = [&](bool &is_indet, long long &num, int &places) -> bool {
        long long sign = 1;
        if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
            if (token[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos < token.size() && token[pos] == 'I') {
            ++pos;
            is_indet = true;
            num = sign;
            places = 0;
            return true;
        }
        auto mag = detail::parse_magnitude(token, pos);
        if (!mag) return false;
        num = detail::checked_mul(sign, mag->first);
        places = mag->second;
        is_indet = false;
        if (pos < token.size() && token[pos] == 'I') {
            ++pos;
            is_indet = true;
        }
        return true;
    };

    bool indet1 = false;
    long long num1 = 0;
    int places1 = 0;
    if (!read_part(indet1, num1, places1)) return std::nullopt;

    ParsedScalar out;
    if (pos == token.size()) {
        out.value = indet1 ? NeutroValue{0, num1} : NeutroValue{num1, 0};
        out.scale = places1;
        return out;
    }
    // a second part must be the I part and the first must have been real
    if (indet1) return std::nullopt;
    if (token[pos] != '+' && token[pos] != '-') return std::nullopt;
    bool indet2 = false;
    long long num2 = 0;
    int places2 = 0;
    if (!read_part(indet2, num2, places2)) return std::nullopt;
    if (!indet2 || pos != token.size()) return std::nullopt;

    // align the two numerators on a common power of ten
    int scale = std::max(places1, places2);
    for (int i = places1; i < scale; ++i) num1 = detail::checked_mul(num1, 10);
    for (int i = places2; i < scale; ++i) num2 = detail::checked_mul(num2, 10);
    out.value = NeutroValue{num1, num2};
    out.scale = scale;
    return out;
} catch (const std::overflow_error &) {
    return std::nullopt;
}

} // namespace neutromap

#endif
