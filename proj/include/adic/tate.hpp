#pragma once

/// Dense elements of the Tate algebra Q_p<T>: polynomials with rational
/// coefficients, carrying their prime so that arithmetic across primes is refused.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adic/polynomial.hpp"
#include "adic/value.hpp"

namespace adic {

class padic_context {
public:
    explicit padic_context(std::uint64_t p) : p_(p) { require_prime(p); }
    std::uint64_t prime() const noexcept { return p_; }
    rational prime_q() const { return rational(static_cast<unsigned long>(p_)); }
    friend bool operator==(const padic_context&, const padic_context&) = default;

private:
    std::uint64_t p_;
};

class tate_series {
public:
    tate_series(padic_context ctx, polynomial f) : ctx_(ctx), poly_(std::move(f)) {}

    const padic_context& context() const noexcept { return ctx_; }
    const polynomial& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    friend bool operator==(const tate_series&, const tate_series&) = default;

    std::string to_string() const { return poly_.to_string(); }

private:
    padic_context ctx_;
    polynomial poly_;
};

namespace detail {
inline void same_context(const padic_context& a, const padic_context& b) {
    if (a != b)
        throw error(errc::context_mismatch,
                    "p = " + std::to_string(a.prime()) + " vs p = " + std::to_string(b.prime()));
}
} // namespace detail

inline tate_series series_add(const tate_series& f, const tate_series& g) {
    detail::same_context(f.context(), g.context());
    return {f.context(), f.poly() + g.poly()};
}

inline tate_series series_sub(const tate_series& f, const tate_series& g) {
    detail::same_context(f.context(), g.context());
    return {f.context(), f.poly() - g.poly()};
}

inline tate_series series_mul(const tate_series& f, const tate_series& g) {
    detail::same_context(f.context(), g.context());
    return {f.context(), f.poly() * g.poly()};
}

inline tate_series operator+(const tate_series& f, const tate_series& g) { return series_add(f, g); }
inline tate_series operator-(const tate_series& f, const tate_series& g) { return series_sub(f, g); }
inline tate_series operator*(const tate_series& f, const tate_series& g) { return series_mul(f, g); }

/// max_n |a_n|_p, in the positive group; zero for f = 0.
inline value gauss_norm(const tate_series& f) {
    if (f.is_zero()) return value::zero();
    const auto p = f.context().prime();
    long m = 0;
    bool first = true;
    for (const auto& [e, c] : f.poly().terms()) {
        const long v = padic_valuation(c, p);
        if (first || v < m) m = v;
        first = false;
    }
    return value::positive(rpow(f.context().prime_q(), -m));
}

// The Gauss norm is multiplicative, so both tests reduce to one comparison.
inline bool is_power_bounded(const tate_series& f) { return gauss_norm(f) <= value::positive(1); }
inline bool is_top_nilpotent(const tate_series& f) { return gauss_norm(f) < value::positive(1); }

struct newton_vertex {
    unsigned degree;
    long exponent;
    friend bool operator==(const newton_vertex&, const newton_vertex&) = default;
};

struct newton_slope {
    rational slope;
    unsigned length;
    friend bool operator==(const newton_slope&, const newton_slope&) = default;
};

/// Lower convex hull of {(n, v_p(a_n))}. A segment of slope s and horizontal length l
/// accounts for l roots (over an algebraic closure) of valuation -s, i.e. of absolute
/// value p^s. Roots at 0 are not counted, so the lengths sum to deg f - ord f.
struct newton_polygon {
    std::vector<newton_vertex> vertices;
    std::vector<newton_slope> slopes;

    /// Valuations of the nonzero roots, with multiplicity, in increasing slope order.
    std::vector<rational> root_valuations() const {
        std::vector<rational> out;
        for (const auto& s : slopes)
            for (unsigned i = 0; i < s.length; ++i) out.push_back(-s.slope);
        return out;
    }
};

inline newton_polygon compute_newton_polygon(const tate_series& f) {
    if (f.is_zero()) throw error(errc::zero_series, "Newton polygon of 0");
    const auto p = f.context().prime();
    std::vector<newton_vertex> hull;
    auto turns_left = [](const newton_vertex& o, const newton_vertex& a, const newton_vertex& b) {
        const long ax = static_cast<long>(a.degree) - o.degree, ay = a.exponent - o.exponent;
        const long bx = static_cast<long>(b.degree) - o.degree, by = b.exponent - o.exponent;
        return ax * by - ay * bx > 0;
    };
    for (const auto& [e, c] : f.poly().terms()) {
        newton_vertex pt{e, padic_valuation(c, p)};
        while (hull.size() >= 2 && !turns_left(hull[hull.size() - 2], hull.back(), pt)) hull.pop_back();
        hull.push_back(pt);
    }
    newton_polygon np;
    np.vertices = hull;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const unsigned len = hull[i].degree - hull[i - 1].degree;
        rational s(hull[i].exponent - hull[i - 1].exponent, static_cast<long>(len));
        s.canonicalize();
        np.slopes.push_back({s, len});
    }
    return np;
}

/// True iff the elements have no common zero in the closed unit disc, i.e. they
/// generate the unit ideal of Q_p<T>: the gcd over Q is constant, or all its roots
/// have absolute value > 1 (every Newton slope positive and no root at 0).
inline bool generates_unit_ideal(std::span<const tate_series> gens) {
    if (gens.empty()) throw error(errc::all_zero, "empty generator set");
    const padic_context ctx = gens.front().context();
    polynomial g;
    bool any = false;
    for (const auto& t : gens) {
        detail::same_context(ctx, t.context());
        if (t.is_zero()) continue;
        g = any ? gcd(g, t.poly()) : make_monic(t.poly());
        any = true;
    }
    if (!any) throw error(errc::all_zero, "all generators are zero");
    if (g.is_constant()) return true;
    if (g.low_degree() > 0) return false;
    for (const auto& s : compute_newton_polygon(tate_series(ctx, g)).slopes)
        if (s.slope <= 0) return false;
    return true;
}

inline bool generates_unit_ideal(std::initializer_list<tate_series> gens) {
    return generates_unit_ideal(std::span<const tate_series>(gens.begin(), gens.size()));
}

} // namespace adic
