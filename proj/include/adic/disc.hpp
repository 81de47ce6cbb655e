#pragma once

/// Points of the adic closed unit disc X = Spa(Q_p<T>, Z_p<T>) with exact data.
///
/// Centers are rationals c with |c|_p <= 1 and radii are rationals in (0,1].
///   classical(c)   f -> |f(c)|
///   ball(c, r)     f -> max_n |a_n| r^n,      f = sum a_n (T - c)^n   (types 2 and 3)
///   below(c, r)    f -> max_n |a_n| gamma^n   in the group below(r)   (x_{<r})
///   above(c, r)    f -> max_n |a_n| gamma^n   in the group above(r)   (x_{>r}, r < 1)
/// ball(c, 1) is the Gauss point. A ball is of type 2 iff r lies in p^Z; for a rational
/// radius this is the same as lying in p^Q, the value group of the algebraic closure.

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adic/expr.hpp"
#include "adic/tate.hpp"

namespace adic {

enum class point_kind { classical, ball, below, above };
enum class point_type { type1, type2, type3, type5_below, type5_above };

inline std::string_view point_type_name(point_type t) {
    switch (t) {
        case point_type::type1: return "Type1";
        case point_type::type2: return "Type2";
        case point_type::type3: return "Type3";
        case point_type::type5_below: return "Type5Below";
        case point_type::type5_above: return "Type5Above";
    }
    return "?";
}

class disc_point {
public:
    static disc_point classical(padic_context ctx, const rational& c) { return {ctx, point_kind::classical, c, 0}; }
    static disc_point ball(padic_context ctx, const rational& c, const rational& r) { return {ctx, point_kind::ball, c, r}; }
    static disc_point below(padic_context ctx, const rational& c, const rational& r) { return {ctx, point_kind::below, c, r}; }
    static disc_point above(padic_context ctx, const rational& c, const rational& r) { return {ctx, point_kind::above, c, r}; }
    static disc_point gauss(padic_context ctx) { return ball(ctx, 0, 1); }

    const padic_context& context() const noexcept { return ctx_; }
    point_kind kind() const noexcept { return kind_; }
    const rational& center() const noexcept { return center_; }
    /// Zero for classical points.
    const rational& radius() const noexcept { return radius_; }

    friend bool operator==(const disc_point&, const disc_point&) = default;

    /// "classical:c", "ball:c,r", "below:c,r", "above:c,r".
    std::string to_string() const {
        switch (kind_) {
            case point_kind::classical: return "classical:" + center_.get_str();
            case point_kind::ball: return "ball:" + center_.get_str() + "," + radius_.get_str();
            case point_kind::below: return "below:" + center_.get_str() + "," + radius_.get_str();
            case point_kind::above: return "above:" + center_.get_str() + "," + radius_.get_str();
        }
        return "?";
    }

private:
    disc_point(padic_context ctx, point_kind k, rational c, rational r)
        : ctx_(ctx), kind_(k), center_(std::move(c)), radius_(std::move(r)) {
        if (padic_abs(center_, ctx_.prime()) > 1)
            throw error(errc::invalid_point, "center " + center_.get_str() + " has p-adic norm > 1");
        if (kind_ == point_kind::classical) return;
        if (radius_ <= 0 || radius_ > 1)
            throw error(errc::invalid_point, "radius " + radius_.get_str() + " outside (0,1]");
        if (kind_ == point_kind::above && radius_ == 1)
            throw error(errc::invalid_point, "x_{>1} is not a point of Spa(A, A°)");
    }

    padic_context ctx_;
    point_kind kind_;
    rational center_;
    rational radius_;
};

inline point_type classify(const disc_point& x) {
    switch (x.kind()) {
        case point_kind::classical: return point_type::type1;
        case point_kind::below: return point_type::type5_below;
        case point_kind::above: return point_type::type5_above;
        case point_kind::ball: {
            long k = 0;
            return is_power_of(x.radius(), x.context().prime(), k) ? point_type::type2 : point_type::type3;
        }
    }
    return point_type::type3;
}

/// The value group the point's evaluations live in.
inline group_descriptor point_value_group(const disc_point& x) {
    switch (x.kind()) {
        case point_kind::below: return group_descriptor::below(x.radius());
        case point_kind::above: return group_descriptor::above(x.radius());
        default: return group_descriptor::positive();
    }
}

inline value eval_at(const disc_point& x, const tate_series& f) {
    detail::same_context(x.context(), f.context());
    const auto p = x.context().prime();
    if (x.kind() == point_kind::classical) return value::positive(padic_abs(f.poly()(x.center()), p));
    if (f.is_zero()) return value::zero();
    const polynomial g = taylor_shift(f.poly(), x.center());
    const group_descriptor G = point_value_group(x);
    value best;
    for (const auto& [n, a] : g.terms()) {
        const rational abs_a = padic_abs(a, p);
        value term = G.is_radius() ? value(group_element::radius(G, abs_a, static_cast<long>(n)))
                                   : value::positive(abs_a * rpow(x.radius(), static_cast<long>(n)));
        if (best < term) best = term;
    }
    return best;
}

/// Equality of points. `radius_outside_value_group` flags type-5 comparisons at radii
/// outside p^Z, where x_{<r}, x_{>r} and x_r would coincide over an algebraically
/// closed field but are kept distinct here.
struct point_equality {
    bool equal = false;
    bool radius_outside_value_group = false;
    explicit operator bool() const noexcept { return equal; }
};

inline point_equality point_eq(const disc_point& x, const disc_point& y) {
    detail::same_context(x.context(), y.context());
    point_equality out;
    const auto p = x.context().prime();
    long k = 0;
    if ((x.kind() == point_kind::below || x.kind() == point_kind::above ||
         y.kind() == point_kind::below || y.kind() == point_kind::above) &&
        x.kind() != point_kind::classical && y.kind() != point_kind::classical)
        out.radius_outside_value_group = !is_power_of(x.radius(), p, k) || !is_power_of(y.radius(), p, k);
    if (x.kind() != y.kind()) return out;
    const rational dist = padic_abs(x.center() - y.center(), p);
    switch (x.kind()) {
        case point_kind::classical: out.equal = x.center() == y.center(); break;
        case point_kind::ball:
        case point_kind::above: out.equal = x.radius() == y.radius() && dist <= x.radius(); break;
        case point_kind::below: out.equal = x.radius() == y.radius() && dist < x.radius(); break;
    }
    return out;
}

/// x lies in the closure of y. Only type-2 points have nontrivial closures: the
/// type-5 points attached to the same disc.
inline bool disc_specializes(const disc_point& x, const disc_point& y) {
    if (point_eq(x, y)) return true;
    if (classify(y) != point_type::type2) return false;
    if (x.kind() != point_kind::below && x.kind() != point_kind::above) return false;
    return x.radius() == y.radius() && padic_abs(x.center() - y.center(), x.context().prime()) <= y.radius();
}

/// The height-1 vertical generization of a type-5 point: the ball on the same disc.
inline disc_point height1_generization(const disc_point& x) {
    if (x.kind() != point_kind::below && x.kind() != point_kind::above)
        throw error(errc::not_type_five, x.to_string() + " is not of type 5");
    return disc_point::ball(x.context(), x.center(), x.radius());
}

/// R(T/s) = {x : |t(x)| <= |s(x)| != 0 for all t in T}. T always contains s.
struct rational_subset {
    std::vector<tate_series> numerators;
    tate_series denominator;
    bool open_witness = false;

    std::string to_string() const {
        std::string s = "R(";
        for (std::size_t i = 0; i < numerators.size(); ++i) s += (i ? "," : "") + numerators[i].to_string();
        return s + ";" + denominator.to_string() + ")";
    }
};

namespace detail {
inline void push_unique(std::vector<tate_series>& v, tate_series t) {
    for (const auto& u : v)
        if (u == t) return;
    v.push_back(std::move(t));
}
} // namespace detail

inline rational_subset make_rational_subset(std::span<const tate_series> numerators, const tate_series& s) {
    std::vector<tate_series> ts;
    for (const auto& t : numerators) {
        detail::same_context(t.context(), s.context());
        detail::push_unique(ts, t);
    }
    detail::push_unique(ts, s);
    const bool witness = std::any_of(ts.begin(), ts.end(), [](const auto& t) { return !t.is_zero(); }) &&
                         generates_unit_ideal(ts);
    return {std::move(ts), s, witness};
}

inline rational_subset make_rational_subset(std::initializer_list<tate_series> numerators, const tate_series& s) {
    return make_rational_subset(std::span<const tate_series>(numerators.begin(), numerators.size()), s);
}

inline bool in_rational_subset(const disc_point& x, const rational_subset& r) {
    detail::same_context(x.context(), r.denominator.context());
    if (!r.open_witness) throw error(errc::malformed_subset, r.to_string() + " does not generate the unit ideal");
    const value vs = eval_at(x, r.denominator);
    if (vs.is_zero()) return false;
    for (const auto& t : r.numerators)
        if (eval_at(x, t) > vs) return false;
    return true;
}

/// R(T1/s1) ∩ R(T2/s2) = R(T/s1 s2) with T = {t1 t2}, using s_i ∈ T_i.
inline rational_subset intersect_rational(const rational_subset& a, const rational_subset& b) {
    detail::same_context(a.denominator.context(), b.denominator.context());
    std::vector<tate_series> ts;
    for (const auto& t1 : a.numerators)
        for (const auto& t2 : b.numerators) detail::push_unique(ts, t1 * t2);
    return make_rational_subset(ts, a.denominator * b.denominator);
}

/// "R(t1,t2,...;s)" with polynomial expressions in T.
inline rational_subset parse_rational_subset(std::string_view text, padic_context ctx) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (!t.starts_with("R(") || !t.ends_with(')'))
        throw error(errc::parse_error, "bad rational-subset literal '" + std::string(text) + "'");
    t = t.substr(2, t.size() - 3);
    const auto semi = t.find(';');
    if (semi == std::string_view::npos || t.find(';', semi + 1) != std::string_view::npos)
        throw error(errc::parse_error, "rational-subset literal needs exactly one ';'");
    std::vector<tate_series> ts;
    std::string_view nums = t.substr(0, semi);
    while (!nums.empty()) {
        const auto comma = nums.find(',');
        ts.emplace_back(ctx, parse_polynomial(nums.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        nums = nums.substr(comma + 1);
    }
    return make_rational_subset(ts, tate_series(ctx, parse_polynomial(t.substr(semi + 1))));
}

enum class cover_kind { rational, laurent };

struct cover_spec {
    cover_kind kind;
    std::vector<tate_series> generators;
    std::vector<rational_subset> members;
};

/// {|f| <= 1}, {|f| >= 1}.
inline cover_spec laurent_cover(const tate_series& f) {
    if (f.is_zero()) throw error(errc::zero_series, "Laurent cover of 0");
    const tate_series one(f.context(), polynomial(1));
    return {cover_kind::laurent, {f}, {make_rational_subset({f}, one), make_rational_subset({one}, f)}};
}

/// (R(T/t))_{t in T}; requires T to generate the unit ideal.
inline cover_spec rational_cover(std::span<const tate_series> gens) {
    if (!generates_unit_ideal(gens))
        throw error(errc::not_unit_ideal, "generators have a common zero in the closed unit disc");
    cover_spec c{cover_kind::rational, {gens.begin(), gens.end()}, {}};
    for (const auto& t : gens) c.members.push_back(make_rational_subset(gens, t));
    return c;
}

inline cover_spec rational_cover(std::initializer_list<tate_series> gens) {
    return rational_cover(std::span<const tate_series>(gens.begin(), gens.size()));
}

/// Index of the first member containing x, or -1.
inline int covering_member(const cover_spec& c, const disc_point& x) {
    for (std::size_t i = 0; i < c.members.size(); ++i)
        if (in_rational_subset(x, c.members[i])) return static_cast<int>(i);
    return -1;
}

inline disc_point parse_disc_point(std::string_view text, padic_context ctx) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw error(errc::parse_error, "bad point literal '" + std::string(text) + "'");
    const auto head = text.substr(0, colon), body = text.substr(colon + 1);
    if (head == "type4" || head == "deadend")
        throw error(errc::invalid_point, "type-4 (dead end) points need infinite nested-disc data and are not supported");
    if (head == "classical") return disc_point::classical(ctx, parse_rational(body));
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw error(errc::parse_error, "point literal needs center,radius");
    const rational c = parse_rational(body.substr(0, comma)), r = parse_rational(body.substr(comma + 1));
    if (head == "ball") return disc_point::ball(ctx, c, r);
    if (head == "below") return disc_point::below(ctx, c, r);
    if (head == "above") return disc_point::above(ctx, c, r);
    throw error(errc::parse_error, "unknown point kind '" + std::string(head) + "'");
}

} // namespace adic
