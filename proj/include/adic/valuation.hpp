#pragma once

/// Concrete valuations on a handful of base rings, with the specialization calculus:
/// supports, equivalence, vertical quotients v/H, horizontal restrictions v|_H,
/// characteristic groups, cGamma_v(I), the retraction onto Spv(A, I), and the
/// continuity and analyticity tests.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adic/disc.hpp"
#include "adic/expr.hpp"

namespace adic {

enum class ring_kind { integers, rationals, finite_field, poly_q, ratfunc_q };

class base_ring {
public:
    static base_ring integers() { return base_ring(ring_kind::integers, 0); }
    static base_ring rationals() { return base_ring(ring_kind::rationals, 0); }
    static base_ring finite_field(std::uint64_t p) {
        require_prime(p);
        return base_ring(ring_kind::finite_field, p);
    }
    static base_ring poly_q() { return base_ring(ring_kind::poly_q, 0); }
    static base_ring ratfunc_q() { return base_ring(ring_kind::ratfunc_q, 0); }

    ring_kind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != ring_kind::integers && kind_ != ring_kind::poly_q; }

    friend bool operator==(const base_ring&, const base_ring&) = default;

    std::string to_string() const {
        switch (kind_) {
            case ring_kind::integers: return "Z";
            case ring_kind::rationals: return "Q";
            case ring_kind::finite_field: return "F" + std::to_string(p_);
            case ring_kind::poly_q: return "Q[T]";
            case ring_kind::ratfunc_q: return "Q(T)";
        }
        return "?";
    }

private:
    base_ring(ring_kind k, std::uint64_t p) : kind_(k), p_(p) {}
    ring_kind kind_;
    std::uint64_t p_;
};

inline base_ring parse_base_ring(std::string_view s) {
    if (s == "Z") return base_ring::integers();
    if (s == "Q") return base_ring::rationals();
    if (s == "Q[T]") return base_ring::poly_q();
    if (s == "Q(T)") return base_ring::ratfunc_q();
    if (s.size() > 1 && s[0] == 'F') {
        rational p = parse_rational(s.substr(1));
        if (p.get_den() == 1 && p > 1) return base_ring::finite_field(p.get_num().get_ui());
    }
    throw error(errc::parse_error, "unknown ring '" + std::string(s) + "'");
}

/// numerator / denominator, coprime, denominator monic.
struct rational_function {
    polynomial num;
    polynomial den;
    friend bool operator==(const rational_function&, const rational_function&) = default;
};

inline rational_function make_rational_function(polynomial num, polynomial den) {
    if (den.is_zero()) throw error(errc::invalid_argument, "rational function with zero denominator");
    if (num.is_zero()) return {polynomial(), polynomial(1)};
    const polynomial g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    const rational lc = den.leading_coeff();
    return {num * (rational(1) / lc), den * (rational(1) / lc)};
}

class ring_element {
public:
    using repr_type = std::variant<integer, rational, integer, polynomial, rational_function>;

    static ring_element of_integer(const integer& z) { return ring_element(base_ring::integers(), z); }
    static ring_element of_rational(const rational& q) { return ring_element(base_ring::rationals(), q); }
    static ring_element of_residue(std::uint64_t p, const integer& a) {
        integer r = a % integer(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return ring_element(base_ring::finite_field(p), r);
    }
    static ring_element of_polynomial(polynomial f) { return ring_element(base_ring::poly_q(), std::move(f)); }
    static ring_element of_rational_function(polynomial num, polynomial den) {
        return ring_element(base_ring::ratfunc_q(), make_rational_function(std::move(num), std::move(den)));
    }

    /// Converts a parsed polynomial expression into an element of `ring`.
    static ring_element from_polynomial(const base_ring& ring, const polynomial& f) {
        auto need_constant = [&]() -> rational {
            if (!f.is_constant()) throw error(errc::wrong_ring, f.to_string() + " is not in " + ring.to_string());
            return f.coeff(0);
        };
        switch (ring.kind()) {
            case ring_kind::integers: {
                rational c = need_constant();
                if (c.get_den() != 1) throw error(errc::wrong_ring, c.get_str() + " is not an integer");
                return of_integer(c.get_num());
            }
            case ring_kind::rationals: return of_rational(need_constant());
            case ring_kind::finite_field: {
                rational c = need_constant();
                if (c.get_den() != 1) throw error(errc::wrong_ring, c.get_str() + " is not an integer residue");
                return of_residue(ring.characteristic(), c.get_num());
            }
            case ring_kind::poly_q: return of_polynomial(f);
            case ring_kind::ratfunc_q: return of_rational_function(f, polynomial(1));
        }
        throw error(errc::wrong_ring, "unknown ring");
    }

    const base_ring& ring() const noexcept { return ring_; }
    const repr_type& repr() const noexcept { return repr_; }

    bool is_zero() const {
        switch (repr_.index()) {
            case 0: return std::get<0>(repr_) == 0;
            case 1: return std::get<1>(repr_) == 0;
            case 2: return std::get<2>(repr_) == 0;
            case 3: return std::get<3>(repr_).is_zero();
            default: return std::get<4>(repr_).num.is_zero();
        }
    }

    /// Numerator and denominator as polynomials (constants for Z, Q).
    std::pair<polynomial, polynomial> as_fraction() const {
        switch (repr_.index()) {
            case 0: return {polynomial(rational(std::get<0>(repr_))), polynomial(1)};
            case 1: return {polynomial(std::get<1>(repr_)), polynomial(1)};
            case 2: return {polynomial(rational(std::get<2>(repr_))), polynomial(1)};
            case 3: return {std::get<3>(repr_), polynomial(1)};
            default: return {std::get<4>(repr_).num, std::get<4>(repr_).den};
        }
    }

    friend bool operator==(const ring_element&, const ring_element&) = default;

    friend ring_element operator+(const ring_element& a, const ring_element& b) { return combine(a, b, false); }
    friend ring_element operator*(const ring_element& a, const ring_element& b) { return combine(a, b, true); }
    friend ring_element operator-(const ring_element& a) { return ring_element::from_polynomial(a.ring_, polynomial(-1)) * a; }
    friend ring_element operator-(const ring_element& a, const ring_element& b) { return a + (-b); }

    std::string to_string() const {
        switch (repr_.index()) {
            case 0: return std::get<0>(repr_).get_str();
            case 1: return std::get<1>(repr_).get_str();
            case 2: return std::get<2>(repr_).get_str() + " mod " + std::to_string(ring_.characteristic());
            case 3: return std::get<3>(repr_).to_string();
            default: {
                const auto& rf = std::get<4>(repr_);
                if (rf.den == polynomial(1)) return rf.num.to_string();
                return "(" + rf.num.to_string() + ")/(" + rf.den.to_string() + ")";
            }
        }
    }

private:
    ring_element(base_ring r, const integer& z)
        : ring_(r), repr_(r.kind() == ring_kind::finite_field ? repr_type(std::in_place_index<2>, z)
                                                               : repr_type(std::in_place_index<0>, z)) {}
    ring_element(base_ring r, const rational& q) : ring_(r), repr_(std::in_place_index<1>, q) {}
    ring_element(base_ring r, polynomial f) : ring_(r), repr_(std::in_place_index<3>, std::move(f)) {}
    ring_element(base_ring r, rational_function f) : ring_(r), repr_(std::in_place_index<4>, std::move(f)) {}

    static ring_element combine(const ring_element& a, const ring_element& b, bool mul) {
        if (a.ring_ != b.ring_) throw error(errc::wrong_ring, a.ring_.to_string() + " vs " + b.ring_.to_string());
        switch (a.repr_.index()) {
            case 0: {
                const auto& x = std::get<0>(a.repr_);
                const auto& y = std::get<0>(b.repr_);
                return of_integer(mul ? integer(x * y) : integer(x + y));
            }
            case 1: {
                const auto& x = std::get<1>(a.repr_);
                const auto& y = std::get<1>(b.repr_);
                return of_rational(mul ? rational(x * y) : rational(x + y));
            }
            case 2: {
                const auto& x = std::get<2>(a.repr_);
                const auto& y = std::get<2>(b.repr_);
                return of_residue(a.ring_.characteristic(), mul ? integer(x * y) : integer(x + y));
            }
            case 3: {
                const auto& x = std::get<3>(a.repr_);
                const auto& y = std::get<3>(b.repr_);
                return of_polynomial(mul ? x * y : x + y);
            }
            default: {
                const auto& x = std::get<4>(a.repr_);
                const auto& y = std::get<4>(b.repr_);
                if (mul) return of_rational_function(x.num * y.num, x.den * y.den);
                return of_rational_function(x.num * y.den + y.num * x.den, x.den * y.den);
            }
        }
    }

    base_ring ring_;
    repr_type repr_;
};

/// A prime ideal of one of the supported rings. The unit ideal is not representable.
class prime_ideal {
public:
    enum class shape { zero, prime_number, polynomial_generator };

    static prime_ideal zero(const base_ring& r) { return prime_ideal(r, shape::zero, 0, {}); }
    static prime_ideal prime_number(std::uint64_t p) {
        require_prime(p);
        return prime_ideal(base_ring::integers(), shape::prime_number, p, {});
    }
    /// (g) in Q[T] for an irreducible g; stored monic.
    static prime_ideal generated_by(const polynomial& g) {
        if (!is_irreducible(g)) throw error(errc::invalid_argument, g.to_string() + " is not irreducible over Q");
        return prime_ideal(base_ring::poly_q(), shape::polynomial_generator, 0, make_monic(g));
    }

    const base_ring& ring() const noexcept { return ring_; }
    shape kind() const noexcept { return shape_; }
    std::uint64_t prime() const noexcept { return p_; }
    const polynomial& generator() const noexcept { return gen_; }

    bool contains(const ring_element& a) const {
        if (a.ring() != ring_) throw error(errc::wrong_ring, "element of " + a.ring().to_string() + " in ideal of " + ring_.to_string());
        switch (shape_) {
            case shape::zero: return a.is_zero();
            case shape::prime_number: {
                const auto& z = std::get<0>(a.repr());
                return mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p_)) != 0;
            }
            case shape::polynomial_generator: return divmod(std::get<3>(a.repr()), gen_).second.is_zero();
        }
        return false;
    }

    /// Inclusion of prime ideals within the same ring.
    bool includes(const prime_ideal& o) const {
        if (o.shape_ == shape::zero) return true;
        return *this == o;
    }

    friend bool operator==(const prime_ideal&, const prime_ideal&) = default;

    std::string to_string() const {
        switch (shape_) {
            case shape::zero: return "(0)";
            case shape::prime_number: return "(" + std::to_string(p_) + ")";
            case shape::polynomial_generator: return "(" + gen_.to_string() + ")";
        }
        return "?";
    }

private:
    prime_ideal(base_ring r, shape s, std::uint64_t p, polynomial g) : ring_(r), shape_(s), p_(p), gen_(std::move(g)) {}
    base_ring ring_;
    shape shape_;
    std::uint64_t p_;
    polynomial gen_;
};

/// Parses a ring element; over Q(T) a quotient "num / den" at the top level is allowed.
inline ring_element parse_ring_element(std::string_view text, const base_ring& ring) {
    if (ring.kind() == ring_kind::ratfunc_q) {
        int depth = 0;
        std::size_t slash = std::string_view::npos;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            else if (text[i] == ')') --depth;
            else if (text[i] == '/' && depth == 0) slash = i;
        }
        if (slash != std::string_view::npos) {
            const polynomial den = parse_polynomial(text.substr(slash + 1));
            if (!den.is_constant())
                return ring_element::of_rational_function(parse_polynomial(text.substr(0, slash)), den);
        }
    }
    return ring_element::from_polynomial(ring, parse_polynomial(text));
}

/// A finitely generated ideal I, given by generators.
struct ideal_descriptor {
    base_ring ring;
    std::vector<ring_element> generators;

    ideal_descriptor(base_ring r, std::vector<ring_element> gens) : ring(r), generators(std::move(gens)) {
        if (generators.empty()) throw error(errc::invalid_argument, "ideal needs at least one generator");
        for (const auto& g : generators)
            if (g.ring() != ring) throw error(errc::wrong_ring, "generator " + g.to_string() + " not in " + ring.to_string());
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i].to_string();
        return s + ")";
    }
};

/// "(5)", "(T)", "(0)", "(5,T)".
inline ideal_descriptor parse_ideal(std::string_view text, const base_ring& ring) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw error(errc::parse_error, "ideal literal must look like (g1,...,gk)");
    std::vector<ring_element> gens;
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
        auto comma = body.find(',');
        gens.push_back(ring_element::from_polynomial(ring, parse_polynomial(body.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    return ideal_descriptor(ring, std::move(gens));
}

struct trivial_valuation {
    prime_ideal support;
    friend bool operator==(const trivial_valuation&, const trivial_valuation&) = default;
};
/// |x| = rho^{v_p(x)}. rho only affects rendered values, never order decisions.
struct padic_valuation_kind {
    std::uint64_t p;
    rational rho;
    friend bool operator==(const padic_valuation_kind&, const padic_valuation_kind&) = default;
};
/// |f/g| = rho^{deg g - deg f}.
struct degree_valuation {
    rational rho;
    friend bool operator==(const degree_valuation&, const degree_valuation&) = default;
};
/// A point of the adic unit disc, restricted to Q[T].
struct disc_valuation {
    disc_point point;
    friend bool operator==(const disc_valuation&, const disc_valuation&) = default;
};

class valuation {
public:
    using kind_type = std::variant<trivial_valuation, padic_valuation_kind, degree_valuation, disc_valuation>;

    static valuation trivial(const prime_ideal& support) { return valuation(support.ring(), trivial_valuation{support}); }
    static valuation trivial(const base_ring& ring) { return trivial(prime_ideal::zero(ring)); }

    static valuation padic(const base_ring& ring, std::uint64_t p, std::optional<rational> rho = std::nullopt) {
        require_prime(p);
        if (ring.kind() != ring_kind::integers && ring.kind() != ring_kind::rationals)
            throw error(errc::wrong_ring, "p-adic valuation on " + ring.to_string());
        rational r = rho.value_or(rational(1, static_cast<unsigned long>(p)));
        if (r <= 0 || r >= 1) throw error(errc::invalid_argument, "rho must lie in (0,1)");
        return valuation(ring, padic_valuation_kind{p, r});
    }
    static valuation degree(const base_ring& ring, const rational& rho) {
        if (ring.kind() != ring_kind::poly_q && ring.kind() != ring_kind::ratfunc_q)
            throw error(errc::wrong_ring, "degree valuation on " + ring.to_string());
        if (rho <= 0 || rho >= 1) throw error(errc::invalid_argument, "rho must lie in (0,1)");
        return valuation(ring, degree_valuation{rho});
    }
    static valuation at_point(const disc_point& x) { return valuation(base_ring::poly_q(), disc_valuation{x}); }

    const base_ring& ring() const noexcept { return ring_; }
    const kind_type& kind() const noexcept { return kind_; }
    template <class K>
    const K* as() const noexcept { return std::get_if<K>(&kind_); }

    group_descriptor value_group() const {
        if (as<trivial_valuation>()) return group_descriptor::trivial();
        if (auto* d = as<disc_valuation>()) return point_value_group(d->point);
        return group_descriptor::positive();
    }

    friend bool operator==(const valuation&, const valuation&) = default;

    /// "|.|_0", "|.|_5", "|.|_0,5", "|.|_0,(T^2 + 1)", "deg", "x[ball:0,1]".
    std::string label() const {
        if (auto* t = as<trivial_valuation>()) {
            switch (t->support.kind()) {
                case prime_ideal::shape::zero: return "|.|_0";
                case prime_ideal::shape::prime_number: return "|.|_0," + std::to_string(t->support.prime());
                case prime_ideal::shape::polynomial_generator: return "|.|_0," + t->support.to_string();
            }
        }
        if (auto* p = as<padic_valuation_kind>()) return "|.|_" + std::to_string(p->p);
        if (as<degree_valuation>()) return "deg";
        return "x[" + std::get<disc_valuation>(kind_).point.to_string() + "]";
    }

    /// Literal form accepted by parse_valuation.
    std::string to_string() const {
        if (auto* t = as<trivial_valuation>()) {
            switch (t->support.kind()) {
                case prime_ideal::shape::zero: return "trivial:0";
                case prime_ideal::shape::prime_number: return "trivial:" + std::to_string(t->support.prime());
                case prime_ideal::shape::polynomial_generator: return "trivial:" + t->support.generator().to_string();
            }
        }
        if (auto* p = as<padic_valuation_kind>())
            return "padic:" + std::to_string(p->p) + (p->rho == rational(1, static_cast<unsigned long>(p->p)) ? "" : ":" + p->rho.get_str());
        if (auto* d = as<degree_valuation>()) return "deg:" + d->rho.get_str();
        return std::get<disc_valuation>(kind_).point.to_string();
    }

private:
    valuation(base_ring r, kind_type k) : ring_(r), kind_(std::move(k)) {}
    base_ring ring_;
    kind_type kind_;
};

namespace detail {
inline void same_ring(const base_ring& a, const base_ring& b) {
    if (a != b) throw error(errc::wrong_ring, a.to_string() + " vs " + b.to_string());
}
} // namespace detail

inline value eval(const valuation& v, const ring_element& a) {
    detail::same_ring(v.ring(), a.ring());
    if (auto* t = v.as<trivial_valuation>())
        return t->support.contains(a) ? value::zero() : value::unit(group_descriptor::trivial());
    if (a.is_zero()) return value::zero();
    if (auto* p = v.as<padic_valuation_kind>()) {
        const auto [num, den] = a.as_fraction();
        return value::positive(rpow(p->rho, padic_valuation(num.coeff(0) / den.coeff(0), p->p)));
    }
    if (auto* d = v.as<degree_valuation>()) {
        const auto [num, den] = a.as_fraction();
        return value::positive(rpow(d->rho, static_cast<long>(den.degree()) - static_cast<long>(num.degree())));
    }
    const auto& x = std::get<disc_valuation>(v.kind()).point;
    return eval_at(x, tate_series(x.context(), std::get<3>(a.repr())));
}

inline prime_ideal support(const valuation& v) {
    if (auto* t = v.as<trivial_valuation>()) return t->support;
    if (auto* d = v.as<disc_valuation>(); d && d->point.kind() == point_kind::classical)
        return prime_ideal::generated_by(poly_var() - polynomial(d->point.center()));
    return prime_ideal::zero(v.ring());
}

/// Structural equivalence for the closed-form kinds: |a|_v <= |b|_v iff |a|_w <= |b|_w.
inline bool equivalent(const valuation& v, const valuation& w) {
    detail::same_ring(v.ring(), w.ring());
    if (v.kind().index() != w.kind().index()) return false;
    if (auto* t = v.as<trivial_valuation>()) return t->support == w.as<trivial_valuation>()->support;
    if (auto* p = v.as<padic_valuation_kind>()) return p->p == w.as<padic_valuation_kind>()->p;
    if (v.as<degree_valuation>()) return true;
    return point_eq(v.as<disc_valuation>()->point, w.as<disc_valuation>()->point).equal;
}

/// Criterion (iii) of equivalence on a finite probe set.
inline bool equivalent_on_probes(const valuation& v, const valuation& w, std::span<const ring_element> probes) {
    for (const auto& a : probes)
        for (const auto& b : probes)
            if ((eval(v, a) <= eval(v, b)) != (eval(w, a) <= eval(w, b))) return false;
    return true;
}

/// Convex subgroup generated by Gamma_{v,>=1} ∩ im(v).
inline convex_subgroup characteristic_group(const valuation& v) {
    const auto G = v.value_group();
    if (v.as<trivial_valuation>()) return convex_subgroup::trivial_sub(G);
    if (v.as<padic_valuation_kind>())
        return v.ring().kind() == ring_kind::integers ? convex_subgroup::trivial_sub(G) : convex_subgroup::full(G);
    // Degree valuations have |T| = 1/rho > 1; disc points have |1/p| = p > 1 on a
    // constant, which generates everything in both height-1 and radius groups.
    return convex_subgroup::full(G);
}

namespace detail {
inline void subgroup_of_value_group(const valuation& v, const convex_subgroup& h) {
    if (h.group() != v.value_group())
        throw error(errc::not_convex_subgroup_of_value_group,
                    h.to_string() + " of " + h.group().to_string() + " is not in " + v.value_group().to_string());
}
} // namespace detail

/// v/H: values projected to Gamma_v/H; same support.
inline valuation vertical_quotient(const valuation& v, const convex_subgroup& h) {
    detail::subgroup_of_value_group(v, h);
    if (h.is_trivial()) return v;
    if (h.is_full()) return valuation::trivial(support(v));
    if (auto* d = v.as<disc_valuation>()) return valuation::at_point(height1_generization(d->point));
    throw error(errc::unsupported_kind, "vertical quotient of " + v.to_string());
}

/// v|_H: values outside H become 0. Requires H ⊇ cGamma_v.
inline valuation horizontal_restrict(const valuation& v, const convex_subgroup& h) {
    detail::subgroup_of_value_group(v, h);
    if (!h.includes(characteristic_group(v)))
        throw error(errc::characteristic_group_not_contained,
                    h.to_string() + " does not contain the characteristic group of " + v.to_string());
    if (h.is_full()) return v;
    if (auto* p = v.as<padic_valuation_kind>(); p && h.is_trivial()) return valuation::trivial(prime_ideal::prime_number(p->p));
    throw error(errc::unsupported_kind, "horizontal restriction of " + v.to_string());
}

/// cGamma_v(I): cGamma_v if v(I) meets it, Gamma_v if v(I) = 0, else the convex
/// subgroup generated by the largest generator value. Generators suffice: an element
/// sum a_t t of I has value below cGamma_v whenever every v(t) is.
inline convex_subgroup c_gamma_i(const valuation& v, const ideal_descriptor& ideal) {
    detail::same_ring(v.ring(), ideal.ring);
    const auto cg = characteristic_group(v);
    std::optional<value> largest;
    for (const auto& t : ideal.generators) {
        const value x = eval(v, t);
        if (x.is_zero()) continue;
        if (contains(cg, x.element())) return cg;
        if (!largest || *largest < x) largest = x;
    }
    if (!largest) return convex_subgroup::full(v.value_group());
    return convex_subgroup_generated(largest->element());
}

inline valuation retract(const valuation& v, const ideal_descriptor& ideal) {
    return horizontal_restrict(v, c_gamma_i(v, ideal));
}

/// Membership in Spv(A, I): cGamma_v(I) = Gamma_v.
inline bool in_spv_ai(const valuation& v, const ideal_descriptor& ideal) { return c_gamma_i(v, ideal).is_full(); }

/// Every generator value is cofinal for Gamma_v (0 counts as cofinal).
inline bool is_continuous(const valuation& v, const ideal_descriptor& ideal) {
    detail::same_ring(v.ring(), ideal.ring);
    const auto full = convex_subgroup::full(v.value_group());
    for (const auto& t : ideal.generators) {
        const value x = eval(v, t);
        if (!x.is_zero() && !is_cofinal(x.element(), full)) return false;
    }
    return true;
}

inline bool is_analytic(const valuation& v, const ideal_descriptor& ideal) {
    if (!is_continuous(v, ideal)) throw error(errc::not_continuous, v.to_string() + " is not continuous for " + ideal.to_string());
    for (const auto& t : ideal.generators)
        if (!eval(v, t).is_zero()) return true;
    return false;
}

struct probe {
    ring_element f;
    ring_element s;
};

/// Membership in the subbasic open {|f| <= |s| != 0}.
inline bool in_probe_open(const valuation& v, const probe& pr) {
    const value vs = eval(v, pr.s);
    return !vs.is_zero() && eval(v, pr.f) <= vs;
}

struct specialization_result {
    bool holds = false;
    /// True when decided by the closed-form classification rather than by probes.
    bool exact = false;
    std::vector<probe> probes;
    /// The first probe open containing v but not w, when one was found.
    std::optional<probe> witness;
    explicit operator bool() const noexcept { return holds; }
};

namespace detail {
inline bool curated_spv(const valuation& v) {
    const auto k = v.ring().kind();
    return (k == ring_kind::integers || k == ring_kind::rationals || k == ring_kind::finite_field) &&
           (v.as<trivial_valuation>() || v.as<padic_valuation_kind>());
}
} // namespace detail

/// v lies in the closure of {w}: every subbasic open containing v contains w.
/// Exact for Spv Z, Spv Q, Spv F_p and pairs of disc points; otherwise decided on the
/// given probe family.
inline specialization_result specializes(const valuation& v, const valuation& w, std::span<const probe> probes) {
    detail::same_ring(v.ring(), w.ring());
    specialization_result out;
    out.probes.assign(probes.begin(), probes.end());
    if (detail::curated_spv(v) && detail::curated_spv(w)) {
        out.exact = true;
        const auto* tw = w.as<trivial_valuation>();
        const auto* tv = v.as<trivial_valuation>();
        const auto* pw = w.as<padic_valuation_kind>();
        out.holds = equivalent(v, w) || (tw && tw->support.kind() == prime_ideal::shape::zero) ||
                    (pw && tv && tv->support.kind() == prime_ideal::shape::prime_number && tv->support.prime() == pw->p);
        return out;
    }
    if (v.as<disc_valuation>() && w.as<disc_valuation>()) {
        out.exact = true;
        out.holds = disc_specializes(v.as<disc_valuation>()->point, w.as<disc_valuation>()->point);
        return out;
    }
    if (probes.empty()) throw error(errc::invalid_argument, "probe family is empty");
    for (const auto& pr : probes) {
        if (in_probe_open(v, pr) && !in_probe_open(w, pr)) {
            out.witness = pr;
            return out;
        }
    }
    out.holds = true;
    return out;
}

/// "padic:5", "padic:5:1/2", "trivial:0", "trivial:5", "trivial:T^2+1", "deg:1/2",
/// and disc point literals on Q[T] (which need p).
inline valuation parse_valuation(std::string_view text, const base_ring& ring, std::optional<std::uint64_t> p = std::nullopt) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw error(errc::parse_error, "bad valuation literal '" + std::string(text) + "'");
    const auto head = text.substr(0, colon), body = text.substr(colon + 1);
    if (head == "padic") {
        auto c2 = body.find(':');
        rational pr = parse_rational(body.substr(0, c2));
        if (pr.get_den() != 1 || pr < 2) throw error(errc::parse_error, "padic needs a prime");
        std::optional<rational> rho;
        if (c2 != std::string_view::npos) rho = parse_rational(body.substr(c2 + 1));
        return valuation::padic(ring, pr.get_num().get_ui(), rho);
    }
    if (head == "trivial") {
        if (body == "0") return valuation::trivial(ring);
        if (ring.kind() == ring_kind::poly_q) return valuation::trivial(prime_ideal::generated_by(parse_polynomial(body)));
        rational pr = parse_rational(body);
        if (pr.get_den() != 1 || ring.kind() != ring_kind::integers)
            throw error(errc::wrong_ring, "trivial:" + std::string(body) + " needs the ring Z");
        return valuation::trivial(prime_ideal::prime_number(pr.get_num().get_ui()));
    }
    if (head == "deg") return valuation::degree(ring, parse_rational(body));
    if (ring.kind() == ring_kind::poly_q) {
        if (!p) throw error(errc::invalid_argument, "disc point valuations need -p");
        return valuation::at_point(parse_disc_point(text, padic_context(*p)));
    }
    throw error(errc::parse_error, "bad valuation literal '" + std::string(text) + "'");
}

} // namespace adic
