#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adic/rational.hpp"

namespace adic {

/// Sparse polynomial over the rationals with exponents of type E. Zero
/// coefficients are never stored, so the zero polynomial is the empty map.
/// E = unsigned gives Q[T]; E = long gives Laurent polynomials Q[z, 1/z].
template <std::integral E>
class basic_polynomial {
public:
    using exponent_type = E;
    using term_map = std::map<E, rational>;

    basic_polynomial() = default;
    basic_polynomial(const rational& c) { set(E{0}, c); }
    basic_polynomial(long c) : basic_polynomial(rational(c)) {}

    static basic_polynomial monomial(const rational& c, E e) {
        basic_polynomial p;
        p.set(e, c);
        return p;
    }

    static basic_polynomial from_terms(const std::vector<std::pair<E, rational>>& ts) {
        basic_polynomial p;
        for (const auto& [e, c] : ts) p.add_term(e, c);
        return p;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == E{0}); }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Highest exponent; requires a nonzero polynomial.
    E degree() const { return nonzero().terms_.rbegin()->first; }
    /// Lowest exponent; requires a nonzero polynomial.
    E low_degree() const { return nonzero().terms_.begin()->first; }

    rational coeff(E e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? rational(0) : it->second;
    }
    rational leading_coeff() const { return terms_.empty() ? rational(0) : terms_.rbegin()->second; }

    void set(E e, const rational& c) {
        if (c == 0) terms_.erase(e);
        else terms_[e] = c;
    }
    void add_term(E e, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    basic_polynomial& operator+=(const basic_polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    basic_polynomial& operator-=(const basic_polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    basic_polynomial& operator*=(const rational& s) {
        if (s == 0) terms_.clear();
        else
            for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend basic_polynomial operator+(basic_polynomial a, const basic_polynomial& b) { return a += b; }
    friend basic_polynomial operator-(basic_polynomial a, const basic_polynomial& b) { return a -= b; }
    friend basic_polynomial operator-(basic_polynomial a) { return a *= rational(-1); }
    friend basic_polynomial operator*(basic_polynomial a, const rational& s) { return a *= s; }
    friend basic_polynomial operator*(const rational& s, basic_polynomial a) { return a *= s; }

    friend basic_polynomial operator*(const basic_polynomial& a, const basic_polynomial& b) {
        basic_polynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(static_cast<E>(ea + eb), ca * cb);
        return r;
    }
    basic_polynomial& operator*=(const basic_polynomial& o) { return *this = *this * o; }

    friend bool operator==(const basic_polynomial&, const basic_polynomial&) = default;

    basic_polynomial pow(unsigned n) const {
        basic_polynomial r(rational(1)), b = *this;
        while (n) {
            if (n & 1u) r *= b;
            n >>= 1u;
            if (n) b *= b;
        }
        return r;
    }

    /// Evaluation at a rational point. For Laurent polynomials the point must be nonzero
    /// when negative exponents occur.
    rational operator()(const rational& x) const {
        rational s = 0;
        for (const auto& [e, c] : terms_) s += c * rpow(x, static_cast<long>(e));
        return s;
    }

    /// Canonical rendering in descending exponent order, e.g. "1/25*T^2 + 2/5*T + 1".
    std::string to_string(std::string_view var = "T") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            rational mag = abs(c);
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (e == E{0}) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) out += mag.get_str() + "*";
            out += var;
            if (e != E{1}) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    const basic_polynomial& nonzero() const {
        if (terms_.empty()) throw error(errc::zero_series, "degree of the zero polynomial");
        return *this;
    }

    term_map terms_;
};

using polynomial = basic_polynomial<unsigned>;
using laurent_polynomial = basic_polynomial<long>;

inline polynomial poly_var() { return polynomial::monomial(rational(1), 1u); }

/// Euclidean division in Q[T]: a = q*b + r with deg r < deg b.
inline std::pair<polynomial, polynomial> divmod(polynomial a, const polynomial& b) {
    if (b.is_zero()) throw error(errc::invalid_argument, "polynomial division by zero");
    polynomial q;
    const unsigned db = b.degree();
    const rational lb = b.leading_coeff();
    while (!a.is_zero() && a.degree() >= db) {
        const unsigned shift = a.degree() - db;
        const rational c = a.leading_coeff() / lb;
        q.add_term(shift, c);
        a -= polynomial::monomial(c, shift) * b;
    }
    return {std::move(q), std::move(a)};
}

inline polynomial make_monic(polynomial p) {
    if (p.is_zero()) return p;
    const rational lc = p.leading_coeff();
    return p *= rational(1) / lc;
}

/// Monic gcd; gcd(0, 0) = 0.
inline polynomial gcd(polynomial a, polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

/// f(T + c), by Horner's scheme.
inline polynomial taylor_shift(const polynomial& f, const rational& c) {
    if (f.is_zero()) return f;
    const polynomial lin = poly_var() + polynomial(c);
    polynomial r;
    for (long e = static_cast<long>(f.degree()); e >= 0; --e) {
        r *= lin;
        r += polynomial(f.coeff(static_cast<unsigned>(e)));
    }
    return r;
}

namespace detail {

inline std::vector<integer> positive_divisors(integer n) {
    n = abs(n);
    std::vector<integer> small, large;
    for (integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

/// Rational roots of a nonzero polynomial (without multiplicity), by the rational root test.
inline std::vector<rational> rational_roots(const polynomial& f) {
    std::vector<rational> roots;
    if (f.is_zero() || f.is_constant()) return roots;
    polynomial g = f;
    if (g.low_degree() > 0) {
        roots.push_back(rational(0));
        polynomial shifted;
        const unsigned low = g.low_degree();
        for (const auto& [e, c] : g.terms()) shifted.set(e - low, c);
        g = shifted;
        if (g.is_constant()) return roots;
    }
    integer lcm_den = 1;
    for (const auto& [e, c] : g.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    g *= rational(lcm_den);
    const integer a0 = g.coeff(0).get_num();
    const integer an = g.leading_coeff().get_num();
    for (const auto& num : detail::positive_divisors(a0))
        for (const auto& den : detail::positive_divisors(an))
            for (int sign : {1, -1}) {
                rational cand(num * sign, den);
                cand.canonicalize();
                if (g(cand) == 0) {
                    bool seen = false;
                    for (const auto& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

inline constexpr unsigned irreducibility_degree_bound = 3;

/// Irreducibility over Q, decided exactly for degree <= 3 (a reducible polynomial of
/// degree 2 or 3 has a linear factor). Higher degrees are outside the supported bound.
inline bool is_irreducible(const polynomial& f) {
    if (f.is_zero() || f.is_constant()) return false;
    const unsigned d = f.degree();
    if (d == 1) return true;
    if (d > irreducibility_degree_bound)
        throw error(errc::unsupported_kind, "irreducibility test beyond degree " +
                                                 std::to_string(irreducibility_degree_bound));
    return rational_roots(f).empty();
}

} // namespace adic
