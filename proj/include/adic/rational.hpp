#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "adic/error.hpp"

namespace adic {

using integer = mpz_class;
using rational = mpq_class;

/// Deterministic primality for 64-bit inputs by trial division; the primes used
/// here are small.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
}

/// Exponent of p in a nonzero integer.
inline long padic_valuation(const integer& n, std::uint64_t p) {
    if (n == 0) throw error(errc::invalid_argument, "p-adic valuation of 0");
    integer m = abs(n);
    const integer prime(static_cast<unsigned long>(p));
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
        ++v;
    }
    return v;
}

/// Exponent of p in a nonzero rational: v_p(a/b) = v_p(a) - v_p(b).
inline long padic_valuation(const rational& q, std::uint64_t p) {
    if (q == 0) throw error(errc::invalid_argument, "p-adic valuation of 0");
    return padic_valuation(integer(q.get_num()), p) - padic_valuation(integer(q.get_den()), p);
}

/// Exact power with a signed exponent.
inline rational rpow(const rational& base, long e) {
    if (e == 0) return rational(1);
    if (base == 0) {
        if (e < 0) throw error(errc::invalid_argument, "0 raised to a negative power");
        return rational(0);
    }
    const unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
    rational r = e < 0 ? rational(den, num) : rational(num, den);
    r.canonicalize();
    return r;
}

/// |q|_p = p^{-v_p(q)}, with |0|_p = 0.
inline rational padic_abs(const rational& q, std::uint64_t p) {
    if (q == 0) return rational(0);
    return rpow(rational(static_cast<unsigned long>(p)), -padic_valuation(q, p));
}

/// If q = p^k for some integer k, returns k.
inline bool is_power_of(const rational& q, std::uint64_t p, long& k) {
    if (q <= 0) return false;
    k = padic_valuation(q, p);
    return rpow(rational(static_cast<unsigned long>(p)), k) == q;
}

inline std::string to_string(const rational& q) { return q.get_str(); }

/// Parses "a", "-a", "a/b". Rejects a zero denominator and trailing garbage.
inline rational parse_rational(std::string_view text) {
    auto bad = [&] { return error(errc::parse_error, "bad rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    integer a(n), b{std::string(den)};
    if (b == 0) throw bad();
    rational q(a, b);
    q.canonicalize();
    return q;
}

} // namespace adic
