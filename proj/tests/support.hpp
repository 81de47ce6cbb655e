#pragma once

// Random generators and small independent oracles shared by the unit tests and the
// acceptance binary. The dense elimination here is deliberately separate from
// adic/linalg.hpp so that it can serve as a cross-check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "adic/adic.hpp"

// Readable gtest failure messages.
namespace adic {
inline void PrintTo(const value& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const group_element& g, std::ostream* os) { *os << g.to_string(); }
inline void PrintTo(const disc_point& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const group_descriptor& g, std::ostream* os) { *os << g.to_string(); }
inline void PrintTo(const convex_subgroup& h, std::ostream* os) { *os << h.to_string(); }
} // namespace adic

namespace testing_support {

using adic::integer;
using adic::rational;

class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// a/b with |a| <= amax, 1 <= b <= bmax.
    rational small_rational(long amax, long bmax) {
        rational q(uniform(-amax, amax), uniform(1, bmax));
        q.canonicalize();
        return q;
    }

    rational nonzero_rational(long amax, long bmax) {
        rational q;
        do q = small_rational(amax, bmax);
        while (q == 0);
        return q;
    }

    /// Random polynomial of degree <= deg; coefficients carry assorted powers of p.
    adic::polynomial polynomial(unsigned deg, std::uint64_t p, bool allow_zero = true) {
        adic::polynomial f;
        do {
            f = adic::polynomial();
            for (unsigned i = 0; i <= deg; ++i) {
                if (uniform(0, 3) == 0) continue;
                rational c = nonzero_rational(30, 12) * adic::rpow(rational(static_cast<long>(p)), uniform(-2, 3));
                f.set(i, c);
            }
        } while (!allow_zero && f.is_zero());
        return f;
    }

    /// Rational c with |c|_p <= 1.
    rational disc_center(std::uint64_t p) {
        long b;
        do b = uniform(1, 20);
        while (b % static_cast<long>(p) == 0);
        rational c(uniform(-40, 40), b);
        c.canonicalize();
        return c;
    }

    /// Radius in (0, 1]: half the time a power of p, otherwise a random fraction.
    rational disc_radius(std::uint64_t p, bool below_one = false) {
        if (coin()) return adic::rpow(rational(static_cast<long>(p)), -uniform(below_one ? 1 : 0, 3));
        rational r;
        do {
            r = rational(uniform(1, 30), uniform(1, 30));
            r.canonicalize();
        } while (r > 1 || (below_one && r == 1));
        return r;
    }

    adic::disc_point disc_point(const adic::padic_context& ctx, int kind = -1) {
        const auto p = ctx.prime();
        if (kind < 0) kind = static_cast<int>(uniform(0, 3));
        switch (kind) {
            case 0: return adic::disc_point::classical(ctx, disc_center(p));
            case 1: return adic::disc_point::ball(ctx, disc_center(p), disc_radius(p));
            case 2: return adic::disc_point::below(ctx, disc_center(p), disc_radius(p));
            default: return adic::disc_point::above(ctx, disc_center(p), disc_radius(p, true));
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// --- dense exact linear algebra (oracle) -------------------------------------

using dense = std::vector<std::vector<rational>>;

/// Row-reduces in place and returns the pivot columns.
inline std::vector<std::size_t> dense_rref(dense& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t k = r;
        while (k < m.size() && m[k][c] == 0) ++k;
        if (k == m.size()) continue;
        std::swap(m[r], m[k]);
        const rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c] != 0) {
                const rational f = m[i][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t dense_rank(dense m) { return dense_rref(m).size(); }

inline dense to_dense(const adic::matrix& a) {
    dense d(a.rows(), std::vector<rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) d[i][j] = v;
    return d;
}

/// Coordinates of x in the basis given by the columns `basis` (x must lie in the span).
inline std::vector<rational> dense_solve(const std::vector<std::vector<rational>>& basis, const std::vector<rational>& x) {
    const std::size_t n = x.size(), k = basis.size();
    dense aug(n, std::vector<rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
        aug[i][k] = x[i];
    }
    auto piv = dense_rref(aug);
    std::vector<rational> out(k);
    for (std::size_t r = 0; r < piv.size(); ++r) out[piv[r]] = aug[r][k];
    return out;
}

// --- random functorial presheaves ---------------------------------------------

/// Presheaves built inside a fixed ambient Q^n so that functoriality holds by
/// construction: with subspaces K_S = sum over T ⊆ S of random E_T (monotone in S),
/// either F(U_S) = Q^n / K_S with the induced quotient maps, or F(U_S) = K_S with the
/// inclusions. Both are presheaves for the inclusions U_{S ∪ {a}} ⊆ U_S.
inline adic::finite_presheaf random_presheaf(rng& g, unsigned m, unsigned n = 3) {
    using adic::index_set;
    const index_set all = (index_set(1) << m) - 1;
    std::vector<std::vector<std::vector<rational>>> e(all + 1);
    for (index_set s = 1; s <= all; ++s) {
        const long count = g.uniform(0, std::popcount(s) == 1 ? 2 : 1);
        for (long i = 0; i < count; ++i) {
            std::vector<rational> v(n);
            for (auto& x : v) x = g.uniform(-2, 2);
            e[s].push_back(v);
        }
    }
    // Independent basis of K_S.
    std::vector<std::vector<std::vector<rational>>> k(all + 1);
    for (index_set s = 1; s <= all; ++s) {
        dense gens;
        for (index_set t = s; t; t = (t - 1) & s)
            for (const auto& v : e[t]) gens.push_back(v);
        if (gens.empty()) continue;
        auto piv = dense_rref(gens);
        for (std::size_t r = 0; r < piv.size(); ++r) k[s].push_back(gens[r]);
    }
    const bool quotient = g.coin();
    adic::finite_presheaf p(m);
    std::vector<std::vector<std::vector<rational>>> basis(all + 1); // basis of F(U_S) inside Q^n
    for (index_set s = 1; s <= all; ++s) {
        if (quotient) {
            // Complement of K_S spanned by standard vectors.
            dense cur = k[s];
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<rational> ei(n);
                ei[i] = 1;
                cur.push_back(ei);
                if (dense_rank(cur) == cur.size()) basis[s].push_back(ei);
                else cur.pop_back();
            }
        } else {
            basis[s] = k[s];
        }
        p.set_dimension(s, basis[s].size());
    }
    for (index_set s = 1; s <= all; ++s)
        for (unsigned a = 0; a < m; ++a) {
            const index_set t = s | (index_set(1) << a);
            if (t == s) continue;
            const std::size_t rows = basis[t].size(), cols = basis[s].size();
            std::vector<rational> entries(rows * cols);
            for (std::size_t j = 0; j < cols; ++j) {
                std::vector<rational> coords;
                if (quotient) {
                    // Express b_j in [K_T, B_T]; keep the B_T part.
                    auto full = k[t];
                    full.insert(full.end(), basis[t].begin(), basis[t].end());
                    auto c = dense_solve(full, basis[s][j]);
                    coords.assign(c.begin() + static_cast<long>(k[t].size()), c.end());
                } else {
                    coords = dense_solve(basis[t], basis[s][j]);
                }
                for (std::size_t i = 0; i < rows; ++i) entries[i * cols + j] = coords[i];
            }
            p.set_face_map(s, a, adic::matrix::from_dense(rows, cols, entries));
        }
    return p;
}

/// The constant presheaf Q^d on every nonempty intersection, except those listed as empty.
inline adic::finite_presheaf constant_presheaf(unsigned m, std::size_t d, std::vector<adic::index_set> empty = {}) {
    using adic::index_set;
    adic::finite_presheaf p(m);
    auto is_empty = [&](index_set s) {
        for (auto e : empty)
            if ((s & e) == e) return true;
        return false;
    };
    for (index_set s = 1; s < (index_set(1) << m); ++s) p.set_dimension(s, is_empty(s) ? 0 : d);
    for (index_set s = 1; s < (index_set(1) << m); ++s)
        for (unsigned a = 0; a < m; ++a) {
            const index_set t = s | (index_set(1) << a);
            if (t != s && !is_empty(t)) p.set_face_map(s, a, adic::matrix::identity(d));
        }
    return p;
}

// --- finite posets --------------------------------------------------------------

/// All partial orders on {0, ..., n-1} (as `below[x][y]` = x ⪯ y), up to isomorphism.
inline std::vector<std::vector<std::vector<bool>>> posets_up_to_iso(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
            if (x != y) pairs.push_back({x, y});
    std::vector<std::vector<std::vector<bool>>> out;
    std::vector<std::vector<std::vector<bool>>> canon_seen;
    auto canonical = [&](const std::vector<std::vector<bool>>& r) {
        std::vector<unsigned> perm(n);
        for (unsigned i = 0; i < n; ++i) perm[i] = i;
        std::vector<std::vector<bool>> best;
        do {
            std::vector<std::vector<bool>> q(n, std::vector<bool>(n));
            for (unsigned x = 0; x < n; ++x)
                for (unsigned y = 0; y < n; ++y) q[perm[x]][perm[y]] = r[x][y];
            if (best.empty() || q < best) best = q;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
        for (unsigned i = 0; i < n; ++i) r[i][i] = true;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) r[pairs[b].first][pairs[b].second] = true;
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x)
            for (unsigned y = 0; y < n && ok; ++y) {
                if (x != y && r[x][y] && r[y][x]) ok = false;
                for (unsigned z = 0; z < n && ok; ++z)
                    if (r[x][y] && r[y][z] && !r[x][z]) ok = false;
            }
        if (!ok) continue;
        auto c = canonical(r);
        if (std::find(canon_seen.begin(), canon_seen.end(), c) != canon_seen.end()) continue;
        canon_seen.push_back(c);
        out.push_back(r);
    }
    return out;
}

inline adic::finite_space make_space(const std::vector<std::vector<bool>>& below) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < below.size(); ++i) labels.push_back("x" + std::to_string(i));
    return adic::finite_space(labels, below);
}

} // namespace testing_support
