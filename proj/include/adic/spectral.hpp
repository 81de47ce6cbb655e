#pragma once

/// Finite topological spaces stored as specialization preorders, and the finite
/// models of Spv for Z, Q and F_p.
///
/// x ⪯ y means x lies in the closure of {y}. Closed sets are down-sets, open sets
/// are up-sets.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adic/valuation.hpp"

namespace adic {

using point_set = std::set<std::size_t>;

class finite_space {
public:
    finite_space() = default;

    /// `below[x][y]` is x ⪯ y. Throws unless the relation is reflexive and transitive.
    finite_space(std::vector<std::string> labels, std::vector<std::vector<bool>> below)
        : labels_(std::move(labels)), below_(std::move(below)) {
        const std::size_t n = labels_.size();
        if (below_.size() != n) throw error(errc::invalid_argument, "relation size does not match the point count");
        for (const auto& row : below_)
            if (row.size() != n) throw error(errc::invalid_argument, "relation must be square");
        for (std::size_t x = 0; x < n; ++x) {
            if (!below_[x][x]) throw error(errc::invalid_argument, "specialization must be reflexive");
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (below_[x][y] && below_[y][z] && !below_[x][z])
                        throw error(errc::invalid_argument, "specialization must be transitive");
        }
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool specializes(std::size_t x, std::size_t y) const { return below_.at(x).at(y); }

    std::size_t index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw error(errc::unknown_point, "no point labelled '" + std::string(label) + "'");
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> below_;
};

namespace detail {
inline void check_points(const finite_space& x, const point_set& s) {
    for (auto i : s)
        if (i >= x.size()) throw error(errc::unknown_point, "point index " + std::to_string(i) + " out of range");
}
} // namespace detail

/// Down-set of S.
inline point_set closure(const finite_space& x, const point_set& s) {
    detail::check_points(x, s);
    point_set out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (auto b : s)
            if (x.specializes(a, b)) {
                out.insert(a);
                break;
            }
    return out;
}

/// Up-set of S: the smallest open set containing S.
inline point_set open_hull(const finite_space& x, const point_set& s) {
    detail::check_points(x, s);
    point_set out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (auto b : s)
            if (x.specializes(b, a)) {
                out.insert(a);
                break;
            }
    return out;
}

inline bool is_closed(const finite_space& x, const point_set& s) { return closure(x, s) == s; }

inline bool is_kolmogorov(const finite_space& x) {
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (x.specializes(a, b) && x.specializes(b, a)) return false;
    return true;
}

/// Points z of Z with closure{z} = Z.
inline std::vector<std::size_t> generic_points(const finite_space& x, const point_set& z) {
    std::vector<std::size_t> out;
    for (auto c : z)
        if (closure(x, {c}) == z) out.push_back(c);
    return out;
}

/// A nonempty closed set of a finite space is irreducible iff it is the closure of
/// one of its points (it is the finite union of the closures of its points).
inline bool is_irreducible_closed(const finite_space& x, const point_set& z) {
    return !z.empty() && is_closed(x, z) && !generic_points(x, z).empty();
}

/// Every irreducible closed subset has exactly one generic point. Irreducible closed
/// subsets are enumerated as point closures.
inline bool is_sober(const finite_space& x) {
    for (std::size_t a = 0; a < x.size(); ++a)
        if (generic_points(x, closure(x, {a})).size() != 1) return false;
    return true;
}

struct constructible_report {
    integer count;
    /// One entry per point: {x} = closure{x} ∩ (smallest open containing x).
    std::vector<bool> singleton_locally_closed;
};

/// On a finite Kolmogorov space every subset is constructible, so there are 2^n of
/// them; each singleton is checked to be locally closed.
inline constructible_report constructible_sets(const finite_space& x) {
    if (!is_kolmogorov(x)) throw error(errc::not_kolmogorov, "constructible sets need a Kolmogorov space");
    constructible_report rep;
    mpz_ui_pow_ui(rep.count.get_mpz_t(), 2, x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        point_set cl = closure(x, {a}), up = open_hull(x, {a}), meet;
        for (auto i : cl)
            if (up.count(i)) meet.insert(i);
        rep.singleton_locally_closed.push_back(meet == point_set{a});
    }
    return rep;
}

struct spv_model {
    base_ring ring;
    finite_space space;
    std::vector<valuation> valuations;
    std::vector<prime_ideal> supports;

    const valuation& at(std::string_view label) const { return valuations[space.index_of(label)]; }
};

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// Spv Z = {|.|_0} ∪ {|.|_p, |.|_0,p}, Spv Q = {|.|_0} ∪ {|.|_p}, Spv F_p = {|.|_0},
/// with primes p <= bound.
inline spv_model spv_enumerate(const base_ring& ring, std::uint64_t bound) {
    if (bound < 1) throw error(errc::invalid_argument, "bound must be positive");
    std::vector<valuation> vals{valuation::trivial(ring)};
    switch (ring.kind()) {
        case ring_kind::integers:
            for (auto p : primes_up_to(bound)) {
                vals.push_back(valuation::padic(ring, p));
                vals.push_back(valuation::trivial(prime_ideal::prime_number(p)));
            }
            break;
        case ring_kind::rationals:
            for (auto p : primes_up_to(bound)) vals.push_back(valuation::padic(ring, p));
            break;
        case ring_kind::finite_field: break;
        default: throw error(errc::unsupported_ring, "no finite Spv model for " + ring.to_string());
    }
    const std::size_t n = vals.size();
    std::vector<std::string> labels;
    std::vector<prime_ideal> supps;
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(vals[a].label());
        supps.push_back(support(vals[a]));
        for (std::size_t b = 0; b < n; ++b) below[a][b] = specializes(vals[a], vals[b], {}).holds;
    }
    return {ring, finite_space(std::move(labels), std::move(below)), std::move(vals), std::move(supps)};
}

/// w = v'|_L and v = v'/H.
struct factorization_report {
    valuation v_prime;
    convex_subgroup vertical;
    convex_subgroup horizontal;
    bool identity = false;
};

/// Factors a specialization w ⪯ v as a horizontal specialization of a vertical
/// specialization: searches v' over the model (v first), H and L over the chain of
/// Gamma_{v'}, and checks each candidate through the valuation operations.
inline factorization_report factor_specialization(const spv_model& m, std::string_view v_label, std::string_view w_label) {
    const std::size_t vi = m.space.index_of(v_label), wi = m.space.index_of(w_label);
    if (!m.space.specializes(wi, vi))
        throw error(errc::not_a_specialization, std::string(w_label) + " is not a specialization of " + std::string(v_label));
    const valuation& v = m.valuations[vi];
    const valuation& w = m.valuations[wi];
    const auto g = v.value_group();
    if (vi == wi) return {v, convex_subgroup::trivial_sub(g), convex_subgroup::full(g), true};

    std::vector<const valuation*> candidates{&v};
    for (const auto& u : m.valuations)
        if (&u != &v) candidates.push_back(&u);
    for (const valuation* vp : candidates) {
        const auto chain = list_convex_subgroups(vp->value_group());
        const auto cg = characteristic_group(*vp);
        for (const auto& h : chain) {
            if (!equivalent(vertical_quotient(*vp, h), v)) continue;
            for (const auto& l : chain) {
                if (!l.includes(cg)) continue;
                if (equivalent(horizontal_restrict(*vp, l), w)) return {*vp, h, l, false};
            }
        }
    }
    throw error(errc::not_a_specialization, "no factorization found inside the model");
}

} // namespace adic
