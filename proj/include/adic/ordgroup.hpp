#pragma once

/// Totally ordered abelian groups in closed form.
///
/// Five kinds of value group are supported, all written multiplicatively:
///
///   trivial        {1}
///   lex(n)         Q^n with the lexicographic order; payloads are additive exponent
///                  tuples, so (e1,...,en) < 1 iff the first nonzero e_i is negative
///   positive       Q_{>0} under multiplication with the usual order
///   below(r)       Q_{>0} x gamma^Z with r' < gamma < r for every rational r' < r
///   above(r)       Q_{>0} x gamma^Z with r < gamma < r' for every rational r' > r
///
/// A radius element q*gamma^k is compared through its real part q*r^k; on a tie the
/// gamma-exponent decides (larger k is smaller below r, larger above r). This is the
/// only order in which gamma sits infinitesimally close to r on the requested side.
///
/// Convex subgroups form a chain and are stored by their rank in that chain
/// (0 = trivial subgroup, height(G) = G itself). For radius groups the middle
/// member is the infinitesimal subgroup {q*gamma^k : q*r^k = 1}, generated by gamma/r.

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adic/rational.hpp"

namespace adic {

struct trivial_group {
    friend bool operator==(const trivial_group&, const trivial_group&) = default;
};
struct lex_group {
    unsigned n = 1;
    friend bool operator==(const lex_group&, const lex_group&) = default;
};
struct positive_group {
    friend bool operator==(const positive_group&, const positive_group&) = default;
};
struct radius_below_group {
    rational r;
    friend bool operator==(const radius_below_group&, const radius_below_group&) = default;
};
struct radius_above_group {
    rational r;
    friend bool operator==(const radius_above_group&, const radius_above_group&) = default;
};

class group_descriptor {
public:
    using kind_type = std::variant<trivial_group, lex_group, positive_group, radius_below_group, radius_above_group>;

    group_descriptor() = default;

    static group_descriptor trivial() { return group_descriptor(trivial_group{}); }
    static group_descriptor positive() { return group_descriptor(positive_group{}); }
    static group_descriptor lex(unsigned n) {
        if (n < 1) throw error(errc::invalid_argument, "lexicographic group needs n >= 1");
        return group_descriptor(lex_group{n});
    }
    static group_descriptor below(const rational& r) {
        if (r <= 0 || r > 1) throw error(errc::invalid_argument, "radius below r needs r in (0,1]");
        return group_descriptor(radius_below_group{r});
    }
    static group_descriptor above(const rational& r) {
        if (r <= 0 || r >= 1) throw error(errc::invalid_argument, "radius above r needs r in (0,1)");
        return group_descriptor(radius_above_group{r});
    }

    const kind_type& kind() const noexcept { return kind_; }
    template <class K>
    bool is() const noexcept { return std::holds_alternative<K>(kind_); }
    bool is_radius() const noexcept { return is<radius_below_group>() || is<radius_above_group>(); }

    unsigned lex_rank() const { return std::get<lex_group>(kind_).n; }
    const rational& radius() const {
        if (auto* b = std::get_if<radius_below_group>(&kind_)) return b->r;
        return std::get<radius_above_group>(kind_).r;
    }

    friend bool operator==(const group_descriptor&, const group_descriptor&) = default;

    /// "trivial", "lex:n", "pos", "below:r", "above:r".
    std::string to_string() const {
        return std::visit(
            [](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, trivial_group>) return "trivial";
                else if constexpr (std::is_same_v<K, lex_group>) return "lex:" + std::to_string(k.n);
                else if constexpr (std::is_same_v<K, positive_group>) return "pos";
                else if constexpr (std::is_same_v<K, radius_below_group>) return "below:" + k.r.get_str();
                else return "above:" + k.r.get_str();
            },
            kind_);
    }

private:
    explicit group_descriptor(kind_type k) : kind_(std::move(k)) {}
    kind_type kind_{trivial_group{}};
};

/// q * gamma^k in a radius group.
struct radius_payload {
    rational q;
    long k = 0;
    friend bool operator==(const radius_payload&, const radius_payload&) = default;
};

class group_element {
public:
    using payload_type = std::variant<std::monostate, std::vector<rational>, rational, radius_payload>;

    static group_element unit(const group_descriptor& g) {
        return std::visit(
            [&](const auto& k) -> group_element {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, trivial_group>) return group_element(g, std::monostate{});
                else if constexpr (std::is_same_v<K, lex_group>) return group_element(g, std::vector<rational>(k.n));
                else if constexpr (std::is_same_v<K, positive_group>) return group_element(g, rational(1));
                else return group_element(g, radius_payload{rational(1), 0});
            },
            g.kind());
    }
    static group_element lex(std::vector<rational> exponents) {
        auto g = group_descriptor::lex(static_cast<unsigned>(exponents.size()));
        return group_element(g, std::move(exponents));
    }
    static group_element positive(const rational& q) {
        if (q <= 0) throw error(errc::invalid_argument, "positive group element must be > 0");
        return group_element(group_descriptor::positive(), q);
    }
    static group_element radius(const group_descriptor& g, const rational& q, long k) {
        if (!g.is_radius()) throw error(errc::mismatched_groups, "radius payload for " + g.to_string());
        if (q <= 0) throw error(errc::invalid_argument, "radius element needs q > 0");
        return group_element(g, radius_payload{q, k});
    }

    const group_descriptor& group() const noexcept { return group_; }
    const payload_type& payload() const noexcept { return payload_; }

    const std::vector<rational>& exponents() const { return std::get<std::vector<rational>>(payload_); }
    const rational& value() const { return std::get<rational>(payload_); }
    const radius_payload& radius_part() const { return std::get<radius_payload>(payload_); }

    /// q*r^k for radius elements, the value itself for the positive group.
    rational real_part() const {
        if (auto* q = std::get_if<rational>(&payload_)) return *q;
        const auto& rp = radius_part();
        return rp.q * rpow(group_.radius(), rp.k);
    }

    bool is_unit() const { return *this == unit(group_); }

    friend bool operator==(const group_element&, const group_element&) = default;

    std::string to_string() const {
        return std::visit(
            [&](const auto& p) -> std::string {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, std::monostate>) return "1";
                else if constexpr (std::is_same_v<P, std::vector<rational>>) {
                    std::string s = "(";
                    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
                    return s + ")";
                } else if constexpr (std::is_same_v<P, rational>) return p.get_str();
                else
                    return p.q.get_str() + "*g^" + std::to_string(p.k) + "@" + group_.radius().get_str() +
                           (group_.is<radius_below_group>() ? "<" : ">");
            },
            payload_);
    }

private:
    group_element(group_descriptor g, payload_type p) : group_(std::move(g)), payload_(std::move(p)) {}
    group_descriptor group_;
    payload_type payload_;
};

namespace detail {
inline void same_group(const group_element& a, const group_element& b) {
    if (a.group() != b.group())
        throw error(errc::mismatched_groups, a.group().to_string() + " vs " + b.group().to_string());
}
} // namespace detail

inline group_element group_mul(const group_element& a, const group_element& b) {
    detail::same_group(a, b);
    const auto& g = a.group();
    if (g.is<trivial_group>()) return a;
    if (g.is<lex_group>()) {
        auto e = a.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
        return group_element::lex(std::move(e));
    }
    if (g.is<positive_group>()) return group_element::positive(a.value() * b.value());
    return group_element::radius(g, a.radius_part().q * b.radius_part().q, a.radius_part().k + b.radius_part().k);
}

inline group_element group_inv(const group_element& a) {
    const auto& g = a.group();
    if (g.is<trivial_group>()) return a;
    if (g.is<lex_group>()) {
        auto e = a.exponents();
        for (auto& x : e) x = -x;
        return group_element::lex(std::move(e));
    }
    if (g.is<positive_group>()) return group_element::positive(1 / a.value());
    return group_element::radius(g, 1 / a.radius_part().q, -a.radius_part().k);
}

inline group_element group_pow(const group_element& a, long n) {
    const auto& g = a.group();
    if (g.is<trivial_group>()) return a;
    if (g.is<lex_group>()) {
        auto e = a.exponents();
        for (auto& x : e) x *= n;
        return group_element::lex(std::move(e));
    }
    if (g.is<positive_group>()) return group_element::positive(rpow(a.value(), n));
    return group_element::radius(g, rpow(a.radius_part().q, n), a.radius_part().k * n);
}

inline group_element operator*(const group_element& a, const group_element& b) { return group_mul(a, b); }

namespace detail {
inline std::strong_ordering cmp_rational(const rational& a, const rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
} // namespace detail

inline std::strong_ordering group_cmp(const group_element& a, const group_element& b) {
    detail::same_group(a, b);
    const auto& g = a.group();
    if (g.is<trivial_group>()) return std::strong_ordering::equal;
    if (g.is<lex_group>()) {
        for (std::size_t i = 0; i < a.exponents().size(); ++i)
            if (auto c = detail::cmp_rational(a.exponents()[i], b.exponents()[i]); c != 0) return c;
        return std::strong_ordering::equal;
    }
    if (g.is<positive_group>()) return detail::cmp_rational(a.value(), b.value());
    if (auto c = detail::cmp_rational(a.real_part(), b.real_part()); c != 0) return c;
    const long ka = a.radius_part().k, kb = b.radius_part().k;
    if (g.is<radius_below_group>()) return kb <=> ka;
    return ka <=> kb;
}

inline std::strong_ordering operator<=>(const group_element& a, const group_element& b) { return group_cmp(a, b); }

inline unsigned height(const group_descriptor& g) {
    return std::visit(
        [](const auto& k) -> unsigned {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, trivial_group>) return 0;
            else if constexpr (std::is_same_v<K, lex_group>) return k.n;
            else if constexpr (std::is_same_v<K, positive_group>) return 1;
            else return 2;
        },
        g.kind());
}

/// A convex subgroup, identified by its position in the chain of convex subgroups.
class convex_subgroup {
public:
    enum class shape { trivial_sub, full, lex_tail, infinitesimal };

    static convex_subgroup trivial_sub(const group_descriptor& g) { return {g, 0}; }
    static convex_subgroup full(const group_descriptor& g) { return {g, height(g)}; }
    /// Tuples vanishing in coordinates < r (1-based); r = 1 is the full group, r = n+1 trivial.
    static convex_subgroup lex_tail(const group_descriptor& g, unsigned r) {
        if (!g.is<lex_group>()) throw error(errc::mismatched_groups, "lex tail in " + g.to_string());
        const unsigned n = g.lex_rank();
        if (r < 1 || r > n + 1) throw error(errc::invalid_argument, "lex tail index out of range");
        return {g, n + 1 - r};
    }
    static convex_subgroup infinitesimal(const group_descriptor& g) {
        if (!g.is_radius()) throw error(errc::mismatched_groups, "infinitesimal subgroup in " + g.to_string());
        return {g, 1};
    }
    static convex_subgroup with_rank(const group_descriptor& g, unsigned rank) {
        if (rank > height(g)) throw error(errc::invalid_argument, "convex subgroup rank exceeds height");
        return {g, rank};
    }

    const group_descriptor& group() const noexcept { return group_; }
    /// Number of nontrivial convex subgroups contained in this one, i.e. its height as a group.
    unsigned rank() const noexcept { return rank_; }

    bool is_trivial() const noexcept { return rank_ == 0; }
    bool is_full() const { return rank_ == height(group_); }

    shape kind() const {
        if (rank_ == 0) return shape::trivial_sub;
        if (is_full()) return shape::full;
        return group_.is_radius() ? shape::infinitesimal : shape::lex_tail;
    }
    /// 1-based index r of the first coordinate allowed to be nonzero (lex groups only).
    unsigned tail_index() const { return group_.lex_rank() + 1 - rank_; }

    bool includes(const convex_subgroup& o) const {
        if (o.group_ != group_) throw error(errc::mismatched_groups, "subgroups of different groups");
        return rank_ >= o.rank_;
    }

    friend bool operator==(const convex_subgroup&, const convex_subgroup&) = default;

    std::string to_string() const {
        switch (kind()) {
            case shape::trivial_sub: return "TrivialSub";
            case shape::full: return "Full";
            case shape::infinitesimal: return "Infinitesimal";
            case shape::lex_tail: return "LexTail(" + std::to_string(tail_index()) + ")";
        }
        return "?";
    }

private:
    convex_subgroup(group_descriptor g, unsigned rank) : group_(std::move(g)), rank_(rank) {}
    group_descriptor group_;
    unsigned rank_ = 0;
};

/// Smallest convex subgroup containing g.
inline convex_subgroup convex_subgroup_generated(const group_element& g) {
    const auto& G = g.group();
    if (g.is_unit()) return convex_subgroup::trivial_sub(G);
    if (G.is<lex_group>()) {
        const auto& e = g.exponents();
        unsigned j = 1;
        while (e[j - 1] == 0) ++j;
        return convex_subgroup::lex_tail(G, j);
    }
    if (G.is_radius() && g.real_part() == 1) return convex_subgroup::infinitesimal(G);
    return convex_subgroup::full(G);
}

inline bool contains(const convex_subgroup& h, const group_element& g) {
    if (g.group() != h.group()) throw error(errc::mismatched_groups, "element and subgroup in different groups");
    return convex_subgroup_generated(g).rank() <= h.rank();
}

/// The chain of convex subgroups, ordered by inclusion.
inline std::vector<convex_subgroup> list_convex_subgroups(const group_descriptor& g) {
    std::vector<convex_subgroup> chain;
    for (unsigned r = 0; r <= height(g); ++r) chain.push_back(convex_subgroup::with_rank(g, r));
    return chain;
}

/// The convex subgroup viewed as an ordered group in its own right.
inline group_descriptor subgroup_as_group(const convex_subgroup& h) {
    const auto& G = h.group();
    if (h.is_trivial()) return group_descriptor::trivial();
    if (h.is_full()) return G;
    if (G.is<lex_group>()) return group_descriptor::lex(h.rank());
    return group_descriptor::lex(1); // infinitesimal subgroup: powers of gamma/r
}

/// Quotient G/H with its induced order, and the order-preserving projection.
class quotient_map {
public:
    quotient_map(convex_subgroup h) : sub_(std::move(h)) {
        const auto& G = sub_.group();
        if (sub_.is_trivial()) target_ = G;
        else if (sub_.is_full()) target_ = group_descriptor::trivial();
        else if (G.is<lex_group>()) target_ = group_descriptor::lex(G.lex_rank() - sub_.rank());
        else target_ = group_descriptor::positive();
    }

    const group_descriptor& source() const noexcept { return sub_.group(); }
    const group_descriptor& target() const noexcept { return target_; }
    const convex_subgroup& kernel() const noexcept { return sub_; }

    group_element operator()(const group_element& g) const {
        if (g.group() != source()) throw error(errc::mismatched_groups, "projection of a foreign element");
        if (sub_.is_trivial()) return g;
        if (sub_.is_full()) return group_element::unit(target_);
        if (source().is<lex_group>()) {
            const auto& e = g.exponents();
            return group_element::lex(std::vector<rational>(e.begin(), e.begin() + target_.lex_rank()));
        }
        return group_element::positive(g.real_part());
    }

private:
    convex_subgroup sub_;
    group_descriptor target_;
};

inline quotient_map quotient_by_convex(const group_descriptor& g, const convex_subgroup& h) {
    if (h.group() != g) throw error(errc::mismatched_groups, "subgroup of " + h.group().to_string() + " in " + g.to_string());
    return quotient_map(h);
}

/// g is cofinal for H iff every h in H is eventually above a power of g. Decided as
/// g < 1 and H contained in the convex subgroup generated by g.
inline bool is_cofinal(const group_element& g, const convex_subgroup& h) {
    if (g.group() != h.group()) throw error(errc::mismatched_groups, "element and subgroup in different groups");
    return group_cmp(g, group_element::unit(g.group())) < 0 && convex_subgroup_generated(g).includes(h);
}

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}
} // namespace detail

inline group_descriptor parse_group_descriptor(std::string_view text) {
    text = detail::trim(text);
    if (text == "trivial") return group_descriptor::trivial();
    if (text == "pos") return group_descriptor::positive();
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        auto head = text.substr(0, colon), arg = text.substr(colon + 1);
        if (head == "lex") {
            rational n = parse_rational(arg);
            if (n.get_den() != 1 || n < 1) throw error(errc::parse_error, "lex rank must be a positive integer");
            return group_descriptor::lex(static_cast<unsigned>(n.get_num().get_ui()));
        }
        if (head == "below") return group_descriptor::below(parse_rational(arg));
        if (head == "above") return group_descriptor::above(parse_rational(arg));
    }
    throw error(errc::parse_error, "bad group literal '" + std::string(text) + "'");
}

/// Parses "(q1,...,qn)", "a/b" (positive group) or "q*g^k@r<" / "q*g^k@r>".
/// "1" parses as the positive-group unit unless a trivial group is expected.
inline group_element parse_group_element(std::string_view text, const group_descriptor* expected = nullptr) {
    text = detail::trim(text);
    if (expected && expected->is<trivial_group>()) {
        if (text != "1") throw error(errc::parse_error, "trivial group has only the element 1");
        return group_element::unit(*expected);
    }
    if (text.starts_with('(')) {
        if (!text.ends_with(')')) throw error(errc::parse_error, "unterminated tuple");
        std::vector<rational> e;
        std::string_view body = text.substr(1, text.size() - 2);
        while (true) {
            auto comma = body.find(',');
            e.push_back(parse_rational(detail::trim(body.substr(0, comma))));
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
        }
        return group_element::lex(std::move(e));
    }
    auto at = text.find('@');
    if (at != std::string_view::npos) {
        auto head = text.substr(0, at), tail = text.substr(at + 1);
        auto star = head.find("*g^");
        if (star == std::string_view::npos || tail.empty()) throw error(errc::parse_error, "bad radius element");
        rational q = parse_rational(head.substr(0, star));
        rational k = parse_rational(head.substr(star + 3));
        if (k.get_den() != 1) throw error(errc::parse_error, "gamma exponent must be an integer");
        const char side = tail.back();
        rational r = parse_rational(tail.substr(0, tail.size() - 1));
        group_descriptor g = side == '<'   ? group_descriptor::below(r)
                             : side == '>' ? group_descriptor::above(r)
                                           : throw error(errc::parse_error, "radius side must be < or >");
        return group_element::radius(g, q, k.get_num().get_si());
    }
    return group_element::positive(parse_rational(text));
}

/// Parses "TrivialSub", "Full", "LexTail(r)" or "Infinitesimal" as a subgroup of g.
inline convex_subgroup parse_convex_subgroup(std::string_view text, const group_descriptor& g) {
    text = detail::trim(text);
    if (text == "TrivialSub") return convex_subgroup::trivial_sub(g);
    if (text == "Full") return convex_subgroup::full(g);
    if (text == "Infinitesimal") return convex_subgroup::infinitesimal(g);
    if (text.starts_with("LexTail(") && text.ends_with(')')) {
        rational r = parse_rational(text.substr(8, text.size() - 9));
        if (r.get_den() != 1 || r < 1) throw error(errc::parse_error, "LexTail index must be a positive integer");
        return convex_subgroup::lex_tail(g, static_cast<unsigned>(r.get_num().get_ui()));
    }
    throw error(errc::parse_error, "bad convex subgroup literal '" + std::string(text) + "'");
}

} // namespace adic
