// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every check is exact; the time limits are wall-clock bounds on the check itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "cli_app.hpp"
#include "support.hpp"

using namespace adic;
using testing_support::rng;

namespace {

struct verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct criterion {
    int id;
    std::string name;
    double limit_seconds; // 0 = no limit
    std::function<void(verdict&)> body;
};

long vp(const rational& x, long p) {
    long v = 0;
    integer num = x.get_num(), den = x.get_den();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

/// Gauss norm from scratch: p^{-min v_p(a_n)}.
value gauss_oracle(const polynomial& f, long p) {
    if (f.is_zero()) return value::zero();
    long m = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        (void)e;
        const long v = vp(c, p);
        if (first || v < m) m = v;
        first = false;
    }
    return value::positive(rpow(rational(1, p), m));
}

/// |f(c)|_p computed by Horner evaluation and repeated division.
value classical_oracle(const polynomial& f, const rational& c, long p) {
    rational acc = 0;
    for (long e = f.is_zero() ? -1 : static_cast<long>(f.degree()); e >= 0; --e) acc = acc * c + f.coeff(static_cast<unsigned>(e));
    if (acc == 0) return value::zero();
    return value::positive(rpow(rational(1, p), vp(acc, p)));
}

std::size_t prime_count(unsigned b) {
    std::size_t n = 0;
    for (unsigned k = 2; k <= b; ++k) {
        bool prime = true;
        for (unsigned d = 2; d * d <= k; ++d)
            if (k % d == 0) prime = false;
        n += prime;
    }
    return n;
}

// 1 -------------------------------------------------------------------------------
void spv_enumeration(verdict& v) {
    using json = nlohmann::json;
    for (unsigned b : {5u, 10u, 30u}) {
        const auto o = cli::execute({"spv", "--ring", "Z", "--bound", std::to_string(b), "--format", "structured"});
        v.require(o.exit_code == 0, "spv exited with " + std::to_string(o.exit_code));
        const auto doc = json::parse(o.out);
        const auto& pts = doc["points"];
        v.require(pts.size() == 1 + 2 * prime_count(b), "wrong point count for bound " + std::to_string(b));
        for (unsigned p = 2; p <= b; ++p) {
            if (prime_count(p) == prime_count(p - 1)) continue;
            const std::string lp = "|.|_" + std::to_string(p), l0p = "|.|_0," + std::to_string(p);
            bool found = false;
            for (const auto& pt : pts)
                if (pt["label"] == lp) {
                    found = true;
                    auto cl = pt["closure"].get<std::vector<std::string>>();
                    std::sort(cl.begin(), cl.end());
                    std::vector<std::string> want{lp, l0p};
                    std::sort(want.begin(), want.end());
                    v.require(cl == want, "closure of " + lp);
                }
            v.require(found, "missing " + lp);
        }
        v.require(doc["generic_points"] == json::array({"|.|_0"}), "generic points for bound " + std::to_string(b));
    }
}

// 2 -------------------------------------------------------------------------------
void gauss_norm_axioms(verdict& v) {
    for (long p : {2L, 5L}) {
        const padic_context ctx(static_cast<std::uint64_t>(p));
        rng g(1000 + p);
        for (int i = 0; i < 500; ++i) {
            const tate_series f(ctx, g.polynomial(12, p)), h(ctx, g.polynomial(12, p));
            const value nf = gauss_norm(f), nh = gauss_norm(h);
            v.require(nf == gauss_oracle(f.poly(), p), "norm differs from oracle");
            v.require(gauss_norm(f * h) == nf * nh, "multiplicativity");
            const value ns = gauss_norm(f + h);
            v.require(ns <= max(nf, nh), "ultrametric inequality");
            if (nf != nh) v.require(ns == max(nf, nh), "strict ultrametric equality");
        }
    }
}

// 3 -------------------------------------------------------------------------------
void disc_evaluation(verdict& v) {
    const padic_context ctx(5);
    rng g(3000);
    for (int i = 0; i < 500; ++i) {
        const tate_series f(ctx, g.polynomial(8, 5));
        v.require(eval_at(disc_point::ball(ctx, g.disc_center(5), 1), f) == gauss_norm(f), "Gauss point");
    }
    for (int i = 0; i < 500; ++i) {
        const rational c = g.disc_center(5);
        const polynomial f = g.polynomial(8, 5);
        v.require(eval_at(disc_point::classical(ctx, c), tate_series(ctx, f)) == classical_oracle(f, c, 5), "classical point");
    }
}

// 4 -------------------------------------------------------------------------------
void disc_specialization(verdict& v) {
    const padic_context ctx(5);
    rng g(4000);
    std::vector<disc_point> pts;
    for (int i = 0; i < 80; ++i) {
        const rational c = g.disc_center(5);
        const rational r = rpow(rational(5), -g.uniform(0, 3));
        pts.push_back(disc_point::ball(ctx, c, r));
        // the below point of a shifted center lies on a possibly different ball of the same radius
        pts.push_back(disc_point::below(ctx, c, r));
        pts.push_back(disc_point::below(ctx, c + rpow(rational(5), g.uniform(0, 3)), r));
        if (r < 1) pts.push_back(disc_point::above(ctx, c, r));
        pts.push_back(disc_point::classical(ctx, g.disc_center(5)));
        pts.push_back(disc_point::ball(ctx, c, g.disc_radius(5)));
    }
    // every type-5 point's ball, and a type-5 point under every type-2 ball, belong to the family
    const std::size_t n0 = pts.size();
    for (std::size_t i = 0; i < n0; ++i) {
        const auto t = classify(pts[i]);
        if (t == point_type::type5_below || t == point_type::type5_above) pts.push_back(height1_generization(pts[i]));
        if (t == point_type::type2) pts.push_back(disc_point::below(ctx, pts[i].center(), pts[i].radius()));
    }
    bool kinds[4] = {false, false, false, false};
    for (const auto& x : pts) kinds[static_cast<int>(x.kind())] = true;
    v.require(pts.size() >= 300, "family too small");
    v.require(kinds[0] && kinds[1] && kinds[2] && kinds[3], "not all four kinds present");

    const std::size_t n = pts.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) le[a][b] = disc_specializes(pts[a], pts[b]);
    for (std::size_t a = 0; a < n; ++a) {
        v.require(le[a][a], "reflexivity");
        for (std::size_t b = 0; b < n; ++b) {
            if (le[a][b] && le[b][a]) v.require(point_eq(pts[a], pts[b]).equal, "antisymmetry");
            if (!le[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (le[b][c]) v.require(le[a][c], "transitivity");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool closed = true;
        for (std::size_t b = 0; b < n; ++b)
            if (le[b][a] && !point_eq(pts[a], pts[b]).equal) closed = false;
        v.require(closed == (classify(pts[a]) != point_type::type2), "closed iff not type 2: " + pts[a].to_string());
        const auto t = classify(pts[a]);
        if (t != point_type::type5_below && t != point_type::type5_above) continue;
        const auto ball = height1_generization(pts[a]);
        v.require(disc_specializes(pts[a], ball), "type 5 point not below its ball");
        for (std::size_t b = 0; b < n; ++b)
            if (le[a][b] && !point_eq(pts[a], pts[b]).equal)
                v.require(point_eq(pts[b], ball).equal, "type 5 point below a second point: " + pts[a].to_string());
    }
}

// 5 -------------------------------------------------------------------------------
void rational_intersection(verdict& v) {
    const padic_context ctx(5);
    rng g(5000);
    auto random_subset = [&] {
        while (true) {
            std::vector<tate_series> t;
            for (long i = 0; i < g.uniform(1, 2); ++i) t.emplace_back(ctx, g.polynomial(2, 5, false));
            auto r = make_rational_subset(t, tate_series(ctx, g.polynomial(2, 5, false)));
            if (r.open_witness) return r;
        }
    };
    std::vector<disc_point> pts;
    for (int i = 0; i < 200; ++i) pts.push_back(g.disc_point(ctx));
    for (int i = 0; i < 20; ++i) {
        const auto r1 = random_subset(), r2 = random_subset();
        const auto r = intersect_rational(r1, r2);
        for (const auto& x : pts)
            v.require(in_rational_subset(x, r) == (in_rational_subset(x, r1) && in_rational_subset(x, r2)), "membership");
    }
}

// 6 -------------------------------------------------------------------------------
void retraction(verdict& v) {
    const auto zz = base_ring::integers();
    const auto model = spv_enumerate(zz, 30);
    for (auto p : primes_up_to(30)) {
        const auto ideal = parse_ideal("(" + std::to_string(p) + ")", zz);
        for (const auto& w : model.valuations) {
            const auto r = retract(w, ideal);
            v.require(equivalent(retract(r, ideal), r), "idempotence on " + w.label());
            v.require(in_spv_ai(r, ideal), "image outside Spv(A,I)");
            if (in_spv_ai(w, ideal)) v.require(equivalent(r, w), "member moved: " + w.label());
        }
    }
    const padic_context ctx(5);
    const auto ideal = parse_ideal("(5)", base_ring::poly_q());
    rng g(6000);
    for (int i = 0; i < 200; ++i) {
        const auto w = valuation::at_point(g.disc_point(ctx));
        const auto r = retract(w, ideal);
        v.require(equivalent(retract(r, ideal), r), "idempotence on " + w.label());
        if (in_spv_ai(w, ideal)) v.require(equivalent(r, w), "member moved: " + w.label());
    }
}

// 7 -------------------------------------------------------------------------------
void factorization(verdict& v) {
    const auto m = spv_enumerate(base_ring::integers(), 30);
    std::vector<ring_element> probes;
    for (long a = 0; a <= 100; ++a) probes.push_back(ring_element::of_integer(a));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < m.space.size(); ++a)
        for (std::size_t b = 0; b < m.space.size(); ++b) {
            if (!m.space.specializes(b, a)) continue;
            ++pairs;
            std::optional<factorization_report> fr;
            try {
                fr = factor_specialization(m, m.space.label(a), m.space.label(b));
            } catch (const error& e) {
                v.require(false, e.what());
                continue;
            }
            const auto& f = *fr;
            const auto top = f.identity ? m.valuations[a] : vertical_quotient(f.v_prime, f.vertical);
            const auto bottom = f.identity ? m.valuations[b] : horizontal_restrict(f.v_prime, f.horizontal);
            v.require(equivalent_on_probes(top, m.valuations[a], probes), "v'/H differs from v for " + m.space.label(a));
            v.require(equivalent_on_probes(bottom, m.valuations[b], probes), "v'|_L differs from w for " + m.space.label(b));
        }
    v.require(pairs > m.space.size(), "no proper specializations");
}

// 8 -------------------------------------------------------------------------------
void finite_soberness(verdict& v) {
    const std::size_t expected[] = {1, 2, 5, 16};
    for (unsigned n = 1; n <= 4; ++n) {
        const auto posets = testing_support::posets_up_to_iso(n);
        v.require(posets.size() == expected[n - 1], "poset count for n = " + std::to_string(n));
        for (const auto& r : posets) {
            const auto x = testing_support::make_space(r);
            v.require(is_kolmogorov(x), "not Kolmogorov");
            v.require(is_sober(x), "not sober");
        }
    }
}

// 9 -------------------------------------------------------------------------------
void cech_quasi_isomorphism(verdict& v) {
    rng g(9000);
    for (int i = 0; i < 50; ++i) {
        const auto p = testing_support::random_presheaf(g, static_cast<unsigned>(g.uniform(1, 4)), 3);
        v.require(cohomology(build_complex(p)) == cohomology(alternating_subcomplex(p)), "cohomology differs");
    }
}

// 10 ------------------------------------------------------------------------------
void laurent_exactness(verdict& v) {
    const padic_context ctx(5);
    for (const char* f : {"T", "5*T + 1", "T^2 - 5"}) {
        const auto rep = check_laurent_exactness(tate_series(ctx, parse_polynomial(f)), 20);
        v.require(rep.checks.size() == 3 && rep.exact(), std::string("not exact for ") + f);
    }
}

// 11 ------------------------------------------------------------------------------
void newton_oracle(verdict& v) {
    rng g(11000);
    for (int trial = 0; trial < 100; ++trial) {
        const long p = std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(g.uniform(0, 3))];
        polynomial f(1);
        std::vector<rational> roots;
        for (long i = 0; i < g.uniform(1, 6); ++i) {
            long a, b;
            do a = g.uniform(-30, 30);
            while (a == 0 || a % p == 0);
            do b = g.uniform(1, 30);
            while (b % p == 0);
            const rational root = rpow(rational(p), g.uniform(-3, 3)) * rational(a, b);
            f = f * (poly_var() - polynomial(root));
            roots.push_back(root);
        }
        std::vector<rational> direct;
        for (const auto& r : roots) direct.push_back(vp(r, p));
        auto got = compute_newton_polygon(tate_series(padic_context(static_cast<std::uint64_t>(p)), f)).root_valuations();
        std::sort(direct.begin(), direct.end());
        std::sort(got.begin(), got.end());
        v.require(got == direct, "slopes differ for " + f.to_string());
    }
}

// 12 ------------------------------------------------------------------------------
void height_additivity(verdict& v) {
    std::vector<group_descriptor> gs;
    for (unsigned n = 1; n <= 4; ++n) gs.push_back(group_descriptor::lex(n));
    gs.push_back(group_descriptor::below(rational(1, 2)));
    for (const auto& G : gs) {
        const auto chain = list_convex_subgroups(G);
        v.require(height(G) + 1 == chain.size(), "chain length of " + G.to_string());
        for (const auto& H : chain)
            v.require(height(G) == height(subgroup_as_group(H)) + height(quotient_by_convex(G, H).target()),
                      "additivity for " + G.to_string() + " / " + H.to_string());
    }
}

} // namespace

int main() {
    const std::vector<criterion> criteria{
        {1, "Spv Z enumeration and closures", 1, spv_enumeration},
        {2, "Gauss norm valuation axioms", 5, gauss_norm_axioms},
        {3, "disc evaluation cross-checks", 5, disc_evaluation},
        {4, "disc specialization combinatorics", 0, disc_specialization},
        {5, "rational subset intersection", 0, rational_intersection},
        {6, "retraction idempotent and fixing Spv(A,I)", 0, retraction},
        {7, "horizontal/vertical factorization", 0, factorization},
        {8, "finite soberness", 10, finite_soberness},
        {9, "Cech alternating vs full cohomology", 0, cech_quasi_isomorphism},
        {10, "Laurent cover exactness", 10, laurent_exactness},
        {11, "Newton polygon oracle", 0, newton_oracle},
        {12, "height additivity", 0, height_additivity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            v.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        std::printf("%s %2d  %-45s %8.3f s%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    v.ok ? "" : "  -- ", v.detail.c_str());
        failures += !v.ok;
    }
    return failures ? 1 : 0;
}
