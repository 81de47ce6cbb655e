#pragma once

// Argument parsing and dispatch for the `adic` command-line tool. Kept in a header so
// the test suite can drive the same code paths as the binary.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adic/adic.hpp"

namespace adic::cli {

using json = nlohmann::ordered_json;

/// Bad invocation; rendered as a one-line diagnostic, exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct command {
    std::string name;
    bool structured = false;

    std::string ring = "Z";
    std::uint64_t bound = 30;
    std::optional<std::uint64_t> prime;
    std::string point, poly, subset, valuation, ideal, element, kind = "laurent", group, presheaf;
    std::vector<std::string> operands;
    unsigned truncation = 20;
};

struct outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

template <class F>
auto validated(const std::string& flag, const std::string& token, F&& f) {
    try {
        return f();
    } catch (const adic::error& e) {
        throw usage_error("invalid " + flag + " '" + token + "': " + e.what());
    }
}

inline void require(const command& c, const std::string& value, const std::string& flag) {
    if (value.empty()) throw usage_error(c.name + ": missing required option " + flag);
}

inline padic_context context_of(const command& c) {
    if (!c.prime) throw usage_error(c.name + ": missing required option -p");
    return validated("-p", std::to_string(*c.prime), [&] { return padic_context(*c.prime); });
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

inline bool is_point_literal(const std::string& s) {
    for (const char* k : {"classical:", "ball:", "below:", "above:", "type4:", "deadend:"})
        if (s.starts_with(k)) return true;
    return false;
}

/// Parsed form of the operands of `specializes`: two disc points or two valuations.
struct specialization_operands {
    std::optional<disc_point> x, y;
    std::optional<adic::valuation> v, w;
};

inline specialization_operands parse_specialization_operands(const command& c) {
    if (c.operands.size() != 2) throw usage_error("specializes: expected two operands <v> <w>");
    specialization_operands out;
    const bool points = is_point_literal(c.operands[0]) && is_point_literal(c.operands[1]);
    if (points && c.ring == "Z") {
        auto ctx = context_of(c);
        out.x = validated("point", c.operands[0], [&] { return parse_disc_point(c.operands[0], ctx); });
        out.y = validated("point", c.operands[1], [&] { return parse_disc_point(c.operands[1], ctx); });
        return out;
    }
    const auto ring = validated("--ring", c.ring, [&] { return parse_base_ring(c.ring); });
    for (std::size_t i = 0; i < 2; ++i) {
        auto v = validated("valuation", c.operands[i], [&] { return parse_valuation(c.operands[i], ring, c.prime); });
        (i == 0 ? out.v : out.w) = v;
    }
    return out;
}

/// Fixed probe family {|f| <= |s| != 0} for rings without a closed-form Spv model.
inline std::vector<probe> default_probes(const base_ring& ring) {
    std::vector<ring_element> elems;
    for (const char* e : {"1", "2", "3", "5", "7", "T", "T - 1", "T + 1", "T - 2", "5*T", "T^2 + 1", "T^2 - 2"}) {
        try {
            elems.push_back(ring_element::from_polynomial(ring, parse_polynomial(e)));
        } catch (const adic::error&) {
            // not an element of this ring (T over Z, say)
        }
    }
    std::vector<probe> out;
    for (const auto& f : elems)
        for (const auto& s : elems)
            if (!(f == s)) out.push_back({f, s});
    return out;
}

} // namespace detail

/// Parses argv (without the program name). Throws usage_error on malformed input; sets
/// `name` to "help" with the help text in `operands` when help was requested.
inline command parse_args(const std::vector<std::string>& argv) {
    command c;
    CLI::App app{"Exact computations with valuations, adic points of the closed unit disc and Čech complexes.", "adic"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_prime = [&](CLI::App* s) { s->add_option("-p,--prime", c.prime, "residue characteristic p"); };

    auto* spv = app.add_subcommand("spv", "enumerate the finite model of Spv A");
    spv->add_option("--ring", c.ring, "Z, Q or Fp");
    spv->add_option("--bound", c.bound, "largest prime included");

    auto* ev = app.add_subcommand("eval", "evaluate a polynomial at a disc point, or a ring element under a valuation");
    ev->add_option("--point", c.point, "classical:c | ball:c,r | below:c,r | above:c,r");
    ev->add_option("--poly", c.poly, "polynomial in T");
    ev->add_option("--valuation", c.valuation, "padic:5 | trivial:0 | trivial:5 | deg:1/2");
    ev->add_option("--ring", c.ring, "Z, Q, Fp, Q[T] or Q(T)");
    ev->add_option("--elem", c.element, "ring element (polynomial expression)");
    add_prime(ev);

    auto* cl = app.add_subcommand("classify", "type of a disc point and its value group");
    cl->add_option("--point", c.point, "point literal")->required();
    add_prime(cl);

    auto* mem = app.add_subcommand("member", "membership of a disc point in a rational subset");
    mem->add_option("--point", c.point, "point literal")->required();
    mem->add_option("--subset", c.subset, "R(t1,...;s)")->required();
    add_prime(mem);

    auto* sp = app.add_subcommand("specializes", "is v a specialization of w (v in the closure of w)?");
    sp->add_option("operands", c.operands, "<v> <w>: two point literals (needs -p) or two valuation literals")->expected(2);
    sp->add_option("--ring", c.ring, "ring for valuation literals");
    add_prime(sp);

    auto* cov = app.add_subcommand("cover", "Laurent or rational cover of the closed unit disc");
    cov->add_option("--kind", c.kind, "laurent or rational")->check(CLI::IsMember({"laurent", "rational"}));
    cov->add_option("--gens", c.poly, "generators separated by ';'")->required();
    cov->add_option("--point", c.point, "optional point to locate in the cover");
    add_prime(cov);

    auto* cech = app.add_subcommand("cech-laurent", "finite-window exactness check for the Laurent cover of f");
    cech->add_option("--poly", c.poly, "f")->required();
    cech->add_option("-N", c.truncation, "truncation degree");
    add_prime(cech);

    auto* grp = app.add_subcommand("group", "ordered value group operations");
    grp->add_option("--group", c.group, "trivial | pos | lex:n | below:r | above:r")->required();
    grp->add_option("operands", c.operands,
                    "op and operands: mul a b | inv a | pow a n | cmp a b | height | subgroups | generated a | "
                    "quotient H [a] | cofinal a H");

    auto* ret = app.add_subcommand("retract", "retraction onto Spv(A, I)");
    ret->add_option("--valuation", c.valuation, "valuation literal")->required();
    ret->add_option("--ideal", c.ideal, "ideal literal such as (5)")->required();
    ret->add_option("--ring", c.ring, "Z, Q, Fp or Q[T]");
    add_prime(ret);

    auto* pre = app.add_subcommand("cech", "cohomology of a finite presheaf (full and alternating complexes)");
    pre->add_option("--presheaf", c.presheaf, "presheaf description file")->required();

    for (auto* s : {spv, ev, cl, mem, sp, cov, cech, grp, ret, pre}) add_format(s);

    if (!argv.empty() && !argv[0].starts_with('-')) {
        bool known = false;
        for (const auto* s : app.get_subcommands({})) known = known || s->get_name() == argv[0];
        if (!known) throw usage_error("unknown subcommand '" + argv[0] + "'");
    }
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        command h;
        h.name = "help";
        const CLI::App* target = &app;
        for (auto* s : app.get_subcommands()) target = s;
        h.operands.push_back(target->help());
        return h;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (auto nl = msg.find('\n'); nl != std::string::npos) msg.erase(nl);
        throw usage_error(msg);
    }
    c.name = app.get_subcommands().front()->get_name();
    c.structured = format == "structured";

    // Validate every literal before dispatch.
    using detail::validated;
    if (c.prime) detail::context_of(c);
    if (c.name == "spv") {
        validated("--ring", c.ring, [&] { return parse_base_ring(c.ring); });
        if (c.bound < 1) throw usage_error("invalid --bound '0': must be positive");
    } else if (c.name == "eval") {
        if (!c.valuation.empty()) {
            detail::require(c, c.element, "--elem");
            const auto ring = validated("--ring", c.ring, [&] { return parse_base_ring(c.ring); });
            validated("--valuation", c.valuation, [&] { return parse_valuation(c.valuation, ring, c.prime); });
            validated("--elem", c.element,
                      [&] { return parse_ring_element(c.element, ring); });
        } else {
            detail::require(c, c.point, "--point");
            detail::require(c, c.poly, "--poly");
            const auto ctx = detail::context_of(c);
            validated("--point", c.point, [&] { return parse_disc_point(c.point, ctx); });
            validated("--poly", c.poly, [&] { return parse_polynomial(c.poly); });
        }
    } else if (c.name == "classify" || c.name == "member") {
        const auto ctx = detail::context_of(c);
        validated("--point", c.point, [&] { return parse_disc_point(c.point, ctx); });
        if (c.name == "member") validated("--subset", c.subset, [&] { return parse_rational_subset(c.subset, ctx); });
    } else if (c.name == "specializes") {
        detail::parse_specialization_operands(c);
    } else if (c.name == "cover") {
        const auto ctx = detail::context_of(c);
        const auto gens = detail::split(c.poly, ';');
        if (gens.empty()) throw usage_error("invalid --gens '': no generators");
        if (c.kind == "laurent" && gens.size() != 1)
            throw usage_error("invalid --gens '" + c.poly + "': a Laurent cover takes exactly one generator");
        for (const auto& g : gens) validated("--gens", g, [&] { return parse_polynomial(g); });
        if (!c.point.empty()) validated("--point", c.point, [&] { return parse_disc_point(c.point, ctx); });
    } else if (c.name == "cech-laurent") {
        detail::context_of(c);
        validated("--poly", c.poly, [&] { return parse_polynomial(c.poly); });
    } else if (c.name == "group") {
        validated("--group", c.group, [&] { return parse_group_descriptor(c.group); });
        if (c.operands.empty()) throw usage_error("group: missing operation");
        static const std::map<std::string, std::size_t> arity{{"mul", 2},      {"inv", 1},       {"pow", 2},
                                                              {"cmp", 2},      {"height", 0},    {"subgroups", 0},
                                                              {"generated", 1}, {"quotient", 1}, {"cofinal", 2}};
        auto it = arity.find(c.operands[0]);
        if (it == arity.end()) throw usage_error("group: unknown operation '" + c.operands[0] + "'");
        const std::size_t given = c.operands.size() - 1;
        if (given != it->second && !(c.operands[0] == "quotient" && given == 2))
            throw usage_error("group: '" + c.operands[0] + "' takes " + std::to_string(it->second) + " operand(s)");
    } else if (c.name == "retract") {
        const auto ring = validated("--ring", c.ring, [&] { return parse_base_ring(c.ring); });
        validated("--valuation", c.valuation, [&] { return parse_valuation(c.valuation, ring, c.prime); });
        validated("--ideal", c.ideal, [&] { return parse_ideal(c.ideal, ring); });
    }
    return c;
}

namespace detail {

struct rendered {
    std::string text;
    json doc;
};

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

inline std::string valuation_kind_name(const adic::valuation& v) {
    if (v.as<trivial_valuation>()) return "trivial";
    if (v.as<padic_valuation_kind>()) return "padic";
    if (v.as<degree_valuation>()) return "degree";
    return "disc";
}

inline rendered run_spv(const command& c) {
    const auto model = spv_enumerate(parse_base_ring(c.ring), c.bound);
    const auto& X = model.space;
    rendered r;
    r.doc["ring"] = model.ring.to_string();
    r.doc["bound"] = c.bound;
    r.doc["points"] = json::array();
    r.text = "label | kind | supp | closure\n";
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::vector<std::string> cl;
        for (auto j : closure(X, {i})) cl.push_back(X.label(j));
        const auto& v = model.valuations[i];
        r.text += X.label(i) + " | " + valuation_kind_name(v) + " | " + model.supports[i].to_string() + " | {" +
                  join(cl, ", ") + "}\n";
        r.doc["points"].push_back({{"label", X.label(i)},
                                   {"literal", v.to_string()},
                                   {"kind", valuation_kind_name(v)},
                                   {"supp", model.supports[i].to_string()},
                                   {"closure", cl}});
    }
    r.text += "\nrelation: row is a specialization of column\n";
    std::size_t width = 0;
    for (const auto& l : X.labels()) width = std::max(width, l.size());
    std::string header(width, ' ');
    for (std::size_t j = 0; j < X.size(); ++j) header += " " + std::to_string(j % 10);
    r.text += header + "\n";
    json rel = json::array();
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::string row = X.label(i) + std::string(width - X.label(i).size(), ' ');
        for (std::size_t j = 0; j < X.size(); ++j) {
            row += X.specializes(i, j) ? " 1" : " .";
            if (X.specializes(i, j) && i != j) rel.push_back({X.label(i), X.label(j)});
        }
        r.text += row + "\n";
    }
    r.text += "generic points: ";
    point_set all;
    for (std::size_t i = 0; i < X.size(); ++i) all.insert(i);
    std::vector<std::string> gen;
    for (auto g : generic_points(X, all)) gen.push_back(X.label(g));
    r.text += join(gen, ", ") + "\n";
    r.doc["specializations"] = rel;
    r.doc["generic_points"] = gen;
    return r;
}

inline rendered run_eval(const command& c) {
    rendered r;
    if (!c.valuation.empty()) {
        const auto ring = parse_base_ring(c.ring);
        const auto v = parse_valuation(c.valuation, ring, c.prime);
        const auto a = parse_ring_element(c.element, ring);
        const auto val = eval(v, a);
        r.text = val.to_string() + "\n";
        r.doc = {{"valuation", v.to_string()}, {"ring", ring.to_string()}, {"element", a.to_string()},
                 {"value", val.to_string()}};
        return r;
    }
    const auto ctx = context_of(c);
    const auto x = parse_disc_point(c.point, ctx);
    const tate_series f(ctx, parse_polynomial(c.poly));
    const auto val = eval_at(x, f);
    r.text = val.to_string() + "\n";
    r.doc = {{"point", x.to_string()}, {"poly", f.to_string()}, {"p", ctx.prime()}, {"value", val.to_string()}};
    return r;
}

inline rendered run_classify(const command& c) {
    const auto x = parse_disc_point(c.point, context_of(c));
    const auto t = classify(x);
    const auto g = point_value_group(x);
    rendered r;
    r.text = std::string(point_type_name(t)) + "\nvalue group: " + g.to_string() + "\n";
    r.doc = {{"point", x.to_string()}, {"type", std::string(point_type_name(t))}, {"value_group", g.to_string()}};
    if (t == point_type::type5_below || t == point_type::type5_above) {
        const auto b = height1_generization(x);
        r.text += "generization: " + b.to_string() + "\n";
        r.doc["generization"] = b.to_string();
    }
    return r;
}

inline rendered run_member(const command& c) {
    const auto ctx = context_of(c);
    const auto x = parse_disc_point(c.point, ctx);
    const auto s = parse_rational_subset(c.subset, ctx);
    const bool in = in_rational_subset(x, s);
    rendered r;
    r.text = std::string(in ? "true" : "false") + "\n";
    r.doc = {{"point", x.to_string()}, {"subset", s.to_string()}, {"member", in}};
    return r;
}

inline rendered run_specializes(const command& c) {
    const auto ops = parse_specialization_operands(c);
    rendered r;
    if (ops.x) {
        const bool holds = disc_specializes(*ops.x, *ops.y);
        r.text = std::string(holds ? "true" : "false") + "\nmethod: exact\n";
        r.doc = {{"v", ops.x->to_string()}, {"w", ops.y->to_string()}, {"specializes", holds}, {"method", "exact"}};
        return r;
    }
    const auto& v = *ops.v;
    const auto& w = *ops.w;
    const auto probes = default_probes(v.ring());
    const auto res = specializes(v, w, probes);
    r.text = std::string(res.holds ? "true" : "false") + "\nmethod: " + (res.exact ? "exact" : "probes") + "\n";
    r.doc = {{"v", v.to_string()}, {"w", w.to_string()}, {"specializes", res.holds},
             {"method", res.exact ? "exact" : "probes"}};
    if (!res.exact) {
        r.text += "probes: " + std::to_string(res.probes.size()) + "\n";
        r.doc["probes"] = res.probes.size();
    }
    if (res.witness) {
        const std::string wit = "|" + res.witness->f.to_string() + "| <= |" + res.witness->s.to_string() + "| != 0";
        r.text += "witness: " + wit + "\n";
        r.doc["witness"] = wit;
    }
    return r;
}

inline rendered run_cover(const command& c) {
    const auto ctx = context_of(c);
    std::vector<tate_series> gens;
    for (const auto& g : split(c.poly, ';')) gens.emplace_back(ctx, parse_polynomial(g));
    const auto cov = c.kind == "laurent" ? laurent_cover(gens.front()) : rational_cover(gens);
    rendered r;
    r.text = "kind: " + c.kind + "\n";
    r.doc["kind"] = c.kind;
    r.doc["p"] = ctx.prime();
    std::vector<std::string> members;
    for (std::size_t i = 0; i < cov.members.size(); ++i) {
        members.push_back(cov.members[i].to_string());
        r.text += "U" + std::to_string(i) + " = " + members.back() + "\n";
    }
    r.doc["members"] = members;
    if (!c.point.empty()) {
        const auto x = parse_disc_point(c.point, ctx);
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < cov.members.size(); ++i)
            if (in_rational_subset(x, cov.members[i])) in.push_back(i);
        std::vector<std::string> names;
        for (auto i : in) names.push_back("U" + std::to_string(i));
        r.text += x.to_string() + " lies in: " + join(names, ", ") + "\n";
        r.doc["point"] = x.to_string();
        r.doc["containing_members"] = in;
    }
    return r;
}

inline rendered run_cech_laurent(const command& c) {
    const auto ctx = context_of(c);
    const auto rep = check_laurent_exactness(tate_series(ctx, parse_polynomial(c.poly)), c.truncation);
    rendered r;
    r.text = rep.to_text();
    json checks = json::array();
    for (const auto& ch : rep.checks) {
        json ranks;
        for (const auto& [k, v] : ch.ranks) ranks[k] = v;
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"ranks", ranks}});
    }
    r.doc = {{"f", rep.f},         {"p", rep.p},      {"N", rep.window}, {"coefficient_degree", rep.coeff_degree},
             {"checks", checks}, {"notes", rep.notes}, {"exact", rep.exact()}};
    return r;
}

inline std::string ordering_name(std::strong_ordering o) {
    return o < 0 ? "LT" : o > 0 ? "GT" : "EQ";
}

inline rendered run_group(const command& c) {
    const auto g = parse_group_descriptor(c.group);
    const auto& op = c.operands[0];
    auto elem = [&](std::size_t i) { return parse_group_element(c.operands[i], &g); };
    auto check_in = [&](const group_element& a) {
        if (a.group() != g) throw error(errc::mismatched_groups, a.to_string() + " is not in " + g.to_string());
        return a;
    };
    std::string result;
    if (op == "mul") result = group_mul(check_in(elem(1)), check_in(elem(2))).to_string();
    else if (op == "inv") result = group_inv(check_in(elem(1))).to_string();
    else if (op == "pow") {
        const rational n = parse_rational(c.operands[2]);
        if (n.get_den() != 1) throw error(errc::invalid_argument, "exponent must be an integer");
        result = group_pow(check_in(elem(1)), n.get_num().get_si()).to_string();
    } else if (op == "cmp") result = ordering_name(group_cmp(check_in(elem(1)), check_in(elem(2))));
    else if (op == "height") result = std::to_string(height(g));
    else if (op == "subgroups") {
        std::vector<std::string> names;
        for (const auto& h : list_convex_subgroups(g)) names.push_back(h.to_string());
        result = join(names, ", ");
    } else if (op == "generated") result = convex_subgroup_generated(check_in(elem(1))).to_string();
    else if (op == "quotient") {
        const auto h = parse_convex_subgroup(c.operands[1], g);
        const auto q = quotient_by_convex(g, h);
        result = q.target().to_string();
        if (c.operands.size() == 3) result += "\n" + q(check_in(elem(2))).to_string();
    } else if (op == "cofinal") {
        result = is_cofinal(check_in(elem(1)), parse_convex_subgroup(c.operands[2], g)) ? "true" : "false";
    }
    rendered r;
    r.text = result + "\n";
    r.doc = {{"group", g.to_string()},
             {"op", op},
             {"operands", std::vector<std::string>(c.operands.begin() + 1, c.operands.end())},
             {"result", split(result, '\n')}};
    return r;
}

inline rendered run_retract(const command& c) {
    const auto ring = parse_base_ring(c.ring);
    const auto v = parse_valuation(c.valuation, ring, c.prime);
    const auto i = parse_ideal(c.ideal, ring);
    const auto cg = c_gamma_i(v, i);
    const auto rv = retract(v, i);
    rendered r;
    r.text = rv.to_string() + "\ncGamma_I: " + cg.to_string() + "\nin Spv(A, I): " + (in_spv_ai(v, i) ? "true" : "false") +
             "\n";
    r.doc = {{"valuation", v.to_string()}, {"ideal", i.to_string()}, {"c_gamma_i", cg.to_string()},
             {"in_spv_ai", in_spv_ai(v, i)}, {"retract", rv.to_string()}};
    return r;
}

inline rendered run_cech(const command& c) {
    std::ifstream in(c.presheaf);
    if (!in) throw error(errc::invalid_argument, "cannot open presheaf file '" + c.presheaf + "'");
    const auto p = parse_presheaf(in);
    const auto full = cohomology(build_complex(p));
    const auto alt = cohomology(alternating_subcomplex(p));
    auto fmt = [](const std::vector<std::size_t>& v) {
        std::vector<std::string> s;
        for (auto x : v) s.push_back(std::to_string(x));
        return "(" + join(s, ", ") + ")";
    };
    rendered r;
    r.text = "cover size: " + std::to_string(p.cover_size()) + "\nfull complex H^q: " + fmt(full) +
             "\nalternating complex H^q: " + fmt(alt) + "\nagree: " + (full == alt ? "true" : "false") + "\n";
    r.doc = {{"cover_size", p.cover_size()}, {"full", full}, {"alternating", alt}, {"agree", full == alt}};
    return r;
}

} // namespace detail

inline outcome run(const command& c) {
    if (c.name == "help") return {0, c.operands.empty() ? std::string() : c.operands.front(), ""};
    try {
        detail::rendered r;
        if (c.name == "spv") r = detail::run_spv(c);
        else if (c.name == "eval") r = detail::run_eval(c);
        else if (c.name == "classify") r = detail::run_classify(c);
        else if (c.name == "member") r = detail::run_member(c);
        else if (c.name == "specializes") r = detail::run_specializes(c);
        else if (c.name == "cover") r = detail::run_cover(c);
        else if (c.name == "cech-laurent") r = detail::run_cech_laurent(c);
        else if (c.name == "group") r = detail::run_group(c);
        else if (c.name == "retract") r = detail::run_retract(c);
        else if (c.name == "cech") r = detail::run_cech(c);
        else return {2, "", "error: unknown subcommand '" + c.name + "'\n"};
        return {0, c.structured ? r.doc.dump(2) + "\n" : r.text, ""};
    } catch (const adic::error& e) {
        if (c.structured) {
            json doc = {{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
            return {1, doc.dump(2) + "\n", ""};
        }
        return {1, "", std::string(e.what()) + "\n"};
    }
}

/// parse_args + run, with usage errors mapped to exit code 2.
inline outcome execute(const std::vector<std::string>& argv) {
    try {
        return run(parse_args(argv));
    } catch (const usage_error& e) {
        return {2, "", std::string("usage error: ") + e.what() + "\n"};
    }
}

} // namespace adic::cli
