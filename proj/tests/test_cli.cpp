#include <gtest/gtest.h>

#include <algorithm>

#include "cli_app.hpp"
#include "support.hpp"

using namespace adic;
using adic::cli::execute;
using adic::cli::parse_args;
using adic::cli::usage_error;
using json = nlohmann::json;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string sample(const char* name) { return std::string(ADIC_SAMPLES_DIR) + "/" + name; }

} // namespace

TEST(Cli, ParseExamples) {
    const auto spv = parse_args({"spv", "--ring", "Z", "--bound", "5"});
    EXPECT_EQ(spv.name, "spv");
    EXPECT_EQ(spv.ring, "Z");
    EXPECT_EQ(spv.bound, 5u);
    EXPECT_FALSE(spv.structured);
    const auto ev = parse_args({"eval", "--point", "ball:0,1", "--poly", "5*T+1", "-p", "5"});
    EXPECT_EQ(ev.name, "eval");
    EXPECT_EQ(ev.point, "ball:0,1");
    EXPECT_EQ(ev.poly, "5*T+1");
    EXPECT_EQ(ev.prime, 5u);
    const auto cl = parse_args({"cech-laurent", "--poly", "T", "-N", "20", "--prime", "5", "--format", "structured"});
    EXPECT_EQ(cl.truncation, 20u);
    EXPECT_TRUE(cl.structured);
    const auto grp = parse_args({"group", "--group", "lex:2", "mul", "(1,2)", "(3,-1)"});
    EXPECT_EQ(grp.operands, (std::vector<std::string>{"mul", "(1,2)", "(3,-1)"}));
}

TEST(Cli, UsageErrorsNameTheOffendingToken) {
    auto message_of = [](std::vector<std::string> argv) -> std::string {
        try {
            parse_args(argv);
        } catch (const usage_error& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message_of({"eval", "--point", "ball:0,2", "-p", "5", "--poly", "T"}).find("ball:0,2"), std::string::npos);
    EXPECT_NE(message_of({"eval", "--point", "ball:0,1", "-p", "6", "--poly", "T"}).find("6"), std::string::npos);
    EXPECT_NE(message_of({"spv", "--ring", "R"}).find("R"), std::string::npos);
    EXPECT_NE(message_of({"spv", "--bogus"}).find("--bogus"), std::string::npos);
    EXPECT_NE(message_of({"frobnicate"}).find("frobnicate"), std::string::npos);
    EXPECT_NE(message_of({"group", "--group", "lex:2", "twist"}).find("twist"), std::string::npos);
    EXPECT_NE(message_of({"eval", "--point", "type4:0", "-p", "5", "--poly", "T"}).find("type4:0"), std::string::npos);
    EXPECT_FALSE(message_of({}).empty());
    EXPECT_NE(message_of({"cover", "--kind", "laurent", "--gens", "T;T-1", "-p", "5"}).find("T;T-1"), std::string::npos);
    for (std::vector<std::string> argv : {std::vector<std::string>{"eval", "--point", "ball:0,2", "-p", "5", "--poly", "T"},
                                          std::vector<std::string>{"retract", "--valuation", "padic:4", "--ideal", "(5)"}}) {
        const auto o = execute(argv);
        EXPECT_EQ(o.exit_code, 2);
        EXPECT_EQ(count_lines(o.err), 1u);
        EXPECT_TRUE(o.err.starts_with("usage error: "));
    }
}

TEST(Cli, Help) {
    const auto top = execute({"--help"});
    EXPECT_EQ(top.exit_code, 0);
    EXPECT_NE(top.out.find("cech-laurent"), std::string::npos);
    const auto sub = execute({"member", "--help"});
    EXPECT_EQ(sub.exit_code, 0);
    EXPECT_NE(sub.out.find("--subset"), std::string::npos);
}

TEST(Cli, SpvTable) {
    const auto o = execute({"spv", "--ring", "Z", "--bound", "5"});
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(first_line(o.out), "label | kind | supp | closure");
    EXPECT_NE(o.out.find("|.|_5 | padic | (0) | {|.|_5, |.|_0,5}\n"), std::string::npos);
    EXPECT_NE(o.out.find("generic points: |.|_0\n"), std::string::npos);
    std::size_t rows = 0;
    for (std::size_t pos = 0; (pos = o.out.find(" | {", pos)) != std::string::npos; ++pos) ++rows;
    EXPECT_EQ(rows, 7u);
    EXPECT_EQ(json::parse(execute({"spv", "--ring", "Q", "--bound", "5", "--format", "structured"}).out)["points"].size(), 4u);
    EXPECT_EQ(json::parse(execute({"spv", "--ring", "F7", "--format", "structured"}).out)["points"].size(), 1u);
}

TEST(Cli, EvaluationAndClassification) {
    EXPECT_EQ(execute({"eval", "--point", "ball:0,1", "--poly", "5*T+1", "-p", "5"}).out, "1\n");
    EXPECT_EQ(execute({"eval", "--point", "classical:1/2", "--poly", "T-1/2", "-p", "5"}).out, "0\n");
    EXPECT_EQ(execute({"eval", "--point", "ball:0,1/5", "--poly", "T^2", "-p", "5"}).out, "1/25\n");
    EXPECT_EQ(execute({"eval", "--valuation", "padic:5", "--ring", "Q", "--elem", "50"}).out, "1/25\n");
    EXPECT_EQ(execute({"eval", "--valuation", "deg:1/2", "--ring", "Q(T)", "--elem", "(T^2+1)/T^3"}).out, "1/2\n");
}

TEST(Cli, ClassifyOutput) {
    EXPECT_EQ(execute({"classify", "--point", "below:0,1/5", "-p", "5"}).out,
              "Type5Below\nvalue group: below:1/5\ngenerization: ball:0,1/5\n");
    EXPECT_EQ(first_line(execute({"classify", "--point", "ball:0,1/5", "-p", "5"}).out), "Type2");
    EXPECT_EQ(first_line(execute({"classify", "--point", "ball:0,1/2", "-p", "5"}).out), "Type3");
    EXPECT_EQ(first_line(execute({"classify", "--point", "classical:3", "-p", "5"}).out), "Type1");
}

TEST(Cli, MembershipCoversAndSpecialization) {
    EXPECT_EQ(execute({"member", "--point", "classical:1", "--subset", "R(T;1)", "-p", "5"}).out, "true\n");
    EXPECT_EQ(execute({"member", "--point", "classical:1", "--subset", "R(1;5)", "-p", "5"}).out, "false\n");
    const auto cov = execute({"cover", "--kind", "laurent", "--gens", "5*T+1", "--point", "ball:0,1", "-p", "5"});
    EXPECT_EQ(cov.exit_code, 0);
    EXPECT_NE(cov.out.find("lies in: U0, U1"), std::string::npos);
    const auto bad = execute({"cover", "--kind", "rational", "--gens", "T;T", "-p", "5"});
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_TRUE(bad.err.starts_with("NotUnitIdeal"));
    EXPECT_EQ(execute({"specializes", "below:0,1/5", "ball:0,1/5", "-p", "5"}).out, "true\nmethod: exact\n");
    EXPECT_EQ(execute({"specializes", "ball:0,1/5", "below:0,1/5", "-p", "5"}).out, "false\nmethod: exact\n");
    EXPECT_EQ(execute({"specializes", "trivial:5", "padic:5", "--ring", "Z"}).out, "true\nmethod: exact\n");
    const auto probed = execute({"specializes", "trivial:0", "trivial:T", "--ring", "Q[T]"});
    EXPECT_TRUE(probed.out.starts_with("false\nmethod: probes\n"));
    EXPECT_NE(probed.out.find("witness: "), std::string::npos);
}

TEST(Cli, GroupAndRetract) {
    EXPECT_EQ(execute({"group", "--group", "lex:2", "mul", "(1,2)", "(3,-1)"}).out, "(4,1)\n");
    EXPECT_EQ(execute({"group", "--group", "lex:2", "cmp", "(0,5)", "(1,-9)"}).out, "LT\n");
    EXPECT_EQ(execute({"group", "--group", "below:1/2", "height"}).out, "2\n");
    EXPECT_EQ(execute({"group", "--group", "below:1/2", "subgroups"}).out, "TrivialSub, Infinitesimal, Full\n");
    EXPECT_EQ(execute({"group", "--group", "below:1/2", "quotient", "Infinitesimal", "3*g^1@1/2<"}).out, "pos\n3/2\n");
    EXPECT_EQ(execute({"group", "--group", "pos", "cofinal", "1/5", "Full"}).out, "true\n");
    EXPECT_EQ(execute({"group", "--group", "lex:2", "inv", "(1,2)", "--format", "structured"}).exit_code, 0);
    EXPECT_EQ(execute({"group", "--group", "lex:2", "mul", "(1,2)", "(1,2,3)"}).exit_code, 1);
    EXPECT_EQ(execute({"retract", "--valuation", "padic:5", "--ideal", "(5)", "--ring", "Z"}).out,
              "padic:5\ncGamma_I: Full\nin Spv(A, I): true\n");
    EXPECT_EQ(first_line(execute({"retract", "--valuation", "trivial:0", "--ideal", "(5)", "--ring", "Z"}).out), "trivial:0");
}

TEST(Cli, CechCommands) {
    const auto o = execute({"cech-laurent", "--poly", "T", "-N", "20", "-p", "5"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_NE(o.out.find("exact: true"), std::string::npos);
    EXPECT_NE(o.out.find("rank lambda = "), std::string::npos);
    const auto small = execute({"cech-laurent", "--poly", "T^3", "-N", "4", "-p", "5"});
    EXPECT_EQ(small.exit_code, 1);
    EXPECT_TRUE(small.err.starts_with("TruncationTooSmall"));
    EXPECT_EQ(execute({"cech", "--presheaf", sample("two_sets.presheaf")}).out,
              "cover size: 2\nfull complex H^q: (1, 0)\nalternating complex H^q: (1, 0)\nagree: true\n");
    const auto circle = json::parse(execute({"cech", "--presheaf", sample("circle.presheaf"), "--format", "structured"}).out);
    EXPECT_EQ(circle["full"], json::array({1, 1, 0}));
    EXPECT_EQ(circle["agree"], true);
    EXPECT_EQ(execute({"cech", "--presheaf", sample("no_such_file")}).exit_code, 1);
}

TEST(Cli, StructuredOutputMirrorsText) {
    const auto doc = json::parse(execute({"eval", "--point", "ball:0,1", "--poly", "5*T+1", "-p", "5", "--format", "structured"}).out);
    EXPECT_EQ(doc["value"], "1");
    const auto lau = json::parse(execute({"cech-laurent", "--poly", "5*T+1", "-p", "5", "--format", "structured"}).out);
    EXPECT_EQ(lau["exact"], true);
    EXPECT_EQ(lau["checks"].size(), 3u);
    const auto err = execute({"cover", "--kind", "rational", "--gens", "T;T", "-p", "5", "--format", "structured"});
    EXPECT_EQ(err.exit_code, 1);
    EXPECT_EQ(json::parse(err.out)["error"], "NotUnitIdeal");
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::vector<std::string>> runs{
        {"spv", "--ring", "Z", "--bound", "30"},
        {"spv", "--ring", "Z", "--bound", "30", "--format", "structured"},
        {"cech-laurent", "--poly", "T^2-5", "-p", "5"},
        {"cover", "--kind", "rational", "--gens", "T;T-1;5", "--point", "above:0,1/5", "-p", "5"},
        {"specializes", "trivial:0", "trivial:T", "--ring", "Q[T]"},
    };
    for (const auto& argv : runs) {
        const auto a = execute(argv), b = execute(argv);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
        EXPECT_EQ(a.exit_code, b.exit_code);
    }
}

TEST(Cli, RenderedValuesReparse) {
    testing_support::rng g(71);
    const padic_context p5(5);
    for (int i = 0; i < 200; ++i) {
        const auto x = g.disc_point(p5);
        const auto f = g.polynomial(5, 5);
        const auto o = execute({"eval", "--point", x.to_string(), "--poly", f.to_string(), "-p", "5"});
        ASSERT_EQ(o.exit_code, 0) << o.err;
        const std::string text = first_line(o.out);
        const value expected = eval_at(x, tate_series(p5, f));
        const auto group = point_value_group(x);
        EXPECT_EQ(parse_value(text, &group), expected) << text;
        // Point literals themselves round-trip through the command line.
        EXPECT_TRUE(point_eq(parse_disc_point(x.to_string(), p5), x).equal);
    }
    for (const char* lit : {"padic:5", "trivial:0", "trivial:7"}) {
        const auto o = execute({"retract", "--valuation", lit, "--ideal", "(5)", "--ring", "Z"});
        EXPECT_EQ(first_line(o.out), lit);
    }
}
