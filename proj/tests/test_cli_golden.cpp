// Golden-file checks: each documented invocation must reproduce its committed
// JSON output byte for byte (plus the documented exit code).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "golden_cases.h"
#include "schurlab/expr.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/lambda_calculus.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_binary, g_golden_dir;

std::pair<int, std::string> run(const std::string& args) {
    std::string cmd = g_binary + " --format json " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("golden invocations") {
    for (auto& c : golden_cases()) {
        CAPTURE(c.name);
        auto [code, out] = run(c.args);
        CHECK(code == c.expected_exit);
        std::ifstream golden(g_golden_dir + "/" + c.name + ".json", std::ios::binary);
        REQUIRE_MESSAGE(golden.good(), "missing golden file for ", c.name);
        std::stringstream want;
        want << golden.rdbuf();
        CHECK_MESSAGE(out == want.str(), "output drift for ", c.name);
    }
}

TEST_CASE("usage errors exit with code 2") {
    auto [code, out] = run("schur expand 'e2 +'");
    CHECK(code == 2);
    auto [code2, out2] = run("ring lambda --ring nosuch --elem gen --n 2");
    CHECK(code2 == 2);
    auto [code3, out3] = run("schur");
    CHECK(code3 == 2);
    auto [code4, out4] = run("nosuchcmd");
    CHECK(code4 == 2);
}

TEST_CASE("cap errors exit with code 3") {
    auto [code, out] = run("ring lambda --ring free --elem gen --n 20");
    CHECK(code == 3);
}

TEST_CASE("precondition errors exit with code 4") {
    auto [code, out] = run("ring hooksplit --ring free --elem gen");
    CHECK(code == 4);
}

TEST_CASE("parallel partition scans produce identical output") {
    auto [code1, out1] =
        run("ring bound --ring table:lambda2-3 --elem x --lambda [1,1] --max 6");
    auto [code2, out2] =
        run("--parallel 4 ring bound --ring table:lambda2-3 --elem x --lambda [1,1] --max 6");
    CHECK(code1 == code2);
    CHECK(out1 == out2);
}

TEST_CASE("env var sets the default cap only when the flag is absent") {
    std::string saved_bin = g_binary;
    g_binary = "SCHURLAB_MAX_DEGREE=20 " + saved_bin;
    auto [code, out] = run("ring lambda --ring free --elem gen --n 14");
    CHECK(code == 0);
    auto [code2, out2] = run("--max-degree 12 ring lambda --ring free --elem gen --n 14");
    CHECK(code2 == 3);
    g_binary = saved_bin;
}

TEST_CASE("json schemas round-trip") {
    using namespace schurlab;
    SymFunc f = SymFunc::schur(Partition{2, 1}, 3) - SymFunc::one() +
                SymFunc::schur(Partition{4}, Int("123456789012345678901234567890"));
    CHECK(symfunc_from_json(symfunc_to_json(f)) == f);

    for (auto preset : {"free", "even:2", "odd:1", "quot:[2,1]", "binomial", "split:3",
                        "table:lambda2-3", "table:i2+i11"}) {
        RingPtr R = ring_from_preset(preset, 12);
        RingPtr back = ring_from_json(ring_to_json(*R), 12);
        CHECK(back->describe() == R->describe());
    }
    {
        RingPtr T = LambdaRing::tensor({LambdaRing::even_free(1), LambdaRing::odd_free(2)});
        CHECK(ring_from_json(ring_to_json(*T), 12)->describe() == T->describe());
        RingElement x = T->var(0) * T->var(1) - T->one() * Int(7);
        RingElement back = element_from_json(T, element_to_json(x));
        CHECK(back.poly() == x.poly());
    }
    {
        RingPtr Q = LambdaRing::schur_quotient(Partition{2, 1});
        RingElement x = Q->lambda_op(Q->generator(), 3);
        CHECK(element_from_json(Q, element_to_json(x)).sym() == x.sym());
    }
    {
        RingPtr Z = LambdaRing::binomial_ring(2);
        RingElement v = Z->from_coords({3, -5});
        CHECK(element_from_json(Z, element_to_json(v)) == v);
    }
    {
        RingPtr A = LambdaRing::line_poly(LambdaRing::schur_quotient(Partition{2, 1}));
        RingElement y = A->embed_base(A->line_base()->generator()) + A->generator();
        RingElement back = element_from_json(A, element_to_json(y));
        CHECK(back.line() == y.line());
    }

    // universal polynomial record schema
    Json j = lambda_poly_to_json(composition_polynomial(2, 3));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    for (auto& rec : j) {
        CHECK(rec.contains("coeff"));
        CHECK(rec.contains("monomial"));
    }
}

TEST_CASE("series input file on stdin") {
    using namespace schurlab;
    std::string payload =
        R"({"ring": "quot:[2,2]", "element": {"[1]": "1"}, "series": "lambda_t"})";
    std::string cmd = "printf '%s' '" + payload + "' | " + g_binary +
                      " --format json series detrat --input - --m 2 --n0 2 --N 10 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("\"pass\":true") != std::string::npos);
}

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        if (i >= argc - 2) continue; // binary path and golden dir
        args.push_back(argv[i]);
    }
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli_golden [doctest args] BINARY GOLDEN_DIR\n");
        return 1;
    }
    g_binary = argv[argc - 2];
    g_golden_dir = argv[argc - 1];
    context.applyCommandLine(static_cast<int>(args.size()), args.data());
    return context.run();
}
