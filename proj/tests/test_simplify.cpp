#include <doctest.h>

#include "netsr/parse.hpp"
#include "netsr/simplify.hpp"
#include "netsr/treegen.hpp"

using namespace netsr;

namespace {
std::string simp(const std::string& text) {
    return format_generator(simplify(parse_generator(text)));
}

EdgeContext random_ctx(Rng& rng, bool directed) {
    EdgeContext ctx;
    ctx.i = static_cast<NodeId>(rand_index(rng, 200));
    ctx.j = static_cast<NodeId>(rand_index(rng, 199));
    if (ctx.j >= ctx.i) ++ctx.j;
    ctx.k_i = static_cast<double>(rand_index(rng, 25));
    ctx.k_j = static_cast<double>(rand_index(rng, 25));
    ctx.kin_i = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_i;
    ctx.kin_j = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_j;
    ctx.kout_i = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_i;
    ctx.kout_j = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_j;
    ctx.d = static_cast<double>(1 + rand_index(rng, 10));
    ctx.dd = directed ? static_cast<double>(1 + rand_index(rng, 10)) : ctx.d;
    ctx.dr = directed ? static_cast<double>(1 + rand_index(rng, 10)) : ctx.d;
    ctx.xi = rand_unit(rng);
    return ctx;
}
}  // namespace

TEST_CASE("identity eliminations") {
    CHECK(simp("(* k_i 1)") == "k_i");
    CHECK(simp("(* 1 k_i)") == "k_i");
    CHECK(simp("(+ k_i 0)") == "k_i");
    CHECK(simp("(+ 0 k_i)") == "k_i");
    CHECK(simp("(- k_i 0)") == "k_i");
    CHECK(simp("(- d d)") == "0");
    CHECK(simp("(* k_i 0)") == "0");
    CHECK(simp("(/ 0 d)") == "0");
    CHECK(simp("(/ k_i 1)") == "k_i");
    CHECK(simp("(pow k_i 1)") == "k_i");
    CHECK(simp("(pow k_i 0)") == "1");
    CHECK(simp("(pow 1 d)") == "1");
    CHECK(simp("(min d d)") == "d");
    CHECK(simp("(abs (abs d))") == "(abs d)");
}

TEST_CASE("decidable conditionals collapse") {
    CHECK(simp("(> 3 2 k_i d)") == "k_i");
    CHECK(simp("(< 3 2 k_i d)") == "d");
    CHECK(simp("(= 2 2 k_i d)") == "k_i");
    CHECK(simp("(=0 0 k_i d)") == "k_i");
    CHECK(simp("(=0 5 k_i d)") == "d");
    CHECK(simp("(> k_i d xi xi)") == "xi");  // equal branches
}

TEST_CASE("affinity and phase-switch reductions") {
    CHECK(simp("(delta 0.5 k_i k_i)") == "k_i");
    CHECK(simp("(delta 1 k_i d)") == "k_i");
    CHECK(simp("(delta 2.5 k_i d)") == "k_i");
    CHECK(simp("(delta -0.25 k_i d)") == "d");
    CHECK(simp("(delta 0.5 k_i d)") == "(delta 0.5 k_i d)");  // genuinely dynamic
    CHECK(simp("(psi 1 k_i d)") == "k_i");
    CHECK(simp("(psi 0.2 k_i d)") == "k_i");  // rounds to one group
    CHECK(simp("(psi 3 d d)") == "d");
    CHECK(simp("(psi 3 k_i d)") == "(psi 3 k_i d)");
}

TEST_CASE("constant folding uses protected arithmetic") {
    CHECK(simp("(+ 1 2)") == "3");
    CHECK(simp("(/ 5 0)") == "0");
    CHECK(simp("(log -1)") == "0");
    CHECK(simp("(exp 0)") == "1");
    CHECK(simp("(* (+ 1 2) (+ 2 2))") == "12");
}

TEST_CASE("fixpoint reaches nested reductions") {
    CHECK(simp("(+ (* k_i 1) 0)") == "k_i");
    CHECK(simp("(* (pow d 1) (pow k_i 0))") == "d");
}

TEST_CASE("simplify preserves evaluation exactly") {
    Rng rng(2718);
    InitParams params;
    const int trees = 1000;
    const int contexts = 1000;
    std::vector<EdgeContext> ctxs;
    ctxs.reserve(contexts);
    for (int c = 0; c < contexts; ++c) ctxs.push_back(random_ctx(rng, c % 2 == 0));

    for (int t = 0; t < trees; ++t) {
        params.directed = t % 2 == 0;
        GeneratorTree tree = random_tree(params, rng);
        GeneratorTree reduced = simplify(tree);
        CHECK(well_formed(reduced));
        CHECK(reduced.size() <= tree.size());
        for (const EdgeContext& ctx : ctxs) {
            double a = evaluate(tree, ctx);
            double b = evaluate(reduced, ctx);
            if (a != b) {
                CAPTURE(format_generator(tree));
                CAPTURE(format_generator(reduced));
                REQUIRE(a == b);
            }
        }
    }
}

TEST_CASE("simplify is idempotent") {
    Rng rng(999);
    InitParams params;
    for (int t = 0; t < 300; ++t) {
        GeneratorTree tree = random_tree(params, rng);
        GeneratorTree once = simplify(tree);
        GeneratorTree twice = simplify(once);
        CHECK(structurally_equal(once, twice));
    }
}
