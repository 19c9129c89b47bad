#include <doctest.h>

#include "netsr/parse.hpp"
#include "netsr/treegen.hpp"

using namespace netsr;

TEST_CASE("parses the delta shorthand pair") {
    auto tree = parse_generator("(delta 0.5 k (pow k k))");
    REQUIRE(tree.node(0).kind == NodeKind::Delta);
    CHECK(tree.node(0).value == 0.5);
    CHECK(tree.size() == 5);
    CHECK(format_generator(tree) == "(delta 0.5 k_i (pow k_i k_i))");
}

TEST_CASE("unbalanced form fails at end of input") {
    CHECK_THROWS_AS(parse_generator("(+ k"), ParseError);
    try {
        parse_generator("(+ k");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("reports arity and symbol errors with offsets") {
    CHECK_THROWS_AS(parse_generator("(+ 1)"), ParseError);
    CHECK_THROWS_AS(parse_generator("(+ 1 2 3)"), ParseError);
    CHECK_THROWS_AS(parse_generator("(frob 1 2)"), ParseError);
    CHECK_THROWS_AS(parse_generator("bogus"), ParseError);
    CHECK_THROWS_AS(parse_generator("1 2"), ParseError);
    CHECK_THROWS_AS(parse_generator(""), ParseError);
    CHECK_THROWS_AS(parse_generator("(psi k_i 1 2)"), ParseError);    // group must be literal
    CHECK_THROWS_AS(parse_generator("(delta (+ 0 0) 1 2)"), ParseError);
    CHECK_THROWS_AS(parse_generator(")"), ParseError);
}

TEST_CASE("format canonicalizes whitespace and aliases") {
    auto tree = parse_generator("  ( +  1   2.5 )  ");
    CHECK(format_generator(tree) == "(+ 1 2.5)");
    CHECK(format_generator(parse_generator("k")) == "k_i");
}

TEST_CASE("constants round trip exactly") {
    for (double v : {0.1, 1e-9, 123456.789, 0.3333333333333333, 1e300, 7.0, 0.0}) {
        auto text = format_double(v);
        auto tree = parse_generator(text);
        CHECK(tree.node(0).value == v);
    }
}

TEST_CASE("parse after format reproduces random trees") {
    Rng rng(12345);
    InitParams params;
    for (int t = 0; t < 1000; ++t) {
        params.directed = t % 2 == 0;
        GeneratorTree tree = random_tree(params, rng);
        GeneratorTree back = parse_generator(format_generator(tree));
        CHECK(structurally_equal(tree, back));
    }
}

TEST_CASE("negative thresholds parse as numbers, not operators") {
    auto tree = parse_generator("(delta -0.5 1 2)");
    CHECK(tree.node(0).value == -0.5);
    auto sub = parse_generator("(- 1 2)");
    CHECK(sub.node(0).kind == NodeKind::Sub);
}

TEST_CASE("infix rendering is readable") {
    CHECK(format_infix(parse_generator("(exp (- 4 (* 2 d)))")) == "exp((4 - (2 * d)))");
    CHECK(format_infix(parse_generator("(delta 0.5 k_i (pow k_i k_i))")) ==
          "delta_0.5(k_i, k_i^(k_i))");
}

TEST_CASE("every variable name round trips") {
    for (int v = 0; v < kVarCount; ++v) {
        auto name = var_name(static_cast<Var>(v));
        auto tree = parse_generator(name);
        REQUIRE(tree.node(0).kind == NodeKind::Variable);
        CHECK(tree.node(0).var == static_cast<Var>(v));
    }
}
