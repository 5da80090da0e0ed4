#include <doctest.h>

#include <functional>

#include "rsbf/gp_tree.hpp"

using namespace rsbf;

namespace {

// Structural soundness: arities match, terminals are in range, the depth
// limit holds.
void require_valid(const GpTree& tree) {
    REQUIRE(tree.root != nullptr);
    REQUIRE(tree.depth() <= tree.max_depth);
    std::function<void(const GpNode&)> walk = [&](const GpNode& node) {
        REQUIRE(node.children.size() == static_cast<std::size_t>(gp_arity(node.op)));
        if (node.op == GpOp::Var) {
            REQUIRE(node.var >= 0);
            REQUIRE(node.var < tree.var_count);
        }
        for (const auto& child : node.children) walk(*child);
    };
    walk(*tree.root);
}

}  // namespace

TEST_CASE("terminal counts cover the genotype") {
    CHECK(gp_var_count(3) == 2);   // g_3 = 4
    CHECK(gp_var_count(4) == 3);   // g_4 = 6
    CHECK(gp_var_count(5) == 3);   // g_5 = 8
    CHECK(gp_var_count(8) == 6);   // g_8 = 36
    CHECK(gp_var_count(16) == 13); // g_16 = 4116
    CHECK(gp_var_count(1) == 1);   // g_1 = 2
}

TEST_CASE("expression text round trips") {
    const std::string text = "(IF x0 (AND2 x1 x2) (NOT x3))";
    const GpTree tree = parse_sexpr(text, 4, 12);
    CHECK(format_sexpr(tree) == text);
    CHECK(tree.depth() == 2);
    CHECK(tree.size() == 7);
    require_valid(tree);

    CHECK(format_sexpr(parse_sexpr("x2", 4, 12)) == "x2");
    CHECK_THROWS_AS(parse_sexpr("(NAND x0 x1)", 4, 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_sexpr("(NOT x9)", 4, 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_sexpr("(NOT x0) x1", 4, 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_sexpr("(AND x0)", 4, 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_sexpr("(NOT (NOT (NOT x0)))", 4, 2), std::invalid_argument);
}

TEST_CASE("operator semantics on all assignments") {
    // x0 is the most significant assignment bit, mirroring truth table rows.
    const GpTree tree = parse_sexpr("(IF x0 (AND2 x1 x2) (NOT x3))", 4, 12);
    for (std::uint32_t idx = 0; idx < 16; ++idx) {
        const bool x0 = (idx >> 3) & 1, x1 = (idx >> 2) & 1, x2 = (idx >> 1) & 1,
                   x3 = idx & 1;
        const bool expected = x0 ? (x1 && !x2) : !x3;
        CHECK(gp_eval(tree, idx) == expected);
    }

    const GpTree xnor = parse_sexpr("(XNOR x0 x1)", 2, 12);
    CHECK(gp_eval(xnor, 0b00));
    CHECK_FALSE(gp_eval(xnor, 0b01));
    CHECK_FALSE(gp_eval(xnor, 0b10));
    CHECK(gp_eval(xnor, 0b11));
}

TEST_CASE("block evaluation matches single evaluation") {
    RandomStream rng(21);
    for (int var_count = 1; var_count <= 8; ++var_count) {
        for (int rep = 0; rep < 20; ++rep) {
            const GpTree tree = random_gp_tree(var_count, 12, 4, rep % 2 == 0, rng);
            const auto blocks = gp_eval_blocks(tree);
            for (std::uint32_t idx = 0; idx < (1u << var_count); ++idx) {
                const bool bit = (blocks[idx / 64] >> (idx % 64)) & 1u;
                REQUIRE(bit == gp_eval(tree, idx));
            }
        }
    }
}

TEST_CASE("random trees respect construction rules") {
    RandomStream rng(22);
    for (int rep = 0; rep < 200; ++rep) {
        const GpTree grown = random_gp_tree(6, 12, 5, false, rng);
        require_valid(grown);
        CHECK(grown.depth() <= 5);

        // The full method puts a function at every level above the floor.
        const GpTree full = random_gp_tree(6, 12, 3, true, rng);
        require_valid(full);
        CHECK(full.depth() == 3);
    }
}

TEST_CASE("decoding takes the leading block bits") {
    const GpTree tree = parse_sexpr("(XOR x0 x1)", 3, 12);  // n=4 uses 3 terminals
    const RsGenotype g = gp_decode(tree, 4);
    CHECK(g.bits.size() == 6);
    // Assignment i has x0 = bit 2, x1 = bit 1; xor for i = 0..5.
    for (int i = 0; i < 6; ++i)
        CHECK(g.bits[i] == ((((i >> 2) ^ (i >> 1)) & 1)));

    CHECK_THROWS_AS(gp_decode(parse_sexpr("x0", 2, 12), 4), std::invalid_argument);
}

TEST_CASE("mutation and crossover keep trees well formed") {
    RandomStream rng(23);
    const GpCrossoverOp ops[] = {GpCrossoverOp::simple, GpCrossoverOp::uniform,
                                 GpCrossoverOp::size_fair, GpCrossoverOp::one_point,
                                 GpCrossoverOp::context_preserving};
    for (int rep = 0; rep < 300; ++rep) {
        const GpTree p1 = random_gp_tree(5, 8, 2 + rep % 5, rep % 2 == 0, rng);
        const GpTree p2 = random_gp_tree(5, 8, 2 + (rep + 2) % 5, rep % 3 == 0, rng);

        const GpTree mutant = gp_mutate(p1, rng);
        require_valid(mutant);

        const GpTree child = gp_crossover(p1, p2, ops[rep % 5], rng);
        require_valid(child);
    }
}

TEST_CASE("region preserving crossovers fix equal parents") {
    RandomStream rng(24);
    for (int rep = 0; rep < 50; ++rep) {
        const GpTree p = random_gp_tree(4, 10, 4, false, rng);
        // These operators exchange material at matching positions, so two
        // identical parents can only rebuild the same tree.  The plain
        // subtree swaps pick source and target independently and are
        // exempt.
        for (auto op : {GpCrossoverOp::uniform, GpCrossoverOp::one_point,
                        GpCrossoverOp::context_preserving}) {
            const GpTree child = gp_crossover(p, p, op, rng);
            CHECK(trees_equal(child, p));
        }
    }
}

TEST_CASE("deep copies are independent") {
    RandomStream rng(25);
    const GpTree original = random_gp_tree(4, 10, 4, true, rng);
    GpTree copy = original;
    CHECK(trees_equal(copy, original));
    copy = gp_mutate(copy, rng);
    // Mutating the copy leaves the original untouched.
    require_valid(original);
    CHECK(format_sexpr(original) == format_sexpr(GpTree(original)));
}
