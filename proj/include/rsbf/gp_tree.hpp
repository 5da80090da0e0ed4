#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rsbf/orbits.hpp"
#include "rsbf/rng.hpp"

namespace rsbf {

// Function set: binary OR/XOR/AND/XNOR, AND2 (first input AND NOT second),
// ternary IF (condition ? second : third), unary NOT, plus terminals.
enum class GpOp : std::uint8_t { Var, Not, Or, Xor, And, And2, Xnor, If };

int gp_arity(GpOp op);
const char* gp_op_name(GpOp op);

struct GpNode {
    GpOp op = GpOp::Var;
    int var = 0;  // terminal index, Var only
    std::vector<std::unique_ptr<GpNode>> children;
};

std::unique_ptr<GpNode> clone_node(const GpNode& node);

// Expression tree over x0..x_{var_count-1}. Depth counts edges on the
// longest root-to-leaf path, so a lone terminal has depth 0.
struct GpTree {
    int var_count = 1;
    int max_depth = 12;
    std::unique_ptr<GpNode> root;

    GpTree() = default;
    GpTree(int var_count_, int max_depth_, std::unique_ptr<GpNode> root_)
        : var_count(var_count_), max_depth(max_depth_), root(std::move(root_)) {}
    GpTree(const GpTree& other)
        : var_count(other.var_count),
          max_depth(other.max_depth),
          root(other.root ? clone_node(*other.root) : nullptr) {}
    GpTree& operator=(const GpTree& other) {
        if (this != &other) {
            var_count = other.var_count;
            max_depth = other.max_depth;
            root = other.root ? clone_node(*other.root) : nullptr;
        }
        return *this;
    }
    GpTree(GpTree&&) = default;
    GpTree& operator=(GpTree&&) = default;

    int depth() const;
    std::size_t size() const;
};

bool trees_equal(const GpTree& a, const GpTree& b);

// Smallest m with 2^m >= g_n; the terminal count the tree encoding needs.
int gp_var_count(int n);

GpTree random_gp_tree(int var_count, int max_depth, int init_depth, bool full, RandomStream& rng);

// Tree value on one assignment; x0 is the MSB of the assignment index.
bool gp_eval(const GpTree& tree, std::uint32_t assignment_index);

// All 2^m values at once via bitwise evaluation; bit i of the result is the
// value on assignment i (LSB-first packing within 64-bit words).
std::vector<std::uint64_t> gp_eval_blocks(const GpTree& tree);

// First g_n evaluation bits become the genotype; the tail is discarded.
RsGenotype gp_decode(const GpTree& tree, int n);

enum class GpCrossoverOp { simple, uniform, size_fair, one_point, context_preserving };

GpTree gp_mutate(const GpTree& tree, RandomStream& rng);
GpTree gp_crossover(const GpTree& p1, const GpTree& p2, GpCrossoverOp op, RandomStream& rng);

// Prefix s-expressions, e.g. (IF x0 (AND2 x1 x2) (NOT x3)).
std::string format_sexpr(const GpTree& tree);
GpTree parse_sexpr(const std::string& text, int var_count, int max_depth);

}  // namespace rsbf
