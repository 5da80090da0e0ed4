#include "rsbf/gp_tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rsbf {

namespace {

constexpr std::array<GpOp, 7> kFunctions = {GpOp::Not, GpOp::Or,   GpOp::Xor, GpOp::And,
                                            GpOp::And2, GpOp::Xnor, GpOp::If};
constexpr double kInteriorBias = 0.9;
constexpr int kCrossoverRetries = 8;
constexpr int kMutationGrowDepth = 6;

}  // namespace

int gp_arity(GpOp op) {
    switch (op) {
        case GpOp::Var: return 0;
        case GpOp::Not: return 1;
        case GpOp::If: return 3;
        default: return 2;
    }
}

const char* gp_op_name(GpOp op) {
    switch (op) {
        case GpOp::Var: return "x";
        case GpOp::Not: return "NOT";
        case GpOp::Or: return "OR";
        case GpOp::Xor: return "XOR";
        case GpOp::And: return "AND";
        case GpOp::And2: return "AND2";
        case GpOp::Xnor: return "XNOR";
        case GpOp::If: return "IF";
    }
    return "?";
}

std::unique_ptr<GpNode> clone_node(const GpNode& node) {
    auto copy = std::make_unique<GpNode>();
    copy->op = node.op;
    copy->var = node.var;
    copy->children.reserve(node.children.size());
    for (const auto& child : node.children) copy->children.push_back(clone_node(*child));
    return copy;
}

namespace {

int node_depth(const GpNode& node) {
    int deepest = 0;
    for (const auto& child : node.children) deepest = std::max(deepest, 1 + node_depth(*child));
    return deepest;
}

std::size_t node_size(const GpNode& node) {
    std::size_t count = 1;
    for (const auto& child : node.children) count += node_size(*child);
    return count;
}

bool nodes_equal(const GpNode& a, const GpNode& b) {
    if (a.op != b.op || (a.op == GpOp::Var && a.var != b.var)) return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!nodes_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

struct NodeRef {
    GpNode* node;
    int depth;  // distance from the root
};

struct ConstNodeRef {
    const GpNode* node;
    int depth;
};

void collect(GpNode& node, int depth, std::vector<NodeRef>& out) {
    out.push_back({&node, depth});
    for (auto& child : node.children) collect(*child, depth + 1, out);
}

void collect(const GpNode& node, int depth, std::vector<ConstNodeRef>& out) {
    out.push_back({&node, depth});
    for (const auto& child : node.children) collect(*child, depth + 1, out);
}

// Node picked with 0.9 probability from the interior when one exists.
template <typename Ref>
std::size_t pick_biased(const std::vector<Ref>& nodes, RandomStream& rng) {
    std::vector<std::size_t> interior;
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].node->children.empty()) leaves.push_back(i);
        else interior.push_back(i);
    }
    if (!interior.empty() && (leaves.empty() || rng.next_real() < kInteriorBias))
        return interior[rng.index(interior.size())];
    return leaves[rng.index(leaves.size())];
}

std::unique_ptr<GpNode> make_var(int var) {
    auto node = std::make_unique<GpNode>();
    node->op = GpOp::Var;
    node->var = var;
    return node;
}

std::unique_ptr<GpNode> random_terminal(int var_count, RandomStream& rng) {
    return make_var(static_cast<int>(rng.index(var_count)));
}

std::unique_ptr<GpNode> grow_node(int var_count, int depth, RandomStream& rng) {
    if (depth <= 0) return random_terminal(var_count, rng);
    const std::size_t choice = rng.index(kFunctions.size() + var_count);
    if (choice >= kFunctions.size()) return make_var(static_cast<int>(choice - kFunctions.size()));
    auto node = std::make_unique<GpNode>();
    node->op = kFunctions[choice];
    for (int i = 0; i < gp_arity(node->op); ++i)
        node->children.push_back(grow_node(var_count, depth - 1, rng));
    return node;
}

std::unique_ptr<GpNode> full_node(int var_count, int depth, RandomStream& rng) {
    if (depth <= 0) return random_terminal(var_count, rng);
    auto node = std::make_unique<GpNode>();
    node->op = kFunctions[rng.index(kFunctions.size())];
    for (int i = 0; i < gp_arity(node->op); ++i)
        node->children.push_back(full_node(var_count, depth - 1, rng));
    return node;
}

using Path = std::vector<int>;

const GpNode* follow(const GpNode& root, const Path& path) {
    const GpNode* node = &root;
    for (int step : path) node = node->children[step].get();
    return node;
}

// Replace the subtree at `path` in `tree` with `subtree` (root path allowed).
void splice(GpTree& tree, const Path& path, std::unique_ptr<GpNode> subtree) {
    if (path.empty()) {
        tree.root = std::move(subtree);
        return;
    }
    GpNode* parent = &*tree.root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) parent = parent->children[path[i]].get();
    parent->children[path.back()] = std::move(subtree);
}

// Common-region positions: both parents have a node there and every ancestor
// pair has matching arity.
void common_region(const GpNode& a, const GpNode& b, Path& path, std::vector<Path>& out) {
    out.push_back(path);
    if (a.children.size() != b.children.size()) return;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        common_region(*a.children[i], *b.children[i], path, out);
        path.pop_back();
    }
}

// Positions that merely exist in both trees, arity mismatches included.
void shared_positions(const GpNode& a, const GpNode& b, Path& path, std::vector<Path>& out) {
    out.push_back(path);
    const std::size_t limit = std::min(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < limit; ++i) {
        path.push_back(static_cast<int>(i));
        shared_positions(*a.children[i], *b.children[i], path, out);
        path.pop_back();
    }
}

std::unique_ptr<GpNode> uniform_merge(const GpNode& a, const GpNode& b, RandomStream& rng) {
    const GpNode& pick = rng.next_bool() ? b : a;
    if (a.children.size() != b.children.size()) return clone_node(pick);
    auto node = std::make_unique<GpNode>();
    node->op = pick.op;
    node->var = pick.var;
    node->children.reserve(pick.children.size());
    for (std::size_t i = 0; i < a.children.size(); ++i)
        node->children.push_back(uniform_merge(*a.children[i], *b.children[i], rng));
    return node;
}

GpTree swap_at_paths(const GpTree& p1, const GpTree& p2, const Path& path) {
    GpTree child = p1;
    splice(child, path, clone_node(*follow(*p2.root, path)));
    return child;
}

}  // namespace

int GpTree::depth() const { return root ? node_depth(*root) : 0; }

std::size_t GpTree::size() const { return root ? node_size(*root) : 0; }

bool trees_equal(const GpTree& a, const GpTree& b) {
    if (!a.root || !b.root) return !a.root && !b.root;
    return nodes_equal(*a.root, *b.root);
}

int gp_var_count(int n) {
    const int g_n = burnside_exponent(n);
    int m = 0;
    while ((1 << m) < g_n) ++m;
    return std::max(m, 1);
}

GpTree random_gp_tree(int var_count, int max_depth, int init_depth, bool full, RandomStream& rng) {
    const int depth = std::min(init_depth, max_depth);
    GpTree tree;
    tree.var_count = var_count;
    tree.max_depth = max_depth;
    tree.root = full ? full_node(var_count, depth, rng) : grow_node(var_count, depth, rng);
    return tree;
}

namespace {

bool eval_node(const GpNode& node, std::uint32_t index, int var_count) {
    switch (node.op) {
        case GpOp::Var: return (index >> (var_count - 1 - node.var)) & 1u;
        case GpOp::Not: return !eval_node(*node.children[0], index, var_count);
        case GpOp::Or:
            return eval_node(*node.children[0], index, var_count) ||
                   eval_node(*node.children[1], index, var_count);
        case GpOp::Xor:
            return eval_node(*node.children[0], index, var_count) !=
                   eval_node(*node.children[1], index, var_count);
        case GpOp::And:
            return eval_node(*node.children[0], index, var_count) &&
                   eval_node(*node.children[1], index, var_count);
        case GpOp::And2:
            return eval_node(*node.children[0], index, var_count) &&
                   !eval_node(*node.children[1], index, var_count);
        case GpOp::Xnor:
            return eval_node(*node.children[0], index, var_count) ==
                   eval_node(*node.children[1], index, var_count);
        case GpOp::If:
            return eval_node(*node.children[0], index, var_count)
                       ? eval_node(*node.children[1], index, var_count)
                       : eval_node(*node.children[2], index, var_count);
    }
    return false;
}

// Bit i of variable j's projection over assignment indices, word at a time.
std::uint64_t var_word(int bit_pos, std::size_t word) {
    static constexpr std::uint64_t kLow[6] = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
    };
    if (bit_pos < 6) return kLow[bit_pos];
    return (word >> (bit_pos - 6)) & 1u ? ~0ull : 0ull;
}

void eval_blocks_node(const GpNode& node, int var_count, std::size_t words,
                      std::vector<std::uint64_t>& out) {
    switch (node.op) {
        case GpOp::Var: {
            const int bit_pos = var_count - 1 - node.var;
            for (std::size_t w = 0; w < words; ++w) out[w] = var_word(bit_pos, w);
            return;
        }
        case GpOp::Not: {
            eval_blocks_node(*node.children[0], var_count, words, out);
            for (std::size_t w = 0; w < words; ++w) out[w] = ~out[w];
            return;
        }
        case GpOp::If: {
            std::vector<std::uint64_t> then_v(words), else_v(words);
            eval_blocks_node(*node.children[0], var_count, words, out);
            eval_blocks_node(*node.children[1], var_count, words, then_v);
            eval_blocks_node(*node.children[2], var_count, words, else_v);
            for (std::size_t w = 0; w < words; ++w)
                out[w] = (out[w] & then_v[w]) | (~out[w] & else_v[w]);
            return;
        }
        default: {
            std::vector<std::uint64_t> rhs(words);
            eval_blocks_node(*node.children[0], var_count, words, out);
            eval_blocks_node(*node.children[1], var_count, words, rhs);
            for (std::size_t w = 0; w < words; ++w) {
                switch (node.op) {
                    case GpOp::Or: out[w] |= rhs[w]; break;
                    case GpOp::Xor: out[w] ^= rhs[w]; break;
                    case GpOp::And: out[w] &= rhs[w]; break;
                    case GpOp::And2: out[w] &= ~rhs[w]; break;
                    case GpOp::Xnor: out[w] = ~(out[w] ^ rhs[w]); break;
                    default: break;
                }
            }
            return;
        }
    }
}

}  // namespace

bool gp_eval(const GpTree& tree, std::uint32_t assignment_index) {
    return eval_node(*tree.root, assignment_index, tree.var_count);
}

std::vector<std::uint64_t> gp_eval_blocks(const GpTree& tree) {
    const std::size_t assignments = std::size_t(1) << tree.var_count;
    const std::size_t words = (assignments + 63) / 64;
    std::vector<std::uint64_t> out(words);
    eval_blocks_node(*tree.root, tree.var_count, words, out);
    return out;
}

RsGenotype gp_decode(const GpTree& tree, int n) {
    const int g_n = burnside_exponent(n);
    if (tree.var_count != gp_var_count(n))
        throw std::invalid_argument("tree has the wrong terminal count for n");
    const auto blocks = gp_eval_blocks(tree);
    RsGenotype g = RsGenotype::zeros(n);
    for (int i = 0; i < g_n; ++i)
        g.bits[i] = static_cast<std::uint8_t>((blocks[i / 64] >> (i % 64)) & 1u);
    return g;
}

GpTree gp_mutate(const GpTree& tree, RandomStream& rng) {
    GpTree child = tree;
    std::vector<NodeRef> nodes;
    collect(*child.root, 0, nodes);
    const NodeRef target = nodes[rng.index(nodes.size())];
    const int budget = std::min(kMutationGrowDepth, child.max_depth - target.depth);
    auto replacement = grow_node(child.var_count, budget, rng);
    target.node->op = replacement->op;
    target.node->var = replacement->var;
    target.node->children = std::move(replacement->children);
    return child;
}

namespace {

GpTree crossover_simple(const GpTree& p1, const GpTree& p2, RandomStream& rng) {
    for (int attempt = 0; attempt < kCrossoverRetries; ++attempt) {
        GpTree child = p1;
        std::vector<NodeRef> nodes1;
        collect(*child.root, 0, nodes1);
        const NodeRef dst = nodes1[pick_biased(nodes1, rng)];

        std::vector<ConstNodeRef> nodes2;
        collect(*p2.root, 0, nodes2);
        const ConstNodeRef src = nodes2[pick_biased(nodes2, rng)];

        if (dst.depth + node_depth(*src.node) <= child.max_depth) {
            auto replacement = clone_node(*src.node);
            dst.node->op = replacement->op;
            dst.node->var = replacement->var;
            dst.node->children = std::move(replacement->children);
            return child;
        }
    }
    return p1;
}

GpTree crossover_size_fair(const GpTree& p1, const GpTree& p2, RandomStream& rng) {
    for (int attempt = 0; attempt < kCrossoverRetries; ++attempt) {
        GpTree child = p1;
        std::vector<NodeRef> nodes1;
        collect(*child.root, 0, nodes1);
        const NodeRef dst = nodes1[pick_biased(nodes1, rng)];
        const std::size_t removed = node_size(*dst.node);

        std::vector<ConstNodeRef> candidates;
        std::vector<ConstNodeRef> nodes2;
        collect(*p2.root, 0, nodes2);
        for (const auto& ref : nodes2)
            if (node_size(*ref.node) <= 2 * removed + 1) candidates.push_back(ref);
        const ConstNodeRef src = candidates[rng.index(candidates.size())];

        if (dst.depth + node_depth(*src.node) <= child.max_depth) {
            auto replacement = clone_node(*src.node);
            dst.node->op = replacement->op;
            dst.node->var = replacement->var;
            dst.node->children = std::move(replacement->children);
            return child;
        }
    }
    return p1;
}

GpTree crossover_one_point(const GpTree& p1, const GpTree& p2, RandomStream& rng) {
    std::vector<Path> points;
    Path path;
    common_region(*p1.root, *p2.root, path, points);
    const Path& chosen = points[rng.index(points.size())];
    GpTree child = swap_at_paths(p1, p2, chosen);
    if (child.depth() > child.max_depth) return p1;
    return child;
}

GpTree crossover_context(const GpTree& p1, const GpTree& p2, RandomStream& rng) {
    std::vector<Path> points;
    Path path;
    shared_positions(*p1.root, *p2.root, path, points);
    for (int attempt = 0; attempt < kCrossoverRetries; ++attempt) {
        const Path& chosen = points[rng.index(points.size())];
        GpTree child = swap_at_paths(p1, p2, chosen);
        if (child.depth() <= child.max_depth) return child;
    }
    return p1;
}

GpTree crossover_uniform(const GpTree& p1, const GpTree& p2, RandomStream& rng) {
    GpTree child = p1;
    child.root = uniform_merge(*p1.root, *p2.root, rng);
    return child;
}

}  // namespace

GpTree gp_crossover(const GpTree& p1, const GpTree& p2, GpCrossoverOp op, RandomStream& rng) {
    switch (op) {
        case GpCrossoverOp::simple: return crossover_simple(p1, p2, rng);
        case GpCrossoverOp::uniform: return crossover_uniform(p1, p2, rng);
        case GpCrossoverOp::size_fair: return crossover_size_fair(p1, p2, rng);
        case GpCrossoverOp::one_point: return crossover_one_point(p1, p2, rng);
        case GpCrossoverOp::context_preserving: return crossover_context(p1, p2, rng);
    }
    return p1;
}

namespace {

void print_node(const GpNode& node, std::string& out) {
    if (node.op == GpOp::Var) {
        out += "x" + std::to_string(node.var);
        return;
    }
    out.push_back('(');
    out += gp_op_name(node.op);
    for (const auto& child : node.children) {
        out.push_back(' ');
        print_node(*child, out);
    }
    out.push_back(')');
}

struct SexprParser {
    const std::string& text;
    std::size_t pos = 0;
    int var_count;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string token() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        return text.substr(start, pos - start);
    }

    std::unique_ptr<GpNode> parse() {
        skip_space();
        if (pos >= text.size()) throw std::invalid_argument("unexpected end of expression");
        if (text[pos] == '(') {
            ++pos;
            const std::string name = token();
            GpOp op;
            if (name == "NOT") op = GpOp::Not;
            else if (name == "OR") op = GpOp::Or;
            else if (name == "XOR") op = GpOp::Xor;
            else if (name == "AND") op = GpOp::And;
            else if (name == "AND2") op = GpOp::And2;
            else if (name == "XNOR") op = GpOp::Xnor;
            else if (name == "IF") op = GpOp::If;
            else throw std::invalid_argument("unknown function '" + name + "'");
            auto node = std::make_unique<GpNode>();
            node->op = op;
            for (int i = 0; i < gp_arity(op); ++i) node->children.push_back(parse());
            skip_space();
            if (pos >= text.size() || text[pos] != ')')
                throw std::invalid_argument("expected ')'");
            ++pos;
            return node;
        }
        const std::string name = token();
        if (name.size() < 2 || name[0] != 'x')
            throw std::invalid_argument("expected terminal like x0, got '" + name + "'");
        const int var = std::stoi(name.substr(1));
        if (var < 0 || var >= var_count)
            throw std::invalid_argument("terminal index out of range: " + name);
        return make_var(var);
    }
};

}  // namespace

std::string format_sexpr(const GpTree& tree) {
    std::string out;
    print_node(*tree.root, out);
    return out;
}

GpTree parse_sexpr(const std::string& text, int var_count, int max_depth) {
    SexprParser parser{text, 0, var_count};
    GpTree tree;
    tree.var_count = var_count;
    tree.max_depth = max_depth;
    tree.root = parser.parse();
    parser.skip_space();
    if (parser.pos != text.size())
        throw std::invalid_argument("trailing characters after expression");
    if (tree.depth() > max_depth) throw std::invalid_argument("expression exceeds depth limit");
    return tree;
}

}  // namespace rsbf
