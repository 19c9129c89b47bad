#include "netsr/treegen.hpp"

#include <array>

namespace netsr {

namespace {

constexpr std::array<NodeKind, 16> kOperatorPool = {
    NodeKind::Add, NodeKind::Sub, NodeKind::Mul, NodeKind::Div,
    NodeKind::Pow, NodeKind::Min, NodeKind::Max, NodeKind::Exp,
    NodeKind::Log, NodeKind::Abs, NodeKind::Gt,  NodeKind::Lt,
    NodeKind::Eq,  NodeKind::Eq0, NodeKind::Psi, NodeKind::Delta};

constexpr std::array<Var, 6> kUndirectedVars = {Var::I, Var::J, Var::Ki,
                                                Var::Kj, Var::D, Var::Xi};
constexpr std::array<Var, 12> kDirectedVars = {
    Var::I,     Var::J,     Var::Ki,    Var::Kj, Var::KinI, Var::KinJ,
    Var::KoutI, Var::KoutJ, Var::D,     Var::Dd, Var::Dr,   Var::Xi};

struct Builder {
    const InitParams& params;
    Rng& rng;
    bool grow;
    int depth_target;
    int depth_cap;

    ExprNode terminal() {
        ExprNode n;
        if (rand_unit(rng) < 0.5) {
            n.kind = NodeKind::Variable;
            if (params.directed)
                n.var = kDirectedVars[rand_index(rng, kDirectedVars.size())];
            else
                n.var = kUndirectedVars[rand_index(rng, kUndirectedVars.size())];
        } else {
            n.kind = NodeKind::Constant;
            n.value = random_constant(rng);
        }
        return n;
    }

    std::int32_t build(GeneratorTree& t, int depth) {
        bool make_terminal;
        if (depth >= depth_cap)
            make_terminal = true;
        else if (depth < depth_target)
            make_terminal = false;
        else
            make_terminal = grow ? rand_unit(rng) < params.p_terminal : true;

        if (make_terminal) return t.append(terminal());

        ExprNode n;
        n.kind = kOperatorPool[rand_index(rng, kOperatorPool.size())];
        if (n.kind == NodeKind::Psi || n.kind == NodeKind::Delta) n.value = random_constant(rng);
        std::int32_t at = t.append(n);
        for (int c = 0; c < child_count(n.kind); ++c) {
            std::int32_t child = build(t, depth + 1);
            t.mutable_node(at).child[static_cast<std::size_t>(c)] = child;
        }
        return at;
    }
};

}  // namespace

double random_constant(Rng& rng) {
    double p = rand_unit(rng);
    if (p < 0.1) return 0.0;
    if (p < 0.5) return static_cast<double>(1 + rand_index(rng, 9));
    return rand_unit(rng);
}

GeneratorTree random_tree(const InitParams& params, Rng& rng) {
    if (params.d_min < 1 || params.d_min > params.d_max)
        throw InputError("tree depth bounds must satisfy 1 <= d_min <= d_max");
    int depth_target =
        params.d_min + static_cast<int>(rand_index(rng, static_cast<std::size_t>(params.d_max - params.d_min + 1)));
    bool grow;
    switch (params.strategy) {
        case InitStrategy::FixedDepth: grow = false; break;
        case InitStrategy::Grow: grow = true; break;
        default: grow = rand_unit(rng) < 0.5; break;
    }
    Builder b{params, rng, grow, depth_target, 2 * params.d_max};
    GeneratorTree t;
    b.build(t, 0);
    return t;
}

std::int32_t uniform_node_index(const GeneratorTree& tree, Rng& rng) {
    return static_cast<std::int32_t>(rand_index(rng, tree.size()));
}

GeneratorTree mutate(const GeneratorTree& tree, const InitParams& params, Rng& rng) {
    std::int32_t at = uniform_node_index(tree, rng);
    GeneratorTree donor = random_tree(params, rng);
    std::int32_t pick = uniform_node_index(donor, rng);
    return graft(tree, at, subtree(donor, pick));
}

GeneratorTree recombine(const GeneratorTree& parent1, const GeneratorTree& parent2, Rng& rng) {
    std::int32_t at = uniform_node_index(parent1, rng);
    std::int32_t pick = uniform_node_index(parent2, rng);
    return graft(parent1, at, subtree(parent2, pick));
}

}  // namespace netsr
