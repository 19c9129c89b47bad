#include "netsr/simplify.hpp"

namespace netsr {

namespace {

bool is_constant(const GeneratorTree& t, double* out = nullptr) {
    if (t.size() != 1 || t.node(0).kind != NodeKind::Constant) return false;
    if (out) *out = t.node(0).value;
    return true;
}

bool is_constant_value(const GeneratorTree& t, double v) {
    double c;
    return is_constant(t, &c) && c == v;
}

GeneratorTree rewrite(const GeneratorTree& src, std::int32_t idx);

GeneratorTree rebuild(const ExprNode& n, std::vector<GeneratorTree> children) {
    // fold once every child is a literal; conditionals are handled upstream
    bool all_const = true;
    std::array<double, 4> vals{};
    for (std::size_t c = 0; c < children.size(); ++c) {
        if (!is_constant(children[c], &vals[c])) {
            all_const = false;
            break;
        }
    }
    switch (n.kind) {
        case NodeKind::Add:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (is_constant_value(children[0], 0.0)) return children[1];
            if (is_constant_value(children[1], 0.0)) return children[0];
            break;
        case NodeKind::Sub:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (is_constant_value(children[1], 0.0)) return children[0];
            if (structurally_equal(children[0], children[1])) return GeneratorTree::constant(0.0);
            break;
        case NodeKind::Mul:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (is_constant_value(children[0], 1.0)) return children[1];
            if (is_constant_value(children[1], 1.0)) return children[0];
            if (is_constant_value(children[0], 0.0) || is_constant_value(children[1], 0.0))
                return GeneratorTree::constant(0.0);
            break;
        case NodeKind::Div:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (is_constant_value(children[1], 1.0)) return children[0];
            if (is_constant_value(children[0], 0.0)) return GeneratorTree::constant(0.0);
            break;
        case NodeKind::Pow:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (is_constant_value(children[1], 1.0)) return children[0];
            if (is_constant_value(children[1], 0.0)) return GeneratorTree::constant(1.0);
            if (is_constant_value(children[0], 1.0)) return GeneratorTree::constant(1.0);
            break;
        case NodeKind::Min:
        case NodeKind::Max:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], vals[1]));
            if (structurally_equal(children[0], children[1])) return children[0];
            break;
        case NodeKind::Exp:
        case NodeKind::Log:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], 0.0));
            break;
        case NodeKind::Abs:
            if (all_const) return GeneratorTree::constant(apply_operator(n.kind, vals[0], 0.0));
            if (children[0].node(0).kind == NodeKind::Abs) return children[0];
            break;
        default: break;
    }
    return compose(n.kind, n.value, children);
}

GeneratorTree rewrite_conditional(const ExprNode& n, std::vector<GeneratorTree> children) {
    if (n.kind == NodeKind::Eq0) {
        double a;
        if (is_constant(children[0], &a)) return children[a == 0.0 ? 1 : 2];
        if (structurally_equal(children[1], children[2])) return children[1];
        return compose(n.kind, n.value, children);
    }
    double a, b;
    if (is_constant(children[0], &a) && is_constant(children[1], &b)) {
        bool taken = n.kind == NodeKind::Gt ? a > b : n.kind == NodeKind::Lt ? a < b : a == b;
        return children[taken ? 2 : 3];
    }
    if (structurally_equal(children[2], children[3])) return children[2];
    return compose(n.kind, n.value, children);
}

GeneratorTree rewrite(const GeneratorTree& src, std::int32_t idx) {
    const ExprNode& n = src.node(idx);
    if (n.kind == NodeKind::Constant || n.kind == NodeKind::Variable) return subtree(src, idx);

    std::vector<GeneratorTree> children;
    children.reserve(static_cast<std::size_t>(child_count(n.kind)));
    for (int c = 0; c < child_count(n.kind); ++c)
        children.push_back(rewrite(src, n.child[static_cast<std::size_t>(c)]));

    switch (n.kind) {
        case NodeKind::Gt:
        case NodeKind::Lt:
        case NodeKind::Eq:
        case NodeKind::Eq0:
            return rewrite_conditional(n, std::move(children));
        case NodeKind::Psi:
            if (psi_groups(n.value) == 1) return children[0];  // one group: ids always match
            if (structurally_equal(children[0], children[1])) return children[0];
            return compose(n.kind, n.value, children);
        case NodeKind::Delta:
            if (n.value >= 1.0) return children[0];  // xi never exceeds 1
            if (n.value < 0.0) return children[1];
            if (structurally_equal(children[0], children[1])) return children[0];
            return compose(n.kind, n.value, children);
        default:
            return rebuild(n, std::move(children));
    }
}

}  // namespace

GeneratorTree simplify(const GeneratorTree& tree) {
    GeneratorTree cur = tree;
    for (int pass = 0; pass < 64; ++pass) {
        GeneratorTree next = rewrite(cur, cur.root());
        if (structurally_equal(next, cur)) break;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace netsr
