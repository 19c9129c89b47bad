#include "netsr/expr.hpp"

#include <cmath>
#include <cstdlib>

namespace netsr {

namespace {
constexpr double kMagnitudeCap = 1e300;
constexpr double kExpArgCap = 690.77552789821368;  // ln(1e300)

double clamp_finite(double x) {
    if (std::isnan(x)) return 0.0;
    if (x > kMagnitudeCap) return kMagnitudeCap;
    if (x < -kMagnitudeCap) return -kMagnitudeCap;
    return x;
}
}  // namespace

int child_count(NodeKind kind) {
    switch (kind) {
        case NodeKind::Constant:
        case NodeKind::Variable: return 0;
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Abs: return 1;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
        case NodeKind::Pow:
        case NodeKind::Min:
        case NodeKind::Max:
        case NodeKind::Psi:
        case NodeKind::Delta: return 2;
        case NodeKind::Eq0: return 3;
        case NodeKind::Gt:
        case NodeKind::Lt:
        case NodeKind::Eq: return 4;
    }
    return 0;
}

namespace {
constexpr const char* kVarNames[kVarCount] = {
    "i", "j", "k_i", "k_j", "kin_i", "kin_j", "kout_i", "kout_j", "d", "dd", "dr", "xi"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int v = 0; v < kVarCount; ++v)
        if (name == kVarNames[v]) return static_cast<Var>(v);
    if (name == "k") return Var::Ki;  // accepted shorthand
    return std::nullopt;
}

bool var_directed_only(Var v) {
    switch (v) {
        case Var::KinI:
        case Var::KinJ:
        case Var::KoutI:
        case Var::KoutJ:
        case Var::Dd:
        case Var::Dr: return true;
        default: return false;
    }
}

GeneratorTree GeneratorTree::constant(double value) {
    GeneratorTree t;
    ExprNode n;
    n.kind = NodeKind::Constant;
    n.value = value;
    t.append(n);
    return t;
}

GeneratorTree GeneratorTree::variable(Var v) {
    GeneratorTree t;
    ExprNode n;
    n.kind = NodeKind::Variable;
    n.var = v;
    t.append(n);
    return t;
}

std::int32_t GeneratorTree::append(const ExprNode& n) {
    nodes_.push_back(n);
    return static_cast<std::int32_t>(nodes_.size()) - 1;
}

namespace {

std::int32_t copy_into(const GeneratorTree& src, std::int32_t idx, GeneratorTree& dst) {
    ExprNode n = src.node(idx);
    std::int32_t at = dst.append(n);
    for (int c = 0; c < child_count(n.kind); ++c) {
        std::int32_t child = copy_into(src, src.node(idx).child[static_cast<std::size_t>(c)], dst);
        dst.mutable_node(at).child[static_cast<std::size_t>(c)] = child;
    }
    return at;
}

std::int32_t graft_into(const GeneratorTree& base, std::int32_t idx, std::int32_t at,
                        const GeneratorTree& scion, GeneratorTree& dst) {
    if (idx == at) return copy_into(scion, scion.root(), dst);
    ExprNode n = base.node(idx);
    std::int32_t here = dst.append(n);
    for (int c = 0; c < child_count(n.kind); ++c) {
        std::int32_t child =
            graft_into(base, base.node(idx).child[static_cast<std::size_t>(c)], at, scion, dst);
        dst.mutable_node(here).child[static_cast<std::size_t>(c)] = child;
    }
    return here;
}

}  // namespace

GeneratorTree subtree(const GeneratorTree& src, std::int32_t idx) {
    GeneratorTree t;
    copy_into(src, idx, t);
    return t;
}

GeneratorTree graft(const GeneratorTree& base, std::int32_t at, const GeneratorTree& scion) {
    GeneratorTree t;
    graft_into(base, base.root(), at, scion, t);
    return t;
}

GeneratorTree compose(NodeKind kind, double value, const std::vector<GeneratorTree>& children) {
    GeneratorTree t;
    ExprNode n;
    n.kind = kind;
    n.value = value;
    std::int32_t at = t.append(n);
    for (std::size_t c = 0; c < children.size(); ++c)
        t.mutable_node(at).child[c] = copy_into(children[c], children[c].root(), t);
    return t;
}

namespace {
bool nodes_equal(const GeneratorTree& a, std::int32_t ia, const GeneratorTree& b, std::int32_t ib) {
    const ExprNode& na = a.node(ia);
    const ExprNode& nb = b.node(ib);
    if (na.kind != nb.kind) return false;
    if (na.kind == NodeKind::Variable && na.var != nb.var) return false;
    if ((na.kind == NodeKind::Constant || na.kind == NodeKind::Psi || na.kind == NodeKind::Delta) &&
        na.value != nb.value)
        return false;
    for (int c = 0; c < child_count(na.kind); ++c)
        if (!nodes_equal(a, na.child[static_cast<std::size_t>(c)], b, nb.child[static_cast<std::size_t>(c)]))
            return false;
    return true;
}

bool check_node(const GeneratorTree& t, std::int32_t idx, std::vector<bool>& seen) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= t.size()) return false;
    if (seen[static_cast<std::size_t>(idx)]) return false;  // sharing or a cycle
    seen[static_cast<std::size_t>(idx)] = true;
    const ExprNode& n = t.node(idx);
    for (int c = 0; c < child_count(n.kind); ++c)
        if (!check_node(t, n.child[static_cast<std::size_t>(c)], seen)) return false;
    for (int c = child_count(n.kind); c < 4; ++c)
        if (n.child[static_cast<std::size_t>(c)] != -1) return false;
    return true;
}
}  // namespace

bool structurally_equal(const GeneratorTree& a, const GeneratorTree& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    return nodes_equal(a, a.root(), b, b.root());
}

bool well_formed(const GeneratorTree& t) {
    if (t.empty()) return false;
    std::vector<bool> seen(t.size(), false);
    if (!check_node(t, t.root(), seen)) return false;
    for (bool s : seen)
        if (!s) return false;  // unreachable node
    return true;
}

long long psi_groups(double raw) {
    long long g = std::llround(std::fabs(raw));
    return g < 1 ? 1 : g;
}

double apply_operator(NodeKind kind, double a, double b) {
    switch (kind) {
        case NodeKind::Add: return clamp_finite(a + b);
        case NodeKind::Sub: return clamp_finite(a - b);
        case NodeKind::Mul: return clamp_finite(a * b);
        case NodeKind::Div: return b == 0.0 ? 0.0 : clamp_finite(a / b);
        case NodeKind::Pow: {
            double base = a;
            if (base < 0 && b != std::floor(b)) base = -base;
            if (base == 0 && b < 0) return 0.0;
            return clamp_finite(std::pow(base, b));
        }
        case NodeKind::Min: return std::min(a, b);
        case NodeKind::Max: return std::max(a, b);
        case NodeKind::Exp: return a >= kExpArgCap ? kMagnitudeCap : clamp_finite(std::exp(a));
        case NodeKind::Log: return a <= 0.0 ? 0.0 : clamp_finite(std::log(a));
        case NodeKind::Abs: return std::fabs(a);
        default: break;
    }
    return 0.0;
}

namespace {

double var_value(Var v, const EdgeContext& ctx) {
    switch (v) {
        case Var::I: return static_cast<double>(ctx.i);
        case Var::J: return static_cast<double>(ctx.j);
        case Var::Ki: return ctx.k_i;
        case Var::Kj: return ctx.k_j;
        case Var::KinI: return ctx.kin_i;
        case Var::KinJ: return ctx.kin_j;
        case Var::KoutI: return ctx.kout_i;
        case Var::KoutJ: return ctx.kout_j;
        case Var::D: return ctx.d;
        case Var::Dd: return ctx.dd;
        case Var::Dr: return ctx.dr;
        case Var::Xi: return ctx.xi;
    }
    return 0.0;
}

double eval_node(const GeneratorTree& t, std::int32_t idx, const EdgeContext& ctx) {
    const ExprNode& n = t.node(idx);
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Variable: return var_value(n.var, ctx);
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Abs:
            return apply_operator(n.kind, eval_node(t, n.child[0], ctx), 0.0);
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
        case NodeKind::Pow:
        case NodeKind::Min:
        case NodeKind::Max:
            return apply_operator(n.kind, eval_node(t, n.child[0], ctx),
                                  eval_node(t, n.child[1], ctx));
        case NodeKind::Gt:
            return eval_node(t, n.child[0], ctx) > eval_node(t, n.child[1], ctx)
                       ? eval_node(t, n.child[2], ctx)
                       : eval_node(t, n.child[3], ctx);
        case NodeKind::Lt:
            return eval_node(t, n.child[0], ctx) < eval_node(t, n.child[1], ctx)
                       ? eval_node(t, n.child[2], ctx)
                       : eval_node(t, n.child[3], ctx);
        case NodeKind::Eq:
            return eval_node(t, n.child[0], ctx) == eval_node(t, n.child[1], ctx)
                       ? eval_node(t, n.child[2], ctx)
                       : eval_node(t, n.child[3], ctx);
        case NodeKind::Eq0:
            return eval_node(t, n.child[0], ctx) == 0.0 ? eval_node(t, n.child[1], ctx)
                                                        : eval_node(t, n.child[2], ctx);
        case NodeKind::Psi: {
            long long g = psi_groups(n.value);
            bool same = (static_cast<long long>(ctx.i) % g) == (static_cast<long long>(ctx.j) % g);
            return eval_node(t, n.child[same ? 0 : 1], ctx);
        }
        case NodeKind::Delta:
            return ctx.xi <= n.value ? eval_node(t, n.child[0], ctx)
                                     : eval_node(t, n.child[1], ctx);
    }
    return 0.0;
}

}  // namespace

double evaluate(const GeneratorTree& tree, const EdgeContext& ctx) {
    double w = eval_node(tree, tree.root(), ctx);
    if (!(w > 0.0)) return 0.0;  // negatives and NaN both land here
    return w > kMagnitudeCap ? kMagnitudeCap : w;
}

}  // namespace netsr
