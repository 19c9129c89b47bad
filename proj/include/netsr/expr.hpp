#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "netsr/common.hpp"

namespace netsr {

enum class NodeKind : std::uint8_t {
    Constant,
    Variable,
    Add, Sub, Mul, Div, Pow, Min, Max,  // binary
    Exp, Log, Abs,                      // unary
    Gt, Lt, Eq,                         // 4-ary: (cmp a b then else)
    Eq0,                                // 3-ary: (=0 a then else)
    Psi,                                // group affinity on node ids; 2 children + group constant
    Delta,                              // phase switch on the edge ratio; 2 children + threshold
};

/// Stored child count for a node kind (psi/delta keep their constant inline).
int child_count(NodeKind kind);

enum class Var : std::uint8_t { I, J, Ki, Kj, KinI, KinJ, KoutI, KoutJ, D, Dd, Dr, Xi };
inline constexpr int kVarCount = 12;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
/// In/out degrees and oriented distances only exist on directed networks.
bool var_directed_only(Var v);

/// Per-candidate inputs a generator is evaluated against. For undirected
/// networks the builder aliases kin/kout to the plain degree and dd/dr to
/// the undirected distance, so every tree stays evaluable.
struct EdgeContext {
    NodeId i = 0, j = 1;
    double k_i = 0, k_j = 0;
    double kin_i = 0, kin_j = 0, kout_i = 0, kout_j = 0;
    double d = 1, dd = 1, dr = 1;
    double xi = 0;  // in [0, 1]
};

struct ExprNode {
    NodeKind kind = NodeKind::Constant;
    Var var = Var::I;
    double value = 0.0;  // constant value; psi group count; delta threshold
    std::array<std::int32_t, 4> child{-1, -1, -1, -1};
};

/// Expression tree, stored preorder with the root at index 0 and every node
/// reachable. Trees are values: mutation and recombination build new ones.
class GeneratorTree {
public:
    GeneratorTree() = default;

    static GeneratorTree constant(double value);
    static GeneratorTree variable(Var v);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    std::int32_t root() const { return 0; }
    const ExprNode& node(std::int32_t idx) const { return nodes_[static_cast<std::size_t>(idx)]; }

    /// Appends a node and returns its index. Builders fill children
    /// immediately after the parent so storage stays preorder.
    std::int32_t append(const ExprNode& n);
    ExprNode& mutable_node(std::int32_t idx) { return nodes_[static_cast<std::size_t>(idx)]; }

private:
    std::vector<ExprNode> nodes_;
};

/// Copies the subtree of `src` rooted at `idx` into a fresh tree.
GeneratorTree subtree(const GeneratorTree& src, std::int32_t idx);

/// Copy of `base` with the node at `at` replaced by `scion`.
GeneratorTree graft(const GeneratorTree& base, std::int32_t at, const GeneratorTree& scion);

/// Rebuilds a node from already-built child trees.
GeneratorTree compose(NodeKind kind, double value, const std::vector<GeneratorTree>& children);

bool structurally_equal(const GeneratorTree& a, const GeneratorTree& b);

/// Arity and reachability checks; used by tests and after structural edits.
bool well_formed(const GeneratorTree& t);

/// Effective group count of an affinity node: |round(g)| floored at 1.
long long psi_groups(double raw);

/// Shared protected arithmetic for the plain operators (Add..Abs). Division
/// by zero and log of non-positives give 0, pow of a negative base with a
/// fractional exponent uses the magnitude, every result is finite (NaN -> 0,
/// magnitude capped at 1e300).
double apply_operator(NodeKind kind, double a, double b);

/// Protected evaluation. Total: any well-formed tree and context yield a
/// finite weight >= 0 (a negative root value clamps to 0).
double evaluate(const GeneratorTree& tree, const EdgeContext& ctx);

}  // namespace netsr
