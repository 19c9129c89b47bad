#include "netsr/classify.hpp"

#include <cmath>

namespace netsr {

namespace {

constexpr double kRelTolerance = 1e-6;

bool any_node(const GeneratorTree& t, NodeKind kind) {
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(t.size()); ++i)
        if (t.node(i).kind == kind) return true;
    return false;
}

EdgeContext base_context(NodeId i, NodeId j, double k, double d, double xi) {
    EdgeContext ctx;
    ctx.i = i;
    ctx.j = j;
    ctx.k_i = ctx.k_j = k;
    ctx.kin_i = ctx.kin_j = ctx.kout_i = ctx.kout_j = k / 2.0;
    ctx.d = ctx.dd = ctx.dr = d;
    ctx.xi = xi;
    return ctx;
}

struct Slice {
    NodeId i, j;
    double k, d, xi;
};

// nuisance combinations held fixed while one quantity sweeps
const Slice kSlices[] = {
    {10, 20, 4.0, 3.0, 0.75}, {3, 50, 2.0, 2.0, 0.25},  {77, 8, 8.0, 4.0, 0.9},
    {5, 6, 6.0, 5.0, 0.5},    {41, 11, 12.0, 2.0, 0.35}};

const double kDegreeSweep[] = {0, 1, 2, 3, 4, 6, 8, 12, 16, 24};
const double kDistanceSweep[] = {1, 2, 3, 4, 5, 6, 8, 10};
const double kRatioSweep[] = {0.05, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9};
const std::pair<NodeId, NodeId> kIdSweep[] = {{1, 2}, {4, 9}, {10, 20}, {33, 7}, {50, 81}, {96, 63}};

std::vector<double> sweep_outputs(const GeneratorTree& t, ProbeVar var, const Slice& s) {
    std::vector<double> out;
    switch (var) {
        case ProbeVar::Degree:
            for (double k : kDegreeSweep) {
                EdgeContext ctx = base_context(s.i, s.j, k, s.d, s.xi);
                out.push_back(evaluate(t, ctx));
            }
            break;
        case ProbeVar::Distance:
            for (double d : kDistanceSweep) {
                EdgeContext ctx = base_context(s.i, s.j, s.k, d, s.xi);
                out.push_back(evaluate(t, ctx));
            }
            break;
        case ProbeVar::EdgeRatio:
            for (double xi : kRatioSweep) {
                EdgeContext ctx = base_context(s.i, s.j, s.k, s.d, xi);
                out.push_back(evaluate(t, ctx));
            }
            break;
        case ProbeVar::Identifier:
            for (auto [i, j] : kIdSweep) {
                EdgeContext ctx = base_context(i, j, s.k, s.d, s.xi);
                out.push_back(evaluate(t, ctx));
            }
            break;
    }
    return out;
}

double spread(const std::vector<double>& v) {
    double lo = v[0], hi = v[0];
    for (double x : v) { lo = std::min(lo, x); hi = std::max(hi, x); }
    return hi - lo;
}

double scale(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

bool varies(const std::vector<double>& v) {
    double s = scale(v);
    if (s == 0.0) return false;
    return spread(v) > kRelTolerance * s;
}

// L1 distance from v to its best non-decreasing fit (pool adjacent
// violators)
double isotonic_deviation(std::vector<double> v) {
    std::vector<double> level, weight;
    for (double x : v) {
        level.push_back(x);
        weight.push_back(1.0);
        while (level.size() > 1 && level[level.size() - 2] > level.back()) {
            double w = weight[weight.size() - 2] + weight.back();
            double m = (level[level.size() - 2] * weight[weight.size() - 2] +
                        level.back() * weight.back()) /
                       w;
            level.pop_back();
            weight.pop_back();
            level.back() = m;
            weight.back() = w;
        }
    }
    double dev = 0.0;
    std::size_t idx = 0;
    for (std::size_t b = 0; b < level.size(); ++b)
        for (int k = 0; k < static_cast<int>(weight[b]); ++k) dev += std::fabs(v[idx++] - level[b]);
    return dev;
}

// Direction of a sweep, judged in the large: +1 rising, -1 falling, 0
// constant, 2 neither. Evolved trees often carry a single-point dropout
// where a leftover conditional fires, so the fit may ignore one point, and
// the rest must stay within a tenth of the range of the best monotone fit.
int direction(std::vector<double> v) {
    double lo = v[0], hi = v[0];
    for (double x : v) { lo = std::min(lo, x); hi = std::max(hi, x); }
    double range = hi - lo;
    if (range <= kRelTolerance * std::max(scale(v), 1.0)) return 0;

    auto best_dev = [&](const std::vector<double>& w) {
        double best = isotonic_deviation(w);
        for (std::size_t skip = 0; skip < w.size(); ++skip) {
            std::vector<double> trimmed;
            trimmed.reserve(w.size() - 1);
            for (std::size_t i = 0; i < w.size(); ++i)
                if (i != skip) trimmed.push_back(w[i]);
            best = std::min(best, isotonic_deviation(trimmed));
        }
        return best;
    };
    double up_dev = best_dev(v);
    std::reverse(v.begin(), v.end());
    double down_dev = best_dev(v);
    double allowance = 0.10 * range * static_cast<double>(v.size()) / 10.0;
    if (std::min(up_dev, down_dev) > allowance) return 2;
    return up_dev <= down_dev ? 1 : -1;
}

}  // namespace

bool contains_variable(const GeneratorTree& tree) { return any_node(tree, NodeKind::Variable); }

bool contains_delta(const GeneratorTree& tree) { return any_node(tree, NodeKind::Delta); }

std::vector<double> delta_thresholds(const GeneratorTree& tree) {
    std::vector<double> out;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(tree.size()); ++i)
        if (tree.node(i).kind == NodeKind::Delta) out.push_back(tree.node(i).value);
    return out;
}

bool depends_on(const GeneratorTree& tree, ProbeVar var) {
    for (const Slice& s : kSlices)
        if (varies(sweep_outputs(tree, var, s))) return true;
    return false;
}

bool monotone_in(const GeneratorTree& tree, ProbeVar var) {
    bool any_strict = false;
    int sign = 0;
    for (const Slice& s : kSlices) {
        int dir = direction(sweep_outputs(tree, var, s));
        if (dir == 2) return false;
        if (dir != 0) {
            if (sign != 0 && dir != sign) return false;  // mixed directions across slices
            sign = dir;
            any_strict = true;
        }
    }
    return any_strict;
}

bool uniform_equivalent(const GeneratorTree& tree) {
    for (double xi : kRatioSweep) {
        double reference = 0.0;
        bool seeded = false;
        for (const Slice& s : kSlices) {
            for (double k : kDegreeSweep)
                for (double d : kDistanceSweep)
                    for (auto [i, j] : kIdSweep) {
                        EdgeContext ctx = base_context(i, j, k, d, xi);
                        double w = evaluate(tree, ctx);
                        if (!seeded) {
                            reference = w;
                            seeded = true;
                        } else if (std::fabs(w - reference) >
                                   kRelTolerance * std::max(std::fabs(reference), 1.0)) {
                            return false;
                        }
                    }
        }
    }
    return true;
}

bool degree_monotone(const GeneratorTree& tree) {
    return depends_on(tree, ProbeVar::Degree) && monotone_in(tree, ProbeVar::Degree);
}

bool distance_family(const GeneratorTree& tree) {
    return !contains_delta(tree) && depends_on(tree, ProbeVar::Distance) &&
           monotone_in(tree, ProbeVar::Distance);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::ER: return "ER";
        case Family::PA: return "PA";
        case Family::PAPrime: return "PA'";
        case Family::ID: return "ID";
        case Family::Distance: return "d";
        case Family::Other: return "other";
    }
    return "other";
}

namespace {

// Proportionality to a family representative, allowing a separate positive
// scale per slice: each slice holds the edge ratio fixed, so this quotients
// out the per-step scaling that selection cannot see.
bool proportional_to(const GeneratorTree& tree, const GeneratorTree& rep) {
    bool any = false;
    for (const Slice& s : kSlices) {
        double ratio = 0.0;
        bool seeded = false;
        for (ProbeVar var : {ProbeVar::Degree, ProbeVar::Distance, ProbeVar::Identifier}) {
            auto a = sweep_outputs(tree, var, s);
            auto b = sweep_outputs(rep, var, s);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (b[i] == 0.0) {
                    if (std::fabs(a[i]) > 1e-9) return false;
                    continue;
                }
                double r = a[i] / b[i];
                if (!seeded) {
                    if (r <= 0.0) return false;
                    ratio = r;
                    seeded = true;
                } else if (std::fabs(r - ratio) > 0.01 * std::fabs(ratio)) {
                    return false;
                }
            }
        }
        any |= seeded;
    }
    return any;
}

}  // namespace

Family classify_family(const GeneratorTree& tree) {
    if (uniform_equivalent(tree)) return Family::ER;

    const GeneratorTree k = GeneratorTree::variable(Var::Ki);
    const GeneratorTree kj = GeneratorTree::variable(Var::Kj);
    if (proportional_to(tree, k) || proportional_to(tree, kj)) return Family::PA;

    const GeneratorTree kk =
        compose(NodeKind::Pow, 0.0, {GeneratorTree::variable(Var::Ki), GeneratorTree::variable(Var::Ki)});
    const GeneratorTree kkj =
        compose(NodeKind::Pow, 0.0, {GeneratorTree::variable(Var::Kj), GeneratorTree::variable(Var::Kj)});
    if (proportional_to(tree, kk) || proportional_to(tree, kkj)) return Family::PAPrime;

    const GeneratorTree id_i = GeneratorTree::variable(Var::I);
    const GeneratorTree id_j = GeneratorTree::variable(Var::J);
    if (proportional_to(tree, id_i) || proportional_to(tree, id_j)) return Family::ID;

    const GeneratorTree d = GeneratorTree::variable(Var::D);
    if (proportional_to(tree, d)) return Family::Distance;
    return Family::Other;
}

}  // namespace netsr
