#include "pathcut/fraction.hpp"

#include <cmath>

#include "pathcut/coloring.hpp"
#include "pathcut/errors.hpp"

namespace pathcut {

namespace {

Fraction classes_fraction(const MultiGraph& g, const EdgeColoring& col, int p, long long q) {
    Fraction f;
    f.edges = EdgeSet(g.num_edges());
    f.alpha_num = p;
    f.alpha_den = q;
    for (int e = 0; e < g.num_edges(); ++e)
        if (col.color[e] <= p) f.edges.insert(e);
    auto deg = subset_degrees(g, f.edges);
    double worst = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double target = static_cast<double>(g.degree(v)) * p / static_cast<double>(q);
        worst = std::max(worst, std::abs(deg[v] - target));
    }
    f.achieved_slack = static_cast<int>(std::ceil(worst - 1e-9));
    return f;
}

}  // namespace

Fraction k_fraction(const MultiGraph& g, int k) {
    require(k >= 1, "k_fraction: k >= 1 required");
    if (k == 1) {
        Fraction f;
        f.edges = EdgeSet::all(g.num_edges());
        f.achieved_slack = 0;
        return f;
    }
    EdgeColoring col = nearly_equitable_coloring(g, k);
    Fraction f = classes_fraction(g, col, 1, k);
    check_internal(f.achieved_slack <= 2, "k_fraction: slack bound 2 violated");
    return f;
}

Fraction alpha_fraction(const MultiGraph& g, long long p, long long q, int slack_budget) {
    require(q >= 1 && p >= 0 && p <= q, "alpha_fraction: need 0 <= p/q <= 1");
    if (p == q) {  // degenerate alpha = 1, accepted
        Fraction f;
        f.edges = EdgeSet::all(g.num_edges());
        f.alpha_num = p;
        f.alpha_den = q;
        return f;
    }
    if (p == 0) {
        Fraction f;
        f.edges = EdgeSet(g.num_edges());
        f.alpha_num = 0;
        f.alpha_den = q;
        return f;
    }
    require(q <= 1024, "alpha_fraction: denominator too large");
    EdgeColoring col = nearly_equitable_coloring(g, static_cast<int>(q));
    Fraction f = classes_fraction(g, col, static_cast<int>(p), q);
    if (f.achieved_slack > slack_budget)
        throw PreconditionError("alpha_fraction: slack " + std::to_string(f.achieved_slack) +
                                " exceeds budget " + std::to_string(slack_budget));
    return f;
}

}  // namespace pathcut
