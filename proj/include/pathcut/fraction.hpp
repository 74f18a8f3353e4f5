#pragma once

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Subgraph H of a host with per-vertex degrees tracking alpha*d_G(v).
struct Fraction {
    EdgeSet edges;
    long long alpha_num = 1, alpha_den = 1;
    int achieved_slack = 0;  // max over v of |d_H(v) - alpha d_G(v)|, rounded up

    double alpha() const { return static_cast<double>(alpha_num) / static_cast<double>(alpha_den); }
};

// One color class of an equitable k-coloring: |d_H(v) - d_G(v)/k| <= 2.
Fraction k_fraction(const MultiGraph& g, int k);

// Union of p classes of an equitable q-coloring, alpha = p/q. Achieved slack
// is measured exactly and must stay within slack_budget.
Fraction alpha_fraction(const MultiGraph& g, long long p, long long q, int slack_budget);

}  // namespace pathcut
