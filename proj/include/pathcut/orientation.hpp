#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Per-component euler-tour orientation after virtually pairing odd-degree
// vertices: |d+(v) - d-(v)| <= 1, exact at even-degree vertices.
Orientation balanced_orientation(const MultiGraph& g);
Orientation balanced_orientation_seeded(const MultiGraph& g, uint64_t seed);

// max over v of |d+(v)-d-(v)|
int balance_defect(const MultiGraph& g, const Orientation& d);

struct ArcStrongResult {
    Orientation orientation;
    int repairs = 0;
    int restarts = 0;
    bool certified = false;
};

// Balanced orientation that is k-arc-strong, certified by max-flows from and
// to a fixed root. Randomized restarts plus balance-preserving path-reversal
// repairs; throws BudgetError when the budget runs out without a certificate.
ArcStrongResult balanced_arc_strong(const MultiGraph& g, int k, int budget, uint64_t seed);

// Certificate check used by balanced_arc_strong and by tests: min over v of
// min(lambda(z,v), lambda(v,z)) >= k. Returns a violating vertex if any.
std::optional<int> arc_strong_deficiency(const MultiGraph& g, const Orientation& d, int k);

}  // namespace pathcut
