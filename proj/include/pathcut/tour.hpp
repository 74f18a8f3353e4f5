#pragma once

#include <cstdint>
#include <vector>

#include "pathcut/pathgraph.hpp"

namespace pathcut {

// Closed traversal of all paths of a path graph: consecutive steps share
// their connecting vertex, every path used exactly once.
struct Tour {
    struct Step {
        int path;
        bool forward;  // traversal direction relative to stored vertex order
    };
    std::vector<Step> steps;

    int start_of(const PathGraph& h, int i) const {
        const Path& p = h.path(steps[i].path);
        return steps[i].forward ? p.front() : p.back();
    }
    int end_of(const PathGraph& h, int i) const {
        const Path& p = h.path(steps[i].path);
        return steps[i].forward ? p.back() : p.front();
    }
    // flattened host walk: vertex sequence (first == last) and edge sequence
    std::vector<int> edge_sequence(const PathGraph& h) const;
    std::vector<int> vertex_sequence(const PathGraph& h) const;
};

struct TourCheck {
    bool each_path_once = false;
    bool continuous = false;
    int conflicting_pairs = -1;
    bool ok() const { return each_path_once && continuous && conflicting_pairs == 0; }
};

TourCheck verify_tour(const PathGraph& h, const TransitionSystem& s, const Tour& t);

struct TourResult {
    Tour tour;
    int repairs = 0;
    int restarts = 0;
    bool jackson_holds = false;
};

// Non-conflicting eulerian tour: Hierholzer on the shadow, then forbidden
// transitions repaired by same-vertex segment reversals that strictly shrink
// the conflict count; seeded restarts cap the search. The returned tour is
// always verified. Throws PreconditionError when the shadow is not eulerian
// or not connected, BudgetError when repairs + restarts run out.
TourResult euler_tour_nonconflicting(const PathGraph& h, uint64_t seed, int restart_budget = 48);

}  // namespace pathcut
