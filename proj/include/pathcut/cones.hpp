#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pathcut/coloring.hpp"
#include "pathcut/multigraph.hpp"
#include "pathcut/pathgraph.hpp"

namespace pathcut {

// Colored, oriented, half-cone-partitioned view of a graph. Items are real
// edges (ids 0..m-1) and dummy edges (ids m..). Each i-half-cone at v holds
// i-colored in-items of v; its paired (i+1)-half-cone holds (i+1)-colored
// out-items. Unpaired 1-half-cones (color-1 out) and ell-half-cones (color-
// ell in) are kept as single-sided cones.
class ConeSystem {
  public:
    struct Dummy {
        int vertex;
        int color;
        bool from_dummy;  // true: v0 -> v (an in-item of v); false: v -> v0
    };
    struct HalfCone {
        int vertex;
        int color;
        bool incoming;
        std::vector<int> items;
    };
    struct Cone {
        int minus = -1;  // half-cone indices; one side is -1 for specials
        int plus = -1;
    };

    const MultiGraph* host = nullptr;
    int ell = 0;
    int c = 0;
    EdgeColoring coloring;
    Orientation orientation;
    std::vector<Dummy> dummies;
    std::vector<HalfCone> halves;
    std::vector<Cone> cones;
    // per item, the cones it belongs to: [head-side, tail-side], -1 if none
    std::vector<std::array<int, 2>> item_cones;
    bool strict_sizes_ok = true;  // all half-cones sized c or c-1

    int num_items() const { return host->num_edges() + static_cast<int>(dummies.size()); }
    bool is_dummy(int item) const { return item >= host->num_edges(); }
    int item_color(int item) const;
    int item_tail(int item) const;  // dummy endpoint reported as -1
    int item_head(int item) const;
    int cone_size(int cone) const;
};

// Builds the cone system from an ell-coloring and per-color balanced
// orientation. Half-cone partitions are seeded; when a per-direction set is
// too small for the {c, c-1} partition, one undersized half-cone is allowed
// unless strict is set (then a PreconditionError names the vertex/color).
ConeSystem build_cone_system(const MultiGraph& g, const EdgeColoring& coloring,
                             const Orientation& orientation, int ell, int c, uint64_t seed,
                             bool strict = false);

// Convenience: equitable coloring + per-color balanced orientation first.
ConeSystem build_cone_system(const MultiGraph& g, int ell, int c, uint64_t seed,
                             bool strict = false);

// Per-color balanced orientation merged over all classes.
Orientation per_color_balanced_orientation(const MultiGraph& g, const EdgeColoring& col);

// Chain-aware refinement: pair recolorings that reduce the number of dummy
// edges the cone construction would need (the per-vertex in/out chain
// mismatch), while keeping the de Werra bound intact.
void refine_coloring_for_chains(const MultiGraph& g, EdgeColoring& col, int sweeps = 8);

struct WalkDecomposition {
    enum class Kind : uint8_t { path, bad, shortw };
    struct Walk {
        std::vector<int> items;  // ascending colors
        Kind kind;
    };
    std::vector<Walk> walks;
    std::vector<int> walk_of_item;  // per item
    int bad_count = 0;
    int short_count = 0;
};

// Traces the rainbow walks of the current pairing: each cone's two half
// cones matched by independently seeded uniform permutations.
WalkDecomposition sample_and_classify(const ConeSystem& cs, uint64_t seed);

struct ConeEvents {
    struct Row {
        int cone;
        int size;
        int bad = 0;
        int shortw = 0;
        int max_mult = 0;  // max over vertices of walks via this cone containing it
        bool flag_a = false, flag_b = false, flag_bp = false;
    };
    std::vector<Row> rows;
    int flagged = 0;
};

ConeEvents cone_events(const ConeSystem& cs, const WalkDecomposition& wd, int b);

struct ResampleResult {
    PathGraph h;             // the path walks
    std::vector<uint8_t> forward;  // all true: walks run start -> end
    EdgeSet remainder;       // real edges of bad/short walks
    ConeEvents events;
    WalkDecomposition walks;
    bool cleared = false;
    int rounds = 0;
};

// Moser-Tardos style loop: re-seed the permutations of flagged cones and of
// cones met by walks through them until no cone flags A/B/B'; one global
// reseed halfway through the budget. Returns the best attempt either way;
// callers decide whether !cleared is fatal.
ResampleResult resample_until_clear(const ConeSystem& cs, int b, int budget, uint64_t seed);

struct DenseParams {
    int ell = 3;
    int c = 3;
    int b = 3;
    int resample_budget = 64;
    int l_desk = 9;           // min-degree gate
    double eps = 0.3;
    bool strict_cones = false;
    bool strict_eps = false;  // enforce the degree/conf/remainder windows
};

struct DenseStats {
    double min_ratio = 0, max_ratio = 0;  // d_H(v)/d_G(v) range over vertices
    double max_conf = 0;
    double max_remainder_ratio = 0;  // d_R(v)/d_H(v)
    int dummy_edges = 0;
    int bad_walks = 0, short_walks = 0;
    int rounds = 0;
    bool windows_ok = false;
};

struct DenseResult {
    OrientedPathGraph h;  // walk directions kept
    EdgeSet remainder;
    DenseStats stats;
};

// Theorem-3.4 composition: equitable ell-coloring, per-color balanced
// orientation, cones, resample-until-clear, then the degree/conf/remainder
// window checks at the configured eps.
DenseResult dense_path_graph(const MultiGraph& g, const DenseParams& params, uint64_t seed);

struct Ll1Params {
    DenseParams dense;
    int split_min_degree = 12;  // skip the 1/(9 ell) split below this
    bool strict_split = false;  // force the paper's split regardless
    bool strict_conf = false;   // enforce conf <= 1/(4(ell+10))
    bool allow_any_incident_path = true;
    double eps_prime = 0.3;
    int attempts = 4;  // seeded internal retries
};

struct Ll1Stats {
    bool split_used = false;
    double max_conf = 0;
    double conf_bound = 0;
    bool conf_ok = false;
    double min_ratio = 0, max_ratio = 0;
    bool window_ok = false;
    int extended_paths = 0;
    DenseStats dense1, dense2;
};

struct Ll1Result {
    OrientedPathGraph h;  // (ell, ell+1)-paths decomposing the host
    Ll1Stats stats;
};

// Theorem-3.5 construction: split into a 1/(9 ell)-fraction and complement,
// dense path graphs on each, then absorb both remainders into private
// ell-paths to form an (ell, ell+1)-path-graph decomposing the host.
Ll1Result ll1_decomposition(const MultiGraph& g, const Ll1Params& params, uint64_t seed);

}  // namespace pathcut
