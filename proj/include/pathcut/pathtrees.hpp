#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathcut/cones.hpp"
#include "pathcut/multigraph.hpp"
#include "pathcut/pathgraph.hpp"

namespace pathcut {

// Path graph whose shadow is a tree (paths may still intersect internally).
struct PathTree {
    PathGraph graph;
    int root = 0;

    bool shadow_is_tree() const;
    std::vector<int> support() const;  // vertices with positive shadow degree
    int max_shadow_degree() const;
};

// One line per reduction step when non-null: "case | merged | detail".
using StepTrace = std::vector<std::string>*;

// Lemma "subcubic spanning (1,2)-path-tree of a bridgeless multigraph":
// DFS arborescence with lowest-ancestor back arcs, pruned to the ones strong
// connectivity needs, then the four-case reduction on a deepest internal
// node. Only edges of `avail` are used.
PathTree subcubic_12_path_tree(const MultiGraph& host, const EdgeSet& avail,
                               StepTrace trace = nullptr, uint64_t dfs_seed = 0);
PathTree subcubic_12_path_tree(const MultiGraph& host, StepTrace trace = nullptr,
                               uint64_t dfs_seed = 0);

struct ExtendResult {
    PathTree tree;      // (1, k+1)-path-tree
    EdgeSet used_h;     // additional-graph edges consumed
    EdgeSet released;   // former tree edges dropped by the y-in-X1 case
};

// Grows a (1,k)-path-tree into a (1,k+1)-path-tree using private edges of a
// balanced orientation of the additional graph `h`.
ExtendResult extend_path_tree(const MultiGraph& host, const PathTree& tree, int k,
                              const EdgeSet& h, uint64_t seed, StepTrace trace = nullptr);

struct GrowParams {
    bool equal_fractions = true;  // desk split of h; false = 4x schedule
    int attempts = 3;
};

struct GrowResult {
    PathTree tree;      // (1, ell+1)-path-tree
    EdgeSet leftover;   // (g union h) minus the tree's edges
    bool degree_dominated = true;  // d_T(v) <= d_H(v) at every vertex
};

// Corollary route: subcubic (1,2)-path-tree of g, then ell-1 extension
// rounds over fractions of h.
GrowResult grow_1_ellplus1(const MultiGraph& host, const EdgeSet& g, const EdgeSet& h, int ell,
                           const GrowParams& params, uint64_t seed, StepTrace trace = nullptr);

struct L2LParams {
    GrowParams grow;
    DenseParams dense;          // for the (ell-1)-path-graph on h
    long long reserve_num = 1;  // fraction of h reserved for the (1,ell+1) tree
    long long reserve_den = 4;
    bool allow_any_incident_path = true;
    int attempts = 4;
};

struct L2LResult {
    PathTree tree;     // (ell, 2ell)-path-tree spanning side A
    EdgeSet leftover;  // unused edges of g and h
    bool degree_dominated = true;
};

// Bipartite (ell,2ell)-path-tree spanning the A side (ell even): (1,ell+1)
// tree plus private (ell-1)-paths from a dense path graph on h.
L2LResult bipartite_l2l_tree(const MultiGraph& host, const EdgeSet& g, const EdgeSet& h,
                             const std::vector<uint8_t>& side, int ell, const L2LParams& params,
                             uint64_t seed, StepTrace trace = nullptr);

struct CoverParams {
    Ll1Params ll1;
    long long split_num = 1;  // the 1/(5 ell) fraction; skipped at desk degrees
    bool strict_split = false;
    int split_min_degree = 12;
    bool allow_any_incident_path = true;
    bool strict_conf = false;
    int attempts = 8;
};

struct CoverStats {
    double max_conf = 0;
    double conf_bound = 0;
    bool conf_ok = false;
    bool split_used = false;
    int tree_absorptions = 0;
    int returned_paths = 0;
};

struct CoverResult {
    PathGraph h;  // connected [ell, ell+3]-path-graph covering g1 union g2
    CoverStats stats;
};

// Lemma route: subcubic (1,2)-path-tree of g1 absorbed into private
// (ell,ell+1)-paths of an ll1 decomposition of g2 plus g1's leftovers.
CoverResult cover_llp1(const MultiGraph& host, const EdgeSet& g1, const EdgeSet& g2, int ell,
                       const CoverParams& params, uint64_t seed, StepTrace trace = nullptr);

// Unique sub-collection F of the tree's paths whose shadow degree is odd
// exactly on X (|X| even); bottom-up on the shadow tree.
std::vector<int> parity_subtree(const PathTree& tree, const std::vector<int>& x);

}  // namespace pathcut
