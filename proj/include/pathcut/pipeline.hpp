#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathcut/multigraph.hpp"
#include "pathcut/pathgraph.hpp"
#include "pathcut/tour.hpp"

namespace pathcut {

struct PipelineConfig {
    int ell = 3;
    uint64_t seed = 1;

    int l_desk = 9;        // degree threshold for the dense stage
    int cone_c = 0;        // 0 = ceil(sqrt(l_desk))
    int cone_b = 0;        // 0 = ceil(c^(2/3))
    double eps_desk = 0.3;
    int resample_budget = 64;
    int orient_budget = 400;
    int cut_tries = 12;
    int stage_attempts = 8;
    int tour_restarts = 64;
    int min_degree = 4;

    bool strict_conf = false;
    bool strict_fraction_splits = false;
    bool strict_cones = false;
    bool allow_any_incident_path = true;
    bool double_odd_ell = false;   // run the whole pipeline at 2*ell for odd ell
    int l2l_min_degree = 14;       // feasibility gate for the bipartite tree route
    int split_min_degree = 12;     // feasibility gate for the 1/(9l), 1/(5l) splits

    int derived_c() const;
    int derived_b() const;

    static PipelineConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Certified edge partition into ell-paths plus at most one shorter path.
struct Decomposition {
    int ell = 0;
    uint64_t seed = 0;
    std::vector<Path> paths;
    std::optional<Path> leftover;
    nlohmann::json stages;  // telemetry per stage
};

// Slices a non-conflicting tour into consecutive ell-paths. When dummy_path
// is a tour member, the cut starts right after it and the dummy is dropped.
// Every slice is re-verified simple; a violation is an internal error.
Decomposition cut_tour(const PathGraph& h, const Tour& tour, int ell, int dummy_path = -1);

// Theorem route for 24-edge-connected hosts: max cut, 6 arc-disjoint
// arborescences, parity fixing, [ell, ell+3] cover, non-conflicting tour,
// and cutting.
Decomposition decompose_24(const MultiGraph& g, const PipelineConfig& cfg);

// Eulerian variant: 4-edge-connected eulerian hosts, no parity repair.
Decomposition decompose_eulerian4(const MultiGraph& g, const PipelineConfig& cfg);

struct EulerTourResult {
    std::vector<int> edge_tour;    // host edge ids in traversal order
    std::vector<int> vertex_tour;  // first == last
    nlohmann::json stages;
};

// Eulerian tour with no closed subwalk of length <= ell (window-checked).
EulerTourResult euler_tour_no_short_cycle(const MultiGraph& g, const PipelineConfig& cfg);

// JSON report of a decomposition in the documented schema.
nlohmann::json decomposition_report(const MultiGraph& g, const Decomposition& d, bool verified);

// DOT export, one color per path.
std::string dot_export(const MultiGraph& g, const Decomposition& d);

}  // namespace pathcut
