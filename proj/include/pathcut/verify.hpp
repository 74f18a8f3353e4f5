#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathcut/multigraph.hpp"
#include "pathcut/pathgraph.hpp"

namespace pathcut {

struct VerificationReport {
    bool verdict = false;
    struct Violation {
        std::string type;
        std::string where;
    };
    std::vector<Violation> violations;
    int path_count = 0;
    int leftover_length = 0;
    int coverage_delta = 0;  // |E| minus edges covered exactly once

    std::string summary() const;
};

// Exact partition check: every edge exactly once, each path simple and valid
// in g with length ell, at most one leftover of length 1..ell.
VerificationReport verify_decomposition(const MultiGraph& g, const std::vector<Path>& paths,
                                        const std::optional<Path>& leftover, int ell);

struct OracleOptions {
    int edge_limit = 128;
    double budget_seconds = 0;       // 0 = unlimited
    std::vector<int> resume_state;   // choice indices from a capped run
};

struct OracleResult {
    enum class Verdict { yes, no, capped };
    Verdict verdict;
    std::vector<Path> witness;       // filled on yes
    std::vector<int> state;          // resume point when capped
    long long nodes_explored = 0;
};

// Exact backtracking over simple ell-paths through the lowest uncovered
// edge, with divisibility and degree-parity pruning.
OracleResult brute_force_decomposable(const MultiGraph& g, int ell,
                                      const OracleOptions& opt = {});

// Independent cross-check used by the acceptance suite: enumerate edge
// permutations and test consecutive ell-blocks as walk-ordered paths.
bool permutation_decomposable(const MultiGraph& g, int ell);

}  // namespace pathcut
