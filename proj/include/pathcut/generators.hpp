#pragma once

#include <cstdint>
#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Circulant C_n(offsets): i ~ i +- s (mod n) for each offset s.
MultiGraph gen_circulant(int n, const std::vector<int>& offsets);

// Seeded pairing model with rejection until simple. nd must be even.
MultiGraph gen_random_regular(int n, int d, uint64_t seed);

// The 90-edge gadget: a center joined by 3 edges to each of 3 arms; each arm
// is three 8-edge paths meeting at a private apex.
MultiGraph gen_fig1_gadget();

}  // namespace pathcut
