#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

// mt19937_64 with hand-rolled bounded sampling so that streams are identical
// across standard libraries (uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound >= 1, via rejection sampling.
    std::uint64_t below(std::uint64_t bound);
    int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
    bool coin() { return (engine_() & 1u) != 0; }

    // k distinct values from [0, universe), sorted.
    std::vector<int> sample_sorted(int universe, int k);

private:
    std::mt19937_64 engine_;
};

// Independent uniform k-subsets of {0, .., universe-1} per vertex.
ListAssignment random_k_assignment(int n, int k, int universe, Rng& rng);

// Connected 2-degenerate graph built by attaching each new vertex to one or
// two uniformly chosen earlier vertices, starting from a single edge.
Graph random_2degenerate(int n, Rng& rng);

// Random graph with maximum degree <= max_deg: edges of K_n in random order,
// kept while both endpoints have room.  A nonnegative saturated_quota also
// bounds how many vertices may reach degree max_deg.
Graph random_bounded_degree(int n, int max_deg, Rng& rng, int saturated_quota = -1);

}  // namespace arboreq
