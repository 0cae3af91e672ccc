#include "arboreq/random.hpp"

#include <algorithm>
#include <numeric>

#include "arboreq/errors.hpp"

namespace arboreq {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw parameter_error("Rng::below: bound must be positive");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r < limit) return r % bound;
    }
}

std::vector<int> Rng::sample_sorted(int universe, int k) {
    if (k < 0 || k > universe) throw parameter_error("sample_sorted: bad k");
    std::vector<int> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + index(universe - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

ListAssignment random_k_assignment(int n, int k, int universe, Rng& rng) {
    if (k < 1 || universe < k) throw parameter_error("random_k_assignment: need universe >= k >= 1");
    ListAssignment L(n);
    for (Vertex v = 0; v < n; ++v) L.set_list(v, rng.sample_sorted(universe, k));
    return L;
}

Graph random_2degenerate(int n, Rng& rng) {
    if (n < 2) throw parameter_error("random_2degenerate: need n >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
    for (Vertex v = 2; v < n; ++v) {
        int attach = 1 + rng.index(2);
        if (attach == 1) {
            edges.emplace_back(rng.index(v), v);
        } else {
            int first = rng.index(v);
            int second = rng.index(v - 1);
            if (second >= first) ++second;
            edges.emplace_back(std::min(first, second), v);
            edges.emplace_back(std::max(first, second), v);
        }
    }
    return Graph(n, edges);
}

Graph random_bounded_degree(int n, int max_deg, Rng& rng, int saturated_quota) {
    if (n < 1 || max_deg < 0) throw parameter_error("random_bounded_degree: bad parameters");
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (int i = static_cast<int>(all.size()) - 1; i > 0; --i)
        std::swap(all[i], all[rng.index(i + 1)]);
    std::vector<int> deg(n, 0);
    int saturated = 0;
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [u, v] : all) {
        if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
        int hits = (deg[u] == max_deg - 1) + (deg[v] == max_deg - 1);
        if (saturated_quota >= 0 && saturated + hits > saturated_quota) continue;
        kept.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
        saturated += hits;
    }
    return Graph(n, kept);
}

}  // namespace arboreq
