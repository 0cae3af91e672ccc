#include "arboreq/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "arboreq/errors.hpp"

namespace arboreq {

namespace {

// Union-find with union by size; enough for one-shot cycle checks.
struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false when x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size[rx] < size[ry]) std::swap(rx, ry);
        parent[ry] = rx;
        size[rx] += size[ry];
        return true;
    }
};

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    if (n < 0) throw parameter_error("graph: negative vertex count");
    adj_.resize(n);
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parameter_error("graph: edge endpoint out of range");
        if (u == v) throw parameter_error("graph: self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw parameter_error("graph: duplicate edge");
    }
}

Graph Graph::path_power(int n, int p) {
    if (n < 1 || p < 1) throw parameter_error("path_power: n and p must be positive");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n && v - u <= p; ++v) edges.emplace_back(u, v);
    Graph g(n, edges);
    g.set_family({"path_power", n, p, 0, 0});
    return g;
}

Graph Graph::cycle_power(int n, int p) {
    if (n < 3) throw parameter_error("cycle_power: n must be at least 3");
    if (p < 1) throw parameter_error("cycle_power: p must be positive");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = std::min(v - u, n - (v - u));
            if (d <= p) edges.emplace_back(u, v);
        }
    Graph g(n, edges);
    g.set_family({"cycle_power", n, p, 0, 0});
    return g;
}

Graph Graph::complete(int n) {
    if (n < 1) throw parameter_error("complete: n must be positive");
    Graph g = path_power(n, n);  // distance cap beyond diameter: all pairs
    g.set_family({"complete", n, 0, 0, 0});
    return g;
}

Graph Graph::complete_minus_edge(int n) {
    if (n < 2) throw parameter_error("complete_minus_edge: n must be at least 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == n - 1)) edges.emplace_back(u, v);
    Graph g(n, edges);
    g.set_family({"complete_minus_edge", n, 0, 0, 0});
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw parameter_error("complete_bipartite: sides must be positive");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    Graph g(a + b, edges);
    g.set_family({"complete_bipartite", 0, 0, a, b});
    return g;
}

Graph Graph::disjoint_union(const Graph& g1, const Graph& g2) {
    int off = g1.vertex_count();
    auto edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + off, v + off);
    Graph g(off + g2.vertex_count(), edges);
    g.set_family({"union", g.vertex_count(), 0, off, g2.vertex_count()});
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count()) throw parameter_error("graph: vertex out of range");
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& nbrs : adj_) deg_sum += static_cast<int>(nbrs.size());
    return deg_sum / 2;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographic by construction
}

bool Graph::is_forest() const {
    UnionFind uf(vertex_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v && !uf.unite(u, v)) return false;
    return true;
}

std::optional<Vertex> Graph::low_degree_vertex(int bound) const {
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (degree(v) <= bound) return v;
    return std::nullopt;
}

Induced Graph::induced_subgraph(const std::vector<Vertex>& keep) const {
    std::vector<int> new_id(vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (new_id[keep[i]] != -1) throw parameter_error("induced_subgraph: duplicate vertex");
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : keep)
        for (Vertex v : adj_[u])
            if (new_id[v] != -1 && new_id[u] < new_id[v])
                edges.emplace_back(new_id[u], new_id[v]);
    Induced result{Graph(static_cast<int>(keep.size()), edges), keep};
    return result;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(vertex_count(), false);
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex v : adj_[comp[i]])
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::pair<Vertex, Graph> remove_low_degree_vertex(const Graph& g, int bound) {
    if (g.vertex_count() == 0) throw parameter_error("remove_low_degree_vertex: empty graph");
    auto v = g.low_degree_vertex(bound);
    if (!v) throw structural_error("no vertex of degree <= " + std::to_string(bound));
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (u != *v) keep.push_back(u);
    return {*v, g.induced_subgraph(keep).graph};
}

bool is_degenerate(const Graph& g, int bound) {
    Graph cur = g;
    while (cur.vertex_count() > 0) {
        auto v = cur.low_degree_vertex(bound);
        if (!v) return false;
        cur = remove_low_degree_vertex(cur, bound).second;
    }
    return true;
}

}  // namespace arboreq
