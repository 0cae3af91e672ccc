#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arboreq {

using Vertex = int;

// Provenance of a constructed graph; drives strategy dispatch in the CLI.
struct FamilyTag {
    std::string kind;  // path_power, cycle_power, complete, complete_minus_edge,
                       // complete_bipartite, union, custom
    int n = 0;
    int p = 0;
    int a = 0;
    int b = 0;
};

struct Induced;

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

    // Family builders.  Vertex numbering follows the canonical orderings:
    // path vertices in order, cycle vertices in cyclic order.
    static Graph path_power(int n, int p);
    static Graph cycle_power(int n, int p);
    static Graph complete(int n);
    static Graph complete_minus_edge(int n);  // missing edge is {0, n-1}
    static Graph complete_bipartite(int a, int b);  // X = 0..a-1, Y = a..a+b-1
    static Graph disjoint_union(const Graph& g1, const Graph& g2);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // lexicographic, u < v

    bool is_forest() const;

    // Smallest-index vertex of degree <= bound, if any.
    std::optional<Vertex> low_degree_vertex(int bound) const;

    Induced induced_subgraph(const std::vector<Vertex>& keep) const;

    std::vector<std::vector<Vertex>> components() const;

    const std::optional<FamilyTag>& family() const { return family_; }
    void set_family(FamilyTag tag) { family_ = std::move(tag); }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::optional<FamilyTag> family_;

    void check_vertex(Vertex v) const;
};

struct Induced {
    Graph graph;
    std::vector<Vertex> original;  // new id -> original id
};

// Removes a vertex of degree <= bound (smallest index) and returns it with
// the remaining graph.  Throws structural_error when no such vertex exists.
std::pair<Vertex, Graph> remove_low_degree_vertex(const Graph& g, int bound);

// True when every subgraph has a vertex of degree <= bound.
bool is_degenerate(const Graph& g, int bound);

}  // namespace arboreq
