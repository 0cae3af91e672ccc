#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arboreq/graph.hpp"

namespace arboreq {

using ColorId = int;

// Per-vertex set of available colors.  Lists are kept sorted and unique.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int n) : lists_(n) {}

    int size() const { return static_cast<int>(lists_.size()); }
    void set_list(Vertex v, std::vector<ColorId> colors);
    const std::vector<ColorId>& list(Vertex v) const;
    bool has(Vertex v, ColorId c) const;

    bool is_k_assignment(int k) const;
    // Common list size when uniform, nullopt otherwise.
    std::optional<int> uniform_size() const;

    // Sorted union of all list colors.
    std::vector<ColorId> palette() const;

    // Lists preserved on `keep`, relabeled consistently with
    // Graph::induced_subgraph(keep).
    ListAssignment restrict_to(const std::vector<Vertex>& keep) const;

    static ListAssignment uniform(int n, std::vector<ColorId> colors);

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<ColorId>> lists_;
};

// Partial map vertex -> color; -1 marks uncolored internally.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : color_(n, kNone) {}

    int size() const { return static_cast<int>(color_.size()); }
    bool is_colored(Vertex v) const { return color_.at(v) != kNone; }
    std::optional<ColorId> color(Vertex v) const;
    void set(Vertex v, ColorId c);
    void unset(Vertex v);
    bool is_total() const;
    int colored_count() const;

    // Color -> sorted members, colored vertices only.
    std::map<ColorId, std::vector<Vertex>> classes() const;

    bool operator==(const PartialColoring&) const = default;

private:
    static constexpr int kNone = -1;
    std::vector<int> color_;
};

struct VerificationReport {
    bool list_respected = true;
    bool arborable = true;
    bool total = true;
    int cap = 0;
    int max_class_size = 0;
    std::optional<ColorId> offending_class;
    std::optional<std::vector<Vertex>> offending_cycle;

    bool equitable() const { return max_class_size <= cap; }
};

// ceil(n / k)
int equity_cap(int n, int k);

// Checks f against L and per-class acyclicity in g.  Failures are reported,
// never thrown; a witness cycle is extracted for the first non-forest class.
VerificationReport verify_arborable_L_coloring(const Graph& g, const ListAssignment& L,
                                               const PartialColoring& f, bool require_total);

// Checks the class-size cap ceil(n/k) for a total coloring.
VerificationReport verify_equitable(const Graph& g, int k, const PartialColoring& f);

// True iff f is a total coloring into colors 0..k-1 whose class sizes (empty
// classes included) realize the exact equitable multiset and every class
// induces a forest.
bool verify_equitable_vertex_partition(const Graph& g, int k, const PartialColoring& f);

}  // namespace arboreq
