#include "arboreq/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "arboreq/errors.hpp"

namespace arboreq {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
    std::uint64_t nodes = 0;
    std::uint64_t node_limit;
    Clock::time_point deadline;
    bool has_deadline;
    bool exhausted = false;

    explicit BudgetTracker(SearchBudget b)
        : node_limit(b.node_limit), has_deadline(b.time_limit_secs > 0) {
        if (has_deadline)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(b.time_limit_secs));
    }

    // Returns false when the budget is spent.
    bool tick() {
        if (exhausted) return false;
        if (++nodes > node_limit) {
            exhausted = true;
        } else if (has_deadline && (nodes & 0x3ff) == 0 && Clock::now() > deadline) {
            exhausted = true;
        }
        return !exhausted;
    }
};

// Union-find without path compression so that unions can be undone in LIFO
// order.  One instance per color class.
class RollbackForest {
public:
    explicit RollbackForest(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Attaches the two components; returns false (and records nothing) when
    // x and y are already connected, i.e. the union would close a cycle.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        trail_.push_back(ry);
        return true;
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            int child = trail_.back();
            trail_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

// Shared search state: one rollback forest and one size counter per palette
// color, vertices assigned in a fixed order.
struct ClassState {
    std::vector<RollbackForest> forest;  // indexed by palette position
    std::vector<int> class_size;

    ClassState(int n, int palette_size)
        : forest(palette_size, RollbackForest(n)), class_size(palette_size, 0) {}
};

std::vector<Vertex> descending_degree_order(const Graph& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

struct ExactSearch {
    const Graph& g;
    const std::vector<std::vector<int>>& choices;  // palette positions per vertex
    int cap;
    std::vector<Vertex> order;
    std::vector<int> assigned;  // palette position or -1, by vertex
    ClassState state;
    BudgetTracker& budget;

    ExactSearch(const Graph& graph, const std::vector<std::vector<int>>& ch, int cap_,
                int palette_size, BudgetTracker& b)
        : g(graph),
          choices(ch),
          cap(cap_),
          order(descending_degree_order(graph)),
          assigned(graph.vertex_count(), -1),
          state(graph.vertex_count(), palette_size),
          budget(b) {}

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        if (!budget.tick()) return false;
        Vertex v = order[depth];
        for (int p : choices[v]) {
            if (state.class_size[p] >= cap) continue;
            auto& forest = state.forest[p];
            std::size_t mark = forest.mark();
            bool cycle = false;
            for (Vertex u : g.neighbors(v)) {
                if (assigned[u] != p) continue;
                if (!forest.unite(v, u)) {
                    cycle = true;
                    break;
                }
            }
            if (!cycle) {
                assigned[v] = p;
                ++state.class_size[p];
                if (run(depth + 1)) return true;
                --state.class_size[p];
                assigned[v] = -1;
            }
            forest.rollback(mark);
            if (budget.exhausted) return false;
        }
        return false;
    }
};

}  // namespace

Verdict exact_equitable_arborable(const Graph& g, const ListAssignment& L, int cap,
                                  SearchBudget budget) {
    if (L.size() != g.vertex_count())
        throw parameter_error("exact search: assignment size mismatch");
    if (cap < 1) throw parameter_error("exact search: cap must be positive");
    if (g.vertex_count() == 0) {
        Verdict empty;
        empty.status = Status::Feasible;
        empty.witness = PartialColoring(0);
        return empty;
    }

    std::vector<ColorId> palette = L.palette();
    std::map<ColorId, int> pos;
    for (std::size_t i = 0; i < palette.size(); ++i) pos[palette[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> choices(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (L.list(v).empty()) {
            Verdict out;
            out.status = Status::Infeasible;
            return out;
        }
        for (ColorId c : L.list(v)) choices[v].push_back(pos.at(c));
    }

    BudgetTracker tracker(budget);
    ExactSearch search(g, choices, cap, static_cast<int>(palette.size()), tracker);
    bool found = search.run(0);

    Verdict out;
    out.nodes = tracker.nodes;
    if (found) {
        PartialColoring witness(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) witness.set(v, palette[search.assigned[v]]);
        auto rep = verify_arborable_L_coloring(g, L, witness, true);
        if (!rep.list_respected || !rep.arborable || rep.max_class_size > cap)
            throw internal_error("exact search: witness failed verification");
        out.status = Status::Feasible;
        out.witness = std::move(witness);
    } else {
        out.status = tracker.exhausted ? Status::Unknown : Status::Infeasible;
    }
    return out;
}

namespace {

struct PartitionSearch {
    const Graph& g;
    int k;
    int lo, hi, num_hi;  // exact multiset: num_hi classes of size hi, rest lo
    std::vector<Vertex> order;
    std::vector<int> assigned;
    ClassState state;
    BudgetTracker& budget;

    PartitionSearch(const Graph& graph, int k_, BudgetTracker& b)
        : g(graph),
          k(k_),
          lo(graph.vertex_count() / k_),
          hi(equity_cap(graph.vertex_count(), k_)),
          num_hi(graph.vertex_count() % k_),
          order(descending_degree_order(graph)),
          assigned(graph.vertex_count(), -1),
          state(graph.vertex_count(), k_),
          budget(b) {}

    bool sizes_can_complete(std::size_t depth) const {
        int remaining = static_cast<int>(order.size() - depth);
        int deficit = 0, over_lo = 0, headroom = 0;
        for (int c = 0; c < k; ++c) {
            deficit += std::max(0, lo - state.class_size[c]);
            if (state.class_size[c] > lo) ++over_lo;
            headroom += hi - state.class_size[c];
        }
        if (hi != lo && over_lo > num_hi) return false;
        return deficit <= remaining && remaining <= headroom;
    }

    bool run(std::size_t depth, int used_colors) {
        if (depth == order.size()) {
            if (hi == lo) return true;
            int over = 0;
            for (int c = 0; c < k; ++c)
                if (state.class_size[c] == hi) ++over;
            return over == num_hi;
        }
        if (!budget.tick()) return false;
        Vertex v = order[depth];
        int limit = std::min(k, used_colors + 1);  // symmetry breaking
        for (int c = 0; c < limit; ++c) {
            int max_allowed = hi;
            if (hi != lo && state.class_size[c] == lo) {
                // growing past lo commits this class to size hi
                int over_lo = 0;
                for (int d = 0; d < k; ++d)
                    if (state.class_size[d] > lo) ++over_lo;
                if (over_lo >= num_hi) max_allowed = lo;
            }
            if (state.class_size[c] >= max_allowed) continue;
            auto& forest = state.forest[c];
            std::size_t mark = forest.mark();
            bool cycle = false;
            for (Vertex u : g.neighbors(v)) {
                if (assigned[u] != c) continue;
                if (!forest.unite(v, u)) {
                    cycle = true;
                    break;
                }
            }
            if (!cycle) {
                assigned[v] = c;
                ++state.class_size[c];
                if (sizes_can_complete(depth + 1) &&
                    run(depth + 1, std::max(used_colors, c + 1)))
                    return true;
                --state.class_size[c];
                assigned[v] = -1;
            }
            forest.rollback(mark);
            if (budget.exhausted) return false;
        }
        return false;
    }
};

}  // namespace

Verdict decide_equitable_vertex_arborable(const Graph& g, int k, SearchBudget budget) {
    if (k < 1) throw parameter_error("vertex-arborable decision: k must be positive");
    Verdict out;
    if (g.vertex_count() == 0) {
        out.status = Status::Feasible;
        out.witness = PartialColoring(0);
        return out;
    }
    BudgetTracker tracker(budget);
    PartitionSearch search(g, k, tracker);
    bool found = search.run(0, 0);
    out.nodes = tracker.nodes;
    if (found) {
        PartialColoring witness(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) witness.set(v, search.assigned[v]);
        if (!verify_equitable_vertex_partition(g, k, witness))
            throw internal_error("vertex-arborable decision: witness failed verification");
        out.status = Status::Feasible;
        out.witness = std::move(witness);
    } else {
        out.status = tracker.exhausted ? Status::Unknown : Status::Infeasible;
    }
    return out;
}

namespace {

// Enumerates canonical k-assignments vertex by vertex: a vertex's list is a
// subset of the colors seen so far plus a consecutive block of fresh ones.
struct AssignmentEnumerator {
    const Graph& g;
    int k, universe, cap;
    BudgetTracker& budget;
    ListAssignment current;
    std::optional<ListAssignment> refutation;
    bool unknown = false;

    AssignmentEnumerator(const Graph& graph, int k_, int universe_, BudgetTracker& b)
        : g(graph),
          k(k_),
          universe(universe_),
          cap(equity_cap(graph.vertex_count(), k_)),
          budget(b),
          current(graph.vertex_count()) {}

    // Returns false to abort (refutation found or budget spent).
    bool enumerate(Vertex v, int used) {
        if (v == g.vertex_count()) {
            SearchBudget inner;
            inner.node_limit = budget.node_limit > budget.nodes
                                   ? budget.node_limit - budget.nodes
                                   : 0;
            Verdict verdict = exact_equitable_arborable(g, current, cap, inner);
            budget.nodes += verdict.nodes;
            if (budget.has_deadline && Clock::now() > budget.deadline) {
                budget.exhausted = true;
                unknown = true;
                return false;
            }
            if (verdict.status == Status::Unknown) {
                unknown = true;
                budget.exhausted = true;
                return false;
            }
            if (verdict.status == Status::Infeasible) {
                refutation = current;
                return false;
            }
            return true;
        }
        // choose how many fresh colors this vertex introduces
        std::vector<int> old_subset;
        for (int fresh = 0; fresh <= k; ++fresh) {
            if (used + fresh > universe) break;
            if (k - fresh > used) continue;  // not enough old colors
            std::vector<ColorId> list;
            for (int j = 0; j < fresh; ++j) list.push_back(used + j);
            if (!choose_old(v, used, fresh, 0, k - fresh, list)) return false;
        }
        return true;
    }

    // Picks `need` old colors starting from candidate `from`.
    bool choose_old(Vertex v, int used, int fresh, int from, int need,
                    std::vector<ColorId>& list) {
        if (need == 0) {
            current.set_list(v, list);
            return enumerate(v + 1, used + fresh);
        }
        for (int c = from; c <= used - need; ++c) {
            list.push_back(c);
            if (!choose_old(v, used, fresh, c + 1, need - 1, list)) return false;
            list.pop_back();
        }
        return true;
    }
};

}  // namespace

Verdict decide_equitably_k_list_arborable(const Graph& g, int k, int universe,
                                          SearchBudget budget) {
    if (k < 1 || universe < k)
        throw parameter_error("list-arborable decision: need universe >= k >= 1");
    Verdict out;
    if (g.vertex_count() == 0) {
        out.status = Status::Feasible;
        return out;
    }
    BudgetTracker tracker(budget);
    AssignmentEnumerator en(g, k, universe, tracker);
    bool completed = en.enumerate(0, 0);
    out.nodes = tracker.nodes;
    if (en.refutation) {
        // refutation soundness: re-run the single-assignment search
        Verdict recheck = exact_equitable_arborable(g, *en.refutation,
                                                    equity_cap(g.vertex_count(), k));
        if (recheck.status != Status::Infeasible)
            throw internal_error("list-arborable decision: refutation failed re-check");
        out.status = Status::Infeasible;
        out.refuted_assignment = en.refutation;
    } else if (completed && !en.unknown) {
        out.status = Status::Feasible;
    } else {
        out.status = Status::Unknown;
    }
    return out;
}

}  // namespace arboreq
