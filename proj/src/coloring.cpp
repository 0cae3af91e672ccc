#include "arboreq/coloring.hpp"

#include <algorithm>
#include <set>

#include "arboreq/errors.hpp"

namespace arboreq {

void ListAssignment::set_list(Vertex v, std::vector<ColorId> colors) {
    if (v < 0 || v >= size()) throw parameter_error("list assignment: vertex out of range");
    for (ColorId c : colors)
        if (c < 0) throw parameter_error("list assignment: negative color id");
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists_[v] = std::move(colors);
}

const std::vector<ColorId>& ListAssignment::list(Vertex v) const {
    if (v < 0 || v >= size()) throw parameter_error("list assignment: vertex out of range");
    return lists_[v];
}

bool ListAssignment::has(Vertex v, ColorId c) const {
    const auto& l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
}

bool ListAssignment::is_k_assignment(int k) const {
    for (const auto& l : lists_)
        if (static_cast<int>(l.size()) != k) return false;
    return true;
}

std::optional<int> ListAssignment::uniform_size() const {
    if (lists_.empty()) return std::nullopt;
    int k = static_cast<int>(lists_[0].size());
    return is_k_assignment(k) ? std::optional<int>(k) : std::nullopt;
}

std::vector<ColorId> ListAssignment::palette() const {
    std::set<ColorId> all;
    for (const auto& l : lists_) all.insert(l.begin(), l.end());
    return {all.begin(), all.end()};
}

ListAssignment ListAssignment::restrict_to(const std::vector<Vertex>& keep) const {
    ListAssignment out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        out.set_list(static_cast<int>(i), list(keep[i]));
    return out;
}

ListAssignment ListAssignment::uniform(int n, std::vector<ColorId> colors) {
    ListAssignment out(n);
    for (Vertex v = 0; v < n; ++v) out.set_list(v, colors);
    return out;
}

std::optional<ColorId> PartialColoring::color(Vertex v) const {
    int c = color_.at(v);
    return c == kNone ? std::nullopt : std::optional<ColorId>(c);
}

void PartialColoring::set(Vertex v, ColorId c) {
    if (c < 0) throw parameter_error("coloring: negative color id");
    color_.at(v) = c;
}

void PartialColoring::unset(Vertex v) { color_.at(v) = kNone; }

bool PartialColoring::is_total() const {
    return std::none_of(color_.begin(), color_.end(), [](int c) { return c == kNone; });
}

int PartialColoring::colored_count() const {
    return static_cast<int>(
        std::count_if(color_.begin(), color_.end(), [](int c) { return c != kNone; }));
}

std::map<ColorId, std::vector<Vertex>> PartialColoring::classes() const {
    std::map<ColorId, std::vector<Vertex>> out;
    for (Vertex v = 0; v < size(); ++v)
        if (color_[v] != kNone) out[color_[v]].push_back(v);
    return out;
}

int equity_cap(int n, int k) {
    if (n < 1 || k < 1) throw parameter_error("equity_cap: n and k must be positive");
    return (n + k - 1) / k;
}

namespace {

// A cycle inside g[members], if any, as a closed vertex walk (first ==
// last omitted).  DFS with parent tracking.
std::optional<std::vector<Vertex>> find_cycle_within(const Graph& g,
                                                     const std::vector<Vertex>& members) {
    std::set<Vertex> in_class(members.begin(), members.end());
    std::map<Vertex, Vertex> parent;
    std::set<Vertex> visited;
    for (Vertex root : members) {
        if (visited.count(root)) continue;
        std::vector<Vertex> stack{root};
        parent[root] = -1;
        visited.insert(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (!in_class.count(w)) continue;
                if (!visited.count(w)) {
                    visited.insert(w);
                    parent[w] = u;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    // Back edge: walk both endpoints up to the common root.
                    std::vector<Vertex> pu, pw;
                    for (Vertex x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (Vertex x = w; x != -1; x = parent[x]) pw.push_back(x);
                    while (pu.size() > 1 && pw.size() > 1 &&
                           pu[pu.size() - 2] == pw[pw.size() - 2]) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    std::vector<Vertex> cycle(pu.begin(), pu.end());
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_arborable_L_coloring(const Graph& g, const ListAssignment& L,
                                               const PartialColoring& f, bool require_total) {
    VerificationReport rep;
    rep.total = !require_total || f.is_total();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto c = f.color(v);
        if (c && !L.has(v, *c)) rep.list_respected = false;
    }
    for (const auto& [c, members] : f.classes()) {
        rep.max_class_size = std::max(rep.max_class_size, static_cast<int>(members.size()));
        if (!rep.arborable) continue;  // keep the first witness
        if (auto cycle = find_cycle_within(g, members)) {
            rep.arborable = false;
            rep.offending_class = c;
            rep.offending_cycle = std::move(cycle);
        }
    }
    return rep;
}

VerificationReport verify_equitable(const Graph& g, int k, const PartialColoring& f) {
    VerificationReport rep;
    rep.total = f.is_total();
    rep.cap = equity_cap(g.vertex_count(), k);
    for (const auto& [c, members] : f.classes()) {
        int sz = static_cast<int>(members.size());
        if (sz > rep.max_class_size) rep.max_class_size = sz;
        if (sz > rep.cap && !rep.offending_class) rep.offending_class = c;
    }
    return rep;
}

bool verify_equitable_vertex_partition(const Graph& g, int k, const PartialColoring& f) {
    int n = g.vertex_count();
    if (k < 1 || !f.is_total()) return false;
    std::vector<int> counts(k, 0);
    for (Vertex v = 0; v < n; ++v) {
        ColorId c = *f.color(v);
        if (c >= k) return false;
        ++counts[c];
    }
    int lo = n / k, hi = equity_cap(n, k);
    int num_hi = 0;
    for (int c = 0; c < k; ++c) {
        if (counts[c] != lo && counts[c] != hi) return false;
        if (counts[c] == hi && hi != lo) ++num_hi;
    }
    if (hi != lo && num_hi != n % k) return false;
    for (const auto& [c, members] : f.classes())
        if (find_cycle_within(g, members)) return false;
    return true;
}

}  // namespace arboreq
