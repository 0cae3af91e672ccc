#include "arboreq/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "arboreq/errors.hpp"

namespace arboreq {

int ExtensionContext::peel_index(Vertex v) const {
    for (std::size_t i = 0; i < peel.size(); ++i)
        if (peel[i] == v) return static_cast<int>(i);
    return -1;
}

ExtensionContext compute_d_lists(const Graph& g, const std::vector<Vertex>& peel,
                                 const ListAssignment& L, const PartialColoring& f, int m) {
    int n = g.vertex_count();
    if (L.size() != n || f.size() != n)
        throw parameter_error("compute_d_lists: size mismatch");
    if (m < 1) throw parameter_error("compute_d_lists: m must be positive");
    auto k_opt = L.uniform_size();
    if (!k_opt) throw parameter_error("compute_d_lists: L is not a k-assignment");
    int k = *k_opt;

    std::vector<bool> on_peel(n, false);
    for (Vertex v : peel) {
        if (v < 0 || v >= n) throw parameter_error("compute_d_lists: peel vertex out of range");
        if (on_peel[v]) throw parameter_error("compute_d_lists: repeated peel vertex");
        on_peel[v] = true;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (on_peel[v] && f.is_colored(v))
            throw parameter_error("compute_d_lists: base coloring assigns a peel vertex");
        if (!on_peel[v] && !f.is_colored(v))
            throw parameter_error("compute_d_lists: base coloring not total on G-S");
    }
    int peel_size = static_cast<int>(peel.size());
    if (peel_size > m * k)
        throw parameter_error("compute_d_lists: |S| exceeds m*k");

    ExtensionContext ctx;
    ctx.peel = peel;
    ctx.m = m;
    ctx.k = k;
    ctx.relaxed = peel_size != m * k;
    ctx.base = f;
    ctx.d_list.resize(peel.size());
    ctx.dangerous.resize(peel.size());
    ctx.safe.resize(peel.size());

    for (std::size_t i = 0; i < peel.size(); ++i) {
        Vertex v = peel[i];
        int outside = 0;
        std::map<ColorId, int> nbr_count;
        for (Vertex u : g.neighbors(v)) {
            if (on_peel[u]) continue;
            ++outside;
            ++nbr_count[*f.color(u)];
        }
        for (ColorId c : L.list(v)) {
            int cnt = nbr_count.count(c) ? nbr_count.at(c) : 0;
            if (cnt >= 2) continue;
            ctx.d_list[i].push_back(c);
            (cnt == 1 ? ctx.dangerous[i] : ctx.safe[i]).push_back(c);
        }
        int d_lb = k - outside / 2;
        int s_lb = k - outside;
        if (static_cast<int>(ctx.d_list[i].size()) < d_lb ||
            static_cast<int>(ctx.safe[i].size()) < s_lb)
            throw internal_error("compute_d_lists: counting bound violated at peel vertex " +
                                 std::to_string(v));
    }
    return ctx;
}

namespace {

struct PeelState {
    std::map<ColorId, int> usage;
    std::map<ColorId, int> dangerous_holders;
};

// Forest check for the color classes of a peel coloring restricted to G[S].
bool peel_classes_are_forests(const Graph& g, const std::vector<Vertex>& peel,
                              const PartialColoring& pc) {
    std::map<ColorId, std::vector<Vertex>> cls;
    for (Vertex v : peel)
        if (pc.is_colored(v)) cls[*pc.color(v)].push_back(v);
    for (const auto& [c, members] : cls) {
        std::set<Vertex> in_class(members.begin(), members.end());
        int edges = 0;
        for (Vertex u : members)
            for (Vertex w : g.neighbors(u))
                if (u < w && in_class.count(w)) ++edges;
        // members of one class are few; |E| <= |V|-components iff forest
        // checked by union-find below only when edge count is suspicious
        if (edges >= static_cast<int>(members.size())) return false;
        // |E| < |V| does not alone rule out a cycle plus isolated vertex;
        // do an exact check when there are edges at all.
        if (edges > 0) {
            std::map<Vertex, Vertex> parent;
            for (Vertex u : members) parent[u] = u;
            auto find = [&](Vertex x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (Vertex u : members)
                for (Vertex w : g.neighbors(u))
                    if (u < w && in_class.count(w)) {
                        Vertex ru = find(u), rw = find(w);
                        if (ru == rw) return false;
                        parent[ru] = rw;
                    }
        }
    }
    return true;
}

}  // namespace

PartialColoring merge_colorings(const Graph& g, const ListAssignment& L,
                                const ExtensionContext& ctx,
                                const PartialColoring& peel_coloring) {
    PeelState st;
    for (std::size_t i = 0; i < ctx.peel.size(); ++i) {
        Vertex v = ctx.peel[i];
        if (!peel_coloring.is_colored(v))
            throw hypothesis_error("merge: peel coloring not total on S (vertex " +
                                   std::to_string(v) + ")");
        ColorId c = *peel_coloring.color(v);
        if (!std::binary_search(ctx.d_list[i].begin(), ctx.d_list[i].end(), c))
            throw hypothesis_error("merge: color of vertex " + std::to_string(v) +
                                   " is not in its D-list");
        ++st.usage[c];
        if (std::binary_search(ctx.dangerous[i].begin(), ctx.dangerous[i].end(), c))
            ++st.dangerous_holders[c];
    }
    for (const auto& [c, uses] : st.usage)
        if (uses > ctx.m)
            throw hypothesis_error("merge: color " + std::to_string(c) + " used " +
                                   std::to_string(uses) + " times, allowed " +
                                   std::to_string(ctx.m));
    for (const auto& [c, holders] : st.dangerous_holders)
        if (holders > 1)
            throw hypothesis_error("merge: color " + std::to_string(c) +
                                   " dangerous for more than one peel vertex");
    if (!peel_classes_are_forests(g, ctx.peel, peel_coloring))
        throw hypothesis_error("merge: peel coloring induces a cycle inside G[S]");

    PartialColoring h = ctx.base;
    for (Vertex v : ctx.peel) h.set(v, *peel_coloring.color(v));

    auto rep = verify_arborable_L_coloring(g, L, h, /*require_total=*/true);
    auto eq = verify_equitable(g, ctx.k, h);
    if (!rep.list_respected || !rep.arborable || !rep.total || !eq.equitable())
        throw internal_error("merge: merged coloring failed post-verification");
    return h;
}

namespace {

bool peel_search(const Graph& g, const ExtensionContext& ctx, std::size_t idx,
                 PartialColoring& pc, PeelState& st) {
    if (idx == ctx.peel.size()) return true;
    Vertex v = ctx.peel[idx];
    for (ColorId c : ctx.d_list[idx]) {
        int& uses = st.usage[c];
        if (uses >= ctx.m) continue;
        bool is_dangerous =
            std::binary_search(ctx.dangerous[idx].begin(), ctx.dangerous[idx].end(), c);
        int& holders = st.dangerous_holders[c];
        if (is_dangerous && holders >= 1) continue;
        pc.set(v, c);
        if (!peel_classes_are_forests(g, ctx.peel, pc)) {
            pc.unset(v);
            continue;
        }
        ++uses;
        if (is_dangerous) ++holders;
        if (peel_search(g, ctx, idx + 1, pc, st)) return true;
        --uses;
        if (is_dangerous) --holders;
        pc.unset(v);
    }
    return false;
}

}  // namespace

std::optional<PartialColoring> find_peel_coloring(const Graph& g, const ExtensionContext& ctx) {
    PartialColoring pc(g.vertex_count());
    PeelState st;
    if (peel_search(g, ctx, 0, pc, st)) return pc;
    return std::nullopt;
}

PartialColoring zhang_extend(const Graph& g, const std::vector<Vertex>& peel,
                             const ListAssignment& L, const PartialColoring& f) {
    auto k_opt = L.uniform_size();
    if (!k_opt) throw parameter_error("zhang_extend: L is not a k-assignment");
    int k = *k_opt;
    if (static_cast<int>(peel.size()) != k)
        throw parameter_error("zhang_extend: |S| must equal the list size");

    std::set<Vertex> on_peel(peel.begin(), peel.end());
    for (std::size_t i = 0; i < peel.size(); ++i) {
        int outside = 0;
        for (Vertex u : g.neighbors(peel[i]))
            if (!on_peel.count(u)) ++outside;
        int bound = 2 * static_cast<int>(i + 1) - 1;
        if (outside > bound)
            throw parameter_error("zhang_extend: vertex x_" + std::to_string(i + 1) + " has " +
                                  std::to_string(outside) + " outside neighbors, bound " +
                                  std::to_string(bound));
    }

    ExtensionContext ctx = compute_d_lists(g, peel, L, f, /*m=*/1);
    // Decreasing index order: when x_i is reached, k-i colors are taken and
    // |D(x_i)| >= k - floor((2i-1)/2) = k-i+1, so a fresh color remains.
    PartialColoring pc(g.vertex_count());
    std::set<ColorId> taken;
    for (int i = static_cast<int>(peel.size()) - 1; i >= 0; --i) {
        bool placed = false;
        for (ColorId c : ctx.d_list[i]) {
            if (taken.count(c)) continue;
            pc.set(peel[i], c);
            taken.insert(c);
            placed = true;
            break;
        }
        if (!placed)
            throw internal_error("zhang_extend: no fresh color for x_" + std::to_string(i + 1));
    }
    return merge_colorings(g, L, ctx, pc);
}

}  // namespace arboreq
