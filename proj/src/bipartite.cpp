#include "arboreq/bipartite.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "arboreq/errors.hpp"

namespace arboreq {

bool bipartite_arborable_check(const BipartiteInstance& inst, const PartialColoring& f) {
    if (!f.is_total()) return false;
    for (Vertex v = 0; v < inst.n(); ++v)
        if (!inst.lists.has(v, *f.color(v))) return false;
    std::map<ColorId, std::pair<int, int>> sides;
    for (Vertex v = 0; v < inst.n(); ++v) {
        auto& [x, y] = sides[*f.color(v)];
        (inst.is_x(v) ? x : y) += 1;
    }
    for (const auto& [c, xy] : sides)
        if (xy.first > 1 && xy.second > 1) return false;
    return true;
}

namespace {

struct ProfileSearch {
    int k, cap;
    bool exact_sizes;
    int hi, lo, hi_left, lo_left;
    std::vector<std::pair<int, int>> picked;

    bool run(int color, int rem_a, int rem_b) {
        if (color == k) return rem_a == 0 && rem_b == 0;
        for (int ac = 0; ac <= rem_a; ++ac) {
            for (int bc = 0; bc <= rem_b; ++bc) {
                if (ac > 1 && bc > 1) continue;
                int size = ac + bc;
                if (exact_sizes) {
                    bool use_hi = size == hi && hi_left > 0;
                    bool use_lo = size == lo && lo_left > 0;
                    if (!use_hi && !use_lo) continue;
                    // hi == lo collapses to one bucket; prefer hi slots
                    if (use_hi)
                        --hi_left;
                    else
                        --lo_left;
                    picked.emplace_back(ac, bc);
                    if (run(color + 1, rem_a - ac, rem_b - bc)) return true;
                    picked.pop_back();
                    if (use_hi)
                        ++hi_left;
                    else
                        ++lo_left;
                } else {
                    if (size > cap) continue;
                    picked.emplace_back(ac, bc);
                    if (run(color + 1, rem_a - ac, rem_b - bc)) return true;
                    picked.pop_back();
                }
            }
        }
        return false;
    }
};

}  // namespace

ProfileResult profile_oracle(int a, int b, int k, int cap, bool exact_sizes) {
    if (a < 0 || b < 0 || k < 1 || cap < 1)
        throw parameter_error("profile_oracle: bad parameters");
    int n = a + b;
    ProfileSearch s;
    s.k = k;
    s.cap = cap;
    s.exact_sizes = exact_sizes;
    s.hi = equity_cap(n, k);
    s.lo = n / k;
    if (s.hi == s.lo) {
        s.hi_left = k;
        s.lo_left = 0;
    } else {
        s.hi_left = n % k;
        s.lo_left = k - n % k;
    }
    ProfileResult out;
    if (s.run(0, a, b)) {
        out.feasible = true;
        out.witness.classes = s.picked;
    }
    return out;
}

TwoHeavyResult extend_two_heavy(const BipartiteInstance& inst, const PartialColoring& f_on_x,
                                std::pair<ColorId, ColorId> heavy) {
    auto [ha, hb] = heavy;
    if (ha == hb) throw parameter_error("extend_two_heavy: heavy colors must differ");
    std::map<ColorId, int> usage;
    for (Vertex v = 0; v < inst.a; ++v) {
        if (!f_on_x.is_colored(v))
            throw parameter_error("extend_two_heavy: coloring not total on X");
        ColorId c = *f_on_x.color(v);
        if (!inst.lists.has(v, c))
            throw parameter_error("extend_two_heavy: X coloring leaves its lists");
        ++usage[c];
    }
    for (const auto& [c, uses] : usage) {
        bool is_heavy = c == ha || c == hb;
        if (is_heavy && uses < 2)
            throw parameter_error("extend_two_heavy: declared heavy color used once");
        if (!is_heavy && uses > 1)
            throw parameter_error("extend_two_heavy: undeclared color used more than once");
    }

    std::vector<Vertex> listed;
    for (Vertex v = inst.a; v < inst.n(); ++v)
        if (inst.lists.has(v, ha) || inst.lists.has(v, hb)) listed.push_back(v);

    TwoHeavyResult out;
    if (listed.size() >= 3) {
        out.obstruction = listed;
        return out;
    }

    PartialColoring f = f_on_x;
    std::set<ColorId> taken_by_listed;
    for (Vertex v : listed) {
        ColorId pick = -1;
        for (ColorId c : inst.lists.list(v))
            if (!taken_by_listed.count(c)) {
                pick = c;
                break;
            }
        if (pick == -1)
            throw internal_error("extend_two_heavy: could not separate the listed vertices");
        taken_by_listed.insert(pick);
        f.set(v, pick);
    }
    for (Vertex v = inst.a; v < inst.n(); ++v) {
        if (f.is_colored(v)) continue;
        ColorId pick = -1;
        for (ColorId c : inst.lists.list(v))
            if (c != ha && c != hb) {
                pick = c;
                break;
            }
        if (pick == -1)
            throw internal_error("extend_two_heavy: unlisted Y-vertex has only heavy colors");
        f.set(v, pick);
    }
    if (!bipartite_arborable_check(inst, f))
        throw internal_error("extend_two_heavy: extension failed the side-count check");
    out.extended = true;
    out.coloring = std::move(f);
    return out;
}

PartialColoring derandomized_split(const BipartiteInstance& inst, int k, bool best_effort) {
    return derandomized_split_detail(inst, k, best_effort).coloring;
}

SplitDetail derandomized_split_detail(const BipartiteInstance& inst, int k, bool best_effort) {
    if (inst.lists.size() != inst.n())
        throw parameter_error("derandomized_split: assignment size mismatch");
    if (!inst.lists.is_k_assignment(k))
        throw parameter_error("derandomized_split: L is not a k-assignment");
    std::int64_t bound = (static_cast<std::int64_t>(k) + 1) * (std::int64_t{1} << k) - 1;
    if (inst.n() > bound && !best_effort)
        throw parameter_error("derandomized_split: instance exceeds the size bound");

    std::vector<ColorId> palette = inst.lists.palette();
    // remaining[v]: list colors not yet assigned to a side; covered[v]: some
    // list color already went to v's own side.
    std::vector<int> remaining(inst.n());
    std::vector<bool> covered(inst.n(), false);
    for (Vertex v = 0; v < inst.n(); ++v)
        remaining[v] = static_cast<int>(inst.lists.list(v).size());

    // Expected leftover count in units of 2^-k, conditioned on the choices
    // so far and fair coins for the rest.
    auto expectation = [&](const std::vector<int>& rem, const std::vector<bool>& cov) {
        std::uint64_t total = 0;
        for (Vertex v = 0; v < inst.n(); ++v)
            if (!cov[v]) total += std::uint64_t{1} << (k - std::min(rem[v], k));
        return total;
    };

    std::set<ColorId> to_x;
    for (ColorId c : palette) {
        // simulate both sides
        std::uint64_t ex[2];
        for (int side = 0; side < 2; ++side) {
            auto rem = remaining;
            auto cov = covered;
            for (Vertex v = 0; v < inst.n(); ++v) {
                if (!inst.lists.has(v, c)) continue;
                bool own = (side == 0) == inst.is_x(v);
                if (own)
                    cov[v] = true;
                else
                    --rem[v];
            }
            ex[side] = expectation(rem, cov);
        }
        int side = ex[0] <= ex[1] ? 0 : 1;  // ties to X
        if (side == 0) to_x.insert(c);
        for (Vertex v = 0; v < inst.n(); ++v) {
            if (!inst.lists.has(v, c)) continue;
            if ((side == 0) == inst.is_x(v))
                covered[v] = true;
            else
                --remaining[v];
        }
    }

    PartialColoring f(inst.n());
    std::vector<Vertex> leftover;
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (!covered[v]) {
            leftover.push_back(v);
            continue;
        }
        for (ColorId c : inst.lists.list(v))
            if (to_x.count(c) == static_cast<std::size_t>(inst.is_x(v) ? 1 : 0)) {
                f.set(v, c);
                break;
            }
    }

    // The leftovers get pairwise distinct colors; each such color has at
    // most one vertex on the side it was denied to.
    std::set<ColorId> used_by_leftover;
    for (Vertex v : leftover) {
        ColorId pick = -1;
        for (ColorId c : inst.lists.list(v))
            if (!used_by_leftover.count(c)) {
                pick = c;
                break;
            }
        if (pick == -1) {
            if (best_effort) {
                pick = inst.lists.list(v).front();
            } else {
                throw internal_error("derandomized_split: leftover vertices exceed list size");
            }
        }
        used_by_leftover.insert(pick);
        f.set(v, pick);
    }
    SplitDetail detail;
    detail.coloring = std::move(f);
    detail.x_colors.assign(to_x.begin(), to_x.end());
    detail.uncovered = std::move(leftover);
    return detail;
}

namespace {

struct VertexGroup {
    int side;                 // 0 = X, 1 = Y
    std::vector<int> colors;  // palette positions, ascending
    std::vector<Vertex> members;
};

struct GroupSearch {
    const BipartiteInstance& inst;
    int cap;
    std::vector<ColorId> palette;
    std::vector<VertexGroup> groups;
    std::vector<int> xc, yc;
    // per group: chosen count per list position
    std::vector<std::vector<int>> chosen;
    bool found = false;

    explicit GroupSearch(const BipartiteInstance& instance, int cap_)
        : inst(instance), cap(cap_), palette(instance.lists.palette()) {
        std::map<ColorId, int> pos;
        for (std::size_t i = 0; i < palette.size(); ++i) pos[palette[i]] = static_cast<int>(i);
        std::map<std::pair<int, std::vector<ColorId>>, std::vector<Vertex>> buckets;
        for (Vertex v = 0; v < inst.n(); ++v)
            buckets[{inst.is_x(v) ? 0 : 1, inst.lists.list(v)}].push_back(v);
        for (const auto& [key, members] : buckets) {
            VertexGroup gr;
            gr.side = key.first;
            for (ColorId c : key.second) gr.colors.push_back(pos.at(c));
            gr.members = members;
            groups.push_back(std::move(gr));
        }
        // X groups first: the search fixes X then patches Y around it.
        std::stable_sort(groups.begin(), groups.end(),
                         [](const VertexGroup& l, const VertexGroup& r) { return l.side < r.side; });
        xc.assign(palette.size(), 0);
        yc.assign(palette.size(), 0);
        chosen.resize(groups.size());
    }

    int capacity(int side, int p) const {
        int slack = cap - xc[p] - yc[p];
        if (side == 1 && xc[p] >= 2) return std::max(0, std::min(slack, 1 - yc[p]));
        if (side == 0 && yc[p] >= 2) return std::max(0, std::min(slack, 1 - xc[p]));
        return slack;
    }

    // Every remaining group must be able to place all members on its own
    // colors under current counts.
    bool remaining_groups_fit(std::size_t from) const {
        for (std::size_t gi = from; gi < groups.size(); ++gi) {
            const auto& gr = groups[gi];
            long long room = 0;
            for (int p : gr.colors) room += capacity(gr.side, p);
            if (room < static_cast<long long>(gr.members.size())) return false;
        }
        return true;
    }

    bool search_group(std::size_t gi) {
        if (gi == groups.size()) {
            found = true;
            return true;
        }
        chosen[gi].assign(groups[gi].colors.size(), 0);
        return place(gi, 0, static_cast<int>(groups[gi].members.size()));
    }

    bool place(std::size_t gi, std::size_t t, int rem) {
        const auto& gr = groups[gi];
        if (t == gr.colors.size()) {
            if (rem != 0) return false;
            return remaining_groups_fit(gi + 1) && search_group(gi + 1);
        }
        int p = gr.colors[t];
        int room = std::min(rem, capacity(gr.side, p));
        long long rest_room = 0;
        for (std::size_t u = t + 1; u < gr.colors.size(); ++u)
            rest_room += capacity(gr.side, gr.colors[u]);
        int need_here = static_cast<int>(std::max<long long>(0, rem - rest_room));

        std::vector<int> values;
        for (int v = need_here; v <= room; ++v) values.push_back(v);
        auto& own = gr.side == 0 ? xc : yc;
        if (gr.side == 0) {
            // avoid creating a second heavy side when possible
            std::stable_sort(values.begin(), values.end(), [&](int l, int r) {
                auto heavy = [&](int v) { return own[p] < 2 && own[p] + v >= 2 ? 1 : 0; };
                return std::pair(heavy(l), l) < std::pair(heavy(r), r);
            });
        } else {
            std::reverse(values.begin(), values.end());  // mass-first
        }

        for (int v : values) {
            own[p] += v;
            chosen[gi][t] = v;
            if (place(gi, t + 1, rem - v)) return true;
            own[p] -= v;
        }
        chosen[gi][t] = 0;
        return false;
    }

    PartialColoring build_coloring() const {
        PartialColoring f(inst.n());
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& gr = groups[gi];
            std::size_t next = 0;
            for (std::size_t t = 0; t < gr.colors.size(); ++t)
                for (int j = 0; j < chosen[gi][t]; ++j)
                    f.set(gr.members[next++], palette[gr.colors[t]]);
        }
        return f;
    }
};

}  // namespace

BipartiteSearchResult solve_bipartite_exact(const BipartiteInstance& inst, int k, int cap) {
    if (inst.lists.size() != inst.n())
        throw parameter_error("solve_bipartite_exact: assignment size mismatch");
    if (cap < 1) throw parameter_error("solve_bipartite_exact: cap must be positive");

    BipartiteSearchResult out;

    // Fast path: the split coloring is arborable by construction and often
    // already within the cap.
    if (inst.lists.is_k_assignment(k) &&
        inst.n() <= (static_cast<std::int64_t>(k) + 1) * (std::int64_t{1} << k) - 1) {
        PartialColoring f = derandomized_split(inst, k);
        if (bipartite_arborable_check(inst, f)) {
            int max_class = 0;
            for (const auto& [c, members] : f.classes())
                max_class = std::max(max_class, static_cast<int>(members.size()));
            if (max_class <= cap) {
                out.feasible = true;
                out.coloring = std::move(f);
                return out;
            }
        }
    }

    GroupSearch search(inst, cap);
    if (search.remaining_groups_fit(0) && search.search_group(0)) {
        PartialColoring f = search.build_coloring();
        if (!bipartite_arborable_check(inst, f))
            throw internal_error("solve_bipartite_exact: witness failed the side-count check");
        for (const auto& [c, members] : f.classes())
            if (static_cast<int>(members.size()) > cap)
                throw internal_error("solve_bipartite_exact: witness exceeds the cap");
        out.feasible = true;
        out.coloring = std::move(f);
    }
    return out;
}

}  // namespace arboreq
