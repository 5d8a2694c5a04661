#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "soltes/distance.hpp"
#include "soltes/error.hpp"
#include "soltes/families.hpp"
#include "soltes/graph.hpp"
#include "soltes/invariants.hpp"
#include "soltes/plan.hpp"

namespace soltes {

/// Raised when no layer count q can balance the Wiener change at (t, r).
class infeasible_error : public domain_error {
public:
    explicit infeasible_error(const std::string& what) : domain_error(what) {}
};

/// One attached vertex (or v1/v2 at level 0, whose parent is their gadget
/// neighbor). tree is 1 for the forest part rooted at v1, 2 for v2.
struct TreeVertex {
    Vertex vertex;
    Vertex parent;
    int level;
    int tree;
    int children = 0;
};

/// Full record of one completion of a base graph into a cubic graph H.
///
/// Vertices of H: the base graph keeps its numbering; attached vertices
/// follow level by level, tree 1 before tree 2 within a level. When the
/// requested last layer has one vertex the build runs on the sequence with
/// last layer 3 (`realized`) and finally contracts those three vertices.
struct ConstructionPlan {
    LabeledGraph base;
    PlanConstants constants;
    std::int64_t target = 0;  // sum of distances to u1 that the layers must realize
    LayerSequence layers;
    LayerSequence realized;
    std::vector<std::vector<Vertex>> levels;  // levels[0] = {v1, v2}
    std::vector<TreeVertex> tree;             // v1, v2, then attached vertices in vertex order
    std::vector<Edge> red_edges;
    std::vector<Edge> blue_edges;
    std::optional<std::array<Vertex, 3>> contraction;

    std::size_t base_order() const { return base.graph.order(); }
    std::size_t forest_order() const { return base_order() + static_cast<std::size_t>(realized.total()); }
};

namespace detail {

struct LevelSlot {
    Vertex v;
    int tree;
    bool leaf;
    int free;
};

// Same-level path from every leaf to a vertex of the other tree, using only
// the given blue edges.
inline bool leaves_reach_other_tree(const std::vector<LevelSlot>& slots,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> root(slots.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (auto [a, b] : edges) root[find(a)] = find(b);
    std::vector<int> mask(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) mask[find(i)] |= slots[i].tree;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].leaf && mask[find(i)] != 3) return false;
    return true;
}

inline std::vector<std::size_t> interleave(const std::vector<std::size_t>& a,
                                           const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        if (i < a.size()) out.push_back(a[i]);
        if (i < b.size()) out.push_back(b[i]);
    }
    return out;
}

// Blue edges inside one level: degree exactly `free` at every slot, and
// the leaf condition above. Free valencies are 0..2, so the blue graph is
// a disjoint union of paths and cycles. Tries one cycle (no degree-1
// slots) or one long path through every degree-2 slot between two
// degree-1 endpoints plus a matching on the rest, cross-tree first.
inline std::optional<std::vector<Edge>> complete_level(const std::vector<LevelSlot>& slots) {
    std::vector<std::size_t> a1, a2, b1, b2;
    int total = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& s = slots[i];
        if (s.free < 0 || s.free > 2) return std::nullopt;
        total += s.free;
        auto& bucket = s.free == 2 ? (s.tree == 1 ? a1 : a2) : (s.tree == 1 ? b1 : b2);
        if (s.free > 0) bucket.push_back(i);
    }
    if (total % 2 != 0) return std::nullopt;
    using Local = std::vector<std::pair<std::size_t, std::size_t>>;
    auto emit = [&](const Local& local) {
        std::vector<Edge> out;
        for (auto [x, y] : local) out.push_back({std::min(slots[x].v, slots[y].v), std::max(slots[x].v, slots[y].v)});
        return out;
    };
    const std::vector<std::size_t> chain = interleave(a1, a2);
    if (b1.empty() && b2.empty()) {
        Local local;
        if (!chain.empty()) {
            if (chain.size() < 3) return std::nullopt;
            for (std::size_t i = 0; i < chain.size(); ++i) local.push_back({chain[i], chain[(i + 1) % chain.size()]});
        }
        if (!leaves_reach_other_tree(slots, local)) return std::nullopt;
        return emit(local);
    }
    // Leaves first so they get the cross-tree partners.
    auto by_leaf = [&](std::vector<std::size_t>& v) {
        std::stable_sort(v.begin(), v.end(), [&](std::size_t x, std::size_t y) { return slots[x].leaf > slots[y].leaf; });
    };
    by_leaf(b1);
    by_leaf(b2);
    std::vector<std::size_t> ones = b1;
    ones.insert(ones.end(), b2.begin(), b2.end());
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t x : b1)
        for (std::size_t y : b2) ends.push_back({x, y});
    for (std::size_t i = 0; i < ones.size(); ++i)
        for (std::size_t j = i + 1; j < ones.size(); ++j)
            if (slots[ones[i]].tree == slots[ones[j]].tree) ends.push_back({ones[i], ones[j]});
    for (auto [e1, e2] : ends) {
        Local local;
        std::size_t prev = e1;
        for (std::size_t c : chain) {
            local.push_back({prev, c});
            prev = c;
        }
        local.push_back({prev, e2});
        std::vector<std::size_t> r1, r2;
        for (std::size_t x : b1)
            if (x != e1 && x != e2) r1.push_back(x);
        for (std::size_t x : b2)
            if (x != e1 && x != e2) r2.push_back(x);
        std::size_t k = std::min(r1.size(), r2.size());
        for (std::size_t i = 0; i < k; ++i) local.push_back({r1[i], r2[i]});
        std::vector<std::size_t> rest(r1.begin() + static_cast<std::ptrdiff_t>(k), r1.end());
        rest.insert(rest.end(), r2.begin() + static_cast<std::ptrdiff_t>(k), r2.end());
        for (std::size_t i = 0; i + 1 < rest.size(); i += 2) local.push_back({rest[i], rest[i + 1]});
        if (leaves_reach_other_tree(slots, local)) return emit(local);
    }
    return std::nullopt;
}

class Completion {
public:
    explicit Completion(ConstructionPlan& plan) : plan_(plan) {
        const std::size_t n = plan.forest_order();
        index_.assign(n, npos);
        for (std::size_t k = 0; k < plan.tree.size(); ++k) index_[plan.tree[k].vertex] = k;
        red_.assign(plan.tree.size(), 0);
        for (const Edge& e : plan.red_edges) {
            ++red_[index_[e.u]];
            ++red_[index_[e.v]];
        }
        depth_ = static_cast<int>(plan.realized.depth());
        last_ = plan.realized[plan.realized.depth() - 1];
        generic_top_ = last_ == 2 ? depth_ - 2 : depth_ - 1;
    }

    void place_red() {
        plan_.red_edges.clear();
        std::fill(red_.begin(), red_.end(), 0);
        budget_ = 2'000'000;
        if (!search(1)) throw std::logic_error("no admissible red edge placement for " + plan_.layers.to_string());
    }

    void place_blue() {
        plan_.blue_edges.clear();
        for (int i = 0; i <= generic_top_; ++i) {
            auto edges = complete_level(slots(i));
            if (!edges) throw std::logic_error("level " + std::to_string(i) + " cannot be completed");
            plan_.blue_edges.insert(plan_.blue_edges.end(), edges->begin(), edges->end());
        }
        close_last_levels();
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const TreeVertex& info(Vertex v) const { return plan_.tree[index_[v]]; }
    int free(Vertex v) const {
        const auto& tv = info(v);
        return 3 - 1 - tv.children - red_[index_[v]];
    }

    std::vector<LevelSlot> slots(int level) const {
        std::vector<LevelSlot> out;
        for (Vertex v : plan_.levels[static_cast<std::size_t>(level)]) {
            const auto& tv = info(v);
            out.push_back({v, tv.tree, level > 0 && tv.children == 0, free(v)});
        }
        return out;
    }

    bool red_needed(int i) const {
        std::int64_t prefix = 2;
        for (int j = 1; j <= i; ++j) prefix += plan_.realized[static_cast<std::size_t>(j - 1)];
        return prefix % 2 != 0;
    }

    // Rule-ordered candidates in one level for a red edge endpoint.
    // incoming: the level receives a red edge from the level above;
    // otherwise it sends one to the level below.
    std::vector<Vertex> candidates(int level, bool incoming) const {
        const auto& verts = plan_.levels[static_cast<std::size_t>(level)];
        std::vector<Vertex> leaves[3], inner[3];
        for (Vertex v : verts) {
            const auto& tv = info(v);
            (level > 0 && tv.children == 0 ? leaves : inner)[tv.tree].push_back(v);
        }
        const std::size_t n_leaves = leaves[1].size() + leaves[2].size();
        // Protected: highest-index degree-2 (one child) vertex of a tree.
        auto protect = [&](int tree) -> std::optional<Vertex> {
            std::optional<Vertex> p;
            for (Vertex v : inner[tree])
                if (info(v).children == 1) p = v;
            return p;
        };
        std::vector<std::optional<Vertex>> guarded;
        std::vector<std::vector<Vertex>> classes;
        auto add = [&](const std::vector<Vertex>& vs) { classes.push_back(vs); };
        if (n_leaves >= 3) {
            add(inner[incoming ? 1 : 2]);
            add(inner[incoming ? 2 : 1]);
            add(leaves[1]);
            add(leaves[2]);
        } else if (n_leaves == 2) {
            guarded = {protect(1), protect(2)};
            add(leaves[incoming ? 1 : 2]);
            add(leaves[incoming ? 2 : 1]);
            add(inner[1]);
            add(inner[2]);
        } else if (n_leaves == 1) {
            const int j = leaves[1].empty() ? 2 : 1;
            guarded = {protect(3 - j)};
            if (incoming) {
                add(inner[j]);
                add(leaves[j]);
            } else {
                add(leaves[j]);
                add(inner[j]);
            }
            add(inner[3 - j]);
        } else {
            add(inner[incoming ? 1 : 2]);
            add(inner[incoming ? 2 : 1]);
        }
        std::vector<Vertex> first, last;
        for (const auto& cls : classes)
            for (Vertex v : cls) {
                if (free(v) < 1) continue;
                bool is_guarded = std::find(guarded.begin(), guarded.end(), std::optional<Vertex>(v)) != guarded.end();
                (is_guarded ? last : first).push_back(v);
            }
        first.insert(first.end(), last.begin(), last.end());
        return first;
    }

    bool level_ok(int level) const { return level > generic_top_ || complete_level(slots(level)).has_value(); }

    bool search(int i) {
        if (--budget_ < 0) throw std::logic_error("red edge search budget exhausted");
        if (i > depth_) return true;
        if (!red_needed(i)) return level_ok(i - 1) && search(i + 1);
        for (Vertex x : candidates(i - 1, false)) {
            for (Vertex y : candidates(i, true)) {
                if (info(y).parent == x) continue;
                ++red_[index_[x]];
                ++red_[index_[y]];
                plan_.red_edges.push_back({std::min(x, y), std::max(x, y)});
                if (level_ok(i - 1) && search(i + 1)) return true;
                plan_.red_edges.pop_back();
                --red_[index_[x]];
                --red_[index_[y]];
            }
        }
        return false;
    }

    void add_blue(Vertex a, Vertex b) { plan_.blue_edges.push_back({std::min(a, b), std::max(a, b)}); }

    void close_last_levels() {
        const auto& top = plan_.levels[static_cast<std::size_t>(depth_)];
        for (Vertex v : top)
            if (free(v) != 2) throw std::logic_error("last level vertex with unexpected degree");
        std::vector<Vertex> t1, t2;
        for (Vertex v : top) (info(v).tree == 1 ? t1 : t2).push_back(v);
        if (last_ >= 3) {
            std::vector<Vertex> ring;
            for (std::size_t i = 0; i < t1.size(); ++i) {
                ring.push_back(t1[i]);
                if (i < t2.size()) ring.push_back(t2[i]);
            }
            for (std::size_t i = 0; i < ring.size(); ++i) add_blue(ring[i], ring[(i + 1) % ring.size()]);
            return;
        }
        if (last_ != 2) throw std::logic_error("last layer of size 1 must be realized as 3");
        // Two vertices y1 (tree 1), y2 (tree 2) at the last level, both of
        // free valency 2; the level above carries no red edges.
        const Vertex y1 = t1.at(0), y2 = t2.at(0);
        const auto& below = plan_.levels[static_cast<std::size_t>(depth_ - 1)];
        add_blue(y1, y2);
        if (below.size() == 2) {
            const Vertex x1 = info(y1).parent, x2 = info(y2).parent;
            add_blue(x1, y2);
            add_blue(x2, y1);
            return;
        }
        std::optional<Vertex> hub;
        std::vector<Vertex> p1, p2, ends;
        for (Vertex v : below) {
            if (free(v) == 1) {
                ends.push_back(v);
            } else if (free(v) == 2 && !hub) {
                hub = v;
            } else if (free(v) == 2) {
                (info(v).tree == 1 ? p1 : p2).push_back(v);
            } else {
                throw std::logic_error("unexpected degree below a two-vertex last level");
            }
        }
        if (!hub || ends.size() != 2) throw std::logic_error("malformed level below a two-vertex last level");
        add_blue(*hub, y1);
        add_blue(*hub, y2);
        std::vector<Vertex> walk{ends[0]};
        for (std::size_t i = 0; i < std::max(p1.size(), p2.size()); ++i) {
            if (i < p2.size()) walk.push_back(p2[i]);
            if (i < p1.size()) walk.push_back(p1[i]);
        }
        walk.push_back(ends[1]);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) add_blue(walk[i], walk[i + 1]);
    }

    ConstructionPlan& plan_;
    std::vector<std::size_t> index_;
    std::vector<int> red_;
    int depth_ = 0;
    std::int64_t last_ = 0;
    int generic_top_ = 0;
    long budget_ = 0;
};

} // namespace detail

/// Attaches the two trees for L at v1, v2 of `base`. Tree 1 gets
/// ceil(l_i/2) vertices at level i, tree 2 floor(l_i/2); at every level the
/// children are packed onto as few parents as possible, leftmost first, so
/// no level mixes tree leaves with vertices that have two children.
inline ConstructionPlan realize_trees(const LabeledGraph& base, const LayerSequence& L,
                                      PlanConstants constants = {}) {
    if (auto why = layer_violation(L)) throw domain_error("infeasible layer sequence " + L.to_string() + ": " + *why);
    ConstructionPlan plan;
    plan.base = base;
    plan.constants = constants;
    plan.layers = L;
    plan.realized = L;
    if (L.layers.back() == 1) {
        if (L.depth() < 2 || L[L.depth() - 2] < 3)
            throw domain_error("a last layer of size 1 needs at least 3 vertices in the layer above");
        plan.realized.layers.back() = 3;
    }
    const Vertex v1 = base.at("v1"), v2 = base.at("v2");
    for (Vertex v : {v1, v2})
        if (base.graph.degree(v) != 1) throw domain_error("v1 and v2 must be leaves of the base graph");
    plan.tree.push_back({v1, base.graph.neighbors(v1)[0], 0, 1});
    plan.tree.push_back({v2, base.graph.neighbors(v2)[0], 0, 2});
    plan.levels.push_back({v1, v2});
    std::vector<std::size_t> prev_slots{0, 1};  // indices into plan.tree for the level above
    Vertex next = static_cast<Vertex>(base.graph.order());
    for (std::size_t k = 0; k < plan.realized.depth(); ++k) {
        const int level = static_cast<int>(k) + 1;
        const std::int64_t size = plan.realized[k];
        std::vector<std::size_t> slots;
        std::vector<Vertex> verts;
        for (int tree : {1, 2}) {
            const std::int64_t count = tree == 1 ? (size + 1) / 2 : size / 2;
            std::vector<std::size_t> parents;
            for (std::size_t s : prev_slots)
                if (plan.tree[s].tree == tree) parents.push_back(s);
            const auto p = static_cast<std::int64_t>(parents.size());
            if (count > 2 * p)
                throw domain_error("layer " + std::to_string(level) + " of " + L.to_string() +
                                   " does not fit under its parents in tree " + std::to_string(tree));
            // The first (count - p) parents take two children, then one each.
            const std::int64_t doubles = std::max<std::int64_t>(0, count - p);
            std::size_t parent_pos = 0;
            int taken = 0;
            for (std::int64_t c = 0; c < count; ++c) {
                const int want = static_cast<std::int64_t>(parent_pos) < doubles ? 2 : 1;
                std::size_t ps = parents[parent_pos];
                plan.tree[ps].children++;
                plan.tree.push_back({next, plan.tree[ps].vertex, level, tree});
                slots.push_back(plan.tree.size() - 1);
                verts.push_back(next++);
                if (++taken == want) {
                    ++parent_pos;
                    taken = 0;
                }
            }
        }
        plan.levels.push_back(verts);
        prev_slots = slots;
    }
    return plan;
}

/// Red edges: one edge between levels i-1 and i whenever 2 + l_1 + ... + l_i
/// is odd, so every level ends up with an even free-valency sum. Endpoints
/// follow the leaf-count rules (spare leaves when a level has three or
/// more; keep one single-child vertex per tree in reserve when it has one
/// or two) and are accepted only if the level they finalize can still be
/// completed by blue edges; the search backtracks otherwise.
inline void place_red_edges(ConstructionPlan& plan) { detail::Completion(plan).place_red(); }

/// Blue edges inside levels, closing the last one or two levels specially.
/// Requires red edges to have been placed.
inline void place_blue_edges(ConstructionPlan& plan) { detail::Completion(plan).place_blue(); }

/// Sum of free valencies per level once red edges are placed.
inline std::vector<int> level_free_sums(const ConstructionPlan& plan) {
    std::map<Vertex, int> red;
    for (const Edge& e : plan.red_edges) {
        ++red[e.u];
        ++red[e.v];
    }
    std::map<Vertex, const TreeVertex*> info;
    for (const auto& tv : plan.tree) info[tv.vertex] = &tv;
    std::vector<int> out;
    for (const auto& level : plan.levels) {
        int sum = 0;
        for (Vertex v : level) sum += 2 - info[v]->children - red[v];
        out.push_back(sum);
    }
    return out;
}

/// (tree-1 leaves, tree-2 leaves) per level, level 0 included.
inline std::vector<std::pair<int, int>> level_leaf_counts(const ConstructionPlan& plan) {
    std::vector<std::pair<int, int>> out(plan.levels.size(), {0, 0});
    for (const auto& tv : plan.tree)
        if (tv.level > 0 && tv.children == 0) (tv.tree == 1 ? out[tv.level].first : out[tv.level].second)++;
    return out;
}

/// Base graph plus tree, red and blue edges; contracts the last layer when
/// the requested sequence ends in a single vertex.
inline Graph assemble(const ConstructionPlan& plan) {
    const std::size_t n = plan.forest_order();
    std::vector<Edge> edges = plan.base.graph.edges();
    for (std::size_t k = 2; k < plan.tree.size(); ++k) {
        const auto& tv = plan.tree[k];
        edges.push_back({std::min(tv.vertex, tv.parent), std::max(tv.vertex, tv.parent)});
    }
    edges.insert(edges.end(), plan.red_edges.begin(), plan.red_edges.end());
    edges.insert(edges.end(), plan.blue_edges.begin(), plan.blue_edges.end());
    Graph h = Graph::from_edges(n, edges);
    if (plan.contraction) {
        for (Vertex v = 0; v < h.order(); ++v)
            if (h.degree(v) != 3) throw std::logic_error("auxiliary graph before contraction is not cubic");
        if (!is_biconnected(h)) throw std::logic_error("auxiliary graph before contraction is not 2-connected");
        h = contract_set(h, {plan.contraction->begin(), plan.contraction->end()});
    }
    return h;
}

/// Outcome of the checks on a completed graph.
struct ConstructionCheck {
    bool cubic = false;
    bool biconnected = false;
    bool layered = false;  // every attached vertex of level i at distance delta + i from u1
    DistanceSum wiener = DistanceSum::infinite();
    std::optional<std::int64_t> wiener_drop;  // W(h) - W(h - u1)
    std::vector<Vertex> centers_checked;
    std::vector<Vertex> failing_centers;
    std::vector<std::string> problems;

    bool passed() const { return problems.empty(); }
};

/// Checks `h`: 3-regular, 2-connected, the designed layering (before any
/// contraction: level i at distance i from {v1, v2} and delta + i from u1),
/// and W(h - c) == W(h) for every center c of the base.
inline ConstructionCheck verify_construction(const Graph& h, const ConstructionPlan& plan, unsigned threads = 1) {
    ConstructionCheck out;
    out.cubic = h.order() > 0;
    for (Vertex v = 0; v < h.order(); ++v) out.cubic = out.cubic && h.degree(v) == 3;
    if (!out.cubic) out.problems.push_back("not 3-regular");
    out.biconnected = is_biconnected(h);
    if (!out.biconnected) out.problems.push_back("not 2-connected");
    out.layered = true;
    if (!plan.contraction) {
        const DistanceVector d = bfs_distances(h, plan.base.at("u1"));
        const DistanceVector d1 = bfs_distances(h, plan.base.at("v1"));
        const DistanceVector d2 = bfs_distances(h, plan.base.at("v2"));
        for (const auto& tv : plan.tree) {
            if (d.dist[tv.vertex] != plan.constants.delta + tv.level) out.layered = false;
            if (std::min(d1.dist[tv.vertex], d2.dist[tv.vertex]) != tv.level) out.layered = false;
        }
        if (!out.layered) out.problems.push_back("attached vertices are not at their designed level");
    }
    out.wiener = wiener(h);
    if (out.wiener.finite() && !plan.base.centers.empty()) {
        const DistanceSum removed = removal_wiener(h, plan.base.at("u1"));
        if (removed.finite()) out.wiener_drop = out.wiener.value() - removed.value();
    }
    out.centers_checked = plan.base.centers;
    std::vector<char> bad(out.centers_checked.size(), 0);
    parallel_for(out.centers_checked.size(), threads, [&](std::size_t k) {
        bad[k] = !(removal_wiener(h, out.centers_checked[k]) == out.wiener);
    });
    for (std::size_t k = 0; k < bad.size(); ++k)
        if (bad[k]) out.failing_centers.push_back(out.centers_checked[k]);
    if (!out.failing_centers.empty())
        out.problems.push_back(std::to_string(out.failing_centers.size()) + " centers are not Šoltés vertices");
    return out;
}

struct Construction {
    ConstructionPlan plan;
    Graph graph;
};

/// Realizes L on `base`, where the attached vertices must contribute
/// exactly `target` to the distances from u1.
inline Construction complete_base(const LabeledGraph& base, const PlanConstants& c, std::int64_t target,
                                  const LayerSequence& L) {
    if (d_of(L, c) != target)
        throw domain_error(L.to_string() + " realizes " + std::to_string(d_of(L, c)) + ", not " + std::to_string(target));
    Construction out{realize_trees(base, L, c), {}};
    out.plan.target = target;
    if (L.layers.back() == 1) {
        const auto& top = out.plan.levels.back();
        out.plan.contraction = std::array<Vertex, 3>{top[0], top[1], top[2]};
    }
    place_red_edges(out.plan);
    place_blue_edges(out.plan);
    out.graph = assemble(out.plan);
    return out;
}

/// Cubic 2-connected graph in which u1 and u2 are Šoltés vertices, from
/// G_t (t >= 3) and q attached vertices per tree (default: the smallest
/// admissible q).
inline Construction build_two_soltes(int t, std::optional<std::int64_t> q = std::nullopt) {
    auto [lo, hi] = q_range(t);
    const std::int64_t qq = q.value_or(lo);
    if (qq < lo || qq > hi)
        throw domain_error("q outside [" + std::to_string(lo) + "," + std::to_string(hi) + "] for t = " +
                           std::to_string(t) + " (got " + std::to_string(qq) + ")");
    const PlanConstants c = g_t_constants(t);
    const std::int64_t target = f_poly(t);
    return complete_base(g_t(t), c, target, sequence_for(target, qq, c));
}

/// Wiener change and u1-to-v1 distance of G_{t,r}, measured on the graph.
struct ManyBase {
    LabeledGraph base;
    PlanConstants constants;
    std::int64_t target = 0;  // W(G - u1) - W(G)
};

inline ManyBase measure_many_base(int t, int r) {
    ManyBase out{g_t_r(t, r), {t, 0}, 0};
    const Graph& g = out.base.graph;
    const Vertex u1 = out.base.at("u1");
    const DistanceVector d = bfs_distances(g, u1);
    out.constants.delta = d.dist[out.base.at("v1")];
    if (d.dist[out.base.at("v2")] != out.constants.delta)
        throw std::logic_error("u1 is not equidistant from v1 and v2");
    out.target = removal_wiener(g, u1).value() - wiener(g).value();
    return out;
}

/// Feasible q interval for G_{t,r}, or infeasible_error naming the Wiener
/// change and the interval searched.
inline std::pair<std::int64_t, std::int64_t> many_q_range(const ManyBase& mb) {
    const std::int64_t bound = std::max<std::int64_t>(q_search_bound(mb.constants.t), 1);
    auto r = feasible_q(mb.target, mb.constants.delta, bound);
    if (!r)
        throw infeasible_error("no feasible q: W(G-u1)-W(G) = " + std::to_string(mb.target) + ", delta = " +
                               std::to_string(mb.constants.delta) + ", searched q in [1," + std::to_string(bound) + "]");
    return *r;
}

/// Cubic 2-connected graph with 2^r Šoltés vertices built on G_{t,r}.
inline Construction build_many_soltes(int t, int r, std::optional<std::int64_t> q = std::nullopt) {
    ManyBase mb = measure_many_base(t, r);
    auto [lo, hi] = many_q_range(mb);
    const std::int64_t qq = q.value_or(lo);
    if (qq < lo || qq > hi)
        throw domain_error("q outside [" + std::to_string(lo) + "," + std::to_string(hi) + "] for t = " +
                           std::to_string(t) + ", r = " + std::to_string(r) + " (got " + std::to_string(qq) + ")");
    return complete_base(mb.base, mb.constants, mb.target, sequence_for(mb.target, qq, mb.constants));
}

/// Smallest t >= 1 for which G_{t,r} admits some q; tries up to max_t.
inline std::optional<int> smallest_feasible_t(int r, int max_t = 40) {
    for (int t = 1; t <= max_t; ++t) {
        try {
            many_q_range(measure_many_base(t, r));
            return t;
        } catch (const infeasible_error&) {
        }
    }
    return std::nullopt;
}

} // namespace soltes
