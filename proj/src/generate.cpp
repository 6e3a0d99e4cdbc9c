#include "sqsq/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sqsq/errors.hpp"

namespace sqsq {

namespace {

using Lists = std::vector<std::vector<int>>;

PlanarEmbedding to_embedding(const Lists& lists) { return PlanarEmbedding::from_rotation_lists(lists); }

bool all_triangles(const PlanarEmbedding& e) {
    for (const auto& f : e.faces())
        if (f.size() != 3) return false;
    return true;
}

bool is_simple(const Lists& lists) {
    for (std::size_t u = 0; u < lists.size(); ++u) {
        std::set<int> s(lists[u].begin(), lists[u].end());
        if (s.size() != lists[u].size()) return false;
        if (s.count(static_cast<int>(u))) return false;
    }
    return true;
}

// Split vertex v of a triangulation along corners i, j of its rotation:
// the arc u_i..u_j stays with v, the arc u_j..u_i moves to a new vertex v2,
// and the corners become adjacent to both.
Lists split_vertex(const Lists& rot, int v, int i, int j) {
    const int d = static_cast<int>(rot[v].size());
    auto arc = [&](int from, int to) {
        std::vector<int> out;
        for (int k = 0;; ++k) {
            const int idx = (from + k) % d;
            out.push_back(rot[v][idx]);
            if (idx == to % d) break;
        }
        return out;
    };
    std::vector<int> arc1 = arc(i, j);
    std::vector<int> arc2 = arc(j, i);
    if (arc1.size() < 2 || arc2.size() < 2) return {};
    Lists out = rot;
    out.push_back({});
    const int v2 = static_cast<int>(rot.size());
    out[v] = arc1;
    out[v].insert(out[v].begin(), v2);
    out[v2] = arc2;
    out[v2].insert(out[v2].begin(), v);
    const int ui = rot[v][i], uj = rot[v][j];
    for (int u : arc2) {
        if (u == ui || u == uj) continue;
        auto& l = out[u];
        *std::find(l.begin(), l.end(), v) = v2;
    }
    {
        auto& l = out[ui];
        auto it = std::find(l.begin(), l.end(), v);
        it = l.insert(it, v);       // (v, v2) in place of v
        *(it + 1) = v2;
    }
    {
        auto& l = out[uj];
        auto it = std::find(l.begin(), l.end(), v);
        it = l.insert(it, v2);      // (v2, v) in place of v
    }
    return out;
}

}  // namespace

std::vector<PlanarEmbedding> triangulations(int n) {
    if (n < 4) return {};
    const Lists k4{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    std::map<std::vector<std::uint8_t>, Lists> level{{canonical_embedding_code(to_embedding(k4)), k4}};
    for (int sz = 5; sz <= n; ++sz) {
        std::map<std::vector<std::uint8_t>, Lists> next;
        for (const auto& [code, rot] : level) {
            for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
                const int d = static_cast<int>(rot[v].size());
                for (int i = 0; i < d; ++i) {
                    for (int j = 0; j < d; ++j) {
                        if (i == j) continue;
                        Lists t = split_vertex(rot, v, i, j);
                        if (t.empty() || !is_simple(t)) continue;
                        PlanarEmbedding e = to_embedding(t);
                        if (!e.euler_ok() || !all_triangles(e)) continue;
                        next.emplace(canonical_embedding_code(e), std::move(t));
                    }
                }
            }
        }
        level = std::move(next);
    }
    std::vector<PlanarEmbedding> out;
    out.reserve(level.size());
    for (const auto& [code, rot] : level) out.push_back(to_embedding(rot));
    return out;
}

std::vector<PlanarEmbedding> brute_generate(const BruteGenerateOptions& opt) {
    if (opt.max_vertices > 10 || opt.max_edges > 21)
        throw ResourceLimit("brute_generate is a desk-scale oracle (n <= 10, m <= 21)");
    std::map<std::vector<std::uint8_t>, Lists> seen;
    for (int n = 4; n <= opt.max_vertices; ++n) {
        const int full = 3 * n - 6;
        // min degree 3 forces m >= ceil(3n/2); no point removing deeper
        const int min_edges = (3 * n + 1) / 2;
        const int max_remove = full - min_edges;
        for (const PlanarEmbedding& tri : triangulations(n)) {
            if (tri.edge_count() != full) continue;
            const Lists base = tri.neighbor_lists();
            // iterate subsets of edges up to max_remove by recursion over edge ids
            std::vector<std::pair<int, int>> edges;
            for (const auto& [u, v] : tri.edges()) edges.emplace_back(std::min(u, v), std::max(u, v));
            std::vector<int> chosen;
            auto apply_removal = [&](const std::vector<int>& cut) {
                Lists lists = base;
                for (int id : cut) {
                    const auto [u, v] = edges[id];
                    auto& lu = lists[u];
                    lu.erase(std::find(lu.begin(), lu.end(), v));
                    auto& lv = lists[v];
                    lv.erase(std::find(lv.begin(), lv.end(), u));
                }
                for (const auto& l : lists)
                    if (static_cast<int>(l.size()) < opt.min_degree) return;
                PlanarEmbedding e = to_embedding(lists);
                if (!e.connected() || !e.euler_ok()) return;
                if (e.edge_count() > opt.max_edges) return;
                seen.emplace(canonical_embedding_code(e), std::move(lists));
            };
            auto rec = [&](auto&& self, int from) -> void {
                if (full - static_cast<int>(chosen.size()) <= opt.max_edges) apply_removal(chosen);
                if (static_cast<int>(chosen.size()) == max_remove) return;
                for (int id = from; id < full; ++id) {
                    chosen.push_back(id);
                    self(self, id + 1);
                    chosen.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    std::vector<PlanarEmbedding> out;
    out.reserve(seen.size());
    // map order = canonical-code order; stable sort keeps it as the tiebreak
    for (const auto& [code, lists] : seen) out.push_back(to_embedding(lists));
    std::stable_sort(out.begin(), out.end(), [](const PlanarEmbedding& a, const PlanarEmbedding& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.edge_count() < b.edge_count();
    });
    return out;
}

std::vector<PlanarEmbedding> brute_generate(int max_edges) {
    BruteGenerateOptions opt;
    opt.max_edges = max_edges;
    opt.max_vertices = std::min(10, (2 * max_edges) / 3);
    return brute_generate(opt);
}

std::map<std::pair<int, int>, int> class_census(const std::vector<PlanarEmbedding>& all,
                                                const ClassFilter& filter) {
    std::map<std::pair<int, int>, int> cells;
    for (const PlanarEmbedding& e : all) {
        if (!filter_class(e, filter)) continue;
        ++cells[{e.vertex_count(), e.face_count()}];
    }
    return cells;
}

}  // namespace sqsq
