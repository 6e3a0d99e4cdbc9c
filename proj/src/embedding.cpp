#include "sqsq/embedding.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "sqsq/errors.hpp"

namespace sqsq {

PlanarEmbedding embedding_from_parts(int n, std::vector<std::pair<int, int>> edges,
                                     std::vector<std::vector<int>> rot) {
    PlanarEmbedding e;
    e.n_ = n;
    e.edges_ = std::move(edges);
    e.rot_ = std::move(rot);
    e.build_faces();
    return e;
}

PlanarEmbedding PlanarEmbedding::from_rotation_lists(const std::vector<std::vector<int>>& lists) {
    const int n = static_cast<int>(lists.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(n);
    // dart slots per vertex, to be filled as edges get numbered
    for (int v = 0; v < n; ++v) rot[v].resize(lists[v].size(), -1);

    // Collect occurrence positions per unordered pair; pair them in reversed
    // order between the two lists.
    std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>> occ;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(lists[u].size()); ++i) {
            const int v = lists[u][i];
            if (v < 0 || v >= n) throw Error("neighbor index out of range");
            if (v == u) throw Error("loops are rejected");
            auto key = std::minmax(u, v);
            auto& both = occ[{key.first, key.second}];
            (u < v ? both.first : both.second).push_back(i);
        }
    }
    for (auto& [key, both] : occ) {
        auto& [lo, hi] = key;
        auto& [lo_pos, hi_pos] = both;
        if (lo_pos.size() != hi_pos.size()) throw Error("rotation lists are inconsistent");
        const std::size_t k = lo_pos.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int eid = static_cast<int>(edges.size());
            edges.emplace_back(lo, hi);
            rot[lo][lo_pos[i]] = 2 * eid;
            rot[hi][hi_pos[k - 1 - i]] = 2 * eid + 1;
        }
    }
    return embedding_from_parts(n, std::move(edges), std::move(rot));
}

void PlanarEmbedding::build_faces() {
    const int darts = 2 * edge_count();
    // position of each dart within its origin's rotation
    std::vector<int> pos(darts, -1);
    for (int v = 0; v < n_; ++v) {
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos[rot_[v][i]] = i;
    }
    faces_.clear();
    face_of_.assign(darts, -1);
    for (int d0 = 0; d0 < darts; ++d0) {
        if (face_of_[d0] != -1) continue;
        std::vector<int> cycle;
        int d = d0;
        while (face_of_[d] == -1) {
            face_of_[d] = static_cast<int>(faces_.size());
            cycle.push_back(d);
            // next dart along the face: rotation successor of the twin
            const int t = twin(d);
            const int v = dart_origin(t);
            const auto& r = rot_[v];
            d = r[(pos[t] + 1) % r.size()];
        }
        faces_.push_back(std::move(cycle));
    }
}

int PlanarEmbedding::min_degree() const {
    int md = edge_count() * 2 + 1;
    for (int v = 0; v < n_; ++v) md = std::min(md, degree(v));
    return n_ ? md : 0;
}

bool PlanarEmbedding::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int d : rot_[u]) {
            const int v = dart_target(d);
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

std::vector<std::vector<int>> PlanarEmbedding::neighbor_lists() const {
    std::vector<std::vector<int>> out(n_);
    for (int v = 0; v < n_; ++v) {
        out[v].reserve(rot_[v].size());
        for (int d : rot_[v]) out[v].push_back(dart_target(d));
    }
    return out;
}

PlanarEmbedding PlanarEmbedding::dual() const {
    // One dual vertex per face; dual edge e* joins the faces flanking e,
    // oriented so that dual dart 2e originates at the face of primal dart 2e.
    // Under that identification a dual dart IS the primal dart with the same
    // id, and the rotation around a face-vertex is the face's dart cycle.
    const int fn = face_count();
    std::vector<std::pair<int, int>> dedges(edge_count());
    for (int e = 0; e < edge_count(); ++e) {
        dedges[e] = {face_of_[2 * e], face_of_[2 * e + 1]};
    }
    std::vector<std::vector<int>> drot = faces_;
    PlanarEmbedding out;
    out.n_ = fn;
    out.edges_ = std::move(dedges);
    out.rot_ = std::move(drot);
    out.build_faces();
    return out;
}

// --- planar_code ---

namespace {
constexpr char kHeader[] = ">>planar_code<<";
}

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {}

std::optional<PlanarEmbedding> PlanarCodeReader::next() {
    if (!header_checked_) {
        header_checked_ = true;
        if (in_.peek() == '>') {
            char buf[sizeof(kHeader) - 1];
            in_.read(buf, sizeof(buf));
            if (in_.gcount() != static_cast<std::streamsize>(sizeof(buf)) ||
                !std::equal(buf, buf + sizeof(buf), kHeader)) {
                throw FormatError(offset_, "bad header");
            }
            offset_ += sizeof(buf);
        }
    }
    const int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    ++offset_;
    const int n = first;
    if (n < 1 || n > 254) throw FormatError(offset_ - 1, "vertex count out of range");
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        for (;;) {
            const int b = in_.get();
            if (b == std::char_traits<char>::eof()) throw FormatError(offset_, "truncated record");
            ++offset_;
            if (b == 0) break;
            if (b > n) throw FormatError(offset_ - 1, "neighbor index out of range");
            lists[v].push_back(b - 1);
        }
    }
    PlanarEmbedding e;
    try {
        e = PlanarEmbedding::from_rotation_lists(lists);
    } catch (const Error& err) {
        throw FormatError(offset_, err.what());
    }
    if (!e.connected()) throw FormatError(offset_, "disconnected embedding");
    if (!e.euler_ok()) throw FormatError(offset_, "rotation system is not a sphere embedding");
    return e;
}

void write_planar_code(std::ostream& out, const PlanarEmbedding& e, bool with_header) {
    if (with_header) out.write(kHeader, sizeof(kHeader) - 1);
    const auto lists = e.neighbor_lists();
    out.put(static_cast<char>(lists.size()));
    for (const auto& l : lists) {
        for (int v : l) out.put(static_cast<char>(v + 1));
        out.put(0);
    }
}

// --- connectivity ---

namespace {

// Connected after deleting the vertex set `skip` (size 0..2)?
bool connected_without(const PlanarEmbedding& e, int a, int b) {
    const int n = e.vertex_count();
    int start = -1;
    int expect = 0;
    for (int v = 0; v < n; ++v) {
        if (v == a || v == b) continue;
        ++expect;
        if (start < 0) start = v;
    }
    if (start < 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int d : e.rotations()[u]) {
            const int v = e.dart_target(d);
            if (v == a || v == b || seen[v]) continue;
            seen[v] = 1;
            ++count;
            stack.push_back(v);
        }
    }
    return count == expect;
}

}  // namespace

ConnectivityClass connectivity_class(const PlanarEmbedding& e) {
    if (!e.connected()) return ConnectivityClass::Disconnected;
    const int n = e.vertex_count();
    for (int a = 0; a < n; ++a) {
        if (!connected_without(e, a, -1)) return ConnectivityClass::One;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!connected_without(e, a, b)) return ConnectivityClass::ExactlyTwo;
        }
    }
    return ConnectivityClass::Three;
}

bool filter_class(const PlanarEmbedding& e, const ClassFilter& f) {
    if (e.min_degree() < f.min_degree) return false;
    if (f.edge_count && e.edge_count() != *f.edge_count) return false;
    const ConnectivityClass c = connectivity_class(e);
    switch (f.connectivity) {
        case ClassFilter::Connectivity::ExactlyTwo:
            return c == ConnectivityClass::ExactlyTwo;
        case ClassFilter::Connectivity::AtLeastTwo:
            return c == ConnectivityClass::ExactlyTwo || c == ConnectivityClass::Three;
        case ClassFilter::Connectivity::Three:
            return c == ConnectivityClass::Three;
    }
    return false;
}

bool has_separated_multiedge(const PlanarEmbedding& e) {
    const auto& edges = e.edges();
    const int m = e.edge_count();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (edges[i] != edges[j]) continue;
            // adjacency of the two parallel darts in the rotation at a vertex
            auto adjacent_at = [&](int v, int d1, int d2) {
                const auto& r = e.rotations()[v];
                const int deg = static_cast<int>(r.size());
                int p1 = -1, p2 = -1;
                for (int k = 0; k < deg; ++k) {
                    if (r[k] == d1) p1 = k;
                    if (r[k] == d2) p2 = k;
                }
                return (p1 + 1) % deg == p2 || (p2 + 1) % deg == p1;
            };
            const auto [u, v] = edges[i];
            if (!adjacent_at(u, 2 * i, 2 * j) && !adjacent_at(v, 2 * i + 1, 2 * j + 1)) return true;
        }
    }
    return false;
}

std::vector<std::uint8_t> canonical_embedding_code(const PlanarEmbedding& e) {
    const int n = e.vertex_count();
    const int darts = 2 * e.edge_count();
    std::vector<int> pos(darts);
    for (int v = 0; v < n; ++v) {
        const auto& r = e.rotations()[v];
        for (int i = 0; i < static_cast<int>(r.size()); ++i) pos[r[i]] = i;
    }
    std::vector<std::uint8_t> best;
    std::vector<int> label(n), order;
    std::vector<int> entry(n);
    for (int start = 0; start < darts; ++start) {
        for (int dir : {1, -1}) {
            std::fill(label.begin(), label.end(), 0);
            order.clear();
            const int s = e.dart_origin(start);
            label[s] = 1;
            entry[s] = start;
            order.push_back(s);
            std::vector<std::uint8_t> code;
            code.reserve(darts + n);
            int next_label = 2;
            bool worse = false;   // strictly above best on the tied prefix
            bool tied = !best.empty();
            auto push = [&](std::uint8_t b) {
                code.push_back(b);
                if (tied) {
                    const std::uint8_t ref = best[code.size() - 1];
                    if (b > ref) worse = true;
                    else if (b < ref) tied = false;
                }
            };
            for (std::size_t qi = 0; qi < order.size() && !worse; ++qi) {
                const int u = order[qi];
                const auto& r = e.rotations()[u];
                const int deg = static_cast<int>(r.size());
                const int at = pos[entry[u]];
                for (int k = 0; k < deg && !worse; ++k) {
                    const int d = r[((at + dir * k) % deg + deg) % deg];
                    const int v = e.dart_target(d);
                    if (label[v] == 0) {
                        label[v] = next_label++;
                        entry[v] = PlanarEmbedding::twin(d);
                        order.push_back(v);
                    }
                    push(static_cast<std::uint8_t>(label[v]));
                }
                if (!worse) push(0);
            }
            if (!worse && (best.empty() || code < best)) best = std::move(code);
        }
    }
    return best;
}

}  // namespace sqsq
