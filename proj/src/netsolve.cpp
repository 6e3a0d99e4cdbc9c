#include "sqsq/netsolve.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

#include "sqsq/errors.hpp"

namespace sqsq {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    }
    return out;
}

BranchList branch_order(const PlanarEmbedding& e) {
    BranchList bl;
    std::vector<int> ids(e.edge_count());
    for (int i = 0; i < e.edge_count(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
        const auto a = std::minmax(e.edges()[x].first, e.edges()[x].second);
        const auto b = std::minmax(e.edges()[y].first, e.edges()[y].second);
        if (a != b) return a < b;
        return x < y;  // multiplicity index
    });
    for (int id : ids) {
        const auto mm = std::minmax(e.edges()[id].first, e.edges()[id].second);
        bl.branches.emplace_back(mm.first, mm.second);
        bl.edge_of_branch.push_back(id);
    }
    return bl;
}

IntMatrix incidence(const PlanarEmbedding& e, int datum, const BranchList& branches) {
    if (!e.connected()) throw DisconnectedGraph("incidence requires a connected graph");
    const int n = e.vertex_count();
    const int m = static_cast<int>(branches.branches.size());
    IntMatrix a(n - 1, m);
    auto row = [&](int v) { return v < datum ? v : v - 1; };
    for (int k = 0; k < m; ++k) {
        const auto [lo, hi] = branches.branches[k];
        if (lo != datum) a.at(row(lo), k) = 1;
        if (hi != datum) a.at(row(hi), k) = -1;
    }
    return a;
}

IntMatrix kirchhoff(const IntMatrix& a) { return a * a.transposed(); }

Int bareiss_determinant(IntMatrix m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m.at(r, k) != 0) {
                    swap = r;
                    break;
                }
            }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Int complexity(const IntMatrix& k) { return bareiss_determinant(k); }

IntMatrix voltage_matrix(const IntMatrix& k) {
    assert(k.rows() == k.cols());
    const int n = k.rows();
    // Fraction-free Gauss-Jordan on [K | I]; finishes with [det*I | adj(K)]
    // and adj(K) = det(K) K^{-1}. All divisions are exact.
    IntMatrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = k.at(i, j);
        m.at(i, n + i) = 1;
    }
    Int prev = 1;
    for (int col = 0; col < n; ++col) {
        if (m.at(col, col) == 0) {
            // Kirchhoff matrices of connected graphs are positive definite;
            // a zero pivot means a singular input.
            throw SingularMatrix("voltage_matrix: zero pivot (disconnected input?)");
        }
        const Int p = m.at(col, col);
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const Int f = m.at(i, col);
            for (int j = 0; j < 2 * n; ++j) {
                if (j == col) continue;
                m.at(i, j) = (m.at(i, j) * p - f * m.at(col, j)) / prev;
            }
            m.at(i, col) = 0;
        }
        prev = p;
    }
    IntMatrix v(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v.at(i, j) = m.at(i, n + j);
    return v;
}

IntMatrix full_currents(const IntMatrix& a, const IntMatrix& v) {
    // F = A^T V A, exploiting the two-entry structure of A's columns.
    const int n = v.rows();
    const int m = a.cols();
    // column signature of A: (plus-row, minus-row), -1 for the datum
    std::vector<std::pair<int, int>> sig(m, {-1, -1});
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n; ++i) {
            if (a.at(i, k) == 1) sig[k].first = i;
            else if (a.at(i, k) == -1) sig[k].second = i;
        }
    }
    // E = V A
    IntMatrix e(n, m);
    for (int k = 0; k < m; ++k) {
        const auto [pi, mi] = sig[k];
        for (int i = 0; i < n; ++i) {
            Int x = 0;
            if (pi >= 0) x += v.at(i, pi);
            if (mi >= 0) x -= v.at(i, mi);
            e.at(i, k) = std::move(x);
        }
    }
    IntMatrix f(m, m);
    for (int i = 0; i < m; ++i) {
        const auto [pi, mi] = sig[i];
        for (int k = 0; k < m; ++k) {
            Int x = 0;
            if (pi >= 0) x += e.at(pi, k);
            if (mi >= 0) x -= e.at(mi, k);
            f.at(i, k) = std::move(x);
        }
    }
    return f;
}

Reduction reduce(const IntMatrix& f) {
    Reduction out;
    const int m = f.rows();
    out.r.resize(m);
    out.b = IntMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        Int g = 0;
        for (int j = 0; j < m; ++j) g = boost::multiprecision::gcd(g, f.at(i, j));
        if (g == 0) {
            out.zero_rows.push_back(i);
            continue;
        }
        out.r[i] = g;
        for (int j = 0; j < m; ++j) out.b.at(i, j) = f.at(i, j) / g;
    }
    return out;
}

NetworkAnalysis analyze(const PlanarEmbedding& e, int datum) {
    NetworkAnalysis na;
    na.branches = branch_order(e);
    na.datum = datum < 0 ? e.vertex_count() - 1 : datum;
    na.a = incidence(e, na.datum, na.branches);
    na.k = kirchhoff(na.a);
    na.det = complexity(na.k);
    na.v = voltage_matrix(na.k);
    na.f = full_currents(na.a, na.v);
    na.red = reduce(na.f);
    return na;
}

bool detect_square(const NetworkAnalysis& na, int i) {
    if (na.red.r[i] == 0) return false;
    return 2 * na.red.r[i] * na.red.b.at(i, i) == na.det;
}

namespace {

Coord to_coord(const Int& x) {
    if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min())
        throw GeometryError("element size exceeds coordinate range");
    return static_cast<Coord>(x);
}

}  // namespace

std::vector<Int> node_potentials(const NetworkAnalysis& na, int i) {
    const int n = na.a.rows() + 1;
    auto row_of = [&](int v) { return v < na.datum ? v : v - 1; };
    const auto [s, t] = na.branches.branches[i];
    std::vector<Int> pot(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == na.datum) continue;
        Int x = 0;
        if (s != na.datum) x += na.v.at(row_of(v), row_of(s));
        if (t != na.datum) x -= na.v.at(row_of(v), row_of(t));
        assert(x % na.red.r[i] == 0);
        pot[v] = x / na.red.r[i];
    }
    return pot;
}

ExtractionResult extract_dissections(const PlanarEmbedding& e, const NetworkAnalysis& na) {
    ExtractionResult out;
    const int m = static_cast<int>(na.branches.branches.size());

    // face ids per dart come with the embedding
    for (int i = 0; i < m; ++i) {
        if (na.red.r[i] == 0) {
            out.crossed_rows.push_back(i);
            continue;
        }
        bool zero = false;
        for (int k = 0; k < m; ++k) {
            if (k != i && na.red.b.at(i, k) == 0) zero = true;
        }
        if (zero) {
            out.crossed_rows.push_back(i);
            continue;
        }

        // node potentials: (V a_i) / R_i, datum at 0
        const std::vector<Int> pot = node_potentials(na, i);
        const Int top = *std::max_element(pot.begin(), pot.end());

        // equal potentials among vertices sharing a face
        bool equal_pot = false;
        for (const auto& face : e.faces()) {
            std::vector<Int> vals;
            for (int d : face) vals.push_back(pot[e.dart_origin(d)]);
            std::sort(vals.begin(), vals.end());
            if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) equal_pot = true;
        }

        // face x-potentials, integrated over non-polar branches
        const int fcount = e.face_count();
        std::vector<Int> xf(fcount);
        std::vector<char> have(fcount, 0);
        std::vector<std::vector<std::pair<int, Int>>> adj(fcount);
        for (int k = 0; k < m; ++k) {
            if (k == i) continue;
            const int eid = na.branches.edge_of_branch[k];
            const Int& c = na.red.b.at(i, k);
            // dart 2*eid runs first->second = lo->hi? edges() store the
            // original embedding orientation; map sign through it.
            const auto [efirst, esecond] = e.edges()[eid];
            const auto [lo, hi] = na.branches.branches[k];
            // current value along dart 2*eid (from efirst to esecond)
            const Int along = (efirst == lo && esecond == hi) ? c : -c;
            const int fa = e.face_of_dart(2 * eid);
            const int fb = e.face_of_dart(2 * eid + 1);
            adj[fa].push_back({fb, along});
            adj[fb].push_back({fa, -along});
        }
        std::vector<int> stack{0};
        have[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (const auto& [g, d] : adj[f]) {
                if (!have[g]) {
                    have[g] = 1;
                    xf[g] = xf[f] + d;
                    ++reached;
                    stack.push_back(g);
                }
            }
        }
        if (reached != fcount) throw GeometryError("face integration did not span the embedding");

        Dissection d;
        Coord xmin = std::numeric_limits<Coord>::max();
        for (int k = 0; k < m; ++k) {
            if (k == i) continue;
            const int eid = na.branches.edge_of_branch[k];
            const auto [lo, hi] = na.branches.branches[k];
            const Int& c = na.red.b.at(i, k);
            const int from = c > 0 ? lo : hi;  // current flows high -> low potential
            const Int size = boost::multiprecision::abs(c);
            const Int y = top - pot[from];
            const Int xa = xf[e.face_of_dart(2 * eid)];
            const Int xb = xf[e.face_of_dart(2 * eid + 1)];
            const Int xl = std::min(xa, xb);
            d.elements.push_back({to_coord(xl), to_coord(y), to_coord(size)});
            xmin = std::min(xmin, to_coord(xl));
        }
        for (Element& el : d.elements) el.x -= xmin;
        Coord w = 0, h = 0;
        for (const Element& el : d.elements) {
            w = std::max(w, el.right());
            h = std::max(h, el.bottom());
        }
        d.width = w;
        d.height = h;
        d.normalize();
        if (!validate_tiling(d).ok)
            throw GeometryError("polar branch " + std::to_string(i) + " produced an invalid layout");
        // semiperimeter identity: width + height = det / R_i
        if (Int(d.width) + Int(d.height) != na.det / na.red.r[i])
            throw GeometryError("semiperimeter identity violated");

        out.rectangles.push_back({i, std::move(d), detect_square(na, i), equal_pot});
    }
    return out;
}

}  // namespace sqsq
