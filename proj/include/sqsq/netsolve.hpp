#ifndef SQSQ_NETSOLVE_HPP
#define SQSQ_NETSOLVE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "sqsq/embedding.hpp"
#include "sqsq/geometry.hpp"

namespace sqsq {

using Int = boost::multiprecision::cpp_int;

// Small dense matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Branch bookkeeping: deterministic order (sorted endpoint pairs,
// multiplicity-indexed), reference direction lower -> higher node index.
struct BranchList {
    std::vector<std::pair<int, int>> branches;  // (lo, hi) per branch
    std::vector<int> edge_of_branch;            // branch -> embedding edge id
};

BranchList branch_order(const PlanarEmbedding& e);

// Reduced incidence matrix: one row per non-datum node, one column per
// branch; +1 at the lower-index endpoint, -1 at the higher. Throws
// DisconnectedGraph.
IntMatrix incidence(const PlanarEmbedding& e, int datum, const BranchList& branches);

// K = A A^T.
IntMatrix kirchhoff(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(IntMatrix m);

// det(K): the graph's spanning-tree count.
Int complexity(const IntMatrix& k);

// V = det(K) K^{-1}, the integer adjugate, by fraction-free Gauss-Jordan.
// Throws SingularMatrix when det(K) = 0.
IntMatrix voltage_matrix(const IntMatrix& k);

// F = A^T V A over all m branches (symmetric, m x m).
IntMatrix full_currents(const IntMatrix& a, const IntMatrix& v);

struct Reduction {
    std::vector<Int> r;  // per-row GCD; zero rows keep r = 0 and are flagged
    IntMatrix b;         // F with row i divided by r[i]
    std::vector<int> zero_rows;
};

Reduction reduce(const IntMatrix& f);

// Full pipeline state for one graph.
struct NetworkAnalysis {
    BranchList branches;
    int datum = 0;
    IntMatrix a;
    IntMatrix k;
    Int det;
    IntMatrix v;
    IntMatrix f;
    Reduction red;
};

// Runs incidence..reduce with datum defaulting to the highest-index node.
NetworkAnalysis analyze(const PlanarEmbedding& e, int datum = -1);

// True iff 2 R_i B_ii = det(K): polar branch i yields a squared square.
bool detect_square(const NetworkAnalysis& na, int i);

// Reduced node potentials for polar branch i (datum at zero); together with
// the currents of row i these make up one branch's solution.
std::vector<Int> node_potentials(const NetworkAnalysis& na, int i);

struct ExtractedRectangle {
    int polar_branch = 0;
    Dissection dissection;
    bool square = false;
    // Two vertices on a common face share a potential: the dissection is
    // crossed (or belongs to a compound family); reported, not dropped.
    bool equal_potential_faces = false;
};

struct ExtractionResult {
    std::vector<ExtractedRectangle> rectangles;
    std::vector<int> crossed_rows;  // rows skipped for a zero current
};

// Lays out one dissection per usable polar branch: y from node potentials,
// x from face potentials of the embedding, negative currents rectified by
// direction reversal. Rows with zero currents are reported in crossed_rows.
// Throws GeometryError if a layout fails validation.
ExtractionResult extract_dissections(const PlanarEmbedding& e, const NetworkAnalysis& na);

}  // namespace sqsq

#endif
