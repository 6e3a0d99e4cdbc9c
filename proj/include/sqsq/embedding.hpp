#ifndef SQSQ_EMBEDDING_HPP
#define SQSQ_EMBEDDING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace sqsq {

// A connected sphere embedding as a rotation system. Darts 2e and 2e+1 are
// the two ends of edge e; rotations list darts by origin in clockwise order.
// Loops are rejected everywhere; parallel edges are allowed.
class PlanarEmbedding {
public:
    PlanarEmbedding() = default;

    // Neighbor rotation lists, 0-based vertices. Parallel edges are paired
    // occurrence-to-occurrence in reversed list order (sphere convention).
    static PlanarEmbedding from_rotation_lists(const std::vector<std::vector<int>>& lists);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }  // darts by origin
    // Faces as dart cycles; dart d lies on exactly one face.
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_of_dart(int dart) const { return face_of_[dart]; }

    static int twin(int dart) { return dart ^ 1; }
    int dart_origin(int dart) const {
        const auto& e = edges_[dart >> 1];
        return (dart & 1) ? e.second : e.first;
    }
    int dart_target(int dart) const { return dart_origin(twin(dart)); }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int min_degree() const;
    bool connected() const;

    // Neighbor vertex lists in rotation order (for writing planar_code).
    std::vector<std::vector<int>> neighbor_lists() const;

    // Euler and rotation-consistency invariants; violated means a bug or a
    // malformed input record.
    bool euler_ok() const { return n_ - edge_count() + face_count() == 2; }

    PlanarEmbedding dual() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_;

    void build_faces();
    friend PlanarEmbedding embedding_from_parts(int, std::vector<std::pair<int, int>>,
                                                std::vector<std::vector<int>>);
};

// Internal assembly hook shared with the generator.
PlanarEmbedding embedding_from_parts(int n, std::vector<std::pair<int, int>> edges,
                                     std::vector<std::vector<int>> rot);

// --- planar_code binary stream ---

// Lazy reader. Optional ">>planar_code<<" ASCII header, then per graph one
// byte n followed by n zero-terminated clockwise neighbor lists (1-based).
class PlanarCodeReader {
public:
    explicit PlanarCodeReader(std::istream& in);
    // nullopt at clean end of stream; FormatError with byte offset otherwise.
    std::optional<PlanarEmbedding> next();
    std::size_t offset() const { return offset_; }

private:
    std::istream& in_;
    std::size_t offset_ = 0;
    bool header_checked_ = false;
};

void write_planar_code(std::ostream& out, const PlanarEmbedding& e, bool with_header);

// --- connectivity and class filters ---

enum class ConnectivityClass {
    Disconnected,
    One,       // connected but has a cutvertex
    ExactlyTwo,  // 2-connected with some 2-separator
    Three,     // no 2-separator
};

ConnectivityClass connectivity_class(const PlanarEmbedding& e);

struct ClassFilter {
    int min_degree = 3;
    enum class Connectivity { ExactlyTwo, AtLeastTwo, Three } connectivity = Connectivity::ExactlyTwo;
    std::optional<int> edge_count;
};

bool filter_class(const PlanarEmbedding& e, const ClassFilter& f);

// Parallel pair whose darts are non-adjacent in the rotation at both
// endpoints; such graphs cannot yield squared squares and are excluded from
// candidate enumeration.
bool has_separated_multiedge(const PlanarEmbedding& e);

// Canonical byte sequence: equal iff embedded-isomorphic, reflections
// included (sphere convention). Minimal BFS code over all start darts and
// both orientations.
std::vector<std::uint8_t> canonical_embedding_code(const PlanarEmbedding& e);

}  // namespace sqsq

#endif
