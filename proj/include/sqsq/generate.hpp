#ifndef SQSQ_GENERATE_HPP
#define SQSQ_GENERATE_HPP

#include <functional>
#include <map>
#include <vector>

#include "sqsq/embedding.hpp"

namespace sqsq {

// All simple sphere triangulations on n vertices, one per embedded
// isomorphism class, grown from the tetrahedron by vertex splitting.
std::vector<PlanarEmbedding> triangulations(int n);

struct BruteGenerateOptions {
    int max_vertices = 8;
    int max_edges = 15;
    int min_degree = 3;
};

// Exhaustive desk-scale oracle: every simple connected embedding with
// 4 <= n <= max_vertices, m <= max_edges and min degree >= min_degree,
// one representative per embedded-isomorphism class, obtained by deleting
// edge subsets from triangulations. Deterministic order. Throws
// ResourceLimit beyond n = 10 or m = 21.
std::vector<PlanarEmbedding> brute_generate(const BruteGenerateOptions& opt);

// Convenience single-argument form; the vertex bound is derived.
std::vector<PlanarEmbedding> brute_generate(int max_edges);

// (|V|, |F|) -> class size for embeddings passing the filter.
std::map<std::pair<int, int>, int> class_census(const std::vector<PlanarEmbedding>& all,
                                                const ClassFilter& filter);

}  // namespace sqsq

#endif
