#ifndef SQSQ_CATALOG_HPP
#define SQSQ_CATALOG_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqsq/bouwkamp.hpp"
#include "sqsq/embedding.hpp"
#include "sqsq/geometry.hpp"

namespace sqsq {

struct CatalogEntry {
    Tablecode tablecode;  // canonical
    std::string id;       // size + letter: lowercase compound, uppercase simple
    int isomer_count = 0;
    Classification classification;
    std::map<std::string, std::string> provenance;

    std::string line() const;  // tablecode + "# key=value ..." comment
};

// Parses a catalog line (tablecode or Bouwkampcode body plus optional
// metadata comment) into an entry skeleton; classification and isomers are
// recomputed by the caller when needed.
struct CatalogLine {
    std::optional<Tablecode> tablecode;
    std::optional<BouwkampCode> bouwkampcode;
    ExtendedFields meta;
};

CatalogLine parse_catalog_line(std::string_view line);

struct RunStats {
    std::uint64_t graphs_processed = 0;
    std::uint64_t rows_solved = 0;
    std::uint64_t squares_found = 0;
    std::uint64_t perfect_squares = 0;
    std::uint64_t compound_perfect = 0;
    std::uint64_t distinct_after_dedup = 0;
    std::uint64_t crossed_rows = 0;
    std::chrono::milliseconds elapsed{0};

    std::string table() const;      // aligned plain text
    std::string key_values() const; // machine-readable one-liners
};

struct EnumerateOptions {
    std::optional<int> order;  // expected |E| = order + 1 unless no_check
    bool no_check = false;
    ClassFilter filter;
    int jobs = 1;
    bool resume = false;
    std::string output;               // catalog path ("" = stdout only)
    std::string progress_suffix = ".progress";
    bool exclude_separated_multiedges = true;
};

struct EnumerateResult {
    std::vector<CatalogEntry> entries;  // ordered: size, then tablecode
    RunStats stats;
};

// Full pipeline over planar_code files: filter, solve, extract, keep perfect
// squares, canonicalize, dedup, assign ids. Deterministic regardless of the
// worker count.
EnumerateResult enumerate_catalog(const std::vector<std::string>& planar_code_files,
                                  const EnumerateOptions& opt);

// Sorts entries and assigns size+letter ids: for equal sizes the numerically
// lower tablecode gets the lower letter.
void finalize_entries(std::vector<CatalogEntry>& entries);

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);

}  // namespace sqsq

#endif
