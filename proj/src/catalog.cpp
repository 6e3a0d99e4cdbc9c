#include "sqsq/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sqsq/errors.hpp"
#include "sqsq/netsolve.hpp"

namespace sqsq {

std::string CatalogEntry::line() const {
    std::string cls;
    cls += (classification.structure == Structure::Simple) ? 'S' : 'C';
    cls += (classification.perfection == Perfection::Perfect) ? 'P' : 'I';
    std::string s = tablecode.text() + " # id=" + id + " isomers=" + std::to_string(isomer_count) +
                    " class=" + cls;
    if (classification.type_code) s += " type=" + *classification.type_code;
    for (const auto& [k, v] : provenance) s += " " + k + "=" + v;
    return s;
}

CatalogLine parse_catalog_line(std::string_view line) {
    CatalogLine out;
    const auto hash = line.find('#');
    std::string_view body = line.substr(0, hash == std::string_view::npos ? line.size() : hash);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) throw ParseError(0, "empty catalog line");
    if (hash != std::string_view::npos) out.meta = parse_metadata_comment(line.substr(hash + 1));
    if (body.find('(') != std::string_view::npos) {
        out.bouwkampcode = parse_bouwkampcode(line);
        out.meta = out.bouwkampcode->extended;
    } else {
        out.tablecode = parse_tablecode(body);
    }
    return out;
}

std::string RunStats::table() const {
    std::ostringstream os;
    auto row = [&](const char* k, std::uint64_t v) {
        os << "  " << k;
        for (std::size_t i = std::char_traits<char>::length(k); i < 22; ++i) os << ' ';
        os << v << "\n";
    };
    os << "run statistics\n";
    row("graphs processed", graphs_processed);
    row("rows solved", rows_solved);
    row("crossed rows", crossed_rows);
    row("squares found", squares_found);
    row("perfect squares", perfect_squares);
    row("compound perfect", compound_perfect);
    row("distinct after dedup", distinct_after_dedup);
    row("elapsed ms", static_cast<std::uint64_t>(elapsed.count()));
    return os.str();
}

std::string RunStats::key_values() const {
    std::ostringstream os;
    os << "graphs_processed=" << graphs_processed << " rows_solved=" << rows_solved
       << " crossed_rows=" << crossed_rows << " squares_found=" << squares_found
       << " perfect_squares=" << perfect_squares << " compound_perfect=" << compound_perfect
       << " distinct_after_dedup=" << distinct_after_dedup << " elapsed_ms=" << elapsed.count();
    return os.str();
}

namespace {

std::vector<Coord> tablecode_sort_key(const Tablecode& tc) {
    std::vector<Coord> key{tc.width, static_cast<Coord>(tc.order), tc.height};
    key.insert(key.end(), tc.sizes.begin(), tc.sizes.end());
    return key;
}

}  // namespace

void finalize_entries(std::vector<CatalogEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return tablecode_sort_key(a.tablecode) < tablecode_sort_key(b.tablecode);
    });
    Coord size = -1;
    int lower = 0, upper = 0;
    for (CatalogEntry& e : entries) {
        if (e.tablecode.width != size) {
            size = e.tablecode.width;
            lower = upper = 0;
        }
        const bool simple = e.classification.structure == Structure::Simple;
        int& letter = simple ? upper : lower;
        e.id = std::to_string(size) + static_cast<char>((simple ? 'A' : 'a') + letter);
        ++letter;
    }
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
    for (const CatalogEntry& e : entries) out << e.line() << "\n";
}

namespace {

// Atomic-ish snapshot of the current entries for long runs.
void checkpoint_catalog(const std::string& path, std::map<std::string, CatalogEntry>& dedup) {
    if (path.empty()) return;
    std::vector<CatalogEntry> entries;
    entries.reserve(dedup.size());
    for (const auto& [k, e] : dedup) entries.push_back(e);
    finalize_entries(entries);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        write_catalog(out, entries);
    }
    std::rename(tmp.c_str(), path.c_str());
}

void checkpoint_progress(const std::string& path, const std::map<std::string, std::uint64_t>& done) {
    if (path.empty()) return;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& [f, c] : done) out << c << " " << f << "\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

EnumerateResult enumerate_catalog(const std::vector<std::string>& planar_code_files,
                                  const EnumerateOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    EnumerateResult result;
    RunStats& stats = result.stats;

    const std::string progress_path = opt.output.empty() ? "" : opt.output + opt.progress_suffix;
    std::map<std::string, std::uint64_t> done;
    std::map<std::string, CatalogEntry> dedup;  // canonical tablecode text -> entry

    if (opt.resume && !progress_path.empty()) {
        std::ifstream in(progress_path);
        std::uint64_t count;
        std::string file;
        while (in >> count && std::getline(in >> std::ws, file)) done[file] = count;
        std::ifstream cat(opt.output);
        std::string line;
        while (std::getline(cat, line)) {
            if (line.empty()) continue;
            CatalogLine cl = parse_catalog_line(line);
            Dissection d = cl.tablecode ? place_elements(*cl.tablecode) : place_elements(*cl.bouwkampcode);
            CatalogEntry entry;
            entry.tablecode = cl.tablecode ? *cl.tablecode : to_tablecode(d);
            entry.isomer_count = cl.meta.isomer_count.value_or(0);
            entry.classification = classify(d);
            if (entry.isomer_count == 0) entry.isomer_count = static_cast<int>(enumerate_isomers(d).size());
            dedup.emplace(entry.tablecode.text(), std::move(entry));
        }
    }

    std::mutex mu;
    for (const std::string& path : planar_code_files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        PlanarCodeReader reader(in);
        const std::uint64_t skip = opt.resume ? done[path] : 0;
        std::uint64_t index = 0;
        std::uint64_t since_checkpoint = 0;

        std::vector<PlanarEmbedding> batch;
        auto flush_batch = [&]() {
            if (batch.empty()) return;
            std::atomic<std::size_t> cursor{0};
            const int jobs = std::max(1, opt.jobs);
            auto worker = [&]() {
                for (;;) {
                    const std::size_t at = cursor.fetch_add(1);
                    if (at >= batch.size()) break;
                    const PlanarEmbedding& e = batch[at];
                    if (!filter_class(e, opt.filter)) continue;
                    if (opt.exclude_separated_multiedges && has_separated_multiedge(e)) continue;
                    NetworkAnalysis na = analyze(e);
                    ExtractionResult ex = extract_dissections(e, na);
                    std::uint64_t squares = 0, perfect = 0, compound = 0;
                    std::vector<CatalogEntry> found;
                    std::map<std::string, const ExtractedRectangle*> local;
                    for (const ExtractedRectangle& r : ex.rectangles) {
                        if (!r.square) continue;
                        local.emplace(padded_key(canonical_orientation(r.dissection)), &r);
                    }
                    squares = local.size();
                    for (const auto& [key, r] : local) {
                        Classification cls = classify(r->dissection);
                        if (cls.perfection != Perfection::Perfect) continue;
                        ++perfect;
                        if (cls.structure == Structure::Compound) ++compound;
                        std::vector<Dissection> isomers = enumerate_isomers(r->dissection);
                        CatalogEntry entry;
                        entry.tablecode = to_tablecode(isomers.front());
                        entry.isomer_count = static_cast<int>(isomers.size());
                        entry.classification = classify(isomers.front());
                        found.push_back(std::move(entry));
                    }
                    std::lock_guard<std::mutex> lock(mu);
                    stats.graphs_processed += 1;
                    stats.rows_solved += ex.rectangles.size();
                    stats.crossed_rows += ex.crossed_rows.size();
                    stats.squares_found += squares;
                    stats.perfect_squares += perfect;
                    stats.compound_perfect += compound;
                    for (CatalogEntry& entry : found) {
                        dedup.emplace(entry.tablecode.text(), std::move(entry));
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            since_checkpoint += batch.size();
            batch.clear();
            done[path] = index;
            if (since_checkpoint >= 4096) {
                since_checkpoint = 0;
                checkpoint_catalog(opt.output, dedup);
                checkpoint_progress(progress_path, done);
            }
        };

        while (auto e = reader.next()) {
            if (opt.order && !opt.no_check && e->edge_count() != *opt.order + 1) {
                throw ClassOrderError("graph class in " + path + " has |E| = " +
                                      std::to_string(e->edge_count()) + ", expected order+1 = " +
                                      std::to_string(*opt.order + 1));
            }
            if (index++ < skip) continue;
            batch.push_back(std::move(*e));
            if (batch.size() >= 256) flush_batch();
        }
        flush_batch();
        done[path] = index;
        checkpoint_progress(progress_path, done);
    }

    for (auto& [key, entry] : dedup) result.entries.push_back(std::move(entry));
    finalize_entries(result.entries);
    stats.distinct_after_dedup = result.entries.size();
    stats.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::trunc);
        write_catalog(out, result.entries);
    }
    return result;
}

}  // namespace sqsq
