// squaredsq: electrical-network toolkit for squared rectangles and
// compound perfect squared squares. Subcommands: solve, enumerate,
// validate, canon, isomers, render, stats.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqsq/bouwkamp.hpp"
#include "sqsq/catalog.hpp"
#include "sqsq/embedding.hpp"
#include "sqsq/errors.hpp"
#include "sqsq/generate.hpp"
#include "sqsq/netsolve.hpp"
#include "sqsq/svg.hpp"

namespace {

using namespace sqsq;

// "2,3,6;5,4,1;..." -> rotation lists (1-based in the text)
PlanarEmbedding parse_graph_spec(const std::string& spec) {
    std::vector<std::vector<int>> lists;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::vector<int> l;
        std::stringstream ps(part);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            if (tok.empty()) continue;
            l.push_back(std::stoi(tok) - 1);
        }
        lists.push_back(std::move(l));
    }
    return PlanarEmbedding::from_rotation_lists(lists);
}

Dissection dissection_from_code_arg(const std::string& arg) {
    std::string text = arg;
    std::ifstream f(arg);
    if (f) {
        std::string line;
        while (std::getline(f, line)) {
            if (!line.empty() && line.find_first_not_of(" \t\r\n") != std::string::npos) {
                text = line;
                break;
            }
        }
    }
    CatalogLine cl = parse_catalog_line(text);
    return cl.tablecode ? place_elements(*cl.tablecode) : place_elements(*cl.bouwkampcode);
}

int datum_of(const std::string& flag, const PlanarEmbedding& e) {
    if (flag == "last" || flag.empty()) return e.vertex_count() - 1;
    return std::stoi(flag) - 1;
}

void print_solutions(const PlanarEmbedding& e, const std::string& datum_flag, std::ostream& out) {
    NetworkAnalysis na = analyze(e, datum_of(datum_flag, e));
    ExtractionResult ex = extract_dissections(e, na);
    std::map<std::string, std::pair<const ExtractedRectangle*, std::vector<int>>> unique;
    for (const ExtractedRectangle& r : ex.rectangles) {
        auto [it, fresh] = unique.try_emplace(padded_key(canonical_orientation(r.dissection)));
        if (fresh) it->second.first = &r;
        it->second.second.push_back(r.polar_branch);
    }
    out << "graph: n=" << e.vertex_count() << " m=" << e.edge_count() << " f=" << e.face_count()
        << " det=" << na.det.str() << "\n";
    for (const auto& [key, val] : unique) {
        const auto& [r, branches] = val;
        const Dissection canon = canonical_orientation(r->dissection);
        const Classification cls = classify(canon);
        out << "  " << to_tablecode(canon).text() << "  [" << to_string(cls) << "]";
        if (r->square) out << " [square]";
        if (r->equal_potential_faces) out << " [crossed]";
        out << "  branches";
        for (int b : branches) {
            const auto [lo, hi] = na.branches.branches[b];
            out << " (" << lo + 1 << "," << hi + 1 << ")";
        }
        out << "\n";
    }
    if (!ex.crossed_rows.empty()) {
        out << "  zero-current rows skipped:";
        for (int b : ex.crossed_rows) {
            const auto [lo, hi] = na.branches.branches[b];
            out << " (" << lo + 1 << "," << hi + 1 << ")";
        }
        out << "\n";
    }
}

std::string format_dissection(const Dissection& d, const std::string& format) {
    if (format == "bouwkamp") return emit_code(d);
    return to_tablecode(d).text();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squared-rectangle and squared-square electrical-network toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve networks and list their dissections");
    std::string solve_input, solve_graph, solve_datum = "last";
    solve->add_option("input", solve_input, "planar_code file");
    solve->add_option("--graph", solve_graph, "rotation spec, e.g. '2,3,6;5,4,1;...' (1-based)");
    solve->add_option("--datum", solve_datum, "datum node (1-based) or 'last'");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate perfect squared squares from graph files");
    std::vector<std::string> enum_files;
    EnumerateOptions eopt;
    int enum_order = 0;
    std::string enum_filter = "exactly2", enum_output;
    bool enum_nocheck = false, enum_resume = false;
    int enum_jobs = 1, enum_mindeg = 3;
    enumerate->add_option("files", enum_files, "planar_code files")->required();
    enumerate->add_option("--order", enum_order, "expected dissection order (|E| = order+1)");
    enumerate->add_option("--filter", enum_filter, "exactly2|atleast2")
        ->check(CLI::IsMember({"exactly2", "atleast2"}));
    enumerate->add_option("--min-degree", enum_mindeg, "minimum vertex degree");
    enumerate->add_option("--jobs,-j", enum_jobs, "worker threads");
    enumerate->add_flag("--resume", enum_resume, "skip graphs recorded in the progress file");
    enumerate->add_flag("--no-check", enum_nocheck, "skip the |E| = order+1 consistency check");
    enumerate->add_option("--output,-o", enum_output, "catalog file (stdout if omitted)");

    // validate
    auto* validate = app.add_subcommand("validate", "validate catalog or Bouwkampcode files");
    std::vector<std::string> val_files;
    validate->add_option("files", val_files, "catalog/Bouwkampcode files")->required();

    // canon
    auto* canon = app.add_subcommand("canon", "canonical tablecode of a code");
    std::string canon_code, canon_format = "tablecode";
    canon->add_option("code", canon_code, "Bouwkampcode/tablecode text or file")->required();
    canon->add_option("--format", canon_format, "tablecode|bouwkamp")
        ->check(CLI::IsMember({"tablecode", "bouwkamp"}));

    // isomers
    auto* isomers = app.add_subcommand("isomers", "list the isomer class of a code");
    std::string iso_code, iso_format = "tablecode";
    isomers->add_option("code", iso_code, "Bouwkampcode/tablecode text or file")->required();
    isomers->add_option("--format", iso_format, "tablecode|bouwkamp")
        ->check(CLI::IsMember({"tablecode", "bouwkamp"}));

    // render
    auto* render = app.add_subcommand("render", "render a dissection to SVG");
    std::string render_code, render_out;
    SvgOptions sopt;
    render->add_option("code", render_code, "Bouwkampcode/tablecode text or file")->required();
    render->add_option("--output,-o", render_out, "output .svg path")->required();
    render->add_option("--svg-scale", sopt.scale, "drawing units per cell");
    render->add_option("--stroke", sopt.stroke, "stroke width");
    render->add_option("--font-size", sopt.font_size, "fixed label size (0 = auto)");

    // stats
    auto* statscmd = app.add_subcommand("stats", "summarize a catalog file");
    std::string stats_file;
    bool stats_kv = false;
    statscmd->add_option("file", stats_file, "catalog file")->required();
    statscmd->add_flag("--key-values", stats_kv, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            if (!solve_graph.empty()) {
                print_solutions(parse_graph_spec(solve_graph), solve_datum, std::cout);
            } else if (!solve_input.empty()) {
                std::ifstream in(solve_input, std::ios::binary);
                if (!in) {
                    std::cerr << "cannot open " << solve_input << "\n";
                    return 2;
                }
                PlanarCodeReader reader(in);
                while (auto e = reader.next()) print_solutions(*e, solve_datum, std::cout);
            } else {
                std::cerr << "solve needs an input file or --graph\n";
                return 2;
            }
        } else if (*enumerate) {
            if (enum_order > 0) eopt.order = enum_order;
            eopt.no_check = enum_nocheck;
            eopt.resume = enum_resume;
            eopt.jobs = enum_jobs;
            eopt.output = enum_output;
            eopt.filter.min_degree = enum_mindeg;
            eopt.filter.connectivity = enum_filter == "atleast2"
                                           ? ClassFilter::Connectivity::AtLeastTwo
                                           : ClassFilter::Connectivity::ExactlyTwo;
            EnumerateResult res = enumerate_catalog(enum_files, eopt);
            if (enum_output.empty()) write_catalog(std::cout, res.entries);
            std::cerr << res.stats.table();
            std::cerr << res.stats.key_values() << "\n";
        } else if (*validate) {
            int failures = 0, warnings = 0, lines = 0;
            for (const std::string& path : val_files) {
                std::ifstream in(path);
                if (!in) {
                    std::cerr << "cannot open " << path << "\n";
                    return 2;
                }
                std::string line;
                int lineno = 0;
                // first pass collects entries so recomputed ids can be checked
                std::vector<std::pair<int, std::string>> report;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (line.empty() || line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                    ++lines;
                    try {
                        CatalogLine cl = parse_catalog_line(line);
                        Dissection d =
                            cl.tablecode ? place_elements(*cl.tablecode) : place_elements(*cl.bouwkampcode);
                        const auto rep = validate_tiling(d);
                        if (!rep.ok) {
                            ++failures;
                            std::cout << path << ":" << lineno << ": FAIL invalid tiling\n";
                            continue;
                        }
                        std::vector<std::string> problems;
                        std::vector<std::string> warns;
                        const Classification cls = classify(d);
                        if (cl.meta.order && *cl.meta.order != d.order())
                            problems.push_back("order " + std::to_string(d.order()) + " != declared " +
                                               std::to_string(*cl.meta.order));
                        if (cl.meta.isomer_count) {
                            const int got = static_cast<int>(enumerate_isomers(d).size());
                            if (got != *cl.meta.isomer_count)
                                problems.push_back("isomers " + std::to_string(got) + " != declared " +
                                                   std::to_string(*cl.meta.isomer_count));
                        }
                        if (cl.meta.type_code) {
                            const std::string got = cls.type_code.value_or("-");
                            if (got != *cl.meta.type_code)
                                problems.push_back("type " + got + " != declared " + *cl.meta.type_code);
                        }
                        if (cl.meta.id) {
                            // size prefix must match; the letter rule is historical
                            const std::string declared = *cl.meta.id;
                            const std::string size = std::to_string(std::max(d.width, d.height));
                            if (declared.substr(0, size.size()) != size ||
                                (d.is_square() && d.width != std::stoll(declared)))
                                problems.push_back("id size prefix does not match side");
                        }
                        const Tablecode canon = canonicalize(d).tablecode;
                        if (to_tablecode(canonical_orientation(d)) != canon)
                            warns.push_back("line is not in canonical orientation");
                        if (!problems.empty()) {
                            ++failures;
                            std::cout << path << ":" << lineno << ": FAIL";
                            for (const auto& p : problems) std::cout << " [" << p << "]";
                            std::cout << "\n";
                        } else if (!warns.empty()) {
                            ++warnings;
                            std::cout << path << ":" << lineno << ": WARN";
                            for (const auto& p : warns) std::cout << " [" << p << "]";
                            std::cout << "\n";
                        }
                    } catch (const Error& err) {
                        ++failures;
                        std::cout << path << ":" << lineno << ": FAIL " << err.what() << "\n";
                    }
                }
                (void)report;
            }
            std::cout << lines << " lines, " << failures << " failures, " << warnings << " warnings\n";
            return failures ? 1 : 0;
        } else if (*canon) {
            const CanonicalForm cf = canonicalize(dissection_from_code_arg(canon_code));
            std::cout << format_dissection(cf.dissection, canon_format) << "\n";
        } else if (*isomers) {
            for (const Dissection& d : enumerate_isomers(dissection_from_code_arg(iso_code)))
                std::cout << format_dissection(d, iso_format) << "\n";
        } else if (*render) {
            const std::string svg = render_svg(dissection_from_code_arg(render_code), sopt);
            std::ofstream out(render_out, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "cannot write " << render_out << "\n";
                return 2;
            }
            out << svg;
        } else if (*statscmd) {
            std::ifstream in(stats_file);
            if (!in) {
                std::cerr << "cannot open " << stats_file << "\n";
                return 2;
            }
            std::map<int, std::pair<int, long long>> per_order;  // order -> (entries, isomers)
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                CatalogLine cl = parse_catalog_line(line);
                Dissection d = cl.tablecode ? place_elements(*cl.tablecode) : place_elements(*cl.bouwkampcode);
                auto& [count, iso] = per_order[d.order()];
                ++count;
                iso += cl.meta.isomer_count.value_or(0);
            }
            if (stats_kv) {
                for (const auto& [o, ci] : per_order)
                    std::cout << "order=" << o << " entries=" << ci.first << " isomers=" << ci.second << "\n";
            } else {
                std::cout << "order   entries   isomers\n";
                for (const auto& [o, ci] : per_order) {
                    std::cout << o;
                    std::cout.width(10);
                    std::cout << ci.first;
                    std::cout.width(10);
                    std::cout << ci.second;
                    std::cout << "\n";
                }
            }
        }
    } catch (const ClassOrderError& err) {
        std::cerr << err.what() << "\n";
        return 3;
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }
    return 0;
}
