// eisq: combinatorial classification of graphs whose squared edge ideal is
// Cohen-Macaulay / generalized Cohen-Macaulay / Buchsbaum / Gorenstein, with
// an independent simplicial-homology oracle.
//
// Exit codes: 0 ok, 1 internal error, 2 input refused, 3 verification
// counterexample found.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "eisq/classify.hpp"
#include "eisq/complex.hpp"
#include "eisq/enumerate.hpp"
#include "eisq/gallery.hpp"
#include "eisq/homology.hpp"
#include "eisq/independence.hpp"
#include "eisq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitRefused = 2;
constexpr int kExitCounterexample = 3;

struct CommonOptions {
    std::uint32_t characteristic = 2;
    int jobs = 0;  // 0 = hardware concurrency
    int timeout_ms = 10'000;
    bool pretty = false;
    std::string format = "graph6";
};

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string json_escape_min(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Accepts a graph6 literal, a file path, or "-" for stdin.
eisq::Graph load_single_graph(const std::string& spec, const std::string& format) {
    if (spec == "-") {
        if (format == "edgelist") return eisq::parse_edge_list(std::cin);
        std::string line;
        if (!std::getline(std::cin, line)) throw eisq::input_error("no input on stdin");
        return eisq::parse_graph6(line);
    }
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        if (!in) throw eisq::input_error("cannot open " + spec);
        if (format == "edgelist") return eisq::parse_edge_list(in);
        std::string line;
        if (!std::getline(in, line)) throw eisq::input_error("empty file " + spec);
        return eisq::parse_graph6(line);
    }
    if (format == "edgelist") throw eisq::input_error("edge-list input must be a file or -");
    return eisq::parse_graph6(spec);
}

std::string facets_json(const eisq::SimplicialComplex& k) {
    std::string out = "[";
    bool first = true;
    for (eisq::VertexSet f : k.facets()) {
        if (!first) out += ',';
        first = false;
        out += '[';
        auto verts = f.to_vector();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(verts[i]);
        }
        out += ']';
    }
    return out + "]";
}

void print_pretty_report(const eisq::ClassificationReport& r) {
    std::cout << r.graph6 << "  n=" << r.n << " m=" << r.edges << " alpha=" << r.alpha << '\n'
              << "  well_covered=" << r.well_covered << " w2=" << r.w2
              << " triangle_free=" << r.triangle_free
              << " locally_triangle_free=" << r.locally_triangle_free
              << " join_factors=" << r.join_factor_count << '\n';
    if (r.gallery_match) {
        std::cout << "  gallery: " << eisq::family_name(r.gallery_match->family);
        if (r.gallery_match->parameter > 0) std::cout << '(' << r.gallery_match->parameter << ')';
        std::cout << '\n';
    }
    std::cout << "  cm_square=" << r.cm_square << "  [" << r.cm_square_rule << "]\n"
              << "  gcm_square=" << r.gcm_square << "  [" << r.gcm_square_rule << "]\n"
              << "  buchsbaum_square=" << r.buchsbaum_square << "  [" << r.buchsbaum_square_rule
              << "]\n";
    if (r.gorenstein_locally_tf)
        std::cout << "  gorenstein=" << *r.gorenstein_locally_tf << "  [" << r.gorenstein_rule
                  << "]\n";
    else
        std::cout << "  gorenstein=n/a  [" << r.gorenstein_rule << "]\n";
    if (r.oracle_characteristic) {
        std::cout << "  oracle(GF(" << *r.oracle_characteristic
                  << ")): buchsbaum=" << *r.oracle_buchsbaum
                  << " gorenstein=" << *r.oracle_gorenstein
                  << " agreement_buchsbaum=" << *r.agreement_buchsbaum;
        if (r.agreement_gorenstein)
            std::cout << " agreement_gorenstein=" << *r.agreement_gorenstein;
        std::cout << '\n';
    }
}

int run_classify(const std::string& input, const CommonOptions& opts, bool with_oracle) {
    std::vector<std::string> lines;
    if (opts.format == "edgelist") {
        eisq::Graph g = input == "-" ? eisq::parse_edge_list(std::cin) : [&input] {
            std::ifstream in(input);
            if (!in) throw eisq::input_error("cannot open " + input);
            return eisq::parse_edge_list(in);
        }();
        lines.push_back(eisq::to_graph6(g));
    } else {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (input != "-") {
            file.open(input);
            if (!file) throw eisq::input_error("cannot open " + input);
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            lines.push_back(line);
        }
    }

    struct Row {
        std::string output;
        bool refused = false;
    };
    std::vector<Row> rows(lines.size());
    std::atomic<std::size_t> cursor{0};
    int jobs = resolve_jobs(opts.jobs);

    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) break;
            if (lines[i].empty()) {
                rows[i].output = "";
                continue;
            }
            eisq::Budget budget{std::chrono::milliseconds(opts.timeout_ms)};
            eisq::ClassificationOptions copts;
            copts.with_oracle = with_oracle;
            copts.characteristic = opts.characteristic;
            copts.budget = opts.timeout_ms > 0 ? &budget : nullptr;
            try {
                eisq::Graph g = eisq::parse_graph6(lines[i]);
                rows[i].output = eisq::to_json(eisq::classify(g, copts));
            } catch (const std::exception& e) {
                rows[i].refused = true;
                rows[i].output = std::string("{\"line\":") + std::to_string(i + 1) +
                                 ",\"input\":\"" + json_escape_min(lines[i]) + "\",\"error\":\"" +
                                 json_escape_min(e.what()) + "\"}";
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    bool any_refused = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].output.empty()) continue;
        if (rows[i].refused) {
            any_refused = true;
            std::cerr << "line " << (i + 1) << ": refused\n";
            std::cout << rows[i].output << '\n';
            continue;
        }
        if (opts.pretty) {
            eisq::ClassificationOptions copts;
            copts.with_oracle = with_oracle;
            copts.characteristic = opts.characteristic;
            print_pretty_report(eisq::classify(eisq::parse_graph6(lines[i]), copts));
        } else {
            std::cout << rows[i].output << '\n';
        }
    }
    return any_refused ? kExitRefused : kExitOk;
}

int run_gallery(const std::string& name, int n, bool literal, bool all, int max_n,
                bool edgelist, bool pretty) {
    using eisq::GalleryFamily;
    if (all) {
        if (max_n < 1) throw eisq::input_error("--all requires --max-n");
        auto emit = [](const char* family, int param, const eisq::Graph& g) {
            std::cout << family << '\t' << param << '\t' << eisq::to_graph6(g) << '\n';
        };
        for (int k = 1; k <= max_n; ++k) emit("complete", k, eisq::complete(k));
        for (int k = 3; k <= max_n; ++k) emit("cycle", k, eisq::cycle(k));
        for (int k = 1; k <= max_n; ++k) emit("path", k, eisq::path(k));
        for (int k = 4; k <= max_n; ++k) emit("cycle_complement", k, eisq::cycle_complement(k));
        for (int k = 4; k <= max_n; ++k) emit("b", k, eisq::b_graph(k));
        if (max_n >= 9) emit("q9", 9, eisq::q9());
        if (max_n >= 10) emit("p10", 10, eisq::p10());
        if (max_n >= 12) emit("q12", 12, eisq::q12());
        if (max_n >= 12) emit("p12", 12, eisq::p12());
        return kExitOk;
    }

    auto family = eisq::family_from_name(name);
    if (!family) throw eisq::input_error("unknown gallery name: " + name);
    eisq::Graph g = [&] {
        switch (*family) {
            case GalleryFamily::complete: return eisq::complete(n);
            case GalleryFamily::cycle: return eisq::cycle(n);
            case GalleryFamily::path: return eisq::path(n);
            case GalleryFamily::cycle_complement: return eisq::cycle_complement(n);
            case GalleryFamily::b: return literal ? eisq::b_graph_literal(n) : eisq::b_graph(n);
            case GalleryFamily::q9: return eisq::q9();
            case GalleryFamily::q12: return eisq::q12();
            case GalleryFamily::p10: return eisq::p10();
            case GalleryFamily::p12: return eisq::p12();
        }
        throw eisq::input_error("unknown gallery name");
    }();

    if (pretty) {
        std::cout << name << ": n=" << g.vertex_count() << " m=" << g.edge_count() << '\n'
                  << eisq::to_graph6(g) << '\n';
        auto names = eisq::gallery_vertex_names(*family, g.vertex_count());
        for (auto [u, v] : g.edges())
            std::cout << names[static_cast<std::size_t>(u)] << ' '
                      << names[static_cast<std::size_t>(v)] << '\n';
    } else if (edgelist) {
        std::cout << eisq::to_edge_list(g);
    } else {
        std::cout << eisq::to_graph6(g) << '\n';
    }
    return kExitOk;
}

int run_complex(const std::string& spec, const CommonOptions& opts) {
    eisq::Graph g = load_single_graph(spec, opts.format);
    eisq::SimplicialComplex k = eisq::independence_complex(g);
    eisq::FVector fv = eisq::f_vector(k);
    std::cout << "{\"graph6\":\"" << json_escape_min(eisq::to_graph6(g)) << "\""
              << ",\"n\":" << k.vertex_count() << ",\"dimension\":" << k.dimension()
              << ",\"facets\":" << facets_json(k) << ",\"f_vector\":[";
    for (std::size_t i = 0; i < fv.counts.size(); ++i)
        std::cout << (i ? "," : "") << fv.counts[i];
    std::cout << "],\"reduced_euler_characteristic\":" << eisq::reduced_euler_characteristic(k)
              << ",\"connected\":" << (eisq::is_connected_complex(k) ? "true" : "false") << "}\n";
    return kExitOk;
}

int run_homology(const std::string& spec, const CommonOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    eisq::Graph g = load_single_graph(spec, opts.format);
    eisq::PrimeField field(opts.characteristic);
    eisq::SimplicialComplex k = eisq::independence_complex(g);
    eisq::HomologyProfile profile = eisq::reduced_betti_numbers(k, field);

    std::ostringstream links;
    links << '[';
    bool first = true;
    for (const auto& group : eisq::enumerate_faces(k).by_size)
        for (eisq::VertexSet face : group) {
            eisq::HomologyProfile lp = eisq::reduced_betti_numbers(eisq::link(k, face), field);
            int top = lp.top_dimension();
            bool cm_ok = true;
            for (int d = -1; d < top; ++d) cm_ok = cm_ok && lp.reduced_betti(d) == 0;
            bool sphere_ok = cm_ok && lp.reduced_betti(top) == 1;
            if (!first) links << ',';
            first = false;
            links << "{\"face\":[";
            auto verts = face.to_vector();
            for (std::size_t i = 0; i < verts.size(); ++i) links << (i ? "," : "") << verts[i];
            links << "],\"link_dimension\":" << top << ",\"betti\":[";
            for (std::size_t i = 0; i < lp.betti.size(); ++i)
                links << (i ? "," : "") << lp.betti[i];
            links << "],\"vanishing_below_dimension\":" << (cm_ok ? "true" : "false")
                  << ",\"sphere\":" << (sphere_ok ? "true" : "false") << '}';
        }
    links << ']';

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << "{\"graph6\":\"" << json_escape_min(eisq::to_graph6(g)) << "\""
              << ",\"characteristic\":" << field.characteristic() << ",\"betti\":[";
    for (std::size_t i = 0; i < profile.betti.size(); ++i)
        std::cout << (i ? "," : "") << profile.betti[i];
    std::cout << "],\"top_dimension\":" << profile.top_dimension()
              << ",\"cohen_macaulay\":" << (eisq::is_cm_complex(k, field) ? "true" : "false")
              << ",\"gorenstein\":" << (eisq::is_gorenstein_complex(k, field) ? "true" : "false")
              << ",\"links\":" << links.str() << ",\"milliseconds\":" << ms << "}\n";
    return kExitOk;
}

int run_enumerate(int n, bool no_isolated, bool connected) {
    eisq::for_each_graph(n, {.no_isolated = no_isolated, .connected = connected},
                         [](const eisq::Graph& g) { std::cout << eisq::to_graph6(g) << '\n'; });
    return kExitOk;
}

int run_verify(const eisq::VerifyOptions& vopts, bool pretty) {
    eisq::VerificationReport report = eisq::verify_theorems(vopts);
    if (pretty) {
        for (const eisq::CheckResult& check : report.checks) {
            std::cout << (check.ok() ? "ok   " : "FAIL ") << check.name << "  checked="
                      << check.checked << " refused=" << check.refused
                      << " counterexamples=" << check.counterexamples.size() << "  ("
                      << check.seconds << " s)\n";
            for (const std::string& cex : check.counterexamples)
                std::cout << "    counterexample: " << cex << '\n';
        }
        std::cout << (report.ok() ? "all checks passed" : "counterexamples found") << " in "
                  << report.seconds << " s\n";
    } else {
        std::cout << eisq::to_json(report) << '\n';
    }
    return report.ok() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge ideals, squared: combinatorial Cohen-Macaulay / Buchsbaum / Gorenstein "
                 "classification of I(G)^2 with a homology oracle"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* classify_cmd = app.add_subcommand(
        "classify", "classify graphs from graph6 lines or an edge list (file or -)");
    std::string classify_input = "-";
    bool with_oracle = false;
    classify_cmd->add_option("input", classify_input, "input file, or - for stdin");
    classify_cmd->add_flag("--oracle", with_oracle, "also run the homology oracle");
    classify_cmd->add_option("--char", opts.characteristic, "oracle field characteristic");
    classify_cmd->add_option("--jobs", opts.jobs, "worker threads (0 = hardware)");
    classify_cmd->add_option("--timeout-ms", opts.timeout_ms, "per-graph time budget");
    classify_cmd->add_flag("--pretty", opts.pretty, "human-readable output");
    classify_cmd->add_option("--format", opts.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* gallery_cmd = app.add_subcommand("gallery", "emit a named construction");
    std::string gallery_name;
    int gallery_n = 0;
    bool gallery_literal = false, gallery_all = false, gallery_edgelist = false,
         gallery_pretty = false;
    int gallery_max_n = 0;
    gallery_cmd->add_option("name", gallery_name,
                            "complete|cycle|path|cycle_complement|b|q9|q12|p10|p12");
    gallery_cmd->add_option("n", gallery_n, "family parameter where applicable");
    gallery_cmd->add_flag("--literal", gallery_literal,
                          "for b: use the literal index-formula variant");
    gallery_cmd->add_flag("--all", gallery_all, "dump every family");
    gallery_cmd->add_option("--max-n", gallery_max_n, "largest parameter for --all");
    gallery_cmd->add_flag("--edgelist", gallery_edgelist, "emit edge-list text instead of graph6");
    gallery_cmd->add_flag("--pretty", gallery_pretty, "graph6 plus named edge list");

    auto* complex_cmd =
        app.add_subcommand("complex", "independence complex: facets, f-vector, connectivity");
    std::string complex_spec;
    complex_cmd->add_option("graph", complex_spec, "graph6 literal, file, or -")->required();
    complex_cmd->add_option("--format", opts.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* homology_cmd =
        app.add_subcommand("homology", "reduced Betti numbers and per-link verdicts");
    std::string homology_spec;
    homology_cmd->add_option("graph", homology_spec, "graph6 literal, file, or -")->required();
    homology_cmd->add_option("--char", opts.characteristic, "field characteristic");
    homology_cmd->add_option("--format", opts.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "one graph6 line per isomorphism class, 1 <= n <= 9");
    int enum_n = 0;
    bool enum_no_isolated = false, enum_connected = false;
    enumerate_cmd->add_option("n", enum_n, "vertex count")->required();
    enumerate_cmd->add_flag("--no-isolated", enum_no_isolated, "drop graphs with isolated vertices");
    enumerate_cmd->add_flag("--connected", enum_connected, "connected graphs only");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification sweeps");
    eisq::VerifyOptions vopts;
    vopts.jobs = 0;
    std::vector<std::string> which;
    verify_cmd->add_option("--which", which, "subset of checks (default: all)");
    verify_cmd->add_option("--max-n", vopts.max_n, "cap the enumerated order");
    verify_cmd->add_option("--char", vopts.characteristic, "field characteristic");
    verify_cmd->add_option("--jobs", vopts.jobs, "worker threads (0 = hardware)");
    verify_cmd->add_option("--timeout-ms", vopts.timeout_ms, "per-graph time budget");
    bool verify_pretty = false;
    verify_cmd->add_flag("--pretty", verify_pretty, "per-check table instead of JSON");
    verify_cmd->add_flag("--list", [](std::int64_t) {
        for (const std::string& name : eisq::verify_check_names()) std::cout << name << '\n';
        std::exit(kExitOk);
    }, "list check names and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(classify_input, opts, with_oracle);
        if (gallery_cmd->parsed())
            return run_gallery(gallery_name, gallery_n, gallery_literal, gallery_all,
                               gallery_max_n, gallery_edgelist, gallery_pretty);
        if (complex_cmd->parsed()) return run_complex(complex_spec, opts);
        if (homology_cmd->parsed()) return run_homology(homology_spec, opts);
        if (enumerate_cmd->parsed()) return run_enumerate(enum_n, enum_no_isolated, enum_connected);
        if (verify_cmd->parsed()) {
            vopts.which = which;
            return run_verify(vopts, verify_pretty);
        }
    } catch (const eisq::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRefused;
    } catch (const eisq::precondition_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const eisq::timeout_error& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return kExitRefused;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
