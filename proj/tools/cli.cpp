#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypercross/crossing_oracle.hpp"
#include "hypercross/gale.hpp"
#include "hypercross/hypergraph.hpp"
#include "hypercross/moment_curve.hpp"
#include "hypercross/ordertype_db.hpp"
#include "hypercross/random_drawing.hpp"
#include "hypercross/rng.hpp"
#include "hypercross/theorem1.hpp"

namespace fs = std::filesystem;
using namespace hypercross;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) std::cout << content;
    else write_file(output_path, content);
}

// Point configuration file: header "d n", then n lines of d rationals.
PointConfiguration parse_point_configuration(std::istream& in) {
    int d = 0, n = 0;
    if (!(in >> d >> n)) throw std::invalid_argument("point configuration: malformed header");
    std::vector<Point> pts;
    for (int k = 0; k < n; ++k) {
        Point p;
        for (int i = 0; i < d; ++i) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("point configuration: truncated file");
            p.coords.push_back(parse_rat(tok));
        }
        pts.push_back(std::move(p));
    }
    return PointConfiguration(d, std::move(pts));
}

PointConfiguration load_point_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_point_configuration(in);
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hypergraph(in);
}

bool convex_position(const PointConfiguration& cfg) {
    return convex_hull_2d(cfg.points).size() == cfg.points.size();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crossing-count toolkit for d-dimensional rectilinear drawings of "
                 "d-uniform hypergraphs"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "worker thread count (default: HYPERCROSS_WORKERS or all cores)");

    // ---- ordertypes ----
    auto* ordertypes = app.add_subcommand("ordertypes", "8-point order-type database utilities");
    ordertypes->require_subcommand(1);
    {
        auto* convert = ordertypes->add_subcommand("convert", "hex database to decimal point lists");
        auto input = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        convert->add_option("--input", *input, "point_set_hex.txt")->required();
        convert->add_option("--output", *output, "all_point_sets.txt (default: stdout)");
        convert->callback([=] {
            const auto entries = parse_hex_pointsets(read_file(*input));
            std::string out;
            for (const auto& e : entries) out += decimal_pointset_line(e) + "\n";
            emit(*output, out);
        });

        auto* validate = ordertypes->add_subcommand("validate", "check count, ranges and general position");
        auto db = std::make_shared<std::string>();
        validate->add_option("--db", *db, "point_set_hex.txt")->required();
        validate->callback([=] {
            const auto report = validate_db(parse_hex_pointsets(read_file(*db)));
            std::cout << "entries: " << report.entry_count << "\n"
                      << "count == 3315: " << (report.count_ok ? "yes" : "no") << "\n"
                      << "coordinates in [0, 255]: " << (report.coords_ok ? "yes" : "no") << "\n"
                      << "no three collinear: " << (report.general_position_ok ? "yes" : "no")
                      << "\n"
                      << "duplicate lines: " << report.duplicate_lines << "\n";
            for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
            if (!report.pass()) throw std::runtime_error("database validation failed");
        });
    }

    // ---- theorem1 ----
    auto* theorem1 = app.add_subcommand("theorem1", "exhaustive order-type sweep for the K_8^4 maximum");
    theorem1->require_subcommand(1);
    {
        auto* verify = theorem1->add_subcommand("verify", "tally balanced partitions over every order type");
        auto db = std::make_shared<std::string>();
        auto outdir = std::make_shared<std::string>(".");
        auto csv_compat = std::make_shared<bool>(false);
        verify->add_option("--db", *db, "point_set_hex.txt")->required();
        verify->add_option("--out", *outdir, "output directory (default .)");
        verify->add_flag("--csv-compat", *csv_compat, "write one color-check CSV per order type");
        verify->callback([=, &workers] {
            const auto entries = parse_hex_pointsets(read_file(*db));
            const auto db_report = validate_db(entries);
            if (!db_report.pass())
                throw std::runtime_error("database failed validation; run 'ordertypes validate'");
            const auto report = verify_theorem1(entries, workers);

            std::cout << "global max balanced = " << report.global_max
                      << "; crossing bound = " << report.crossing_bound << "\n";
            std::cout << "argmax entries:";
            for (int idx : report.argmax_entries)
                std::cout << ' ' << idx
                          << (convex_position(entries[idx - 1].points) ? " (convex)" : "");
            std::cout << "\n";
            std::cout << "argmax colorings:";
            for (const auto& c : report.tallies[report.argmax_entries.front() - 1].argmax)
                std::cout << ' ' << c;
            std::cout << "\n";
            std::cout << "monochromatic (entry, coloring) pairs: " << report.monochromatic_pairs
                      << "\n";

            fs::create_directories(*outdir);
            std::string summary;
            for (std::size_t i = 0; i < entries.size(); ++i)
                summary += summary_line(entries[i], report.tallies[i]) + "\n";
            const auto summary_path = fs::path(*outdir) / "balanced_set_max_color.txt";
            write_file(summary_path.string(), summary);
            std::cout << "summary: " << summary_path.string() << "\n";

            if (*csv_compat) {
                const auto dir = fs::path(*outdir) / "feasible_point_sets";
                fs::create_directories(dir);
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    const auto path =
                        dir / ("point_set_" + std::to_string(entries[i].index) +
                               "_with_color_check.csv");
                    write_file(path.string(), entry_csv(entries[i], report.feasible[i]));
                }
                std::cout << "per-entry CSVs: " << dir.string() << "\n";
            }
        });
    }

    // ---- feasible-sets ----
    {
        auto* fsets = app.add_subcommand("feasible-sets", "separable 2- and 4-subsets of one database entry");
        auto db = std::make_shared<std::string>();
        auto entry_no = std::make_shared<int>(1);
        auto csv_path = std::make_shared<std::string>();
        fsets->add_option("--db", *db, "point_set_hex.txt")->required();
        fsets->add_option("--entry", *entry_no, "1-based entry index (default 1)");
        fsets->add_option("--csv", *csv_path, "write the color-check CSV here");
        fsets->callback([=] {
            const auto entries = parse_hex_pointsets(read_file(*db));
            if (*entry_no < 1 || *entry_no > static_cast<int>(entries.size()))
                throw std::invalid_argument("entry index out of range");
            const auto& entry = entries[*entry_no - 1];
            const auto fs_sets = feasible_sets(entry);
            std::cout << "point set: " << decimal_pointset_line(entry) << "\n";
            auto dump = [](const char* label, const std::vector<std::vector<int>>& sets) {
                std::cout << label;
                for (const auto& s : sets) {
                    std::cout << " (";
                    for (std::size_t i = 0; i < s.size(); ++i)
                        std::cout << (i ? ", " : "") << s[i];
                    std::cout << ')';
                }
                std::cout << "\n";
            };
            dump("feasible 2-sets:", fs_sets.two_sets);
            dump("feasible 4-sets:", fs_sets.four_sets);
            if (!csv_path->empty()) write_file(*csv_path, entry_csv(entry, fs_sets));
        });
    }

    // ---- gale ----
    auto* gale = app.add_subcommand("gale", "Gale transforms, affine diagrams and crossing counts");
    gale->require_subcommand(1);
    {
        auto* transform = gale->add_subcommand("transform", "null-space Gale transform of a point configuration");
        auto input = std::make_shared<std::string>();
        transform->add_option("--input", *input, "point configuration file: 'd n' then n rows of d rationals")
            ->required();
        transform->callback([=] {
            const auto vc = gale_transform(load_point_configuration(*input));
            std::cout << vc.dim << ' ' << vc.size() << "\n";
            for (const auto& g : vc.vectors) {
                for (std::size_t i = 0; i < g.size(); ++i)
                    std::cout << (i ? " " : "") << rat_str(g[i]);
                std::cout << "\n";
            }
        });

        auto* diagram = gale->add_subcommand("diagram", "balanced affine Gale diagram of 8 points in R^4");
        auto dinput = std::make_shared<std::string>();
        diagram->add_option("--input", *dinput, "point configuration file")->required();
        diagram->callback([=] {
            const auto cfg = load_point_configuration(*dinput);
            const auto vc = gale_transform(cfg);
            const Vec w = balanced_split_direction(vc);
            const auto diag = affine_gale_diagram(vc, w);
            std::cout << "direction:";
            for (const Rat& x : w) std::cout << ' ' << rat_str(x);
            std::cout << "\n";
            for (std::size_t i = 0; i < diag.points.size(); ++i)
                std::cout << rat_str(diag.points[i][0]) << ' ' << rat_str(diag.points[i][1])
                          << ' ' << (diag.colors[i] == Color::red ? "red" : "blue") << "\n";
        });

        auto* crossings = gale->add_subcommand("crossings", "crossing pairs of 2d points via the Gale bijection");
        auto cinput = std::make_shared<std::string>();
        crossings->add_option("--input", *cinput, "point configuration file with 2d points in R^d")
            ->required();
        crossings->callback([=] {
            std::cout << count_crossing_pairs(load_point_configuration(*cinput)) << "\n";
        });
    }

    // ---- cm / ctilde ----
    {
        auto* cm = app.add_subcommand("cm", "crossing count of K_{2d}^d on the moment curve");
        auto d = std::make_shared<int>(0);
        cm->add_option("--d", *d, "uniformity")->required();
        cm->callback([=] { std::cout << cm_formula(*d) << "\n"; });

        auto* ct = app.add_subcommand("ctilde", "approximation constant c_m^d / C(2d-1, d-1)");
        auto dd = std::make_shared<int>(0);
        ct->add_option("--d", *dd, "uniformity")->required();
        ct->callback([=] { std::cout << rat_str(ctilde(*dd)) << "\n"; });
    }

    // ---- draw ----
    auto* draw = app.add_subcommand("draw", "produce moment-curve drawing files");
    draw->require_subcommand(1);
    {
        auto* moment = draw->add_subcommand("moment", "identity or explicit parameter assignment");
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto params = std::make_shared<std::vector<long long>>();
        auto output = std::make_shared<std::string>();
        moment->add_option("--d", *d, "uniformity")->required();
        moment->add_option("--n", *n, "vertex count")->required();
        moment->add_option("--params", *params, "explicit t values per vertex (default 1..n)");
        moment->add_option("--output", *output, "drawing file (default: stdout)");
        moment->callback([=] {
            std::vector<long long> t = *params;
            if (t.empty()) {
                t.resize(*n);
                for (int v = 0; v < *n; ++v) t[v] = v + 1;
            }
            if (static_cast<int>(t.size()) != *n)
                throw std::invalid_argument("--params must list exactly n values");
            emit(*output, serialize_moment_drawing(MomentCurveDrawing(*d, std::move(t))));
        });

        auto* random = draw->add_subcommand("random", "uniform random vertex permutation");
        auto hpath = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>();
        auto routput = std::make_shared<std::string>();
        random->add_option("--hypergraph", *hpath, "hypergraph file")->required();
        random->add_option("--seed", *seed, "RNG seed")->required();
        random->add_option("--output", *routput, "drawing file (default: stdout)");
        random->callback([=] {
            const auto h = load_hypergraph(*hpath);
            emit(*routput, serialize_moment_drawing(random_moment_drawing(h, *seed)));
        });
    }

    // ---- count-crossings ----
    {
        auto* count = app.add_subcommand("count-crossings", "crossing pairs of a drawn hypergraph");
        auto hpath = std::make_shared<std::string>();
        auto moment_path = std::make_shared<std::string>();
        auto geometric_path = std::make_shared<std::string>();
        auto witnesses = std::make_shared<bool>(false);
        count->add_option("--hypergraph", *hpath, "hypergraph file")->required();
        auto* mo = count->add_option("--moment", *moment_path, "moment-curve drawing file");
        auto* ge = count->add_option("--geometric", *geometric_path, "geometric drawing file");
        mo->excludes(ge);
        count->add_flag("--witnesses", *witnesses, "list crossing edge index pairs");
        count->callback([=] {
            const auto h = load_hypergraph(*hpath);
            CrossingReport report;
            if (!moment_path->empty()) {
                std::ifstream in(*moment_path);
                if (!in) throw std::runtime_error("cannot open " + *moment_path);
                report = count_crossings(h, parse_moment_drawing(in), *witnesses);
            } else if (!geometric_path->empty()) {
                std::ifstream in(*geometric_path);
                if (!in) throw std::runtime_error("cannot open " + *geometric_path);
                report = count_crossings_geometric(h, parse_geometric_drawing(in), *witnesses);
            } else {
                throw std::invalid_argument("need --moment or --geometric");
            }
            std::cout << report.total << "\n";
            if (*witnesses)
                for (const auto& [i, j] : *report.witnesses)
                    std::cout << i << ' ' << j << "\n";
        });
    }

    // ---- theorem2 ----
    auto* theorem2 = app.add_subcommand("theorem2", "extremal drawings of complete d-partite hypergraphs");
    theorem2->require_subcommand(1);
    {
        auto* verify = theorem2->add_subcommand("verify", "check the (2^{d-1}-1) C(n,2)^d count");
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto trials = std::make_shared<long long>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        verify->add_option("--d", *d, "uniformity")->required();
        verify->add_option("--n", *n, "vertices per part")->required();
        verify->add_option("--trials", *trials, "also test this many random permutations");
        verify->add_option("--seed", *seed, "RNG seed for --trials");
        verify->callback([=] {
            const auto ph = complete_dpartite(*d, *n);
            const long long drawn =
                count_crossings(ph.base, theorem2_drawing(*d, *n)).total;
            const long long expect = theorem2_value(*d, *n);
            std::cout << "expected = " << expect << "\n" << "drawn = " << drawn << "\n";
            if (drawn != expect) throw std::runtime_error("drawn count differs from the closed form");
            if (*trials > 0) {
                long long best = 0;
                for (long long k = 0; k < *trials; ++k) {
                    const auto drawing =
                        random_moment_drawing(ph.base, Rng(*seed).fork(k).next());
                    best = std::max(best, count_crossings(ph.base, drawing).total);
                }
                std::cout << "random max over " << *trials << " trials = " << best << "\n";
                if (best > expect)
                    throw std::runtime_error("a random drawing exceeded the closed form");
            }
        });
    }

    // ---- gadget ----
    {
        auto* gadget = app.add_subcommand("gadget", "star augmentation used by the hardness reduction");
        auto input = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        gadget->add_option("--input", *input, "base hypergraph file")->required();
        gadget->add_option("--output", *output, "gadget hypergraph file (default: stdout)");
        gadget->callback([=] {
            const auto result = build_gadget(load_hypergraph(*input));
            std::cerr << "t = " << result.t << ", apex = " << result.apex
                      << ", vertices = " << result.gadget.vertex_count
                      << ", edges = " << result.gadget.edges.size() << "\n";
            emit(*output, serialize_hypergraph(result.gadget));
        });
    }

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "hypergraph generators");
    gen->require_subcommand(1);
    {
        auto* comp = gen->add_subcommand("complete", "K_n^d");
        auto n = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        auto output = std::make_shared<std::string>();
        comp->add_option("--n", *n, "vertices")->required();
        comp->add_option("--d", *d, "uniformity")->required();
        comp->add_option("--output", *output, "hypergraph file (default: stdout)");
        comp->callback([=] { emit(*output, serialize_hypergraph(complete(*n, *d))); });

        auto* dpart = gen->add_subcommand("dpartite", "complete balanced d-partite K^d_{dxn}");
        auto dd = std::make_shared<int>(0);
        auto nn = std::make_shared<int>(0);
        auto output2 = std::make_shared<std::string>();
        dpart->add_option("--d", *dd, "parts / uniformity")->required();
        dpart->add_option("--n", *nn, "vertices per part")->required();
        dpart->add_option("--output", *output2, "hypergraph file (default: stdout)");
        dpart->callback([=] { emit(*output2, serialize_hypergraph(complete_dpartite(*dd, *nn).base)); });
    }

    // ---- random-draw ----
    {
        auto* rd = app.add_subcommand("random-draw", "Monte Carlo crossing statistics over random drawings");
        auto hpath = std::make_shared<std::string>();
        auto trials = std::make_shared<long long>(0);
        auto seed = std::make_shared<std::uint64_t>();
        auto csv = std::make_shared<std::string>();
        rd->add_option("--hypergraph", *hpath, "hypergraph file")->required();
        rd->add_option("--trials", *trials, "number of random drawings")->required();
        rd->add_option("--seed", *seed, "RNG seed")->required();
        rd->add_option("--csv", *csv, "write per-trial counts here");
        rd->callback([=, &workers] {
            const auto h = load_hypergraph(*hpath);
            const auto report = monte_carlo(h, *trials, *seed, workers);
            const auto witness = guarantee_check(h, report);
            std::cout << "trials = " << report.trials << "\n"
                      << "F = " << report.F << "\n"
                      << "mean = " << rat_str(report.mean) << "\n"
                      << "sample_variance = " << rat_str(report.sample_variance) << "\n"
                      << "expected = " << rat_str(report.expected) << "\n"
                      << "best_count = " << report.best_count << " (trial " << report.best_trial
                      << ")\n"
                      << "guarantee_threshold = " << witness.threshold << "\n"
                      << "guarantee_attained = " << (witness.attained ? "yes" : "no") << "\n";
            if (witness.attained) {
                std::cout << "witness_params =";
                for (long long t : witness.permutation_params) std::cout << ' ' << t;
                std::cout << "\n";
            }
            if (!csv->empty()) {
                std::string lines = "trial,count\n";
                for (long long k = 0; k < report.trials; ++k)
                    lines += std::to_string(k) + "," + std::to_string(report.counts[k]) + "\n";
                write_file(*csv, lines);
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
