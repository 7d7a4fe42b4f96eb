#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ohg/analysis.hpp"
#include "ohg/coefficients.hpp"
#include "ohg/contributors.hpp"
#include "ohg/io.hpp"
#include "ohg/matrices.hpp"
#include "ohg/walks.hpp"

namespace {

using namespace ohg;

// exit codes: 0 ok, 1 parse/validation/precondition error, 2 resource guard,
// 3 self-verification mismatch or internal bug

struct Options {
    std::string file;
    Limits limits;
    bool human = false;
};

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string row_csv(const IntMatrix& m, int r) {
    std::string out;
    for (int c = 0; c < m.cols(); ++c) {
        if (c) out += ",";
        out += std::to_string(m.at(r, c));
    }
    return out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

void print_matrix(std::ostream& out, const std::string& key, const IntMatrix& m, bool human) {
    if (human) {
        out << key << " (" << m.rows() << "x" << m.cols() << "):\n";
        for (int r = 0; r < m.rows(); ++r) {
            out << "  " << m.row_labels()[r] << ":";
            for (int c = 0; c < m.cols(); ++c) out << " " << m.at(r, c);
            out << "\n";
        }
        return;
    }
    for (int r = 0; r < m.rows(); ++r)
        out << key << "." << m.row_labels()[r] << "=" << row_csv(m, r) << "\n";
}

std::string cycle_notation(const OrientedHypergraph& g, const std::vector<int>& image) {
    // image[v] = v for vertices outside the support
    std::string out;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t start = 0; start < image.size(); ++start) {
        if (seen[start]) continue;
        out += "(";
        std::size_t v = start;
        bool first = true;
        do {
            seen[v] = true;
            if (!first) out += " ";
            out += g.vertex_name(static_cast<int>(v));
            first = false;
            v = static_cast<std::size_t>(image[v]);
        } while (v != start);
        out += ")";
    }
    return out;
}

std::vector<int> extended_image(const OrientedHypergraph& g,
                                const std::vector<std::pair<int, int>>& choice) {
    std::vector<int> image(choice.size());
    for (std::size_t v = 0; v < choice.size(); ++v)
        image[v] = choice[v] == SubContributor::isolated
                       ? static_cast<int>(v)
                       : g.incidence(choice[v].second).vertex;
    return image;
}

std::string census_line(const OrientedHypergraph& g,
                        const std::vector<std::pair<int, int>>& choice, bool with_isolated) {
    std::string out = "perm=" + cycle_notation(g, extended_image(g, choice));
    std::vector<std::string> tails, heads, isolated;
    for (std::size_t v = 0; v < choice.size(); ++v) {
        if (choice[v] == SubContributor::isolated) {
            isolated.push_back(g.vertex_name(static_cast<int>(v)));
            continue;
        }
        tails.push_back(std::to_string(choice[v].first));
        heads.push_back(std::to_string(choice[v].second));
    }
    if (with_isolated) out += " isolated=" + join(isolated);
    out += " tails=" + join(tails) + " heads=" + join(heads);
    ContributorStats s = sub_contributor_stats(g, SubContributor{choice});
    out += " bs=" + std::to_string(s.backsteps);
    out += " ec=" + std::to_string(s.even_circles);
    out += " oc=" + std::to_string(s.odd_circles);
    out += " pc=" + std::to_string(s.positive_circles);
    out += " nc=" + std::to_string(s.negative_circles);
    return out;
}

int cmd_validate(const Options& opt) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    if (opt.human) {
        std::cout << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
                  << g.incidence_count() << " incidences\n";
        return 0;
    }
    std::cout << "vertices=" << g.vertex_count() << "\n";
    std::cout << "edges=" << g.edge_count() << "\n";
    std::cout << "incidences=" << g.incidence_count() << "\n";
    return 0;
}

int cmd_matrices(const Options& opt, const std::string& which, int walk_length) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    std::vector<std::string> vertex_names, edge_names;
    for (int v = 0; v < g.vertex_count(); ++v) vertex_names.push_back(g.vertex_name(v));
    for (int e = 0; e < g.edge_count(); ++e) edge_names.push_back(g.edge_name(e));
    std::cout << "vertices=" << join(vertex_names) << "\n";
    std::cout << "edges=" << join(edge_names) << "\n";
    bool all = which == "all";
    if (all || which == "H") print_matrix(std::cout, "H", incidence_matrix(g), opt.human);
    if (all || which == "A") print_matrix(std::cout, "A", adjacency_matrix(g), opt.human);
    if (all || which == "D") print_matrix(std::cout, "D", degree_matrix(g), opt.human);
    if (all || which == "L") print_matrix(std::cout, "L", laplacian(g), opt.human);
    if (walk_length >= 0)
        print_matrix(std::cout, "W" + std::to_string(walk_length),
                     weak_walk_matrix(g, walk_length, opt.limits), opt.human);
    return 0;
}

int cmd_charpoly(const Options& opt, const std::string& matrix, const std::string& kind,
                 const std::string& method) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    bool use_det = kind == "det";
    bool on_laplacian = matrix == "L";

    IntPolynomial contributor_poly, oracle_poly;
    if (method == "contributor" || method == "both") {
        contributor_poly = on_laplacian
                               ? (use_det ? charpoly_det_L(g, opt.limits)
                                          : charpoly_perm_L(g, opt.limits))
                               : (use_det ? charpoly_det_A(g, opt.limits)
                                          : charpoly_perm_A(g, opt.limits));
        if (opt.human)
            std::cout << "contributor: " << contributor_poly.to_string() << "\n";
        else
            std::cout << contributor_poly.to_string() << "\n";
    }
    if (method == "oracle" || method == "both") {
        IntMatrix m = on_laplacian ? laplacian(g) : adjacency_matrix(g);
        oracle_poly = use_det ? charpoly_det_oracle(m) : charpoly_perm_oracle(m);
        if (opt.human)
            std::cout << "oracle:      " << oracle_poly.to_string() << "\n";
        else
            std::cout << oracle_poly.to_string() << "\n";
    }
    if (method == "both" && !(contributor_poly == oracle_poly)) {
        std::cerr << "error: contributor and oracle polynomials disagree\n";
        return 3;
    }
    return 0;
}

int cmd_contributors(const Options& opt, const std::string& filter, const std::string& mode) {
    OrientedHypergraph g = load_hypergraph(opt.file);

    std::string shape = filter;
    int k = -1;
    if (shape.rfind("eq:", 0) == 0) {
        k = std::stoi(shape.substr(3));
        shape = "eq";
    } else if (shape.rfind("geq:", 0) == 0) {
        k = std::stoi(shape.substr(4));
        shape = "geq";
    } else if (shape != "all") {
        throw ValidationError("filter must be all, eq:<k> or geq:<k>");
    }

    if (shape == "all") {
        auto contributors = enumerate_contributors(g, opt.limits);
        if (mode == "count") {
            std::cout << contributors.size() << "\n";
        } else if (mode == "census") {
            for (const Contributor& c : contributors)
                std::cout << census_line(g, c.choice, false) << "\n";
        } else {
            auto classes = group_by_permutomorphism(g, contributors);
            for (const auto& [image, members] : classes)
                std::cout << "perm=" << cycle_notation(g, image) << " size=" << members.size()
                          << "\n";
        }
        return 0;
    }

    auto subs = shape == "eq" ? enumerate_hat_eq(g, k, opt.limits)
                              : enumerate_hat_geq(g, k, opt.limits);
    if (mode == "count") {
        std::cout << subs.size() << "\n";
    } else if (mode == "census") {
        for (const SubContributor& sub : subs) std::cout << census_line(g, sub.choice, true) << "\n";
    } else {
        std::map<std::vector<int>, std::size_t> classes;
        for (const SubContributor& sub : subs) ++classes[extended_image(g, sub.choice)];
        for (const auto& [image, size] : classes)
            std::cout << "perm=" << cycle_notation(g, image) << " size=" << size << "\n";
    }
    return 0;
}

int cmd_walks(const Options& opt, const std::string& from, const std::string& to, int k) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    int v = g.vertex_index(from);
    int w = g.vertex_index(to);
    auto walks = enumerate_weak_walks(g, v, w, k, opt.limits);
    std::int64_t signed_count = 0;
    for (const WeakWalk& walk : walks) signed_count += walk_sign(g, walk);
    std::cout << "from=" << from << "\n";
    std::cout << "to=" << to << "\n";
    std::cout << "length=" << k << "\n";
    std::cout << "count=" << walks.size() << "\n";
    std::cout << "signed=" << signed_count << "\n";
    for (const WeakWalk& walk : walks) {
        std::string line = "walk=" + g.vertex_name(walk.start_vertex);
        for (std::size_t t = 0; t < walk.incidences.size(); t += 2) {
            const Incidence& into = g.incidence(walk.incidences[t]);
            const Incidence& outof = g.incidence(walk.incidences[t + 1]);
            line += " [" + std::to_string(walk.incidences[t]) + "] " + g.edge_name(into.edge);
            line += " [" + std::to_string(walk.incidences[t + 1]) + "] " +
                    g.vertex_name(outof.vertex);
        }
        line += " sign=";
        line += walk_sign(g, walk) > 0 ? "+1" : "-1";
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_bounds(const Options& opt) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    BoundsReport report = bounds_report(g, opt.limits);
    std::cout << "contributors=" << report.contributor_count << "\n";
    std::cout << "perm_L=" << report.perm_laplacian << "\n";
    std::cout << "det_L=" << report.det_laplacian << "\n";
    std::cout << "bounds_hold=" << yesno(report.bounds_hold) << "\n";
    std::cout << "lower_strict=" << yesno(report.lower_strict_ok) << "\n";
    std::cout << "upper_perm_attained=" << yesno(report.upper_perm_attained) << "\n";
    std::cout << "upper_det_attained=" << yesno(report.upper_det_attained) << "\n";
    std::cout << "bouquet=" << yesno(report.bouquet) << "\n";
    std::cout << "det_sharpness_consistent=" << yesno(report.det_sharpness_consistent) << "\n";
    std::cout << "notes=" << report.notes << "\n";
    return report.bounds_hold && report.det_sharpness_consistent ? 0 : 3;
}

int cmd_sweep(const Options& opt, const std::string& objective, bool dump) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    OrientationSweepResult result = orientation_sweep(g, objective_from_name(objective), opt.limits);
    std::cout << "objective=" << objective_name(result.objective) << "\n";
    std::cout << "incidences=" << result.incidence_count << "\n";
    std::cout << "orientations=" << result.values.size() << "\n";
    std::cout << "contributors=" << result.contributor_count << "\n";
    std::cout << "max=" << result.max_value << "\n";
    std::vector<std::string> masks;
    for (std::uint32_t mask : result.argmax) masks.push_back(std::to_string(mask));
    std::cout << "argmax=" << join(masks) << "\n";
    bool constant_attains =
        !result.argmax.empty() && result.argmax.front() == 0u &&
        result.argmax.back() == static_cast<std::uint32_t>(result.values.size() - 1);
    std::cout << "constant_attains=" << yesno(constant_attains) << "\n";
    if (dump)
        for (std::uint32_t mask = 0; mask < result.values.size(); ++mask)
            std::cout << "value." << mask << "=" << result.values[mask] << "\n";
    return 0;
}

int cmd_sachs(const Options& opt) {
    OrientedHypergraph g = load_hypergraph(opt.file);
    IntPolynomial p = sachs_coefficients(g);
    if (opt.human)
        std::cout << "sachs: " << p.to_string() << "\n";
    else
        std::cout << "sachs=" << p.to_string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinants, permanents and characteristic polynomials of oriented "
                 "hypergraph matrices, by contributor enumeration and by integer linear algebra"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--human", opt.human, "aligned human-readable output instead of machine mode");
    app.add_option("--max-contributors", opt.limits.max_enumeration,
                   "cap on enumerated contributors/walks")
        ->envname("OHG_MAX_CONTRIBUTORS");
    app.add_option("--max-incidences-sweep", opt.limits.max_sweep_incidences,
                   "cap on incidences for full orientation sweeps")
        ->envname("OHG_MAX_INCIDENCES_SWEEP");
    app.add_option("--max-walk-length", opt.limits.max_walk_length, "cap on weak walk length")
        ->envname("OHG_MAX_WALK_LENGTH");

    auto add_file = [&](CLI::App* cmd) {
        cmd->fallthrough(); // global flags remain valid after the subcommand
        cmd->add_option("file", opt.file, "hypergraph file (.oh text or .json; - for stdin)")
            ->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a hypergraph file");
    add_file(validate);

    CLI::App* matrices = app.add_subcommand("matrices", "print H, A, D, L (and weak walk) matrices");
    add_file(matrices);
    std::string which = "all";
    matrices->add_option("--which", which, "H, A, D, L or all")
        ->check(CLI::IsMember({"H", "A", "D", "L", "all"}));
    int walk_length = -1;
    matrices->add_option("--walk", walk_length, "also print the weak walk matrix of this length");

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial coefficients");
    add_file(charpoly);
    std::string matrix = "L", kind = "det", method = "both";
    charpoly->add_option("--matrix", matrix, "A or L")->check(CLI::IsMember({"A", "L"}));
    charpoly->add_option("--kind", kind, "det or perm")->check(CLI::IsMember({"det", "perm"}));
    charpoly->add_option("--method", method, "contributor, oracle or both")
        ->check(CLI::IsMember({"contributor", "oracle", "both"}));

    CLI::App* contributors = app.add_subcommand("contributors", "contributor census and hat sets");
    add_file(contributors);
    std::string filter = "all", mode = "count";
    contributors->add_option("--filter", filter, "all, eq:<k> or geq:<k>");
    contributors->add_option("--mode", mode, "count, census or classes")
        ->check(CLI::IsMember({"count", "census", "classes"}));

    CLI::App* walks = app.add_subcommand("walks", "enumerate weak walks between two vertices");
    add_file(walks);
    std::string from, to;
    int length = 1;
    walks->add_option("from", from, "start vertex name")->required();
    walks->add_option("to", to, "end vertex name")->required();
    walks->add_option("length", length, "walk length")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "contributor-count bounds on perm(L), det(L)");
    add_file(bounds);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate an objective over all orientations");
    add_file(sweep);
    std::string objective = "perm_L";
    sweep->add_option("--objective", objective, "perm_L, det_L, perm_A or det_A")
        ->check(CLI::IsMember({"perm_L", "det_L", "perm_A", "det_A"}));
    bool dump = false;
    sweep->add_flag("--dump", dump, "print the value of every orientation bitmask");

    CLI::App* sachs = app.add_subcommand("sachs", "basic-figure coefficients of a plain graph");
    add_file(sachs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt);
        if (app.got_subcommand(matrices)) return cmd_matrices(opt, which, walk_length);
        if (app.got_subcommand(charpoly)) return cmd_charpoly(opt, matrix, kind, method);
        if (app.got_subcommand(contributors)) return cmd_contributors(opt, filter, mode);
        if (app.got_subcommand(walks)) return cmd_walks(opt, from, to, length);
        if (app.got_subcommand(bounds)) return cmd_bounds(opt);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt, objective, dump);
        if (app.got_subcommand(sachs)) return cmd_sachs(opt);
    } catch (const ResourceGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
