// Command-line front end: build the named complexes, report face vectors,
// certify sphere/flag properties, enumerate equators, compute homology,
// run subdivision/contraction walks, test isomorphism.
//
// Exit codes: 0 success / property holds, 1 property failure, 2 usage or
// I/O error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flagsphere/flagsphere.hpp"

namespace fs = flagsphere;

namespace {

fs::SimplicialComplex load(const std::string& path) {
    if (path == "-") return fs::read_complex(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return fs::read_complex(in);
}

void emit(const std::string& path, const fs::SimplicialComplex& c) {
    if (path == "-") {
        fs::write_complex(std::cout, c);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    fs::write_complex(out, c);
}

fs::SimplicialComplex build_target(const std::string& target) {
    if (target == "gamma1") return fs::gamma1();
    if (target == "gamma2") return fs::gamma2();
    if (target == "boundary") return fs::boundary_complex(fs::gamma1());
    if (target == "delta") return fs::delta_12_33();
    if (target.rfind("join:", 0) == 0)
        return fs::k_fold_join(fs::delta_12_33(), std::stoi(target.substr(5)));
    if (target.rfind("diamond:", 0) == 0)
        return fs::cross_polytope(std::stoi(target.substr(8)));
    throw CLI::ValidationError("unknown build target: " + target);
}

fs::json vectors_json(const fs::SimplicialComplex& c) {
    auto v = fs::compute_vectors(c);
    fs::json j;
    j["f"] = v.f;
    j["h"] = v.h;
    if (v.gamma)
        j["gamma"] = *v.gamma;
    else
        j["gamma"] = "undefined";
    return j;
}

fs::json report_json(const fs::SimplicialComplex& c) {
    fs::json j = vectors_json(c);
    j["dim"] = c.dim();
    j["vertices"] = c.universe.size();
    j["facets"] = c.facets.size();
    j["flag"] = fs::is_flag(c);
    j["pure"] = fs::is_pure(c);
    fs::Graph g = fs::one_skeleton(c);
    fs::json degrees = fs::json::object();
    for (int v = 0; v < g.n; ++v) degrees[c.universe.label(v)] = g.degree(v);
    j["degrees"] = degrees;
    return j;
}

fs::json certification_json(const fs::CertificationReport& r) {
    fs::json j;
    j["flag"] = r.flag;
    j["suspension"]["holds"] = r.suspension.has_value();
    if (r.suspension) j["suspension"]["witness"] = {r.suspension->first, r.suspension->second};
    fs::json ce = fs::json::array();
    for (const auto& [u, v] : r.contractible) ce.push_back({u, v});
    j["contractible_edges"] = ce;
    if (r.equators_checked) {
        fs::json eq = fs::json::array();
        for (const auto& rec : r.equators) {
            fs::json e;
            e["S"] = rec.vertices;
            e["link_of"] = rec.link_of ? fs::json(*rec.link_of) : fs::json(nullptr);
            eq.push_back(e);
        }
        j["equators"] = eq;
    } else {
        j["equators"] = "not checked (dim > 3)";
    }
    j["question_1_5"] = r.question_1_5;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"flag 3-sphere construction, certification and search"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // build
    auto* build = app.add_subcommand("build", "construct a named complex");
    std::string target, out_path = "-";
    build->add_option("target", target,
                      "gamma1 | gamma2 | boundary | delta | join:k | diamond:d")
        ->required();
    build->add_option("-o,--output", out_path, "output file ('-' = stdout)");
    bool paper_order = true;
    build->add_flag("--paper-order,!--no-paper-order", paper_order,
                    "keep the published facet order (on by default)");

    // report
    auto* report = app.add_subcommand("report", "f/h/gamma vectors, degrees, flagness");
    std::string in_path = "-";
    report->add_option("file", in_path, "input complex ('-' = stdin)");

    // certify
    auto* certify = app.add_subcommand("certify", "sphere certificate, optionally full report");
    std::string cert_path = "-";
    bool with_shelling = false, full = false;
    certify->add_option("file", cert_path, "input complex ('-' = stdin)");
    certify->add_flag("--shelling", with_shelling, "verify the file's facet order as a shelling");
    certify->add_flag("--full", full, "also decide suspension/contractibility/equators");

    // equators
    auto* equators = app.add_subcommand("equators", "enumerate induced equators");
    std::string eq_path = "-";
    equators->add_option("file", eq_path, "input complex ('-' = stdin)");

    // homology
    auto* homology = app.add_subcommand("homology", "Betti number table");
    std::string hom_path = "-", field = "both";
    bool reduced = false;
    homology->add_option("file", hom_path, "input complex ('-' = stdin)");
    homology->add_option("--field", field, "gf2 | q | both")
        ->check(CLI::IsMember({"gf2", "q", "both"}));
    homology->add_flag("--reduced", reduced, "reduced Betti numbers");

    // search
    auto* search = app.add_subcommand("search", "random subdivision/contraction walks");
    std::uint64_t seed = 0;
    int n_sub = 10, n_con = 10, max_vertices = 16, walks = 1;
    std::string start = "delta", harvest;
    search->add_option("--seed", seed, "random seed")->required();
    search->add_option("--subdivide", n_sub, "subdivisions per walk");
    search->add_option("--contract", n_con, "contractions per walk");
    search->add_option("--max-vertices", max_vertices, "vertex budget");
    search->add_option("--walks", walks, "number of independent walks");
    search->add_option("--start", start, "delta | diamond:d | a complex file");
    search->add_option("--harvest", harvest, "directory for complexes passing question 1.5");

    // iso
    auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
    std::string iso_a, iso_b;
    iso->add_option("file1", iso_a)->required();
    iso->add_option("file2", iso_b)->required();

    CLI11_PARSE(app, argc, argv);

    if (build->parsed()) {
        auto c = build_target(target);
        if (!paper_order) std::sort(c.facets.begin(), c.facets.end());
        emit(out_path, c);
        return 0;
    }

    if (report->parsed()) {
        auto c = load(in_path);
        fs::json j = report_json(c);
        if (as_json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "vertices: " << j["vertices"] << "  facets: " << j["facets"]
                      << "  dim: " << j["dim"] << '\n'
                      << "f: " << j["f"] << '\n'
                      << "h: " << j["h"] << '\n'
                      << "gamma: " << j["gamma"] << '\n'
                      << "flag: " << (j["flag"].get<bool>() ? "yes" : "no") << '\n';
        }
        return 0;
    }

    if (certify->parsed()) {
        auto c = load(cert_path);
        std::optional<std::vector<fs::Face>> order;
        if (with_shelling) order = c.facets;
        auto cert = fs::certify_3_sphere(c, order);
        fs::json j;
        j["closed_3_manifold"] = cert.closed_3_manifold;
        j["reduced_betti_gf2_ok"] = cert.homology_gf2_ok;
        j["reduced_betti_rational_ok"] = cert.homology_rational_ok;
        if (cert.shelling) {
            j["shelling"]["ok"] = cert.shelling->ok;
            if (!cert.shelling->ok) j["shelling"]["first_failure"] = cert.shelling->first_failure;
        }
        bool ok = with_shelling ? cert.certified_sphere() : cert.homology_sphere();
        if (!cert.closed_3_manifold && c.dim() == 3) {
            // name a failing vertex link for the error report
            for (int v = 0; v < c.universe.size(); ++v)
                if (!fs::is_2_sphere(fs::link(c, fs::Face::singleton(v)))) {
                    j["failing_vertex_link"] = c.universe.label(v);
                    break;
                }
        }
        if (full) {
            auto r = fs::question_1_5_report(c, c.dim() <= 3 && c.universe.size() <= 25);
            j["report"] = certification_json(r);
            ok = ok && r.question_1_5;
        }
        std::cout << j.dump(2) << '\n';
        return ok ? 0 : 1;
    }

    if (equators->parsed()) {
        auto c = load(eq_path);
        auto eq = fs::enumerate_induced_equators(c);
        fs::json arr = fs::json::array();
        bool all_links = true;
        for (const auto& rec : eq) {
            fs::json e;
            e["S"] = rec.vertices;
            e["link_of"] = rec.link_of ? fs::json(*rec.link_of) : fs::json(nullptr);
            if (!rec.link_of) all_links = false;
            arr.push_back(e);
        }
        std::cout << arr.dump(2) << '\n';
        return all_links ? 0 : 1;
    }

    if (homology->parsed()) {
        auto c = load(hom_path);
        fs::json j;
        if (field != "q") j["gf2"] = fs::betti_numbers(c, fs::FieldTag::GF2, reduced);
        if (field != "gf2") j["rational"] = fs::betti_numbers(c, fs::FieldTag::Rational, reduced);
        j["euler_characteristic"] = fs::euler_characteristic(c);
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    if (search->parsed()) {
        fs::SimplicialComplex start_complex =
            (start == "delta") ? fs::delta_12_33()
            : (start.rfind("diamond:", 0) == 0)
                ? fs::cross_polytope(std::stoi(start.substr(8)))
                : load(start);
        if (!harvest.empty()) std::filesystem::create_directories(harvest);
        int finds = 0;
        for (int w = 0; w < walks; ++w) {
            fs::WalkConfig cfg;
            cfg.seed = seed + static_cast<std::uint64_t>(w);
            cfg.n_subdivisions = n_sub;
            cfg.n_contractions = n_con;
            cfg.max_vertices = max_vertices;
            auto res = fs::random_walk(start_complex, cfg);
            const int n = res.complex.universe.size();
            std::cout << "walk " << w << ": " << n << " vertices, "
                      << res.complex.facets.size() << " facets, question_1_5="
                      << (res.report.question_1_5 ? "true" : "false")
                      << (res.truncated ? " (truncated)" : "") << '\n';
            if (res.report.question_1_5 && n >= 13 && !harvest.empty()) {
                ++finds;
                std::string base = harvest + "/find_" + std::to_string(cfg.seed);
                emit(base + ".json", res.complex);
                fs::json meta;
                meta["seed"] = cfg.seed;
                fs::json log = fs::json::array();
                for (const auto& m : res.log)
                    log.push_back({{"move", m.kind == fs::Move::Kind::Subdivide
                                                ? "subdivide" : "contract"},
                                   {"edge", {m.u, m.v}},
                                   {"f", m.f}});
                meta["log"] = log;
                meta["report"] = certification_json(res.report);
                std::ofstream meta_out(base + ".meta.json");
                meta_out << meta.dump(2) << '\n';
            }
        }
        std::cout << finds << " find(s) harvested\n";
        return 0;
    }

    if (iso->parsed()) {
        auto a = load(iso_a), b = load(iso_b);
        auto witness = fs::is_isomorphic(a, b);
        if (!witness) {
            std::cout << "not isomorphic\n";
            return 1;
        }
        fs::json j;
        for (const auto& [k, v] : *witness) j[k] = v;
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
