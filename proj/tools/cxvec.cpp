// cxvec: solve plane-wave behavior at a planar interface, validate wave
// triples against the interface constraints and the laws of reflection and
// incidence, and run the randomized algebra suites with reproducible seeds.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cxvec/cxvec.hpp"
#include "cxvec/scene.hpp"
#include "cxvec/suites.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitUnsupported = 3;

struct CommonFlags {
    std::string out_path;
    double tol_geom = -1.0; // negative = take the scene's value
    double tol_bc = -1.0;
    std::uint64_t seed = 0;
};

double to_degrees(double rad) {
    return rad * 180.0 / std::acos(-1.0);
}

cxvec::io::Report build_report(const cxvec::emf::WaveTriple& triple,
                               const cxvec::emf::Interface& iface,
                               const cxvec::emf::CheckOptions& opts,
                               std::uint64_t seed, const std::string& scene_hash) {
    cxvec::io::Report report;
    auto [r, t] = cxvec::emf::te_amplitude_ratios(triple, iface);
    cxvec::emf::TripleAngles angles = cxvec::emf::incidence_angles(triple, iface);
    report.solved.k_r = triple.reflected.k;
    report.solved.k_t = triple.transmitted.k;
    report.solved.r_coeff = r.re;
    report.solved.t_coeff = t.re;
    report.solved.theta_i_deg = to_degrees(angles.theta_i);
    report.solved.theta_r_deg = to_degrees(angles.theta_r);
    report.solved.theta_t_deg = to_degrees(angles.theta_t);
    report.checks = cxvec::emf::check_wave_triple(triple, iface, opts);
    report.provenance = {seed, kToolVersion, scene_hash};
    return report;
}

int emit_report(const cxvec::io::Report& report, const std::string& out_path) {
    std::string bytes = cxvec::io::report_to_json(report).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << bytes;
    } else {
        cxvec::io::write_file(out_path, bytes);
    }
    bool all_pass = true;
    for (const auto& c : report.checks) {
        if (!c.pass) {
            std::cerr << "check failed: " << c.name << " (residual " << c.residual
                      << " > tolerance " << c.tolerance << ")\n";
            all_pass = false;
        }
    }
    return all_pass ? kExitPass : kExitCheckFailure;
}

cxvec::emf::CheckOptions check_options(const cxvec::io::Scene& scene,
                                       const CommonFlags& flags) {
    cxvec::emf::CheckOptions opts;
    opts.tol_geometry = flags.tol_geom > 0.0 ? flags.tol_geom : scene.tol_geometry;
    opts.tol_boundary = flags.tol_bc > 0.0 ? flags.tol_bc : scene.tol_boundary;
    opts.seed = flags.seed;
    return opts;
}

int run_solve(const std::string& scene_path, const CommonFlags& flags,
              const std::string& triple_out) {
    std::string scene_bytes = cxvec::io::read_file(scene_path);
    cxvec::io::Scene scene = cxvec::io::scene_from_json(
        cxvec::io::parse_json(scene_bytes, "scene '" + scene_path + "'"));
    cxvec::emf::CheckOptions opts = check_options(scene, flags);

    cxvec::emf::WaveTriple triple = cxvec::emf::solve_interface(
        scene.incident, scene.iface, scene.k0, scene.eta0, opts.tol_geometry);

    if (!triple_out.empty()) {
        cxvec::io::write_file(triple_out,
                              cxvec::io::triple_to_json(triple).dump(2) + "\n");
    }
    return emit_report(build_report(triple, scene.iface, opts, flags.seed,
                                    cxvec::io::fnv1a64(scene_bytes)),
                       flags.out_path);
}

int run_check(const std::string& scene_path, const std::string& triple_path,
              const CommonFlags& flags) {
    std::string scene_bytes = cxvec::io::read_file(scene_path);
    cxvec::io::Scene scene = cxvec::io::scene_from_json(
        cxvec::io::parse_json(scene_bytes, "scene '" + scene_path + "'"));
    cxvec::emf::WaveTriple triple = cxvec::io::load_triple(triple_path);
    cxvec::emf::CheckOptions opts = check_options(scene, flags);
    return emit_report(build_report(triple, scene.iface, opts, flags.seed,
                                    cxvec::io::fnv1a64(scene_bytes)),
                       flags.out_path);
}

bool parse_dims(const std::string& text, std::size_t& lo, std::size_t& hi) {
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        return false;
    }
    try {
        lo = std::stoul(text.substr(0, sep));
        hi = std::stoul(text.substr(sep + 2));
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

int run_axioms(const std::string& suite, std::uint64_t seed, std::size_t trials,
               const std::string& dims) {
    cxvec::suites::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    if (!parse_dims(dims, cfg.dim_lo, cfg.dim_hi)) {
        std::cerr << "invalid --dims '" << dims << "' (expected A..B with A >= 1)\n";
        return kExitInputError;
    }

    std::vector<cxvec::suites::PropertyResult> results =
        cxvec::suites::run_suite(suite, cfg);

    std::cout << "suite " << suite << " seed=" << seed << " trials=" << trials
              << " dims=" << cfg.dim_lo << ".." << cfg.dim_hi << "\n";
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed() ? "  [pass] " : "  [FAIL] ") << r.name
                  << ": trials=" << r.trials << " failures=" << r.failures
                  << " worst_residual=" << r.worst_residual << "\n";
        if (!r.passed()) {
            ++failed;
            std::cout << "         counterexample " << r.first_counterexample
                      << "\n";
        }
    }
    std::cout << (failed == 0 ? "RESULT: PASS" : "RESULT: FAIL") << " ("
              << results.size() << " properties)\n";
    return failed == 0 ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex vector algebra and plane-wave interface toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonFlags flags;
    std::string scene_path;
    std::string triple_path;
    std::string triple_out;

    CLI::App* solve = app.add_subcommand(
        "solve", "solve an interface scene and verify every constraint");
    solve->add_option("scene", scene_path, "scene JSON file")->required();
    solve->add_option("-o,--out", flags.out_path, "write the report here");
    solve->add_option("--emit-triple", triple_out,
                      "also write the solved wave triple as JSON");
    solve->add_option("--tol-geom", flags.tol_geom,
                      "override the scene geometry tolerance");
    solve->add_option("--tol-bc", flags.tol_bc,
                      "override the scene boundary-condition tolerance");
    solve->add_option("--seed", flags.seed, "seed for boundary sampling");

    CLI::App* check = app.add_subcommand(
        "check", "validate a wave triple against a scene without solving");
    check->add_option("scene", scene_path, "scene JSON file")->required();
    check->add_option("triple", triple_path, "wave-triple JSON file")->required();
    check->add_option("-o,--out", flags.out_path, "write the report here");
    check->add_option("--tol-geom", flags.tol_geom,
                      "override the scene geometry tolerance");
    check->add_option("--tol-bc", flags.tol_bc,
                      "override the scene boundary-condition tolerance");
    check->add_option("--seed", flags.seed, "seed for boundary sampling");

    std::string suite;
    std::uint64_t axiom_seed = 42;
    std::size_t trials = 1000;
    std::string dims = "1..8";
    CLI::App* axioms = app.add_subcommand(
        "axioms", "run a randomized property suite (table1..table7 or all)");
    axioms->add_option("suite", suite, "suite name")->required();
    axioms->add_option("--seed", axiom_seed, "base seed (trial t uses seed + t)");
    axioms->add_option("--trials", trials, "trials per property");
    axioms->add_option("--dims", dims, "dimension range A..B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (solve->parsed()) {
            return run_solve(scene_path, flags, triple_out);
        }
        if (check->parsed()) {
            return run_check(scene_path, triple_path, flags);
        }
        return run_axioms(suite, axiom_seed, trials, dims);
    } catch (const cxvec::UnsupportedError& e) {
        std::cerr << "unsupported physics: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const cxvec::DegenerateIncidenceError& e) {
        std::cerr << "unsupported physics: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const cxvec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
