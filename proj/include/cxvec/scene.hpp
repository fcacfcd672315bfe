#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxvec/emf.hpp"
#include "cxvec/errors.hpp"
#include "cxvec/geometry.hpp"
#include "cxvec/vector.hpp"

// JSON surface of the solver: interface scenes, solved wave triples and
// verification reports. Complex numbers are [re, im] pairs, vectors are
// 3-element arrays. Serialization goes through ordered maps so identical
// inputs produce byte-identical files.

namespace cxvec::io {

using json = nlohmann::ordered_json;

struct Scene {
    emf::Interface iface;
    emf::PlaneWave incident;   // H completed at load when omitted
    double k0 = 0.0;
    double eta0 = 0.0;
    double tol_geometry = 1e-9;
    double tol_boundary = 1e-9;
};

struct SolvedValues {
    emf::RVec k_r = rvector_zero<double>(3);
    emf::RVec k_t = rvector_zero<double>(3);
    double r_coeff = 0.0;
    double t_coeff = 0.0;
    double theta_i_deg = 0.0;
    double theta_r_deg = 0.0;
    double theta_t_deg = 0.0;
};

struct Provenance {
    std::uint64_t seed = 0;
    std::string tool_version;
    std::string scene_hash;
};

struct Report {
    SolvedValues solved;
    std::vector<emf::CheckResult> checks;
    Provenance provenance;
};

// --- low-level helpers --------------------------------------------------------

namespace detail {

inline const json& at(const json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw UsageError(context + ": missing field '" + key + "'");
    }
    return *it;
}

inline double number(const json& j, const char* key, const std::string& context) {
    const json& v = at(j, key, context);
    if (!v.is_number()) {
        throw UsageError(context + "." + key + ": expected a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw UsageError(context + "." + key + ": value is not finite");
    }
    return x;
}

inline RVector<double> rvec3(const json& j, const char* key,
                             const std::string& context) {
    const json& v = at(j, key, context);
    if (!v.is_array() || v.size() != 3) {
        throw UsageError(context + "." + key + ": expected an array of 3 numbers");
    }
    RVector<double> out = rvector_zero<double>(3);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v[i].is_number() || !std::isfinite(v[i].get<double>())) {
            throw UsageError(context + "." + key + "[" + std::to_string(i)
                             + "]: expected a finite number");
        }
        out(i + 1) = v[i].get<double>();
    }
    return out;
}

inline CVector<double> cvec3(const json& j, const char* key,
                             const std::string& context) {
    const json& v = at(j, key, context);
    if (!v.is_array() || v.size() != 3) {
        throw UsageError(context + "." + key
                         + ": expected an array of 3 [re, im] pairs");
    }
    CVector<double> out = cvector_zero<double>(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const json& pair = v[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number()
            || !pair[1].is_number()) {
            throw UsageError(context + "." + key + "[" + std::to_string(i)
                             + "]: expected a [re, im] pair");
        }
        double re = pair[0].get<double>();
        double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw UsageError(context + "." + key + "[" + std::to_string(i)
                             + "]: value is not finite");
        }
        out(i + 1) = Complex<double>{re, im};
    }
    return out;
}

inline json rvec3_json(const RVector<double>& v) {
    return json::array({v(1), v(2), v(3)});
}

inline json cvec3_json(const CVector<double>& v) {
    json out = json::array();
    for (std::size_t i = 1; i <= 3; ++i) {
        out.push_back(json::array({v(i).re, v(i).im}));
    }
    return out;
}

} // namespace detail

/// FNV-1a 64-bit hash, hex encoded; used to fingerprint scene files.
inline std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << bytes;
}

inline json parse_json(const std::string& bytes, const std::string& what) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) {
        // reparse with exceptions to surface the byte offset
        try {
            json reparsed = json::parse(bytes);
            (void)reparsed;
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError(what + ": " + e.what());
        }
        throw UsageError(what + ": malformed JSON");
    }
    return j;
}

// --- scenes --------------------------------------------------------------------

inline Scene scene_from_json(const json& j) {
    Scene s;
    const json& media = detail::at(j, "media", "scene");
    s.iface.n1 = detail::number(media, "n1", "scene.media");
    s.iface.n2 = detail::number(media, "n2", "scene.media");
    if (s.iface.n1 <= 0.0 || s.iface.n2 <= 0.0) {
        throw UsageError("scene.media: refractive indices must be positive");
    }

    const json& iface = detail::at(j, "interface", "scene");
    s.iface.plane.p0 = detail::rvec3(iface, "p0", "scene.interface");
    s.iface.plane.normal = detail::rvec3(iface, "normal", "scene.interface");
    if (std::fabs(norm(s.iface.plane.normal) - 1.0) > 1e-12) {
        throw UsageError("scene.interface.normal: must be a unit vector");
    }

    const json& constants = detail::at(j, "constants", "scene");
    s.k0 = detail::number(constants, "k0", "scene.constants");
    s.eta0 = detail::number(constants, "eta0", "scene.constants");
    if (s.k0 <= 0.0 || s.eta0 <= 0.0) {
        throw UsageError("scene.constants: k0 and eta0 must be positive");
    }

    if (j.contains("tolerances")) {
        const json& tols = j["tolerances"];
        s.tol_geometry = detail::number(tols, "geometry", "scene.tolerances");
        s.tol_boundary = detail::number(tols, "boundary", "scene.tolerances");
        if (s.tol_geometry <= 0.0 || s.tol_boundary <= 0.0) {
            throw UsageError("scene.tolerances: tolerances must be positive");
        }
    }

    const json& incident = detail::at(j, "incident", "scene");
    s.incident.k = detail::rvec3(incident, "k", "scene.incident");
    s.incident.omega = detail::number(incident, "omega", "scene.incident");
    s.incident.E = detail::cvec3(incident, "E", "scene.incident");
    if (!(s.incident.omega > 0.0)) {
        throw UsageError("scene.incident.omega: must be positive");
    }
    if (s.incident.k == rvector_zero<double>(3)) {
        throw UsageError("scene.incident.k: wavevector must be nonzero");
    }
    if (incident.contains("H")) {
        s.incident.H = detail::cvec3(incident, "H", "scene.incident");
    } else {
        // complete the magnetic amplitude: H = (n1/eta0) k^ x E
        CVector<double> k_hat =
            vector_to_cvector(rvector_smul(1.0 / norm(s.incident.k), s.incident.k));
        s.incident.H = cvector_smul(cx(s.iface.n1 / s.eta0),
                                    ccross(k_hat, s.incident.E));
    }
    if (!emf::is_valid_wave(s.incident, s.tol_geometry)) {
        throw UsageError("scene.incident: not a valid plane wave (E, H must be "
                         "orthogonal to k and to each other within the geometry "
                         "tolerance)");
    }
    return s;
}

inline json scene_to_json(const Scene& s) {
    json j;
    j["media"] = {{"n1", s.iface.n1}, {"n2", s.iface.n2}};
    j["interface"] = {{"p0", detail::rvec3_json(s.iface.plane.p0)},
                      {"normal", detail::rvec3_json(s.iface.plane.normal)}};
    j["incident"] = {{"k", detail::rvec3_json(s.incident.k)},
                     {"omega", s.incident.omega},
                     {"E", detail::cvec3_json(s.incident.E)},
                     {"H", detail::cvec3_json(s.incident.H)}};
    j["constants"] = {{"k0", s.k0}, {"eta0", s.eta0}};
    j["tolerances"] = {{"geometry", s.tol_geometry}, {"boundary", s.tol_boundary}};
    return j;
}

inline Scene load_scene(const std::string& path) {
    return scene_from_json(parse_json(read_file(path), "scene '" + path + "'"));
}

// --- wave triples ----------------------------------------------------------------

namespace detail {

inline json wave_json(const emf::PlaneWave& w) {
    return json{{"k", rvec3_json(w.k)},
                {"omega", w.omega},
                {"E", cvec3_json(w.E)},
                {"H", cvec3_json(w.H)}};
}

inline emf::PlaneWave wave_from_json(const json& j, const std::string& context) {
    emf::PlaneWave w;
    w.k = rvec3(j, "k", context);
    w.omega = number(j, "omega", context);
    w.E = cvec3(j, "E", context);
    w.H = cvec3(j, "H", context);
    return w;
}

} // namespace detail

inline json triple_to_json(const emf::WaveTriple& tr) {
    json j;
    j["k0"] = tr.k0;
    j["eta0"] = tr.eta0;
    j["incident"] = detail::wave_json(tr.incident);
    j["reflected"] = detail::wave_json(tr.reflected);
    j["transmitted"] = detail::wave_json(tr.transmitted);
    return j;
}

inline emf::WaveTriple triple_from_json(const json& j) {
    emf::WaveTriple tr;
    tr.k0 = detail::number(j, "k0", "triple");
    tr.eta0 = detail::number(j, "eta0", "triple");
    tr.incident = detail::wave_from_json(detail::at(j, "incident", "triple"),
                                         "triple.incident");
    tr.reflected = detail::wave_from_json(detail::at(j, "reflected", "triple"),
                                          "triple.reflected");
    tr.transmitted = detail::wave_from_json(detail::at(j, "transmitted", "triple"),
                                            "triple.transmitted");
    return tr;
}

inline emf::WaveTriple load_triple(const std::string& path) {
    return triple_from_json(parse_json(read_file(path), "triple '" + path + "'"));
}

// --- reports ----------------------------------------------------------------------

inline json report_to_json(const Report& r) {
    json j;
    j["solved"] = {{"k_r", detail::rvec3_json(r.solved.k_r)},
                   {"k_t", detail::rvec3_json(r.solved.k_t)},
                   {"r_coeff", r.solved.r_coeff},
                   {"t_coeff", r.solved.t_coeff},
                   {"theta_i_deg", r.solved.theta_i_deg},
                   {"theta_r_deg", r.solved.theta_r_deg},
                   {"theta_t_deg", r.solved.theta_t_deg}};
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"residual", c.residual},
                               {"tolerance", c.tolerance}});
    }
    j["provenance"] = {{"seed", r.provenance.seed},
                       {"tool_version", r.provenance.tool_version},
                       {"scene_hash", r.provenance.scene_hash}};
    return j;
}

inline Report report_from_json(const json& j) {
    Report r;
    const json& solved = detail::at(j, "solved", "report");
    r.solved.k_r = detail::rvec3(solved, "k_r", "report.solved");
    r.solved.k_t = detail::rvec3(solved, "k_t", "report.solved");
    r.solved.r_coeff = detail::number(solved, "r_coeff", "report.solved");
    r.solved.t_coeff = detail::number(solved, "t_coeff", "report.solved");
    r.solved.theta_i_deg = detail::number(solved, "theta_i_deg", "report.solved");
    r.solved.theta_r_deg = detail::number(solved, "theta_r_deg", "report.solved");
    r.solved.theta_t_deg = detail::number(solved, "theta_t_deg", "report.solved");

    const json& checks = detail::at(j, "checks", "report");
    if (!checks.is_array()) {
        throw UsageError("report.checks: expected an array");
    }
    for (const auto& c : checks) {
        emf::CheckResult cr;
        cr.name = detail::at(c, "name", "report.checks[]").get<std::string>();
        cr.pass = detail::at(c, "pass", "report.checks[]").get<bool>();
        cr.residual = detail::number(c, "residual", "report.checks[]");
        cr.tolerance = detail::number(c, "tolerance", "report.checks[]");
        r.checks.push_back(cr);
    }

    const json& prov = detail::at(j, "provenance", "report");
    r.provenance.seed = detail::at(prov, "seed", "report.provenance")
                            .get<std::uint64_t>();
    r.provenance.tool_version =
        detail::at(prov, "tool_version", "report.provenance").get<std::string>();
    r.provenance.scene_hash =
        detail::at(prov, "scene_hash", "report.provenance").get<std::string>();
    return r;
}

} // namespace cxvec::io
