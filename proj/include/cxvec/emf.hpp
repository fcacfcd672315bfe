#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cxvec/errors.hpp"
#include "cxvec/geometry.hpp"
#include "cxvec/rng.hpp"
#include "cxvec/scalar.hpp"
#include "cxvec/vector.hpp"

namespace cxvec::emf {

using RVec = RVector<double>;
using CVec = CVector<double>;

/// Electric and magnetic field at one point of space-time.
using FieldSample = std::pair<CVec, CVec>;

/// An electromagnetic field: point -> time -> complex^3 x complex^3.
using FieldSampler = std::function<FieldSample(const RVec&, double)>;

/// Monochromatic plane wave (k r, t) |-> (e^{-i(k.r - wt)} E, e^{-i(k.r - wt)} H).
struct PlaneWave {
    RVec k = rvector_zero<double>(3);     // wavevector, rad/m
    double omega = 0.0;                   // angular frequency, rad/s
    CVec E = cvector_zero<double>(3);     // electric amplitude
    CVec H = cvector_zero<double>(3);     // magnetic amplitude
};

/// A plane given by an anchor point and a unit normal.
struct Plane {
    RVec p0 = rvector_zero<double>(3);
    RVec normal = rvector_zero<double>(3);
};

/// Planar boundary between two media of refractive indices n1 (incidence
/// side) and n2. The unit normal points from medium 1 into medium 2, along
/// the incident propagation, so that k_i.n >= 0, k_r.n <= 0, k_t.n >= 0.
struct Interface {
    double n1 = 1.0;
    double n2 = 1.0;
    Plane plane;
};

/// Incident / reflected / transmitted waves plus the scale constants they
/// were solved against.
struct WaveTriple {
    PlaneWave incident;
    PlaneWave reflected;
    PlaneWave transmitted;
    double k0 = 0.0;    // free-space wavenumber, rad/m
    double eta0 = 0.0;  // impedance scale, ohms
};

/// map_triple f (x,y,z) = (f x, f y, f z)
template <typename F, typename T>
auto map_triple(F&& f, const std::tuple<T, T, T>& t) {
    return std::make_tuple(f(std::get<0>(t)), f(std::get<1>(t)), f(std::get<2>(t)));
}

// --- Wave evaluation ---------------------------------------------------------

inline FieldSample evaluate_plane_wave(const PlaneWave& w, const RVec& r, double t) {
    double phase = dot(w.k, r) - w.omega * t;
    Complex<double> factor = cis(-phase);
    return {cvector_smul(factor, w.E), cvector_smul(factor, w.H)};
}

inline FieldSampler as_sampler(const PlaneWave& w) {
    return [w](const RVec& r, double t) { return evaluate_plane_wave(w, r, t); };
}

inline FieldSampler superpose(FieldSampler f1, FieldSampler f2) {
    return [f1 = std::move(f1), f2 = std::move(f2)](const RVec& r, double t) {
        FieldSample a = f1(r, t);
        FieldSample b = f2(r, t);
        return FieldSample{cvector_add(a.first, b.first),
                           cvector_add(a.second, b.second)};
    };
}

// --- Validity predicates -----------------------------------------------------

namespace detail {

inline double orthogonality_residual(const CVec& a, const CVec& b) {
    return modulus(cdot(a, b)) / std::max(1.0, cnorm(a) * cnorm(b));
}

inline void require_unit(const RVec& n, const char* who) {
    if (n.dim() != 3 || std::fabs(norm(n) - 1.0) > 1e-9) {
        throw UsageError(std::string(who) + ": normal must be a unit 3-vector");
    }
}

/// Max componentwise difference relative to the larger field magnitude.
inline double field_residual(const CVec& a, const CVec& b) {
    double worst = 0.0;
    for (std::size_t i = 1; i <= a.dim(); ++i) {
        worst = std::max(worst, modulus(a(i) - b(i)));
    }
    double inf_a = 0.0;
    double inf_b = 0.0;
    for (std::size_t i = 1; i <= a.dim(); ++i) {
        inf_a = std::max(inf_a, modulus(a(i)));
        inf_b = std::max(inf_b, modulus(b(i)));
    }
    return worst / std::max({1.0, inf_a, inf_b});
}

} // namespace detail

/// Worst E/H orthogonality residual of a field over the given samples.
inline double emf_validity_residual(const FieldSampler& f,
                                    const std::vector<std::pair<RVec, double>>& samples) {
    if (samples.empty()) {
        throw UsageError("is_valid_emf: sample list must be nonempty");
    }
    double worst = 0.0;
    for (const auto& [r, t] : samples) {
        FieldSample s = f(r, t);
        worst = std::max(worst, detail::orthogonality_residual(s.first, s.second));
    }
    return worst;
}

/// Constraint: the electric and magnetic fields are orthogonal at every
/// sampled point and time.
inline bool is_valid_emf(const FieldSampler& f,
                         const std::vector<std::pair<RVec, double>>& samples,
                         double tol) {
    return emf_validity_residual(f, samples) <= tol;
}

/// Worst orthogonality residual among E.k, H.k, E.H (1 when a structural
/// clause like omega > 0 or k != 0 fails).
inline double wave_validity_residual(const PlaneWave& w) {
    if (!(w.omega > 0.0) || w.k == rvector_zero<double>(3)) {
        return 1.0;
    }
    CVec kc = vector_to_cvector(w.k);
    return std::max({detail::orthogonality_residual(w.E, kc),
                     detail::orthogonality_residual(w.H, kc),
                     detail::orthogonality_residual(w.E, w.H)});
}

/// Constraint: omega > 0, k != 0, and E, H, k pairwise orthogonal.
inline bool is_valid_wave(const PlaneWave& w, double tol) {
    return wave_validity_residual(w) <= tol;
}

inline bool is_valid_interface(const Interface& i) {
    if (!(i.n1 > 0.0) || !(i.n2 > 0.0)) {
        return false;
    }
    if (i.plane.p0.dim() != 3 || i.plane.normal.dim() != 3) {
        return false;
    }
    for (std::size_t c = 1; c <= 3; ++c) {
        if (!std::isfinite(i.plane.p0(c)) || !std::isfinite(i.plane.normal(c))) {
            return false;
        }
    }
    return std::fabs(norm(i.plane.normal) - 1.0) <= 1e-9;
}

/// Residual of the boundary conditions n x E1 = n x E2, n x H1 = n x H2 at
/// one plane point and time.
inline double boundary_residual(const FieldSampler& f1, const FieldSampler& f2,
                                const RVec& n, const RVec& p, double t) {
    detail::require_unit(n, "boundary_conditions");
    CVec nc = vector_to_cvector(n);
    FieldSample a = f1(p, t);
    FieldSample b = f2(p, t);
    return std::max(detail::field_residual(ccross(nc, a.first), ccross(nc, b.first)),
                    detail::field_residual(ccross(nc, a.second), ccross(nc, b.second)));
}

inline bool boundary_conditions(const FieldSampler& f1, const FieldSampler& f2,
                                const RVec& n, const RVec& p, double t, double tol) {
    return boundary_residual(f1, f2, n, p, t) <= tol;
}

// --- Mirror symmetry and the incidence basis ---------------------------------

/// The mirror image of u about the axis w: 2 (u.w) w - u.
inline RVec mirror_about(const RVec& u, const RVec& w) {
    return rvector_sub(rvector_smul(2.0 * dot(u, w), w), u);
}

inline double symmetry_residual(const RVec& u, const RVec& v, const RVec& w) {
    detail::require_unit(w, "are_sym_wrt");
    return norm(rvector_sub(v, mirror_about(u, w))) / std::max(1.0, norm(u));
}

/// u and v are symmetric with respect to the unit axis w.
inline bool are_sym_wrt(const RVec& u, const RVec& v, const RVec& w, double tol) {
    return symmetry_residual(u, v, w) <= tol;
}

/// Orthonormal right-handed triple with y, z spanning the plane of
/// incidence and x normal to it.
struct IncidentBasis {
    RVec x = rvector_zero<double>(3);
    RVec y = rvector_zero<double>(3);
    RVec z = rvector_zero<double>(3);
};

/// x = normalize(k_i x n), z = n, y = z x x. At normal incidence any plane
/// through n works; x is then fixed deterministically by Gram-Schmidt of
/// the first canonical direction not parallel to n.
inline IncidentBasis incident_basis(const PlaneWave& w_i, const Interface& iface) {
    const RVec& n = iface.plane.normal;
    detail::require_unit(n, "incident_basis");
    RVec c = cross(w_i.k, n);
    RVec x = rvector_zero<double>(3);
    double cn = norm(c);
    if (cn > 1e-12 * norm(w_i.k)) {
        x = rvector_smul(1.0 / cn, c);
    } else {
        RVec e = rvector_zero<double>(3);
        e(std::fabs(n(1)) <= 0.9 ? 1 : 2) = 1.0;
        RVec tangential = rvector_sub(e, rvector_smul(dot(e, n), n));
        x = rvector_smul(1.0 / norm(tangential), tangential);
    }
    IncidentBasis basis;
    basis.x = x;
    basis.z = n;
    basis.y = cross(n, x);
    return basis;
}

// --- Interface solver ----------------------------------------------------------

/// Incidence geometry shared by the solver and the report writer.
struct TripleAngles {
    double theta_i = 0.0;
    double theta_r = 0.0;
    double theta_t = 0.0;
};

inline TripleAngles incidence_angles(const WaveTriple& tr, const Interface& iface) {
    const RVec& n = iface.plane.normal;
    auto angle_to = [&n](const RVec& k, double sign) {
        double c = sign * dot(k, n) / norm(k);
        return std::acos(std::clamp(c, -1.0, 1.0));
    };
    return {angle_to(tr.incident.k, 1.0), angle_to(tr.reflected.k, -1.0),
            angle_to(tr.transmitted.k, 1.0)};
}

/// Reflected and transmitted amplitude ratios with the anchor-point phase
/// factored out; real for triples built by solve_interface.
inline std::pair<Complex<double>, Complex<double>>
te_amplitude_ratios(const WaveTriple& tr, const Interface& iface) {
    Complex<double> e2 = cx(cnorm2(tr.incident.E));
    if (e2.re == 0.0) {
        // degenerate triple; the nonzero-amplitude check reports it
        return {cx(0.0), cx(0.0)};
    }
    const RVec& p0 = iface.plane.p0;
    double phi_i = dot(tr.incident.k, p0);
    double phi_r = dot(tr.reflected.k, p0);
    double phi_t = dot(tr.transmitted.k, p0);
    Complex<double> r = (cdot(tr.reflected.E, tr.incident.E) / e2) * cis(phi_i - phi_r);
    Complex<double> t = (cdot(tr.transmitted.E, tr.incident.E) / e2) * cis(phi_i - phi_t);
    return {r, t};
}

/// Solves the wave triple at a planar interface for a TE-polarized incident
/// wave: the reflected wavevector mirrors the incident one about the normal,
/// the transmitted one keeps the tangential component (Snell phase matching),
/// and the amplitudes carry the TE Fresnel coefficients
///   r = (n1 cos ti - n2 cos tt) / (n1 cos ti + n2 cos tt)
///   t = 2 n1 cos ti / (n1 cos ti + n2 cos tt)
/// aligned in phase at the plane anchor so the boundary conditions hold at
/// every plane point and time. H amplitudes follow H = (n/eta0) k^ x E.
inline WaveTriple solve_interface(const PlaneWave& incident, const Interface& iface,
                                  double k0, double eta0, double tol = 1e-9) {
    if (!is_valid_interface(iface)) {
        throw UsageError("solve_interface: invalid interface (need n1, n2 > 0 and a "
                         "finite plane with unit normal)");
    }
    if (!(k0 > 0.0) || !(eta0 > 0.0)) {
        throw UsageError("solve_interface: k0 and eta0 must be positive");
    }
    if (!is_valid_wave(incident, tol)) {
        throw UsageError("solve_interface: incident wave fails validity (omega > 0, "
                         "k != 0, E and H orthogonal to k and each other)");
    }
    const RVec& n = iface.plane.normal;
    double ki_norm = norm(incident.k);
    if (std::fabs(ki_norm - k0 * iface.n1) > tol * k0 * iface.n1) {
        throw UsageError("solve_interface: constraint 'norm ki = k0 n1' violated: |ki| = "
                         + std::to_string(ki_norm) + ", k0 n1 = "
                         + std::to_string(k0 * iface.n1));
    }

    double kn = dot(incident.k, n);
    if (std::fabs(kn) <= tol * ki_norm) {
        throw DegenerateIncidenceError("solve_interface: grazing incidence, k.n = 0");
    }
    if (kn < 0.0) {
        throw UsageError("solve_interface: constraint '0 <= ki.n' violated: the "
                         "incident wave propagates against the interface normal");
    }
    if (modulus(cdot(incident.E, vector_to_cvector(n)))
        > tol * std::max(1.0, cnorm(incident.E))) {
        throw UnsupportedError("solve_interface: incident E is not TE-polarized "
                               "(component along the interface normal)");
    }

    RVec k_tan = rvector_sub(incident.k, rvector_smul(kn, n));
    double cos_i = kn / ki_norm;
    double sin_i = norm(k_tan) / ki_norm;
    double sin_t = (iface.n1 / iface.n2) * sin_i;
    if (sin_t > 1.0 + tol) {
        throw UnsupportedError("solve_interface: total internal reflection, "
                               "(n1/n2) sin(theta_i) = " + std::to_string(sin_t)
                               + " > 1 (real-wavevector model only)");
    }
    sin_t = std::min(sin_t, 1.0);
    double cos_t = std::sqrt(1.0 - sin_t * sin_t);

    RVec k_r = rvector_sub(incident.k, rvector_smul(2.0 * kn, n));
    RVec k_t = rvector_add(k_tan, rvector_smul(k0 * iface.n2 * cos_t, n));

    double denom = iface.n1 * cos_i + iface.n2 * cos_t;
    double r = (iface.n1 * cos_i - iface.n2 * cos_t) / denom;
    double t = 2.0 * iface.n1 * cos_i / denom;

    // Align amplitude phases at the plane anchor: tangential wavevector
    // components agree, so once the phases match at p0 they match on the
    // whole plane for all times.
    const RVec& p0 = iface.plane.p0;
    double phi_i = dot(incident.k, p0);
    Complex<double> amp_r = cx(r) * cis(dot(k_r, p0) - phi_i);
    Complex<double> amp_t = cx(t) * cis(dot(k_t, p0) - phi_i);

    auto magnetic = [eta0](const RVec& k, const CVec& E, double n_medium) {
        CVec k_hat = vector_to_cvector(rvector_smul(1.0 / norm(k), k));
        return cvector_smul(cx(n_medium / eta0), ccross(k_hat, E));
    };

    WaveTriple triple;
    triple.incident = incident;
    triple.reflected.k = k_r;
    triple.reflected.omega = incident.omega;
    triple.reflected.E = cvector_smul(amp_r, incident.E);
    triple.reflected.H = magnetic(k_r, triple.reflected.E, iface.n1);
    triple.transmitted.k = k_t;
    triple.transmitted.omega = incident.omega;
    triple.transmitted.E = cvector_smul(amp_t, incident.E);
    triple.transmitted.H = magnetic(k_t, triple.transmitted.E, iface.n2);
    triple.k0 = k0;
    triple.eta0 = eta0;
    return triple;
}

// --- Law checkers --------------------------------------------------------------

namespace detail {

inline void require_checkable(const WaveTriple& tr, const Interface& iface,
                              const char* who) {
    if (!is_valid_interface(iface)) {
        throw UsageError(std::string(who) + ": invalid interface");
    }
    for (const PlaneWave* w : {&tr.incident, &tr.reflected, &tr.transmitted}) {
        if (w->k.dim() != 3 || w->E.dim() != 3 || w->H.dim() != 3
            || !(w->omega > 0.0) || w->k == rvector_zero<double>(3)) {
            throw UsageError(std::string(who) + ": triple has a malformed wave");
        }
    }
}

} // namespace detail

/// Law of reflection (theta_i = theta_r): -k_i and k_r are symmetric with
/// respect to the plane normal.
inline double reflection_residual(const WaveTriple& tr, const Interface& iface) {
    detail::require_checkable(tr, iface, "check_law_of_reflection");
    return symmetry_residual(rvector_neg(tr.incident.k), tr.reflected.k,
                             iface.plane.normal);
}

inline bool check_law_of_reflection(const WaveTriple& tr, const Interface& iface,
                                    double tol) {
    return reflection_residual(tr, iface) <= tol;
}

/// Law of the plane of incidence: all three wavevectors are orthogonal to
/// the x axis of the incident basis.
inline double plane_of_incidence_residual(const WaveTriple& tr,
                                          const Interface& iface) {
    detail::require_checkable(tr, iface, "check_plane_of_incidence");
    IncidentBasis basis = incident_basis(tr.incident, iface);
    auto residual = [&basis](const RVec& k) {
        return std::fabs(dot(k, basis.x)) / norm(k);
    };
    return std::max({residual(tr.incident.k), residual(tr.reflected.k),
                     residual(tr.transmitted.k)});
}

inline bool check_plane_of_incidence(const WaveTriple& tr, const Interface& iface,
                                     double tol) {
    return plane_of_incidence_residual(tr, iface) <= tol;
}

// --- Full constraint validation (report surface) --------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct CheckOptions {
    double tol_geometry = 1e-9;
    double tol_boundary = 1e-9;
    std::size_t plane_points = 10;
    std::size_t times = 5;
    std::uint64_t seed = 0;
};

/// Runs every named constraint and law check against a wave triple:
/// valid_emf, valid_waves, norms, boundary_conditions, law_of_reflection,
/// plane_of_incidence. Sampling is deterministic in opts.seed.
inline std::vector<CheckResult> check_wave_triple(const WaveTriple& tr,
                                                  const Interface& iface,
                                                  const CheckOptions& opts) {
    detail::require_checkable(tr, iface, "check_wave_triple");
    std::vector<CheckResult> results;
    Xoshiro256 rng(opts.seed);

    IncidentBasis basis = incident_basis(tr.incident, iface);
    double span = 10.0 / tr.k0;     // tangential sampling scale, ~10 rad of phase
    double t_span = 10.0 / tr.incident.omega;

    std::vector<std::pair<RVec, double>> samples;
    std::vector<std::pair<RVec, double>> plane_samples;
    for (std::size_t p = 0; p < std::max<std::size_t>(1, opts.plane_points); ++p) {
        RVec pt = rvector_add(iface.plane.p0,
                              rvector_add(rvector_smul(rng.uniform(-span, span), basis.x),
                                          rvector_smul(rng.uniform(-span, span), basis.y)));
        for (std::size_t q = 0; q < std::max<std::size_t>(1, opts.times); ++q) {
            plane_samples.emplace_back(pt, rng.uniform(0.0, t_span));
        }
        samples.emplace_back(pt, rng.uniform(0.0, t_span));
        // off-plane sample for the per-wave field validity
        samples.emplace_back(rvector_add(pt, rvector_smul(rng.uniform(-span, span),
                                                          basis.z)),
                             rng.uniform(0.0, t_span));
    }

    // Constraint: each field keeps E orthogonal to H everywhere.
    {
        double worst = std::max({emf_validity_residual(as_sampler(tr.incident), samples),
                                 emf_validity_residual(as_sampler(tr.reflected), samples),
                                 emf_validity_residual(as_sampler(tr.transmitted), samples)});
        results.push_back({"valid_emf", worst <= opts.tol_geometry, worst,
                           opts.tol_geometry});
    }

    // Constraint: each wave is a valid monochromatic plane wave.
    {
        double worst = std::max({wave_validity_residual(tr.incident),
                                 wave_validity_residual(tr.reflected),
                                 wave_validity_residual(tr.transmitted)});
        results.push_back({"valid_waves", worst <= opts.tol_geometry, worst,
                           opts.tol_geometry});
    }

    // Constraint: wavevector signs and norms, impedance ratios, nonzero
    // incident/reflected amplitudes.
    {
        const RVec& n = iface.plane.normal;
        double worst = 0.0;
        bool pass = true;
        auto norm_clause = [&](double have, double want) {
            worst = std::max(worst, std::fabs(have - want) / want);
        };
        norm_clause(norm(tr.incident.k), tr.k0 * iface.n1);
        norm_clause(norm(tr.reflected.k), tr.k0 * iface.n1);
        norm_clause(norm(tr.transmitted.k), tr.k0 * iface.n2);

        auto impedance_clause = [&](const PlaneWave& w, double n_medium) {
            double want = cnorm(w.E) * n_medium / tr.eta0;
            double scale = std::max(want, cnorm(w.H));
            if (scale > 0.0) {
                worst = std::max(worst, std::fabs(cnorm(w.H) - want) / std::max(1.0, scale));
            }
        };
        impedance_clause(tr.incident, iface.n1);
        impedance_clause(tr.reflected, iface.n1);
        impedance_clause(tr.transmitted, iface.n2);

        double ki = norm(tr.incident.k);
        pass = pass && dot(tr.incident.k, n) >= -opts.tol_geometry * ki;
        pass = pass && dot(tr.reflected.k, n) <= opts.tol_geometry * ki;
        pass = pass && dot(tr.transmitted.k, n) >= -opts.tol_geometry * ki;
        pass = pass && cnorm(tr.incident.E) > 0.0 && cnorm(tr.reflected.E) > 0.0;
        pass = pass && worst <= opts.tol_geometry;
        results.push_back({"norms", pass, worst, opts.tol_geometry});
    }

    // Boundary conditions: (incident + reflected) against transmitted on
    // sampled plane points and times.
    {
        FieldSampler side1 = superpose(as_sampler(tr.incident), as_sampler(tr.reflected));
        FieldSampler side2 = as_sampler(tr.transmitted);
        double worst = 0.0;
        for (const auto& [pt, time] : plane_samples) {
            worst = std::max(worst, boundary_residual(side1, side2,
                                                      iface.plane.normal, pt, time));
        }
        results.push_back({"boundary_conditions", worst <= opts.tol_boundary, worst,
                           opts.tol_boundary});
    }

    {
        double res = reflection_residual(tr, iface);
        results.push_back({"law_of_reflection", res <= opts.tol_geometry, res,
                           opts.tol_geometry});
    }
    {
        double res = plane_of_incidence_residual(tr, iface);
        results.push_back({"plane_of_incidence", res <= opts.tol_geometry, res,
                           opts.tol_geometry});
    }
    return results;
}

} // namespace cxvec::emf
