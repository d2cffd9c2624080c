#include "stefanlab/phase_plane.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "stefanlab/numerics.hpp"

namespace stefanlab {

using std::numbers::pi;

double WaveNonlinearity::operator()(double q) const {
    return nu * q - q * q + c * u_fixed * q / (u_fixed + m * q);
}

WaveNonlinearity make_wave_nonlinearity(const ModelParams& p) {
    const CoexistenceState eq = coexistence_state(p);
    return WaveNonlinearity{eq.u_star, p.nu, p.c, p.m, p.d, eq.v_star};
}

namespace {

double integral_f(const WaveNonlinearity& w, double a, double b) {
    return num::integrate([&](double q) { return w(q); }, a, b, 1e-10, 1e-15);
}

void check_eta(const WaveNonlinearity& w, double eta) {
    const double es = eta_star(w);
    if (!(eta > 0.0) || !(eta < es))
        throw precondition_error("eta must lie in (0, eta*)");
}

}  // namespace

double eta_star(const WaveNonlinearity& w) {
    const double total = integral_f(w, 0.0, w.theta);
    if (!(total > 0.0))
        throw numerical_error("eta_star: integral of f over (0, theta) not positive");
    return std::sqrt(2.0 / w.d * total);
}

double q_eta(const WaveNonlinearity& w, double eta) {
    check_eta(w, eta);
    const double target = 0.5 * eta * eta * w.d;
    return num::bisect(
        [&](double q) { return integral_f(w, 0.0, q) - target; }, 0.0, w.theta,
        1e-12, 300);
}

double z_eta(const WaveNonlinearity& w, double eta) {
    check_eta(w, eta);
    const double qn = q_eta(w, eta);
    const double f_end = w(qn);
    // r = qn sin^2(theta) removes the inverse-square-root singularity at
    // r = qn; near the endpoint the inner integral is replaced by its
    // midpoint-rule form to avoid cancellation.
    auto integrand = [&](double th) {
        const double s = std::sin(th);
        const double r = qn * s * s;
        double inner;
        if (qn - r < 1e-9 * qn) {
            inner = w(0.5 * (r + qn)) * (qn - r);
        } else {
            inner = integral_f(w, r, qn);
        }
        const double big_w = 2.0 / w.d * inner;
        if (big_w <= 0.0) {
            // only reachable by roundoff at the endpoint itself
            return std::sqrt(2.0 * w.d * qn / f_end) * s;
        }
        return qn * std::sin(2.0 * th) / std::sqrt(big_w);
    };
    return num::integrate(integrand, 0.0, 0.5 * pi, 1e-8, 1e-13);
}

namespace {

struct Crossing {
    std::array<double, 2> y;
    double z;
};

/// Refines the zero of component `comp` between the pre-step state and a
/// step of size dz_hi (where the component has changed sign), using
/// bisection on the substep length.
template <class F>
Crossing refine_crossing(const F& f, std::array<double, 2> y0, double z0,
                         double dz_hi, int comp, double target) {
    // The interval is one accepted adaptive step, so fixed-step RK4 over a
    // few substeps matches the integrator's accuracy.
    auto eval = [&](double dz) {
        std::array<double, 2> y = y0;
        const int substeps = 8;
        const double h = dz / substeps;
        for (int i = 0; i < substeps; ++i) {
            const auto k1 = f(y);
            const std::array<double, 2> y2{y[0] + 0.5 * h * k1[0],
                                           y[1] + 0.5 * h * k1[1]};
            const auto k2 = f(y2);
            const std::array<double, 2> y3{y[0] + 0.5 * h * k2[0],
                                           y[1] + 0.5 * h * k2[1]};
            const auto k3 = f(y3);
            const std::array<double, 2> y4{y[0] + h * k3[0], y[1] + h * k3[1]};
            const auto k4 = f(y4);
            y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
            y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        }
        return y;
    };
    double lo = 0.0, hi = dz_hi;
    std::array<double, 2> y_hi = eval(hi);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, z0); ++it) {
        const double mid = 0.5 * (lo + hi);
        const std::array<double, 2> y_mid = eval(mid);
        if ((y_mid[comp] - target > 0.0) == (y0[comp] - target > 0.0)) {
            lo = mid;
        } else {
            hi = mid;
            y_hi = y_mid;
        }
        if (std::abs(y_hi[comp] - target) < 1e-13) break;
    }
    Crossing c;
    c.y = y_hi;
    c.z = z0 + hi;
    return c;
}

}  // namespace

WaveProfile finite_wave(const WaveNonlinearity& w, double s, double eta) {
    if (s < 0.0) throw precondition_error("finite_wave: s must be >= 0");
    check_eta(w, eta);

    auto rhs = [&](const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], (s * y[1] - w(y[0])) / w.d};
    };
    const double z_star = 0.5 * pi * std::sqrt(w.d / w.slope_at_zero());
    const double z_horizon = 200.0 * z_star;

    WaveProfile prof;
    prof.s = s;
    prof.eta = eta;
    std::array<double, 2> y{0.0, eta};
    double z = 0.0, dz = 1e-4 * z_star;
    prof.z.push_back(z);
    prof.q.push_back(y[0]);
    prof.p.push_back(y[1]);
    while (true) {
        const std::array<double, 2> y_prev = y;
        const double z_prev = z;
        if (!num::rk45_step(rhs, y, z, dz)) continue;
        if (y[1] <= 0.0) {
            const Crossing c =
                refine_crossing(rhs, y_prev, z_prev, z - z_prev, 1, 0.0);
            prof.z.push_back(c.z);
            prof.q.push_back(c.y[0]);
            prof.p.push_back(0.0);
            prof.q_end = c.y[0];
            prof.z_end = c.z;
            return prof;
        }
        prof.z.push_back(z);
        prof.q.push_back(y[0]);
        prof.p.push_back(y[1]);
        if (z > z_horizon)
            throw numerical_error("finite_wave: no finite wave for these inputs");
    }
}

namespace {

/// Landing position of the shooting trajectory d v'' = -f(v), v(0) = q0,
/// v'(0) = 0: the first x where v hits zero. Optionally stores the profile.
double landing_position(const WaveNonlinearity& w, double q0, double horizon,
                        BvpSolution* out) {
    auto rhs = [&](const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -w(y[0]) / w.d};
    };
    std::array<double, 2> y{q0, 0.0};
    double x = 0.0, dx = 1e-4 * horizon;
    if (out) {
        out->x.assign(1, 0.0);
        out->v.assign(1, q0);
        out->q0 = q0;
    }
    while (true) {
        const std::array<double, 2> y_prev = y;
        const double x_prev = x;
        if (!num::rk45_step(rhs, y, x, dx)) continue;
        if (y[0] <= 0.0) {
            const Crossing c = refine_crossing(rhs, y_prev, x_prev, x - x_prev, 0, 0.0);
            if (out) {
                out->x.push_back(c.z);
                out->v.push_back(0.0);
            }
            return c.z;
        }
        if (out) {
            out->x.push_back(x);
            out->v.push_back(y[0]);
        }
        if (x > horizon) return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

std::optional<BvpSolution> solve_bvp_critical(const WaveNonlinearity& w,
                                              double big_z) {
    if (!(big_z > 0.0)) throw precondition_error("solve_bvp_critical: Z must be > 0");
    const double z_star = 0.5 * pi * std::sqrt(w.d / w.slope_at_zero());
    const double horizon = std::max(50.0 * z_star, 10.0 * big_z);

    // The landing position decreases toward Z* as the shooting height
    // shrinks; walk a geometric ladder down from theta to find a bracket.
    double hi_q = w.theta * (1.0 - 1e-3);
    double hi_land = landing_position(w, hi_q, horizon, nullptr);
    if (hi_land < big_z) return std::nullopt;  // Z above every tested length
    double lo_q = hi_q, lo_land = hi_land;
    bool bracketed = false;
    for (int k = 0; k < 60; ++k) {
        lo_q *= 0.5;
        lo_land = landing_position(w, lo_q, horizon, nullptr);
        if (lo_land <= big_z) {
            bracketed = true;
            break;
        }
        hi_q = lo_q;
    }
    if (!bracketed) return std::nullopt;  // every landing exceeds Z: Z <= Z*

    // Bisection on the shooting height until the landing matches Z.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo_q + hi_q);
        const double land = landing_position(w, mid, horizon, nullptr);
        if (std::abs(land - big_z) <= 1e-10 || hi_q - lo_q < 1e-16 * w.theta) {
            BvpSolution sol;
            landing_position(w, mid, horizon, &sol);
            return sol;
        }
        if (land > big_z)
            hi_q = mid;
        else
            lo_q = mid;
    }
    BvpSolution sol;
    landing_position(w, 0.5 * (lo_q + hi_q), horizon, &sol);
    return sol;
}

namespace {

WaveSamples monotone_front(double growth, double diffusivity, double s) {
    // Backward integration from the unstable manifold of the saturated state:
    // eigenvalue of the decaying mode at q = growth.
    const double r =
        (s - std::sqrt(s * s + 4.0 * diffusivity * growth)) / (2.0 * diffusivity);
    const double offset = 1e-6 * growth;
    std::array<double, 2> y{growth - offset, -r * offset};
    auto rhs_back = [&](const std::array<double, 2>& w) {
        return std::array<double, 2>{
            -w[1], -(s * w[1] - w[0] * (growth - w[0])) / diffusivity};
    };
    std::vector<double> tau_samples, q_samples, p_samples;
    double tau = 0.0, dtau = 1e-3;
    tau_samples.push_back(tau);
    q_samples.push_back(y[0]);
    p_samples.push_back(y[1]);
    while (true) {
        const std::array<double, 2> y_prev = y;
        const double tau_prev = tau;
        if (!num::rk45_step(rhs_back, y, tau, dtau)) continue;
        if (y[0] <= 1e-10) {
            const Crossing c =
                refine_crossing(rhs_back, y_prev, tau_prev, tau - tau_prev, 0, 1e-10);
            tau_samples.push_back(c.z);
            q_samples.push_back(c.y[0]);
            p_samples.push_back(c.y[1]);
            break;
        }
        tau_samples.push_back(tau);
        q_samples.push_back(y[0]);
        p_samples.push_back(y[1]);
        if (tau > 1e4)
            throw numerical_error("traveling_wave: front failed to reach zero");
    }
    // Reverse into forward z with the truncation point at the origin.
    WaveSamples out;
    const double tau_end = tau_samples.back();
    for (std::size_t i = tau_samples.size(); i-- > 0;) {
        out.z.push_back(tau_end - tau_samples[i]);
        out.q.push_back(q_samples[i]);
        out.p.push_back(p_samples[i]);
    }
    return out;
}

}  // namespace

TravelingWavePair traveling_wave(const ModelParams& p, double s) {
    const double s_min =
        2.0 * std::max(std::sqrt(p.lambda), std::sqrt(p.d * (p.nu + p.c)));
    if (!(s > s_min))
        throw precondition_error(
            "traveling_wave: s must exceed 2 max{sqrt(lambda), "
            "sqrt(d(nu+c))}; the profile would oscillate");
    TravelingWavePair pair;
    pair.s = s;
    pair.phi = monotone_front(p.lambda, 1.0, s);
    pair.psi = monotone_front(p.nu + p.c, p.d, s);
    return pair;
}

}  // namespace stefanlab
