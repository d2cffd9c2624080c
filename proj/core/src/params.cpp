#include "stefanlab/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stefanlab/numerics.hpp"

namespace stefanlab {

void ModelParams::validate() const {
    const struct {
        const char* name;
        double value;
    } fields[] = {{"lambda", lambda}, {"b", b},     {"m", m},
                  {"d", d},           {"nu", nu},   {"c", c},
                  {"mu", mu},         {"rho", rho}, {"h0", h0}};
    for (const auto& f : fields) {
        if (!(f.value > 0.0) || !std::isfinite(f.value)) {
            throw precondition_error(std::string("model parameter '") + f.name +
                                     "' must be strictly positive");
        }
    }
}

double InitialData::sup_u0() const { return *std::max_element(u0.begin(), u0.end()); }
double InitialData::sup_v0() const { return *std::max_element(v0.begin(), v0.end()); }
double InitialData::integral_u0() const { return num::trapezoid(u0, dx()); }
double InitialData::integral_v0() const { return num::trapezoid(v0, dx()); }

namespace {
double interp(const std::vector<double>& w, double h0, double x) {
    if (x <= 0.0) return w.front();
    if (x >= h0) return w.back();
    const double dx = h0 / double(w.size() - 1);
    const double s = x / dx;
    const std::size_t i = std::min<std::size_t>(std::size_t(s), w.size() - 2);
    const double f = s - double(i);
    return (1.0 - f) * w[i] + f * w[i + 1];
}
}  // namespace

double InitialData::u0_at(double x) const { return interp(u0, h0, x); }
double InitialData::v0_at(double x) const { return interp(v0, h0, x); }

void InitialData::validate() const {
    if (u0.size() < 3 || u0.size() != v0.size())
        throw precondition_error("initial data needs >= 3 samples, equal counts");
    if (!(h0 > 0.0)) throw precondition_error("initial data: h0 must be positive");
    if (u0.back() != 0.0 || v0.back() != 0.0)
        throw precondition_error("initial data must vanish exactly at x = h0");
    for (std::size_t i = 0; i + 1 < u0.size(); ++i) {
        if (u0[i] < 0.0 || v0[i] < 0.0)
            throw precondition_error("initial data must be nonnegative");
    }
    // Neumann compatibility to within grid tolerance.
    const double tol = 2.0 * dx() * std::max(sup_u0(), sup_v0()) + 1e-12;
    if (std::abs(u0[1] - u0[0]) > tol || std::abs(v0[1] - v0[0]) > tol)
        throw precondition_error("initial data: slope at x = 0 must vanish");
}

InitialData make_cosine_init(const ModelParams& p, double amp_u, double amp_v,
                             std::size_t n_samples) {
    if (amp_u < 0.0 || amp_v < 0.0)
        throw precondition_error("initial amplitudes must be nonnegative");
    if (n_samples < 3) throw precondition_error("n_samples must be >= 3");
    InitialData init;
    init.h0 = p.h0;
    init.u0.resize(n_samples);
    init.v0.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double y = double(i) / double(n_samples - 1);
        const double w = std::cos(std::numbers::pi * 0.5 * y);
        init.u0[i] = amp_u * w;
        init.v0[i] = amp_v * w;
    }
    init.u0.back() = 0.0;
    init.v0.back() = 0.0;
    return init;
}

}  // namespace stefanlab
