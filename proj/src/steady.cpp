#include "kerrcoupler/steady.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kerrc {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void require_symmetric(const CouplerParams& p, const char* op) {
    if (!symmetric(p))
        throw std::invalid_argument(std::string(op) + " requires symmetric parameters");
}

// Cubic a I^3 + b I^2 + c I - e2 = 0 for the symmetric intensity.
struct CubicCoeffs {
    double a, b, c, e2;
};

CubicCoeffs cubic_coeffs(const CouplerParams& p, double eps_squared) {
    const double th = p.delta1 - p.J;
    return {4.0 * p.chi1 * p.chi1, 4.0 * th * p.chi1,
            p.gamma1 * p.gamma1 + th * th, eps_squared};
}

double cubic_eval(const CubicCoeffs& k, double I) {
    return ((k.a * I + k.b) * I + k.c) * I - k.e2;
}

double cubic_deriv(const CubicCoeffs& k, double I) {
    return (3.0 * k.a * I + 2.0 * k.b) * I + k.c;
}

std::vector<double> real_nonneg_roots(const CubicCoeffs& k) {
    if (k.a == 0.0) {
        // chi == 0: single linear-cavity root.
        return {k.e2 / k.c};
    }
    if (k.e2 == 0.0) {
        // I = 0 plus any positive roots of a I^2 + b I + c; the discriminant
        // b^2 - 4ac = -16 chi^2 gamma^2 < 0, so I = 0 is the only real root.
        return {0.0};
    }
    // Companion matrix of the monic cubic I^3 + p2 I^2 + p1 I + p0. The
    // coefficients span many orders of magnitude (chi^2 ~ 1e-12 against
    // eps^2 ~ 1e6), which the eigenvalue route handles robustly; a Newton
    // polish below restores full precision.
    const double p2 = k.b / k.a, p1 = k.c / k.a, p0 = -k.e2 / k.a;
    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(0, 2) = -p0;
    companion(1, 0) = 1.0;
    companion(1, 2) = -p1;
    companion(2, 1) = 1.0;
    companion(2, 2) = -p2;
    Eigen::EigenSolver<Eigen::Matrix3d> es(companion, false);

    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        cplx r = es.eigenvalues()(i);
        if (std::abs(r.imag()) >= 1e-8 * (1.0 + std::abs(r))) continue;
        double x = r.real();
        for (int it = 0; it < 3; ++it) {
            const double d = cubic_deriv(k, x);
            if (d == 0.0) break;
            x -= cubic_eval(k, x) / d;
        }
        if (x < 0.0 && x > -1e-12 * (1.0 + std::abs(x))) x = 0.0;
        if (x >= 0.0) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    if (roots.empty())
        throw std::runtime_error("cubic solver found no real non-negative root");
    return roots;
}

Eigen::Vector4d to_real(cplx a1, cplx a2) {
    return {a1.real(), a1.imag(), a2.real(), a2.imag()};
}

double rhs_residual(const CouplerParams& p, cplx a1, cplx a2) {
    auto [f1, f2] = mean_field_rhs(p, a1, a2);
    return std::max(std::abs(f1), std::abs(f2));
}

double residual_scale(const CouplerParams& p, cplx a1, cplx a2) {
    return std::max({std::abs(p.eps1), std::abs(p.eps2),
                     p.gamma1 * std::abs(a1), p.gamma2 * std::abs(a2), 1.0});
}

}  // namespace

std::pair<cplx, cplx> mean_field_rhs(const CouplerParams& p, cplx a1, cplx a2) {
    const cplx f1 = p.eps1 - (p.gamma1 + kI * p.delta1) * a1 -
                    2.0 * kI * p.chi1 * std::norm(a1) * a1 + kI * p.J * a2;
    const cplx f2 = p.eps2 - (p.gamma2 + kI * p.delta2) * a2 -
                    2.0 * kI * p.chi2 * std::norm(a2) * a2 + kI * p.J * a1;
    return {f1, f2};
}

std::vector<double> symmetric_intensities(const CouplerParams& params) {
    const CouplerParams p = validate(params);
    require_symmetric(p, "symmetric_intensities");
    const double e2 = std::norm(p.eps1);
    return real_nonneg_roots(cubic_coeffs(p, e2));
}

double closed_form_intensity(const CouplerParams& params) {
    const CouplerParams p = validate(params);
    require_symmetric(p, "closed_form_intensity");
    if (p.delta1 != p.J)
        throw std::invalid_argument("closed_form_intensity requires delta == J");

    const double g = p.gamma1, chi = p.chi1, e2 = std::norm(p.eps1);
    if (chi == 0.0) return e2 / (g * g);
    if (e2 == 0.0) return 0.0;

    // Radical solution of 4 chi^2 I^3 + gamma^2 I - eps^2 = 0, rearranged so
    // the difference u - v never cancels:
    //   v = sqrt(3) g^3,    u = 9 chi e2 + sqrt(3 g^6 + 81 chi^2 e2^2),
    //   u - v = 9 chi e2 + 81 chi^2 e2^2 / (sqrt(3 g^6 + 81 chi^2 e2^2) + v),
    //   I = 3^(1/3) (u - v)(u^(1/3) + v^(1/3))
    //       / [6 chi u^(1/3) (u^(2/3) + (uv)^(1/3) + v^(2/3))].
    const double g3 = g * g * g;
    const double v = std::sqrt(3.0) * g3;
    const double s = std::sqrt(3.0 * g3 * g3 + 81.0 * chi * chi * e2 * e2);
    const double u = 9.0 * chi * e2 + s;
    const double diff = 9.0 * chi * e2 + (81.0 * chi * chi * e2 * e2) / (s + v);
    const double w = std::cbrt(u), z = std::cbrt(v);
    return std::cbrt(3.0) * diff * (w + z) / (6.0 * chi * w * (w * w + w * z + z * z));
}

cplx steady_amplitude(const CouplerParams& params, double I) {
    const CouplerParams p = validate(params);
    require_symmetric(p, "steady_amplitude");
    return p.eps1 / (p.gamma1 + kI * (p.delta1 - p.J + 2.0 * p.chi1 * I));
}

int BistabilityAnalysis::root_count_at(double eps_squared) const {
    CouplerParams p = CouplerParams::symmetric_set(std::sqrt(eps_squared), gamma, delta, chi, J);
    return static_cast<int>(real_nonneg_roots(cubic_coeffs(p, eps_squared)).size());
}

BistabilityAnalysis bistability(const CouplerParams& params) {
    const CouplerParams p = validate(params);
    require_symmetric(p, "bistability");
    BistabilityAnalysis out;
    out.gamma = p.gamma1;
    out.delta = p.delta1;
    out.chi = p.chi1;
    out.J = p.J;
    const double jd = p.J - p.delta1;
    const double disc = jd * jd - 3.0 * p.gamma1 * p.gamma1;
    out.possible = p.chi1 != 0.0 && jd > 0.0 && disc > 0.0;
    if (out.possible) {
        const double s = std::sqrt(disc);
        out.lower_turning = (2.0 * jd - s) / (6.0 * p.chi1);
        out.upper_turning = (2.0 * jd + s) / (6.0 * p.chi1);
    }
    return out;
}

SteadyState symmetric_steady_state(const CouplerParams& params, double I) {
    const cplx a = steady_amplitude(params, I);
    SteadyState ss;
    ss.alpha1 = ss.alpha2 = a;
    ss.intensity1 = ss.intensity2 = std::norm(a);
    ss.residual = rhs_residual(params, a, a);
    return ss;
}

SteadyState general_steady_state(const CouplerParams& params, cplx guess1, cplx guess2,
                                 const GeneralSolveOptions& opts) {
    const CouplerParams p = validate(params);
    cplx a1 = guess1, a2 = guess2;

    auto newton = [&](cplx& x1, cplx& x2) -> bool {
        for (int it = 0; it < opts.newton_max_iter; ++it) {
            auto [f1, f2] = mean_field_rhs(p, x1, x2);
            const double res = std::max(std::abs(f1), std::abs(f2));
            if (res < opts.tol_scale * residual_scale(p, x1, x2)) return true;

            // Complex pair derivatives dF/da and dF/d(conj a) give the real
            // 4x4 Jacobian: dF = A da + B d(conj a) with
            //   A_11 = -(gamma + i delta) - 4 i chi |a|^2,  B_11 = -2 i chi a^2.
            const cplx A11 = -(p.gamma1 + kI * p.delta1) - 4.0 * kI * p.chi1 * std::norm(x1);
            const cplx B11 = -2.0 * kI * p.chi1 * x1 * x1;
            const cplx A22 = -(p.gamma2 + kI * p.delta2) - 4.0 * kI * p.chi2 * std::norm(x2);
            const cplx B22 = -2.0 * kI * p.chi2 * x2 * x2;
            const cplx A12 = kI * p.J, A21 = kI * p.J;

            Eigen::Matrix4d Jr = Eigen::Matrix4d::Zero();
            auto fill = [&Jr](int row, int col, cplx A, cplx B) {
                Jr(2 * row, 2 * col) = (A + B).real();
                Jr(2 * row, 2 * col + 1) = -(A - B).imag();
                Jr(2 * row + 1, 2 * col) = (A + B).imag();
                Jr(2 * row + 1, 2 * col + 1) = (A - B).real();
            };
            fill(0, 0, A11, B11);
            fill(0, 1, A12, 0.0);
            fill(1, 0, A21, 0.0);
            fill(1, 1, A22, B22);

            const Eigen::Vector4d rhs{f1.real(), f1.imag(), f2.real(), f2.imag()};
            const Eigen::Vector4d step = Jr.partialPivLu().solve(-rhs);
            if (!step.allFinite()) return false;

            double lam = 1.0;
            bool accepted = false;
            for (int h = 0; h <= opts.max_step_halvings; ++h) {
                const cplx t1 = x1 + lam * cplx(step(0), step(1));
                const cplx t2 = x2 + lam * cplx(step(2), step(3));
                if (rhs_residual(p, t1, t2) < res) {
                    x1 = t1;
                    x2 = t2;
                    accepted = true;
                    break;
                }
                lam *= 0.5;
            }
            if (!accepted) return false;  // stalled
        }
        return rhs_residual(p, x1, x2) < opts.tol_scale * residual_scale(p, x1, x2);
    };

    bool ok = opts.newton_max_iter > 0 && newton(a1, a2);

    if (!ok) {
        // Fall back to relaxing along the damped mean-field flow, then retry.
        const double gmin = std::min(p.gamma1, p.gamma2);
        const double t_total = opts.fallback_time < 0.0 ? 50.0 / gmin : opts.fallback_time;
        if (t_total > 0.0) {
            const double scale = std::max({p.gamma1 + std::abs(p.delta1), p.gamma2 + std::abs(p.delta2),
                                           std::abs(p.J), 1.0});
            const double dt = 0.02 / scale;
            const long steps = std::lround(t_total / dt);
            cplx x1 = a1, x2 = a2;
            auto rhs = [&p](cplx u1, cplx u2) { return mean_field_rhs(p, u1, u2); };
            for (long i = 0; i < steps; ++i) {
                auto [k1a, k1b] = rhs(x1, x2);
                auto [k2a, k2b] = rhs(x1 + 0.5 * dt * k1a, x2 + 0.5 * dt * k1b);
                auto [k3a, k3b] = rhs(x1 + 0.5 * dt * k2a, x2 + 0.5 * dt * k2b);
                auto [k4a, k4b] = rhs(x1 + dt * k3a, x2 + dt * k3b);
                x1 += dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
                x2 += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
                if (!std::isfinite(x1.real()) || !std::isfinite(x2.real())) break;
            }
            if (std::isfinite(x1.real()) && std::isfinite(x2.real())) {
                a1 = x1;
                a2 = x2;
                ok = opts.newton_max_iter > 0 ? newton(a1, a2)
                                              : rhs_residual(p, a1, a2) <
                                                    opts.tol_scale * residual_scale(p, a1, a2);
            }
        }
    }

    const double res = rhs_residual(p, a1, a2);
    if (!ok)
        throw ConvergenceError("steady-state solver did not converge (best residual " +
                                   std::to_string(res) + ")",
                               res);

    SteadyState ss;
    ss.alpha1 = a1;
    ss.alpha2 = a2;
    ss.intensity1 = std::norm(a1);
    ss.intensity2 = std::norm(a2);
    ss.residual = res;
    return ss;
}

std::pair<cplx, cplx> sum_difference(const SteadyState& ss) {
    return {ss.alpha1 + ss.alpha2, ss.alpha1 - ss.alpha2};
}

}  // namespace kerrc
