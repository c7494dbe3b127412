#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "kerrcoupler/params.hpp"

namespace kerrc {

// Classical fixed point of the noise-free mean-field equations.
struct SteadyState {
    std::complex<double> alpha1{0.0, 0.0};
    std::complex<double> alpha2{0.0, 0.0};
    double intensity1 = 0.0;  // |alpha1|^2
    double intensity2 = 0.0;  // |alpha2|^2
    double residual = 0.0;    // max norm of the mean-field RHS at the fixed point
};

// Raised when the general fixed-point solver fails to reach tolerance.
struct ConvergenceError : std::runtime_error {
    double best_residual;
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), best_residual(residual) {}
};

// Turning-point analysis of the symmetric steady-state cubic.
struct BistabilityAnalysis {
    bool possible = false;
    std::optional<double> lower_turning;  // smaller fold intensity
    std::optional<double> upper_turning;  // larger fold intensity

    // Number of real non-negative intensity roots at the given pump
    // intensity |eps|^2 (1 or 3, counting near-degenerate fold roots).
    int root_count_at(double eps_squared) const;

    double gamma = 1.0, delta = 0.0, chi = 0.0, J = 0.0;  // retained for queries
};

// All real non-negative roots I of
//   4 chi^2 I^3 + 4 (delta-J) chi I^2 + [gamma^2 + (delta-J)^2] I = |eps|^2,
// ascending, each with relative cubic residual < 1e-9. Root count is 1 or 3
// (fold-degenerate roots are kept with multiplicity). chi = 0 reduces to the
// single linear-cavity root. Requires symmetric(params).
std::vector<double> symmetric_intensities(const CouplerParams& params);

// Explicit radical solution of the cubic for delta == J (where it has exactly
// one real root). Evaluated in a cancellation-free rearrangement so that it
// agrees with the numeric cubic root to ~1e-15 relative even when
// 81 chi^2 eps^4 << 3 gamma^6. Requires symmetric(params) and delta == J.
double closed_form_intensity(const CouplerParams& params);

// Mode amplitude for a given intensity root:
//   alpha = eps / [gamma + i (delta - J + 2 chi I)].
// The complex pump phase carries through; |alpha|^2 == I to 1e-9 relative.
std::complex<double> steady_amplitude(const CouplerParams& params, double I);

// Fold analysis: bistability is possible iff J - delta > sqrt(3) gamma and
// chi != 0; the turning intensities are
//   r_{-,+} = [2(J-delta) -/+ sqrt((J-delta)^2 - 3 gamma^2)] / (6 chi) -- with
// the minus sign giving lower_turning. Requires symmetric(params).
BistabilityAnalysis bistability(const CouplerParams& params);

struct GeneralSolveOptions {
    int newton_max_iter = 200;
    int max_step_halvings = 40;
    double fallback_time = -1.0;  // < 0: default 50 / min(gamma)
    double tol_scale = 1e-10;     // residual < tol_scale * max(|eps_j|, gamma_j |alpha_j|)
};

// Fixed point of the general (possibly asymmetric) mean-field equations from
// an initial guess: damped Newton on the four real dimensions, falling back to
// long-time integration when Newton stalls. Throws ConvergenceError (with the
// best residual) if tolerance is not reached.
SteadyState general_steady_state(const CouplerParams& params,
                                 std::complex<double> guess1,
                                 std::complex<double> guess2,
                                 const GeneralSolveOptions& opts = {});

// Builds the SteadyState record for a symmetric intensity root.
SteadyState symmetric_steady_state(const CouplerParams& params, double I);

// Sum and difference amplitudes (alpha_p, alpha_m) = (a1 + a2, a1 - a2).
std::pair<std::complex<double>, std::complex<double>> sum_difference(const SteadyState& ss);

// Time derivative of (alpha1, alpha2) under the noise-free mean-field
// equations; shared by the solver, its ODE fallback, and tests.
std::pair<std::complex<double>, std::complex<double>> mean_field_rhs(
    const CouplerParams& params, std::complex<double> a1, std::complex<double> a2);

}  // namespace kerrc
