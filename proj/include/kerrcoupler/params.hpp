#pragma once

#include <complex>
#include <vector>

namespace kerrc {

// Physical parameters of the driven two-mode Kerr coupler. All rates are in
// units of gamma1 (the canonical runs set gamma1 = 1); frequencies elsewhere
// in the library use the same unit.
struct CouplerParams {
    std::complex<double> eps1{0.0, 0.0};  // pump amplitude, mode 1 (sqrt(photons)/time)
    std::complex<double> eps2{0.0, 0.0};  // pump amplitude, mode 2
    double gamma1 = 1.0;                  // cavity damping rate, mode 1 (> 0)
    double gamma2 = 1.0;                  // cavity damping rate, mode 2 (> 0)
    double delta1 = 0.0;                  // cavity detuning, mode 1
    double delta2 = 0.0;                  // cavity detuning, mode 2
    double chi1 = 0.0;                    // Kerr nonlinearity, mode 1
    double chi2 = 0.0;                    // Kerr nonlinearity, mode 2
    double J = 0.0;                       // evanescent coupling rate

    // Convenience constructor for the symmetric case used throughout.
    static CouplerParams symmetric_set(std::complex<double> eps, double gamma,
                                       double delta, double chi, double J);
};

// Returns params unchanged if every invariant holds; otherwise throws
// std::invalid_argument naming every violated field, e.g.
// "gamma1 must be positive".
CouplerParams validate(const CouplerParams& p);

// True iff eps1==eps2, gamma1==gamma2, delta1==delta2 and chi1==chi2,
// all compared exactly: symmetry is a modeling choice, not a numerical
// accident.
bool symmetric(const CouplerParams& p);

// Exchange of the mode labels 1 <-> 2 (leaves J fixed).
CouplerParams swap_modes(const CouplerParams& p);

// Strictly increasing finite analysis frequencies, in units of gamma1.
struct FrequencyGrid {
    std::vector<double> omega;

    // Throws std::invalid_argument unless strictly increasing and finite.
    explicit FrequencyGrid(std::vector<double> values);

    // n evenly spaced points covering [lo, hi] inclusive (n >= 2).
    static FrequencyGrid linspace(double lo, double hi, int n);
};

}  // namespace kerrc
