#include "kerrcoupler/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kerrc {

CouplerParams CouplerParams::symmetric_set(std::complex<double> eps, double gamma,
                                           double delta, double chi, double J) {
    CouplerParams p;
    p.eps1 = p.eps2 = eps;
    p.gamma1 = p.gamma2 = gamma;
    p.delta1 = p.delta2 = delta;
    p.chi1 = p.chi2 = chi;
    p.J = J;
    return p;
}

CouplerParams validate(const CouplerParams& p) {
    std::string errs;
    auto add = [&errs](const std::string& msg) {
        if (!errs.empty()) errs += "; ";
        errs += msg;
    };
    auto check_finite = [&add](double v, const char* name) {
        if (!std::isfinite(v)) add(std::string(name) + " must be finite");
    };
    auto check_finite_c = [&add](std::complex<double> v, const char* name) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            add(std::string(name) + " must be finite");
    };

    check_finite_c(p.eps1, "eps1");
    check_finite_c(p.eps2, "eps2");
    check_finite(p.gamma1, "gamma1");
    check_finite(p.gamma2, "gamma2");
    check_finite(p.delta1, "delta1");
    check_finite(p.delta2, "delta2");
    check_finite(p.chi1, "chi1");
    check_finite(p.chi2, "chi2");
    check_finite(p.J, "J");
    if (std::isfinite(p.gamma1) && !(p.gamma1 > 0.0)) add("gamma1 must be positive");
    if (std::isfinite(p.gamma2) && !(p.gamma2 > 0.0)) add("gamma2 must be positive");

    if (!errs.empty()) throw std::invalid_argument(errs);
    return p;
}

bool symmetric(const CouplerParams& p) {
    return p.eps1 == p.eps2 && p.gamma1 == p.gamma2 && p.delta1 == p.delta2 &&
           p.chi1 == p.chi2;
}

CouplerParams swap_modes(const CouplerParams& p) {
    CouplerParams q = p;
    std::swap(q.eps1, q.eps2);
    std::swap(q.gamma1, q.gamma2);
    std::swap(q.delta1, q.delta2);
    std::swap(q.chi1, q.chi2);
    return q;
}

FrequencyGrid::FrequencyGrid(std::vector<double> values) : omega(std::move(values)) {
    if (omega.empty()) throw std::invalid_argument("frequency grid must be non-empty");
    double prev = -std::numeric_limits<double>::infinity();
    for (double w : omega) {
        if (!std::isfinite(w)) throw std::invalid_argument("frequency grid must be finite");
        if (!(w > prev)) throw std::invalid_argument("frequency grid must be strictly increasing");
        prev = w;
    }
}

FrequencyGrid FrequencyGrid::linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("frequency grid needs at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("frequency grid bounds must satisfy hi > lo");
    std::vector<double> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return FrequencyGrid(std::move(w));
}

}  // namespace kerrc
