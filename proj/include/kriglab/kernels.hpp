#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "kriglab/common.hpp"

namespace kriglab {

enum class KernelFamily { gaussian, exponential, matern };

std::string to_string(KernelFamily family);

// Stationary covariance k(x, y) = k(x - y) with k(0) = s2.
//
//   gaussian:     s2 * exp(-alpha * |x-y|^2)
//   exponential:  s2 * exp(-alpha * |x-y|^beta),  0 < beta < 2
//   matern:       s2 * 2^(1-nu)/Gamma(nu) * t^nu * K_nu(t),
//                 t = sqrt(2 nu) |x-y| / rho
//
// Construct through the named factories; they validate parameter ranges.
struct Kernel {
    KernelFamily family = KernelFamily::gaussian;
    double s2 = 1.0;
    double alpha = 1.0;  // gaussian, exponential
    double beta = 1.0;   // exponential only
    double nu = 1.5;     // matern only
    double rho = 1.0;    // matern only
    int dim = 1;

    static Kernel gaussian(double s2, double alpha, int dim);
    static Kernel exponential(double s2, double alpha, double beta, int dim);
    static Kernel matern(double s2, double nu, double rho, int dim);
};

// Flat key-value form used by configs and the CLI; keys that do not apply
// to the family are absent on write and rejected on read.
std::map<std::string, std::string> kernel_to_kv(const Kernel& k);
Kernel kernel_from_kv(const std::map<std::string, std::string>& kv);

namespace detail {

// Scaled Matern profile 2^(1-nu)/Gamma(nu) * t^nu * K_nu(t) on t >= 0,
// valued 1 at t = 0.  Works for any real scalar type boost.math supports.
template <typename Scalar>
Scalar matern_profile(Scalar t, double nu) {
    using std::exp;
    using std::log;
    if (t <= 0) return Scalar(1);
    // 1 - profile(t) = O(t^min(2nu,2)) near zero; once that deviation is
    // below working precision the limit is the exact answer and evaluating
    // K_nu there would only risk overflow.
    const double td = static_cast<double>(t);
    const int digits10 = std::numeric_limits<Scalar>::digits10;
    if (std::min(2.0 * nu, 2.0) * std::log10(td) < -(digits10 + 4.0))
        return Scalar(1);
    try {
        const Scalar lead = exp(Scalar((1.0 - nu) * std::log(2.0)) -
                                Scalar(boost::math::lgamma(nu)) + Scalar(nu) * log(t));
        const Scalar val = lead * boost::math::cyl_bessel_k(Scalar(nu), t);
        if (!(boost::math::isfinite)(val))
            throw numeric_error("matern kernel: evaluation overflowed; nu is out of the "
                                "practical range for this precision");
        return val;
    } catch (const std::overflow_error&) {
        throw numeric_error("matern kernel: Bessel overflow; nu is out of the practical "
                            "range for this precision");
    }
}

template <typename Scalar, typename DerivedA, typename DerivedB>
Scalar kernel_eval_t(const Kernel& k, const Eigen::MatrixBase<DerivedA>& x,
                     const Eigen::MatrixBase<DerivedB>& y) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    if (x.size() != k.dim || y.size() != k.dim)
        throw std::invalid_argument("kernel_eval: point dimension does not match kernel dim");
    const Scalar r2 = (x.derived().template cast<Scalar>() -
                       y.derived().template cast<Scalar>())
                          .squaredNorm();
    switch (k.family) {
        case KernelFamily::gaussian:
            return Scalar(k.s2) * exp(-Scalar(k.alpha) * r2);
        case KernelFamily::exponential: {
            if (r2 == Scalar(0)) return Scalar(k.s2);
            const Scalar r = sqrt(r2);
            return Scalar(k.s2) * exp(-Scalar(k.alpha) * pow(r, Scalar(k.beta)));
        }
        case KernelFamily::matern: {
            const Scalar t = sqrt(Scalar(2.0 * k.nu) * r2) / Scalar(k.rho);
            return Scalar(k.s2) * matern_profile(t, k.nu);
        }
    }
    throw std::logic_error("kernel_eval: unknown family");
}

// log S(|u|) for the radial spectral density; used by the minorant checker
// where the gaussian density underflows well before the grid ends.
double log_spectral_density_radial(const Kernel& k, double u_norm);

}  // namespace detail

double kernel_eval(const Kernel& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Spectral density S with the convention k(h) = (2 pi)^-d Int S(u) e^{i<u,h>} du:
//   gaussian:         s2 (pi/alpha)^(d/2) exp(-|u|^2 / (4 alpha))
//   exponential b=1:  s2 2^d pi^((d-1)/2) Gamma((d+1)/2) alpha (alpha^2+|u|^2)^-((d+1)/2)
//   matern:           s2 2^d pi^(d/2) Gamma(nu+d/2) (2nu)^nu / (Gamma(nu) rho^(2nu))
//                        * (2nu/rho^2 + |u|^2)^-(nu+d/2)
// Exponential with beta != 1 has no closed form and is rejected.
double spectral_density(const Kernel& k, const Eigen::VectorXd& u);

// Geometric |u| grid on which the polynomial-minorant condition is probed.
struct SpectralGrid {
    int n_points = 4096;
    double u_min = 1e-3;
    double u_max = 1e4;

    std::string describe() const;
};

// Result of probing S(u) (1 + |u|^r) >= C on a grid.  `satisfied` requires a
// strictly positive infimum that is not still decaying across the last two
// grid decades (the only failure mode for this catalog is tail decay).
struct SpectralReport {
    int r = 0;
    double c_estimate = 0.0;
    bool satisfied = false;
    std::string grid_spec;
};

SpectralReport check_polynomial_minorant(const Kernel& k, int r,
                                         const SpectralGrid& grid = {});

// Smallest r <= r_max for which the minorant check passes.
std::optional<int> min_poly_order(const Kernel& k, int r_max,
                                  const SpectralGrid& grid = {});

}  // namespace kriglab
