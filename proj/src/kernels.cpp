#include "kriglab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace kriglab {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("kernel key '" + key + "': cannot parse number '" + s + "'");
    }
}

}  // namespace

std::string to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::gaussian: return "gaussian";
        case KernelFamily::exponential: return "exponential";
        case KernelFamily::matern: return "matern";
    }
    return "?";
}

Kernel Kernel::gaussian(double s2, double alpha, int dim) {
    require(s2 > 0, "gaussian kernel: s2 must be positive");
    require(alpha > 0, "gaussian kernel: alpha must be positive");
    require(dim >= 1, "gaussian kernel: dim must be >= 1");
    Kernel k;
    k.family = KernelFamily::gaussian;
    k.s2 = s2;
    k.alpha = alpha;
    k.dim = dim;
    return k;
}

Kernel Kernel::exponential(double s2, double alpha, double beta, int dim) {
    require(s2 > 0, "exponential kernel: s2 must be positive");
    require(alpha > 0, "exponential kernel: alpha must be positive");
    require(beta > 0 && beta < 2, "exponential kernel: beta must lie in (0, 2)");
    require(dim >= 1, "exponential kernel: dim must be >= 1");
    Kernel k;
    k.family = KernelFamily::exponential;
    k.s2 = s2;
    k.alpha = alpha;
    k.beta = beta;
    k.dim = dim;
    return k;
}

Kernel Kernel::matern(double s2, double nu, double rho, int dim) {
    require(s2 > 0, "matern kernel: s2 must be positive");
    require(nu > 0, "matern kernel: nu must be positive");
    require(rho > 0, "matern kernel: rho must be positive");
    require(dim >= 1, "matern kernel: dim must be >= 1");
    Kernel k;
    k.family = KernelFamily::matern;
    k.s2 = s2;
    k.nu = nu;
    k.rho = rho;
    k.dim = dim;
    return k;
}

std::map<std::string, std::string> kernel_to_kv(const Kernel& k) {
    std::map<std::string, std::string> kv;
    kv["family"] = to_string(k.family);
    kv["s2"] = fmt_double(k.s2);
    kv["dim"] = std::to_string(k.dim);
    switch (k.family) {
        case KernelFamily::gaussian:
            kv["alpha"] = fmt_double(k.alpha);
            break;
        case KernelFamily::exponential:
            kv["alpha"] = fmt_double(k.alpha);
            kv["beta"] = fmt_double(k.beta);
            break;
        case KernelFamily::matern:
            kv["nu"] = fmt_double(k.nu);
            kv["rho"] = fmt_double(k.rho);
            break;
    }
    return kv;
}

Kernel kernel_from_kv(const std::map<std::string, std::string>& kv) {
    auto get = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("kernel record: missing key '" + key + "'");
        return it->second;
    };
    const std::string& family = get("family");
    const double s2 = parse_double("s2", get("s2"));
    const double dim_d = parse_double("dim", get("dim"));
    const int dim = static_cast<int>(dim_d);
    require(dim == dim_d, "kernel record: dim must be an integer");

    std::map<std::string, std::string> allowed;
    Kernel k;
    if (family == "gaussian") {
        k = Kernel::gaussian(s2, parse_double("alpha", get("alpha")), dim);
        allowed = {{"family", ""}, {"s2", ""}, {"dim", ""}, {"alpha", ""}};
    } else if (family == "exponential") {
        k = Kernel::exponential(s2, parse_double("alpha", get("alpha")),
                                parse_double("beta", get("beta")), dim);
        allowed = {{"family", ""}, {"s2", ""}, {"dim", ""}, {"alpha", ""}, {"beta", ""}};
    } else if (family == "matern") {
        k = Kernel::matern(s2, parse_double("nu", get("nu")),
                           parse_double("rho", get("rho")), dim);
        allowed = {{"family", ""}, {"s2", ""}, {"dim", ""}, {"nu", ""}, {"rho", ""}};
    } else {
        throw std::invalid_argument("kernel record: unknown family '" + family + "'");
    }
    for (const auto& [key, value] : kv)
        if (!allowed.count(key))
            throw std::invalid_argument("kernel record: key '" + key +
                                        "' must be absent for family " + family);
    return k;
}

double kernel_eval(const Kernel& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return detail::kernel_eval_t<double>(k, x, y);
}

namespace detail {

double log_spectral_density_radial(const Kernel& k, double u) {
    const double d = k.dim;
    switch (k.family) {
        case KernelFamily::gaussian:
            return std::log(k.s2) + 0.5 * d * std::log(M_PI / k.alpha) -
                   u * u / (4.0 * k.alpha);
        case KernelFamily::exponential:
            if (k.beta != 1.0)
                throw std::invalid_argument(
                    "spectral_density: exponential covariance is supported only for beta = 1");
            return std::log(k.s2) + d * std::log(2.0) + 0.5 * (d - 1.0) * std::log(M_PI) +
                   std::lgamma(0.5 * (d + 1.0)) + std::log(k.alpha) -
                   0.5 * (d + 1.0) * std::log(k.alpha * k.alpha + u * u);
        case KernelFamily::matern:
            return std::log(k.s2) + d * std::log(2.0) + 0.5 * d * std::log(M_PI) +
                   std::lgamma(k.nu + 0.5 * d) + k.nu * std::log(2.0 * k.nu) -
                   std::lgamma(k.nu) - 2.0 * k.nu * std::log(k.rho) -
                   (k.nu + 0.5 * d) * std::log(2.0 * k.nu / (k.rho * k.rho) + u * u);
    }
    throw std::logic_error("log_spectral_density_radial: unknown family");
}

}  // namespace detail

double spectral_density(const Kernel& k, const Eigen::VectorXd& u) {
    if (u.size() != k.dim)
        throw std::invalid_argument("spectral_density: point dimension does not match kernel dim");
    return std::exp(detail::log_spectral_density_radial(k, u.norm()));
}

std::string SpectralGrid::describe() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "geometric |u| grid, %d points on [%.17g, %.17g]",
                  n_points, u_min, u_max);
    return buf;
}

SpectralReport check_polynomial_minorant(const Kernel& k, int r, const SpectralGrid& grid) {
    require(r >= 0, "check_polynomial_minorant: r must be nonnegative");
    require(grid.n_points >= 64, "check_polynomial_minorant: grid needs at least 64 points");
    require(grid.u_min > 0 && grid.u_max > 100.0 * grid.u_min,
            "check_polynomial_minorant: grid must span at least two decades");

    // log m(u) = log S(u) + log(1 + u^r), evaluated in logs so the gaussian
    // density can underflow without wrecking the comparison.
    auto log_m = [&](double u) {
        const double a = r * std::log(u);
        const double log1pur = a > 50.0 ? a : std::log1p(std::exp(a));
        return detail::log_spectral_density_radial(k, u) + log1pur;
    };

    const double ratio = std::log(grid.u_max / grid.u_min);
    double global_min = std::numeric_limits<double>::infinity();
    double last_decade_min = std::numeric_limits<double>::infinity();
    double prev_decade_min = std::numeric_limits<double>::infinity();
    const double decade1_lo = grid.u_max / 10.0;
    const double decade0_lo = grid.u_max / 100.0;
    for (int i = 0; i < grid.n_points; ++i) {
        const double u = grid.u_min * std::exp(ratio * i / (grid.n_points - 1));
        const double v = log_m(u);
        global_min = std::min(global_min, v);
        if (u >= decade1_lo)
            last_decade_min = std::min(last_decade_min, v);
        else if (u >= decade0_lo)
            prev_decade_min = std::min(prev_decade_min, v);
    }

    SpectralReport report;
    report.r = r;
    report.grid_spec = grid.describe();
    report.c_estimate =
        global_min > std::log(std::numeric_limits<double>::min()) ? std::exp(global_min) : 0.0;
    const bool tail_decaying = last_decade_min < prev_decade_min - 1e-9;
    report.satisfied = report.c_estimate > 0.0 && !tail_decaying;
    return report;
}

std::optional<int> min_poly_order(const Kernel& k, int r_max, const SpectralGrid& grid) {
    require(r_max >= 0, "min_poly_order: r_max must be nonnegative");
    for (int r = 0; r <= r_max; ++r)
        if (check_polynomial_minorant(k, r, grid).satisfied) return r;
    return std::nullopt;
}

}  // namespace kriglab
