#!/usr/bin/env python3
"""High-precision reference values for the kriglab test suites.

Computes, with mpmath at 120 decimal digits, the quantities that the C++
unit and acceptance tests assert against:

  * simple-kriging weights / variance / Lebesgue constant for small
    closed-form systems,
  * sigma^2 curves at an off-box target for the Gaussian and exponential
    covariances on the dyadic (van der Corput) grid of [0, 1],
  * prediction errors of a Gaussian bump along the same grid for the
    Matern(3/2) and exponential covariances,
  * the spectral RKHS norm of a Gaussian bump under the Matern(3/2) and
    Gaussian covariances (closed-form integrals),
  * eigenvalue-truncation rank of a 40-point Gaussian Gram matrix.

Everything is derived from first principles (Cholesky solves in extended
precision, closed-form spectra); nothing here calls the C++ library.
Output goes to reference_values.json next to this script, and the values
frozen into the C++ tests were copied from that file.

Run:  python3 reference_values.py
"""

import json
import os

import mpmath as mp

mp.mp.dps = 120


# ----------------------------------------------------------------------
# designs
# ----------------------------------------------------------------------

def van_der_corput(i):
    """Base-2 radical inverse of i >= 1, as an exact mpf."""
    x = mp.mpf(0)
    f = mp.mpf(1) / 2
    while i > 0:
        if i & 1:
            x += f
        f /= 2
        i >>= 1
    return x


def grid_points(n):
    return [van_der_corput(i) for i in range(1, n + 1)]


# ----------------------------------------------------------------------
# kernels (1-d, s^2 = 1)
# ----------------------------------------------------------------------

def k_gauss(x, y, alpha=1):
    return mp.e**(-alpha * (x - y) ** 2)


def k_exp(x, y, alpha=1):
    return mp.e**(-alpha * abs(x - y))


def k_matern32(x, y, rho=1):
    # nu = 3/2: k(r) = (1 + sqrt(3) r / rho) exp(-sqrt(3) r / rho)
    t = mp.sqrt(3) * abs(x - y) / rho
    return (1 + t) * mp.e**(-t)


def gram(kern, pts):
    n = len(pts)
    return mp.matrix([[kern(pts[i], pts[j]) for j in range(n)] for i in range(n)])


def solve_weights(kern, pts, x):
    K = gram(kern, pts)
    kx = mp.matrix([kern(x, p) for p in pts])
    lam = mp.lu_solve(K, kx)
    return lam, kx


def sigma2_at(kern, pts, x):
    lam, kx = solve_weights(kern, pts, x)
    s2 = kern(x, x) - sum(lam[i] * kx[i] for i in range(len(pts)))
    return s2, lam


def lebesgue(lam):
    return sum(abs(v) for v in lam)


# ----------------------------------------------------------------------
# test functions
# ----------------------------------------------------------------------

def gaussian_bump(x, center, width, height=1):
    return height * mp.e**(-(x - center) ** 2 / (2 * width ** 2))


def predict_value(kern, pts, x, f):
    lam, _ = solve_weights(kern, pts, x)
    return sum(lam[i] * f(pts[i]) for i in range(len(pts)))


# ----------------------------------------------------------------------
# sections
# ----------------------------------------------------------------------

def fmt(v):
    return mp.nstr(v, 25)


def two_point_system():
    """gaussian(s2=1, alpha=1), design {0, 1}, x = 0.5 -- closed form."""
    pts = [mp.mpf(0), mp.mpf(1)]
    x = mp.mpf("0.5")
    s2, lam = sigma2_at(k_gauss, pts, x)
    # closed forms
    lam_cf = mp.e**mp.mpf("-0.25") / (1 + mp.e**-1)
    s2_cf = 1 - 2 * mp.e**mp.mpf("-0.5") / (1 + mp.e**-1)
    assert abs(lam[0] - lam_cf) < mp.mpf("1e-100")
    assert abs(s2 - s2_cf) < mp.mpf("1e-100")
    return {
        "weight": fmt(lam_cf),
        "sigma2": fmt(s2_cf),
        "lebesgue": fmt(2 * lam_cf),
        "rkhs_norm_pm": fmt(mp.sqrt(2 - 2 * mp.e**-1)),   # coeffs (1, -1) on {0, 1}
        "gram_eigs": [fmt(1 - mp.e**-1), fmt(1 + mp.e**-1)],
    }


def neb_gaussian():
    """sigma^2(2; n) and Lebesgue constant, gaussian alpha=1, dyadic grid."""
    x = mp.mpf(2)
    out = {}
    for n in (5, 10, 20, 40):
        s2, lam = sigma2_at(k_gauss, grid_points(n), x)
        out[str(n)] = {"sigma2": fmt(s2), "lebesgue": fmt(lebesgue(lam))}
    return out


def neb_exponential():
    """sigma^2(2; n) for the exponential covariance; Markov check."""
    x = mp.mpf(2)
    out = {}
    for n in (5, 10, 20, 40):
        pts = grid_points(n)
        s2, lam = sigma2_at(k_exp, pts, x)
        # Markov property: only the largest design point carries weight.
        mx = max(pts)
        s2_markov = 1 - mp.e**(-2 * (x - mx))
        assert abs(s2 - s2_markov) < mp.mpf("1e-90"), (n, fmt(s2), fmt(s2_markov))
        out[str(n)] = {"sigma2": fmt(s2), "lebesgue": fmt(lebesgue(lam))}
    # n = 256 via the (validated) Markov form; max point of the first 256
    # dyadic points is 1 - 2^-8.
    mx = max(grid_points(256))
    assert mx == 1 - mp.mpf(2) ** -8
    out["256"] = {"sigma2": fmt(1 - mp.e**(-2 * (x - mx))), "lebesgue": None}
    return out


def consistency_curves():
    """|f(x) - <lambda, f>| for f = gaussian_bump(0.3, 0.5) on the dyadic grid.

    Primary target x = 0.5 coincides with the first design point, so the
    error is identically zero there; x = 1/3 is never a design point and
    gives a genuine convergence curve.
    """
    f = lambda t: gaussian_bump(t, mp.mpf("0.3"), mp.mpf("0.5"))
    out = {}
    for name, kern in (("matern32", k_matern32), ("exponential", k_exp)):
        rows = {}
        for n in (4, 8, 16, 32, 64):
            pts = grid_points(n)
            x = mp.mpf(1) / 3
            pred = predict_value(kern, pts, x, f)
            err = abs(f(x) - pred)
            s2, _ = sigma2_at(kern, pts, x)
            rows[str(n)] = {"abs_error": fmt(err), "sigma2": fmt(s2)}
        out[name] = rows
    return out


def spectral_norms():
    """(2 pi)^-1 * integral |f~|^2 / S du for f = gaussian bump, d = 1.

    Fourier convention: f~(u) = int f(x) e^{-iux} dx, so for
    f = h exp(-(x-c)^2 / (2 w^2)):  |f~(u)| = h w sqrt(2 pi) exp(-w^2 u^2 / 2).

    Spectra (s^2 = 1):
      gaussian  alpha:  S(u) = sqrt(pi/alpha) exp(-u^2 / (4 alpha))
      matern32  rho=1:  S(u) = 12 sqrt(3) (3 + u^2)^-2
      exponential a=1:  S(u) = 2 / (1 + u^2)
    """
    w = mp.mpf(1)
    h = mp.mpf(1)
    ft2 = lambda u: (h * w * mp.sqrt(2 * mp.pi)) ** 2 * mp.e**(-(w * u) ** 2)

    def norm2(S):
        g = lambda u: ft2(u) / S(u)
        return 2 * mp.quad(g, [0, 2, 8, 40, mp.inf]) / (2 * mp.pi)

    S_mat = lambda u: 12 * mp.sqrt(3) * (3 + u ** 2) ** -2
    S_exp = lambda u: 2 / (1 + u ** 2)
    # finite gaussian-kernel case must satisfy w^2 > 1/(4 alpha): alpha=1, w=1
    S_gau = lambda u: mp.sqrt(mp.pi) * mp.e**(-(u ** 2) / 4)
    # closed form for the gaussian/gaussian pair:
    #   ||f||^2 = w^2 h^2 / sqrt(pi/alpha) * sqrt(pi / (w^2 - 1/(4 alpha)))
    cf = w ** 2 * h ** 2 / mp.sqrt(mp.pi) * mp.sqrt(mp.pi / (w ** 2 - mp.mpf(1) / 4))
    got = norm2(S_gau)
    assert abs(got - cf) / cf < mp.mpf("1e-30"), (fmt(got), fmt(cf))
    return {
        "bump_w1_matern32_norm2": fmt(norm2(S_mat)),
        "bump_w1_exponential_norm2": fmt(norm2(S_exp)),
        "bump_w1_gaussian_a1_norm2": fmt(cf),
        "spectral_gaussian_a1_at0": fmt(mp.sqrt(mp.pi)),
    }


def gaussian_gram_rank():
    """Eigenvalues of the 40-point Gaussian Gram; retained count at 1e-12."""
    K = gram(k_gauss, grid_points(40))
    eigs = mp.eigsy(K, eigvals_only=True)
    mx = max(eigs)
    kept = sum(1 for e in eigs if e > mp.mpf("1e-12") * mx)
    return {
        "lambda_max": fmt(mx),
        "lambda_min": fmt(min(eigs)),
        "rank_at_1e-12": kept,
    }


def main():
    out = {
        "two_point_gaussian": two_point_system(),
        "neb_gaussian_x2": neb_gaussian(),
        "neb_exponential_x2": neb_exponential(),
        "consistency_bump_x_one_third": consistency_curves(),
        "spectral_norms": spectral_norms(),
        "gaussian_gram_40": gaussian_gram_rank(),
    }
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        "reference_values.json")
    with open(path, "w") as fh:
        json.dump(out, fh, indent=2)
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
