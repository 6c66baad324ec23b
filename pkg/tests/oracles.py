"""Independent arbitrary-precision reference implementations and frozen values.

The frozen constants were produced by these functions at 50 digits and are
compared against both the library and a fresh mpmath evaluation.
"""

import mpmath as mp

mp.mp.dps = 50

# (n, k, p, q, rho, eps) = (1000, 20, 0.7, 0.06, 0.3, 1e-6)
LHS_EXAMPLE = -0.559057073981486
RHS_EXAMPLE = -0.276310211159285
PHI_EXAMPLE = -0.0279528536990743
EPS_TILDE_EXAMPLE = 7.24819527177842e-13
BOUND_EXAMPLE = 0.999999999275180
XI_EXAMPLE = 0.380434782608696
XI_LOG_BRANCH_EXAMPLE = 0.407812737501200
XI_TILDE_EXAMPLE = 0.380434782608696
XI_TILDE_LOG_BRANCH = 0.503011678580361
EXPECTED_DEGREE_EXAMPLE = 91.3
# k=2, p=0.5, q=0.1
XI_TILDE_K2 = 0.833333333333333
XI_TILDE_K2_LOG_BRANCH = 0.888673471390957


def _m(x):
    return mp.mpf(str(x))


def mp_phi(k, p, q, rho):
    k, p, q, rho = map(_m, (k, p, q, rho))
    return (p * (mp.exp(rho) - mp.e) + q * (k - 1) * (mp.exp(rho) - 1)) / k


def mp_xi(n, k, p, q, eps):
    n, k, p, q, eps = map(_m, (n, k, p, q, eps))
    d = p + (k - 1) * q
    arg = ((k / n) * mp.log(eps) + p * mp.e + (k - 1) * q) / d
    branch = mp.log(arg) if arg > 0 else mp.ninf
    return max(min(branch, p / d), mp.mpf(0))


def mp_xi_tilde(k, p, q):
    k, p, q = map(_m, (k, p, q))
    d = p + (k - 1) * q
    return min(mp.log((p * mp.e + (k - 1) * q) / d), p / d)


def mp_bound(n, eps_tilde):
    eps_tilde = _m(eps_tilde)
    if eps_tilde >= 1:
        return mp.mpf(0)
    return (1 - eps_tilde) ** int(n)
