"""Closed-form evaluators for the variant-sum identities and the harness
pairing them with the direct-summation oracles.

Each THM_*/COR_* entry evaluates a left side (series oracle) and a right
side (finite harmonic sums plus mixed partials of gamma-ratio jets, or pure
zeta/polygamma expressions) and reports the comparison.  Two of the closed
forms are easy to mis-state and are pinned against the oracles:

  * the cubic family (THM_V4_311 / COR_312) needs z-derivative order m-1,
    not m, next to the 1/(m-1)! factor;
  * COR_310's leading term carries 1/p^(m+1) like every other term of its
    sum (a slip there is invisible at p = 1).

EX4_HALF exercises the half-shifted instance: the unscaled variant of its
zeta form (leading term without the (-1/2)^-(m+1) factor) disagrees with
the series, so each report carries that variant's value and a mismatch flag
next to the corrected comparison.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

from .jets import Jet1, RatioVariant, gamma_ratio_jet, jet_exp, jet_mul, ln_gamma_jet, mixed_partial, psi_jet
from .series import (
    DEFAULT_CONFIG,
    half_shift_series,
    lhs_alt,
    lhs_base_binomial,
    lhs_binomial_shifted,
    lhs_central_binom,
    lhs_linear_euler,
    lhs_quadratic_euler,
    lhs_variant1,
    lhs_variant2,
    lhs_variant3,
    lhs_variant3h,
    lhs_variant4,
    quadratic_minus_linear,
    zeta_power_series,
    zeta_tail_sum,
)
from .special import (
    EULER_GAMMA,
    LN2,
    SQRT_PI,
    ZETA2,
    ZETA4,
    DomainError,
    digamma,
    gen_harmonic,
    harmonic,
    polygamma,
    riemann_zeta,
)
from .summation import EvalConfig

NEAR_ZERO = 1e-12


class IdentityId(enum.Enum):
    THM_BASE_E15 = "THM_BASE_E15"
    THM_ALT_T25 = "THM_ALT_T25"
    THM_V1_31 = "THM_V1_31"
    COR_EULER_32 = "COR_EULER_32"
    THM_V2_33 = "THM_V2_33"
    COR_34 = "COR_34"
    THM_BASE_35 = "THM_BASE_35"
    COR_CENTRAL_36 = "COR_CENTRAL_36"
    THM_V3_37 = "THM_V3_37"
    COR_38 = "COR_38"
    THM_V3H_39 = "THM_V3H_39"
    COR_310 = "COR_310"
    THM_V4_311 = "THM_V4_311"
    COR_312 = "COR_312"
    EX1_AUYEUNG = "EX1_AUYEUNG"
    EX2_CENTRAL = "EX2_CENTRAL"
    EX3_GOLDBACH = "EX3_GOLDBACH"
    EX4_HALF = "EX4_HALF"


@dataclass
class VerifyReport:
    """One left/right comparison; near-zero right sides switch to absolute error."""

    id: IdentityId
    params: dict[str, Any]
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    passed: bool
    lhs_terms: int
    converged: bool = True
    extra: dict[str, Any] = field(default_factory=dict)


def _report(ident: IdentityId, params: dict, lhs: float, rhs: float, tol: float,
            terms: int, converged: bool = True, extra: dict | None = None) -> VerifyReport:
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_err = abs_err / scale if scale > 0.0 else 0.0
    passed = (abs_err <= tol) if abs(rhs) < NEAR_ZERO else (rel_err <= tol)
    return VerifyReport(ident, params, lhs, rhs, abs_err, rel_err,
                        passed and converged, terms, converged, extra or {})


# -------------------------- finite-sum helpers ------------------------------


def _h(n: int) -> float:
    return harmonic(n)


def _h2(n: int) -> float:
    return gen_harmonic(n, 2)


def _h3(n: int) -> float:
    return gen_harmonic(n, 3)


def _cubic_weight(n: int, k: int) -> float:
    """H_n^3 + 2H_n^(3) + 3H_n H_n^(2) minus the same at index n-k."""
    hn, hn2, hn3 = _h(n), _h2(n), _h3(n)
    hk, hk2, hk3 = _h(n - k), _h2(n - k), _h3(n - k)
    return hn**3 + 2 * hn3 + 3 * hn * hn2 - hk**3 - 2 * hk3 - 3 * hk * hk2


def _sign(j: int) -> float:
    return 1.0 if j % 2 == 0 else -1.0


# ------------------------- closed-form right sides ---------------------------


def rhs_thm_e15(x: float, m: int) -> float:
    """(-1)^m/m! d^m/dz^m Gamma(x+1)Gamma(z)/Gamma(z+x) at z=1."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT0, x, 1.0, 0, m)
    return _sign(m) / math.factorial(m) * mixed_partial(j, 0, m)


def rhs_thm_t25(n: int, m: int) -> float:
    """Finite binomial-harmonic sum minus the first x-partial of the ratio."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    fs = math.fsum(
        _sign(k - 1) / float(k) ** m * math.comb(n, k) * (_h(n) - _h(n - k))
        for k in range(1, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT0, float(n), 1.0, 1, m)
    return fs - _sign(m) / math.factorial(m) * mixed_partial(j, 1, m)


def rhs_thm_31(n: int, m: int) -> float:
    """Variant-1 closed form: quadratic-harmonic finite sum plus F1/F2 terms."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    fs = math.fsum(
        _sign(k - 1) / float(k) ** m * math.comb(n, k)
        * (_h(n - k) ** 2 + _h2(n - k) - _h2(n) - _h(n) ** 2)
        for k in range(1, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT0, float(n), 1.0, 2, m)
    f1 = mixed_partial(j, 1, m)
    f2 = mixed_partial(j, 2, m)
    smn = _sign(m + n)
    return (_sign(n) / 2.0 * fs
            - smn / (2.0 * math.factorial(m)) * f2
            + smn * _h(n) / math.factorial(m) * f1)


def rhs_cor_32(m: int) -> float:
    """m zeta(m+1) - sum_{k=1}^{m-2} zeta(k+1) zeta(m-k)  (= 2 sum H_k/(k+1)^m)."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    return m * riemann_zeta(m + 1.0) - math.fsum(
        riemann_zeta(k + 1.0) * riemann_zeta(float(m - k)) for k in range(1, m - 1)
    )


def rhs_thm_33(n: int, m: int) -> float:
    """Variant-2 closed form: cubic-harmonic finite sum plus F1/F2/F3 combination."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    fs = math.fsum(
        _sign(k - 1) / float(k) ** m * math.comb(n, k) * _cubic_weight(n, k)
        for k in range(1, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT0, float(n), 1.0, 3, m)
    f1 = mixed_partial(j, 1, m)
    f2 = mixed_partial(j, 2, m)
    f3 = mixed_partial(j, 3, m)
    return (_sign(n - 1) / 3.0 * fs
            + _sign(m + n) / math.factorial(m)
            * ((_h(n) ** 2 + _h2(n)) * f1 - _h(n) * f2 + f3 / 3.0))


def rhs_cor_34(m: int) -> float:
    """Zeta-polynomial value of sum (H_k^2 - H_k^(2))/(k+1)^(m+1), simplified form."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    out = (m + 1) * (m + 2) / 3.0 * riemann_zeta(m + 3.0)
    out -= math.fsum(
        (j + 1) * riemann_zeta(j + 2.0) * riemann_zeta(float(m + 1 - j)) for j in range(1, m)
    )
    out += _zeta_double_sum(m)
    return out


def _zeta_double_sum(m: int) -> float:
    return math.fsum(
        (m - l) * riemann_zeta(float(m - l + 1))
        * math.fsum(riemann_zeta(j + 1.0) * riemann_zeta(float(l - j + 1)) for j in range(1, l))
        for l in range(1, m)
    ) / m if m > 1 else 0.0


def rhs_cor_34_unsimplified(m: int) -> float:
    """The same value before algebraic simplification; agreement with
    rhs_cor_34 to 1e-12 is a consistency check of the zeta algebra."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    out = ZETA2 * riemann_zeta(m + 1.0) + (m + 1) * (m + 2) / 3.0 * riemann_zeta(m + 3.0)
    out -= math.fsum(
        (j + 1) * (j + 2) * riemann_zeta(3.0 + j) * riemann_zeta(float(m - j))
        for j in range(0, m - 1)
    ) / m
    out -= math.fsum(
        (j + 1) * (m - j) * riemann_zeta(j + 2.0) * riemann_zeta(float(m + 1 - j))
        for j in range(0, m)
    ) / m
    out += _zeta_double_sum(m)
    return out


def rhs_cor_34a(m: int) -> float:
    """Zeta-polynomial value of the k-power form sum (H_k^2 - H_k^(2))/k^(m+1)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    out = (m + 2) * (m + 4) / 3.0 * riemann_zeta(m + 3.0) - ZETA2 * riemann_zeta(m + 1.0)
    out -= 2.0 * math.fsum(
        riemann_zeta(j + 1.0) * riemann_zeta(float(m + 2 - j)) for j in range(2, m + 1)
    )
    out -= math.fsum(
        j * riemann_zeta(j + 2.0) * riemann_zeta(float(m + 1 - j)) for j in range(1, m)
    )
    out += _zeta_double_sum(m)
    return out


def rhs_thm_35(x: float, p: float, m: int) -> float:
    """(-1)^m/m! d^m/ds^m Gamma(x+1)Gamma(s)/Gamma(x+s+1) at s=p."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT1, x, p, 0, m)
    return _sign(m) / math.factorial(m) * mixed_partial(j, 0, m)


def rhs_cor_36(p: float, m: int) -> float:
    """sqrt(pi) (-1)^m/m! d^m/ds^m [Gamma(s)/Gamma(s+1/2) (psi(1/2)-psi(s+1/2))] at s=p.

    Both factors are s-jets at s0 = p; the shifted-argument jets share the
    same normalized coefficients as jets at p+1/2, only rebased.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if p <= 0.0:
        raise DomainError(f"p must be > 0, got {p}")
    ratio = jet_exp(Jet1(p, ln_gamma_jet(p, m).coeffs - ln_gamma_jet(p + 0.5, m).coeffs))
    delta = -psi_jet(p + 0.5, m).coeffs
    delta[0] += digamma(0.5)
    prod = jet_mul(ratio, Jet1(p, delta))
    return SQRT_PI * _sign(m) * float(prod.coeffs[m])


def rhs_thm_37(p: float, n: int, m: int) -> float:
    """Shifted finite sum minus the first x-partial of the shifted ratio."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    fs = math.fsum(
        _sign(k) / (p + k) ** (m + 1) * math.comb(n, k) * (_h(n) - _h(n - k))
        for k in range(0, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT1, float(n), p, 1, m)
    return fs - _sign(m) / math.factorial(m) * mixed_partial(j, 1, m)


def rhs_cor_38(p: float, m: int) -> float:
    """gamma/p^(m+1) + p^-(m+1) sum_{j=0}^m (-1)^j p^j/j! psi^(j)(p+1)."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    acc = EULER_GAMMA + digamma(p + 1.0)
    pj = 1.0
    for jx in range(1, m + 1):
        pj *= -p
        acc += pj / math.factorial(jx) * polygamma(jx, p + 1.0)
    return acc / p ** (m + 1)


def rhs_thm_39(p: float, n: int, m: int) -> float:
    """Half the quadratic finite sum plus (G2 - 2 H_n G1)/(2 m!) partials."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    fs = math.fsum(
        _sign(k) / (p + k) ** (m + 1) * math.comb(n, k)
        * (_h(n) ** 2 + _h2(n) - _h(n - k) ** 2 - _h2(n - k))
        for k in range(0, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT1, float(n), p, 2, m)
    g1 = mixed_partial(j, 1, m)
    g2 = mixed_partial(j, 2, m)
    return 0.5 * fs + _sign(m) / (2.0 * math.factorial(m)) * (g2 - 2.0 * _h(n) * g1)


def _psi_list(p: float, top: int) -> list[float]:
    """[psi(p+1), psi'(p+1), ..., psi^(top)(p+1)]."""
    return [digamma(p + 1.0)] + [polygamma(j, p + 1.0) for j in range(1, top + 1)]


def rhs_cor_310(p: float, m: int) -> float:
    """(1/2) sum_{l=0}^m (-1)^l/(l! p^(m-l+1)) h^(l)(p), where
    h(s) = (gamma+psi(s+1))^2 + zeta(2) - psi'(s+1).

    Every term carries the p^-(m-l+1) factor, including l = 0; dropping it
    from the leading term reproduces the series only at p = 1.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if p == 0.0 or p <= -1.0:
        raise DomainError(f"p must be nonzero and > -1, got {p}")
    pg = _psi_list(p, m + 1)
    out = 0.0
    for l in range(0, m + 1):
        if l == 0:
            hl = (EULER_GAMMA + pg[0]) ** 2 + ZETA2 - pg[1]
        else:
            hl = 2.0 * EULER_GAMMA * pg[l] - pg[l + 1] + math.fsum(
                math.comb(l, j) * pg[j] * pg[l - j] for j in range(0, l + 1)
            )
        out += _sign(l) / (math.factorial(l) * p ** (m - l + 1)) * hl
    return 0.5 * out


def rhs_thm_311(p: float, n: int, m: int) -> float:
    """Cubic finite sum plus the three x-partials of the shifted ratio at
    z-order m-1 (the order that pairs with the 1/(m-1)! factor)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    fs = math.fsum(
        _sign(k) / (p + k) ** m * math.comb(n, k) * _cubic_weight(n, k)
        for k in range(0, n + 1)
    )
    j = gamma_ratio_jet(RatioVariant.BETA_SHIFT1, float(n), p, 3, m - 1)
    g1 = mixed_partial(j, 1, m - 1)
    g2 = mixed_partial(j, 2, m - 1)
    g3 = mixed_partial(j, 3, m - 1)
    smn = _sign(m + n)
    return (_sign(n) / 3.0 * fs
            + smn / math.factorial(m - 1)
            * ((_h(n) ** 2 + _h2(n)) * g1 - _h(n) * g2 + g3 / 3.0))


def rhs_cor_312(p: float, m: int) -> float:
    """-(1/3) sum_{l=0}^{m-1} (-1)^l/(l! p^(m-l)) g^(l)(p), with g the cubic
    psi polynomial and g^(l) its Leibniz expansion (all psi arguments at p+1)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if p == 0.0 or p <= -1.0:
        raise DomainError(f"p must be nonzero and > -1, got {p}")
    pg = _psi_list(p, m + 1)
    out = 0.0
    for l in range(0, m):
        if l == 0:
            gl = (-EULER_GAMMA**3 - 3.0 * EULER_GAMMA * ZETA2 - 2.0 * riemann_zeta(3.0)
                  - 3.0 * (EULER_GAMMA**2 + ZETA2) * pg[0]
                  + 3.0 * EULER_GAMMA * pg[1] - pg[2]
                  + 3.0 * pg[0] * pg[1] - 3.0 * EULER_GAMMA * pg[0] ** 2 - pg[0] ** 3)
        else:
            gl = (-3.0 * (EULER_GAMMA**2 + ZETA2) * pg[l]
                  + 3.0 * EULER_GAMMA * pg[l + 1] - pg[l + 2]
                  + 3.0 * math.fsum(math.comb(l, j) * pg[j + 1] * pg[l - j] for j in range(0, l + 1))
                  - 3.0 * EULER_GAMMA * math.fsum(math.comb(l, j) * pg[j] * pg[l - j] for j in range(0, l + 1))
                  - math.fsum(
                      math.comb(l, k)
                      * math.fsum(math.comb(k, j) * pg[j] * pg[k - j] for j in range(0, k + 1))
                      * pg[l - k]
                      for k in range(0, l + 1)))
        out += _sign(l) / (math.factorial(l) * p ** (m - l)) * gl
    return -out / 3.0


def ex4_stated_zeta_form(m: int) -> float:
    """The unscaled variant of the half-shifted example's zeta form.

    Its leading term 2 log^2 2 - zeta(2) lacks the (-1/2)^-(m+1) factor that
    rhs_cor_310 applies, so this value disagrees with the series; it is kept
    for the mismatch diagnostics in EX4 reports.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    out = 2.0 * LN2**2 - ZETA2
    tail = 0.0
    for l in range(1, m + 1):
        brace = ((l + 1) * (1.0 - 2.0 ** (l + 2)) * riemann_zeta(l + 2.0)
                 + 4.0 * LN2 * (2.0 ** (l + 1) - 1.0) * riemann_zeta(l + 1.0)
                 + math.fsum(
                     (2.0 ** (j + 1) - 1.0) * (2.0 ** (l - j + 1) - 1.0)
                     * riemann_zeta(j + 1.0) * riemann_zeta(float(l - j + 1))
                     for j in range(1, l)))
        tail += _sign(l) * 2.0**-l * brace
    return out + _sign(m + 1) * 2.0**m * tail


# ------------------------------ verification --------------------------------

EX1_FORMS = ("quadratic", "linear", "difference")
EX2_FORMS = ("unit", "half")


def verify(ident: IdentityId, params: dict[str, Any], tol: float,
           cfg: EvalConfig = DEFAULT_CONFIG) -> VerifyReport:
    """Evaluate both sides of one identity instance and compare at tol."""
    pr = params
    if ident is IdentityId.THM_BASE_E15:
        r = lhs_base_binomial(pr["x"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_e15(pr["x"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_ALT_T25:
        r = lhs_alt(pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_t25(pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_V1_31:
        r = lhs_variant1(pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_31(pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_EULER_32:
        r = lhs_variant1(0, pr["m"] - 1, cfg)
        return _report(ident, pr, 2.0 * r.value, rhs_cor_32(pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_V2_33:
        r = lhs_variant2(pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_33(pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_34:
        r = lhs_variant2(0, pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_cor_34(pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_BASE_35:
        r = lhs_binomial_shifted(pr["x"], pr["p"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_35(pr["x"], pr["p"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_CENTRAL_36:
        r = lhs_central_binom(pr["p"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_cor_36(pr["p"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_V3_37:
        r = lhs_variant3(pr["p"], pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_37(pr["p"], pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_38:
        r = lhs_variant3(pr["p"], 0, pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_cor_38(pr["p"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_V3H_39:
        r = lhs_variant3h(pr["p"], pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_39(pr["p"], pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_310:
        r = lhs_variant3h(pr["p"], 0, pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_cor_310(pr["p"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.THM_V4_311:
        r = lhs_variant4(pr["p"], pr["n"], pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_thm_311(pr["p"], pr["n"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.COR_312:
        r = lhs_variant4(pr["p"], 0, pr["m"], cfg)
        return _report(ident, pr, r.value, rhs_cor_312(pr["p"], pr["m"]), tol, r.terms_used, r.converged)
    if ident is IdentityId.EX1_AUYEUNG:
        which = pr.get("which", "quadratic")
        if which == "quadratic":
            r = lhs_quadratic_euler(2, cfg)
            rhs = 17.0 / 4.0 * ZETA4
        elif which == "linear":
            r = lhs_linear_euler(2, 2, cfg)
            rhs = 7.0 / 4.0 * ZETA4
        elif which == "difference":
            r = quadratic_minus_linear(2, cfg)
            rhs = 5.0 / 2.0 * ZETA4
        else:
            raise DomainError(f"unknown EX1 form {which!r}; expected one of {EX1_FORMS}")
        return _report(ident, {"which": which}, r.value, rhs, tol, r.terms_used, r.converged)
    if ident is IdentityId.EX2_CENTRAL:
        which = pr.get("which", "unit")
        if which == "unit":
            r = lhs_central_binom(1.0, 0, cfg)
            lhs, rhs = -r.value / 4.0, 1.0
        elif which == "half":
            r = lhs_central_binom(0.5, 1, cfg)
            lhs, rhs = -r.value, math.pi * (4.0 * LN2**2 - math.pi**2 / 6.0)
        else:
            raise DomainError(f"unknown EX2 form {which!r}; expected one of {EX2_FORMS}")
        return _report(ident, {"which": which}, lhs, rhs, tol, r.terms_used, r.converged)
    if ident is IdentityId.EX3_GOLDBACH:
        form = pr.get("form", "zeta-tail")
        if form == "zeta-tail":
            m = pr.get("m", 0)
            r = zeta_tail_sum(m, cfg)
            rhs = m + 1.0 - math.fsum(riemann_zeta(k + 1.0) for k in range(1, m + 1))
            return _report(ident, {"form": form, "m": m}, r.value, rhs, tol, r.terms_used, r.converged)
        if form == "psi-series":
            pp = pr.get("p", 0.5)
            r = lhs_variant3(pp, 0, 0, cfg)
            lhs = pp * r.value
            rhs = EULER_GAMMA + digamma(pp + 1.0)
            return _report(ident, {"form": form, "p": pp}, lhs, rhs, tol, r.terms_used, r.converged)
        if form == "power-series":
            pp, m = pr.get("p", 0.4), pr.get("m", 1)
            r = zeta_power_series(pp, m, cfg)
            return _report(ident, {"form": form, "p": pp, "m": m}, r.value,
                           rhs_cor_38(pp, m), tol, r.terms_used, r.converged)
        raise DomainError(f"unknown EX3 form {form!r}")
    if ident is IdentityId.EX4_HALF:
        m = pr.get("m", 0)
        r = half_shift_series(m, cfg)
        rhs = rhs_cor_310(-0.5, m)
        stated = ex4_stated_zeta_form(m)
        stated_matches = abs(stated - r.value) <= tol * max(abs(r.value), 1.0)
        rep = _report(ident, {"m": m}, r.value, rhs, tol, r.terms_used, r.converged,
                      extra={"stated_zeta_form": stated, "stated_matches": stated_matches})
        return rep
    raise DomainError(f"unknown identity {ident}")


def example_suite(tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> list[VerifyReport]:
    """Run the worked-example battery: the Au-Yeung and classical Euler sums,
    the two central-binomial values, the zeta-tail family, and the
    half-shifted instance with its mismatch diagnostics."""
    reports = []
    for which in EX1_FORMS:
        reports.append(verify(IdentityId.EX1_AUYEUNG, {"which": which}, tol, cfg))
    for which in EX2_FORMS:
        reports.append(verify(IdentityId.EX2_CENTRAL, {"which": which}, tol, cfg))
    reports.append(verify(IdentityId.EX3_GOLDBACH, {"form": "psi-series", "p": 0.5}, tol, cfg))
    reports.append(verify(IdentityId.EX3_GOLDBACH, {"form": "power-series", "p": 0.4, "m": 1}, tol, cfg))
    for m in (0, 1, 2, 3):
        reports.append(verify(IdentityId.EX3_GOLDBACH, {"form": "zeta-tail", "m": m}, tol, cfg))
    for m in (0, 1):
        reports.append(verify(IdentityId.EX4_HALF, {"m": m}, tol, cfg))
    return reports


# ------------------------------ grid inventory -------------------------------

P_GRID = (0.5, 1.0, 1.5, 2.5)
N_GRID = (0, 1, 2, 3, 4)

PARAM_SIGNATURES: dict[IdentityId, str] = {
    IdentityId.THM_BASE_E15: "(x > -1, m >= 1)",
    IdentityId.THM_ALT_T25: "(n >= 0, m >= 1)",
    IdentityId.THM_V1_31: "(n >= 0, m >= 1)",
    IdentityId.COR_EULER_32: "(m >= 2)",
    IdentityId.THM_V2_33: "(n >= 0, m >= 1)",
    IdentityId.COR_34: "(m >= 1)",
    IdentityId.THM_BASE_35: "(x > -1, p > 0, m >= 0)",
    IdentityId.COR_CENTRAL_36: "(p > 0, m >= 0)",
    IdentityId.THM_V3_37: "(p > 0, n >= 0, m >= 0)",
    IdentityId.COR_38: "(p > 0, m >= 0)",
    IdentityId.THM_V3H_39: "(p > 0, n >= 0, m >= 0)",
    IdentityId.COR_310: "(p > 0, m >= 0)",
    IdentityId.THM_V4_311: "(p > 0, n >= 0, m >= 1)",
    IdentityId.COR_312: "(p > 0, m >= 1)",
    IdentityId.EX1_AUYEUNG: "(which in " + "/".join(EX1_FORMS) + ")",
    IdentityId.EX2_CENTRAL: "(which in " + "/".join(EX2_FORMS) + ")",
    IdentityId.EX3_GOLDBACH: "(form zeta-tail[m]/psi-series[p]/power-series[p,m])",
    IdentityId.EX4_HALF: "(m in 0..)",
}

FORMULAS: dict[IdentityId, str] = {
    IdentityId.THM_BASE_E15: "sum (-1)^(k-1) C(x,k)/k^m = (-1)^m/m! d^m_z R0(x,z)|z=1",
    IdentityId.THM_ALT_T25: "sum (-1)^(n-1)/((n+k+1)^(m+1) C(n+k,k)) = finite - dx d^m_z R0",
    IdentityId.THM_V1_31: "sum H_k/((n+k+1)^(m+1) C(n+k,k)) = finite + {F1,F2} terms",
    IdentityId.COR_EULER_32: "2 sum H_k/(k+1)^m = m z(m+1) - sum z(k+1) z(m-k)",
    IdentityId.THM_V2_33: "sum (H_k^2-H_k^(2))/((n+k+1)^(m+1) C(n+k,k)) = finite + {F1,F2,F3}",
    IdentityId.COR_34: "sum (H_k^2-H_k^(2))/(k+1)^(m+1) = zeta polynomial",
    IdentityId.THM_BASE_35: "sum (-1)^k C(x,k)/(p+k)^(m+1) = (-1)^m/m! d^m_s R1(x,s)|s=p",
    IdentityId.COR_CENTRAL_36: "sum (H_k-2H_2k) C(2k,k)/(4^k (p+k)^(m+1)) = sqrt(pi) psi-ratio deriv",
    IdentityId.THM_V3_37: "sum (-1)^n/(k (p+n+k)^(m+1) C(n+k,k)) = finite - dx d^m_s R1",
    IdentityId.COR_38: "sum 1/(k (p+k)^(m+1)) = gamma/p^(m+1) + psi-series",
    IdentityId.THM_V3H_39: "sum (-1)^n H_(k-1)/(k (p+n+k)^(m+1) C(n+k,k)) = finite + (G2-2H_n G1)/2",
    IdentityId.COR_310: "sum H_(k-1)/(k (p+k)^(m+1)) = 1/2 sum_l (-1)^l h^(l)(p)/(l! p^(m-l+1))",
    IdentityId.THM_V4_311: "sum (H_(k-1)^2-H_(k-1)^(2))/(k (p+n+k)^m C(n+k,k)) = finite + {G1,G2,G3}",
    IdentityId.COR_312: "sum (H_(k-1)^2-H_(k-1)^(2))/(k (p+k)^m) = -1/3 sum_l (-1)^l g^(l)(p)/(l! p^(m-l))",
    IdentityId.EX1_AUYEUNG: "S(1^2;2) = 17/4 z(4);  S(2,2) = 7/4 z(4);  difference = 5/2 z(4)",
    IdentityId.EX2_CENTRAL: "sum (2H_2k-H_k) C(2k,k)/((k+1) 4^(k+1)) = 1;  half-shift = pi (4 ln^2 2 - pi^2/6)",
    IdentityId.EX3_GOLDBACH: "sum_(j>=2) (z(m+j)-1) = m+1 - sum z(k+1)   (m=0: Goldbach value 1)",
    IdentityId.EX4_HALF: "sum H_(k-1)/(k (k-1/2)^(m+1)) vs half-shifted closed form",
}


def default_grid() -> list[tuple[IdentityId, dict[str, Any]]]:
    """The full verification grid: n in 0..4, m in each identity's range
    intersected with 1..5 (0..4 where m >= 0 is allowed), p in the 4-point set."""
    grid: list[tuple[IdentityId, dict[str, Any]]] = []
    for n in N_GRID:
        for m in range(1, 6):
            grid.append((IdentityId.THM_BASE_E15, {"x": float(n), "m": m}))
            grid.append((IdentityId.THM_ALT_T25, {"n": n, "m": m}))
            grid.append((IdentityId.THM_V1_31, {"n": n, "m": m}))
            grid.append((IdentityId.THM_V2_33, {"n": n, "m": m}))
    for m in range(2, 6):
        grid.append((IdentityId.COR_EULER_32, {"m": m}))
    for m in range(1, 6):
        grid.append((IdentityId.COR_34, {"m": m}))
    for pp in P_GRID:
        for n in N_GRID:
            for m in range(0, 5):
                grid.append((IdentityId.THM_BASE_35, {"x": float(n), "p": pp, "m": m}))
                grid.append((IdentityId.THM_V3_37, {"p": pp, "n": n, "m": m}))
                grid.append((IdentityId.THM_V3H_39, {"p": pp, "n": n, "m": m}))
            for m in range(1, 6):
                grid.append((IdentityId.THM_V4_311, {"p": pp, "n": n, "m": m}))
        for m in range(0, 5):
            grid.append((IdentityId.COR_CENTRAL_36, {"p": pp, "m": m}))
            grid.append((IdentityId.COR_38, {"p": pp, "m": m}))
            grid.append((IdentityId.COR_310, {"p": pp, "m": m}))
        for m in range(1, 6):
            grid.append((IdentityId.COR_312, {"p": pp, "m": m}))
    for which in EX1_FORMS:
        grid.append((IdentityId.EX1_AUYEUNG, {"which": which}))
    for which in EX2_FORMS:
        grid.append((IdentityId.EX2_CENTRAL, {"which": which}))
    for m in (0, 1, 2, 3):
        grid.append((IdentityId.EX3_GOLDBACH, {"form": "zeta-tail", "m": m}))
    grid.append((IdentityId.EX3_GOLDBACH, {"form": "psi-series", "p": 0.5}))
    grid.append((IdentityId.EX3_GOLDBACH, {"form": "power-series", "p": 0.4, "m": 1}))
    for m in (0, 1):
        grid.append((IdentityId.EX4_HALF, {"m": m}))
    return grid
