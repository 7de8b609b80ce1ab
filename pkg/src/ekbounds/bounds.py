"""Eigenvalue-localization regions for matrix polynomials.

Each ``bound_*`` function checks one theorem's hypothesis on a concrete
instance and, when it holds, returns the region the theorem asserts:

=======  ====================================================  ==============
id       hypothesis                                            region
=======  ====================================================  ==============
ThmC     A_m nonsingular                                       |z| <= rho
ThmD     A_m nonsingular                                       |z| <= 1 + M
ThmE     A_m >= ... >= A_0 >= 0 (Loewner)                      |z| <= 1
Thm1     ||A_m^-1||^-1 >= t||A_m-1|| >= ... >= t^m||A_0||,    |z| <= k_1/t
         A_0 > 0
Thm2     k||A_m||_F >= ||A_m-1||_F >= ... >= ||A_0||_F,        |z+k-1| <= R
         every A_j within angle alpha of a common C
Cor1     Thm2 applied to P(tz)                                 |z+(k-1)t| <= tR'
Thm3     A_0, A_m nonsingular                                  r_1 <= |z| <= r_2
Thm4     kA_0 >= tA_1 >= ... >= t^m A_m >= 0 (Loewner)         no eigenvalue in
                                                               |z-c| <= kt/(2k-1)
=======  ====================================================  ==============

Unadorned norms are the configurable subordinate norm (induced 2-norm by
default); Thm2 and Cor1 always use Frobenius quantities.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    EKBoundsError,
    HypothesisViolated,
    InvalidScale,
    SingularA0,
    SingularLeadingCoefficient,
    SingularMatrix,
    ZeroCoefficient,
)
from .linalg_core import (
    DEFAULT_TOL,
    NormKind,
    frobenius_norm,
    inverse,
    inverse_norm_reciprocal,
    is_hermitian,
    is_pd,
    is_psd,
    loewner_geq,
    matrix_angle,
    matrix_norm,
    max_loewner_scale,
)
from .matpoly import MatrixPolynomial, scale_argument
from .scalar_roots import pell_weight, trinomial_greatest_root, unique_positive_root

# relative slack granted to floating-point comparisons in hypothesis chains
CHAIN_RTOL = 1e-12
MEMBERSHIP_RTOL = 1e-8
MEMBERSHIP_ATOL = 1e-12


class TheoremId(str, enum.Enum):
    THM_C = "ThmC"
    THM_D = "ThmD"
    THM_E = "ThmE"
    THM_1 = "Thm1"
    THM_2 = "Thm2"
    COR_1 = "Cor1"
    THM_3 = "Thm3"
    THM_4 = "Thm4"

    @classmethod
    def parse(cls, value: "TheoremId | str") -> "TheoremId":
        if isinstance(value, TheoremId):
            return value
        for member in cls:
            if member.value.lower() == str(value).strip().lower():
                return member
        raise ValueError(f"unknown theorem id {value!r}")


THEOREM_ORDER = tuple(TheoremId)


# --------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    kind = "disk"

    def contains(self, z: complex, rtol: float = MEMBERSHIP_RTOL) -> bool:
        return abs(z - self.center) <= self.radius * (1 + rtol) + MEMBERSHIP_ATOL

    def holds_for(self, eigenvalues, rtol: float = MEMBERSHIP_RTOL) -> bool:
        return all(self.contains(z, rtol) for z in eigenvalues)

    def slack(self, eigenvalues) -> float:
        return self.radius - max(abs(z - self.center) for z in eigenvalues)

    def scaled(self, t: float) -> "Disk":
        return Disk(self.center * t, self.radius * t)


@dataclass(frozen=True)
class Annulus:
    r_inner: float
    r_outer: float

    kind = "annulus"
    center = 0j

    def __post_init__(self):
        if self.r_inner > self.r_outer:
            raise ValueError(f"annulus radii out of order: {self.r_inner} > {self.r_outer}")

    def contains(self, z: complex, rtol: float = MEMBERSHIP_RTOL) -> bool:
        mod = abs(z)
        return (
            self.r_inner * (1 - rtol) - MEMBERSHIP_ATOL
            <= mod
            <= self.r_outer * (1 + rtol) + MEMBERSHIP_ATOL
        )

    def holds_for(self, eigenvalues, rtol: float = MEMBERSHIP_RTOL) -> bool:
        return all(self.contains(z, rtol) for z in eigenvalues)

    def slack(self, eigenvalues) -> float:
        return self.r_outer - max(abs(z) for z in eigenvalues)

    def inner_margin(self, eigenvalues) -> float:
        return min(abs(z) for z in eigenvalues) - self.r_inner


@dataclass(frozen=True)
class ExclusionDisk:
    """A closed disk claimed to contain no eigenvalue."""

    center: complex
    radius: float

    kind = "exclusion_disk"

    def excludes(self, z: complex, rtol: float = MEMBERSHIP_RTOL) -> bool:
        return abs(z - self.center) > self.radius * (1 - rtol) - MEMBERSHIP_ATOL

    def holds_for(self, eigenvalues, rtol: float = MEMBERSHIP_RTOL) -> bool:
        return all(self.excludes(z, rtol) for z in eigenvalues)

    def slack(self, eigenvalues) -> float:
        return min(abs(z - self.center) for z in eigenvalues) - self.radius


Region = Disk | Annulus | ExclusionDisk


# --------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class HypothesisWitness:
    t: float | None = None
    k: float | None = None
    alpha: float | None = None
    C: np.ndarray | None = field(default=None, compare=False)
    norm: NormKind | None = None


@dataclass(frozen=True)
class BoundResult:
    theorem_id: TheoremId
    hypothesis_ok: bool
    witness: HypothesisWitness = field(default_factory=HypothesisWitness)
    region: Region | None = None
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self):
        if self.hypothesis_ok != (self.region is not None):
            raise ValueError("region must be present exactly when the hypothesis holds")


def _failed(theorem_id: TheoremId, reason: str, witness=None) -> BoundResult:
    return BoundResult(theorem_id, False, witness or HypothesisWitness(), None, (reason,))


def _leading_reciprocal(p: MatrixPolynomial, kind: NormKind) -> float:
    try:
        return inverse_norm_reciprocal(p.leading, kind)
    except SingularMatrix as exc:
        raise SingularLeadingCoefficient(f"A_{p.degree} is singular: {exc}") from exc


def _geq(a: float, b: float) -> bool:
    return a >= b - CHAIN_RTOL * max(abs(a), abs(b))


# --------------------------------------------------------------------------
# Theorems C, D, E


def cauchy_radius(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> float:
    kind = NormKind.parse(kind)
    sigma = _leading_reciprocal(p, kind)
    lower = [matrix_norm(p[j], kind) for j in range(p.degree - 1, -1, -1)]
    return unique_positive_root(sigma, lower).value


def bound_thm_c(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> BoundResult:
    kind = NormKind.parse(kind)
    rho = cauchy_radius(p, kind)
    return BoundResult(TheoremId.THM_C, True, HypothesisWitness(norm=kind), Disk(0j, rho))


def bound_thm_d(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> BoundResult:
    kind = NormKind.parse(kind)
    sigma = _leading_reciprocal(p, kind)
    big_m = max(matrix_norm(c, kind) for c in p.coefficients[:-1]) / sigma
    return BoundResult(TheoremId.THM_D, True, HypothesisWitness(norm=kind), Disk(0j, 1.0 + big_m))


def check_loewner_chain(p: MatrixPolynomial, tol: float = DEFAULT_TOL) -> list[str]:
    """Reasons why A_m >= A_{m-1} >= ... >= A_0 >= 0 fails (empty if it holds)."""
    problems = []
    for j, c in enumerate(p.coefficients):
        if not is_hermitian(c, tol):
            problems.append(f"A_{j} is not Hermitian")
    if not is_psd(p[0], tol):
        problems.append("A_0 is not positive semidefinite")
    for j in range(1, p.degree + 1):
        diff = p[j] - p[j - 1]
        if not is_hermitian(diff, tol):
            problems.append(f"A_{j} - A_{j - 1} is not Hermitian")
        elif not loewner_geq(p[j], p[j - 1], tol):
            problems.append(f"A_{j} >= A_{j - 1} fails (difference has a negative eigenvalue)")
    if not np.any(p.leading):
        problems.append(f"A_{p.degree} is zero")
    return problems


def bound_thm_e(p: MatrixPolynomial) -> BoundResult:
    problems = check_loewner_chain(p)
    if problems:
        return BoundResult(TheoremId.THM_E, False, diagnostics=tuple(problems))
    return BoundResult(TheoremId.THM_E, True, region=Disk(0j, 1.0))


# --------------------------------------------------------------------------
# Theorem 1


def optimal_t_thm1(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> float | None:
    """Largest t for which the Theorem 1 norm chain holds, or None.

    The chain is equivalent to t <= sigma/||A_{m-1}|| and t <= ||A_j||/||A_{j-1}||
    for 1 <= j <= m-1 (ratios with a zero denominator count as +inf).  None is
    returned when that maximum is not positive or A_0 is not Hermitian PD.
    """
    kind = NormKind.parse(kind)
    sigma = _leading_reciprocal(p, kind)
    norms = [matrix_norm(c, kind) for c in p.coefficients]
    m = p.degree
    ratios = [sigma / norms[m - 1] if norms[m - 1] > 0 else math.inf]
    for j in range(1, m):
        ratios.append(norms[j] / norms[j - 1] if norms[j - 1] > 0 else math.inf)
    t_max = min(ratios)
    if not (t_max > 0.0) or not is_pd(p[0]):
        return None
    return t_max


def check_thm1_chain(p: MatrixPolynomial, t: float, kind: NormKind = NormKind.INDUCED2) -> None:
    """Raise HypothesisViolated (with the failing link) unless the chain holds at t."""
    kind = NormKind.parse(kind)
    if not (t > 0.0 and math.isfinite(t)):
        raise HypothesisViolated(f"t must be a positive real, got {t}")
    if not is_pd(p[0]):
        raise HypothesisViolated("A_0 is not Hermitian positive definite", link=None)
    m = p.degree
    sigma = _leading_reciprocal(p, kind)
    norms = [matrix_norm(c, kind) for c in p.coefficients]
    # link i compares t^i ||A_{m-i}|| >= t^{i+1} ||A_{m-i-1}||, after dividing by t^i
    upper = sigma
    for i in range(m):
        lower_norm = t * norms[m - 1 - i]
        if not _geq(upper, lower_norm):
            raise HypothesisViolated(
                f"link {i}: t^{i}*||A_{m - i}|| < t^{i + 1}*||A_{m - 1 - i}|| at t = {t!r}",
                link=i,
            )
        upper = norms[m - 1 - i]


def bound_thm1(p: MatrixPolynomial, t: float, kind: NormKind = NormKind.INDUCED2) -> BoundResult:
    kind = NormKind.parse(kind)
    check_thm1_chain(p, t, kind)
    k1 = trinomial_greatest_root(p.degree)
    diag = ("m = 1: trinomial has only the double root K = 1",) if k1.degenerate else ()
    return BoundResult(
        TheoremId.THM_1, True, HypothesisWitness(t=float(t), norm=kind),
        Disk(0j, k1.value / t), diag,
    )


# --------------------------------------------------------------------------
# Theorem 2 and Corollary 1


def _nonzero_frobenius_norms(p: MatrixPolynomial) -> list[float]:
    norms = p.frobenius_norms()
    zero = [j for j, v in enumerate(norms) if v == 0.0]
    if zero:
        raise ZeroCoefficient(
            f"A_{zero[0]} = 0, so the angle condition cannot be evaluated"
        )
    return norms


def cone_witness(p: MatrixPolynomial) -> tuple[float, float, np.ndarray] | None:
    """Heuristic (k, alpha, C) for Theorem 2, or None if the chain/cone fails.

    C is the mean of the normalized coefficients (falling back to A_m when
    that mean vanishes); alpha is the largest angle from C.
    """
    norms = _nonzero_frobenius_norms(p)
    m = p.degree
    for j in range(1, m):
        if not _geq(norms[j], norms[j - 1]):
            return None
    k = max(1.0, norms[m - 1] / norms[m]) if m >= 1 else 1.0
    axis = sum(c / v for c, v in zip(p.coefficients, norms))
    if frobenius_norm(axis) <= 1e-12 * len(norms):
        axis = np.array(p.leading)
    alpha = max(matrix_angle(c, axis) for c in p.coefficients)
    if alpha > math.pi / 2:
        return None
    return k, alpha, axis


def check_thm2_hypothesis(p: MatrixPolynomial, k: float, alpha: float, c_axis) -> None:
    norms = _nonzero_frobenius_norms(p)
    m = p.degree
    if not k >= 1.0:
        raise HypothesisViolated(f"k must be >= 1, got {k}")
    if not 0.0 <= alpha <= math.pi / 2 + CHAIN_RTOL:
        raise HypothesisViolated(f"alpha must lie in [0, pi/2], got {alpha}")
    c_axis = np.asarray(c_axis, dtype=np.complex128)
    if c_axis.shape != p.leading.shape or frobenius_norm(c_axis) == 0.0:
        raise HypothesisViolated("C must be a nonzero n x n matrix")
    chain = [k * norms[m]] + [norms[j] for j in range(m - 1, -1, -1)]
    for i in range(len(chain) - 1):
        if not _geq(chain[i], chain[i + 1]):
            raise HypothesisViolated(f"Frobenius norm chain fails at link {i}", link=i)
    for j, c in enumerate(p.coefficients):
        ang = matrix_angle(c, c_axis)
        if ang > alpha + 1e-12:
            raise HypothesisViolated(
                f"angle(A_{j}, C) = {ang:.17g} exceeds alpha = {alpha:.17g}", link=j
            )


def thm2_radius(p: MatrixPolynomial, k: float, alpha: float) -> float:
    norms = p.frobenius_norms()
    m = p.degree
    try:
        inv_fro = frobenius_norm(inverse(p.leading))
    except SingularMatrix as exc:
        raise SingularLeadingCoefficient(f"A_{m} is singular: {exc}") from exc
    s, c = math.sin(alpha), math.cos(alpha)
    bracket = (k * norms[m] - norms[0]) * (s + c) + norms[0] + 2.0 * s * sum(norms[:m])
    return inv_fro * bracket


def bound_thm2(p: MatrixPolynomial, k: float, alpha: float, c_axis) -> BoundResult:
    check_thm2_hypothesis(p, k, alpha, c_axis)
    radius = thm2_radius(p, k, alpha)
    witness = HypothesisWitness(k=float(k), alpha=float(alpha), C=np.asarray(c_axis),
                                norm=NormKind.FROBENIUS)
    return BoundResult(TheoremId.THM_2, True, witness, Disk(complex(1.0 - k), radius))


def bound_cor1(p: MatrixPolynomial, k: float, alpha: float, c_axis, t: float) -> BoundResult:
    """Theorem 2 on Q(z) = P(tz), with the region mapped back by z -> t z."""
    try:
        scaled = scale_argument(p, t)
    except InvalidScale as exc:
        raise HypothesisViolated(str(exc)) from exc
    inner = bound_thm2(scaled, k, alpha, c_axis)
    witness = HypothesisWitness(t=float(t), k=float(k), alpha=float(alpha),
                                C=np.asarray(c_axis), norm=NormKind.FROBENIUS)
    return BoundResult(TheoremId.COR_1, True, witness, inner.region.scaled(t))


# --------------------------------------------------------------------------
# Theorem 3


def thm3_radii(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> tuple[float, float]:
    kind = NormKind.parse(kind)
    m = p.degree
    try:
        a0_inv_norm = 1.0 / inverse_norm_reciprocal(p[0], kind)
    except SingularMatrix as exc:
        raise SingularA0(f"A_0 is singular: {exc}") from exc
    am_inv_norm = 1.0 / _leading_reciprocal(p, kind)
    norms = [matrix_norm(c, kind) for c in p.coefficients]
    inner_terms, outer_terms = [], []
    for k in range(1, m + 1):
        w = float(pell_weight(m, k))
        if norms[k] > 0.0:
            inner_terms.append((w / (a0_inv_norm * norms[k])) ** (1.0 / k))
        outer_terms.append((norms[m - k] * am_inv_norm / w) ** (1.0 / k))
    r1, r2 = min(inner_terms), max(outer_terms)
    # r_1 <= r_2 holds exactly; equal radii (m = 1 scalar case) can round apart
    if r2 < r1 <= r2 * (1.0 + 1e-12):
        r1 = r2
    return r1, r2


def bound_thm3(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2) -> BoundResult:
    kind = NormKind.parse(kind)
    r1, r2 = thm3_radii(p, kind)
    return BoundResult(TheoremId.THM_3, True, HypothesisWitness(norm=kind), Annulus(r1, r2))


# --------------------------------------------------------------------------
# Theorem 4


def check_thm4_hypothesis(p: MatrixPolynomial, k: float, t: float,
                          tol: float = DEFAULT_TOL) -> None:
    if not k >= 1.0:
        raise HypothesisViolated(f"k must be >= 1, got {k}")
    if not (t > 0.0 and math.isfinite(t)):
        raise HypothesisViolated(f"t must be a positive real, got {t}")
    for j, c in enumerate(p.coefficients):
        if not is_hermitian(c, tol):
            raise HypothesisViolated(f"A_{j} is not Hermitian", link=j)
    terms = [k * p[0]] + [t**j * p[j] for j in range(1, p.degree + 1)]
    for j in range(len(terms) - 1):
        if not loewner_geq(terms[j], terms[j + 1], tol):
            raise HypothesisViolated(f"link {j}: t^{j}A_{j} >= t^{j + 1}A_{j + 1} fails "
                                     f"(k = {k!r}, t = {t!r})", link=j)
    if not is_psd(terms[-1], tol):
        raise HypothesisViolated(f"t^{p.degree}A_{p.degree} is not PSD", link=p.degree)


def bound_thm4(p: MatrixPolynomial, k: float, t: float) -> BoundResult:
    check_thm4_hypothesis(p, k, t)
    center = (k - 1.0) * t / (2.0 * k - 1.0)
    radius = k * t / (2.0 * k - 1.0)
    return BoundResult(TheoremId.THM_4, True, HypothesisWitness(t=float(t), k=float(k)),
                       ExclusionDisk(complex(center), radius))


def thm4_witness_candidates(p: MatrixPolynomial, levels: int = 8) -> list[tuple[float, float]]:
    """(k, t) pairs to try for Theorem 4, largest exclusion radius first.

    t_max is the largest t keeping A_{j-1} >= t A_j for j >= 2 (for m = 1, the
    largest t with A_0 >= t A_1).  For each t = t_max 2^-i the smallest
    admissible k is max(1, t / s) with s the largest scale such that
    A_0 >= s A_1.
    """
    coeffs = p.coefficients
    if not all(is_hermitian(c) for c in coeffs) or not is_psd(coeffs[-1]):
        return []
    s01 = max_loewner_scale(coeffs[0], coeffs[1])
    if not s01 > 0.0:
        return []
    t_max = math.inf
    for j in range(2, p.degree + 1):
        t_max = min(t_max, max_loewner_scale(coeffs[j - 1], coeffs[j]))
    if p.degree == 1 or not math.isfinite(t_max):
        t_max = min(t_max, s01)
    if not (t_max > 0.0 and math.isfinite(t_max)):
        return []
    out = []
    for i in range(levels + 1):
        t = t_max * 2.0**-i
        k = max(1.0, t / s01)
        out.append((k, t))
    out.sort(key=lambda kt: -kt[0] * kt[1] / (2 * kt[0] - 1))
    return out


# --------------------------------------------------------------------------
# aggregation


def _cor1_candidates(p: MatrixPolynomial) -> list[float]:
    norms = p.frobenius_norms()
    m = p.degree
    if m >= 2:
        t_min = max(norms[j - 1] / norms[j] for j in range(1, m))
        return [t_min * 2.0**i for i in range(11)]
    return [2.0**i for i in range(-5, 6)]


def _auto_cor1(p: MatrixPolynomial) -> BoundResult:
    best: BoundResult | None = None
    reasons = []
    for t in _cor1_candidates(p):
        if not (t > 0.0 and math.isfinite(t)):
            continue
        scaled = scale_argument(p, t)
        try:
            wit = cone_witness(scaled)
        except ZeroCoefficient as exc:
            return _failed(TheoremId.COR_1, str(exc))
        if wit is None:
            reasons.append(f"t = {t:.6g}: no cone witness for P(tz)")
            continue
        k, alpha, axis = wit
        try:
            res = bound_cor1(p, k, alpha, axis, t)
        except HypothesisViolated as exc:
            reasons.append(f"t = {t:.6g}: {exc}")
            continue
        if best is None or res.region.radius < best.region.radius:
            best = res
    if best is None:
        return _failed(TheoremId.COR_1, "; ".join(reasons[:3]) or "no admissible t")
    return best


def _auto_thm2(p: MatrixPolynomial) -> BoundResult:
    try:
        wit = cone_witness(p)
    except ZeroCoefficient as exc:
        return _failed(TheoremId.THM_2, str(exc))
    if wit is None:
        return _failed(TheoremId.THM_2,
                       "Frobenius norm chain or cone condition (alpha <= pi/2) fails")
    k, alpha, axis = wit
    try:
        return bound_thm2(p, k, alpha, axis)
    except HypothesisViolated as exc:
        return _failed(TheoremId.THM_2, str(exc))


def _auto_thm1(p: MatrixPolynomial, kind: NormKind) -> BoundResult:
    t = optimal_t_thm1(p, kind)
    if t is None:
        reason = ("A_0 is not Hermitian positive definite" if not is_pd(p[0])
                  else "norm chain admits no positive t")
        return _failed(TheoremId.THM_1, reason, HypothesisWitness(norm=kind))
    try:
        return bound_thm1(p, t, kind)
    except HypothesisViolated as exc:
        return _failed(TheoremId.THM_1, str(exc), HypothesisWitness(t=t, norm=kind))


def _auto_thm4(p: MatrixPolynomial) -> BoundResult:
    candidates = thm4_witness_candidates(p)
    if not candidates:
        return _failed(TheoremId.THM_4,
                       "coefficients are not a Hermitian chain kA_0 >= tA_1 >= ... >= 0 "
                       "for any t > 0")
    last = ""
    for k, t in candidates:
        try:
            return bound_thm4(p, k, t)
        except HypothesisViolated as exc:
            last = str(exc)
    return _failed(TheoremId.THM_4, last)


def all_bounds(p: MatrixPolynomial, kind: NormKind = NormKind.INDUCED2,
               theorems: Sequence[TheoremId | str] | None = None) -> list[BoundResult]:
    """Every theorem with automatically chosen witnesses, in canonical order."""
    kind = NormKind.parse(kind)
    wanted = THEOREM_ORDER if theorems is None else {TheoremId.parse(t) for t in theorems}
    runners = {
        TheoremId.THM_C: lambda: bound_thm_c(p, kind),
        TheoremId.THM_D: lambda: bound_thm_d(p, kind),
        TheoremId.THM_E: lambda: bound_thm_e(p),
        TheoremId.THM_1: lambda: _auto_thm1(p, kind),
        TheoremId.THM_2: lambda: _auto_thm2(p),
        TheoremId.COR_1: lambda: _auto_cor1(p),
        TheoremId.THM_3: lambda: bound_thm3(p, kind),
        TheoremId.THM_4: lambda: _auto_thm4(p),
    }
    results = []
    for tid in THEOREM_ORDER:
        if tid not in wanted:
            continue
        try:
            results.append(runners[tid]())
        except EKBoundsError as exc:
            results.append(_failed(tid, f"{type(exc).__name__}: {exc}",
                                   HypothesisWitness(norm=kind)))
    return results


# --------------------------------------------------------------------------
# verification against a computed spectrum


@dataclass(frozen=True)
class TightnessRow:
    theorem_id: TheoremId | str
    region: Region
    slack: float
    inner_margin: float | None = None


def region_holds(region: Region, eigenvalues, rtol: float = MEMBERSHIP_RTOL) -> bool:
    return region.holds_for(np.asarray(eigenvalues).ravel(), rtol)


def tightness_report(results: Sequence[BoundResult], eigenvalues) -> list[TightnessRow]:
    """Slack of every satisfied bound against the spectrum, tightest first.

    Disks: radius minus the largest eigenvalue distance from the center.
    Annuli: outer radius minus max |lambda| (the inner gap is ``inner_margin``).
    Exclusion disks: smallest eigenvalue distance from the center minus radius.
    """
    lams = np.asarray(getattr(eigenvalues, "eigenvalues", eigenvalues)).ravel()
    rows = []
    for res in results:
        if not res.hypothesis_ok:
            continue
        margin = res.region.inner_margin(lams) if isinstance(res.region, Annulus) else None
        rows.append(TightnessRow(res.theorem_id, res.region, res.region.slack(lams), margin))
    rows.sort(key=lambda r: r.slack)
    return rows
