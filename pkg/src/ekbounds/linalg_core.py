"""Dense complex linear-algebra primitives.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; nothing here
mutates its arguments.
"""

from __future__ import annotations

import enum
import math
import warnings

import numpy as np
import scipy.linalg

from .errors import NonConvergence, NotHermitian, SingularMatrix, ZeroMatrixAngle

DEFAULT_TOL = 1e-10
SINGULAR_PIVOT_TOL = 1e-14


class NormKind(enum.Enum):
    INDUCED2 = "2"
    INDUCED1 = "1"
    INDUCED_INF = "inf"
    FROBENIUS = "fro"

    @classmethod
    def parse(cls, value: "NormKind | str | int") -> "NormKind":
        if isinstance(value, NormKind):
            return value
        key = str(value).strip().lower()
        aliases = {
            "2": cls.INDUCED2, "induced2": cls.INDUCED2, "spectral": cls.INDUCED2,
            "1": cls.INDUCED1, "induced1": cls.INDUCED1,
            "inf": cls.INDUCED_INF, "induced_inf": cls.INDUCED_INF, "inducedinf": cls.INDUCED_INF,
            "fro": cls.FROBENIUS, "frobenius": cls.FROBENIUS, "f": cls.FROBENIUS,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown norm kind {value!r}") from None


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array (a read-only copy)."""
    arr = np.array(a, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


def _require_square(a: np.ndarray) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def frobenius_norm(a) -> float:
    a = np.asarray(a)
    return float(np.sqrt(np.sum(a.real**2 + a.imag**2)))


def matrix_norm(a, kind: NormKind = NormKind.INDUCED2) -> float:
    a = np.asarray(a, dtype=np.complex128)
    kind = NormKind.parse(kind)
    if kind is NormKind.FROBENIUS:
        return frobenius_norm(a)
    if kind is NormKind.INDUCED1:
        return float(np.max(np.sum(np.abs(a), axis=0)))
    if kind is NormKind.INDUCED_INF:
        return float(np.max(np.sum(np.abs(a), axis=1)))
    try:
        two = float(np.linalg.norm(a, 2))
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(f"SVD did not converge: {exc}") from exc
    # ||A||_2 <= ||A||_F exactly; the SVD can overshoot by an ulp (e.g. n = 1)
    return min(two, frobenius_norm(a))


def singular_values(a) -> np.ndarray:
    try:
        return np.linalg.svd(np.asarray(a, dtype=np.complex128), compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(f"SVD did not converge: {exc}") from exc


def smallest_singular_value(a) -> float:
    return float(singular_values(a)[-1])


def inverse(a) -> np.ndarray:
    """Inverse by LU with partial pivoting.

    Raises SingularMatrix when a pivot falls below 1e-14 * ||A||_F.
    """
    a = np.asarray(a, dtype=np.complex128)
    n = _require_square(a)
    scale = frobenius_norm(a)
    if scale == 0.0:
        raise SingularMatrix("zero matrix is singular")
    with warnings.catch_warnings():
        # exact zero pivots are reported below as SingularMatrix
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    smallest_pivot = float(np.min(np.abs(np.diag(lu))))
    if smallest_pivot < SINGULAR_PIVOT_TOL * scale:
        raise SingularMatrix(
            f"pivot {smallest_pivot:.3e} below {SINGULAR_PIVOT_TOL:g}*||A||_F = "
            f"{SINGULAR_PIVOT_TOL * scale:.3e}"
        )
    return scipy.linalg.lu_solve((lu, piv), np.eye(n, dtype=np.complex128), check_finite=False)


def inverse_norm_reciprocal(a, kind: NormKind = NormKind.INDUCED2) -> float:
    """1 / ||A^{-1}||.  In the 2-norm this is sigma_min(A), with no inversion."""
    a = np.asarray(a, dtype=np.complex128)
    _require_square(a)
    kind = NormKind.parse(kind)
    if kind is NormKind.INDUCED2:
        s = singular_values(a)
        if s[0] == 0.0 or s[-1] < SINGULAR_PIVOT_TOL * s[0]:
            raise SingularMatrix(f"sigma_min = {s[-1]:.3e} is numerically zero")
        return float(s[-1])
    return 1.0 / matrix_norm(inverse(a), kind)


def frobenius_inner_product(a, b) -> complex:
    """<A, B> = tr(B^* A)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(b, a))


def matrix_angle(a, b) -> float:
    """Angle between A and B in the real inner product Re<A, B>, in [0, pi]."""
    na = frobenius_norm(a)
    nb = frobenius_norm(b)
    if na == 0.0 or nb == 0.0:
        raise ZeroMatrixAngle("angle with a zero matrix is undefined")
    # half-angle form; arccos of the cosine loses ~1e-8 near collinearity
    ua = np.asarray(a, dtype=np.complex128) / na
    ub = np.asarray(b, dtype=np.complex128) / nb
    return float(2.0 * math.atan2(frobenius_norm(ua - ub), frobenius_norm(ua + ub)))


def _scaled_tol(a: np.ndarray, tol: float) -> float:
    return tol * (1.0 + frobenius_norm(a))


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return frobenius_norm(a - a.conj().T) <= _scaled_tol(a, tol)


def _lambda_min(a: np.ndarray) -> float:
    herm = 0.5 * (a + a.conj().T)
    return float(np.linalg.eigvalsh(herm)[0])


def is_psd(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=np.complex128)
    if not is_hermitian(a, tol):
        return False
    return _lambda_min(a) >= -_scaled_tol(a, tol)


def is_pd(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=np.complex128)
    if not is_hermitian(a, tol):
        return False
    return _lambda_min(a) > _scaled_tol(a, tol)


def loewner_geq(a, b, tol: float = DEFAULT_TOL) -> bool:
    """A >= B in the Loewner order, i.e. A - B Hermitian PSD."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return is_psd(a - b, tol)


def hermitian_extremes(a, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    a = np.asarray(a, dtype=np.complex128)
    _require_square(a)
    if not is_hermitian(a, tol):
        raise NotHermitian("hermitian_extremes needs a Hermitian matrix")
    w = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
    return float(w[0]), float(w[-1])


def numerical_radius_estimate(a, grid: int = 360) -> float:
    """Angular-sweep lower bound on the numerical radius r(A).

    r(A) = max_theta lambda_max(Re(e^{i theta} A)); the maximum is taken over
    ``grid`` equally spaced angles, so the estimate approaches r(A) from below.
    """
    a = np.asarray(a, dtype=np.complex128)
    _require_square(a)
    if grid < 1:
        raise ValueError("grid must be a positive integer")
    theta = 2.0 * np.pi * np.arange(grid) / grid
    rot = np.exp(1j * theta)[:, None, None] * a[None, :, :]
    herm = 0.5 * (rot + np.conj(np.swapaxes(rot, 1, 2)))
    return float(max(0.0, np.max(np.linalg.eigvalsh(herm)[:, -1])))


def max_loewner_scale(x, y, tol: float = DEFAULT_TOL) -> float:
    """Largest s >= 0 with X - sY >= 0, for Hermitian X and PSD Y.

    Returns ``inf`` when Y = 0 and X >= 0, and ``-inf`` when even X itself is
    not PSD.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    if not is_psd(x, tol):
        return -np.inf
    if frobenius_norm(y) == 0.0:
        return np.inf
    yh = 0.5 * (y + y.conj().T)
    xh = 0.5 * (x + x.conj().T)
    try:
        chol = np.linalg.cholesky(yh)
    except np.linalg.LinAlgError:
        chol = None
    if chol is not None and is_pd(yh, tol):
        linv = scipy.linalg.solve_triangular(chol, np.eye(len(chol)), lower=True)
        w = np.linalg.eigvalsh(linv @ xh @ linv.conj().T)
        return max(0.0, float(w[0]))
    # singular PSD Y: X - sY is monotone in s, so bisect
    lo, hi = 0.0, float(np.trace(xh).real / np.trace(yh).real)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if is_psd(xh - mid * yh, tol):
            lo = mid
        else:
            hi = mid
    return lo
