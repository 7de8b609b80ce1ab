"""Dense eigensolvers and the polynomial eigenvalue front end.

Two routes compute the spectrum of a dense complex matrix:

* ``"lapack"`` (default) delegates to ``numpy.linalg.eigvals`` (zgeev), a
  backward-stable Hessenberg/QR implementation.
* ``"qr"`` is a self-contained unitary Hessenberg reduction followed by
  single-shift complex QR with Wilkinson shifts and deflation.  It is slower
  and exists mainly so the two routes can check each other.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergence
from .linalg_core import matrix_norm, singular_values
from .matpoly import MatrixPolynomial, companion, evaluate

MAX_ITER_PER_EIGENVALUE = 40
DEFLATION_TOL = 1e-14


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: complex
    residual: float


@dataclass(frozen=True)
class Spectrum:
    pairs: tuple[EigenPair, ...]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([p.eigenvalue for p in self.pairs], dtype=np.complex128)

    @property
    def residuals(self) -> np.ndarray:
        return np.array([p.residual for p in self.pairs])

    @property
    def max_residual(self) -> float:
        return max((p.residual for p in self.pairs), default=0.0)

    def __len__(self) -> int:
        return len(self.pairs)


def hessenberg(a) -> np.ndarray:
    """Upper Hessenberg form by Householder reflections (unitary similarity)."""
    h = np.array(a, dtype=np.complex128)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        h[k + 2 :, k] = 0.0
    return h


def _eig2x2(a: complex, b: complex, c: complex, d: complex) -> tuple[complex, complex]:
    tr_half = 0.5 * (a + d)
    disc = cmath.sqrt(0.25 * (a - d) ** 2 + b * c)
    # pick the larger-magnitude root first, recover the other from the determinant
    l1 = tr_half + disc if abs(tr_half + disc) >= abs(tr_half - disc) else tr_half - disc
    det = a * d - b * c
    l2 = det / l1 if l1 != 0 else tr_half - disc
    return l1, l2


def _wilkinson_shift(w: np.ndarray) -> complex:
    a, b, c, d = w[-2, -2], w[-2, -1], w[-1, -2], w[-1, -1]
    l1, l2 = _eig2x2(a, b, c, d)
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def _qr_step(w: np.ndarray, shift: complex) -> None:
    """One explicit shifted QR step on a Hessenberg block, in place."""
    size = w.shape[0]
    idx = np.arange(size)
    w[idx, idx] -= shift
    rotations = []
    for k in range(size - 1):
        x, y = w[k, k], w[k + 1, k]
        r = np.hypot(abs(x), abs(y))
        if r == 0.0:
            c, s = 1.0 + 0j, 0j
        else:
            c, s = x / r, y / r
        g = np.array([[c.conjugate(), s.conjugate()], [-s, c]])
        w[k : k + 2, k:] = g @ w[k : k + 2, k:]
        w[k + 1, k] = 0.0
        rotations.append(g)
    for k, g in enumerate(rotations):
        w[: k + 2, k : k + 2] = w[: k + 2, k : k + 2] @ g.conj().T
    w[idx, idx] += shift


def hessenberg_qr_eigenvalues(a, max_iter: int = MAX_ITER_PER_EIGENVALUE) -> np.ndarray:
    h = hessenberg(a)
    n = h.shape[0]
    scale = max(matrix_norm(h, "fro"), np.finfo(float).tiny)
    eigs: list[complex] = []
    hi = n - 1
    iters = 0
    while hi >= 0:
        if hi == 0:
            eigs.append(complex(h[0, 0]))
            break
        lo = 0
        for i in range(hi, 0, -1):
            off = abs(h[i, i - 1])
            ref = abs(h[i, i]) + abs(h[i - 1, i - 1])
            if off <= DEFLATION_TOL * ref or off <= np.finfo(float).eps * 1e-2 * scale:
                h[i, i - 1] = 0.0
                lo = i
                break
        if lo == hi:
            eigs.append(complex(h[hi, hi]))
            hi -= 1
            iters = 0
            continue
        if lo == hi - 1:
            eigs.extend(_eig2x2(h[lo, lo], h[lo, hi], h[hi, lo], h[hi, hi]))
            hi -= 2
            iters = 0
            continue
        if iters >= max_iter:
            raise NonConvergence(
                f"QR iteration cap of {max_iter} reached with {hi + 1} eigenvalues outstanding"
            )
        iters += 1
        block = h[lo : hi + 1, lo : hi + 1]
        if iters % 10 == 0:
            # exceptional shift breaks rare cycling
            shift = block[-1, -1] + 0.75 * abs(block[-1, -2]) * cmath.exp(1j * iters)
        else:
            shift = _wilkinson_shift(block)
        _qr_step(block, shift)
        h[lo : hi + 1, lo : hi + 1] = block
    return np.array(eigs, dtype=np.complex128)


def dense_eigenvalues(a, method: str = "lapack") -> np.ndarray:
    """All eigenvalues of a square matrix, with multiplicity."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if method == "qr":
        return hessenberg_qr_eigenvalues(a)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver method {method!r}")
    try:
        return np.linalg.eigvals(a).astype(np.complex128)
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(f"eigenvalue iteration failed: {exc}") from exc


def pep_residual(p: MatrixPolynomial, lam: complex) -> float:
    """sigma_min(P(lam)) / (sum_j ||A_j||_2 |lam|^j + ||A_0||_2)."""
    try:
        smin = float(singular_values(evaluate(p, lam))[-1])
    except NonConvergence:
        return float("inf")
    mod = abs(lam)
    norms = p.norms("2")
    denom = sum(nj * mod**j for j, nj in enumerate(norms)) + norms[0]
    if denom == 0.0:
        return float("inf") if smin > 0 else 0.0
    return smin / denom


def polyeig(p: MatrixPolynomial, method: str = "lapack") -> Spectrum:
    """The n*m eigenvalues of P via its companion linearization."""
    lams = dense_eigenvalues(companion(p), method=method)
    return Spectrum(tuple(EigenPair(complex(lam), pep_residual(p, lam)) for lam in lams))
