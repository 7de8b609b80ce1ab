"""Matrix polynomials P(z) = sum_j A_j z^j and their structural transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidPolynomial, InvalidScale, SingularLeadingCoefficient, SingularMatrix
from .linalg_core import as_matrix, frobenius_norm, inverse, matrix_norm


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """Coefficients in ascending powers: ``coefficients[j]`` multiplies z**j."""

    coefficients: tuple[np.ndarray, ...]

    def __init__(self, coefficients: Iterable):
        mats = tuple(as_matrix(c) for c in coefficients)
        if not mats:
            raise InvalidPolynomial("a matrix polynomial needs at least one coefficient")
        shape = mats[0].shape
        if shape[0] != shape[1]:
            raise InvalidPolynomial(f"coefficients must be square, got {shape}")
        for j, c in enumerate(mats):
            if c.shape != shape:
                raise InvalidPolynomial(f"coefficient {j} has shape {c.shape}, expected {shape}")
        if len(mats) > 1 and not np.any(mats[-1]):
            raise InvalidPolynomial(
                f"leading coefficient A_{len(mats) - 1} is zero; degree must be honest"
            )
        object.__setattr__(self, "coefficients", mats)

    @classmethod
    def from_scalars(cls, coeffs: Sequence[complex]) -> "MatrixPolynomial":
        """Build the n = 1 polynomial sum_j coeffs[j] z^j."""
        return cls([[[c]] for c in coeffs])

    @property
    def n(self) -> int:
        return self.coefficients[0].shape[0]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> np.ndarray:
        return self.coefficients[-1]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, j: int) -> np.ndarray:
        return self.coefficients[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return len(self) == len(other) and all(
            a.shape == b.shape and np.array_equal(a, b)
            for a, b in zip(self.coefficients, other.coefficients)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MatrixPolynomial(n={self.n}, degree={self.degree})"

    def __call__(self, z: complex) -> np.ndarray:
        return evaluate(self, z)

    @property
    def leading_nonsingular(self) -> bool:
        return _nonsingular(self.coefficients[-1])

    @property
    def constant_nonsingular(self) -> bool:
        return _nonsingular(self.coefficients[0])

    def norms(self, kind="2") -> list[float]:
        return [matrix_norm(c, kind) for c in self.coefficients]

    def frobenius_norms(self) -> list[float]:
        return [frobenius_norm(c) for c in self.coefficients]


def _nonsingular(a: np.ndarray) -> bool:
    try:
        inverse(a)
    except SingularMatrix:
        return False
    return True


def evaluate(p: MatrixPolynomial, z: complex) -> np.ndarray:
    """Horner evaluation of P(z)."""
    z = complex(z)
    acc = np.array(p.coefficients[-1], dtype=np.complex128)
    for c in reversed(p.coefficients[:-1]):
        acc = acc * z + c
    return acc


def scale_argument(p: MatrixPolynomial, t: float) -> MatrixPolynomial:
    """Q(z) = P(t z), i.e. Q_j = A_j t^j."""
    t = float(t)
    if not np.isfinite(t) or t <= 0.0:
        raise InvalidScale(f"scale factor must be a positive real, got {t}")
    return MatrixPolynomial(c * t**j for j, c in enumerate(p.coefficients))


def reverse(p: MatrixPolynomial) -> MatrixPolynomial:
    """z^m P(1/z): coefficients in reverse order."""
    return MatrixPolynomial(reversed(p.coefficients))


def companion(p: MatrixPolynomial) -> np.ndarray:
    """Monic block companion matrix of size mn x mn.

    Identity blocks on the block superdiagonal; the last block row is
    (-A_m^{-1} A_0, ..., -A_m^{-1} A_{m-1}).
    """
    n, m = p.n, p.degree
    if m == 0:
        raise InvalidPolynomial("degree-0 polynomial has no finite eigenvalues to linearize")
    try:
        lead_inv = inverse(p.leading)
    except SingularMatrix as exc:
        raise SingularLeadingCoefficient(f"A_{m} is singular: {exc}") from exc
    size = n * m
    comp = np.zeros((size, size), dtype=np.complex128)
    if m > 1:
        comp[: size - n, n:] = np.eye(size - n)
    comp[size - n :, :] = -np.hstack([lead_inv @ c for c in p.coefficients[:-1]])
    return comp
