"""Seeded constructors for matrix polynomials that satisfy a chosen hypothesis.

All randomness comes from ``numpy.random.Generator(PCG64(seed))``, so an
identical :class:`GeneratorConfig` reproduces an identical instance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import GeneratorExhausted
from .linalg_core import frobenius_norm, matrix_norm, smallest_singular_value
from .matpoly import MatrixPolynomial

PD_FLOOR = 1e-3


class InstanceClass(str, enum.Enum):
    UNCONSTRAINED = "unconstrained"
    LOEWNER_CHAIN = "loewner"
    GEOMETRIC_NORM_CHAIN = "geometric"
    FROBENIUS_CONE = "cone"
    HERMITIAN_SCALED_CHAIN = "hermitian"

    @classmethod
    def parse(cls, value: "InstanceClass | str") -> "InstanceClass":
        if isinstance(value, InstanceClass):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {
            "loewnerchain": cls.LOEWNER_CHAIN, "loewner_chain": cls.LOEWNER_CHAIN,
            "geometricnormchain": cls.GEOMETRIC_NORM_CHAIN,
            "geometric_norm_chain": cls.GEOMETRIC_NORM_CHAIN,
            "frobeniuscone": cls.FROBENIUS_CONE, "frobenius_cone": cls.FROBENIUS_CONE,
            "hermitianscaledchain": cls.HERMITIAN_SCALED_CHAIN,
            "hermitian_scaled_chain": cls.HERMITIAN_SCALED_CHAIN,
        }
        for member in cls:
            if key == member.value:
                return member
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown instance class {value!r}") from None


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    m: int
    instance_class: InstanceClass = InstanceClass.UNCONSTRAINED
    t: float = 1.0
    k: float = 1.0
    alpha: float = math.pi / 6

    def __post_init__(self):
        object.__setattr__(self, "instance_class", InstanceClass.parse(self.instance_class))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if not (self.t > 0.0 and math.isfinite(self.t)):
            raise ValueError(f"t must be a positive real, got {self.t}")
        if not (self.k >= 1.0 and math.isfinite(self.k)):
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0.0 <= self.alpha <= math.pi / 2:
            raise ValueError(f"alpha must lie in [0, pi/2], got {self.alpha}")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed))


def _complex_uniform(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, (n, n)) + 1j * rng.uniform(-1.0, 1.0, (n, n))


def _complex_gaussian(rng: np.random.Generator, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def _gram(b: np.ndarray) -> np.ndarray:
    g = b.conj().T @ b
    return 0.5 * (g + g.conj().T)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_complex_gaussian(rng, n))
    d = np.diag(r)
    phases = np.where(d == 0, 1.0, d / np.abs(d))
    return q * phases[None, :]


def random_hermitian_pd(rng: np.random.Generator, n: int, floor: float = PD_FLOOR) -> np.ndarray:
    return _gram(_complex_gaussian(rng, n)) + floor * np.eye(n)


def gen_unconstrained(cfg: GeneratorConfig) -> MatrixPolynomial:
    rng = cfg.rng()
    coeffs = [_complex_uniform(rng, cfg.n) for _ in range(cfg.m)]
    lead = _complex_uniform(rng, cfg.n)
    while smallest_singular_value(lead) < 0.1:
        lead = _complex_uniform(rng, cfg.n)
    return MatrixPolynomial(coeffs + [lead])


def gen_loewner_chain(cfg: GeneratorConfig) -> MatrixPolynomial:
    rng = cfg.rng()
    coeffs = [random_hermitian_pd(rng, cfg.n)]
    for _ in range(cfg.m):
        # small increments now and then push eigenvalues towards the unit circle
        scale = 10.0 ** rng.uniform(-3.0, 0.0)
        coeffs.append(coeffs[-1] + scale * _gram(_complex_gaussian(rng, cfg.n)))
    return MatrixPolynomial(coeffs)


def gen_geometric_norm_chain(cfg: GeneratorConfig) -> MatrixPolynomial:
    rng = cfg.rng()
    n, m, t = cfg.n, cfg.m, cfg.t
    sigma = rng.uniform(0.5, 2.0)
    lead = sigma * random_unitary(rng, n)
    targets = [0.0] * m
    nu = sigma
    for j in range(m - 1, -1, -1):
        nu = nu / t * rng.uniform(0.5, 1.0)
        targets[j] = nu
    coeffs = []
    for j in range(m):
        base = random_hermitian_pd(rng, n) if j == 0 else _complex_gaussian(rng, n)
        coeffs.append(base * (targets[j] / matrix_norm(base, "2")))
    coeffs.append(lead)
    return MatrixPolynomial(coeffs)


def _orthogonal_unit(rng: np.random.Generator, axis: np.ndarray) -> np.ndarray:
    # Gram-Schmidt in the real inner product Re<X, Y>
    while True:
        w = _complex_gaussian(rng, axis.shape[0])
        w = w - np.vdot(axis, w).real * axis
        nrm = frobenius_norm(w)
        if nrm > 1e-8:
            return w / nrm


def _cone_direction(rng: np.random.Generator, axis: np.ndarray, alpha: float) -> np.ndarray:
    beta = rng.uniform(0.0, alpha)
    if axis.size == 1:
        # in C^1 seen as R^2 the orthogonal direction is i*axis (up to sign)
        w = 1j * axis * (1.0 if rng.uniform() < 0.5 else -1.0)
    else:
        w = _orthogonal_unit(rng, axis)
    return math.cos(beta) * axis + math.sin(beta) * w


def gen_cone_instance(cfg: GeneratorConfig, max_tries: int = 100) -> MatrixPolynomial:
    return gen_cone_instance_with_axis(cfg, max_tries)[0]


def gen_cone_instance_with_axis(cfg: GeneratorConfig,
                                max_tries: int = 100) -> tuple[MatrixPolynomial, np.ndarray]:
    """Cone instance together with its unit-Frobenius axis C (the Theorem 2 witness)."""
    rng = cfg.rng()
    n, m, k, alpha = cfg.n, cfg.m, cfg.k, cfg.alpha
    axis = _complex_gaussian(rng, n)
    axis /= frobenius_norm(axis)
    lead_norm = 1.0
    norms = np.sort(rng.uniform(0.05, 1.0, m)) * k * lead_norm
    coeffs = [norms[j] * _cone_direction(rng, axis, alpha) for j in range(m)]
    for _ in range(max_tries):
        lead = lead_norm * _cone_direction(rng, axis, alpha)
        if smallest_singular_value(lead) >= 1e-3 * frobenius_norm(lead):
            return MatrixPolynomial(coeffs + [lead]), axis
    raise GeneratorExhausted(
        f"no well-conditioned leading coefficient in the cone after {max_tries} tries"
    )


def gen_hermitian_scaled_chain(cfg: GeneratorConfig) -> MatrixPolynomial:
    rng = cfg.rng()
    n, m, k, t = cfg.n, cfg.m, cfg.k, cfg.t
    # scaled[j] holds t^j A_j; built from the top down by PSD increments
    scaled = [None] * (m + 1)
    scaled[m] = random_hermitian_pd(rng, n)
    for j in range(m - 1, 0, -1):
        scaled[j] = scaled[j + 1] + rng.uniform(0.0, 1.0) * _gram(_complex_gaussian(rng, n))
    top = scaled[1] if m >= 1 else scaled[0]
    a0 = (top + rng.uniform(0.0, 1.0) * _gram(_complex_gaussian(rng, n))) / k
    coeffs = [a0] + [scaled[j] / t**j for j in range(1, m + 1)]
    return MatrixPolynomial(coeffs)


_DISPATCH = {
    InstanceClass.UNCONSTRAINED: gen_unconstrained,
    InstanceClass.LOEWNER_CHAIN: gen_loewner_chain,
    InstanceClass.GEOMETRIC_NORM_CHAIN: gen_geometric_norm_chain,
    InstanceClass.FROBENIUS_CONE: gen_cone_instance,
    InstanceClass.HERMITIAN_SCALED_CHAIN: gen_hermitian_scaled_chain,
}


def generate(cfg: GeneratorConfig) -> MatrixPolynomial:
    return _DISPATCH[cfg.instance_class](cfg)
