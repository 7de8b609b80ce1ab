import math

import numpy as np
import pytest

from ekbounds.bounds import (
    bound_thm2,
    bound_thm4,
    bound_thm_c,
    bound_thm_d,
    check_loewner_chain,
    optimal_t_thm1,
)
from ekbounds.generators import (
    GeneratorConfig,
    InstanceClass,
    gen_cone_instance_with_axis,
    generate,
)
from ekbounds.linalg_core import is_hermitian, is_pd, matrix_angle, smallest_singular_value
from ekbounds.serialization import serialize_instance

SEEDS = range(200)


def dims(seed):
    return 1 + seed % 4, 1 + (seed // 4) % 6


class TestConfig:
    def test_parse_aliases(self):
        assert InstanceClass.parse("LoewnerChain") is InstanceClass.LOEWNER_CHAIN
        assert InstanceClass.parse("hermitian-scaled-chain") is InstanceClass.HERMITIAN_SCALED_CHAIN
        with pytest.raises(ValueError):
            InstanceClass.parse("toeplitz")

    @pytest.mark.parametrize("kwargs", [
        {"seed": -1}, {"seed": 2**64}, {"n": 0}, {"m": 0},
        {"t": 0.0}, {"k": 0.5}, {"alpha": 2.0}, {"t": math.inf},
    ])
    def test_rejects(self, kwargs):
        base = dict(seed=1, n=2, m=2)
        base.update(kwargs)
        with pytest.raises(ValueError):
            GeneratorConfig(**base)


@pytest.mark.parametrize("cls", list(InstanceClass))
def test_deterministic(cls):
    cfg = GeneratorConfig(42, 2, 2, cls)
    assert serialize_instance(generate(cfg)) == serialize_instance(generate(cfg))
    other = GeneratorConfig(43, 2, 2, cls)
    assert serialize_instance(generate(cfg)) != serialize_instance(generate(other))


def test_unconstrained_self_certifies():
    for seed in SEEDS:
        p = generate(GeneratorConfig(seed, *dims(seed)))
        assert smallest_singular_value(p.leading) >= 0.1
        assert bound_thm_c(p).hypothesis_ok and bound_thm_d(p).hypothesis_ok


def test_loewner_self_certifies():
    for seed in SEEDS:
        p = generate(GeneratorConfig(seed, *dims(seed), "loewner"))
        assert all(is_hermitian(c, 1e-12) for c in p.coefficients)
        assert check_loewner_chain(p) == []


def test_geometric_self_certifies():
    for seed in SEEDS:
        t = [0.25, 0.5, 1.0, 2.0, 10.0][seed % 5]
        p = generate(GeneratorConfig(seed, *dims(seed), "geometric", t=t))
        assert is_pd(p[0])
        assert optimal_t_thm1(p) >= t * (1 - 1e-12)


def test_cone_self_certifies():
    for seed in SEEDS:
        k = [1.0, 2.0, 10.0][seed % 3]
        alpha = [0.0, math.pi / 6, math.pi / 3, math.pi / 2][seed % 4]
        cfg = GeneratorConfig(seed, *dims(seed), "cone", k=k, alpha=alpha)
        p, axis = gen_cone_instance_with_axis(cfg)
        assert p == generate(cfg)
        assert all(matrix_angle(c, axis) <= alpha + 1e-9 for c in p.coefficients)
        assert bound_thm2(p, k, alpha, axis).hypothesis_ok


def test_hermitian_self_certifies():
    for seed in SEEDS:
        k = [1.0, 2.0, 5.0, 10.0][seed % 4]
        t = [0.5, 1.0, 3.0][seed % 3]
        p = generate(GeneratorConfig(seed, *dims(seed), "hermitian", k=k, t=t))
        assert all(is_hermitian(c) for c in p.coefficients)
        assert bound_thm4(p, k, t).hypothesis_ok


def test_cone_alpha_zero_collinear():
    cfg = GeneratorConfig(5, 3, 4, "cone", k=2.0, alpha=0.0)
    p = generate(cfg)
    ref = p.leading
    for c in p.coefficients:
        assert matrix_angle(c, ref) <= 1e-9


@pytest.mark.parametrize("cls", list(InstanceClass))
@pytest.mark.parametrize("t,k,alpha", [(1e-3, 1.0, 0.0), (10.0, 10.0, math.pi / 2)])
def test_parameter_range_edges(cls, t, k, alpha):
    p = generate(GeneratorConfig(3, 2, 3, cls, t=t, k=k, alpha=alpha))
    assert np.all(np.isfinite(np.array(p.coefficients)))
