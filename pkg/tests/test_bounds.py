import math

import numpy as np
import pytest

from ekbounds.bounds import (
    Annulus,
    BoundResult,
    Disk,
    ExclusionDisk,
    TheoremId,
    all_bounds,
    bound_cor1,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    bound_thm_c,
    bound_thm_d,
    bound_thm_e,
    cauchy_radius,
    check_thm1_chain,
    cone_witness,
    optimal_t_thm1,
    thm2_radius,
    thm3_radii,
    thm4_witness_candidates,
    tightness_report,
)
from ekbounds.eigensolve import polyeig
from ekbounds.errors import HypothesisViolated, SingularA0, SingularLeadingCoefficient
from ekbounds.generators import GeneratorConfig, generate
from ekbounds.linalg_core import NormKind, frobenius_norm, inverse, matrix_norm
from ekbounds.matpoly import MatrixPolynomial, scale_argument
from ekbounds.scalar_roots import cauchy_residual

from oracles import quadratic_roots

GOLDEN = (1 + math.sqrt(5)) / 2
EK = MatrixPolynomial.from_scalars([1.0, 1.0, 1.0])


def spectrum(p):
    return polyeig(p).eigenvalues


def random_unitary(seed, n):
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return q * (np.diag(r) / abs(np.diag(r)))


class TestRegions:
    def test_disk_membership_tolerance(self):
        d = Disk(0j, 1.0)
        assert d.contains(1.0 + 5e-9)
        assert not d.contains(1.0 + 1e-7)

    def test_annulus_order(self):
        with pytest.raises(ValueError):
            Annulus(2.0, 1.0)

    def test_annulus_membership(self):
        a = Annulus(1.0, 2.0)
        assert a.contains(1.5j) and not a.contains(0.5) and not a.contains(2.5)

    def test_exclusion(self):
        e = ExclusionDisk(0j, 1.0)
        assert e.excludes(1.0) and not e.excludes(0.9)

    def test_result_invariant(self):
        with pytest.raises(ValueError):
            BoundResult(TheoremId.THM_C, True)
        with pytest.raises(ValueError):
            BoundResult(TheoremId.THM_C, False, region=Disk(0j, 1.0))


class TestThmC:
    def test_linear(self):
        p = MatrixPolynomial.from_scalars([-3.0, 1.0])
        assert cauchy_radius(p) == pytest.approx(3.0, rel=1e-15)

    def test_golden(self):
        p = MatrixPolynomial.from_scalars([-1.0, -1.0, 1.0])
        res = bound_thm_c(p)
        assert res.region.radius == pytest.approx(GOLDEN, rel=1e-14)
        assert res.region.holds_for(quadratic_roots(1, -1, -1))

    @pytest.mark.parametrize("seed", range(10))
    def test_random_contains(self, seed):
        p = generate(GeneratorConfig(seed, 3, 4))
        res = bound_thm_c(p)
        lower = [matrix_norm(p[j]) for j in range(p.degree - 1, -1, -1)]
        sigma = 1 / matrix_norm(inverse(p.leading))
        assert cauchy_residual(sigma, lower, res.region.radius) <= 1e-12
        assert res.region.holds_for(spectrum(p))

    def test_singular_leading(self):
        with pytest.raises(SingularLeadingCoefficient):
            bound_thm_c(MatrixPolynomial([np.eye(2), np.diag([1.0, 0.0])]))


class TestThmD:
    def test_formula(self):
        p = MatrixPolynomial([np.diag([3.0, -1.0]), np.eye(2)])
        assert bound_thm_d(p).region.radius == pytest.approx(4.0)

    def test_monic_small_coefficients(self):
        p = MatrixPolynomial.from_scalars([0.5, -1.0, 0.25j, 1.0])
        assert bound_thm_d(p).region.radius <= 2.0

    @pytest.mark.parametrize("kind", ["2", "1", "inf"])
    def test_random_contains(self, kind):
        for seed in range(5):
            p = generate(GeneratorConfig(seed, 2, 3))
            assert bound_thm_d(p, kind).region.holds_for(spectrum(p))
            assert bound_thm_c(p, kind).region.holds_for(spectrum(p))


class TestThmE:
    def test_boundary_tight(self):
        res = bound_thm_e(EK)
        assert res.hypothesis_ok
        assert max(abs(spectrum(EK))) == pytest.approx(1.0, abs=1e-9)

    def test_identity_chain(self):
        p = MatrixPolynomial([np.eye(2)] * 4)
        assert bound_thm_e(p).hypothesis_ok
        assert max(abs(spectrum(p))) <= 1 + 1e-8

    def test_non_hermitian_difference(self):
        a1 = np.array([[2.0, 1.0], [0.0, 2.0]])
        res = bound_thm_e(MatrixPolynomial([np.eye(2), a1]))
        assert not res.hypothesis_ok
        assert any("Hermitian" in d for d in res.diagnostics)

    def test_decreasing_fails(self):
        res = bound_thm_e(MatrixPolynomial.from_scalars([2.0, 1.0]))
        assert not res.hypothesis_ok and res.region is None

    @pytest.mark.parametrize("seed", range(20))
    def test_scalar_enestrom_kakeya(self, seed):
        rng = np.random.default_rng(seed)
        coeffs = np.sort(rng.uniform(0.01, 1.0, int(rng.integers(2, 8))))
        p = MatrixPolynomial.from_scalars(coeffs)
        assert bound_thm_e(p).hypothesis_ok
        assert max(abs(spectrum(p))) <= 1 + 1e-9


class TestThm1:
    def test_unitary_chain(self):
        q = random_unitary(0, 2)
        p = MatrixPolynomial([np.eye(2), q, q, q])
        assert optimal_t_thm1(p) == pytest.approx(1.0, rel=1e-12)

    def test_scalar_ratios(self):
        assert optimal_t_thm1(MatrixPolynomial.from_scalars([0.25, 0.5, 1.0])) == pytest.approx(2.0)

    def test_not_pd(self):
        assert optimal_t_thm1(MatrixPolynomial.from_scalars([-0.25, 0.5, 1.0])) is None

    def test_m1_radius(self):
        a0 = np.diag([1.0, 3.0])
        p = MatrixPolynomial([a0, np.eye(2)])
        t = 1 / matrix_norm(a0)
        res = bound_thm1(p, t)
        assert res.region.radius == pytest.approx(3.0)
        assert res.diagnostics
        assert res.region.holds_for(spectrum(p))

    def test_m2_golden(self):
        p = MatrixPolynomial.from_scalars([0.25, 0.5, 1.0])
        assert bound_thm1(p, 1.0).region.radius == pytest.approx(GOLDEN, rel=1e-12)

    def test_violation_reports_link(self):
        p = MatrixPolynomial.from_scalars([0.25, 0.5, 1.0])
        with pytest.raises(HypothesisViolated) as info:
            check_thm1_chain(p, 3.0)
        assert info.value.link is not None

    def test_monotone_in_t(self):
        p = generate(GeneratorConfig(3, 2, 3, "geometric", t=1.0))
        t_max = optimal_t_thm1(p)
        ts = [t_max * f for f in (0.1, 0.3, 0.6, 1.0)]
        radii = [bound_thm1(p, t).region.radius for t in ts]
        assert all(a > b for a, b in zip(radii, radii[1:]))

    @pytest.mark.parametrize("t", [0.25, 1.0, 2.0])
    def test_generated(self, t):
        for seed in range(5):
            p = generate(GeneratorConfig(seed, 2, 3, "geometric", t=t))
            assert optimal_t_thm1(p) >= t * (1 - 1e-12)
            assert bound_thm1(p, t).region.holds_for(spectrum(p))


class TestThm2:
    def test_collinear_witness(self):
        c0 = np.array([[1.0, 2j], [0.5, -1.0]])
        p = MatrixPolynomial([0.5 * c0, 1.0 * c0, 2.0 * c0])
        k, alpha, axis = cone_witness(p)
        assert alpha == pytest.approx(0.0, abs=1e-7)
        assert k == 1.0

    def test_scalar_witness(self):
        k, alpha, _ = cone_witness(MatrixPolynomial.from_scalars([1.0, 3.0, 2.0]))
        assert k == pytest.approx(1.5) and alpha == pytest.approx(0.0, abs=1e-7)

    def test_reduces_to_unit_disk(self):
        p = MatrixPolynomial.from_scalars([0.2, 0.7, 1.0])
        res = bound_thm2(p, 1.0, 0.0, np.eye(1))
        assert res.region.center == 0
        assert res.region.radius == pytest.approx(1.0, abs=1e-12)

    def test_right_angle_formula(self):
        p = MatrixPolynomial.from_scalars([0.2, 0.7, 1.0])
        expected = 1.0 * (1.0 - 0.2 + 0.2 + 2 * (0.2 + 0.7))
        assert thm2_radius(p, 1.0, math.pi / 2) == pytest.approx(expected, rel=1e-14)

    def test_wrong_axis(self):
        p = MatrixPolynomial.from_scalars([0.2, 0.7, 1.0])
        with pytest.raises(HypothesisViolated):
            bound_thm2(p, 1.0, 0.1, -np.eye(1))

    @pytest.mark.parametrize("k,alpha", [(1.0, 0.0), (2.0, math.pi / 3), (1.5, math.pi / 2)])
    def test_generated(self, k, alpha):
        for seed in range(5):
            cfg = GeneratorConfig(seed, 2, 3, "cone", k=k, alpha=alpha)
            p = generate(cfg)
            wit = cone_witness(p)
            assert wit is not None and wit[1] <= 2 * alpha + 1e-9
            res = bound_thm2(p, *wit)
            assert res.region.holds_for(spectrum(p))


class TestCor1:
    P = MatrixPolynomial.from_scalars([0.2, 0.7, 1.0])

    def test_t_one_matches_thm2(self):
        a = bound_thm2(self.P, 1.0, 0.0, np.eye(1)).region
        b = bound_cor1(self.P, 1.0, 0.0, np.eye(1), 1.0).region
        assert a == b

    def test_is_scaled_thm2(self):
        t = 0.8
        inner = bound_thm2(scale_argument(self.P, t), 1.0, 0.0, np.eye(1)).region
        cor = bound_cor1(self.P, 1.0, 0.0, np.eye(1), t).region
        assert cor == Disk(inner.center * t, inner.radius * t)

    def test_closed_formula(self):
        t, k, alpha = 0.8, 1.2, 0.3
        p = self.P
        m = p.degree
        norms = p.frobenius_norms()
        inv = frobenius_norm(inverse(p.leading * t**m))
        s, c = math.sin(alpha), math.cos(alpha)
        bracket = ((k * t**m * norms[m] - norms[0]) * (s + c) + norms[0]
                   + 2 * s * sum(norms[j] * t**j for j in range(m)))
        cor = bound_cor1(p, k, alpha, np.eye(1), t).region
        assert cor.radius == pytest.approx(t * inv * bracket, rel=1e-13)
        assert cor.center == pytest.approx(-(k - 1) * t)

    def test_membership_equivalence(self):
        t = 0.8
        inner = bound_thm2(scale_argument(self.P, t), 1.0, 0.0, np.eye(1)).region
        cor = bound_cor1(self.P, 1.0, 0.0, np.eye(1), t).region
        for lam in spectrum(self.P):
            assert cor.contains(lam) == inner.contains(lam / t)

    def test_invalid_t(self):
        with pytest.raises(HypothesisViolated):
            bound_cor1(self.P, 1.0, 0.0, np.eye(1), -1.0)


class TestThm3:
    def test_scalar_degenerate(self):
        r1, r2 = thm3_radii(MatrixPolynomial.from_scalars([3.0, -2.0]))
        assert r1 == pytest.approx(1.5, rel=1e-12) and r2 == pytest.approx(1.5, rel=1e-12)

    def test_linear_matrix(self):
        rng = np.random.default_rng(2)
        a0 = rng.standard_normal((3, 3)) + 2 * np.eye(3)
        a1 = rng.standard_normal((3, 3)) + 2 * np.eye(3)
        p = MatrixPolynomial([a0, a1])
        r1, r2 = thm3_radii(p)
        assert r1 == pytest.approx(1 / (matrix_norm(inverse(a0)) * matrix_norm(a1)), rel=1e-12)
        assert r2 == pytest.approx(matrix_norm(a0) * matrix_norm(inverse(a1)), rel=1e-12)
        assert bound_thm3(p).region.holds_for(spectrum(p))

    def test_skips_zero_terms(self):
        p = MatrixPolynomial.from_scalars([1.0, 0.0, 1.0])
        r1, r2 = thm3_radii(p)
        assert 0 < r1 <= 1 <= r2

    def test_singular_a0(self):
        with pytest.raises(SingularA0):
            bound_thm3(MatrixPolynomial.from_scalars([0.0, 1.0]))

    @pytest.mark.parametrize("seed", range(10))
    def test_random(self, seed):
        rng = np.random.default_rng(seed)
        p = generate(GeneratorConfig(seed, int(rng.integers(1, 4)), int(rng.integers(1, 6))))
        region = bound_thm3(p, NormKind.INDUCED2).region
        assert region.r_inner <= region.r_outer
        assert region.holds_for(spectrum(p))


class TestThm4:
    def test_k_one(self):
        region = bound_thm4(MatrixPolynomial.from_scalars([2.0, 1.0]), 1.0, 1.0).region
        assert region == ExclusionDisk(0j, 1.0)

    def test_large_k_limit(self):
        region = bound_thm4(MatrixPolynomial.from_scalars([1.0, 1.0]), 1e8, 1.0).region
        assert region.center.real == pytest.approx(0.5, rel=1e-7)
        assert region.radius == pytest.approx(0.5, rel=1e-7)

    def test_non_hermitian(self):
        p = MatrixPolynomial([np.array([[1.0, 1.0], [0.0, 1.0]]), np.eye(2)])
        with pytest.raises(HypothesisViolated):
            bound_thm4(p, 1.0, 0.5)

    def test_failed_link(self):
        with pytest.raises(HypothesisViolated) as info:
            bound_thm4(MatrixPolynomial.from_scalars([1.0, 1.0]), 1.0, 2.0)
        assert info.value.link == 0

    @pytest.mark.parametrize("k,t", [(1.0, 0.5), (2.0, 1.0), (5.0, 0.5)])
    def test_generated(self, k, t):
        for seed in range(5):
            p = generate(GeneratorConfig(seed, 2, 3, "hermitian", k=k, t=t))
            assert bound_thm4(p, k, t).region.holds_for(spectrum(p))

    def test_candidates_admissible(self):
        p = generate(GeneratorConfig(1, 2, 3, "hermitian", k=2.0, t=1.0))
        cands = thm4_witness_candidates(p)
        assert cands
        radii = [k * t / (2 * k - 1) for k, t in cands]
        assert radii == sorted(radii, reverse=True)


class TestAllBounds:
    def test_enestrom_kakeya_instance(self):
        res = {r.theorem_id: r for r in all_bounds(EK)}
        assert res[TheoremId.THM_E].hypothesis_ok
        assert res[TheoremId.THM_C].hypothesis_ok
        thm2 = res[TheoremId.THM_2]
        assert thm2.hypothesis_ok and thm2.witness.k == 1.0
        assert thm2.witness.alpha == pytest.approx(0.0, abs=1e-7)

    def test_canonical_order(self):
        ids = [r.theorem_id for r in all_bounds(EK)]
        assert ids == list(TheoremId)

    def test_subset(self):
        ids = [r.theorem_id for r in all_bounds(EK, theorems=["Thm3", "ThmC"])]
        assert ids == [TheoremId.THM_C, TheoremId.THM_3]

    @pytest.mark.parametrize("seed", range(10))
    def test_every_region_holds(self, seed):
        cls = ["unconstrained", "loewner", "geometric", "cone", "hermitian"][seed % 5]
        p = generate(GeneratorConfig(seed, 2, 1 + seed % 4, cls))
        lam = spectrum(p)
        results = all_bounds(p)
        assert results[0].hypothesis_ok and results[1].hypothesis_ok
        for r in results:
            if r.hypothesis_ok:
                assert r.region.holds_for(lam), r.theorem_id
            else:
                assert r.diagnostics

    def test_singular_leading_aggregates(self):
        res = all_bounds(MatrixPolynomial([np.eye(2), np.diag([1.0, 0.0])]))
        assert not any(r.hypothesis_ok for r in res[:2])


class TestTightness:
    def test_thm_e_slack_zero(self):
        rows = tightness_report(all_bounds(EK), spectrum(EK))
        row = next(r for r in rows if r.theorem_id is TheoremId.THM_E)
        assert abs(row.slack) <= 1e-9

    def test_sorted_and_nonnegative(self):
        p = generate(GeneratorConfig(4, 2, 3, "loewner"))
        rows = tightness_report(all_bounds(p), polyeig(p))
        slacks = [r.slack for r in rows]
        assert slacks == sorted(slacks)
        assert all(s >= -1e-8 for s in slacks)

    def test_annulus_margin(self):
        p = generate(GeneratorConfig(2, 2, 2))
        rows = tightness_report([bound_thm3(p)], spectrum(p))
        assert rows[0].inner_margin >= -1e-8
