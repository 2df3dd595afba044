import numpy as np
import pytest

from entpot import (
    BeamSplitterConfig,
    balanced_bs_output,
    eof,
    negativity,
    pure_qubit,
    single_qubit,
)
from entpot.errors import OutOfDomain
from entpot.measures import ree_closed_form
from entpot.potentials import (
    GeneralizedPipeline,
    coherence_from_negativity,
    generalized_potentials,
    sigma_prime,
    standard_potentials,
)

from conftest import random_input_qubit


class TestStandardPotentials:
    def test_pure_states(self):
        for p in np.arange(0.1, 0.95, 0.1):
            t = standard_potentials(pure_qubit(p, 0.0))
            assert abs(t.np - p) < 1e-10
            assert abs(t.cp - p) < 1e-12
            assert abs(t.reep - ree_closed_form("pure", p)) < 1e-6

    def test_dephased_states(self):
        for p in (0.3, 0.6, 0.9):
            t = standard_potentials(single_qubit(p, 0.0))
            expect_np = np.sqrt((1 - p) ** 2 + p ** 2) - (1 - p)
            assert abs(t.np - expect_np) < 1e-10
            assert abs(t.cp - p) < 1e-12
            assert abs(t.reep - ree_closed_form("horodecki", p)) < 1e-6

    def test_vacuum_is_classical(self):
        t = standard_potentials(single_qubit(0.0, 0.0))
        assert t.np == 0.0
        assert t.cp == 0.0
        assert t.reep == 0.0

    def test_cp_independent_of_coherence(self):
        for p in np.linspace(0.05, 0.95, 20):
            xmax = np.sqrt(p * (1 - p))
            for u in np.linspace(0.0, 1.0, 20):
                cp = standard_potentials(single_qubit(p, u * xmax), ree_tol=1e-6).cp
                assert abs(cp - p) < 1e-12

    def test_triple_invariants(self, rng):
        for _ in range(15):
            t = standard_potentials(random_input_qubit(rng))
            assert t.np <= t.cp + 1e-9
            assert eof(t.cp) >= t.reep - 1e-6


class TestGeneralizedPotentials:
    def test_trivial_pipeline_matches_standard(self, rng):
        pipe = GeneralizedPipeline()
        for _ in range(5):
            s = random_input_qubit(rng)
            a = standard_potentials(s)
            b = generalized_potentials(s, pipe)
            assert abs(a.np - b.np) < 1e-9
            assert abs(a.cp - b.cp) < 1e-9
            assert abs(a.reep - b.reep) < 1e-7

    def test_single_photon_with_dephasing(self):
        pipe = GeneralizedPipeline(pdc=(0.19, 0.19))
        t = generalized_potentials(single_qubit(1.0, 0.0), pipe)
        assert abs(t.np - 0.81) < 1e-10
        assert abs(t.cp - 0.81) < 1e-10

    def test_unbalanced_splitter_gives_gh_measures(self):
        from entpot import generalized_horodecki, ree_numerical
        from entpot.measures import concurrence

        theta = 2.0 * np.arcsin(np.sqrt(0.3))
        pipe = GeneralizedPipeline(bs=BeamSplitterConfig(theta))
        t = generalized_potentials(single_qubit(0.8, 0.0), pipe)
        gh = generalized_horodecki(0.8, 0.3)
        assert abs(t.np - negativity(gh)) < 1e-10
        assert abs(t.cp - concurrence(gh)) < 1e-10
        assert abs(t.reep - ree_numerical(gh).value) < 1e-6

    def test_blocked_splitter_gives_zero(self, rng):
        pipe = GeneralizedPipeline(bs=BeamSplitterConfig(0.0))
        t = generalized_potentials(random_input_qubit(rng), pipe)
        assert t.np < 1e-12
        assert t.cp < 1e-12
        assert t.reep == 0.0

    def test_damping_never_helps_at_balanced_angle(self, rng):
        for _ in range(8):
            s = random_input_qubit(rng)
            base = standard_potentials(s)
            pipe = GeneralizedPipeline(
                adc=tuple(rng.uniform(size=2)),
                pdc=tuple(rng.uniform(size=2)),
            )
            damped = generalized_potentials(s, pipe)
            assert damped.np <= base.np + 1e-8
            assert damped.cp <= base.cp + 1e-8
            assert damped.reep <= base.reep + 1e-6


class TestCoherenceInversion:
    def test_pure_endpoint(self):
        for n in (0.2, 0.5, 0.8):
            f = coherence_from_negativity(n, n)
            assert abs(f - np.sqrt(n * (1 - n))) < 1e-12

    def test_dephased_endpoint(self):
        for n in (0.2, 0.5, 0.8):
            p = np.sqrt(2 * n * (n + 1)) - n
            assert coherence_from_negativity(p, n) < 1e-7

    def test_mid_value_and_round_trip(self):
        # brentq oracle on negativity(bs_output(0.5, x)) = 0.3
        f = coherence_from_negativity(0.5, 0.3)
        assert abs(f - 0.3055050463303893) < 1e-12
        n = negativity(balanced_bs_output(single_qubit(0.5, f)))
        assert abs(n - 0.3) < 1e-8

    def test_round_trip_grid(self):
        for n in np.linspace(0.1, 0.9, 9):
            p_hi = np.sqrt(2 * n * (n + 1)) - n
            for p in np.linspace(n, p_hi, 7):
                f = coherence_from_negativity(p, n)
                rho = balanced_bs_output(single_qubit(p, f))
                assert abs(negativity(rho) - n) < 1e-8

    def test_domain_errors(self):
        with pytest.raises(OutOfDomain):
            coherence_from_negativity(0.1, 0.3)  # p < N
        with pytest.raises(OutOfDomain):
            coherence_from_negativity(0.99, 0.3)  # beyond dephased endpoint
        with pytest.raises(OutOfDomain):
            coherence_from_negativity(0.5, 0.0)  # N must be positive


class TestSigmaPrime:
    def test_pure_limit(self):
        s = sigma_prime(0.4, 0.4, 0.0)
        ref = pure_qubit(0.4, 0.0)
        assert abs(s.p - ref.p) < 1e-14
        assert abs(s.x - ref.x) < 1e-12

    def test_dephased_limit(self):
        n = 0.35
        p = np.sqrt(2 * n * (n + 1)) - n
        s = sigma_prime(p, n, 1.3)
        assert abs(s.x) < 1e-7

    def test_phase_does_not_change_potentials(self):
        base = standard_potentials(sigma_prime(0.5, 0.3, 0.0))
        for phi in (0.7, np.pi, 4.4):
            t = standard_potentials(sigma_prime(0.5, 0.3, phi))
            assert abs(t.np - base.np) < 1e-9
            assert abs(t.cp - base.cp) < 1e-12
            assert abs(t.reep - base.reep) < 1e-7
