import numpy as np
import pytest

from entpot import negativity, ree_closed_form
from entpot.boundaries import (
    BoundaryCurve,
    boundary_curve,
    horodecki_mixing_from_negativity,
    horodecki_negativity,
    optimal_rho_A,
    optimal_sigma_Z,
    q_from_concurrence,
    q_from_negativity,
    sigma_z_interval,
    special_points,
)
from entpot.errors import OutOfDomain, RootNotBracketed, UnsupportedPair
from entpot.measures import concurrence, ree_numerical
from entpot.states import balanced_bs_output, generalized_horodecki


class TestInversions:
    def test_negativity_round_trip_both_branches(self):
        for branch in ("minus", "plus"):
            q = q_from_negativity(0.8, 0.3, branch)
            rho = generalized_horodecki(0.8, q)
            assert abs(negativity(rho) - 0.3) < 1e-8

    def test_negativity_pure_limit(self):
        q_target = 0.2
        n = 2.0 * np.sqrt(q_target * (1.0 - q_target))
        q = q_from_negativity(1.0, n, "minus")
        assert abs(q - q_target) < 1e-10

    def test_discriminant_zero_gives_balanced(self):
        n = 0.4
        p = horodecki_mixing_from_negativity(n)
        assert abs(q_from_negativity(p, n, "minus") - 0.5) < 1e-6

    def test_negative_discriminant_rejected(self):
        with pytest.raises(OutOfDomain):
            q_from_negativity(0.5, 0.4)

    def test_concurrence_round_trip(self):
        for p, c in ((0.9, 0.45), (1.0, 0.3), (0.7, 0.7)):
            for branch in ("minus", "plus"):
                q = q_from_concurrence(p, c, branch)
                rho = generalized_horodecki(p, q)
                assert abs(concurrence(rho) - c) < 1e-9

    def test_concurrence_balanced_at_equality(self):
        assert abs(q_from_concurrence(0.6, 0.6) - 0.5) < 1e-12

    def test_concurrence_domain(self):
        with pytest.raises(OutOfDomain):
            q_from_concurrence(0.5, 0.6)

    def test_horodecki_negativity_inverse(self):
        for p in (0.2, 0.5, 0.9):
            n = horodecki_negativity(p)
            assert abs(horodecki_mixing_from_negativity(n) - p) < 1e-12


class TestOptimalSigmaZ:
    def test_large_n_hits_dephased_endpoint(self):
        state, _ = optimal_sigma_Z(0.9)
        _, p_hi = sigma_z_interval(0.9)
        assert abs(state.p - p_hi) < 1e-4
        # coherence scales like sqrt(p_hi - p_opt) near the dephased endpoint
        assert abs(state.x) < 1e-3

    def test_small_n_is_nearly_pure(self):
        n = 0.05
        state, val = optimal_sigma_Z(n)
        assert abs(state.p - n) < 0.02
        assert val <= ree_closed_form("pure", n) + 1e-9
        assert val >= ree_closed_form("pure", n) - 1e-4

    def test_degenerate_interval(self):
        state, val = optimal_sigma_Z(1.0)
        assert state.p == 1.0
        assert abs(val - 1.0) < 1e-7

    def test_returned_state_has_target_negativity(self):
        for n in (0.3, 0.55):
            state, _ = optimal_sigma_Z(n)
            assert abs(negativity(balanced_bs_output(state)) - n) < 1e-7

    def test_minimizes_against_endpoints(self):
        # the optimum can never exceed either closed-form endpoint value
        n = 0.45
        _, val = optimal_sigma_Z(n)
        p_hi = horodecki_mixing_from_negativity(n)
        assert val <= ree_closed_form("pure", n) + 1e-9
        assert val <= ree_closed_form("horodecki", p_hi) + 1e-9


class TestOptimalRhoA:
    def test_large_n_is_pure(self):
        rho, val = optimal_rho_A(0.8)
        assert abs(val - ree_closed_form("pure", 0.8)) < 1e-7
        assert abs(1.0 - rho[0, 0].real - 1.0) < 1e-4  # weight 1: no vacuum component

    def test_small_n_beats_both_families(self):
        n = 0.2
        rho, val = optimal_rho_A(n)
        p_m = horodecki_mixing_from_negativity(n)
        assert val > ree_closed_form("horodecki", p_m) + 1e-6
        assert val > ree_closed_form("pure", n) + 1e-6

    def test_negativity_is_preserved(self):
        for n in (0.25, 0.6):
            rho, _ = optimal_rho_A(n)
            assert abs(negativity(rho) - n) < 1e-7

    def test_near_maximal(self):
        rho, val = optimal_rho_A(0.98)
        assert val > 0.9
        assert abs(negativity(rho) - 0.98) < 1e-7

    def test_sandwich_property(self):
        # the optimum dominates both closed-form families at matching N
        for n in (0.3, 0.7):
            _, val = optimal_rho_A(n)
            p_m = horodecki_mixing_from_negativity(n)
            assert ree_closed_form("horodecki", p_m) <= val + 1e-6
            assert ree_closed_form("pure", n) <= val + 1e-6


@pytest.fixture(scope="module")
def points():
    return special_points()


class TestSpecialPoints:

    def test_ordering_invariant(self, points):
        assert points.n1 < points.n2 < points.n3
        assert points.e1 < points.e2 < points.e3

    def test_point1_closed_form_crossing(self, points):
        # frozen from the bisection of the two closed forms
        assert abs(points.n1 - 0.37704) < 5e-4
        assert abs(points.e1 - 0.22790) < 5e-4
        p_m = horodecki_mixing_from_negativity(points.n1)
        assert abs(ree_closed_form("pure", points.n1) - ree_closed_form("horodecki", p_m)) < 1e-9

    def test_point2_merge_consistency(self, points):
        # rho_A at n2 + margin must match the pure family
        n = points.n2 + 0.01
        _, val = optimal_rho_A(n)
        assert abs(val - ree_closed_form("pure", n)) < 1e-6

    def test_point3_merge_consistency(self, points):
        n = points.n3 + 0.01
        state, val = optimal_sigma_Z(n)
        p_hi = horodecki_mixing_from_negativity(n)
        assert abs(state.p - p_hi) < 1e-4
        assert abs(val - ree_closed_form("horodecki", p_hi)) < 1e-6

    def test_crossing_sign_structure(self, points):
        def gap(n):
            p_m = horodecki_mixing_from_negativity(n)
            return ree_closed_form("pure", n) - ree_closed_form("horodecki", p_m)

        assert gap(points.n1 - 0.05) < 0.0
        assert gap(points.n1 + 0.05) > 0.0
        signs = [np.sign(gap(n)) for n in np.linspace(0.05, 0.95, 46)]
        flips = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
        assert flips == 1


class TestBoundaryCurves:
    def test_pure_ree_n_endpoints(self):
        c = boundary_curve("pure", 11, "ree-n")
        assert c.abscissa[0] == 0.0 and c.ordinate[0] == 0.0
        assert abs(c.abscissa[-1] - 1.0) < 1e-12 and c.ordinate[-1] == 1.0

    def test_bell_dominates_pure_in_ree_n(self):
        bell = boundary_curve("bell_diagonal", 41, "ree-n")
        for e, n_bell in zip(bell.abscissa[1:-1], bell.ordinate[1:-1]):
            n_pure = np.interp(e, *_curve_xy(boundary_curve("pure", 201, "ree-n")))
            assert n_bell >= n_pure - 1e-9

    def test_horodecki_n_c_relation(self):
        c = boundary_curve("horodecki", 21, "n-c")
        for n, cc in zip(c.abscissa, c.ordinate):
            assert abs(cc - (np.sqrt(2 * n * (1 + n)) - n)) < 1e-10

    def test_unsupported_pairs(self):
        with pytest.raises(UnsupportedPair):
            boundary_curve("rho_Z", 5, "n-c")
        with pytest.raises(UnsupportedPair):
            boundary_curve("rho_A", 5, "ree-c")
        with pytest.raises(UnsupportedPair):
            boundary_curve("pure", 5, "nonsense")

    def test_gh_fixed_p_needs_weight(self):
        with pytest.raises(OutOfDomain):
            boundary_curve("gh_fixed_p", 5, "ree-n")

    def test_gh_fixed_p_curve(self):
        c = boundary_curve("gh_fixed_p", 6, "ree-n", p_fixed=0.9)
        assert np.all(np.diff(c.abscissa) > 0)
        assert c.ordinate[-1] <= horodecki_negativity(0.9) + 1e-12

    def test_rho_z_curve_smoke(self):
        c = boundary_curve("rho_Z", 9, "ree-n")
        assert np.all(np.diff(c.abscissa) > 0)
        assert c.abscissa[0] == 0.0 and c.abscissa[-1] == 1.0
        # params carry (p_z, x_z) of the generating input qubit
        assert c.param_names == ("p_z", "x_z")

    def test_rho_a_curve_smoke(self):
        c = boundary_curve("rho_A", 9, "ree-n")
        assert np.all(np.diff(c.abscissa) > 0)
        # REE-maximal at fixed N: abscissa dominates the pure closed form
        for e, n in zip(c.abscissa[1:-1], c.ordinate[1:-1]):
            assert e >= ree_closed_form("pure", n) - 1e-7

    def test_abscissa_monotonicity_enforced(self):
        with pytest.raises(ValueError):
            BoundaryCurve(
                "pure", "ree-n", ("E_R", "N"),
                np.array([0.0, 0.5, 0.5]), np.zeros(3), np.zeros((3, 1)), ("p",),
            )


def _curve_xy(curve):
    return curve.abscissa, curve.ordinate


class TestSigmaZProfile:
    def test_mixing_profile_is_not_linear(self):
        # chord deviation of p_Z(N) over the region below the third merge point
        grid = np.linspace(0.05, 0.55, 11)
        ps = np.array([optimal_sigma_Z(n)[0].p for n in grid])
        chord = ps[0] + (ps[-1] - ps[0]) * (grid - grid[0]) / (grid[-1] - grid[0])
        assert np.abs(ps - chord).max() > 1e-3
