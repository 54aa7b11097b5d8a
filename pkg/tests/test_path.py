"""Path algebra: combinator examples, groupoid laws, exact piecewise backend."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtt.laws import rand_chain, rand_piecewise
from mtt.path import (
    DEFAULT_SEED,
    ClosurePath,
    EndpointMismatchError,
    PiecewisePath,
    SampleSpec,
    babs,
    compose,
    from_,
    idp,
    map_path,
    path_eq,
    poly_affine_arg,
    poly_eval,
    probe_points,
    pw_const,
    pw_idp,
    pw_poly,
    reverse,
    step_path,
    upto,
)
from mtt.ring import RATIONALS, NegativeScalarError

F = Fraction
SPEC = SampleSpec(count=32)


def ramp(shape=2):
    """The path following the identity up to its shape."""
    return pw_poly(shape, (0, 1))


def seeded_paths(n=50, chain=1):
    rng = random.Random(99)
    return [rand_chain(rng, RATIONALS, chain) for _ in range(n)]


class TestIdp:
    def test_constant_everywhere(self):
        p = idp(5)
        assert p.at(7) == 5
        assert p.at(0) == 5

    def test_shape_zero(self):
        assert idp("x").shape == 0

    def test_right_unit_pointwise(self):
        for (p,) in seeded_paths(30):
            assert path_eq(compose(p, idp(p.source)), p)


class TestCompose:
    def test_shapes_add(self):
        p, q = pw_poly(1, (0, 1)), pw_poly(2, (1, 1))
        assert compose(q, p).shape == 3

    def test_overlap_value(self):
        for p, q in seeded_paths(30, chain=2):
            c = compose(q, p)
            assert c.at(p.shape) == p.target == q.source

    def test_associativity_sampled(self):
        for p, q, r in seeded_paths(20, chain=3):
            lhs = compose(compose(r, q), p)
            rhs = compose(r, compose(q, p))
            for pt in probe_points(lhs.shape, SPEC):
                assert lhs.at(pt) == rhs.at(pt)

    def test_associativity_exact_piecewise(self):
        for p, q, r in seeded_paths(30, chain=3):
            assert path_eq(compose(compose(r, q), p), compose(r, compose(q, p)))

    def test_endpoint_mismatch_raises(self):
        p = pw_const(1, 0)
        q = pw_const(1, 5)
        with pytest.raises(EndpointMismatchError):
            compose(q, p)


class TestReverse:
    def test_reverse_idp(self):
        assert path_eq(reverse(idp(F(3))), idp(F(3)))

    def test_involution_at_probes(self):
        for (p,) in seeded_paths(30):
            r = reverse(reverse(p))
            for pt in probe_points(p.shape, SPEC):
                assert r.at(pt) == p.at(pt)

    def test_reverse_of_ramp_frozen_value(self):
        # Oracle: evaluating the truncated-subtraction formula by hand gives
        # rev(p)(1/2) = p(2 - 1/2) = 3/2 on the shape-2 identity ramp.
        assert reverse(ramp()).at(F(1, 2)) == F(3, 2)

    def test_antihomomorphism_exact(self):
        for p, q in seeded_paths(30, chain=2):
            assert path_eq(reverse(compose(q, p)), compose(reverse(p), reverse(q)))

    def test_shape_and_endpoints(self):
        for (p,) in seeded_paths(30):
            r = reverse(p)
            assert r.shape == p.shape
            assert r.source == p.target and r.target == p.source


class TestMap:
    def test_map_identity(self):
        for (p,) in seeded_paths(10):
            m = map_path(lambda v: v, p)
            for pt in probe_points(p.shape, SPEC):
                assert m.at(pt) == p.at(pt)

    def test_map_idp(self):
        g = lambda v: v * 2 + 1
        assert path_eq(map_path(g, idp(F(3))), idp(g(F(3))), SPEC)

    def test_map_compose_homomorphism(self):
        g = lambda v: v * v
        for p, q in seeded_paths(15, chain=2):
            lhs = map_path(g, compose(q, p))
            rhs = compose(map_path(g, q), map_path(g, p))
            assert path_eq(lhs, rhs, SPEC)

    def test_map_demotes_piecewise(self):
        p = ramp()
        assert isinstance(p, PiecewisePath)
        assert not isinstance(map_path(lambda v: v, p), PiecewisePath)


class TestBabs:
    def test_zero_bound_is_degenerate(self):
        phi = lambda i: i * 3 + 1
        assert path_eq(babs(0, phi), idp(phi(F(0))), SPEC)

    def test_eta_rule(self):
        for (p,) in seeded_paths(20):
            assert path_eq(babs(p.shape, p.at), p, SPEC)

    def test_map_babs(self):
        phi = lambda i: i + 1
        g = lambda v: v * 2
        lhs = map_path(g, babs(F(3, 2), phi))
        rhs = babs(F(3, 2), lambda i: g(phi(i)))
        assert path_eq(lhs, rhs, SPEC)

    def test_clamps_beyond_bound(self):
        p = babs(2, lambda i: i)
        assert p.at(5) == 2


class TestUpto:
    def test_zero_is_idp(self):
        for (p,) in seeded_paths(20):
            assert path_eq(upto(0, p), idp(p.source), SPEC)

    def test_full_is_identity(self):
        for (p,) in seeded_paths(20):
            assert path_eq(upto(p.shape + 1, p), p)

    def test_frozen_example(self):
        u = upto(1, ramp())
        assert u.shape == 1
        assert u.target == 1

    def test_shape_is_minimum(self):
        p = ramp(3)
        assert upto(F(5, 2), p).shape == F(5, 2)
        assert upto(4, p).shape == 3


class TestFrom:
    def test_zero_recovers_path(self):
        for (q,) in seeded_paths(20):
            assert path_eq(from_(0, q), q)

    def test_beyond_shape_is_degenerate(self):
        for (q,) in seeded_paths(20):
            assert path_eq(from_(q.shape + F(1, 2), q), idp(q.target), SPEC)

    def test_frozen_example(self):
        # Hand-evaluating the reversed-contraction composite on the shape-2
        # identity ramp: from(1, p)(1/2) = 2 - (1 - 1/2) = 3/2.
        assert from_(1, ramp()).at(F(1, 2)) == F(3, 2)

    def test_endpoints(self):
        q = ramp(3)
        f = from_(1, q)
        assert f.source == q.at(1)
        assert f.target == q.target


class TestPathEq:
    def test_reflexive(self):
        for (p,) in seeded_paths(10):
            assert path_eq(p, p)

    def test_shape_is_part_of_identity(self):
        verdict = path_eq(idp(F(0)), babs(1, lambda _i: F(0)), SPEC)
        assert not verdict
        assert verdict.reason == "shapes differ"

    def test_witness_reported(self):
        p, q = pw_poly(2, (0, 1)), pw_poly(2, (0, 2))
        verdict = path_eq(p, q)
        assert not verdict
        assert verdict.witness is not None
        assert p.at(verdict.witness) != q.at(verdict.witness)

    def test_exact_on_piecewise_distinguishes_tiny_differences(self):
        p = pw_poly(2, (0, 1))
        q = PiecewisePath((0, 1, 2), ((0, 1), (1, 1, F(1, 10**9))))
        assert not path_eq(p, q)


class TestClamping:
    def test_every_construction_clamps(self):
        rng = random.Random(5)
        for _ in range(50):
            p = rand_piecewise(rng, RATIONALS)
            beyond = p.shape + F(rng.randint(1, 5), rng.randint(1, 3))
            assert p.at(beyond) == p.target
            c = ClosurePath(p.shape, p.at)
            assert c.at(beyond) == p.target

    def test_negative_argument_rejected(self):
        with pytest.raises(NegativeScalarError):
            ramp().at(F(-1, 2))


class TestStepPath:
    def test_jumps_after_zero(self):
        s = step_path(True, False)
        assert s.shape == 1
        assert s.at(0) is True
        assert s.at(F(1, 1000)) is False
        assert s.target is False


class TestPiecewiseBackend:
    def test_continuity_validated(self):
        with pytest.raises(ValueError):
            PiecewisePath((0, 1, 2), ((0, 1), (5, 1)))

    def test_breakpoints_validated(self):
        with pytest.raises(ValueError):
            PiecewisePath((0, 2, 1), ((0, 1), (2, 1)))
        with pytest.raises(ValueError):
            PiecewisePath((1, 2), ((0, 1),))

    def test_json_round_trip(self):
        rng = random.Random(11)
        for _ in range(25):
            p = rand_piecewise(rng, RATIONALS)
            q = PiecewisePath.from_json(p.to_json())
            assert path_eq(p, q)

    def test_json_golden_shape(self):
        p, q = pw_poly(2, (0, 1)), pw_poly(1, (2, -1))
        c = compose(q, p)
        assert c.to_json_dict() == {
            "shape": "3",
            "breakpoints": ["0", "2", "3"],
            "pieces": [["0", "1"], ["2", "-1"]],
        }

    def test_closure_and_exact_views_agree(self):
        rng = random.Random(17)
        for _ in range(30):
            p, q = rand_chain(rng, RATIONALS, 2)
            cp, cq = ClosurePath(p.shape, p.at), ClosurePath(q.shape, q.at)
            exact = reverse(compose(q, p))
            sampled = reverse(compose(cq, cp))
            assert path_eq(ClosurePath(exact.shape, exact.at), sampled, SPEC)


class TestPolynomials:
    @given(
        coeffs=st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=1, max_size=4),
        a=st.fractions(min_value=-3, max_value=3, max_denominator=4),
        b=st.fractions(min_value=-3, max_value=3, max_denominator=4),
        x=st.fractions(min_value=-3, max_value=3, max_denominator=4),
    )
    @settings(max_examples=60)
    def test_affine_argument_substitution(self, coeffs, a, b, x):
        assert poly_eval(poly_affine_arg(coeffs, a, b), x) == poly_eval(coeffs, a + b * x)


class TestProbePoints:
    def test_deterministic(self):
        spec = SampleSpec(seed=DEFAULT_SEED, count=16)
        assert probe_points(F(3), spec) == probe_points(F(3), spec)

    def test_includes_endpoints_and_extras(self):
        pts = probe_points(F(2), SampleSpec(count=4), extra=(F(1, 3),))
        assert F(0) in pts and F(2) in pts and F(1, 3) in pts
        assert all(0 <= p <= 2 for p in pts)


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_groupoid_laws_hypothesis(data):
    """Unit, associativity, reversal: exact on randomly drawn piecewise paths."""
    seed = data.draw(st.integers(min_value=0, max_value=2**32))
    rng = random.Random(seed)
    p, q, r = rand_chain(rng, RATIONALS, 3)
    assert path_eq(compose(p, idp(p.source)), p)
    assert path_eq(compose(idp(p.target), p), p)
    assert path_eq(compose(compose(r, q), p), compose(r, compose(q, p)))
    assert path_eq(reverse(reverse(p)), p)
    assert path_eq(reverse(compose(q, p)), compose(reverse(p), reverse(q)))
