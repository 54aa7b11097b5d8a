"""Universe codes: decoding, transport case analysis, constructor stability."""

import random
from fractions import Fraction

import pytest

from mtt.fib import (
    BOOL,
    Fibration,
    PathType,
    PiType,
    enumerate_values,
    id_fib,
    pi_fib,
)
from mtt.laws import rand_code
from mtt.path import SampleSpec, babs, idp, map_path, path_eq, step_path
from mtt.ring import truncated_sub
from mtt.universe import (
    CodeBool,
    CodeEq,
    CodePi,
    ConstructorChange,
    constructor_stable,
    decode,
    u_transport,
    universe_fibration,
)

F = Fraction
SPEC = SampleSpec(count=16)
CB = CodeBool()


class TestDecode:
    def test_bool(self):
        t = decode(CB)
        assert t == BOOL
        assert enumerate_values(t) == [False, True]

    def test_eq_decodes_to_path_type(self):
        t = decode(CodeEq(CB, True, True))
        assert isinstance(t, PathType)
        assert t.carrier == BOOL and t.lhs is True and t.rhs is True

    def test_pi_decodes_to_function_type_with_four_inhabitants(self):
        t = decode(CodePi(CB, lambda _b: CB))
        assert isinstance(t, PiType)
        fns = enumerate_values(t)
        assert fns is not None and len(fns) == 4

    def test_dependent_family_decodes_pointwise(self):
        code = CodePi(CB, lambda b: CB if b else CodeEq(CB, False, False))
        t = decode(code)
        assert isinstance(t.codomain(True), type(BOOL))
        assert isinstance(t.codomain(False), PathType)


class TestConstructorStability:
    def test_idp_is_stable(self):
        for code in (CB, CodePi(CB, lambda _b: CB), CodeEq(CB, True, False)):
            assert constructor_stable(idp(code))

    def test_constant_babs_is_stable(self):
        p = babs(3, lambda _j: CodeEq(CB, False, True))
        assert constructor_stable(p)

    def test_payload_steps_are_still_stable(self):
        p = babs(2, lambda j: CodeEq(CB, j >= 1, True))
        assert constructor_stable(p)

    def test_step_between_constructors_reports_witness(self):
        cpi = CodePi(CB, lambda _b: CB)
        p = babs(1, lambda j: CB if j < F(1, 2) else cpi)
        verdict = constructor_stable(p)
        assert not verdict
        assert verdict.witness is not None
        assert type(p.at(verdict.witness)) is CodePi

    def test_witness_is_deterministic(self):
        cpi = CodePi(CB, lambda _b: CB)
        p = babs(1, lambda j: CB if j < F(1, 3) else cpi)
        w1 = constructor_stable(p).witness
        w2 = constructor_stable(p).witness
        assert w1 == w2


class TestTransportBool:
    def test_constant_path_any_shape(self):
        p = babs(3, lambda _j: CB)
        assert u_transport(p, True) is True
        assert u_transport(p, False) is False

    def test_idp_exact(self):
        assert u_transport(idp(CB), True) is True


class TestTransportPi:
    def test_idp_pointwise_identity(self):
        code = CodePi(CB, lambda _b: CB)
        f = lambda b: not b
        moved = u_transport(idp(code), f)
        for b in (False, True):
            assert moved(b) == f(b)

    def test_constant_pi_path_agrees_with_former_oracle(self):
        """All four Boolean endomaps survive a constant code path unchanged."""
        code = CodePi(CB, lambda _b: CB)
        p = babs(2, lambda _j: code)
        dom = Fibration(
            fam=lambda u: decode(u.domain),
            transport=lambda pu, x: u_transport(map_path(lambda u: u.domain, pu), x),
        )
        cod = Fibration(
            fam=lambda ux: decode(ux[0].family(ux[1])),
            transport=lambda pux, b: u_transport(
                map_path(lambda ux: ux[0].family(ux[1]), pux), b
            ),
        )
        oracle = pi_fib(dom, cod)
        for f in enumerate_values(decode(code)):
            got = u_transport(p, f)
            want = oracle.transport(p, f)
            for b in (False, True):
                assert got(b) == want(b) == f(b)

    def test_backward_walk_is_identity_beyond_the_shape(self):
        """The argument-walking construction leaves arguments alone past the shape."""
        shape = F(2)
        dom_at = lambda j: CodeEq(CB, j >= 1, True)
        p = babs(shape, lambda j: CodePi(dom_at(j), lambda _x: CB))
        x = step_path(True, True, F(1, 2))

        def walk_back(k):
            route = babs(truncated_sub(shape, k), lambda j: p.at(truncated_sub(shape, j)).domain)
            return u_transport(route, x)

        for k in (shape, shape + F(1, 2), shape + 3):
            assert path_eq(walk_back(k), x, SPEC)


class TestTransportEq:
    def test_idp_pointwise(self):
        code = CodeEq(CB, True, True)
        moved = u_transport(idp(code), idp(True))
        assert path_eq(moved, idp(True), SPEC)

    def test_constant_path_conjugates(self):
        code = CodeEq(CB, True, True)
        p = babs(1, lambda _j: code)
        moved = u_transport(p, idp(True))
        # conjugation contributes one slid path on each side
        assert moved.shape == 2
        assert moved.source is True and moved.target is True

    def test_agrees_with_identity_former_oracle(self):
        shape = F(2)
        p = babs(shape, lambda j: CodeEq(CB, j >= 1, True))
        q = step_path(False, True)
        got = u_transport(p, q)
        track = map_path(lambda u: ((u.code, u.lhs), u.rhs), p)
        want = id_fib(universe_fibration).transport(track, q)
        assert path_eq(got, want, SPEC)


class TestConstructorChangeErrors:
    def test_transport_across_step_raises_with_probe(self):
        cpi = CodePi(CB, lambda _b: CB)
        p = babs(1, lambda j: CB if j < F(1, 2) else cpi)
        with pytest.raises(ConstructorChange) as err:
            u_transport(p, True)
        assert err.value.probe >= F(1, 2)
        assert isinstance(err.value.found, CodePi)

    def test_error_is_deterministic(self):
        cpi = CodePi(CB, lambda _b: CB)
        p = babs(1, lambda j: CB if j < F(1, 2) else cpi)
        probes = set()
        for _ in range(3):
            with pytest.raises(ConstructorChange) as err:
                u_transport(p, True)
            probes.add(err.value.probe)
        assert len(probes) == 1

    def test_depth_guard_reports(self):
        from mtt.fib import DepthLimitError

        growing: list = [None]

        def fam(_x):
            return growing[0]

        growing[0] = CodePi(CB, fam)
        with pytest.raises((DepthLimitError, RecursionError)):
            u_transport(idp(growing[0]), lambda *_: None)


class TestRandomCodes:
    def test_idp_transport_safe_on_generated_codes(self):
        rng = random.Random(12)
        from mtt.fib import sample_values

        for _ in range(40):
            code = rand_code(rng)
            vals = sample_values(decode(code), limit=2)
            for a in vals:
                u_transport(idp(code), a)  # must not raise
