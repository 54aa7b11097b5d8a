"""Transport structures: degenerate-path laws, lifting, identity types, J.

The oracle tests unfold the transport recipes step by step with explicit
intermediate values, independently of the combinators under test.
"""

import random
from fractions import Fraction

import pytest

from mtt.fib import (
    BOOL,
    EMPTY,
    LINE,
    NAT,
    UNIT,
    Fibration,
    Inl,
    Inr,
    PiType,
    Sup,
    WType,
    compose_transport_path,
    const_fib,
    enumerate_values,
    id_fib,
    id_transport,
    j_elim,
    lift,
    pi_fib,
    refl_point,
    refl_value,
    reindex,
    sample_values,
    sigma_fib,
    singleton_contraction,
    snd_path,
    sum_fib,
    w_fib,
)
from mtt.laws import _leaf, _node, rand_chain, rand_piecewise
from mtt.path import (
    SampleSpec,
    babs,
    compose,
    from_,
    idp,
    map_path,
    path_eq,
    probe_points,
    pw_poly,
    reverse,
    step_path,
    upto,
)
from mtt.ring import RATIONALS

F = Fraction
SPEC = SampleSpec(count=16)


def flip_fib(threshold=F(1)):
    """Boolean fibers over scalar contexts, flipping on long paths.

    Lawful: a degenerate path has shape 0 < threshold, so it transports as
    the identity; nothing else is required of a transport action.
    """
    return Fibration(
        fam=lambda _x: BOOL,
        transport=lambda p, a: (not a) if p.shape >= threshold else a,
    )


def bump_fib(threshold=F(1), bump=1):
    return Fibration(
        fam=lambda _x: NAT,
        transport=lambda p, a: a + bump if p.shape >= threshold else a,
    )


def ramp(shape=2):
    return pw_poly(shape, (0, 1))


class TestConstFib:
    def test_transport_is_identity(self):
        A = const_fib(BOOL)
        assert A.transport(ramp(5), True) is True
        assert const_fib(NAT).transport(ramp(5), 7) == 7

    def test_empty_fiber_vacuous(self):
        assert enumerate_values(const_fib(EMPTY).fam(F(0))) == []


class TestReindex:
    def test_identity_map(self):
        A = flip_fib()
        R = reindex(A, lambda x: x)
        p = ramp()
        assert R.transport(p, True) == A.transport(p, True)

    def test_const_family_stays_identity(self):
        R = reindex(const_fib(BOOL), lambda x: x * 2)
        assert R.transport(ramp(), True) is True

    def test_respects_composition(self):
        A = flip_fib(F(3, 2))
        g1 = lambda d: d * 2
        g2 = lambda d: d + 1
        p = ramp()
        lhs = reindex(reindex(A, g1), g2)
        rhs = reindex(A, lambda d: g1(g2(d)))
        for a in (False, True):
            assert lhs.transport(p, a) == rhs.transport(p, a)


class TestLift:
    def test_lift_of_idp_is_degenerate(self):
        A = flip_fib()
        lifted = lift(A, idp(F(0)), True)
        assert path_eq(lifted, idp((F(0), True)), SPEC)

    def test_first_projection_is_the_base_path(self):
        A = flip_fib()
        p = ramp()
        lifted = lift(A, p, True)
        assert path_eq(map_path(lambda pt: pt[0], lifted), p, SPEC)

    def test_target_is_the_transport(self):
        A = flip_fib()
        p = ramp()
        assert lift(A, p, True).target == (p.target, A.transport(p, True))


class TestSndPath:
    def test_snd_of_idp(self):
        A = flip_fib()
        assert path_eq(snd_path(A, idp((F(0), True))), idp(True), SPEC)

    def test_shape_preserved(self):
        A = flip_fib()
        p = lift(A, ramp(), False)
        assert snd_path(A, p).shape == p.shape

    def test_oracle_snd_of_lift_stepwise(self):
        """Unfold the endpoint-sliding formula by hand on a shape-1 path."""
        A = flip_fib(F(1, 2))
        base = ramp(1)
        a = True
        lifted = lift(A, base, a)
        got = snd_path(A, lifted)
        # By hand: at parameter i the formula transports the lifted second
        # component, trpt(i▷base) a, along from(i, base).
        for i in probe_points(F(1), SPEC):
            second = A.transport(upto(i, base), a)
            slid = A.transport(from_(i, base), second)
            assert got.at(i) == slid
        assert got.target == A.transport(base, a)


class TestSigma:
    def test_idp_transport(self):
        A, B = flip_fib(), flip_fib(F(1, 2))
        S = sigma_fib(A, B)
        assert S.transport(idp(F(0)), (True, False)) == (True, False)

    def test_first_component_uses_base_transport(self):
        A, B = flip_fib(), bump_fib()
        S = sigma_fib(A, B)
        p = ramp()
        moved = S.transport(p, (True, 3))
        assert moved[0] == A.transport(p, True)

    def test_constant_components_give_identity(self):
        S = sigma_fib(const_fib(BOOL), const_fib(NAT))
        assert S.transport(ramp(4), (False, 9)) == (False, 9)


class TestPi:
    def test_idp_transport_applies_to_original(self):
        A, B = flip_fib(), flip_fib(F(1, 2))
        P = pi_fib(A, B)
        f = lambda b: not b
        moved = P.transport(idp(F(0)), f)
        for b in (False, True):
            assert moved(b) == f(b)

    def test_constant_families_give_pointwise_identity(self):
        P = pi_fib(const_fib(BOOL), const_fib(BOOL))
        f = lambda b: b
        moved = P.transport(ramp(3), f)
        for b in (False, True):
            assert moved(b) == f(b)

    def test_oracle_stepwise_double_reversal(self):
        """Evaluate the function-transport recipe by hand on exotic fibers."""
        A = flip_fib(F(3, 2))
        B = Fibration(
            fam=lambda _pt: NAT,
            transport=lambda p, n: n + (2 if p.shape >= F(1) else 0),
        )
        P = pi_fib(A, B)
        p = ramp(2)
        f = lambda b: 10 if b else 20
        moved = P.transport(p, f)
        for b in (False, True):
            # Step 1: pull the argument back along the reversed base path.
            rp = reverse(p)
            a0 = A.transport(rp, b)
            # Step 2: apply f at the pulled-back argument.
            out = f(a0)
            # Step 3: push the result forward over the reversed lift.
            route = reverse(lift(A, rp, b))
            want = B.transport(route, out)
            assert moved(b) == want


class TestSum:
    def test_idp(self):
        S = sum_fib(flip_fib(), bump_fib())
        assert S.transport(idp(F(0)), Inl(True)) == Inl(True)

    def test_tags_preserved(self):
        A, B = flip_fib(), bump_fib()
        S = sum_fib(A, B)
        p = ramp()
        assert S.transport(p, Inl(False)) == Inl(A.transport(p, False))
        assert S.transport(p, Inr(4)) == Inr(B.transport(p, 4))


def tree_equal(wty, a, b):
    if not isinstance(a, Sup) or not isinstance(b, Sup):
        return False
    if a.label != b.label:
        return False
    branch = enumerate_values(wty.branches(a.label)) or []
    return all(tree_equal(wty, a.children(v), b.children(v)) for v in branch)


class TestW:
    def leaf_branching(self):
        return Fibration(fam=lambda xa: BOOL if xa[1] else EMPTY, transport=lambda _p, b: b)

    def test_idp_transport_structural(self):
        A = flip_fib()
        W = w_fib(A, self.leaf_branching())
        wty = WType(BOOL, lambda lab: BOOL if lab else EMPTY)
        tree = _node(_leaf(), _node(_leaf(), _leaf()))
        moved = W.transport(idp(F(0)), tree)
        assert tree_equal(wty, moved, tree)

    def test_leaf_transports_to_leaf(self):
        A = const_fib(BOOL)
        W = w_fib(A, self.leaf_branching())
        moved = W.transport(ramp(), _leaf())
        assert moved.label is False

    def test_depth_two_identity_over_constant_families(self):
        A = const_fib(BOOL)
        W = w_fib(A, self.leaf_branching())
        wty = WType(BOOL, lambda lab: BOOL if lab else EMPTY)
        tree = _node(_leaf(), _leaf())
        moved = W.transport(ramp(3), tree)
        assert tree_equal(wty, moved, tree)

    def test_depth_guard(self):
        from mtt.fib import DepthLimitError

        A = const_fib(BOOL)
        B = const_fib(UNIT)
        W = w_fib(A, B, max_depth=8)
        cyclic = Sup(True, lambda _u: cyclic_inner)
        cyclic_inner = Sup(True, lambda _u: cyclic)

        def force(tree, depth):
            if depth == 0:
                return tree
            return force(tree.children(()), depth - 1)

        moved = W.transport(ramp(), cyclic)
        with pytest.raises(DepthLimitError):
            force(moved, 12)


class TestIdFib:
    def test_idp_transport_pointwise(self):
        A = flip_fib()
        I = id_fib(A)
        q = step_path(True, False)
        moved = I.transport(idp(((F(0), True), False)), q)
        assert path_eq(moved, q, SPEC)

    def test_shape_addition_through_conjugation(self):
        A = flip_fib()
        I = id_fib(A)
        base = ramp()
        track = map_path(lambda x: ((x, True), False), base)
        q = step_path(True, False, F(1, 2))
        moved = I.transport(track, q)
        p1 = snd_path(A, map_path(lambda pt: pt[0], track))
        p2 = snd_path(A, map_path(lambda pt: (pt[0][0], pt[1]), track))
        assert moved.shape == p1.shape + q.shape + p2.shape

    def test_oracle_conjugation_stepwise(self):
        """Recompute the identity-fiber transport composite by hand."""
        A = flip_fib(F(3, 2))
        base = ramp(2)
        a1, a2 = True, False
        track = map_path(lambda x: ((x, a1), a2), base)
        q = step_path(a1, a2, F(1))
        got = id_transport(A, track, q)
        p1 = snd_path(A, map_path(lambda pt: pt[0], track))
        p2 = snd_path(A, map_path(lambda pt: (pt[0][0], pt[1]), track))
        mid = map_path(lambda v: A.transport(base, v), q)
        want = compose(p2, compose(mid, reverse(p1)))
        assert path_eq(got, want, SPEC)
        # The track's fiber components are constant, so the conjugated path
        # runs between them: source a1, target a2.
        assert got.source == a1
        assert got.target == a2

    def test_constant_context_reduces_to_conjugation(self):
        """With a degenerate base path, the composite is p2 . q . rev(p1)."""
        A = flip_fib()
        x = F(0)
        # endpoints move within the fiber while the context stays put
        a_path = step_path(True, False, F(2))  # used as p1 surrogate
        track = babs(F(2), lambda i: ((x, a_path.at(i)), a_path.at(i)))
        q = idp(True)
        got = id_transport(A, track, q)
        # both snd-paths agree here so the conjugation closes up at False
        assert got.source == got.target
        assert got.shape == F(4)


class TestReflAndJ:
    def test_refl_shape_zero(self):
        assert refl_value(True).shape == 0

    def test_refl_point_is_diagonal(self):
        point = refl_point(F(0), True)
        assert point[0] == ((F(0), True), True)
        assert point[1].shape == 0

    def test_j_computes_on_refl(self):
        B = const_fib(BOOL)
        got = j_elim(B, lambda _x, _a: True, F(0), False, False, idp(False))
        assert got is True

    def test_j_constant_bool_motive_any_path(self):
        B = const_fib(BOOL)
        q = step_path(True, False)
        got = j_elim(B, lambda _x, _a: True, F(0), True, False, q)
        assert got is True

    def test_j_computation_exact_for_random_motives(self):
        rng = random.Random(3)
        for _ in range(50):
            fiber = rng.choice(["bool", "nat", "pair"])
            if fiber == "bool":
                B = const_fib(BOOL)
                base = bool(rng.randint(0, 1))
            elif fiber == "nat":
                B = const_fib(NAT)
                base = rng.randint(0, 9)
            else:
                B = sigma_fib(const_fib(BOOL), const_fib(NAT))
                base = (bool(rng.randint(0, 1)), rng.randint(0, 9))
            a = bool(rng.randint(0, 1))
            got = j_elim(B, lambda _x, _a, base=base: base, F(0), a, a, idp(a))
            assert got == base

    def test_j_oracle_id_motive_stepwise(self):
        """J with an identity-type motive against a hand evaluation.

        The eliminated path has shape 1, so the motive fibration transports
        the degenerate base path along the singleton contraction; the oracle
        recomputes that composite directly.
        """
        A = const_fib(BOOL)
        # motive fiber at (((x, a1), a2), q) is the path type a1 ~ a2
        B = reindex(id_fib(A), lambda pt: pt[0])
        beta = lambda _x, a: idp(a)
        a1 = True
        q = step_path(True, False, F(1))
        got = j_elim(B, beta, F(0), a1, q.target, q)
        # oracle: transport idp(a1) along the contraction track by hand
        track = babs(q.shape, lambda i: (((F(0), a1), q.at(i)), upto(i, q)))
        b_track = map_path(lambda pt: pt[0], track)
        want = id_transport(A, b_track, idp(a1))
        assert path_eq(got, want, SPEC)
        # and its endpoints are the transported diagonal endpoints
        assert got.source is True
        assert got.target is False


class TestSingletonContraction:
    def test_endpoints(self):
        rng = random.Random(8)
        for _ in range(20):
            p = rand_piecewise(rng, RATIONALS)
            sc = singleton_contraction(p.source, p)
            assert sc.source[0] == p.source
            assert sc.source[1].shape == 0
            assert sc.target[0] == p.target
            assert path_eq(sc.target[1], p, SPEC)


class TestComposeHomotopy:
    def test_endpoints_are_the_two_transports(self):
        rng = random.Random(21)
        for _ in range(10):
            Fb = flip_fib(F(rng.randint(1, 3), rng.randint(1, 2)))
            p, q = rand_chain(rng, RATIONALS, 2)
            a = bool(rng.randint(0, 1))
            conn = compose_transport_path(Fb, LINE, p, q, a)
            assert conn.source == Fb.transport(compose(q, p), a)
            assert conn.target == Fb.transport(q, Fb.transport(p, a))

    def test_detects_strict_associativity_failure(self):
        Fb = flip_fib(F(1))
        p = pw_poly(F(3, 4), (0, 1))
        q = pw_poly(F(1, 2), (F(3, 4), 1))
        lhs = Fb.transport(compose(q, p), True)
        rhs = Fb.transport(q, Fb.transport(p, True))
        assert lhs != rhs  # strict composition law genuinely fails here
        conn = compose_transport_path(Fb, LINE, p, q, True)
        assert (conn.source, conn.target) == (lhs, rhs)


class TestEnumerationAndSampling:
    def test_enumerate_bool_pi(self):
        fns = enumerate_values(PiType(BOOL, lambda _b: BOOL))
        assert fns is not None and len(fns) == 4
        tables = sorted((f(False), f(True)) for f in fns)
        assert tables == [(False, False), (False, True), (True, False), (True, True)]

    def test_sample_values_choice_functions_are_well_typed(self):
        ty = PiType(BOOL, lambda b: BOOL if b else NAT)
        for f in sample_values(ty, limit=2):
            assert isinstance(f(True), bool)
            assert isinstance(f(False), int) and not isinstance(f(False), bool)
