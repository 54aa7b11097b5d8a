"""The equational law suite: deterministic generators, runners, reports.

Each law checks one algebraic identity of the kernel on randomly generated
instances.  Generation is deterministic: every law owns a generator seeded
with the run seed XOR the law's registry index, so filtering or parallelism
cannot change results.  Scalar-valued identities run on the exact piecewise
backend and are coefficient-exact; opaque carriers are probed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import fib
from .fib import (
    BOOL,
    EMPTY,
    LINE,
    NAT,
    Fibration,
    Inl,
    Inr,
    Sup,
    compose_transport_path,
    const_fib,
    enumerate_values,
    id_fib,
    id_transport,
    j_elim,
    lift,
    pi_fib,
    reindex,
    sigma_fib,
    singleton_contraction,
    snd_path,
    sum_fib,
    w_fib,
)
from .funext import (
    PointwiseHomotopy,
    epsilon,
    eta,
    funext,
    happly,
    interp_product_excess,
    u_interp,
    v_interp,
)
from .path import (
    DEFAULT_SEED,
    ClosurePath,
    MoorePath,
    PathAgreement,
    PiecewisePath,
    SampleSpec,
    babs,
    compose,
    from_,
    idp,
    map_path,
    path_eq,
    poly_eval,
    probe_points,
    pw_idp,
    pw_poly,
    reverse,
    step_path,
    upto,
)
from .ring import RATIONALS, Ring, Scalar, minimum, truncated_sub
from .universe import (
    CodeBool,
    CodeEq,
    CodePi,
    ConstructorChange,
    UCode,
    constructor_stable,
    decode,
    u_transport,
    universe_fibration,
)

LAW_SPEC = SampleSpec(count=64)
FAST_SPEC = SampleSpec(count=8)


# ---------------------------------------------------------------------------
# Generators.


def rand_width(rng: random.Random, ring: Ring) -> Scalar:
    if ring.is_trivial():
        return Fraction(0)
    if ring.name == "integers":
        return Fraction(rng.randint(1, 3))
    return Fraction(rng.randint(1, 12), rng.randint(1, 6))


def rand_piecewise(
    rng: random.Random,
    ring: Ring,
    start: Optional[Scalar] = None,
    max_segments: int = 3,
) -> PiecewisePath:
    """A random exact path; under the trivial ring everything is degenerate."""
    value = start if start is not None else ring.random_elem(rng)
    if ring.is_trivial():
        return pw_idp(Fraction(0))
    knots = [Fraction(0)]
    pieces = []
    for _ in range(rng.randint(1, max_segments)):
        width = rand_width(rng, ring)
        knots.append(knots[-1] + width)
        degree = rng.randint(0, 2)
        coeffs = [value] + [ring.random_elem(rng, span=3) for _ in range(degree)]
        pieces.append(tuple(coeffs))
        value = poly_eval(coeffs, width)
    return PiecewisePath(knots, pieces)


def rand_chain(rng: random.Random, ring: Ring, n: int) -> list[PiecewisePath]:
    """n composable paths, each starting where the previous one ends."""
    out = [rand_piecewise(rng, ring)]
    for _ in range(n - 1):
        out.append(rand_piecewise(rng, ring, start=out[-1].target))
    return out


def closure_view(p: PiecewisePath) -> ClosurePath:
    return ClosurePath(p.shape, p.at)


def rand_point(rng: random.Random, ring: Ring) -> Scalar:
    return ring.random_nonneg(rng)


def rand_bool_fibration(rng: random.Random, ring: Ring) -> Fibration:
    """A lawful but deliberately exotic transport on Boolean fibers.

    Only the degenerate-path law constrains a transport action, so flipping
    based on shape or displacement is fair game and exercises the formers
    far harder than constant families do.
    """
    mode = rng.randint(0, 2)
    theta = rand_width(rng, ring) if not ring.is_trivial() else Fraction(1)

    def transport(p: MoorePath, a: bool) -> bool:
        if mode == 0:
            return a
        if mode == 1:
            return (not a) if p.shape >= theta else a
        moved = p.target - p.source if isinstance(p.source, Fraction) else 0
        return (not a) if abs(moved) >= theta else a

    return Fibration(fam=lambda _x: BOOL, transport=transport)


def rand_nat_fibration(rng: random.Random, ring: Ring) -> Fibration:
    theta = rand_width(rng, ring) if not ring.is_trivial() else Fraction(1)
    bump = rng.randint(1, 3)

    def transport(p: MoorePath, a: int) -> int:
        return a + bump if p.shape >= theta else a

    return Fibration(fam=lambda _x: NAT, transport=transport)


def rand_fiber_fibration(rng: random.Random, ring: Ring) -> Fibration:
    return rand_bool_fibration(rng, ring) if rng.randint(0, 1) else rand_nat_fibration(rng, ring)


def describe_path(p: MoorePath) -> str:
    if isinstance(p, PiecewisePath):
        return p.to_json()
    pts = [p.shape * Fraction(k, 4) for k in range(5)]
    samples = ", ".join(f"{pt}:{p.at(pt)!r}" for pt in pts)
    return f"closure(shape={p.shape}, {samples})"


def fail(inputs: str, witness: str) -> dict:
    return {"inputs": inputs, "witness": witness}


def check_agree(agreement: PathAgreement, inputs: str) -> Optional[dict]:
    if agreement:
        return None
    return fail(
        inputs,
        f"{agreement.reason}; at {agreement.witness}: {agreement.left!r} != {agreement.right!r}",
    )


# ---------------------------------------------------------------------------
# Law definitions.  Each single-instance runner returns None on success or a
# counterexample dict on failure.

Single = Callable[[random.Random, Ring], Optional[dict]]


@dataclass(frozen=True)
class Law:
    id: str
    count: int
    single: Single


def law_unit_right(rng, ring):
    p = rand_piecewise(rng, ring)
    return check_agree(path_eq(compose(p, pw_idp(p.source)), p), describe_path(p))


def law_unit_left(rng, ring):
    p = rand_piecewise(rng, ring)
    return check_agree(path_eq(compose(pw_idp(p.target), p), p), describe_path(p))


def law_assoc(rng, ring):
    p, q, r = rand_chain(rng, ring, 3)
    lhs = compose(compose(r, q), p)
    rhs = compose(r, compose(q, p))
    inputs = f"p={describe_path(p)} q={describe_path(q)} r={describe_path(r)}"
    return check_agree(path_eq(lhs, rhs), inputs)


def law_compose_shape(rng, ring):
    p, q = rand_chain(rng, ring, 2)
    c = compose(q, p)
    if c.shape != p.shape + q.shape:
        return fail(describe_path(p), f"shape {c.shape} != {p.shape + q.shape}")
    if c.at(p.shape) != p.target:
        return fail(describe_path(p), f"overlap value {c.at(p.shape)} != {p.target}")
    return None


def law_reverse_shape(rng, ring):
    p = rand_piecewise(rng, ring)
    r = reverse(p)
    if r.shape != p.shape or r.source != p.target or r.target != p.source:
        return fail(describe_path(p), f"reverse endpoints/shape wrong: {describe_path(r)}")
    return None


def law_reverse_involution(rng, ring):
    p = rand_piecewise(rng, ring)
    return check_agree(path_eq(reverse(reverse(p)), p), describe_path(p))


def law_reverse_antihom(rng, ring):
    p, q = rand_chain(rng, ring, 2)
    lhs = reverse(compose(q, p))
    rhs = compose(reverse(p), reverse(q))
    return check_agree(path_eq(lhs, rhs), f"p={describe_path(p)} q={describe_path(q)}")


def law_reverse_idp(rng, ring):
    x = ring.random_elem(rng)
    return check_agree(path_eq(reverse(idp(x)), idp(x)), f"x={x}")


def law_map_idp(rng, ring):
    x = ring.random_elem(rng)
    c1, c2 = ring.random_elem(rng), ring.random_elem(rng)
    g = lambda v: c1 + c2 * v
    return check_agree(
        path_eq(map_path(g, idp(x)), idp(g(x)), LAW_SPEC), f"x={x} g=affine({c1},{c2})"
    )


def law_map_compose(rng, ring):
    p, q = rand_chain(rng, ring, 2)
    c1, c2 = ring.random_elem(rng), ring.random_elem(rng)
    g = lambda v: c1 + c2 * v
    lhs = map_path(g, compose(q, p))
    rhs = compose(map_path(g, q), map_path(g, p))
    return check_agree(path_eq(lhs, rhs, LAW_SPEC), f"p={describe_path(p)} q={describe_path(q)}")


def law_babs_zero(rng, ring):
    c1, c2 = ring.random_elem(rng), ring.random_elem(rng)
    phi = lambda i: c1 + c2 * i
    return check_agree(path_eq(babs(0, phi), idp(phi(Fraction(0))), LAW_SPEC), f"phi=affine({c1},{c2})")


def law_babs_eta(rng, ring):
    p = rand_piecewise(rng, ring)
    return check_agree(path_eq(babs(p.shape, p.at), p, LAW_SPEC), describe_path(p))


def law_babs_map(rng, ring):
    j = ring.random_nonneg(rng)
    c1, c2 = ring.random_elem(rng), ring.random_elem(rng)
    d1, d2 = ring.random_elem(rng), ring.random_elem(rng)
    phi = lambda i: c1 + c2 * i
    g = lambda v: d1 + d2 * v
    lhs = map_path(g, babs(j, phi))
    rhs = babs(j, lambda i: g(phi(i)))
    return check_agree(path_eq(lhs, rhs, LAW_SPEC), f"j={j}")


def law_upto_zero(rng, ring):
    p = rand_piecewise(rng, ring)
    return check_agree(path_eq(upto(0, p), pw_idp(p.source)), describe_path(p))


def law_upto_full(rng, ring):
    p = rand_piecewise(rng, ring)
    bound = p.shape + ring.random_nonneg(rng)
    return check_agree(path_eq(upto(bound, p), p), f"{describe_path(p)} bound={bound}")


def law_upto_shape(rng, ring):
    p = rand_piecewise(rng, ring)
    i = ring.random_nonneg(rng)
    u = upto(i, p)
    if u.shape != minimum(p.shape, i):
        return fail(describe_path(p), f"upto shape {u.shape}")
    if u.target != p.at(i) or u.source != p.source:
        return fail(describe_path(p), f"upto endpoints wrong at i={i}")
    return None


def law_from_zero(rng, ring):
    q = rand_piecewise(rng, ring)
    return check_agree(path_eq(from_(0, q), q), describe_path(q))


def law_from_full(rng, ring):
    q = rand_piecewise(rng, ring)
    i = q.shape + ring.random_nonneg(rng)
    return check_agree(path_eq(from_(i, q), pw_idp(q.target)), f"{describe_path(q)} i={i}")


def law_from_endpoints(rng, ring):
    q = rand_piecewise(rng, ring)
    i = ring.random_nonneg(rng)
    f = from_(i, q)
    if f.source != q.at(i) or f.target != q.target:
        return fail(describe_path(q), f"from endpoints wrong at i={i}")
    return None


def law_clamp(rng, ring):
    p = rand_piecewise(rng, ring)
    beyond = p.shape + ring.random_nonneg(rng) + Fraction(1, 3)
    if p.at(beyond) != p.target:
        return fail(describe_path(p), f"at({beyond}) != target")
    return None


def law_backend_agreement(rng, ring):
    """Dual route: the same combinator expression on both backends."""
    p, q = rand_chain(rng, ring, 2)
    cp, cq = closure_view(p), closure_view(q)
    i = ring.random_nonneg(rng)
    ops = rng.randint(0, 3)
    if ops == 0:
        exact, sampled = compose(q, p), compose(cq, cp)
    elif ops == 1:
        exact, sampled = reverse(compose(q, p)), reverse(compose(cq, cp))
    elif ops == 2:
        exact, sampled = upto(i, p), upto(i, cp)
    else:
        exact, sampled = from_(i, reverse(q)), from_(i, reverse(cq))
    return check_agree(
        path_eq(closure_view(exact) if isinstance(exact, PiecewisePath) else exact, sampled, LAW_SPEC),
        f"op={ops} p={describe_path(p)} q={describe_path(q)} i={i}",
    )


# -- tap fibration laws ------------------------------------------------------


def _fiber_values(fibration: Fibration, x) -> list:
    return fib.sample_values(fibration.fam(x), limit=4)


def _values_equal_at(t: fib.SemType, a, b) -> bool:
    if isinstance(t, fib.PiType):
        dom = enumerate_values(t.domain) or []
        return all(_values_equal_at(t.codomain(v), a(v), b(v)) for v in dom)
    if isinstance(t, fib.SigmaType):
        return _values_equal_at(t.first, a[0], b[0]) and _values_equal_at(t.second(a[0]), a[1], b[1])
    if isinstance(t, fib.SumType):
        if type(a) is not type(b):
            return False
        inner = t.left if isinstance(a, Inl) else t.right
        return _values_equal_at(inner, a.value, b.value)
    if isinstance(t, fib.PathType):
        return bool(path_eq(a, b, FAST_SPEC))
    if isinstance(t, fib.WType):
        if not isinstance(a, Sup) or not isinstance(b, Sup):
            return False
        if not _values_equal_at(t.labels, a.label, b.label):
            return False
        branch = enumerate_values(t.branches(a.label)) or []
        return all(_values_equal_at(t, a.children(v), b.children(v)) for v in branch)
    return a == b


def _eq10_check(former: Fibration, x, a) -> Optional[dict]:
    moved = former.transport(idp(x), a)
    t = former.fam(x)
    if not _values_equal_at(t, moved, a):
        return fail(f"x={x!r} a={a!r}", f"transport along idp changed the value: {moved!r}")
    return None


def law_eq10_const(rng, ring):
    x = rand_point(rng, ring)
    former = const_fib(BOOL)
    return _eq10_check(former, x, bool(rng.randint(0, 1)))


def law_eq10_sigma(rng, ring):
    A = rand_bool_fibration(rng, ring)
    B = rand_fiber_fibration(rng, ring)
    former = sigma_fib(A, B)
    x = rand_point(rng, ring)
    a = bool(rng.randint(0, 1))
    b = True if isinstance(B.fam((x, a)), fib.BoolType) else rng.randint(0, 4)
    return _eq10_check(former, x, (a, b))


def law_eq10_pi(rng, ring):
    A = rand_bool_fibration(rng, ring)
    B = rand_bool_fibration(rng, ring)
    former = pi_fib(A, B)
    x = rand_point(rng, ring)
    table = {False: bool(rng.randint(0, 1)), True: bool(rng.randint(0, 1))}
    return _eq10_check(former, x, lambda b: table[b])


def law_eq10_sum(rng, ring):
    A = rand_bool_fibration(rng, ring)
    B = rand_nat_fibration(rng, ring)
    former = sum_fib(A, B)
    x = rand_point(rng, ring)
    a = Inl(bool(rng.randint(0, 1))) if rng.randint(0, 1) else Inr(rng.randint(0, 4))
    return _eq10_check(former, x, a)


def _leaf_branch_fibration(rng=None, ring=None) -> Fibration:
    """Branch fiber Bool at label True, Empty at label False: finite trees.

    This family only carries a transport over label-preserving base paths
    (a Bool fiber cannot move into an Empty one), which is all the tree
    formers ever ask of it.  With an rng the Bool side also flips on long
    paths, exercising the backward argument transport.
    """
    theta = rand_width(rng, ring) if rng is not None and not ring.is_trivial() else None

    def transport(p: MoorePath, b):
        if theta is not None and isinstance(b, bool) and p.shape >= theta:
            return not b
        return b

    return Fibration(fam=lambda xa: BOOL if xa[1] else EMPTY, transport=transport)


def _leaf() -> Sup:
    return Sup(False, lambda _b: (_ for _ in ()).throw(AssertionError("empty branch")))


def _node(left: Sup, right: Sup) -> Sup:
    return Sup(True, lambda b: right if b else left)


def rand_tree(rng: random.Random, depth: int = 2) -> Sup:
    if depth == 0 or rng.randint(0, 2) == 0:
        return _leaf()
    return _node(rand_tree(rng, depth - 1), rand_tree(rng, depth - 1))


def law_eq10_w(rng, ring):
    A = rand_bool_fibration(rng, ring)
    B = _leaf_branch_fibration()
    former = w_fib(A, B)
    x = rand_point(rng, ring)
    return _eq10_check(former, x, rand_tree(rng))


def law_eq10_id(rng, ring):
    A = rand_bool_fibration(rng, ring)
    former = id_fib(A)
    x = rand_point(rng, ring)
    a = bool(rng.randint(0, 1))
    q = idp(a) if rng.randint(0, 1) else step_path(a, not a)
    b = q.target
    moved = former.transport(idp(((x, a), b)), q)
    return check_agree(path_eq(moved, q, FAST_SPEC), f"x={x} q={describe_path(q)}")


def law_lift_idp(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    x = rand_point(rng, ring)
    a = fib.sample_values(A.fam(x), 3)[rng.randint(0, 1)]
    lifted = lift(A, idp(x), a)
    return check_agree(
        path_eq(lifted, idp((x, a)), FAST_SPEC), f"x={x} a={a!r}"
    )


def law_lift_fst(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    p = rand_piecewise(rng, ring)
    a = fib.sample_values(A.fam(p.source), 3)[0]
    lifted = lift(A, p, a)
    return check_agree(
        path_eq(map_path(lambda pt: pt[0], lifted), p, LAW_SPEC),
        f"p={describe_path(p)} a={a!r}",
    )


def law_lift_target(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    p = rand_piecewise(rng, ring)
    a = fib.sample_values(A.fam(p.source), 3)[0]
    lifted = lift(A, p, a)
    want = A.transport(p, a)
    if lifted.target[1] != want:
        return fail(f"p={describe_path(p)} a={a!r}", f"lift target {lifted.target[1]!r} != {want!r}")
    return None


def law_snd_idp(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    x = rand_point(rng, ring)
    a = fib.sample_values(A.fam(x), 3)[0]
    sp = snd_path(A, idp((x, a)))
    return check_agree(path_eq(sp, idp(a), FAST_SPEC), f"x={x} a={a!r}")


def law_snd_shape(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    p = rand_piecewise(rng, ring)
    a = fib.sample_values(A.fam(p.source), 3)[0]
    lifted = lift(A, p, a)
    sp = snd_path(A, lifted)
    if sp.shape != lifted.shape:
        return fail(describe_path(p), f"snd shape {sp.shape} != {lifted.shape}")
    want = A.transport(p, a)
    if sp.target != want:
        return fail(describe_path(p), f"snd target {sp.target!r} != {want!r}")
    return None


def _affine_map(rng, ring):
    c1, c2 = ring.random_elem(rng), ring.random_nonneg(rng)
    return lambda d: c1 + c2 * d


def law_reindex_compose(rng, ring):
    A = rand_fiber_fibration(rng, ring)
    g1, g2 = _affine_map(rng, ring), _affine_map(rng, ring)
    lhs = reindex(reindex(A, g1), g2)
    rhs = reindex(A, lambda d: g1(g2(d)))
    p = rand_piecewise(rng, ring)
    a = fib.sample_values(A.fam(g1(g2(p.source))), 3)[0]
    va, vb = lhs.transport(p, a), rhs.transport(p, a)
    if va != vb:
        return fail(describe_path(p), f"reindex composition broke: {va!r} != {vb!r}")
    return None


def _stability_instance(rng, ring, former_name: str) -> Optional[dict]:
    """Reindex first or form first: both transports must agree on probes."""
    A = rand_bool_fibration(rng, ring)
    B = rand_fiber_fibration(rng, ring)
    gamma = _affine_map(rng, ring)
    gamma_ext = lambda da: (gamma(da[0]), da[1])
    p = rand_piecewise(rng, ring)
    x = p.source
    a = bool(rng.randint(0, 1))
    if former_name == "sigma":
        formed = reindex(sigma_fib(A, B), gamma)
        reixed = sigma_fib(reindex(A, gamma), reindex(B, gamma_ext))
        bval = fib.sample_values(B.fam((gamma(x), a)), 3)[0]
        va = formed.transport(p, (a, bval))
        vb = reixed.transport(p, (a, bval))
        ok = va == vb
    elif former_name == "pi":
        A2 = rand_bool_fibration(rng, ring)
        formed = reindex(pi_fib(A2, B), gamma)
        reixed = pi_fib(reindex(A2, gamma), reindex(B, gamma_ext))
        table = {False: bool(rng.randint(0, 1)), True: bool(rng.randint(0, 1))}
        f = lambda b: table[b]
        va, vb = formed.transport(p, f), reixed.transport(p, f)
        ok = all(va(b) == vb(b) for b in (False, True))
    elif former_name == "sum":
        Bn = rand_nat_fibration(rng, ring)
        formed = reindex(sum_fib(A, Bn), gamma)
        reixed = sum_fib(reindex(A, gamma), reindex(Bn, gamma))
        v = Inl(a) if rng.randint(0, 1) else Inr(rng.randint(0, 3))
        va, vb = formed.transport(p, v), reixed.transport(p, v)
        ok = va == vb
    elif former_name == "w":
        # Labels must not move under transport, or the empty/bool branch
        # family would need an impossible fiber map; see _leaf_branch_fibration.
        Aw = const_fib(BOOL)
        Bw = _leaf_branch_fibration(rng, ring)
        formed = reindex(w_fib(Aw, Bw), gamma)
        reixed = w_fib(reindex(Aw, gamma), reindex(Bw, gamma_ext))
        tree = rand_tree(rng)
        va, vb = formed.transport(p, tree), reixed.transport(p, tree)
        wty = fib.WType(BOOL, lambda lab: BOOL if lab else EMPTY)
        ok = _values_equal_at(wty, va, vb)
    else:  # id
        formed = reindex(id_fib(A), lambda pt: ((gamma(pt[0][0]), pt[0][1]), pt[1]))
        reixed = id_fib(reindex(A, gamma))
        q = idp(a) if rng.randint(0, 1) else step_path(a, not a)
        track = map_path(lambda d: ((d, a), q.target), p)
        va = formed.transport(track, q)
        vb = reixed.transport(track, q)
        ok = bool(path_eq(va, vb, FAST_SPEC))
    if not ok:
        return fail(f"former={former_name} p={describe_path(p)}", "reindex/former order changed transport")
    return None


def law_stability_sigma(rng, ring):
    return _stability_instance(rng, ring, "sigma")


def law_stability_pi(rng, ring):
    return _stability_instance(rng, ring, "pi")


def law_stability_sum(rng, ring):
    return _stability_instance(rng, ring, "sum")


def law_stability_w(rng, ring):
    return _stability_instance(rng, ring, "w")


def law_stability_id(rng, ring):
    return _stability_instance(rng, ring, "id")


def law_compose_homotopy(rng, ring):
    F = rand_fiber_fibration(rng, ring)
    p, q = rand_chain(rng, ring, 2)
    a = fib.sample_values(F.fam(p.source), 3)[0]
    conn = compose_transport_path(F, LINE, p, q, a)
    lhs = F.transport(compose(q, p), a)
    rhs = F.transport(q, F.transport(p, a))
    if conn.source != lhs or conn.target != rhs:
        return fail(
            f"p={describe_path(p)} q={describe_path(q)} a={a!r}",
            f"endpoints ({conn.source!r}, {conn.target!r}) != ({lhs!r}, {rhs!r})",
        )
    return None


def law_singleton(rng, ring):
    p = rand_piecewise(rng, ring)
    x = p.source
    sc = singleton_contraction(x, p)
    src, tgt = sc.source, sc.target
    if src[0] != x or src[1].shape != 0 or src[1].at(0) != x:
        return fail(describe_path(p), f"contraction source wrong: {src!r}")
    if tgt[0] != p.target or not path_eq(tgt[1], p, FAST_SPEC):
        return fail(describe_path(p), f"contraction target wrong: {tgt!r}")
    return None


def _rand_motive(rng) -> tuple[Fibration, Callable]:
    kind = rng.randint(0, 3)
    if kind == 0:
        table = {False: bool(rng.randint(0, 1)), True: bool(rng.randint(0, 1))}
        return const_fib(BOOL), lambda _x, a: table[bool(a)]
    if kind == 1:
        k = rng.randint(0, 5)
        return const_fib(NAT), lambda _x, a: k + (1 if a else 0)
    if kind == 2:
        k = rng.randint(0, 3)
        return sigma_fib(const_fib(BOOL), const_fib(NAT)), lambda _x, a: (bool(a), k)
    return sum_fib(const_fib(BOOL), const_fib(NAT)), (
        lambda _x, a: Inl(bool(a)) if rng.randint(0, 1) else Inr(rng.randint(0, 3))
    )


def law_j_compute(rng, ring):
    B, beta = _rand_motive(rng)
    x = rand_point(rng, ring)
    a = bool(rng.randint(0, 1))
    expect = beta(x, a)
    got = j_elim(B, lambda _x, _a: expect, x, a, a, idp(a))
    if got != expect:
        return fail(f"x={x} a={a}", f"J at refl gave {got!r}, base case {expect!r}")
    return None


# -- function extensionality laws ---------------------------------------------


def _rand_homotopy(rng, ring):
    """A pointwise homotopy over scalar points with polynomially varying shapes."""
    m = ring.random_nonneg(rng, span=2)
    c = ring.random_nonneg(rng, span=2)
    f1, f0 = ring.random_elem(rng), ring.random_elem(rng)
    d1, d0 = ring.random_elem(rng), ring.random_elem(rng)
    shape_at = lambda x: m * x + c
    f = lambda x: f1 * x + f0
    d = lambda x: d1 * x + d0
    e = PointwiseHomotopy(
        LINE, lambda x: babs(shape_at(x), lambda j, x=x: f(x) + j * d(x))
    )
    g = lambda x: f(x) + shape_at(x) * d(x)
    return e, f, g, shape_at


def _domain_probes(rng, ring):
    return [ring.random_nonneg(rng) for _ in range(4)] + [Fraction(0)]


def law_funext_shape(rng, ring):
    e, _f, _g, _ = _rand_homotopy(rng, ring)
    path = funext(e)
    if path.shape != 1:
        return fail("homotopy", f"funext shape {path.shape} != 1")
    return None


def law_funext_endpoints(rng, ring):
    e, f, g, _ = _rand_homotopy(rng, ring)
    path = funext(e)
    for x in _domain_probes(rng, ring):
        if path.source(x) != f(x) or path.target(x) != g(x):
            return fail(f"x={x}", "funext endpoints differ from f/g")
    return None


def law_funext_happly(rng, ring):
    e, _f, _g, shape_at = _rand_homotopy(rng, ring)
    path = funext(e)
    for x in _domain_probes(rng, ring):
        got = happly(path, x)
        want = babs(1, lambda i, x=x: e.paths(x).at(i * shape_at(x)))
        verdict = path_eq(got, want, FAST_SPEC)
        if not verdict:
            return check_agree(verdict, f"x={x}")
    return None


def law_interp_identity(rng, ring):
    j = ring.random_elem(rng)
    s = ring.random_nonneg(rng)
    lhs = u_interp(j, s) * v_interp(j, s)
    rhs = s + interp_product_excess(j, s)
    if lhs != rhs:
        return fail(f"j={j} s={s}", f"{lhs} != {rhs}")
    return None


def law_interp_bound(rng, ring):
    s = ring.random_nonneg(rng)
    for k in range(17):
        j = Fraction(k, 16)
        if u_interp(j, s) * v_interp(j, s) < s:
            return fail(f"s={s}", f"u*v < shape at j={j}")
    return None


def law_epsilon_endpoints(rng, ring):
    e, _f, _g, _ = _rand_homotopy(rng, ring)
    eps = epsilon(e)
    if eps.shape != 1:
        return fail("homotopy", f"epsilon shape {eps.shape} != 1")
    fe = funext(e)
    at0, at1 = eps.at(0), eps.at(1)
    for x in _domain_probes(rng, ring):
        v0 = path_eq(at0.paths(x), happly(fe, x), FAST_SPEC)
        if not v0:
            return check_agree(v0, f"epsilon at j=0, x={x}")
        v1 = path_eq(at1.paths(x), e.paths(x), FAST_SPEC)
        if not v1:
            return check_agree(v1, f"epsilon at j=1, x={x}")
    return None


def law_eta_endpoints(rng, ring):
    p = rand_piecewise(rng, ring)
    path_of_fns = map_path(lambda v: (lambda _x: v), p)
    et = eta(path_of_fns)
    if et.shape != 1:
        return fail(describe_path(p), f"eta shape {et.shape} != 1")
    probes = _domain_probes(rng, ring)
    start = et.at(0)
    for x in probes:
        v = path_eq(map_path(lambda fn: fn(x), start), map_path(lambda fn: fn(x), path_of_fns), FAST_SPEC)
        if not v:
            return check_agree(v, f"eta at j=0, x={x}")
    end = et.at(1)
    fe = funext(
        PointwiseHomotopy(LINE, lambda x: happly(path_of_fns, x))
    )
    for x in probes:
        v = path_eq(map_path(lambda fn: fn(x), end), happly(fe, x), FAST_SPEC)
        if not v:
            return check_agree(v, f"eta at j=1, x={x}")
    return None


def law_k0_id(rng, ring):
    e = PointwiseHomotopy(LINE, lambda x: babs(x, lambda j: j))
    path = funext(e)
    got = path.at(Fraction(1, 2))(Fraction(4))
    if got != 2:
        return fail("constant-zero vs identity homotopy", f"value at (1/2, 4) is {got}, want 2")
    if path.shape != 1 or path.at(0)(Fraction(3)) != 0 or path.at(1)(Fraction(3)) != 3:
        return fail("constant-zero vs identity homotopy", "endpoint contract broken")
    return None


# -- universe laws -------------------------------------------------------------


def rand_code(rng: random.Random, depth: int = 2) -> UCode:
    pick = rng.randint(0, 2 if depth > 0 else 0)
    if pick == 0:
        return CodeBool()
    if pick == 1:
        inner = rand_code(rng, depth - 1)
        if isinstance(inner, CodeBool):
            on_false = rand_code(rng, depth - 1)
            on_true = rand_code(rng, depth - 1)
            return CodePi(inner, lambda b: on_true if b else on_false)
        constant = rand_code(rng, depth - 1)
        return CodePi(inner, lambda _x: constant)
    inner = rand_code(rng, depth - 1) if rng.randint(0, 1) else CodeBool()
    endpoints = fib.sample_values(decode(inner), limit=3)
    if not endpoints:
        flip = bool(rng.randint(0, 1))
        return CodeEq(CodeBool(), flip, flip if rng.randint(0, 1) else not flip)
    lhs = endpoints[rng.randrange(len(endpoints))]
    rhs = endpoints[rng.randrange(len(endpoints))]
    return CodeEq(inner, lhs, rhs)


def _values_for_code(rng, code: UCode) -> list:
    return fib.sample_values(decode(code), limit=3)


def law_u_idp(rng, ring):
    code = rand_code(rng)
    vals = _values_for_code(rng, code)
    if not vals:
        return None
    a = vals[rng.randrange(len(vals))]
    moved = u_transport(idp(code), a)
    if not _values_equal_at(decode(code), moved, a):
        return fail(f"code={code!r}", f"transport along idp changed {a!r} to {moved!r}")
    return None


def law_u_coherence_bool(rng, ring):
    shape = rand_width(rng, ring) or Fraction(1)
    p = babs(shape, lambda _j: CodeBool())
    a = bool(rng.randint(0, 1))
    got = u_transport(p, a)
    want = const_fib(BOOL).transport(p, a)
    if got != want:
        return fail(f"shape={shape}", f"{got!r} != {want!r}")
    return None


TINY_SPEC = SampleSpec(count=4)


def law_u_coherence_pi(rng, ring):
    shape = rand_width(rng, ring) or Fraction(1)
    theta = shape / 2
    cb = CodeBool()
    deep = rng.randint(0, 3) == 0  # identity-type codomains are much costlier

    def fam_at(j: Scalar):
        if not deep:
            return lambda _b: cb
        hit = j >= theta
        return lambda b: CodeEq(cb, b, (not b) if hit else b)

    p = babs(shape, lambda j: CodePi(cb, fam_at(j)))
    if deep:
        table = {False: idp(False), True: idp(True)}
        a = lambda b: table[b]
    else:
        bit = bool(rng.randint(0, 1))
        a = lambda b: b != bit
    got = u_transport(p, a, TINY_SPEC)

    dom = Fibration(
        fam=lambda u: decode(u.domain),
        transport=lambda pu, x: u_transport(map_path(lambda u: u.domain, pu), x, TINY_SPEC),
    )
    cod = Fibration(
        fam=lambda ux: decode(ux[0].family(ux[1])),
        transport=lambda pux, b: u_transport(
            map_path(lambda ux: ux[0].family(ux[1]), pux), b, TINY_SPEC
        ),
    )
    want = pi_fib(dom, cod).transport(p, a)
    for b in (False, True):
        lhs, rhs = got(b), want(b)
        if deep:
            verdict = path_eq(lhs, rhs, TINY_SPEC)
            if not verdict:
                return check_agree(verdict, f"shape={shape} b={b}")
        elif lhs != rhs:
            return fail(f"shape={shape} b={b}", f"{lhs!r} != {rhs!r}")
    return None


def law_u_coherence_eq(rng, ring):
    shape = rand_width(rng, ring) or Fraction(1)
    theta = shape / 2
    cb = CodeBool()
    p = babs(shape, lambda j: CodeEq(cb, j >= theta, True))
    # The source code is eq(bool, false, true), so q runs from false to true.
    q = step_path(False, True, rand_width(rng, ring) or Fraction(1))
    got = u_transport(p, q)
    track = map_path(lambda u: ((u.code, u.lhs), u.rhs), p)
    want = id_fib(universe_fibration).transport(track, q)
    verdict = path_eq(got, want, FAST_SPEC)
    return check_agree(verdict, f"shape={shape} q={describe_path(q)}")


def law_u_xbar(rng, ring):
    shape = rand_width(rng, ring) or Fraction(1)
    theta = shape / 2
    cb = CodeBool()
    dom_at = lambda j: CodeEq(cb, j >= theta, True)
    p = babs(shape, lambda j: CodePi(dom_at(j), lambda _x: cb))
    x = step_path(p.at(shape).domain.lhs, True)

    def xbar(k: Scalar) -> MoorePath:
        route = babs(truncated_sub(shape, k), lambda j: p.at(truncated_sub(shape, j)).domain)
        return u_transport(route, x)

    for k in (shape, shape + 1, shape + Fraction(1, 2)):
        verdict = path_eq(xbar(k), x, FAST_SPEC)
        if not verdict:
            return check_agree(verdict, f"shape={shape} k={k}")
    return None


def law_constructor_change(rng, ring):
    shape = rand_width(rng, ring) or Fraction(1)
    cut = shape / 2
    cb, cpi = CodeBool(), CodePi(CodeBool(), lambda _b: CodeBool())
    p = babs(shape, lambda j: cb if j < cut else cpi)
    verdict = constructor_stable(p)
    if verdict:
        return fail(f"shape={shape} cut={cut}", "step path reported stable")
    try:
        u_transport(p, True)
    except ConstructorChange as err:
        again = constructor_stable(p)
        if again.witness != verdict.witness:
            return fail(f"shape={shape}", "stability witness not deterministic")
        return None
    return fail(f"shape={shape} cut={cut}", "transport across a constructor change did not raise")


def law_boolean_step(rng, ring):
    one = ring.one()
    p = step_path(True, False, one)
    if p.shape != one:
        return fail(f"ring={ring.name}", f"step shape {p.shape} != {one}")
    if p.source is not True:
        return fail(f"ring={ring.name}", f"step source {p.source!r}")
    expected_target = True if ring.is_trivial() else False
    if p.target is not expected_target:
        return fail(f"ring={ring.name}", f"step target {p.target!r} != {expected_target!r}")
    return None


# ---------------------------------------------------------------------------
# Registry and engine.

LAWS: tuple[Law, ...] = (
    Law("path.unit.right", 1000, law_unit_right),
    Law("path.unit.left", 1000, law_unit_left),
    Law("path.compose.assoc", 1000, law_assoc),
    Law("path.compose.shape", 1000, law_compose_shape),
    Law("path.reverse.shape", 1000, law_reverse_shape),
    Law("path.reverse.involution", 1000, law_reverse_involution),
    Law("path.reverse.antihom", 1000, law_reverse_antihom),
    Law("path.reverse.idp", 1000, law_reverse_idp),
    Law("path.map.idp", 250, law_map_idp),
    Law("path.map.compose", 250, law_map_compose),
    Law("path.babs.zero", 1000, law_babs_zero),
    Law("path.babs.eta", 250, law_babs_eta),
    Law("path.babs.map", 250, law_babs_map),
    Law("path.upto.zero", 1000, law_upto_zero),
    Law("path.upto.full", 1000, law_upto_full),
    Law("path.upto.shape", 1000, law_upto_shape),
    Law("path.from.zero", 1000, law_from_zero),
    Law("path.from.full", 1000, law_from_full),
    Law("path.from.endpoints", 1000, law_from_endpoints),
    Law("path.clamp", 1000, law_clamp),
    Law("path.backend_agreement", 250, law_backend_agreement),
    Law("fib.transport_idp.const", 500, law_eq10_const),
    Law("fib.transport_idp.sigma", 500, law_eq10_sigma),
    Law("fib.transport_idp.pi", 500, law_eq10_pi),
    Law("fib.transport_idp.sum", 500, law_eq10_sum),
    Law("fib.transport_idp.w", 500, law_eq10_w),
    Law("fib.transport_idp.id", 500, law_eq10_id),
    Law("fib.lift.idp", 500, law_lift_idp),
    Law("fib.lift.fst", 200, law_lift_fst),
    Law("fib.lift.target", 500, law_lift_target),
    Law("fib.snd.idp", 500, law_snd_idp),
    Law("fib.snd.shape", 200, law_snd_shape),
    Law("fib.reindex.compose", 200, law_reindex_compose),
    Law("fib.stability.sigma", 100, law_stability_sigma),
    Law("fib.stability.pi", 100, law_stability_pi),
    Law("fib.stability.sum", 100, law_stability_sum),
    Law("fib.stability.w", 100, law_stability_w),
    Law("fib.stability.id", 100, law_stability_id),
    Law("fib.compose_homotopy", 50, law_compose_homotopy),
    Law("fib.singleton", 200, law_singleton),
    Law("fib.j.compute", 200, law_j_compute),
    Law("funext.shape", 500, law_funext_shape),
    Law("funext.endpoints", 200, law_funext_endpoints),
    Law("funext.happly", 100, law_funext_happly),
    Law("funext.interp.identity", 500, law_interp_identity),
    Law("funext.interp.bound", 100, law_interp_bound),
    Law("funext.epsilon.endpoints", 50, law_epsilon_endpoints),
    Law("funext.eta.endpoints", 50, law_eta_endpoints),
    Law("funext.k0_id", 1, law_k0_id),
    Law("universe.transport_idp", 200, law_u_idp),
    Law("universe.coherence.bool", 200, law_u_coherence_bool),
    Law("universe.coherence.pi", 200, law_u_coherence_pi),
    Law("universe.coherence.eq", 200, law_u_coherence_eq),
    Law("universe.xbar", 100, law_u_xbar),
    Law("universe.constructor_change", 50, law_constructor_change),
    Law("model.boolean_step", 1, law_boolean_step),
)


@dataclass(frozen=True)
class LawReport:
    law: str
    instances: int
    passed: bool
    counterexample: Optional[dict]
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "law": self.law,
            "instances": self.instances,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }


def run_laws(
    seed: int = DEFAULT_SEED,
    count: Optional[int] = None,
    law_filter: Optional[str] = None,
    ring: Ring = RATIONALS,
    stable_timing: bool = False,
) -> list[LawReport]:
    """Run (a filtered subset of) the registry; deterministic per (seed, count, filter, ring)."""
    reports = []
    for index, law in enumerate(LAWS):
        if law_filter and law_filter not in law.id:
            continue
        rng = random.Random(seed ^ index)
        total = count if count is not None else law.count
        started = time.perf_counter()
        counterexample = None
        ran = 0
        for _ in range(total):
            ran += 1
            counterexample = law.single(rng, ring)
            if counterexample is not None:
                break
        elapsed = 0 if stable_timing else int((time.perf_counter() - started) * 1000)
        reports.append(LawReport(law.id, ran, counterexample is None, counterexample, elapsed))
    return reports


def reports_to_json(reports: list[LawReport]) -> str:
    import json

    return json.dumps([r.to_json_dict() for r in reports], indent=2)
