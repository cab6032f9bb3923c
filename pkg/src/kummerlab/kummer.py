"""Eigencomponent decompositions, edge labels/weights, and instance samplers.

For a Kummer base x, conjugation w -> x^-1 w x has order p, so any z splits
uniquely as z_0 + ... + z_(p-1) with z_i x = rho^i x z_i.  The set of indices
with z_i != 0 is the label of the directed edge x -> z; its size is the
weight.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import symalg
from .errors import Exhausted, NotInvertible, NotKummerBase, WrongDegree, WrongWeight
from .symalg import AlgebraCtx, Elem


@dataclass(frozen=True)
class Decomp:
    """Eigencomponents of an element with respect to a Kummer base."""

    base: Elem
    parts: tuple[Elem, ...]
    label: frozenset[int]

    @property
    def weight(self) -> int:
        return len(self.label)


@dataclass(frozen=True)
class EdgeInfo:
    label_fwd: frozenset[int]
    label_bwd: frozenset[int]

    @property
    def weight_fwd(self) -> int:
        return len(self.label_fwd)

    @property
    def weight_bwd(self) -> int:
        return len(self.label_bwd)


def kummer_inverse(x: Elem) -> Elem:
    """Inverse of a Kummer element: (x^p)^-1 x^(p-1), no linear solve needed."""
    lam = symalg.kummer_scalar(x)
    return symalg.scalar_mul(x.ctx.field.inv(lam), symalg.power(x, x.ctx.p - 1))


def decompose(x: Elem, z: Elem) -> Decomp:
    """Split z into its rho-commutation eigencomponents with respect to x.

    parts[i] = p^-1 * sum_k rho^(-ik) x^-k z x^k.
    """
    ctx = x.ctx
    if not symalg.is_kummer(x):
        raise NotKummerBase("decomposition base must be a Kummer element")
    p, q = ctx.p, ctx.q
    xinv = kummer_inverse(x)
    conj = np.empty((p, p, p), dtype=np.int64)
    w = z
    conj[0] = w.coeff
    for k in range(1, p):
        w = symalg.mul(symalg.mul(xinv, w), x)
        conj[k] = w.coeff
    # phase[i, k] = p^-1 * rho^(-ik)
    idx = np.arange(p, dtype=np.int64)
    phase = ctx.rho_pow[(-np.outer(idx, idx)) % p] * ctx.field.p_inv % q
    stacked = (np.tensordot(phase, conj, axes=(1, 0))) % q
    parts = tuple(Elem(ctx, stacked[i]) for i in range(p))
    label = frozenset(i for i in range(p) if parts[i])
    return Decomp(base=x, parts=parts, label=label)


def edge(x: Elem, z: Elem) -> EdgeInfo:
    """Labels and weights in both directions; both endpoints must be Kummer."""
    fwd = decompose(x, z)
    bwd = decompose(z, x)
    return EdgeInfo(label_fwd=fwd.label, label_bwd=bwd.label)


def weight_one_witness(x: Elem, z: Elem) -> int | None:
    """The exponent i with z x = rho^i x z when the edge has weight 1."""
    d = decompose(x, z)
    if d.weight != 1:
        return None
    return next(iter(d.label))


def exponentiation_form(x: Elem, z: Elem, u: int, v: int) -> Elem:
    """(u z_i + v z_j)^p for the two components of a weight-2 edge x -> z."""
    d = decompose(x, z)
    if d.weight != 2:
        raise WrongWeight(f"edge weight is {d.weight}, need 2")
    i, j = sorted(d.label)
    w = symalg.scalar_mul(u, d.parts[i]) + symalg.scalar_mul(v, d.parts[j])
    return symalg.power(w, x.ctx.p)


def family_deg5(ctx: AlgebraCtx, a1: int, a2: int, a3: int, a4: int) -> Elem:
    """y + (a1 x + a2 x^2 + a3 x^3 + a4 x^4) y^-1 in a degree-5 algebra."""
    if ctx.p != 5:
        raise WrongDegree("this element family lives in degree 5")
    x, y = symalg.generators(ctx)
    y_inv = symalg.scalar_mul(ctx.field.inv(ctx.beta), symalg.power(y, 4))
    f = (
        symalg.scalar_mul(a1, x)
        + symalg.scalar_mul(a2, symalg.power(x, 2))
        + symalg.scalar_mul(a3, symalg.power(x, 3))
        + symalg.scalar_mul(a4, symalg.power(x, 4))
    )
    return y + symalg.mul(f, y_inv)


def family_constraint_scalar(ctx: AlgebraCtx) -> int:
    """The unit c such that y + f(x) y^-1 has scalar fifth power iff a2 a3 = c a1 a4.

    c = -(1 + rho + rho^-1) / (1 + rho^2 + rho^3), from the vanishing of the
    mixed multinomial terms of the fifth power.
    """
    f = ctx.field
    num = (1 + ctx.rho + f.inv(ctx.rho)) % ctx.q
    den = (1 + ctx.rho_to(2) + ctx.rho_to(3)) % ctx.q
    return f.neg(f.mul(num, f.inv(den)))


def family_deg5_constraint(ctx: AlgebraCtx, a1: int, a2: int, a3: int, a4: int) -> bool:
    """Whether the coefficients satisfy a2 a3 = c a1 a4 (family Kummer constraint)."""
    f = ctx.field
    return f.mul(a2, a3) == f.mul(family_constraint_scalar(ctx), f.mul(a1, a4))


# --- samplers ----------------------------------------------------------------


def random_elem(ctx: AlgebraCtx, rng: np.random.Generator) -> Elem:
    return Elem(ctx, rng.integers(0, ctx.q, size=(ctx.p, ctx.p), dtype=np.int64))


def random_invertible(ctx: AlgebraCtx, rng: np.random.Generator, tries: int = 64) -> Elem:
    for _ in range(tries):
        u = random_elem(ctx, rng)
        try:
            symalg.inverse(u)
        except NotInvertible:
            continue
        return u
    raise Exhausted("no invertible element found")


def conjugate(u: Elem, g: Elem) -> Elem:
    """g u g^-1 (g must be invertible)."""
    return symalg.mul(symalg.mul(g, u), symalg.inverse(g))


def _random_unit(ctx: AlgebraCtx, rng) -> int:
    return int(rng.integers(1, ctx.q))


def _random_poly_in_x(ctx: AlgebraCtx, rng, sparse: bool) -> Elem:
    """A nonzero polynomial in x of degree < p (a single monomial when sparse)."""
    p = ctx.p
    if sparse:
        coeffs = np.zeros(p, dtype=np.int64)
        coeffs[int(rng.integers(0, p))] = _random_unit(ctx, rng)
    else:
        while True:
            coeffs = rng.integers(0, ctx.q, size=p, dtype=np.int64)
            if coeffs.any():
                break
    grid = np.zeros((p, p), dtype=np.int64)
    grid[:, 0] = coeffs
    return Elem(ctx, grid)


def _layered_elem(ctx: AlgebraCtx, rng, layers, sparse: bool) -> Elem:
    """sum over b in layers of f_b(x) y^b with every f_b nonzero."""
    acc = symalg.zero(ctx)
    y = symalg.monomial(ctx, 1, 0, 1)
    for b in sorted(layers):
        acc = acc + symalg.mul(_random_poly_in_x(ctx, rng, sparse), symalg.power(y, b))
    return acc


def sample_kummer(ctx: AlgebraCtx, rng: np.random.Generator, tries: int = 200) -> Elem:
    """Draw a random Kummer element; every candidate is certified by is_kummer.

    Mixes conjugated monomials, q-commuting two-monomial sums, and (in degree
    5) the y + f(x) y^-1 family.
    """
    p = ctx.p
    for _ in range(tries):
        pick = rng.random()
        if pick < 0.45:
            a, b = 0, 0
            while (a, b) == (0, 0):
                a, b = int(rng.integers(0, p)), int(rng.integers(0, p))
            cand = symalg.monomial(ctx, _random_unit(ctx, rng), a, b)
            try:
                cand = conjugate(cand, random_invertible(ctx, rng))
            except Exhausted:
                continue
        elif pick < 0.8 or ctx.p != 5:
            a1, b1 = int(rng.integers(0, p)), int(rng.integers(0, p))
            a2, b2 = int(rng.integers(0, p)), int(rng.integers(0, p))
            if (b1 * a2 - b2 * a1) % p == 0:
                continue
            cand = symalg.monomial(ctx, _random_unit(ctx, rng), a1, b1) + symalg.monomial(
                ctx, _random_unit(ctx, rng), a2, b2
            )
        else:
            a = [int(rng.integers(0, ctx.q)) for _ in range(4)]
            if not family_deg5_constraint(ctx, *a):
                a2 = int(rng.integers(1, ctx.q))
                a3 = ctx.field.mul(
                    ctx.field.mul(family_constraint_scalar(ctx), ctx.field.mul(a[0], a[3])),
                    ctx.field.inv(a2),
                )
                a = [a[0], a2, a3, a[3]]
            cand = family_deg5(ctx, *a)
        if symalg.is_kummer(cand):
            return cand
    raise Exhausted("could not sample a Kummer element")


@dataclass(frozen=True)
class PairProfile:
    """Bucket constraints for sampled Kummer pairs (None means unconstrained)."""

    w_fwd: int | None = None
    w_bwd: int | None = None
    zero_in_fwd: bool | None = None
    zero_in_bwd: bool | None = None
    inner_weight: int | None = None
    base_nonpower: bool = False
    conjugate: bool = True


def _label_for_profile(ctx: AlgebraCtx, rng, profile: PairProfile) -> list[int]:
    p = ctx.p
    w = profile.w_fwd if profile.w_fwd is not None else int(rng.integers(1, p + 1))
    pool = list(range(p))
    forced: list[int] = []
    if profile.zero_in_fwd is True:
        forced = [0]
        pool.remove(0)
    elif profile.zero_in_fwd is False:
        pool.remove(0)
    picked = list(rng.choice(pool, size=w - len(forced), replace=False))
    return sorted(forced + [int(i) for i in picked])


def inner_edge(x: Elem, z: Elem) -> Decomp | None:
    """Decomposition of z_j with respect to z_i for a weight-2 edge x -> z."""
    d = decompose(x, z)
    if d.weight != 2:
        return None
    i, j = sorted(d.label)
    zi, zj = d.parts[i], d.parts[j]
    if not (symalg.is_kummer(zi) and symalg.is_kummer(zj)):
        return None
    return decompose(zi, zj)


def sample_pair(
    ctx: AlgebraCtx,
    rng: np.random.Generator,
    profile: PairProfile | None = None,
    tries: int = 3000,
    stats: dict | None = None,
) -> tuple[Elem, Elem]:
    """Draw a Kummer pair (x, z) matching the requested bucket.

    x is a conjugate of the generator (so x^p = alpha); z is built from
    eigencomponent layers with the requested forward label, then the pair is
    conjugated by a random invertible element.  Rejected draws are counted in
    ``stats['discarded']`` when a dict is supplied.
    """
    profile = profile or PairProfile()
    if profile.base_nonpower and ctx.alpha_is_pth_power:
        raise Exhausted("alpha is a p-th power; no conjugate of x can satisfy base_nonpower")
    x0, _ = symalg.generators(ctx)
    discarded = 0
    for attempt in range(tries):
        use_family = ctx.p == 5 and profile.w_fwd == 2 and profile.zero_in_fwd is not True and rng.random() < 0.25
        if use_family:
            a1, a4 = _random_unit(ctx, rng), int(rng.integers(0, ctx.q))
            a2 = int(rng.integers(0, ctx.q))
            if a2 == 0 or rng.random() < 0.5:
                a2, a3 = _random_unit(ctx, rng), 0
                a4 = 0
                z0 = family_deg5(ctx, a1, a2, a3, a4)
            else:
                a3 = ctx.field.mul(
                    ctx.field.mul(family_constraint_scalar(ctx), ctx.field.mul(a1, a4)),
                    ctx.field.inv(a2),
                )
                z0 = family_deg5(ctx, a1, a2, a3, a4)
        else:
            layers = _label_for_profile(ctx, rng, profile)
            z0 = _layered_elem(ctx, rng, layers, sparse=bool(rng.random() < 0.5))
        if not symalg.is_kummer(z0):
            discarded += 1
            continue
        dfwd = decompose(x0, z0)
        if profile.w_fwd is not None and dfwd.weight != profile.w_fwd:
            discarded += 1
            continue
        if profile.zero_in_fwd is True and 0 not in dfwd.label:
            discarded += 1
            continue
        if profile.zero_in_fwd is False and 0 in dfwd.label:
            discarded += 1
            continue
        if (
            profile.w_bwd is not None
            or profile.zero_in_bwd is not None
        ):
            dbwd = decompose(z0, x0)
            if profile.w_bwd is not None and dbwd.weight != profile.w_bwd:
                discarded += 1
                continue
            if profile.zero_in_bwd is True and 0 not in dbwd.label:
                discarded += 1
                continue
            if profile.zero_in_bwd is False and 0 in dbwd.label:
                discarded += 1
                continue
        if profile.inner_weight is not None:
            inner = inner_edge(x0, z0)
            if inner is None or inner.weight != profile.inner_weight:
                discarded += 1
                continue
        x, z = x0, z0
        if profile.conjugate:
            try:
                g = random_invertible(ctx, rng)
            except Exhausted:
                discarded += 1
                continue
            x, z = conjugate(x0, g), conjugate(z0, g)
        if not (symalg.is_kummer(x) and symalg.is_kummer(z)):
            discarded += 1
            continue
        if stats is not None:
            stats["discarded"] = stats.get("discarded", 0) + discarded
        return x, z
    if stats is not None:
        stats["discarded"] = stats.get("discarded", 0) + discarded
    raise Exhausted(f"profile {profile} not hit within {tries} attempts")
