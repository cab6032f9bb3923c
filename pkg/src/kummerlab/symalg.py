"""The symbol algebra of prime degree p over F_q, in the monomial basis.

An element is a p x p grid of residues: ``coeff[a][b]`` multiplies the basis
monomial x^a y^b.  The generators satisfy x^p = alpha, y^p = beta and
y x = rho x y for a fixed primitive p-th root of unity rho, which closes
multiplication over the basis:

    (x^a y^b)(x^c y^d) = rho^(bc) * alpha^((a+c) div p) * beta^((b+d) div p)
                         * x^((a+c) mod p) y^((b+d) mod p)

Everything here is exact; there is no floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import BudgetExceeded, NotInvertible
from .gfp import FieldCtx, is_pth_power, make_field, primitive_root_of_unity
from .errors import NoRootOfUnity


@dataclass(frozen=True)
class AlgebraCtx:
    """Ambient algebra (p, q, rho, alpha, beta) plus precomputed tables."""

    p: int
    q: int
    rho: int
    alpha: int
    beta: int
    field: FieldCtx
    alpha_is_pth_power: bool
    beta_is_pth_power: bool
    rho_pow: np.ndarray = field(repr=False, compare=False, default=None)
    _fac: np.ndarray = field(repr=False, compare=False, default=None)
    _tgt: np.ndarray = field(repr=False, compare=False, default=None)

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.p, self.q, self.rho, self.alpha, self.beta)

    def rho_to(self, e: int) -> int:
        return int(self.rho_pow[e % self.p])


def make_algebra(p: int, q: int, alpha: int, beta: int, rho: int | None = None) -> AlgebraCtx:
    """Construct the degree-p symbol algebra context over F_q."""
    f = make_field(q, p)
    alpha %= q
    beta %= q
    if alpha == 0 or beta == 0:
        raise NotInvertible("alpha and beta must be units")
    if rho is None:
        rho = primitive_root_of_unity(f)
    else:
        rho %= q
        if rho == 1 or pow(rho, p, q) != 1:
            raise NoRootOfUnity(f"rho={rho} is not a primitive {p}-th root of unity mod {q}")
    rho_pow, fac, tgt = kernels.mul_tables(p, q, rho, alpha, beta)
    return AlgebraCtx(
        p=p,
        q=q,
        rho=rho,
        alpha=alpha,
        beta=beta,
        field=f,
        alpha_is_pth_power=is_pth_power(f, alpha),
        beta_is_pth_power=is_pth_power(f, beta),
        rho_pow=rho_pow,
        _fac=fac,
        _tgt=tgt,
    )


class Elem:
    """Algebra element as an immutable coefficient grid."""

    __slots__ = ("ctx", "coeff")

    def __init__(self, ctx: AlgebraCtx, coeff: np.ndarray):
        grid = np.asarray(coeff, dtype=np.int64) % ctx.q
        grid.flags.writeable = False
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeff", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Elem is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.ctx.key == other.ctx.key and np.array_equal(self.coeff, other.coeff)

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.coeff.tobytes()))

    def __bool__(self) -> bool:
        return bool(self.coeff.any())

    def __add__(self, other: "Elem") -> "Elem":
        _check_ctx(self, other)
        return Elem(self.ctx, self.coeff + other.coeff)

    def __sub__(self, other: "Elem") -> "Elem":
        _check_ctx(self, other)
        return Elem(self.ctx, self.coeff - other.coeff)

    def __neg__(self) -> "Elem":
        return Elem(self.ctx, -self.coeff)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        _check_ctx(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, e: int) -> "Elem":
        return power(self, e)

    def __repr__(self) -> str:
        return f"Elem(p={self.ctx.p}, q={self.ctx.q}, coeff={self.coeff.tolist()})"


def _check_ctx(u: Elem, v: Elem) -> None:
    if u.ctx.key != v.ctx.key:
        raise ValueError("elements live in different algebras")


def zero(ctx: AlgebraCtx) -> Elem:
    return Elem(ctx, np.zeros((ctx.p, ctx.p), dtype=np.int64))


def one(ctx: AlgebraCtx) -> Elem:
    return scalar(ctx, 1)


def scalar(ctx: AlgebraCtx, c: int) -> Elem:
    grid = np.zeros((ctx.p, ctx.p), dtype=np.int64)
    grid[0, 0] = c % ctx.q
    return Elem(ctx, grid)


def monomial(ctx: AlgebraCtx, c: int, a: int, b: int) -> Elem:
    """c * x^a y^b with exponents reduced mod p."""
    grid = np.zeros((ctx.p, ctx.p), dtype=np.int64)
    grid[a % ctx.p, b % ctx.p] = c % ctx.q
    return Elem(ctx, grid)


def generators(ctx: AlgebraCtx) -> tuple[Elem, Elem]:
    return monomial(ctx, 1, 1, 0), monomial(ctx, 1, 0, 1)


def scalar_mul(c: int, u: Elem) -> Elem:
    return Elem(u.ctx, (c % u.ctx.q) * u.coeff)


def mul(u: Elem, v: Elem) -> Elem:
    _check_ctx(u, v)
    ctx = u.ctx
    out = kernels.grid_mul(
        u.coeff, v.coeff, ctx.p, ctx.q, ctx.rho_pow, ctx.alpha, ctx.beta, ctx._fac, ctx._tgt
    )
    return Elem(ctx, out)


def power(u: Elem, e: int) -> Elem:
    if e < 0:
        return power(inverse(u), -e)
    acc = one(u.ctx)
    base = u
    while e:
        if e & 1:
            acc = mul(acc, base)
        base_needed = e > 1
        if base_needed:
            base = mul(base, base)
        e >>= 1
    return acc


def is_scalar(u: Elem) -> bool:
    g = u.coeff
    return not (g.any() and (g[0, 1:].any() or g[1:, :].any()))


def scalar_value(u: Elem) -> int | None:
    """The residue c with u = c*1, or None when u is not a scalar grid."""
    if u.coeff[0, 1:].any() or u.coeff[1:, :].any():
        return None
    return int(u.coeff[0, 0])


def is_kummer(u: Elem) -> bool:
    """Non-scalar elements whose p-th power is a nonzero scalar."""
    if is_scalar(u):
        return False
    c = scalar_value(power(u, u.ctx.p))
    return c is not None and c != 0


def kummer_scalar(u: Elem) -> int:
    """The unit u^p for a Kummer element (raises NotInvertible otherwise)."""
    c = scalar_value(power(u, u.ctx.p))
    if c is None or c == 0 or is_scalar(u):
        raise NotInvertible("element is not Kummer")
    return c


def reduced_trace(u: Elem) -> int:
    """p times the identity coefficient; vanishes on nonidentity monomials."""
    return (u.ctx.p * int(u.coeff[0, 0])) % u.ctx.q


def _left_mul_matrix(u: Elem) -> np.ndarray:
    """Matrix of w -> u*w on the flattened monomial basis."""
    ctx = u.ctx
    p, q = ctx.p, ctx.q
    m = np.zeros((p * p, p * p), dtype=np.int64)
    g = u.coeff
    rho_pow = ctx.rho_pow
    for c in range(p):
        for d in range(p):
            col = c * p + d
            for a in range(p):
                for b in range(p):
                    ua = g[a, b]
                    if ua == 0:
                        continue
                    t = ua * rho_pow[(b * c) % p] % q
                    e = a + c
                    if e >= p:
                        e -= p
                        t = t * ctx.alpha % q
                    f = b + d
                    if f >= p:
                        f -= p
                        t = t * ctx.beta % q
                    row = e * p + f
                    m[row, col] = (m[row, col] + t) % q
    return m


def inverse(u: Elem) -> Elem:
    """Two-sided inverse via the p^2 x p^2 regular-representation solve."""
    ctx = u.ctx
    if not u:
        raise NotInvertible("0 is not invertible")
    m = _left_mul_matrix(u)
    rhs = np.zeros(ctx.p * ctx.p, dtype=np.int64)
    rhs[0] = 1
    ok, sol = kernels.solve_mod(m, rhs, ctx.q)
    if not ok:
        raise NotInvertible("singular left-multiplication operator")
    v = Elem(ctx, sol.reshape(ctx.p, ctx.p))
    return v


def add_commutator(x: Elem, z: Elem, d: int) -> Elem:
    """z*x - rho^d * x*z, with d taken mod p."""
    return mul(z, x) - scalar_mul(x.ctx.rho_to(d), mul(x, z))


def multi_commutator(args, ds) -> Elem:
    """Nested commutator: the first exponent binds the last two arguments.

    With k exponents and k+1 arguments, reduces by
    [u_1, ..., u_{k+1}]_(d_1, ..., d_k)
        = [u_1, ..., u_{k-1}, [u_k, u_{k+1}]_(d_1)]_(d_2, ..., d_k).
    """
    args = list(args)
    ds = list(ds)
    if len(ds) < 1 or len(args) != len(ds) + 1:
        raise ValueError("need k >= 1 exponents and k+1 elements")
    while len(ds) > 1:
        inner = add_commutator(args[-2], args[-1], ds[0])
        args = args[:-2] + [inner]
        ds = ds[1:]
    return add_commutator(args[0], args[1], ds[0])


def _distinct_arrangements(counts: list[int]):
    """Yield index sequences of all distinct words with the given letter counts."""
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c == 0:
                continue
            counts[i] -= 1
            word.append(i)
            yield from rec()
            word.pop()
            counts[i] += 1

    yield from rec()


def star_product(factors) -> Elem:
    """Sum of all distinct words with prescribed letter multiplicities.

    ``factors`` is a sequence of (element, multiplicity) pairs; multiplicities
    must total at most p.
    """
    factors = [(u, int(m)) for u, m in factors if int(m) != 0]
    if not factors:
        raise ValueError("star product needs at least one factor")
    ctx = factors[0][0].ctx
    for u, m in factors:
        if m < 0:
            raise ValueError("multiplicities must be nonnegative")
        _check_ctx(factors[0][0], u)
    total = sum(m for _, m in factors)
    if total > ctx.p:
        raise BudgetExceeded(f"total multiplicity {total} exceeds p={ctx.p}")
    if total == 0:
        return one(ctx)
    letters = [u for u, _ in factors]
    acc = zero(ctx)
    for word in _distinct_arrangements([m for _, m in factors]):
        w = letters[word[0]]
        for i in word[1:]:
            w = mul(w, letters[i])
        acc = acc + w
    return acc


def component_filter(x: Elem, z: Elem, kill) -> Elem:
    """Iterated commutator [x, .]_d over d in ``kill`` (each mod p, ascending).

    Annihilates every eigencomponent of z whose index lies in ``kill`` and
    scales component j by prod_d (rho^j - rho^d) times a left power of x.
    """
    w = z
    for d in sorted({k % x.ctx.p for k in kill}):
        w = add_commutator(x, w, d)
    return w
