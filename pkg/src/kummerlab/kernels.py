"""Hot arithmetic kernels: basis-grid multiplication and dense mod-q solves.

Two backends compute bit-identical results:

* ``numba``: @njit loop kernels, the default whenever numba imports.
* ``numpy``: fully vectorized fallback.

Selection is via the environment variable ``KUMMERLAB_BACKEND`` read at import
time: ``auto`` (default), ``numba`` (fail hard if unavailable) or ``numpy``.

All arrays are int64 residues in [0, q).  Every product of two residues is
reduced before the next multiply, so intermediates stay below 2**62 for any
modulus under 2**31; accumulated sums add at most p*p reduced terms on top.
"""
from __future__ import annotations

import os

import numpy as np

_REQUESTED = os.environ.get("KUMMERLAB_BACKEND", "auto").lower()
if _REQUESTED not in ("auto", "numba", "numpy"):
    raise ValueError(f"KUMMERLAB_BACKEND must be auto, numba or numpy (got {_REQUESTED!r})")

_HAVE_NUMBA = False
if _REQUESTED in ("auto", "numba"):
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _REQUESTED == "numba":
            raise


def _mul_loops(u, v, p, q, rho_pow, alpha, beta):
    out = np.zeros((p, p), dtype=np.int64)
    for a in range(p):
        for b in range(p):
            ua = u[a, b]
            if ua == 0:
                continue
            for c in range(p):
                base = ua * rho_pow[(b * c) % p] % q
                e = a + c
                if e >= p:
                    e -= p
                    base = base * alpha % q
                for d in range(p):
                    vv = v[c, d]
                    if vv == 0:
                        continue
                    t = base * vv % q
                    g = b + d
                    if g >= p:
                        g -= p
                        t = t * beta % q
                    out[e, g] = (out[e, g] + t) % q
    return out


def _modinv_int(a, q):
    t, new_t = 0, 1
    r, new_r = q, a % q
    while new_r != 0:
        quot = r // new_r
        t, new_t = new_t, t - quot * new_t
        r, new_r = new_r, r - quot * new_r
    return t % q


def _solve_loops(a, b, q):
    n = a.shape[0]
    m = a.copy()
    rhs = b.copy()
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            return False, rhs
        if piv != col:
            for j in range(n):
                m[piv, j], m[col, j] = m[col, j], m[piv, j]
            rhs[piv], rhs[col] = rhs[col], rhs[piv]
        inv = _modinv_int(m[col, col], q)
        for j in range(col, n):
            m[col, j] = m[col, j] * inv % q
        rhs[col] = rhs[col] * inv % q
        for r in range(n):
            if r == col:
                continue
            factor = m[r, col]
            if factor == 0:
                continue
            for j in range(col, n):
                m[r, j] = (m[r, j] - factor * m[col, j]) % q
            rhs[r] = (rhs[r] - factor * rhs[col]) % q
    return True, rhs


if _HAVE_NUMBA:
    _modinv_int = njit(cache=True)(_modinv_int)
    _mul_njit = njit(cache=True)(_mul_loops)
    _solve_njit = njit(cache=True)(_solve_loops)


def mul_tables(p: int, q: int, rho: int, alpha: int, beta: int):
    """Precompute the tables both backends share.

    Returns (rho_pow, fac, tgt): powers of rho, the per-monomial-pair scalar
    factor rho^(bc) * alpha^[a+c>=p] * beta^[b+d>=p], and the flattened target
    basis index of each pair.
    """
    rho_pow = np.empty(p, dtype=np.int64)
    acc = 1
    for k in range(p):
        rho_pow[k] = acc
        acc = acc * rho % q
    a, b, c, d = np.ogrid[0:p, 0:p, 0:p, 0:p]
    fac = rho_pow[(b * c) % p] * np.where(a + c >= p, alpha, 1) % q
    fac = fac * np.where(b + d >= p, beta, 1) % q
    tgt = ((a + c) % p) * p + (b + d) % p
    tgt = np.broadcast_to(tgt, (p, p, p, p)).ravel().copy()
    return rho_pow, fac.astype(np.int64), tgt


def _mul_numpy(u, v, p, q, fac, tgt):
    outer = u[:, :, None, None] * v[None, None, :, :] % q
    contrib = (outer * fac % q).ravel()
    out = np.zeros(p * p, dtype=np.int64)
    np.add.at(out, tgt, contrib)
    return (out % q).reshape(p, p)


def _solve_numpy(a, b, q):
    n = a.shape[0]
    m = a.copy()
    rhs = b.copy()
    for col in range(n):
        nz = np.nonzero(m[col:, col])[0]
        if nz.size == 0:
            return False, rhs
        piv = col + int(nz[0])
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            rhs[[col, piv]] = rhs[[piv, col]]
        inv = pow(int(m[col, col]), q - 2, q)
        m[col] = m[col] * inv % q
        rhs[col] = rhs[col] * inv % q
        factors = m[:, col].copy()
        factors[col] = 0
        m = (m - factors[:, None] * m[col][None, :]) % q
        rhs = (rhs - factors * rhs[col]) % q
    return True, rhs


def backend_name() -> str:
    if _REQUESTED == "numpy":
        return "numpy"
    return "numba" if _HAVE_NUMBA else "numpy"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def mul_impl(name: str):
    """Backend-specific multiply, mainly for benchmarks and cross-checks."""
    if name == "numba" and _HAVE_NUMBA:
        return lambda u, v, p, q, rho_pow, alpha, beta, fac, tgt: _mul_njit(
            u, v, p, q, rho_pow, alpha, beta
        )
    if name == "numpy":
        return lambda u, v, p, q, rho_pow, alpha, beta, fac, tgt: _mul_numpy(u, v, p, q, fac, tgt)
    raise ValueError(f"backend {name!r} not available")


def solve_impl(name: str):
    if name == "numba" and _HAVE_NUMBA:
        return _solve_njit
    if name == "numpy":
        return _solve_numpy
    raise ValueError(f"backend {name!r} not available")


_ACTIVE_MUL = mul_impl(backend_name())
_ACTIVE_SOLVE = solve_impl(backend_name())


def grid_mul(u, v, p, q, rho_pow, alpha, beta, fac, tgt):
    """Product of two coefficient grids in the active backend."""
    return _ACTIVE_MUL(u, v, p, q, rho_pow, alpha, beta, fac, tgt)


def solve_mod(a, b, q):
    """Solve a x = b over F_q. Returns (ok, x); ok is False on a singular system."""
    return _ACTIVE_SOLVE(a, b, q)
