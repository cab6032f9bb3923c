"""Exact arithmetic in prime fields F_q that contain a p-th root of unity."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, NoRootOfUnity, NotPrime

# residues are kept below this so every pairwise product fits in int64
MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Exact primality by trial division (moduli are capped below 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The prime field F_q together with the degree p it must support.

    Immutable and shareable; every operation is a pure function on residues
    in [0, q).
    """

    q: int
    p: int
    p_inv: int  # inverse of p modulo q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, self.q - 2, self.q)

    def pow(self, a: int, e: int) -> int:
        a %= self.q
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a, e, self.q)


def make_field(q: int, p: int) -> FieldCtx:
    """Build F_q for a prime q with q = 1 (mod p), p prime."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if q >= MAX_MODULUS:
        raise NotPrime(f"q={q} exceeds the supported range (< 2**31)")
    if q % p != 1:
        raise NoRootOfUnity(f"q={q} is not 1 mod p={p}; F_q has no primitive p-th root of unity")
    return FieldCtx(q=q, p=p, p_inv=pow(p % q, q - 2, q))


def primitive_root_of_unity(f: FieldCtx) -> int:
    """Smallest residue of multiplicative order exactly p (deterministic)."""
    for r in range(2, f.q):
        if pow(r, f.p, f.q) == 1:
            # r != 1 and r^p = 1 with p prime forces order exactly p
            return r
    raise NoRootOfUnity(f"no element of order {f.p} in F_{f.q}")  # unreachable for valid ctx


def is_pth_power(f: FieldCtx, a: int) -> bool:
    """Whether a nonzero residue lies in (F_q^x)^p."""
    a %= f.q
    if a == 0:
        raise DivisionByZero("0 is not in the unit group")
    return pow(a, (f.q - 1) // f.p, f.q) == 1
