"""Genus of the curves attached to an Eichler order of level N in the
indefinite rational quaternion algebra of discriminant D.

All arithmetic is exact (fractions.Fraction); the final genus must come
out an integer or IntegralityError is raised.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import euler_phi, factorize, is_squarefree, kronecker, omega, psi
from .errors import DomainError, IntegralityError


def check_pair(d: int, n: int) -> None:
    """A valid pair: D > 1 squarefree with an even number of prime
    factors (so the algebra is indefinite), N >= 1 prime to D."""
    if d < 2 or not is_squarefree(d):
        raise DomainError(f"D must be squarefree > 1, got {d}")
    if omega(d) % 2 != 0:
        raise DomainError(
            f"D = {d} has an odd number of prime factors (definite algebra)")
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    if gcd(d, n) != 1:
        raise DomainError(f"D = {d} and N = {n} are not coprime")


def e_k(d: int, n: int, k: int) -> int:
    """Number of elliptic points of order 2 (k = 4) or 3 (k = 3).

    Product over p | D of (1 - (-k/p)), over p || N of (1 + (-k/p)), and
    over p^2 | N of 2 or 0 according to whether (-k/p) = 1.
    """
    if k not in (3, 4):
        raise DomainError(f"e_k wants k in (3, 4), got {k}")
    check_pair(d, n)
    out = 1
    for p, _ in factorize(d):
        out *= 1 - kronecker(-k, p)
    for p, e in factorize(n):
        if e == 1:
            out *= 1 + kronecker(-k, p)
        else:
            out *= 2 if kronecker(-k, p) == 1 else 0
    return out


@lru_cache(maxsize=None)
def genus(d: int, n: int) -> int:
    """g = 1 + phi(D) psi(N) / 12 - e_4/4 - e_3/3."""
    check_pair(d, n)
    g = (Fraction(1)
         + Fraction(euler_phi(d) * psi(n), 12)
         - Fraction(e_k(d, n, 4), 4)
         - Fraction(e_k(d, n, 3), 3))
    if g.denominator != 1:
        raise IntegralityError(f"genus({d}, {n}) = {g} is not an integer")
    if g < 0:
        raise IntegralityError(f"genus({d}, {n}) = {g} is negative")
    return int(g)
