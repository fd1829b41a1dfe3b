"""Optimal embeddings of quadratic orders into Eichler orders.

The global count is h(R) times a product of local embedding numbers over
the primes dividing DN (Eichler).  The local numbers follow Ogg's
case-by-case formula; they depend only on ord_p(D), ord_p(N), the
conductor of R and the field discriminant.

An algebra here is given by its (squarefree) discriminant d: an even
number of prime factors means indefinite, odd means totally definite.
For a definite algebra there are several classes of Eichler orders of a
given level; positivity of every local number says exactly that R
embeds into at least one of them.
"""

from math import gcd

from .arith import (divisors, is_squarefree, kronecker, omega,
                    prime_divisors, psi_p, valuation)
from .errors import DomainError
from .quadorders import QuadOrder, class_number, order_from_discriminant


def check_algebra(d: int, n: int) -> None:
    """Quaternion discriminant d > 1 squarefree, level n >= 1 prime to d."""
    if d < 2 or not is_squarefree(d):
        raise DomainError(f"algebra discriminant must be squarefree > 1, got {d}")
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    if gcd(d, n) != 1:
        raise DomainError(f"discriminant {d} and level {n} are not coprime")


def is_definite(d: int) -> bool:
    return omega(d) % 2 == 1


def eichler_symbol(order: QuadOrder, p: int) -> int:
    """(R/p): 1 when p divides the conductor of R, otherwise the
    Kronecker symbol of the field discriminant at p."""
    if order.conductor % p == 0:
        return 1
    return kronecker(order.fundamental_discriminant, p)


def local_nu(order: QuadOrder, p: int, d: int, n: int) -> int:
    """Number of local optimal embedding classes of R at p, for an
    Eichler order of level n in the algebra of discriminant d.  Primes
    away from d*n contribute 1."""
    if d % p == 0:
        return 1 - eichler_symbol(order, p)
    e = valuation(n, p)
    if e == 0:
        return 1
    if e == 1:
        return 1 + eichler_symbol(order, p)
    # p^2 | N: everything is controlled by e against 2k, where p^k || f.
    k = valuation(order.conductor, p) if order.conductor % p == 0 else 0
    ell = kronecker(order.fundamental_discriminant, p)
    if e >= 2 * k + 2:
        return 2 * psi_p(p, k) if ell == 1 else 0
    if e == 2 * k + 1:
        if ell == 1:
            return 2 * psi_p(p, k)
        if ell == 0:
            return p ** k
        return 0
    if e == 2 * k:
        return p ** (k - 1) * (p + 1 + ell)
    # e <= 2k - 1: the order is locally deep below the level.
    half = e // 2
    if e % 2 == 0:
        return p ** half + p ** (half - 1)
    return 2 * p ** half


def embedding_count(order: QuadOrder, d: int, n: int,
                    skip: tuple[int, ...] = ()) -> int:
    """h(R) * prod of local numbers over p | dn with p not in skip.

    Meaningful as a global count for indefinite d (one conjugacy class
    of Eichler orders); the skip argument drops the local factors at a
    given set of primes, which is how fixed-point counts arise.
    """
    check_algebra(d, n)
    out = class_number(order.discriminant)
    for p in prime_divisors(d * n):
        if p in skip:
            continue
        out *= local_nu(order, p, d, n)
    return out


def locally_embeds(order: QuadOrder, d: int, n: int,
                   skip: tuple[int, ...] = ()) -> bool:
    """Whether every local embedding number of R is positive, i.e.
    whether R optimally embeds into some Eichler order of level n in the
    algebra of discriminant d (any class)."""
    check_algebra(d, n)
    return all(local_nu(order, p, d, n) > 0
               for p in prime_divisors(d * n) if p not in skip)


def element_embeds(radicand: int, d: int, n: int) -> bool:
    """Whether an element with square equal to `radicand` lies in some
    Eichler order of level n in the algebra of discriminant d.

    Such an element generates Z[sqrt(radicand)], so the question is
    whether any order containing Z[sqrt(radicand)] (conductor dividing
    that of 4*radicand) embeds.  A real quadratic element never sits in
    a definite algebra.
    """
    check_algebra(d, n)
    if radicand == 0:
        raise DomainError("element_embeds wants a nonzero radicand")
    if radicand > 0:
        from math import isqrt
        if isqrt(radicand) ** 2 == radicand:
            raise DomainError(f"radicand {radicand} is a perfect square")
        if is_definite(d):
            return False
    base = order_from_discriminant(4 * radicand)
    return any(
        locally_embeds(QuadOrder(base.fundamental_discriminant, f), d, n)
        for f in divisors(base.conductor))
