"""The group of Atkin--Lehner involutions on X_0^D(N), their fixed
points, and genera of the quotient curves.

The group is indexed by Hall divisors of DN under the twisted product
m1 * m2 / gcd(m1, m2)^2, an elementary abelian 2-group of rank
omega(DN).  Fixed points of w_m are CM points by one or two explicit
imaginary quadratic orders; their number is a class number times local
embedding factors away from m.  Quotient genera then come out of
Riemann--Hurwitz, which must produce integers.
"""

from functools import lru_cache
from math import gcd

from .arith import hall_divisors, is_hall_divisor, prime_divisors
from .embeddings import embedding_count
from .errors import DomainError, IntegralityError
from .genus import check_pair, genus
from .quadorders import QuadOrder, order_from_discriminant


def hall_product(m1: int, m2: int) -> int:
    """Group law on Hall divisors: m1 * m2 / gcd^2."""
    g = gcd(m1, m2)
    return m1 * m2 // (g * g)


def group_elements(d: int, n: int) -> tuple[int, ...]:
    """Hall divisors of DN, the index set of the involutions (1 is the
    identity)."""
    check_pair(d, n)
    return hall_divisors(d * n)


def subgroup_generated(gens, d: int, n: int) -> frozenset[int]:
    """Subgroup of the Atkin--Lehner group generated by the given Hall
    divisors, as a frozenset containing 1."""
    dn = d * n
    out = {1}
    for m in gens:
        if not is_hall_divisor(m, dn):
            raise DomainError(f"{m} is not a Hall divisor of {dn}")
        out |= {hall_product(m, x) for x in out}
    return frozenset(out)


def all_subgroups(d: int, n: int) -> tuple[frozenset[int], ...]:
    """Every subgroup of the Atkin--Lehner group, the trivial one first.

    Breadth-first span growing; for an elementary abelian 2-group each
    span step is just s union m*s.
    """
    elems = group_elements(d, n)
    trivial = frozenset({1})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for s in frontier:
            for m in elems:
                if m in s:
                    continue
                t = frozenset(s | {hall_product(m, x) for x in s})
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def fixed_point_orders(m: int) -> tuple[QuadOrder, ...]:
    """The imaginary quadratic orders whose CM points are the fixed
    points of w_m: both orders of Q(i) and Q(sqrt(-2)) for m = 2, the
    orders of discriminant -m and -4m for m = 3 mod 4, and only
    Z[sqrt(-m)] otherwise."""
    if m < 2:
        raise DomainError(f"fixed_point_orders wants m >= 2, got {m}")
    if m == 2:
        return (QuadOrder(-4), QuadOrder(-8))
    if m % 4 == 3:
        return (order_from_discriminant(-m), order_from_discriminant(-4 * m))
    return (order_from_discriminant(-4 * m),)


@lru_cache(maxsize=None)
def fixed_point_count(d: int, n: int, m: int) -> int:
    """Number of fixed points of w_m on X_0^D(N), for a nontrivial Hall
    divisor m of DN."""
    check_pair(d, n)
    if m == 1 or not is_hall_divisor(m, d * n):
        raise DomainError(f"{m} is not a nontrivial Hall divisor of {d * n}")
    skip = prime_divisors(m)
    return sum(embedding_count(order, d, n, skip=skip)
               for order in fixed_point_orders(m))


def fricke_count(d: int, n: int) -> int:
    return fixed_point_count(d, n, d * n)


def quotient_genus(d: int, n: int, m: int) -> int:
    """Genus of X_0^D(N)/<w_m>: (2g + 2 - #fixed)/4."""
    g = genus(d, n)
    fix = fixed_point_count(d, n, m)
    num = 2 * g + 2 - fix
    if num % 4 != 0 or num < 0:
        raise IntegralityError(
            f"quotient genus of ({d}, {n}) by w_{m}: (2*{g}+2-{fix})/4 "
            "is not a nonnegative integer")
    return num // 4


def subgroup_quotient_genus(d: int, n: int, gens) -> int:
    """Genus of the quotient of X_0^D(N) by the subgroup generated by
    the given involutions, via Riemann--Hurwitz: every nontrivial
    element is an involution, so all ramification is tame of order 2."""
    sub = subgroup_generated(gens, d, n)
    g = genus(d, n)
    total = sum(fixed_point_count(d, n, m) for m in sub if m != 1)
    num = 2 * g - 2 - total
    den = 2 * len(sub)
    if num % den != 0:
        raise IntegralityError(
            f"subgroup quotient genus of ({d}, {n}) by {sorted(sub)}: "
            f"({num})/{den} + 1 is not an integer")
    out = num // den + 1
    if out < 0:
        raise IntegralityError(
            f"subgroup quotient genus of ({d}, {n}) by {sorted(sub)} "
            f"came out negative ({out})")
    return out
