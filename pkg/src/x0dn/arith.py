"""Elementary number theory: factorization, multiplicative functions,
Kronecker symbols, Hall divisors.

Everything is exact integer arithmetic; no floats except where a
function's docstring says so.
"""

from functools import lru_cache
from math import isqrt

from .errors import DomainError


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a tuple of (p, e), p ascending."""
    if n < 1:
        raise DomainError(f"factorize wants n >= 1, got {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # trial division by 6k +- 1
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            if n % q == 0:
                e = 0
                while n % q == 0:
                    n //= q
                    e += 1
                out.append((q, e))
        p += 6
    if n > 1:
        out.append((n, 1))
    out.sort()
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(abs(n)))


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * t^2, sign preserved. n != 0."""
    if n == 0:
        raise DomainError("squarefree_part(0)")
    s = 1
    for p, e in factorize(abs(n)):
        if e % 2:
            s *= p
    return -s if n < 0 else s


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def psi(n: int) -> int:
    """The index [PSL2(Z) : Gamma_0(n)] = n * prod_{p|n} (1 + 1/p)."""
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p + 1)
    return out


def psi_p(p: int, e: int) -> int:
    """Local factor of psi at p^e: p^(e-1) * (p+1) for e >= 1, else 1."""
    return p ** (e - 1) * (p + 1) if e >= 1 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def valuation(n: int, p: int) -> int:
    """ord_p(n) for n != 0."""
    if n == 0:
        raise DomainError("valuation(0, p)")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n >= 1, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p ** i for d in out for i in range(e + 1)]
    return tuple(sorted(out))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out 2 from n
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                sign = -sign
    a %= n
    # Jacobi loop: n odd positive from here on
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def hall_divisors(n: int) -> tuple[int, ...]:
    """Divisors m of n with gcd(m, n/m) = 1, ascending. Includes 1 and n."""
    if n < 1:
        raise DomainError(f"hall_divisors wants n >= 1, got {n}")
    out = [1]
    for p, e in factorize(n):
        q = p ** e
        out += [d * q for d in out]
    return tuple(sorted(out))


def is_hall_divisor(m: int, n: int) -> bool:
    if m < 1 or n % m != 0:
        return False
    rest = n // m
    from math import gcd
    return gcd(m, rest) == 1


def continued_fraction_sqrt(m: int) -> tuple[int, tuple[int, ...]]:
    """Continued fraction of sqrt(m) for nonsquare m > 1: (a0, period).

    Standard PQa recurrence; the period always ends with 2*a0.
    """
    a0 = isqrt(m)
    if a0 * a0 == m:
        raise DomainError(f"{m} is a perfect square")
    period = []
    P, Q, a = 0, 1, a0
    while True:
        P = a * Q - P
        Q = (m - P * P) // Q
        a = (a0 + P) // Q
        period.append(a)
        if Q == 1:
            return a0, tuple(period)


def pell_minus_solvable(m: int) -> bool:
    """Whether x^2 - m y^2 = -1 has an integer solution (m > 0 nonsquare).

    Equivalent to the continued fraction period of sqrt(m) having odd
    length.
    """
    _, period = continued_fraction_sqrt(m)
    return len(period) % 2 == 1


def pell_pm2_solvable(m: int) -> bool:
    """Whether x^2 - m y^2 = +-2 has an integer solution, m > 0 nonsquare.

    Any solution with m > 4 satisfies |x^2 - m y^2| = 2 < sqrt(m), so x/y
    is a convergent of sqrt(m); scanning two full periods of convergents
    is exhaustive.
    """
    if m <= 0 or isqrt(m) ** 2 == m:
        raise DomainError(f"pell_pm2_solvable wants positive nonsquare m, got {m}")
    if m < 5:
        # sqrt(m) too small for the convergent argument; m in {2, 3} and
        # both work: 2^2 - 2*1^2 = 2, 1^2 - 3*1^2 = -2.
        return True
    a0, period = continued_fraction_sqrt(m)
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    if h * h - m * k * k in (2, -2):
        return True
    terms = list(period) * 2
    for a in terms:
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
        if h * h - m * k * k in (2, -2):
            return True
    return False
