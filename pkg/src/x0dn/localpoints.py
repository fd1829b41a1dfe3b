"""Local points on Atkin-Lehner quotients.

Three independent sources of local information about X_0^D(N)/<w_m>:

  * the real place, via counts of connected components of the real locus
    (Ogg83 machinery: class numbers of real quadratic orders weighted by
    local embedding numbers);
  * the primes p | D of bad reduction, via the p-adic criteria phrased in
    terms of the definite quaternion algebra of discriminant D/p (Ogg85
    machinery, extended to Eichler level N);
  * for m = D with N prime, an independent criterion at each p | D in
    terms of the splitting of N in an imaginary quadratic field (Clark03
    machinery).

The sources overlap and are reported separately; `local_obstructions`
collects every applicable verdict.
"""

from dataclasses import dataclass
from math import isqrt

from .arith import (
    is_hall_divisor,
    is_prime,
    kronecker,
    omega,
    pell_pm2_solvable,
    prime_divisors,
)
from .embeddings import element_embeds, embedding_count, locally_embeds
from .errors import DomainError, IntegralityError
from .genus import check_pair
from .quadorders import QuadOrder, order_from_discriminant

EMPTY = "empty"
NONEMPTY = "nonempty"
NOT_APPLICABLE = "not_applicable"

SOURCE_REAL = "real_components"
SOURCE_PADIC = "ogg85"
SOURCE_PRIME_LEVEL = "clark03"


@dataclass(frozen=True)
class LocalVerdict:
    place: str  # "real" or a prime written in decimal
    status: str  # EMPTY / NONEMPTY
    source: str  # which criterion produced it


def _check_quotient(d: int, n: int, m: int) -> None:
    check_pair(d, n)
    if not is_hall_divisor(m, d * n):
        raise DomainError(f"m = {m} is not a Hall divisor of DN = {d * n}")


def real_component_count(d: int, n: int, m: int) -> int:
    """Number of connected components of the real locus of X_0^D(N)/<w_m>.

    For square m (including m = 1) the quotient modulo a nontrivial or
    trivial involution of an arithmetic Fuchsian group with D > 1 has no
    real points at all, so the count is 0.  Otherwise count optimal
    embeddings of the orders Z[sqrt(m)] (and the half-integral order when
    m = 1 mod 4) with the primes dividing m excluded from the local
    conditions, weight by wide class numbers, and halve; one exceptional
    configuration contributes extra fixed components.
    """
    _check_quotient(d, n, m)
    if isqrt(m) ** 2 == m:
        return 0
    orders = [order_from_discriminant(4 * m)]
    if m % 4 == 1:
        orders.append(order_from_discriminant(m))
    skip = prime_divisors(m)
    nu = sum(embedding_count(order, d, n, skip=skip) for order in orders)
    if nu == 0:
        return 0
    t = d * n // 2
    exceptional = (
        d * n % 4 == 2
        and m in (t, 2 * t)
        and element_embeds(-1, d, n)
        and pell_pm2_solvable(m)
    )
    if exceptional:
        nu += 2 ** (omega(d * n) - 2)
    if nu % 2:
        raise IntegralityError(
            f"odd component count numerator {nu} for (D, N, m) = ({d}, {n}, {m})"
        )
    return nu // 2


def qp_curve_points(d: int, n: int, p: int) -> str:
    """Does X_0^D(N) have Q_p-points, for p | D?

    Nonempty exactly when p = 2 and sqrt(-1) lies in some Eichler order of
    level N in the algebra, or p = 1 mod 4, N = 1 and D = 2p.
    """
    check_pair(d, n)
    if d % p != 0:
        return NOT_APPLICABLE
    if p == 2 and element_embeds(-1, d, n):
        return NONEMPTY
    if p % 4 == 1 and n == 1 and d == 2 * p:
        return NONEMPTY
    return EMPTY


def qp_quotient_points(d: int, n: int, m: int, p: int) -> str:
    """Does X_0^D(N)/<w_m> have Q_p-points, for p | D and m || DN, m > 1?

    When the curve itself has Q_p-points so does every quotient.  When it
    does not, the answer is read off from embeddings into the definite
    algebra of discriminant D/p (orders theta_i of level N run through the
    class set) and into the Eichler orders of level N in the indefinite
    algebra itself.
    """
    _check_quotient(d, n, m)
    if m == 1:
        raise DomainError("quotient index m must exceed 1")
    if d % p != 0:
        return NOT_APPLICABLE
    if m == p:
        # Unguarded criterion for the single involution w_p: the quotient
        # has Q_p-points iff some theta_i contains sqrt(-p) or a root of
        # unity other than +-1, i.e. iff Z[i] or Z[zeta_3] embeds.
        dbar = d // p
        return (
            NONEMPTY
            if (
                element_embeds(-p, dbar, n)
                or locally_embeds(QuadOrder(-4), dbar, n)
                or locally_embeds(QuadOrder(-3), dbar, n)
            )
            else EMPTY
        )
    if qp_curve_points(d, n, p) == NONEMPTY:
        return NONEMPTY
    dn_over_p = d * n // p
    if m % p != 0:
        # w_m with p prime to m, guarded by X(Q_p) empty.
        if p == 2 and m == dn_over_p and element_embeds(-2, d, n):
            return NONEMPTY
        if (
            p > 2
            and element_embeds(-p, d, n)
            and kronecker(-m, p) == 1
            and dn_over_p in (m, 2 * m)
            # extra 2-adic constraint only in the doubled case at even level
            and (dn_over_p == m or n % 2 == 1 or (p + 1) * (m + 1) % 8 == 0)
        ):
            return NONEMPTY
        if (
            p % 4 == 1
            and locally_embeds(QuadOrder(-4), d // p, n)
            and dn_over_p in (m, 2 * m)
            and element_embeds(-p * m, d, n)
        ):
            return NONEMPTY
        return EMPTY
    # w_{p*mm} with mm > 1 prime to p, guarded by X(Q_p) empty.
    mm = m // p
    dbar = d // p
    if element_embeds(-mm, dbar, n):
        return NONEMPTY
    if mm == 2 and element_embeds(-1, dbar, n):
        return NONEMPTY
    return EMPTY


def prime_level_quotient_points(d: int, n: int, m: int, p: int) -> str:
    """Criterion for the full quotient X_0^{pq}(N)/<w_{pq}> at Q_p.

    Applies when D = pq is a product of two primes, N is prime and m = D:
    the quotient has Q_p-points iff N is not inert in Q(sqrt(-q)).
    """
    _check_quotient(d, n, m)
    if omega(d) != 2 or m != d or not is_prime(n) or d % p != 0:
        return NOT_APPLICABLE
    q = d // p
    dk = order_from_discriminant(-4 * q).fundamental_discriminant
    return EMPTY if kronecker(dk, n) == -1 else NONEMPTY


def local_obstructions(d: int, n: int, m: int) -> tuple[LocalVerdict, ...]:
    """All applicable local verdicts for X_0^D(N)/<w_m>: the real place
    first, then each p | D in order, p-adic criterion before the
    prime-level one."""
    _check_quotient(d, n, m)
    if m == 1:
        raise DomainError("quotient index m must exceed 1")
    verdicts = [
        LocalVerdict(
            "real",
            NONEMPTY if real_component_count(d, n, m) > 0 else EMPTY,
            SOURCE_REAL,
        )
    ]
    for p in prime_divisors(d):
        verdicts.append(LocalVerdict(str(p), qp_quotient_points(d, n, m, p), SOURCE_PADIC))
        clark = prime_level_quotient_points(d, n, m, p)
        if clark != NOT_APPLICABLE:
            verdicts.append(LocalVerdict(str(p), clark, SOURCE_PRIME_LEVEL))
    return tuple(verdicts)


def has_local_obstruction(d: int, n: int, m: int) -> bool:
    return any(v.status == EMPTY for v in local_obstructions(d, n, m))
