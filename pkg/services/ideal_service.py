"""
Exact arithmetic of monomial ideals in d variables.

Every function returns ideals in canonical form (the unique minimal
generating antichain), so equality of ideals is equality of models.
"""
from collections import deque
from itertools import product as cartesian
from math import comb
from typing import Iterable, Iterator, List, Literal, Optional, Tuple, Union

from core.exceptions import DimensionError, UndefinedOrderError
from schemas.ideal_schema import ExponentVector, MonomialIdeal, divides

INFINITE = "infinite"

Colength = Union[int, Literal["infinite"]]


def _check_vector(m: Tuple[int, ...], dim: int) -> None:
    if len(m) != dim:
        raise DimensionError(dim, len(m))


def _check_same_dim(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dim != J.dim:
        raise DimensionError(I.dim, J.dim, what="ideal")


def minimalize(gens: Iterable[Tuple[int, ...]], d: int) -> MonomialIdeal:
    """Canonical ideal generated by `gens`; raises DimensionError on a length mismatch."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        _check_vector(g, d)
    return MonomialIdeal(dim=d, generators=gens)


def zero_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal(dim=d)


def unit_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal(dim=d, generators=((0,) * d,))


def unit_vector(d: int, j: int) -> ExponentVector:
    return tuple(1 if i == j else 0 for i in range(d))


def maximal_ideal(d: int) -> MonomialIdeal:
    """m = (X_1, ..., X_d)."""
    return MonomialIdeal(dim=d, generators=[unit_vector(d, j) for j in range(d)])


def contains(I: MonomialIdeal, m: Tuple[int, ...]) -> bool:
    """x^m lies in I iff some generator divides it."""
    _check_vector(m, I.dim)
    return any(divides(g, m) for g in I.generators)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I is contained in J."""
    _check_same_dim(I, J)
    return all(contains(J, g) for g in I.generators)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_same_dim(I, J)
    return I.generators == J.generators


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(I, J)
    sums = {tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators}
    return MonomialIdeal(dim=I.dim, generators=sums)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^0 is the unit ideal; higher powers by repeated squaring."""
    if n < 0:
        raise ValueError(f"negative power {n}")
    result = unit_ideal(I.dim)
    base = I
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(I, J)
    return MonomialIdeal(dim=I.dim, generators=I.generators + J.generators)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Generated by the componentwise maxima (lcms) of generator pairs."""
    _check_same_dim(I, J)
    lcms = {tuple(map(max, g, h)) for g in I.generators for h in J.generators}
    return MonomialIdeal(dim=I.dim, generators=lcms)


def colon_monomial(I: MonomialIdeal, v: Tuple[int, ...]) -> MonomialIdeal:
    """(I : x^v), generated by max(g - v, 0)."""
    _check_vector(v, I.dim)
    return MonomialIdeal(
        dim=I.dim,
        generators=[tuple(max(a - b, 0) for a, b in zip(g, v)) for g in I.generators],
    )


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """
    (I : J) as the intersection of (I : h) over the generators h of J.
    Colon by the zero ideal is the unit ideal.
    """
    _check_same_dim(I, J)
    result = unit_ideal(I.dim)
    for h in J.generators:
        result = intersect(result, colon_monomial(I, h))
    return result


def pure_power_exponents(I: MonomialIdeal) -> List[Optional[int]]:
    """Least exponent p_j with X_j^p_j in I, or None when no pure power of X_j lies in I."""
    least: List[Optional[int]] = [None] * I.dim
    for g in I.generators:
        support = [j for j, e in enumerate(g) if e]
        if not support:
            return [0] * I.dim
        if len(support) == 1:
            j = support[0]
            if least[j] is None or g[j] < least[j]:
                least[j] = g[j]
    return least


def is_m_primary(I: MonomialIdeal) -> bool:
    """Some pure power of every variable lies in I (the unit ideal counts)."""
    return all(p is not None for p in pure_power_exponents(I))


def standard_monomials(I: MonomialIdeal) -> Iterator[ExponentVector]:
    """
    Exponents of the monomials outside I, breadth-first from the origin.
    Requires I to be m-primary, otherwise the set is infinite.
    """
    if not is_m_primary(I):
        raise ValueError("standard monomials of a non m-primary ideal are infinite in number")
    origin = (0,) * I.dim
    if contains(I, origin):
        return
    seen = {origin}
    queue = deque([origin])
    while queue:
        m = queue.popleft()
        yield m
        for j in range(I.dim):
            nxt = m[:j] + (m[j] + 1,) + m[j + 1:]
            if nxt not in seen and not contains(I, nxt):
                seen.add(nxt)
                queue.append(nxt)


def colength(I: MonomialIdeal) -> Colength:
    """
    Number of standard monomials; they all lie in the box prod [0, p_j).
    Non m-primary ideals (the zero ideal included) have infinite colength.
    """
    bounds = pure_power_exponents(I)
    if any(p is None for p in bounds):
        return INFINITE
    return sum(1 for m in cartesian(*(range(p) for p in bounds)) if not contains(I, m))


def mu(I: MonomialIdeal) -> int:
    return len(I.generators)


def rsop_count(I: MonomialIdeal) -> int:
    """Variables that are themselves generators, i.e. the length of (I + m^2) / m^2."""
    units = {unit_vector(I.dim, j) for j in range(I.dim)}
    return sum(1 for g in I.generators if g in units)


def v_quotient(I: MonomialIdeal) -> int:
    """Embedding dimension of R/I."""
    return I.dim - rsop_count(I)


def order(I: MonomialIdeal) -> int:
    """m-adic order: the largest k with I inside m^k."""
    if I.is_zero:
        raise UndefinedOrderError("the zero ideal has no order")
    return min(sum(g) for g in I.generators)


def mu_of_maximal_power(d: int, k: int) -> int:
    """Minimal number of generators of m^k in d variables."""
    return comb(k + d - 1, d - 1)
