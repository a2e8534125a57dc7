"""
Integral closure of monomial ideals via the Newton polyhedron

    NP(I) = conv(exponents of generators) + nonnegative orthant.

A monomial x^m lies in the closure of I^n exactly when m lies in n * NP(I),
which is decided exactly by `feasibility_service`.

Enumeration box. Let M_j be the largest j-th coordinate among the
generators. If m lies in n * NP(I) and m_j > n * M_j, write m = c + r with c
in the scaled convex hull; c_j <= n * M_j forces r_j >= 1, so m - e_j is
still in n * NP(I). Hence every divisibility-minimal lattice point of
n * NP(I) lies in prod [0, n * M_j], and so does every minimal element of
closure(I^n) minus I^n, since I^n is closed upward.
"""
import logging
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.exceptions import DimensionError, UndefinedOrderError
from schemas.ideal_schema import ClosureCertificate, ExponentVector, MonomialIdeal, divides
from services import ideal_service
from services.feasibility_service import common_denominator, convex_combination_below

logger = logging.getLogger(__name__)

WeightVector = Tuple[Fraction, ...]


def _check(I: MonomialIdeal, m: Sequence[int]) -> None:
    if len(m) != I.dim:
        raise DimensionError(I.dim, len(m))


def _lambdas(I: MonomialIdeal, m: Sequence[int], scale: int) -> Optional[List[Fraction]]:
    return convex_combination_below(I.generators, m, total=scale)


def np_membership(I: MonomialIdeal, m: Sequence[int], scale: int = 1) -> bool:
    """x^m lies in the closure of I^scale (m in scale * NP(I)). Always false for the zero ideal."""
    _check(I, m)
    if I.is_zero:
        return False
    m = tuple(m)
    if scale == 1 and ideal_service.contains(I, m):
        return True
    return _lambdas(I, m, scale) is not None


def certificate(I: MonomialIdeal, m: Sequence[int], scale: int = 1) -> Optional[ClosureCertificate]:
    """
    Clears the denominators of a feasible lambda:
    rho * m = sum(count_i * g_i) + slack with sum(count_i) = rho * scale.
    """
    _check(I, m)
    if I.is_zero:
        return None
    lambdas = _lambdas(I, m, scale)
    if lambdas is None:
        return None
    rho = common_denominator(lambdas)
    counts = {i: int(lam * rho) for i, lam in enumerate(lambdas) if lam}
    reached = [sum(c * I.generators[i][j] for i, c in counts.items()) for j in range(I.dim)]
    slack = tuple(rho * mj - r for mj, r in zip(m, reached))
    cert = ClosureCertificate(rho=rho, power=scale, factor_counts=counts, slack=slack)
    if not verify_certificate(I, m, cert):
        raise ArithmeticError(f"certificate for {tuple(m)} failed its own check")
    return cert


def verify_certificate(I: MonomialIdeal, m: Sequence[int], cert: ClosureCertificate) -> bool:
    """Re-checks both certificate identities exactly."""
    if sum(cert.factor_counts.values()) != cert.rho * cert.power:
        return False
    if any(i < 0 or i >= len(I.generators) for i in cert.factor_counts):
        return False
    if len(cert.slack) != I.dim or any(s < 0 for s in cert.slack):
        return False
    for j in range(I.dim):
        rhs = sum(c * I.generators[i][j] for i, c in cert.factor_counts.items()) + cert.slack[j]
        if cert.rho * m[j] != rhs:
            return False
    return True


def search_box(I: MonomialIdeal, scale: int = 1) -> List[int]:
    """Upper corner of the enumeration box: scale * max generator exponent per coordinate."""
    return [scale * max((g[j] for g in I.generators), default=0) for j in range(I.dim)]


def polyhedron_points_outside(I: MonomialIdeal, outside: MonomialIdeal, scale: int = 1) -> List[ExponentVector]:
    """
    Lattice points of the search box that lie in scale * NP(I) but not in `outside`.

    Points are visited in lexicographically descending order, so every point
    above the current one was visited before it; a point dividing a known
    non-member is a non-member too and skips the LP.
    """
    corner = search_box(I, scale)
    if ideal_service.is_m_primary(outside):
        # Standard monomials of an m-primary ideal sit inside its pure-power box,
        # which the search box contains whenever outside contains I^scale.
        candidates = sorted(ideal_service.standard_monomials(outside), reverse=True)
    else:
        candidates = [
            m for m in cartesian(*(range(c, -1, -1) for c in corner))
            if not ideal_service.contains(outside, m)
        ]
    non_members: List[ExponentVector] = []
    members: List[ExponentVector] = []
    lps = 0
    for m in candidates:
        if any(divides(m, q) for q in non_members):
            continue
        lps += 1
        if _lambdas(I, m, scale) is not None:
            members.append(m)
        else:
            non_members.append(m)
    logger.debug("box %s scale %d: %d LPs, %d new points", corner, scale, lps, len(members))
    return sorted(members)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the ideal of lattice points in NP(I)."""
    if I.is_zero:
        return I
    extra = polyhedron_points_outside(I, I)
    if not extra:
        return I
    return MonomialIdeal(dim=I.dim, generators=I.generators + tuple(extra))


def parse_weight(text: str) -> Fraction:
    try:
        w = Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"weight {text!r} has a zero denominator") from None
    if w < 0:
        raise ValueError(f"weight {text!r} is negative")
    return w


def ord_w(I: MonomialIdeal, w: Sequence[Fraction]) -> Fraction:
    """Order of I under the monomial valuation with weights w: min over generators of <w, g>."""
    if I.is_zero:
        raise UndefinedOrderError("undefined order: the zero ideal has no generators")
    if len(w) != I.dim:
        raise DimensionError(I.dim, len(w), what="weight vector")
    return min(sum((Fraction(a) * b for a, b in zip(w, g)), Fraction(0)) for g in I.generators)


def valuation_membership(I: MonomialIdeal, m: Sequence[int], sample: Iterable[Sequence[Fraction]]) -> bool:
    """
    <w, m> >= ord_w(I) for every weight in the sample. Necessary for closure
    membership; sufficient once the sample holds every facet normal of NP(I).
    """
    _check(I, m)
    if I.is_zero:
        return False
    for w in sample:
        value = sum((Fraction(a) * b for a, b in zip(w, m)), Fraction(0))
        if value < ord_w(I, w):
            return False
    return True


def certificate_factors(I: MonomialIdeal, cert: ClosureCertificate) -> Dict[ExponentVector, int]:
    """The certificate's counts keyed by generator exponent instead of index."""
    return {I.generators[i]: c for i, c in cert.factor_counts.items()}
