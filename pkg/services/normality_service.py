"""
Integral closedness and normality of monomial ideals.

An ideal is normal when every power is integrally closed. For monomial
ideals in d variables, closedness of I, I^2, ..., I^(d-1) already implies
normality (the Reid-Roberts-Vitulli bound), which turns `is_normal` into a
terminating decision procedure.
"""
import logging
from typing import List, Optional

from schemas.ideal_schema import ExponentVector, MonomialIdeal, divides
from schemas.normality_schema import BoundSource, CheckedPower, FirstFailure, NormalityReport, Verdict
from services import ideal_service, newton_service

logger = logging.getLogger(__name__)


def rrv_bound(d: int) -> int:
    return max(1, d - 1)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    """The zero ideal counts as integrally closed."""
    if I.is_zero:
        return True
    return ideal_service.equals(newton_service.integral_closure(I), I)


def missing_points(I: MonomialIdeal, n: int) -> List[ExponentVector]:
    """Box points of closure(I^n) minus I^n, found with the scaled constraint sum(lambda) = n."""
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    if I.is_zero:
        return []
    return newton_service.polyhedron_points_outside(I, ideal_service.power(I, n), scale=n)


def closure_of_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Closure of I^n, agreeing with integral_closure(power(I, n))."""
    In = ideal_service.power(I, n)
    extra = missing_points(I, n)
    if not extra:
        return In
    return MonomialIdeal(dim=I.dim, generators=In.generators + tuple(extra))


def minimal_points(points: List[ExponentVector]) -> List[ExponentVector]:
    """Divisibility-minimal elements, in lexicographic order."""
    return sorted(p for p in points if not any(q != p and divides(q, p) for q in points))


def _least_minimal(points: List[ExponentVector]) -> Optional[ExponentVector]:
    minimal = minimal_points(points)
    return minimal[0] if minimal else None


def first_failure_witness(I: MonomialIdeal, n: int) -> Optional[ExponentVector]:
    """
    A divisibility-minimal monomial in closure(I^n) but not in I^n, least in
    lexicographic order among those; None when I^n is integrally closed.
    """
    return _least_minimal(missing_points(I, n))


def is_normal(I: MonomialIdeal, max_power: Optional[int] = None) -> NormalityReport:
    """
    Checks powers 1..bound and stops at the first one that is not closed.
    Without max_power the bound is max(1, d - 1). A user bound below that
    which passes yields "undetermined"; a normal verdict always reports the
    RRV bound as its source.
    """
    rrv = rrv_bound(I.dim)
    if max_power is None:
        bound, source = rrv, BoundSource.RRV
    else:
        if max_power < 1:
            raise ValueError(f"max_power must be positive, got {max_power}")
        bound, source = max_power, BoundSource.USER

    note = None
    if I.is_zero:
        note = "zero ideal: normal by convention"
    elif I.is_unit:
        note = "unit ideal: every power is the unit ideal"
    if note:
        return NormalityReport(
            ideal=I,
            checked_powers=[],
            verdict=Verdict.NORMAL,
            bound_used=max(bound, rrv),
            bound_source=BoundSource.RRV,
            note=note,
        )

    checked: List[CheckedPower] = []
    failure: Optional[FirstFailure] = None
    for n in range(1, bound + 1):
        extra = missing_points(I, n)
        checked.append(CheckedPower(n=n, is_closed=not extra))
        if extra:
            failure = FirstFailure(n=n, witness=_least_minimal(extra))
            logger.info("power %d of %s is not integrally closed, witness %s", n, I.generators, failure.witness)
            break

    if failure is not None:
        verdict = Verdict.NOT_NORMAL
    elif bound >= rrv:
        verdict = Verdict.NORMAL
        if source == BoundSource.USER:
            # the verdict rests on the RRV bound, the extra powers are only a cross-check
            source = BoundSource.RRV
            note = f"checked {bound} powers, beyond the bound {rrv}"
    else:
        verdict = Verdict.UNDETERMINED
    return NormalityReport(
        ideal=I,
        checked_powers=checked,
        verdict=verdict,
        first_failure=failure,
        bound_used=bound,
        bound_source=source,
        note=note,
    )
