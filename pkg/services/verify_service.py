"""
Executable checks of the monomial content of the normality results:
worked examples, (a, b, c)-family sweeps and seeded property corpora.

Every report is a deterministic function of its parameters and seed;
parallel evaluation (REES_MAX_WORKERS > 1) returns results in input order.
"""
import csv
import io
import logging
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.config import settings
from schemas.ideal_schema import MonomialIdeal
from schemas.normality_schema import Verdict
from schemas.verify_schema import CheckFailure, CheckReport, CorpusSpec, SweepRecord
from services import corpus_service, ideal_service, newton_service, normality_service
from services.notation_service import default_variables, format_ideal, format_monomial, parse_ideal

logger = logging.getLogger(__name__)

XYZ = ["x", "y", "z"]

SWEEP_CSV_COLUMNS = ["a", "b", "c", "is_closed", "bound_holds", "normal_verdict", "witness", "mu", "colength"]

# Exponent-box bound of the default corpus per number of variables.
DEFAULT_CORPUS_BOX = {2: 4, 3: 4, 4: 3}


def ceil_half(c: int) -> int:
    """The least integer n with c/2 <= n."""
    return (c + 1) // 2


def _map(fn: Callable, items: Sequence) -> list:
    if settings.MAX_WORKERS > 1 and len(items) > 1:
        with Pool(settings.MAX_WORKERS) as pool:
            return pool.map(fn, items)
    return [fn(item) for item in items]


def _xyz(text: str) -> MonomialIdeal:
    return parse_ideal(text, XYZ)


def _text(I: MonomialIdeal, variables: Optional[Sequence[str]] = None) -> str:
    return format_ideal(I, variables or default_variables(I.dim))


def _ideal_diff(name: str, got: MonomialIdeal, expected: MonomialIdeal, failures: List[CheckFailure]) -> None:
    if ideal_service.equals(got, expected):
        return
    variables = default_variables(got.dim)
    missing = [format_monomial(g, variables) for g in expected.generators if g not in got.generators]
    extra = [format_monomial(g, variables) for g in got.generators if g not in expected.generators]
    failures.append(CheckFailure(
        input=name,
        expected=_text(expected),
        got={"generators": _text(got), "missing": missing, "extra": extra},
    ))


def _expect(name: str, expected, got, failures: List[CheckFailure]) -> None:
    if expected != got:
        failures.append(CheckFailure(input=name, expected=expected, got=got))


def _report(check_name: str, params: Dict, failures: List[CheckFailure], details: Optional[Dict] = None) -> CheckReport:
    report = CheckReport(
        check_name=check_name,
        params=params,
        passes=not failures,
        failures=failures,
        details=details or {},
    )
    if failures:
        logger.warning("%s: %d failure(s)", check_name, len(failures))
    else:
        logger.info("%s: passed", check_name)
    return report


# --- worked examples -------------------------------------------------------

def verify_intro_example() -> CheckReport:
    """
    Q = (X^7, Y^3, Z^2) and I = closure(Q): I is integrally closed, I^2 is not,
    and I^2 = QI.
    """
    failures: List[CheckFailure] = []
    Q = _xyz("x^7, y^3, z^2")
    listed = _xyz("x^7, y^3, z^2, x^5*y, x^4*z, x^3*y^2, x^2*y*z, y^2*z")

    I = newton_service.integral_closure(Q)
    _ideal_diff("integral_closure(Q)", I, listed, failures)
    _expect("is_integrally_closed(I)", True, normality_service.is_integrally_closed(listed), failures)

    missing = normality_service.missing_points(listed, 2)
    minimal = normality_service.minimal_points(missing)
    if not missing:
        failures.append(CheckFailure(input="closure_of_power(I, 2) != power(I, 2)", expected="a witness", got="none"))

    I2 = ideal_service.power(listed, 2)
    _expect("equals(power(I, 2), product(Q, I))", True, ideal_service.equals(I2, ideal_service.product(Q, listed)), failures)

    return _report(
        "verify_intro_example",
        {"Q": _text(Q)},
        failures,
        {
            "closure": _text(I),
            "mu": ideal_service.mu(I),
            "square_witnesses": [format_monomial(p, XYZ) for p in minimal],
        },
    )


def _check_listed_example(name: str, base: str, listed: str, mu: int, v: Optional[int], failures: List[CheckFailure]) -> Dict:
    closure = newton_service.integral_closure(_xyz(base))
    expected = _xyz(listed)
    _ideal_diff(f"{name}: closure of ({base})", closure, expected, failures)
    _expect(f"{name}: mu", mu, ideal_service.mu(closure), failures)
    if v is not None:
        _expect(f"{name}: v(R/I)", v, ideal_service.v_quotient(closure), failures)
    report = normality_service.is_normal(closure)
    _expect(f"{name}: normality", Verdict.NORMAL.value, report.verdict.value, failures)
    return {"closure": _text(closure), "mu": ideal_service.mu(closure), "verdict": report.verdict.value}


def verify_examples() -> CheckReport:
    """The three-variable examples whose Rees algebras are normal."""
    failures: List[CheckFailure] = []
    details = {
        "example_1": _check_listed_example(
            "example (1)", "x^3, y^3, z", "x^3, x^2*y, x*y^2, y^3, z", mu=5, v=2, failures=failures),
        "example_2": _check_listed_example(
            "example (2)", "x^4, y^4, z", "x^4, x^3*y, x^2*y^2, x*y^3, y^4, z", mu=6, v=2, failures=failures),
        "d_plus_3_example": _check_listed_example(
            "closure of (x^2, y^2, z^4)", "x^2, y^2, z^4", "x^2, x*y, y^2, z^4, x*z^2, y*z^2", mu=6, v=None,
            failures=failures),
    }

    # (f) + m^n with f a variable: integrally closed, v(R/I) <= 2 and normal.
    m = ideal_service.maximal_ideal(3)
    family = []
    for j in range(3):
        f = ideal_service.minimalize([ideal_service.unit_vector(3, j)], 3)
        for n in range(1, 5):
            I = ideal_service.ideal_sum(f, ideal_service.power(m, n))
            label = f"({XYZ[j]}) + m^{n}"
            _expect(f"{label}: integrally closed", True, normality_service.is_integrally_closed(I), failures)
            if ideal_service.v_quotient(I) > 2:
                failures.append(CheckFailure(input=f"{label}: v(R/I)", expected="<= 2", got=ideal_service.v_quotient(I)))
            _expect(f"{label}: normality", Verdict.NORMAL.value, normality_service.is_normal(I).verdict.value, failures)
            family.append(label)
    details["variable_plus_power_of_m"] = family
    return _report("verify_examples", {}, failures, details)


# --- sweeps ----------------------------------------------------------------

def lemma_ideal(a: int, c: int) -> MonomialIdeal:
    """J = (X^2, X Z^a, Z^c) in k[X, Z]."""
    return ideal_service.minimalize([(2, 0), (1, a), (0, c)], 2)


def theorem_ideal(a: int, b: int, c: int) -> MonomialIdeal:
    """I = (X^2, XY, Y^2, Z^c, X Z^a, Y Z^b) in k[X, Y, Z]."""
    return ideal_service.minimalize([(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, c), (1, 0, a), (0, 1, b)], 3)


def _lemma_cell(params: Tuple[int, int]) -> SweepRecord:
    a, c = params
    J = lemma_ideal(a, c)
    report = normality_service.is_normal(J)
    closed = report.checked_powers[0].is_closed
    bound_holds = a <= ceil_half(c)
    violation = None
    if bound_holds and not (closed and report.verdict == Verdict.NORMAL):
        violation = f"J not normal although a <= ceil(c/2): closed={closed}, verdict={report.verdict.value}"
    logger.debug("lemma cell a=%d c=%d closed=%s", a, c, closed)
    return SweepRecord(
        a=a,
        c=c,
        is_closed=closed,
        bound_holds=bound_holds,
        normal_verdict=report.verdict,
        witness=report.first_failure.witness if report.first_failure else None,
        mu=ideal_service.mu(J),
        colength=ideal_service.colength(J),
        in_hypothesis=bound_holds,
        violation=violation,
    )


def sweep_lemma_dim2(a_max: int, c_max: int) -> List[SweepRecord]:
    """
    All cells 1 <= a <= a_max, 2 <= c <= c_max. Cells with a <= ceil(c/2) must be
    integrally closed and normal; the others are recorded without assertion.
    """
    if a_max < 2 or c_max < 2:
        raise ValueError("a_max and c_max must be at least 2")
    cells = [(a, c) for a in range(1, a_max + 1) for c in range(2, c_max + 1)]
    return _map(_lemma_cell, cells)


def _theorem_cell(params: Tuple[int, int, int]) -> SweepRecord:
    a, b, c = params
    I = theorem_ideal(a, b, c)
    report = normality_service.is_normal(I)
    closed = report.checked_powers[0].is_closed
    d = ceil_half(c)
    bound_holds = b <= d
    witness = report.first_failure.witness if report.first_failure else None
    problems = []
    if closed and not bound_holds:
        problems.append(f"closed although b > ceil(c/2) = {d}")
    if closed and report.verdict != Verdict.NORMAL:
        problems.append(f"closed but verdict {report.verdict.value}")
    if not bound_holds:
        expected = (0, 1, d)
        if closed or witness != expected:
            problems.append(f"expected witness {format_monomial(expected, XYZ)} at power 1, got {witness}")
    logger.debug("theorem cell a=%d b=%d c=%d closed=%s", a, b, c, closed)
    return SweepRecord(
        a=a,
        b=b,
        c=c,
        is_closed=closed,
        bound_holds=bound_holds,
        normal_verdict=report.verdict,
        witness=witness,
        mu=ideal_service.mu(I),
        colength=ideal_service.colength(I),
        in_hypothesis=closed,
        violation="; ".join(problems) or None,
    )


def sweep_theorem_dim3(c_max: int) -> List[SweepRecord]:
    """
    All cells 1 <= a <= b <= c - 1, 2 <= c <= c_max. Closed cells must satisfy
    b <= ceil(c/2) and be normal; cells with b > ceil(c/2) must show the
    witness Y Z^ceil(c/2) at power 1. Closedness is never asserted.
    """
    if c_max < 2:
        raise ValueError("c_max must be at least 2")
    cells = [(a, b, c) for c in range(2, c_max + 1) for b in range(1, c) for a in range(1, b + 1)]
    return _map(_theorem_cell, sorted(cells))


def sweep_report(check_name: str, params: Dict, records: Iterable[SweepRecord]) -> CheckReport:
    records = list(records)
    failures = [
        CheckFailure(input={"a": r.a, "b": r.b, "c": r.c}, expected="no violation", got=r.violation)
        for r in records
        if r.violation
    ]
    details = {
        "cells": len(records),
        "closed_cells": sum(1 for r in records if r.is_closed),
        "normal_cells": sum(1 for r in records if r.normal_verdict == Verdict.NORMAL),
    }
    return _report(check_name, params, failures, details)


def records_to_csv(records: Iterable[SweepRecord], variables: Sequence[str]) -> str:
    """CSV with columns a,b,c,is_closed,bound_holds,normal_verdict,witness,mu,colength."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for r in records:
        writer.writerow([
            r.a,
            "" if r.b is None else r.b,
            r.c,
            str(r.is_closed).lower(),
            str(r.bound_holds).lower(),
            r.normal_verdict.value,
            "" if r.witness is None else format_monomial(r.witness, variables),
            r.mu,
            r.colength,
        ])
    return buffer.getvalue()


# --- corpus checks ---------------------------------------------------------

def default_corpus_spec(dim: int, trials: Optional[int] = None, seed: Optional[int] = None) -> CorpusSpec:
    return CorpusSpec(
        dim=dim,
        trials=settings.CORPUS_TRIALS if trials is None else trials,
        seed=settings.DEFAULT_SEED if seed is None else seed,
        box=DEFAULT_CORPUS_BOX.get(dim, 3),
    )


# Each case function returns (hypothesis_met, failure_or_None) for one ideal.

def _div2_case(I: MonomialIdeal):
    d = I.dim
    if ideal_service.mu(I) > d + 2:
        return False, None
    v = ideal_service.v_quotient(I)
    if v <= 2:
        return True, None
    return True, CheckFailure(input=_text(I), expected="v(R/I) <= 2", got={"mu": ideal_service.mu(I), "v": v})


def _watanabe_case(I: MonomialIdeal):
    d = I.dim
    if ideal_service.rsop_count(I) != 0:
        return False, None
    bound = d * (d + 1) // 2
    if ideal_service.mu(I) >= bound:
        return True, None
    return True, CheckFailure(input=_text(I), expected=f"mu >= {bound}", got=ideal_service.mu(I))


def _mfull_order_case(I: MonomialIdeal):
    k = ideal_service.order(I)
    bound = ideal_service.mu_of_maximal_power(I.dim, k)
    if ideal_service.mu(I) >= bound:
        return True, None
    return True, CheckFailure(input=_text(I), expected=f"mu >= mu(m^{k}) = {bound}", got=ideal_service.mu(I))


def _normal_case(I: MonomialIdeal) -> Optional[CheckFailure]:
    report = normality_service.is_normal(I)
    if report.verdict == Verdict.NORMAL:
        return None
    got = {"verdict": report.verdict.value}
    if report.first_failure:
        got["n"] = report.first_failure.n
        got["witness"] = format_monomial(report.first_failure.witness, default_variables(I.dim))
    return CheckFailure(input=_text(I), expected=Verdict.NORMAL.value, got=got)


def _main_normality_case(I: MonomialIdeal):
    if ideal_service.v_quotient(I) > 2:
        return False, None
    return True, _normal_case(I)


def _d_plus_3_case(I: MonomialIdeal):
    if ideal_service.mu(I) != I.dim + 3:
        return False, None
    return True, _normal_case(I)


def _zariski_case(pair: Tuple[MonomialIdeal, MonomialIdeal]):
    I, J = pair
    IJ = ideal_service.product(I, J)
    if not normality_service.is_integrally_closed(IJ):
        closure = newton_service.integral_closure(IJ)
        return True, CheckFailure(
            input=[_text(I), _text(J)],
            expected="product integrally closed",
            got={"product": _text(IJ), "closure": _text(closure)},
        )
    for K in (I, J):
        failure = _normal_case(K)
        if failure is not None:
            return True, failure
    return True, None


def _run_corpus(check_name: str, spec: CorpusSpec, case: Callable, cases: Sequence) -> CheckReport:
    outcomes = _map(case, cases)
    failures = [f for _, f in outcomes if f is not None]
    details = {"ideals": len(cases), "hypothesis_met": sum(1 for met, _ in outcomes if met)}
    return _report(check_name, spec.model_dump(), failures, details)


def _corpus(spec: CorpusSpec, min_dim: int) -> List[MonomialIdeal]:
    if spec.dim < min_dim:
        raise ValueError(f"this check needs at least {min_dim} variables, got {spec.dim}")
    return list(corpus_service.random_integrally_closed(spec))


def corpus_check_div2(spec: CorpusSpec) -> CheckReport:
    """mu(I) <= d + 2 implies v(R/I) <= 2."""
    return _run_corpus("corpus_check_div2", spec, _div2_case, _corpus(spec, 3))


def corpus_check_watanabe(spec: CorpusSpec) -> CheckReport:
    """I inside m^2 implies mu(I) >= d(d+1)/2."""
    return _run_corpus("corpus_check_watanabe", spec, _watanabe_case, _corpus(spec, 3))


def corpus_check_main_normality(spec: CorpusSpec) -> CheckReport:
    """v(R/I) <= 2 implies I is normal."""
    return _run_corpus("corpus_check_main_normality", spec, _main_normality_case, _corpus(spec, 3))


def corpus_check_d_plus_3(spec: CorpusSpec) -> CheckReport:
    """mu(I) = d + 3 implies I is normal (monomials are homogeneous)."""
    return _run_corpus("corpus_check_d_plus_3", spec, _d_plus_3_case, _corpus(spec, 3))


def corpus_check_mfull_order(spec: CorpusSpec) -> CheckReport:
    """mu(I) >= mu(m^k) where k is the m-adic order of I."""
    return _run_corpus("corpus_check_mfull_order", spec, _mfull_order_case, _corpus(spec, 1))


def corpus_check_zariski(spec: CorpusSpec) -> CheckReport:
    """In two variables, products of integrally closed ideals are integrally closed and every one is normal."""
    if spec.dim != 2:
        raise ValueError(f"the Zariski check runs in 2 variables, got {spec.dim}")
    doubled = spec.model_copy(update={"trials": 2 * spec.trials})
    ideals = list(corpus_service.random_integrally_closed(doubled))
    pairs = list(zip(ideals[0::2], ideals[1::2]))
    return _run_corpus("corpus_check_zariski", spec, _zariski_case, pairs)


CORPUS_CHECKS: Dict[str, Callable[[CorpusSpec], CheckReport]] = {
    "div2": corpus_check_div2,
    "watanabe": corpus_check_watanabe,
    "main-normality": corpus_check_main_normality,
    "zariski": corpus_check_zariski,
    "d-plus-3": corpus_check_d_plus_3,
    "mfull-order": corpus_check_mfull_order,
}


def verify_paper(seed: Optional[int] = None, trials: Optional[int] = None) -> List[CheckReport]:
    """Worked examples, both sweeps at their default bounds and every corpus check."""
    reports = [verify_intro_example(), verify_examples()]
    reports.append(sweep_report("sweep_lemma_dim2", {"a_max": 8, "c_max": 16}, sweep_lemma_dim2(8, 16)))
    reports.append(sweep_report("sweep_theorem_dim3", {"c_max": 12}, sweep_theorem_dim3(12)))
    for dim in (3, 4):
        spec = default_corpus_spec(dim, trials, seed)
        reports.append(corpus_check_div2(spec))
        reports.append(corpus_check_watanabe(spec))
        reports.append(corpus_check_main_normality(spec))
        reports.append(corpus_check_mfull_order(spec))
    reports.append(corpus_check_d_plus_3(default_corpus_spec(3, trials, seed)))
    reports.append(corpus_check_zariski(default_corpus_spec(2, trials, seed)))
    return reports
