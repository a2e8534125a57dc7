"""
Command-line surface.

    python cli.py closure --vars x,y,z --ideal "x^7,y^3,z^2"
    python cli.py is-normal --vars x,z --ideal "x^2,x*z^2,z^4" --format json
    python cli.py sweep thm-dim3 --c-max 12 --format csv
    python cli.py verify-paper

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
The default corpus seed comes from REES_SEED.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from core.config import settings
from core.exceptions import IdealError, IdealSyntaxError
from core.log_config import configure_logging
from schemas.cli_schema import CliConfig, OutputFormat
from schemas.ideal_schema import MonomialIdeal
from schemas.verify_schema import CheckReport
from services import ideal_service, newton_service, normality_service, verify_service
from services.notation_service import (
    format_ideal,
    format_monomial,
    ideal_to_payload,
    load_ideal_file,
    parse_ideal,
    parse_monomial,
    parse_variables,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

SWEEP_FAMILIES = ("lemma-dim2", "thm-dim3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="text", help="Output format.")
    common.add_argument("--output", help="Write the output to this file instead of stdout.")
    common.add_argument("--log-level", dest="log_level", help="Logging level (default from REES_LOG_LEVEL).")

    ideal_source = _Parser(add_help=False)
    ideal_source.add_argument("--vars", help="Comma-separated variable names, e.g. x,y,z.")
    source = ideal_source.add_mutually_exclusive_group()
    source.add_argument("--ideal", help='Inline generators, e.g. "x^7, y^3, z^2".')
    source.add_argument("--ideal-file", dest="ideal_file", help='JSON file {"vars": [...], "generators": [[...]]}.')

    parser = _Parser(prog="rees", description="Integral closure and normality of monomial ideals.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    both = [common, ideal_source]
    sub.add_parser("closure", parents=both, help="Print the integral closure.")
    sub.add_parser("is-closed", parents=both, help="Is the ideal integrally closed?")
    p = sub.add_parser("is-normal", parents=both, help="Print a normality report.")
    p.add_argument("--max-power", dest="max_power", type=int, help="Check powers up to this bound instead of d-1.")
    p = sub.add_parser("power-closure", parents=both, help="Print the closure of I^n.")
    p.add_argument("-n", type=int, default=1)
    sub.add_parser("invariants", parents=both, help="mu, colength, v, rsop count, m-primary, order.")
    p = sub.add_parser("witness", parents=both, help="Monomial in closure(I^n) but not in I^n.")
    p.add_argument("-n", type=int, default=1)
    p = sub.add_parser("certificate", parents=both, help="Integral-dependence certificate for a monomial.")
    p.add_argument("--monomial", required=True)
    p.add_argument("-n", type=int, default=1, help="Certify membership in the closure of I^n.")
    p = sub.add_parser("order", parents=both, help="Order of the ideal under a monomial valuation.")
    p.add_argument("--weights", required=True, help="Comma-separated non-negative rationals, e.g. 2,2,1 or 1/2,1,1.")

    p = sub.add_parser("sweep", parents=[common], help="Run an (a, b, c)-family sweep.")
    p.add_argument("family", choices=SWEEP_FAMILIES)
    p.add_argument("--a-max", dest="a_max", type=int)
    p.add_argument("--c-max", dest="c_max", type=int)
    p.add_argument("--vars", help="Variable names used to print witnesses.")

    p = sub.add_parser("verify-paper", parents=[common], help="Run every example, sweep and corpus check.")
    p.add_argument("--seed", type=int, help="Corpus seed (default REES_SEED).")
    p.add_argument("--trials", type=int, help="Trials per corpus check.")

    p = sub.add_parser("corpus", parents=[common], help="Run one corpus property check.")
    p.add_argument("check", choices=sorted(verify_service.CORPUS_CHECKS))
    p.add_argument("--dim", type=int)
    p.add_argument("--box", type=int, help="Exponent bound for sampled generators.")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    return parser


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_ideal(config: CliConfig) -> Tuple[MonomialIdeal, List[str]]:
    if config.ideal_file is not None:
        I, variables = load_ideal_file(config.ideal_file)
        if config.vars:
            override = parse_variables(config.vars)
            if len(override) != I.dim:
                raise IdealError(f"--vars names {len(override)} variables, the file has {I.dim}")
            variables = override
        return I, variables
    variables = parse_variables(config.vars)
    return parse_ideal(config.ideal, variables), variables


def _ideal_output(config: CliConfig, I: MonomialIdeal, variables: Sequence[str]) -> str:
    text = format_ideal(I, variables)
    if config.format == OutputFormat.JSON:
        payload = ideal_to_payload(I, variables).model_dump()
        payload["text"] = text
        payload["mu"] = ideal_service.mu(I)
        return _dumps(payload)
    return text + "\n"


def _report_text(report: CheckReport) -> str:
    lines = [f"{'PASS' if report.passes else 'FAIL'} {report.check_name}"]
    for key, value in sorted(report.details.items()):
        lines.append(f"  {key}: {value}")
    for failure in report.failures:
        lines.append(f"  failure: input={failure.input} expected={failure.expected} got={failure.got}")
    return "\n".join(lines) + "\n"


def _reports_output(config: CliConfig, reports: List[CheckReport]) -> Tuple[int, str]:
    code = EXIT_OK if all(r.passes for r in reports) else EXIT_CHECK_FAILED
    if config.format == OutputFormat.JSON:
        return code, _dumps([r.model_dump(mode="json") for r in reports])
    return code, "".join(_report_text(r) for r in reports)


def _run_ideal_command(config: CliConfig) -> Tuple[int, str]:
    I, variables = _load_ideal(config)
    as_json = config.format == OutputFormat.JSON

    if config.subcommand == "closure":
        return EXIT_OK, _ideal_output(config, newton_service.integral_closure(I), variables)

    if config.subcommand == "power-closure":
        return EXIT_OK, _ideal_output(config, normality_service.closure_of_power(I, config.n), variables)

    if config.subcommand == "is-closed":
        closed = normality_service.is_integrally_closed(I)
        if as_json:
            return EXIT_OK, _dumps({"ideal": format_ideal(I, variables), "is_closed": closed})
        return EXIT_OK, f"{str(closed).lower()}\n"

    if config.subcommand == "is-normal":
        report = normality_service.is_normal(I, config.max_power)
        if as_json:
            data = report.model_dump(mode="json")
            data["vars"] = list(variables)
            return EXIT_OK, _dumps(data)
        lines = [
            f"ideal: {format_ideal(I, variables)}",
            f"verdict: {report.verdict.value}",
            f"bound_used: {report.bound_used}",
            f"bound_source: {report.bound_source.value}",
        ]
        lines += [f"power {c.n}: {'closed' if c.is_closed else 'not closed'}" for c in report.checked_powers]
        if report.first_failure:
            lines.append(
                f"first_failure: n={report.first_failure.n} "
                f"witness={format_monomial(report.first_failure.witness, variables)}"
            )
        if report.note:
            lines.append(f"note: {report.note}")
        return EXIT_OK, "\n".join(lines) + "\n"

    if config.subcommand == "invariants":
        colength = ideal_service.colength(I)
        data = {
            "mu": ideal_service.mu(I),
            "colength": colength,
            "v": ideal_service.v_quotient(I),
            "rsop_count": ideal_service.rsop_count(I),
            "m_primary": ideal_service.is_m_primary(I),
            "order": None if I.is_zero else ideal_service.order(I),
        }
        if as_json:
            return EXIT_OK, _dumps(data)
        return EXIT_OK, (
            f"mu={data['mu']}\ncolength={colength}\nv={data['v']}\n"
            f"rsop_count={data['rsop_count']}\nm-primary={str(data['m_primary']).lower()}\n"
            f"order={'undefined' if data['order'] is None else data['order']}\n"
        )

    if config.subcommand == "witness":
        witness = normality_service.first_failure_witness(I, config.n)
        text = None if witness is None else format_monomial(witness, variables)
        if as_json:
            return EXIT_OK, _dumps({"n": config.n, "witness": None if witness is None else list(witness), "monomial": text})
        return EXIT_OK, f"{text or 'none'}\n"

    if config.subcommand == "certificate":
        m = parse_monomial(config.monomial, variables)
        cert = newton_service.certificate(I, m, config.n)
        if as_json:
            return EXIT_OK, _dumps({
                "member": cert is not None,
                "monomial": format_monomial(m, variables),
                "certificate": None if cert is None else cert.model_dump(mode="json"),
            })
        if cert is None:
            return EXIT_OK, "none\n"
        factors = ", ".join(
            f"{format_monomial(g, variables)}:{c}" for g, c in newton_service.certificate_factors(I, cert).items()
        )
        return EXIT_OK, (
            f"rho={cert.rho}\npower={cert.power}\nfactors={factors}\n"
            f"slack={format_monomial(cert.slack, variables)}\n"
        )

    if config.subcommand == "order":
        weights = [newton_service.parse_weight(w) for w in config.weights.split(",")]
        value = newton_service.ord_w(I, weights)
        if as_json:
            return EXIT_OK, _dumps({"weights": [str(w) for w in weights], "order": str(value)})
        return EXIT_OK, f"{value}\n"

    raise _UsageError(f"unknown subcommand {config.subcommand}")


def _run_sweep(config: CliConfig) -> Tuple[int, str]:
    if config.family == "lemma-dim2":
        a_max, c_max = config.a_max or 8, config.c_max or 16
        records = verify_service.sweep_lemma_dim2(a_max, c_max)
        report = verify_service.sweep_report("sweep_lemma_dim2", {"a_max": a_max, "c_max": c_max}, records)
        variables = ["x", "z"]
    else:
        c_max = config.c_max or 12
        records = verify_service.sweep_theorem_dim3(c_max)
        report = verify_service.sweep_report("sweep_theorem_dim3", {"c_max": c_max}, records)
        variables = ["x", "y", "z"]
    if config.vars:
        variables = parse_variables(config.vars)
    code = EXIT_OK if report.passes else EXIT_CHECK_FAILED
    if config.format == OutputFormat.CSV:
        return code, verify_service.records_to_csv(records, variables)
    if config.format == OutputFormat.JSON:
        return code, _dumps({
            "report": report.model_dump(mode="json"),
            "records": [r.model_dump(mode="json") for r in records],
        })
    return code, _report_text(report)


def _run_corpus(config: CliConfig) -> Tuple[int, str]:
    dim = config.dim or (2 if config.check == "zariski" else 3)
    spec = verify_service.default_corpus_spec(dim, config.trials, config.seed)
    if config.box is not None:
        spec = spec.model_copy(update={"box": config.box})
    report = verify_service.CORPUS_CHECKS[config.check](spec)
    return _reports_output(config, [report])


def _dispatch(config: CliConfig) -> Tuple[int, str]:
    if config.subcommand == "sweep":
        return _run_sweep(config)
    if config.subcommand == "verify-paper":
        seed = settings.DEFAULT_SEED if config.seed is None else config.seed
        return _reports_output(config, verify_service.verify_paper(seed=seed, trials=config.trials))
    if config.subcommand == "corpus":
        return _run_corpus(config)
    return _run_ideal_command(config)


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one invocation and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        config = CliConfig(**vars(args))
    except ValidationError as e:
        for err in e.errors():
            print(f"error: {err['msg']}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(config.log_level)
    logger.debug("running %s", config.subcommand)
    try:
        code, text = _dispatch(config)
        _emit(text, config.output)
    except IdealSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.text:
            print(e.pointer(), file=sys.stderr)
        return EXIT_USAGE
    except (IdealError, ValueError, OSError, _UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return code


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
