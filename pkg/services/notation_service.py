"""
Text and JSON forms of monomial ideals.

Inline grammar (whitespace is ignored between tokens):

    ideal    := "0" | monomial ("," monomial)*
    monomial := "1" | factor ("*" factor)*
    factor   := var | var "^" k        k a positive decimal integer

Variable names are presentation only; the declared order fixes which
coordinate of the exponent vector each name addresses.
"""
import json
import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from core.exceptions import DimensionError, IdealSyntaxError, UnknownVariableError
from schemas.ideal_schema import ExponentVector, IdealPayload, IdealRequest, MonomialIdeal
from services.ideal_service import minimalize

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\^*,])|(?P<bad>\S))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def default_variables(d: int) -> List[str]:
    """x, y, z for up to three variables, x1..xd beyond that."""
    if d <= 3:
        return ["x", "y", "z"][:d]
    return [f"x{i}" for i in range(1, d + 1)]


def parse_variables(text: str) -> List[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise IdealSyntaxError("empty variable list", text, 0)
    for name in names:
        if not _NAME.match(name):
            raise IdealSyntaxError(f"invalid variable name {name!r}", text, text.find(name))
    if len(set(names)) != len(names):
        raise IdealSyntaxError("duplicate variable name", text)
    return names


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break  # only trailing whitespace is left
        kind = match.lastgroup
        start = match.start(kind)
        if kind == "bad":
            raise IdealSyntaxError(f"unexpected character {match.group(kind)!r}", text, start)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.index = {name: j for j, name in enumerate(variables)}
        self.d = len(variables)
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _fail(self, message: str, tok=None):
        position = tok[2] if tok else len(self.text)
        raise IdealSyntaxError(message, self.text, position)

    def ideal(self) -> List[ExponentVector]:
        if not self.tokens:
            return []
        first = self._peek()
        if first[0] == "int" and first[1] == "0" and len(self.tokens) == 1:
            return []
        gens = [self.monomial()]
        while self._peek() is not None:
            tok = self._take()
            if tok[1] != ",":
                self._fail(f"expected ',' but found {tok[1]!r}", tok)
            gens.append(self.monomial())
        return gens

    def monomial(self) -> ExponentVector:
        tok = self._peek()
        if tok is None:
            self._fail("expected a monomial")
        if tok[0] == "int":
            if tok[1] != "1":
                self._fail(f"coefficient {tok[1]!r} is not allowed, monomials are monic", tok)
            self._take()
            return (0,) * self.d
        exps = [0] * self.d
        self.factor(exps)
        while self._peek() is not None and self._peek()[1] == "*":
            self._take()
            self.factor(exps)
        return tuple(exps)

    def factor(self, exps: List[int]) -> None:
        tok = self._take()
        if tok is None or tok[0] != "name":
            self._fail("expected a variable", tok)
        if tok[1] not in self.index:
            raise UnknownVariableError(f"unknown variable {tok[1]!r}", self.text, tok[2])
        k = 1
        nxt = self._peek()
        if nxt is not None and nxt[1] == "^":
            self._take()
            exp_tok = self._take()
            if exp_tok is None or exp_tok[0] != "int":
                self._fail("exponent must be a positive integer", exp_tok)
            k = int(exp_tok[1])
            if k == 0:
                self._fail("exponent must be a positive integer", exp_tok)
        exps[self.index[tok[1]]] += k


def parse_monomial(text: str, variables: Sequence[str]) -> ExponentVector:
    parser = _Parser(text, variables)
    mono = parser.monomial()
    leftover = parser._peek()
    if leftover is not None:
        parser._fail(f"unexpected {leftover[1]!r} after monomial", leftover)
    return mono


def parse_ideal(text: str, variables: Sequence[str]) -> MonomialIdeal:
    """Parses inline text such as "x^7, y^3, z^2" over the given variables."""
    if not variables:
        raise IdealSyntaxError("no variables declared", text)
    gens = _Parser(text, variables).ideal()
    return minimalize(gens, len(variables))


def format_monomial(m: Sequence[int], variables: Sequence[str]) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(variables, m) if e]
    return "*".join(factors) if factors else "1"


def format_ideal(I: MonomialIdeal, variables: Optional[Sequence[str]] = None) -> str:
    variables = variables or default_variables(I.dim)
    if len(variables) != I.dim:
        raise DimensionError(I.dim, len(variables), what="variable list")
    if I.is_zero:
        return "0"
    return ", ".join(format_monomial(g, variables) for g in I.generators)


def ideal_to_payload(I: MonomialIdeal, variables: Optional[Sequence[str]] = None) -> IdealPayload:
    variables = list(variables or default_variables(I.dim))
    return IdealPayload(vars=variables, generators=[list(g) for g in I.generators])


def ideal_from_payload(payload: IdealPayload) -> MonomialIdeal:
    if not payload.vars:
        raise IdealSyntaxError("no variables declared")
    if len(set(payload.vars)) != len(payload.vars):
        raise IdealSyntaxError("duplicate variable name", ", ".join(payload.vars))
    return minimalize(payload.generators, len(payload.vars))


def load_ideal_file(path: str) -> Tuple[MonomialIdeal, List[str]]:
    """Reads the JSON ideal form {"vars": [...], "generators": [[...], ...]}."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise IdealSyntaxError(f"{path}: expected a JSON object with \"vars\" and \"generators\"")
    payload = IdealPayload.model_validate(data)
    return ideal_from_payload(payload), payload.vars


def ideal_from_request(request: IdealRequest) -> Tuple[MonomialIdeal, List[str]]:
    """Resolves an HTTP request body, inline text or JSON form, to (ideal, variable names)."""
    if request.payload is not None:
        return ideal_from_payload(request.payload), list(request.payload.vars)
    if not request.vars:
        raise IdealSyntaxError("inline ideals need 'vars'", request.ideal or "")
    if len(set(request.vars)) != len(request.vars):
        raise IdealSyntaxError("duplicate variable name", ", ".join(request.vars))
    return parse_ideal(request.ideal, request.vars), list(request.vars)
