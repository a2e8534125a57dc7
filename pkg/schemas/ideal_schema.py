from operator import le
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, ValidationInfo, field_validator, model_validator

# A point of the exponent lattice; (7, 0, 0) stands for X^7.
ExponentVector = Tuple[NonNegativeInt, ...]


def divides(g: Tuple[int, ...], m: Tuple[int, ...]) -> bool:
    """x^g divides x^m, i.e. g <= m componentwise."""
    return all(map(le, g, m))


def minimal_antichain(vectors: Iterable[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    """
    The <=-minimal elements of a finite set of exponent vectors, in
    lexicographically descending order.
    """
    kept: List[Tuple[int, ...]] = []
    # A vector can only be divided by one of no larger total degree.
    for v in sorted(set(vectors), key=sum):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


class MonomialIdeal(BaseModel):
    """
    A monomial ideal in `dim` variables, stored as its unique minimal
    generating set. The zero ideal has no generators; the unit ideal is
    generated by the origin.
    """
    model_config = ConfigDict(frozen=True)

    dim: PositiveInt
    generators: Tuple[ExponentVector, ...] = ()

    @field_validator("generators")
    @classmethod
    def _canonical_generators(cls, value, info: ValidationInfo):
        dim = info.data.get("dim")
        for g in value:
            if dim is not None and len(g) != dim:
                raise ValueError(f"generator {g} has length {len(g)}, expected {dim}")
        return minimal_antichain(value)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)


class ClosureCertificate(BaseModel):
    """
    Integral-dependence witness: rho * m = sum(count_i * g_i) + slack with
    sum(count_i) = rho * power, so (x^m)^rho lies in (I^power)^rho.
    Keys of factor_counts index the ideal's stored generators.
    """
    rho: PositiveInt
    power: PositiveInt = 1
    factor_counts: Dict[int, NonNegativeInt]
    slack: ExponentVector


class IdealPayload(BaseModel):
    """JSON form of an ideal: variable names plus equal-length exponent rows."""
    vars: List[str] = Field(..., examples=[["x", "y", "z"]])
    generators: List[List[NonNegativeInt]] = Field(..., examples=[[[7, 0, 0], [0, 3, 0], [0, 0, 2]]])

    @model_validator(mode="after")
    def _rows_match_vars(self):
        for row in self.generators:
            if len(row) != len(self.vars):
                raise ValueError(f"generator {row} does not match {len(self.vars)} variables")
        return self


class IdealRequest(BaseModel):
    """Schema for an ideal given either inline or in JSON form."""
    vars: Optional[List[str]] = Field(None, examples=[["x", "y", "z"]])
    ideal: Optional[str] = Field(None, examples=["x^7, y^3, z^2"])
    payload: Optional[IdealPayload] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.ideal is None) == (self.payload is None):
            raise ValueError("give exactly one of 'ideal' (inline text) or 'payload' (JSON form)")
        return self


class PowerRequest(IdealRequest):
    """Schema for operations on the n-th power of an ideal."""
    n: PositiveInt = Field(1, examples=[2])


class MonomialRequest(IdealRequest):
    """Schema for membership-style queries about one monomial."""
    monomial: str = Field(..., examples=["y*z^2"])
    n: PositiveInt = Field(1, examples=[1])


class WeightRequest(IdealRequest):
    """Schema for monomial valuations; weights are rationals such as '3/2'."""
    weights: List[str] = Field(..., examples=[["2", "2", "1"]])


class IdealResponse(BaseModel):
    """Schema for returning an ideal."""
    vars: List[str]
    generators: List[List[int]]
    text: str
    mu: int


class InvariantsResponse(BaseModel):
    """Schema for the generator and length invariants of an ideal."""
    vars: List[str]
    text: str
    mu: int
    colength: int | str
    v_quotient: int
    rsop_count: int
    m_primary: bool
    order: Optional[int] = None


class CertificateResponse(BaseModel):
    """Schema for a closure membership answer with its witness."""
    member: bool
    monomial: str
    certificate: Optional[ClosureCertificate] = None
