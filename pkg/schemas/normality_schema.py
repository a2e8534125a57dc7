from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, PositiveInt

from schemas.ideal_schema import ExponentVector, IdealRequest, MonomialIdeal


class Verdict(str, Enum):
    NORMAL = "normal"
    NOT_NORMAL = "not_normal"
    UNDETERMINED = "undetermined"


class BoundSource(str, Enum):
    RRV = "rrv"
    USER = "user"


class CheckedPower(BaseModel):
    """Outcome of comparing the closure of I^n with I^n."""
    n: PositiveInt
    is_closed: bool


class FirstFailure(BaseModel):
    """Least power whose closure is larger, with a monomial in the difference."""
    n: PositiveInt
    witness: ExponentVector


class NormalityReport(BaseModel):
    """Schema for the result of a normality check."""
    ideal: MonomialIdeal
    checked_powers: List[CheckedPower]
    verdict: Verdict
    first_failure: Optional[FirstFailure] = None
    bound_used: PositiveInt
    bound_source: BoundSource
    note: Optional[str] = None


class NormalityRequest(IdealRequest):
    """Schema for requesting a normality check."""
    max_power: Optional[PositiveInt] = Field(None, examples=[4])


class WitnessResponse(BaseModel):
    """Schema for returning a first-failure witness."""
    n: int
    witness: Optional[ExponentVector] = None
    monomial: Optional[str] = None
