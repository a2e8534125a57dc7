from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, NonNegativeInt, PositiveInt, model_validator

from schemas.ideal_schema import ExponentVector
from schemas.normality_schema import Verdict


class SweepRecord(BaseModel):
    """One grid cell of an (a, b, c)-family experiment."""
    a: NonNegativeInt
    b: Optional[NonNegativeInt] = None  # the two-variable family has no b
    c: NonNegativeInt
    is_closed: bool
    bound_holds: bool
    normal_verdict: Verdict
    witness: Optional[ExponentVector] = None
    mu: int
    colength: int
    in_hypothesis: bool = True
    violation: Optional[str] = None


class CorpusSpec(BaseModel):
    """Shape of a seeded random corpus of integrally closed m-primary ideals."""
    dim: PositiveInt = Field(3, examples=[3])
    trials: NonNegativeInt = Field(200, examples=[200])
    seed: NonNegativeInt = Field(..., lt=1 << 64, examples=[20240917])
    box: PositiveInt = Field(4, examples=[4])
    min_generators: PositiveInt = 1
    max_generators: PositiveInt = 5

    @model_validator(mode="after")
    def _generator_range(self):
        if self.min_generators > self.max_generators:
            raise ValueError("min_generators exceeds max_generators")
        return self


class CheckFailure(BaseModel):
    """A single failed expectation, as input / expected / got."""
    input: Any
    expected: Any
    got: Any


class CheckReport(BaseModel):
    """Schema for one verification check."""
    check_name: str
    params: Dict[str, Any] = {}
    passes: bool
    failures: List[CheckFailure] = []
    details: Dict[str, Any] = {}
