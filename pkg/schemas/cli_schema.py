from enum import Enum
from typing import Optional

from pydantic import BaseModel, NonNegativeInt, PositiveInt, model_validator

IDEAL_SUBCOMMANDS = {"closure", "is-closed", "is-normal", "power-closure", "invariants", "witness", "certificate", "order"}


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class CliConfig(BaseModel):
    """Validated command-line configuration for one invocation."""
    subcommand: str
    ideal: Optional[str] = None
    ideal_file: Optional[str] = None
    vars: Optional[str] = None
    format: OutputFormat = OutputFormat.TEXT
    output: Optional[str] = None
    log_level: Optional[str] = None
    n: PositiveInt = 1
    max_power: Optional[PositiveInt] = None
    monomial: Optional[str] = None
    weights: Optional[str] = None
    family: Optional[str] = None
    a_max: Optional[PositiveInt] = None
    c_max: Optional[PositiveInt] = None
    check: Optional[str] = None
    dim: Optional[PositiveInt] = None
    box: Optional[PositiveInt] = None
    trials: Optional[NonNegativeInt] = None
    seed: Optional[NonNegativeInt] = None

    @model_validator(mode="after")
    def _sources(self):
        if self.subcommand in IDEAL_SUBCOMMANDS:
            if (self.ideal is None) == (self.ideal_file is None):
                raise ValueError("give exactly one of --ideal or --ideal-file")
            if self.ideal is not None and not self.vars:
                raise ValueError("--ideal needs --vars")
        if self.format == OutputFormat.CSV and self.subcommand != "sweep":
            raise ValueError("--format csv is only available for sweep")
        if self.seed is not None and self.seed >= 1 << 64:
            raise ValueError("--seed must fit in 64 bits")
        return self
