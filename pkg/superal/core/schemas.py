# superal/core/schemas.py
from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from superal.core.settings import REPORT_SCHEMA_VERSION, TOOLKIT_VERSION


class Witness(BaseModel):
    """A basis or sampled tuple on which a claimed identity failed."""
    model_config = ConfigDict(extra="forbid")

    indices: List[int] = Field(..., description="Basis indices, or the sample number for random runs.")
    value: List[List[str]] = Field(default_factory=list, description="Offending matrix, exact entries as strings.")
    note: Optional[str] = None


class VerificationReport(BaseModel):
    """Machine-readable record of one verification run or check suite."""
    model_config = ConfigDict(extra="forbid")

    schema_version: str = REPORT_SCHEMA_VERSION
    toolkit_version: str = TOOLKIT_VERSION
    claim: str
    mode: Literal["exact", "modular", "random", "suite"]
    status: Literal["verified", "falsified"] = "verified"
    parameters: Dict[str, str] = Field(default_factory=dict)
    tuples_checked: int = 0
    failures: List[Witness] = Field(default_factory=list)
    primes: List[int] = Field(default_factory=list)
    coefficient_bound: Optional[int] = None
    seed: Optional[int] = None
    checks: Dict[str, bool] = Field(default_factory=dict)
    elapsed_s: Optional[float] = None

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def with_failures(self, failures: List[Witness]) -> "VerificationReport":
        status = "falsified" if failures or not all(self.checks.values()) else "verified"
        return self.model_copy(update={"failures": failures, "status": status})
