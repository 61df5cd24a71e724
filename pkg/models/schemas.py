"""Pydantic models for command-line runs and their reports."""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import settings


# ==================== Run Configuration ====================

class RunConfig(BaseModel):
    """One invocation: the command, its inputs and the numeric knobs."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    command: str = Field(..., description="Command name, e.g. 'gog wp'")
    inputs: List[str] = Field(default_factory=list, description="Files, builtin:NAME references and words")
    radius: Optional[int] = Field(default=None, gt=0, description="Ball radius")
    fuel: Optional[int] = Field(default=None, gt=0, description="Rewrite step budget")
    k: Optional[int] = Field(default=None, gt=0, description="Cut weight or grammar constant")
    lambda_: Optional[int] = Field(default=None, gt=0, alias="lambda", description="Neighbourhood radius for blocks")
    margin: Optional[int] = Field(default=None, gt=0, description="Path window margin")
    depth: Optional[int] = Field(default=None, gt=0, description="Bass-Serre tree depth")
    max_k: Optional[int] = Field(default=None, gt=0, description="Largest cut weight enumerated")
    generators: Optional[List[str]] = Field(default=None, description="Generator words, letters joined by '.'")
    format: Literal["text", "json", "dot"] = Field(default="text", description="Report format")
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0, description="Seed for randomized checks")

    @field_validator("generators")
    @classmethod
    def _non_empty_generators(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        if value is not None and (not value or any(not g.strip(".") for g in value)):
            raise ValueError("generators must be non-empty words")
        return value

    def generator_words(self) -> Optional[List[tuple]]:
        if self.generators is None:
            return None
        return [tuple(x for x in g.split(".") if x) for g in self.generators]


# ==================== Reports ====================

class ReportEnvelope(BaseModel):
    """JSON report: schema version, command name and either a result or an error."""
    schema_version: int = Field(default=settings.REPORT_SCHEMA_VERSION, serialization_alias="schema")
    command: str
    result: Optional[Dict[str, Any]] = None
    error: Optional[Dict[str, Any]] = None

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)
