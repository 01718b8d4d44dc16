from __future__ import annotations

from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .codec import GraphFormat
from .const import CENSUS_MAX_SPACE, MONTE_CARLO_SAMPLES
from .extremal import BoundSelector, GraphFilter

Command = Literal[
    "mis",
    "mibs",
    "bounds",
    "curves",
    "solve",
    "pipeline",
    "search",
    "verify-theorem2",
]

GRAPH_INPUT_COMMANDS = ("mis", "mibs")


class Limits(BaseModel):
    census_max_space: int = Field(default=CENSUS_MAX_SPACE, ge=1)
    """Largest number of transversals counted exhaustively"""
    monte_carlo_samples: int = Field(default=MONTE_CARLO_SAMPLES, ge=1)
    """Samples drawn when the transversal space is too large"""


class RunConfig(BaseModel):
    """Validated command-line configuration"""

    command: Command
    input: Optional[Path] = None
    """Graph file: one graph6 string per line, or a single edge list"""
    format: GraphFormat = "auto"
    output: Literal["json", "csv"] = "json"
    graph_filter: GraphFilter = "none"
    bound: BoundSelector = "eppstein"
    n: Optional[int] = Field(default=None, ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    eta: float = Field(default=0.0, ge=0.0, le=1.0)
    xi: Optional[float] = Field(default=None, ge=0.0)
    """Defaults to the solved ``eps``"""
    margin: float = Field(default=1e-3, ge=0.0)
    resolution: int = Field(default=81, ge=2)
    seed: int = 0
    workers: int = Field(default=1, ge=1)
    I0: Optional[list[int]] = None
    """Defaults to the lexicographically first minimum maximal independent set"""
    S: list[int] = Field(default_factory=list)
    corpus: Optional[int] = Field(default=None, ge=1)
    """Run the pipeline on this many seeded instances instead of ``input``"""
    max_n: int = Field(default=7, ge=0)
    store: Optional[Path] = None
    resume: bool = False
    mibs: bool = False
    limits: Limits = Field(default_factory=Limits)

    @model_validator(mode="before")
    @classmethod
    def _drop_unset(cls, data: Any) -> Any:
        if isinstance(data, dict):
            return {key: value for key, value in data.items() if value is not None}
        return data

    @model_validator(mode="after")
    def _check_command(self) -> "RunConfig":
        if self.command in GRAPH_INPUT_COMMANDS and self.input is None:
            raise ValueError(f"{self.command} needs an input graph")
        if self.command == "pipeline" and self.input is None and self.corpus is None:
            raise ValueError("pipeline needs an input graph or --corpus")
        if self.command in ("bounds", "search") and self.n is None:
            raise ValueError(f"{self.command} needs --n")
        if self.command == "bounds" and self.k is None:
            raise ValueError("bounds needs --k")
        if self.resume and self.store is None:
            raise ValueError("--resume needs --store")
        return self
