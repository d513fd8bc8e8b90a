from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import DEFAULT_WORKERS, ENUMERATION_CAP, FIXTURES_DIR, LOG_LEVEL


class OutputFormat(str, Enum):
    TEXT = "text"
    MD = "md"
    TSV = "tsv"
    JSON = "json"


class RunConfig(BaseModel):
    """Validated command-line options for one invocation."""

    command: str
    dynkin_type: Optional[str] = None
    quiver: Optional[str] = None
    quiver_file: Optional[str] = None
    vertex: Optional[int] = Field(default=None, ge=1)
    expect: Optional[str] = None
    permutation: Optional[str] = None
    fmt: OutputFormat = OutputFormat.TEXT
    workers: int = Field(default=DEFAULT_WORKERS, ge=1)
    cap: int = Field(default=ENUMERATION_CAP, ge=1)
    fixtures: str = FIXTURES_DIR
    out: Optional[str] = None
    closure: bool = True
    show_orbits: bool = False
    json_out: Optional[str] = None
    log_level: str = LOG_LEVEL

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "command": "verify-good-mutation",
                "quiver": "A7@E6",
                "vertex": 3,
                "fmt": "json",
                "workers": 1,
            }
        }
    )

    @model_validator(mode="after")
    def check_single_input(self):
        if self.quiver is not None and self.quiver_file is not None:
            raise ValueError("give the quiver inline, as a label, or as a file, not several")
        if self.permutation is not None and self.expect is None:
            raise ValueError("--perm needs --expect")
        return self

    def has_quiver(self) -> bool:
        return self.quiver is not None or self.quiver_file is not None
