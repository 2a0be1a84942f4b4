# SPDX-License-Identifier: MPL-2.0
from datetime import datetime
from typing import Literal
from uuid import UUID, uuid4

from pydantic import Field

from metta_kb.schema._pydantic_base import MettaBaseModel


class DirectiveReport(MettaBaseModel):
    """Rendered outcome of one ``!`` directive."""

    directive: str
    results: list[str] = Field(default_factory=list)
    has_error: bool = False

    @property
    def line(self) -> str:
        return "[" + ", ".join(self.results) + "]"


class ProgramReport(MettaBaseModel):
    """Overall status of one program run."""

    program_id: UUID = Field(default_factory=uuid4)
    origin: str = "<string>"
    status: Literal["RUNNING", "COMPLETED_SUCCESS", "COMPLETED_WITH_ERRORS"] = (
        "RUNNING"
    )
    start_time: datetime = Field(default_factory=datetime.now)
    end_time: datetime | None = None
    duration_seconds: float | None = None
    atoms_added: int = 0
    directives: list[DirectiveReport] = Field(default_factory=list)

    @property
    def has_errors(self) -> bool:
        return any(report.has_error for report in self.directives)

    def add_directive(self, report: DirectiveReport) -> None:
        self.directives.append(report)

    def finalize(self) -> None:
        self.status = "COMPLETED_WITH_ERRORS" if self.has_errors else "COMPLETED_SUCCESS"
        self.end_time = datetime.now()
        self.duration_seconds = (self.end_time - self.start_time).total_seconds()
