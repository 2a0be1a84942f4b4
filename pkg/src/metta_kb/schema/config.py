# SPDX-License-Identifier: MPL-2.0
from __future__ import annotations

from typing import Literal

from pydantic import Field, model_validator

from metta_kb.schema._pydantic_base import MettaBaseModel


class EvalConfig(MettaBaseModel):
    max_depth: int = Field(
        1000, ge=1, description="Maximum nesting of evaluation steps."
    )
    typecheck_enabled: bool = Field(
        False, description="Type-check each directive before evaluating it."
    )


class CliConfig(MettaBaseModel):
    mode: Literal["run", "repl"]
    file: str | None = Field(None, description="Program to run in 'run' mode.")
    max_depth: int = Field(1000, ge=1)
    typecheck: bool = False
    quiet: bool = Field(False, description="Suppress the REPL banner and prompts.")

    @model_validator(mode="after")
    def _check_mode(self) -> CliConfig:
        if self.mode == "run" and not self.file:
            raise ValueError("'run' mode requires a program file")
        if self.mode == "repl" and self.file:
            raise ValueError("'repl' mode does not take a program file")
        return self

    def eval_config(self) -> EvalConfig:
        return EvalConfig(max_depth=self.max_depth, typecheck_enabled=self.typecheck)
