# SPDX-License-Identifier: MPL-2.0
from metta_kb.schema.base import DirectiveReport, ProgramReport
from metta_kb.schema.config import CliConfig, EvalConfig

__all__ = ["CliConfig", "DirectiveReport", "EvalConfig", "ProgramReport"]
