# SPDX-License-Identifier: MPL-2.0
from pydantic import BaseModel, ConfigDict


class MettaBaseModel(BaseModel):
    """Strict base for configuration values and run reports.

    Unknown fields are rejected, and reports that are updated while a
    program runs are re-validated on every assignment.
    """

    model_config = ConfigDict(extra="forbid", strict=True, validate_assignment=True)
