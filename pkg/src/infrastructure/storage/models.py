"""Search Record Line Model.

This module defines the pydantic model for one line of the record log.
"""

from pydantic import BaseModel, ConfigDict, Field

from src.domain.entities.search import VerdictStatus


class SearchRecordModel(BaseModel):
    """One JSON line of the record log.

    This model is the storage schema and should NOT be exposed outside
    the Infrastructure layer. Always map to domain entities.
    """

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1)
    s: int = Field(..., ge=0)
    bs: int = Field(..., ge=1)
    partition: list[int] = Field(..., min_length=1)
    status: VerdictStatus
    elapsed_s: float = Field(..., ge=0)
    function: str | None = Field(None, description="Truth-table text of the decoded model")
    verified: bool = False
