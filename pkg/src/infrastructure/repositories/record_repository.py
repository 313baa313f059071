"""Search Record Repository Implementation.

This module contains the JSON-lines implementation of IRecordRepository.
"""

import asyncio
from pathlib import Path

from pydantic import ValidationError

from src.domain.entities.search import SearchRecord
from src.domain.exceptions import DecodeError, DomainValidationError
from src.domain.repositories.record_repository import IRecordRepository
from src.infrastructure.logging.logger import get_logger
from src.infrastructure.storage.models import SearchRecordModel

logger = get_logger(__name__)


class JsonlRecordRepository(IRecordRepository):
    """Append-only record log, one JSON object per line.

    A single writer is enforced with a lock. A torn final line (a run
    killed mid-write) is skipped with a warning; corruption anywhere else
    is an error.
    """

    def __init__(self, path: Path) -> None:
        """Initialize the record repository.

        Args:
            path: The log file; created on first append.
        """
        self._path = path
        self._lock = asyncio.Lock()

    @property
    def path(self) -> Path:
        return self._path

    def _to_entity(self, model: SearchRecordModel) -> SearchRecord:
        """Map a line model to a domain entity.

        Args:
            model: The parsed line.

        Returns:
            SearchRecord domain entity.
        """
        return SearchRecord(
            n=model.n,
            s=model.s,
            bs=model.bs,
            partition=tuple(model.partition),
            status=model.status,
            elapsed=model.elapsed_s,
            function=model.function,
            verified=model.verified,
        )

    def _to_model(self, entity: SearchRecord) -> SearchRecordModel:
        """Map a domain entity to a line model.

        Args:
            entity: The SearchRecord domain entity.

        Returns:
            SearchRecordModel instance.
        """
        return SearchRecordModel(
            n=entity.n,
            s=entity.s,
            bs=entity.bs,
            partition=list(entity.partition),
            status=entity.status,
            elapsed_s=round(entity.elapsed, 6),
            function=entity.function,
            verified=entity.verified,
        )

    def _drop_torn_tail(self) -> None:
        data = self._path.read_bytes()
        if data and not data.endswith(b"\n"):
            with self._path.open("rb+") as f:
                f.truncate(data.rfind(b"\n") + 1)
            logger.warning("record_tail_truncated", path=str(self._path))

    def _write_line(self, line: str) -> None:
        self._path.parent.mkdir(parents=True, exist_ok=True)
        if self._path.exists():
            self._drop_torn_tail()
        with self._path.open("a", encoding="utf-8") as f:
            f.write(line + "\n")
            f.flush()

    def _read_lines(self) -> list[str]:
        if not self._path.exists():
            return []
        return self._path.read_text(encoding="utf-8").splitlines()

    async def append(self, record: SearchRecord) -> None:
        """Append one record."""
        line = self._to_model(record).model_dump_json()
        async with self._lock:
            await asyncio.to_thread(self._write_line, line)
        logger.debug("record_appended", key=str(record.key), status=str(record.status))

    async def list_all(self) -> list[SearchRecord]:
        """List every record in log order."""
        lines = await asyncio.to_thread(self._read_lines)
        records = []
        for number, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                model = SearchRecordModel.model_validate_json(line)
                records.append(self._to_entity(model))
            except (ValidationError, DomainValidationError) as e:
                if number == len(lines):
                    logger.warning("record_skipped", path=str(self._path), line=number)
                    continue
                raise DecodeError(f"{self._path}:{number}: malformed record") from e
        return records

    async def find_point(self, n: int, s: int, bs: int) -> dict[tuple[int, ...], SearchRecord]:
        """Retrieve the latest record per partition for one search point."""
        latest: dict[tuple[int, ...], SearchRecord] = {}
        for record in await self.list_all():
            if (record.n, record.s, record.bs) == (n, s, bs):
                latest[record.partition] = record
        return latest
