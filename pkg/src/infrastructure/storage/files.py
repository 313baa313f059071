"""Artifact Files.

This module writes generated text artifacts (DIMACS instances, witness
tables) into an output directory.
"""

from collections.abc import Mapping
from pathlib import Path

from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def write_text_files(out_dir: Path, files: Mapping[str, str]) -> list[Path]:
    """Write each named text into ``out_dir``, creating it if needed.

    Args:
        out_dir: Target directory.
        files: File name to content.

    Returns:
        Written paths in the order given.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in files.items():
        path = out_dir / name
        path.write_text(text, encoding="ascii")
        written.append(path)
    logger.info("artifacts_written", out_dir=str(out_dir), count=len(written))
    return written
