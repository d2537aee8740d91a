"""Artifact writers. Output bytes depend only on the values written."""

import csv
import json
import logging
import math
import subprocess
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    """CSV text of one value; reals with 17 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".17g")
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a header line and one line per row."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
    logger.info("wrote %s", path)
    return path


def write_json(path: Path, payload: Dict[str, Any]) -> Path:
    """Write payload with sorted keys and a trailing newline."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
        fh.write("\n")
    logger.info("wrote %s", path)
    return path


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    logger.info("wrote %s", path)
    return path


@lru_cache(maxsize=1)
def version_string() -> str:
    """`git describe` of the source tree, or the package version outside a checkout."""
    from inexact_euler import __version__

    try:
        result = subprocess.run(
            ["git", "describe", "--tags", "--always", "--dirty"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True,
            text=True,
            check=True,
            timeout=5,
        )
    except (OSError, subprocess.SubprocessError):
        return __version__
    return result.stdout.strip() or __version__


def with_provenance(payload: Dict[str, Any], config: Dict[str, Any], command: str) -> Dict[str, Any]:
    """Attach the command, resolved config and version to a JSON payload."""
    return {**payload, "command": command, "config": config, "version": version_string()}


def columns(rows: List[Dict[str, Any]], header: Sequence[str]) -> List[List[Any]]:
    """Rows of dicts to rows of cells in header order."""
    return [[row[name] for name in header] for row in rows]
