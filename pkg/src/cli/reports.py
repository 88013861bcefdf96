"""
Report emission: JSON lines or CSV, to a file or stdout
"""
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, IO, List, Optional, Sequence

from .. import __version__
from ..lib.errors import ReportError
from ..lib.logging import get_logger

logger = get_logger(__name__)

SIGNIFICANT_DIGITS = 12
LEADERBOARD_COLUMNS = ("rank", "graph6", "rho", "planar", "cl_free", "partition")


def round_significant(value: Any) -> Any:
    """Round every float in a nested record to 12 significant digits"""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return value
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, dict):
        return {key: round_significant(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_significant(item) for item in value]
    return value


def stamp(record: Dict[str, Any], config_hash: str) -> Dict[str, Any]:
    return {**record, "version": __version__, "config_hash": config_hash}


def render_json_lines(records: Sequence[Dict[str, Any]], config_hash: str) -> str:
    lines = [
        json.dumps(round_significant(stamp(record, config_hash)), ensure_ascii=False)
        for record in records
    ]
    return "\n".join(lines) + "\n"


def _csv_cell(value: Any) -> Any:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    if value is None:
        return ""
    return value


def render_csv(records: Sequence[Dict[str, Any]], config_hash: str) -> str:
    """
    Leaderboards (records carrying a "leaderboard" list) flatten to one row
    per entry sorted by descending rho; anything else writes one row per
    record with nested values as JSON.
    """
    if all("leaderboard" in record for record in records):
        rows = []
        for record in records:
            for entry in record["leaderboard"]:
                rows.append({column: entry.get(column) for column in LEADERBOARD_COLUMNS})
        rows.sort(key=lambda row: (-row["rho"], row["graph6"]))
        columns: List[str] = list(LEADERBOARD_COLUMNS)
    else:
        rows = list(records)
        columns = []
        for record in rows:
            columns.extend(key for key in record if key not in columns)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns + ["version", "config_hash"], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        stamped = stamp(round_significant(dict(row)), config_hash)
        writer.writerow({key: _csv_cell(stamped.get(key)) for key in writer.fieldnames})
    return buffer.getvalue()


def emit_report(
    records: Sequence[Dict[str, Any]],
    fmt: str = "json",
    out: Optional[str] = None,
    config_hash: str = "",
    stream: Optional[IO] = None,
) -> Optional[Path]:
    """
    Serialize `records` and write them to `out` (or `stream`, default stdout).

    Raises:
        ReportError: on empty input, an unknown format or an unwritable path;
            no file is created in any of these cases
    """
    if not records:
        raise ReportError("no results to report")
    if fmt == "json":
        text = render_json_lines(records, config_hash)
    elif fmt == "csv":
        text = render_csv(records, config_hash)
    else:
        raise ReportError(f"unknown report format {fmt!r}")

    if out is None:
        target = stream if stream is not None else sys.stdout
        target.write(text)
        target.flush()
        return None

    path = Path(out)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ReportError(f"cannot write report to {path}: {e}") from e
    logger.info("report_written", path=str(path), records=len(records), format=fmt)
    return path
