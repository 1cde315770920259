"""CSV / JSON emission.  Output is byte-stable for a given report."""
from __future__ import annotations

import json
import os
from pathlib import Path

OUTPUT_DIR_ENV = "QUASIZENO_OUTPUT_DIR"


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def csv_text(report) -> str:
    lines = [",".join(report.header)]
    for row in report.rows:
        lines.append(",".join([*(_fmt(v) for v in row), report.mode]))
    return "\n".join(lines) + "\n"


def _json_value(value):
    if isinstance(value, float):
        return float(_fmt(value))
    return value


def json_text(report) -> str:
    doc = {
        "metadata": report.metadata,
        "header": report.header,
        "rows": [[*(_json_value(float(v)) for v in row), report.mode] for row in report.rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def resolve_output(prefix) -> Path:
    """Relative prefixes are placed under ``$QUASIZENO_OUTPUT_DIR`` when it is set."""
    path = Path(prefix)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def emit_report(report, fmt: str = "csv", prefix=None) -> list[Path]:
    """Write ``<prefix>.<mode>.<fmt>``; compare reports write one file per part."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unsupported format {fmt!r}")
    if prefix is None:
        prefix = report.metadata.get("config", {}).get("output", "run")
    prefix = resolve_output(prefix)
    render = csv_text if fmt == "csv" else json_text
    parts = report.parts or {report.mode: report}
    written = []
    for mode, part in parts.items():
        target = prefix.with_name(f"{prefix.name}.{mode}.{fmt}")
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, "w", newline="") as fh:
                fh.write(render(part))
        except OSError as exc:
            raise OSError(f"cannot write report to {target}: {exc.strerror or exc}") from exc
        written.append(target)
    return written
