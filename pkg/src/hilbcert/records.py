"""Line-oriented structured output.

A document is a sequence of JSON objects, one per line, keys sorted, no
insignificant whitespace, ASCII only, trailing newline.  The first record is
always the envelope ``{"record": "envelope", "schema_version": ..., ...}``.
Writing is canonical, so ``write_records(read_records(text)) == text`` for
any document this module produced.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

SCHEMA_VERSION = "1"


class RecordError(ValueError):
    pass


def dump_record(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def write_records(records: Iterable[dict[str, Any]]) -> str:
    return "".join(dump_record(r) + "\n" for r in records)


def envelope(command: str, inputs: dict[str, Any]) -> dict[str, Any]:
    return {
        "record": "envelope",
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
    }


def read_records(text: str) -> list[dict[str, Any]]:
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordError(f"line {lineno}: {exc}") from exc
        if not isinstance(obj, dict) or "record" not in obj:
            raise RecordError(f"line {lineno}: not a record object")
        records.append(obj)
    if not records or records[0]["record"] != "envelope":
        raise RecordError("document must start with an envelope record")
    version = records[0].get("schema_version")
    if version != SCHEMA_VERSION:
        raise RecordError(f"unsupported schema_version {version!r}")
    return records
