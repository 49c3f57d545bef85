"""Canonical JSON serialization for entries.

The canonical form is the byte-level contract shared by the store, the HTTP
API, and the export format: UTF-8, keys sorted, no insignificant whitespace,
and absent optional fields omitted entirely.  Serializing equal entries
always produces identical bytes, and parsing canonical bytes reproduces the
original entry exactly.
"""

from __future__ import annotations

import json
from typing import Any

from pydantic import ValidationError

from langcat.errors import EntryParseError
from langcat.schema.types import CatalogueEntry


def _format_loc(loc: tuple[Any, ...]) -> str:
    parts: list[str] = []
    for piece in loc:
        if isinstance(piece, int):
            parts.append(f"[{piece}]")
        else:
            # Union branch names in pydantic locs are type hints, not fields.
            if parts and piece in ("str", "OtherText", "constrained-str"):
                continue
            parts.append(("." if parts else "") + str(piece))
    return "".join(parts)


def parse_error_from(exc: ValidationError) -> EntryParseError:
    """Convert a pydantic error into a parse error naming the first bad field."""
    first = exc.errors()[0]
    path = _format_loc(tuple(first["loc"]))
    return EntryParseError(f"{path}: {first['msg']}", field_path=path)


def entry_to_canonical_json(entry: CatalogueEntry) -> bytes:
    data = entry.model_dump(mode="json", exclude_none=True)
    return json.dumps(data, ensure_ascii=False, sort_keys=True, separators=(",", ":")).encode(
        "utf-8"
    )


def entry_from_json(data: bytes | str) -> CatalogueEntry:
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise EntryParseError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise EntryParseError("entry JSON must be an object")
    try:
        return CatalogueEntry.model_validate(raw)
    except ValidationError as exc:
        raise parse_error_from(exc) from None
