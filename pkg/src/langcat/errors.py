"""Shared exception types.

Each exception carries a stable machine-readable ``kind`` so the HTTP layer
and the CLI can map failures without string matching.
"""

from __future__ import annotations


class CatalogueError(Exception):
    """Base class for all catalogue failures."""

    kind = "catalogue-error"

    def __init__(self, detail: str, field_path: str | None = None):
        super().__init__(detail)
        self.detail = detail
        self.field_path = field_path


class EntryParseError(CatalogueError):
    """Malformed entry JSON or an unknown vocabulary variant."""

    kind = "parse-error"


class SectionNotApplicableError(CatalogueError):
    """A section edit targeted a section the resource type does not carry."""

    kind = "section-not-applicable"


class ValidationFailedError(CatalogueError):
    """An entry failed validation; ``report`` holds the violation records."""

    kind = "validation-failed"

    def __init__(self, report):
        paths = ", ".join(f"{v.rule}@{v.path}" for v in report.violations)
        super().__init__(f"entry failed validation: {paths}")
        self.report = report


class NotFoundError(CatalogueError):
    kind = "not-found"


class ConflictingFinalizeError(CatalogueError):
    """A validation session was finalized twice."""

    kind = "conflicting-finalize"


class StorageIOError(CatalogueError):
    kind = "storage-io"


class MalformedCsvError(CatalogueError):
    """CSV header does not match the documented import format."""

    kind = "malformed-csv"
