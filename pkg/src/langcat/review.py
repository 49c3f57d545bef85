"""Second-reviewer validation workflow.

A reviewer opens a session on an entry's latest version, walks the
applicable sections, optionally edits answers, and ticks each section off.
Finalizing persists a ``ValidationRecord``; when edits were made, a new
entry version attributed to the reviewer is saved first.  An entry counts
as validated once at least one complete record exists for it.

Sessions are in-memory, single-writer objects.  Concurrent sessions on one
entry are fine: they serialize at finalize through the store's per-uid
write lock, and records are append-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from langcat.errors import (
    ConflictingFinalizeError,
    SectionNotApplicableError,
    ValidationFailedError,
)
from langcat.schema.sections import applicable_sections, apply_section_edit
from langcat.schema.types import CatalogueEntry
from langcat.schema.validation import validate_entry
from langcat.store import Author, Store, ValidationRecord, now_iso


@dataclass
class ValidationSession:
    uid: str
    validator: Author
    base_version: int
    entry: CatalogueEntry
    checks: dict[str, bool]
    edited: set[str] = field(default_factory=set)
    finalized: bool = False


def begin_validation(store: Store, uid: str, validator: Author) -> ValidationSession:
    """Open a review session over the latest version of ``uid``."""
    entry = store.load_latest(uid)
    return ValidationSession(
        uid=uid,
        validator=validator,
        base_version=store.latest_version_no(uid),
        entry=entry,
        checks={name: False for name in sorted(applicable_sections(entry.rtype))},
    )


def check_section(
    store: Store,
    session: ValidationSession,
    section: str,
    edit: Any = None,
) -> ValidationSession:
    """Mark a section as reviewed, applying ``edit`` to it first if given.

    An edit must leave the entry valid (warnings allowed); otherwise
    ``ValidationFailedError`` is raised and the section stays unchecked.
    """
    if section not in session.checks:
        raise SectionNotApplicableError(
            f"section {section!r} does not apply to a {session.entry.rtype} entry",
            field_path=section,
        )
    if edit is not None:
        candidate = apply_section_edit(session.entry, section, edit)
        catalogue = store.entries()
        catalogue[session.uid] = candidate
        report = validate_entry(candidate, catalogue)
        if not report.ok:
            raise ValidationFailedError(report)
        if candidate != session.entry:
            session.entry = candidate
            session.edited.add(section)
    session.checks[section] = True
    return session


def finalize_validation(
    store: Store, session: ValidationSession
) -> tuple[ValidationRecord, int | None]:
    """Persist the session's outcome; returns the record and, when edits
    were made, the newly saved version number."""
    if session.finalized:
        raise ConflictingFinalizeError(
            f"validation session for {session.uid!r} was already finalized"
        )
    new_version: int | None = None
    if session.edited:
        _, new_version = store.save_entry(session.entry, session.validator)
    record = ValidationRecord(
        uid=session.uid,
        base_version=session.base_version,
        validator=session.validator,
        section_checks=dict(session.checks),
        edited_sections=tuple(sorted(session.edited)),
        saved_at=now_iso(),
        complete=all(session.checks.values()),
    )
    store.add_validation_record(record)
    session.finalized = True
    return record, new_version
