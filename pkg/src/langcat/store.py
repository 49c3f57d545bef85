"""Append-only, versioned entry persistence.

Layout: one directory per uid under the store root, holding ``v{n}.json``
(the canonical entry bytes, human-readable and diff-friendly), ``index.json``
(version metadata: who saved each version and when), and
``validations.json`` (review records, see ``review``).  Nothing is ever
deleted or rewritten; a save appends the next version.

Writes go through a temp file plus ``os.replace`` so readers never observe a
torn file, and are serialized per uid; saves to different uids may run in
parallel.  Reads are lock-free against the in-memory cache of latest
entries.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Mapping

from pydantic import BaseModel, ConfigDict, ValidationError

from langcat import geo, langtag
from langcat.errors import NotFoundError, StorageIOError, ValidationFailedError
from langcat.schema.canonical import entry_from_json, entry_to_canonical_json
from langcat.schema.types import CatalogueEntry
from langcat.schema.validation import validate_entry


class Author(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    email: str


class EntryVersion(BaseModel):
    """One saved version of an entry; ``payload`` is its canonical JSON."""

    model_config = ConfigDict(frozen=True)

    uid: str
    version_no: int
    saved_at: str
    author: Author
    payload: bytes

    def entry(self) -> CatalogueEntry:
        return entry_from_json(self.payload)


class ValidationRecord(BaseModel):
    """Outcome of one review pass over an entry version."""

    model_config = ConfigDict(frozen=True)

    uid: str
    base_version: int
    validator: Author
    section_checks: dict[str, bool]
    edited_sections: tuple[str, ...] = ()
    saved_at: str
    complete: bool


class SearchFilter(BaseModel):
    """Conjunctive entry filter; None clauses match everything."""

    model_config = ConfigDict(frozen=True)

    rtype: str | None = None
    group: str | None = None
    macroarea: str | None = None
    license_property: str | None = None
    media: str | None = None
    custodian_type: str | None = None
    pii_contains: str | None = None
    q: str | None = None

    def is_empty(self) -> bool:
        return all(getattr(self, name) is None for name in type(self).model_fields)

    def matches(self, entry: CatalogueEntry) -> bool:
        if self.rtype is not None and entry.rtype != self.rtype:
            return False
        if self.group is not None and self.group not in entry_groups(entry):
            return False
        if self.macroarea is not None:
            areas = {
                geo.resolve_location(loc).macroarea for loc in entry.locations
            } - {None}
            if self.macroarea not in areas:
                return False
        if self.license_property is not None:
            if entry.availability is None:
                return False
            if self.license_property not in entry.availability.license.properties:
                return False
        if self.media is not None:
            if entry.media is None or self.media not in entry.media.media:
                return False
        if self.custodian_type is not None:
            if entry.custodian is None or entry.custodian.ctype != self.custodian_type:
                return False
        if self.pii_contains is not None:
            if entry.availability is None:
                return False
            answer = entry.availability.pii.contains or "answer_missing"
            if answer != self.pii_contains:
                return False
        if self.q is not None:
            needle = self.q.lower()
            hay = (entry.general.name + "\n" + entry.general.description).lower()
            if needle not in hay:
                return False
        return True


def entry_groups(entry: CatalogueEntry) -> frozenset[str]:
    """Distinct target groups an entry's language selections map into."""
    groups = set()
    for sel in entry.languages:
        if sel.group is not None:
            groups.add(sel.group)
        if sel.tag is not None:
            derived = langtag.group_of_text(sel.tag)
            if derived is not None:
                groups.add(derived)
    return frozenset(groups)


@dataclass(frozen=True)
class CatalogueSnapshot:
    """Immutable view of the catalogue at one point in time.

    ``entries`` holds the parsed latest version per uid; ``versions`` the
    matching version metadata; ``records`` all review records per uid.
    """

    entries: dict[str, CatalogueEntry]
    versions: dict[str, EntryVersion] = field(default_factory=dict)
    records: dict[str, tuple[ValidationRecord, ...]] = field(default_factory=dict)

    def restrict(self, flt: SearchFilter) -> "CatalogueSnapshot":
        keep = {uid for uid, e in self.entries.items() if flt.matches(e)}
        return CatalogueSnapshot(
            entries={u: e for u, e in self.entries.items() if u in keep},
            versions={u: v for u, v in self.versions.items() if u in keep},
            records={u: r for u, r in self.records.items() if u in keep},
        )

    def validated(self, uid: str) -> bool:
        return any(r.complete for r in self.records.get(uid, ()))


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


class Store:
    """Versioned entry store rooted at a directory."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageIOError(f"cannot create store root {self.root}: {exc}") from exc
        self._guard = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}
        self._cache: dict[str, CatalogueEntry] | None = None

    # -- locking and cache ------------------------------------------------

    def _lock(self, uid: str) -> threading.Lock:
        with self._guard:
            lock = self._locks.get(uid)
            if lock is None:
                lock = self._locks[uid] = threading.Lock()
            return lock

    def _entries(self) -> dict[str, CatalogueEntry]:
        with self._guard:
            if self._cache is None:
                loaded: dict[str, CatalogueEntry] = {}
                for uid in self._scan_uids():
                    loaded[uid] = self._read_latest(uid)
                self._cache = loaded
            return dict(self._cache)

    def _remember(self, uid: str, entry: CatalogueEntry) -> None:
        with self._guard:
            if self._cache is not None:
                self._cache[uid] = entry

    # -- paths -------------------------------------------------------------

    def _dir(self, uid: str) -> Path:
        return self.root / uid

    def _index_path(self, uid: str) -> Path:
        return self._dir(uid) / "index.json"

    def _version_path(self, uid: str, n: int) -> Path:
        return self._dir(uid) / f"v{n}.json"

    def _records_path(self, uid: str) -> Path:
        return self._dir(uid) / "validations.json"

    def _scan_uids(self) -> list[str]:
        try:
            return sorted(
                p.name for p in self.root.iterdir() if (p / "index.json").is_file()
            )
        except OSError as exc:
            raise StorageIOError(f"cannot list store root {self.root}: {exc}") from exc

    def _read_index(self, uid: str) -> dict:
        path = self._index_path(uid)
        if not path.is_file():
            raise NotFoundError(f"no entry with uid {uid!r}")
        try:
            return json.loads(path.read_text("utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StorageIOError(f"cannot read {path}: {exc}") from exc

    def _read_latest(self, uid: str) -> CatalogueEntry:
        index = self._read_index(uid)
        return entry_from_json(self._read_payload(uid, index["latest"]))

    def _read_payload(self, uid: str, n: int) -> bytes:
        path = self._version_path(uid, n)
        try:
            return path.read_bytes()
        except OSError as exc:
            raise StorageIOError(f"cannot read {path}: {exc}") from exc

    # -- writes ------------------------------------------------------------

    def save_entry(
        self,
        entry: CatalogueEntry,
        author: Author,
        context: Mapping[str, CatalogueEntry] | None = None,
    ) -> tuple[str, int]:
        """Validate and persist ``entry`` as the next version of its uid.

        Raises ``ValidationFailedError`` when the report carries
        error-severity violations; warnings do not block.  ``context`` adds
        not-yet-saved entries that links may resolve against, so bulk
        imports can reference entries later in the same batch.
        """
        uid = entry.general.uid
        catalogue = self._entries()
        if context:
            catalogue.update(context)
        catalogue[uid] = entry  # links to the entry itself resolve
        report = validate_entry(entry, catalogue)
        if not report.ok:
            raise ValidationFailedError(report)
        payload = entry_to_canonical_json(entry)
        with self._lock(uid):
            entry_dir = self._dir(uid)
            try:
                entry_dir.mkdir(exist_ok=True)
            except OSError as exc:
                raise StorageIOError(f"cannot create {entry_dir}: {exc}") from exc
            if self._index_path(uid).is_file():
                index = self._read_index(uid)
            else:
                index = {"uid": uid, "latest": 0, "versions": []}
            version_no = index["latest"] + 1
            saved_at = now_iso()
            if index["versions"]:
                # saved_at never decreases within a uid, even across clock slew
                saved_at = max(saved_at, index["versions"][-1]["saved_at"])
            index["latest"] = version_no
            index["versions"].append(
                {
                    "version_no": version_no,
                    "saved_at": saved_at,
                    "author": {"name": author.name, "email": author.email},
                }
            )
            try:
                _atomic_write(self._version_path(uid, version_no), payload)
                _atomic_write(
                    self._index_path(uid),
                    json.dumps(index, ensure_ascii=False, indent=1).encode("utf-8"),
                )
            except OSError as exc:
                raise StorageIOError(f"cannot write entry {uid!r}: {exc}") from exc
        self._remember(uid, entry)
        return uid, version_no

    def add_validation_record(self, record: ValidationRecord) -> None:
        with self._lock(record.uid):
            if not self._index_path(record.uid).is_file():
                raise NotFoundError(f"no entry with uid {record.uid!r}")
            path = self._records_path(record.uid)
            existing = []
            if path.is_file():
                try:
                    existing = json.loads(path.read_text("utf-8"))
                except (OSError, json.JSONDecodeError) as exc:
                    raise StorageIOError(f"cannot read {path}: {exc}") from exc
            existing.append(record.model_dump(mode="json"))
            try:
                _atomic_write(
                    path, json.dumps(existing, ensure_ascii=False, indent=1).encode("utf-8")
                )
            except OSError as exc:
                raise StorageIOError(f"cannot write {path}: {exc}") from exc

    # -- reads -------------------------------------------------------------

    def list_uids(self) -> list[str]:
        return sorted(self._entries())

    def entries(self) -> dict[str, CatalogueEntry]:
        """Latest parsed entry per uid (a fresh copy, safe to mutate)."""
        return self._entries()

    def has_entry(self, uid: str) -> bool:
        return uid in self._entries()

    def load_latest(self, uid: str) -> CatalogueEntry:
        entry = self._entries().get(uid)
        if entry is None:
            raise NotFoundError(f"no entry with uid {uid!r}")
        return entry

    def latest_version_no(self, uid: str) -> int:
        return self._read_index(uid)["latest"]

    def list_versions(self, uid: str) -> list[EntryVersion]:
        index = self._read_index(uid)
        versions = []
        for meta in index["versions"]:
            n = meta["version_no"]
            versions.append(
                EntryVersion(
                    uid=uid,
                    version_no=n,
                    saved_at=meta["saved_at"],
                    author=Author.model_validate(meta["author"]),
                    payload=self._read_payload(uid, n),
                )
            )
        return versions

    def validation_records(self, uid: str) -> list[ValidationRecord]:
        if not self._index_path(uid).is_file():
            raise NotFoundError(f"no entry with uid {uid!r}")
        path = self._records_path(uid)
        if not path.is_file():
            return []
        try:
            raw = json.loads(path.read_text("utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StorageIOError(f"cannot read {path}: {exc}") from exc
        try:
            return [ValidationRecord.model_validate(item) for item in raw]
        except ValidationError as exc:
            raise StorageIOError(f"corrupt validation records in {path}: {exc}") from exc

    def is_validated(self, uid: str) -> bool:
        return any(r.complete for r in self.validation_records(uid))

    def search(self, flt: SearchFilter) -> list[str]:
        entries = self._entries()
        return sorted(uid for uid, entry in entries.items() if flt.matches(entry))

    def snapshot(self) -> CatalogueSnapshot:
        entries = self._entries()
        versions: dict[str, EntryVersion] = {}
        records: dict[str, tuple[ValidationRecord, ...]] = {}
        for uid in entries:
            listed = self.list_versions(uid)
            versions[uid] = listed[-1]
            recs = self.validation_records(uid)
            if recs:
                records[uid] = tuple(recs)
        return CatalogueSnapshot(entries=entries, versions=versions, records=records)

    # -- bulk --------------------------------------------------------------

    def export_catalogue(self) -> bytes:
        """JSON array of the latest canonical payloads, in uid order."""
        payloads = [
            entry_to_canonical_json(entry)
            for _, entry in sorted(self._entries().items())
        ]
        return b"[" + b",".join(payloads) + b"]"

    def import_catalogue(self, data: bytes | str, author: Author) -> list[tuple[str, int]]:
        """Import an export-format JSON array; every entry must save cleanly."""
        from langcat.errors import EntryParseError

        try:
            raw = json.loads(data)
        except json.JSONDecodeError as exc:
            raise EntryParseError(f"invalid JSON: {exc}") from None
        if not isinstance(raw, list):
            raise EntryParseError("catalogue JSON must be an array of entries")
        entries = [
            entry_from_json(json.dumps(item, ensure_ascii=False)) for item in raw
        ]
        context = {entry.general.uid: entry for entry in entries}
        return [self.save_entry(entry, author, context=context) for entry in entries]
