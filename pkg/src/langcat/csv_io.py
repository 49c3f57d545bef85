"""CSV bulk import and export.

The CSV form covers the common fields only (see docs/csv-format.md); deeply
nested answers such as per-source licensing require JSON import.  Multi-value
cells are ``|``-separated.  A language element is a target-group name, a
BCP-47 tag, or a ``Group:tag`` pair.  Cells for multiple-choice questions
accept either a vocabulary token or free text, which becomes an
``{"other": ...}`` escape.

Import is atomic per row: bad rows are reported with their row number and
rule id while good rows are saved.  Links may point at entries anywhere in
the same file; rows are parsed up front so forward references resolve.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Any

from pydantic import ValidationError

from langcat import langtag
from langcat.errors import CatalogueError, EntryParseError, MalformedCsvError, ValidationFailedError
from langcat.schema import vocab
from langcat.schema.canonical import parse_error_from
from langcat.schema.types import CatalogueEntry
from langcat.store import Author, Store

CSV_COLUMNS = (
    "rtype",
    "uid",
    "name",
    "homepage",
    "description",
    "languages",
    "locations",
    "custodian.link_uid",
    "custodian.name",
    "custodian.type",
    "custodian.location",
    "custodian.contact",
    "availability.procurement",
    "availability.download_url",
    "availability.contact",
    "license.has_explicit_terms",
    "license.properties",
    "license.named_licenses",
    "license.usability_assessment",
    "pii.contains",
    "pii.general_likelihood",
    "pii.numeric_likelihood",
    "pii.sensitive_likelihood",
    "pii.general_kinds",
    "pii.numeric_kinds",
    "pii.sensitive_kinds",
    "pii.justification",
    "source.kind",
    "source.collection_type",
    "source.website_type",
    "sources.originality",
    "sources.investigable",
    "sources.linked_uids",
    "media.types",
    "media.transcribed_from",
    "media.size_unit",
    "media.instance_exponent",
    "media.words_exponent",
    "submitter.name",
    "submitter.email",
)


@dataclass(frozen=True)
class RowError:
    row: int
    rule: str
    message: str


@dataclass(frozen=True)
class ImportReport:
    saved: tuple[tuple[str, int], ...]
    errors: tuple[RowError, ...]


def _opt(cell: str | None) -> str | None:
    cell = (cell or "").strip()
    return cell or None


def _multi(cell: str | None) -> list[str]:
    return [item.strip() for item in (cell or "").split("|") if item.strip()]


def _choice(cell: str | None, allowed: tuple[str, ...]) -> Any:
    value = _opt(cell)
    if value is None or value in allowed:
        return value
    return {"other": value}


def _int_cell(cell: str | None, column: str) -> int | None:
    value = _opt(cell)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise EntryParseError(f"{column}: {value!r} is not an integer", field_path=column) from None


def _any(row: dict, columns: tuple[str, ...]) -> bool:
    return any(_opt(row.get(c)) for c in columns)


_CUSTODIAN_COLS = tuple(c for c in CSV_COLUMNS if c.startswith("custodian."))
_AVAILABILITY_COLS = tuple(
    c for c in CSV_COLUMNS if c.startswith(("availability.", "license.", "pii."))
)
_SOURCE_COLS = tuple(c for c in CSV_COLUMNS if c.startswith("source."))
_SOURCES_COLS = tuple(c for c in CSV_COLUMNS if c.startswith("sources."))
_MEDIA_COLS = tuple(c for c in CSV_COLUMNS if c.startswith("media."))


def _language_element(element: str) -> dict:
    if ":" in element:
        group, _, tag = element.partition(":")
        return {"group": group.strip(), "tag": tag.strip()}
    if element in langtag.TARGET_GROUPS:
        return {"group": element}
    return {"tag": element}


def row_to_entry(row: dict) -> CatalogueEntry:
    """Build an entry from one CSV row; raises ``EntryParseError``."""
    data: dict[str, Any] = {
        "rtype": _opt(row.get("rtype")),
        "general": {
            "uid": _opt(row.get("uid")) or "",
            "name": (row.get("name") or "").strip(),
            "homepage": _opt(row.get("homepage")),
            "description": (row.get("description") or "").strip(),
        },
        "languages": [_language_element(e) for e in _multi(row.get("languages"))],
        "locations": _multi(row.get("locations")),
        "provenance": {
            "submitter_name": (row.get("submitter.name") or "").strip(),
            "submitter_email": (row.get("submitter.email") or "").strip(),
        },
    }
    if data["rtype"] is None:
        raise EntryParseError("rtype: missing resource type", field_path="rtype")

    if _any(row, _CUSTODIAN_COLS):
        data["custodian"] = {
            "link_uid": _opt(row.get("custodian.link_uid")),
            "name": _opt(row.get("custodian.name")),
            "ctype": _opt(row.get("custodian.type")),
            "location": _opt(row.get("custodian.location")),
            "contact": _opt(row.get("custodian.contact")),
        }

    if _any(row, _AVAILABILITY_COLS):
        likelihoods = {}
        kinds = {}
        for category in vocab.PII_CATEGORIES:
            likelihood = _opt(row.get(f"pii.{category}_likelihood"))
            if likelihood is not None:
                likelihoods[category] = likelihood
            listed = _multi(row.get(f"pii.{category}_kinds"))
            if listed:
                kinds[category] = [_choice(k, vocab.PII_KINDS[category]) for k in listed]
        data["availability"] = {
            "procurement": _opt(row.get("availability.procurement")),
            "download_url": _opt(row.get("availability.download_url")),
            "contact": _opt(row.get("availability.contact")),
            "license": {
                "has_explicit_terms": _opt(row.get("license.has_explicit_terms")),
                "properties": _multi(row.get("license.properties")),
                "named_licenses": _multi(row.get("license.named_licenses")),
                "usability_assessment": _opt(row.get("license.usability_assessment")),
            },
            "pii": {
                "contains": _opt(row.get("pii.contains")),
                "category_likelihoods": likelihoods,
                "kinds": kinds,
                "no_pii_justification": _choice(
                    row.get("pii.justification"), vocab.NO_PII_JUSTIFICATIONS
                ),
            },
        }

    if _any(row, _SOURCE_COLS):
        data["source_type"] = {
            "kind": _choice(row.get("source.kind"), vocab.SOURCE_KINDS),
            "collection_type": _choice(row.get("source.collection_type"), vocab.COLLECTION_TYPES),
            "website_type": _choice(row.get("source.website_type"), vocab.WEBSITE_TYPES),
        }

    if _any(row, _SOURCES_COLS):
        data["dataset_sources"] = {
            "originality": _opt(row.get("sources.originality")),
            "sources_investigable": _opt(row.get("sources.investigable")),
            "linked_primary_uids": _multi(row.get("sources.linked_uids")),
        }

    if _any(row, _MEDIA_COLS):
        data["media"] = {
            "media": _multi(row.get("media.types")),
            "transcribed_from": _opt(row.get("media.transcribed_from")),
            "size_unit": _choice(row.get("media.size_unit"), vocab.SIZE_UNITS),
        }
        instance = _int_cell(row.get("media.instance_exponent"), "media.instance_exponent")
        words = _int_cell(row.get("media.words_exponent"), "media.words_exponent")
        if instance is not None:
            data["media"]["instance_count_bucket"] = {"exponent": instance}
        if words is not None:
            data["media"]["words_per_instance_bucket"] = {"exponent": words}

    data = _prune(data)
    try:
        return CatalogueEntry.model_validate(data)
    except ValidationError as exc:
        raise parse_error_from(exc) from None


def _prune(value: Any) -> Any:
    """Drop None leaves so model defaults apply to empty cells."""
    if isinstance(value, dict):
        return {k: _prune(v) for k, v in value.items() if v is not None}
    if isinstance(value, list):
        return [_prune(v) for v in value]
    return value


def _choice_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, vocab.OtherText):
        return value.other
    return value


def entry_to_row(entry: CatalogueEntry) -> dict[str, str]:
    """Flatten an entry into CSV cells (CSV-addressable fields only)."""
    row = {column: "" for column in CSV_COLUMNS}
    row["rtype"] = entry.rtype
    row["uid"] = entry.general.uid
    row["name"] = entry.general.name
    row["homepage"] = entry.general.homepage or ""
    row["description"] = entry.general.description
    elements = []
    for sel in entry.languages:
        if sel.group and sel.tag:
            elements.append(f"{sel.group}:{sel.tag}")
        else:
            elements.append(sel.group or sel.tag or "")
    row["languages"] = "|".join(elements)
    row["locations"] = "|".join(entry.locations)
    if entry.custodian is not None:
        row["custodian.link_uid"] = entry.custodian.link_uid or ""
        row["custodian.name"] = entry.custodian.name or ""
        row["custodian.type"] = entry.custodian.ctype or ""
        row["custodian.location"] = entry.custodian.location or ""
        row["custodian.contact"] = entry.custodian.contact or ""
    if entry.availability is not None:
        avail = entry.availability
        row["availability.procurement"] = avail.procurement
        row["availability.download_url"] = avail.download_url or ""
        row["availability.contact"] = avail.contact or ""
        row["license.has_explicit_terms"] = avail.license.has_explicit_terms
        row["license.properties"] = "|".join(avail.license.properties)
        row["license.named_licenses"] = "|".join(avail.license.named_licenses)
        row["license.usability_assessment"] = avail.license.usability_assessment or ""
        row["pii.contains"] = avail.pii.contains or ""
        for category in vocab.PII_CATEGORIES:
            row[f"pii.{category}_likelihood"] = avail.pii.category_likelihoods.get(category, "")
            row[f"pii.{category}_kinds"] = "|".join(
                _choice_cell(k) for k in avail.pii.kinds.get(category, ())
            )
        row["pii.justification"] = _choice_cell(avail.pii.no_pii_justification)
    if entry.source_type is not None:
        row["source.kind"] = _choice_cell(entry.source_type.kind)
        row["source.collection_type"] = _choice_cell(entry.source_type.collection_type)
        row["source.website_type"] = _choice_cell(entry.source_type.website_type)
    if entry.dataset_sources is not None:
        ds = entry.dataset_sources
        row["sources.originality"] = ds.originality
        row["sources.investigable"] = ds.sources_investigable or ""
        row["sources.linked_uids"] = "|".join(ds.linked_primary_uids)
    if entry.media is not None:
        row["media.types"] = "|".join(entry.media.media)
        row["media.transcribed_from"] = entry.media.transcribed_from or ""
        row["media.size_unit"] = _choice_cell(entry.media.size_unit)
        row["media.instance_exponent"] = str(entry.media.instance_count_bucket.exponent)
        row["media.words_exponent"] = str(entry.media.words_per_instance_bucket.exponent)
    row["submitter.name"] = entry.provenance.submitter_name
    row["submitter.email"] = entry.provenance.submitter_email
    return row


def import_csv(store: Store, text: str, author: Author) -> ImportReport:
    """Import entries from CSV text; per-row errors never abort the rest.

    A header that does not match the documented columns raises
    ``MalformedCsvError`` and nothing is saved.
    """
    reader = csv.DictReader(io.StringIO(text), restkey="__extra__", restval="")
    fields = reader.fieldnames or []
    if sorted(c for c in fields if c is not None) != sorted(CSV_COLUMNS) or len(fields) != len(
        CSV_COLUMNS
    ):
        raise MalformedCsvError(
            "CSV header does not match the documented import columns; see docs/csv-format.md"
        )

    parsed: list[tuple[int, CatalogueEntry | None, RowError | None]] = []
    for row_no, row in enumerate(reader, start=2):
        if row.get("__extra__"):
            parsed.append((row_no, None, RowError(row_no, "parse-error", "too many columns")))
            continue
        try:
            parsed.append((row_no, row_to_entry(row), None))
        except EntryParseError as exc:
            parsed.append((row_no, None, RowError(row_no, exc.kind, exc.detail)))

    # Links may reference any row of the file, not just earlier ones.
    context = {e.general.uid: e for _, e, _ in parsed if e is not None}
    saved: list[tuple[str, int]] = []
    errors: list[RowError] = []
    for row_no, entry, error in parsed:
        if error is not None:
            errors.append(error)
            continue
        assert entry is not None
        try:
            saved.append(store.save_entry(entry, author, context=context))
        except ValidationFailedError as exc:
            first = exc.report.errors()[0]
            errors.append(RowError(row_no, first.rule, exc.detail))
        except CatalogueError as exc:
            errors.append(RowError(row_no, exc.kind, exc.detail))
    return ImportReport(saved=tuple(saved), errors=tuple(errors))


def export_csv(store: Store) -> str:
    """All latest entries as CSV, uid-ascending, using the import columns."""
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(CSV_COLUMNS), lineterminator="\r\n")
    writer.writeheader()
    for uid in store.list_uids():
        writer.writerow(entry_to_row(store.load_latest(uid)))
    return out.getvalue()
