"""Form sections and their applicability per resource type.

Every entry carries the four core sections.  Primary sources add
availability, source type, and media; processed datasets add availability,
dataset sources, and media.  Organizations carry the core sections only.
"""

from __future__ import annotations

from typing import Any

from pydantic import ValidationError

from langcat.errors import SectionNotApplicableError
from langcat.schema.canonical import parse_error_from
from langcat.schema.types import CatalogueEntry

SECTION_NAMES = (
    "general",
    "languages",
    "locations",
    "custodian",
    "availability",
    "source_type",
    "dataset_sources",
    "media",
)

_CORE = frozenset({"general", "languages", "locations", "custodian"})

_APPLICABLE = {
    "organization": _CORE,
    "primary_source": _CORE | {"availability", "source_type", "media"},
    "processed_dataset": _CORE | {"availability", "dataset_sources", "media"},
}


def applicable_sections(rtype: str) -> frozenset[str]:
    """Section names an entry of the given resource type carries."""
    try:
        return _APPLICABLE[rtype]
    except KeyError:
        raise ValueError(f"unknown resource type: {rtype!r}") from None


def apply_section_edit(entry: CatalogueEntry, section: str, payload: Any) -> CatalogueEntry:
    """Return a copy of ``entry`` with one section replaced by ``payload``.

    ``payload`` is plain JSON data for that section (an object, a list, or
    null for the optional custodian).  The original entry is untouched.
    Raises ``SectionNotApplicableError`` when the resource type does not
    carry the section, and a parse error when the payload does not fit the
    section's shape.
    """
    if section not in applicable_sections(entry.rtype):
        raise SectionNotApplicableError(
            f"section {section!r} does not apply to a {entry.rtype} entry",
            field_path=section,
        )
    data = entry.model_dump(mode="json", exclude_none=True)
    data[section] = payload
    if payload is None:
        data.pop(section)
    try:
        return CatalogueEntry.model_validate(data)
    except ValidationError as exc:
        raise parse_error_from(exc) from None
