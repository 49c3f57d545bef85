"""Aggregations over the catalogue.

Every operation is a pure function from a mapping of uid to latest entry to
a ``Distribution``: ordered rows of (label, count, exact percent), a
denominator, and what the denominator counts.  Percentages are exact
rationals; rounding happens only in the report renderers.  Multi-valued
questions (languages, license properties) count an entry once per distinct
value it holds, so percentages may sum past 100.

Row order is always count descending, then label ascending.  A zero
denominator yields an empty distribution rather than dividing by zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from langcat import geo, langtag
from langcat.schema import vocab
from langcat.schema.types import CatalogueEntry
from langcat.store import entry_groups

MISSING = "Missing"
OTHER_GROUP = "Other"

Entries = Mapping[str, CatalogueEntry]


class Row(NamedTuple):
    label: str
    count: int
    percent: Fraction


@dataclass(frozen=True)
class Distribution:
    rows: tuple[Row, ...]
    denominator: int
    denominator_kind: str


def _ordered(counts: Mapping[str, int]) -> list[tuple[str, int]]:
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def _build(
    counts: Mapping[str, int], denominator: int, kind: str, order: list[tuple[str, int]] | None = None
) -> Distribution:
    if denominator <= 0:
        return Distribution(rows=(), denominator=0, denominator_kind=kind)
    ordered = _ordered(counts) if order is None else order
    rows = tuple(Row(label, count, Fraction(count, denominator)) for label, count in ordered)
    return Distribution(rows=rows, denominator=denominator, denominator_kind=kind)


def type_distribution(entries: Entries) -> Distribution:
    counts = {label: 0 for label in vocab.RESOURCE_TYPE_LABELS.values()}
    for entry in entries.values():
        counts[vocab.RESOURCE_TYPE_LABELS[entry.rtype]] += 1
    return _build(counts, len(entries), "entries")


def language_group_distribution(entries: Entries) -> Distribution:
    """Entries per target group.

    An entry counts once for every distinct group among its selections: the
    stated group when present, otherwise the group its tag maps to.  A
    selection with a tag outside every group (and no stated group) counts
    the entry under Other, once.
    """
    counts = {group: 0 for group in langtag.TARGET_GROUPS}
    counts[OTHER_GROUP] = 0
    for entry in entries.values():
        groups = set()
        for sel in entry.languages:
            if sel.group is not None:
                groups.add(sel.group)
            elif sel.tag is not None:
                derived = langtag.group_of_text(sel.tag)
                groups.add(derived if derived is not None else OTHER_GROUP)
        for group in groups:
            counts[group] += 1
    return _build(counts, len(entries), "entries")


def first_location_distribution(entries: Entries) -> Distribution:
    """Macroarea of each entry's first location; no or unknown location
    counts under Missing."""
    counts = {label: 0 for label in geo.MACROAREA_LABELS.values()}
    counts[MISSING] = 0
    for entry in entries.values():
        macroarea = None
        if entry.locations:
            macroarea = geo.resolve_location(entry.locations[0]).macroarea
        counts[geo.MACROAREA_LABELS[macroarea] if macroarea else MISSING] += 1
    return _build(counts, len(entries), "entries")


def language_by_region(entries: Entries, group: str) -> Distribution:
    """Macroarea spread of the entries in one target group, over ALL of
    each entry's locations (an entry counts once per distinct macroarea)."""
    if group not in langtag.TARGET_GROUPS:
        raise ValueError(f"unknown language group: {group!r}")
    member_entries = [e for e in entries.values() if group in entry_groups(e)]
    counts = {label: 0 for label in geo.MACROAREA_LABELS.values()}
    for entry in member_entries:
        areas = {geo.resolve_location(loc).macroarea for loc in entry.locations} - {None}
        for area in areas:
            counts[geo.MACROAREA_LABELS[area]] += 1
    return _build(counts, len(member_entries), "entries")


def custodian_type_distribution(entries: Entries) -> Distribution:
    """Custodian types over all entries; entries without a typed custodian
    (none recorded, or identified only by an organization link) count under
    Missing."""
    counts = {label: 0 for label in vocab.CUSTODIAN_TYPE_LABELS.values()}
    counts[MISSING] = 0
    for entry in entries.values():
        if entry.custodian is not None and entry.custodian.ctype is not None:
            counts[vocab.CUSTODIAN_TYPE_LABELS[entry.custodian.ctype]] += 1
        else:
            counts[MISSING] += 1
    return _build(counts, len(entries), "entries")


def custodian_location_top(entries: Entries, n: int) -> Distribution:
    """Top-n custodian locations (country names where resolvable, raw
    strings otherwise), with the Missing row appended after the top-n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    counts: dict[str, int] = {}
    missing = 0
    for entry in entries.values():
        if entry.custodian is None or entry.custodian.location is None:
            missing += 1
            continue
        resolved = geo.resolve_location(entry.custodian.location)
        if resolved.country_code is not None:
            label = geo.country_name(resolved.country_code) or entry.custodian.location
        else:
            label = entry.custodian.location.strip()
        counts[label] = counts.get(label, 0) + 1
    order = _ordered(counts)[:n]
    order.append((MISSING, missing))
    return _build(counts, len(entries), "entries", order=order)


def license_property_distribution(entries: Entries) -> Distribution:
    """License properties over entries that carry an availability section;
    an empty property set counts under Missing."""
    scoped = [e for e in entries.values() if e.availability is not None]
    counts = {label: 0 for label in vocab.LICENSE_PROPERTY_LABELS.values()}
    counts[MISSING] = 0
    for entry in scoped:
        properties = entry.availability.license.properties
        if not properties:
            counts[MISSING] += 1
        for prop in properties:
            counts[vocab.LICENSE_PROPERTY_LABELS[prop]] += 1
    return _build(counts, len(scoped), "entries")


def pii_distribution(entries: Entries) -> Distribution:
    """PII answers over entries that carry an availability section; an
    absent answer counts under Answer missing."""
    scoped = [e for e in entries.values() if e.availability is not None]
    counts = {label: 0 for label in vocab.PII_CONTAINS_LABELS.values()}
    for entry in scoped:
        answer = entry.availability.pii.contains or "answer_missing"
        counts[vocab.PII_CONTAINS_LABELS[answer]] += 1
    return _build(counts, len(scoped), "entries")


def singleton_languages(
    entries: Entries, exclude_target_group_members: bool
) -> tuple[frozenset[str], int]:
    """Tags that occur in at most two entries.

    With the exclusion flag, tags that map into a target group are dropped,
    leaving the long tail outside the groups the catalogue focuses on.
    """
    tag_entries: dict[str, set[str]] = {}
    for uid, entry in entries.items():
        for sel in entry.languages:
            if sel.tag is not None:
                tag_entries.setdefault(sel.tag, set()).add(uid)
    rare = {tag for tag, uids in tag_entries.items() if len(uids) <= 2}
    if exclude_target_group_members:
        rare = {tag for tag in rare if langtag.group_of_text(tag) is None}
    return frozenset(rare), len(rare)


def singleton_report(entries: Entries) -> Distribution:
    """Two-row summary of the rare-language tail, over all distinct tags."""
    all_tags: set[str] = set()
    for entry in entries.values():
        all_tags.update(sel.tag for sel in entry.languages if sel.tag is not None)
    _, rare = singleton_languages(entries, exclude_target_group_members=False)
    _, rare_outside = singleton_languages(entries, exclude_target_group_members=True)
    denominator = len(all_tags)
    if denominator == 0:
        return Distribution(rows=(), denominator=0, denominator_kind="tag_occurrences")
    rows = (
        Row("Tagged in at most two entries", rare, Fraction(rare, denominator)),
        Row(
            "Also outside the target groups",
            rare_outside,
            Fraction(rare_outside, denominator),
        ),
    )
    return Distribution(rows=rows, denominator=denominator, denominator_kind="tag_occurrences")


def country_counts(entries: Entries, use_custodian: bool) -> dict[str, int]:
    """Entries per country code, for the map: either over every entry
    location, or over custodian locations."""
    counts: dict[str, int] = {}
    for entry in entries.values():
        if use_custodian:
            raws = [entry.custodian.location] if entry.custodian and entry.custodian.location else []
        else:
            raws = list(entry.locations)
        codes = {
            geo.resolve_location(raw).country_code
            for raw in raws
        } - {None}
        for code in codes:
            counts[code] = counts.get(code, 0) + 1
    return counts
