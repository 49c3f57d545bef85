"""Brute-force reference implementations of the analytics operations.

Each function below recomputes a distribution with plain linear scans, one
predicate at a time, sharing no aggregation code with the package.  Only
the leaf primitives (tag-to-group lookup, location resolution) and the
result container are reused; every counting decision is restated here so a
bug in the package's aggregation logic cannot hide in the oracle.
"""

from fractions import Fraction

from langcat import geo, langtag
from langcat.analytics import Distribution, Row
from langcat.schema import vocab


def _rows(pairs, denominator):
    ordered = sorted(pairs, key=lambda kv: (-kv[1], kv[0]))
    return tuple(Row(label, count, Fraction(count, denominator)) for label, count in ordered)


def _dist(pairs, denominator, kind, ordered=False):
    if denominator <= 0:
        return Distribution(rows=(), denominator=0, denominator_kind=kind)
    if ordered:
        rows = tuple(Row(label, count, Fraction(count, denominator)) for label, count in pairs)
    else:
        rows = _rows(pairs, denominator)
    return Distribution(rows=rows, denominator=denominator, denominator_kind=kind)


def _entry_group_set(entry):
    """Groups an entry counts toward in the language pie, Other included."""
    groups = set()
    for sel in entry.languages:
        if sel.group is not None:
            groups.add(sel.group)
        elif sel.tag is not None:
            mapped = langtag.group_of_text(sel.tag)
            groups.add(mapped if mapped is not None else "Other")
    return groups


def _filter_group_set(entry):
    """Groups an entry matches for filtering: stated plus tag-derived."""
    groups = set()
    for sel in entry.languages:
        if sel.group is not None:
            groups.add(sel.group)
        if sel.tag is not None:
            mapped = langtag.group_of_text(sel.tag)
            if mapped is not None:
                groups.add(mapped)
    return groups


def oracle_types(entries):
    pairs = []
    for rtype, label in vocab.RESOURCE_TYPE_LABELS.items():
        pairs.append((label, sum(1 for e in entries.values() if e.rtype == rtype)))
    return _dist(pairs, len(entries), "entries")


def oracle_language_groups(entries):
    labels = list(langtag.TARGET_GROUPS) + ["Other"]
    pairs = []
    for label in labels:
        pairs.append(
            (label, sum(1 for e in entries.values() if label in _entry_group_set(e)))
        )
    return _dist(pairs, len(entries), "entries")


def _first_area(entry):
    if not entry.locations:
        return None
    return geo.resolve_location(entry.locations[0]).macroarea


def oracle_first_locations(entries):
    pairs = []
    for area, label in geo.MACROAREA_LABELS.items():
        pairs.append((label, sum(1 for e in entries.values() if _first_area(e) == area)))
    pairs.append(("Missing", sum(1 for e in entries.values() if _first_area(e) is None)))
    return _dist(pairs, len(entries), "entries")


def oracle_language_by_region(entries, group):
    members = [e for e in entries.values() if group in _filter_group_set(e)]
    pairs = []
    for area, label in geo.MACROAREA_LABELS.items():
        count = 0
        for entry in members:
            if any(geo.resolve_location(loc).macroarea == area for loc in entry.locations):
                count += 1
        pairs.append((label, count))
    return _dist(pairs, len(members), "entries")


def oracle_custodian_types(entries):
    pairs = []
    for ctype, label in vocab.CUSTODIAN_TYPE_LABELS.items():
        pairs.append(
            (
                label,
                sum(
                    1
                    for e in entries.values()
                    if e.custodian is not None and e.custodian.ctype == ctype
                ),
            )
        )
    pairs.append(
        (
            "Missing",
            sum(
                1
                for e in entries.values()
                if e.custodian is None or e.custodian.ctype is None
            ),
        )
    )
    return _dist(pairs, len(entries), "entries")


def _custodian_location_label(entry):
    if entry.custodian is None or entry.custodian.location is None:
        return None
    resolved = geo.resolve_location(entry.custodian.location)
    if resolved.country_code is not None:
        name = geo.country_name(resolved.country_code)
        if name is not None:
            return name
    return entry.custodian.location.strip()


def oracle_custodian_locations(entries, n):
    labels = {_custodian_location_label(e) for e in entries.values()} - {None}
    pairs = []
    for label in labels:
        pairs.append(
            (label, sum(1 for e in entries.values() if _custodian_location_label(e) == label))
        )
    top = sorted(pairs, key=lambda kv: (-kv[1], kv[0]))[:n]
    missing = sum(1 for e in entries.values() if _custodian_location_label(e) is None)
    top.append(("Missing", missing))
    return _dist(top, len(entries), "entries", ordered=True)


def oracle_licenses(entries):
    scoped = [e for e in entries.values() if e.availability is not None]
    pairs = []
    for prop, label in vocab.LICENSE_PROPERTY_LABELS.items():
        pairs.append(
            (label, sum(1 for e in scoped if prop in e.availability.license.properties))
        )
    pairs.append(("Missing", sum(1 for e in scoped if not e.availability.license.properties)))
    return _dist(pairs, len(scoped), "entries")


def oracle_pii(entries):
    scoped = [e for e in entries.values() if e.availability is not None]
    pairs = []
    for answer, label in vocab.PII_CONTAINS_LABELS.items():
        if answer == "answer_missing":
            count = sum(1 for e in scoped if e.availability.pii.contains is None)
        else:
            count = sum(1 for e in scoped if e.availability.pii.contains == answer)
        pairs.append((label, count))
    return _dist(pairs, len(scoped), "entries")


def oracle_singletons(entries, exclude_target_group_members):
    tags = set()
    for entry in entries.values():
        for sel in entry.languages:
            if sel.tag is not None:
                tags.add(sel.tag)
    rare = set()
    for tag in tags:
        holders = sum(
            1
            for e in entries.values()
            if any(sel.tag == tag for sel in e.languages)
        )
        if holders <= 2:
            if exclude_target_group_members and langtag.group_of_text(tag) is not None:
                continue
            rare.add(tag)
    return frozenset(rare), len(rare)
