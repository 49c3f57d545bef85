"""Rendering of distributions as CSV, aligned markdown, and JSON.

Percent formatting is fixed here, in one place, with exact integer
arithmetic (no floats): either a whole number or two decimals, both rounded
half-up.  Tables mirroring whole-percent presentations use ``int``; the
finer-grained location and custodian tables use ``2dp``.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Any, Callable, Mapping

from langcat import analytics
from langcat.analytics import Distribution
from langcat.schema.types import CatalogueEntry

PERCENT_STYLES = ("int", "2dp")


def percent_int(fraction: Fraction) -> str:
    """Whole percent, round half-up: 98/192 -> "51"."""
    count, den = fraction.numerator, fraction.denominator
    return str((200 * count + den) // (2 * den))


def percent_2dp(fraction: Fraction) -> str:
    """Two-decimal percent, round half-up: 18/192 -> "9.38"."""
    count, den = fraction.numerator, fraction.denominator
    hundredths = (20000 * count + den) // (2 * den)
    whole, frac = divmod(hundredths, 100)
    return f"{whole}.{frac:02d}"


def format_percent(fraction: Fraction, style: str) -> str:
    if style == "int":
        return percent_int(fraction)
    if style == "2dp":
        return percent_2dp(fraction)
    raise ValueError(f"unknown percent style: {style!r}")


def render_csv(dist: Distribution, style: str) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\r\n")
    writer.writerow(["label", "count", "percent"])
    for row in dist.rows:
        writer.writerow([row.label, row.count, format_percent(row.percent, style)])
    return out.getvalue()


def render_markdown(dist: Distribution, style: str) -> str:
    header = ("Label", "Count", "Percent")
    body = [
        (row.label, str(row.count), format_percent(row.percent, style) + "%")
        for row in dist.rows
    ]
    widths = [
        max(len(header[i]), *(len(line[i]) for line in body)) if body else len(header[i])
        for i in range(3)
    ]
    lines = [
        f"| {header[0]:<{widths[0]}} | {header[1]:>{widths[1]}} | {header[2]:>{widths[2]}} |",
        f"| {'-' * widths[0]} | {'-' * (widths[1] - 1)}: | {'-' * (widths[2] - 1)}: |",
    ]
    for label, count, percent in body:
        lines.append(f"| {label:<{widths[0]}} | {count:>{widths[1]}} | {percent:>{widths[2]}} |")
    return "\n".join(lines) + "\n"


def render_json(dist: Distribution, style: str) -> dict[str, Any]:
    return {
        "rows": [
            {"label": row.label, "count": row.count, "percent": format_percent(row.percent, style)}
            for row in dist.rows
        ],
        "denominator": dist.denominator,
        "denominator_kind": dist.denominator_kind,
    }


class Table:
    """One named report: how to compute it and how to format percents."""

    def __init__(self, compute: Callable[..., Distribution], style: str, params: tuple[str, ...] = ()):
        self.compute = compute
        self.style = style
        self.params = params


TABLES: dict[str, Table] = {
    "types": Table(analytics.type_distribution, "int"),
    "languages": Table(analytics.language_group_distribution, "int"),
    "locations": Table(analytics.first_location_distribution, "2dp"),
    "language-regions": Table(analytics.language_by_region, "2dp", params=("group",)),
    "custodian-types": Table(analytics.custodian_type_distribution, "2dp"),
    "custodian-locations": Table(analytics.custodian_location_top, "2dp", params=("top",)),
    "licenses": Table(analytics.license_property_distribution, "int"),
    "pii": Table(analytics.pii_distribution, "int"),
    "singletons": Table(analytics.singleton_report, "int"),
}


def compute_table(
    name: str,
    entries: Mapping[str, CatalogueEntry],
    group: str | None = None,
    top: int = 12,
) -> Distribution:
    table = TABLES[name]
    if "group" in table.params:
        if group is None:
            raise ValueError("this table needs a language group")
        return table.compute(entries, group)
    if "top" in table.params:
        return table.compute(entries, top)
    return table.compute(entries)
