"""Geographic resolution for free-text location names.

Entries record locations as the strings people typed.  This module turns
such a string into a structured ``GeoLocation`` by exact, case-insensitive
lookup in a bundled gazetteer (``data/gazetteer.tsv``).  The gazetteer
carries four kinds of rows: a world-wide marker, macroareas (the coarse
buckets used by the reports), countries (with ISO 3166-1 alpha-2 codes and
rough centroids for the map view), and named regions that map onto a
macroarea.  A string the gazetteer does not know is kept verbatim and
treated as a sub-country region with no macroarea.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

MACROAREAS = (
    "africa",
    "americas_unspecified",
    "asia",
    "europe",
    "latin_america_caribbean",
    "middle_east_north_africa",
    "north_africa",
    "north_america",
    "oceania",
    "worldwide",
)

# Display labels for report tables, keyed by macroarea token.
MACROAREA_LABELS = {
    "africa": "Africa",
    "americas_unspecified": "Americas (unspecified)",
    "asia": "Asia",
    "europe": "Europe",
    "latin_america_caribbean": "Latin America and the Caribbean",
    "middle_east_north_africa": "Middle East and North Africa",
    "north_africa": "North Africa",
    "north_america": "North America",
    "oceania": "Oceania",
    "worldwide": "World-wide",
}

LEVELS = ("worldwide", "macroarea", "country", "region")


@dataclass(frozen=True)
class GeoLocation:
    """A resolved location.

    ``raw`` is always the original string.  ``level`` says how specific the
    match was; ``macroarea`` is filled for every recognised name (countries
    inherit it from the gazetteer) and is None for unrecognised strings.
    ``country_code`` is only set for country-level matches.
    """

    raw: str
    level: str
    macroarea: str | None = None
    country_code: str | None = None


class _Gazetteer:
    def __init__(self) -> None:
        # name (lowercased) -> (level, code or None, macroarea)
        self.by_name: dict[str, tuple[str, str | None, str]] = {}
        # code -> canonical name (first row wins; later rows are aliases)
        self.canonical_name: dict[str, str] = {}
        # code -> (lat, lon)
        self.centroid: dict[str, tuple[float, float]] = {}


@lru_cache(maxsize=1)
def _gazetteer() -> _Gazetteer:
    gaz = _Gazetteer()
    data = resources.files("langcat.data").joinpath("gazetteer.tsv").read_text("utf-8")
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) not in (4, 6):
            raise ValueError(f"gazetteer.tsv line {lineno}: expected 4 or 6 columns")
        name, level, code, macroarea = parts[:4]
        if level not in LEVELS:
            raise ValueError(f"gazetteer.tsv line {lineno}: unknown level {level!r}")
        if macroarea not in MACROAREAS:
            raise ValueError(f"gazetteer.tsv line {lineno}: unknown macroarea {macroarea!r}")
        if (level == "country") != bool(code):
            raise ValueError(f"gazetteer.tsv line {lineno}: country_code must match level")
        key = name.lower()
        if key in gaz.by_name:
            raise ValueError(f"gazetteer.tsv line {lineno}: duplicate name {name!r}")
        gaz.by_name[key] = (level, code or None, macroarea)
        if code and code not in gaz.canonical_name:
            gaz.canonical_name[code] = name
            if len(parts) == 6 and parts[4] and parts[5]:
                gaz.centroid[code] = (float(parts[4]), float(parts[5]))
    return gaz


@lru_cache(maxsize=4096)
def resolve_location(raw: str) -> GeoLocation:
    """Resolve a location string against the gazetteer.

    Matching is exact after trimming whitespace and ignoring case; no fuzzy
    matching is attempted.  Unrecognised strings come back as
    ``level="region"`` with no macroarea, the raw text untouched.
    """
    hit = _gazetteer().by_name.get(raw.strip().lower())
    if hit is None:
        return GeoLocation(raw=raw, level="region")
    level, code, macroarea = hit
    return GeoLocation(raw=raw, level=level, macroarea=macroarea, country_code=code)


def country_name(code: str) -> str | None:
    """Canonical display name for an ISO 3166-1 alpha-2 code, if known."""
    return _gazetteer().canonical_name.get(code)


def country_centroid(code: str) -> tuple[float, float] | None:
    """Rough (lat, lon) centroid for a country code, for map rendering."""
    return _gazetteer().centroid.get(code)


def known_countries() -> list[tuple[str, str]]:
    """All (code, canonical name) pairs in the gazetteer, sorted by code."""
    return sorted(_gazetteer().canonical_name.items())
