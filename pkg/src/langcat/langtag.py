"""BCP-47 language tags: parsing, normalization, target-group lookup.

The parser checks well-formedness against the RFC 5646 grammar (langtag,
private-use and the fixed irregular list); it does not consult the IANA
subtag registry, so unregistered-but-grammatical tags are accepted.

Group membership is a data file (``data/language_groups.tsv``) mapping
primary language subtags to the thirteen target language groups; it can be
edited without touching code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources

TARGET_GROUPS = (
    "Arabic",
    "Basque",
    "Catalan",
    "Chinese",
    "English",
    "French",
    "Indic",
    "Indonesian",
    "NigerCongo",
    "Portuguese",
    "Spanish",
    "Vietnamese",
    "Programming",
)

# Irregular tags from the RFC 5646 fixed list that do not fit the langtag
# grammar; keys are lowercase, values the canonical spelling. The "regular"
# grandfathered tags (zh-min-nan, art-lojban, ...) already parse as ordinary
# langtags and need no special casing.
_IRREGULAR = {
    t.lower(): t
    for t in (
        "en-GB-oed",
        "i-ami",
        "i-bnn",
        "i-default",
        "i-enochian",
        "i-hak",
        "i-klingon",
        "i-lux",
        "i-mingo",
        "i-navajo",
        "i-pwn",
        "i-tao",
        "i-tay",
        "i-tsu",
        "sgn-BE-FR",
        "sgn-BE-NL",
        "sgn-CH-DE",
    )
}

_ALPHA = re.compile(r"^[A-Za-z]+$")
_DIGIT = re.compile(r"^[0-9]+$")
_ALNUM = re.compile(r"^[A-Za-z0-9]+$")

# Private-use convention for programming languages: x-code-<name>.
_CODE_PREFIX = "code"


class TagParseError(ValueError):
    """Raised for strings that are not well-formed BCP-47 tags.

    ``subtag_index`` is 1-based; ``subtag`` is the offending piece.
    """

    def __init__(self, message: str, subtag_index: int, subtag: str):
        super().__init__(f"subtag {subtag_index} ({subtag!r}): {message}")
        self.subtag_index = subtag_index
        self.subtag = subtag
        self.reason = message


@dataclass(frozen=True)
class LanguageTag:
    """A parsed tag. ``extensions`` keeps singleton sequences verbatim
    (e.g. ``a-bcd-ef``) so any accepted tag can be reproduced exactly;
    irregular tags from the fixed list are stored whole in ``irregular``.
    """

    language: str | None = None
    extlang: tuple[str, ...] = ()
    script: str | None = None
    region: str | None = None
    variants: tuple[str, ...] = ()
    extensions: tuple[str, ...] = ()
    private_use: tuple[str, ...] = ()
    irregular: str | None = None

    def __str__(self) -> str:
        if self.irregular is not None:
            return self.irregular
        parts: list[str] = []
        if self.language is not None:
            parts.append(self.language)
            parts.extend(self.extlang)
            if self.script is not None:
                parts.append(self.script)
            if self.region is not None:
                parts.append(self.region)
            parts.extend(self.variants)
            parts.extend(self.extensions)
        if self.private_use:
            parts.append("x")
            parts.extend(self.private_use)
        return "-".join(parts)


def _is_alpha(s: str) -> bool:
    return bool(_ALPHA.match(s))


def _is_digits(s: str) -> bool:
    return bool(_DIGIT.match(s))


def _is_alnum(s: str) -> bool:
    return bool(_ALNUM.match(s))


def parse_tag(text: str) -> LanguageTag:
    """Parse a tag, returning it in normalized casing.

    Raises TagParseError naming the first offending subtag and its 1-based
    position.
    """
    if not isinstance(text, str) or text == "":
        raise TagParseError("tag must be a non-empty string", 1, "")

    low = text.lower()
    if low in _IRREGULAR:
        return LanguageTag(irregular=_IRREGULAR[low])

    subtags = text.split("-")
    for i, st in enumerate(subtags, start=1):
        if st == "":
            raise TagParseError("empty subtag", i, st)
        if not _is_alnum(st):
            raise TagParseError("subtag must be ASCII letters or digits", i, st)

    i = 0
    n = len(subtags)

    def cur() -> str:
        return subtags[i]

    # Private-use-only tag: "x" followed by 1*8alphanum subtags.
    if subtags[0].lower() == "x":
        if n == 1:
            raise TagParseError("private-use tag needs at least one subtag", 1, subtags[0])
        priv = []
        for j in range(1, n):
            if not 1 <= len(subtags[j]) <= 8:
                raise TagParseError("private-use subtag must be 1-8 characters", j + 1, subtags[j])
            priv.append(subtags[j].lower())
        return LanguageTag(private_use=tuple(priv))

    first = cur()
    if not (_is_alpha(first) and 2 <= len(first) <= 8):
        raise TagParseError("primary subtag must be 2-8 alpha", 1, first)
    language = first.lower()
    i += 1

    extlang: list[str] = []
    if len(first) <= 3:
        # Up to three 3-alpha extended language subtags. No other production
        # matches a 3-alpha subtag here, so greedy consumption is exact.
        while i < n and len(extlang) < 3 and len(cur()) == 3 and _is_alpha(cur()):
            extlang.append(cur().lower())
            i += 1

    script = None
    if i < n and len(cur()) == 4 and _is_alpha(cur()):
        script = cur().title()
        i += 1

    region = None
    if i < n and (
        (len(cur()) == 2 and _is_alpha(cur())) or (len(cur()) == 3 and _is_digits(cur()))
    ):
        region = cur().upper()
        i += 1

    variants: list[str] = []
    while i < n:
        st = cur()
        if (5 <= len(st) <= 8) or (len(st) == 4 and st[0].isdigit()):
            variants.append(st.lower())
            i += 1
        else:
            break

    extensions: list[str] = []
    while i < n and len(cur()) == 1 and cur().lower() != "x":
        singleton = cur().lower()
        i += 1
        ext_subtags: list[str] = []
        while i < n and 2 <= len(cur()) <= 8:
            ext_subtags.append(cur().lower())
            i += 1
        if not ext_subtags:
            raise TagParseError(
                f"extension {singleton!r} needs at least one 2-8 character subtag",
                i,
                subtags[i] if i < n else "",
            )
        extensions.append("-".join([singleton, *ext_subtags]))

    private: list[str] = []
    if i < n and cur().lower() == "x":
        i += 1
        if i >= n:
            raise TagParseError("private-use sequence needs at least one subtag", i, "x")
        while i < n:
            if not 1 <= len(cur()) <= 8:
                raise TagParseError("private-use subtag must be 1-8 characters", i + 1, cur())
            private.append(cur().lower())
            i += 1

    if i < n:
        raise TagParseError("subtag not allowed at this position", i + 1, cur())

    return LanguageTag(
        language=language,
        extlang=tuple(extlang),
        script=script,
        region=region,
        variants=tuple(variants),
        extensions=tuple(extensions),
        private_use=tuple(private),
    )


def is_well_formed(text: str) -> bool:
    try:
        parse_tag(text)
        return True
    except TagParseError:
        return False


def normalize_tag(tag: LanguageTag) -> LanguageTag:
    """Apply the casing conventions: language and most subtags lowercase,
    script title-case, region uppercase. Idempotent; no registry
    canonicalization.
    """
    if tag.irregular is not None:
        return replace(tag, irregular=_IRREGULAR[tag.irregular.lower()])
    return LanguageTag(
        language=tag.language.lower() if tag.language else tag.language,
        extlang=tuple(s.lower() for s in tag.extlang),
        script=tag.script.title() if tag.script else tag.script,
        region=tag.region.upper() if tag.region else tag.region,
        variants=tuple(s.lower() for s in tag.variants),
        extensions=tuple(s.lower() for s in tag.extensions),
        private_use=tuple(s.lower() for s in tag.private_use),
    )


@lru_cache(maxsize=1)
def _membership() -> dict[str, str]:
    table: dict[str, str] = {}
    data = resources.files("langcat.data").joinpath("language_groups.tsv").read_text("utf-8")
    for lineno, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            subtag, group = line.split("\t")
        except ValueError as exc:
            raise ValueError(f"language_groups.tsv line {lineno}: expected subtag<TAB>group") from exc
        if group not in TARGET_GROUPS:
            raise ValueError(f"language_groups.tsv line {lineno}: unknown group {group!r}")
        table[subtag.lower()] = group
    return table


def group_of(tag: LanguageTag) -> str | None:
    """Target group for a tag, or None.

    Looks up the extended language subtag when present, else the primary
    subtag; script and region are ignored. Private-use tags following the
    x-code-<name> convention map to Programming.
    """
    if tag.irregular is not None:
        return None
    if tag.language is None:
        if len(tag.private_use) >= 2 and tag.private_use[0] == _CODE_PREFIX:
            return "Programming"
        return None
    key = tag.extlang[0] if tag.extlang else tag.language
    return _membership().get(key)


def group_of_text(text: str) -> str | None:
    """group_of over a raw string; None when the string does not parse."""
    try:
        return group_of(parse_tag(text))
    except TagParseError:
        return None
