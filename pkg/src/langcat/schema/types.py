"""Entry model.

A ``CatalogueEntry`` is one catalogue record: a primary source, a processed
dataset, or an organization.  The resource type decides which sections an
entry carries (see ``sections.applicable_sections``).

Parsing enforces structure only: closed vocabularies, value formats (URLs,
emails, language tags), and numeric bounds.  Anything conditional, such as
"direct download requires a URL" or the section/type pairing rules, lives in
``validation.validate_entry`` so that even rule-breaking entries can be
represented, reported on, and fixed.

Collections that are sets in spirit (license properties, media types, PII
kinds) are stored as sorted, deduplicated tuples so that equal entries always
serialize to identical bytes.  Language tags are normalized at parse time;
location strings are kept verbatim and resolved on demand by ``geo``.
"""

from __future__ import annotations

import re
from datetime import datetime
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from langcat import langtag
from langcat.schema import vocab

_EMAIL_RE = re.compile(r"^[^@\s]+@[^@\s]+\.[^@\s]+$")
_URL_RE = re.compile(r"^https?://\S+$")


def _check_vocab(value: Any, allowed: tuple[str, ...], what: str) -> Any:
    if isinstance(value, str) and value not in allowed:
        raise ValueError(f"{value!r} is not a valid {what}; expected one of: " + ", ".join(allowed))
    return value


def _check_email(value: str | None) -> str | None:
    if value is not None and not _EMAIL_RE.match(value):
        raise ValueError(f"{value!r} is not an email address")
    return value


def _check_url(value: str | None) -> str | None:
    if value is not None and not _URL_RE.match(value):
        raise ValueError(f"{value!r} is not an http(s) URL")
    return value


def _choice_key(value: str | vocab.OtherText) -> tuple[int, str]:
    # Orders plain tokens before {"other": ...} escapes; deterministic.
    if isinstance(value, str):
        return (0, value)
    return (1, value.other)


class _Model(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class Provenance(_Model):
    """Who saved the entry, and when."""

    submitter_name: str = Field(min_length=1)
    submitter_email: str
    saved_at: str | None = None

    @field_validator("submitter_email")
    @classmethod
    def _email(cls, v: str) -> str:
        return _check_email(v)

    @field_validator("saved_at")
    @classmethod
    def _iso(cls, v: str | None) -> str | None:
        # Stored verbatim; must parse as ISO-8601 (trailing Z accepted).
        if v is not None:
            try:
                datetime.fromisoformat(v.replace("Z", "+00:00"))
            except ValueError:
                raise ValueError(f"{v!r} is not an ISO-8601 timestamp") from None
        return v


class GeneralInfo(_Model):
    """Identity of the resource: identifier, name, homepage, description."""

    uid: str = Field(min_length=1)
    name: str
    homepage: str | None = None
    description: str = ""

    @field_validator("homepage")
    @classmethod
    def _url(cls, v: str | None) -> str | None:
        return _check_url(v)


class LanguageSelection(_Model):
    """One language answer: a target group, a BCP-47 tag, or both.

    Tags are checked for well-formedness and normalized at parse time.
    """

    group: str | None = None
    tag: str | None = None
    variety_comment: str | None = None

    @field_validator("group")
    @classmethod
    def _group(cls, v: str | None) -> str | None:
        return _check_vocab(v, langtag.TARGET_GROUPS, "language group")

    @field_validator("tag")
    @classmethod
    def _tag(cls, v: str | None) -> str | None:
        if v is None:
            return None
        try:
            return str(langtag.parse_tag(v))
        except langtag.TagParseError as exc:
            raise ValueError(str(exc)) from None


class Custodian(_Model):
    """The person or organization holding the resource.

    Either ``link_uid`` points at an organization entry, or ``name`` and
    ``ctype`` identify the custodian inline (enforced by validation, not
    here).
    """

    link_uid: str | None = None
    name: str | None = None
    ctype: str | None = None
    location: str | None = Field(default=None, min_length=1)
    contact: str | None = None

    @field_validator("ctype")
    @classmethod
    def _ctype(cls, v: str | None) -> str | None:
        return _check_vocab(v, vocab.CUSTODIAN_TYPES, "custodian type")

    @field_validator("contact")
    @classmethod
    def _email(cls, v: str | None) -> str | None:
        return _check_email(v)


class LicenseInfo(_Model):
    """Licensing answers; ``properties`` may be empty (reported as Missing)."""

    has_explicit_terms: str
    properties: tuple[str, ...] = ()
    named_licenses: tuple[str, ...] = ()
    license_text: str | None = None
    usability_assessment: str | None = None

    @field_validator("has_explicit_terms")
    @classmethod
    def _terms(cls, v: str) -> str:
        return _check_vocab(v, vocab.EXPLICIT_TERMS_ANSWERS, "explicit-terms answer")

    @field_validator("properties")
    @classmethod
    def _props(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for item in v:
            _check_vocab(item, vocab.LICENSE_PROPERTIES, "license property")
        return tuple(sorted(set(v)))


class PIIAssessment(_Model):
    """Personally-identifiable-information answers.

    ``contains`` is optional because existing records may lack the answer;
    analytics report that as its own bucket.  ``kinds`` maps a category to
    the kinds expected in the data, each drawn from that category's closed
    list or given as an ``{"other": ...}`` escape.
    """

    contains: str | None = None
    category_likelihoods: dict[str, str] = {}
    kinds: dict[str, tuple[str | vocab.OtherText, ...]] = {}
    no_pii_justification: str | vocab.OtherText | None = None

    @field_validator("contains")
    @classmethod
    def _contains(cls, v: str | None) -> str | None:
        return _check_vocab(v, vocab.PII_CONTAINS_ANSWERS, "PII answer")

    @field_validator("category_likelihoods")
    @classmethod
    def _likelihoods(cls, v: dict[str, str]) -> dict[str, str]:
        for category, likelihood in v.items():
            _check_vocab(category, vocab.PII_CATEGORIES, "PII category")
            _check_vocab(likelihood, vocab.PII_LIKELIHOODS, "PII likelihood")
        return v

    @field_validator("kinds")
    @classmethod
    def _kinds(
        cls, v: dict[str, tuple[str | vocab.OtherText, ...]]
    ) -> dict[str, tuple[str | vocab.OtherText, ...]]:
        out: dict[str, tuple[str | vocab.OtherText, ...]] = {}
        for category, entries in v.items():
            _check_vocab(category, vocab.PII_CATEGORIES, "PII category")
            for item in entries:
                if isinstance(item, str):
                    _check_vocab(item, vocab.PII_KINDS[category], f"{category} PII kind")
            out[category] = tuple(sorted(set(entries), key=_choice_key))
        return out

    @field_validator("no_pii_justification")
    @classmethod
    def _justification(cls, v: str | vocab.OtherText | None) -> str | vocab.OtherText | None:
        return _check_vocab(v, vocab.NO_PII_JUSTIFICATIONS, "no-PII justification")


class Availability(_Model):
    """How the data can be obtained, plus licensing and PII assessments."""

    procurement: str
    download_url: str | None = None
    contact: str | None = None
    license: LicenseInfo
    pii: PIIAssessment

    @field_validator("procurement")
    @classmethod
    def _procurement(cls, v: str) -> str:
        return _check_vocab(v, vocab.PROCUREMENT_MODES, "procurement mode")

    @field_validator("download_url")
    @classmethod
    def _url(cls, v: str | None) -> str | None:
        return _check_url(v)

    @field_validator("contact")
    @classmethod
    def _email(cls, v: str | None) -> str | None:
        return _check_email(v)


class PrimarySourceType(_Model):
    """What kind of source this is; the detail field must match the kind."""

    kind: str | vocab.OtherText
    collection_type: str | vocab.OtherText | None = None
    website_type: str | vocab.OtherText | None = None

    @field_validator("kind")
    @classmethod
    def _kind(cls, v: str | vocab.OtherText) -> str | vocab.OtherText:
        return _check_vocab(v, vocab.SOURCE_KINDS, "source kind")

    @field_validator("collection_type")
    @classmethod
    def _collection(cls, v: str | vocab.OtherText | None) -> str | vocab.OtherText | None:
        return _check_vocab(v, vocab.COLLECTION_TYPES, "collection type")

    @field_validator("website_type")
    @classmethod
    def _website(cls, v: str | vocab.OtherText | None) -> str | vocab.OtherText | None:
        return _check_vocab(v, vocab.WEBSITE_TYPES, "website type")


class DatasetSources(_Model):
    """Where a processed dataset's data came from.

    ``originality = "original"`` means the dataset is not derived from
    primary sources, in which case the remaining fields must stay empty.
    """

    originality: str
    sources_investigable: str | None = None
    linked_primary_uids: tuple[str, ...] = ()
    source_types: tuple[PrimarySourceType, ...] = ()
    source_license: LicenseInfo | None = None

    @field_validator("originality")
    @classmethod
    def _originality(cls, v: str) -> str:
        return _check_vocab(v, vocab.ORIGINALITY, "originality answer")

    @field_validator("sources_investigable")
    @classmethod
    def _investigable(cls, v: str | None) -> str | None:
        return _check_vocab(v, vocab.SOURCES_INVESTIGABLE, "source-investigability answer")


class MagnitudeBucket(_Model):
    """Order-of-magnitude size estimate: the decade [10^k, 10^(k+1))."""

    exponent: int = Field(ge=0, le=12)


class MediaSpec(_Model):
    """Media types, unit of data, and bucketed size estimates."""

    media: tuple[str, ...] = ()
    format_note: str | None = None
    transcribed_from: str | None = None
    size_unit: str | vocab.OtherText
    instance_count_bucket: MagnitudeBucket
    words_per_instance_bucket: MagnitudeBucket

    @field_validator("media")
    @classmethod
    def _media(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for item in v:
            _check_vocab(item, vocab.MEDIA_TYPES, "media type")
        return tuple(sorted(set(v)))

    @field_validator("transcribed_from")
    @classmethod
    def _transcribed(cls, v: str | None) -> str | None:
        return _check_vocab(v, vocab.TRANSCRIPTION_SOURCES, "transcription source")

    @field_validator("size_unit")
    @classmethod
    def _unit(cls, v: str | vocab.OtherText) -> str | vocab.OtherText:
        return _check_vocab(v, vocab.SIZE_UNITS, "size unit")


class CatalogueEntry(_Model):
    """One catalogue record.

    ``locations`` keeps submission order; the first element drives the
    first-location analytics.  Optional sections are None when the resource
    type does not carry them.
    """

    rtype: str
    general: GeneralInfo
    languages: tuple[LanguageSelection, ...] = ()
    locations: tuple[str, ...] = ()
    custodian: Custodian | None = None
    availability: Availability | None = None
    source_type: PrimarySourceType | None = None
    dataset_sources: DatasetSources | None = None
    media: MediaSpec | None = None
    provenance: Provenance

    @field_validator("rtype")
    @classmethod
    def _rtype(cls, v: str) -> str:
        return _check_vocab(v, vocab.RESOURCE_TYPES, "resource type")

    @field_validator("locations")
    @classmethod
    def _locations(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for item in v:
            if not item.strip():
                raise ValueError("location strings must be non-empty")
        return v
