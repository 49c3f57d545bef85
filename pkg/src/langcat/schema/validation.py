"""Cross-field entry validation.

``validate_entry`` checks every conditional rule the form implies: section
applicability per resource type, identifier grammar, required answers,
answer-pair coherence, and cross-entry references.  Violations are data, not
exceptions; each carries a stable rule id, the field path, and a message.
Each violated rule appears exactly once per report; when a rule is broken at
several paths the first path is reported and the rest are listed in the
message.

Persistence refuses entries whose report contains error-severity violations;
warnings (currently only a missing custodian) never block a save.
"""

from __future__ import annotations

import re
from typing import Literal, Mapping

from pydantic import BaseModel, ConfigDict

from langcat import langtag
from langcat.schema.sections import applicable_sections
from langcat.schema.types import (
    CatalogueEntry,
    LicenseInfo,
    MediaSpec,
    PrimarySourceType,
)

_UID_RE = re.compile(r"^[a-z0-9-]{3,64}$")

# Rule id -> one-line description; ordering here fixes report ordering.
RULE_CATALOG: dict[str, str] = {
    "uid-grammar": "uid must be 3-64 characters of lowercase letters, digits, and hyphens",
    "name-required": "the resource name must be non-empty",
    "description-required": "the description must be non-empty",
    "languages-required": "at least one language selection is required",
    "language-selection-empty": "a language selection needs a group, a tag, or both",
    "language-group-mismatch": "the language tag belongs to a different group than stated",
    "section-applicability": "the sections present must match the resource type",
    "custodian-missing": "no custodian is recorded",
    "custodian-identity-required": "a custodian needs a link to an organization entry, or a name and type",
    "custodian-link-target": "a custodian link must point at an organization entry",
    "download-url-required": "direct-download availability requires a download URL",
    "availability-contact-required": "contact-based availability requires a contact address",
    "license-usability-required": "unclear license terms require a usability assessment",
    "pii-justification-required": "answering that the data has no PII requires a justification",
    "pii-kinds-likelihood": "listing PII kinds for a category contradicts a likelihood of none",
    "source-kind-detail": "the source-type detail must match the chosen kind",
    "original-no-sources": "an original dataset must leave the source fields empty",
    "link-unresolved": "a linked entry does not exist in the catalogue",
    "link-target-type": "a linked source must be a primary-source entry",
    "transcription-media": "transcribed data must include text among its media",
    "media-empty": "at least one media type is required",
}

WARNING_RULES = frozenset({"custodian-missing"})

_OPTIONAL_SECTIONS = ("custodian", "availability", "source_type", "dataset_sources", "media")


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: str
    path: str
    message: str
    severity: Literal["error", "warning"]


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        """True when nothing blocks a save (warnings allowed)."""
        return not self.errors()

    def errors(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.severity == "error")

    def warnings(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.severity == "warning")

    def rules(self) -> tuple[str, ...]:
        return tuple(v.rule for v in self.violations)


def _check_license(found: list, path: str, lic: LicenseInfo) -> None:
    if lic.has_explicit_terms == "unclear":
        if not (lic.usability_assessment or "").strip():
            found.append(
                (
                    "license-usability-required",
                    f"{path}.usability_assessment",
                    "license terms are unclear but no usability assessment is given",
                )
            )


def _check_source_type(found: list, path: str, st: PrimarySourceType) -> None:
    problems = []
    if st.kind == "collection":
        if st.collection_type is None:
            problems.append("kind is collection but collection_type is missing")
        if st.website_type is not None:
            problems.append("kind is collection but website_type is set")
    elif st.kind == "website":
        if st.website_type is None:
            problems.append("kind is website but website_type is missing")
        if st.collection_type is not None:
            problems.append("kind is website but collection_type is set")
    else:
        if st.collection_type is not None or st.website_type is not None:
            problems.append("a free-text kind takes no collection or website detail")
    for message in problems:
        found.append(("source-kind-detail", path, message))


def _check_media(found: list, path: str, media: MediaSpec) -> None:
    if not media.media:
        found.append(("media-empty", f"{path}.media", "no media types selected"))
    if media.transcribed_from is not None and "text" not in media.media:
        found.append(
            (
                "transcription-media",
                f"{path}.transcribed_from",
                "transcribed_from is set but text is not among the media types",
            )
        )


def validate_entry(
    entry: CatalogueEntry,
    catalogue: Mapping[str, CatalogueEntry] | None = None,
) -> ValidationReport:
    """Validate one entry, resolving links against ``catalogue`` when given.

    ``catalogue`` maps uid to the latest entry; pass None to skip
    cross-entry reference checks (for standalone file validation).
    """
    found: list[tuple[str, str, str]] = []

    if not _UID_RE.match(entry.general.uid):
        found.append(
            (
                "uid-grammar",
                "general.uid",
                f"uid {entry.general.uid!r} must match [a-z0-9-]{{3,64}}",
            )
        )
    if not entry.general.name.strip():
        found.append(("name-required", "general.name", "name is empty"))
    if not entry.general.description.strip():
        found.append(("description-required", "general.description", "description is empty"))

    if not entry.languages:
        found.append(("languages-required", "languages", "no language selections"))
    for i, sel in enumerate(entry.languages):
        if sel.group is None and sel.tag is None:
            found.append(
                ("language-selection-empty", f"languages[{i}]", "neither group nor tag given")
            )
        elif sel.group is not None and sel.tag is not None:
            derived = langtag.group_of_text(sel.tag)
            if derived is not None and derived != sel.group:
                found.append(
                    (
                        "language-group-mismatch",
                        f"languages[{i}]",
                        f"tag {sel.tag!r} maps to group {derived}, not {sel.group}",
                    )
                )

    allowed = applicable_sections(entry.rtype)
    for name in _OPTIONAL_SECTIONS:
        present = getattr(entry, name) is not None
        if present and name not in allowed:
            found.append(
                (
                    "section-applicability",
                    name,
                    f"a {entry.rtype} entry does not carry the {name} section",
                )
            )
        if not present and name in allowed and name != "custodian":
            found.append(
                (
                    "section-applicability",
                    name,
                    f"a {entry.rtype} entry requires the {name} section",
                )
            )

    if entry.custodian is None:
        found.append(("custodian-missing", "custodian", "no custodian recorded"))
    else:
        cust = entry.custodian
        if cust.link_uid is None:
            if not (cust.name or "").strip() or cust.ctype is None:
                found.append(
                    (
                        "custodian-identity-required",
                        "custodian",
                        "custodian has no organization link and lacks a name or type",
                    )
                )
        elif catalogue is not None:
            target = catalogue.get(cust.link_uid)
            if target is None:
                found.append(
                    (
                        "link-unresolved",
                        "custodian.link_uid",
                        f"no entry with uid {cust.link_uid!r}",
                    )
                )
            elif target.rtype != "organization":
                found.append(
                    (
                        "custodian-link-target",
                        "custodian.link_uid",
                        f"entry {cust.link_uid!r} is a {target.rtype}, not an organization",
                    )
                )

    if entry.availability is not None:
        avail = entry.availability
        if avail.procurement == "online_direct_download":
            if avail.download_url is None:
                found.append(
                    (
                        "download-url-required",
                        "availability.download_url",
                        "direct download selected but no URL given",
                    )
                )
        else:
            custodian_contact = entry.custodian.contact if entry.custodian else None
            if avail.contact is None and custodian_contact is None:
                found.append(
                    (
                        "availability-contact-required",
                        "availability.contact",
                        "no contact address on the availability section or the custodian",
                    )
                )
        _check_license(found, "availability.license", avail.license)
        pii = avail.pii
        if pii.contains == "no" and pii.no_pii_justification is None:
            found.append(
                (
                    "pii-justification-required",
                    "availability.pii.no_pii_justification",
                    "answered no to PII without a justification",
                )
            )
        for category in sorted(pii.kinds):
            if pii.kinds[category] and pii.category_likelihoods.get(category, "none") == "none":
                found.append(
                    (
                        "pii-kinds-likelihood",
                        f"availability.pii.category_likelihoods.{category}",
                        f"kinds listed for {category} but its likelihood is none or missing",
                    )
                )

    if entry.source_type is not None:
        _check_source_type(found, "source_type", entry.source_type)

    if entry.dataset_sources is not None:
        ds = entry.dataset_sources
        if ds.originality == "original":
            filled = [
                name
                for name, value in (
                    ("sources_investigable", ds.sources_investigable),
                    ("linked_primary_uids", ds.linked_primary_uids or None),
                    ("source_types", ds.source_types or None),
                    ("source_license", ds.source_license),
                )
                if value is not None
            ]
            if filled:
                found.append(
                    (
                        "original-no-sources",
                        f"dataset_sources.{filled[0]}",
                        "original dataset must not fill: " + ", ".join(filled),
                    )
                )
        if catalogue is not None:
            for i, uid in enumerate(ds.linked_primary_uids):
                target = catalogue.get(uid)
                path = f"dataset_sources.linked_primary_uids[{i}]"
                if target is None:
                    found.append(("link-unresolved", path, f"no entry with uid {uid!r}"))
                elif target.rtype != "primary_source":
                    found.append(
                        (
                            "link-target-type",
                            path,
                            f"entry {uid!r} is a {target.rtype}, not a primary source",
                        )
                    )
        for i, st in enumerate(ds.source_types):
            _check_source_type(found, f"dataset_sources.source_types[{i}]", st)
        if ds.source_license is not None:
            _check_license(found, "dataset_sources.source_license", ds.source_license)

    if entry.media is not None:
        _check_media(found, "media", entry.media)

    return _build_report(found)


def _build_report(found: list[tuple[str, str, str]]) -> ValidationReport:
    # One violation per rule: first path wins, extra paths go in the message.
    by_rule: dict[str, list[tuple[str, str]]] = {}
    for rule, path, message in found:
        by_rule.setdefault(rule, []).append((path, message))
    violations = []
    for rule in RULE_CATALOG:
        hits = by_rule.get(rule)
        if not hits:
            continue
        path, message = hits[0]
        if len(hits) > 1:
            message += " (also at: " + ", ".join(p for p, _ in hits[1:]) + ")"
        violations.append(
            Violation(
                rule=rule,
                path=path,
                message=message,
                severity="warning" if rule in WARNING_RULES else "error",
            )
        )
    return ValidationReport(violations=tuple(violations))
