"""Entry data model: vocabularies, types, sections, validation, canonical JSON."""

from langcat.schema.canonical import entry_from_json, entry_to_canonical_json
from langcat.schema.sections import SECTION_NAMES, applicable_sections, apply_section_edit
from langcat.schema.types import (
    Availability,
    CatalogueEntry,
    Custodian,
    DatasetSources,
    GeneralInfo,
    LanguageSelection,
    LicenseInfo,
    MagnitudeBucket,
    MediaSpec,
    PIIAssessment,
    PrimarySourceType,
    Provenance,
)
from langcat.schema.validation import ValidationReport, Violation, validate_entry
from langcat.schema.vocab import OtherText

__all__ = [
    "Availability",
    "CatalogueEntry",
    "Custodian",
    "DatasetSources",
    "GeneralInfo",
    "LanguageSelection",
    "LicenseInfo",
    "MagnitudeBucket",
    "MediaSpec",
    "OtherText",
    "PIIAssessment",
    "PrimarySourceType",
    "Provenance",
    "SECTION_NAMES",
    "ValidationReport",
    "Violation",
    "applicable_sections",
    "apply_section_edit",
    "entry_from_json",
    "entry_to_canonical_json",
    "validate_entry",
]
