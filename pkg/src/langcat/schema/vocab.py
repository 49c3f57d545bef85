"""Closed vocabularies used across the entry form.

Multiple-choice questions accept exactly the values listed here; several of
them additionally accept a free-text escape written as ``{"other": "..."}``
in JSON (the ``OtherText`` model).  Display labels for report tables live
next to the tokens so the CLI and the API render the same strings.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

RESOURCE_TYPES = ("primary_source", "processed_dataset", "organization")

RESOURCE_TYPE_LABELS = {
    "primary_source": "Primary source",
    "processed_dataset": "Processed dataset",
    "organization": "Organization",
}

CUSTODIAN_TYPES = (
    "university_or_research",
    "commercial",
    "nonprofit_ngo",
    "private_individual",
    "government",
    "library_museum_archive",
    "community",
    "startup",
)

CUSTODIAN_TYPE_LABELS = {
    "university_or_research": "University or research institution",
    "commercial": "Commercial entity",
    "nonprofit_ngo": "Nonprofit or NGO",
    "private_individual": "Private individual",
    "government": "Government organization",
    "library_museum_archive": "Library, museum, or archive",
    "community": "Community",
    "startup": "Startup",
}

PROCUREMENT_MODES = (
    "online_direct_download",
    "online_after_contact",
    "contact_custodian_only",
)

EXPLICIT_TERMS_ANSWERS = ("yes", "no", "unclear")

LICENSE_PROPERTIES = (
    "open_license",
    "public_domain",
    "research_use",
    "non_commercial_use",
    "copyright",
    "multiple_licenses",
    "do_not_distribute",
)

LICENSE_PROPERTY_LABELS = {
    "open_license": "Open license",
    "public_domain": "Public domain",
    "research_use": "Research use",
    "non_commercial_use": "Non-commercial use",
    "copyright": "Copyright",
    "multiple_licenses": "Multiple licenses",
    "do_not_distribute": "Do not distribute",
}

PII_CONTAINS_ANSWERS = ("yes", "yes_author_name_only", "no", "unclear")

PII_CONTAINS_LABELS = {
    "yes": "Yes",
    "yes_author_name_only": "Yes (text author's name only)",
    "no": "No",
    "unclear": "Unclear",
    "answer_missing": "Answer missing",
}

PII_CATEGORIES = ("general", "numeric", "sensitive")

PII_LIKELIHOODS = ("very_likely", "somewhat_likely", "unlikely", "none")

# Kind lists per PII category; each list also accepts an {"other": ...}
# escape in entry data.
PII_KINDS = {
    "general": (
        "names",
        "physical_or_email_addresses",
        "website_accounts_or_handles",
        "dates",
        "full_face_photographs",
        "biometric_identifiers",
    ),
    "numeric": (
        "contact_numbers",
        "vehicle_or_device_identifiers",
        "ip_addresses",
        "medical_or_health_plan_numbers",
        "other_unique_identifiers",
    ),
    "sensitive": (
        "racial_or_ethnic_origin",
        "political_opinions",
        "religious_or_philosophical_beliefs",
        "trade_union_membership",
        "genetic_data",
        "health_data",
        "sex_life_or_sexual_orientation",
    ),
}

NO_PII_JUSTIFICATIONS = ("fictional", "general_knowledge")

SOURCE_KINDS = ("collection", "website")

COLLECTION_TYPES = (
    "books_or_publishers",
    "scientific_articles_journals",
    "news_articles",
    "radio_programs",
    "movies_documentaries",
    "podcasts",
)

WEBSITE_TYPES = (
    "social_media",
    "forum",
    "news_or_magazine",
    "wiki",
    "blog",
    "content_repository",
)

ORIGINALITY = ("original", "from_primary_sources")

SOURCES_INVESTIGABLE = ("documented", "described", "openly_available", "no")

MEDIA_TYPES = ("text", "audiovisual", "image")

TRANSCRIPTION_SOURCES = ("audiovisual", "image")

SIZE_UNITS = ("articles", "posts", "dialogues", "episodes", "books", "webpages")


class OtherText(BaseModel):
    """Free-text escape for multiple-choice questions, ``{"other": "..."}``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    other: str = Field(min_length=1)
