"""Request and response bodies for the HTTP API."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel


class AuthorBody(BaseModel):
    name: str
    email: str


class SaveResult(BaseModel):
    uid: str
    version: int


class EntrySummary(BaseModel):
    uid: str
    name: str
    rtype: str
    description: str


class EntryList(BaseModel):
    total: int
    offset: int
    limit: int
    items: list[EntrySummary]


class EntryDetail(BaseModel):
    uid: str
    version: int
    validated: bool
    entry: dict[str, Any]


class VersionInfo(BaseModel):
    version_no: int
    saved_at: str
    author: AuthorBody
    entry: dict[str, Any]


class VersionList(BaseModel):
    uid: str
    versions: list[VersionInfo]


class BeginValidationBody(BaseModel):
    validator: AuthorBody


class SessionState(BaseModel):
    session_id: str
    uid: str
    base_version: int
    sections: dict[str, bool]
    edited_sections: list[str]
    entry: dict[str, Any]


class CheckSectionBody(BaseModel):
    edit: Any = None


class RecordBody(BaseModel):
    uid: str
    base_version: int
    validator: AuthorBody
    section_checks: dict[str, bool]
    edited_sections: list[str]
    saved_at: str
    complete: bool


class FinalizeResult(BaseModel):
    record: RecordBody
    new_version: int | None


class RecordList(BaseModel):
    uid: str
    validated: bool
    records: list[RecordBody]


class ImportRowError(BaseModel):
    row: int
    rule: str
    message: str


class ImportResult(BaseModel):
    saved: list[SaveResult]
    errors: list[ImportRowError]


class PreviewResult(BaseModel):
    canonical_json: str
    violations: list[dict[str, Any]]


class CountryCount(BaseModel):
    code: str
    name: str
    lat: float | None
    lon: float | None
    count: int


class CountryCounts(BaseModel):
    which: str
    countries: list[CountryCount]
