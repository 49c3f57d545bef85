"""FastAPI application over a catalogue store.

Every endpoint is a thin adapter: it parses the request, calls one module
operation, and returns that operation's canonical rendering.  Catalogue
errors map to statuses by their machine-readable kind:

    parse-error, validation-failed, section-not-applicable,
    malformed-csv                      -> 400
    not-found                          -> 404
    conflicting-finalize               -> 409
    storage-io                         -> 500

The body of a 400 for validation-failed carries the full violation report.
"""

from __future__ import annotations

import json
import threading
import uuid
from typing import Any

from fastapi import Body, Depends, FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse

from langcat import analytics, csv_io, geo, langtag, reports, review
from langcat.errors import CatalogueError, EntryParseError, NotFoundError, ValidationFailedError
from langcat.schema import vocab
from langcat.schema.canonical import entry_to_canonical_json, parse_error_from
from langcat.schema.sections import SECTION_NAMES, applicable_sections
from langcat.schema.types import CatalogueEntry
from langcat.schema.validation import RULE_CATALOG, validate_entry
from langcat.service import models
from langcat.service.config import ServiceConfig
from langcat.store import Author, SearchFilter, Store

_STATUS_BY_KIND = {
    "parse-error": 400,
    "validation-failed": 400,
    "section-not-applicable": 400,
    "malformed-csv": 400,
    "not-found": 404,
    "conflicting-finalize": 409,
    "storage-io": 500,
}

# URL segment -> report table name.
_TABLE_BY_PATH = {
    "types": "types",
    "languages": "languages",
    "first-locations": "locations",
    "language-regions": "language-regions",
    "custodian-types": "custodian-types",
    "custodian-locations": "custodian-locations",
    "licenses": "licenses",
    "pii": "pii",
    "singletons": "singletons",
}


def _filter_params(
    rtype: str | None = None,
    group: str | None = None,
    macroarea: str | None = None,
    license_property: str | None = None,
    media: str | None = None,
    custodian_type: str | None = None,
    pii_contains: str | None = None,
    q: str | None = None,
) -> SearchFilter:
    return SearchFilter(
        rtype=rtype,
        group=group,
        macroarea=macroarea,
        license_property=license_property,
        media=media,
        custodian_type=custodian_type,
        pii_contains=pii_contains,
        q=q,
    )


def _parse_entry(body: Any) -> CatalogueEntry:
    if not isinstance(body, dict):
        raise EntryParseError("entry JSON must be an object")
    from pydantic import ValidationError

    try:
        return CatalogueEntry.model_validate(body)
    except ValidationError as exc:
        raise parse_error_from(exc) from None


def _entry_dict(entry: CatalogueEntry) -> dict[str, Any]:
    return json.loads(entry_to_canonical_json(entry))


def _schema_payload() -> dict[str, Any]:
    return {
        "resource_types": list(vocab.RESOURCE_TYPES),
        "resource_type_labels": dict(vocab.RESOURCE_TYPE_LABELS),
        "section_order": list(SECTION_NAMES),
        "sections": {
            rtype: [s for s in SECTION_NAMES if s in applicable_sections(rtype)]
            for rtype in vocab.RESOURCE_TYPES
        },
        "language_groups": list(langtag.TARGET_GROUPS),
        "macroareas": dict(geo.MACROAREA_LABELS),
        "rules": dict(RULE_CATALOG),
        "magnitude_exponent_max": 12,
        "vocabularies": {
            "custodian_types": list(vocab.CUSTODIAN_TYPES),
            "custodian_type_labels": dict(vocab.CUSTODIAN_TYPE_LABELS),
            "procurement_modes": list(vocab.PROCUREMENT_MODES),
            "explicit_terms_answers": list(vocab.EXPLICIT_TERMS_ANSWERS),
            "license_properties": list(vocab.LICENSE_PROPERTIES),
            "license_property_labels": dict(vocab.LICENSE_PROPERTY_LABELS),
            "pii_contains_answers": list(vocab.PII_CONTAINS_ANSWERS),
            "pii_contains_labels": dict(vocab.PII_CONTAINS_LABELS),
            "pii_categories": list(vocab.PII_CATEGORIES),
            "pii_likelihoods": list(vocab.PII_LIKELIHOODS),
            "pii_kinds": {k: list(v) for k, v in vocab.PII_KINDS.items()},
            "no_pii_justifications": list(vocab.NO_PII_JUSTIFICATIONS),
            "source_kinds": list(vocab.SOURCE_KINDS),
            "collection_types": list(vocab.COLLECTION_TYPES),
            "website_types": list(vocab.WEBSITE_TYPES),
            "originality": list(vocab.ORIGINALITY),
            "sources_investigable": list(vocab.SOURCES_INVESTIGABLE),
            "media_types": list(vocab.MEDIA_TYPES),
            "transcription_sources": list(vocab.TRANSCRIPTION_SOURCES),
            "size_units": list(vocab.SIZE_UNITS),
        },
    }


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="Language Resource Catalogue", version="0.1.0")
    store = Store(config.data_dir)
    app.state.store = store
    app.state.config = config
    sessions: dict[str, review.ValidationSession] = {}
    sessions_lock = threading.Lock()

    if config.cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(CatalogueError)
    async def _catalogue_error(_request: Request, exc: CatalogueError) -> JSONResponse:
        status = _STATUS_BY_KIND.get(exc.kind, 500)
        body: dict[str, Any] = {
            "status": status,
            "kind": exc.kind,
            "detail": exc.detail,
            "field_path": exc.field_path,
        }
        if isinstance(exc, ValidationFailedError):
            body["report"] = {
                "violations": [v.model_dump() for v in exc.report.violations]
            }
        return JSONResponse(status_code=status, content=body)

    def _session(uid: str, session_id: str) -> review.ValidationSession:
        with sessions_lock:
            session = sessions.get(session_id)
        if session is None or session.uid != uid:
            raise NotFoundError(f"no validation session {session_id!r} for entry {uid!r}")
        return session

    def _session_state(session_id: str, session: review.ValidationSession) -> models.SessionState:
        return models.SessionState(
            session_id=session_id,
            uid=session.uid,
            base_version=session.base_version,
            sections=dict(session.checks),
            edited_sections=sorted(session.edited),
            entry=_entry_dict(session.entry),
        )

    def _record_body(record) -> models.RecordBody:
        return models.RecordBody(
            uid=record.uid,
            base_version=record.base_version,
            validator=models.AuthorBody(name=record.validator.name, email=record.validator.email),
            section_checks=dict(record.section_checks),
            edited_sections=list(record.edited_sections),
            saved_at=record.saved_at,
            complete=record.complete,
        )

    @app.get("/health")
    def health() -> dict[str, Any]:
        return {"status": "ok", "entries": len(store.list_uids())}

    @app.get("/schema")
    def schema() -> dict[str, Any]:
        return _schema_payload()

    @app.post("/entries", status_code=201, response_model=models.SaveResult)
    def save_entry(body: Any = Body(...)) -> models.SaveResult:
        entry = _parse_entry(body)
        author = Author(
            name=entry.provenance.submitter_name,
            email=entry.provenance.submitter_email,
        )
        uid, version = store.save_entry(entry, author)
        return models.SaveResult(uid=uid, version=version)

    @app.get("/entries", response_model=models.EntryList)
    def list_entries(
        flt: SearchFilter = Depends(_filter_params),
        offset: int = Query(0, ge=0),
        limit: int = Query(100, ge=1, le=1000),
    ) -> models.EntryList:
        uids = store.search(flt)
        entries = store.entries()
        page = uids[offset : offset + limit]
        items = [
            models.EntrySummary(
                uid=uid,
                name=entries[uid].general.name,
                rtype=entries[uid].rtype,
                description=entries[uid].general.description,
            )
            for uid in page
        ]
        return models.EntryList(total=len(uids), offset=offset, limit=limit, items=items)

    @app.get("/entries/{uid}", response_model=models.EntryDetail)
    def get_entry(uid: str) -> models.EntryDetail:
        entry = store.load_latest(uid)
        return models.EntryDetail(
            uid=uid,
            version=store.latest_version_no(uid),
            validated=store.is_validated(uid),
            entry=_entry_dict(entry),
        )

    @app.get("/entries/{uid}/versions", response_model=models.VersionList)
    def list_versions(uid: str) -> models.VersionList:
        versions = [
            models.VersionInfo(
                version_no=v.version_no,
                saved_at=v.saved_at,
                author=models.AuthorBody(name=v.author.name, email=v.author.email),
                entry=json.loads(v.payload),
            )
            for v in store.list_versions(uid)
        ]
        return models.VersionList(uid=uid, versions=versions)

    @app.get("/entries/{uid}/validations", response_model=models.RecordList)
    def list_validations(uid: str) -> models.RecordList:
        records = store.validation_records(uid)
        return models.RecordList(
            uid=uid,
            validated=any(r.complete for r in records),
            records=[_record_body(r) for r in records],
        )

    @app.post("/entries/{uid}/validations", response_model=models.SessionState)
    def begin_validation(uid: str, body: models.BeginValidationBody) -> models.SessionState:
        session = review.begin_validation(
            store, uid, Author(name=body.validator.name, email=body.validator.email)
        )
        session_id = uuid.uuid4().hex
        with sessions_lock:
            sessions[session_id] = session
        return _session_state(session_id, session)

    @app.patch(
        "/entries/{uid}/validations/{session_id}/sections/{section}",
        response_model=models.SessionState,
    )
    def check_section(
        uid: str, session_id: str, section: str, body: models.CheckSectionBody
    ) -> models.SessionState:
        session = _session(uid, session_id)
        review.check_section(store, session, section, edit=body.edit)
        return _session_state(session_id, session)

    @app.post(
        "/entries/{uid}/validations/{session_id}/finalize",
        response_model=models.FinalizeResult,
    )
    def finalize(uid: str, session_id: str) -> models.FinalizeResult:
        session = _session(uid, session_id)
        record, new_version = review.finalize_validation(store, session)
        return models.FinalizeResult(record=_record_body(record), new_version=new_version)

    @app.get("/analytics/countries", response_model=models.CountryCounts)
    def countries(
        which: str = Query("locations", pattern="^(locations|custodian)$"),
        flt: SearchFilter = Depends(_filter_params),
    ) -> models.CountryCounts:
        entries = store.entries()
        if not flt.is_empty():
            entries = {u: e for u, e in entries.items() if flt.matches(e)}
        counts = analytics.country_counts(entries, use_custodian=(which == "custodian"))
        rows = []
        for code in sorted(counts):
            centroid = geo.country_centroid(code)
            rows.append(
                models.CountryCount(
                    code=code,
                    name=geo.country_name(code) or code,
                    lat=centroid[0] if centroid else None,
                    lon=centroid[1] if centroid else None,
                    count=counts[code],
                )
            )
        return models.CountryCounts(which=which, countries=rows)

    @app.get("/analytics/{table}")
    def analytics_table(
        table: str,
        flt: SearchFilter = Depends(_filter_params),
        top: int = Query(12, ge=1),
    ) -> dict[str, Any]:
        name = _TABLE_BY_PATH.get(table)
        if name is None:
            raise NotFoundError(f"no analytics table named {table!r}")
        entries = store.entries()
        if not flt.is_empty():
            entries = {u: e for u, e in entries.items() if flt.matches(e)}
        try:
            dist = reports.compute_table(name, entries, group=flt.group, top=top)
        except ValueError as exc:
            raise EntryParseError(str(exc)) from None
        payload = reports.render_json(dist, reports.TABLES[name].style)
        payload["table"] = table
        payload["filter"] = {
            k: v for k, v in flt.model_dump().items() if v is not None
        }
        return payload

    @app.post("/import/csv", response_model=models.ImportResult)
    async def import_csv(
        request: Request,
        author_name: str = Query("csv-import"),
        author_email: str = Query("csv-import@localhost.invalid"),
    ) -> models.ImportResult:
        raw = await request.body()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EntryParseError(f"CSV body is not UTF-8: {exc}") from None
        report = csv_io.import_csv(store, text, Author(name=author_name, email=author_email))
        return models.ImportResult(
            saved=[models.SaveResult(uid=u, version=v) for u, v in report.saved],
            errors=[
                models.ImportRowError(row=e.row, rule=e.rule, message=e.message)
                for e in report.errors
            ],
        )

    @app.get("/export")
    def export() -> Response:
        return Response(content=store.export_catalogue(), media_type="application/json")

    @app.post("/preview", response_model=models.PreviewResult)
    def preview(body: Any = Body(...)) -> models.PreviewResult:
        entry = _parse_entry(body)
        catalogue = store.entries()
        catalogue[entry.general.uid] = entry
        report = validate_entry(entry, catalogue)
        return models.PreviewResult(
            canonical_json=entry_to_canonical_json(entry).decode("utf-8"),
            violations=[v.model_dump() for v in report.violations],
        )

    return app


def run(config: ServiceConfig) -> None:
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="warning")
