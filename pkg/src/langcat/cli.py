"""Operator command line.

    catalogue validate <file.json> [--data-dir D]
    catalogue import <file.csv|file.json> [--data-dir D]
    catalogue export [--data-dir D]
    catalogue report --table T [--format csv|md] [--group G] [--top N]
                     [--data-dir D | --from export.json]
    catalogue serve [--config path] [--data-dir D] [--host H] [--port P]

Exit codes: 0 success, 1 validation or data problems, 2 I/O problems,
3 usage errors.  ``--data-dir`` defaults to ``./catalogue-data`` and may be
set via ``CATALOGUE_DATA_DIR``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from langcat import csv_io, reports
from langcat.errors import CatalogueError
from langcat.schema.canonical import entry_from_json
from langcat.schema.types import CatalogueEntry
from langcat.schema.validation import validate_entry
from langcat.store import Author, Store

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_USAGE = 3

_DATA_ERROR_KINDS = {"parse-error", "validation-failed", "malformed-csv", "section-not-applicable"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 3, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_data_dir() -> str:
    return os.environ.get("CATALOGUE_DATA_DIR", "./catalogue-data")


def _build_parser() -> _Parser:
    parser = _Parser(prog="catalogue", description="Language resource catalogue tool")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_validate = sub.add_parser("validate", help="validate an entry JSON file")
    p_validate.add_argument("file", help="entry JSON file")
    p_validate.add_argument(
        "--data-dir",
        default=None,
        help="resolve entry links against this store (link checks are skipped otherwise)",
    )

    p_import = sub.add_parser("import", help="import a CSV file or an export JSON array")
    p_import.add_argument("file", help=".csv or .json file")
    p_import.add_argument("--data-dir", default=_default_data_dir())
    p_import.add_argument("--author-name", default="import")
    p_import.add_argument("--author-email", default="import@localhost.invalid")

    p_export = sub.add_parser("export", help="write the catalogue JSON array to stdout")
    p_export.add_argument("--data-dir", default=_default_data_dir())

    p_report = sub.add_parser("report", help="print an aggregate table")
    p_report.add_argument("--table", required=True, choices=sorted(reports.TABLES))
    p_report.add_argument("--format", default="md", choices=["csv", "md"])
    p_report.add_argument("--group", default=None, help="language group for language-regions")
    p_report.add_argument("--top", type=int, default=12, help="row limit for custodian-locations")
    p_report.add_argument("--data-dir", default=None)
    p_report.add_argument("--from", dest="from_file", default=None, help="read an export file")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", default=None, help="JSON config file")
    p_serve.add_argument("--data-dir", default=None)
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)

    return parser


def _print_report(report) -> None:
    for violation in report.violations:
        print(
            f"{violation.severity}: {violation.rule} at {violation.path}: {violation.message}",
            file=sys.stderr,
        )


def _cmd_validate(args) -> int:
    try:
        data = Path(args.file).read_bytes()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        entry = entry_from_json(data)
    except CatalogueError as exc:
        print(f"parse-error: {exc.detail}", file=sys.stderr)
        return EXIT_VALIDATION
    catalogue = None
    if args.data_dir is not None:
        catalogue = Store(args.data_dir).entries()
        catalogue[entry.general.uid] = entry
    report = validate_entry(entry, catalogue)
    _print_report(report)
    return EXIT_OK if report.ok else EXIT_VALIDATION


def _cmd_import(args) -> int:
    author = Author(name=args.author_name, email=args.author_email)
    path = Path(args.file)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_IO
    store = Store(args.data_dir)
    is_csv = path.suffix.lower() == ".csv" or (
        path.suffix.lower() != ".json" and not text.lstrip().startswith("[")
    )
    if is_csv:
        result = csv_io.import_csv(store, text, author)
        for error in result.errors:
            print(f"row {error.row}: {error.rule}: {error.message}", file=sys.stderr)
        print(f"imported {len(result.saved)} entries, {len(result.errors)} rows failed")
        return EXIT_OK if not result.errors else EXIT_VALIDATION
    saved = store.import_catalogue(text, author)
    print(f"imported {len(saved)} entries")
    return EXIT_OK


def _cmd_export(args) -> int:
    store = Store(args.data_dir)
    sys.stdout.buffer.write(store.export_catalogue())
    sys.stdout.buffer.write(b"\n")
    return EXIT_OK


def _entries_from_export(path: str) -> dict[str, CatalogueEntry]:
    raw = json.loads(Path(path).read_text("utf-8"))
    if not isinstance(raw, list):
        raise CatalogueError("export file must hold a JSON array")
    entries = {}
    for item in raw:
        entry = entry_from_json(json.dumps(item, ensure_ascii=False))
        entries[entry.general.uid] = entry
    return entries


def _cmd_report(args, parser: _Parser) -> int:
    if args.from_file is not None and args.data_dir is not None:
        parser.error("use either --data-dir or --from, not both")
    if args.table == "language-regions" and args.group is None:
        parser.error("--table language-regions needs --group")
    try:
        if args.from_file is not None:
            entries = _entries_from_export(args.from_file)
        else:
            entries = Store(args.data_dir or _default_data_dir()).entries()
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read catalogue: {exc}", file=sys.stderr)
        return EXIT_IO
    dist = reports.compute_table(args.table, entries, group=args.group, top=args.top)
    style = reports.TABLES[args.table].style
    if args.format == "csv":
        sys.stdout.write(reports.render_csv(dist, style))
    else:
        sys.stdout.write(reports.render_markdown(dist, style))
    return EXIT_OK


def _cmd_serve(args) -> int:
    from langcat.service.app import run
    from langcat.service.config import load_config

    config = load_config(args.config)
    overrides = {}
    if args.data_dir is not None:
        overrides["data_dir"] = args.data_dir
    if args.host is not None:
        overrides["host"] = args.host
    if args.port is not None:
        overrides["port"] = args.port
    if overrides:
        config = config.model_copy(update=overrides)
    run(config)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "import":
            return _cmd_import(args)
        if args.command == "export":
            return _cmd_export(args)
        if args.command == "report":
            return _cmd_report(args, parser)
        if args.command == "serve":
            return _cmd_serve(args)
    except CatalogueError as exc:
        print(f"{exc.kind}: {exc.detail}", file=sys.stderr)
        return EXIT_VALIDATION if exc.kind in _DATA_ERROR_KINDS else EXIT_IO
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
