"""Command-line entry point.

    harmonise codegen   --vocab units.ttl --kind unit --template t.tmpl --out-manifest m.tsv --out-source s.py
    harmonise harmonise --config cfg.yaml --catalog m.tsv --records rows.csv [--out g.nt] [--strict]
    harmonise lint      --graph g.ttl

Exit codes: 0 success, 1 bad input, 2 write failure, 3 some records
skipped, 4 lint violations.
"""

import argparse
import os
import sys

from . import pipeline
from .codegen import KINDS, DEFAULT_UNIT_TEMPLATE, extract_vocab_entries, generate_catalog, load_catalog
from .config import load_config
from .errors import HarmoniseError
from .lint import lint_graph
from .sparql_results import parse_sparql_results_csv, parse_sparql_results_json
from .turtle import parse_turtle

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_WRITE = 2
EXIT_PARTIAL = 3
EXIT_LINT = 4


def _err(msg):
    print(f"harmonise: {msg}", file=sys.stderr)


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def read_vocabulary(path):
    """Parse a vocabulary file by extension: .ttl/.nt, .srj/.json, or .csv."""
    text = _read(path)
    ext = os.path.splitext(path)[1].lower()
    if ext in (".ttl", ".nt", ".turtle"):
        return parse_turtle(text)[0]
    if ext in (".srj", ".json"):
        return parse_sparql_results_json(text)
    if ext == ".csv":
        return parse_sparql_results_csv(text)
    raise HarmoniseError(f"{path}: unrecognised vocabulary file type {ext!r} (use .ttl, .srj or .csv)")


def cmd_codegen(args):
    try:
        source = read_vocabulary(args.vocab)
        template = _read(args.template) if args.template else DEFAULT_UNIT_TEMPLATE
        problems = []
        entries = extract_vocab_entries(source, args.kind, problems)
        _, manifest, code = generate_catalog(entries, template, kind=args.kind)
    except OSError as e:
        _err(f"{e.filename}: {e.strerror}")
        return EXIT_INPUT
    except HarmoniseError as e:
        _err(f"{args.vocab}: {e}")
        return EXIT_INPUT
    for p in problems:
        _err(f"skipped {p.subject}: {p.reason} ({p.detail})")
    try:
        _write(args.out_manifest, manifest)
        if args.out_source:
            _write(args.out_source, code)
    except OSError as e:
        _err(f"cannot write {e.filename}: {e.strerror}")
        return EXIT_WRITE
    print(f"{len(entries)} entries")
    return EXIT_OK


def cmd_harmonise(args):
    try:
        config = load_config(args.config)
        catalog = load_catalog(_read(args.catalog))
        rows = pipeline.read_records(_read(args.records), config.input_format,
                                     needed=sorted(set(config.columns.values())))
        result = pipeline.run(config, catalog, rows, strict=args.strict)
    except OSError as e:
        _err(f"{e.filename}: {e.strerror}")
        return EXIT_INPUT
    except HarmoniseError as e:
        _err(str(e))
        return EXIT_INPUT

    for d in result.diagnostics:
        _err(str(d))
    print(result.summary(), file=sys.stderr)
    if result.aborted:
        return EXIT_INPUT

    text = pipeline.render(result.graph, config)
    out = args.out or config.output_path
    if out:
        try:
            _write(out, text)
        except OSError as e:
            _err(f"cannot write {e.filename}: {e.strerror}")
            return EXIT_WRITE
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return EXIT_PARTIAL if result.skipped else EXIT_OK


def cmd_lint(args):
    try:
        graph, _ = parse_turtle(_read(args.graph))
    except OSError as e:
        _err(f"{e.filename}: {e.strerror}")
        return EXIT_INPUT
    except HarmoniseError as e:
        _err(f"{args.graph}:{e}")
        return EXIT_INPUT
    violations = lint_graph(graph)
    for v in violations:
        print(v)
    return EXIT_LINT if violations else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="harmonise", description="Harmonise observation records into SOSA/QUDT RDF.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codegen", help="generate an accessor catalog from vocabulary data")
    p.add_argument("--vocab", required=True, help="vocabulary file: Turtle (.ttl), SPARQL JSON results (.srj) or CSV results (.csv)")
    p.add_argument("--kind", default="unit", choices=KINDS)
    p.add_argument("--template", help="accessor source template (default: built-in unit template)")
    p.add_argument("--out-manifest", required=True)
    p.add_argument("--out-source")
    p.set_defaults(func=cmd_codegen)

    p = sub.add_parser("harmonise", help="harmonise a CSV/JSON records file")
    p.add_argument("--config", required=True)
    p.add_argument("--catalog", required=True, help="unit manifest written by 'codegen'")
    p.add_argument("--records", required=True)
    p.add_argument("--out", help="output file (default: config output.path, else standard output)")
    p.add_argument("--strict", action="store_true", help="stop with exit 1 at the first bad record")
    p.set_defaults(func=cmd_harmonise)

    p = sub.add_parser("lint", help="check a graph against the observation patterns")
    p.add_argument("--graph", required=True, help="Turtle or N-Triples file")
    p.set_defaults(func=cmd_lint)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
