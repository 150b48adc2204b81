"""
Command-line entry point and FastAPI application.

    python main.py analyze image.pgm --adjacency c2 [--json|--summary] [--annotate out.png]
    python main.py verify --scope {dim1|highdim|counterexample|lipschitz|all} --seed 42
    python main.py regularity --dim 3 --k 2 [--timing]
    python main.py demo-counterexample
    python main.py serve [--port 8000]

Exit codes: 0 success, 1 invalid input, 2 a theorem or regularity finding.
JSON goes to stdout, logs to stderr.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

import uvicorn
from fastapi import FastAPI

import config
from routes.analysis import router as analysis_router
from services.analysis import analyze
from services.borsuk_ulam import counterexample_report
from services.errors import DigitalTopologyError, InvalidInputError, TheoremViolation, UnsupportedError
from services.image_markers import AnalysisMarker
from services.pgm import read_pgm
from services.regularity import check_regularity, finding_document
from services.verification import SCOPES, verify_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FINDING = 2

app = FastAPI(title="digital-borsuk-ulam")
app.include_router(analysis_router)


@app.get("/api/health")
def health():
    return {"status": "ok"}


def _emit(document) -> None:
    if hasattr(document, "model_dump_json"):
        print(document.model_dump_json(indent=2))
    else:
        print(json.dumps(document, indent=2))


# ============================================================================
# Subcommands
# ============================================================================

def cmd_analyze(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise InvalidInputError(f"cannot read {args.file}: {e.strerror}")
    image = read_pgm(data)
    report = analyze(image, args.adjacency)

    if args.summary:
        pair = report.best_pair
        witness = report.lipschitz_witness
        print(f"image {report.image_size[0]}x{report.image_size[1]}, boundary adjacency {report.adjacency}")
        if witness is not None:
            print(f"Lipschitz constant {report.lipschitz_constant} (pixels {witness.a} and {witness.b}, gap {witness.gap})")
        else:
            print(f"Lipschitz constant {report.lipschitz_constant}")
        print(f"opposite pixels {pair.x} and {pair.antipode} differ by {pair.gap} (bound {report.bound})")
        if report.theorem_satisfied is None:
            print("constant boundary: nothing to check")
        else:
            print("bound holds" if report.theorem_satisfied else "BOUND VIOLATED")
    else:
        _emit(report)

    if args.annotate:
        AnalysisMarker().mark(image, report).save(args.annotate, format="PNG")
        logger.info("annotated image written to %s", args.annotate)

    return EXIT_FINDING if report.theorem_satisfied is False else EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(args.scope, args.seed)
    _emit(report)
    return EXIT_OK if report.passed else EXIT_FINDING


def cmd_regularity(args) -> int:
    finding = check_regularity(args.dim, args.k)
    _emit(finding_document(finding, args.timing))
    return EXIT_OK if finding.verdict == "regular-in-window" else EXIT_FINDING


def cmd_demo_counterexample(args) -> int:
    report = counterexample_report()
    _emit(report)
    return EXIT_OK if report.claims_reproduced else EXIT_FINDING


def cmd_serve(args) -> int:
    uvicorn.run("main:app", host=args.host, port=args.port, reload=config.DEBUG)
    return EXIT_OK


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the invalid-input exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(
        prog="main.py",
        description="Digital Borsuk-Ulam theorems: witnesses, verification and image analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Opposite boundary pixels of near-equal brightness in a PGM image")
    p.add_argument("file", help="PGM file (P2 or P5)")
    p.add_argument("--adjacency", choices=["c1", "c2"], default="c2", help="Boundary adjacency (default c2)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--summary", action="store_true", help="Human-readable summary")
    p.add_argument("--annotate", metavar="PNG", help="Also write the marked, magnified image")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("verify", help="Run theorem verification corpora")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("regularity", help="Finite-window regularity check of c_k on Z^n")
    p.add_argument("--dim", type=int, required=True, help="Dimension n")
    p.add_argument("--k", type=int, required=True, help="Adjacency parameter k <= n")
    p.add_argument("--timing", action="store_true", help="Include runtime in the statistics")
    p.set_defaults(handler=cmd_regularity)

    p = sub.add_parser("demo-counterexample", help="Re-check the (c_1,c_1) counterexample on the 3-cube boundary")
    p.set_defaults(handler=cmd_demo_counterexample)

    p = sub.add_parser("serve", help="Start the HTTP API")
    p.add_argument("--host", default="0.0.0.0")
    p.add_argument("--port", type=int, default=config.SERVER_PORT)
    p.set_defaults(handler=cmd_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    try:
        return args.handler(args)
    except (InvalidInputError, UnsupportedError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as e:
        print(f"finding: {e}", file=sys.stderr)
        print(json.dumps(e.instance, indent=2, default=str))
        return EXIT_FINDING
    except DigitalTopologyError as e:
        logger.exception("unexpected failure")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
