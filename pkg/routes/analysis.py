"""
HTTP surface for the analysis, verification and regularity commands.

Returns the same JSON documents as the command line. Precondition failures map
to 400, theorem or regularity findings raised as exceptions map to 422.

LIMITATIONS:
- Everything runs in the request; `verify?scope=all` takes minutes.
- No upload size limit beyond what the server imposes.
"""

import logging

from fastapi import APIRouter, File, HTTPException, Query, Response, UploadFile

import config
from models import AnalysisReport, CounterexampleReport, VerificationReport
from services.analysis import analyze
from services.borsuk_ulam import counterexample_report
from services.errors import DigitalTopologyError, InvalidInputError, TheoremViolation, UnsupportedError
from services.image_markers import AnalysisMarker, encode_png
from services.pgm import read_pgm
from services.regularity import check_regularity, finding_document
from services.verification import verify_suite

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api", tags=["Analysis"])


def _http_error(e: DigitalTopologyError) -> HTTPException:
    if isinstance(e, (InvalidInputError, UnsupportedError)):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, TheoremViolation):
        logger.warning("finding reported over HTTP: %s", e)
        return HTTPException(status_code=422, detail={"message": str(e), "instance": e.instance})
    return HTTPException(status_code=500, detail=str(e))


@router.post("/analyze", response_model=AnalysisReport)
async def analyze_upload(
    file: UploadFile = File(..., description="PGM image, P2 or P5"),
    adjacency: str = Query("c2", description="Boundary adjacency: c1 or c2"),
):
    """Antipodal boundary analysis of an uploaded graymap."""
    data = await file.read()
    try:
        return analyze(read_pgm(data), adjacency)
    except DigitalTopologyError as e:
        raise _http_error(e)


@router.post("/analyze/annotated")
async def analyze_annotated(
    file: UploadFile = File(..., description="PGM image, P2 or P5"),
    adjacency: str = Query("c2", description="Boundary adjacency: c1 or c2"),
    scale: int = Query(config.MARK_SCALE, ge=1, le=32, description="Pixel magnification"),
):
    """The analysis drawn on the magnified image, as PNG."""
    data = await file.read()
    try:
        image = read_pgm(data)
        report = analyze(image, adjacency)
    except DigitalTopologyError as e:
        raise _http_error(e)
    marked = AnalysisMarker(scale).mark(image, report)
    return Response(content=encode_png(marked), media_type="image/png")


@router.get("/regularity")
def regularity(
    dim: int = Query(..., ge=1, description="Lattice dimension n"),
    k: int = Query(..., ge=1, description="Adjacency parameter k <= n"),
    timing: bool = Query(False, description="Include runtime in the statistics"),
):
    """Finite-window regularity verdict for c_k on Z^n."""
    try:
        return finding_document(check_regularity(dim, k), timing)
    except DigitalTopologyError as e:
        raise _http_error(e)


@router.get("/verify", response_model=VerificationReport)
def verify(
    scope: str = Query("counterexample", description="dim1, highdim, counterexample, lipschitz or all"),
    seed: int = Query(config.DEFAULT_SEED, description="Seed of the randomized corpora"),
):
    """Run a theorem verification suite."""
    try:
        return verify_suite(scope, seed)
    except DigitalTopologyError as e:
        raise _http_error(e)


@router.get("/counterexample", response_model=CounterexampleReport)
def counterexample():
    """Re-check the (c_1, c_1)-continuous map without a c_1 antipodal match."""
    return counterexample_report()
