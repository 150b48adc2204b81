"""
Antipodal brightness analysis of a grayscale image.

The image frame is the box [0, W-1] x [0, H-1]. Brightness is restricted to
the boundary of that box, which carries c_1 or c_2 adjacency restricted to it,
and the reflection (col, row) -> (W-1-col, H-1-row) pairs opposite boundary
pixels. The 1-D Borsuk-Ulam theorem then promises an opposite pair whose
brightness differs by less than twice the Lipschitz constant.

Interior pixels never influence the report.
"""

import logging

from models import AnalysisReport, BestPair
from services.antipode import NBox, box_boundary, box_involution
from services.borsuk_ulam import antipodal_witness_1d
from services.errors import InvalidInputError
from services.maps import GridFunction, min_lipschitz
from services.pgm import GrayImage

logger = logging.getLogger(__name__)

ADJACENCIES = {"c1": 1, "c2": 2}


def boundary_brightness(image: GrayImage, adjacency: str = "c2") -> GridFunction:
    """Brightness restricted to the frame boundary, as a function into (Z, c_1)."""
    if adjacency not in ADJACENCIES:
        raise InvalidInputError(f"adjacency must be one of {sorted(ADJACENCIES)}, got {adjacency!r}")
    if image.width < 2 or image.height < 2:
        raise InvalidInputError(f"image must be at least 2x2, got {image.width}x{image.height}")
    box = NBox([(0, image.width - 1), (0, image.height - 1)])
    boundary = box_boundary(box, ADJACENCIES[adjacency])
    return GridFunction.from_scalars(boundary, {p: image.brightness(*p) for p in boundary.sorted_points})


def analyze(image: GrayImage, adjacency: str = "c2") -> AnalysisReport:
    """
    Lipschitz constant on the boundary and the best opposite pair.

    Args:
        image: Grayscale image, at least 2x2
        adjacency: "c1" or "c2", restricted to the boundary

    Returns:
        AnalysisReport; theorem_satisfied is None when the boundary is constant
    """
    f = boundary_brightness(image, adjacency)
    box = NBox([(0, image.width - 1), (0, image.height - 1)])
    inv = box_involution(box, ADJACENCIES[adjacency])

    lipschitz = min_lipschitz(f)
    witness = antipodal_witness_1d(f.domain, inv, f)
    report = AnalysisReport(
        image_size=(image.width, image.height),
        adjacency=adjacency,
        lipschitz_constant=lipschitz.constant,
        lipschitz_witness=lipschitz.witness,
        bound=2 * lipschitz.constant,
        best_pair=BestPair(x=witness.point, antipode=witness.antipodal_point, gap=witness.distance),
        theorem_satisfied=witness.theorem_satisfied,
    )
    logger.info(
        "analyzed %dx%d image: m=%d, best gap %d at %s",
        image.width, image.height, report.lipschitz_constant, report.best_pair.gap, report.best_pair.x,
    )
    return report
