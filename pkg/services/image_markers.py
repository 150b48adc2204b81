"""
Annotated rendering of an antipodal analysis.

Draws the grayscale image magnified, outlines the boundary frame, and marks the
best opposite pair (red, joined by a line through the center) and the Lipschitz
witness pair (blue).

LIMITATION: Uses the default Pillow font; labels overlap on images narrower
than about 40 pixels.
"""

import io
import logging
from typing import Optional, Tuple

from PIL import Image, ImageDraw, ImageFont

import config
from models import AnalysisReport
from services.pgm import GrayImage

logger = logging.getLogger(__name__)


class AnalysisMarker:
    """
    Renders AnalysisReport results on top of the analyzed image.

    Args:
        scale: Pixel magnification; defaults to BU_MARK_SCALE
    """

    def __init__(self, scale: Optional[int] = None):
        self.scale = max(1, scale or config.MARK_SCALE)
        self.frame_color = (0, 200, 0, 120)
        self.pair_color = (255, 0, 0, 255)
        self.witness_color = (0, 80, 255, 255)
        self.text_color = (255, 255, 255, 255)
        self.text_bg_color = (0, 0, 0, 180)
        self.font = ImageFont.load_default()

    def mark(self, image: GrayImage, report: AnalysisReport) -> Image.Image:
        """
        Draw the report on a magnified RGBA copy of the image.

        Args:
            image: The analyzed image
            report: Its analysis

        Returns:
            RGBA Pillow image of size (W*scale, H*scale)
        """
        logger.debug("Marking %dx%d at scale %d", image.width, image.height, self.scale)
        base = image.to_pil().convert("RGBA")
        marked = base.resize((image.width * self.scale, image.height * self.scale), Image.NEAREST)
        draw = ImageDraw.Draw(marked, "RGBA")

        self._draw_frame(draw, marked.size)

        pair = report.best_pair
        self._draw_pixel(draw, pair.x, self.pair_color)
        self._draw_pixel(draw, pair.antipode, self.pair_color)
        draw.line([self._center(pair.x), self._center(pair.antipode)], fill=self.pair_color, width=1)

        if report.lipschitz_witness is not None:
            self._draw_pixel(draw, report.lipschitz_witness.a, self.witness_color)
            self._draw_pixel(draw, report.lipschitz_witness.b, self.witness_color)

        label = f"m={report.lipschitz_constant} bound={report.bound} gap={pair.gap}"
        self._draw_text_with_background(draw, (2, 2), label)
        logger.debug("Best pair %s / %s, gap %s", pair.x, pair.antipode, pair.gap)
        return marked

    def _center(self, p: Tuple[int, ...]) -> Tuple[float, float]:
        return ((p[0] + 0.5) * self.scale, (p[1] + 0.5) * self.scale)

    def _draw_frame(self, draw: ImageDraw.ImageDraw, size: Tuple[int, int]):
        width, height = size
        draw.rectangle([0, 0, width - 1, height - 1], outline=self.frame_color, width=max(1, self.scale // 2))

    def _draw_pixel(self, draw: ImageDraw.ImageDraw, p: Tuple[int, ...], color):
        x, y = p[0] * self.scale, p[1] * self.scale
        draw.rectangle([x, y, x + self.scale - 1, y + self.scale - 1], outline=color, width=max(1, self.scale // 4))

    def _draw_text_with_background(self, draw: ImageDraw.ImageDraw, position: Tuple[int, int], text: str):
        x, y = position
        left, top, right, bottom = draw.textbbox((x, y), text, font=self.font)
        draw.rectangle([left - 2, top - 2, right + 2, bottom + 2], fill=self.text_bg_color)
        draw.text((x, y), text, fill=self.text_color, font=self.font)


def encode_png(image: Image.Image) -> bytes:
    buffer = io.BytesIO()
    image.save(buffer, format="PNG")
    return buffer.getvalue()
