import os
import logging
from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("BU_LOG_LEVEL", "WARNING").upper()
DEBUG = os.getenv("BU_DEBUG", "false").lower() == "true"

DEFAULT_SEED = int(os.getenv("BU_SEED", 42))
SERVER_PORT = int(os.getenv("BU_PORT", 8000))

# Optional golden fixture, not redistributed with the repo
GRAINSTACK_PGM = os.getenv("BU_GRAINSTACK_PGM")

MARK_SCALE = int(os.getenv("BU_MARK_SCALE", 4))

HIGHDIM_SAMPLES = int(os.getenv("BU_HIGHDIM_SAMPLES", 500))
HIGHDIM_POWER_SAMPLES = int(os.getenv("BU_HIGHDIM_POWER_SAMPLES", 200))

logging.basicConfig(
    level=logging.DEBUG if DEBUG else getattr(logging, LOG_LEVEL, logging.WARNING),
    format="%(levelname)s %(name)s: %(message)s",
)
logger = logging.getLogger(__name__)
