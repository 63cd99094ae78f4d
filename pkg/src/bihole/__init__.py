"""
    Initialise of bihole.
"""

from .config import Config
from .logging_config import create_logger

LOGGER = create_logger(Config.LOG_DIR, filename='warning.log', level=Config.LOG_LEVEL)
VERIFY_LOGGER = create_logger(
    Config.LOG_DIR,
    filename='verify.log',
    name='bihole-verify',
    level=Config.LOG_LEVEL
)
