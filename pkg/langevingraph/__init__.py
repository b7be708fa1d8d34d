"""
__init__.py file for langevingraph folder
"""

from .utils.logging import get_logger

logger = get_logger(__name__)

__version__ = "0.1.0"
