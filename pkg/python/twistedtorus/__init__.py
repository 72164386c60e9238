#!/usr/bin/env python
# -*- coding: utf-8 -*-

__version__ = "0.1.0"

import logging

from .laurent import LaurentPolynomial
from .core import TTKParams, alexander_closed_form, canonicalize
from .braid import BraidWord, alexander_from_braid, ttk_braid_word
from .fibered import fiberedness_verdict
from .families import verify_theorem1, verify_theorem2, verify_theorem3
from . import (laurent, core, braid, fibered, families, scan, utils)

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

handler = logging.StreamHandler()
handler.setFormatter(logging.Formatter(
    "%(asctime)s [%(levelname)s] %(message)s"))
logger.addHandler(handler)


# Clean up the top-level namespace for this module.
del handler, logger, logging
