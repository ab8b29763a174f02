# superal/core/settings.py
from __future__ import annotations

from dotenv import load_dotenv

# Load .env from the repo root
load_dotenv()

TOOLKIT_VERSION = "0.3.0"
REPORT_SCHEMA_VERSION = "1"

# 2^61 - 1, a Mersenne prime; default modulus for bulk zero-testing
MERSENNE_61 = (1 << 61) - 1

# Coefficient range used by the random sampling modes: uniform on [-R, R]
DEFAULT_RANDOM_RANGE = 3
