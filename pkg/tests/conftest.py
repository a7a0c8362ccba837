from __future__ import annotations

import sys
from pathlib import Path

# make the oracle module importable from the test files
sys.path.insert(0, str(Path(__file__).parent))
