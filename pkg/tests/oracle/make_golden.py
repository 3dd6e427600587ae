"""Regenerate tests/golden/search_n4_b4.json from the sympy oracle.

    python tests/oracle/make_golden.py
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))
from sympy_oracle import counterexamples  # noqa: E402

golden = pathlib.Path(__file__).parents[1] / "golden" / "search_n4_b4.json"
golden.write_text(json.dumps(counterexamples(4, 4), indent=2) + "\n")
print(f"wrote {golden}")
