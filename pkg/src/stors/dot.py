"""DOT output for Hasse diagrams.

Edges point from the larger element to the smaller one.
"""

from __future__ import annotations

import json
from typing import Sequence


def hasse_dot(labels: Sequence[str], covers: Sequence[tuple[int, int]], name: str = "hasse") -> str:
    """``covers`` holds (lower, upper) index pairs."""
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=TB;"]
    for i, label in enumerate(labels):
        lines.append(f"  n{i} [label={json.dumps('{' + label + '}')}];")
    for lo, hi in covers:
        lines.append(f"  n{hi} -> n{lo};")
    lines.append("}")
    return "\n".join(lines) + "\n"
