"""Plain-text check matrix files.

Format: a header line ``p=<prime> n=<qudits>`` followed by one generator per
line, written as n x-exponents, a literal ``|``, and n z-exponents::

    # four-qubit example
    p=2 n=4
    1 1 1 1 | 0 0 0 0
    0 0 0 0 | 1 1 1 1

``#`` starts a comment (whole line or trailing); blank lines are ignored.
All exponents must lie in [0, p); at most n generator rows are allowed.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import CodeFileError
from .gfp import PRIMES
from .pauli import StabilizerCode

_HEADER = re.compile(r"^p\s*=\s*(\d+)\s+n\s*=\s*(\d+)$")


def parse_code_file(text: str) -> tuple[int, int, np.ndarray]:
    """Parse file contents into (p, n, check matrix rows)."""
    p = n = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if p is None:
            m = _HEADER.match(line)
            if not m:
                raise CodeFileError(lineno, f"expected header 'p=<prime> n=<count>', got {line!r}")
            p, n = int(m.group(1)), int(m.group(2))
            if p not in PRIMES:
                raise CodeFileError(lineno, f"p must be one of {PRIMES}, got {p}")
            if n < 1:
                raise CodeFileError(lineno, f"n must be positive, got {n}")
            continue
        if "|" not in line:
            raise CodeFileError(lineno, "generator row needs a '|' between x and z parts")
        left, _, right = line.partition("|")
        try:
            xs = [int(t) for t in left.split()]
            zs = [int(t) for t in right.split()]
        except ValueError:
            raise CodeFileError(lineno, "exponents must be integers") from None
        if len(xs) != n or len(zs) != n:
            raise CodeFileError(
                lineno, f"expected {n} x and {n} z exponents, got {len(xs)} and {len(zs)}"
            )
        for v in (*xs, *zs):
            if not 0 <= v < p:
                raise CodeFileError(lineno, f"exponent {v} outside [0, {p})")
        rows.append(xs + zs)
        if len(rows) > n:
            raise CodeFileError(lineno, f"more than n = {n} generator rows")
    if p is None:
        raise CodeFileError(1, "empty file: missing 'p=<prime> n=<count>' header")
    matrix = np.array(rows, dtype=np.int64).reshape(len(rows), 2 * n)
    return p, n, matrix


def format_code_file(code: StabilizerCode) -> str:
    """Render a stabilizer back into the file format (round-trips exactly)."""
    lines = [f"p={code.p} n={code.n}"]
    for row in code.check_matrix:
        x = " ".join(str(int(v)) for v in row[: code.n])
        z = " ".join(str(int(v)) for v in row[code.n :])
        lines.append(f"{x} | {z}")
    return "\n".join(lines) + "\n"
