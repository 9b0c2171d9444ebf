"""
Line-oriented text formats for matroids.

``BMATROID r n`` is followed by n column lines of r bits, most significant
coordinate first. ``BASES n r`` is followed by one line per basis holding its
sorted element indices. A file may hold several records back to back.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Union

from ..core.bitset import bits_of, iter_bits
from ..core.errors import InputError
from .base import Matroid
from .bases import BasisMatroid
from .binary import BinaryMatroid

logger = logging.getLogger(__name__)

BINARY_HEADER = "BMATROID"
BASES_HEADER = "BASES"
HEADERS = (BINARY_HEADER, BASES_HEADER)


def _header_ints(line: str, expected: str) -> List[int]:
    parts = line.split()
    if len(parts) != 3 or parts[0] != expected:
        raise InputError(f"expected '{expected} a b' header, got {line!r}")
    try:
        return [int(parts[1]), int(parts[2])]
    except ValueError:
        raise InputError(f"bad header {line!r}") from None


def _parse_binary(lines: List[str]) -> BinaryMatroid:
    dimension, n = _header_ints(lines[0], BINARY_HEADER)
    body = lines[1:]
    if len(body) != n:
        raise InputError(f"BMATROID header promises {n} columns, found {len(body)}")
    columns = []
    for line in body:
        text = line.strip()
        if len(text) != dimension or any(ch not in "01" for ch in text):
            raise InputError(f"column {line!r} is not a {dimension}-bit string")
        columns.append(int(text, 2) if text else 0)
    return BinaryMatroid(dimension, columns)


def _parse_bases(lines: List[str], validate: bool = True) -> BasisMatroid:
    n, r = _header_ints(lines[0], BASES_HEADER)
    if r == 0:
        return BasisMatroid(n, 0, [0])
    bases = []
    for line in lines[1:]:
        if not line.strip():
            continue
        try:
            indices = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"bad basis line {line!r}") from None
        if any(not 0 <= i < n for i in indices):
            raise InputError(f"basis line {line!r} has elements outside 0..{n - 1}")
        if len(set(indices)) != len(indices):
            raise InputError(f"basis line {line!r} repeats an element")
        bases.append(bits_of(indices))
    return BasisMatroid(n, r, bases, validate=validate)


def _split_records(text: str) -> List[List[str]]:
    records: List[List[str]] = []
    for line in text.splitlines():
        if line.split()[:1] and line.split()[0] in HEADERS:
            records.append([line])
        elif records:
            records[-1].append(line)
        elif line.strip():
            raise InputError(f"data before the first header: {line!r}")
    return records


def parse_matroids(text: str, validate: bool = True) -> List[Matroid]:
    """Parse every matroid record in `text`.

    With `validate` off, BASES records skip the basis exchange check so a
    caller can report the violations instead.
    """
    matroids: List[Matroid] = []
    for record in _split_records(text):
        if record[0].split()[0] == BINARY_HEADER:
            # blank lines are columns only when the dimension is zero
            head = record[0].split()
            if len(head) == 3 and head[1] != "0":
                record = [record[0]] + [line for line in record[1:] if line.strip()]
            matroids.append(_parse_binary(record))
        else:
            matroids.append(_parse_bases(record, validate))
    return matroids


def parse_matroid(text: str, validate: bool = True) -> Matroid:
    """Parse a text holding exactly one matroid"""
    matroids = parse_matroids(text, validate)
    if len(matroids) != 1:
        raise InputError(f"expected one matroid record, found {len(matroids)}")
    return matroids[0]


def serialize_matroid(M: Matroid) -> str:
    """Text form of M; parse_matroid(serialize_matroid(M)) == M"""
    if isinstance(M, BinaryMatroid):
        lines = [f"{BINARY_HEADER} {M.dimension} {M.n}"]
        lines.extend(M.column_string(e) for e in range(M.n))
    else:
        lines = [f"{BASES_HEADER} {M.n} {M.rank}"]
        for indices in sorted(tuple(iter_bits(b)) for b in M.bases):
            lines.append(" ".join(str(i) for i in indices))
    return "\n".join(lines) + "\n"


def serialize_matroids(matroids: Iterable[Matroid]) -> str:
    return "".join(serialize_matroid(M) for M in matroids)


def read_matroid_file(path: Union[str, Path]) -> Matroid:
    logger.debug(f"Reading matroid from {path}")
    return parse_matroid(Path(path).read_text())


def write_matroid_file(path: Union[str, Path], M: Matroid) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_matroid(M))
    logger.debug(f"Wrote {M!r} to {path}")
