"""Plain-text board documents (format "pgrid v1").

A document is a header line ``pgrid v1``, a metadata line
``m=<int> n=<int> topology=<grid|torus>``, then exactly ``n`` rows of ``m``
characters, top row (``j = n``) first.  Cell characters: ``.`` healthy,
``X`` polluted, ``o`` healthy and seeded.  Lines starting with ``#`` before
the header are comments and are ignored.  A seeded polluted cell has no
representation, so writers reject that combination up front.
"""

from __future__ import annotations

import re

from .errors import InvariantError, ParameterError, ParseError
from .grid import CellSet, GridSpec, PollutedInstance, Topology

HEADER = "pgrid v1"
CH_HEALTHY = "."
CH_POLLUTED = "X"
CH_SEED = "o"

_META_RE = re.compile(r"^m=(\d+) n=(\d+) topology=(grid|torus)$")


def parse_instance(text: str) -> tuple[PollutedInstance, CellSet]:
    """Parse a document into an instance and its (possibly empty) seed set.

    Error line and column numbers are 1-based positions in the original text,
    counting any leading comment lines.
    """
    lines = text.splitlines()
    start = 0
    while start < len(lines) and lines[start].startswith("#"):
        start += 1
    if start >= len(lines) or lines[start] != HEADER:
        raise ParseError(f"expected header {HEADER!r}", start + 1)
    meta_no = start + 2
    if meta_no > len(lines):
        raise ParseError("missing metadata line 'm=<int> n=<int> topology=<grid|torus>'", meta_no)
    meta = _META_RE.match(lines[meta_no - 1])
    if meta is None:
        raise ParseError("metadata must be 'm=<int> n=<int> topology=<grid|torus>'", meta_no)
    try:
        spec = GridSpec(int(meta.group(1)), int(meta.group(2)), Topology(meta.group(3)))
    except ParameterError as exc:
        raise ParseError(str(exc), meta_no) from exc

    polluted_mask = 0
    seed_mask = 0
    for row in range(spec.n):
        line_no = meta_no + 1 + row
        if line_no > len(lines):
            raise ParseError(f"expected {spec.n} rows, found {row}", line_no)
        line = lines[line_no - 1]
        if len(line) != spec.m:
            raise ParseError(
                f"row has {len(line)} cells, expected {spec.m}",
                line_no,
                min(len(line), spec.m) + 1,
            )
        for col, ch in enumerate(line):
            bit = 1 << (row * spec.m + col)
            if ch == CH_POLLUTED:
                polluted_mask |= bit
            elif ch == CH_SEED:
                seed_mask |= bit
            elif ch != CH_HEALTHY:
                raise ParseError(f"invalid cell character {ch!r}", line_no, col + 1)
    for extra in range(meta_no + spec.n, len(lines)):
        if lines[extra].strip():
            raise ParseError("unexpected content after the last row", extra + 1)

    instance = PollutedInstance(spec, CellSet(spec, polluted_mask))
    return instance, CellSet(spec, seed_mask)


def write_instance(instance: PollutedInstance, seeds: CellSet | None = None) -> str:
    """Render an instance (and optional seed set) as a pgrid v1 document."""
    spec = instance.spec
    if seeds is None:
        seeds = CellSet(spec)
    if seeds.spec != spec:
        raise ParameterError("seed set belongs to a different board")
    if seeds & instance.polluted:
        raise InvariantError("a seed on a polluted cell cannot be represented")

    lines = [HEADER, f"m={spec.m} n={spec.n} topology={spec.topology.value}"]
    for row in range(spec.n):
        chars = []
        for col in range(spec.m):
            bit = row * spec.m + col
            if instance.polluted.mask >> bit & 1:
                chars.append(CH_POLLUTED)
            elif seeds.mask >> bit & 1:
                chars.append(CH_SEED)
            else:
                chars.append(CH_HEALTHY)
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"
