"""Explicit witnesses achieving the extremal seed counts.

For favorable pollution (small k) the polluted set deletes the last columns
and the seeds alternate along the first column and first row of what is left.
For large k the residual is kept as close to a square as possible and seeded
the same way.  For the worst-pollution lower bound the polluted set is an
independent set of interior degree-4 vertices.  Every witness returned here
is re-checked with the engine before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .engine import is_percolating
from .errors import InternalConsistencyError, OutOfHypothesisError, ParameterError
from .formulas import _check_grid_shape, independent_interior_capacity, mkmin
from .grid import CellSet, PollutedInstance, Vertex, grid


@dataclass(frozen=True)
class ExtremalWitness:
    """A pollution placement and a seed set that together realize mkmin."""

    instance: PollutedInstance
    seeds: CellSet
    claimed_size: int


def _alternating_path_seeds(cols: int, rows: int) -> list[Vertex]:
    """Every other vertex of the path down column 1 then right along row 1.

    The path starts at (1, rows), so seeds sit at its odd positions; when the
    path has even length its last vertex (cols, 1) is appended as well.  The
    result has ceil((cols + rows) / 2) vertices.
    """
    if cols == 0 or rows == 0:
        return []
    path = [Vertex(1, j) for j in range(rows, 0, -1)]
    path += [Vertex(i, 1) for i in range(2, cols + 1)]
    seeds = path[::2]
    if (cols + rows) % 2 == 1:
        seeds.append(path[-1])
    return seeds


def _check_small_k(m: int, n: int, k: int) -> None:
    _check_grid_shape(m, n)
    if not 1 <= k <= (m - n) * n:
        raise ParameterError(f"need 1 <= k <= (m-n)n = {(m - n) * n}, got k={k}")


def pollution_small_k(m: int, n: int, k: int) -> CellSet:
    """The last floor(k/n) full columns plus leftovers down the next column's top."""
    _check_small_k(m, n, k)
    ell = k // n
    cells = [(i, j) for i in range(m - ell + 1, m + 1) for j in range(1, n + 1)]
    cells += [(m - ell, n - d) for d in range(k - ell * n)]
    return CellSet.from_vertices(grid(m, n), cells)


def seeds_small_k(m: int, n: int, k: int) -> CellSet:
    """Alternating seeds along column 1 and row 1 of the surviving m-ell columns."""
    _check_small_k(m, n, k)
    return CellSet.from_vertices(grid(m, n), _alternating_path_seeds(m - k // n, n))


def _verified_witness(instance: PollutedInstance, seeds: CellSet, m: int, n: int, k: int) -> ExtremalWitness:
    expected = mkmin(m, n, k)
    if instance.k != k or len(seeds) != expected or not is_percolating(instance, seeds, 2):
        raise InternalConsistencyError(
            f"witness for m={m}, n={n}, k={k} failed verification"
        )
    return ExtremalWitness(instance, seeds, expected)


def extremal_large_k(m: int, n: int, k: int) -> ExtremalWitness:
    """Pollute everything except a near-square residual in the lower-left corner.

    With t = mn - k, x = floor(sqrt(t)) and o = t - x*x the residual is the
    x by x square, plus o cells of a new top row when 0 < o <= x, plus that
    full row and o - x cells of a new right column when o > x.
    """
    _check_grid_shape(m, n)
    pivot = (m - n) * n
    if not pivot <= k <= m * n:
        raise ParameterError(f"need (m-n)n = {pivot} <= k <= {m * n}, got k={k}")
    t = m * n - k
    x = isqrt(t)
    o = t - x * x
    residual = [(i, j) for j in range(1, x + 1) for i in range(1, x + 1)]
    if 0 < o <= x:
        residual += [(i, x + 1) for i in range(1, o + 1)]
        cols, rows = x, x + 1
    elif o > x:
        residual += [(i, x + 1) for i in range(1, x + 1)]
        residual += [(x + 1, j) for j in range(1, o - x + 1)]
        cols = rows = x + 1
    else:
        cols = rows = x
    spec = grid(m, n)
    polluted = CellSet.from_vertices(spec, residual).complement()
    seeds = CellSet.from_vertices(spec, _alternating_path_seeds(cols, rows))
    return _verified_witness(PollutedInstance(spec, polluted), seeds, m, n, k)


def construct_extremal(m: int, n: int, k: int) -> ExtremalWitness:
    """Engine-verified witness for any admissible k, dispatching on the branch."""
    _check_grid_shape(m, n)
    if not 0 <= k <= m * n:
        raise ParameterError(f"need 0 <= k <= {m * n}, got k={k}")
    if k == 0:
        spec = grid(m, n)
        seeds = CellSet.from_vertices(spec, _alternating_path_seeds(m, n))
        return _verified_witness(PollutedInstance(spec, CellSet(spec)), seeds, m, n, 0)
    if k <= (m - n) * n:
        instance = PollutedInstance(grid(m, n), pollution_small_k(m, n, k))
        return _verified_witness(instance, seeds_small_k(m, n, k), m, n, k)
    return extremal_large_k(m, n, k)


def pollution_max_independent(m: int, n: int, k: int) -> CellSet:
    """First k interior cells (i, j) with i + j even, columns first.

    Interior cells all have degree 4, and same-parity cells are never
    adjacent, so any prefix is an independent set.
    """
    if m < 3 or n < 3:
        raise ParameterError(f"need m, n >= 3 for interior vertices, got m={m}, n={n}")
    if k < 1:
        raise ParameterError(f"need k >= 1, got k={k}")
    cap = independent_interior_capacity(m, n)
    if k > cap:
        raise OutOfHypothesisError(
            f"k={k} exceeds the {m}x{n} grid's independent interior capacity {cap}"
        )
    cells = [
        (i, j)
        for i in range(2, m)
        for j in range(2, n)
        if (i + j) % 2 == 0
    ]
    return CellSet.from_vertices(grid(m, n), cells[:k])
