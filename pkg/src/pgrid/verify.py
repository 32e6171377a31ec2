"""Sweep suites certifying formulas against oracles and constructions.

Each suite returns a :class:`SuiteReport` of independent check rows.  A row
records the parameters, the claimed (expected) value, the measured (actual)
value, a pass flag, and elapsed milliseconds; a failing row never aborts the
sweep.  Reports serialize to CSV with the fixed column set
``suite,m,n,k,expected,actual,pass,elapsed_ms`` and to JSON (which adds the
per-row ``note`` field).  Rows are sorted by parameters and all sampling is
driven by an explicit recorded seed, so any two runs with the same limits
produce identical reports apart from the timing column.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass
from itertools import combinations

from .constructions import construct_extremal, pollution_max_independent
from .engine import percolate
from .errors import BudgetExceededError, InternalConsistencyError, ParameterError
from .formulas import (
    ceil_two_sqrt,
    independent_interior_capacity,
    mkmin,
    mkmin_lower_bound,
    percolation_number_grid,
    percolation_number_torus,
)
from .grid import CellSet, GridSpec, PollutedInstance, grid, neighbors, torus
from .perimeter import min_perimeter, perimeter_lower_bound, shape_perimeter
from .search import min_percolating_exact, min_polyomino_perimeter_exact, mkmin_exact

CSV_COLUMNS = ("suite", "m", "n", "k", "expected", "actual", "pass", "elapsed_ms")

_IDENTITY_LIMIT = 10**6
_TRACE_M, _TRACE_N = 8, 5
_TRACE_MAX_POLLUTION = 13


@dataclass(frozen=True)
class CheckRow:
    suite: str
    m: int | None
    n: int | None
    k: int | None
    expected: object
    actual: object
    passed: bool
    elapsed_ms: float
    note: str = ""


@dataclass
class SuiteReport:
    name: str
    limits: dict[str, int]
    seed: int | None
    rows: list[CheckRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if not row.passed]

    def summary_line(self) -> str:
        failed = len(self.failures)
        return (
            f"suite {self.name}: {len(self.rows)} checks, "
            f"{len(self.rows) - failed} passed, {failed} failed"
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [
                    row.suite,
                    "" if row.m is None else row.m,
                    "" if row.n is None else row.n,
                    "" if row.k is None else row.k,
                    row.expected,
                    row.actual,
                    "true" if row.passed else "false",
                    f"{row.elapsed_ms:.3f}",
                ]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "suite": self.name,
            "limits": self.limits,
            "seed": self.seed,
            "passed": self.passed,
            "checks": len(self.rows),
            "failed": len(self.failures),
            "rows": [
                {
                    "suite": row.suite,
                    "m": row.m,
                    "n": row.n,
                    "k": row.k,
                    "expected": row.expected,
                    "actual": row.actual,
                    "pass": row.passed,
                    "elapsed_ms": round(row.elapsed_ms, 3),
                    "note": row.note,
                }
                for row in self.rows
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def _sorted_rows(rows: list[CheckRow]) -> list[CheckRow]:
    def key(row: CheckRow):
        return (
            row.suite,
            -1 if row.m is None else row.m,
            -1 if row.n is None else row.n,
            -1 if row.k is None else row.k,
            row.note,
        )

    return sorted(rows, key=key)


def _grid_shapes(max_mn: int, min_n: int = 2) -> list[tuple[int, int]]:
    return [
        (m, n)
        for n in range(min_n, max_mn + 1)
        for m in range(n, max_mn + 1)
        if m * n <= max_mn
    ]


def verify_theorem1(max_mn_exhaustive: int, max_mn_construction: int) -> SuiteReport:
    """Certify the extremal formula: oracle equality on small boards, then
    engine-verified constructions plus both lower bounds on larger ones."""
    if max_mn_exhaustive < 4 or max_mn_construction < 4:
        raise ParameterError("limits must be >= 4 (the smallest grid is 2x2)")
    rows: list[CheckRow] = []
    for m, n in _grid_shapes(max_mn_exhaustive):
        for k in range(m * n + 1):
            t0 = time.perf_counter()
            expected = mkmin(m, n, k)
            actual: object
            try:
                actual = mkmin_exact(m, n, k, 2)
                ok = actual == expected
            except BudgetExceededError as exc:
                actual = f"budget exceeded: {exc}"
                ok = False
            rows.append(
                CheckRow("theorem1.oracle-certified", m, n, k, expected, actual, ok, _ms(t0))
            )
    for m, n in _grid_shapes(max_mn_construction):
        for k in range(m * n + 1):
            t0 = time.perf_counter()
            expected = mkmin(m, n, k)
            note = ""
            actual: object
            try:
                witness = construct_extremal(m, n, k)
                actual = len(witness.seeds)
                ok = actual == expected
                bound = perimeter_lower_bound(witness.instance)
                if bound > expected:
                    ok = False
                    note = f"perimeter bound {bound} exceeds the formula value"
                if ok and 1 <= k < m * n and mkmin_lower_bound(m, n, k) != expected:
                    ok = False
                    note = "rectangle-style bound disagrees with the formula value"
            except InternalConsistencyError as exc:
                actual = f"construction failed: {exc}"
                ok = False
            rows.append(
                CheckRow("theorem1.construction-only", m, n, k, expected, actual, ok, _ms(t0), note)
            )
    limits = {
        "max_mn_exhaustive": max_mn_exhaustive,
        "max_mn_construction": max_mn_construction,
    }
    return SuiteReport("theorem1", limits, None, _sorted_rows(rows))


def _independent(spec: GridSpec, vs) -> bool:
    return all(b not in neighbors(spec, a) for a, b in combinations(vs, 2))


def verify_monotonicity(max_mn: int) -> SuiteReport:
    """Removing one vertex, or any independent set of up to three vertices,
    never lowers the exact percolation number of a grid."""
    if max_mn > 16:
        raise ParameterError("boards beyond mn = 16 are out of oracle reach")
    rows: list[CheckRow] = [
        CheckRow(
            "monotonicity.skip",
            None,
            None,
            None,
            "minimum degree >= r is required for the single-removal bound",
            "skipped: the classic counterexample is a star graph, outside grid scope",
            True,
            0.0,
            note="non-product graphs are a non-goal",
        )
    ]
    for m, n in _grid_shapes(max_mn):
        spec = grid(m, n)
        base = min_percolating_exact(PollutedInstance(spec, CellSet(spec))).size
        verts = list(spec.vertices())
        for size in (1, 2, 3):
            if size > len(verts):
                continue
            suite = "monotonicity.single" if size == 1 else "monotonicity.independent"
            for combo in combinations(verts, size):
                if size > 1 and not _independent(spec, combo):
                    continue
                t0 = time.perf_counter()
                val = min_percolating_exact(PollutedInstance.of(spec, combo)).size
                note = "removed " + " ".join(f"({v.i},{v.j})" for v in combo)
                rows.append(
                    CheckRow(suite, m, n, size, base, val, val >= base, _ms(t0), note)
                )
    return SuiteReport("monotonicity", {"max_mn": max_mn}, None, _sorted_rows(rows))


def verify_perimeter(max_t: int, trace_samples: int, seed: int = 0) -> SuiteReport:
    """Minimal-perimeter formula vs. polyomino enumeration, the square-root
    identity, and per-round perimeter monotonicity on sampled traces."""
    if not 1 <= max_t <= 8:
        raise ParameterError(f"need 1 <= max_t <= 8, got {max_t}")
    if trace_samples < 0:
        raise ParameterError(f"need trace_samples >= 0, got {trace_samples}")
    rows: list[CheckRow] = []
    for t in range(1, max_t + 1):
        t0 = time.perf_counter()
        expected = min_perimeter(t)
        actual = min_polyomino_perimeter_exact(t)
        rows.append(
            CheckRow("perimeter.formula", None, None, t, expected, actual, actual == expected, _ms(t0))
        )

    t0 = time.perf_counter()
    mismatches = sum(
        1 for t in range(1, _IDENTITY_LIMIT + 1) if min_perimeter(t) != 2 * ceil_two_sqrt(t)
    )
    rows.append(
        CheckRow(
            "perimeter.identity",
            None,
            None,
            _IDENTITY_LIMIT,
            0,
            mismatches,
            mismatches == 0,
            _ms(t0),
            note=f"mismatch count over t in [1, {_IDENTITY_LIMIT}]",
        )
    )

    rng = random.Random(seed)
    spec = grid(_TRACE_M, _TRACE_N)
    cells = list(spec.vertices())
    for sample in range(trace_samples):
        t0 = time.perf_counter()
        polluted = rng.sample(cells, rng.randint(0, _TRACE_MAX_POLLUTION))
        instance = PollutedInstance.of(spec, polluted)
        residual = list(instance.residual)
        seeds = CellSet.from_vertices(spec, rng.sample(residual, rng.randint(0, len(residual))))
        trace = percolate(instance, seeds, 2)
        cumulative = 0
        previous: int | None = None
        detail = "non-increasing"
        ok = True
        for cells_in_round in trace.rounds:
            cumulative |= cells_in_round.mask
            p = shape_perimeter((v.i, v.j) for v in CellSet(spec, cumulative))
            if previous is not None and p > previous:
                ok = False
                detail = f"perimeter rose {previous} -> {p}"
                break
            previous = p
        rows.append(
            CheckRow(
                "perimeter.trace",
                _TRACE_M,
                _TRACE_N,
                sample,
                "non-increasing",
                detail,
                ok,
                _ms(t0),
                note=f"|polluted|={instance.k} |seeds|={len(seeds)}",
            )
        )
    limits = {"max_t": max_t, "trace_samples": trace_samples}
    return SuiteReport("perimeter", limits, seed, _sorted_rows(rows))


def verify_torus_and_max(max_mn: int) -> SuiteReport:
    """Torus formula with single-removal invariance, and the worst-pollution
    lower bound under independent interior pollution."""
    if max_mn > 16:
        raise ParameterError("boards beyond mn = 16 are out of oracle reach")
    rows: list[CheckRow] = []
    for m, n in ((3, 3), (4, 3), (4, 4)):
        if m * n > max_mn:
            continue
        spec = torus(m, n)
        expected = percolation_number_torus(m, n)
        t0 = time.perf_counter()
        base = min_percolating_exact(PollutedInstance(spec, CellSet(spec))).size
        rows.append(
            CheckRow("torus.formula", m, n, 0, expected, base, base == expected, _ms(t0))
        )
        for v in spec.vertices():
            t0 = time.perf_counter()
            val = min_percolating_exact(PollutedInstance.of(spec, [v])).size
            rows.append(
                CheckRow(
                    "torus.removal",
                    m,
                    n,
                    1,
                    expected,
                    val,
                    val == expected,
                    _ms(t0),
                    note=f"removed ({v.i},{v.j})",
                )
            )
    for m, n in _grid_shapes(max_mn, min_n=3):
        cap = independent_interior_capacity(m, n)
        for k in (1, 2):
            if k > cap:
                continue
            t0 = time.perf_counter()
            instance = PollutedInstance(grid(m, n), pollution_max_independent(m, n, k))
            bound = percolation_number_grid(m, n) + k
            val = min_percolating_exact(instance).size
            note = "bound met with equality" if val == bound else ""
            rows.append(
                CheckRow("mkmax.bound", m, n, k, bound, val, val >= bound, _ms(t0), note)
            )
    return SuiteReport("torus-max", {"max_mn": max_mn}, None, _sorted_rows(rows))
