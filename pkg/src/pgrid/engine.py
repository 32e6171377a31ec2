"""r-neighbor bootstrap percolation closure with full round tracking.

Rounds are simultaneous: round 0 is the seed set, and a healthy vertex joins
round t+1 exactly when it is still uninfected after round t and at least r of
its neighbors are infected.  Polluted vertices never become infected.  The
closure runs in O(|V| + |E|) using per-vertex infected-neighbor counters and
a frontier of newly infected cells, so each edge is relaxed at most twice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, ParameterError
from .grid import CellSet, PollutedInstance, adjacency_lists


@dataclass(frozen=True)
class PercolationTrace:
    """Round-by-round infection history.

    ``rounds[0]`` is the seed set; each later entry holds only the cells newly
    infected that round and is nonempty.  ``round_count`` counts propagation
    rounds beyond the seeds, so ``round_count == len(rounds) - 1``.  The
    instance rides along so renderers can tell polluted cells from healthy
    cells the infection never reached.
    """

    instance: PollutedInstance
    rounds: tuple[CellSet, ...]
    final: CellSet
    percolated: bool
    round_count: int


def _check_inputs(instance: PollutedInstance, seeds: CellSet, r: int) -> None:
    if r < 1:
        raise ParameterError(f"infection threshold must be >= 1, got {r}")
    if seeds.spec != instance.spec:
        raise ParameterError("seed set belongs to a different board")
    if seeds.mask & instance.polluted.mask:
        raise InvariantError("seeds must avoid polluted vertices")


def _closure(
    adj: tuple[tuple[int, ...], ...],
    blocked: int,
    seed_mask: int,
    r: int,
    collect_rounds: bool,
) -> tuple[int, list[int] | None]:
    """Run the closure on raw bitmasks; ``blocked`` marks polluted cells."""
    dead = blocked | seed_mask
    infected = seed_mask
    rounds = [seed_mask] if collect_rounds else None

    frontier = []
    mask = seed_mask
    while mask:
        low = mask & -mask
        frontier.append(low.bit_length() - 1)
        mask ^= low

    counts = bytearray(len(adj))
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if dead >> v & 1:
                    continue
                c = counts[v] + 1
                counts[v] = c
                if c >= r:
                    dead |= 1 << v
                    nxt.append(v)
        if not nxt:
            break
        round_mask = 0
        for v in nxt:
            round_mask |= 1 << v
        infected |= round_mask
        if collect_rounds:
            rounds.append(round_mask)
        frontier = nxt
    return infected, rounds


def closure_mask(
    adj: tuple[tuple[int, ...], ...], blocked: int, seed_mask: int, r: int
) -> int:
    """Raw-bitmask closure for tight search loops; no validation, no trace."""
    final, _ = _closure(adj, blocked, seed_mask, r, False)
    return final


def percolate(instance: PollutedInstance, seeds: CellSet, r: int = 2) -> PercolationTrace:
    """Run the process to its fixpoint and return the full trace."""
    _check_inputs(instance, seeds, r)
    spec = instance.spec
    adj = adjacency_lists(spec)
    final_mask, round_masks = _closure(adj, instance.polluted.mask, seeds.mask, r, True)
    residual_mask = instance.residual.mask
    return PercolationTrace(
        instance=instance,
        rounds=tuple(CellSet(spec, mask) for mask in round_masks),
        final=CellSet(spec, final_mask),
        percolated=final_mask == residual_mask,
        round_count=len(round_masks) - 1,
    )


def is_percolating(instance: PollutedInstance, seeds: CellSet, r: int = 2) -> bool:
    """True iff the closure infects every residual vertex.  Skips trace bookkeeping."""
    _check_inputs(instance, seeds, r)
    adj = adjacency_lists(instance.spec)
    final_mask, _ = _closure(adj, instance.polluted.mask, seeds.mask, r, False)
    return final_mask == instance.residual.mask
