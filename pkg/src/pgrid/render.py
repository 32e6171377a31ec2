"""ASCII and SVG visualization of percolation traces.

ASCII emits one frame per round.  Within a frame: 'X' polluted, 'o' seed,
digits 1-9 (then '+') for the round a cell was infected, '.' not yet or
never infected.  SVG emits the board once with one group per round carrying
the same information.  Tori are drawn as flat boards with a wrap annotation.
"""

from __future__ import annotations

from .engine import PercolationTrace
from .errors import ParameterError
from .grid import Topology

_CELL_PX = 20
_POLLUTED_FILL = "#404040"
_BOARD_FILL = "#f2f2f2"
_SEED_FILL = "#d62728"
_ROUND_FILLS = (
    "#1f77b4",
    "#2ca02c",
    "#9467bd",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#ff7f0e",
    "#8c564b",
    "#7f7f7f",
)


def _round_char(t: int) -> str:
    if t == 0:
        return "o"
    if t <= 9:
        return str(t)
    return "+"


def _header(trace: PercolationTrace) -> str:
    spec = trace.instance.spec
    wrap = " (edges wrap)" if spec.topology is Topology.TORUS else ""
    return f"{spec.topology.value} {spec.m}x{spec.n}{wrap}"


def _infection_rounds(trace: PercolationTrace) -> dict[int, int]:
    """Canonical cell index -> round in which the cell became infected."""
    spec = trace.instance.spec
    when = {}
    for t, cells in enumerate(trace.rounds):
        for v in cells:
            when[spec.index(v)] = t
    return when


def _render_ascii(trace: PercolationTrace) -> str:
    spec = trace.instance.spec
    polluted = trace.instance.polluted.mask
    when = _infection_rounds(trace)
    lines = [_header(trace)]
    for frame in range(len(trace.rounds)):
        lines.append(f"round {frame}:")
        for row in range(spec.n):
            chars = []
            for col in range(spec.m):
                idx = row * spec.m + col
                if polluted >> idx & 1:
                    chars.append("X")
                elif idx in when and when[idx] <= frame:
                    chars.append(_round_char(when[idx]))
                else:
                    chars.append(".")
            lines.append("".join(chars))
    lines.append(f"percolated: {'true' if trace.percolated else 'false'}")
    return "\n".join(lines) + "\n"


def _svg_rect(spec, v, fill: str) -> str:
    x = (v.i - 1) * _CELL_PX
    y = (spec.n - v.j) * _CELL_PX
    return (
        f'<rect x="{x}" y="{y}" width="{_CELL_PX}" height="{_CELL_PX}" '
        f'fill="{fill}" stroke="#ffffff"/>'
    )


def _render_svg(trace: PercolationTrace) -> str:
    spec = trace.instance.spec
    width = spec.m * _CELL_PX
    height = spec.n * _CELL_PX
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<desc>{_header(trace)}; rounds: {trace.round_count}; "
        f"percolated: {'true' if trace.percolated else 'false'}</desc>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="{_BOARD_FILL}"/>',
    ]
    parts.append('<g id="polluted">')
    for v in trace.instance.polluted:
        parts.append(_svg_rect(spec, v, _POLLUTED_FILL))
    parts.append("</g>")
    for t, cells in enumerate(trace.rounds):
        fill = _SEED_FILL if t == 0 else _ROUND_FILLS[(t - 1) % len(_ROUND_FILLS)]
        parts.append(f'<g id="round-{t}" data-round="{t}">')
        for v in cells:
            parts.append(_svg_rect(spec, v, fill))
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_trace(trace: PercolationTrace, style: str = "ascii") -> str:
    """Render a trace as an ascii frame sequence or a single SVG document."""
    if style == "ascii":
        return _render_ascii(trace)
    if style == "svg":
        return _render_svg(trace)
    raise ParameterError(f"unknown render style {style!r}")
