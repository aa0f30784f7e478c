"""Deterministic ASCII and DOT renderings of (Vogan) diagrams.

Rendering is a pure function of (matrix, sigma, painting, labels): identical
inputs give byte-identical output.  Painted vertices are drawn filled
(``*label*`` in ASCII, black fill in DOT); 2-element sigma-orbits appear as
dashed double-headed arcs; bold edges carry their ordered entry pair.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .gcm import DiagramEdge, EdgeStyle, GeneralizedCartanMatrix, diagram_of
from .vogan import DiagramInvolution


def _edge_glyph(e: DiagramEdge, left: int, right: int) -> str:
    """Edge text between two chain-row vertices, left drawn before right."""
    if e.style is EdgeStyle.SIMPLE:
        return "---"
    if e.style is EdgeStyle.BOLD:
        lr, rl = (e.aij_abs, e.aji_abs) if left == e.i else (e.aji_abs, e.aij_abs)
        return f"=[{lr},{rl}]="
    m = e.lines
    if e.arrow_toward is None:
        return f"<={m}=>"
    if e.arrow_toward == right:
        return f"={m}=>"
    return f"<={m}="


def _vertex_token(v: int, label: str, painted) -> str:
    return f"*{label}*" if v in painted else f"({label})"


def _longest_path(g: GeneralizedCartanMatrix) -> Optional[list[int]]:
    """Longest simple path in a small graph, or None if g has a cycle."""
    n = g.n
    adj = [g.neighbors(i) for i in range(n)]
    edge_count = sum(len(x) for x in adj) // 2
    if edge_count != n - 1:
        return None  # not a tree
    best: list[int] = []

    def walk(path, seen):
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        for nxt in adj[path[-1]]:
            if nxt not in seen:
                path.append(nxt)
                seen.add(nxt)
                walk(path, seen)
                seen.discard(nxt)
                path.pop()

    for s in range(n):
        walk([s], {s})
    # deterministic orientation: lexicographically smaller endpoint first
    if best and best[0] > best[-1]:
        best.reverse()
    return best


def render_ascii(
    g: GeneralizedCartanMatrix,
    sigma: Optional[DiagramInvolution] = None,
    painted=frozenset(),
    labels: Optional[Sequence[str]] = None,
) -> str:
    labels = [str(x) for x in (labels or range(g.n))]
    painted = frozenset(painted)
    diagram = diagram_of(g)

    lines = _caterpillar(g, diagram, painted, labels)
    if lines is None:
        lines = []
        lines.append("vertices: " + " ".join(
            _vertex_token(v, labels[v], painted) for v in range(g.n)))
        lines.append("edges:")
        for e in diagram.edges:
            lines.append(f"  {labels[e.i]} {_edge_glyph(e, e.i, e.j)} {labels[e.j]}")
    if sigma is not None and not sigma.is_identity:
        for i, j in sigma.pairs():
            lines.append(f"sigma: ({labels[i]}) <~~> ({labels[j]})")
    return "\n".join(lines) + "\n"


def _caterpillar(g, diagram, painted, labels) -> Optional[list[str]]:
    """Chain-row drawing with one simple pendant per spine vertex, if the
    graph has that shape; otherwise None."""
    spine = _longest_path(g)
    if spine is None:
        return None
    on_spine = set(spine)
    pendant_of: dict[int, int] = {}
    edge_of = {(e.i, e.j): e for e in diagram.edges}

    def edge(u, v):
        return edge_of[(u, v) if u < v else (v, u)]

    for v in range(g.n):
        if v in on_spine:
            continue
        nbrs = g.neighbors(v)
        if len(nbrs) != 1 or nbrs[0] not in on_spine or nbrs[0] in pendant_of:
            return None
        if edge(v, nbrs[0]).style is not EdgeStyle.SIMPLE:
            return None
        pendant_of[nbrs[0]] = v

    row = []
    start_col: dict[int, int] = {}
    col = 0
    for idx, v in enumerate(spine):
        tok = _vertex_token(v, labels[v], painted)
        start_col[v] = col
        row.append(tok)
        col += len(tok)
        if idx + 1 < len(spine):
            glyph = _edge_glyph(edge(v, spine[idx + 1]), v, spine[idx + 1])
            row.append(glyph)
            col += len(glyph)
    lines = ["".join(row)]
    if pendant_of:
        bar = [" "] * col
        below = [" "] * col
        for anchor, v in pendant_of.items():
            tok = _vertex_token(v, labels[v], painted)
            mid = start_col[anchor] + 1 + (len(labels[anchor]) - 1) // 2
            bar[mid] = "|"
            for off, ch in enumerate(tok):
                pos = mid - 1 + off
                if pos < col:
                    below[pos] = ch
                else:
                    below.append(ch)
        lines.append("".join(bar).rstrip())
        lines.append("".join(below).rstrip())
    return lines


def render_dot(
    g: GeneralizedCartanMatrix,
    sigma: Optional[DiagramInvolution] = None,
    painted=frozenset(),
    labels: Optional[Sequence[str]] = None,
    name: str = "diagram",
) -> str:
    labels = [str(x) for x in (labels or range(g.n))]
    painted = frozenset(painted)
    out = [f'graph "{name}" {{']
    out.append("  node [shape=circle];")
    for v in range(g.n):
        attrs = [f'label="{labels[v]}"']
        if v in painted:
            attrs.append('style=filled fillcolor=black fontcolor=white')
        out.append(f"  v{v} [{' '.join(attrs)}];")
    for e in diagram_of(g).edges:
        attrs = []
        if e.style is EdgeStyle.MULTIPLE:
            attrs.append(f'label="{e.lines}"')
            if e.arrow_toward == e.j:
                attrs.append("dir=forward")
            elif e.arrow_toward == e.i:
                attrs.append("dir=back")
            else:
                attrs.append("dir=both")
        elif e.style is EdgeStyle.BOLD:
            attrs.append(f'label="{e.aij_abs},{e.aji_abs}"')
            attrs.append("style=bold")
        text = f" [{' '.join(attrs)}]" if attrs else ""
        out.append(f"  v{e.i} -- v{e.j}{text};")
    if sigma is not None:
        for i, j in sigma.pairs():
            out.append(f"  v{i} -- v{j} [style=dashed dir=both constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"
