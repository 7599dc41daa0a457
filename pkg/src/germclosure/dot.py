"""DOT export of Hasse diagrams.

Only cover edges are emitted, drawn bottom-up (rankdir=BT). Germs get
box-shaped nodes; when the input is a lattice, join irreducibles are
filled. That mirrors the square/bullet/circle legend used elsewhere in
the package's reports.
"""

from __future__ import annotations

from .germs import grm_mask
from .lattice import Lattice
from .poset import Poset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Poset, name: str = "poset", lattice: Lattice | None = None) -> str:
    germs = grm_mask(p)
    irr = lattice.irr_mask if lattice is not None else 0
    out = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i, lab in enumerate(p.labels):
        attrs = []
        if germs >> i & 1:
            attrs.append("shape=box")
        if irr >> i & 1:
            attrs.append('style=filled fillcolor="gray85"')
        suffix = f" [{' '.join(attrs)}]" if attrs else ""
        out.append(f"  {_quote(lab)}{suffix};")
    for i, j in p.cover_pairs():
        out.append(f"  {_quote(p.labels[i])} -> {_quote(p.labels[j])};")
    out.append("}")
    return "\n".join(out) + "\n"
