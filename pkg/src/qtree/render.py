"""Diagram emission: models as DOT trees, Newton regions as SVG.

The DOT rendering draws the base-point set as a rooted tree.  Base points
are filled nodes, terminal base points are double-circled, and each base
point carries one dashed wedge standing for its cofinite fan of closed
points (the first neighborhood minus the directions that lead deeper into
the base set).
"""

from __future__ import annotations

from .models import NonsingularModel
from .points import Point


def _node_id(p: Point) -> str:
    return "D" if p.is_root else "D." + ".".join(p.path)


def model_to_dot(model: NonsingularModel) -> str:
    base = model.base
    terminals = set(base.terminals())
    lines = [
        "digraph quadratic_tree {",
        "  rankdir=TB;",
        '  node [fontname="Helvetica"];',
    ]
    for p in base.sorted():
        shape = "peripheries=2, " if p in terminals else ""
        lines.append(
            f'  "{_node_id(p)}" [label="{p}", {shape}style=filled, '
            'fillcolor=lightgrey];'
        )
    for p in base.sorted():
        if not p.is_root:
            lines.append(f'  "{_node_id(p.parent())}" -> "{_node_id(p)}";')
    for fan in model.closed_points().fans:
        fan_id = f"fan:{_node_id(fan.base)}"
        lines.append(
            f'  "{fan_id}" [label="{fan}", shape=triangle, style=dashed];'
        )
        lines.append(f'  "{_node_id(fan.base)}" -> "{fan_id}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
