"""Hasse diagrams of finite posets as DOT text."""

from __future__ import annotations

from typing import Callable, Sequence


def cover_relations(n: int, lt: Callable[[int, int], bool]) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``i < j`` in the poset and nothing strictly between."""
    below = [[lt(i, j) for j in range(n)] for i in range(n)]
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n))
    ]


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse(labels: Sequence[str], leq: Callable[[int, int], bool], name: str = "poset") -> str:
    """DOT digraph with an edge ``x -> y`` for every cover ``x < y``.

    ``leq(i, j)`` compares the elements at positions ``i`` and ``j``.  Nodes
    keep the order of ``labels``; edges are sorted, so the text is stable.
    """
    n = len(labels)
    edges = cover_relations(n, lambda i, j: i != j and leq(i, j))
    lines = [f"digraph {name} {{"]
    lines += [f"  n{i} [label={_quote(lab)}];" for i, lab in enumerate(labels)]
    lines += [f"  n{i} -> n{j};" for i, j in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
