"""Canonical labelling of small loopless multigraphs.

Individualization-refinement over equitable partitions: refine, branch on the
first non-singleton cell, keep the lexicographically least adjacency encoding
among the leaves.  Disconnected graphs are labelled component by component.
"""
from itertools import combinations


def components(mult):
    n = len(mult)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(n):
                if mult[v][u] and not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _refine(cells, mult):
    # cells: list of lists; splitting keeps an isomorphism-invariant cell order
    while True:
        index = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                index[v] = ci
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                counts = [0] * len(cells)
                for u in range(len(mult)):
                    m = mult[v][u]
                    if m and u in index:
                        counts[index[u]] += m
                sigs.setdefault(tuple(counts), []).append(v)
            if len(sigs) > 1:
                changed = True
            for sig in sorted(sigs):
                new_cells.append(sigs[sig])
        cells = new_cells
        if not changed:
            return cells


def _encode(order, mult, colors):
    head = tuple(colors[v] for v in order) if colors is not None else ()
    body = tuple(mult[order[a]][order[b]] for a, b in combinations(range(len(order)), 2))
    return head + body


def _label_connected(verts, mult, colors):
    if colors is None:
        cells = [list(verts)]
    else:
        by_color = {}
        for v in verts:
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]

    best = [None, None]

    def search(cells):
        cells = _refine(cells, mult)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            enc = _encode(order, mult, colors)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, order
            return
        cell = cells[i]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search(cells)
    return best[1], best[0]


def canonical_order(mult, colors=None):
    """Return a vertex order (position -> vertex) giving a canonical encoding.

    ``mult`` is a symmetric matrix of edge multiplicities with zero diagonal;
    ``colors`` optionally assigns comparable labels that isomorphisms must keep.
    """
    labelled = []
    for comp in components(mult):
        order, enc = _label_connected(comp, mult, colors)
        labelled.append(((len(comp), enc), order))
    labelled.sort(key=lambda item: item[0])
    return [v for _, order in labelled for v in order]


def canonical_key(mult, colors=None):
    order = canonical_order(mult, colors)
    return len(order), _encode(order, mult, colors)
