"""Cell graph over an equitable partition: kinds, degree constants, anisotropic trees.

All classification is driven by the degree constants d[i, j] (neighbors a
vertex of cell i has in cell j), which determine the induced subgraphs
exactly because equitable cells are regular and cell pairs are biregular:
a 1-regular graph is a perfect matching, a 2-regular graph on 5 vertices is
the 5-cycle, and a star union with s centers and st leaves must have its
centers on the smaller side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    BadDivisibility,
    MultipleHeterogeneous,
    NotATree,
    NotEquitable,
    NotMonotone,
)
from .graph import Graph
from .refinement import Partition


class CellKind(Enum):
    EMPTY = "empty"
    COMPLETE = "complete"
    MATCHING = "matching"
    CO_MATCHING = "co_matching"
    FIVE_CYCLE = "five_cycle"
    OTHER = "other"


class PairKind(Enum):
    ISO_EMPTY = "iso_empty"
    ISO_COMPLETE = "iso_complete"
    ANISO_STARS = "aniso_stars"
    ANISO_CO_STARS = "aniso_co_stars"
    OTHER = "other"


HOMOGENEOUS_KINDS = {CellKind.EMPTY, CellKind.COMPLETE}
ANISOTROPIC_KINDS = {PairKind.ANISO_STARS, PairKind.ANISO_CO_STARS}


@dataclass(frozen=True)
class PairClass:
    """Classification of one unordered cell pair; center_cell is set for star kinds."""

    kind: PairKind
    center_cell: int | None = None


@dataclass(frozen=True)
class CellGraph:
    """Sizes, kinds and degree constants over the cells of an equitable partition.

    ``d`` is sparse: it holds every ordered pair with at least one edge plus
    all diagonal entries; a missing off-diagonal key means 0.
    """

    partition: Partition
    cell_sizes: tuple[int, ...]
    d: dict[tuple[int, int], int]
    cell_kinds: tuple[CellKind, ...]
    pair_classes: dict[tuple[int, int], PairClass]

    @property
    def num_cells(self) -> int:
        return len(self.cell_sizes)

    def degree_constant(self, i: int, j: int) -> int:
        return self.d.get((i, j), 0)

    def is_heterogeneous(self, i: int) -> bool:
        return self.cell_kinds[i] not in HOMOGENEOUS_KINDS

    def pair_class(self, i: int, j: int) -> PairClass:
        key = (i, j) if i < j else (j, i)
        return self.pair_classes.get(key, PairClass(kind=PairKind.ISO_EMPTY))

    def to_json(self) -> dict:
        return {
            "cells": [
                {"id": i, "size": self.cell_sizes[i], "kind": self.cell_kinds[i].value,
                 "vertices": list(self.partition.cells[i])}
                for i in range(self.num_cells)
            ],
            "pairs": [
                {"i": i, "j": j, "d_ij": self.degree_constant(i, j),
                 "d_ji": self.degree_constant(j, i), "kind": pc.kind.value,
                 **({"centers": pc.center_cell} if pc.center_cell is not None else {})}
                for (i, j), pc in sorted(self.pair_classes.items())
            ],
        }


@dataclass(frozen=True)
class Component:
    """One anisotropic component, rooted; a tree over cell ids."""

    cells: tuple[int, ...]
    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    multiplicity: dict[int, int]  # child cell id -> |child| / |parent|
    heterogeneous: bool

    def to_json(self) -> dict:
        return {
            "cells": list(self.cells),
            "root": self.root,
            "parents": {str(c): p for c, p in sorted(self.parent.items())},
            "multiplicities": {str(c): m for c, m in sorted(self.multiplicity.items())},
            "heterogeneous": self.heterogeneous,
        }


@dataclass(frozen=True)
class AnisotropicForest:
    components: tuple[Component, ...]

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}


def build_cell_graph(g: Graph, p: Partition) -> CellGraph:
    """Compute degree constants and classify cells and pairs.

    Verifies equitability as a side effect of computing d; raises
    NotEquitable if any vertex deviates from its cell's profile.
    """
    cell_of = p.cell_of
    sizes = tuple(len(c) for c in p.cells)
    k = len(sizes)
    reference: list[dict[int, int] | None] = [None] * k
    profile: dict[int, int] = {}
    for v in range(g.n):
        profile.clear()
        for u in g.adjacency[v]:
            c = cell_of[u]
            profile[c] = profile.get(c, 0) + 1
        c = cell_of[v]
        ref = reference[c]
        if ref is None:
            reference[c] = dict(profile)
        elif ref != profile:
            raise NotEquitable(v, c)

    d: dict[tuple[int, int], int] = {}
    for i in range(k):
        ref = reference[i] or {}
        d[(i, i)] = ref.get(i, 0)
        for j, count in ref.items():
            if j != i:
                d[(i, j)] = count

    cell_kinds = tuple(_classify_cell(sizes[i], d[(i, i)]) for i in range(k))

    pair_classes: dict[tuple[int, int], PairClass] = {}
    for (i, j), dij in d.items():
        if i >= j or dij == 0:
            continue
        pair_classes[(i, j)] = _classify_pair(i, j, sizes[i], sizes[j], dij, d[(j, i)])
    return CellGraph(
        partition=p, cell_sizes=sizes, d=d, cell_kinds=cell_kinds,
        pair_classes=pair_classes,
    )


def _classify_cell(size: int, dii: int) -> CellKind:
    if dii == 0:
        return CellKind.EMPTY
    if dii == size - 1:
        return CellKind.COMPLETE
    if dii == 1 and size >= 4:
        return CellKind.MATCHING
    if dii == size - 2 and size >= 4:
        return CellKind.CO_MATCHING
    if size == 5 and dii == 2:
        return CellKind.FIVE_CYCLE
    return CellKind.OTHER


def _classify_pair(i: int, j: int, si: int, sj: int, dij: int, dji: int) -> PairClass:
    # orient so `small` is the lower-size cell (ties keep the lower id)
    if sj < si:
        small, s_small, d_large_to_small = j, sj, dij
    else:
        small, s_small, d_large_to_small = i, si, dji
    if d_large_to_small == 0:
        return PairClass(kind=PairKind.ISO_EMPTY)
    if d_large_to_small == s_small:
        return PairClass(kind=PairKind.ISO_COMPLETE)
    if d_large_to_small == 1:
        return PairClass(kind=PairKind.ANISO_STARS, center_cell=small)
    if d_large_to_small == s_small - 1:
        return PairClass(kind=PairKind.ANISO_CO_STARS, center_cell=small)
    return PairClass(kind=PairKind.OTHER)


@dataclass
class ComponentAnalysis:
    """Raw per-component findings before amenability judges them."""

    cells: tuple[int, ...]
    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    multiplicity: dict[int, int]
    het_cells: tuple[int, ...]
    tree_ok: bool
    bad_edges: list[tuple[str, int, int]] = field(default_factory=list)  # (reason, parent, child)


def _aniso_adjacency(cg: CellGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(cg.num_cells)]
    for (i, j), pc in sorted(cg.pair_classes.items()):
        if pc.kind in ANISOTROPIC_KINDS:
            adj[i].append(j)
            adj[j].append(i)
    return adj


def _build_tree(
    aniso_adj: list[list[int]], root: int, sizes: tuple[int, ...]
) -> tuple[dict[int, int], dict[int, tuple[int, ...]], dict[int, int], list[tuple[str, int, int]]]:
    parent: dict[int, int] = {}
    children: dict[int, tuple[int, ...]] = {}
    multiplicity: dict[int, int] = {}
    bad_edges: list[tuple[str, int, int]] = []
    order = [root]
    visited = {root}
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        kids = []
        for y in sorted(aniso_adj[x]):
            if y not in visited:
                visited.add(y)
                parent[y] = x
                kids.append(y)
                order.append(y)
                if sizes[y] < sizes[x]:
                    bad_edges.append(("monotone", x, y))
                elif sizes[y] % sizes[x] != 0:
                    bad_edges.append(("divisibility", x, y))
                else:
                    multiplicity[y] = sizes[y] // sizes[x]
        children[x] = tuple(kids)
    return parent, children, multiplicity, bad_edges


def analyze_components(cg: CellGraph) -> list[ComponentAnalysis]:
    """Connected components of the anisotropic edge graph, rooted and checked.

    Components are ordered by lowest cell id.  The root is a minimum-size
    cell, preferring the heterogeneous cell when it attains the minimum,
    with the lowest cell id breaking remaining ties.  This deterministic
    choice is recorded, not claimed root-independent.
    """
    k = cg.num_cells
    aniso_adj = _aniso_adjacency(cg)
    seen = [False] * k
    out: list[ComponentAnalysis] = []
    for start in range(k):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        edges = 0
        while queue:
            x = queue.pop()
            edges += len(aniso_adj[x])
            for y in aniso_adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        edges //= 2
        tree_ok = edges == len(comp) - 1
        het = tuple(c for c in comp if cg.is_heterogeneous(c))
        min_size = min(cg.cell_sizes[c] for c in comp)
        root = next((c for c in het if cg.cell_sizes[c] == min_size), None)
        if root is None:
            root = next(c for c in comp if cg.cell_sizes[c] == min_size)
        if tree_ok:
            parent, children, multiplicity, bad_edges = _build_tree(
                aniso_adj, root, cg.cell_sizes
            )
        else:
            parent, children, multiplicity, bad_edges = {}, {}, {}, []
        out.append(ComponentAnalysis(
            cells=tuple(comp), root=root, parent=parent, children=children,
            multiplicity=multiplicity, het_cells=het, tree_ok=tree_ok,
            bad_edges=bad_edges,
        ))
    return out


def anisotropic_components(cg: CellGraph) -> AnisotropicForest:
    """Rooted anisotropic components, verified to be monotone trees.

    Raises the first structural violation instead of repairing it; use
    check_amenable for a non-raising verdict.  A lone heterogeneous cell
    that is not of minimum size is rooted anyway, so the size decrease
    below it surfaces as NotMonotone.
    """
    aniso_adj = _aniso_adjacency(cg)
    comps: list[Component] = []
    for idx, a in enumerate(analyze_components(cg)):
        if not a.tree_ok:
            raise NotATree(idx)
        if len(a.het_cells) > 1:
            raise MultipleHeterogeneous(idx)
        root, parent, children, multiplicity, bad_edges = (
            a.root, a.parent, a.children, a.multiplicity, a.bad_edges
        )
        if a.het_cells and a.het_cells[0] != a.root:
            root = a.het_cells[0]
            parent, children, multiplicity, bad_edges = _build_tree(
                aniso_adj, root, cg.cell_sizes
            )
        for reason, p, c in bad_edges:
            if reason == "monotone":
                raise NotMonotone(p, c)
            raise BadDivisibility(p, c)
        comps.append(Component(
            cells=a.cells, root=root, parent=parent, children=children,
            multiplicity=multiplicity, heterogeneous=bool(a.het_cells),
        ))
    return AnisotropicForest(components=tuple(comps))
