"""Recognition of amenable graphs and the isomorphism test built on it.

A graph is amenable exactly when color refinement decides isomorphism
against every other graph.  The recognizer checks, over the stable
partition: (A) every cell induces an empty, complete, matching, co-matching
or 5-cycle graph; (B) every cell pair induces an empty, complete, star or
co-star bipartite graph with star centers on the smaller cell; (C) every
anisotropic component is a tree with non-decreasing, divisible sizes away
from a minimum-size root; (D) each component has at most one heterogeneous
cell and that cell attains the minimum size.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cells import (
    AnisotropicForest,
    CellGraph,
    CellKind,
    Component,
    PairKind,
    analyze_components,
    build_cell_graph,
)
from .graph import Graph
from .refinement import CrOutcome, cr_iso_test, stable_partition

_ALLOWED_CELL_KINDS = {
    CellKind.EMPTY, CellKind.COMPLETE, CellKind.MATCHING,
    CellKind.CO_MATCHING, CellKind.FIVE_CYCLE,
}
_ALLOWED_PAIR_KINDS = {
    PairKind.ISO_EMPTY, PairKind.ISO_COMPLETE,
    PairKind.ANISO_STARS, PairKind.ANISO_CO_STARS,
}


class Condition(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class Failure:
    condition: Condition
    cell: int | None = None
    pair: tuple[int, int] | None = None
    component: int | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        out: dict = {"condition": self.condition.value}
        for key in ("cell", "pair", "component", "reason"):
            val = getattr(self, key)
            if val is not None:
                out[key] = list(val) if isinstance(val, tuple) else val
        return out


@dataclass(frozen=True)
class AmenabilityVerdict:
    amenable: bool
    cell_graph: CellGraph | None = None
    forest: AnisotropicForest | None = None
    failure: Failure | None = None

    @property
    def components(self) -> tuple[Component, ...]:
        if self.forest is None:
            raise ValueError("verdict has no structure (graph is not amenable)")
        return self.forest.components

    def to_json(self) -> dict:
        out: dict = {"amenable": self.amenable}
        if self.failure is not None:
            out["failure"] = self.failure.to_json()
        if self.forest is not None:
            out["components"] = [c.to_json() for c in self.forest.components]
        return out


def check_amenable(g: Graph) -> AmenabilityVerdict:
    """Decide amenability; the verdict carries structure or the first failure.

    Conditions are checked in the fixed order A, B, C, D, scanning cells,
    pairs and components by lowest index; only the first violation is
    reported.
    """
    p = stable_partition(g)
    cg = build_cell_graph(g, p)

    for i, kind in enumerate(cg.cell_kinds):
        if kind not in _ALLOWED_CELL_KINDS:
            return AmenabilityVerdict(
                amenable=False, failure=Failure(condition=Condition.A, cell=i)
            )
    for (i, j), pc in sorted(cg.pair_classes.items()):
        if pc.kind not in _ALLOWED_PAIR_KINDS:
            return AmenabilityVerdict(
                amenable=False, failure=Failure(condition=Condition.B, pair=(i, j))
            )

    analyses = analyze_components(cg)
    for idx, a in enumerate(analyses):
        if not a.tree_ok:
            return AmenabilityVerdict(
                amenable=False,
                failure=Failure(condition=Condition.C, component=idx, reason="not a tree"),
            )
        for reason, parent, child in a.bad_edges:
            text = (
                f"cell sizes decrease along {parent} -> {child}"
                if reason == "monotone"
                else f"size of cell {parent} does not divide size of cell {child}"
            )
            return AmenabilityVerdict(
                amenable=False,
                failure=Failure(condition=Condition.C, component=idx, reason=text),
            )
    for idx, a in enumerate(analyses):
        if len(a.het_cells) > 1:
            return AmenabilityVerdict(
                amenable=False,
                failure=Failure(
                    condition=Condition.D, component=idx,
                    reason="more than one heterogeneous cell",
                ),
            )
        if a.het_cells and a.het_cells[0] != a.root:
            return AmenabilityVerdict(
                amenable=False,
                failure=Failure(
                    condition=Condition.D, component=idx,
                    reason="heterogeneous cell is not of minimum size",
                ),
            )

    forest = AnisotropicForest(components=tuple(
        Component(
            cells=a.cells, root=a.root, parent=a.parent, children=a.children,
            multiplicity=a.multiplicity, heterogeneous=bool(a.het_cells),
        )
        for a in analyses
    ))
    return AmenabilityVerdict(amenable=True, cell_graph=cg, forest=forest)


class IsoVerdict(Enum):
    ISOMORPHIC = "Isomorphic"
    NOT_ISOMORPHIC = "NotIsomorphic"
    HEURISTIC_EQUIVALENT = "HeuristicEquivalent"


def amenable_iso(g: Graph, h: Graph) -> IsoVerdict:
    """Isomorphism test that is exact whenever either input is amenable.

    NotIsomorphic is always sound.  Isomorphic is certified by amenability
    of one input; HeuristicEquivalent means color refinement found no
    difference but neither graph is amenable.
    """
    verdict = cr_iso_test(g, h)
    if verdict.outcome is CrOutcome.DISTINGUISHED:
        return IsoVerdict.NOT_ISOMORPHIC
    if check_amenable(g).amenable or check_amenable(h).amenable:
        return IsoVerdict.ISOMORPHIC
    return IsoVerdict.HEURISTIC_EQUIVALENT
