"""Graph classification procedures with independent cross-checking routes.

Each classification that the underlying theory states in two equivalent ways
is computed both ways and the answers are compared; a mismatch raises
CrossRouteError instead of silently preferring one route.  full_report
bundles every invariant and flag for a graph or clutter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import monomials
from .clutters import Clutter, Graph
from .complexes import (
    Field,
    independence_complex,
    is_cohen_macaulay,
    is_vertex_decomposable,
    regularity,
    stanley_reisner_complex,
)
from .monomials import polarize, symbolic_power
from .vertexsets import VertexSet

DEFAULT_ORACLE_CAP = 7


class CrossRouteError(RuntimeError):
    """Two supposedly equivalent computation routes disagreed."""


def _require_agreement(name: str, routes: dict[str, object]) -> None:
    values = set(routes.values())
    if len(values) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in routes.items())
        raise CrossRouteError(f"{name} routes disagree: {detail}")


def v_number_checked(c: Clutter) -> tuple[int, VertexSet]:
    """v-number by stable-set search and by colon ideals, asserted equal."""
    v_comb, witness = c.v_number_with_witness()
    v_alg = monomials.v_number_algebraic(c)
    _require_agreement("v-number", {"combinatorial": v_comb, "algebraic": v_alg})
    return v_comb, witness


def is_w2(g: Graph) -> bool:
    """Well-covered with every maximal stable set neighborhood-minimal.

    Route 1: the v-number equals the independence number.  Route 2: the
    graph is well-covered and the maximal stable sets are exactly the
    stable sets with minimal-cover neighborhoods.
    """
    if g.isolated_vertices():
        raise ValueError("the W2 classification excludes isolated vertices")
    if g.vertex_count < 2:
        raise ValueError("the W2 class needs at least two vertices")
    route1 = g.v_number() == g.independence_number()
    route2 = g.is_well_covered() and set(g.maximal_stable_masks()) == {
        a.mask for a in g.family_a()
    }
    _require_agreement("W2", {"v=dim": route1, "families": route2})
    return route1


def is_edge_critical(g: Graph) -> bool:
    """Whether deleting any edge raises the independence number."""
    return edge_criticality(g)[0]


def edge_criticality(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    """Edge-criticality verdict plus the first violating edge, if any.

    Route 1 removes each edge; route 2 checks that the independence number
    drops by one after deleting both endpoint neighborhoods.
    """
    beta0 = g.independence_number() if g.has_edges() else None
    witness1 = None
    for u, v in g.edge_lists():
        if g.delete_edge(u, v).independence_number() != beta0 + 1:
            witness1 = (u, v)
            break
    route1 = witness1 is None
    witness2 = None
    for u, v in g.edge_lists():
        sub = g.delete_edge_neighborhoods(u, v)
        b = sub.independence_number() if sub.vertex_count else 0
        if b != beta0 - 1:
            witness2 = (u, v)
            break
    route2 = witness2 is None
    _require_agreement(
        "edge-critical", {"edge-deletion": route1, "neighborhood": route2}
    )
    return route1, witness1


def is_cm_graph(g: Clutter, field: Field) -> bool:
    """Cohen-Macaulayness of the edge ring via the independence complex."""
    return is_cohen_macaulay(independence_complex(g), field)


def symbolic_square_cm(
    g: Graph, field: Field, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> bool:
    """Whether the second symbolic power of the edge ideal is Cohen-Macaulay.

    Combinatorial route: the graph is Cohen-Macaulay and for every edge e
    the subgraph G_e is Cohen-Macaulay with independence number one less.
    On graphs with at most oracle_cap vertices the answer is re-derived by
    polarizing the symbolic square and testing its Stanley-Reisner complex.
    The empty graph on zero vertices counts as Cohen-Macaulay.
    """
    combo = _symbolic_square_cm_combinatorial(g, field)
    if g.has_edges() and g.vertex_count <= oracle_cap:
        oracle = _symbolic_square_cm_oracle(g, field)
        _require_agreement(
            f"symbolic-square CM over {field.value}",
            {"combinatorial": combo, "polarization": oracle},
        )
    return combo


def _symbolic_square_cm_combinatorial(g: Graph, field: Field) -> bool:
    if not is_cm_graph(g, field):
        return False
    if not g.has_edges():
        return True
    beta0 = g.independence_number()
    for u, v in g.edge_lists():
        sub = g.delete_edge_neighborhoods(u, v)
        b = sub.independence_number() if sub.vertex_count else 0
        if b != beta0 - 1:
            return False
        if sub.vertex_count and not is_cm_graph(sub, field):
            return False
    return True


def _symbolic_square_cm_oracle(g: Graph, field: Field) -> bool:
    square = symbolic_power(g, 2)
    polarized, _ = polarize(square)
    return is_cohen_macaulay(stanley_reisner_complex(polarized), field)


def symbolic_square_cm_beta2(g: Graph) -> bool:
    """The independence-number-two case, where edge-criticality decides.

    Also asserts the equivalent complement readings: the complement must be
    maximal triangle-free, and when it is connected on at least three
    vertices its diameter must be at most two exactly in the positive case.
    """
    if g.independence_number() != 2:
        raise ValueError("this specialization needs independence number 2")
    verdict, _ = edge_criticality(g)
    comp = g.complement()
    routes = {
        "edge-critical": verdict,
        "complement-maximal-triangle-free": comp.is_maximal_triangle_free(),
    }
    if g.vertex_count >= 3 and comp.is_connected():
        routes["complement-diameter"] = comp.diameter() <= 2
    _require_agreement("symbolic-square CM (beta0 = 2)", routes)
    return verdict


def has_linear_resolution(g: Graph) -> bool:
    """Degree-two linear resolution test: the complement must be chordal."""
    if g.isolated_vertices():
        raise ValueError("linear resolution test excludes isolated vertices")
    if not g.has_edges():
        raise ValueError("linear resolution test needs at least one edge")
    return g.complement().is_chordal()


# -- the invariant report -------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    """Every computed invariant and classification flag for one input."""

    kind: str
    name: Optional[str]
    vertex_count: int
    edge_count: int
    v: int
    i_dom: int
    gamma: Optional[int]
    beta0: int
    alpha0: int
    dim: int
    reg_by_field: dict[Field, int]
    well_covered: bool
    one_well_covered: bool
    w2: Optional[bool]
    edge_critical: Optional[bool]
    cm_by_field: dict[Field, bool]
    symbolic_square_cm_by_field: dict[Field, bool]
    vertex_decomposable: bool
    linear_resolution: Optional[bool]
    has_isolated_vertices: bool
    v_witness: tuple[int, ...]
    edge_critical_violation: Optional[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.dim != self.beta0:
            raise CrossRouteError("Krull dimension must equal beta0")
        if not self.v <= self.i_dom <= self.beta0:
            raise CrossRouteError("v <= i <= beta0 violated")
        for field, reg in self.reg_by_field.items():
            if reg > self.dim:
                raise CrossRouteError(
                    f"regularity over {field.value} exceeds the dimension"
                )


def full_report(
    c: Clutter,
    fields: Sequence[Field] = (Field.Q,),
    name: Optional[str] = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> InvariantReport:
    """Compute every invariant with all cross-route assertions enabled.

    Graph-only classifications are None for clutter input; W2 and the
    linear resolution flag are None when their isolated-vertex or edge
    preconditions fail.  Regularity is computed on the isolated-free part,
    which leaves it unchanged and shrinks the subset scan.
    """
    is_graph = isinstance(c, Graph)
    isolated = c.isolated_vertices()
    v, witness = v_number_checked(c)
    beta0 = c.independence_number()
    alpha0 = c.cover_number()
    i_dom = c.independent_domination()
    if alpha0 + beta0 != c.vertex_count:
        raise CrossRouteError("alpha0 + beta0 must equal the vertex count")
    if isolated:
        keep = [u for u in c.vertices() if u not in isolated]
        stripped = (
            c.induced_subgraph_members(keep)
            if is_graph
            else c.induced_subclutter_members(keep)
        )
    else:
        stripped = c
    reg_by_field = {f: regularity(stripped, f) for f in fields}
    complex_ = independence_complex(c)
    cm_by_field = {f: is_cohen_macaulay(complex_, f) for f in fields}
    gamma = c.domination_number() if is_graph else None
    w2 = None
    edge_critical = None
    edge_critical_violation = None
    sscm: dict[Field, bool] = {}
    linres = None
    if is_graph:
        if not isolated and c.vertex_count >= 2:
            w2 = is_w2(c)
        edge_critical, edge_critical_violation = edge_criticality(c)
        sscm = {f: symbolic_square_cm(c, f, oracle_cap) for f in fields}
        if beta0 == 2:
            # at independence number two the complex is at most a graph, so
            # the verdict is field-free and must match the specialization
            beta2 = symbolic_square_cm_beta2(c)
            _require_agreement(
                "symbolic-square CM at independence number 2",
                {"specialization": beta2, **{f.value: sscm[f] for f in fields}},
            )
        if not isolated and c.has_edges():
            linres = has_linear_resolution(c)
            if linres:
                bad = {"v": v} if v != 1 else {}
                bad.update(
                    {
                        f"reg-{f.value}": reg_by_field[f]
                        for f in fields
                        if reg_by_field[f] != 1
                    }
                )
                if bad:
                    raise CrossRouteError(
                        "a chordal complement forces v = reg = 1, got "
                        + ", ".join(f"{k}={val}" for k, val in bad.items())
                    )
    return InvariantReport(
        kind="graph" if is_graph else "clutter",
        name=name,
        vertex_count=c.vertex_count,
        edge_count=len(c.edge_masks),
        v=v,
        i_dom=i_dom,
        gamma=gamma,
        beta0=beta0,
        alpha0=alpha0,
        dim=beta0,
        reg_by_field=dict(reg_by_field),
        well_covered=c.is_well_covered(),
        one_well_covered=c.is_one_well_covered(),
        w2=w2,
        edge_critical=edge_critical,
        cm_by_field=dict(cm_by_field),
        symbolic_square_cm_by_field=sscm,
        vertex_decomposable=is_vertex_decomposable(complex_),
        linear_resolution=linres,
        has_isolated_vertices=bool(isolated),
        v_witness=witness.members(),
        edge_critical_violation=edge_critical_violation,
    )
