"""Clutters and graphs with exact combinatorial invariants.

A clutter is an antichain of nonempty edges over vertices {1, ..., s}; a
graph is the 2-uniform case.  Edges are stored internally as bit masks in a
canonical sorted order, so equal clutters compare equal and every operation
is deterministic.  All invariants (stable sets, covers, the v-number, the
domination numbers) are computed exactly; the intended scale is s <= ~24.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .vertexsets import (
    AmbientMismatchError,
    VertexSet,
    iter_bits,
    mask_members,
    mask_of,
)


class ZeroIdealError(ValueError):
    """Operation undefined for a discrete clutter (its edge ideal is zero)."""


def _edge_sort_key(mask: int) -> tuple[int, ...]:
    return mask_members(mask)


def _antichain_violation(masks: Sequence[int]) -> Optional[tuple[int, int]]:
    """Return a pair (small, big) with small subset of big, or None."""
    for a, b in itertools.combinations(masks, 2):
        if a & ~b == 0:
            return (a, b)
        if b & ~a == 0:
            return (b, a)
    return None


@dataclass(frozen=True)
class Clutter:
    """An antichain of nonempty edges on vertices {1, ..., vertex_count}."""

    vertex_count: int
    edge_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        full = (1 << self.vertex_count) - 1
        for m in self.edge_masks:
            if m == 0:
                raise ValueError("empty edge not allowed")
            if m & ~full:
                raise ValueError("edge has vertices outside the ambient range")
        if len(set(self.edge_masks)) != len(self.edge_masks):
            raise ValueError("repeated edge")
        bad = _antichain_violation(self.edge_masks)
        if bad is not None:
            raise ValueError(
                f"not an antichain: edge {mask_members(bad[0])} is contained "
                f"in edge {mask_members(bad[1])}"
            )
        if list(self.edge_masks) != sorted(self.edge_masks, key=_edge_sort_key):
            raise ValueError("edges not in canonical order; use Clutter.of")

    @classmethod
    def of(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> "Clutter":
        masks = sorted(
            {mask_of(vertex_count, e) for e in edges}, key=_edge_sort_key
        )
        return cls(vertex_count, tuple(masks))

    # -- basic views ------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def edges(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.vertex_count, m) for m in self.edge_masks)

    def edge_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(mask_members(m) for m in self.edge_masks)

    def has_edges(self) -> bool:
        return bool(self.edge_masks)

    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.vertex_count + 1))

    def isolated_vertices(self) -> tuple[int, ...]:
        covered = 0
        for m in self.edge_masks:
            covered |= m
        return mask_members(self.full_mask & ~covered)

    def is_prime_ideal(self) -> bool:
        """True when every edge is a singleton, so the edge ideal is prime."""
        return bool(self.edge_masks) and all(
            m.bit_count() == 1 for m in self.edge_masks
        )

    def _check_set(self, a: VertexSet) -> None:
        if a.ambient_size != self.vertex_count:
            raise AmbientMismatchError(
                f"vertex set ambient {a.ambient_size} vs clutter on "
                f"{self.vertex_count} vertices"
            )

    # -- stability and covers ---------------------------------------------

    def is_stable_mask(self, mask: int) -> bool:
        return all(e & ~mask for e in self.edge_masks)

    def is_stable(self, a: VertexSet) -> bool:
        """True iff no edge is contained in a."""
        self._check_set(a)
        return self.is_stable_mask(a.mask)

    def neighbor_mask(self, mask: int) -> int:
        # N(A) collects v with some edge inside A | {v}; for stable A each
        # such edge leaves exactly one vertex outside A.
        out = 0
        for e in self.edge_masks:
            rest = e & ~mask
            if rest and rest & (rest - 1) == 0:
                out |= rest
        return out

    def neighbor_set(self, a: VertexSet) -> VertexSet:
        """The neighbor set N(a) of a stable set a."""
        self._check_set(a)
        if not self.is_stable_mask(a.mask):
            raise ValueError("neighbor set is defined for stable sets only")
        return VertexSet(self.vertex_count, self.neighbor_mask(a.mask))

    def is_cover_mask(self, mask: int) -> bool:
        return all(e & mask for e in self.edge_masks)

    def is_vertex_cover(self, a: VertexSet) -> bool:
        self._check_set(a)
        return self.is_cover_mask(a.mask)

    def is_minimal_cover_mask(self, mask: int) -> bool:
        # Covers are upward closed, so dropping single vertices suffices.
        if not self.is_cover_mask(mask):
            return False
        return all(not self.is_cover_mask(mask ^ b) for b in iter_bits(mask))

    def is_minimal_vertex_cover(self, a: VertexSet) -> bool:
        self._check_set(a)
        return self.is_minimal_cover_mask(a.mask)

    # -- enumeration ------------------------------------------------------

    def stable_masks(self, max_size: Optional[int] = None) -> Iterator[int]:
        """All stable sets as masks, by increasing size then lexicographically."""
        s = self.vertex_count
        cap = s if max_size is None else min(max_size, s)
        for k in range(cap + 1):
            for combo in itertools.combinations(range(s), k):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if self.is_stable_mask(mask):
                    yield mask

    def minimal_cover_masks(self) -> tuple[int, ...]:
        return _minimal_transversals(self.edge_masks)

    def maximal_stable_masks(self) -> tuple[int, ...]:
        # Maximal stable sets are exactly complements of minimal covers.
        full = self.full_mask
        masks = [full ^ c for c in self.minimal_cover_masks()]
        return tuple(sorted(masks, key=_edge_sort_key))

    def maximal_stable_sets(self) -> tuple[VertexSet, ...]:
        return tuple(
            VertexSet(self.vertex_count, m) for m in self.maximal_stable_masks()
        )

    def family_a(self) -> tuple[VertexSet, ...]:
        """All stable sets whose neighbor set is a minimal vertex cover."""
        if not self.has_edges():
            raise ZeroIdealError("family undefined for the zero ideal")
        out = []
        for mask in self.stable_masks():
            n = self.neighbor_mask(mask)
            if self.is_cover_mask(n) and self.is_minimal_cover_mask(n):
                out.append(VertexSet(self.vertex_count, mask))
        return tuple(out)

    # -- numeric invariants -------------------------------------------------

    def independence_number(self) -> int:
        return max(m.bit_count() for m in self.maximal_stable_masks())

    def cover_number(self) -> int:
        return min(m.bit_count() for m in self.minimal_cover_masks())

    def independent_domination(self) -> int:
        return min(m.bit_count() for m in self.maximal_stable_masks())

    def is_well_covered(self) -> bool:
        sizes = {m.bit_count() for m in self.maximal_stable_masks()}
        return len(sizes) == 1

    def is_one_well_covered(self) -> bool:
        if not self.is_well_covered():
            return False
        return all(
            self.delete_vertex(v).is_well_covered()
            for v in range(1, self.vertex_count + 1)
        )

    def v_number(self) -> int:
        return self.v_number_with_witness()[0]

    def v_number_with_witness(self) -> tuple[int, VertexSet]:
        """Least size of a stable set with minimal-cover neighbor set.

        Searches stable sets by increasing size, so the witness is the
        lexicographically smallest minimizer.  The empty set qualifies
        exactly when every edge is a singleton (prime edge ideal, v = 0).
        """
        if not self.has_edges():
            raise ZeroIdealError("v-number undefined for the zero ideal")
        for mask in self.stable_masks():
            n = self.neighbor_mask(mask)
            if self.is_cover_mask(n) and self.is_minimal_cover_mask(n):
                return mask.bit_count(), VertexSet(self.vertex_count, mask)
        raise AssertionError("unreachable: maximal stable sets always qualify")

    # -- derived clutters ---------------------------------------------------

    def blocker(self) -> "Clutter":
        """The clutter of minimal vertex covers, on the same vertex set."""
        if not self.has_edges():
            raise ZeroIdealError("blocker undefined for the zero ideal")
        masks = sorted(self.minimal_cover_masks(), key=_edge_sort_key)
        return Clutter(self.vertex_count, tuple(masks))

    def delete_vertex(self, v: int) -> "Clutter":
        """Remove v and every edge through it, reindexing densely."""
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} not in 1..{self.vertex_count}")
        keep = [u for u in range(1, self.vertex_count + 1) if u != v]
        return self.induced_subclutter_members(keep)

    def induced_subclutter_members(self, keep: Sequence[int]) -> "Clutter":
        old_of_new = tuple(keep)
        new_of_old = {u: i + 1 for i, u in enumerate(old_of_new)}
        keep_mask = mask_of(self.vertex_count, keep)
        edges = []
        for m in self.edge_masks:
            if m & ~keep_mask == 0:
                edges.append(frozenset(new_of_old[u] for u in mask_members(m)))
        return Clutter.of(len(old_of_new), edges)


# -- hypergraph transversals -------------------------------------------------


@lru_cache(maxsize=None)
def _minimal_transversals(edge_masks: tuple[int, ...]) -> tuple[int, ...]:
    """All minimal vertex covers, by sequential antichain extension.

    Starts from the empty partial cover and folds in one edge at a time,
    extending the partials that miss the edge by each of its vertices and
    pruning non-minimal results after every fold.
    """
    partial = [0]
    for e in sorted(edge_masks, key=lambda m: (m.bit_count(), m)):
        hit = []
        miss = []
        for t in partial:
            (hit if t & e else miss).append(t)
        candidates = hit
        for t in miss:
            for b in iter_bits(e):
                candidates.append(t | b)
        partial = _antichain_minima(candidates)
    return tuple(sorted(partial, key=_edge_sort_key))


def _antichain_minima(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=int.bit_count)
    out: list[int] = []
    for m in uniq:
        if not any(kept & ~m == 0 for kept in out):
            out.append(m)
    return out


# -- graphs -------------------------------------------------------------------


@dataclass(frozen=True)
class Graph(Clutter):
    """A simple graph: the clutter whose edges all have two vertices.

    Derived graphs remember how their dense new labels map back to the
    parent via ``parent_map`` (new index 1..k -> old index); the map is
    ignored by equality and hashing.
    """

    parent_map: Optional[tuple[int, ...]] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        super().__post_init__()
        for m in self.edge_masks:
            if m.bit_count() != 2:
                raise ValueError(
                    f"graph edge must have exactly 2 vertices, got {mask_members(m)}"
                )

    @classmethod
    def of(
        cls,
        vertex_count: int,
        edges: Iterable[Iterable[int]],
        parent_map: Optional[tuple[int, ...]] = None,
    ) -> "Graph":
        pairs = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2 or e[0] == e[1]:
                raise ValueError(f"not a simple graph edge: {e}")
            pairs.add(mask_of(vertex_count, e))
        masks = tuple(sorted(pairs, key=_edge_sort_key))
        return cls(vertex_count, masks, parent_map)

    # -- adjacency ----------------------------------------------------------

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor mask per vertex, indexed 0..s-1 for vertex 1..s."""
        return _adjacency(self.vertex_count, self.edge_masks)

    def neighbors(self, v: int) -> VertexSet:
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} not in 1..{self.vertex_count}")
        return VertexSet(self.vertex_count, self.adjacency_masks()[v - 1])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(
            self.vertex_count, self.adjacency_masks()[v - 1] | 1 << (v - 1)
        )

    def has_edge(self, u: int, v: int) -> bool:
        return mask_of(self.vertex_count, (u, v)) in set(self.edge_masks)

    def domination_number(self) -> int:
        """Least size of a set dominating every vertex outside it."""
        adj = self.adjacency_masks()
        s = self.vertex_count
        full = self.full_mask
        for k in range(s + 1):
            for combo in itertools.combinations(range(s), k):
                mask = 0
                dominated = 0
                for i in combo:
                    mask |= 1 << i
                    dominated |= adj[i]
                if (mask | dominated) == full:
                    return k
        raise AssertionError("unreachable: the full vertex set dominates")

    # -- derived graphs ------------------------------------------------------

    def induced_subgraph_members(self, keep: Sequence[int]) -> "Graph":
        old_of_new = tuple(keep)
        new_of_old = {u: i + 1 for i, u in enumerate(old_of_new)}
        keep_mask = mask_of(self.vertex_count, keep) if keep else 0
        edges = []
        for m in self.edge_masks:
            if m & ~keep_mask == 0:
                a, b = mask_members(m)
                edges.append((new_of_old[a], new_of_old[b]))
        return Graph.of(len(old_of_new), edges, parent_map=old_of_new)

    def induced_subgraph(self, a: VertexSet) -> "Graph":
        self._check_set(a)
        return self.induced_subgraph_members(a.members())

    def delete_vertex(self, v: int) -> "Graph":
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} not in 1..{self.vertex_count}")
        keep = [u for u in range(1, self.vertex_count + 1) if u != v]
        return self.induced_subgraph_members(keep)

    def delete_edge(self, u: int, v: int) -> "Graph":
        m = mask_of(self.vertex_count, (u, v))
        if m not in set(self.edge_masks):
            raise ValueError(f"edge {{{u},{v}}} not present")
        rest = tuple(e for e in self.edge_masks if e != m)
        return Graph(self.vertex_count, rest)

    def delete_closed_neighborhood(self, v: int) -> "Graph":
        """G_v: the induced subgraph on V minus N[v]."""
        closed = self.closed_neighborhood(v)
        keep = [u for u in range(1, self.vertex_count + 1) if u not in closed]
        return self.induced_subgraph_members(keep)

    def delete_edge_neighborhoods(self, u: int, v: int) -> "Graph":
        """G_e for e = {u, v}: drop N[u] and N[v] and take the induced graph."""
        if not self.has_edge(u, v):
            raise ValueError(f"edge {{{u},{v}}} not present")
        gone = self.closed_neighborhood(u).union(self.closed_neighborhood(v))
        keep = [w for w in range(1, self.vertex_count + 1) if w not in gone]
        return self.induced_subgraph_members(keep)

    def complement(self) -> "Graph":
        s = self.vertex_count
        present = set(self.edge_masks)
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(1, s + 1), 2)
            if mask_of(s, (u, v)) not in present
        ]
        return Graph.of(s, edges)

    def disjoint_union(self, other: "Graph") -> "Graph":
        s = self.vertex_count
        edges = list(self.edge_lists())
        edges += [(a + s, b + s) for a, b in other.edge_lists()]
        return Graph.of(s + other.vertex_count, edges)

    def whisker(self) -> "Graph":
        """Attach a pendant vertex u_i = s+i to every vertex t_i."""
        s = self.vertex_count
        edges = list(self.edge_lists())
        edges += [(i, s + i) for i in range(1, s + 1)]
        return Graph.of(2 * s, edges)

    # -- structure predicates -------------------------------------------------

    def is_connected(self) -> bool:
        s = self.vertex_count
        if s == 0:
            return True
        adj = self.adjacency_masks()
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for b in iter_bits(frontier):
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        adj = self.adjacency_masks()
        remaining = self.full_mask
        comps = []
        while remaining:
            start = remaining & -remaining
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for b in iter_bits(frontier):
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & ~seen
                seen |= frontier
            comps.append(mask_members(seen))
            remaining &= ~seen
        return tuple(comps)

    def diameter(self) -> float:
        """Greatest BFS distance between vertex pairs; inf when disconnected."""
        s = self.vertex_count
        if s == 0:
            return 0
        adj = self.adjacency_masks()
        best = 0
        for src in range(s):
            dist = 0
            seen = 1 << src
            frontier = seen
            while frontier:
                nxt = 0
                for b in iter_bits(frontier):
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & ~seen
                if frontier:
                    seen |= frontier
                    dist += 1
            if seen != self.full_mask:
                return float("inf")
            best = max(best, dist)
        return best

    def is_chordal(self) -> bool:
        """Perfect-elimination-ordering search by repeated simplicial removal."""
        adj = list(self.adjacency_masks())
        alive = self.full_mask
        for _ in range(self.vertex_count):
            found = None
            for b in iter_bits(alive):
                i = b.bit_length() - 1
                nbrs = adj[i] & alive
                if all(
                    adj[x.bit_length() - 1] & (nbrs ^ x) == (nbrs ^ x)
                    for x in iter_bits(nbrs)
                ):
                    found = b
                    break
            if found is None:
                return False
            alive ^= found
        return True

    def is_triangle_free(self) -> bool:
        adj = self.adjacency_masks()
        for m in self.edge_masks:
            a, b = mask_members(m)
            if adj[a - 1] & adj[b - 1]:
                return False
        return True

    def is_maximal_triangle_free(self) -> bool:
        """Triangle-free, and joining any non-adjacent pair makes a triangle."""
        if not self.is_triangle_free():
            return False
        adj = self.adjacency_masks()
        for u, v in itertools.combinations(range(self.vertex_count), 2):
            if adj[u] >> v & 1:
                continue
            if not adj[u] & adj[v]:
                return False
        return True

    def is_claw_free(self) -> bool:
        """No induced K_{1,3}: no vertex has three pairwise non-adjacent neighbors."""
        adj = self.adjacency_masks()
        for v in range(self.vertex_count):
            nbrs = mask_members(adj[v])
            for a, b, c in itertools.combinations(nbrs, 3):
                if (
                    not adj[a - 1] >> (b - 1) & 1
                    and not adj[a - 1] >> (c - 1) & 1
                    and not adj[b - 1] >> (c - 1) & 1
                ):
                    return False
        return True


@lru_cache(maxsize=None)
def _adjacency(vertex_count: int, edge_masks: tuple[int, ...]) -> tuple[int, ...]:
    adj = [0] * vertex_count
    for m in edge_masks:
        a, b = mask_members(m)
        adj[a - 1] |= 1 << (b - 1)
        adj[b - 1] |= 1 << (a - 1)
    return tuple(adj)
