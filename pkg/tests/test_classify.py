"""Classification procedures and the aggregated invariant report."""

from __future__ import annotations

import pytest

from vnum.catalog import (
    EXAMPLE_GRAPH3,
    EXAMPLE_GRAPH4,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from vnum.classify import (
    edge_criticality,
    full_report,
    has_linear_resolution,
    is_cm_graph,
    is_edge_critical,
    is_w2,
    symbolic_square_cm,
    symbolic_square_cm_beta2,
    v_number_checked,
)
from vnum.clutters import Clutter, Graph
from vnum.complexes import Field


class TestW2:
    def test_example3(self):
        assert is_w2(EXAMPLE_GRAPH3.graph())

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_complete_graphs(self, m):
        assert is_w2(complete_graph(m))

    def test_c4_not(self):
        assert not is_w2(cycle_graph(4))

    def test_c5(self):
        assert is_w2(cycle_graph(5))

    def test_isolated_rejected(self):
        with pytest.raises(ValueError):
            is_w2(Graph.of(3, [(1, 2)]))

    def test_matches_one_well_covered(self, corpus):
        # the W2 class is exactly the 1-well-covered isolated-free graphs
        for g in corpus:
            if g.isolated_vertices() or g.vertex_count < 2:
                continue
            assert is_w2(g) == g.is_one_well_covered()


class TestEdgeCritical:
    def test_k3(self):
        assert is_edge_critical(complete_graph(3))

    def test_c4_not(self):
        ok, witness = edge_criticality(cycle_graph(4))
        assert not ok and witness == (1, 2)

    def test_example3(self):
        assert is_edge_critical(EXAMPLE_GRAPH3.graph())

    def test_edgeless_vacuous(self):
        assert is_edge_critical(empty_graph(3))

    def test_star_not(self):
        assert not is_edge_critical(star_graph(3))


class TestCmGraph:
    def test_example3_rational_only(self):
        g = EXAMPLE_GRAPH3.graph()
        assert is_cm_graph(g, Field.Q)
        assert not is_cm_graph(g, Field.F2)

    def test_c5(self):
        assert is_cm_graph(cycle_graph(5), Field.Q)

    def test_c4_not(self):
        assert not is_cm_graph(cycle_graph(4), Field.Q)
        assert not is_cm_graph(cycle_graph(4), Field.F2)


class TestSymbolicSquareCm:
    def test_example4(self):
        assert symbolic_square_cm(EXAMPLE_GRAPH4.graph(), Field.Q)

    def test_example3_not(self):
        assert not symbolic_square_cm(EXAMPLE_GRAPH3.graph(), Field.Q)

    def test_k3(self):
        assert symbolic_square_cm(complete_graph(3), Field.Q)

    def test_c4_not(self):
        assert not symbolic_square_cm(cycle_graph(4), Field.Q)

    def test_p3_not(self):
        assert not symbolic_square_cm(path_graph(3), Field.Q)

    def test_oracle_route_agrees_on_small_graphs(self, small_corpus):
        # the cross-route assertion runs inside symbolic_square_cm itself
        for g in small_corpus[:60]:
            for field in (Field.Q, Field.F2):
                symbolic_square_cm(g, field)

    def test_cm_square_implies_edge_critical_and_w2(self, small_corpus):
        for g in small_corpus:
            if symbolic_square_cm(g, Field.Q):
                assert is_edge_critical(g)
                if not g.isolated_vertices() and g.vertex_count >= 2:
                    assert is_w2(g)

    def test_colon_preserves_cm_square(self, small_corpus):
        # deleting a closed neighborhood preserves the positive verdict
        for g in small_corpus:
            if not g.has_edges() or not symbolic_square_cm(g, Field.Q):
                continue
            critical = is_edge_critical(g)
            for v in range(1, g.vertex_count + 1):
                sub = g.delete_closed_neighborhood(v)
                if sub.vertex_count == 0:
                    continue
                assert symbolic_square_cm(sub, Field.Q)
                if critical and not g.isolated_vertices():
                    assert not sub.isolated_vertices()


class TestBeta2Specialization:
    def test_c5(self):
        assert symbolic_square_cm_beta2(cycle_graph(5))

    def test_c4_not(self):
        assert not symbolic_square_cm_beta2(cycle_graph(4))

    def test_k5_rejected(self):
        with pytest.raises(ValueError):
            symbolic_square_cm_beta2(complete_graph(5))

    def test_matches_direct_computation(self, small_corpus):
        for g in small_corpus:
            if g.independence_number() != 2:
                continue
            assert symbolic_square_cm_beta2(g) == symbolic_square_cm(g, Field.Q)

    def test_edge_critical_beta2_forces_v_reg_2(self, small_corpus):
        for g in small_corpus:
            if g.independence_number() != 2 or g.isolated_vertices():
                continue
            if is_edge_critical(g):
                from vnum.complexes import regularity

                assert g.v_number() == 2
                for field in (Field.Q, Field.F2):
                    assert regularity(g, field) == 2


class TestLinearResolution:
    def test_p3(self):
        assert has_linear_resolution(path_graph(3))

    def test_c4(self):
        assert has_linear_resolution(cycle_graph(4))

    def test_c5_not(self):
        assert not has_linear_resolution(cycle_graph(5))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            has_linear_resolution(Graph.of(3, [(1, 2)]))
        with pytest.raises(ValueError):
            has_linear_resolution(empty_graph(2))

    def test_forces_v_and_reg_one(self, small_corpus):
        from vnum.complexes import regularity

        for g in small_corpus:
            if not g.has_edges() or g.isolated_vertices():
                continue
            if has_linear_resolution(g):
                assert g.v_number() == 1
                for field in (Field.Q, Field.F2):
                    assert regularity(g, field) == 1


class TestVNumberChecked:
    def test_routes_agree_on_corpus(self, small_corpus):
        for g in small_corpus:
            v, witness = v_number_checked(g)
            assert v == len(witness)


class TestWhiskerBounds:
    def test_whisker_v_at_most_whisker_regularity(self, small_corpus):
        # the whisker v-number equals the independent domination number and
        # is bounded by the regularity of the whisker ring
        from vnum.complexes import regularity

        for g in [h for h in small_corpus if h.vertex_count <= 4][:25]:
            w = g.whisker()
            v = w.v_number()
            assert v == g.independent_domination()
            for field in (Field.Q, Field.F2):
                assert v <= regularity(w, field)


class TestW2Heredity:
    def test_neighborhood_deletion_descends(self, small_corpus):
        for g in small_corpus:
            if (
                g.isolated_vertices()
                or g.vertex_count < 2
                or not is_w2(g)
                or len(g.edge_masks) == g.vertex_count * (g.vertex_count - 1) // 2
            ):
                continue
            b = g.independence_number()
            for v in range(1, g.vertex_count + 1):
                sub = g.delete_closed_neighborhood(v)
                assert sub.independence_number() == b - 1
                assert not sub.isolated_vertices()
                assert is_w2(sub)

    def test_well_covered_converse(self, small_corpus):
        for g in small_corpus:
            if g.isolated_vertices() or g.vertex_count < 2 or not g.is_well_covered():
                continue
            hypothesis_holds = True
            for v in range(1, g.vertex_count + 1):
                sub = g.delete_closed_neighborhood(v)
                if sub.vertex_count == 0:
                    continue  # vacuously in the class
                if (
                    sub.vertex_count < 2
                    or sub.isolated_vertices()
                    or not is_w2(sub)
                ):
                    hypothesis_holds = False
                    break
            if hypothesis_holds:
                assert is_w2(g)


class TestFullReport:
    def test_example3_both_fields(self):
        rep = full_report(
            EXAMPLE_GRAPH3.graph(), [Field.Q, Field.F2], name="example3"
        )
        assert rep.v == 3
        assert rep.dim == 3
        assert rep.reg_by_field[Field.Q] == 2
        assert rep.reg_by_field[Field.F2] == 3
        assert rep.w2 is True
        assert rep.edge_critical is True
        assert rep.cm_by_field[Field.Q] is True
        assert rep.symbolic_square_cm_by_field[Field.Q] is False
        assert rep.vertex_decomposable is False

    def test_example4(self):
        rep = full_report(EXAMPLE_GRAPH4.graph(), [Field.Q])
        assert rep.v == rep.reg_by_field[Field.Q] == rep.beta0 == 3
        assert rep.w2 and rep.edge_critical
        assert rep.symbolic_square_cm_by_field[Field.Q] is True

    def test_k2(self):
        rep = full_report(complete_graph(2), [Field.Q])
        assert (rep.v, rep.dim, rep.reg_by_field[Field.Q], rep.w2) == (1, 1, 1, True)

    def test_clutter_report(self):
        rep = full_report(Clutter.of(4, [(1, 2, 3), (3, 4)]), [Field.Q])
        assert rep.kind == "clutter"
        assert rep.gamma is None
        assert rep.w2 is None and rep.edge_critical is None
        assert rep.v <= rep.i_dom <= rep.beta0 == rep.dim

    def test_isolated_vertices_flagged(self):
        g = Graph.of(3, [(1, 2)])
        rep = full_report(g, [Field.Q])
        assert rep.has_isolated_vertices
        assert rep.w2 is None
        assert rep.reg_by_field[Field.Q] == 1

    def test_witness_fields(self):
        rep = full_report(cycle_graph(4), [Field.Q])
        assert rep.v_witness == (1,)
        assert rep.edge_critical_violation == (1, 2)
