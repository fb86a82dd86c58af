import pytest

from qpmut.core import Arrow, PathPoly, Quiver
from qpmut.cuts import (classify_vertex, cut_from_grading, grading_from_cut,
                        qp_from_algebra, truncated_jacobian, validate_cut)
from qpmut.errors import GradingError
from qpmut.mutation import MutationStep, mutate
from qpmut.potential import GradedQP
from qpmut.presentation import AlgebraPresentation, Relation

from tests.conftest import load_alg, load_qp


def test_validate_cut_accepts_singleton(diamond_qp):
    assert validate_cut(diamond_qp, {"rho"}).valid


def test_validate_cut_counts_two(diamond_qp):
    report = validate_cut(diamond_qp, {"rho", "a"})
    assert not report.valid
    assert report.term_counts == [("a b rho", 2)]


def test_validate_cut_vacuous_on_zero_potential():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    assert validate_cut(GradedQP(q, PathPoly.zero()), frozenset()).valid


def test_grading_round_trip(diamond_qp):
    graded = grading_from_cut(diamond_qp, {"rho"})
    assert {a.name: a.degree for a in graded.quiver.arrows} == {
        "a": 0, "b": 0, "c": 0, "d": 0, "rho": 1}
    assert cut_from_grading(graded) == {"rho"}


def test_cut_from_grading_rejects_bad_degree():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2", -1)])
    with pytest.raises(GradingError) as exc:
        cut_from_grading(GradedQP(q, PathPoly.zero()))
    assert "a" in str(exc.value)


def test_cuts_recovered_before_and_after_reduction(diamond_qp):
    from qpmut.mutation import graded_premutate, split
    pre = graded_premutate(diamond_qp, "1", "left")
    assert cut_from_grading(pre) == {"[rhoa]", "[rhoc]"}
    assert cut_from_grading(split(pre).reduced) == {"[rhoc]"}


def test_truncated_jacobian_main(diamond_qp):
    p = truncated_jacobian(diamond_qp, {"rho"})
    assert {a.name for a in p.quiver.arrows} == {"a", "b", "c", "d"}
    assert [(r.name, str(r.poly)) for r in p.relations] == [("rho", "a b")]


def test_truncated_jacobian_of_mutated(diamond_qp):
    out = mutate(diamond_qp, MutationStep("1", "left"))
    p = truncated_jacobian(out, {"[rhoc]"})
    assert {a.name for a in p.quiver.arrows} == {"a*", "c*", "d", "rho*"}
    assert [(r.name, str(r.poly)) for r in p.relations] == [("[rhoc]", "c* rho*")]


def test_truncated_jacobian_trivial_cut():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    p = truncated_jacobian(GradedQP(q, PathPoly.zero()), frozenset())
    assert not p.relations
    assert {a.name for a in p.quiver.arrows} == {"a"}


def test_qp_from_algebra_single_relation(diamond_algebra):
    g, cut = qp_from_algebra(diamond_algebra)
    assert cut == {"rho"}
    rho = g.quiver.arrow("rho")
    assert (rho.source, rho.target, rho.degree) == ("4", "1", 1)
    assert g.potential == PathPoly.of(g.quiver.path(["a", "b", "rho"]))


def test_qp_from_algebra_three_relations():
    p = load_alg("cubed_loop_algebra")
    g, cut = qp_from_algebra(p)
    assert cut == {"rho_1", "rho_2", "rho_3"}
    spans = {(a.name, a.source, a.target) for a in g.quiver.arrows if a.degree == 1}
    assert spans == {("rho_1", "6", "1"), ("rho_2", "6", "4"), ("rho_3", "4", "4")}
    assert len(g.potential) == 3


def test_qp_from_algebra_relation_free():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    g, cut = qp_from_algebra(AlgebraPresentation(q, []))
    assert not g.potential and not cut


def test_round_trip_presentations():
    for name in ["diamond_algebra", "diamond_commuting_algebra", "cubed_loop_algebra",
                 "parallel_arrows_algebra", "source_on_two_cycle_algebra", "overlapping_relations_algebra",
                 "square_algebra", "d9_squares_algebra"]:
        p = load_alg(name)
        g, cut = qp_from_algebra(p)
        back = truncated_jacobian(g, cut)
        assert tuple(back.quiver.vertices) == tuple(p.quiver.vertices)
        assert {(a.name, a.source, a.target) for a in back.quiver.arrows} == \
            {(a.name, a.source, a.target) for a in p.quiver.arrows}
        assert [r.poly for r in back.relations] == [r.poly for r in p.relations], name


def test_classify_vertices(diamond_qp):
    cut = frozenset({"rho"})
    assert classify_vertex(diamond_qp, cut, "1") == "strict_source"
    assert classify_vertex(diamond_qp, cut, "4") == "strict_sink"
    assert classify_vertex(diamond_qp, cut, "2") == "neither"


def test_classify_without_cut_degenerates_to_plain_source():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    g = GradedQP(q, PathPoly.zero())
    assert classify_vertex(g, frozenset(), "1") == "strict_source"
    assert classify_vertex(g, frozenset(), "2") == "strict_sink"


def test_qp_documents_match_algebra_documents():
    for qp_name, alg_name in [("diamond", "diamond_algebra"),
                              ("d9_squares", "d9_squares_algebra")]:
        g_doc, cut_doc = load_qp(qp_name)
        p = load_alg(alg_name)
        g, cut = qp_from_algebra(p)
        assert cut == cut_doc
        assert {(a.name, a.source, a.target, a.degree) for a in g.quiver.arrows} == \
            {(a.name, a.source, a.target, a.degree) for a in g_doc.quiver.arrows}
        assert g.potential == g_doc.potential


def test_cut_predicate_matches_degree_one_homogeneity():
    # for a 0/1 grading induced by an arrow subset, the potential is
    # homogeneous of degree 1 exactly when the subset is a cut
    import itertools
    from qpmut.potential import homogeneity_degree
    from qpmut.errors import GradingError

    for name in ["diamond", "selfinjective_triangles", "selfinjective_hexagon"]:
        g, _ = load_qp(name)
        arrows = [a.name for a in g.quiver.arrows]
        rng_subsets = itertools.islice(
            itertools.chain.from_iterable(
                itertools.combinations(arrows, k) for k in range(len(arrows) + 1)),
            0, 300)
        for subset in rng_subsets:
            cut = frozenset(subset)
            degrees = {a: (1 if a in cut else 0) for a in arrows}
            graded = GradedQP(g.quiver.with_degrees(degrees), g.potential)
            try:
                is_degree_one = homogeneity_degree(graded.potential, graded.quiver) == 1
            except GradingError:
                is_degree_one = False
            assert is_degree_one == validate_cut(g, cut).valid, (name, subset)
