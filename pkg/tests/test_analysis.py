"""Analysis checks against independent brute-force oracles.

The oracles here enumerate paths directly and do one batch Gaussian
elimination with their own tiny row-reduction code, so they share no
machinery with the incremental pivot engine they certify.
"""

from fractions import Fraction

from qpmut.analysis import (basis, basis_of, check_algebraic_cut,
                            global_dimension, injective_dimension_of_projective,
                            jacobian_dimension, projective_module,
                            relations_minimal, resolve, simple_module,
                            simple_presentation)
from qpmut.core import Arrow, Path, PathPoly, Quiver
from qpmut.cuts import qp_from_algebra
from qpmut.mutation import MutationStep, graded_premutate, mutate, split
from qpmut.presentation import AlgebraPresentation, Relation, opposite

from tests.conftest import load_alg, load_qp


# --- independent oracle -----------------------------------------------------

def _all_paths(quiver, bound):
    layers = [[quiver.trivial_path(v) for v in quiver.vertices]]
    for _ in range(bound):
        layers.append([Path(p.start, p.arrows + (a.name,), a.target)
                       for p in layers[-1] for a in quiver.arrows_from(p.end)])
    return layers


def _row_reduce(rows):
    """Plain Gaussian elimination; returns the count of nonzero rows."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    lead_of = {}
    for row in rows:
        for lead in sorted(lead_of):
            if row[lead]:
                f = row[lead]
                base = lead_of[lead]
                row = [x - f * y for x, y in zip(row, base)]
        lead = next((j for j in range(cols) if row[j]), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        lead_of[lead] = row
        rank += 1
    return rank, lead_of


def _ideal_rows(quiver, relations, bound):
    layers = _all_paths(quiver, bound)
    flat = [p for layer in layers for p in layer]
    col = {p: i for i, p in enumerate(flat)}
    rows = []
    for r in relations:
        if not r:
            continue
        ml = r.min_length()
        src, tgt = r.source(), r.target()
        for lp in range(bound - ml + 1):
            for p in layers[lp]:
                if p.end != src:
                    continue
                for lq in range(bound - ml - lp + 1):
                    for q in layers[lq]:
                        if q.start != tgt:
                            continue
                        row = [Fraction(0)] * len(flat)
                        keep = False
                        for mid, coeff in r.items():
                            full = p.arrows + mid.arrows + q.arrows
                            if len(full) > bound:
                                continue
                            row[col[Path(p.start, full, q.end)]] += coeff
                            keep = True
                        if keep:
                            rows.append(row)
    return flat, rows


def brute_dimension(quiver, relations, bound):
    flat, rows = _ideal_rows(quiver, relations, bound)
    rank, _ = _row_reduce(rows)
    return len(flat) - rank


def brute_ideal_member(quiver, relations, element, bound):
    flat, rows = _ideal_rows(quiver, relations, bound)
    col = {p: i for i, p in enumerate(flat)}
    target = [Fraction(0)] * len(flat)
    for p, c in element.items():
        target[col[p]] += c
    base_rank, _ = _row_reduce(rows)
    aug_rank, _ = _row_reduce(rows + [target])
    return base_rank == aug_rank


# --- dimensions -------------------------------------------------------------

def test_dimension_main_algebra(diamond_algebra):
    nfb = basis_of(diamond_algebra, 8)
    # brute force: 4 idempotents + 4 arrows + the surviving path c d
    assert brute_dimension(diamond_algebra.quiver, diamond_algebra.relation_polys(), 8) == 9
    assert nfb.dimension == 9
    assert nfb.stabilized
    assert [str(p) for p in nfb.classes] == [
        "e_1", "e_2", "e_3", "e_4", "a", "b", "c", "d", "c d"]


def test_dimension_commuting_square():
    p = load_alg("diamond_commuting_algebra")
    assert brute_dimension(p.quiver, p.relation_polys(), 8) == 9
    nfb = basis_of(p, 8)
    assert nfb.dimension == 9 and nfb.stabilized


def test_dimension_path_algebra_a2():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    nfb = basis(q, [], 8)
    assert nfb.dimension == 3 and nfb.stabilized


def test_dimensions_match_oracle_on_all_bundled():
    for name in ["diamond_algebra", "diamond_commuting_algebra", "cubed_loop_algebra",
                 "parallel_arrows_algebra", "source_on_two_cycle_algebra", "overlapping_relations_algebra",
                 "square_algebra", "d9_squares_algebra"]:
        p = load_alg(name)
        expected = brute_dimension(p.quiver, p.relation_polys(), 8)
        nfb = basis_of(p, 8)
        assert nfb.dimension == expected, name
        assert nfb.stabilized, name


def test_dimension_monotone_in_bound():
    p = load_alg("cubed_loop_algebra")
    dims = [basis_of(p, b).dimension for b in range(2, 9)]
    assert dims == sorted(dims)
    assert dims[-1] == dims[-2]  # constant once stabilized


def test_completed_quotient_kills_telescoping_loop():
    # x^2 = x^3 forces x^2 = 0 in the completed algebra
    q = Quiver(["1"], [Arrow("x", "1", "1")])
    x2 = PathPoly.of(q.path(["x", "x"]))
    x3 = PathPoly.of(q.path(["x", "x", "x"]))
    nfb = basis(q, [x2 - x3], 10)
    assert nfb.dimension == 2
    assert nfb.stabilized


def test_non_stabilizing_flagged():
    q = Quiver(["1"], [Arrow("x", "1", "1")])
    nfb = basis(q, [], 6)
    assert not nfb.stabilized
    assert nfb.dimension == 7  # e, x, ..., x^6 up to the bound


# --- projectives, resolutions, dimensions ----------------------------------

def test_projective_modules_sum_to_algebra_dimension(diamond_algebra):
    nfb = basis_of(diamond_algebra)
    total = sum(projective_module(nfb, v).module.total_dim()
                for v in diamond_algebra.quiver.vertices)
    assert total == nfb.dimension


def test_projectives_satisfy_relations(diamond_algebra):
    nfb = basis_of(diamond_algebra)
    for v in diamond_algebra.quiver.vertices:
        mod = projective_module(nfb, v).module
        assert mod.satisfies(diamond_algebra.relation_polys())


def test_resolution_of_s4(diamond_algebra):
    # hand syzygy: 0 -> P1 -> P2 + P3 -> P4 -> S4 -> 0
    nfb = basis_of(diamond_algebra)
    res = resolve(nfb, simple_module(diamond_algebra.quiver, "4"), 4)
    assert res.pd == 2
    assert res.steps[0] == {"4": 1}
    assert res.steps[1] == {"2": 1, "3": 1}
    assert res.steps[2] == {"1": 1}


def test_resolution_simple_at_source_of_path_algebra():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    nfb = basis(q, [], 8)
    res = resolve(nfb, simple_module(q, "2"), 4)
    assert res.pd == 1


def test_resolution_semisimple():
    q = Quiver(["1"], [])
    nfb = basis(q, [], 8)
    res = resolve(nfb, simple_module(q, "1"), 4)
    assert res.pd == 0


def test_global_dimension_main(diamond_algebra):
    assert global_dimension(diamond_algebra) == 2


def test_global_dimension_cubed_loop_exceeds_cap():
    # the cubed loop makes one simple periodic, so no finite cap suffices
    p = load_alg("cubed_loop_algebra")
    assert global_dimension(p, cap=4) == ">4"
    assert global_dimension(p, cap=6) == ">6"


def test_global_dimension_hereditary():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    assert global_dimension(AlgebraPresentation(q, [])) == 1


def test_injective_dimension_main(diamond_algebra):
    assert injective_dimension_of_projective(diamond_algebra, "1") == 2


def test_injective_dimension_guard_example():
    p = load_alg("overlapping_relations_algebra")
    assert injective_dimension_of_projective(p, "1") == 3


def test_injective_dimension_of_injective_projective():
    # a sink's projective is simple injective over A2
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    p = AlgebraPresentation(q, [])
    assert injective_dimension_of_projective(p, "2") == 0


def test_cubed_loop_source_still_has_id_two():
    p = load_alg("cubed_loop_algebra")
    assert injective_dimension_of_projective(p, "1") == 2


# --- minimality -------------------------------------------------------------

def test_relations_minimal_main(diamond_algebra):
    report = relations_minimal(diamond_algebra)
    assert report.minimal and report.generating and not report.redundant


def test_duplicate_relation_reported(diamond_algebra):
    q = diamond_algebra.quiver
    ab = PathPoly.of(q.path(["a", "b"]))
    p = AlgebraPresentation(q, [Relation("first", ab), Relation("second", ab)])
    report = relations_minimal(p)
    assert not report.minimal
    assert report.redundant == ["second"]


def test_parallel_relations_minimal():
    p = load_alg("parallel_arrows_algebra")
    report = relations_minimal(p)
    assert report.minimal


def test_consequence_relation_reported():
    # a b c lies in the ideal generated by a b
    q = Quiver(["1", "2", "3", "4"],
               [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "4")])
    ab = PathPoly.of(q.path(["a", "b"]))
    abc = PathPoly.of(q.path(["a", "b", "c"]))
    p = AlgebraPresentation(q, [Relation("ab", ab), Relation("abc", abc)])
    report = relations_minimal(p)
    assert not report.minimal
    assert report.redundant == ["abc"]


def test_minimality_agrees_with_ideal_membership_oracle():
    for name in ["diamond_algebra", "diamond_commuting_algebra", "cubed_loop_algebra",
                 "parallel_arrows_algebra", "source_on_two_cycle_algebra", "overlapping_relations_algebra",
                 "square_algebra", "d9_squares_algebra"]:
        p = load_alg(name)
        report = relations_minimal(p)
        # oracle: r is redundant iff it lies in the ideal of the others
        oracle_redundant = []
        polys = p.relation_polys()
        for i, r in enumerate(p.relations):
            others = polys[:i] + polys[i + 1:]
            if brute_ideal_member(p.quiver, others, r.poly, 8):
                oracle_redundant.append(r.name)
        assert report.redundant == oracle_redundant, name
        assert report.minimal == (not oracle_redundant), name


def test_simple_presentation_shapes(diamond_algebra):
    sp = simple_presentation(diamond_algebra, "4")
    assert [r.name for r in sp.relations] == ["1"]
    assert sp.left.summands == ["1"]          # relation a b starts at 1
    assert sorted(sp.middle.summands) == ["2", "3"]
    assert sp.map_left.commutes() and sp.map_right.commutes()
    # no arrows into 1, so both outer terms vanish there
    sp1 = simple_presentation(diamond_algebra, "1")
    assert sp1.middle.module.total_dim() == 0
    assert sp1.right.total_dim() == 0


# --- jacobian dimension under reduction -------------------------------------

def test_jacobian_dimension_invariant_under_split(diamond_qp):
    pre = graded_premutate(diamond_qp, "1", "left")
    parts = split(pre)
    bound = 6
    d_pre, _ = jacobian_dimension(pre, bound)
    d_red, _ = jacobian_dimension(parts.reduced, bound)
    assert d_pre == d_red


def test_jacobian_dimension_invariance_bundled():
    for name, vertex, side in [("diamond", "1", "left"),
                               ("selfinjective_triangles", "1", "right"),
                               ("d9_squares", "1", "left")]:
        g, cut = load_qp(name)
        pre = graded_premutate(g, vertex, side)
        parts = split(pre)
        d_pre, stab_pre = jacobian_dimension(pre, 6)
        d_red, stab_red = jacobian_dimension(parts.reduced, 6)
        assert d_pre == d_red, name
        assert stab_pre == stab_red, name


def test_check_algebraic_cut_main(diamond_qp):
    report = check_algebraic_cut(diamond_qp, {"rho"})
    assert report.algebraic and report.reduced_with_algebraic_cut
    assert report.dimension == 9 and report.gldim == 2


def test_check_algebraic_cut_after_mutation(diamond_qp):
    out = mutate(diamond_qp, MutationStep("1", "left"))
    report = check_algebraic_cut(out, {"[rhoc]"})
    assert report.algebraic and report.reduced_with_algebraic_cut


def test_check_algebraic_cut_fails_on_cubed_loop():
    p = load_alg("cubed_loop_algebra")
    g, cut = qp_from_algebra(p)
    report = check_algebraic_cut(g, cut)
    assert not report.algebraic
    assert report.gldim == ">4"


def test_opposite_round_trip(diamond_algebra):
    assert opposite(opposite(diamond_algebra)).relations == diamond_algebra.relations


def test_projective_resolution_reports_syzygy_dims(diamond_algebra):
    from qpmut.analysis import projective_resolution
    res = projective_resolution(diamond_algebra, simple_module(diamond_algebra.quiver, "4"), cap=4)
    assert res.pd == 2
    # first syzygy is the radical of P4, with basis b at 2, d at 3, cd at 1
    assert res.syzygy_dims[0] == {"1": 1, "2": 1, "3": 1, "4": 0}
    assert res.syzygy_dims[1] == {"1": 1, "2": 0, "3": 0, "4": 0}
    assert res.syzygy_dims[2] == {"1": 0, "2": 0, "3": 0, "4": 0}


def _random_presentation(rng):
    n = rng.randrange(3, 6)
    vertices = [str(i + 1) for i in range(n)]
    arrows = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(rng.randrange(0, 2 + (j == i + 1))):
                arrows.append(Arrow(f"x{k}", vertices[i], vertices[j]))
                k += 1
    quiver = Quiver(vertices, arrows)
    paths = []
    frontier = [quiver.trivial_path(v) for v in vertices]
    for _ in range(3):
        frontier = [Path(p.start, p.arrows + (a.name,), a.target)
                    for p in frontier for a in quiver.arrows_from(p.end)]
        paths.extend(p for p in frontier if len(p) >= 2)
    rng.shuffle(paths)
    relations = []
    for idx, path in enumerate(paths[: rng.randrange(0, 3)]):
        poly = PathPoly.of(path)
        partners = [q for q in paths if q != path and q.start == path.start
                    and q.end == path.end]
        if partners and rng.random() < 0.5:
            poly = poly - PathPoly.of(rng.choice(partners))
        relations.append(Relation(str(idx + 1), poly))
    try:
        return AlgebraPresentation(quiver, relations)
    except Exception:
        return AlgebraPresentation(quiver, [])


def test_basis_dimension_matches_oracle_on_random_presentations():
    rng = __import__("random").Random(424242)
    agreements = 0
    for _ in range(20):
        p = _random_presentation(rng)
        expected = brute_dimension(p.quiver, p.relation_polys(), 6)
        nfb = basis_of(p, 6)
        assert nfb.dimension == expected
        assert nfb.stabilized  # acyclic quivers always stabilize
        agreements += 1
    assert agreements == 20


def test_random_graded_premutations_stay_homogeneous_and_split_clean():
    import random as _random
    from qpmut.potential import homogeneity_degree

    rng = _random.Random(55001)
    exercised = 0
    for _ in range(30):
        p = _random_presentation(rng)
        if not p.relations:
            continue
        g, cut = qp_from_algebra(p)
        vertex = rng.choice(g.quiver.vertices)
        if any(a.source == a.target == vertex for a in g.quiver.arrows):
            continue
        side = rng.choice(["left", "right"])
        pre = graded_premutate(g, vertex, side)
        assert homogeneity_degree(pre.potential, pre.quiver) == 1
        parts = split(pre, bound=8)
        names = {a.name for a in pre.quiver.arrows}
        red = {a.name for a in parts.reduced.quiver.arrows}
        tri = {a.name for a in parts.trivial.quiver.arrows}
        assert red | tri == names and not red & tri
        assert all(len(path) > 2 for path in parts.reduced.potential.paths())
        d_pre, _ = jacobian_dimension(pre, 4)
        d_red, _ = jacobian_dimension(parts.reduced, 4)
        assert d_pre == d_red
        exercised += 1
    assert exercised >= 12
