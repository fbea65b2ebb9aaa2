import pytest

from slnpoly.identities import (
    all_passed,
    channel_unitarity_holds,
    check_curl_vertex,
    check_gamma_extension,
    check_moy,
    check_singular_relations,
    check_unitarity,
    check_ybe,
    cross_channel_unitarity_holds,
    curled_vertex,
    reflect_diagram,
    sideways_gadget,
    sideways_gadget_mirror,
    ybe_holds,
)
from slnpoly.diagram import Diagram, Orient, Tile
from slnpoly.evaluator import EvalContext, evaluate_tangle
from slnpoly.laurent import ONE, Q, QINV, LaurentPoly
from slnpoly.spintensor import CrossingKind, PolyMatrix, crossing_matrix


@pytest.mark.parametrize("n", [2, 3, 4])
def test_suites_pass(n):
    assert all_passed(check_ybe(n))
    assert all_passed(check_unitarity(n))
    assert all_passed(check_singular_relations(n))
    assert all_passed(check_curl_vertex(n))
    assert all_passed(check_moy(n))


@pytest.mark.parametrize("gamma", [ONE, Q, Q + QINV])
def test_gamma_extension(gamma):
    for n in (2, 3):
        assert all_passed(check_gamma_extension(n, gamma))


def _perturb(mat: PolyMatrix, key, value) -> PolyMatrix:
    entries = dict(mat.items())
    entries[key] = value
    return PolyMatrix(mat.rows, mat.cols, entries)


def test_ybe_negative_control():
    # replacing the q - q^-1 weight by 1 breaks the Yang-Baxter equation
    r = crossing_matrix(CrossingKind.POS, 2)
    bad = _perturb(r, (1, 1), ONE)
    assert ybe_holds(r, 2)
    assert not ybe_holds(bad, 2)


def test_unitarity_negative_control():
    r = crossing_matrix(CrossingKind.POS, 2)
    rbar = crossing_matrix(CrossingKind.NEG, 2)
    bad = _perturb(rbar, (0, 0), Q)
    assert channel_unitarity_holds(r, rbar)
    assert not channel_unitarity_holds(r, bad)
    assert cross_channel_unitarity_holds(r, rbar, 2)
    assert not cross_channel_unitarity_holds(r, bad, 2)


def test_zigzag_negative_control():
    # flipping the weight sign on one turn kind breaks the wiggle cancellation
    from slnpoly.laurent import LaurentPoly
    from slnpoly.spintensor import TurnKind, spin_set, turn_weight

    def flipped_cancel(n):
        return all(
            LaurentPoly.half_power(-s) * turn_weight(TurnKind.CAP_RIGHT, s) == ONE
            for s in spin_set(n)
        )

    # cup_right's honest weight is q^(s/2); the flipped q^(-s/2) fails
    assert not flipped_cancel(2)


def test_curl_vertex_values():
    results = {r.name: r.passed for r in check_curl_vertex(2)}
    assert results["curl-pos-curl-above-n2"]
    assert results["curl-neg-curl-below-n2"]


def test_moy_reports_five_relations():
    names = [r.name for r in check_moy(2)]
    assert len(names) == 6  # the kink relation is checked on both sides
    assert any("kink" in x for x in names)
    assert any("parallel-bigon" in x for x in names)
    assert any("antiparallel-bigon" in x for x in names)
    assert any("triangle-sum" in x for x in names)
    assert any("mixed-triangle" in x for x in names)


def test_sideways_gadgets_are_antiparallel_r2_pairs():
    d, u = Orient.DOWN, Orient.UP
    for n in (2, 3):
        ctx = EvalContext(n)
        eye = PolyMatrix.identity(n * n)
        pair = Diagram(sideways_gadget(CrossingKind.POS)
                       + sideways_gadget_mirror(CrossingKind.NEG), (d, u))
        assert evaluate_tangle(pair, ctx) == eye
        # same-sign composition is not the identity
        bad = Diagram(sideways_gadget(CrossingKind.POS)
                      + sideways_gadget_mirror(CrossingKind.POS), (d, u))
        assert evaluate_tangle(bad, ctx) != eye


def test_reflect_diagram_involution():
    d = curled_vertex(CrossingKind.POS)
    assert reflect_diagram(reflect_diagram(d)) == d
    with pytest.raises(ValueError):
        reflect_diagram(Diagram([[Tile.VERT_ALT]], (Orient.DOWN, Orient.UP)))


def test_gamma_defect_structure():
    # the defect of the curled vertex against q^(+-1) * alternating vertex is
    # nonzero symbolically but vanishes at q = 1 when gamma = 1
    n = 2
    ctx = EvalContext(n)
    one_ctx = EvalContext(n, ONE)
    v_alt = evaluate_tangle(Diagram([[Tile.VERT_ALT]], (Orient.DOWN, Orient.UP)), one_ctx)
    lhs = evaluate_tangle(curled_vertex(CrossingKind.POS), ctx)
    defect = lhs - v_alt.scale(Q)
    assert not defect.is_zero()
    assert all(p.eval_at(1, 1) == 0 for _, p in defect.items())


def test_gamma_r4_mixed_signs_fail():
    # inconsistent over/under choices are not a rigid-vertex move
    from slnpoly.identities import _pad

    d, u = Orient.DOWN, Orient.UP
    top = (d, u, d)
    ctx = EvalContext(2, Q)
    slide = _pad(sideways_gadget_mirror(CrossingKind.POS), 1, 0) + [[Tile.CROSS_POS, Tile.ID]]
    below = Diagram([[Tile.VERT_ALT, Tile.ID]] + slide, top)
    above = Diagram(slide + [[Tile.ID, Tile.VERT_ALT]], top)
    assert evaluate_tangle(below, ctx) != evaluate_tangle(above, ctx)
