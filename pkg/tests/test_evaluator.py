import random

import pytest

from conftest import corpus_diagrams, random_word, transfer_eval
from slnpoly.diagram import (
    BraidWord,
    Diagram,
    DiagramError,
    Orient,
    Tile,
    braid_to_diagram,
    close_braid,
    connected_sum,
    disjoint_union,
    mirror,
    parse_braid_word,
    writhe,
)
from slnpoly.evaluator import (
    EvalContext,
    OracleSizeError,
    evaluate_closed,
    evaluate_tangle,
    normalized_invariant,
    oracle_edge_enumeration,
    oracle_rotation_states,
)
from slnpoly.laurent import LaurentPoly, ONE, Q, QINV, quantum_int
from slnpoly.spintensor import CrossingKind, PolyMatrix, crossing_matrix

D, U = Orient.DOWN, Orient.UP
I = Tile.ID


def ccw_circle() -> Diagram:
    return Diagram([[Tile.CUP_RIGHT], [Tile.CAP_LEFT]])


def cw_circle() -> Diagram:
    return Diagram([[Tile.CUP_LEFT], [Tile.CAP_RIGHT]])


@pytest.mark.parametrize("n", range(2, 7))
def test_loop_value_both_orientations(n):
    ctx = EvalContext(n)
    assert evaluate_closed(ccw_circle(), ctx) == quantum_int(n)
    assert evaluate_closed(cw_circle(), ctx) == quantum_int(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kink_relations(n):
    ctx = EvalContext(n)
    eye = PolyMatrix.identity(n)
    pos_kink = Diagram([[I, Tile.CUP_RIGHT], [Tile.CROSS_POS, I], [I, Tile.CAP_LEFT]], (D,))
    neg_kink = Diagram([[I, Tile.CUP_RIGHT], [Tile.CROSS_NEG, I], [I, Tile.CAP_LEFT]], (D,))
    assert evaluate_tangle(pos_kink, ctx) == eye.scale(LaurentPoly.q_power(n))
    assert evaluate_tangle(neg_kink, ctx) == eye.scale(LaurentPoly.q_power(-n))
    # the same curls on the other side of the strand
    pos_left = Diagram([[Tile.CUP_LEFT, I], [I, Tile.CROSS_POS], [Tile.CAP_RIGHT, I]], (D,))
    neg_left = Diagram([[Tile.CUP_LEFT, I], [I, Tile.CROSS_NEG], [Tile.CAP_RIGHT, I]], (D,))
    assert evaluate_tangle(pos_left, ctx) == eye.scale(LaurentPoly.q_power(n))
    assert evaluate_tangle(neg_left, ctx) == eye.scale(LaurentPoly.q_power(-n))


def test_vertex_with_curl_tangle():
    # a positive curl on adjacent legs of a singular vertex scales it by q
    for n in (2, 3):
        ctx = EvalContext(n)
        q_mat = crossing_matrix(CrossingKind.SING, n)
        d = Diagram([[Tile.CROSS_SING], [Tile.CROSS_POS]], (D, D))
        assert evaluate_tangle(d, ctx) == q_mat.scale(Q)
        d = Diagram([[Tile.CROSS_SING], [Tile.CROSS_NEG]], (D, D))
        assert evaluate_tangle(d, ctx) == q_mat.scale(QINV)


def test_evaluate_closed_requires_closed():
    with pytest.raises(DiagramError):
        evaluate_closed(braid_to_diagram(BraidWord(2)), EvalContext(2))


def test_evaluate_rejects_invalid():
    bad = Diagram([[Tile.CROSS_POS]], (D, U))
    with pytest.raises(DiagramError):
        evaluate_tangle(bad, EvalContext(2))


def test_empty_diagram_evaluates_to_one():
    assert evaluate_closed(Diagram([]), EvalContext(3)) == ONE


def test_zero_result_is_zero_polynomial():
    # two strands capped against orientation cannot happen; instead check a
    # tangle entry that is empty: off-diagonal of the identity strand
    d = Diagram([[I]], (D,))
    t = evaluate_tangle(d, EvalContext(2))
    assert t[0, 1] == LaurentPoly.zero()


@pytest.mark.parametrize("n", [2, 3])
def test_frontier_matches_transfer_matrices(n):
    ctx = EvalContext(n, Q + QINV)
    fixtures = [
        close_braid(parse_braid_word("s1 s1 s1", 2)),
        close_braid(parse_braid_word("t1 S1", 2)),
        braid_to_diagram(parse_braid_word("s1 t2", 3)),
        Diagram([[Tile.VERT_ALT]], (D, U)),
        Diagram([[I, Tile.CUP_LEFT], [Tile.CAP_LEFT, I]], (D,)),
    ]
    for d in fixtures:
        assert evaluate_tangle(d, ctx) == transfer_eval(d, ctx)


def test_oracles_on_corpus_small():
    for name, d in corpus_diagrams()[:8]:
        ctx = EvalContext(2)
        v = evaluate_closed(d, ctx)
        assert oracle_edge_enumeration(d, ctx) == v, name
        assert oracle_rotation_states(d, ctx) == v, name


def test_oracle_edge_cap():
    big = close_braid(parse_braid_word("s1 s2 s1 s2 s1 s2", 3))
    with pytest.raises(OracleSizeError):
        oracle_edge_enumeration(big, EvalContext(2), edge_cap=4)


def test_oracle_crossing_cap():
    tre = close_braid(parse_braid_word("s1 s1 s1", 2))
    with pytest.raises(OracleSizeError):
        oracle_rotation_states(tre, EvalContext(2), crossing_cap=2)


def test_oracle_rejects_vert_alt():
    d = Diagram([[Tile.CUP_RIGHT], [Tile.VERT_ALT], [Tile.CAP_LEFT]])
    assert not d.is_closed() or True
    # close an alternating vertex into a loop: cup gives (down, up) which is
    # exactly the vertex's frame, then cap it off
    assert d.is_closed()
    with pytest.raises(DiagramError):
        oracle_rotation_states(d, EvalContext(2))


def test_vert_alt_closed_loop_value():
    # the closed-off alternating vertex: gamma * ([n] + [n]^2) by resolution
    for n in (2, 3):
        for gamma in (ONE, Q, Q + QINV):
            ctx = EvalContext(n, gamma)
            d = Diagram([[Tile.CUP_RIGHT], [Tile.VERT_ALT], [Tile.CAP_LEFT]])
            got = evaluate_closed(d, ctx)
            want = gamma * (quantum_int(n) + quantum_int(n) * quantum_int(n))
            assert got == want
            assert oracle_edge_enumeration(d, ctx) == got


def test_normalized_invariant():
    n = 2
    ctx = EvalContext(n)
    tre = close_braid(parse_braid_word("s1 s1 s1", 2))
    assert normalized_invariant(tre, ctx) == LaurentPoly.q_power(-3) * evaluate_closed(tre, ctx)
    assert normalized_invariant(ccw_circle(), ctx) == quantum_int(n)
    # closure of s1 S1 is the closure of the identity 2-braid: a 2-unlink
    unlink = close_braid(parse_braid_word("s1 S1", 2))
    assert writhe(unlink) == 0
    assert normalized_invariant(unlink, ctx) == quantum_int(n) * quantum_int(n)


def test_markov_stabilization():
    # closing w * sigma_k on k+1 strands multiplies the closure of w by q^n
    rng = random.Random(7)
    for n in (2, 3):
        ctx = EvalContext(n)
        for _ in range(5):
            w = random_word(rng, 2, rng.randrange(0, 4))
            base = evaluate_closed(close_braid(w), ctx)
            up = BraidWord(3, w.letters + ((CrossingKind.POS, 2),))
            down = BraidWord(3, w.letters + ((CrossingKind.NEG, 2),))
            assert evaluate_closed(close_braid(up), ctx) == LaurentPoly.q_power(n) * base
            assert evaluate_closed(close_braid(down), ctx) == LaurentPoly.q_power(-n) * base


def test_conjugation_invariance():
    rng = random.Random(11)
    for n in (2, 3):
        ctx = EvalContext(n)
        for _ in range(6):
            k = rng.choice((2, 3))
            u = random_word(rng, k, rng.randrange(1, 4))
            v = random_word(rng, k, rng.randrange(1, 4))
            uv = BraidWord(k, u.letters + v.letters)
            vu = BraidWord(k, v.letters + u.letters)
            assert evaluate_closed(close_braid(uv), ctx) == evaluate_closed(close_braid(vu), ctx)


def test_mirror_property():
    rng = random.Random(13)
    for n in (2, 3):
        ctx = EvalContext(n)
        for _ in range(6):
            k = rng.choice((2, 3))
            w = random_word(rng, k, rng.randrange(0, 5))
            d = close_braid(w)
            assert evaluate_closed(mirror(d), ctx) == evaluate_closed(d, ctx).invert_q()


def test_connected_sum_examples():
    for n in (2, 3):
        ctx = EvalContext(n)
        qn = quantum_int(n)
        circle = ccw_circle()
        assert evaluate_closed(connected_sum(circle, circle), ctx) == qn
        assert evaluate_closed(disjoint_union(circle, circle), ctx) == qn * qn
        tre = close_braid(parse_braid_word("s1 s1 s1", 2))
        v = evaluate_closed(tre, ctx)
        assert qn * evaluate_closed(connected_sum(tre, tre), ctx) == v * v


def test_multiplicativity():
    rng = random.Random(17)
    for n in (2, 3):
        ctx = EvalContext(n)
        qn = quantum_int(n)
        for _ in range(4):
            a = close_braid(random_word(rng, 2, rng.randrange(0, 4)))
            b = close_braid(random_word(rng, rng.choice((1, 2)), rng.randrange(0, 3)))
            va, vb = evaluate_closed(a, ctx), evaluate_closed(b, ctx)
            assert evaluate_closed(disjoint_union(a, b), ctx) == va * vb
            assert qn * evaluate_closed(connected_sum(a, b), ctx) == va * vb


def test_integer_powers_on_closures():
    rng = random.Random(19)
    ctx = EvalContext(3)
    for _ in range(8):
        w = random_word(rng, rng.choice((1, 2, 3)), rng.randrange(0, 5))
        v = evaluate_closed(close_braid(w), ctx)
        assert v.has_only_integer_powers()


def test_tangle_tensor_indexing():
    # an open positive crossing evaluates to exactly its matrix
    for n in (2, 3):
        d = braid_to_diagram(parse_braid_word("s1", 2))
        assert evaluate_tangle(d, EvalContext(n)) == crossing_matrix(CrossingKind.POS, n)
