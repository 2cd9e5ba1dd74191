import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_walks.alcove import STANDARD, Orientation, apartment
from hecke_walks.rootdata import build_root_datum
from hecke_walks.walks import CROSSING, FOLDING, Step, WalkAlgebra, WalkWord, parse_steps
from hecke_walks.weyl import Word


def W_of(t, r, flavor="adjoint"):
    return WalkAlgebra(apartment(build_root_datum(t, r, flavor)))


def ww(text):
    return WalkWord(parse_steps(text))


def test_step_parsing():
    assert Step.parse("c+1") == Step(CROSSING, 1, 1)
    assert Step.parse("f-0") == Step(FOLDING, -1, 0)
    assert str(Step(FOLDING, 1, 2)) == "f+2"
    with pytest.raises(ValueError):
        Step.parse("x+1")
    with pytest.raises(ValueError):
        Step(CROSSING, 0, 1)
    assert Step.from_dict(Step.parse("c-2").to_dict()) == Step.parse("c-2")


def test_end_point_examples():
    W = W_of("A", 1, "simply_connected")
    G = W.group
    assert W.end_point(WalkWord(())) == G.identity
    assert W.end_point(ww("c+0,c+1")) == G.translation((1,))
    assert W.end_point(ww("c-1,f-1")) == G.simple_reflection(1)


def test_omega_part_of_end_point():
    W = W_of("A", 1)
    G = W.group
    tau = G.omega_group[1].element
    word = WalkWord(parse_steps("c+0"), tau)
    assert W.end_point(word) == G.simple_reflection(0) * tau


def test_validate_examples():
    W = W_of("A", 1)
    assert W.validate(ww("c-1")) == (True, None)
    assert W.validate(ww("c+1")) == (False, 0)
    assert W.validate(ww("f+1")) == (True, None)
    with pytest.raises(ValueError):
        W.end_point(ww("c+1"))


def test_non_folded_walk_examples():
    W = W_of("A", 1)
    assert W.non_folded_walk(Word((0, 1))).word == ww("c+0,c+1")
    assert W.non_folded_walk(Word((1, 1))).word == ww("c-1,c+1")
    tau = W.group.omega_group[1].element
    walk = W.non_folded_walk(Word((), tau))
    assert walk.word.steps == () and W.end_point(walk) == tau


def test_straighten_examples():
    W = W_of("A", 1)
    comb = W.straighten(ww("c-1,c-1"))
    assert comb.terms == {ww("c-1,c+1"): 1, ww("c-1,f-1"): 1}
    assert W.straighten(ww("c+1")).terms == {ww("c-1"): 1, ww("f+1"): 1}
    assert W.straighten(ww("f-1")).terms == {ww("f+1"): -1}
    valid = ww("c-1,c+1,f-0")
    assert W.straighten(valid).terms == {valid: 1}


def test_concatenate():
    W = W_of("A", 1, "simply_connected")
    G = W.group
    p = W.non_folded_walk(G.reduced_word(G.translation((1,))))
    q = W.non_folded_walk(G.reduced_word(G.translation((1,))))
    pq = W.concatenate(p, q)
    assert W.end_point(pq) == G.translation((2,))
    assert W.concatenate(p, W.non_folded_walk(Word(()))).word == p.word
    back = W.concatenate(p, W.non_folded_walk(G.reduced_word(G.translation((-1,)))))
    assert W.end_point(back) == G.identity and W.is_walk(back.word)
    b = Orientation("alcove_negative", G.identity)
    with pytest.raises(ValueError):
        W.concatenate(W.non_folded_walk(Word((0,)), b), W.non_folded_walk(Word((1,)), b))


def test_concatenate_with_omega():
    W = W_of("A", 2)
    G = W.group
    for lam, mu in [((1, 0), (0, 1)), ((1, 0), (1, 0)), ((-1, 1), (2, 0))]:
        p = W.non_folded_walk(G.reduced_word(G.translation(lam)))
        q = W.non_folded_walk(G.reduced_word(G.translation(mu)))
        pq = W.concatenate(p, q)
        assert W.end_point(pq) == G.translation(tuple(a + b for a, b in zip(lam, mu)))


@pytest.mark.parametrize("key", [("A", 2, "adjoint"), ("C", 2, "adjoint"), ("G", 2, "adjoint")])
def test_end_point_of_non_folded_walk_is_evaluation(key):
    W = W_of(*key)
    G = W.group
    rng = random.Random(1)
    oris = [STANDARD, Orientation("chamber", G.longest_element()),
            Orientation("alcove_positive", G.evaluate((0, 1)))]
    for _ in range(100):
        word = Word(tuple(rng.randrange(G.rank + 1) for _ in range(rng.randrange(9))))
        for o in oris:
            walk = W.non_folded_walk(word, o)
            assert W.end_point(walk) == G.evaluate(word)


@given(st.lists(st.integers(0, 2), max_size=7))
def test_unique_sign_assignment(letters):
    W = W_of("A", 2)
    good = W.non_folded_walk(Word(tuple(letters))).word
    for k in range(len(letters)):
        flipped = list(good.steps)
        s = flipped[k]
        flipped[k] = Step(s.kind, -s.sign, s.i)
        assert not W.is_walk(WalkWord(tuple(flipped)))


steps_c2 = st.builds(Step, st.sampled_from([CROSSING, FOLDING]), st.sampled_from([1, -1]), st.integers(0, 2))


@given(st.lists(steps_c2, max_size=6))
def test_straighten_yields_walks(steps):
    W = W_of("C", 2)
    comb = W.straighten(WalkWord(tuple(steps)))
    assert all(W.is_walk(w) for w in comb.terms)
    assert all(len(w) == len(steps) for w in comb.terms)


@given(st.lists(steps_c2, max_size=6))
def test_free_basis_expansion_consistent(steps):
    W = W_of("C", 2)
    word = WalkWord(tuple(steps))
    # both sides expressed in the free basis of c+ / f- words agree
    lhs = W.free_basis_expansion(word)
    rhs = {}
    for w, c in W.straighten(word).terms.items():
        for k, a in W.free_basis_expansion(w).items():
            rhs[k] = rhs.get(k, 0) + c * a
    assert lhs == {k: c for k, c in rhs.items() if c}


def test_all_walks_count():
    W = W_of("A", 2)
    # two admissible steps of each type at every alcove
    assert len(W.all_walks(3)) == 6**3
    assert all(W.is_walk(w) for w in W.all_walks(2))


def test_serialization():
    W = W_of("A", 1)
    walk = W.make_walk(ww("c-1,f+0"))
    d = W.walk_to_dict(walk)
    assert d["steps"][0] == {"kind": "crossing", "sign": -1, "type": 1}
    assert d["omega"] == 0 and d["start"] is None
    data = json.loads(W.combination_to_json(W.straighten(ww("c-1,c-1"))))
    assert {item["coeff"] for item in data} == {1}
