import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_walks.hecke import BudgetExceeded, HeckeAlgebra, ParameterError
from hecke_walks.laurent import LaurentPoly, v_minus_vinv
from hecke_walks.rootdata import build_root_datum
from hecke_walks.selftest import random_hecke_element, suite_relations
from hecke_walks.walks import WalkWord, parse_steps
from hecke_walks.weyl import Word

q = LaurentPoly.v(2)


def ww(text):
    return WalkWord(parse_steps(text))


def at_one(h):
    """Specialize v = 1: the group algebra of the extended affine Weyl group."""
    out = {}
    for x, p in h.terms().items():
        c = sum(a for _, a in p.items())
        if c:
            out[x] = c
    return out


def group_product(a, b):
    out = {}
    for x, c in a.items():
        for y, d in b.items():
            out[x * y] = out.get(x * y, 0) + c * d
    return {k: c for k, c in out.items() if c}


# -- multiplication -----------------------------------------------------------------


def test_quadratic_relation_a1(algebra):
    H = algebra("A", 1)
    T1 = H.T(1)
    assert T1 * T1 == H.coerce(q) + T1.scale(q - 1)


def test_lengths_add_a1(algebra):
    H = algebra("A", 1, "simply_connected")
    assert H.T(0) * H.T(1) == H.T(H.group.translation((1,)))


def test_unequal_quadratic_relation(algebra):
    H = algebra("C", 2, "simply_connected", (1, 2, 1))
    T1 = H.T(1)
    q2 = q * q
    assert T1 * T1 == H.coerce(q2) + T1.scale(q2 - 1)


def test_t_inverse(algebra):
    H = algebra("A", 1)
    qi = LaurentPoly.v(-2)
    assert H.t_inverse(1) == H.T(1).scale(qi) + H.coerce(qi - 1)
    assert H.T(1) * H.t_inverse(1) == H.one()
    K = algebra("C", 2, "simply_connected", (1, 2, 1))
    qi2 = LaurentPoly.v(-4)
    assert K.t_inverse(1) == K.T(1).scale(qi2) + K.coerce(qi2 - 1)


@pytest.mark.parametrize(
    "key", [("A", 1, "adjoint", None), ("A", 2, "adjoint", None), ("C", 2, "adjoint", None),
            ("C", 2, "simply_connected", (3, 2, 1)), ("G", 2, "adjoint", None)]
)
def test_generator_relations(algebra, key):
    assert suite_relations(algebra(*key)).ok


@pytest.mark.parametrize("key", [("A", 2, "adjoint"), ("C", 2, "simply_connected")])
def test_specialization_at_v_equal_one(algebra, key):
    H = algebra(*key)
    rng = random.Random(2)
    for _ in range(25):
        a, b = random_hecke_element(H, rng, 4), random_hecke_element(H, rng, 4)
        assert at_one(a * b) == group_product(at_one(a), at_one(b))


_A2 = HeckeAlgebra(build_root_datum("A", 2))


@given(st.integers(0, 10**6))
def test_associativity(seed):
    H = _A2
    rng = random.Random(seed)
    a, b, c = (random_hecke_element(H, rng, 3) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# -- parameters and budget -------------------------------------------------------------


def test_parameter_validation():
    with pytest.raises(ParameterError):
        HeckeAlgebra(build_root_datum("A", 2), (1, 2, 1))
    with pytest.raises(ParameterError):
        HeckeAlgebra(build_root_datum("C", 2, "adjoint"), (3, 2, 1))
    with pytest.raises(ParameterError):
        HeckeAlgebra(build_root_datum("A", 1), (1,))
    HeckeAlgebra(build_root_datum("C", 2, "simply_connected"), (3, 2, 1))
    HeckeAlgebra(build_root_datum("C", 2, "adjoint"), (1, 2, 1))


def test_budget(monkeypatch):
    H = HeckeAlgebra(build_root_datum("A", 2), budget=3)
    with pytest.raises(BudgetExceeded):
        H.psi(Word((1, 2, 1, 0, 1, 2)), tilde=False) * H.T(0).scale(LaurentPoly({0: 1, 1: 1}))
    monkeypatch.setenv("HECKE_WALKS_BUDGET", "5")
    assert HeckeAlgebra(build_root_datum("A", 1)).budget == 5


# -- psi and phi -----------------------------------------------------------------------


def test_psi_examples(algebra):
    H = algebra("A", 1, "simply_connected")
    assert H.psi(Word((1, 1))) == H.one()
    assert H.psi(Word((0, 1))) == H.T(0) * H.T(1) == H.T(H.group.translation((1,)))
    K = algebra("A", 2)
    lhs, rhs = K.psi(Word((1, 2, 1))), K.psi(Word((2, 1, 2)))
    direct = K.t_inverse(1) * K.t_inverse(2) * K.t_inverse(1)
    assert lhs == rhs == direct


def test_phi_examples(algebra):
    H = algebra("A", 1)
    assert H.phi(ww("f+1")) == H.coerce(v_minus_vinv())
    assert H.phi(ww("c-1,c+1")) == H.one()
    Ti = H.T_tilde_inverse(H.group.simple_reflection(1))
    comb = H.walks.straighten(ww("c-1,c-1"))
    assert H.phi(comb) == H.phi(ww("c-1,c-1")) == Ti * Ti


def test_phi_unequal_folding(algebra):
    H = algebra("C", 2, "simply_connected", (3, 2, 1))
    assert H.phi(ww("f+0")) == H.coerce(v_minus_vinv(3))
    assert H.phi(ww("f-2")) == H.coerce(-v_minus_vinv(1))
    assert H.T_tilde(1) == H.T(1).scale(LaurentPoly.v(-2))


def test_phi_omega(algebra):
    H = algebra("A", 2)
    tau = H.group.omega_group[1].element
    assert H.phi(WalkWord(parse_steps("c+0"), tau)) == H.T_tilde(0) * H.T(tau)


@pytest.mark.parametrize("key", [("A", 2, "adjoint"), ("C", 2, "adjoint")])
def test_psi_tilde_matches_phi_of_non_folded_walk(algebra, key):
    H = algebra(*key)
    rng = random.Random(4)
    for _ in range(40):
        word = Word(tuple(rng.randrange(3) for _ in range(rng.randrange(8))))
        assert H.psi(word, tilde=True) == H.phi(H.walks.non_folded_walk(word))


# -- walk basis -----------------------------------------------------------------------------


def test_expand_examples(algebra):
    H = algebra("A", 1)
    G = H.group
    x = G.evaluate((0, 1, 0))
    assert H.expand_in_walk_basis(H.walk_basis_element(x)) == {x: LaurentPoly(1)}
    T1 = H.expand_in_walk_basis(H.T(1))
    assert set(T1) == {G.identity, G.simple_reflection(1)}
    assert H.from_walk_basis(T1) == H.T(1)
    assert H.expand_in_walk_basis(H.phi(ww("f+1"))) == {G.identity: v_minus_vinv()}


@pytest.mark.parametrize("key", [("A", 2, "adjoint", None), ("C", 2, "simply_connected", (3, 2, 1))])
def test_walk_basis_round_trip(algebra, key):
    from hecke_walks.alcove import Orientation

    H = algebra(*key)
    rng = random.Random(6)
    for o in (None, Orientation("chamber", H.group.longest_element())):
        for _ in range(15):
            h = random_hecke_element(H, rng, 10)
            kw = {} if o is None else {"o": o}
            assert H.from_walk_basis(H.expand_in_walk_basis(h, **kw), **kw) == h


# -- serialization ---------------------------------------------------------------------------


def test_json_schema(algebra):
    H = algebra("A", 2)
    h = H.T(0).scale(LaurentPoly({-1: 2})) + H.T(H.group.omega_group[2].element)
    data = json.loads(h.to_json())
    assert data["basis"] == "T" and data["params"] == [1, 1, 1]
    term = data["terms"][0]
    assert set(term["element"]) == {"lambda", "w_matrix", "omega"}
    assert {t["element"]["omega"] for t in data["terms"]} == {0, 2}
    assert H.from_json(h.to_json()) == h


def test_json_rejects_other_parameters(algebra):
    H = algebra("C", 2, "simply_connected", (3, 2, 1))
    K = algebra("C", 2, "simply_connected")
    with pytest.raises(ValueError):
        K.from_json(H.T(1).to_json())
