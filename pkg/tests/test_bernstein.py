import itertools

import pytest

from hecke_walks.bernstein import (
    Theta,
    Theta_minus,
    bernstein_sum,
    check_special_elements,
    dominant_decomposition,
    minimal_expression,
    odd_parameter_index,
    t_elem,
    theta,
    verify_bernstein,
    verify_bernstein_fraction,
    verify_t_product,
    verify_theta_product,
)
from hecke_walks.laurent import LaurentPoly, v_minus_vinv


def test_theta_examples_a1(algebra):
    H = algebra("A", 1, "simply_connected")
    G = H.group
    assert theta(H, (0,)) == H.one()
    assert theta(H, (1,)) == H.T_tilde(0) * H.T_tilde(1) == H.T(G.translation((1,))).scale(LaurentPoly.v(-2))
    inv = H.T_tilde_inverse(G.simple_reflection(1)) * H.T_tilde_inverse(G.simple_reflection(0))
    assert theta(H, (-1,)) == inv


def test_theta_examples_a2(algebra):
    H = algebra("A", 2)
    G = H.group
    lam = (1, 1)
    assert Theta(H, lam) == H.T_tilde(G.translation(lam)) == theta(H, lam)
    a1, a2 = (2, -1), (-1, 2)
    lam = tuple(x - y for x, y in zip(a1, a2))
    # lam = (3, -3); alpha_2^v and alpha_1^v + alpha_2^v are not dominant, so use
    # dominant shifts mu = 3 omega_2 and omega_1 + 4 omega_2 instead
    decs = [(tuple(l + m for l, m in zip(lam, mu)), mu) for mu in [(0, 3), (1, 4), (2, 5)]]
    assert all(H.datum.is_dominant(a) and H.datum.is_dominant(b) for a, b in decs)
    assert {Theta(H, lam, dec) for dec in decs} == {theta(H, lam)}
    assert Theta(H, lam) * Theta(H, tuple(-x for x in lam)) == H.one()


def test_theta_decomposition_errors(algebra):
    H = algebra("A", 2)
    with pytest.raises(ValueError):
        Theta(H, (1, 0), ((0, 1), (-1, 1)))
    with pytest.raises(ValueError):
        Theta(H, (1, 0), ((2, 0), (0, 0)))


def test_dominant_decomposition_simply_connected(algebra):
    # in Q^v the parts must stay in the coroot lattice
    H = algebra("C", 2, "simply_connected")
    for lam in itertools.product(range(-2, 3), repeat=2):
        l1, l2 = dominant_decomposition(H, lam)
        assert H.datum.is_dominant(l1) and H.datum.is_dominant(l2)
        assert tuple(a - b for a, b in zip(l1, l2)) == lam


def test_t_elem_examples(algebra):
    H = algebra("A", 1)
    G = H.group
    s1 = G.simple_reflection(1)
    t1 = t_elem(H, s1)
    assert t1 == H.T_tilde(1)
    assert t1 * t1 == t_elem(H, G.identity) + t1.scale(v_minus_vinv())
    K = algebra("A", 2)
    w0 = K.group.longest_element()
    assert t_elem(K, w0) == K.T_tilde(w0)
    with pytest.raises(ValueError):
        t_elem(H, G.simple_reflection(0))


def test_bernstein_example_a1(algebra):
    H = algebra("A", 1, "simply_connected")
    t1 = t_elem(H, H.group.simple_reflection(1))
    lhs = t1 * theta(H, (1,))
    rhs = (theta(H, (1,)) + H.one()).scale(v_minus_vinv()) + theta(H, (-1,)) * t1
    assert lhs == rhs
    assert verify_bernstein(H, 1, (1,)).ok


def test_bernstein_fixed_lambda_commutes(algebra):
    H = algebra("A", 2)
    lam = (0, 2)  # <alpha_1, lam> = 0
    rep = verify_bernstein(H, 1, lam)
    assert rep.ok and bernstein_sum(H, 1, lam).is_zero()
    assert rep.lhs == theta(H, lam) * t_elem(H, H.group.simple_reflection(1))


def test_bernstein_second_case_c2(algebra):
    H = algebra("C", 2, "simply_connected", (3, 2, 1))
    d = H.datum
    a2 = d.simple_root(2)
    assert d.in_2X(a2) and odd_parameter_index(H, 2) == 0
    lam = d.coroot(a2)
    rep = verify_bernstein(H, 2, lam)
    assert rep.ok and rep.detail["case"] == "2X"
    assert verify_bernstein_fraction(H, 2, lam).ok
    # the geometric sum alternates between L(s_2) and L(s_0)
    n = d.pairing(a2, lam)
    s = bernstein_sum(H, 2, lam)
    expect = theta(H, lam).scale(v_minus_vinv(1)) + theta(H, tuple(a - b for a, b in zip(lam, lam))).scale(v_minus_vinv(3))
    assert n == 2 and s == expect


def test_bernstein_wrong_case_is_detected(algebra):
    # replacing L(s_0) by L(s_2) in the odd terms must break the relation
    H = algebra("C", 2, "simply_connected", (3, 2, 1))
    d = H.datum
    lam = d.coroot(d.simple_root(2))
    t2 = t_elem(H, H.group.simple_reflection(2))
    wrong = theta(H, lam).scale(v_minus_vinv(1)) + H.one().scale(v_minus_vinv(1))
    s_lam = H.group.simple_reflection(2).act(lam)
    assert t2 * theta(H, lam) != theta(H, s_lam) * t2 + wrong


def test_odd_parameter_index_rejects_other_types(algebra):
    assert odd_parameter_index(algebra("G", 2), 1) == 1
    assert odd_parameter_index(algebra("A", 1, "simply_connected"), 1) == 0


@pytest.mark.parametrize("key", [("A", 1, "adjoint"), ("A", 1, "simply_connected"), ("A", 2, "adjoint"), ("C", 2, "adjoint")])
def test_prop_4_and_5(algebra, key):
    reports = check_special_elements(algebra(*key))
    assert len(reports) == 1 + len(algebra(*key).group.omega_group)
    assert all(r.ok for r in reports)


def test_products(algebra):
    H = algebra("A", 2)
    assert verify_theta_product(H, (1, -1), (-2, 1)).ok
    for w in H.group.finite_elements():
        assert verify_t_product(H, 2, w).ok


def test_minimal_expression_examples(algebra):
    H = algebra("A", 1, "simply_connected")
    word, signs, prod = minimal_expression(H, (1,))
    assert word.letters == (0, 1) and signs == (1, 1) and prod == Theta(H, (1,))
    K = algebra("A", 2)
    word, signs, _ = minimal_expression(K, (2, 1))
    assert set(signs) == {1}
    lam = (3, -3)
    word, signs, prod = minimal_expression(K, lam)
    assert set(signs) == {1, -1} and prod == Theta(K, lam)
    assert minimal_expression(K, lam, minus=True)[2] == Theta_minus(K, lam)
