"""Acceptance criteria 1-7 at full scale.

Each test prints one ``PASS criterion N ...`` or ``FAIL criterion N ...`` line
(visible with ``pytest -s`` or in the summary of ``scripts/acceptance.py``),
preceded by the per-suite lines it aggregates.
"""

import random

import pytest

from hecke_walks.cli import main
from hecke_walks.hecke import HeckeAlgebra, ParameterError
from hecke_walks.rootdata import build_root_datum
from hecke_walks.selftest import (
    ROOT_COUNTS,
    SuiteResult,
    sample_orientations,
    suite_bernstein,
    suite_independence,
    suite_json,
    suite_kernel,
    suite_length,
    suite_minimal,
    suite_parameters,
    suite_relations,
    suite_roots,
    suite_straighten,
    suite_svg,
    suite_triangularity,
)
from hecke_walks.weyl import weyl_group

SEED = 20240601
# types exercised by the CLI selftest in criterion 7
CLI_TYPES = [("A", 1, "adjoint"), ("A", 1, "simply_connected"), ("A", 2, "adjoint"), ("A", 3, "adjoint"),
             ("B", 2, "adjoint"), ("C", 2, "adjoint"), ("C", 2, "simply_connected"), ("G", 2, "adjoint")]


def report(capsys, n: int, title: str, results: list[SuiteResult]) -> None:
    ok = all(r.ok for r in results)
    checks = sum(r.checked for r in results)
    with capsys.disabled():
        print()
        for r in results:
            print(f"    {r.line()}")
        print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} ({checks} checks)")
    assert ok, [r.line() for r in results if not r.ok]


def test_criterion_1_independence(capsys, algebra):
    rng = random.Random(SEED)
    results = []
    for t, r in [("A", 1), ("A", 2), ("C", 2)]:
        H = algebra(t, r)
        orientations = sample_orientations(H.group, rng)
        assert len(orientations) == 3
        results.append(suite_independence(H, 6, 20, 6, rng, orientations))
    report(capsys, 1, "Psi independent of the word, lengths <= 6, 20 perturbed words, 3 orientations", results)


def test_criterion_2_kernel_and_basis(capsys, algebra):
    results = []
    for t, r in [("A", 1), ("A", 2), ("C", 2)]:
        H = algebra(t, r)
        results += [suite_kernel(H, 6), suite_straighten(H, 5), suite_triangularity(H, 5)]
    report(capsys, 2, "kernel (<= 6), straightening (<= 5), triangularity (<= 5)", results)


def test_criterion_3_bernstein(capsys, algebra):
    results = [suite_bernstein(algebra(t, r, fl), 2, pairing_bound=4)
               for t, r, fl in [("A", 1, "adjoint"), ("A", 1, "simply_connected"), ("A", 2, "adjoint"),
                                ("C", 2, "adjoint"), ("C", 2, "simply_connected")]]
    report(capsys, 3, "Bernstein relations on A1 (both flavors), A2, C2", results)


def test_criterion_4_unequal_parameters(capsys, algebra):
    # With X_* = P^v in type C2, Omega swaps s_0 and s_2, so L(s_0) != L(s_2)
    # is not a parameter system there.  The datum with alpha_2 in 2X^* and
    # three independent parameters is X_* = Q^v (flavor simply_connected).
    # W_a-conjugacy classes are {0},{1},{2} for either lattice.
    with pytest.raises(ParameterError):
        HeckeAlgebra(build_root_datum("C", 2, "adjoint"), (3, 2, 1))
    rng = random.Random(SEED + 4)
    results = []
    configs = [("simply_connected", (3, 2, 1)), ("simply_connected", (1, 2, 1)), ("adjoint", (1, 2, 1))]
    for flavor, L in configs:
        H = algebra("C", 2, flavor, L)
        results += [
            suite_relations(H),
            suite_independence(H, 6, 20, 6, rng, sample_orientations(H.group, rng)),
            suite_bernstein(H, 2, pairing_bound=4),
            suite_parameters(H, ((0,), (1,), (2,)), levels=4),
        ]
    report(capsys, 4, "C2 with L=(3,2,1), (1,2,1); L=(3,2,1) needs X_*=Q^v, adjoint rejects it", results)


def test_criterion_5_minimal_expressions(capsys, algebra):
    results = [suite_minimal(algebra(t, 2), 2) for t in ("A", "C")]
    report(capsys, 5, "signed reduced-word products equal Theta and Theta^-", results)


def test_criterion_6_oracles(capsys):
    rng = random.Random(SEED + 6)
    results = [suite_roots(tuple(ROOT_COUNTS))]
    for t, r in ROOT_COUNTS:
        results.append(suite_length(weyl_group(build_root_datum(t, r)), rng, 500))
    report(capsys, 6, "length = separation count (500 per type), root counts", results)


def test_criterion_7_cli(capsys, algebra):
    res = SuiteResult("CLI selftest exit codes")
    for t, r, fl in CLI_TYPES:
        code = main(["selftest", "--type", t, "--rank", str(r), "--flavor", fl, "--seed", str(SEED)])
        capsys.readouterr()
        res.record(code == 0, f"{t}{r} {fl} exited {code}")
    rng = random.Random(SEED + 7)
    json_res = SuiteResult("JSON round trip (100 elements)")
    for k in range(100):
        t, r = rng.choice([("A", 1), ("A", 2), ("C", 2), ("G", 2)])
        one = suite_json(algebra(t, r), rng, 1)
        json_res.record(one.ok, f"sample {k} in {t}{r}")
    svg_res = SuiteResult("SVG validity (20 rank-2 walks)")
    for k in range(20):
        t = rng.choice(["A", "B", "C", "G"])
        one = suite_svg(algebra(t, 2), rng, 1)
        svg_res.record(one.ok, f"walk {k} in {t}2")
    report(capsys, 7, "CLI selftest, JSON round trip, SVG output", [res, json_res, svg_res])
