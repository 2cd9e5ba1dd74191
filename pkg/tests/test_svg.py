import math
import random
from xml.etree import ElementTree

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_walks.alcove import STANDARD, apartment
from hecke_walks.rootdata import build_root_datum
from hecke_walks.svg import _Canvas, render_walk
from hecke_walks.walks import CROSSING, WalkWord, parse_steps

NS = "{http://www.w3.org/2000/svg}"


def random_walk(ap, rng, n):
    steps, cur = [], ap.group.identity
    W = None
    from hecke_walks.walks import WalkAlgebra

    W = WalkAlgebra(ap)
    for _ in range(n):
        i = rng.randrange(ap.datum.rank + 1)
        st_ = rng.choice(W.allowed(STANDARD, cur, i))
        if st_.kind == CROSSING:
            cur = ap.group.rmul(cur, i)
        steps.append(st_)
    return WalkWord(tuple(steps))


@pytest.mark.parametrize("t,expected", [("A", [80.0, 80.0, 80.0]), ("C", [56.57, 56.57, 80.0])])
def test_base_alcove_shape(t, expected):
    ap = apartment(build_root_datum(t, 2))
    cv = _Canvas(ap, 80)
    P = [cv.xy(v) for v in cv.vertices(ap.group.identity)]
    sides = sorted(round(math.dist(P[k], P[(k + 1) % 3]), 2) for k in range(3))
    assert sides == sorted(expected)


def test_elements_present():
    ap = apartment(build_root_datum("A", 2))
    doc = ElementTree.fromstring(render_walk(ap, WalkWord(parse_steps("c-1,f+2,c-2"))))
    steps = doc.find(f"{NS}g[@id='steps']")
    kinds = [p.get("data-step") for p in steps]
    assert kinds == ["c-1", "f+2", "c-2"]
    assert steps[0].get("marker-end") == "url(#arrow-neg)"
    assert steps[1].get("stroke-dasharray")
    assert len(doc.find(f"{NS}g[@id='alcoves']")) == 3
    assert len(doc.find(f"{NS}g[@id='hyperplanes']")) > 6


def test_rank_one_and_rank_three():
    ap = apartment(build_root_datum("A", 1))
    ElementTree.fromstring(render_walk(ap, WalkWord(parse_steps("c+0,c+1,f-0"))))
    with pytest.raises(ValueError):
        render_walk(apartment(build_root_datum("A", 3)), WalkWord(()))


@given(st.sampled_from(["A", "B", "C", "G"]), st.integers(0, 10**6))
def test_random_walks_are_valid_xml(t, seed):
    ap = apartment(build_root_datum(t, 2))
    rng = random.Random(seed)
    doc = render_walk(ap, random_walk(ap, rng, rng.randrange(1, 10)))
    assert ElementTree.fromstring(doc).tag == f"{NS}svg"
