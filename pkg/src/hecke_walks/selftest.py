"""Invariant suites shared by the ``selftest`` command and the acceptance tests.

Every suite returns a :class:`SuiteResult`; the scale of each run (lengths,
boxes, sample counts) is passed in so that the CLI can run a quick pass and
the acceptance tests the full one.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .alcove import STANDARD, Hyperplane, Orientation, parity_prediction
from .bernstein import (
    Theta,
    Theta_minus,
    _vec_add,
    check_special_elements,
    minimal_expression,
    theta,
    verify_bernstein,
    verify_bernstein_fraction,
    verify_t_product,
)
from .hecke import HeckeAlgebra, HeckeElement
from .laurent import LaurentPoly
from .rootdata import build_root_datum
from .walks import CROSSING, FOLDING, Step, WalkCombination, WalkWord
from .weyl import AffineElement, AffineWeylGroup, Move, Word

# classical positive-root counts
ROOT_COUNTS = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("B", 2): 4, ("C", 2): 4, ("G", 2): 6}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" first failure: {self.failures[0]}" if self.failures else ""
        return f"{status} {self.name} ({self.checked} checks, {len(self.failures)} failures){tail}"

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures[:20]}


# -- element and word generators ---------------------------------------------------


def affine_elements_up_to(G: AffineWeylGroup, n: int) -> list[AffineElement]:
    """All elements of W_a of length <= n, by length then reduced word."""
    seen = {G.identity}
    layer = [G.identity]
    for _ in range(n):
        nxt = []
        for x in layer:
            for i in range(G.rank + 1):
                y = G.rmul(x, i)
                if y not in seen and G.length(y) > G.length(x):
                    seen.add(y)
                    nxt.append(y)
        layer = nxt
    return sorted(seen, key=lambda x: (G.length(x), G.reduced_letters(x)))


def elements_up_to(G: AffineWeylGroup, n: int) -> list[AffineElement]:
    """All elements of the extended group of length <= n (every Omega part)."""
    return [x * om.element for x in affine_elements_up_to(G, n) for om in G.omega_group]


def random_element(G: AffineWeylGroup, rng: random.Random, max_len: int = 12) -> AffineElement:
    x = G.evaluate([rng.randrange(G.rank + 1) for _ in range(rng.randrange(max_len + 1))])
    return x * rng.choice(G.omega_group).element


def perturb(G: AffineWeylGroup, word: Word, rng: random.Random, extra: int) -> Word:
    """A random non-reduced word for the same element, at most ``extra`` letters longer."""
    base = len(word)
    cur = word
    for _ in range(rng.randrange(2, 12)):
        moves = G.applicable_moves(cur, insert=len(cur) + 2 <= base + extra)
        cur = G.apply_move(cur, rng.choice(moves))
    if len(cur) == base:
        p = rng.randrange(len(cur) + 1)
        cur = G.apply_move(cur, Move("nil_insert", p, rng.randrange(G.rank + 1)))
    return cur


def perturbed_words(G: AffineWeylGroup, word: Word, rng: random.Random, count: int, extra: int) -> list[Word]:
    out: dict[tuple[int, ...], Word] = {}
    for _ in range(50 * count):
        w = perturb(G, word, rng, extra)
        out.setdefault(w.letters, w)
        if len(out) >= count:
            break
    return list(out.values())


def sample_orientations(G: AffineWeylGroup, rng: random.Random) -> list[tuple[str, Orientation]]:
    """standard, a chamber orientation and an alcove orientation."""
    finite = [u for u in G.finite_elements() if u != G.identity]
    u = rng.choice(finite)
    b = G.evaluate([rng.randrange(G.rank + 1) for _ in range(4)])
    return [
        ("standard", STANDARD),
        (f"chamber:{','.join(map(str, G.reduced_letters(u)))}", Orientation("chamber", u)),
        (f"alcove-neg:{','.join(map(str, G.reduced_letters(b)))}", Orientation("alcove_negative", b)),
    ]


def random_hecke_element(H: HeckeAlgebra, rng: random.Random, max_terms: int = 10) -> HeckeElement:
    G = H.group
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        x = random_element(G, rng, 8)
        coeff = {rng.randrange(-6, 7): rng.randrange(-5, 6) for _ in range(rng.randrange(1, 4))}
        terms[x] = terms.get(x, LaurentPoly()) + LaurentPoly(coeff)
    return H.from_terms({x: p for x, p in terms.items() if p})


# -- suites ------------------------------------------------------------------------


def suite_roots(types=tuple(ROOT_COUNTS)) -> SuiteResult:
    res = SuiteResult("positive-root counts")
    for t, r in types:
        d = build_root_datum(t, r)
        res.record(len(d.positive_roots) == ROOT_COUNTS[(t, r)], f"{t}{r}")
        res.record(all(d.pairing(d.highest_root, c) >= 0 for c in d.simple_coroots), f"{t}{r} highest root")
    return res


def suite_length(G: AffineWeylGroup, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult(f"length oracle {G.datum.label}")
    for _ in range(samples):
        x = random_element(G, rng, 16)
        n = G.length(x)
        res.record(n == G.separation_count(x), f"separation {x}")
        w = G.reduced_word(x)
        res.record(len(w) == n and G.evaluate(w) == x, f"reduced word {x}")
        i = rng.randrange(G.rank + 1)
        res.record(abs(G.length(G.lmul(i, x)) - n) == 1, f"l(s_{i} x) {x}")
    for om in G.omega_group:
        res.record(G.length(om.element) == 0, f"omega {om.index}")
        for i in range(G.rank + 1):
            t = om.element
            res.record(t * G.generators[i] * t.inverse() == G.generators[om.perm[i]], f"tau s_{i} tau^-1")
    return res


def suite_independence(
    H: HeckeAlgebra, max_len: int, n_words: int, extra: int, rng: random.Random, orientations=None
) -> SuiteResult:
    G = H.group
    orientations = orientations or sample_orientations(G, rng)
    res = SuiteResult(f"psi independence {H.datum.label} L={H.L} (l<={max_len}, {n_words} words)")
    for x in elements_up_to(G, max_len):
        ref = G.reduced_word(x)
        words = perturbed_words(G, ref, rng, n_words, extra)
        if len(words) < n_words and len(ref) + extra >= 2:
            res.record(False, f"only {len(words)} perturbed words for {ref.letters}")
        for label, o in orientations:
            target = H.psi(ref, o)
            for w in words:
                res.record(G.evaluate(w) == x and H.psi(w, o) == target, f"{label} {ref.letters} vs {w.letters}")
    return res


def suite_kernel(H: HeckeAlgebra, max_len: int, o: Orientation = STANDARD) -> SuiteResult:
    """Non-folded walks with equal end points have equal images."""
    G = H.group
    res = SuiteResult(f"kernel {H.datum.label} (walks of length <= {max_len})")
    groups: dict[AffineElement, HeckeElement] = {}
    for n in range(max_len + 1):
        for letters in itertools.product(range(G.rank + 1), repeat=n):
            word = Word(letters)
            img = H.phi(H.walks.non_folded_walk(word, o))
            x = G.evaluate(word)
            ref = groups.setdefault(x, img)
            res.record(img == ref, f"{letters}")
    return res


def _all_steps(r: int) -> list[Step]:
    return [Step(k, s, i) for i in range(r + 1) for k in (CROSSING, FOLDING) for s in (1, -1)]


def suite_straighten(H: HeckeAlgebra, max_len: int, o: Orientation = STANDARD) -> SuiteResult:
    """Phi(straighten(x)) = Phi(x) for every word x of length <= max_len.

    Words are visited depth first; the straightened combination of a word is
    obtained from that of its prefix with :meth:`WalkAlgebra.extend`.
    """
    W = H.walks
    res = SuiteResult(f"straightening {H.datum.label} (all words of length <= {max_len})")
    images: dict[tuple[Step, ...], dict] = {(): H.one()._c}
    steps = _all_steps(H.datum.rank)

    def image(walk: WalkWord) -> dict:
        hit = images.get(walk.steps)
        if hit is None:
            prev = HeckeElement(H, image(WalkWord(walk.steps[:-1])))
            hit = images[walk.steps] = H.phi_step(prev, walk.steps[-1])._c
        return hit

    def visit(word: tuple[Step, ...], phi_x: HeckeElement, comb: WalkCombination) -> None:
        for st in steps:
            w2 = word + (st,)
            phi2 = H.phi_step(phi_x, st)
            comb2 = W.extend(comb, st)
            total: dict = {}
            for walk, c in comb2.terms.items():
                for k, a in image(walk).items():
                    s = total.get(k, 0) + c * a
                    if s:
                        total[k] = s
                    else:
                        del total[k]
            res.record(total == phi2._c, " ".join(map(str, w2)))
            if len(w2) < max_len:
                visit(w2, phi2, comb2)

    visit((), H.one(), WalkCombination(o, None, {WalkWord(()): 1}))
    # the incremental combinations agree with straighten() and contain only walks
    rng = random.Random(len(images))
    for _ in range(200):
        word = WalkWord(tuple(rng.choice(steps) for _ in range(rng.randrange(max_len + 1))))
        comb = W.straighten(word, o)
        res.record(all(W.is_walk(w, o) for w in comb.terms), f"walk validity {word}")
        res.record(H.phi(comb) == H.phi(word), f"straighten() {word}")
    return res


def suite_triangularity(H: HeckeAlgebra, max_len: int, o: Orientation = STANDARD) -> SuiteResult:
    """The straightening of the free pattern of a walk p is +-p plus walks with fewer crossings."""
    W = H.walks
    res = SuiteResult(f"triangularity {H.datum.label} (walks of length <= {max_len})")
    for n in range(max_len + 1):
        for walk in W.all_walks(n, o):
            comb = W.straighten(W.free_pattern(walk), o)
            diag = comb.terms.get(walk, 0)
            others = all(w.crossings < walk.crossings for w in comb.terms if w != walk)
            res.record(diag in (1, -1) and others, str(walk))
    return res


def suite_relations(H: HeckeAlgebra) -> SuiteResult:
    """Quadratic and braid relations of the generators, and T_i T_i^-1 = 1."""
    G = H.group
    r = H.datum.rank
    res = SuiteResult(f"quadratic and braid relations {H.datum.label} L={H.L}")
    q = {i: LaurentPoly.v(2 * H.L[i]) for i in range(r + 1)}
    for i in range(r + 1):
        Ti = H.T(i)
        lhs = H.mul(Ti + H.one(), Ti - H.coerce(q[i]))
        res.record(lhs.is_zero(), f"quadratic s_{i}")
        res.record(H.mul(Ti, H.t_inverse(i)) == H.one(), f"T_{i} T_{i}^-1")
    M = G.coxeter_matrix
    for i, j in itertools.combinations(range(r + 1), 2):
        m = M[i][j]
        if not m:
            continue
        a = [i if k % 2 == 0 else j for k in range(m)]
        b = [j if k % 2 == 0 else i for k in range(m)]
        lhs = H.right_word(H.one(), a, (1,) * m)
        rhs = H.right_word(H.one(), b, (1,) * m)
        res.record(lhs == rhs and len(lhs) == 1, f"braid {i},{j}")
    return res


def coweight_box(rank: int, bound: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(-bound, bound + 1), repeat=rank))


def suite_bernstein(H: HeckeAlgebra, box: int, pairing_bound: int = 4, product_box: int | None = None) -> SuiteResult:
    """The Bernstein presentation, checked through theta and t.

    Labels in failure messages: (1) theta products, (2) t_{s_i} t_w,
    (3) the commutation of t_{s_i} with theta_lam, (4) Phi(c_0^+) t_{s_phi}
    = theta_{phi^v}, (5) theta_{tau(0)} = T_tau t_{w_0 w} for tau in Omega.
    """
    d = H.datum
    G = H.group
    res = SuiteResult(f"bernstein relations {d.label} L={H.L} (box [-{box},{box}])")
    lams = coweight_box(d.dim, box)
    # (1) theta_lam theta_mu = theta_{lam+mu}, by left multiplication with the signed word of lam
    plams = coweight_box(d.dim, box if product_box is None else product_box)
    for lam in plams:
        letters, tau = G._reduced(G.translation(lam))
        signs = H.ap.crossing_signs(letters, STANDARD)
        omega = None if tau == G.identity else tau
        for mu in plams:
            lhs = H.left_word(letters, signs, theta(H, mu), True, omega)
            res.record(lhs == theta(H, _vec_add(lam, mu)), f"(1) {lam} {mu}")
    # (2) t_{s_i} t_w
    for w in G.finite_elements():
        for i in range(1, d.rank + 1):
            res.record(verify_t_product(H, i, w).ok, f"(2) s_{i} {G.reduced_letters(w)}")
    # (3) both the geometric-sum and the fraction-free forms
    for lam in lams:
        for i in range(1, d.rank + 1):
            if abs(d.pairing(d.simple_root(i), lam)) > pairing_bound:
                continue
            res.record(verify_bernstein(H, i, lam).ok, f"(3) i={i} {lam}")
            res.record(verify_bernstein_fraction(H, i, lam).ok, f"(3') i={i} {lam}")
    # (4), (5)
    for rep in check_special_elements(H):
        res.record(rep.ok, rep.name)
    return res


def suite_parameters(H: HeckeAlgebra, expected_classes=None, levels: int = 4) -> SuiteResult:
    """Conjugacy classes of simple reflections and the parity rule for L(H_{alpha_i, j})."""
    d = H.datum
    ap = H.ap
    res = SuiteResult(f"hyperplane parameters {d.label} L={H.L}")
    if expected_classes is not None:
        res.record(ap.simple_conjugacy_classes == tuple(expected_classes), f"classes {ap.simple_conjugacy_classes}")
    for i in range(1, d.rank + 1):
        for j in range(-levels, levels + 1):
            h = Hyperplane(d.simple_root(i), j)
            res.record(ap.hyperplane_parameter(H.L, h) == parity_prediction(d, H.L, i, j), f"H_(alpha_{i},{j})")
    return res


def suite_minimal(H: HeckeAlgebra, box: int) -> SuiteResult:
    d = H.datum
    res = SuiteResult(f"minimal expressions {d.label} (box [-{box},{box}])")
    for lam in coweight_box(d.dim, box):
        big = Theta(H, lam)
        res.record(minimal_expression(H, lam)[2] == big, f"Theta {lam}")
        res.record(big == theta(H, lam), f"Theta = theta {lam}")
        res.record(minimal_expression(H, lam, minus=True)[2] == Theta_minus(H, lam), f"Theta^- {lam}")
    return res


def suite_json(H: HeckeAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult(f"JSON round trip {H.datum.label}")
    for k in range(samples):
        h = random_hecke_element(H, rng)
        text = h.to_json()
        back = H.from_json(text)
        res.record(back == h and back.to_json() == text and json.loads(text)["basis"] == "T", f"sample {k}")
    return res


def suite_svg(H: HeckeAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    from xml.etree import ElementTree

    from .svg import render_walk

    res = SuiteResult(f"SVG output {H.datum.label}")
    r = H.datum.rank
    for k in range(samples):
        steps = []
        cur = H.group.identity
        for _ in range(rng.randrange(1, 9)):
            i = rng.randrange(r + 1)
            st = rng.choice(H.walks.allowed(STANDARD, cur, i))
            if st.kind == CROSSING:
                cur = H.group.rmul(cur, i)
            steps.append(st)
        try:
            ElementTree.fromstring(render_walk(H.ap, WalkWord(tuple(steps))))
            res.record(True, f"walk {k}")
        except ElementTree.ParseError as exc:
            res.record(False, f"walk {k}: {exc}")
    return res


# -- the selftest ------------------------------------------------------------------


def selftest(H: HeckeAlgebra, seed: int = 0) -> list[SuiteResult]:
    """Quick pass over every invariant for one algebra."""
    rng = random.Random(seed)
    G = H.group
    r = H.datum.rank
    small = 1 if r > 1 else 2
    out = [
        suite_roots(),
        suite_length(G, rng, 100),
        suite_relations(H),
        suite_independence(H, 3 if r > 1 else 4, 4, 4, rng),
        suite_kernel(H, 4 if r > 1 else 6),
        suite_straighten(H, 2 if r > 1 else 4),
        suite_triangularity(H, 3),
        suite_bernstein(H, small, product_box=1),
        suite_parameters(H),
        suite_minimal(H, small),
        suite_json(H, rng, 10),
    ]
    if r <= 2:
        out.append(suite_svg(H, rng, 5))
    return out
