"""The extended affine Weyl group X_* x| W.

An element is stored as a pair ``(w, lam)`` meaning ``w * eps^lam``: the
finite part ``w`` is an integer matrix acting on X_*, and the element acts on
the apartment by ``x -> w(x + lam)``.  Words, reduced words, Omega and the
Coxeter moves used by the word property live here as well.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .rootdata import Coweight, Root, RootDatum, RootDatumError

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _matvec(a: Matrix, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@lru_cache(maxsize=None)
def _matinv(a: Matrix) -> Matrix:
    n = len(a)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    out = tuple(tuple(int(x) for x in row[n:]) for row in M)
    return out


class AffineElement:
    """``w * eps^lam`` with ``w`` a matrix on X_* and ``lam`` a coweight.

    Immutable; the hash is cached because elements are dictionary keys on
    every hot path.
    """

    __slots__ = ("w", "lam", "_hash")

    def __init__(self, w: Matrix, lam: Coweight):
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "_hash", hash((w, lam)))

    def __setattr__(self, name, value):
        raise AttributeError("AffineElement is immutable")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self._hash == other._hash and self.lam == other.lam and self.w == other.w

    def __lt__(self, other: AffineElement) -> bool:
        return (self.w, self.lam) < (other.w, other.lam)

    def __repr__(self) -> str:
        return f"AffineElement(w={self.w}, lam={self.lam})"

    def __reduce__(self):
        return (AffineElement, (self.w, self.lam))

    def __mul__(self, other: AffineElement) -> AffineElement:
        if len(self.lam) != len(other.lam):
            raise ValueError("elements of different groups")
        # w1 eps^l1 w2 eps^l2 = w1 w2 eps^(w2^-1 l1 + l2)
        back = _matvec(_matinv(other.w), self.lam)
        return AffineElement(
            _matmul(self.w, other.w), tuple(a + b for a, b in zip(back, other.lam))
        )

    def inverse(self) -> AffineElement:
        winv = _matinv(self.w)
        return AffineElement(winv, tuple(-x for x in _matvec(self.w, self.lam)))

    @property
    def is_translation(self) -> bool:
        return self.w == _identity(len(self.lam))

    @property
    def is_finite(self) -> bool:
        return not any(self.lam)

    def act(self, point):
        """Image of a point of the apartment (rational or integer coordinates)."""
        return _matvec(self.w, tuple(a + b for a, b in zip(point, self.lam)))

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "w_matrix": [list(r) for r in self.w]}


@dataclass(frozen=True)
class Word:
    """Letters ``i_1 .. i_k`` in 0..r followed by an Omega element."""

    letters: tuple[int, ...]
    omega: AffineElement | None = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Move:
    """A Coxeter move.  ``kind`` is ``nil_delete``, ``nil_insert`` or ``braid``."""

    kind: str
    pos: int
    i: int | None = None
    j: int | None = None


class WordError(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OmegaElement:
    element: AffineElement
    perm: tuple[int, ...]  # perm[i] = tau(i)
    index: int


class AffineWeylGroup:
    """The extended affine Weyl group of a root datum, with cached length."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        self.n = datum.dim
        self._len_cache: dict[AffineElement, int] = {}
        self._lmul: dict[tuple[int, AffineElement], AffineElement] = {}
        self._rmul: dict[tuple[AffineElement, int], AffineElement] = {}
        self._lstep: dict = {}
        self._rstep: dict = {}
        self._rw_cache: dict[AffineElement, tuple[tuple[int, ...], AffineElement]] = {}
        self._pos_funcs = [datum.functional(a) for a in datum.positive_roots]
        self._reg = datum.rho_check_doubled

    # -- generators ---------------------------------------------------------

    @cached_property
    def identity(self) -> AffineElement:
        return AffineElement(_identity(self.n), (0,) * self.n)

    def reflection_matrix(self, root: Root) -> Matrix:
        f = self.datum.functional(root)
        c = self.datum.coroot(root)
        return tuple(
            tuple(int(i == j) - c[i] * f[j] for j in range(self.n)) for i in range(self.n)
        )

    def translation(self, lam) -> AffineElement:
        return AffineElement(_identity(self.n), tuple(lam))

    def finite(self, w: Matrix) -> AffineElement:
        return AffineElement(w, (0,) * self.n)

    @cached_property
    def generators(self) -> tuple[AffineElement, ...]:
        d = self.datum
        a0 = d.highest_root
        # s_0 = eps^(a0^v) s_{a0} = s_{a0} eps^(-a0^v)
        s0 = AffineElement(self.reflection_matrix(a0), tuple(-x for x in d.coroot(a0)))
        gens = [s0]
        for i in range(1, self.rank + 1):
            gens.append(self.finite(self.reflection_matrix(d.simple_root(i))))
        return tuple(gens)

    def simple_reflection(self, i: int) -> AffineElement:
        if not 0 <= i <= self.rank:
            raise IndexError(f"simple reflection index {i} out of range 0..{self.rank}")
        return self.generators[i]

    def lmul(self, i: int, x: AffineElement) -> AffineElement:
        key = (i, x)
        y = self._lmul.get(key)
        if y is None:
            y = self._lmul[key] = self.generators[i] * x
        return y

    def rmul(self, x: AffineElement, i: int) -> AffineElement:
        key = (x, i)
        y = self._rmul.get(key)
        if y is None:
            y = self._rmul[key] = x * self.generators[i]
        return y

    def lstep(self, i: int, x: AffineElement) -> tuple[AffineElement, bool]:
        """(s_i x, whether the length goes up)."""
        key = (i, x)
        hit = self._lstep.get(key)
        if hit is None:
            y = self.lmul(i, x)
            hit = self._lstep[key] = (y, self.length(y) > self.length(x))
        return hit

    def rstep(self, x: AffineElement, i: int) -> tuple[AffineElement, bool]:
        """(x s_i, whether the length goes up)."""
        key = (x, i)
        hit = self._rstep.get(key)
        if hit is None:
            y = self.rmul(x, i)
            hit = self._rstep[key] = (y, self.length(y) > self.length(x))
        return hit

    # -- length -------------------------------------------------------------

    def length(self, x: AffineElement) -> int:
        cached = self._len_cache.get(x)
        if cached is not None:
            return cached
        winv_reg = _matvec(_matinv(x.w), self._reg)
        total = 0
        for f in self._pos_funcs:
            p = sum(a * b for a, b in zip(f, x.lam))
            # w(alpha) > 0 iff <alpha, w^-1 reg> > 0
            if sum(a * b for a, b in zip(f, winv_reg)) < 0:
                total += abs(p + 1)
            else:
                total += abs(p)
        self._len_cache[x] = total
        return total

    def separation_count(self, x: AffineElement) -> int:
        """Number of affine root hyperplanes separating the base alcove and x(base)."""
        x0 = self.datum.base_point
        y = x.act(x0)
        total = 0
        for f in self._pos_funcs:
            a = sum(c * p for c, p in zip(f, x0))
            b = sum(c * p for c, p in zip(f, y))
            total += abs(_floor(a) - _floor(b))
        return total

    # -- words --------------------------------------------------------------

    def evaluate(self, word: Word | tuple | list) -> AffineElement:
        if not isinstance(word, Word):
            word = Word(tuple(word))
        x = self.identity
        for i in word.letters:
            x = self.rmul(x, i)
        if word.omega is not None:
            x = x * word.omega
        return x

    def reduced_word(self, x: AffineElement) -> Word:
        """Greedy reduced word: repeatedly strip the smallest left descent."""
        letters, tau = self._reduced(x)
        return Word(letters, None if tau == self.identity else tau)

    def _reduced(self, x: AffineElement) -> tuple[tuple[int, ...], AffineElement]:
        hit = self._rw_cache.get(x)
        if hit is not None:
            return hit
        path = []
        y = x
        while True:
            ly = self.length(y)
            if ly == 0:
                break
            for i in range(self.rank + 1):
                z = self.lmul(i, y)
                if self.length(z) < ly:
                    path.append(i)
                    y = z
                    break
            else:  # pragma: no cover - lengths always have a descent
                raise RuntimeError("no descent found")
        out = (tuple(path), y)
        self._rw_cache[x] = out
        return out

    def reduced_letters(self, x: AffineElement) -> tuple[int, ...]:
        return self._reduced(x)[0]

    # -- Omega --------------------------------------------------------------

    def omega_class_key(self, lam) -> tuple[Fraction, ...]:
        """Canonical key for the class of lam in X_* / Q^v."""
        return tuple(c - _floor(c) for c in self.datum.coroot_coordinates(lam))

    @cached_property
    def omega_group(self) -> tuple[OmegaElement, ...]:
        n = self.n
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        reps = {self.omega_class_key((0,) * n): (0,) * n}
        frontier = [(0,) * n]
        while frontier:
            nxt = []
            for lam in frontier:
                for b in basis:
                    mu = tuple(x + y for x, y in zip(lam, b))
                    key = self.omega_class_key(mu)
                    if key not in reps:
                        reps[key] = mu
                        nxt.append(mu)
            frontier = nxt
        out = []
        for lam in sorted(reps.values(), key=lambda v: (sum(map(abs, v)), v)):
            tau = self._reduced(self.translation(lam))[1]
            out.append(tau)
        # identity first, then the rest in a stable order
        out.sort(key=lambda t: (t != self.identity, self.length_zero_key(t)))
        return tuple(
            OmegaElement(t, self.omega_permutation(t), k) for k, t in enumerate(out)
        )

    def length_zero_key(self, t: AffineElement):
        return (t.act((0,) * self.n), t.w)

    def omega_permutation(self, tau: AffineElement) -> tuple[int, ...]:
        tinv = tau.inverse()
        perm = []
        for g in self.generators:
            conj = tau * g * tinv
            perm.append(self.generators.index(conj))
        return tuple(perm)

    def omega_of(self, tau: AffineElement) -> OmegaElement:
        for om in self.omega_group:
            if om.element == tau:
                return om
        raise ValueError("not an element of Omega")

    def omega_index(self, tau: AffineElement | None) -> int:
        if tau is None:
            return 0
        return self.omega_of(tau).index

    def decompose(self, x: AffineElement) -> tuple[AffineElement, AffineElement]:
        """Split x = (affine Weyl part) * tau with tau in Omega."""
        letters, tau = self._reduced(x)
        return x * tau.inverse(), tau

    def in_affine_weyl_group(self, x: AffineElement) -> bool:
        return self.decompose(x)[1] == self.identity

    # -- finite Weyl group ----------------------------------------------------

    def finite_elements(self) -> list[AffineElement]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(1, self.rank + 1):
                    y = self.rmul(x, i)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_letters(x)))

    def longest_element(self, subset=None) -> AffineElement:
        """Longest element of the parabolic subgroup generated by s_i, i in subset."""
        subset = range(1, self.rank + 1) if subset is None else subset
        x = self.identity
        grew = True
        while grew:
            grew = False
            for i in subset:
                y = self.rmul(x, i)
                if self.length(y) > self.length(x):
                    x, grew = y, True
        return x

    def stabilizer_longest(self, lam) -> AffineElement:
        """Longest element of the stabilizer of a dominant coweight."""
        if not self.datum.is_dominant(lam):
            raise ValueError("stabilizer_longest expects a dominant coweight")
        subset = [i for i in range(1, self.rank + 1) if sum(a * b for a, b in zip(self.datum.simple_roots[i - 1], lam)) == 0]
        return self.longest_element(subset)

    # -- Coxeter structure ----------------------------------------------------

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        """m_ij for the affine Coxeter system; 0 encodes infinity."""
        r = self.rank
        gens = self.generators
        M = [[1] * (r + 1) for _ in range(r + 1)]
        for i, j in itertools.combinations(range(r + 1), 2):
            prod = gens[i] * gens[j]
            p = prod
            m = 0
            for k in range(1, 7):
                if p == self.identity:
                    m = k
                    break
                p = p * prod
            M[i][j] = M[j][i] = m
        return tuple(tuple(row) for row in M)

    def apply_move(self, word: Word, move: Move) -> Word:
        L = list(word.letters)
        p = move.pos
        if move.kind == "nil_delete":
            if p < 0 or p + 1 >= len(L) or L[p] != L[p + 1]:
                raise WordError(f"no s_i s_i at position {p}")
            del L[p : p + 2]
        elif move.kind == "nil_insert":
            if not 0 <= p <= len(L) or move.i is None or not 0 <= move.i <= self.rank:
                raise WordError("bad nil_insert")
            L[p:p] = [move.i, move.i]
        elif move.kind == "braid":
            i, j = move.i, move.j
            m = self.coxeter_matrix[i][j] if i is not None and j is not None else 0
            if i == j or m == 0:
                raise WordError("braid move needs distinct letters with finite m_ij")
            pattern = [i if k % 2 == 0 else j for k in range(m)]
            if L[p : p + m] != pattern:
                raise WordError(f"pattern {pattern} not found at position {p}")
            L[p : p + m] = [j if k % 2 == 0 else i for k in range(m)]
        else:
            raise WordError(f"unknown move {move.kind!r}")
        return Word(tuple(L), word.omega)

    def applicable_moves(self, word: Word, insert: bool = True) -> list[Move]:
        L = word.letters
        moves = []
        for p in range(len(L) - 1):
            if L[p] == L[p + 1]:
                moves.append(Move("nil_delete", p))
        for p in range(len(L)):
            for j in range(self.rank + 1):
                i = L[p]
                if i == j:
                    continue
                m = self.coxeter_matrix[i][j]
                if m and p + m <= len(L) and all(
                    L[p + k] == (i if k % 2 == 0 else j) for k in range(m)
                ):
                    moves.append(Move("braid", p, i, j))
        if insert:
            for p in range(len(L) + 1):
                for i in range(self.rank + 1):
                    moves.append(Move("nil_insert", p, i))
        return moves

    def connect_words(self, w1: Word, w2: Word, budget: int = 10**6, slack: int = 2) -> list[Move]:
        """Breadth-first search for a sequence of moves turning w1 into w2."""
        if (w1.omega or self.identity) != (w2.omega or self.identity):
            raise WordError("words have different Omega parts")
        if self.evaluate(w1) != self.evaluate(w2):
            raise WordError("words evaluate to different elements")
        max_len = max(len(w1), len(w2)) + slack
        start, goal = w1.letters, w2.letters
        parent: dict[tuple[int, ...], tuple[tuple[int, ...], Move] | None] = {start: None}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            if cur == goal:
                path = []
                while parent[cur] is not None:
                    prev, mv = parent[cur]
                    path.append(mv)
                    cur = prev
                return path[::-1]
            cw = Word(cur)
            for mv in self.applicable_moves(cw, insert=len(cur) + 2 <= max_len):
                nxt = self.apply_move(cw, mv).letters
                if nxt not in parent:
                    parent[nxt] = (cur, mv)
                    if len(parent) > budget:
                        raise SearchBudgetExceeded(f"more than {budget} words visited")
                    queue.append(nxt)
        raise WordError("no connecting sequence within the length bound")

    # -- serialization --------------------------------------------------------

    def word_to_dict(self, word: Word) -> dict:
        return {"letters": list(word.letters), "omega": self.omega_index(word.omega)}

    def word_from_dict(self, data: dict) -> Word:
        idx = data.get("omega", 0)
        tau = self.omega_group[idx].element
        return Word(tuple(data["letters"]), None if tau == self.identity else tau)

    def word_to_json(self, word: Word) -> str:
        return json.dumps(self.word_to_dict(word))


def _floor(x) -> int:
    return x.numerator // x.denominator if isinstance(x, Fraction) else int(x // 1)


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> AffineWeylGroup:
    return AffineWeylGroup(datum)
