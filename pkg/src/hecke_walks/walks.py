"""The alcove walk algebra: steps, walks, validity and straightening.

A word in the walk algebra is a sequence of steps ``c_i^+, c_i^-, f_i^+,
f_i^-`` followed by an Omega element.  For a fixed orientation and start
alcove, a word is a *walk* when each step is admissible at the alcove it
starts from:

* current alcove on the negative side of its type-i wall: ``c_i^+`` or ``f_i^-``
* current alcove on the positive side: ``c_i^-`` or ``f_i^+``

Crossings move to the neighbouring alcove, foldings stay put.

Straightening rewrites an arbitrary word as an integer combination of walks
using ``c_i^- = c_i^+ + f_i^-`` and ``f_i^- = -f_i^+``, fixing the leftmost
inadmissible step first.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .alcove import NEGATIVE, STANDARD, Apartment, Orientation
from .weyl import AffineElement, Word

CROSSING, FOLDING = "c", "f"


@dataclass(frozen=True, order=True)
class Step:
    kind: str  # "c" or "f"
    sign: int  # +1 or -1
    i: int

    def __post_init__(self):
        if self.kind not in (CROSSING, FOLDING) or self.sign not in (1, -1) or self.i < 0:
            raise ValueError(f"bad step {self.kind}{self.sign}{self.i}")

    def __str__(self) -> str:
        return f"{self.kind}{'+' if self.sign > 0 else '-'}{self.i}"

    @classmethod
    def parse(cls, s: str) -> Step:
        m = re.fullmatch(r"\s*([cf])([+-])(\d+)\s*", s)
        if not m:
            raise ValueError(f"cannot parse step {s!r} (expected e.g. c+1, f-0)")
        return cls(m.group(1), 1 if m.group(2) == "+" else -1, int(m.group(3)))

    def to_dict(self) -> dict:
        return {"kind": "crossing" if self.kind == CROSSING else "folding", "sign": self.sign, "type": self.i}

    @classmethod
    def from_dict(cls, d: dict) -> Step:
        kind = {"crossing": CROSSING, "folding": FOLDING}.get(d["kind"], d["kind"])
        return cls(kind, int(d["sign"]), int(d["type"]))


def parse_steps(text: str) -> tuple[Step, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(Step.parse(t) for t in text.split(","))


@dataclass(frozen=True, order=True)
class WalkWord:
    steps: tuple[Step, ...]
    omega: AffineElement | None = None

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        body = " ".join(str(s) for s in self.steps) or "()"
        return body if self.omega is None else body + " t_tau"

    @property
    def crossings(self) -> int:
        return sum(s.kind == CROSSING for s in self.steps)

    def append(self, step: Step) -> WalkWord:
        return WalkWord(self.steps + (step,), self.omega)


@dataclass(frozen=True)
class Walk:
    """A walk word that is admissible for ``orientation`` from ``start``."""

    word: WalkWord
    orientation: Orientation = STANDARD
    start: AffineElement | None = None

    @property
    def steps(self) -> tuple[Step, ...]:
        return self.word.steps


@dataclass
class WalkCombination:
    """Integer combination of walks sharing an orientation and start alcove."""

    orientation: Orientation
    start: AffineElement | None
    terms: dict[WalkWord, int] = field(default_factory=dict)

    def add(self, word: WalkWord, coeff: int) -> None:
        c = self.terms.get(word, 0) + coeff
        if c:
            self.terms[word] = c
        else:
            self.terms.pop(word, None)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _walk_key(kv[0]))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalkCombination):
            return NotImplemented
        return (self.orientation, self.start, self.terms) == (other.orientation, other.start, other.terms)


def _walk_key(w: WalkWord):
    return tuple((s.i, s.kind, -s.sign) for s in w.steps)


class WalkAlgebra:
    """Walk validity, end points and straightening for one root datum."""

    def __init__(self, apartment: Apartment):
        self.ap = apartment
        self.group = apartment.group
        self._ends: dict = {}

    def _start(self, start):
        return self.group.identity if start is None else start

    def allowed(self, o: Orientation, cur: AffineElement, i: int) -> tuple[Step, Step]:
        """The two admissible steps of type i at the alcove cur(a)."""
        h = self.ap.wall(cur, i)
        if self.ap.side(o, h, cur) == NEGATIVE:
            return Step(CROSSING, 1, i), Step(FOLDING, -1, i)
        return Step(CROSSING, -1, i), Step(FOLDING, 1, i)

    def validate(self, word: WalkWord, o: Orientation = STANDARD, start=None) -> tuple[bool, int | None]:
        cur = self._start(start)
        for k, st in enumerate(word.steps):
            if st not in self.allowed(o, cur, st.i):
                return False, k
            if st.kind == CROSSING:
                cur = self.group.rmul(cur, st.i)
        return True, None

    def is_walk(self, word: WalkWord, o: Orientation = STANDARD, start=None) -> bool:
        return self.validate(word, o, start)[0]

    def make_walk(self, word: WalkWord, o: Orientation = STANDARD, start=None) -> Walk:
        ok, pos = self.validate(word, o, start)
        if not ok:
            raise ValueError(f"not an alcove walk: step {pos} of {word} is inadmissible")
        return Walk(word, o, start)

    def alcoves(self, word: WalkWord, start=None) -> list[AffineElement]:
        """Alcoves visited: the start, then the alcove after each step."""
        cur = self._start(start)
        out = [cur]
        for st in word.steps:
            if st.kind == CROSSING:
                cur = self.group.rmul(cur, st.i)
            out.append(cur)
        return out

    def end_alcove(self, word: WalkWord, start=None) -> AffineElement:
        """Alcove reached after the last step (Omega part ignored), memoized."""
        key = (word.steps, start)
        hit = self._ends.get(key)
        if hit is None:
            if not word.steps:
                hit = self._start(start)
            else:
                prev = self.end_alcove(WalkWord(word.steps[:-1]), start)
                st = word.steps[-1]
                hit = self.group.rmul(prev, st.i) if st.kind == CROSSING else prev
            self._ends[key] = hit
        return hit

    def end_point(self, walk: Walk | WalkWord, o: Orientation | None = None, start=None) -> AffineElement:
        if isinstance(walk, WalkWord):
            walk = self.make_walk(walk, o or STANDARD, start)
        else:
            self.make_walk(walk.word, walk.orientation, walk.start)
        x = self.alcoves(walk.word, walk.start)[-1]
        return x if walk.word.omega is None else x * walk.word.omega

    def non_folded_walk(self, word: Word, o: Orientation = STANDARD, start=None) -> Walk:
        signs = self.ap.crossing_signs(word, o, start)
        steps = tuple(Step(CROSSING, s, i) for s, i in zip(signs, word.letters))
        tau = word.omega if word.omega is not None and word.omega != self.group.identity else None
        return Walk(WalkWord(steps, tau), o, start)

    # -- straightening ----------------------------------------------------------

    def extend(self, comb: WalkCombination, step: Step) -> WalkCombination:
        """Straighten ``comb * step`` given that every term of comb is a walk."""
        o, start = comb.orientation, comb.start
        out = WalkCombination(o, start)
        for word, coeff in comb.terms.items():
            cur = self.end_alcove(word, start)
            for w2, c2 in self._fix(o, cur, step):
                out.add(word.append(w2), coeff * c2)
        return out

    def _fix(self, o, cur, step):
        good = self.allowed(o, cur, step.i)
        if step in good:
            return [(step, 1)]
        cross, fold = good
        if step.kind == CROSSING:
            # c_i^- = c_i^+ + f_i^-  and  c_i^+ = c_i^- + f_i^+
            return [(cross, 1), (fold, 1)]
        # f_i^- = -f_i^+
        return [(fold, -1)]

    def straighten(self, word: WalkWord, o: Orientation = STANDARD, start=None) -> WalkCombination:
        comb = WalkCombination(o, start, {WalkWord((), None): 1})
        for st in word.steps:
            comb = self.extend(comb, st)
        if word.omega is not None:
            comb = WalkCombination(
                o, start, {WalkWord(w.steps, word.omega): c for w, c in comb.terms.items()}
            )
        return comb

    def free_basis_expansion(self, word: WalkWord) -> dict[WalkWord, int]:
        """Expand in the free basis of words in c_i^+ and f_i^- (no orientation needed)."""
        out: dict[WalkWord, int] = {WalkWord((), word.omega): 1}
        for st in word.steps:
            if st.kind == CROSSING and st.sign == 1:
                subs = [(st, 1)]
            elif st.kind == CROSSING:
                subs = [(Step(CROSSING, 1, st.i), 1), (Step(FOLDING, -1, st.i), 1)]
            elif st.sign == -1:
                subs = [(st, 1)]
            else:
                subs = [(Step(FOLDING, -1, st.i), -1)]
            nxt: dict[WalkWord, int] = {}
            for w, c in out.items():
                for s2, c2 in subs:
                    k = w.append(s2)
                    nxt[k] = nxt.get(k, 0) + c * c2
            out = {k: c for k, c in nxt.items() if c}
        return out

    @staticmethod
    def free_pattern(word: WalkWord) -> WalkWord:
        """Replace every crossing by c^+ and every folding by f^-."""
        return WalkWord(
            tuple(Step(s.kind, 1 if s.kind == CROSSING else -1, s.i) for s in word.steps), word.omega
        )

    def all_walks(self, length: int, o: Orientation = STANDARD, start=None) -> list[WalkWord]:
        """Every walk of the given length (trivial Omega part)."""
        r = self.group.rank
        out = [(WalkWord(()), self._start(start))]
        for _ in range(length):
            nxt = []
            for w, cur in out:
                for i in range(r + 1):
                    cross, fold = self.allowed(o, cur, i)
                    nxt.append((w.append(cross), self.group.rmul(cur, i)))
                    nxt.append((w.append(fold), cur))
            out = nxt
        return [w for w, _ in out]

    def concatenate(self, p: Walk, q: Walk) -> Walk:
        """Composition of two non-folded walks, re-signed for the combined gallery."""
        if p.orientation != q.orientation:
            raise ValueError("walks use different orientations")
        if not p.orientation.translation_stable:
            raise ValueError("concatenation needs a translation-stable orientation")
        if any(s.kind == FOLDING for s in p.steps + q.steps):
            raise ValueError("concatenation is defined for non-folded walks")
        perm = self.group.omega_of(p.word.omega).perm if p.word.omega is not None else None
        letters = [s.i for s in p.steps] + [perm[s.i] if perm else s.i for s in q.steps]
        tau = self.group.identity
        for t in (p.word.omega, q.word.omega):
            if t is not None:
                tau = tau * t
        word = Word(tuple(letters), None if tau == self.group.identity else tau)
        return self.non_folded_walk(word, p.orientation, p.start)

    # -- serialization -------------------------------------------------------------

    def walk_to_dict(self, walk: Walk) -> dict:
        return {
            "steps": [s.to_dict() for s in walk.steps],
            "omega": self.group.omega_index(walk.word.omega),
            "start": None if walk.start is None else walk.start.to_dict(),
        }

    def combination_to_json(self, comb: WalkCombination) -> str:
        return json.dumps(
            [
                {"walk": self.walk_to_dict(Walk(w, comb.orientation, comb.start)), "coeff": c}
                for w, c in comb.items()
            ]
        )
