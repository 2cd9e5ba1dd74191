"""Alcove geometry of the standard apartment.

Alcoves are identified with elements of the affine Weyl group via
``x -> x(a)`` where ``a`` is the base alcove.  All side-of-hyperplane tests
are exact: the base alcove carries the interior point ``rho^v / h``, and the
alcove ``x(a)`` carries its image under ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .rootdata import Root, RootDatum
from .weyl import AffineElement, AffineWeylGroup, Word, _matinv, weyl_group

POSITIVE, NEGATIVE = 1, -1


@dataclass(frozen=True, order=True)
class Hyperplane:
    """H_{alpha,n} = {x : <alpha, x> = n}, with alpha a positive root."""

    alpha: Root
    level: int

    @classmethod
    def make(cls, alpha: Root, level: int) -> Hyperplane:
        if alpha.sign < 0:
            return cls(-alpha, -level)
        return cls(alpha, level)

    def to_dict(self) -> dict:
        return {"alpha": list(self.alpha.coords), "level": self.level}


@dataclass(frozen=True)
class Alcove:
    element: AffineElement


@dataclass(frozen=True)
class Orientation:
    """Root hyperplane orientation.

    ``kind`` is one of

    * ``standard``: the most negative point lies infinitely deep in the
      anti-dominant chamber,
    * ``chamber``: as ``standard`` with the anti-dominant chamber replaced by
      ``u`` applied to it (``u`` finite),
    * ``alcove_negative``: every negative half-space contains the alcove ``b``,
    * ``alcove_positive``: every positive half-space contains ``b``.
    """

    kind: str = "standard"
    element: AffineElement | None = None

    KINDS = ("standard", "chamber", "alcove_negative", "alcove_positive")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown orientation kind {self.kind!r}")
        if self.kind != "standard" and self.element is None:
            raise ValueError(f"{self.kind} orientation needs an element")
        if self.kind == "chamber" and not self.element.is_finite:
            raise ValueError("chamber orientation needs a finite Weyl group element")

    @property
    def translation_stable(self) -> bool:
        return self.kind in ("standard", "chamber")

    def inverse(self) -> Orientation:
        flip = {"alcove_negative": "alcove_positive", "alcove_positive": "alcove_negative"}
        if self.kind not in flip:
            raise ValueError("only alcove orientations have an inverse of the same kind")
        return Orientation(flip[self.kind], self.element)


STANDARD = Orientation()


class Apartment:
    """Geometry attached to a root datum: walls, sides, signs, parameters."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.group: AffineWeylGroup = weyl_group(datum)
        self._sample: dict[AffineElement, tuple[Fraction, ...]] = {}
        self._walls: dict[tuple[AffineElement, int], Hyperplane] = {}

    # -- points and walls -------------------------------------------------------

    def sample(self, x: AffineElement) -> tuple[Fraction, ...]:
        p = self._sample.get(x)
        if p is None:
            p = self._sample[x] = x.act(self.datum.base_point)
        return p

    def value(self, h: Hyperplane, point) -> Fraction:
        f = self.datum.functional(h.alpha)
        return sum(a * b for a, b in zip(f, point)) - h.level

    @cached_property
    def base_walls(self) -> tuple[Hyperplane, ...]:
        d = self.datum
        walls = [Hyperplane(d.highest_root, 1)]
        walls += [Hyperplane(d.simple_root(i), 0) for i in range(1, d.rank + 1)]
        return tuple(walls)

    def transform(self, x: AffineElement, h: Hyperplane) -> Hyperplane:
        """The image x(h)."""
        d = self.datum
        f = d.functional(h.alpha)
        # x = w eps^lam maps {<alpha, y> = n} to {<w alpha, z> = n + <alpha, lam>}
        winv = _matinv(x.w)
        g = tuple(sum(f[j] * winv[j][k] for j in range(len(f))) for k in range(len(f)))
        level = h.level + sum(a * b for a, b in zip(f, x.lam))
        return Hyperplane.make(d.root_of_functional[g], level)

    def wall(self, x: AffineElement, i: int) -> Hyperplane:
        """The wall of type i of the alcove x(a)."""
        key = (x, i)
        h = self._walls.get(key)
        if h is None:
            h = self._walls[key] = self.transform(x, self.base_walls[i])
        return h

    def walls(self, x: AffineElement) -> tuple[Hyperplane, ...]:
        return tuple(self.wall(x, i) for i in range(self.datum.rank + 1))

    # -- orientation --------------------------------------------------------------

    def side(self, o: Orientation, h: Hyperplane, x: AffineElement) -> int:
        """Return POSITIVE or NEGATIVE: the half-space of h containing x(a) under o."""
        val = self.value(h, self.sample(x))
        s = 1 if val > 0 else -1
        if o.kind == "standard":
            return s
        if o.kind == "chamber":
            # positive half-space faces the chamber u(C+)
            f = self.datum.functional(h.alpha)
            u_reg = o.element.act(self.datum.rho_check_doubled)
            return s if sum(a * b for a, b in zip(f, u_reg)) > 0 else -s
        sb = 1 if self.value(h, self.sample(o.element)) > 0 else -1
        if o.kind == "alcove_negative":
            return POSITIVE if s != sb else NEGATIVE
        return POSITIVE if s == sb else NEGATIVE

    def crossing_signs(self, word, o: Orientation = STANDARD, start: AffineElement | None = None) -> tuple[int, ...]:
        """Sign of each crossing along the gallery of ``word`` starting at start(a).

        A crossing is positive when it leaves the negative half-space of its wall.
        """
        letters = word.letters if isinstance(word, Word) else tuple(word)
        cur = self.group.identity if start is None else start
        out = []
        for i in letters:
            h = self.wall(cur, i)
            out.append(1 if self.side(o, h, cur) == NEGATIVE else -1)
            cur = self.group.rmul(cur, i)
        return tuple(out)

    # -- locating points ------------------------------------------------------------

    def locate(self, point) -> AffineElement | None:
        """The element x of the affine Weyl group with point in x(a), or None if on a wall."""
        d = self.datum
        G = self.group
        f0 = d.functional(d.highest_root)
        x = G.identity
        for _ in range(10_000):
            z = x.inverse().act(point)
            vals = [sum(a * b for a, b in zip(f, z)) for f in d.simple_roots]
            v0 = sum(a * b for a, b in zip(f0, z))
            if any(v == 0 for v in vals) or v0 == 1:
                return None
            if v0 > 1:
                x = G.rmul(x, 0)
                continue
            for i, v in enumerate(vals, start=1):
                if v < 0:
                    x = G.rmul(x, i)
                    break
            else:
                return x
        raise RuntimeError("alcove search did not terminate")

    def adjacent_alcove(self, h: Hyperplane) -> tuple[AffineElement, int]:
        """An alcove with a face on h, together with the type of that face."""
        d = self.datum
        f = d.functional(h.alpha)
        n = len(f)
        k = next(j for j in range(n) if f[j])
        for attempt in range(1, 50):
            # generic point near the base alcove, moved onto h along a coordinate axis
            g = [bp + Fraction(1, 97 * attempt + 7 * j + 13) for j, bp in enumerate(d.base_point)]
            g[k] += (h.level - sum(a * b for a, b in zip(f, g))) / f[k]
            eps = Fraction(1, 1000 * attempt)
            push = [Fraction(int(j == k) * (1 if f[k] > 0 else -1)) * eps for j in range(n)]
            y = tuple(a - b for a, b in zip(g, push))
            x = self.locate(y)
            if x is None:
                continue
            for i in range(d.rank + 1):
                if self.wall(x, i) == h:
                    return x, i
        raise RuntimeError(f"no alcove adjacent to {h} found")

    def face_type(self, h: Hyperplane) -> int:
        return self.adjacent_alcove(h)[1]

    # -- conjugacy and parameters -----------------------------------------------------

    @cached_property
    def simple_conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """W_a-conjugacy classes of simple reflections (odd edges of the Coxeter graph)."""
        r = self.datum.rank
        M = self.group.coxeter_matrix
        parent = list(range(r + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(r + 1):
            for j in range(i + 1, r + 1):
                if M[i][j] % 2 == 1:
                    parent[find(i)] = find(j)
        classes: dict[int, list[int]] = {}
        for i in range(r + 1):
            classes.setdefault(find(i), []).append(i)
        return tuple(sorted(tuple(c) for c in classes.values()))

    def hyperplane_parameter(self, L, h: Hyperplane) -> int:
        """L(H) = L(s_i) for i the type of any face supported on h."""
        params = L.L if hasattr(L, "L") else tuple(L)
        return params[self.face_type(h)]


_apartments: dict[RootDatum, Apartment] = {}


def apartment(datum: RootDatum) -> Apartment:
    ap = _apartments.get(datum)
    if ap is None:
        ap = _apartments[datum] = Apartment(datum)
    return ap


def parity_prediction(datum: RootDatum, L, i: int, j: int) -> int:
    """Parameter of H_{alpha_i, j} predicted by the parity rule for simple roots."""
    params = L.L if hasattr(L, "L") else tuple(L)
    if datum.in_2X(datum.simple_root(i)) and j % 2:
        return params[0]
    return params[i]


__all__ = [
    "Alcove",
    "Apartment",
    "Hyperplane",
    "NEGATIVE",
    "Orientation",
    "POSITIVE",
    "STANDARD",
    "apartment",
    "parity_prediction",
]
