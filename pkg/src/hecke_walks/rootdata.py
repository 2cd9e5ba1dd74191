"""Based reduced irreducible root data with exact integer coordinates.

A datum fixes a lattice X_* = Z^n (the cocharacter lattice, written in a
chosen basis) together with

* the simple roots, stored as integer functionals on X_* (rows of length n),
* the simple coroots, stored as integer vectors in X_*.

Roots are recorded by their coordinates in the basis of simple roots; their
functional on X_* is the corresponding integer combination of simple-root
rows.  Nothing in this module (or downstream) uses floating point.

Two lattice presets are available:

``adjoint``
    X_* is the coweight lattice P^v; the basis is the fundamental coweights,
    so the simple roots are the unit functionals.  Omega is as large as
    possible.
``simply_connected``
    X_* is the coroot lattice Q^v with basis the simple coroots.  Omega is
    trivial.

An ``explicit`` datum takes user supplied simple roots and coroots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

FLAVORS = ("adjoint", "simply_connected", "explicit")

Coweight = tuple[int, ...]


class RootDatumError(ValueError):
    pass


# Dynkin data: (squared root lengths, edges) in Bourbaki numbering, 0-based.
def _dynkin(cartan_type: str, rank: int) -> tuple[list[int], list[tuple[int, int]]]:
    chain = [(k, k + 1) for k in range(rank - 1)]
    if cartan_type == "A":
        if rank < 1:
            raise RootDatumError("A_n needs n >= 1")
        return [1] * rank, chain
    if cartan_type == "B":
        if rank < 2:
            raise RootDatumError("B_n needs n >= 2")
        return [2] * (rank - 1) + [1], chain
    if cartan_type == "C":
        if rank < 2:
            raise RootDatumError("C_n needs n >= 2")
        return [1] * (rank - 1) + [2], chain
    if cartan_type == "D":
        if rank < 4:
            raise RootDatumError("D_n needs n >= 4")
        return [1] * rank, chain[:-1] + [(rank - 3, rank - 1)]
    if cartan_type == "E":
        if rank not in (6, 7, 8):
            raise RootDatumError("E_n needs n in {6, 7, 8}")
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        return [1] * rank, edges
    if cartan_type == "F":
        if rank != 4:
            raise RootDatumError("F4 has rank 4")
        return [2, 2, 1, 1], chain
    if cartan_type == "G":
        if rank != 2:
            raise RootDatumError("G2 has rank 2")
        return [1, 3], chain
    raise RootDatumError(f"unknown Cartan type {cartan_type!r}")


def cartan_pairings(cartan_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Matrix ``P`` with ``P[i][j] = <alpha_i, alpha_j^v>``."""
    lengths, edges = _dynkin(cartan_type, rank)
    P = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in edges:
        for i, j in ((a, b), (b, a)):
            # <alpha_i, alpha_j^v> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
            P[i][j] = -max(1, lengths[i] // lengths[j])
    return tuple(tuple(row) for row in P)


@dataclass(frozen=True, order=True)
class Root:
    """A root written in the basis of simple roots."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def sign(self) -> int:
        return 1 if self.height > 0 else -1

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            coef = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + f"{coef}a{k + 1}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular linear system exactly."""
    n = len(rows)
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise RootDatumError("singular system")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


@dataclass(frozen=True)
class RootDatum:
    cartan_type: str
    rank: int
    flavor: str
    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    _lengths: tuple[int, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        r = self.rank
        if len(self.simple_roots) != r or len(self.simple_coroots) != r:
            raise RootDatumError("need exactly one root and coroot per node")
        n = len(self.simple_roots[0])
        if n != r:
            raise RootDatumError("only semisimple data (rank X_* == rank) are supported")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != n or not all(isinstance(c, int) for c in v):
                raise RootDatumError("roots and coroots must be integer vectors in X_*")
        expected = cartan_pairings(self.cartan_type, r)
        got = tuple(
            tuple(_dot(self.simple_roots[i], self.simple_coroots[j]) for j in range(r))
            for i in range(r)
        )
        if got != expected:
            raise RootDatumError(
                f"pairings {got} do not form the Cartan matrix of {self.label}"
            )
        if not self._lengths:
            object.__setattr__(self, "_lengths", tuple(_dynkin(self.cartan_type, r)[0]))

    # -- basic data --------------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def dim(self) -> int:
        return len(self.simple_roots[0])

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return cartan_pairings(self.cartan_type, self.rank)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots, ordered by height then reverse lexicographically."""
        r = self.rank
        P = self.cartan
        seen = {tuple(int(i == j) for j in range(r)) for i in range(r)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    # <beta, alpha_i^v>
                    pr = sum(beta[j] * P[j][i] for j in range(r))
                    image = tuple(b - pr * (j == i) for j, b in enumerate(beta))
                    if all(c >= 0 for c in image) and any(image) and image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return tuple(
            Root(c) for c in sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))
        )

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        pos = self.positive_roots
        return pos + tuple(-a for a in pos)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda a: a.height)

    @cached_property
    def coxeter_number(self) -> int:
        return self.highest_root.height + 1

    def simple_root(self, i: int) -> Root:
        return Root(tuple(int(i - 1 == j) for j in range(self.rank)))

    # -- functionals and coroots --------------------------------------------

    def functional(self, root: Root) -> tuple[int, ...]:
        """The root as an integer functional on X_*."""
        return self._functionals[root]

    @cached_property
    def _functionals(self) -> dict[Root, tuple[int, ...]]:
        out = {}
        for a in self.roots:
            out[a] = tuple(
                sum(c * self.simple_roots[j][k] for j, c in enumerate(a.coords))
                for k in range(self.dim)
            )
        return out

    @cached_property
    def root_of_functional(self) -> dict[tuple[int, ...], Root]:
        return {f: a for a, f in self._functionals.items()}

    def _norm2(self, root: Root) -> Fraction:
        # W-invariant form normalized by (alpha_j, alpha_j) = lengths[j]
        L = self._lengths
        P = self.cartan
        tot = Fraction(0)
        for i, a in enumerate(root.coords):
            for j, b in enumerate(root.coords):
                tot += a * b * Fraction(L[j] * P[i][j], 2)
        return tot

    def coroot(self, root: Root) -> Coweight:
        if root not in self._functionals:
            raise RootDatumError(f"{root} is not a root of {self.label}")
        n2 = self._norm2(root)
        out = [Fraction(0)] * self.dim
        for j, c in enumerate(root.coords):
            scale = c * Fraction(self._lengths[j]) / n2
            for k in range(self.dim):
                out[k] += scale * self.simple_coroots[j][k]
        if any(x.denominator != 1 for x in out):
            raise RootDatumError("coroot not in X_*")
        return tuple(int(x) for x in out)

    def pairing(self, root: Root, lam) -> int:
        if len(root.coords) != self.rank or len(lam) != self.dim:
            raise RootDatumError("root or coweight belongs to a different datum")
        return _dot(self.functional(root), lam)

    def is_root(self, root: Root) -> bool:
        return root in self._functionals

    @cached_property
    def rho_check_doubled(self) -> Coweight:
        """Sum of positive coroots; pairs to 2 with every simple root."""
        tot = [0] * self.dim
        for a in self.positive_roots:
            for k, c in enumerate(self.coroot(a)):
                tot[k] += c
        return tuple(tot)

    @cached_property
    def fundamental_coweights(self) -> tuple[tuple[Fraction, ...], ...]:
        """omega_i^v in X_* (x) Q, i.e. <alpha_j, omega_i^v> = delta_ij."""
        rows = [[Fraction(x) for x in f] for f in self.simple_roots]
        return tuple(
            tuple(_solve_rational(rows, [Fraction(int(i == j)) for j in range(self.rank)]))
            for i in range(self.rank)
        )

    @cached_property
    def base_point(self) -> tuple[Fraction, ...]:
        """The interior point rho^v / h of the base alcove."""
        h = self.coxeter_number
        return tuple(
            sum(w[k] for w in self.fundamental_coweights) / h for k in range(self.dim)
        )

    def in_2X(self, root: Root) -> bool:
        """Whether root = 2 * beta for some character beta, i.e. every pairing is even."""
        return all(c % 2 == 0 for c in self.functional(root))

    def is_dominant(self, lam) -> bool:
        return all(_dot(f, lam) >= 0 for f in self.simple_roots)

    def in_coroot_lattice(self, lam) -> bool:
        return all(x.denominator == 1 for x in self.coroot_coordinates(lam))

    def coroot_coordinates(self, lam) -> tuple[Fraction, ...]:
        cols = [[Fraction(self.simple_coroots[j][k]) for j in range(self.rank)] for k in range(self.dim)]
        return tuple(_solve_rational(cols, [Fraction(x) for x in lam]))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "type": self.cartan_type,
            "rank": self.rank,
            "flavor": self.flavor,
            "simple_roots": [list(f) for f in self.simple_roots],
            "simple_coroots": [list(c) for c in self.simple_coroots],
            "positive_roots": [list(a.coords) for a in self.positive_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def build_root_datum(
    cartan_type: str,
    rank: int,
    flavor: str = "adjoint",
    simple_roots=None,
    simple_coroots=None,
) -> RootDatum:
    """Build and validate a root datum.

    ``cartan_type`` is one of ``A B C D E F G`` (a trailing rank such as
    ``"E6"`` is accepted).  For ``flavor="explicit"`` both ``simple_roots``
    (functionals) and ``simple_coroots`` must be given in a common basis of
    X_*.
    """
    cartan_type = cartan_type.strip().upper()
    if len(cartan_type) > 1:
        cartan_type, tail = cartan_type[0], cartan_type[1:]
        if int(tail) != rank:
            raise RootDatumError(f"type {cartan_type}{tail} does not have rank {rank}")
    if flavor not in FLAVORS:
        raise RootDatumError(f"flavor must be one of {FLAVORS}")
    P = cartan_pairings(cartan_type, rank)
    r = rank
    if flavor == "adjoint":
        roots = tuple(tuple(int(i == k) for k in range(r)) for i in range(r))
        coroots = tuple(tuple(P[k][j] for k in range(r)) for j in range(r))
    elif flavor == "simply_connected":
        roots = tuple(tuple(P[i][k] for k in range(r)) for i in range(r))
        coroots = tuple(tuple(int(j == k) for k in range(r)) for j in range(r))
    else:
        if simple_roots is None or simple_coroots is None:
            raise RootDatumError("explicit flavor needs simple_roots and simple_coroots")
        roots = tuple(tuple(int(x) for x in f) for f in simple_roots)
        coroots = tuple(tuple(int(x) for x in c) for c in simple_coroots)
    return RootDatum(cartan_type, rank, flavor, roots, coroots)


def positive_roots(d: RootDatum) -> tuple[Root, ...]:
    return d.positive_roots


def highest_root(d: RootDatum) -> Root:
    return d.highest_root


def pairing(d: RootDatum, root: Root, lam) -> int:
    return d.pairing(root, lam)
