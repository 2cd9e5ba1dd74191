"""The affine Hecke algebra over Z[v, v^-1] in the basis T_w.

Parameters ``L = (L(s_0), ..., L(s_r))`` enter through the quadratic
relation ``(T_i + 1)(T_i - q^L(s_i)) = 0`` with ``q = v^2``, the
normalization ``T~_i = v^-L(s_i) T_i`` and the image of the foldings.
Equal parameters are ``L = (1, ..., 1)``.

Elements are stored flat as ``{(w, exponent of v): integer}`` which keeps the
generator actions to a handful of dictionary updates per term.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable

from .alcove import STANDARD, Apartment, Orientation, apartment
from .laurent import LaurentPoly, v_minus_vinv
from .rootdata import RootDatum
from .walks import CROSSING, Walk, WalkAlgebra, WalkCombination, WalkWord
from .weyl import AffineElement, Word

DEFAULT_BUDGET = 10**5


class BudgetExceeded(RuntimeError):
    pass


class ParameterError(ValueError):
    pass


def term_budget() -> int:
    env = os.environ.get("HECKE_WALKS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class ParameterSystem:
    L: tuple[int, ...]

    @classmethod
    def equal(cls, rank: int) -> ParameterSystem:
        return cls((1,) * (rank + 1))

    def validate(self, ap: Apartment) -> None:
        r = ap.datum.rank
        if len(self.L) != r + 1:
            raise ParameterError(f"need {r + 1} parameters L(s_0)..L(s_{r}), got {len(self.L)}")
        if any(x < 0 for x in self.L):
            raise ParameterError("parameters must be non-negative")
        for cls in ap.simple_conjugacy_classes:
            if len({self.L[i] for i in cls}) > 1:
                raise ParameterError(f"L not constant on the conjugacy class {cls}")
        for om in ap.group.omega_group:
            for i in range(r + 1):
                if self.L[i] != self.L[om.perm[i]]:
                    raise ParameterError(
                        f"L(s_{i}) != L(s_{om.perm[i]}) although Omega conjugates them; "
                        "a datum with smaller Omega (e.g. flavor simply_connected) allows distinct values"
                    )


class HeckeElement:
    """Immutable element of the affine Hecke algebra."""

    __slots__ = ("alg", "_c")

    def __init__(self, alg: HeckeAlgebra, data: dict[tuple[AffineElement, int], int]):
        self.alg = alg
        self._c = data
        if len(data) > alg.budget:
            raise BudgetExceeded(f"element has {len(data)} terms (budget {alg.budget})")

    # -- access -----------------------------------------------------------------

    def terms(self) -> dict[AffineElement, LaurentPoly]:
        out: dict[AffineElement, dict[int, int]] = {}
        for (x, e), c in self._c.items():
            out.setdefault(x, {})[e] = c
        return {x: LaurentPoly(d) for x, d in out.items()}

    def coeff(self, x: AffineElement) -> LaurentPoly:
        return LaurentPoly({e: c for (y, e), c in self._c.items() if y == x})

    def support(self) -> set[AffineElement]:
        return {x for x, _ in self._c}

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self.support())

    def sorted_terms(self) -> list[tuple[AffineElement, LaurentPoly]]:
        G = self.alg.group
        return sorted(self.terms().items(), key=lambda kv: (G.length(kv[0]), kv[0]))

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: HeckeElement) -> None:
        if other.alg is not self.alg and other.alg != self.alg:
            raise ValueError("elements of different Hecke algebras")

    def __add__(self, other) -> HeckeElement:
        other = self.alg.coerce(other)
        self._check(other)
        return HeckeElement(self.alg, _addto(dict(self._c), other._c, 1))

    __radd__ = __add__

    def __sub__(self, other) -> HeckeElement:
        other = self.alg.coerce(other)
        self._check(other)
        return HeckeElement(self.alg, _addto(dict(self._c), other._c, -1))

    def __rsub__(self, other) -> HeckeElement:
        return self.alg.coerce(other) - self

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.alg, {k: -c for k, c in self._c.items()})

    def scale(self, p: LaurentPoly | int) -> HeckeElement:
        if isinstance(p, int):
            p = LaurentPoly(p)
        out: dict = {}
        for (x, e), c in self._c.items():
            for k, a in p.items():
                key = (x, e + k)
                s = out.get(key, 0) + c * a
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return HeckeElement(self.alg, out)

    def __mul__(self, other) -> HeckeElement:
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        self._check(other)
        return self.alg.mul(self, other)

    def __rmul__(self, other) -> HeckeElement:
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = self.alg.coerce(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"HeckeElement({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        G = self.alg.group
        parts = []
        for x, p in self.sorted_terms():
            letters, tau = G._reduced(x)
            name = "T_e" if not letters and tau == G.identity else "T_" + "".join(map(str, letters))
            if tau != G.identity:
                name += f"*tau{G.omega_index(tau)}"
            parts.append(f"({p})*{name}")
        return " + ".join(parts)

    # -- serialization --------------------------------------------------------------

    def to_dict(self) -> dict:
        G = self.alg.group
        terms = []
        for x, p in self.sorted_terms():
            el = x.to_dict()
            el["omega"] = G.omega_index(G.decompose(x)[1])
            terms.append({"element": el, "coeff": p.to_json()})
        return {"basis": "T", "params": list(self.alg.L), "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _addto(target: dict, src: dict, sign: int) -> dict:
    for k, c in src.items():
        s = target.get(k, 0) + sign * c
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def _group_terms(h: HeckeElement) -> dict[AffineElement, dict[int, int]]:
    grouped: dict[AffineElement, dict[int, int]] = {}
    for (x, e), c in h._c.items():
        grouped.setdefault(x, {})[e] = c
    return grouped


def _accumulate(out: dict, prod: HeckeElement, poly: dict[int, int]) -> None:
    for (y, e2), c2 in prod._c.items():
        for e1, c1 in poly.items():
            _bump(out, (y, e1 + e2), c1 * c2)


def _bump(d: dict, key, c: int) -> None:
    s = d.get(key, 0) + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


class HeckeAlgebra:
    """Affine Hecke algebra of a root datum with parameter system L."""

    def __init__(self, datum: RootDatum, L: Iterable[int] | ParameterSystem | None = None, budget: int | None = None):
        self.datum = datum
        self.ap: Apartment = apartment(datum)
        self.group = self.ap.group
        self.walks = WalkAlgebra(self.ap)
        r = datum.rank
        if L is None:
            L = ParameterSystem.equal(r)
        elif not isinstance(L, ParameterSystem):
            L = ParameterSystem(tuple(int(x) for x in L))
        L.validate(self.ap)
        self.params = L
        self.L = L.L
        self.budget = term_budget() if budget is None else budget
        self._Lx: dict[AffineElement, int] = {}
        self.cache: dict = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeAlgebra) and (self.datum, self.L) == (other.datum, other.L)

    def __hash__(self):
        return hash((self.datum, self.L))

    # -- constructors ---------------------------------------------------------------

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def one(self) -> HeckeElement:
        return HeckeElement(self, {(self.group.identity, 0): 1})

    def coerce(self, x) -> HeckeElement:
        if isinstance(x, HeckeElement):
            return x
        if isinstance(x, int):
            x = LaurentPoly(x)
        if isinstance(x, LaurentPoly):
            return HeckeElement(self, {(self.group.identity, e): c for e, c in x.items()})
        raise TypeError(f"cannot coerce {type(x).__name__} into the Hecke algebra")

    def T(self, x: AffineElement | int) -> HeckeElement:
        if isinstance(x, int):
            x = self.group.generators[x]
        return HeckeElement(self, {(x, 0): 1})

    def param_length(self, x: AffineElement) -> int:
        """L(x): sum of L over the letters of a reduced word."""
        val = self._Lx.get(x)
        if val is None:
            val = self._Lx[x] = sum(self.L[i] for i in self.group.reduced_letters(x))
        return val

    def T_tilde(self, x: AffineElement | int) -> HeckeElement:
        if isinstance(x, int):
            x = self.group.generators[x]
        return HeckeElement(self, {(x, -self.param_length(x)): 1})

    def from_terms(self, terms: dict[AffineElement, LaurentPoly]) -> HeckeElement:
        data = {}
        for x, p in terms.items():
            for e, c in p.items():
                data[(x, e)] = c
        return HeckeElement(self, data)

    # -- generator actions ----------------------------------------------------------

    def lgen(self, i: int, h: HeckeElement, power: int = 1, tilde: bool = False) -> HeckeElement:
        """T_i^power * h (power = +-1); with tilde, T~_i^power * h."""
        G = self.group
        L2 = 2 * self.L[i]
        shift = (-power * self.L[i]) if tilde else 0
        out: dict = {}
        for (x, e), c in h._c.items():
            y, up = G.lstep(i, x)
            e += shift
            if power == 1:
                if up:
                    _bump(out, (y, e), c)
                else:
                    _bump(out, (y, e + L2), c)
                    _bump(out, (x, e + L2), c)
                    _bump(out, (x, e), -c)
            else:
                if not up:
                    _bump(out, (y, e), c)
                else:
                    _bump(out, (y, e - L2), c)
                    _bump(out, (x, e - L2), c)
                    _bump(out, (x, e), -c)
        return HeckeElement(self, out)

    def rgen(self, h: HeckeElement, i: int, power: int = 1, tilde: bool = False) -> HeckeElement:
        """h * T_i^power (power = +-1); with tilde, h * T~_i^power."""
        G = self.group
        L2 = 2 * self.L[i]
        shift = (-power * self.L[i]) if tilde else 0
        out: dict = {}
        for (x, e), c in h._c.items():
            y, up = G.rstep(x, i)
            e += shift
            if power == 1:
                if up:
                    _bump(out, (y, e), c)
                else:
                    _bump(out, (y, e + L2), c)
                    _bump(out, (x, e + L2), c)
                    _bump(out, (x, e), -c)
            else:
                if not up:
                    _bump(out, (y, e), c)
                else:
                    _bump(out, (y, e - L2), c)
                    _bump(out, (x, e - L2), c)
                    _bump(out, (x, e), -c)
        return HeckeElement(self, out)

    def lomega(self, tau: AffineElement, h: HeckeElement) -> HeckeElement:
        return HeckeElement(self, {(tau * x, e): c for (x, e), c in h._c.items()})

    def romega(self, h: HeckeElement, tau: AffineElement) -> HeckeElement:
        return HeckeElement(self, {(x * tau, e): c for (x, e), c in h._c.items()})

    def left_word(self, letters, signs, h: HeckeElement, tilde: bool = False, omega=None) -> HeckeElement:
        """T_{i_1}^{e_1} ... T_{i_k}^{e_k} T_omega * h."""
        if omega is not None:
            h = self.lomega(omega, h)
        for i, s in zip(reversed(letters), reversed(signs)):
            h = self.lgen(i, h, s, tilde)
        return h

    def right_word(self, h: HeckeElement, letters, signs, tilde: bool = False, omega=None) -> HeckeElement:
        """h * T_{i_1}^{e_1} ... T_{i_k}^{e_k} T_omega."""
        for i, s in zip(letters, signs):
            h = self.rgen(h, i, s, tilde)
        if omega is not None:
            h = self.romega(h, omega)
        return h

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        G = self.group
        ga, gb = _group_terms(a), _group_terms(b)
        # expand whichever factor is cheaper to apply generator by generator
        cost_left = sum(G.length(x) + 1 for x in ga) * len(b._c)
        cost_right = sum(G.length(y) + 1 for y in gb) * len(a._c)
        out: dict = {}
        if cost_left <= cost_right:
            for x, poly in ga.items():
                letters, tau = G._reduced(x)
                prod = self.left_word(letters, (1,) * len(letters), b, omega=None if tau == G.identity else tau)
                _accumulate(out, prod, poly)
        else:
            for y, poly in gb.items():
                letters, tau = G._reduced(y)
                prod = self.right_word(a, letters, (1,) * len(letters), omega=None if tau == G.identity else tau)
                _accumulate(out, prod, poly)
        return HeckeElement(self, out)

    def t_inverse(self, i: int) -> HeckeElement:
        """T_i^-1 = q^-L T_i + (q^-L - 1)."""
        return self.lgen(i, self.one(), -1)

    def inverse_word_element(self, letters, signs, tilde=False, omega=None) -> HeckeElement:
        """Inverse of T_{i_1}^{e_1}...T_{i_k}^{e_k} T_omega."""
        h = self.one()
        if omega is not None:
            h = self.romega(h, omega.inverse())
        return self.right_word(h, tuple(reversed(letters)), tuple(-s for s in reversed(signs)), tilde)

    def T_tilde_inverse(self, x: AffineElement) -> HeckeElement:
        letters, tau = self.group._reduced(x)
        return self.inverse_word_element(letters, (1,) * len(letters), True, None if tau == self.group.identity else tau)

    # -- walks and the map Phi ---------------------------------------------------------

    def psi(self, word: Word, o: Orientation = STANDARD, start: AffineElement | None = None, tilde: bool = False) -> HeckeElement:
        """Signed product T_{i_1}^{e_1} ... T_{i_k}^{e_k} T_tau along word."""
        signs = self.ap.crossing_signs(word, o, start)
        tau = word.omega if word.omega is not None and word.omega != self.group.identity else None
        return self.right_word(self.one(), word.letters, signs, tilde, tau)

    def folding_image(self, i: int, sign: int) -> LaurentPoly:
        p = v_minus_vinv(self.L[i])
        return p if sign > 0 else -p

    def phi(self, x: WalkWord | Walk | WalkCombination) -> HeckeElement:
        if isinstance(x, WalkCombination):
            total = self.zero()
            for w, c in x.terms.items():
                total = total + self.phi(w).scale(c)
            return total
        if isinstance(x, Walk):
            x = x.word
        h = self.one()
        for st in x.steps:
            h = self.phi_step(h, st)
        if x.omega is not None:
            h = self.romega(h, x.omega)
        return h

    def phi_step(self, h: HeckeElement, st) -> HeckeElement:
        if st.kind == CROSSING:
            return self.rgen(h, st.i, st.sign, tilde=True)
        return h.scale(self.folding_image(st.i, st.sign))

    # -- the basis of non-folded walks ---------------------------------------------

    def walk_basis_element(self, x: AffineElement, o: Orientation = STANDARD) -> HeckeElement:
        w = self.group.reduced_word(x)
        return self.phi(self.walks.non_folded_walk(w, o))

    def expand_in_walk_basis(self, h: HeckeElement, o: Orientation = STANDARD) -> dict[AffineElement, LaurentPoly]:
        """Coefficients of h in the basis {Phi(p_w)}, p_w the non-folded walk along the
        greedy reduced word of w.  Triangular elimination by length."""
        G = self.group
        rest = h
        out: dict[AffineElement, LaurentPoly] = {}
        cache: dict[AffineElement, HeckeElement] = {}
        while not rest.is_zero():
            x = max(rest.support(), key=lambda y: (G.length(y), y))
            b = cache.get(x)
            if b is None:
                b = cache[x] = self.walk_basis_element(x, o)
            lead = b.coeff(x)
            c = rest.coeff(x).divide_by_unit(lead)
            out[x] = out.get(x, LaurentPoly()) + c
            rest = rest - b.scale(c)
        return {x: p for x, p in out.items() if p}

    def from_walk_basis(self, coeffs: dict[AffineElement, LaurentPoly], o: Orientation = STANDARD) -> HeckeElement:
        total = self.zero()
        for x, p in coeffs.items():
            total = total + self.walk_basis_element(x, o).scale(p)
        return total

    # -- serialization ---------------------------------------------------------------

    def from_dict(self, data: dict) -> HeckeElement:
        if data.get("basis") != "T":
            raise ValueError("only the T basis is supported")
        if tuple(data.get("params", self.L)) != self.L:
            raise ValueError("parameters do not match this algebra")
        terms = {}
        for t in data["terms"]:
            el = t["element"]
            x = AffineElement(tuple(tuple(r) for r in el["w_matrix"]), tuple(el["lambda"]))
            terms[x] = LaurentPoly.from_str_dict(t["coeff"])
        return self.from_terms(terms)

    def from_json(self, text: str) -> HeckeElement:
        return self.from_dict(json.loads(text))
