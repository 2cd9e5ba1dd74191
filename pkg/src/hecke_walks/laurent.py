"""Sparse Laurent polynomials in one variable ``v`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            if a:
                s = c.get(int(e), 0) + int(a)
                if s:
                    c[int(e)] = s
                else:
                    c.pop(int(e), None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def v(cls, k: int = 1) -> LaurentPoly:
        return cls._raw({k: 1})

    @classmethod
    def from_str_dict(cls, d: Mapping[str, int]) -> LaurentPoly:
        return cls({int(k): int(a) for k, a in d.items()})

    # -- access ---------------------------------------------------------------

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def min_degree(self) -> int:
        return min(self._c)

    @property
    def max_degree(self) -> int:
        return max(self._c)

    def is_unit(self) -> bool:
        return len(self._c) == 1 and next(iter(self._c.values())) in (1, -1)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return LaurentPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise ZeroDivisionError("only units have negative powers")
            (e, a), = self._c.items()
            return LaurentPoly._raw({-e * -k: a ** (-k)})
        out = LaurentPoly._raw({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by v^k."""
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def divide_by_unit(self, unit: LaurentPoly) -> LaurentPoly:
        if not unit.is_unit():
            raise ZeroDivisionError(f"{unit} is not a unit")
        (e, a), = unit._c.items()
        return LaurentPoly._raw({k - e: b * a for k, b in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The involution v -> v^-1."""
        return LaurentPoly._raw({-e: a for e, a in self._c.items()})

    def evaluate(self, x):
        return sum(a * x**e for e, a in self._c.items())

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' + mono if mono else ''}"
            parts.append(("- " if a < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def v_minus_vinv(L: int = 1) -> LaurentPoly:
    """q^(L/2) - q^(-L/2) written in v."""
    if L == 0:
        return LaurentPoly()
    return LaurentPoly({L: 1, -L: -1})
