"""Coefficient rings for truncated series.

Two rings are provided: the integers (plain Python ``int``) and bivariate
polynomials in formal symbols ``a`` and ``b`` with integer coefficients.
Ring elements use ordinary Python operators, so series code never needs to
know which ring it is working over; the :class:`Ring` object only supplies
the identities, coercion and a tag that series compare before combining.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class BivarPoly:
    """Sparse polynomial in ``a`` and ``b`` with integer coefficients.

    Terms are stored as ``{(deg_a, deg_b): coeff}`` with zero coefficients
    pruned, so structural equality is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (da, db), c in (terms or {}).items():
            if da < 0 or db < 0:
                raise ValueError(f"negative exponent ({da}, {db})")
            if c:
                clean[(int(da), int(db))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def a(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def b(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = BivarPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, a: int, b: int) -> int:
        """Substitute integers for the symbols."""
        return sum(c * a**da * b**db for (da, db), c in self._terms.items())

    def __repr__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (da, db), c in sorted(self._terms.items()):
            mono = "".join(
                s if d == 1 else f"{s}^{d}" for s, d in (("a", da), ("b", db)) if d
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


class Ring:
    """Tag plus identities for one coefficient ring."""

    def __init__(self, name: str, zero, one, element_type: type):
        self.name = name
        self.zero = zero
        self.one = one
        self.element_type = element_type

    def coerce(self, x):
        if isinstance(x, self.element_type):
            return x
        if isinstance(x, int):
            return self.one * x if self.element_type is not int else int(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into ring {self.name}")

    # The abstract contract; elements already implement these as operators.
    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y) -> bool:
        return x == y

    def is_unit(self, x) -> bool:
        return x == self.one or x == -self.one

    def __repr__(self):
        return f"Ring({self.name})"


INT = Ring("ZZ", 0, 1, int)
BIVAR = Ring("ZZ[a,b]", BivarPoly(), BivarPoly.const(1), BivarPoly)


def coerce_all(ring: Ring, values: Iterable) -> tuple:
    return tuple(ring.coerce(v) for v in values)
