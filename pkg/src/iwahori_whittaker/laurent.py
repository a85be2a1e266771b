"""Sparse Laurent polynomials with integer coefficients.

A value is a dict mapping exponent tuples to nonzero ints.  Two concrete
rings are used throughout the package:

* ``LaurentInt``     -- Z[q, q^-1]
* ``WhittakerValue`` -- Z[q^+-1, z_1^+-1, ..., z_r^+-1]; exponent tuples are
  ``(q_exp, z_1, ..., z_r)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

_MINUS = "−"
_DOT = "·"


class Laurent:
    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], nvars: int):
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    def _new(self, terms: dict[Exponent, int]):
        return type(self)._raw(terms, self.nvars)

    @classmethod
    def constant(cls, c: int, nvars: int = 1):
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1):
        exp = tuple(exp)
        return cls._raw({exp: c} if c else {}, len(exp))

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.nvars != self.nvars:
                raise ValueError("cannot combine Laurent polynomials in different rings")
            return other
        if isinstance(other, int):
            return self.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials with coefficient +-1 are invertible")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only monomials with coefficient +-1 are invertible")
            return self._new({tuple(n * x for x in e): c ** (-n)})
        result = self.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other, self.nvars)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        """Specialize every variable to a nonzero rational."""
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        vals = [Fraction(v) for v in values]
        if any(v == 0 for v in vals):
            raise ValueError("Laurent variables must be specialized to nonzero values")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(vals, e):
                term *= v ** k
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def __repr__(self):
        return f"{type(self).__name__}({self.sorted_terms()!r})"


class LaurentInt(Laurent):
    """Element of Z[q, q^-1]."""

    __slots__ = ()

    def __init__(self, terms: Mapping[int, int] | None = None):
        super().__init__({(e,): c for e, c in (terms or {}).items()}, 1)

    @classmethod
    def q(cls, k: int = 1, c: int = 1) -> "LaurentInt":
        return cls._raw({(k,): c} if c else {}, 1)

    @classmethod
    def constant(cls, c: int, nvars: int = 1) -> "LaurentInt":
        return cls._raw({(0,): c} if c else {}, 1)

    def coefficients(self) -> dict[int, int]:
        return {e[0]: c for e, c in self.terms.items()}

    def serialize(self) -> str:
        """Canonical form ``c*q^e`` joined by ``+`` in ascending exponent order."""
        if not self.terms:
            return "0"
        return "+".join(f"{c}*q^{e[0]}" for e, c in self.sorted_terms())

    @classmethod
    def parse(cls, text: str) -> "LaurentInt":
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        # split on '+' that separates terms, not on the sign of an exponent
        for chunk in text.split("+"):
            coeff, _, exp = chunk.partition("*q^")
            if not _:
                raise ValueError(f"malformed term {chunk!r}")
            e = int(exp)
            terms[e] = terms.get(e, 0) + int(coeff)
        return cls(terms)

    def __str__(self):
        return self.serialize()


class WhittakerValue(Laurent):
    """Element of Z[q^+-1, z_1^+-1, ..., z_r^+-1] (first exponent is q)."""

    __slots__ = ()

    @property
    def rank(self) -> int:
        return self.nvars - 1

    @classmethod
    def zero(cls, rank: int) -> "WhittakerValue":
        return cls._raw({}, rank + 1)

    @classmethod
    def one(cls, rank: int) -> "WhittakerValue":
        return cls._raw({(0,) * (rank + 1): 1}, rank + 1)

    @classmethod
    def term(cls, q_exp: int, z_exps: Sequence[int], c: int = 1) -> "WhittakerValue":
        return cls.monomial((q_exp, *z_exps), c)

    def specialize(self, q: Fraction | int, z: Sequence[Fraction | int]) -> Fraction:
        return self.evaluate([q, *z])

    def ordered_terms(self) -> list[tuple[Exponent, int]]:
        # total q-exponent first, then z-exponents lexicographically
        return sorted(self.terms.items(), key=lambda item: (item[0][0], item[0][1:]))

    def to_json(self) -> dict:
        return {"terms": [{"q": e[0], "z": list(e[1:]), "c": c} for e, c in self.ordered_terms()]}

    @classmethod
    def from_json(cls, data: Mapping, rank: int) -> "WhittakerValue":
        terms: dict[Exponent, int] = {}
        for t in data["terms"]:
            e = (int(t["q"]), *map(int, t["z"]))
            terms[e] = terms.get(e, 0) + int(t["c"])
        return cls(terms, rank + 1)

    def render(self) -> str:
        """Human form, e.g. ``−z1^2·q^−3``."""
        if not self.terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.ordered_terms()):
            sign = _MINUS if c < 0 else ("+" if idx else "")
            factors = [f"z{i}" + _power(k) for i, k in enumerate(e[1:], start=1) if k]
            if e[0]:
                factors.append("q" + _power(e[0]))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = _DOT.join(factors)
            else:
                body = _DOT.join([str(mag), *factors])
            pieces.append((" " if idx else "") + sign + (" " if idx else "") + body)
        return "".join(pieces)

    def __str__(self):
        return self.render()


def _power(k: int) -> str:
    if k == 1:
        return ""
    return "^" + (f"{_MINUS}{-k}" if k < 0 else str(k))


def laurent_sum(values: Iterable[Laurent], zero: Laurent) -> Laurent:
    total = zero
    for v in values:
        total = total + v
    return total
