"""Root data of split adjoint groups and their Weyl groups.

Conventions
-----------
Roots are integer tuples in the simple-root basis.  Coweights live in the
fundamental-coweight basis, so ``pairing(alpha_i, varpi_j) = delta_ij``.

``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>`` and therefore
``s_i(alpha_j) = alpha_j - cartan_matrix[i][j] * alpha_i``.

A Weyl element is stored as the tuple of images of the simple roots.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import ConfigurationError, DomainError

Root = tuple[int, ...]

SUPPORTED_RANKS = {
    "A": range(1, 5),
    "B": range(2, 4),
    "C": range(2, 4),
    "D": range(4, 5),
    "G": range(2, 3),
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        allowed = SUPPORTED_RANKS.get(self.family)
        if allowed is None or self.rank not in allowed:
            raise ConfigurationError(f"unsupported Cartan type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Za-z])(\d+)\s*", text or "")
        if not m:
            raise ConfigurationError(f"malformed Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if ct.family == "D":
        # Bourbaki labelling: node 2 (index 1) is the branch point
        for i, j in [(0, 1), (1, 2), (1, 3)]:
            a[i][j] = a[j][i] = -1
    else:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if ct.family == "B":
            # alpha_n short
            a[n - 1][n - 2] = -2
        elif ct.family == "C":
            # alpha_n long
            a[n - 2][n - 1] = -2
        elif ct.family == "G":
            # alpha_1 short, alpha_2 long
            a[0][1] = -3
    return tuple(tuple(row) for row in a)


def _is_positive(r: Root) -> bool:
    return any(r) and all(c >= 0 for c in r)


def _is_negative(r: Root) -> bool:
    return any(r) and all(c <= 0 for c in r)


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    two_rho: Root

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def roots(self) -> frozenset[Root]:
        return frozenset(self.positive_roots) | frozenset(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def reflect(self, i: int, r: Root) -> Root:
        a = self.cartan_matrix[i]
        k = sum(a[j] * c for j, c in enumerate(r))
        out = list(r)
        out[i] -= k
        return tuple(out)

    @cached_property
    def identity(self) -> "WeylElement":
        return WeylElement(self.simple_roots, self)

    @cached_property
    def simple_reflections(self) -> tuple["WeylElement", ...]:
        return tuple(
            WeylElement(tuple(self.reflect(i, a) for a in self.simple_roots), self)
            for i in range(self.rank)
        )

    def s(self, i: int) -> "WeylElement":
        """Simple reflection with 1-based index ``i``."""
        if not 1 <= i <= self.rank:
            raise DomainError(f"simple index {i} out of range 1..{self.rank}")
        return self.simple_reflections[i - 1]

    @cached_property
    def elements(self) -> tuple["WeylElement", ...]:
        # BFS by right multiplication with simple reflections
        seen = {self.identity: None}
        order = [self.identity]
        queue = deque(order)
        while queue:
            w = queue.popleft()
            for s in self.simple_reflections:
                ws = compose(w, s)
                if ws not in seen:
                    seen[ws] = None
                    order.append(ws)
                    queue.append(ws)
        order.sort(key=lambda w: w.length)
        return tuple(order)

    @cached_property
    def index(self) -> dict["WeylElement", int]:
        return {w: k for k, w in enumerate(self.elements)}

    @cached_property
    def w0(self) -> "WeylElement":
        return longest_element(self)

    def word(self, indices: Iterable[int]) -> "WeylElement":
        w = self.identity
        for i in indices:
            w = compose(w, self.s(i))
        return w

    def parse_word(self, text: str) -> "WeylElement":
        text = (text or "").strip()
        if not text:
            return self.identity
        try:
            indices = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ConfigurationError(f"malformed Weyl word {text!r}") from None
        for i in indices:
            if not 1 <= i <= self.rank:
                raise ConfigurationError(f"simple index {i} out of range for {self.type}")
        return self.word(indices)

    def __repr__(self):
        return f"RootSystem({self.type})"


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    a = cartan_matrix(ct)
    n = ct.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def refl(i, r):
        k = sum(a[i][j] * c for j, c in enumerate(r))
        out = list(r)
        out[i] -= k
        return tuple(out)

    found = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(n):
            x = refl(i, r)
            if x not in found:
                found.add(x)
                queue.append(x)
    positive = tuple(sorted((r for r in found if _is_positive(r)), key=lambda r: (sum(r), r)))
    two_rho = tuple(sum(r[i] for r in positive) for i in range(n))
    return RootSystem(ct, a, positive, two_rho)


def build_root_system(ct: CartanType | str) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct)


@dataclass(frozen=True)
class WeylElement:
    images: tuple[Root, ...]
    rs: RootSystem = field(compare=False, repr=False)

    def __call__(self, r: Root) -> Root:
        return _apply(self, r)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return compose(self, other)

    @cached_property
    def length(self) -> int:
        return sum(1 for r in self.rs.positive_roots if _is_negative(_apply(self, r)))

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """1-based indices i_1..i_k with w = s_{i_1} ... s_{i_k}."""
        descents = []
        w = self
        while w.length:
            i = next(k for k, a in enumerate(w.images) if _is_negative(a))
            descents.append(i + 1)
            w = compose(w, w.rs.simple_reflections[i])
        return tuple(reversed(descents))

    @cached_property
    def inverse(self) -> "WeylElement":
        return self.rs.word(reversed(self.reduced_word))

    @cached_property
    def inverted_simple(self) -> tuple[bool, ...]:
        """Flag i is set when w^-1(alpha_i) is negative."""
        inv = self.inverse
        return tuple(_is_negative(a) for a in inv.images)

    def word_string(self) -> str:
        return ",".join(map(str, self.reduced_word))

    def __repr__(self):
        return f"W({self.rs.type}:{self.word_string() or 'e'})"


def _apply(w: WeylElement, r: Root) -> Root:
    n = len(r)
    out = [0] * n
    for c, img in zip(r, w.images):
        if c:
            for k in range(n):
                out[k] += c * img[k]
    return tuple(out)


def act_on_root(w: WeylElement, alpha: Root) -> Root:
    alpha = tuple(alpha)
    if alpha not in w.rs.roots:
        raise DomainError(f"{alpha} is not a root of {w.rs.type}")
    return _apply(w, alpha)


def compose(w: WeylElement, v: WeylElement) -> WeylElement:
    return WeylElement(tuple(_apply(w, img) for img in v.images), w.rs)


def length(w: WeylElement) -> int:
    return w.length


def inversion_set(w: WeylElement) -> frozenset[Root]:
    """Positive roots alpha with w^-1(alpha) negative."""
    inv = w.inverse
    return frozenset(r for r in w.rs.positive_roots if _is_negative(_apply(inv, r)))


def longest_element(rs: RootSystem) -> WeylElement:
    # the unique element sending every simple root to a negative root
    w = rs.identity
    while True:
        for i, img in enumerate(w.images):
            if _is_positive(img):
                w = compose(w, rs.simple_reflections[i])
                break
        else:
            return w


def enumerate_weyl_group(rs: RootSystem) -> list[WeylElement]:
    return list(rs.elements)


def is_positive_root(r: Root) -> bool:
    return _is_positive(tuple(r))


def is_negative_root(r: Root) -> bool:
    return _is_negative(tuple(r))


@dataclass(frozen=True)
class Coweight:
    """Element of the adjoint coweight lattice in the basis of fundamental coweights."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Coweight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, i: int, rank: int) -> "Coweight":
        """varpi_i^vee with 1-based ``i``."""
        return cls(tuple(int(k == i - 1) for k in range(rank)))

    @classmethod
    def parse(cls, text: str) -> "Coweight":
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise ConfigurationError(f"malformed coweight {text!r}") from None

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "Coweight":
        return Coweight(tuple(k * a for a in self.coords))

    def serialize(self) -> str:
        return ",".join(map(str, self.coords))

    def __iter__(self):
        return iter(self.coords)


def pairing(alpha: Sequence[int], lam: Coweight) -> int:
    return sum(c * m for c, m in zip(alpha, lam.coords, strict=True))


def act_on_coweight(w: WeylElement, lam: Coweight) -> Coweight:
    inv = w.inverse
    return Coweight(tuple(pairing(inv.images[i], lam) for i in range(w.rs.rank)))


def braid_order(rs: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j (0-based indices)."""
    prod = rs.cartan_matrix[i][j] * rs.cartan_matrix[j][i]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod] if i != j else 1


def supported_types() -> list[CartanType]:
    return [CartanType(f, r) for f, ranks in SUPPORTED_RANKS.items() for r in ranks]
