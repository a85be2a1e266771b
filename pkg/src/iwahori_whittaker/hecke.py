"""Finite Iwahori-Hecke algebra over Z[q, q^-1] and its two linear characters.

Multiplication follows the Iwahori-Matsumoto rules

    T_s T_w = T_{sw}                      if l(sw) > l(w)
    T_s T_w = q T_{sw} + (q - 1) T_w      otherwise

extended bilinearly.  ``HeckeElement`` is the sparse, general-purpose type.
The exhaustive multiplicativity check over all |W|^2 basis pairs uses a
dense integer-array route instead, since D4 has 36864 pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .laurent import LaurentInt
from .root_system import RootSystem, WeylElement, braid_order

ONE = LaurentInt.constant(1)
Q = LaurentInt.q()


class HeckeElement:
    __slots__ = ("rs", "support")

    def __init__(self, rs: RootSystem, support: Mapping[WeylElement, LaurentInt] | None = None):
        self.rs = rs
        self.support = {w: c for w, c in (support or {}).items() if c}

    @classmethod
    def basis(cls, w: WeylElement) -> "HeckeElement":
        return cls(w.rs, {w: ONE})

    @classmethod
    def zero(cls, rs: RootSystem) -> "HeckeElement":
        return cls(rs)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.support)
        for w, c in other.support.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.rs, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentInt.constant(-1))

    def scale(self, c: LaurentInt | int) -> "HeckeElement":
        return HeckeElement(self.rs, {w: c * v for w, v in self.support.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.support == other.support

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def __bool__(self):
        return bool(self.support)

    def coefficient(self, w: WeylElement) -> LaurentInt:
        return self.support.get(w, LaurentInt())

    def __repr__(self):
        body = " + ".join(
            f"({c})*T[{w.word_string() or 'e'}]"
            for w, c in sorted(self.support.items(), key=lambda kv: (kv[0].length, kv[0].reduced_word))
        )
        return f"HeckeElement({body or '0'})"


def _left_generator(i: int, h: HeckeElement) -> HeckeElement:
    s = h.rs.simple_reflections[i]
    out: dict[WeylElement, LaurentInt] = {}

    def add(w, c):
        if w in out:
            out[w] = out[w] + c
        else:
            out[w] = c

    for w, c in h.support.items():
        sw = s * w
        if sw.length > w.length:
            add(sw, c)
        else:
            add(sw, Q * c)
            add(w, (Q - 1) * c)
    return HeckeElement(h.rs, out)


def hecke_multiply(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    if h1.rs is not h2.rs:
        raise ValueError("Hecke elements belong to different root systems")
    result = HeckeElement.zero(h1.rs)
    for x, c in h1.support.items():
        # T_x T_y = T_{i_1} (T_{i_2} ( ... (T_{i_k} T_y)))
        part = h2
        for i in reversed(x.reduced_word):
            part = _left_generator(i - 1, part)
        result = result + part.scale(c)
    return result


@dataclass(frozen=True)
class HeckeCharacter:
    kind: str

    def __post_init__(self):
        if self.kind not in ("sign", "trivial"):
            raise ValueError(f"unknown Hecke character {self.kind!r}")

    @property
    def value_on_generator(self) -> LaurentInt:
        return LaurentInt.constant(-1) if self.kind == "sign" else Q


SIGN = HeckeCharacter("sign")
TRIVIAL = HeckeCharacter("trivial")


def character_value(rho: HeckeCharacter, w: WeylElement) -> LaurentInt:
    if rho.kind == "sign":
        return LaurentInt.constant(-1 if w.length % 2 else 1)
    return LaurentInt.q(w.length)


def apply_character(rho: HeckeCharacter, h: HeckeElement) -> LaurentInt:
    total = LaurentInt()
    for w, c in h.support.items():
        total = total + c * character_value(rho, w)
    return total


# dense route --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class _Tables:
    size: int
    width: int
    lengths: np.ndarray
    left: np.ndarray  # left[i, k] = index of s_i * w_k
    up: np.ndarray  # up[i, k] = l(s_i w_k) > l(w_k)
    parent: tuple[tuple[int, int], ...]  # (i, index of s_i x) for x != e, in length order


@lru_cache(maxsize=None)
def _tables(rs: RootSystem) -> _Tables:
    elems = rs.elements
    idx = rs.index
    lengths = np.array([w.length for w in elems], dtype=np.int64)
    left = np.empty((rs.rank, len(elems)), dtype=np.int64)
    for i, s in enumerate(rs.simple_reflections):
        for k, w in enumerate(elems):
            left[i, k] = idx[s * w]
    up = lengths[left] > lengths[None, :]
    parent = []
    for k, x in enumerate(elems):
        if k == 0:
            parent.append((-1, -1))
            continue
        i = next(i for i in range(rs.rank) if not up[i, k])
        parent.append((i, int(left[i, k])))
    return _Tables(len(elems), rs.w0.length + 2, lengths, left, up, tuple(parent))


def _dense_left_generator(tab: _Tables, i: int, h: np.ndarray) -> np.ndarray:
    up = tab.up[i]
    dest = tab.left[i]
    out = np.zeros_like(h)
    out[dest[up]] = h[up]
    down = ~up
    shifted = np.zeros_like(h[down])
    shifted[:, 1:] = h[down][:, :-1]
    out[dest[down]] += shifted
    out[down] += shifted - h[down]
    return out


def basis_products(rs: RootSystem, y: WeylElement) -> np.ndarray:
    """Array P with P[x, w, k] = coefficient of q^k T_w in T_x T_y, over all x.

    Products have polynomial coefficients in q of degree at most l(w0).
    """
    tab = _tables(rs)
    out = np.zeros((tab.size, tab.size, tab.width), dtype=np.int64)
    out[0, rs.index[y], 0] = 1
    for k in range(1, tab.size):
        i, par = tab.parent[k]
        out[k] = _dense_left_generator(tab, i, out[par])
    if out[:, :, -1].any():
        raise ArithmeticError("q-degree overflow in dense Hecke product")
    return out


def dense_to_element(rs: RootSystem, row: np.ndarray) -> HeckeElement:
    support = {}
    for k, w in enumerate(rs.elements):
        coeffs = {e: int(c) for e, c in enumerate(row[k]) if c}
        if coeffs:
            support[w] = LaurentInt(coeffs)
    return HeckeElement(rs, support)


def verify_character_multiplicative(rho: HeckeCharacter, rs: RootSystem) -> bool:
    """rho(T_x T_y) = rho(T_x) rho(T_y) for every pair of basis elements."""
    tab = _tables(rs)
    lengths = tab.lengths
    n = rs.w0.length
    for y in rs.elements:
        prods = basis_products(rs, y)
        ly = y.length
        if rho.kind == "sign":
            signs = np.where(lengths % 2, -1, 1)
            applied = np.einsum("w,xwk->xk", signs, prods)
            expected = np.zeros_like(applied)
            expected[:, 0] = np.where((lengths + ly) % 2, -1, 1)
        else:
            applied = np.zeros((tab.size, tab.width + n + 1), dtype=np.int64)
            for ell in range(n + 1):
                mask = lengths == ell
                if mask.any():
                    applied[:, ell : ell + tab.width] += prods[:, mask, :].sum(axis=1)
            expected = np.zeros_like(applied)
            expected[np.arange(tab.size), lengths + ly] = 1
        if not np.array_equal(applied, expected):
            return False
    return True


def verify_quadratic_relation(rs: RootSystem) -> bool:
    """(T_s - q)(T_s + 1) = 0 for every simple reflection."""
    e = HeckeElement.basis(rs.identity)
    for s in rs.simple_reflections:
        ts = HeckeElement.basis(s)
        if (ts - e.scale(Q)) * (ts + e):
            return False
    return True


def verify_braid_relations(rs: RootSystem) -> bool:
    gens = [HeckeElement.basis(s) for s in rs.simple_reflections]
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            m = braid_order(rs, i, j)
            lhs = HeckeElement.basis(rs.identity)
            rhs = HeckeElement.basis(rs.identity)
            for k in range(m):
                lhs = lhs * gens[i if k % 2 == 0 else j]
                rhs = rhs * gens[j if k % 2 == 0 else i]
            if lhs != rhs:
                return False
    return True


def eigenvector_coefficients(rho: HeckeCharacter, rs: RootSystem) -> dict[WeylElement, LaurentInt]:
    """Coefficients lambda_w of sum_w lambda_w f_w, normalized by lambda_e = 1."""
    if rho.kind == "sign":
        return {w: LaurentInt.q(-w.length, -1 if w.length % 2 else 1) for w in rs.elements}
    return {w: ONE for w in rs.elements}


def evaluation_at_identity(w: WeylElement, w_prime: WeylElement) -> LaurentInt:
    """X_w(f_{w'})(1): the q^{l(w)} coset representatives all land in cell w."""
    return LaurentInt.q(w.length) if w == w_prime else LaurentInt()


def verify_eigen_equation_at_identity(rho: HeckeCharacter, w: WeylElement) -> bool:
    coeffs = eigenvector_coefficients(rho, w.rs)
    lhs = LaurentInt()
    for w_prime, c in coeffs.items():
        lhs = lhs + c * evaluation_at_identity(w, w_prime)
    return lhs == character_value(rho, w) * coeffs[w.rs.identity]


def coset_count(w: WeylElement) -> LaurentInt:
    return LaurentInt.q(w.length)


def poincare_polynomial(rs: RootSystem) -> LaurentInt:
    counts: dict[int, int] = {}
    for w in rs.elements:
        counts[w.length] = counts.get(w.length, 0) + 1
    return LaurentInt(counts)
