"""Brute-force Bruhat cell census for GL_n over F_p (type A_{n-1}).

Borel = upper-triangular matrices.  A permutation ``perm`` is stored in
0-based one-line notation: the permutation matrix has a 1 at
``(perm[j], j)``.  It corresponds to the Weyl element sending
``e_i - e_j`` to ``e_perm[i] - e_perm[j]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ConfigurationError, DomainError
from .root_system import RootSystem, WeylElement, build_root_system, inversion_set

Perm = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

WINDOW_N = (2, 3)
WINDOW_P = (2, 3, 5)


def _check_window(n: int, p: int) -> None:
    if n not in WINDOW_N or p not in WINDOW_P:
        raise ConfigurationError(f"(n, p) = ({n}, {p}) outside the oracle window {WINDOW_N} x {WINDOW_P}")


@dataclass(frozen=True)
class FiniteMatrix:
    n: int
    p: int
    entries: Matrix

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("entries must be an n x n array")
        object.__setattr__(self, "entries", rows)

    def __matmul__(self, other: "FiniteMatrix") -> "FiniteMatrix":
        n, p = self.n, self.p
        a, b = self.entries, other.entries
        return FiniteMatrix(
            n, p, tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))
        )

    def is_invertible(self) -> bool:
        return rank_mod_p([list(r) for r in self.entries], self.p) == self.n

    @classmethod
    def identity(cls, n: int, p: int) -> "FiniteMatrix":
        return cls(n, p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv % p
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def permutation_matrix(perm: Perm, p: int) -> FiniteMatrix:
    n = len(perm)
    m = [[0] * n for _ in range(n)]
    for j, i in enumerate(perm):
        m[i][j] = 1
    return FiniteMatrix(n, p, tuple(map(tuple, m)))


def bruhat_cell_of(m: FiniteMatrix) -> Perm:
    """The permutation w with m in B w B, read off the lower-left rank profile."""
    if not m.is_invertible():
        raise DomainError("matrix is singular mod p")
    n, p = m.n, m.p
    a = m.entries

    # r[i][j] = rank of rows i..n-1, columns 0..j-1 (with padding at the borders)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(1, n + 1):
            r[i][j] = rank_mod_p([list(a[k][:j]) for k in range(i, n)], p)
    perm = [None] * n
    for i in range(n):
        for j in range(n):
            if r[i][j + 1] - r[i + 1][j + 1] - r[i][j] + r[i + 1][j] == 1:
                perm[j] = i
    return tuple(perm)


def perm_length(perm: Perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def perm_from_weyl(w: WeylElement) -> Perm:
    n = w.rs.rank + 1
    perm = list(range(n))
    # w = s_{i_1} ... s_{i_k}; compose transpositions as functions, rightmost first
    for i in reversed(w.reduced_word):
        t = list(range(n))
        t[i - 1], t[i] = t[i], t[i - 1]
        perm = [t[x] for x in perm]
    return tuple(perm)


def weyl_from_perm(perm: Perm, rs: RootSystem) -> WeylElement:
    images = []
    for k in range(rs.rank):
        images.append(_root_of(perm[k], perm[k + 1], rs.rank))
    return WeylElement(tuple(images), rs)


def _root_of(a: int, b: int, rank: int) -> tuple[int, ...]:
    # e_a - e_b in the simple-root basis of A_rank
    lo, hi = min(a, b), max(a, b)
    sign = 1 if a < b else -1
    return tuple(sign if lo <= k < hi else 0 for k in range(rank))


def canonical_form(m: FiniteMatrix) -> Matrix:
    """Column-reduced representative of the coset m B."""
    n, p = m.n, m.p
    cols = [[m.entries[i][j] for i in range(n)] for j in range(n)]
    pivots: list[int] = []
    out = []
    for col in cols:
        col = col[:]
        for prev, piv in zip(out, pivots):
            f = col[piv]
            if f:
                col = [(x - f * y) % p for x, y in zip(col, prev)]
        piv = max(i for i in range(n) if col[i])
        inv = pow(col[piv], -1, p)
        col = [x * inv % p for x in col]
        out.append(col)
        pivots.append(piv)
    return tuple(tuple(out[j][i] for j in range(n)) for i in range(n))


def coset_representatives(n: int, p: int) -> Iterator[FiniteMatrix]:
    """Every canonical column-reduced representative of GL_n(F_p)/B, once."""
    for pivots in itertools.permutations(range(n)):
        free = []
        for j, piv in enumerate(pivots):
            for i in range(piv):
                if i not in pivots[:j]:
                    free.append((i, j))
        for values in itertools.product(range(p), repeat=len(free)):
            m = [[0] * n for _ in range(n)]
            for j, piv in enumerate(pivots):
                m[piv][j] = 1
            for (i, j), v in zip(free, values):
                m[i][j] = v
            yield FiniteMatrix(n, p, tuple(map(tuple, m)))


def flag_count(n: int, p: int) -> int:
    total = 1
    for k in range(1, n):
        total *= sum(p**i for i in range(k + 1))
    return total


@dataclass(frozen=True)
class CellCensus:
    n: int
    p: int
    counts: dict[Perm, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def expected(self) -> dict[Perm, int]:
        rs = build_root_system(f"A{self.n - 1}")
        return {perm_from_weyl(w): self.p**w.length for w in rs.elements}

    @property
    def passed(self) -> bool:
        return self.counts == self.expected() and self.total == flag_count(self.n, self.p)

    def report(self) -> dict:
        rs = build_root_system(f"A{self.n - 1}")
        expected = self.expected()
        perms = [(w.word_string(), perm_from_weyl(w)) for w in rs.elements]
        return {
            "n": self.n,
            "p": self.p,
            "census": {word: self.counts.get(perm, 0) for word, perm in perms},
            "expected": {word: expected[perm] for word, perm in perms},
            "pass": self.passed,
        }


def enumerate_cell_census(n: int, p: int) -> CellCensus:
    _check_window(n, p)
    counts: dict[Perm, int] = {}
    for m in coset_representatives(n, p):
        w = bruhat_cell_of(m)
        counts[w] = counts.get(w, 0) + 1
    return CellCensus(n, p, counts)


def root_subgroup(alpha: Sequence[int], t: int, n: int, p: int) -> FiniteMatrix:
    """x_alpha(t) for a positive root e_i - e_j of A_{n-1}."""
    support = [k for k, c in enumerate(alpha) if c]
    i, j = support[0], support[-1] + 1
    m = [[int(a == b) for b in range(n)] for a in range(n)]
    m[i][j] = t % p
    return FiniteMatrix(n, p, tuple(map(tuple, m)))


def coset_representatives_of_cell(w: WeylElement, p: int) -> list[FiniteMatrix]:
    n = w.rs.rank + 1
    roots = sorted(inversion_set(w))
    wm = permutation_matrix(perm_from_weyl(w), p)
    reps = []
    for ts in itertools.product(range(p), repeat=len(roots)):
        m = FiniteMatrix.identity(n, p)
        for alpha, t in zip(roots, ts):
            m = m @ root_subgroup(alpha, t, n, p)
        reps.append(m @ wm)
    return reps


def verify_coset_representatives(w: WeylElement, p: int) -> bool:
    """The p^l(w) products x_alpha(t_alpha) w lie in cell w and in distinct B-cosets."""
    _check_window(w.rs.rank + 1, p)
    reps = coset_representatives_of_cell(w, p)
    target = perm_from_weyl(w)
    if len(reps) != p**w.length:
        return False
    if any(bruhat_cell_of(m) != target for m in reps):
        return False
    return len({canonical_form(m) for m in reps}) == len(reps)
