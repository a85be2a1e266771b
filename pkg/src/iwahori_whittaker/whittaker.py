"""Exact Iwahori-spherical Whittaker function of the Steinberg representation.

On the cell of ``varpi^lam w`` the function is

    W(lam, w) = chi(lam) * delta_B(lam) * (-q)^(-l(w))   if lam is w-dominant
              = 0                                        otherwise

with ``chi(lam) = prod z_i^{m_i}`` (Satake variables on fundamental
coweights) and ``delta_B(lam) = q^(-<2 rho, lam>)``.  Values live in
Z[q^+-1, z^+-1]; identities with inverses are checked after clearing
denominators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .dominance import d_w_coweight, is_dominant, is_w_dominant
from .errors import ConfigurationError, DomainError
from .laurent import WhittakerValue
from .root_system import Coweight, RootSystem, WeylElement, pairing


@dataclass(frozen=True)
class SatakeSpec:
    rank: int
    z: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.z is not None:
            if len(self.z) != self.rank:
                raise ConfigurationError(f"need {self.rank} Satake values, got {len(self.z)}")
            if any(Fraction(v) == 0 for v in self.z):
                raise ConfigurationError("Satake values must be nonzero")

    def specialize(self, value: WhittakerValue, q: Fraction | int) -> Fraction:
        if self.z is None:
            raise ConfigurationError("no numeric Satake assignment to specialize with")
        return value.specialize(q, self.z)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def chi_delta(rs: RootSystem, lam: Coweight) -> WhittakerValue:
    return WhittakerValue.term(-pairing(rs.two_rho, lam), lam.coords)


def eval_whittaker(lam: Coweight, w: WeylElement) -> WhittakerValue:
    rs = w.rs
    if not is_w_dominant(lam, w):
        return WhittakerValue.zero(rs.rank)
    ell = w.length
    return WhittakerValue.term(-pairing(rs.two_rho, lam) - ell, lam.coords, _sign(ell))


def verify_permlem(lam: Coweight, w: WeylElement) -> bool:
    """W(lam, w) = (-q)^(-l(w)) W(lam, e) for dominant lam."""
    if not is_dominant(lam):
        raise DomainError(f"{lam.coords} is not dominant")
    rs = w.rs
    ell = w.length
    factor = WhittakerValue.term(-ell, (0,) * rs.rank, _sign(ell))
    return eval_whittaker(lam, w) == factor * eval_whittaker(lam, rs.identity)


def verify_star_star(lam: Coweight, w: WeylElement) -> bool:
    """(-q)^l(w) W(-d_w, e) W(lam, w) = W(lam - d_w, e), cleared of inverses."""
    rs = w.rs
    d = d_w_coweight(w)
    e = rs.identity
    ell = w.length
    factor = WhittakerValue.term(ell, (0,) * rs.rank, _sign(ell))
    lhs = factor * eval_whittaker(-d, e) * eval_whittaker(lam, w)
    rhs = eval_whittaker(lam - d, e)
    return lhs == rhs


def support_check(lam: Coweight, w: WeylElement) -> bool:
    return (not eval_whittaker(lam, w).is_zero()) == is_w_dominant(lam, w)


@dataclass(frozen=True)
class ParahoricWitness:
    index: int
    at_cell: WhittakerValue  # W(d_s s)
    at_diagonal: WhittakerValue  # W(d_s)

    @property
    def holds(self) -> bool:
        return not self.at_cell.is_zero() and self.at_diagonal.is_zero()


def parahoric_vanishing_witness(rs: RootSystem, i: int) -> ParahoricWitness:
    """Invariance under s_i would force W(d_s s) = W(d_s); the pair shows it cannot."""
    s = rs.s(i)
    d = d_w_coweight(s)
    witness = ParahoricWitness(i, eval_whittaker(d, s), eval_whittaker(d, rs.identity))
    if not witness.holds:
        raise AssertionError(f"parahoric witness fails for s_{i}: {witness}")
    return witness


def coweight_box(rank: int, radius: int) -> Iterator[Coweight]:
    if radius < 0:
        raise ConfigurationError("radius must be non-negative")
    for coords in itertools.product(range(-radius, radius + 1), repeat=rank):
        yield Coweight(coords)


@dataclass(frozen=True)
class TableRow:
    coweight: Coweight
    w: WeylElement
    value: WhittakerValue

    def to_json(self) -> dict:
        return {
            "coweight": list(self.coweight.coords),
            "weyl_word": list(self.w.reduced_word),
            "value": self.value.to_json(),
        }


def whittaker_table(rs: RootSystem, radius: int) -> list[TableRow]:
    return [
        TableRow(lam, w, eval_whittaker(lam, w))
        for lam in coweight_box(rs.rank, radius)
        for w in rs.elements
    ]


def specialize(value: WhittakerValue, q: Fraction | int, z: Sequence[Fraction | int]) -> Fraction:
    return value.specialize(q, z)
