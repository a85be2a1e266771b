"""w-dominance and the distinguished coweights d_w.

Torus elements are only ever represented through their coweight, and the
centre is trivial in the adjoint lattice, so the identities here are exact
equalities of integer vectors.
"""

from __future__ import annotations

from .root_system import Coweight, WeylElement, act_on_coweight

__all__ = [
    "Coweight",
    "is_dominant",
    "is_w_dominant",
    "d_w_coweight",
    "verify_tw_plus_structure",
    "verify_aux_identity",
]


def is_dominant(lam: Coweight) -> bool:
    # <alpha_i, lam> is just the i-th coordinate in the fundamental basis
    return all(m >= 0 for m in lam.coords)


def is_w_dominant(lam: Coweight, w: WeylElement) -> bool:
    return all(
        m >= (-1 if inverted else 0)
        for m, inverted in zip(lam.coords, w.inverted_simple, strict=True)
    )


def d_w_coweight(w: WeylElement) -> Coweight:
    """The coweight pairing to -1 with simple roots inverted by w^-1 and to 0 otherwise."""
    return Coweight(tuple(-1 if inverted else 0 for inverted in w.inverted_simple))


def verify_tw_plus_structure(w: WeylElement, lam: Coweight) -> bool:
    """T_w^+ = d_w T^+, tested on a single coweight."""
    return is_w_dominant(lam, w) == is_dominant(lam - d_w_coweight(w))


def verify_aux_identity(w: WeylElement) -> bool:
    """d_{w0 w} = w0 . d_w + d_{w0} in the adjoint coweight lattice."""
    w0 = w.rs.w0
    lhs = d_w_coweight(w0 * w)
    rhs = act_on_coweight(w0, d_w_coweight(w)) + d_w_coweight(w0)
    return lhs == rhs
