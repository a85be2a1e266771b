"""Exhaustive identity suites for one Cartan type.

Each suite returns a ``SuiteResult`` with the number of instances checked and
the first few failing instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import dominance, hecke, whittaker
from .dominance import d_w_coweight, is_dominant, is_w_dominant
from .root_system import (
    Coweight,
    RootSystem,
    act_on_coweight,
    act_on_root,
    inversion_set,
    pairing,
)

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, instance: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_REPORTED:
            self.failures.append(instance())

    def to_json(self) -> dict:
        return {"checked": self.checked, "failed": len(self.failures), "failures": self.failures}


def _w(w) -> str:
    return f"w=[{w.word_string()}]"


def suite_root_system(rs: RootSystem) -> SuiteResult:
    res = SuiteResult("root_system")
    roots = sorted(rs.roots)
    for w in rs.elements:
        for r in roots:
            res.check(act_on_root(w, r) in rs.roots, lambda: f"closure {_w(w)} root={r}")
        for s in rs.simple_reflections:
            res.check(abs((s * w).length - w.length) == 1, lambda: f"exchange {_w(w)}")
        res.check(
            len(inversion_set(w)) == w.length == w.inverse.length,
            lambda: f"inversion count {_w(w)}",
        )
        for i in range(rs.rank):
            lam = Coweight.fundamental(i + 1, rs.rank)
            for r in rs.positive_roots:
                res.check(
                    pairing(act_on_root(w, r), act_on_coweight(w, lam)) == pairing(r, lam),
                    lambda: f"pairing invariance {_w(w)} root={r} lam={lam.coords}",
                )
    w0 = rs.w0
    res.check(w0.length == len(rs.positive_roots) and (w0 * w0) == rs.identity, lambda: "longest element")
    return res


def suite_dominance(rs: RootSystem, radius: int = 3) -> SuiteResult:
    res = SuiteResult("dominance")
    box = list(whittaker.coweight_box(rs.rank, radius))
    for w in rs.elements:
        d = d_w_coweight(w)
        res.check(
            is_w_dominant(d, w) and (is_dominant(d) == (w == rs.identity)),
            lambda: f"d_w boundary {_w(w)}",
        )
        res.check(dominance.verify_aux_identity(w), lambda: f"aux identity {_w(w)}")
        for lam in box:
            res.check(dominance.verify_tw_plus_structure(w, lam), lambda: f"T_w^+ = d_w T^+ {_w(w)} lam={lam.coords}")
    return res


def suite_aux_identity(rs: RootSystem) -> SuiteResult:
    res = SuiteResult("aux_identity")
    for w in rs.elements:
        res.check(dominance.verify_aux_identity(w), lambda: f"aux identity {_w(w)}")
    return res


def suite_hecke(rs: RootSystem) -> SuiteResult:
    res = SuiteResult("hecke")
    res.check(hecke.verify_quadratic_relation(rs), lambda: "quadratic relation")
    res.check(hecke.verify_braid_relations(rs), lambda: "braid relations")
    for rho in (hecke.SIGN, hecke.TRIVIAL):
        res.check(hecke.verify_character_multiplicative(rho, rs), lambda: f"{rho.kind} character multiplicativity")
    return res


def suite_eigen(rs: RootSystem) -> SuiteResult:
    res = SuiteResult("eigen_at_identity")
    for rho in (hecke.SIGN, hecke.TRIVIAL):
        for w in rs.elements:
            res.check(hecke.verify_eigen_equation_at_identity(rho, w), lambda: f"{rho.kind} {_w(w)}")
    return res


def suite_whittaker(rs: RootSystem, radius: int = 2, support_radius: int = 3) -> SuiteResult:
    res = SuiteResult("whittaker")
    box = list(whittaker.coweight_box(rs.rank, radius))
    for w in rs.elements:
        for lam in box:
            if is_dominant(lam):
                res.check(whittaker.verify_permlem(lam, w), lambda: f"cell recursion {_w(w)} lam={lam.coords}")
            res.check(whittaker.verify_star_star(lam, w), lambda: f"cell-to-diagonal relation {_w(w)} lam={lam.coords}")
        res.check(
            not whittaker.eval_whittaker(d_w_coweight(w), w).is_zero(),
            lambda: f"nonvanishing at d_w {_w(w)}",
        )
    for lam in whittaker.coweight_box(rs.rank, support_radius):
        for w in rs.elements:
            res.check(whittaker.support_check(lam, w), lambda: f"support {_w(w)} lam={lam.coords}")
    e = rs.identity
    for lam in box:
        expected = whittaker.chi_delta(rs, lam) if is_dominant(lam) else 0
        res.check(whittaker.eval_whittaker(lam, e) == expected, lambda: f"diagonal lam={lam.coords}")
    # translation by dominant mu, starting from a w-dominant lam
    dominant_shifts = [mu for mu in whittaker.coweight_box(rs.rank, 1) if is_dominant(mu)]
    small_box = list(whittaker.coweight_box(rs.rank, 1))
    for mu in dominant_shifts:
        cd = whittaker.chi_delta(rs, mu)
        for w in rs.elements:
            for lam in small_box:
                if not is_w_dominant(lam, w):
                    continue
                res.check(
                    whittaker.eval_whittaker(lam + mu, w) == cd * whittaker.eval_whittaker(lam, w),
                    lambda: f"translation {_w(w)} lam={lam.coords} mu={mu.coords}",
                )
    return res


def suite_parahoric(rs: RootSystem) -> SuiteResult:
    res = SuiteResult("parahoric")
    for i in range(1, rs.rank + 1):
        try:
            ok = whittaker.parahoric_vanishing_witness(rs, i).holds
        except AssertionError:
            ok = False
        res.check(ok, lambda: f"witness s_{i}")
    return res


SUITES: dict[str, Callable[[RootSystem], SuiteResult]] = {
    "root_system": suite_root_system,
    "dominance": suite_dominance,
    "hecke": suite_hecke,
    "eigen_at_identity": suite_eigen,
    "whittaker": suite_whittaker,
    "parahoric": suite_parahoric,
}


def run_all(rs: RootSystem, names: Iterable[str] | None = None) -> list[SuiteResult]:
    return [SUITES[name](rs) for name in (names or SUITES)]
