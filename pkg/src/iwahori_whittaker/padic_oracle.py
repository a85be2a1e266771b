"""Direct evaluation of the Jacquet-Whittaker integral on PGL_2(Q_p).

The integrand is phi^-(w0 x(t) g) psi-bar(t) with

    phi^- = f_e - p^-1 f_s,    f_w(b w j) = (z p^delta_sign)^(v(b11) - v(b22))

so the default ``delta_sign = -1`` realizes delta_B(diag(a, b)) = |a/b|.
psi has conductor Z_p: psi(t) = exp(2 pi i {t}_p).

Group arithmetic is exact.  The Riemann sum runs over representatives of
p^shell_min Z_p / p^depth Z_p with weight p^-depth; only the character
values are floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigurationError, DomainError

INF = math.inf


def valuation(x: Fraction | int, p: int) -> float | int:
    x = Fraction(x)
    if x == 0:
        return INF
    return _ival(x.numerator, p) - _ival(x.denominator, p)


def _ival(n: int, p: int) -> int:
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class PAdicRational:
    value: Fraction
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def valuation(self) -> float | int:
        return valuation(self.value, self.p)

    @property
    def abs(self) -> Fraction:
        v = self.valuation
        return Fraction(0) if v == INF else Fraction(self.p) ** (-v)

    def fractional_part(self) -> Fraction:
        """{x}_p in [0, 1) with x - {x}_p in Z_(p)."""
        num, den = self.value.numerator, self.value.denominator
        k = _ival(den, self.p)
        if k == 0:
            return Fraction(0)
        pk = self.p**k
        unit = den // pk
        return Fraction(num * pow(unit, -1, pk) % pk, pk)

    def _lift(self, other):
        if isinstance(other, PAdicRational):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other.value
        return Fraction(other)

    def __add__(self, other):
        return PAdicRational(self.value + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PAdicRational(self.value - self._lift(other), self.p)

    def __rsub__(self, other):
        return PAdicRational(self._lift(other) - self.value, self.p)

    def __mul__(self, other):
        return PAdicRational(self.value * self._lift(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return PAdicRational(self.value / self._lift(other), self.p)

    def __neg__(self):
        return PAdicRational(-self.value, self.p)


@dataclass(frozen=True)
class GroupElement2:
    """Invertible 2x2 rational matrix, viewed in PGL_2(Q_p)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise DomainError("matrix is singular")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "GroupElement2") -> "GroupElement2":
        return GroupElement2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.p,
        )

    def entry(self, name: str) -> PAdicRational:
        return PAdicRational(getattr(self, name), self.p)

    def projectively_equal(self, o: "GroupElement2") -> bool:
        return self.a * o.d == self.d * o.a and self.a * o.b == self.b * o.a and self.a * o.c == self.c * o.a \
            and self.b * o.c == self.c * o.b and self.b * o.d == self.d * o.b and self.c * o.d == self.d * o.c

    @classmethod
    def identity(cls, p: int) -> "GroupElement2":
        return cls(1, 0, 0, 1, p)

    @classmethod
    def diag(cls, x, y, p: int) -> "GroupElement2":
        return cls(x, 0, 0, y, p)

    @classmethod
    def weyl(cls, w: str, p: int) -> "GroupElement2":
        if w == "e":
            return cls.identity(p)
        if w == "s":
            return cls(0, -1, 1, 0, p)
        raise ConfigurationError(f"Weyl element must be 'e' or 's', got {w!r}")

    @classmethod
    def unipotent(cls, t, p: int) -> "GroupElement2":
        return cls(1, t, 0, 1, p)

    @classmethod
    def torus_cell(cls, m: int, w: str, p: int) -> "GroupElement2":
        """diag(p^m, 1) times the Weyl representative of ``w``."""
        return cls.diag(Fraction(p) ** m, 1, p) @ cls.weyl(w, p)


@dataclass(frozen=True)
class IwasawaData:
    a1: int
    a2: int
    cell: str
    b: GroupElement2
    k: GroupElement2


def iwasawa_decompose(g: GroupElement2) -> IwasawaData:
    """g = b k with b upper triangular and k in GL_2(Z_p), det k = 1."""
    p = g.p
    vc, vd = valuation(g.c, p), valuation(g.d, p)
    if vd <= vc:
        r = g.c / g.d
        k = GroupElement2(1, 0, r, 1, p)
        b = GroupElement2(g.det / g.d, g.b, 0, g.d, p)
    else:
        r = g.d / g.c
        k = GroupElement2(0, -1, 1, r, p)
        b = GroupElement2(g.det / g.c, g.a, 0, g.c, p)
    cell = "e" if valuation(k.c, p) >= 1 else "s"
    return IwasawaData(int(valuation(b.a, p)), int(valuation(b.d, p)), cell, b, k)


def _check_z(z) -> Fraction:
    z = Fraction(z)
    if z == 0:
        raise ConfigurationError("z must be nonzero")
    return z


def casselman_f(w: str, g: GroupElement2, z, p: int, delta_sign: int = -1) -> Fraction:
    z = _check_z(z)
    data = iwasawa_decompose(g)
    if data.cell != w:
        return Fraction(0)
    return (z * Fraction(p) ** delta_sign) ** (data.a1 - data.a2)


def phi_minus(g: GroupElement2, z, p: int, delta_sign: int = -1) -> Fraction:
    return casselman_f("e", g, z, p, delta_sign) - Fraction(1, p) * casselman_f("s", g, z, p, delta_sign)


# Jacquet integral ---------------------------------------------------------


def default_window(g: GroupElement2) -> tuple[int, int]:
    """(shell_min, depth) past which the Riemann sum is exact.

    Shells v(t) < min(v(a) - v(c), v(b) - v(d)) carry a constant integrand and
    cancel against psi once v(t) <= -2.  The integrand is constant on cosets
    of p^depth Z_p once depth exceeds v(det g) - min v(g_ij) - min(v(c), v(d)).
    """
    p = g.p
    va, vb, vc, vd = (valuation(x, p) for x in (g.a, g.b, g.c, g.d))
    candidates = [-1]
    if vc != INF:
        candidates.append(va - vc)
    if vd != INF:
        candidates.append(vb - vd)
    shell_min = int(min(candidates))
    vdet = valuation(g.det, p)
    depth = int(max(0, vdet - min(va, vb, vc, vd) - min(vc, vd) + 1))
    return shell_min, depth


@lru_cache(maxsize=4096)
def _profile(g: GroupElement2, shell_min: int, depth: int) -> tuple[tuple[tuple[str, int], complex], ...]:
    """Sum of psi-bar(t) p^-depth grouped by (cell, v(b11) - v(b22)) of w0 x(t) g."""
    p = g.p
    if depth < shell_min:
        raise ConfigurationError("depth must be at least shell_min")
    # bottom row of w0 x(t) g is (a + t c, b + t d); scale to integers
    lcm = 1
    for x in (g.a, g.b, g.c, g.d):
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    shift = max(-shell_min, 0)
    scale = lcm * p**shift
    step = lcm * p ** max(shell_min, 0)
    a0, b0 = int(g.a * scale), int(g.b * scale)
    c1, d1 = int(g.c * step), int(g.d * step)
    v_scale = _ival(lcm, p) + shift
    vdet = valuation(g.det, p)
    big = 10**9
    modulus = p**shift
    phases = [cmath.exp(-2j * math.pi * r / modulus) for r in range(modulus)] if shift else [1.0]
    acc: dict[tuple[str, int], complex] = {}
    count = p ** (depth - shell_min)
    for j in range(count):
        cc = a0 + j * c1
        dd = b0 + j * d1
        vc = _ival(cc, p) if cc else big
        vd = _ival(dd, p) if dd else big
        cell = "e" if vc > vd else "s"
        key = (cell, int(vdet - 2 * (min(vc, vd) - v_scale)))
        acc[key] = acc.get(key, 0j) + phases[j % modulus]
    weight = float(Fraction(p) ** (-depth))
    return tuple(sorted((k, v * weight) for k, v in acc.items()))


def _evaluate_profile(profile, z: Fraction, p: int, delta_sign: int) -> complex:
    y = z * Fraction(p) ** delta_sign
    total = 0j
    for (cell, k), weight in profile:
        coeff = y**k if cell == "e" else -(y**k) / p
        total += complex(coeff) * weight
    return total


@dataclass(frozen=True)
class JacquetResult:
    value: complex
    coarse: complex  # same sum starting one shell further out
    shell_min: int
    depth: int
    stabilized: bool


STABILIZATION_TOL = 1e-12


def jacquet_integral(
    g: GroupElement2,
    z,
    p: int,
    shell_min: int | None = None,
    depth: int | None = None,
    delta_sign: int = -1,
) -> JacquetResult:
    z = _check_z(z)
    if not z * z < p:
        raise ConfigurationError(f"|z|^2 < p required for the oracle window (z = {z}, p = {p})")
    if g.p != p:
        raise ValueError("group element defined over a different prime")
    auto_shell, auto_depth = default_window(g)
    shell_min = auto_shell if shell_min is None else shell_min
    depth = auto_depth if depth is None else depth
    value = _evaluate_profile(_profile(g, shell_min, depth), z, p, delta_sign)
    coarse = _evaluate_profile(_profile(g, shell_min - 1, depth), z, p, delta_sign)
    stable = abs(value - coarse) <= STABILIZATION_TOL * max(1.0, abs(value))
    return JacquetResult(value, coarse, shell_min, depth, stable)


def oracle_whittaker(m: int, w: str, z, p: int, delta_sign: int = -1) -> complex:
    """Whittaker value at diag(p^m, 1) w, normalized so that W(1) = 1."""
    base = jacquet_integral(GroupElement2.identity(p), z, p, delta_sign=delta_sign)
    target = jacquet_integral(GroupElement2.torus_cell(m, w, p), z, p, delta_sign=delta_sign)
    for r in (base, target):
        if not r.stabilized:
            raise ArithmeticError(f"Jacquet integral did not stabilize: {r}")
    if abs(base.value) < 1e-12:
        raise ArithmeticError("Whittaker normalizer W(1) vanishes")
    return target.value / base.value
