"""Highest weights of the classical and super Fock space modules, the maps
theta between Levi weights, and the Casimir eigenvalues attached to them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from .partitions import (GeneralizedPartition, Partition, conjugate, is_hook, minus_partition,
                         split_pm)
from .weyl import WeightCoords, rho

HALF = Fraction(1, 2)


# classical weights ------------------------------------------------------------

def classical_weight(tag: str, lam, d: int) -> WeightCoords:
    """Lambda^x(lam): highest weight attached to a G-label at positive level."""
    if tag == "a":
        lam = GeneralizedPartition(lam)
        plus, _ = split_pm(lam)
        mc = conjugate(minus_partition(lam))
        coords = {j: v for j, v in enumerate(conjugate(plus), 1)}
        coords.update({-j: -v for j, v in enumerate(mc)})
        return WeightCoords.make("a", d, coords)
    lam = Partition(lam)
    level = Fraction(d, 2) if tag == "c" else Fraction(d)
    if tag not in ("b", "c", "d"):
        raise ValueError(f"no positive level weight for tag {tag!r}")
    return WeightCoords.make(tag, level, enumerate(conjugate(lam), 1))


def negative_weight(tag: str, lam, d: int) -> WeightCoords:
    """Lambda^x_-(lam) for x in d (Sp labels), c (O labels), b0 (Pin labels)."""
    lam = Partition(lam)
    if tag not in ("d", "c", "b0"):
        raise ValueError(f"no negative level weight of type {tag}")
    level = {"d": Fraction(-d), "c": Fraction(-d, 2), "b0": Fraction(-d, 2)}[tag]
    return WeightCoords.make(tag, level, enumerate(lam, 1))


def kappa(tag: str) -> Fraction:
    """<Lambda_0, K> for the tag."""
    return HALF if tag in ("b", "d") else Fraction(1)


# super weights ------------------------------------------------------------------

@dataclass(frozen=True)
class SuperWeight:
    """level * tilde-Lambda_0 + sum eps_i + sum delta_j for gl(p+m|q+n)
    (tag "a") or for the orthosymplectic types b, c, d (rank m|n)."""

    tag: str
    p: int
    q: int
    m: int
    n: int
    level: Fraction
    eps: tuple[tuple[int, Fraction], ...] = ()
    delta: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, tag, p, q, m, n, level, eps: Mapping[int, object], delta: Mapping[int, object]):
        for i in eps:
            if not (1 <= i <= m or (tag == "a" and -p <= i <= -1)):
                raise ValueError(f"eps index {i} out of range")
        for j in delta:
            if not (1 <= j <= n or (tag == "a" and -q <= j <= -1)):
                raise ValueError(f"delta index {j} out of range")
        e = tuple(sorted((int(i), Fraction(v)) for i, v in eps.items() if v))
        dl = tuple(sorted((int(j), Fraction(v)) for j, v in delta.items() if v))
        return cls(tag, p, q, m, n, Fraction(level), e, dl)

    def e(self, i: int) -> Fraction:
        return dict(self.eps).get(i, Fraction(0))

    def dl(self, j: int) -> Fraction:
        return dict(self.delta).get(j, Fraction(0))

    def eps_indices(self) -> list[int]:
        lo = list(range(-self.p, 0)) if self.tag == "a" else []
        return lo + list(range(1, self.m + 1))

    def delta_indices(self) -> list[int]:
        lo = list(range(-self.q, 0)) if self.tag == "a" else []
        return lo + list(range(1, self.n + 1))

    def to_json(self) -> dict:
        return {"tag": self.tag, "level": str(self.level),
                "eps": {str(i): str(v) for i, v in self.eps},
                "delta": {str(j): str(v) for j, v in self.delta},
                "rank": {"p": self.p, "q": self.q, "m": self.m, "n": self.n}}


def _pos(x) -> int:
    return max(int(x), 0)


def super_weight(tag: str, lam, d: int, p: int, q: int, m: int, n: int) -> SuperWeight:
    """hat-Lambda^x_f(lam), the extended highest weight paired with lam."""
    if tag == "a":
        lam = GeneralizedPartition(lam)
        plus, minus = split_pm(lam)
        mp = minus_partition(lam)
        pc, mc = conjugate(plus), conjugate(mp)
        eps = {i: plus.part(i) for i in range(1, m + 1)}
        eps.update({-k: -_pos(minus[d - k] - q) if d - k >= 0 else 0 for k in range(1, p + 1)})
        delta = {j: _pos(pc.part(j) - m) for j in range(1, n + 1)}
        delta.update({-j: -mc.part(j) for j in range(1, q + 1)})
        return SuperWeight.make("a", p, q, m, n, d, eps, delta)
    lam = Partition(lam)
    lc = conjugate(lam)
    eps = {i: lam.part(i) for i in range(1, m + 1)}
    delta = {j: _pos(lc.part(j) - m) for j in range(1, n + 1)}
    return SuperWeight.make(tag, 0, 0, m, n, Fraction(d, 2), eps, delta)


# theta ------------------------------------------------------------------------------

class HookMembership(NamedTuple):
    member: bool
    reason: str


def classical_partitions(mu: WeightCoords):
    """(eta, zeta) for type a, mu-degree partition for b, c, d (None if not a partition)."""
    from .weyl import weight_partition, weight_partition_pair
    try:
        if mu.tag == "a":
            return weight_partition_pair(mu)
        return weight_partition(mu)
    except ValueError:
        return None


def in_P_plusplus(mu: WeightCoords, p: int, q: int, m: int, n: int) -> HookMembership:
    """Membership in the set of Levi weights that theta carries to super weights."""
    parts = classical_partitions(mu)
    if parts is None:
        return HookMembership(False, "coordinates do not form partitions")
    if mu.tag == "a":
        eta, zeta = parts
        if not is_hook(eta, n, m):
            return HookMembership(False, f"eta={tuple(eta)} is not an ({n}|{m})-hook")
        if not is_hook(zeta, q, p):
            return HookMembership(False, f"zeta={tuple(zeta)} is not a ({q}|{p})-hook")
        return HookMembership(True, "")
    if not is_hook(parts, n, m):
        return HookMembership(False, f"{tuple(parts)} is not an ({n}|{m})-hook")
    return HookMembership(True, "")


def theta(mu: WeightCoords, p: int, q: int, m: int, n: int) -> SuperWeight:
    """Map a hook Levi weight of the infinite-rank algebra to the matching
    weight of the finite-rank superalgebra."""
    ok = in_P_plusplus(mu, p, q, m, n)
    if not ok.member:
        raise ValueError(f"theta undefined: {ok.reason}")
    if mu.tag == "a":
        eta, zeta = classical_partitions(mu)
        tau = conjugate(eta)
        nu = Partition(tau[m:])
        chi = Partition(zeta[q:])
        eps = {i: tau.part(i) for i in range(1, m + 1)}
        delta = {j: conjugate(nu).part(j) for j in range(1, n + 1)}
        delta.update({-(j + 1): -zeta.part(j + 1) for j in range(q)})
        eps.update({-i: -conjugate(chi).part(i) for i in range(1, p + 1)})
        return SuperWeight.make("a", p, q, m, n, mu.level, eps, delta)
    if mu.tag not in ("b", "c", "d"):
        raise ValueError(f"theta is defined for a, b, c, d, not {mu.tag}")
    nu = conjugate(classical_partitions(mu))
    tau = Partition(nu[m:])
    eps = {i: nu.part(i) for i in range(1, m + 1)}
    delta = {j: conjugate(tau).part(j) for j in range(1, n + 1)}
    return SuperWeight.make(mu.tag, 0, 0, m, n, mu.level * kappa(mu.tag), eps, delta)


def _whole(vals) -> list[int]:
    out = []
    for v in vals:
        if v.denominator != 1 or v < 0:
            raise ValueError(f"not a partition entry: {v}")
        out.append(int(v))
    return out


def theta_inverse(sw: SuperWeight) -> WeightCoords:
    m, n = sw.m, sw.n
    top = Partition(_whole([sw.e(i) for i in range(1, m + 1)]))
    rest = conjugate(Partition(_whole([sw.dl(j) for j in range(1, n + 1)])))
    full = Partition(tuple(top) + (0,) * (m - len(top)) + tuple(rest)) if rest else top
    if sw.tag == "a":
        eta = conjugate(full)
        zhead = _whole([-sw.dl(-(j + 1)) for j in range(sw.q)])
        chi = conjugate(Partition(_whole([-sw.e(-i) for i in range(1, sw.p + 1)])))
        zeta = Partition(zhead + list(chi)) if chi else Partition(zhead)
        coords = {j: v for j, v in enumerate(eta, 1)}
        coords.update({-j: -v for j, v in enumerate(zeta)})
        return WeightCoords.make("a", sw.level, coords)
    mu = conjugate(full)
    return WeightCoords.make(sw.tag, sw.level / kappa(sw.tag), enumerate(mu, 1))


def theta_negative(mu: WeightCoords) -> WeightCoords:
    """Level-reversing map: c -> d, b -> b0 and their inverses d -> c, b0 -> b.

    Coordinates are conjugated; the level goes c -> -2c (c to d),
    c -> -c/2 (d to c), 2c -> -c (b to b0) and -c -> 2c (b0 to b).
    """
    lam = classical_partitions(mu)
    if lam is None:
        raise ValueError("coordinates do not form a partition")
    target, factor = {"c": ("d", Fraction(-2)), "d": ("c", Fraction(-1, 2)),
                      "b": ("b0", Fraction(-1, 2)), "b0": ("b", Fraction(-2))}[mu.tag]
    return WeightCoords.make(target, mu.level * factor, enumerate(conjugate(lam), 1))


# Casimir eigenvalues ------------------------------------------------------------------

def casimir_classical(mu: WeightCoords) -> Fraction:
    """(mu + 2 rho | mu) for the infinite-rank algebra of mu.tag."""
    c = mu.level
    co = mu.as_dict()
    if mu.tag == "a":
        body = sum(v * (v - 2 * k) for k, v in co.items())
        lin = sum(v for k, v in co.items() if k >= 1) - sum(v for k, v in co.items() if k <= 0)
        return body - c * lin
    total = sum(co.values(), Fraction(0))
    if mu.tag == "b":
        return sum(v * (v - 2 * i + 1) for i, v in co.items()) - c * total
    if mu.tag == "c":
        return sum(v * (v - 2 * i) for i, v in co.items()) - 2 * c * total
    if mu.tag == "d":
        return sum(v * (v - 2 * (i - 1)) for i, v in co.items()) - c * total
    if mu.tag == "b0":
        return sum(v * (v - 2 * i + 1) for i, v in co.items()) - 2 * c * total
    raise ValueError(mu.tag)


def casimir_classical_form(mu: WeightCoords) -> Fraction:
    """Same eigenvalue computed as |mu + rho|^2 - |rho|^2 from the bilinear form.

    Only finitely many coordinates of rho change, so the difference is a
    finite sum.  Used to cross-check the closed forms above.
    """
    c = mu.level
    tag = mu.tag
    if tag == "a":
        pair0 = lambda k: Fraction(-1, 2) if k >= 1 else HALF
    elif tag in ("b", "d"):
        pair0 = lambda k: Fraction(-1, 2)
    else:
        pair0 = lambda k: Fraction(-1)
    total = Fraction(0)
    for k, v in mu.coords:
        r = rho(tag, k)
        total += (v + r) ** 2 - r ** 2 + 2 * c * v * pair0(k)
    return total


def rho_super(sw_or_tag, p: int = 0, q: int = 0, m: int = 0, n: int = 0) -> tuple[dict, dict]:
    if isinstance(sw_or_tag, SuperWeight):
        tag, p, q, m, n = sw_or_tag.tag, sw_or_tag.p, sw_or_tag.q, sw_or_tag.m, sw_or_tag.n
    else:
        tag = sw_or_tag
    if tag == "a":
        eps = {i: Fraction(-i - q) for i in range(-p, 0)}
        eps.update({i: Fraction(1 - i) for i in range(1, m + 1)})
        delta = {j: Fraction(-j - 1) for j in range(-q, 0)}
        delta.update({j: Fraction(m - j) for j in range(1, n + 1)})
        return eps, delta
    if tag == "b":
        return ({i: HALF - i for i in range(1, m + 1)}, {j: m - j + HALF for j in range(1, n + 1)})
    if tag == "c":
        return ({i: Fraction(1 - i) for i in range(1, m + 1)}, {j: Fraction(m - j) for j in range(1, n + 1)})
    if tag == "d":
        return ({i: Fraction(-i) for i in range(1, m + 1)}, {j: Fraction(m - j + 1) for j in range(1, n + 1)})
    raise ValueError(tag)


def _form_data(tag: str):
    """(eps.eps, delta.delta, Lambda.eps(i), Lambda.delta(j), Lambda.Lambda)."""
    if tag == "a":
        side = lambda i: HALF if i < 0 else -HALF
        return Fraction(-1), Fraction(1), side, side, Fraction(0)
    one = lambda i: Fraction(1)
    return Fraction(1), Fraction(-1), one, one, Fraction(0)


def super_form(tag: str, u: tuple, v: tuple) -> Fraction:
    """Bilinear form on (level, eps dict, delta dict) triples."""
    ee, dd, le, ld, ll = _form_data(tag)
    lu, eu, du = u
    lv, ev, dv = v
    total = lu * lv * ll
    total += sum(eu[i] * ev.get(i, 0) for i in eu) * ee
    total += sum(du[j] * dv.get(j, 0) for j in du) * dd
    total += lu * sum(le(i) * x for i, x in ev.items()) + lv * sum(le(i) * x for i, x in eu.items())
    total += lu * sum(ld(j) * x for j, x in dv.items()) + lv * sum(ld(j) * x for j, x in du.items())
    return total


def casimir_super(sw: SuperWeight) -> Fraction:
    """(mu + 2 rho_s | mu) for the superalgebra."""
    mu = (sw.level, dict(sw.eps), dict(sw.delta))
    re, rd = rho_super(sw)
    r = (Fraction(0), re, rd)
    return super_form(sw.tag, mu, mu) + 2 * super_form(sw.tag, r, mu)


def casimir_constant(tag: str, level, p: int, q: int, m: int, n: int) -> Fraction:
    """C-bar = level^2 (L|L) + 2 level (rho_s|L) at the super level."""
    re, rd = rho_super(tag, p, q, m, n)
    lam0 = (Fraction(1), {}, {})
    r = (Fraction(0), re, rd)
    level = Fraction(level)
    return level ** 2 * super_form(tag, lam0, lam0) + 2 * level * super_form(tag, r, lam0)


# random sampling for property checks ----------------------------------------------------

def random_hook_partition(rng: random.Random, m: int, n: int, max_size: int) -> Partition:
    """Random (m|n)-hook partition of size at most max_size."""
    while True:
        size = rng.randint(0, max_size)
        parts = []
        left = size
        while left:
            cap = left if not parts else min(left, parts[-1])
            if len(parts) >= m:
                cap = min(cap, n)
            if cap == 0:
                break
            x = rng.randint(1, cap)
            parts.append(x)
            left -= x
        lam = Partition(parts)
        if is_hook(lam, m, n):
            return lam


def random_levi_weight(rng: random.Random, tag: str, level, p: int, q: int, m: int, n: int,
                       max_size: int = 8) -> WeightCoords:
    if tag == "a":
        eta = random_hook_partition(rng, n, m, max_size)
        zeta = random_hook_partition(rng, q, p, max_size)
        coords = {j: v for j, v in enumerate(eta, 1)}
        coords.update({-j: -v for j, v in enumerate(zeta)})
        return WeightCoords.make("a", level, coords)
    mu = random_hook_partition(rng, n, m, max_size)
    return WeightCoords.make(tag, level, enumerate(mu, 1))
