"""Checks with a uniform result record: character identities, Euler-Poincare
consistency, omega transport of homology, and Casimir bookkeeping."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .howe import (DualPair, contributors, euler_sum, extract_characters,
                   max_homology_degree, module_character, sum_side)
from .partitions import conjugate, format_partition, tilde
from .series import Ring, Series
from .symfunc import MonomialVector, SchurVector, omega_series, omega_split
from .weights import (casimir_classical, casimir_constant, casimir_super, classical_weight,
                      random_levi_weight, theta, theta_inverse, theta_negative)
from .weyl import coset_reps, dot


@dataclass
class CheckResult:
    check: str
    params: dict
    degree: int | None
    ok: bool
    first_mismatch: dict | None = None
    contributors: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "degree": self.degree, "ok": self.ok,
                "first_mismatch": self.first_mismatch, "contributors": self.contributors}

    def line(self) -> str:
        p = " ".join(f"{k}={v}" for k, v in self.params.items())
        tail = "" if self.ok else f" first_mismatch={self.first_mismatch}"
        return f"{'PASS' if self.ok else 'FAIL'} {self.check} {p} D={self.degree}{tail}"


def first_mismatch(expected: Series, actual: Series) -> dict | None:
    diff = expected - actual
    if not diff:
        return None
    exps, _ = diff.items_sorted()[0]
    key = expected.ring.encode(exps)
    return {"monomial": {v: str(e) for v, e in exps.items()},
            "expected": str(expected.terms.get(key, 0)), "actual": str(actual.terms.get(key, 0))}


def _label(lam) -> str:
    return format_partition(lam)


# identities ---------------------------------------------------------------------------

def verify_duality(pair: DualPair, D: int) -> CheckResult:
    """Product side of the Fock space character against sum of ch L * ch V."""
    lhs = pair.product_side(D)
    rhs, used = sum_side(pair, D)
    mm = first_mismatch(lhs, rhs)
    return CheckResult("duality", {**pair.describe(), "labels": len(used)}, D, mm is None, mm)


@lru_cache(maxsize=32)
def _extracted(pair: DualPair, D: int) -> dict:
    return extract_characters(pair, D)


def _representative(pair: DualPair, lam):
    """Key under which extraction reports lam (O(2l) labels come in pairs)."""
    if pair.group == "O" and pair.d % 2 == 0 and len(lam) > pair.d // 2:
        return tilde(lam, pair.d)
    return lam


def verify_euler_poincare(pair: DualPair, lam, D: int) -> CheckResult:
    """sum_k (-1)^k ch H_k against ch L * denominator, with ch L read off the
    product side independently of the homology formula."""
    ring = pair.module_ring(D)
    rep = _representative(pair, lam)
    table = _extracted(pair, D)
    chl = table.get(rep, ring.zero())
    if pair.group == "O" and pair.d % 2 == 0 and pair.side == "classical":
        members = {rep, tilde(rep, pair.d)}
    else:
        members = {rep}
    lhs = ring.zero()
    cons = []
    for mu in members:
        lhs = lhs + euler_sum(pair, mu, ring)
        for k in range(max_homology_degree(pair, mu, D) + 1):
            cons += [c.to_json() for c in contributors(pair, mu, k) if c.degree <= D]
    rhs = chl * pair.denominator(ring)
    mm = first_mismatch(rhs, lhs)
    nonneg = all(c >= 0 for c in chl.terms.values())
    if mm is None and not nonneg:
        mm = {"negative_coefficient": True}
    params = {**pair.describe(), "label": _label(lam)}
    return CheckResult("euler_poincare", params, D, mm is None, mm, cons)


# omega transport ----------------------------------------------------------------------------

def classical_homology_vector(pair: DualPair, lam, k: int) -> MonomialVector:
    """Classical k-th homology character in the stable range, held by its
    dominant monomial coefficients (x, and u for type a)."""
    cs = contributors(pair, lam, k)
    out = MonomialVector(("x", "u") if pair.tag == "a" else ("x",))
    for c in cs:
        out.add_schur(tuple(c.shapes) if pair.tag == "a" else (c.shapes,))
    return out


def transport_to_super(vec: SchurVector, target: DualPair, ring: Ring) -> Series:
    """Image of a Schur expansion under omega on the bosonic sub-alphabets.

    Each alphabet is split into fermionic and bosonic variables; omega acts
    on the bosonic part only (see ``omega_split``).
    """
    total = ring.zero()
    for key, c in vec.coeffs.items():
        if target.tag == "a":
            plus, minus = key
            term = omega_split(plus, ring, "xi", "y") * omega_split(minus, ring, "etainv", "xinv")
        else:
            (lam,) = key
            term = omega_split(lam, ring, "eta", "x")
        total = total + term.scale(c)
    return total


def verify_omega_transport(target: DualPair, lam, k: int) -> CheckResult:
    """Classical homology, pushed through omega, against the homology formula
    on the super or negative side (exact polynomials).

    The classical character is decomposed into Schur functions, conjugated,
    and re-expanded: as hook Schur functions in the super variables, or as
    Schur functions again on the negative side.
    """
    if target.side == "super":
        source = DualPair("classical", target.tag, target.d)
    elif target.side == "negative":
        source = DualPair("classical", target.source_tag, target.d)
    else:
        raise ValueError("omega transport starts from the classical side")
    params = {**target.describe(), "label": _label(lam), "k": k}
    cons = []
    if target.side == "super":
        ring = target.module_ring(None)
        expected = actual = ring.zero()
    else:
        expected = MonomialVector(("x",))
        actual = MonomialVector(("x",))
    for mu in target.members(lam):
        vec = classical_homology_vector(source, mu, k).to_schur()
        mine = [c for c in contributors(target, mu, k) if c.member == mu]
        cons += [c.to_json() for c in mine]
        if target.side == "super":
            expected = expected + transport_to_super(vec, target, ring)
            for c in mine:
                actual = actual + target.term(c.shapes, ring)
        else:
            for key, v in vec.omega().coeffs.items():
                expected.add_schur(key, v)
            for c in mine:
                actual.add_schur((conjugate(c.shapes),))
    if target.side == "super":
        mm = first_mismatch(expected, actual)
    else:
        mm = None
        if expected != actual:
            key = max(set(expected.coeffs) ^ set(actual.coeffs) |
                      {q for q in expected.coeffs if expected.coeffs[q] != actual.coeffs.get(q)})
            mm = {"monomial": [list(p) for p in key], "expected": str(expected.coeffs.get(key, 0)),
                  "actual": str(actual.coeffs.get(key, 0))}
    return CheckResult("omega_transport", params, None, mm is None, mm, cons)


def verify_omega_characters(target: DualPair, lam, D: int) -> CheckResult:
    """omega applied to a classical module character (c or b) equals the
    negative level character of the same label (d or b0), truncated at D."""
    source = DualPair("classical", target.source_tag, target.d)
    ring = source.module_ring(D)
    expected = ring.zero()
    for mu in target.members(lam):
        expected = expected + omega_series(module_character(source, mu, ring), "x")
    actual = module_character(target, lam, ring)
    mm = first_mismatch(expected, actual)
    return CheckResult("omega_character", {**target.describe(), "label": _label(lam)}, D, mm is None, mm)


# Casimir ------------------------------------------------------------------------------------------

def verify_casimir_lemmas(tag: str, d: int, p: int, q: int, m: int, n: int, samples: int = 100,
                          seed: int = 0) -> CheckResult:
    """theta intertwines the Casimir eigenvalues up to the constant C-bar.

    For type a the sign is +, for b, c, d it is -.
    """
    rng = random.Random(f"{seed}-{tag}-{d}-{p}-{q}-{m}-{n}")
    level = Fraction(d, 2) if tag == "c" else Fraction(d)
    params = {"tag": tag, "d": d, "p": p, "q": q, "m": m, "n": n, "samples": samples, "seed": seed}
    for _ in range(samples):
        mu = random_levi_weight(rng, tag, level, p, q, m, n)
        sw = theta(mu, p, q, m, n)
        if theta_inverse(sw) != mu:
            return CheckResult("casimir_lemma", params, None, False, {"theta_inverse": mu.to_json()})
        cbar = casimir_constant(tag, sw.level, p, q, m, n)
        sgn = 1 if tag == "a" else -1
        lhs = casimir_super(sw)
        rhs = sgn * casimir_classical(mu) + cbar
        if lhs != rhs:
            return CheckResult("casimir_lemma", params, None, False,
                               {"weight": mu.to_json(), "super": str(lhs), "classical": str(rhs)})
    return CheckResult("casimir_lemma", params, None, True)


def verify_casimir_negative(tag: str, d: int, samples: int = 100, seed: int = 0) -> CheckResult:
    """(mu + 2 rho | mu) = -(theta mu + 2 rho | theta mu) for c -> d and b -> b0."""
    rng = random.Random(f"{seed}-neg-{tag}-{d}")
    level = Fraction(d, 2) if tag == "c" else Fraction(d)
    params = {"tag": tag, "d": d, "samples": samples, "seed": seed}
    for _ in range(samples):
        mu = random_levi_weight(rng, tag, level, 0, 0, 50, 50)
        img = theta_negative(mu)
        if casimir_classical(mu) != -casimir_classical(img) or theta_negative(img) != mu:
            return CheckResult("casimir_negative", params, None, False, {"weight": mu.to_json()})
    return CheckResult("casimir_negative", params, None, True)


def verify_dot_invariance(tag: str, d: int, lam, kmax: int = 3) -> CheckResult:
    """Casimir eigenvalue is constant on dot orbits through W^0_k, k <= kmax."""
    base = classical_weight(tag, lam, d)
    target = casimir_classical(base)
    params = {"tag": tag, "d": d, "label": _label(lam), "kmax": kmax}
    for k in range(kmax + 1):
        for w in coset_reps(tag, k):
            mu = dot(w, base)
            if casimir_classical(mu) != target:
                return CheckResult("dot_casimir", params, None, False, {"w": w.text(), "weight": mu.to_json()})
    return CheckResult("dot_casimir", params, None, True)
