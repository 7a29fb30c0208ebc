"""Characters of GL(d), Sp(d), O(d) and Pin(d) as Laurent polynomials on a
maximal torus, computed from Weyl alternants by exact division."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .partitions import GeneralizedPartition, Partition, in_P_O, in_P_Sp, tilde
from .series import Ring, Series, group, sign
from .symfunc import laurent_schur


class NotDivisible(ArithmeticError):
    pass


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


@lru_cache(maxsize=None)
def weyl_group(kind: str, r: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Elements as (permutation, signs, determinant) for kind in A, B, C, D."""
    out = []
    for p in permutations(range(r)):
        sp = _perm_sign(p)
        if kind == "A":
            out.append((p, (1,) * r, sp))
            continue
        for signs in product((1, -1), repeat=r):
            neg = signs.count(-1)
            if kind == "D" and neg % 2:
                continue
            out.append((p, signs, sp * (-1) ** neg))
    return tuple(out)


def rho(kind: str, r: int) -> tuple[Fraction, ...]:
    if kind == "A":
        return tuple(Fraction(r - 1 - i) for i in range(r))
    if kind == "B":
        return tuple(Fraction(2 * (r - i) - 1, 2) for i in range(r))
    if kind == "C":
        return tuple(Fraction(r - i) for i in range(r))
    if kind == "D":
        return tuple(Fraction(r - 1 - i) for i in range(r))
    raise ValueError(kind)


def positive_roots(kind: str, r: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            v = [0] * r
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
            if kind != "A":
                w = [0] * r
                w[i], w[j] = 1, 1
                roots.append(tuple(w))
        if kind in ("B", "C"):
            v = [0] * r
            v[i] = 1 if kind == "B" else 2
            roots.append(tuple(v))
    return roots


def weyl_dimension(kind: str, hw: Sequence) -> Fraction:
    """Weyl dimension formula, used as an independent check on characters."""
    r = len(hw)
    rh = rho(kind, r)
    num = den = Fraction(1)
    for a in positive_roots(kind, r):
        num *= sum((Fraction(hw[i]) + rh[i]) * a[i] for i in range(r))
        den *= sum(rh[i] * a[i] for i in range(r))
    return num / den


def _scratch(r: int) -> Ring:
    return Ring([group("w", r, half=True)], None)


def alternant(kind: str, v: Sequence) -> Series:
    """sum over W of det(w) z^{w v}."""
    r = len(v)
    ring = _scratch(r)
    terms: dict[int, object] = {}
    for p, signs, det in weyl_group(kind, r):
        stored = [0] * r
        for i in range(r):
            stored[p[i]] = int(2 * Fraction(v[i])) * signs[i]
        k = ring.pack(stored)
        terms[k] = terms.get(k, 0) + det
    return Series(ring, terms)


def divide_exact(a: Series, b: Series) -> Series:
    """Exact quotient of Laurent polynomials over group variables.

    Both are shifted into the polynomial ring by their per-variable minimal
    exponents; lexicographic long division by a single divisor then leaves a
    zero remainder exactly when b divides a.
    """
    ring = a.ring
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return ring.zero()
    A = {tuple(ring.unpack(k)): c for k, c in a.terms.items()}
    B = {tuple(ring.unpack(k)): c for k, c in b.terms.items()}
    n = len(ring.variables)
    amin = [min(e[i] for e in A) for i in range(n)]
    bmin = [min(e[i] for e in B) for i in range(n)]
    A = {tuple(e[i] - amin[i] for i in range(n)): c for e, c in A.items()}
    B = {tuple(e[i] - bmin[i] for i in range(n)): c for e, c in B.items()}
    lb = max(B)
    lc = B[lb]
    Q: dict[tuple, Fraction] = {}
    R = dict(A)
    while R:
        lr = max(R)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if min(diff) < 0:
            raise NotDivisible(f"remainder term at exponent {lr}")
        q = Fraction(R[lr]) / lc
        Q[diff] = q
        for e, c in B.items():
            t = tuple(x + y for x, y in zip(e, diff))
            val = R.get(t, 0) - q * c
            if val:
                R[t] = val
            else:
                R.pop(t, None)
    shift = [amin[i] - bmin[i] for i in range(n)]
    terms = {}
    for e, c in Q.items():
        if Fraction(c).denominator != 1:
            raise NotDivisible("non-integral quotient coefficient")
        terms[ring.pack([e[i] + shift[i] for i in range(n)])] = int(c)
    return Series(ring, terms)


@lru_cache(maxsize=None)
def weyl_character(kind: str, hw: tuple) -> Series:
    """Irreducible character of highest weight hw (scratch ring, half units)."""
    r = len(hw)
    if r == 0:
        return _scratch(0).one()
    rh = rho(kind, r)
    num = alternant(kind, [Fraction(h) + p for h, p in zip(hw, rh)])
    den = alternant(kind, rh)
    return divide_exact(num, den)


def _to_target(s: Series, ring: Ring, alphabet: str, eps: int = 0, eps_name: str | None = None) -> Series:
    out = s.embed(ring, {"w": alphabet})
    if eps:
        out = out.mul_monomial({eps_name: 1})
    return out


# public API -----------------------------------------------------------------

def torus_ring(group_name: str, d: int, *, half: bool = False, with_sign: bool = False) -> Ring:
    """Ring holding characters of a rank-r torus (plus an eps marker for O(odd))."""
    r = d if group_name == "GL" else d // 2
    alphas = [group("z", r, half=half)]
    if with_sign:
        alphas.append(sign("eps"))
    return Ring(alphas, None)


def char_gl(lam: Sequence[int], d: int, ring: Ring | None = None, alphabet: str = "z") -> Series:
    lam = GeneralizedPartition(lam)
    if len(lam) != d:
        raise ValueError(f"GL({d}) label needs {d} entries")
    ring = ring or torus_ring("GL", d)
    return laurent_schur(tuple(lam), ring, alphabet)


def char_sp(lam: Sequence[int], d: int, ring: Ring | None = None, alphabet: str = "z") -> Series:
    lam = Partition(lam)
    if d % 2 or not in_P_Sp(lam, d):
        raise ValueError(f"{lam} is not an Sp({d}) label")
    r = d // 2
    ring = ring or torus_ring("Sp", d)
    hw = tuple(lam.part(i) for i in range(1, r + 1))
    return _to_target(weyl_character("C", hw), ring, alphabet)


def char_so(hw: Sequence, d: int) -> Series:
    """so(d) character in the scratch ring; hw may be half-integral and, for
    d even, may have a negative last entry."""
    kind = "D" if d % 2 == 0 else "B"
    return weyl_character(kind, tuple(Fraction(h) for h in hw))


def char_o(lam: Sequence[int], d: int, ring: Ring | None = None, alphabet: str = "z") -> Series:
    """O(d) character.

    For d odd the result carries eps^{|lam|} (eps marks the eigenvalue of
    -I_d) on labels with at most d//2 rows, and the associated label
    tilde(lam) picks up one more factor of eps.
    """
    lam = Partition(lam)
    if not in_P_O(lam, d):
        raise ValueError(f"{lam} is not an O({d}) label")
    ell = d // 2
    if ring is None:
        ring = torus_ring("O", d, with_sign=bool(d % 2))
    if len(lam) > ell:
        base = char_o(tilde(lam, d), d, ring, alphabet)
        return base.mul_monomial({"eps": 1}) if d % 2 else base
    hw = tuple(lam.part(i) for i in range(1, ell + 1))
    if d % 2 == 0:
        s = char_so(hw, d)
        if ell and hw[-1] > 0:
            s = s + char_so(hw[:-1] + (-hw[-1],), d)
        return _to_target(s, ring, alphabet)
    return _to_target(char_so(hw, d), ring, alphabet, lam.size % 2, "eps")


def char_pin(lam: Sequence[int], d: int, ring: Ring | None = None, alphabet: str = "z") -> Series:
    """Pin(d) character for d even: sum of the two so(d) characters of
    highest weights lam + 1/2 and its reflection in the last coordinate."""
    lam = Partition(lam)
    if d % 2:
        raise ValueError("Pin characters are implemented for even d")
    if not in_P_Sp(lam, d):
        raise ValueError(f"{lam} is not a Pin({d}) label")
    ell = d // 2
    ring = ring or torus_ring("Pin", d, half=True)
    hw = tuple(Fraction(lam.part(i)) + Fraction(1, 2) for i in range(1, ell + 1))
    s = char_so(hw, d) + char_so(hw[:-1] + (-hw[-1],), d)
    return _to_target(s, ring, alphabet)


def group_character(group_name: str, lam, d: int, ring: Ring | None = None, alphabet: str = "z") -> Series:
    fn = {"GL": char_gl, "Sp": char_sp, "O": char_o, "Pin": char_pin}[group_name]
    return fn(lam, d, ring, alphabet)
