"""Weyl groups of the infinite-rank algebras of types a, b, c, d (and the
orthosymplectic b0), their dot action, and minimal length coset
representatives for the Levi subgroup generated by the reflections other
than s_0.

Conventions.  A weight is ``level * Lambda_0 + sum_j coord_j eps_j``; the
index set is Z for type a and {1, 2, ...} otherwise.  With
rho_j = -j (a, c), 1/2 - j (b, b0), 1 - j (d), the group acts on
nu_j = (mu + rho)_j - t_j * level by finitary (signed) permutations, where
t_j = 1/2 (b, d), 1 (c, b0) and, for type a, t_j = -1 for j <= 0 and 0
otherwise.  s_0 is the sign change of nu_1 (b, c, b0), the map
(nu_1, nu_2) -> (-nu_2, -nu_1) (d), and the swap of nu_0, nu_1 (a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import Partition

TAGS = ("a", "b", "c", "d", "b0")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class WeightCoords:
    """level * Lambda_0 + sum coords[j] eps_j for one of the tags."""

    tag: str
    level: Fraction
    coords: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, tag: str, level, coords: Mapping[int, object] | Iterable[tuple[int, object]] = ()) -> "WeightCoords":
        if tag not in TAGS:
            raise ValueError(f"unknown tag {tag!r}")
        items = coords.items() if isinstance(coords, Mapping) else coords
        clean = {}
        for j, v in items:
            j = int(j)
            if tag != "a" and j < 1:
                raise ValueError(f"index {j} outside the index set of {tag}")
            v = _frac(v)
            if v:
                clean[j] = v
        return cls(tag, _frac(level), tuple(sorted(clean.items())))

    def coord(self, j: int) -> Fraction:
        for i, v in self.coords:
            if i == j:
                return v
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coords)

    def support(self) -> list[int]:
        return [i for i, _ in self.coords]

    def to_json(self) -> dict:
        return {"tag": self.tag, "level": str(self.level),
                "coords": {str(i): str(v) for i, v in self.coords}}


def rho(tag: str, j: int) -> Fraction:
    if tag in ("a", "c"):
        return Fraction(-j)
    if tag in ("b", "b0"):
        return Fraction(1, 2) - j
    if tag == "d":
        return Fraction(1 - j)
    raise ValueError(tag)


def shift(tag: str, j: int) -> Fraction:
    if tag in ("b", "d"):
        return Fraction(1, 2)
    if tag in ("c", "b0"):
        return Fraction(1)
    if tag == "a":
        return Fraction(-1) if j <= 0 else Fraction(0)
    raise ValueError(tag)


def signed(tag: str) -> bool:
    return tag != "a"


# group elements ---------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """Finitary (signed) permutation, stored on its moved points.

    ``mapping`` lists pairs (i, w(i)) for i with w(i) != i.  For signed
    types w(-i) = -w(i) and e_i is sent to sign(w(i)) e_|w(i)|.
    """

    tag: str
    mapping: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, tag: str, m: Mapping[int, int]) -> "WeylElement":
        return cls(tag, tuple(sorted((i, v) for i, v in m.items() if i != v)))

    def __call__(self, i: int) -> int:
        if signed(self.tag) and i < 0:
            return -self(-i)
        for a, b in self.mapping:
            if a == i:
                return b
        return i

    def moved(self) -> list[int]:
        return [a for a, _ in self.mapping]

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other."""
        pts = set(self.moved()) | set(other.moved())
        return WeylElement.from_dict(self.tag, {i: self(other(i)) for i in pts})

    def inverse(self) -> "WeylElement":
        m = {}
        for a, b in self.mapping:
            if signed(self.tag) and b < 0:
                m[-b] = -a
            else:
                m[b] = a
        return WeylElement.from_dict(self.tag, m)

    def window(self) -> list[int]:
        pts = self.moved()
        if self.tag == "a":
            if not pts:
                return []
            return list(range(min(pts), max(pts) + 1))
        return list(range(1, (max(pts) if pts else 0) + 1))

    def one_line(self) -> list[int]:
        return [self(i) for i in self.window()]

    def length(self) -> int:
        win = self.window()
        vals = [self(i) for i in win]
        n = len(vals)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if vals[i] > vals[j])
        if self.tag == "a":
            return inv
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if vals[i] + vals[j] < 0)
        if self.tag == "d":
            return inv + nsp
        return inv + nsp + sum(1 for v in vals if v < 0)

    def text(self) -> str:
        win = self.window()
        body = "[" + ",".join(str(v) for v in self.one_line()) + "]"
        if self.tag == "a" and win:
            return f"{win[0]}:{body}"
        return body

    def to_json(self) -> dict:
        return {"tag": self.tag, "one_line": self.one_line(),
                "start": self.window()[0] if self.window() else None, "length": self.length()}


def identity(tag: str) -> WeylElement:
    return WeylElement(tag)


def simple(tag: str, i: int) -> WeylElement:
    if tag == "a":
        return WeylElement.from_dict(tag, {i: i + 1, i + 1: i})
    if i < 0:
        raise ValueError("simple reflections are indexed by nonnegative integers")
    if i == 0:
        if tag == "d":
            return WeylElement.from_dict(tag, {1: -2, 2: -1})
        return WeylElement.from_dict(tag, {1: -1})
    return WeylElement.from_dict(tag, {i: i + 1, i + 1: i})


def parse_element(tag: str, text: str) -> WeylElement:
    """Inverse of WeylElement.text: "[-2,1,3]" or, for type a, "start:[...]"."""
    text = text.strip()
    start = 1
    if ":" in text:
        head, text = text.split(":", 1)
        start = int(head)
    body = text.strip().strip("[]")
    vals = [int(t) for t in body.split(",")] if body.strip() else []
    m = {start + k: v for k, v in enumerate(vals)}
    w = WeylElement.from_dict(tag, m)
    check = sorted(abs(v) if signed(tag) else v for v in vals)
    if check != sorted(m):
        raise ValueError(f"{text!r} is not a permutation of its window")
    return w


def left_descents(w: WeylElement) -> list[int]:
    ln = w.length()
    pts = w.moved()
    if not pts:
        return []
    vals = {abs(w(i)) for i in pts} | set(pts) if signed(w.tag) else set(pts)
    lo, hi = min(vals), max(vals)
    cand = range(lo - 1, hi + 1) if w.tag == "a" else range(0, hi + 1)
    return [j for j in cand if simple(w.tag, j).compose(w).length() < ln]


def in_levi_quotient(w: WeylElement) -> bool:
    """True when no left descent of w lies in the Levi set I minus {0}."""
    return all(j == 0 for j in left_descents(w))


@lru_cache(maxsize=None)
def coset_reps(tag: str, k: int) -> tuple[WeylElement, ...]:
    """Minimal length representatives of length k, sorted by one-line form.

    Built by breadth-first search: right multiplication by simple
    reflections, keeping only elements whose left descents avoid the Levi
    set.  Prefixes of such elements have the same property, so every level
    is reached from the previous one.
    """
    if k == 0:
        return (identity(tag),)
    found: set[WeylElement] = set()
    for w in coset_reps(tag, k - 1):
        pts = w.moved()
        if tag == "a":
            lo, hi = (min(pts), max(pts)) if pts else (0, 1)
            cand = set(range(lo - 1, hi + 1)) | {0}
        else:
            hi = max(pts) if pts else 0
            cand = set(range(0, hi + 1))
        for i in cand:
            v = w.compose(simple(tag, i))
            if v.length() == k and in_levi_quotient(v):
                found.add(v)
    return tuple(sorted(found, key=lambda e: (e.window()[:1], e.one_line())))


# actions ------------------------------------------------------------------------

def act(w: WeylElement, mu: WeightCoords) -> WeightCoords:
    """Linear action on h*; the level is fixed."""
    if w.tag != mu.tag and not {w.tag, mu.tag} <= {"c", "b0"}:
        raise ValueError(f"element of type {w.tag} acting on a weight of type {mu.tag}")
    c = mu.level
    tag = mu.tag
    pts = w.moved()
    new = mu.as_dict()
    nu = {j: mu.coord(j) - shift(tag, j) * c for j in pts}
    for i in pts:
        img = w(i)
        j = abs(img) if signed(tag) else img
        s = -1 if (signed(tag) and img < 0) else 1
        new[j] = s * nu[i] + shift(tag, j) * c
    return WeightCoords.make(tag, c, new)


def rho_weight(tag: str, indices: Iterable[int]) -> dict[int, Fraction]:
    return {j: rho(tag, j) for j in indices}


def dot(w: WeylElement, mu: WeightCoords) -> WeightCoords:
    """w o mu = w(mu + rho) - rho."""
    pts = set(w.moved())
    base = mu.as_dict()
    shifted = dict(base)
    for j in pts:
        shifted[j] = base.get(j, 0) + rho(mu.tag, j)
    moved = act(w, WeightCoords.make(mu.tag, mu.level, shifted)).as_dict()
    out = dict(base)
    for j in pts:
        out[j] = moved.get(j, Fraction(0)) - rho(mu.tag, j)
    return WeightCoords.make(mu.tag, mu.level, out)


def coroot_pairing(tag: str, i: int, mu: WeightCoords) -> Fraction:
    """<mu, alpha_i^vee> with <Lambda_0, alpha_0^vee> = 1."""
    c = mu.level
    if i != 0:
        return mu.coord(i) - mu.coord(i + 1)
    if tag == "a":
        return c + mu.coord(0) - mu.coord(1)
    if tag == "b":
        return c - 2 * mu.coord(1)
    if tag == "c":
        return c - mu.coord(1)
    if tag == "d":
        return c - mu.coord(1) - mu.coord(2)
    if tag == "b0":
        # reflection in the even root -2 eps_1
        return c - mu.coord(1)
    raise ValueError(tag)


def simple_root(tag: str, i: int) -> dict[int, Fraction]:
    if i != 0:
        return {i: Fraction(1), i + 1: Fraction(-1)}
    return {"a": {0: Fraction(1), 1: Fraction(-1)},
            "b": {1: Fraction(-1)},
            "c": {1: Fraction(-2)},
            "d": {1: Fraction(-1), 2: Fraction(-1)},
            "b0": {1: Fraction(-2)}}[tag]


def simple_dot(tag: str, i: int, mu: WeightCoords) -> WeightCoords:
    """s_i o mu from the reflection formula mu+rho - <mu+rho, a^vee> a - rho."""
    idx = set(mu.support()) | set(simple_root(tag, i)) | ({i, i + 1} if i else set())
    shifted = {j: mu.coord(j) + rho(tag, j) for j in idx}
    sh = WeightCoords.make(tag, mu.level, shifted)
    p = coroot_pairing(tag, i, sh)
    for j, a in simple_root(tag, i).items():
        shifted[j] = shifted[j] - p * a
    return WeightCoords.make(tag, mu.level, {j: v - rho(tag, j) for j, v in shifted.items()})


def reduced_word(w: WeylElement) -> list[int]:
    """A reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}."""
    word = []
    cur = w
    while cur.length():
        j = left_descents(cur)[0]
        word.append(j)
        cur = simple(w.tag, j).compose(cur)
    return word


def is_levi_dominant(mu: WeightCoords) -> bool:
    """<mu, alpha_j^vee> >= 0 for every j != 0 (checked on the support)."""
    sup = mu.support()
    if not sup:
        return True
    if mu.tag == "a":
        rng = range(min(sup) - 1, max(sup) + 1)
    else:
        rng = range(1, max(sup) + 1)
    return all(coroot_pairing(mu.tag, j, mu) >= 0 for j in rng if j != 0)


def is_dominant_integral(mu: WeightCoords) -> bool:
    return is_levi_dominant(mu) and coroot_pairing(mu.tag, 0, mu) >= 0 and all(
        v.denominator == 1 for _, v in mu.coords) and mu.level.denominator == 1


# reading off partitions ------------------------------------------------------------

def weight_partition(mu: WeightCoords) -> Partition:
    """The coordinates at 1, 2, ... as a partition (types b, c, d, b0)."""
    if mu.tag == "a":
        raise ValueError("type a weights carry a pair of partitions")
    sup = mu.support()
    vals = [mu.coord(j) for j in range(1, (max(sup) if sup else 0) + 1)]
    if any(v.denominator != 1 for v in vals):
        raise ValueError(f"non-integral coordinates {vals}")
    return Partition(int(v) for v in vals)


def weight_partition_pair(mu: WeightCoords) -> tuple[Partition, Partition]:
    """(plus, minus) for type a: plus_j = coord_j (j > 0), minus_{j+1} = -coord_{-j}."""
    if mu.tag != "a":
        raise ValueError("only type a weights carry a pair of partitions")
    sup = mu.support()
    hi = max([j for j in sup if j > 0], default=0)
    lo = min([j for j in sup if j <= 0], default=1)
    plus = [mu.coord(j) for j in range(1, hi + 1)]
    minus = [-mu.coord(-j) for j in range(0, -lo + 1)]
    if any(v.denominator != 1 for v in plus + minus):
        raise ValueError("non-integral coordinates")
    return Partition(int(v) for v in plus), Partition(int(v) for v in minus)
