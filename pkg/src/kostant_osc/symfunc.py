"""Schur, skew Schur and hook Schur functions as truncated series, Schur
decomposition in the stable range, and the involution omega."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, conjugate, contains, partitions, subpartitions
from .series import Ring, Series, modules


# building blocks in a scratch alphabet ---------------------------------------

@lru_cache(maxsize=None)
def _scratch(n: int) -> Ring:
    return Ring([modules("a", n)], None)


@lru_cache(maxsize=None)
def _scratch2(nf: int, nb: int) -> Ring:
    return Ring([modules("f", nf), modules("b", nb)], None)


def _compositions(total: int, parts: int, cap: int | None = None):
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total if cap is None else min(total, cap)
    for first in range(top, -1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


@lru_cache(maxsize=None)
def complete_h(k: int, n: int) -> Series:
    """h_k(a_1..a_n)."""
    ring = _scratch(n)
    if k < 0:
        return ring.zero()
    return Series(ring, {ring.pack(list(c)): 1 for c in _compositions(k, n)})


@lru_cache(maxsize=None)
def elementary_e(k: int, n: int) -> Series:
    """e_k(a_1..a_n)."""
    ring = _scratch(n)
    if k < 0 or k > n:
        return ring.zero()
    return Series(ring, {ring.pack(list(c)): 1 for c in _compositions(k, n, cap=1)})


def _det(entries: Sequence[Sequence[Series | None]], ring: Ring) -> Series:
    """Determinant by dynamic programming over the set of used columns."""
    k = len(entries)
    if k == 0:
        return ring.one()
    layer: dict[int, Series] = {0: ring.one()}
    for r in range(k):
        nxt: dict[int, Series] = {}
        for mask, val in layer.items():
            for j in range(k):
                if mask >> j & 1:
                    continue
                e = entries[r][j]
                if e is None or not e:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = val * e
                if above % 2:
                    term = -term
                m2 = mask | (1 << j)
                nxt[m2] = nxt[m2] + term if m2 in nxt else term
        layer = nxt
    return layer.get((1 << k) - 1, ring.zero())


@lru_cache(maxsize=None)
def skew_schur_scratch(lam: Partition, mu: Partition, n: int) -> Series:
    """s_{lam/mu}(a_1..a_n) via Jacobi-Trudi (h or e form, whichever is smaller)."""
    ring = _scratch(n)
    if not contains(lam, mu):
        return ring.zero()
    if n == 0:
        return ring.one() if lam == mu else ring.zero()
    lc, mc = conjugate(lam), conjugate(mu)
    if len(lam) <= len(lc):
        k, rows, cols, fn = len(lam), lam, mu, complete_h
    else:
        k, rows, cols, fn = len(lc), lc, mc, elementary_e
    rp = [rows[i] if i < len(rows) else 0 for i in range(k)]
    cp = [cols[j] if j < len(cols) else 0 for j in range(k)]
    entries = []
    for i in range(k):
        row = []
        for j in range(k):
            idx = rp[i] - cp[j] - i + j
            row.append(None if idx < 0 else fn(idx, n))
        entries.append(row)
    return _det(entries, ring)


def schur_scratch(lam: Partition, n: int) -> Series:
    return skew_schur_scratch(Partition(lam), Partition(), n)


@lru_cache(maxsize=None)
def hook_schur_scratch(lam: Partition, nf: int, nb: int) -> Series:
    """hs_lam(f; b) = sum over mu in lam of s_mu(f) s_{lam'/mu'}(b)."""
    ring = _scratch2(nf, nb)
    lam = Partition(lam)
    total = ring.zero()
    lc = conjugate(lam)
    for mu in subpartitions(lam):
        if len(mu) > nf:
            continue
        a = schur_scratch(mu, nf)
        if not a:
            continue
        b = skew_schur_scratch(lc, conjugate(mu), nb)
        if not b:
            continue
        total = total + a.embed(ring, {"a": "f"}) * b.embed(ring, {"a": "b"})
    return total


# public constructors in a target ring ---------------------------------------

def _place(s: Series, ring: Ring, rename: Mapping[str, str], deg: int) -> Series:
    if ring.degree is not None and deg > ring.degree:
        return ring.zero()
    return s.embed(ring, rename)


def schur(lam: Iterable[int], ring: Ring, alphabet: str) -> Series:
    """Schur polynomial s_lam in the variables of ``alphabet``."""
    return _schur(Partition(lam), ring, alphabet)


@lru_cache(maxsize=4096)
def _schur(lam: Partition, ring: Ring, alphabet: str) -> Series:
    n = ring.alphabet(alphabet).size
    if len(lam) > n:
        return ring.zero()
    return _place(schur_scratch(lam, n), ring, {"a": alphabet}, lam.size)


def skew_schur(lam: Iterable[int], mu: Iterable[int], ring: Ring, alphabet: str) -> Series:
    lam, mu = Partition(lam), Partition(mu)
    n = ring.alphabet(alphabet).size
    return _place(skew_schur_scratch(lam, mu, n), ring, {"a": alphabet}, lam.size - mu.size)


def hook_schur(lam: Iterable[int], ring: Ring, even: str, odd: str) -> Series:
    """hs_lam(even; odd): Schur in ``even`` paired with conjugate skew Schur in ``odd``."""
    lam = Partition(lam)
    nf = ring.alphabet(even).size
    nb = ring.alphabet(odd).size
    if lam.part(nf + 1) > nb:
        return ring.zero()
    return _place(hook_schur_scratch(lam, nf, nb), ring, {"f": even, "b": odd}, lam.size)


def laurent_schur(lam: Sequence[int], ring: Ring, alphabet: str) -> Series:
    """GL(d) character s_lam(z) for a weakly decreasing integer sequence lam.

    Equal to (z_1...z_d)^{lam_d} s_{lam - lam_d}(z).
    """
    d = ring.alphabet(alphabet).size
    if len(lam) != d:
        raise ValueError(f"need exactly {d} parts, got {tuple(lam)}")
    if d == 0:
        return ring.one()
    low = lam[-1]
    base = schur(Partition(p - low for p in lam), ring, alphabet)
    if low == 0:
        return base
    return base.mul_monomial({v: low for v in ring.alphabet(alphabet).variables})


# decomposition --------------------------------------------------------------

@dataclass
class SchurVector:
    """Finite integer combination of products of Schur functions.

    Keys are tuples of partitions, one per alphabet in ``alphabets``.
    """

    alphabets: tuple[str, ...]
    coeffs: dict[tuple[Partition, ...], int] = field(default_factory=dict)

    def add(self, key: tuple[Partition, ...], c) -> None:
        v = self.coeffs.get(key, 0) + c
        if v:
            self.coeffs[key] = v
        else:
            self.coeffs.pop(key, None)

    def __eq__(self, other):
        return isinstance(other, SchurVector) and self.alphabets == other.alphabets and self.coeffs == other.coeffs

    def omega(self, positions: Iterable[int] | None = None) -> "SchurVector":
        pos = set(range(len(self.alphabets)) if positions is None else positions)
        out = SchurVector(self.alphabets)
        for key, c in self.coeffs.items():
            out.add(tuple(conjugate(p) if i in pos else p for i, p in enumerate(key)), c)
        return out

    def expand(self, ring: Ring) -> Series:
        total = ring.zero()
        for key, c in self.coeffs.items():
            term = ring.const(c)
            for lam, a in zip(key, self.alphabets):
                term = term * schur(lam, ring, a)
            total = total + term
        return total

    def to_json(self) -> dict:
        return {"alphabets": list(self.alphabets),
                "terms": [{"shape": [list(p) for p in k], "coeff": str(c)}
                          for k, c in sorted(self.coeffs.items())]}


def schur_decompose(s: Series, alphabets: Sequence[str] | str) -> SchurVector:
    """Write a symmetric series as a combination of Schur products.

    Each alphabet must have at least as many variables as the largest degree
    the series reaches in it, otherwise the expansion would not be unique.
    """
    if isinstance(alphabets, str):
        alphabets = (alphabets,)
    ring = s.ring
    idx = []
    for a in alphabets:
        vs = ring.alphabet(a).variables
        idx.append([ring.index[v] for v in vs])
    covered = {i for block in idx for i in block}
    for k in s.terms:
        st = ring.unpack(k)
        if any(st[i] for i in range(len(st)) if i not in covered):
            raise ValueError("series involves variables outside the given alphabets")
        for block, a in zip(idx, alphabets):
            if sum(st[i] for i in block) > len(block):
                raise ValueError(f"alphabet {a} is too small for the stable range")
    out = SchurVector(tuple(alphabets))
    rest = s
    order = [i for block in idx for i in block]
    sort_keys: dict[int, tuple] = {}

    def lex(k):
        v = sort_keys.get(k)
        if v is None:
            st = ring.unpack(k)
            v = sort_keys[k] = tuple(st[i] for i in order)
        return v

    while rest:
        lead = max(rest.terms, key=lex)
        st = ring.unpack(lead)
        c = rest.terms[lead]
        key = []
        for block in idx:
            parts = [st[i] for i in block]
            if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
                raise ValueError(f"series is not symmetric: leading exponent {parts}")
            key.append(Partition(parts))
        key = tuple(key)
        term = ring.const(c)
        for lam, a in zip(key, alphabets):
            term = term * schur(lam, ring, a)
        rest = rest - term
        out.add(key, c)
    return out


def omega_series(s: Series, alphabet: str) -> Series:
    """Apply omega to a series symmetric in one alphabet (stable range)."""
    return schur_decompose(s, alphabet).omega().expand(s.ring)


# monomial basis in the stable range -----------------------------------------------

def _horizontal_strips(lam: tuple, r: int, inner: tuple = ()):
    """All nu with inner inside nu inside lam such that lam/nu is a horizontal
    strip of size r."""

    def rec(i, left):
        if i == len(lam):
            if left == 0:
                yield ()
            return
        floor = max(lam[i + 1] if i + 1 < len(lam) else 0, inner[i] if i < len(inner) else 0)
        for take in range(min(left, lam[i] - floor), -1, -1):
            for rest in rec(i + 1, left - take):
                yield (lam[i] - take,) + rest

    for nu in rec(0, r):
        yield tuple(p for p in nu if p)


@lru_cache(maxsize=None)
def kostka(lam: tuple, content: tuple, inner: tuple = ()) -> int:
    """Number of semistandard tableaux of shape lam/inner with the given
    content, counted by peeling off the largest entry as a horizontal strip."""
    if not content:
        return 1 if tuple(lam) == tuple(inner) else 0
    r = content[-1]
    return sum(kostka(nu, content[:-1], inner) for nu in _horizontal_strips(tuple(lam), r, tuple(inner)))


@lru_cache(maxsize=None)
def schur_to_monomial(lam: Partition, inner: Partition = Partition(())) -> tuple[tuple[Partition, int], ...]:
    """Expansion s_{lam/inner} = sum_mu K_{lam/inner, mu} m_mu."""
    lam, inner = Partition(lam), Partition(inner)
    out = []
    for mu in partitions(lam.size - inner.size):
        k = kostka(tuple(lam), tuple(mu), tuple(inner))
        if k:
            out.append((mu, k))
    return tuple(out)


@dataclass
class MonomialVector:
    """Symmetric function in the stable range, stored by the coefficients of
    its partition-shaped (dominant) monomials, one partition per alphabet.

    Once the number of variables is at least the degree these coefficients
    determine the polynomial, so this is a compact exact stand-in for a
    series in a scratch alphabet of that size.
    """

    alphabets: tuple[str, ...]
    coeffs: dict[tuple[Partition, ...], int] = field(default_factory=dict)

    def add(self, key: tuple[Partition, ...], c) -> None:
        v = self.coeffs.get(key, 0) + c
        if v:
            self.coeffs[key] = v
        else:
            self.coeffs.pop(key, None)

    def __eq__(self, other):
        return isinstance(other, MonomialVector) and self.alphabets == other.alphabets \
            and self.coeffs == other.coeffs

    def add_schur(self, key: tuple[Partition, ...], c=1) -> None:
        """Add c times the product of Schur functions indexed by key."""
        combos = [((), c)]
        for lam in key:
            combos = [(k + (mu,), v * kv) for k, v in combos for mu, kv in schur_to_monomial(Partition(lam))]
        for k, v in combos:
            self.add(k, v)

    @classmethod
    def from_schur(cls, vec: SchurVector) -> "MonomialVector":
        out = cls(vec.alphabets)
        for key, c in vec.coeffs.items():
            out.add_schur(key, c)
        return out

    @classmethod
    def from_series(cls, s: Series, alphabets: Sequence[str] | str) -> "MonomialVector":
        """Read off the dominant coefficients of a symmetric series."""
        if isinstance(alphabets, str):
            alphabets = (alphabets,)
        ring = s.ring
        idx = [[ring.index[v] for v in ring.alphabet(a).variables] for a in alphabets]
        out = cls(tuple(alphabets))
        for k, c in s.terms.items():
            st = ring.unpack(k)
            key = []
            for block in idx:
                parts = [st[i] for i in block]
                if any(a < b for a, b in zip(parts, parts[1:])):
                    break
                key.append(Partition(parts))
            else:
                out.add(tuple(key), c)
        return out

    def to_schur(self) -> SchurVector:
        """Invert the unitriangular Kostka matrix, leading term first."""
        out = SchurVector(self.alphabets)
        rest = MonomialVector(self.alphabets, dict(self.coeffs))
        while rest.coeffs:
            lead = max(rest.coeffs, key=lambda key: tuple((lam.size, tuple(lam)) for lam in key))
            c = rest.coeffs[lead]
            out.add(lead, c)
            rest.add_schur(lead, -c)
        return out



def skew_schur_vector(lam: Partition, mu: Partition) -> SchurVector:
    """Littlewood-Richardson expansion of s_{lam/mu} (stable range)."""
    mv = MonomialVector(("a",))
    for nu, c in schur_to_monomial(Partition(lam), Partition(mu)):
        mv.add((nu,), c)
    return mv.to_schur()


def omega_split(lam: Iterable[int], ring: Ring, keep: str, flip: str) -> Series:
    """Split the variables of s_lam into ``keep`` and ``flip``, apply omega to
    the ``flip`` part only, and restrict both parts to the sizes of the
    alphabets in ``ring`` (the remaining variables are set to zero):

        s_lam(K + F) = sum_mu s_mu(K) s_{lam/mu}(F)  ->  sum_mu s_mu(K) omega(s_{lam/mu})(F).
    """
    lam = Partition(lam)
    total = ring.zero()
    for mu in subpartitions(lam):
        left = schur(mu, ring, keep)
        if not left:
            continue
        vec = skew_schur_vector(lam, mu).omega()
        vec = SchurVector((flip,), dict(vec.coeffs))
        total = total + left * vec.expand(ring)
    return total
