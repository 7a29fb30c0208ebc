"""Truncated multivariate Laurent series with exact coefficients.

A ``Ring`` fixes an ordered list of alphabets and a degree bound D.  Module
variables (including formal inverses such as x^-1 introduced as independent
generators) have degree one; group variables have degree zero and may carry
negative or half-integer exponents; a sign variable has exponents mod 2.
Every product is truncated at module degree D.

Monomials are packed into a single Python int: one biased bit field per
variable plus a leading field holding the module degree (in half units).
Adding two packed keys and subtracting the bias multiplies the monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

WIDTH = 24
BIAS = 1 << (WIDTH - 1)
MASK = (1 << WIDTH) - 1


@dataclass(frozen=True)
class Alphabet:
    name: str
    size: int
    kind: str = "module"  # "module", "group" or "sign"
    half: bool = False

    def __post_init__(self):
        if self.kind not in ("module", "group", "sign"):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        if self.kind == "sign" and self.size != 1:
            raise ValueError("a sign alphabet has exactly one variable")

    @property
    def variables(self) -> tuple[str, ...]:
        if self.kind == "sign":
            return (self.name,)
        return tuple(f"{self.name}{i}" for i in range(1, self.size + 1))

    def to_json(self) -> dict:
        return {"name": self.name, "size": self.size, "kind": self.kind, "half": self.half}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Alphabet":
        return cls(obj["name"], int(obj["size"]), obj.get("kind", "module"), bool(obj.get("half", False)))


def modules(name: str, size: int, half: bool = False) -> Alphabet:
    return Alphabet(name, size, "module", half)


def group(name: str, size: int, half: bool = False) -> Alphabet:
    return Alphabet(name, size, "group", half)


def sign(name: str = "eps") -> Alphabet:
    return Alphabet(name, 1, "sign")


class Ring:
    """Variable layout plus truncation degree (``degree=None`` disables it)."""

    def __init__(self, alphabets: Iterable[Alphabet], degree: int | None = None):
        self.alphabets = tuple(alphabets)
        names = [a.name for a in self.alphabets]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate alphabet names {names}")
        self.degree = degree
        self.variables: list[str] = []
        self.units: list[int] = []
        self.kinds: list[str] = []
        for a in self.alphabets:
            for v in a.variables:
                self.variables.append(v)
                self.units.append(2 if a.half else 1)
                self.kinds.append(a.kind)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names collide across alphabets")
        self.index = {v: i for i, v in enumerate(self.variables)}
        n = len(self.variables)
        self.shifts = [WIDTH * i for i in range(n)]
        self.deg_shift = WIDTH * n
        self.bias = sum(BIAS << s for s in self.shifts) + (BIAS << self.deg_shift)
        self.sign_shifts = [self.shifts[i] for i in range(n) if self.kinds[i] == "sign"]
        # degree contribution of one stored unit, measured in half units
        self.deg_weight = [(2 // self.units[i]) if self.kinds[i] == "module" else 0 for i in range(n)]
        self._key = (tuple(self.alphabets), degree)
        self.zero_key = self.bias

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Ring({[a.name for a in self.alphabets]}, D={self.degree})"

    def alphabet(self, name: str) -> Alphabet:
        for a in self.alphabets:
            if a.name == name:
                return a
        raise KeyError(name)

    def with_degree(self, degree: int | None) -> "Ring":
        return Ring(self.alphabets, degree)

    # packing ------------------------------------------------------------

    def encode(self, exps: Mapping[str, int | Fraction]) -> int:
        stored = [0] * len(self.variables)
        for v, e in exps.items():
            i = self.index[v]
            s = Fraction(e) * self.units[i]
            if s.denominator != 1:
                raise ValueError(f"exponent {e} not allowed for {v}")
            s = int(s)
            if self.kinds[i] == "sign":
                s %= 2
            elif self.kinds[i] == "module" and s < 0 and self.degree is not None:
                raise ValueError(f"negative module exponent for {v} in a truncated ring")
            stored[i] = s
        return self.pack(stored)

    def pack(self, stored: list[int]) -> int:
        key = self.bias
        deg = 0
        for i, s in enumerate(stored):
            if s:
                key += s << self.shifts[i]
                deg += s * self.deg_weight[i]
        return key + (deg << self.deg_shift)

    def unpack(self, key: int) -> list[int]:
        return [((key >> s) & MASK) - BIAS for s in self.shifts]

    def decode(self, key: int) -> dict[str, int | Fraction]:
        out = {}
        for i, s in enumerate(self.unpack(key)):
            if s:
                u = self.units[i]
                out[self.variables[i]] = s if u == 1 else Fraction(s, u)
        return out

    def half_degree(self, key: int) -> int:
        return (key >> self.deg_shift) - BIAS

    def key_degree(self, key: int) -> int | Fraction:
        h = self.half_degree(key)
        return h // 2 if h % 2 == 0 else Fraction(h, 2)

    def add_keys(self, a: int, b: int) -> int:
        k = a + b - self.bias
        for s in self.sign_shifts:
            if ((k >> s) & MASK) - BIAS == 2:
                k -= 2 << s
        return k

    # constructors -------------------------------------------------------

    def zero(self) -> "Series":
        return Series(self, {})

    def one(self) -> "Series":
        return Series(self, {self.zero_key: 1})

    def const(self, c) -> "Series":
        return Series(self, {self.zero_key: c} if c else {})

    def monomial(self, exps: Mapping[str, int | Fraction], coeff=1) -> "Series":
        return Series(self, {self.encode(exps): coeff})

    def var(self, name: str) -> "Series":
        return self.monomial({name: 1})

    def from_terms(self, terms: Iterable[tuple[Mapping[str, int | Fraction], object]]) -> "Series":
        out: dict[int, object] = {}
        for exps, c in terms:
            k = self.encode(exps)
            out[k] = out.get(k, 0) + c
        return Series(self, out)


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Series:
    """Element of a Ring: sparse map from packed monomial to coefficient."""

    __slots__ = ("ring", "terms", "_graded")

    def __init__(self, ring: Ring, terms: dict[int, object], check: bool = True):
        self.ring = ring
        if check:
            D = ring.degree
            if D is None:
                terms = {k: _norm(c) for k, c in terms.items() if c}
            else:
                lim = 2 * D
                terms = {k: _norm(c) for k, c in terms.items()
                         if c and ring.half_degree(k) <= lim}
        self.terms = terms
        self._graded = None

    # basic protocol -----------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return self.format(12)

    def format(self, limit: int | None = None) -> str:
        """Human readable sum of terms in degree order, optionally cut after ``limit`` terms."""
        if not self.terms:
            return "0"
        items = self.items_sorted()
        shown = items if limit is None else items[:limit]
        text = " + ".join(f"{c}*{_fmt_mono(e)}" for e, c in shown)
        return text + (" + ..." if len(shown) < len(items) else "")

    def _same(self, other: "Series"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Series):
            self._same(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Series(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, {k: -c for k, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Series":
        return Series(self.ring, {k: v * c for k, v in self.terms.items()})

    def graded(self) -> list[tuple[int, object, int]]:
        if self._graded is None:
            hd = self.ring.half_degree
            self._graded = sorted(((k, c, hd(k)) for k, c in self.terms.items()), key=lambda t: t[2])
        return self._graded

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._same(other)
        ring = self.ring
        a, b = self.graded(), other.graded()
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        bias = ring.bias
        lim = 2 * ring.degree if ring.degree is not None else None
        signs = ring.sign_shifts
        for ka, ca, da in a:
            room = None if lim is None else lim - da
            for kb, cb, db in b:
                if room is not None and db > room:
                    break
                k = ka + kb - bias
                if signs:
                    for s in signs:
                        if ((k >> s) & MASK) - BIAS == 2:
                            k -= 2 << s
                out[k] = get(k, 0) + ca * cb
        return Series(ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need series_inverse")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, key: int, coeff=1) -> "Series":
        """Multiply by the monomial with packed key ``key``."""
        add = self.ring.add_keys
        return Series(self.ring, {add(k, key): c * coeff for k, c in self.terms.items()})

    def mul_monomial(self, exps: Mapping[str, int | Fraction], coeff=1) -> "Series":
        return self.shift(self.ring.encode(exps), coeff)

    # inspection ---------------------------------------------------------

    def items(self):
        """(exponent dict, coefficient) pairs."""
        dec = self.ring.decode
        return [(dec(k), c) for k, c in self.terms.items()]

    def items_sorted(self):
        ring = self.ring
        return sorted(((ring.decode(k), c) for k, c in self.terms.items()),
                      key=lambda t: _sort_key(ring, t[0]))

    def coefficient(self, exps: Mapping[str, int | Fraction]):
        return self.terms.get(self.ring.encode(exps), 0)

    def max_degree(self):
        if not self.terms:
            return None
        return max(self.ring.key_degree(k) for k in self.terms)

    def min_degree(self):
        if not self.terms:
            return None
        return min(self.ring.key_degree(k) for k in self.terms)

    def homogeneous(self, deg: int) -> "Series":
        h = 2 * deg
        hd = self.ring.half_degree
        return Series(self.ring, {k: c for k, c in self.terms.items() if hd(k) == h}, check=False)

    def truncate(self, degree: int | None) -> "Series":
        return Series(self.ring.with_degree(degree), dict(self.terms))

    def map_coefficients(self, f) -> "Series":
        return Series(self.ring, {k: f(c) for k, c in self.terms.items()})

    # change of rings ----------------------------------------------------

    def embed(self, target: Ring, rename: Mapping[str, str] | None = None,
              drop_missing: bool = False) -> "Series":
        """Re-express in ``target``.

        ``rename`` maps variable names of this ring to variable names of the
        target.  Alphabet names may be given instead, mapping x1, x2, ... to
        y1, y2, ...  Variables that do not exist in the target raise unless
        ``drop_missing`` is set, in which case they are evaluated at zero.
        """
        src = self.ring
        vmap = _variable_map(src, target, rename or {})
        positions = []
        for i, v in enumerate(src.variables):
            t = vmap.get(v)
            if t is None:
                positions.append(None)
                continue
            j = target.index[t]
            positions.append((j, target.units[j], src.units[i]))
        out: dict[int, object] = {}
        nt = len(target.variables)
        for k, c in self.terms.items():
            stored = [0] * nt
            ok = True
            for i, s in enumerate(src.unpack(k)):
                if not s:
                    continue
                p = positions[i]
                if p is None:
                    if drop_missing and src.kinds[i] != "group":
                        ok = False
                        break
                    raise ValueError(f"variable {src.variables[i]} has no image in {target}")
                j, num, den = p
                q, r = divmod(s * num, den)
                if r:
                    raise ValueError(f"half exponent of {src.variables[i]} has no image in {target}")
                stored[j] += q
                if target.kinds[j] == "sign":
                    stored[j] %= 2
            if not ok:
                continue
            tk = target.pack(stored)
            out[tk] = out.get(tk, 0) + c
        return Series(target, out)

    def split_by(self, alphabet_names: Iterable[str], rest: Ring) -> dict[tuple, "Series"]:
        """Group terms by the exponents of the named alphabets.

        Returns a map from the exponent tuple (over the variables of those
        alphabets, in ring order, stored units) to the coefficient series in
        ``rest``, which must contain every remaining variable.
        """
        src = self.ring
        names = set(alphabet_names)
        chosen = [i for i, v in enumerate(src.variables) if _alpha_of(src, i) in names]
        others = [(i, rest.index[src.variables[i]]) for i in range(len(src.variables)) if i not in set(chosen)]
        nt = len(rest.variables)
        groups: dict[tuple, dict[int, object]] = {}
        for k, c in self.terms.items():
            st = src.unpack(k)
            gk = tuple(st[i] for i in chosen)
            stored = [0] * nt
            for i, j in others:
                stored[j] = st[i]
            tk = rest.pack(stored)
            d = groups.setdefault(gk, {})
            d[tk] = d.get(tk, 0) + c
        return {g: Series(rest, t) for g, t in groups.items()}

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for exps, c in self.items_sorted():
            terms.append({"exp": {v: (e if isinstance(e, int) else str(e)) for v, e in exps.items()},
                          "coeff": str(c)})
        return {"alphabets": [a.to_json() for a in self.ring.alphabets],
                "degree_bound": self.ring.degree, "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping) -> "Series":
        ring = Ring([Alphabet.from_json(a) for a in obj["alphabets"]], obj.get("degree_bound"))
        return ring.from_terms(({v: Fraction(e) for v, e in t["exp"].items()}, Fraction(t["coeff"]))
                               for t in obj["terms"])


def _alpha_of(ring: Ring, i: int) -> str:
    n = 0
    for a in ring.alphabets:
        n += len(a.variables)
        if i < n:
            return a.name
    raise IndexError(i)


def _variable_map(src: Ring, target: Ring, rename: Mapping[str, str]) -> dict[str, str]:
    vmap: dict[str, str] = {}
    alpha_src = {a.name: a for a in src.alphabets}
    alpha_tgt = {a.name: a for a in target.alphabets}
    for a in src.alphabets:
        tname = rename.get(a.name, a.name if a.name in alpha_tgt else None)
        if tname is not None and tname in alpha_tgt:
            tv = alpha_tgt[tname].variables
            for i, v in enumerate(a.variables):
                if i < len(tv):
                    vmap[v] = tv[i]
    for v, t in rename.items():
        if v not in alpha_src:
            vmap[v] = t
    return vmap


def _sort_key(ring: Ring, exps: Mapping) -> tuple:
    return tuple(-Fraction(exps.get(v, 0)) for v in ring.variables)


def _fmt_mono(exps: Mapping) -> str:
    if not exps:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in exps.items())


# products of binomials ------------------------------------------------------

def times_binomial(s: Series, mono: Mapping[str, int | Fraction], sgn: int = 1, power: int = 1) -> Series:
    """Multiply s by (1 + sgn*t)^power with t the monomial ``mono``; power is +1 or -1.

    The inverse is expanded as a geometric series, so t needs positive
    module degree whenever power is -1.
    """
    ring = s.ring
    key = ring.encode(mono)
    if power == 1:
        return s + s.shift(key, sgn)
    if power != -1:
        raise ValueError("power must be +1 or -1")
    if ring.half_degree(key) <= 0:
        raise ValueError("geometric expansion needs a monomial of positive degree")
    acc = s
    cur = s
    while True:
        cur = cur.shift(key, -sgn)
        if not cur:
            return acc
        acc = acc + cur


def expand_product(ring: Ring, factors: Iterable[tuple[int, Mapping[str, int | Fraction], int]]) -> Series:
    """Truncated expansion of prod (1 + sgn*t)^power over (sgn, t, power) triples."""
    s = ring.one()
    for sgn, mono, power in factors:
        s = times_binomial(s, mono, sgn, power)
    return s
