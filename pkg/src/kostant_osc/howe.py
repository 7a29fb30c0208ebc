"""Fock space dual pairs: total characters, module characters from the
Kostant type formulas, and Lie (super)algebra homology characters.

A ``DualPair`` fixes the side (classical positive level, super, or
negative level), the infinite-rank tag and the rank data.  It knows the
alphabets of its character ring, the product side of the character
identity, the labels of the finite group, and the denominators.

Variable conventions.  Classical type a uses x_1, x_2, ... and the
formal inverses u_i = x_{1-i}^{-1}.  On the super side of type a the
alphabets are xi (n odd), y (m even), etainv = eta^{-1} (q odd) and
xinv = x^{-1} (p even).  For b, c, d the super alphabets are x (m even,
bosonic in the Fock space) and eta (n odd, fermionic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import finite_chars
from .partitions import (GeneralizedPartition, Partition, conjugate, degree_pm, generalized_partitions,
                         in_P_O, is_hook, partitions_upto, tilde)
from .series import Alphabet, Ring, Series, expand_product, group, modules, sign
from .symfunc import hook_schur, schur
from .weights import (SuperWeight, casimir_classical, casimir_super, classical_weight, in_P_plusplus,
                      negative_weight, super_weight, theta, theta_negative)
from .weyl import WeightCoords, WeylElement, coset_reps, dot, weight_partition, weight_partition_pair

SIDES = ("classical", "super", "negative")
GROUP_OF = {("classical", "a"): "GL", ("classical", "b"): "Pin", ("classical", "c"): "Sp",
            ("classical", "d"): "O", ("super", "a"): "GL", ("super", "b"): "Pin",
            ("super", "c"): "Sp", ("super", "d"): "O", ("negative", "d"): "Sp",
            ("negative", "c"): "O", ("negative", "b0"): "Pin"}
SOURCE_TAG = {"d": "c", "c": "d", "b0": "b"}


@dataclass(frozen=True)
class DualPair:
    side: str
    tag: str
    d: int
    p: int = 0
    q: int = 0
    m: int = 0
    n: int = 0
    nvars: int | None = None

    def __post_init__(self):
        if (self.side, self.tag) not in GROUP_OF:
            raise ValueError(f"no dual pair for side={self.side!r}, tag={self.tag!r}")
        if self.d < 1:
            raise ValueError("d must be positive")
        g = self.group
        if g in ("Sp", "Pin") and self.d % 2:
            raise ValueError(f"{g}(d) needs even d")
        if self.side == "super" and self.tag != "a" and (self.p or self.q):
            raise ValueError("p and q only apply to type a")
        if self.side != "super" and (self.p or self.q or self.m or self.n):
            raise ValueError("rank data p, q, m, n only apply to the super side")

    # identification ---------------------------------------------------------------

    @property
    def group(self) -> str:
        return GROUP_OF[(self.side, self.tag)]

    @property
    def source_tag(self) -> str:
        """Tag of the Weyl group whose coset representatives index homology."""
        return SOURCE_TAG[self.tag] if self.side == "negative" else self.tag

    @property
    def rank(self) -> int:
        return self.d if self.group == "GL" else self.d // 2

    @property
    def paired(self) -> bool:
        """Labels lam and tilde(lam) share a group character and are reported together."""
        return self.group == "O" and self.d % 2 == 0 and self.side in ("super", "negative")

    def describe(self) -> dict:
        out = {"side": self.side, "tag": self.tag, "group": self.group, "d": self.d}
        if self.side == "super":
            out.update(p=self.p, q=self.q, m=self.m, n=self.n)
        return out

    # rings ------------------------------------------------------------------------

    def module_alphabets(self, D: int | None) -> list[Alphabet]:
        if self.side == "super":
            if self.tag == "a":
                return [modules("xi", self.n), modules("y", self.m),
                        modules("etainv", self.q), modules("xinv", self.p)]
            return [modules("x", self.m), modules("eta", self.n)]
        N = self.nvars if self.nvars is not None else D
        if N is None:
            raise ValueError("need a variable count or a degree bound")
        if self.side == "classical" and self.tag == "a":
            return [modules("x", N), modules("u", N)]
        return [modules("x", N)]

    def group_alphabets(self) -> list[Alphabet]:
        out = [group("z", self.rank, half=self.group == "Pin")]
        if self.group == "O" and self.d % 2:
            out.append(sign("eps"))
        return out

    def module_ring(self, D: int | None) -> Ring:
        return Ring(self.module_alphabets(D), D)

    def ring(self, D: int | None) -> Ring:
        return Ring(self.module_alphabets(D) + self.group_alphabets(), D)

    # product side -----------------------------------------------------------------

    def product_side(self, D: int) -> Series:
        """Total character of the Fock space, truncated at degree D."""
        ring = self.ring(D)
        zs = ring.alphabet("z").variables
        odd_o = self.group == "O" and self.d % 2 == 1
        e = {"eps": 1} if odd_o else {}
        factors = []

        def both(v, sgn, power):
            for z in zs:
                factors.append((sgn, {v: 1, z: 1, **e}, power))
                factors.append((sgn, {v: 1, z: -1, **e}, power))
            if odd_o:
                factors.append((sgn, {v: 1, **e}, power))

        if self.side == "classical":
            if self.tag == "a":
                for v in ring.alphabet("x").variables:
                    factors += [(1, {v: 1, z: 1}, 1) for z in zs]
                for v in ring.alphabet("u").variables:
                    factors += [(1, {v: 1, z: -1}, 1) for z in zs]
            else:
                for v in ring.alphabet("x").variables:
                    both(v, 1, 1)
        elif self.side == "super":
            if self.tag == "a":
                for v in ring.alphabet("xi").variables:
                    factors += [(1, {v: 1, z: 1}, 1) for z in zs]
                for v in ring.alphabet("y").variables:
                    factors += [(-1, {v: 1, z: 1}, -1) for z in zs]
                for v in ring.alphabet("etainv").variables:
                    factors += [(1, {v: 1, z: -1}, 1) for z in zs]
                for v in ring.alphabet("xinv").variables:
                    factors += [(-1, {v: 1, z: -1}, -1) for z in zs]
            else:
                for v in ring.alphabet("eta").variables:
                    both(v, 1, 1)
                for v in ring.alphabet("x").variables:
                    both(v, -1, -1)
        else:
            for v in ring.alphabet("x").variables:
                both(v, -1, -1)
        total = expand_product(ring, factors)
        if self.group == "Pin":
            half = Fraction(1, 2)
            for z in zs:
                total = total * (ring.monomial({z: half}) + ring.monomial({z: -half}))
        return total

    # labels -----------------------------------------------------------------------

    def label_degree(self, lam) -> int:
        return degree_pm(lam) if self.group == "GL" else Partition(lam).size

    def admissible(self, lam) -> bool:
        """Group label that occurs in the Fock space of this pair."""
        if self.side != "super":
            return True
        if self.group == "GL":
            lam = tuple(lam)
            d = self.d
            if self.m + 1 <= d and lam[self.m] > self.n:
                return False
            if d - self.p >= 1 and lam[d - self.p - 1] < -self.q:
                return False
            return True
        return is_hook(Partition(lam), self.m, self.n)

    def members(self, lam) -> tuple:
        """Labels reported under lam: lam and tilde(lam) for paired O(2l) labels."""
        if not self.paired:
            return (lam,)
        lt = tilde(lam, self.d)
        return (lam,) if lt == lam else (lam, lt)

    def labels(self, D: int) -> list:
        """Labels (or pair representatives) whose characters start in degree <= D."""
        g, d = self.group, self.d
        out = []
        if g == "GL":
            cands = list(generalized_partitions(d, D))
        elif g in ("Sp", "Pin"):
            cands = list(partitions_upto(D, max_len=d // 2))
        else:
            cands = [lam for lam in partitions_upto(D) if in_P_O(lam, d)]
            if self.paired:
                cands = [lam for lam in cands if len(lam) <= d // 2]
        for lam in cands:
            if any(self.admissible(mu) for mu in self.members(lam)):
                out.append(lam)
        return out

    def parse_label(self, text: str):
        from .partitions import parse_generalized, parse_partition
        if self.group == "GL":
            return parse_generalized(text, self.d)
        lam = parse_partition(text)
        if self.group in ("Sp", "Pin") and len(lam) > self.d // 2:
            raise ValueError(f"{text} is not a {self.group}({self.d}) label")
        if self.group == "O" and not in_P_O(lam, self.d):
            raise ValueError(f"{text} is not an O({self.d}) label")
        return lam

    def group_character(self, lam, ring: Ring) -> Series:
        return _group_char(self.group, lam, self.d, ring)

    # weights ----------------------------------------------------------------------

    def base_weight(self, lam) -> WeightCoords:
        """Highest weight of the source algebra whose dot orbit indexes homology."""
        return classical_weight(self.source_tag, lam, self.d)

    def module_weight(self, lam):
        """Highest weight of the module itself."""
        if self.side == "classical":
            return classical_weight(self.tag, lam, self.d)
        if self.side == "super":
            return super_weight(self.tag, lam, self.d, self.p, self.q, self.m, self.n)
        return negative_weight(self.tag, lam, self.d)

    def image(self, mu: WeightCoords):
        """Levi weight of the homology summand attached to w o Lambda."""
        if self.side == "classical":
            return mu
        if self.side == "super":
            return theta(mu, self.p, self.q, self.m, self.n)
        return theta_negative(mu)

    def casimir(self, weight) -> Fraction:
        if isinstance(weight, SuperWeight):
            return casimir_super(weight)
        return casimir_classical(weight)

    # denominators -----------------------------------------------------------------

    def denominator_factors(self, ring: Ring) -> list[tuple[int, dict, int]]:
        """Factors (sgn, t) of the Weyl denominator prod (1 + sgn t)^{+-1};
        a power -1 marks a factor that sits in the numerator of the character
        formula."""
        fs: list[tuple[int, dict, int]] = []
        if self.side == "classical" or self.side == "negative":
            xs = ring.alphabet("x").variables
            if self.side == "classical" and self.tag == "a":
                us = ring.alphabet("u").variables
                return [(-1, {u: 1, x: 1}, 1) for u in us for x in xs]
            strict = (self.side, self.tag) in (("classical", "b"), ("classical", "d"), ("negative", "d"))
            for i, a in enumerate(xs):
                for b in xs[i + 1 if strict else i:]:
                    fs.append((-1, _mono(a, b), 1))
            if (self.side, self.tag) == ("classical", "b"):
                fs += [(-1, {a: 1}, 1) for a in xs]
            if (self.side, self.tag) == ("negative", "b0"):
                fs += [(1, {a: 1}, -1) for a in xs]
            return fs
        if self.tag == "a":
            xi, y = ring.alphabet("xi").variables, ring.alphabet("y").variables
            ei, xv = ring.alphabet("etainv").variables, ring.alphabet("xinv").variables
            fs += [(-1, {a: 1, b: 1}, 1) for a in xv for b in y]
            fs += [(1, {a: 1, b: 1}, -1) for a in xv for b in xi]
            fs += [(1, {a: 1, b: 1}, -1) for a in ei for b in y]
            fs += [(-1, {a: 1, b: 1}, 1) for a in ei for b in xi]
            return fs
        xs, es = ring.alphabet("x").variables, ring.alphabet("eta").variables
        # even alphabet: strict for c, weak for b and d; odd alphabet the reverse
        x_strict = self.tag == "c"
        for i, a in enumerate(xs):
            for b in xs[i + 1 if x_strict else i:]:
                fs.append((-1, _mono(a, b), 1))
        for i, a in enumerate(es):
            for b in es[i if x_strict else i + 1:]:
                fs.append((-1, _mono(a, b), 1))
        fs += [(1, {a: 1, b: 1}, -1) for a in es for b in xs]
        if self.tag == "b":
            fs += [(-1, {a: 1}, 1) for a in es]
            fs += [(1, {b: 1}, -1) for b in xs]
        return fs

    def denominator(self, ring: Ring) -> Series:
        """The Weyl denominator as a (truncated) series in the module variables."""
        num = [(s, t, 1) for s, t, pw in self.denominator_factors(ring) if pw == 1]
        den = [(s, t, -1) for s, t, pw in self.denominator_factors(ring) if pw == -1]
        return expand_product(ring, num + den)

    def inverse_denominator(self, ring: Ring) -> Series:
        return expand_product(ring, [(s, t, -pw) for s, t, pw in self.denominator_factors(ring)])

    # homology terms ---------------------------------------------------------------

    def shapes(self, mu: WeightCoords):
        return weight_partition_pair(mu) if mu.tag == "a" else weight_partition(mu)

    def term(self, shapes, ring: Ring) -> Series:
        """Character of the Levi module attached to a dot-orbit weight."""
        if self.side == "classical":
            if self.tag == "a":
                plus, minus = shapes
                return schur(plus, ring, "x") * schur(minus, ring, "u")
            return schur(shapes, ring, "x")
        if self.side == "super":
            if self.tag == "a":
                plus, minus = shapes
                return hook_schur(plus, ring, "xi", "y") * hook_schur(minus, ring, "etainv", "xinv")
            return hook_schur(shapes, ring, "eta", "x")
        return schur(conjugate(shapes), ring, "x")

    def term_admissible(self, mu: WeightCoords) -> bool:
        if self.side == "super":
            return in_P_plusplus(mu, self.p, self.q, self.m, self.n).member
        return True

    def prefactor(self) -> dict[str, Fraction]:
        """Monomial turning the extended (hatted) super character into the plain one."""
        if self.side != "super":
            return {}
        if self.tag == "a":
            out = {v: Fraction(self.d) for v in Alphabet("xinv", self.p).variables}
            out.update({v: Fraction(-self.d) for v in Alphabet("etainv", self.q).variables})
            return out
        h = Fraction(self.d, 2)
        out = {v: h for v in Alphabet("x", self.m).variables}
        out.update({v: -h for v in Alphabet("eta", self.n).variables})
        return out


def _mono(a: str, b: str) -> dict:
    return {a: 2} if a == b else {a: 1, b: 1}


def _group_char(g: str, lam, d: int, ring: Ring) -> Series:
    return finite_chars.group_character(g, lam, d, None, "z").embed(ring)


# contributors and homology ------------------------------------------------------------

@dataclass(frozen=True)
class Contributor:
    k: int
    element: WeylElement
    member: object
    weight: WeightCoords
    image: object
    shapes: object
    degree: int

    def to_json(self) -> dict:
        sh = self.shapes
        shape = {"plus": list(sh[0]), "minus": list(sh[1])} if isinstance(sh, tuple) and len(sh) == 2 \
            and isinstance(sh[0], Partition) else list(sh)
        img = self.image.to_json() if hasattr(self.image, "to_json") else None
        return {"k": self.k, "w": self.element.text(), "label": list(self.member),
                "dot_weight": self.weight.to_json(), "levi_weight": img,
                "shape": shape, "degree": self.degree}


def _shape_degree(shapes) -> int:
    if isinstance(shapes, tuple) and len(shapes) == 2 and isinstance(shapes[0], Partition):
        return shapes[0].size + shapes[1].size
    return Partition(shapes).size


def contributors(pair: DualPair, lam, k: int, check: bool = True) -> list[Contributor]:
    """Summands of the k-th homology: one per coset representative w (and per
    member of a paired label) whose dot weight passes the hook filter."""
    out = []
    for member in pair.members(lam):
        base = pair.base_weight(member)
        target_cas = None
        if check and pair.side != "classical" and pair.admissible(member):
            target_cas = pair.casimir(pair.module_weight(member))
        for w in coset_reps(pair.source_tag, k):
            mu = dot(w, base)
            if not pair.term_admissible(mu):
                continue
            shapes = pair.shapes(mu)
            img = pair.image(mu)
            if check:
                if pair.side == "classical":
                    if casimir_classical(mu) != casimir_classical(base):
                        raise AssertionError(f"Casimir changed along the dot orbit at {w.text()}")
                elif target_cas is not None and pair.casimir(img) != target_cas:
                    raise AssertionError(f"Casimir filter rejects {w.text()} for {member}")
            out.append(Contributor(k, w, member, mu, img, shapes, _shape_degree(shapes)))
    if check:
        seen = set()
        for c in out:
            key = (c.member, c.image)
            if key in seen:
                raise AssertionError(f"repeated Levi weight in degree {k}")
            seen.add(key)
    return out


def min_degree(pair: DualPair, lam, k: int) -> int | None:
    """Smallest shape size over all of W^0_k (hook filter ignored)."""
    sizes = []
    for member in pair.members(lam):
        base = pair.base_weight(member)
        for w in coset_reps(pair.source_tag, k):
            sizes.append(_shape_degree(pair.shapes(dot(w, base))))
    return min(sizes) if sizes else None


def max_homology_degree(pair: DualPair, lam, D: int) -> int:
    """Largest k whose homology can reach degree D (degrees grow with k)."""
    k = 0
    base = min_degree(pair, lam, 0)
    while True:
        nxt = min_degree(pair, lam, k + 1)
        if nxt is None or nxt > D:
            return k
        if nxt < base + k + 1:
            raise AssertionError("homology degree failed to grow with k")
        k += 1


@dataclass
class HomologyCharacter:
    pair: DualPair
    label: object
    k: int
    series: Series
    contributors: list[Contributor] = field(default_factory=list)
    prefactor: dict = field(default_factory=dict)

    def plain(self) -> Series:
        """Character with the prefactor applied (untruncated, half units if needed)."""
        if not self.prefactor:
            return self.series
        ring = self.series.ring
        half = {v for v, e in self.prefactor.items() if Fraction(e).denominator != 1}
        alphas = []
        for a in ring.alphabets:
            needs = any(v in half for v in a.variables)
            alphas.append(Alphabet(a.name, a.size, a.kind, a.half or needs))
        target = Ring(alphas, None)
        return self.series.embed(target).mul_monomial(self.prefactor)

    def to_json(self) -> dict:
        return {"pair": self.pair.describe(), "label": list(self.label), "k": self.k,
                "character": self.series.to_json(),
                "prefactor": {v: str(e) for v, e in self.prefactor.items()},
                "contributors": [c.to_json() for c in self.contributors]}


def homology_character(pair: DualPair, lam, k: int, ring: Ring | None = None) -> HomologyCharacter:
    """k-th homology character: the sum of Levi characters over the contributors.

    Without a ring the character is computed exactly (no truncation).
    """
    cs = contributors(pair, lam, k)
    if ring is None:
        top = max((c.degree for c in cs), default=0)
        ring = pair.module_ring(None) if pair.side == "super" else \
            Ring(pair.module_alphabets(max(top, 1)), None)
    total = ring.zero()
    for c in cs:
        total = total + pair.term(c.shapes, ring)
    return HomologyCharacter(pair, lam, k, total, cs, pair.prefactor())


def euler_sum(pair: DualPair, lam, ring: Ring) -> Series:
    """sum_k (-1)^k ch H_k truncated at the ring degree."""
    D = ring.degree
    total = ring.zero()
    for k in range(max_homology_degree(pair, lam, D) + 1):
        h = homology_character(pair, lam, k, ring).series
        total = total + (h if k % 2 == 0 else -h)
    return total


def module_character(pair: DualPair, lam, ring: Ring) -> Series:
    """Irreducible character from the Kostant type formula, truncated.

    For paired O(2l) labels the result is the sum over lam and tilde(lam).
    """
    return euler_sum(pair, lam, ring) * pair.inverse_denominator(ring)


# the sum side and extraction -----------------------------------------------------------

def sum_side(pair: DualPair, D: int, progress=None) -> tuple[Series, list]:
    """sum over labels of ch L * ch V, and the list of labels used."""
    ring = pair.ring(D)
    mring = pair.module_ring(D)
    inv = pair.inverse_denominator(mring)
    total = ring.zero()
    used = []
    for lam in pair.labels(D):
        chl = euler_sum(pair, lam, mring) * inv
        if not chl:
            continue
        low = chl.min_degree()
        if low != min(pair.label_degree(mu) for mu in pair.members(lam)):
            raise AssertionError(f"character of {lam} starts in degree {low}")
        chv = _group_char(pair.group, lam, pair.d, ring)
        total = total + chl.embed(ring) * chv
        used.append(lam)
        if progress:
            progress(lam)
    return total, used


def extract_characters(pair: DualPair, D: int, total: Series | None = None) -> dict:
    """Module characters read off the product side by peeling off group
    characters from the lexicographically largest torus weight down.

    Returns label -> character; paired O(2l) labels give pair sums.
    """
    ring = pair.ring(D)
    mring = pair.module_ring(D)
    rest = pair.product_side(D) if total is None else total
    gnames = [a.name for a in pair.group_alphabets()]
    zsize = pair.rank
    out: dict = {}
    while rest:
        parts = rest.split_by(gnames, mring)
        lead = max(parts, key=lambda g: g[:zsize])
        expo = lead[:zsize]
        if pair.group == "Pin":
            if any(e % 2 == 0 for e in expo):
                raise AssertionError(f"unexpected integral Pin weight {expo}")
            lam = Partition((e - 1) // 2 for e in expo)
        elif pair.group == "GL":
            lam = GeneralizedPartition(expo)
        else:
            lam = Partition(expo)
        if pair.group == "O" and pair.d % 2:
            base_eps = lam.size % 2
            for e in (0, 1):
                key = expo + ((base_eps + e) % 2,)
                coeff = parts.get(key)
                if coeff is None or not coeff:
                    continue
                label = lam if e == 0 else tilde(lam, pair.d)
                out[label] = coeff
                rest = rest - coeff.embed(ring) * _group_char("O", label, pair.d, ring)
            continue
        coeff = parts[lead]
        out[lam] = coeff
        rest = rest - coeff.embed(ring) * _group_char(pair.group, lam, pair.d, ring)
    return out
