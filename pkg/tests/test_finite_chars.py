from fractions import Fraction

import pytest

from kostant_osc.finite_chars import (NotDivisible, alternant, char_gl, char_o, char_pin, char_sp,
                                      divide_exact, torus_ring, weyl_character, weyl_dimension)
from kostant_osc.partitions import GeneralizedPartition, in_P_O, partitions_upto, tilde

H = Fraction(1, 2)


def _at_one(s):
    return sum(s.terms.values())


def test_gl_examples():
    R = torus_ring("GL", 2)
    z1, z2 = R.var("z1"), R.var("z2")
    assert char_gl((1, 0), 2) == z1 + z2
    assert char_gl((1, 1), 2) == z1 * z2
    assert char_gl((0, -1), 2) == R.monomial({"z1": -1}) + R.monomial({"z2": -1})


def test_sp_examples():
    R = torus_ring("Sp", 4)
    assert char_sp((), 4) == R.one()
    R2 = torus_ring("Sp", 2)
    assert char_sp((1,), 2) == R2.monomial({"z1": 1}) + R2.monomial({"z1": -1})
    want = R.from_terms([({"z1": a, "z2": b}, 1) for a in (1, -1) for b in (1, -1)] + [({}, 1)])
    assert char_sp((1, 1), 4) == want


def test_o_examples():
    for d in range(1, 6):
        assert char_o((), d) == torus_ring("O", d, with_sign=bool(d % 2)).one()
    R = torus_ring("O", 2)
    for k in range(1, 5):
        assert char_o((k,), 2) == R.monomial({"z1": k}) + R.monomial({"z1": -k})


def test_o_odd_sign_convention():
    R = torus_ring("O", 3, with_sign=True)
    vector = R.monomial({"z1": 1}) + R.one() + R.monomial({"z1": -1})
    # -I acts on the vector representation by -1
    assert char_o((1,), 3) == vector.mul_monomial({"eps": 1})
    # its determinant twist (1,1) carries eps^{|lam|} = 1 on the same torus character
    assert char_o((1, 1), 3) == vector
    assert tilde((1, 1), 3) == (1,)


def test_pin_examples():
    R = torus_ring("Pin", 2, half=True)
    assert char_pin((), 2) == R.monomial({"z1": H}) + R.monomial({"z1": -H})
    for k in range(1, 4):
        assert char_pin((k,), 2) == R.monomial({"z1": k + H}) + R.monomial({"z1": -k - H})
    R4 = torus_ring("Pin", 4, half=True)
    want = R4.from_terms([({"z1": a * H, "z2": b * H}, 1) for a in (1, -1) for b in (1, -1)])
    assert char_pin((), 4) == want


def test_dimensions_match_weyl_formula():
    for d in range(1, 7):
        for lam in partitions_upto(4):
            if len(lam) <= d:
                g = GeneralizedPartition(tuple(lam) + (0,) * (d - len(lam)))
                assert _at_one(char_gl(g, d)) == weyl_dimension("A", tuple(g))
            if d % 2 == 0 and len(lam) <= d // 2:
                hw = tuple(lam.part(i) for i in range(1, d // 2 + 1))
                assert _at_one(char_sp(lam, d)) == weyl_dimension("C", hw)
                kind = "D"
                spin = tuple(h + H for h in hw)
                assert _at_one(char_pin(lam, d)) == 2 * weyl_dimension(kind, spin)
            if in_P_O(lam, d) and len(lam) <= d // 2 and d >= 2:
                hw = tuple(lam.part(i) for i in range(1, d // 2 + 1))
                kind = "D" if d % 2 == 0 else "B"
                dim = weyl_dimension(kind, hw)
                if d % 2 == 0 and hw and hw[-1] > 0:
                    dim *= 2
                ch = char_o(lam, d)
                assert sum(ch.terms.values()) == dim
                assert sum(char_o(tilde(lam, d), d).terms.values()) == dim


def test_alternant_division_exact():
    for kind, r in [("A", 3), ("B", 2), ("C", 2), ("D", 3)]:
        for hw in [(0,) * r, (2,) + (0,) * (r - 1), (3, 1) + (0,) * (r - 2)]:
            assert weyl_character(kind, hw)


def test_divide_exact_detects_remainder():
    a = alternant("C", (2, 1))
    b = alternant("C", (3, 1))
    with pytest.raises(NotDivisible):
        divide_exact(a + a.ring.one(), b)


def test_divide_exact_round_trip():
    a = weyl_character("B", (1, 1))
    b = weyl_character("B", (1, 0))
    assert divide_exact(a * b, b) == a


def test_bad_labels_rejected():
    with pytest.raises(ValueError):
        char_sp((1, 1), 2)
    with pytest.raises(ValueError):
        char_o((1, 1, 1), 2)
    with pytest.raises(ValueError):
        char_gl((1,), 2)
