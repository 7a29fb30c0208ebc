import json

from kostant_osc.howe import DualPair
from kostant_osc.partitions import GeneralizedPartition, Partition
from kostant_osc.series import Ring, modules
from kostant_osc.verify import (CheckResult, first_mismatch, verify_casimir_lemmas, verify_casimir_negative,
                                verify_dot_invariance, verify_duality, verify_euler_poincare,
                                verify_omega_characters, verify_omega_transport)

P = Partition


def test_duality_examples():
    assert verify_duality(DualPair("classical", "c", 2), 5).ok
    assert verify_duality(DualPair("super", "c", 2, m=1, n=1), 4).ok
    assert verify_duality(DualPair("negative", "b0", 2), 4).ok


def test_euler_poincare_examples():
    assert verify_euler_poincare(DualPair("classical", "c", 2), P(()), 4).ok
    assert verify_euler_poincare(DualPair("super", "c", 2, m=1, n=1), P((1,)), 4).ok
    assert verify_euler_poincare(DualPair("negative", "d", 2), P((1,)), 4).ok


def test_omega_transport_examples():
    pair = DualPair("super", "c", 2, m=1, n=1)
    for k in (0, 1, 2):
        assert verify_omega_transport(pair, P(()), k).ok
    pair = DualPair("super", "a", 1, 0, 0, 1, 1)
    assert verify_omega_transport(pair, GeneralizedPartition((0,)), 1).ok
    assert verify_omega_transport(DualPair("negative", "c", 3), P((1,)), 2).ok


def test_omega_on_characters():
    assert verify_omega_characters(DualPair("negative", "d", 2), P((1,)), 5).ok


def test_casimir_checks():
    assert verify_casimir_lemmas("c", 2, 0, 0, 1, 1, samples=20).ok
    assert verify_casimir_negative("c", 2, samples=20).ok
    assert verify_dot_invariance("d", 3, P((1,))).ok


def test_mismatch_report():
    ring = Ring([modules("x", 1)], 2)
    a = ring.one() + ring.var("x1")
    b = ring.one()
    mm = first_mismatch(a, b)
    assert mm == {"monomial": {"x1": "1"}, "expected": "1", "actual": "0"}
    assert first_mismatch(a, a) is None


def test_result_schema():
    r = verify_duality(DualPair("classical", "a", 1), 3)
    data = json.loads(json.dumps(r.to_json()))
    assert set(data) == {"check", "params", "degree", "ok", "first_mismatch", "contributors"}
    assert data["ok"] and data["degree"] == 3
    assert r.line().startswith("PASS duality")
    bad = CheckResult("duality", {}, 3, False, {"monomial": {}})
    assert bad.line().startswith("FAIL")
