"""Acceptance criteria, one test per criterion.

Every check is exact (Fraction arithmetic; zero tolerance). Criteria with a
stated runtime target assert the elapsed wall time. Each test prints one
PASS/FAIL line; run with `pytest tests/test_acceptance.py -v -s` to see them.
"""

import io
import json
import time
from contextlib import redirect_stdout

from bisetkit import cli, verify


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"{status} {name}{suffix}")


def _run(suite_fn, **kw):
    t0 = time.perf_counter()
    checks = suite_fn(**kw)
    elapsed = time.perf_counter() - t0
    return checks, elapsed


def test_criterion_1_burnside_idempotents():
    """Idempotent families for C2, C3, C4, V4, S3: orthogonal, complete,
    mark-characterized; exact; under 5 seconds."""
    checks, elapsed = _run(verify.suite_idempotents)
    ok = all(c.ok for c in checks) and elapsed < 5.0
    _report("criterion-1 burnside-idempotents", ok, f"{elapsed:.2f}s")
    assert all(c.ok for c in checks), [c.name for c in checks if not c.ok]
    assert elapsed < 5.0, f"idempotent suite took {elapsed:.2f}s (target < 5s)"


def test_criterion_2_composition_engines_agree():
    """compose == mackey_compose exhaustively over {1,C2,C3,V4} with the
    144 ambient bound, plus 200 seeded random rational elements; under 60s."""
    checks, elapsed = _run(verify.suite_engines, seed=0)
    ok = all(c.ok for c in checks) and elapsed < 60.0
    _report("criterion-2 composition-engines", ok, f"{elapsed:.2f}s")
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    assert elapsed < 60.0, f"engine suite took {elapsed:.2f}s (target < 60s)"


def test_criterion_3_green_axioms_and_ring_equivalence():
    """Green axioms plus both directions of the ring/cross equivalence for
    QB, QB shifted by C2 and C3, and every constructed block instance."""
    checks, elapsed = _run(verify.suite_axioms)
    ok = all(c.ok for c in checks)
    _report("criterion-3 green-axioms", ok, f"{elapsed:.2f}s")
    assert ok, [c.name for c in checks if not c.ok]
    names = {c.name for c in checks}
    assert any("block:" in n for n in names), "block instances must be exercised"


def test_criterion_4_pa_structure():
    """Associativity and unit laws over {1, C2, C3}; composition agrees with
    biset composition under B(HxG) = B(H,G)."""
    checks, elapsed = _run(verify.suite_pa)
    ok = all(c.ok for c in checks)
    _report("criterion-4 pa-structure", ok, f"{elapsed:.2f}s")
    assert ok, [c.name for c in checks if not c.ok]


def test_criterion_5_shift_adjunction_identities():
    """rho = theta o psi pointwise; psi/theta/rho/lambda functorial; both
    adjunction naturality equations; L in {C2, C3}, objects in {1, C2}."""
    checks, elapsed = _run(verify.suite_shifts)
    ok = all(c.ok for c in checks)
    _report("criterion-5 shift-adjunctions", ok, f"{elapsed:.2f}s")
    assert ok, [c.name for c in checks if not c.ok]


def test_criterion_6_commute_identities():
    """Both coordinate-permutation identities and the square/commute
    equivalence, exhaustively over groups of order <= 4."""
    checks, elapsed = _run(verify.suite_commute)
    ok = all(c.ok for c in checks)
    _report("criterion-6 commute-identities", ok, f"{elapsed:.2f}s")
    assert ok, [c.name for c in checks if not c.ok]


def test_criterion_7_center():
    """iota lands in the center, pi o iota = id, identity candidate neutral,
    and the product projects to composition at the trivial group."""
    checks, elapsed = _run(verify.suite_center)
    ok = all(c.ok for c in checks)
    _report("criterion-7 center", ok, f"{elapsed:.2f}s")
    assert ok, [c.name for c in checks if not c.ok]


def test_criterion_8_decomposition():
    """Block dims (1,1) and (2,3) for the C2 shift with zero pairwise
    intersections; predictions match computed blocks for |GxH| <= 36; <30s."""
    checks, elapsed = _run(verify.suite_decomp)
    ok = all(c.ok for c in checks) and elapsed < 30.0
    _report("criterion-8 decomposition", ok, f"{elapsed:.2f}s")
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    assert elapsed < 30.0, f"decomposition suite took {elapsed:.2f}s (target < 30s)"


def test_criterion_9_determinism():
    """Two `verify` runs with the same seed produce byte-identical reports."""
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(["verify", "engines", "--seed", "7"])
        assert code == 0
        outputs.append(buf.getvalue())
    ok = outputs[0] == outputs[1] and len(outputs[0]) > 0
    _report("criterion-9 determinism", ok)
    assert ok
    json.loads(outputs[0])
