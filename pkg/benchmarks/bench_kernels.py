#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Representative workloads at the scale the verification suites hit: a
256-element product ambient for canonicalization and closure, S4 coset and
double-coset marking, and the tensor-orbit union-find. Run as
`python benchmarks/bench_kernels.py [repeat]`.
"""

from __future__ import annotations

import sys
import time

import numpy as np

from bisetkit import _pykern
from bisetkit.groups import (
    direct_product,
    generated_subgroup,
    klein_four,
    subgroup_lattice,
    symmetric_group,
)

try:
    from bisetkit import _ckern
except ImportError:
    _ckern = None


def _bench(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _normalize(value):
    if isinstance(value, tuple) and value and not isinstance(value[0], (int, np.integer)):
        return tuple(_normalize(v) for v in value)
    return [int(x) for x in value]


def main() -> int:
    repeat = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    v4 = klein_four()
    huge = direct_product(direct_product(v4, v4), direct_product(v4, v4))
    s4 = symmetric_group(4)
    lat = subgroup_lattice(s4)
    mid = next(s for s in lat.subgroups if s.order == 4)

    nr = huge.factors[1].order
    diag = generated_subgroup(huge, [m * nr + m for m in range(1, 16)])
    gens = np.asarray(diag.members[1:4], dtype=np.int32)

    x_points, g_order, y_points = 64, 16, 64
    rng = np.random.default_rng(0)
    rx = rng.integers(0, x_points, size=(x_points, g_order)).astype(np.int32)
    ly = rng.integers(0, y_points, size=(g_order, y_points)).astype(np.int32)

    cases = [
        ("closure(order 256, 3 gens)", "closure", (huge.table, huge.identity, gens)),
        (
            f"canonical_conjugate(order 256, |S|={diag.order})",
            "canonical_conjugate",
            (huge.table, huge.inv_table, diag.members),
        ),
        ("coset_space(S4, |S|=4)", "coset_space", (s4.table, mid.members)),
        ("double_cosets(S4, 4x4)", "double_cosets", (s4.table, mid.members, mid.members)),
        ("tensor_orbits(64x64 pts, |G|=16)", "tensor_orbits", (rx, ly)),
    ]

    print(f"kernel backend comparison (best of {repeat})")
    print(f"{'case':44s} {'python':>12s} {'compiled':>12s} {'speedup':>8s}")
    for label, name, args in cases:
        py_fn = getattr(_pykern, name)
        t_py = _bench(py_fn, args, repeat)
        if _ckern is None:
            print(f"{label:44s} {t_py * 1e3:10.3f}ms {'(not built)':>12s}")
            continue
        c_fn = getattr(_ckern, name)
        if _normalize(py_fn(*args)) != _normalize(c_fn(*args)):
            raise AssertionError(f"backend disagreement in {name}")
        t_c = _bench(c_fn, args, repeat)
        print(f"{label:44s} {t_py * 1e3:10.3f}ms {t_c * 1e3:10.3f}ms {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
