#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the numpy fallback.

Times the three backend entry points (gamma0, exp_gamma0, primitive)
over log-spaced abscissa batches covering all evaluation regimes, plus
one end-to-end energy evaluation, for both backends.  Backends are
forced via fresh subprocess imports with CASIMIR_PWS_BACKEND set, so a
single run reports an honest side-by-side, e.g.::

    python3 benchmarks/bench_kernels.py --repeats 5

Cross-backend agreement is asserted (<= 1e-12 relative) before any
timing is reported.
"""

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json
import sys
import time

import numpy as np

from casimir_pws._backend import kernels as kb
from casimir_pws.materials import MaterialModel
from casimir_pws.pws import pws_atom_slab, pws_slab_slab
from casimir_pws.quadrature import QuadratureConfig

repeats = int(sys.argv[1])
rng = np.random.default_rng(20260814)
x = np.geomspace(1e-4, 3e2, 20000)
x = x * rng.uniform(0.9, 1.1, x.size)  # de-regularize the spacing

def best_of(fn, *args, **kw):
    t = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args, **kw)
        t.append(time.perf_counter() - t0)
    return min(t)

m = MaterialModel.lorentz_eps(5.0, 2.0)
a = MaterialModel.lorentz_alpha(0.02, 1.0)
cfg = QuadratureConfig(rel_tol=1e-10)

out = {
    "backend": kb.BACKEND_NAME,
    "gamma0": best_of(kb.gamma0, x),
    "exp_gamma0": best_of(kb.exp_gamma0, x),
    "primitive_f": best_of(kb.primitive, "f", x),
    "primitive_i": best_of(kb.primitive, "i", x),
    "slab_slab_energy": best_of(pws_slab_slab, m, m, 1.0, 1.0, 1.0,
                                cfg=cfg),
    "checks": {
        "gamma0": kb.gamma0(x)[::997].tolist(),
        "primitive_i": kb.primitive("i", x)[::997].tolist(),
        "energy": pws_atom_slab(a, m, 1.0, 0.7, cfg=cfg).value,
    },
}
json.dump(out, sys.stdout)
"""


def _run_backend(name: str, repeats: int) -> dict:
    env = dict(os.environ, CASIMIR_PWS_BACKEND=name)
    proc = subprocess.run(
        [sys.executable, "-c", _WORKER, str(repeats)],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5,
                    help="best-of-N timing repeats (default 5)")
    args = ap.parse_args()

    results = {name: _run_backend(name, args.repeats)
               for name in ("cython", "numpy")}

    ca, nb = results["cython"]["checks"], results["numpy"]["checks"]
    for key in ("gamma0", "primitive_i"):
        import math
        pairs = zip(ca[key], nb[key])
        worst = max(abs(u - v) / max(abs(v), 1e-300) for u, v in pairs)
        if worst > 1e-12:
            raise SystemExit(f"backend mismatch in {key}: {worst:.3e}")
    dev = abs(ca["energy"] / nb["energy"] - 1.0)
    if dev > 1e-12:
        raise SystemExit(f"backend mismatch in energy: {dev:.3e}")

    print(f"backends agree to <= 1e-12; best of {args.repeats} runs, "
          f"20000-point batches\n")
    keys = ("gamma0", "exp_gamma0", "primitive_f", "primitive_i",
            "slab_slab_energy")
    width = max(len(k) for k in keys)
    print(f"{'kernel':<{width}}  {'cython':>10}  {'numpy':>10}  "
          f"{'speedup':>8}")
    for key in keys:
        tc = results["cython"][key]
        tn = results["numpy"][key]
        print(f"{key:<{width}}  {tc * 1e3:>8.2f}ms  {tn * 1e3:>8.2f}ms  "
              f"{tn / tc:>7.2f}x")
    if results["cython"]["backend"] != "cython":
        print("\nwarning: compiled backend unavailable; "
              "both columns ran the numpy fallback", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
