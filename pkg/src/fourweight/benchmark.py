"""Benchmark the numba kernels against the pure-numpy fallback.

Run as ``python -m fourweight.benchmark``; the numba path additionally
reports a warm second run so jit compilation is visible.  Both backends
must produce identical results, which is asserted here as well.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from fourweight import backend
from fourweight.cover import _column_syndromes
from fourweight.reedmuller import rm1


def _bench(fn, *args, repeats: int = 1):
    best = None
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def _random_code_columns(rng: np.random.Generator, n: int, k: int):
    from fourweight.linear import LinearCode

    while True:
        code = LinearCode(n, [int(rng.integers(0, 1 << n)) for _ in range(k)])
        if code.k == k:
            return _column_syndromes(code)


def run(seed: int = 0, r_bits: int = 22, words_k: int = 9) -> None:
    rng = np.random.default_rng(seed)
    rows = []

    cols, r = _random_code_columns(rng, 32, 32 - r_bits)
    impls = [("numpy", backend._leader_weights_numpy)]
    if backend._HAVE_NUMBA:
        impls.append(("numba", backend._leader_weights_numba))
    ref = None
    for name, fn in impls:
        out, cold = _bench(fn, cols, r)
        _, warm = _bench(fn, cols, r, repeats=3)
        rows.append((f"leader_weights 2^{r}", name, cold, warm))
        if ref is None:
            ref = out
        else:
            assert np.array_equal(ref, out), "backends disagree on leader weights"

    words = rm1(5).words()
    reps = rng.integers(0, 1 << 32, size=1 << 16).astype(np.uint64)
    allowed = 0
    for w in (12, 16, 20):
        allowed |= 1 << w
    impls = [("numpy", backend._coset_filter_numpy)]
    if backend._HAVE_NUMBA:
        impls.append(("numba", backend._coset_filter_numba))
    ref = None
    for name, fn in impls:
        out, cold = _bench(fn, words, reps, allowed)
        _, warm = _bench(fn, words, reps, allowed, repeats=3)
        rows.append((f"coset_filter {reps.size}x{words.size}", name, cold, warm))
        if ref is None:
            ref = out
        else:
            assert np.array_equal(ref, out), "backends disagree on coset filter"

    basis = np.array(rm1(5).row_masks + (0x5A5A5A5A, 0xF0F00F0F), dtype=np.uint64)
    impls = [("numpy", backend._weight_counts_numpy)]
    if backend._HAVE_NUMBA:
        impls.append(("numba", backend._weight_counts_numba))
    ref = None
    for name, fn in impls:
        out, cold = _bench(fn, basis, 32)
        _, warm = _bench(fn, basis, 32, repeats=3)
        rows.append((f"weight_counts 2^{basis.size}", name, cold, warm))
        if ref is None:
            ref = out
        else:
            assert np.array_equal(ref, out), "backends disagree on weight counts"

    print(f"active backend: {backend.backend_name()}")
    print(f"{'kernel':<28}{'impl':<8}{'cold s':>10}{'warm s':>10}")
    for kernel, name, cold, warm in rows:
        print(f"{kernel:<28}{name:<8}{cold:>10.4f}{warm:>10.4f}")


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--r-bits", type=int, default=22, help="syndrome bits for the sweep")
    args = parser.parse_args(argv)
    run(seed=args.seed, r_bits=args.r_bits)


if __name__ == "__main__":
    main()
