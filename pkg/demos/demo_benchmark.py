"""Measured arithmetic work of the fast transform against its bound."""

import time

import numpy as np

from gtt import GTTOperator, OpCounter, dft_matrix, gtt_apply, hadamard

# Each butterfly level costs N*b multiplies and N*(b-1) adds, so the total
# is n*N*(2b-1), always under the 4*N*b*log_b(N) budget.
for base, label, n_max in ((hadamard(), "b=2", 20), (dft_matrix(3), "b=3", 12)):
    b = base.shape[0]
    print(f"\n{label}")
    print(f"{'n':>3} {'N':>9} {'ops':>12} {'bound':>12} {'ratio':>6} {'ms':>8}")
    prev = None
    rng = np.random.default_rng(0)
    for n in range(4, n_max + 1, 2):
        op = GTTOperator(base, n)
        x = rng.standard_normal(op.N) + 1j * rng.standard_normal(op.N)
        counter = OpCounter()
        t0 = time.perf_counter()
        gtt_apply(op, x, counter)
        ms = (time.perf_counter() - t0) * 1e3
        bound = 4 * op.N * b * n
        growth = "" if prev is None else f"{counter.total / prev:.2f}"
        print(f"{n:>3} {op.N:>9} {counter.total:>12} {bound:>12} "
              f"{counter.total / bound:>6.2f} {ms:>8.3f}  {growth}")
        prev = counter.total
