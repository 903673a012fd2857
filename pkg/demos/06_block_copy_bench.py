"""Timing the block-copy fast path against the element-wise path.

The transformer remaps the leading axis and copies the two trailing axes,
so each source row of 1024 contiguous floats moves as one slice
assignment.  Both paths produce bit-identical results; only the speed
differs.
"""

import time

import numpy as np

from scatterkit import ProvisionTensor, Scattering, max_sliceable_suffix, scatter

lead_src, lead_tgt, suffix = 512, 1024, (32, 32)
source_shape = (lead_src,) + suffix
target_shape = (lead_tgt,) + suffix

sigma = (np.arange(lead_src, dtype=np.int64) * 2 + 1) % lead_tgt
grid = np.indices(source_shape, dtype=np.int64).reshape(3, -1).T
rows = np.empty((grid.shape[0], 3), dtype=np.int64)
rows[:, 0] = sigma[grid[:, 0]]
rows[:, 1:] = grid[:, 1:]
provision = ProvisionTensor(rows.reshape(source_shape + (3,)), target_shape)

print("source:", source_shape, "->", "target:", target_shape,
      f"({np.prod(target_shape)} elements)")
print("copied suffix length:", max_sliceable_suffix(provision)[0])

rng = np.random.default_rng(0)
scattering = Scattering(
    provision,
    rng.standard_normal(source_shape),
    rng.standard_normal(target_shape),
)


def best_of(fn, n=5):
    times = []
    for _ in range(n):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


fast, _ = scatter(scattering, "last")
slow, _ = scatter(scattering, "last", fast_path=False)
print("outputs bit-identical:", fast.tobytes() == slow.tobytes())

t_fast = best_of(lambda: scatter(scattering, "last"))
t_slow = best_of(lambda: scatter(scattering, "last", fast_path=False))
print(f"element-wise path: {t_slow * 1e3:7.2f} ms")
print(f"block-copy path:   {t_fast * 1e3:7.2f} ms")
print(f"speedup:           {t_slow / t_fast:7.1f}x")
