"""When can a scatter become block copies, and how do we prove it cannot?

A transformer whose last r coordinates pass straight through (with the
leading outputs depending only on the leading inputs) lets the engine copy
whole contiguous blocks instead of single elements.  When no such suffix
exists, the canonical factoring explains why: some source dim is read both
through the inner transformer and verbatim, and that overlap is the
obstruction.
"""

from scatterkit import (
    compose_provision,
    detect_collisions,
    disseminate_slice,
    max_sliceable_suffix,
    pass_through_map,
    slicing_impossibility,
    weak_decomposition,
)
from scatterkit import fixtures as fx
import numpy as np

# the diag transformer (i,j,k) -> (i,i,j,k): suffix of length 2
diag = fx.diag_provision()
r, inner = max_sliceable_suffix(diag)
print("diag transformer (i,j,k) -> (i,i,j,k)")
print("  max copied suffix:", r)
print("  inner leading map:", inner.table.tolist())
print("  verdict:", slicing_impossibility(diag).verdict)

# its scatter therefore moves 2x2 blocks: one source class per leading i
print("  footprint of the class fixing i=1:",
      sorted(disseminate_slice(diag, [0], (1, 0, 0))))

# the parity transformer (i,j) -> (i, j, i%2, j): no suffix exists
parity = fx.parity_provision()
print("\nparity transformer (i,j) -> (i, j, i%2, j)")
print("  max copied suffix:", max_sliceable_suffix(parity)[0])
print("  verbatim coordinate pairs:", sorted(pass_through_map(parity)))

spec = weak_decomposition(parity)
print("  canonical factoring:")
print("    inner table:", spec.inner.table.tolist())
print("    inner pick:", spec.inner_pick, " pass pick:", spec.pass_pick,
      " out pick:", spec.out_pick)
report = slicing_impossibility(parity)
print("  verdict:", report.verdict, " overlap:", sorted(report.overlap))
print("  (source dim 0 feeds the inner map AND passes through: that is")
print("   exactly what prevents a copied suffix)")

recomposed = compose_provision(spec)
print("  factoring recomposes exactly:",
      np.array_equal(recomposed.table, parity.table))

# collision structure is part of the same report surface
col = detect_collisions(diag)
print("\ndiag collision report: groups =", col.collision_count,
      " uncovered =", col.uncovered_count)
