"""Provision tensors: index maps stored as integer tables.

A transformer from one index space to another is tabulated as an integer
tensor whose last axis holds the target index for each source index.  A
factored transformer routes part of the source index through an inner
table and part around it, and can be flattened back into one table.
"""

import numpy as np

from scatterkit import (
    ProvisionTensor,
    XTransformerSpec,
    compose_provision,
    identity_pick,
    index_iter,
    provision_image,
    transform,
    validate_provision,
)
from scatterkit import fixtures as fx

# the embed table relocates a (4, 2) grid into a (2, 2, 2, 2) target
embed = fx.embed_provision()
print("source shape:", embed.source_shape, "-> target shape:", embed.target_shape)
print("table:")
print(embed.table)

print("\ntransform reads one row:")
for source in [(0, 0), (3, 0), (3, 1)]:
    print(f"  {source} -> {transform(embed, source)}")

image = provision_image(embed)
print(f"\nimage covers {len(image)} of 16 target cells, all in the low half:")
print(" ", sorted(image)[:4], "...")

# validation reports every entry escaping the declared target shape
ok = validate_provision(embed)
print("\nviolations against (2,2,2,2):", ok)
narrowed = ProvisionTensor(embed.table, (2, 2, 2, 1))
print("violations against (2,2,2,1):", validate_provision(narrowed))

# factored form: inner table [[0,0],[1,1]] on coordinate 0, coordinates
# 1 and 2 passed through, identity reassembly
spec = XTransformerSpec(
    inner=fx.diag_inner(),
    inner_pick=(0,),
    pass_pick=(1, 2),
    out_pick=identity_pick(4),
    source_shape=(2, 2, 2),
    target_shape=(2, 2, 2, 2),
)
composed = compose_provision(spec)
print("\ncomposed factored transformer (i,j,k) -> (i,i,j,k):")
for source in index_iter((2, 2, 2)):
    print(f"  {source} -> {transform(composed, source)}")
print("matches the diag fixture:", np.array_equal(composed.table, fx.diag_provision().table))
