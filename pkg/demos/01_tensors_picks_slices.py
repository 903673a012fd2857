"""Tour of the core vocabulary: shapes, indices, picks, slices.

Everything is a plain numpy array or a python tuple; the helpers make the
index bookkeeping explicit instead of hiding it in fancy-indexing rules.
"""

import numpy as np

from scatterkit import (
    apply_pick,
    concat_index,
    identity_pick,
    index_class,
    index_iter,
    is_shuffle,
    is_smooth,
    pick_image,
    range_pick,
    shape_size,
    slice_tensor,
    subtensor,
)

# a (3, 3, 2) tensor whose row at (i, j) is the pair (i, j)
grid = np.array(
    [[[i, j] for j in range(3)] for i in range(3)], dtype=np.int64
)

print("shape:", grid.shape, "size:", shape_size(grid.shape))

print("\nrow-major index order for (2, 2):")
print(" ", list(index_iter((2, 2))))

print("\nindex concatenation is tuple concatenation:")
print("  (1,2,3) + (4,5) ->", concat_index((1, 2, 3), (4, 5)))

# a pick reads coordinates out of an index by position
index = (9, 8, 7, 6, 5, 4, 3, 2)
pick = (4, 6, 7)
print(f"\napply_pick({pick}, {index}) ->", apply_pick(pick, index))
print("identity pick is a no-op:", apply_pick(identity_pick(3), (7, 8, 9)))

# smooth picks select a contiguous coordinate range; shuffles permute
print("\nis_smooth((1, 2)):", is_smooth((1, 2)))
print("is_smooth((0, 2)):", is_smooth((0, 2)))
print("range_pick(2, 5):", range_pick(2, 5))
print("pick_image((1, 1, 0)):", pick_image((1, 1, 0)))
print("is_shuffle((2, 0, 1), 3):", is_shuffle((2, 0, 1), 3))

# slicing gathers along every axis at once; picks may repeat values
block = slice_tensor(grid, ([0], [0, 1, 2], [0, 1]))
print("\nslice with picks ([0], [0,1,2], [0,1]) has shape", block.shape)
print(block[0])

doubled = slice_tensor(grid, ([1, 1], [0], [0, 1]))
print("\nrepeating a pick value duplicates rows:")
print(doubled[:, 0])

# a subtensor is the trailing block at a partial leading index
print("\nsubtensor at prefix (1,):")
print(subtensor(grid, (1,)))
print("subtensor at prefix (2, 1):", subtensor(grid, (2, 1)))

# an index class: everything agreeing on the picked coordinates
print("\nindex_class((2, 3), pick=(0,), index=(1, 0)):")
print(" ", sorted(index_class((2, 3), (0,), (1, 0))))
