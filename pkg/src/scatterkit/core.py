"""Dense row-major tensors, index tuples, and coordinate picks.

Tensors are plain C-contiguous numpy arrays: float64 for data, int64 for
index-valued tables.  An index is an ordinary python tuple of ints.  A pick
is a sequence of coordinate positions; applied to an index it selects (and
may duplicate or reorder) coordinates.  All functions here are pure and all
values immutable once built, so everything can be shared freely.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import numpy as np

from .errors import ArgumentError, PickRangeError, RankError

Shape = tuple[int, ...]
Index = tuple[int, ...]
Pick = tuple[int, ...]


def as_shape(dims) -> Shape:
    """Normalize to a tuple of nonnegative ints."""
    shape = tuple(int(d) for d in dims)
    if any(d < 0 for d in shape):
        raise ArgumentError(f"shape extents must be nonnegative, got {shape}")
    return shape


def shape_size(shape) -> int:
    """Number of valid indices: product of extents (1 for rank 0)."""
    size = 1
    for d in shape:
        size *= int(d)
    return size


def row_major_strides(shape) -> tuple[int, ...]:
    """Element strides with the last axis fastest."""
    strides = [1] * len(shape)
    for i in range(len(shape) - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    return tuple(strides)


def is_valid_index(shape, index) -> bool:
    return len(index) == len(shape) and all(
        0 <= c < d for c, d in zip(index, shape)
    )


def flat_offset(shape, index) -> int:
    """Row-major offset of ``index`` within ``shape``."""
    if not is_valid_index(shape, index):
        raise IndexError(f"index {tuple(index)} invalid for shape {tuple(shape)}")
    off = 0
    for c, d in zip(index, shape):
        off = off * d + c
    return off


def index_iter(shape) -> Iterator[Index]:
    """Every valid index in row-major order (last axis fastest).

    Rank-0 shapes yield the single empty index; zero-size shapes yield
    nothing.
    """
    return iter(np.ndindex(*as_shape(shape)))


def index_matrix(shape) -> np.ndarray:
    """All valid indices stacked as an int64 matrix (size, rank), row-major."""
    shape = as_shape(shape)
    k = len(shape)
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices(shape, dtype=np.int64)
    return grid.reshape(k, -1).T.copy()


def concat_index(a, b) -> Index:
    return tuple(a) + tuple(b)


def as_data_tensor(values, shape=None) -> np.ndarray:
    """Coerce to a C-ordered float64 array, optionally reshaped."""
    arr = np.asarray(values, dtype=np.float64, order="C")
    if shape is not None:
        arr = arr.reshape(as_shape(shape))
    return arr


def as_index_tensor(values, shape=None) -> np.ndarray:
    """Coerce to a C-ordered int64 array, optionally reshaped."""
    arr = np.asarray(values, dtype=np.int64, order="C")
    if shape is not None:
        arr = arr.reshape(as_shape(shape))
    return arr


def as_pick(values) -> Pick:
    return tuple(int(v) for v in values)


def identity_pick(n: int) -> Pick:
    return tuple(range(n))


def range_pick(h: int, k: int) -> Pick:
    """The consecutive positions h..k-1, materialized."""
    if h > k:
        raise ArgumentError(f"range pick needs h <= k, got {h} > {k}")
    return tuple(range(h, k))


def check_pick(pick, length: int, what: str = "index") -> Pick:
    """Validate that every pick value addresses a coordinate of ``length``.

    Negative values are rejected outright rather than wrapped.
    """
    pick = as_pick(pick)
    for v in pick:
        if not 0 <= v < length:
            raise PickRangeError(
                f"pick value {v} out of range for {what} of length {length}"
            )
    return pick


def apply_pick(pick, index) -> Index:
    """Select coordinates: result[i] = index[pick[i]]."""
    index = tuple(index)
    pick = check_pick(pick, len(index))
    return tuple(index[v] for v in pick)


def is_smooth(pick) -> bool:
    """True when values are consecutive increasing ints (vacuously for < 2)."""
    p = as_pick(pick)
    return all(p[i + 1] == p[i] + 1 for i in range(len(p) - 1))


def pick_image(pick) -> set[int]:
    """The set of distinct values the pick reads."""
    return set(as_pick(pick))


def is_shuffle(pick, n: int) -> bool:
    """True when the pick permutes 0..n-1."""
    p = as_pick(pick)
    return len(p) == n and pick_image(p) == set(range(n))


def slice_tensor(tensor, picks) -> np.ndarray:
    """Gather along every axis: result[J] = tensor[p0[J0], ..., pk-1[Jk-1]].

    Requires one pick per axis; each value must address a valid coordinate
    of its axis.  Picks may repeat values, duplicating rows or columns.
    """
    tensor = np.asarray(tensor)
    picks = [as_pick(p) for p in picks]
    if len(picks) != tensor.ndim:
        raise ArgumentError(
            f"need one pick per axis: got {len(picks)} picks for rank {tensor.ndim}"
        )
    for axis, p in enumerate(picks):
        check_pick(p, tensor.shape[axis], what=f"axis {axis}")
    if tensor.ndim == 0:
        return tensor.copy()
    arrays = [np.asarray(p, dtype=np.intp) for p in picks]
    return np.ascontiguousarray(tensor[np.ix_(*arrays)])


def subtensor(tensor, prefix) -> np.ndarray:
    """The trailing block at a leading partial index: H[J] = tensor[prefix + J]."""
    tensor = np.asarray(tensor)
    prefix = tuple(int(c) for c in prefix)
    if len(prefix) > tensor.ndim:
        raise IndexError(
            f"prefix {prefix} longer than tensor rank {tensor.ndim}"
        )
    for axis, c in enumerate(prefix):
        if not 0 <= c < tensor.shape[axis]:
            raise IndexError(
                f"prefix coordinate {c} out of range for axis {axis} "
                f"(extent {tensor.shape[axis]})"
            )
    return np.array(tensor[prefix])


def index_class(shape, pick, index) -> set[Index]:
    """All indices agreeing with ``index`` on every coordinate the pick reads.

    The classes over all base indices partition the index set of ``shape``;
    an empty pick puts every index in one class.
    """
    shape = as_shape(shape)
    index = tuple(int(c) for c in index)
    if not is_valid_index(shape, index):
        raise IndexError(f"index {index} invalid for shape {shape}")
    pick = check_pick(pick, len(index))
    pinned = pick_image(pick)
    axes = [
        (index[d],) if d in pinned else range(shape[d])
        for d in range(len(shape))
    ]
    return set(itertools.product(*axes))


def to_tuple(tensor) -> Index:
    """Read a rank-1 integer tensor out as an index tuple."""
    arr = np.asarray(tensor)
    if arr.ndim != 1:
        raise RankError(f"expected a rank-1 tensor, got rank {arr.ndim}")
    return tuple(int(v) for v in arr)


def to_tensor(index) -> np.ndarray:
    """Store an index tuple as a rank-1 int64 tensor."""
    return np.asarray(tuple(index), dtype=np.int64).reshape(len(tuple(index)))
