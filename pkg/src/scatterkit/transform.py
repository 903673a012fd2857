"""Tabulated index transformers: provision tensors and factored composition.

A provision tensor stores an index-to-index map extensionally: the int row
at source index I is the target index I maps to.  A factored transformer
(:class:`XTransformerSpec`) builds the same kind of map out of an inner
provision plus three picks and can be flattened back into a single table
with :func:`compose_provision`.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .core import (
    Index,
    Pick,
    Shape,
    as_index_tensor,
    as_pick,
    as_shape,
    check_pick,
    identity_pick,
    index_matrix,
    is_valid_index,
    row_major_strides,
    shape_size,
    to_tuple,
)
from .errors import ArgumentError


@dataclass(frozen=True, eq=False)
class ProvisionTensor:
    """An index transformer tabulated as an integer tensor.

    ``table`` has shape ``source_shape + (len(target_shape),)``: the last
    axis of the row at source index I spells out the target index T(I).
    Entries are not bounds-checked on construction; run
    :func:`validate_provision` before trusting them against the target.
    """

    table: np.ndarray
    target_shape: Shape

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64, order="C")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "target_shape", as_shape(self.target_shape))
        if table.ndim < 1:
            raise ArgumentError("provision table must have at least one axis")
        if table.shape[-1] != len(self.target_shape):
            raise ArgumentError(
                f"last table extent {table.shape[-1]} must equal target rank "
                f"{len(self.target_shape)}"
            )

    @property
    def source_shape(self) -> Shape:
        return self.table.shape[:-1]

    @property
    def target_rank(self) -> int:
        return self.table.shape[-1]

    @property
    def source_size(self) -> int:
        return shape_size(self.source_shape)

    def rows(self) -> np.ndarray:
        """The table flattened to (source_size, target_rank), row-major."""
        return self.table.reshape(self.source_size, self.target_rank)


def transform(provision: ProvisionTensor, index) -> Index:
    """Map one source index through the table."""
    index = tuple(int(c) for c in index)
    if not is_valid_index(provision.source_shape, index):
        raise IndexError(
            f"index {index} invalid for source shape {provision.source_shape}"
        )
    return to_tuple(provision.table[index])


# tables are immutable, so validation verdicts are cached per object
_validation_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def validate_provision(provision: ProvisionTensor) -> list[tuple[Index, int]]:
    """Every (source index, target axis) whose entry escapes the target shape.

    An empty list means the table is a total map into the target index set.
    Memoized per provision object.
    """
    cached = _validation_cache.get(provision)
    if cached is None:
        cached = _validate_provision(provision)
        _validation_cache[provision] = cached
    return list(cached)


def _validate_provision(provision):
    rows = provision.rows()
    n, rank = rows.shape
    if n == 0 or rank == 0:
        return []
    bounds = np.asarray(provision.target_shape, dtype=np.int64)
    bad = (rows < 0) | (rows >= bounds)
    if not bad.any():
        return []
    src = index_matrix(provision.source_shape)
    return [
        (tuple(int(c) for c in src[flat]), int(axis))
        for flat, axis in zip(*np.nonzero(bad))
    ]


def provision_image(provision: ProvisionTensor) -> set[Index]:
    """Distinct target indices the transformer reaches."""
    return {tuple(int(c) for c in row) for row in provision.rows()}


def identity_provision(shape) -> ProvisionTensor:
    """The transformer mapping every index of ``shape`` to itself."""
    shape = as_shape(shape)
    table = index_matrix(shape).reshape(shape + (len(shape),))
    return ProvisionTensor(table, shape)


@dataclass(frozen=True, eq=False)
class XTransformerSpec:
    """A transformer factored as out_pick(inner(inner_pick(I)) + pass_pick(I)).

    ``inner_pick`` selects the source coordinates fed to the inner
    transformer, ``pass_pick`` selects coordinates carried over verbatim,
    and ``out_pick`` rearranges the concatenation of the inner output and
    the passed coordinates into the final target index.
    """

    inner: ProvisionTensor
    inner_pick: Pick
    pass_pick: Pick
    out_pick: Pick
    source_shape: Shape
    target_shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "inner_pick", as_pick(self.inner_pick))
        object.__setattr__(self, "pass_pick", as_pick(self.pass_pick))
        object.__setattr__(self, "out_pick", as_pick(self.out_pick))
        object.__setattr__(self, "source_shape", as_shape(self.source_shape))
        object.__setattr__(self, "target_shape", as_shape(self.target_shape))

    @property
    def concat_rank(self) -> int:
        return self.inner.target_rank + len(self.pass_pick)


def validate_spec(spec: XTransformerSpec) -> None:
    """Raise unless the spec's picks are applicable and sized for its shapes."""
    k = len(spec.source_shape)
    check_pick(spec.inner_pick, k, what="source index")
    check_pick(spec.pass_pick, k, what="source index")
    check_pick(spec.out_pick, spec.concat_rank, what="concatenated index")
    if len(spec.inner_pick) != len(spec.inner.source_shape):
        raise ArgumentError(
            f"inner pick length {len(spec.inner_pick)} must equal the inner "
            f"source rank {len(spec.inner.source_shape)}"
        )
    if len(spec.out_pick) != len(spec.target_shape):
        raise ArgumentError(
            f"out pick length {len(spec.out_pick)} must equal the target rank "
            f"{len(spec.target_shape)}"
        )


def trivial_spec(provision: ProvisionTensor) -> XTransformerSpec:
    """The always-available factoring with the provision as its own inner."""
    return XTransformerSpec(
        inner=provision,
        inner_pick=identity_pick(len(provision.source_shape)),
        pass_pick=(),
        out_pick=identity_pick(provision.target_rank),
        source_shape=provision.source_shape,
        target_shape=provision.target_shape,
    )


def compose_provision(spec: XTransformerSpec) -> ProvisionTensor:
    """Flatten a factored transformer into a single provision table.

    Tabulates out_pick(inner(inner_pick(I)) + pass_pick(I)) over the whole
    source index set.  Raises IndexError when the inner pick produces an
    index outside the inner transformer's source shape.
    """
    validate_spec(spec)
    idx = index_matrix(spec.source_shape)
    inner_src = spec.inner.source_shape
    picked = idx[:, list(spec.inner_pick)]
    if picked.size:
        bounds = np.asarray(inner_src, dtype=np.int64)
        if ((picked < 0) | (picked >= bounds)).any():
            raise IndexError(
                "inner pick selects indices outside the inner source shape "
                f"{inner_src}"
            )
    offs = picked @ np.asarray(row_major_strides(inner_src), dtype=np.int64)
    inner_rows = spec.inner.rows()[offs]
    passed = idx[:, list(spec.pass_pick)]
    cat = np.concatenate([inner_rows, passed], axis=1)
    out = cat[:, list(spec.out_pick)]
    table = out.reshape(spec.source_shape + (len(spec.target_shape),))
    return ProvisionTensor(table, spec.target_shape)


def torch_transformer(index, dim: int, target_shape) -> ProvisionTensor:
    """Axis-substitution transformer behind torch-style scatter.

    Source indices are the positions of ``index``; each maps to itself with
    coordinate ``dim`` replaced by the stored index value.  ``index`` must
    have the target's rank and must not exceed the target extent on any
    other axis.
    """
    index = as_index_tensor(index)
    target_shape = as_shape(target_shape)
    k = index.ndim
    if k != len(target_shape):
        raise ArgumentError(
            f"index rank {k} must equal target rank {len(target_shape)}"
        )
    if not 0 <= dim < k:
        raise ArgumentError(f"dim {dim} out of range for rank {k}")
    for d in range(k):
        if d != dim and index.shape[d] > target_shape[d]:
            raise ArgumentError(
                f"index extent {index.shape[d]} exceeds target extent "
                f"{target_shape[d]} on axis {d}"
            )
    rows = index_matrix(index.shape)
    rows[:, dim] = index.reshape(-1)
    return ProvisionTensor(rows.reshape(index.shape + (k,)), target_shape)


def tf_transformer(indices, target_shape) -> XTransformerSpec:
    """Batched slice-update transformer behind tf-style scatter_nd.

    The last axis of ``indices`` addresses the leading ``q`` target axes;
    everything before it is batch.  Source indices are batch coordinates
    followed by the untouched trailing target coordinates, which pass
    through verbatim.
    """
    indices = as_index_tensor(indices)
    target_shape = as_shape(target_shape)
    if indices.ndim < 1:
        raise ArgumentError("indices must have at least one axis")
    q = indices.shape[-1]
    if q > len(target_shape):
        raise ArgumentError(
            f"indices address {q} target axes but the target has rank "
            f"{len(target_shape)}"
        )
    batch = indices.ndim - 1
    source_shape = indices.shape[:-1] + target_shape[q:]
    inner = ProvisionTensor(indices, target_shape[:q])
    return XTransformerSpec(
        inner=inner,
        inner_pick=tuple(range(batch)),
        pass_pick=tuple(range(batch, len(source_shape))),
        out_pick=identity_pick(len(target_shape)),
        source_shape=source_shape,
        target_shape=target_shape,
    )
