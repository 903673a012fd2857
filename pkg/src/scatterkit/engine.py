"""Scatter execution with explicit collision policies.

The general result of relocating an update tensor through an index
transformer on top of a background tensor is ambiguous twice over: several
sources may land on one target cell, and some target cells receive
nothing.  The engine resolves the first ambiguity with a named
:class:`CollisionPolicy` and the second by keeping the background value,
so every run is deterministic.

Two execution paths produce identical results: a vectorized element-wise
path that works for every transformer, and a block-copy fast path used
when the transformer carries a copied coordinate suffix (see
:mod:`scatterkit.analysis`), which turns the scatter into a sequence of
contiguous slice assignments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .analysis import max_sliceable_suffix
from .core import (
    Index,
    as_data_tensor,
    as_index_tensor,
    index_class,
    row_major_strides,
    shape_size,
)
from .errors import ArgumentError, CollisionError, ValidationError
from .transform import (
    ProvisionTensor,
    XTransformerSpec,
    compose_provision,
    tf_transformer,
    torch_transformer,
    transform,
    validate_provision,
)


class CollisionPolicy(enum.Enum):
    """How concurrent writes to one target cell are resolved.

    FIRST_WINS and LAST_WINS order writes by row-major source traversal.
    SUM and PROD fold the colliding update values only; the background
    value at a written cell never joins the reduction.  ERROR demands an
    injective transformer and raises on the first colliding write.
    """

    ERROR = "error"
    FIRST_WINS = "first"
    LAST_WINS = "last"
    SUM = "sum"
    PROD = "prod"


@dataclass(frozen=True, eq=False)
class ScatterReport:
    """Observability counters for one scatter execution."""

    writes: int
    colliding_groups: int
    uncovered_targets: int
    fast_path_used: bool


@dataclass(frozen=True, eq=False)
class Scattering:
    """A transformer together with its update and background tensors."""

    transformer: ProvisionTensor
    updates: np.ndarray
    background: np.ndarray

    def __post_init__(self):
        updates = np.array(self.updates, dtype=np.float64, order="C")
        background = np.array(self.background, dtype=np.float64, order="C")
        if updates.shape != self.transformer.source_shape:
            raise ArgumentError(
                f"updates shape {updates.shape} must equal the transformer "
                f"source shape {self.transformer.source_shape}"
            )
        if background.shape != self.transformer.target_shape:
            raise ArgumentError(
                f"background shape {background.shape} must equal the "
                f"transformer target shape {self.transformer.target_shape}"
            )
        updates.setflags(write=False)
        background.setflags(write=False)
        object.__setattr__(self, "updates", updates)
        object.__setattr__(self, "background", background)


def scatter(
    scattering: Scattering,
    policy: CollisionPolicy | str = CollisionPolicy.LAST_WINS,
    *,
    fast_path: bool | None = None,
) -> tuple[np.ndarray, ScatterReport]:
    """Execute a scattering, returning a fresh result tensor and a report.

    ``fast_path=None`` lowers to block copies whenever the transformer
    carries a copied suffix; ``True`` insists on it (ArgumentError when
    there is none); ``False`` forces the element-wise path.  The two paths
    are observationally identical.
    """
    policy = CollisionPolicy(policy)
    provision = scattering.transformer
    bad = validate_provision(provision)
    if bad:
        index, axis = bad[0]
        raise ValidationError(
            f"{len(bad)} provision entries out of bounds; first at source "
            f"index {index}, target axis {axis}"
        )
    if fast_path is None or fast_path:
        r, inner = max_sliceable_suffix(provision)
        if r >= 1:
            return _scatter_blocks(scattering, policy, r, inner)
        if fast_path:
            raise ArgumentError(
                "fast path requested but the transformer has no copied suffix"
            )
    return _scatter_elementwise(scattering, policy)


def _first_collision_target(offs: np.ndarray, target_shape) -> Index:
    # target of the first source (row-major) that re-hits a written cell
    order = np.argsort(offs, kind="stable")
    ordered = offs[order]
    dup = ordered[1:] == ordered[:-1]
    pos = int(order[1:][dup].min())
    if not target_shape:
        return ()
    return tuple(int(c) for c in np.unravel_index(int(offs[pos]), target_shape))


def _scatter_elementwise(scattering, policy):
    provision = scattering.transformer
    target_shape = provision.target_shape
    target_size = shape_size(target_shape)
    out = scattering.background.copy().reshape(-1)
    rows = provision.rows()
    n = rows.shape[0]
    if n == 0:
        return (
            out.reshape(target_shape),
            ScatterReport(0, 0, target_size, False),
        )
    strides = np.asarray(row_major_strides(target_shape), dtype=np.int64)
    offs = rows @ strides
    vals = scattering.updates.reshape(-1)
    uniq, first_pos, counts = np.unique(offs, return_index=True, return_counts=True)
    colliding = int((counts >= 2).sum())
    uncovered = target_size - len(uniq)
    if policy is CollisionPolicy.ERROR and colliding:
        raise CollisionError(_first_collision_target(offs, target_shape))
    if policy is CollisionPolicy.FIRST_WINS:
        out[uniq] = vals[first_pos]
        writes = len(uniq)
    elif policy is CollisionPolicy.SUM:
        out[uniq] = 0.0
        np.add.at(out, offs, vals)
        writes = n
    elif policy is CollisionPolicy.PROD:
        out[uniq] = 1.0
        np.multiply.at(out, offs, vals)
        writes = n
    else:  # LAST_WINS, or ERROR past the collision check
        rev_uniq, rev_pos = np.unique(offs[::-1], return_index=True)
        out[rev_uniq] = vals[n - 1 - rev_pos]
        writes = n
    return out.reshape(target_shape), ScatterReport(writes, colliding, uncovered, False)


def _scatter_blocks(scattering, policy, r, inner):
    provision = scattering.transformer
    k = len(provision.source_shape)
    rank = provision.target_rank
    target_shape = provision.target_shape
    trail = provision.source_shape[k - r :]
    block = shape_size(trail)
    lead_rows = inner.rows()
    n_lead = lead_rows.shape[0]
    n = n_lead * block
    out = scattering.background.copy()
    updates = scattering.updates.reshape((n_lead,) + trail)

    pstrides = np.asarray(row_major_strides(target_shape[: rank - r]), dtype=np.int64)
    poffs = lead_rows @ pstrides
    uniq, counts = np.unique(poffs, return_counts=True)
    colliding = int((counts >= 2).sum()) * block
    covered = len(uniq) * block
    uncovered = shape_size(target_shape) - covered

    if policy is CollisionPolicy.ERROR and block and (counts >= 2).any():
        order = np.argsort(poffs, kind="stable")
        ordered = poffs[order]
        g = int(order[1:][ordered[1:] == ordered[:-1]].min())
        prefix = tuple(int(c) for c in lead_rows[g])
        raise CollisionError(prefix + (0,) * r)

    region = tuple(slice(0, e) for e in trail)
    if policy is CollisionPolicy.FIRST_WINS:
        # reversed copy order makes the earliest write land last and survive
        for g in range(n_lead - 1, -1, -1):
            out[tuple(lead_rows[g])][region] = updates[g]
        writes = covered if n else 0
    elif policy is CollisionPolicy.SUM:
        seen = set()
        for g in range(n_lead):
            key = int(poffs[g])
            dst = out[tuple(lead_rows[g])]
            if key in seen:
                dst[region] += updates[g]
            else:
                # 0.0 + x, not plain assignment, to match the seeded
                # element-wise accumulation bit for bit
                dst[region] = 0.0 + updates[g]
                seen.add(key)
        writes = n
    elif policy is CollisionPolicy.PROD:
        seen = set()
        for g in range(n_lead):
            key = int(poffs[g])
            dst = out[tuple(lead_rows[g])]
            if key in seen:
                dst[region] *= updates[g]
            else:
                dst[region] = 1.0 * updates[g]
                seen.add(key)
        writes = n
    else:  # LAST_WINS, or ERROR past the collision check
        for g in range(n_lead):
            out[tuple(lead_rows[g])][region] = updates[g]
        writes = n
    return out, ScatterReport(writes, colliding, uncovered, True)


def scatter_x(
    target,
    updates,
    spec: XTransformerSpec,
    policy: CollisionPolicy | str = CollisionPolicy.LAST_WINS,
    *,
    fast_path: bool | None = None,
) -> tuple[np.ndarray, ScatterReport]:
    """Compose a factored transformer, then scatter through it."""
    provision = compose_provision(spec)
    return scatter(
        Scattering(provision, updates, target), policy, fast_path=fast_path
    )


def scatter_nd_update(
    ts,
    indices,
    updates,
    policy: CollisionPolicy | str = CollisionPolicy.LAST_WINS,
) -> tuple[np.ndarray, ScatterReport]:
    """Tensorflow-style batched slice update of a tensor.

    Each row of ``indices`` addresses a leading-axes cell of ``ts`` whose
    trailing block is replaced by the matching slice of ``updates``.
    """
    ts = as_data_tensor(ts)
    spec = tf_transformer(indices, ts.shape)
    updates = as_data_tensor(updates)
    if updates.shape != spec.source_shape:
        raise ArgumentError(
            f"updates shape {updates.shape} does not match the derived "
            f"source shape {spec.source_shape}"
        )
    return scatter_x(ts, updates, spec, policy)


def torch_scatter(
    self_t,
    dim: int,
    index,
    src,
    policy: CollisionPolicy | str = CollisionPolicy.LAST_WINS,
) -> tuple[np.ndarray, ScatterReport]:
    """Torch-style elementwise scatter of ``src`` into ``self_t`` along ``dim``.

    Only the leading ``index.shape`` corner of ``src`` is read.
    """
    self_t = as_data_tensor(self_t)
    index = as_index_tensor(index)
    src = as_data_tensor(src)
    provision = torch_transformer(index, dim, self_t.shape)
    if src.ndim != index.ndim or any(
        s < i for s, i in zip(src.shape, index.shape)
    ):
        raise ArgumentError(
            f"src shape {src.shape} must cover the index shape {index.shape} "
            "elementwise"
        )
    region = tuple(slice(0, e) for e in index.shape)
    return scatter(Scattering(provision, src[region], self_t), policy)


def disseminate_slice(provision: ProvisionTensor, pass_pick, base_index) -> set[Index]:
    """Target footprint of one source slice class under the transformer.

    The class consists of every source index agreeing with ``base_index``
    on the coordinates ``pass_pick`` reads; the footprint is the set of
    their images.
    """
    cls = index_class(provision.source_shape, pass_pick, base_index)
    return {transform(provision, member) for member in cls}
