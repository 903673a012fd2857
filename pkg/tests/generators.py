"""Seeded random instance builders shared by differential tests."""

from __future__ import annotations

import math

import numpy as np

from scatterkit import ProvisionTensor, Scattering, XTransformerSpec, shape_size


def random_shape(rng, min_rank=0, max_rank=4, min_extent=1, max_extent=5):
    rank = int(rng.integers(min_rank, max_rank + 1))
    return tuple(
        int(rng.integers(min_extent, max_extent + 1)) for _ in range(rank)
    )


def random_rows(rng, n, target_shape):
    if not target_shape:
        return np.zeros((n, 0), dtype=np.int64)
    cols = [rng.integers(0, e, size=n, dtype=np.int64) for e in target_shape]
    return np.stack(cols, axis=1)


def force_collisions(rng, rows):
    """Overwrite >= 30% of the rows with copies of surviving rows."""
    n = rows.shape[0]
    dup_count = max(2, math.ceil(0.3 * n))
    order = rng.permutation(n)
    dups, keepers = order[:dup_count], order[dup_count:]
    rows[dups] = rows[rng.choice(keepers, size=dup_count)]
    return rows


def random_provision(rng, *, collisions=False, max_source_rank=3,
                     max_source_extent=4, max_target_rank=4, max_target_extent=5):
    while True:
        source_shape = random_shape(
            rng, max_rank=max_source_rank, max_extent=max_source_extent
        )
        if not collisions or shape_size(source_shape) >= 5:
            break
    target_shape = random_shape(
        rng, min_rank=1, max_rank=max_target_rank, max_extent=max_target_extent
    )
    n = shape_size(source_shape)
    rows = random_rows(rng, n, target_shape)
    if collisions:
        rows = force_collisions(rng, rows)
    table = rows.reshape(source_shape + (len(target_shape),))
    return ProvisionTensor(table, target_shape)


def random_scattering(rng, provision):
    updates = rng.standard_normal(provision.source_shape)
    background = rng.standard_normal(provision.target_shape)
    return Scattering(provision, updates, background)


def random_spec(rng, max_rank=3, max_extent=4):
    """A factored transformer whose composition is valid by construction."""
    source_shape = random_shape(rng, max_rank=max_rank, max_extent=max_extent)
    k = len(source_shape)
    k0 = int(rng.integers(0, k + 1))
    inner_pick = tuple(int(v) for v in rng.integers(0, k, size=k0)) if k else ()
    inner_source = tuple(source_shape[v] for v in inner_pick)
    inner_rank = int(rng.integers(0, 4))
    inner_target = tuple(
        int(rng.integers(1, max_extent + 1)) for _ in range(inner_rank)
    )
    inner_rows = random_rows(rng, shape_size(inner_source), inner_target)
    inner = ProvisionTensor(
        inner_rows.reshape(inner_source + (inner_rank,)), inner_target
    )
    n_pass = int(rng.integers(0, k + 1))
    pass_pick = tuple(int(v) for v in rng.integers(0, k, size=n_pass)) if k else ()
    concat_rank = inner_rank + n_pass
    out_rank = int(rng.integers(0, concat_rank + 1)) if concat_rank else 0
    out_pick = tuple(
        int(v) for v in rng.integers(0, concat_rank, size=out_rank)
    )
    target_shape = tuple(
        inner_target[v] if v < inner_rank else source_shape[pass_pick[v - inner_rank]]
        for v in out_pick
    )
    return XTransformerSpec(
        inner=inner,
        inner_pick=inner_pick,
        pass_pick=pass_pick,
        out_pick=out_pick,
        source_shape=source_shape,
        target_shape=target_shape,
    )


def random_suffix_provision(rng, *, collisions=False):
    """A provision guaranteed to carry a copied suffix of length >= 1."""
    r = int(rng.integers(1, 3))
    lead_source = random_shape(rng, max_rank=2, max_extent=4)
    suffix = random_shape(rng, min_rank=r, max_rank=r, max_extent=4)
    lead_target = random_shape(rng, min_rank=0, max_rank=2, max_extent=5)
    n_lead = shape_size(lead_source)
    lead_rows = random_rows(rng, n_lead, lead_target)
    if collisions and n_lead >= 5:
        lead_rows = force_collisions(rng, lead_rows)
    source_shape = lead_source + suffix
    target_shape = lead_target + suffix
    trail = shape_size(suffix)
    idx_suffix = (
        np.stack(
            [g.reshape(-1) for g in np.indices(suffix, dtype=np.int64)], axis=1
        )
        if trail
        else np.zeros((1, 0), dtype=np.int64)
    )
    rows = np.concatenate(
        [
            np.repeat(lead_rows, trail, axis=0),
            np.tile(idx_suffix, (n_lead, 1)),
        ],
        axis=1,
    )
    table = rows.reshape(source_shape + (len(target_shape),))
    return ProvisionTensor(table, target_shape)


def random_tf_instance(rng, *, collision_free=True):
    """(ts, indices, updates) for the batched slice-update adapter."""
    while True:
        target_shape = random_shape(rng, min_rank=1, max_rank=4)
        q = int(rng.integers(1, len(target_shape) + 1))
        lead_size = shape_size(target_shape[:q])
        # indices rank stays <= 4: batch rank <= 3 plus the coordinate axis
        batch_shape = random_shape(rng, max_rank=3, max_extent=4)
        batch = shape_size(batch_shape)
        if not collision_free or batch <= lead_size:
            break
    if collision_free:
        flat = rng.choice(lead_size, size=batch, replace=False)
    else:
        flat = rng.integers(0, lead_size, size=batch)
    if q:
        rows = np.stack(
            [c.astype(np.int64) for c in np.unravel_index(flat, target_shape[:q])],
            axis=1,
        )
    else:
        rows = np.zeros((batch, 0), dtype=np.int64)
    indices = rows.reshape(batch_shape + (q,))
    updates = rng.standard_normal(batch_shape + target_shape[q:])
    ts = rng.standard_normal(target_shape)
    return ts, indices, updates


def random_torch_instance(rng, *, collision_free=True):
    """(self_t, dim, index, src) for the axis-substitution adapter."""
    target_shape = random_shape(rng, min_rank=1, max_rank=4, max_extent=5)
    k = len(target_shape)
    dim = int(rng.integers(0, k))
    index_shape = tuple(
        int(rng.integers(1, target_shape[d] + 1)) if d != dim else 0
        for d in range(k)
    )
    if collision_free:
        dim_extent = int(rng.integers(1, target_shape[dim] + 1))
    else:
        dim_extent = int(rng.integers(1, 6))
    index_shape = index_shape[:dim] + (dim_extent,) + index_shape[dim + 1 :]
    index = np.zeros(index_shape, dtype=np.int64)
    fibers = [d for d in range(k) if d != dim]
    fiber_shape = tuple(index_shape[d] for d in fibers)
    for fiber in np.ndindex(*fiber_shape):
        if collision_free:
            vals = rng.choice(target_shape[dim], size=dim_extent, replace=False)
        else:
            vals = rng.integers(0, target_shape[dim], size=dim_extent)
        sel = list(fiber)
        sel.insert(dim, slice(None))
        index[tuple(sel)] = vals
    src_shape = tuple(
        int(rng.integers(e, e + 2)) for e in index_shape
    )
    src = rng.standard_normal(src_shape)
    self_t = rng.standard_normal(target_shape)
    return self_t, dim, index, src
