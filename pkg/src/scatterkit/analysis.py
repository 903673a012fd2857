"""Static analysis of provision tensors.

Answers three questions about a tabulated transformer before any data
moves: which target cells receive colliding writes and which receive none
(:func:`detect_collisions`); whether the map splits into a leading
transform plus a verbatim coordinate suffix, which is what lets a scatter
lower to contiguous block copies (:func:`max_sliceable_suffix`); and, when
it does not split, what the canonical factoring looks like and where its
picks overlap (:func:`weak_decomposition`, :func:`slicing_impossibility`).
A nonempty overlap in the canonical factoring is the witness that the
pass-through structure cannot be straightened into a copied suffix.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .core import Index, index_matrix, row_major_strides, shape_size
from .transform import ProvisionTensor, XTransformerSpec, trivial_spec

SLICEABLE = "SLICEABLE"
WEAKLY_SLICEABLE_ONLY = "WEAKLY_SLICEABLE_ONLY"
TRIVIAL_ONLY = "TRIVIAL_ONLY"


@dataclass(frozen=True, eq=False)
class CollisionReport:
    """Preimage classes of size >= 2, plus the count of unreached targets.

    Groups are ordered by target flat offset; sources within a group keep
    row-major order.
    """

    groups: tuple[tuple[Index, tuple[Index, ...]], ...]
    uncovered_count: int

    @property
    def collision_count(self) -> int:
        return len(self.groups)


def detect_collisions(provision: ProvisionTensor) -> CollisionReport:
    """Group source indices whose targets coincide; count uncovered targets."""
    rows = provision.rows()
    n = rows.shape[0]
    target_size = shape_size(provision.target_shape)
    if n == 0:
        return CollisionReport((), target_size)
    strides = np.asarray(row_major_strides(provision.target_shape), dtype=np.int64)
    offs = rows @ strides
    uniq, counts = np.unique(offs, return_counts=True)
    uncovered = target_size - len(uniq)
    groups = []
    if (counts >= 2).any():
        src = index_matrix(provision.source_shape)
        order = np.argsort(offs, kind="stable")
        ordered = offs[order]
        starts = np.flatnonzero(np.r_[True, ordered[1:] != ordered[:-1]])
        ends = np.r_[starts[1:], len(ordered)]
        for s, e in zip(starts, ends):
            if e - s < 2:
                continue
            members = order[s:e]
            target = tuple(int(c) for c in rows[members[0]])
            sources = tuple(tuple(int(c) for c in src[m]) for m in members)
            groups.append((target, sources))
    return CollisionReport(tuple(groups), int(uncovered))


# provisions are immutable, so the suffix decision is cached per table
# object; weak keys keep the cache from pinning large tables alive
_suffix_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def max_sliceable_suffix(
    provision: ProvisionTensor,
) -> tuple[int, ProvisionTensor | None]:
    """Largest r splitting the map into a leading transform plus a copied
    r-coordinate suffix.

    r qualifies when (a) the last r output coordinates always equal the
    last r input coordinates and (b) the leading output coordinates are a
    function of the leading input coordinates alone.  Returns (0, None)
    when no nonempty suffix works; otherwise (r, inner) with inner
    tabulating the leading map over the leading source dims.  Memoized per
    provision object.
    """
    cached = _suffix_cache.get(provision)
    if cached is None:
        cached = _max_sliceable_suffix(provision)
        _suffix_cache[provision] = cached
    return cached


def _max_sliceable_suffix(provision):
    k = len(provision.source_shape)
    rank = provision.target_rank
    rows = provision.rows()
    n = rows.shape[0]
    idx = index_matrix(provision.source_shape)
    best = 0
    for r in range(min(k, rank), 0, -1):
        if n:
            if not (rows[:, rank - r :] == idx[:, k - r :]).all():
                continue
            lead_size = shape_size(provision.source_shape[: k - r])
            trail_size = shape_size(provision.source_shape[k - r :])
            lead = rows[:, : rank - r].reshape(lead_size, trail_size, rank - r)
            if not (lead == lead[:, :1, :]).all():
                continue
        best = r
        break
    if best == 0:
        return 0, None
    r = best
    lead_shape = provision.source_shape[: k - r]
    lead_size = shape_size(lead_shape)
    trail_size = shape_size(provision.source_shape[k - r :])
    if n:
        inner_rows = rows[:, : rank - r].reshape(lead_size, trail_size, rank - r)[
            :, 0, :
        ]
    else:
        inner_rows = np.zeros((lead_size, rank - r), dtype=np.int64)
    inner = ProvisionTensor(
        inner_rows.reshape(lead_shape + (rank - r,)),
        provision.target_shape[: rank - r],
    )
    return r, inner


def pass_through_map(provision: ProvisionTensor) -> set[tuple[int, int]]:
    """All (source dim, target coord) pairs copied verbatim for every index.

    Defined by the brute scan: (i, j) is in the map iff T(I)[j] == I[i]
    for every source index I.  Source dims of extent 1 therefore pair with
    any constantly-zero output coordinate; decomposition treats those
    degenerate pairs as a last resort.
    """
    rows = provision.rows()
    idx = index_matrix(provision.source_shape)
    pairs = set()
    for i in range(len(provision.source_shape)):
        col = idx[:, i]
        for j in range(provision.target_rank):
            if (rows[:, j] == col).all():
                pairs.add((i, j))
    return pairs


def weak_decomposition(provision: ProvisionTensor) -> XTransformerSpec:
    """Canonical factoring into an inner tabulation plus verbatim passes.

    Output coordinates with a pass-through partner are routed around the
    inner transformer (preferring partners of extent >= 2, then the
    smallest dim); the remaining outputs are tabulated over exactly the
    source dims they depend on.  Recomposing the result reproduces the
    table bit for bit.  Falls back to the trivial factoring when nothing
    passes through.
    """
    shape = provision.source_shape
    k = len(shape)
    rank = provision.target_rank
    pairs = pass_through_map(provision)

    source_for: dict[int, int] = {}
    for j in range(rank):
        partners = sorted(i for i, jj in pairs if jj == j)
        strong = [i for i in partners if shape[i] >= 2]
        if strong:
            source_for[j] = strong[0]
        elif partners:
            source_for[j] = partners[0]
    if not source_for:
        return trivial_spec(provision)

    pass_pick = tuple(sorted(set(source_for.values())))
    inner_outs = [j for j in range(rank) if j not in source_for]

    rows = provision.rows()
    dep_dims: set[int] = set()
    for j in inner_outs:
        col = rows[:, j].reshape(shape)
        for i in range(k):
            if shape[i] <= 1:
                continue
            if not (col == np.take(col, [0], axis=i)).all():
                dep_dims.add(i)
    inner_pick = tuple(sorted(dep_dims))
    inner_shape = tuple(shape[i] for i in inner_pick)
    inner_target = tuple(provision.target_shape[j] for j in inner_outs)

    proj = index_matrix(inner_shape)
    if inner_outs:
        # representative index: projected coords on the picked dims, 0 elsewhere
        full = np.zeros((proj.shape[0], k), dtype=np.int64)
        full[:, list(inner_pick)] = proj
        offs = full @ np.asarray(row_major_strides(shape), dtype=np.int64)
        inner_rows = rows[offs][:, inner_outs]
    else:
        inner_rows = np.zeros((proj.shape[0], 0), dtype=np.int64)
    inner = ProvisionTensor(
        inner_rows.reshape(inner_shape + (len(inner_outs),)), inner_target
    )

    inner_pos = {j: t for t, j in enumerate(inner_outs)}
    pass_pos = {d: t for t, d in enumerate(pass_pick)}
    out_pick = tuple(
        len(inner_outs) + pass_pos[source_for[j]]
        if j in source_for
        else inner_pos[j]
        for j in range(rank)
    )
    return XTransformerSpec(
        inner=inner,
        inner_pick=inner_pick,
        pass_pick=pass_pick,
        out_pick=out_pick,
        source_shape=shape,
        target_shape=provision.target_shape,
    )


def representation_overlap(spec: XTransformerSpec) -> set[int]:
    """Source dims read by both the inner pick and the pass pick."""
    return set(spec.inner_pick) & set(spec.pass_pick)


@dataclass(frozen=True, eq=False)
class SliceabilityReport:
    """Full sliceability diagnosis for one provision tensor.

    ``max_suffix``/``suffix_inner`` come from the suffix decision,
    ``canonical`` and ``overlap`` from the canonical factoring; ``verdict``
    is one of SLICEABLE, WEAKLY_SLICEABLE_ONLY, TRIVIAL_ONLY.  The overlap
    claim is scoped to the canonical factoring, not to every possible one.
    """

    max_suffix: int
    suffix_inner: ProvisionTensor | None
    pass_through: frozenset[tuple[int, int]]
    canonical: XTransformerSpec
    overlap: frozenset[int]
    verdict: str


def slicing_impossibility(provision: ProvisionTensor) -> SliceabilityReport:
    """Diagnose whether scatter through this map can lower to block copies.

    SLICEABLE: a nonempty copied suffix exists (max_suffix >= 1).
    WEAKLY_SLICEABLE_ONLY: no suffix, but coordinates do pass through; a
    nonempty overlap means the canonical factoring reads some source dim
    both through the inner transformer and verbatim, which is exactly what
    blocks a suffix split.
    TRIVIAL_ONLY: no suffix and no pass-through structure at all.
    """
    r, inner = max_sliceable_suffix(provision)
    canonical = weak_decomposition(provision)
    overlap = frozenset(representation_overlap(canonical))
    if r >= 1:
        verdict = SLICEABLE
    elif canonical.pass_pick:
        verdict = WEAKLY_SLICEABLE_ONLY
    else:
        verdict = TRIVIAL_ONLY
    return SliceabilityReport(
        max_suffix=r,
        suffix_inner=inner,
        pass_through=frozenset(pass_through_map(provision)),
        canonical=canonical,
        overlap=overlap,
        verdict=verdict,
    )
