import numpy as np
import pytest

from scatterkit import (
    SLICEABLE,
    TRIVIAL_ONLY,
    WEAKLY_SLICEABLE_ONLY,
    ProvisionTensor,
    compose_provision,
    detect_collisions,
    identity_provision,
    index_iter,
    max_sliceable_suffix,
    pass_through_map,
    provision_image,
    representation_overlap,
    shape_size,
    slicing_impossibility,
    torch_transformer,
    transform,
    weak_decomposition,
)
from scatterkit import fixtures as fx

from generators import random_provision, random_suffix_provision


def test_detect_collisions_injective():
    report = detect_collisions(fx.embed_provision())
    assert report.groups == ()
    assert report.uncovered_count == 8


def test_detect_collisions_torch_dup():
    prov = torch_transformer(np.array([[0], [0]], dtype=np.int64), 0, (2, 1))
    report = detect_collisions(prov)
    assert len(report.groups) == 1
    target, sources = report.groups[0]
    assert target == (0, 0)
    assert sources == ((0, 0), (1, 0))


def test_detect_collisions_full_image():
    report = detect_collisions(identity_provision((3, 2)))
    assert report.groups == ()
    assert report.uncovered_count == 0


def test_detect_collisions_accounting():
    rng = np.random.default_rng(21)
    for case in range(40):
        provision = random_provision(rng, collisions=case % 2 == 0)
        report = detect_collisions(provision)
        image = provision_image(provision)
        assert len(image) + report.uncovered_count == shape_size(
            provision.target_shape
        )
        seen_sources = set()
        for target, sources in report.groups:
            assert len(sources) >= 2
            assert all(transform(provision, s) == target for s in sources)
            assert not (set(sources) & seen_sources)
            seen_sources |= set(sources)
        total_colliding = sum(
            1
            for source in index_iter(provision.source_shape)
            if sum(
                transform(provision, other) == transform(provision, source)
                for other in index_iter(provision.source_shape)
            )
            >= 2
        )
        assert sum(len(s) for _, s in report.groups) == total_colliding


def test_max_suffix_diag():
    r, inner = max_sliceable_suffix(fx.diag_provision())
    assert r == 2
    assert np.array_equal(inner.table, [[0, 0], [1, 1]])
    assert inner.target_shape == (2, 2)


def test_max_suffix_parity():
    assert max_sliceable_suffix(fx.parity_provision()) == (0, None)


def test_max_suffix_identity():
    ident = identity_provision((2, 3, 2))
    r, inner = max_sliceable_suffix(ident)
    assert r == 3
    assert inner.table.shape == (0,)
    assert inner.target_shape == ()


def test_max_suffix_embed():
    # last output coordinate copies the last input coordinate
    r, inner = max_sliceable_suffix(fx.embed_provision())
    assert r == 1
    assert np.array_equal(inner.table, [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1]])


def test_suffix_soundness_and_maximality():
    rng = np.random.default_rng(31)
    provisions = [
        fx.embed_provision(),
        fx.diag_provision(),
        fx.parity_provision(),
        identity_provision((2, 2)),
    ] + [random_suffix_provision(rng) for _ in range(30)] + [
        random_provision(rng) for _ in range(30)
    ]
    for provision in provisions:
        r, inner = max_sliceable_suffix(provision)
        k = len(provision.source_shape)
        if r:
            for index in index_iter(provision.source_shape):
                lead = transform(inner, index[: k - r])
                assert transform(provision, index) == lead + index[k - r :]
        if r < min(k, provision.target_rank) and provision.source_size:
            # r + 1 must fail: either a suffix coordinate differs somewhere,
            # or the leading outputs depend on a trailing input coordinate
            bigger = r + 1
            rank = provision.target_rank
            broken = False
            leads = {}
            for index in index_iter(provision.source_shape):
                image = transform(provision, index)
                if image[rank - bigger :] != index[k - bigger :]:
                    broken = True
                    break
                key = index[: k - bigger]
                if leads.setdefault(key, image[: rank - bigger]) != image[: rank - bigger]:
                    broken = True
                    break
            assert broken


def test_pass_through_examples():
    assert pass_through_map(fx.parity_provision()) == {(0, 0), (1, 1), (1, 3)}
    assert pass_through_map(fx.diag_provision()) == {
        (0, 0), (0, 1), (1, 2), (2, 3)
    }
    constant = ProvisionTensor(np.ones((2, 3, 2), dtype=np.int64), (2, 2))
    assert pass_through_map(constant) == set()


def test_pass_through_degenerate_extent1():
    # extent-1 dim pairs with the constantly-zero output coordinate
    table = np.zeros((1, 3, 2), dtype=np.int64)
    table[:, :, 1] = np.arange(3).reshape(1, 3)
    prov = ProvisionTensor(table, (1, 3))
    assert pass_through_map(prov) == {(0, 0), (1, 1)}


def test_pass_through_is_brute_scan():
    rng = np.random.default_rng(41)
    for _ in range(30):
        provision = random_provision(rng)
        expected = set()
        for i in range(len(provision.source_shape)):
            for j in range(provision.target_rank):
                if all(
                    transform(provision, index)[j] == index[i]
                    for index in index_iter(provision.source_shape)
                ):
                    expected.add((i, j))
        assert pass_through_map(provision) == expected


def test_weak_decomposition_diag():
    spec = weak_decomposition(fx.diag_provision())
    assert spec.pass_pick == (0, 1, 2)
    assert spec.inner_pick == ()
    assert spec.out_pick == (0, 0, 1, 2)
    assert representation_overlap(spec) == set()
    assert np.array_equal(
        compose_provision(spec).table, fx.diag_provision().table
    )


def test_weak_decomposition_parity():
    spec = weak_decomposition(fx.parity_provision())
    assert spec.inner_pick == (0,)
    assert spec.pass_pick == (0, 1)
    assert spec.out_pick == (1, 2, 0, 2)
    assert np.array_equal(spec.inner.table, [[0], [1], [0], [1]])
    assert representation_overlap(spec) == {0}
    assert np.array_equal(
        compose_provision(spec).table, fx.parity_provision().table
    )


def test_weak_decomposition_constant_is_trivial():
    constant = ProvisionTensor(np.ones((2, 3, 2), dtype=np.int64), (2, 2))
    spec = weak_decomposition(constant)
    assert spec.pass_pick == ()
    assert spec.inner_pick == (0, 1)
    assert spec.out_pick == (0, 1)
    assert np.array_equal(spec.inner.table, constant.table)


def test_weak_decomposition_prefers_wide_dims():
    # the constant-zero output pairs with the extent-1 dim only as a last
    # resort; the genuine copy of dim 1 must still be routed through
    table = np.zeros((1, 3, 2), dtype=np.int64)
    table[:, :, 1] = np.arange(3).reshape(1, 3)
    prov = ProvisionTensor(table, (1, 3))
    spec = weak_decomposition(prov)
    assert spec.pass_pick == (0, 1)
    assert np.array_equal(compose_provision(spec).table, prov.table)


def test_weak_decomposition_round_trip_random():
    rng = np.random.default_rng(51)
    for case in range(120):
        provision = random_provision(rng, collisions=case % 3 == 0)
        spec = weak_decomposition(provision)
        assert np.array_equal(compose_provision(spec).table, provision.table)
        assert compose_provision(spec).target_shape == provision.target_shape


def test_suffix_implies_pass_through_pairs():
    rng = np.random.default_rng(61)
    for _ in range(30):
        provision = random_suffix_provision(rng)
        r, _ = max_sliceable_suffix(provision)
        pairs = pass_through_map(provision)
        k = len(provision.source_shape)
        rank = provision.target_rank
        for t in range(r):
            assert (k - r + t, rank - r + t) in pairs


def test_verdicts():
    assert slicing_impossibility(fx.diag_provision()).verdict == SLICEABLE
    parity = slicing_impossibility(fx.parity_provision())
    assert parity.verdict == WEAKLY_SLICEABLE_ONLY
    assert parity.overlap == {0}
    assert parity.max_suffix == 0
    constant = ProvisionTensor(np.ones((2, 3, 2), dtype=np.int64), (2, 2))
    assert slicing_impossibility(constant).verdict == TRIVIAL_ONLY


def test_verdict_swap_is_weak_without_overlap():
    # pure coordinate swap: passes through, no suffix, disjoint picks
    table = np.array(
        [[[j, i] for j in range(3)] for i in range(2)], dtype=np.int64
    )
    prov = ProvisionTensor(table, (3, 2))
    report = slicing_impossibility(prov)
    assert report.max_suffix == 0
    assert report.verdict == WEAKLY_SLICEABLE_ONLY
    assert report.overlap == frozenset()
    assert np.array_equal(
        compose_provision(report.canonical).table, prov.table
    )


def test_sliceability_report_fields():
    report = slicing_impossibility(fx.diag_provision())
    assert report.max_suffix == 2
    assert np.array_equal(report.suffix_inner.table, [[0, 0], [1, 1]])
    assert report.pass_through == {(0, 0), (0, 1), (1, 2), (2, 3)}
    assert report.overlap == frozenset()
