"""JSON wire formats for tensors, picks, factored transformers, and reports.

Tensor documents are the bit-exact interchange contract shared by every
entry point::

    {"dtype": "f64" | "i64", "shape": [ints >= 0], "data": [row-major]}

Picks serialize as ``{"pick": [ints]}``.  Factored transformers carry their
inner table inline as a tensor document.
"""

from __future__ import annotations

import json

import numpy as np

from .analysis import CollisionReport, SliceabilityReport
from .core import shape_size
from .engine import ScatterReport
from .errors import FormatError
from .transform import ProvisionTensor, XTransformerSpec


def tensor_to_json(arr) -> dict:
    arr = np.asarray(arr)
    if arr.dtype == np.float64:
        dtype = "f64"
        data = [float(v) for v in arr.reshape(-1)]
    elif arr.dtype == np.int64:
        dtype = "i64"
        data = [int(v) for v in arr.reshape(-1)]
    else:
        raise FormatError(f"unsupported dtype {arr.dtype}; use float64 or int64")
    return {"dtype": dtype, "shape": list(arr.shape), "data": data}


def _require(doc, key, what):
    if not isinstance(doc, dict):
        raise FormatError(f"{what} must be a JSON object")
    if key not in doc:
        raise FormatError(f"{what} missing key {key!r}")
    return doc[key]


def _int_list(value, what) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise FormatError(f"{what} must be a list of integers")
    return value


def tensor_from_json(doc) -> np.ndarray:
    dtype = _require(doc, "dtype", "tensor document")
    shape = _require(doc, "shape", "tensor document")
    data = _require(doc, "data", "tensor document")
    if dtype not in ("f64", "i64"):
        raise FormatError(f"unknown dtype {dtype!r}")
    shape = _int_list(shape, "tensor shape")
    if any(d < 0 for d in shape):
        raise FormatError("tensor shape extents must be nonnegative")
    if not isinstance(data, list):
        raise FormatError("tensor data must be a list")
    if len(data) != shape_size(shape):
        raise FormatError(
            f"tensor data length {len(data)} does not match shape {shape}"
        )
    if dtype == "i64":
        values = _int_list(data, "i64 tensor data")
        arr = np.array(values, dtype=np.int64)
    else:
        if not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in data
        ):
            raise FormatError("f64 tensor data must be numbers")
        arr = np.array([float(v) for v in data], dtype=np.float64)
    return arr.reshape(tuple(shape))


def pick_to_json(pick) -> dict:
    return {"pick": [int(v) for v in pick]}


def pick_from_json(doc) -> tuple[int, ...]:
    return tuple(_int_list(_require(doc, "pick", "pick document"), "pick values"))


def inferred_target_shape(table: np.ndarray) -> tuple[int, ...]:
    """Smallest target shape containing every table entry (max + 1 per axis)."""
    rank = table.shape[-1]
    n = shape_size(table.shape[:-1])
    if rank == 0:
        return ()
    if n == 0:
        return (0,) * rank
    rows = table.reshape(n, rank)
    return tuple(max(int(m) + 1, 0) for m in rows.max(axis=0))


def provision_from_json(doc, target_shape=None) -> ProvisionTensor:
    """Load a provision table; infer the target shape unless given."""
    table = tensor_from_json(doc)
    if table.dtype != np.int64:
        raise FormatError("provision tables must be i64 tensors")
    if table.ndim < 1:
        raise FormatError("provision tables must have at least one axis")
    if target_shape is None:
        target_shape = inferred_target_shape(table)
    return ProvisionTensor(table, target_shape)


def spec_to_json(spec: XTransformerSpec) -> dict:
    return {
        "inner": tensor_to_json(spec.inner.table),
        "inner_pick": list(spec.inner_pick),
        "pass_pick": list(spec.pass_pick),
        "out_pick": list(spec.out_pick),
        "source_shape": list(spec.source_shape),
        "target_shape": list(spec.target_shape),
    }


def spec_from_json(doc) -> XTransformerSpec:
    inner = provision_from_json(_require(doc, "inner", "transformer spec"))
    return XTransformerSpec(
        inner=inner,
        inner_pick=tuple(_int_list(_require(doc, "inner_pick", "transformer spec"), "inner_pick")),
        pass_pick=tuple(_int_list(_require(doc, "pass_pick", "transformer spec"), "pass_pick")),
        out_pick=tuple(_int_list(_require(doc, "out_pick", "transformer spec"), "out_pick")),
        source_shape=tuple(_int_list(_require(doc, "source_shape", "transformer spec"), "source_shape")),
        target_shape=tuple(_int_list(_require(doc, "target_shape", "transformer spec"), "target_shape")),
    )


def scatter_report_to_json(report: ScatterReport) -> dict:
    return {
        "writes": report.writes,
        "colliding_groups": report.colliding_groups,
        "uncovered_targets": report.uncovered_targets,
        "fast_path_used": report.fast_path_used,
    }


def collision_report_to_json(report: CollisionReport) -> dict:
    return {
        "count": report.collision_count,
        "groups": [
            {"target": list(target), "sources": [list(s) for s in sources]}
            for target, sources in report.groups
        ],
    }


def analysis_to_json(
    sliceability: SliceabilityReport, collisions: CollisionReport
) -> dict:
    return {
        "max_suffix": sliceability.max_suffix,
        "verdict": sliceability.verdict,
        "pass_through": [list(p) for p in sorted(sliceability.pass_through)],
        "collisions": collision_report_to_json(collisions),
        "uncovered": collisions.uncovered_count,
        "canonical": spec_to_json(sliceability.canonical),
        "overlap": sorted(sliceability.overlap),
        "suffix_inner": (
            tensor_to_json(sliceability.suffix_inner.table)
            if sliceability.suffix_inner is not None
            else None
        ),
    }


def dump_document(doc) -> str:
    """Fixed-format serialization so identical documents give identical bytes."""
    return json.dumps(doc, indent=2, separators=(",", ": ")) + "\n"
