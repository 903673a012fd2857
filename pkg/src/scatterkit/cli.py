"""Command-line surface over the library.

Every invocation prints exactly one JSON document on stdout; human-readable
diagnostics go to stderr.  Exit codes: 0 success, 1 I/O or parse failure,
2 validation or argument error, 3 collision under the error policy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import fixtures
from .analysis import detect_collisions, slicing_impossibility
from .engine import (
    CollisionPolicy,
    Scattering,
    scatter,
    scatter_nd_update,
    torch_scatter,
)
from .errors import ArgumentError, CollisionError, FormatError, ValidationError
from .serialize import (
    analysis_to_json,
    dump_document,
    inferred_target_shape,
    scatter_report_to_json,
    spec_from_json,
    tensor_from_json,
    tensor_to_json,
)
from .transform import ProvisionTensor, compose_provision, validate_provision

POLICY_NAMES = [p.value for p in CollisionPolicy]


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _load_tensor(path):
    return tensor_from_json(_load_json(path))


def _load_index_tensor(path):
    arr = _load_tensor(path)
    if arr.dtype.kind != "i":
        raise ArgumentError(f"{path}: expected an i64 tensor")
    return arr


def _write_tensor(path, arr):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_document(tensor_to_json(arr)))


def _replace_file(path, arr):
    # write-temp-then-rename so a failed run never corrupts the input
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(prefix=".scatterkit-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dump_document(tensor_to_json(arr)))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_shape(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ArgumentError(f"bad shape {text!r}: expected comma-separated ints") from exc


def _result_doc(result, report, args):
    doc = {"report": scatter_report_to_json(report)}
    if getattr(args, "out", None):
        _write_tensor(args.out, result)
        doc["out"] = args.out
    elif getattr(args, "in_place", False):
        _replace_file(args.background, result)
        doc["out"] = args.background
    else:
        doc["result"] = tensor_to_json(result)
    return doc


def cmd_scatter(args):
    table = _load_index_tensor(args.provision)
    updates = _load_tensor(args.updates)
    background = _load_tensor(args.background)
    provision = ProvisionTensor(table, background.shape)
    result, report = scatter(
        Scattering(provision, updates, background), CollisionPolicy(args.policy)
    )
    return _result_doc(result, report, args)


def cmd_tf_scatter(args):
    ts = _load_tensor(args.tensor)
    indices = _load_index_tensor(args.indices)
    updates = _load_tensor(args.updates)
    result, report = scatter_nd_update(
        ts, indices, updates, CollisionPolicy(args.policy)
    )
    return _result_doc(result, report, args)


def cmd_torch_scatter(args):
    self_t = _load_tensor(args.self)
    index = _load_index_tensor(args.index)
    src = _load_tensor(args.src)
    result, report = torch_scatter(
        self_t, args.dim, index, src, CollisionPolicy(args.policy)
    )
    return _result_doc(result, report, args)


def cmd_analyze(args):
    table = _load_index_tensor(args.provision)
    if table.ndim < 1:
        raise ArgumentError("provision tables must have at least one axis")
    if args.target_shape is not None:
        target_shape = _parse_shape(args.target_shape)
    else:
        target_shape = inferred_target_shape(table)
    provision = ProvisionTensor(table, target_shape)
    bad = validate_provision(provision)
    if bad:
        index, axis = bad[0]
        raise ValidationError(
            f"{len(bad)} provision entries out of bounds; first at source "
            f"index {index}, target axis {axis}"
        )
    return analysis_to_json(
        slicing_impossibility(provision), detect_collisions(provision)
    )


def cmd_compose(args):
    spec = spec_from_json(_load_json(args.spec))
    provision = compose_provision(spec)
    doc = tensor_to_json(provision.table)
    if args.out:
        _write_tensor(args.out, provision.table)
    return doc


def cmd_fixtures(args):
    names = fixtures.write_fixtures(args.dir)
    return {"dir": args.dir, "files": names}


def _add_policy(parser):
    parser.add_argument(
        "--policy", choices=POLICY_NAMES, default="last",
        help="collision policy (default: last)",
    )


def _add_out(parser):
    parser.add_argument("--out", help="write the result tensor to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scatterkit",
        description="tensor scatter engine and sliceability analyzer",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scatter", help="scatter updates through a provision table")
    p.add_argument("--provision", required=True)
    p.add_argument("--updates", required=True)
    p.add_argument("--background", required=True)
    _add_policy(p)
    _add_out(p)
    p.add_argument(
        "--in-place", action="store_true",
        help="overwrite the background file with the result (on success only)",
    )
    p.set_defaults(handler=cmd_scatter)

    p = sub.add_parser("tf-scatter", help="tensorflow-style scatter_nd_update")
    p.add_argument("--tensor", required=True)
    p.add_argument("--indices", required=True)
    p.add_argument("--updates", required=True)
    _add_policy(p)
    _add_out(p)
    p.set_defaults(handler=cmd_tf_scatter)

    p = sub.add_parser("torch-scatter", help="torch-style scatter along one axis")
    p.add_argument("--self", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--src", required=True)
    _add_policy(p)
    _add_out(p)
    p.set_defaults(handler=cmd_torch_scatter)

    p = sub.add_parser("analyze", help="collision and sliceability report")
    p.add_argument("--provision", required=True)
    p.add_argument(
        "--target-shape",
        help='comma-separated extents, e.g. "2,2,2,2" (default: inferred)',
    )
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("compose", help="flatten a factored transformer spec")
    p.add_argument("--spec", required=True)
    _add_out(p)
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("fixtures", help="write the built-in example tensors")
    p.add_argument("--dir", required=True)
    p.set_defaults(handler=cmd_fixtures)

    return parser


def _fail(code, exc):
    print(f"error: {exc}", file=sys.stderr)
    sys.stdout.write(dump_document({"error": str(exc), "exit_code": code}))
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.handler(args)
    except CollisionError as exc:
        return _fail(3, exc)
    except (FormatError, OSError) as exc:
        return _fail(1, exc)
    except (ArgumentError, IndexError) as exc:
        return _fail(2, exc)
    sys.stdout.write(dump_document(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
