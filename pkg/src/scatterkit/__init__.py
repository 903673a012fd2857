"""Dense-tensor scatter engine with explicit collision policies and a
sliceability analyzer that lowers suitable scatters to contiguous block
copies."""

from .analysis import (
    SLICEABLE,
    TRIVIAL_ONLY,
    WEAKLY_SLICEABLE_ONLY,
    CollisionReport,
    SliceabilityReport,
    detect_collisions,
    max_sliceable_suffix,
    pass_through_map,
    representation_overlap,
    slicing_impossibility,
    weak_decomposition,
)
from .core import (
    apply_pick,
    as_data_tensor,
    as_index_tensor,
    as_pick,
    as_shape,
    concat_index,
    flat_offset,
    identity_pick,
    index_class,
    index_iter,
    index_matrix,
    is_shuffle,
    is_smooth,
    is_valid_index,
    pick_image,
    range_pick,
    row_major_strides,
    shape_size,
    slice_tensor,
    subtensor,
    to_tensor,
    to_tuple,
)
from .engine import (
    CollisionPolicy,
    ScatterReport,
    Scattering,
    disseminate_slice,
    scatter,
    scatter_nd_update,
    scatter_x,
    torch_scatter,
)
from .errors import (
    ArgumentError,
    CollisionError,
    FormatError,
    PickRangeError,
    RankError,
    ValidationError,
)
from .transform import (
    ProvisionTensor,
    XTransformerSpec,
    compose_provision,
    identity_provision,
    provision_image,
    tf_transformer,
    torch_transformer,
    transform,
    trivial_spec,
    validate_provision,
    validate_spec,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "CollisionError",
    "CollisionPolicy",
    "CollisionReport",
    "FormatError",
    "PickRangeError",
    "ProvisionTensor",
    "RankError",
    "SLICEABLE",
    "ScatterReport",
    "Scattering",
    "SliceabilityReport",
    "TRIVIAL_ONLY",
    "ValidationError",
    "WEAKLY_SLICEABLE_ONLY",
    "XTransformerSpec",
    "apply_pick",
    "as_data_tensor",
    "as_index_tensor",
    "as_pick",
    "as_shape",
    "compose_provision",
    "concat_index",
    "detect_collisions",
    "disseminate_slice",
    "flat_offset",
    "identity_pick",
    "identity_provision",
    "index_class",
    "index_iter",
    "index_matrix",
    "is_shuffle",
    "is_smooth",
    "is_valid_index",
    "max_sliceable_suffix",
    "pass_through_map",
    "pick_image",
    "provision_image",
    "range_pick",
    "representation_overlap",
    "row_major_strides",
    "scatter",
    "scatter_nd_update",
    "scatter_x",
    "shape_size",
    "slice_tensor",
    "slicing_impossibility",
    "subtensor",
    "tf_transformer",
    "to_tensor",
    "to_tuple",
    "torch_scatter",
    "torch_transformer",
    "transform",
    "trivial_spec",
    "validate_provision",
    "validate_spec",
    "weak_decomposition",
]
