from .types import GROUP_ORDER, HexIndex, HexPoint, ReflectionElement
from .core import (
    apply_reflection,
    as_index,
    compose,
    contains_delta,
    contains_omega,
    degree_of,
    euclid_norm,
    from_homogeneous,
    hex_degree,
    hex_norm,
    index_arrays,
    index_ball,
    index_shell,
    inverse,
    phi,
    reduce_mod3,
    reduce_to_omega,
    reflect_index,
    s_to_t,
    t_to_s,
    to_homogeneous,
)

__all__ = [
    "GROUP_ORDER",
    "HexIndex",
    "HexPoint",
    "ReflectionElement",
    "apply_reflection",
    "as_index",
    "compose",
    "contains_delta",
    "contains_omega",
    "degree_of",
    "euclid_norm",
    "from_homogeneous",
    "hex_degree",
    "hex_norm",
    "index_arrays",
    "index_ball",
    "index_shell",
    "inverse",
    "phi",
    "reduce_mod3",
    "reduce_to_omega",
    "reflect_index",
    "s_to_t",
    "t_to_s",
    "to_homogeneous",
]
