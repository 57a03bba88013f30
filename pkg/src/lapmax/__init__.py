"""Laplacian top eigenspaces, modules and transitive orientations of graphs."""

from .errors import LapmaxError
from .graph import Graph, Partition, laplacian, parse_edge_list, format_edge_list
from .spectral import ToleranceConfig, DEFAULT_TOL, max_eigenspace, sample_ucuv, fibers, induce_orientation
from .modular import canonical_partition, is_module
from .orientation import PartialOrientation, is_transitive, is_cone_invariant, cone_generators
from .compar import (
    count_via_decomposition,
    enumerate_transitive_orientations,
    recognize_bruteforce,
    recognize_spectral,
    spectral_orient,
)

__version__ = "0.1.0"
