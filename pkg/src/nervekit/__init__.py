"""Exact nerves of convex polytope families and the R(k,j,d) recognition problem."""
from .classify import Status, classify
from .complex import (SimplicialComplex, dimension, helly_fill, make_complex,
                      one_skeleton_edges, skeleton, suspension)
from .geometry import (Hyperplane, Polytope, affine_dimension, embed, extrude,
                       feasible_common_point, prism, separating_hyperplane, slice_polytope)
from .lifting import embed_family, extrude_family, lift_suspension, project_suspension
from .nerve import (Certificate, ConvexFamily, check_helly_type, full_nerve, nerve_skeleton,
                    verify_certificate)
from .recognize import Graph, decide_R_k11, recognize_interval

__version__ = "0.1.0"
