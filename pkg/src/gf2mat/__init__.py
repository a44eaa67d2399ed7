"""Exact computations on simple binary matroids in PG(n-1, 2).

Vectors of F_2^n are Python ints with bit i standing for e_{i+1}.  Hot
loops run under numba when it is importable; set ``GF2MAT_NO_NUMBA=1`` to
force the pure-numpy kernels.
"""

from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import BACKEND
from .constructions import affine_geometry, c5, c5t, tripod, verify_tripod_lemma
from .errors import (
    BudgetExceeded,
    Gf2MatError,
    InputError,
    InternalConsistencyError,
    MatroidFormatError,
    PreconditionError,
)
from .fileformat import emit_matroid, parse_matroid
from .fourier import is_epsilon_uniform, sumset3_support, triple_counts, wht
from .gf2 import AffineFlat, PointSet, Subspace, complement_flat, largest_affine_in, largest_subspace_in
from .matroid import (
    Matroid,
    critical_number,
    find_embedding,
    i1t_witness,
    induced_iso_exists,
    is_i1t_free,
    is_triangle_free,
    omega,
    restriction_embedding_exists,
)
from .pipeline import PipelineConfig, chi_bound_pipeline, max_tripod_order
from .ramsey import Coloring, bose_burton_check, find_monochromatic_flat, gr_search
from .regularity import is_epsilon_regular, key_lemma_witness, refine_to_regular

__all__ = [
    "BACKEND", "AffineFlat", "BudgetExceeded", "Coloring", "Gf2MatError", "InputError",
    "InternalConsistencyError", "Matroid", "MatroidFormatError", "PipelineConfig", "PointSet",
    "PreconditionError", "Subspace", "affine_geometry", "bose_burton_check", "c5", "c5t",
    "chi_bound_pipeline", "complement_flat", "critical_number", "emit_matroid", "find_embedding",
    "find_monochromatic_flat", "gr_search", "i1t_witness", "induced_iso_exists", "is_epsilon_regular",
    "is_epsilon_uniform", "is_i1t_free", "is_triangle_free", "key_lemma_witness", "largest_affine_in",
    "largest_subspace_in", "max_tripod_order", "omega", "parse_matroid", "refine_to_regular",
    "restriction_embedding_exists", "sumset3_support", "tripod", "triple_counts", "verify_tripod_lemma",
    "wht",
]
