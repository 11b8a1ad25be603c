"""Face ideals of simplicial complexes: Alexander duality with whisker
complexes, explicit linear resolutions, linear quotients, poset ideals and
higher-dimensional whiskers, each checked against independent oracles."""

from ._kernels import BACKEND_NAME
from .complex import (
    ShellingResult,
    SimplicialComplex,
    VertexUniverse,
    f_vector,
    independence_complex,
    minimal_nonfaces,
    verify_shelling,
)
from .face_ideal import (
    betti_formula,
    collection_order,
    face_ideal,
    face_order,
    gamma_of,
    verify_duality_theorem,
    verify_face_quotients,
    whisker_complex,
    whisker_facet_ideal,
)
from .homology import hochster_betti, linear_resolution_check, reduced_homology
from .ideal import (
    GeneratorOrder,
    MonomialIdeal,
    VariableUniverse,
    alexander_dual,
    check_linear_quotients,
    minimize,
    stanley_reisner_complex,
)
from .limits import SizeLimitError
from .poset import (
    Poset,
    antichain_ideal,
    antichains,
    chain_ideal,
    chains,
    dilworth_number,
    poset_ideal_ideal,
    poset_ideals,
    rank,
    verify_chain_theorem,
    verify_projdim_corollary,
)
from .resolution import build_resolution, check_augmentation, check_complex, check_ranks_and_degrees
from .whisker_hd import (
    WhiskerSpec,
    build_hd_whisker,
    cover_ideal_order,
    minimal_covers,
    verify_generalized_theorem,
)

__version__ = "0.1.0"
