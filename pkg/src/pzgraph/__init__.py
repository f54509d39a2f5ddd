"""Geodesics in the distant graph of the projective line over the integers."""
from .core import (
    DegenerateArguments,
    DistantGraphError,
    IVec2,
    NonUnimodular,
    NotDistant,
    ProjPoint,
    TrivialPair,
    ZeroVector,
    canonicalize,
    cone_sign,
    det2,
    is_distant,
    maximal_cliques,
    neighbors,
    parse_point,
    point,
)
from .matrices import (
    EWord,
    Mat2,
    cf_expand,
    e_matrix,
    eval_word,
    reduce_word,
    shortest_path_matrices,
    standard_basis,
    standard_word,
)
from .paths import (
    Cycle,
    Path,
    all_shortest_paths,
    consistent_paths,
    count_shortest_paths,
    distance,
    hamiltonian_cycle,
    is_unique_shortest,
    shortening,
    standard_path,
    standard_shortest_path,
)
from .transition import (
    KleinGraph,
    TransitionData,
    corner_graph,
    klein_graph,
    realize,
    sails,
    sails_svg,
    transition,
)

__version__ = "0.1.0"
