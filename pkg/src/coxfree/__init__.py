"""Word algebra for universal Coxeter groups and free groups, the even-subgroup
embedding ``Aut(W_n) -> Aut(F_{n-1})``, and link-metric checks for Brady's
2-complex."""

__version__ = "0.1.0"

from .words import (  # noqa: E402
    CoxWord,
    FreeWord,
    LetterError,
    RankError,
    apply_map_free,
    cyclic_reduce,
    invert,
    is_conjugate_free,
    multiply,
    reduce_cox,
    reduce_free,
)
from .even import ParityError, cox_to_free, free_to_cox, is_even  # noqa: E402
from .automorphisms import (  # noqa: E402
    AutomorphismError,
    CoxAut,
    FreeAut,
    MissingInverse,
    commutator_free,
    compose_cox,
    compose_free,
    detect_inner,
    has_periodic_generator,
    inner_cox,
    iota,
    mu,
    partial_conj,
    perm_aut,
    r_aut,
    tau,
    transposition,
    verify_iota_injective_on_ball,
)
from .link import (  # noqa: E402
    LinkGraph,
    TurnSequence,
    certify_axis,
    certify_local_geodesic,
    check_girth_2pi,
    link_distance,
    rank_one_flat_obstruction,
    standard_link,
)
