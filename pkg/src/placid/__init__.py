"""placid: plactic monoids, their tropical matrix representation, and
constructive search for the semigroup identities separating them from
upper-triangular tropical matrix semigroups."""

from .checker import (
    ExhaustiveStrategy,
    PlacticCheckReport,
    RandomStrategy,
    TropCheckReport,
    TropSearchConfig,
    TropWitness,
    check_plactic,
    check_rho_consistency,
    check_tropical,
)
from .forge import (
    IdentityWords,
    BuiltIdentity,
    QWord,
    build_identity,
    build_q,
    de_bruijn_binary,
    substitute,
    verify_q,
)
from .paths import (
    LabeledDigraph,
    Path,
    build_digraph,
    make_path,
    max_weight_path,
    path_weight,
    phi_path,
    psi_path,
    splitting_paths,
)
from .rep import (
    faithfulness_check,
    max_readable_length,
    rho_generator,
    rho_identity,
    rho_word,
)
from .subsets import (
    SubsetOfN,
    WordCounts,
    all_subsets,
    chain_length,
    enumerate_interval,
    interval_same_size,
    interval_union,
    join,
    meet,
    split,
    split_apply_decreasing,
    split_apply_increasing,
    subset_leq,
)
from .tableaux import (
    Tableau,
    Word,
    format_word,
    insert,
    knuth_neighbors,
    parse_word,
    plactic_equal,
    tableau_of_word,
)
from .tropical import (
    NEG_INF,
    TropMatrix,
    eval_word,
    is_upper_triangular,
    random_ut,
    trop_identity,
    trop_mul,
)

__version__ = "0.1.0"
