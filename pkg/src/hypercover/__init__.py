"""Minimal (irredundant) covers of finite and lazily presented hypergraphs."""

__version__ = "0.1.0"

from .core import (
    FiniteHypergraph,
    IsomorphismResult,
    Restriction,
    Subfamily,
    is_isomorphic,
    maximal_edges,
    restrict,
    sub_cont_disj,
    sub_containing,
    sub_disjoint,
    subfamily,
    vertex_set,
)
from .covers import (
    Cover,
    MinimalityReport,
    SweepResult,
    delete_and_lift,
    enumerate_minimal_covers,
    greedy_minimalize,
    is_cover,
    is_minimal_cover,
    is_minimal_cover_def,
    minimality_equivalence_sweep,
)
from .countable import (
    ConstructionStep,
    ConstructionTrace,
    GeneratorInfo,
    LazyHypergraph,
    OmegaWitness,
    Truncation,
    decode_integer,
    encode_integer,
    find_omega_witness,
    gen_domotor,
    gen_lattice_lines,
    gen_omega,
    local_construction,
    truncate,
    validate_omega_witness,
)
from .errors import (
    HypercoverError,
    InvariantViolation,
    NotACover,
    ParseError,
    SizeLimit,
)
from .files import parse_hypergraph, serialize_hypergraph
from .structured import (
    DegreeReport,
    NmParams,
    NmReport,
    SupportReport,
    bounded_width_cover,
    check_finite_support,
    check_nm,
    check_point_finite,
    maximal_disjoint_subfamily,
    point_finite_cover,
)
