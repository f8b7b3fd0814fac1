"""Linear cellular automata as matrices over group rings, with exact duality checks."""

from .analyzer import (
    PROPERTIES,
    FiniteDualityReport,
    GardenOfEden,
    KernelElement,
    MEPPair,
    PreimageTable,
    Status,
    Verdict,
    analyze,
    check_injectivity,
    check_post_surjectivity,
    check_pre_injectivity,
    check_surjectivity,
    mep_pair,
    replay_witness,
    verify_duality_finite,
)
from .constructions import free_group_corollary, laplacian, named, random_configuration, random_lca, shift
from .document import AutomatonDocument, format_document, load_document, parse_document, parse_entry
from .engine import (
    Configuration,
    WindowPattern,
    evolve,
    pair,
    restrict,
    translate,
    translate_right,
    window_domain,
    window_operator,
)
from .errors import LCAError, ParseError, ResourceError, UnsupportedOperation, UsageError
from .fields import QQ, PrimeField, Rationals, field_from_name
from .groupring import GroupRingElement, LCAMatrix, adjoint, involution, mat_mul
from .groups import (
    CyclicGroup,
    FreeAbelianGroup,
    FreeGroup,
    GroupElement,
    TableGroup,
    ball,
    enumerate_elements,
    group_from_spec,
    invert,
    load_table,
    multiply,
    symmetric_group,
)
from .linalg import DenseMatrix, kernel_basis, left_annihilator, rank, solve

__version__ = "0.1.0"
