"""Witness-producing checks for the four automaton properties.

For infinite groups the checks are semi-decisions on growing balls:
non-pre-injectivity and non-surjectivity are refuted with explicit
witnesses, while pre-injectivity and surjectivity are only ever reported as
holding up to the examined radius. Post-surjectivity has a finite
certificate (a preimage of each ``delta_e * e_i``), and injectivity is
certified through the adjoint, since Theta is injective exactly when its
adjoint is post-surjective. On finite groups every check is exact once the
ball covers the group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .engine import (
    Configuration,
    WindowPattern,
    evolve,
    image_window,
    local_operator,
    module_action,
    to_module_vector,
    vector_to_configuration,
    window_domain,
    window_operator,
)
from .errors import LCAError, ResourceError, UnsupportedOperation, UsageError
from .groupring import LCAMatrix, adjoint
from .groups import DEFAULT_BALL_CAP, ball, enumerate_elements, saturation_radius
from .linalg import (
    DenseMatrix,
    column_space_basis,
    kernel_basis,
    left_annihilator,
    orthogonal_complement,
    rank,
    same_span,
    solve,
)

PRE_INJECTIVE = "pre-injective"
SURJECTIVE = "surjective"
POST_SURJECTIVE = "post-surjective"
INJECTIVE = "injective"
PROPERTIES = (PRE_INJECTIVE, SURJECTIVE, POST_SURJECTIVE, INJECTIVE)

DEFAULT_FINITE_CAP = 4096


class Status(str, Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class KernelElement:
    """Nonzero finitely supported k with ``Theta k = 0``."""

    configuration: Configuration
    kind = "kernel-element"


@dataclass(frozen=True)
class GardenOfEden:
    """A pattern on a finite window that no configuration's image restricts to."""

    pattern: WindowPattern
    kind = "garden-of-eden"


@dataclass(frozen=True)
class PreimageTable:
    """``preimages[i]`` maps to ``delta_e * e_i``; taken for the adjoint when ``of_adjoint``."""

    preimages: tuple
    of_adjoint: bool = False
    kind = "preimage-table"


@dataclass(frozen=True)
class MEPPair:
    """Two distinct, almost equal configurations with the same image."""

    x: Configuration
    y: Configuration
    kind = "mep-pair"


@dataclass(frozen=True)
class Verdict:
    property: str
    status: Status
    radius: int
    witness: object = None
    proof: str = None
    dimensions: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self):
        """True/False when decided, None when inconclusive."""
        if self.status is Status.INCONCLUSIVE:
            return None
        return self.status is Status.CERTIFIED


def default_radius(group) -> int:
    if group.is_finite:
        return saturation_radius(group)
    return {"free": 3, "free-abelian": 5}.get(group.kind, 3)


def _setup(theta, r, cap):
    if r is None:
        r = default_radius(theta.group)
    if r < 0:
        raise UsageError(f"radius must be >= 0, got {r}")
    B = ball(theta.group, r, cap)
    saturated = theta.group.is_finite and len(B) == theta.group.order
    return r, B, saturated


def _dims(window, M, rk):
    return {"window": len(window), "rows": M.nrows, "cols": M.ncols, "rank": rk}


def check_pre_injectivity(theta: LCAMatrix, r=None, cap=DEFAULT_BALL_CAP) -> Verdict:
    """Look for a nonzero kernel element supported in ball(r)."""
    r, B, saturated = _setup(theta, r, cap)
    M = local_operator(theta, B, image_window(theta, B))
    ker = kernel_basis(M)
    dims = _dims(B, M, M.ncols - len(ker))
    if ker:
        k = vector_to_configuration(ker[0], B, theta.group, theta.field, theta.n)
        return Verdict(PRE_INJECTIVE, Status.REFUTED, r, KernelElement(k), dimensions=dims)
    if saturated:
        return Verdict(PRE_INJECTIVE, Status.CERTIFIED, r, proof="finite-exhaustive", dimensions=dims)
    return Verdict(PRE_INJECTIVE, Status.INCONCLUSIVE, r, dimensions=dims)


def _garden_of_eden(M, window, n):
    """Deterministic pattern outside the column space of a rank-deficient M."""
    phi = kernel_basis(M.transpose())[0]
    k = next(i for i, x in enumerate(phi) if x)
    F = M.field
    flat = [F.zero] * M.nrows
    flat[k] = F.one
    values = tuple(tuple(flat[p * n : (p + 1) * n]) for p in range(len(window)))
    return GardenOfEden(WindowPattern(tuple(window), values))


def check_surjectivity(theta: LCAMatrix, r=None, cap=DEFAULT_BALL_CAP) -> Verdict:
    """Is every pattern on ball(r) the restriction of some image?"""
    r, F, saturated = _setup(theta, r, cap)
    M = window_operator(theta, F)
    rk = rank(M)
    dims = _dims(F, M, rk)
    if rk < M.nrows:
        witness = _garden_of_eden(M, F, theta.n)
        return Verdict(SURJECTIVE, Status.REFUTED, r, witness, dimensions=dims)
    if saturated:
        return Verdict(SURJECTIVE, Status.CERTIFIED, r, proof="finite-exhaustive", dimensions=dims)
    return Verdict(SURJECTIVE, Status.INCONCLUSIVE, r, dimensions=dims)


def check_post_surjectivity(theta: LCAMatrix, r=None, cap=DEFAULT_BALL_CAP) -> Verdict:
    """Solve ``Theta z_i = delta_e * e_i`` with z_i supported in ball(r).

    Success for every i certifies post-surjectivity: the rule commutes with
    right translations, which carry ``delta_e`` to every ``delta_g``, so by
    linearity every finitely supported configuration is then an image of a
    finitely supported one.
    """
    r, B, saturated = _setup(theta, r, cap)
    G, K, n = theta.group, theta.field, theta.n
    codomain = image_window(theta, B)
    M = local_operator(theta, B, codomain)
    dims = _dims(B, M, rank(M))
    e_pos = next((p for p, g in enumerate(codomain) if g == G.identity), None)
    preimages = []
    missing = None
    for i in range(n):
        x = None
        if e_pos is not None:
            target = [K.zero] * M.nrows
            target[e_pos * n + i] = K.one
            x = solve(M, target)
        if x is None:
            missing = i
            break
        preimages.append(vector_to_configuration(x, B, G, K, n))
    if missing is None:
        return Verdict(POST_SURJECTIVE, Status.CERTIFIED, r, PreimageTable(tuple(preimages)), dimensions=dims)
    if saturated:
        values = tuple(
            tuple(K.one if (g == G.identity and j == missing) else K.zero for j in range(n)) for g in B
        )
        witness = GardenOfEden(WindowPattern(tuple(B), values))
        return Verdict(POST_SURJECTIVE, Status.REFUTED, r, witness, proof="finite-exhaustive", dimensions=dims)
    return Verdict(POST_SURJECTIVE, Status.INCONCLUSIVE, r, dimensions=dims)


def check_injectivity(theta: LCAMatrix, r=None, cap=DEFAULT_BALL_CAP) -> Verdict:
    """Exact on finite groups; otherwise certified when the adjoint is post-surjective."""
    G = theta.group
    if G.is_finite:
        r = default_radius(G) if r is None else r
        elements = ball(G, saturation_radius(G), cap)
        M = local_operator(theta, elements, elements)
        ker = kernel_basis(M)
        dims = _dims(elements, M, M.ncols - len(ker))
        if ker:
            k = vector_to_configuration(ker[0], elements, G, theta.field, theta.n)
            return Verdict(INJECTIVE, Status.REFUTED, r, KernelElement(k), proof="finite-exhaustive", dimensions=dims)
        return Verdict(INJECTIVE, Status.CERTIFIED, r, proof="finite-exhaustive", dimensions=dims)
    dual = check_post_surjectivity(adjoint(theta), r, cap)
    if dual.status is Status.CERTIFIED:
        w = PreimageTable(dual.witness.preimages, of_adjoint=True)
        return Verdict(INJECTIVE, Status.CERTIFIED, dual.radius, w, proof="duality-transfer", dimensions=dual.dimensions)
    return Verdict(INJECTIVE, Status.INCONCLUSIVE, dual.radius, dimensions=dual.dimensions)


CHECKS = {
    PRE_INJECTIVE: check_pre_injectivity,
    SURJECTIVE: check_surjectivity,
    POST_SURJECTIVE: check_post_surjectivity,
    INJECTIVE: check_injectivity,
}


def analyze(theta: LCAMatrix, properties=PROPERTIES, r=None, cap=DEFAULT_BALL_CAP):
    out = []
    for p in properties:
        if p not in CHECKS:
            raise UsageError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
        out.append(CHECKS[p](theta, r, cap))
    return out


def replay_witness(theta: LCAMatrix, w) -> bool:
    """Re-verify a certificate by direct evaluation; never raises on bad input."""
    try:
        return _replay(theta, w)
    except (LCAError, ValueError, TypeError, IndexError, ZeroDivisionError):
        return False


def _replay(theta, w):
    G, K, n = theta.group, theta.field, theta.n
    if isinstance(w, KernelElement):
        k = w.configuration
        return bool(k) and not evolve(theta, k)
    if isinstance(w, GardenOfEden):
        p = w.pattern
        if any(len(v) != n for v in p.values):
            return False
        M = window_operator(theta, p.window)
        return left_annihilator(M, p.flat()) is not None
    if isinstance(w, PreimageTable):
        target = adjoint(theta) if w.of_adjoint else theta
        if len(w.preimages) != n:
            return False
        return all(
            evolve(target, z) == Configuration.delta(G, K, n, G.identity, i)
            for i, z in enumerate(w.preimages)
        )
    if isinstance(w, MEPPair):
        return w.x != w.y and evolve(theta, w.x) == evolve(theta, w.y)
    return False


def mep_pair(theta: LCAMatrix, k) -> MEPPair:
    """Turn a kernel element k into the mutually erasable pair ``(k, 0)``."""
    if isinstance(k, KernelElement):
        k = k.configuration
    if not k or evolve(theta, k):
        raise UsageError("mep_pair needs a nonzero element of the kernel")
    return MEPPair(k, Configuration(k.group, k.field, k.n))


@dataclass(frozen=True)
class FiniteDualityReport:
    """Outcome of checking the four orthogonality relations on a finite group.

    On a finite group the finitely supported configurations and all
    configurations coincide, but each side of every relation is computed by
    a different route: the group-ring action on basis vectors for the
    finitely supported space, the local rule on the whole group for the full
    space.
    """

    order: int
    n: int
    equations: dict
    dimensions: dict
    transpose_identity: bool
    routes_agree: bool

    @property
    def all_hold(self):
        return (
            all(self.equations.values())
            and self.transpose_identity
            and self.routes_agree
            and self.dimensions["rank_nullity"]
        )


def full_matrix(theta: LCAMatrix, elements):
    """Matrix of Theta on (K^n)^G via the local rule, basis ``delta_g e_i`` in element order."""
    W = window_operator(theta, elements)
    domain = window_domain(theta, elements)
    F, n = theta.field, theta.n
    N = n * len(elements)
    # source column in W for each target column; None where S^-1 F misses a site
    src = [None] * N
    pos = {h: d for d, h in enumerate(domain)}
    for k, g in enumerate(elements):
        d = pos.get(g)
        if d is not None:
            for j in range(n):
                src[k * n + j] = d * n + j
    rows = [[F.zero if c is None else row[c] for c in src] for row in W.rows]
    return DenseMatrix(F, rows, N)


def module_matrix(theta: LCAMatrix, elements):
    """Matrix of Theta on (KG)^n via group-ring products, same basis as :func:`full_matrix`."""
    G, F, n = theta.group, theta.field, theta.n
    cols = []
    for h in elements:
        for j in range(n):
            image = module_action(theta, to_module_vector(Configuration.delta(G, F, n, h, j)))
            cols.append([x[g] for g in elements for x in image])
    N = n * len(elements)
    return DenseMatrix(F, [[cols[c][r] for c in range(N)] for r in range(N)], N)


def verify_duality_finite(theta: LCAMatrix, cap=DEFAULT_FINITE_CAP) -> FiniteDualityReport:
    G, F, n = theta.group, theta.field, theta.n
    if not G.is_finite:
        raise UnsupportedOperation(f"{G} is infinite; the exact duality check needs a finite group")
    N = n * G.order
    if N > cap:
        raise ResourceError(f"n*|G| = {N} exceeds the finite-dimension cap of {cap}")
    elements = enumerate_elements(G)
    dual = adjoint(theta)
    full, full_dual = full_matrix(theta, elements), full_matrix(dual, elements)
    fs, fs_dual = module_matrix(theta, elements), module_matrix(dual, elements)

    def perp(vs):
        return orthogonal_complement(F, vs, N)

    def same(us, vs):
        return same_span(F, us, vs, N)

    equations = {
        "eq1_ker_finite_perp_eq_im_adjoint_full": same(perp(kernel_basis(fs)), column_space_basis(full_dual)),
        "eq2_ker_full_perp_eq_im_adjoint_finite": same(perp(kernel_basis(full)), column_space_basis(fs_dual)),
        "eq3_im_finite_perp_eq_ker_adjoint_full": same(perp(column_space_basis(fs)), kernel_basis(full_dual)),
        "eq4_im_full_perp_eq_ker_adjoint_finite": same(perp(column_space_basis(full)), kernel_basis(fs_dual)),
    }
    rk, rk_dual = rank(full), rank(full_dual)
    dims = {
        "space": N,
        "dim_ker": N - rk,
        "dim_im": rk,
        "dim_ker_adjoint": N - rank(fs_dual),
        "dim_im_adjoint": rk_dual,
    }
    dims["rank_nullity"] = (
        dims["dim_ker"] + dims["dim_im"] == N
        and len(kernel_basis(full_dual)) + rk_dual == N
    )
    return FiniteDualityReport(
        order=G.order,
        n=n,
        equations=equations,
        dimensions=dims,
        transpose_identity=full_dual == full.transpose(),
        routes_agree=full == fs and full_dual == fs_dual,
    )
