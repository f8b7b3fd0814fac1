"""Named automata and seeded random generators.

Random objects are drawn from NumPy's PCG64 bit generator (64-bit output,
stable stream for a given seed). Only ``random_raw`` is used, and raw words
are mapped to scalars and choices by fixed modular rules, so results do not
depend on any NumPy distribution code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analyzer import (
    INJECTIVE,
    POST_SURJECTIVE,
    PRE_INJECTIVE,
    SURJECTIVE,
    Status,
)
from .engine import Configuration
from .errors import UsageError
from .fields import QQ, Field, field_from_name
from .groupring import GroupRingElement, LCAMatrix, adjoint
from .groups import CyclicGroup, FreeAbelianGroup, FreeGroup, ball


def free_group_corollary(field: Field):
    """``Theta = [[a-1, b-1], [0, 0]]`` on free(2) together with its adjoint.

    The first row is the injective module map ``(x, y) -> (a-1)x + (b-1)y``
    (the augmentation ideal of a free group is free on ``a-1, b-1``); the
    zero row makes Theta pre-injective but not surjective, so the adjoint is
    surjective but not pre-injective.
    """
    G = FreeGroup(2)
    a, b = G.gen(0), G.gen(1)
    e = G.identity

    def x(coeffs):
        return GroupRingElement(G, field, coeffs)

    theta = LCAMatrix([[x({a: 1, e: -1}), x({b: 1, e: -1})], [x({}), x({})]], G, field)
    return theta, adjoint(theta)


def shift(group, g, n, field: Field = QQ) -> LCAMatrix:
    """``g`` times the identity matrix; ``g`` is a canonical form or GroupElement."""
    g = getattr(g, "form", g)
    one = GroupRingElement.monomial(group, field, g)
    zero = GroupRingElement.zero(group, field)
    return LCAMatrix([[one if i == j else zero for j in range(n)] for i in range(n)], group, field)


def laplacian(d: int, field: Field = QQ) -> LCAMatrix:
    """``sum_i (t_i + t_i^-1) - 2d`` on the free abelian group of rank d."""
    G = FreeAbelianGroup(d)
    coeffs = {G.identity: -2 * d}
    for i in range(d):
        coeffs[G.gen(i, 1)] = 1
        coeffs[G.gen(i, -1)] = 1
    return LCAMatrix([[GroupRingElement(G, field, coeffs)]], G, field)


class _Bits:
    def __init__(self, seed):
        self._gen = np.random.PCG64(seed)

    def next(self) -> int:
        return int(self._gen.random_raw())


def random_lca(group, field: Field, n: int, radius: int, seed: int, density: float = 0.5) -> LCAMatrix:
    """Entries supported in ball(radius); each coefficient nonzero-candidate with prob ~density."""
    bits = _Bits(seed)
    B = ball(group, radius)
    threshold = int(density * 2**16)
    cells = []
    for _ in range(n):
        row = []
        for _ in range(n):
            coeffs = {}
            for g in B:
                w = bits.next()
                if (w & 0xFFFF) < threshold:
                    coeffs[g] = field.from_bits(w >> 16)
            row.append(GroupRingElement(group, field, coeffs))
        cells.append(row)
    return LCAMatrix(cells, group, field)


def random_configuration(group, field: Field, n: int, radius: int, seed: int, density: float = 0.5):
    bits = _Bits(seed)
    threshold = int(density * 2**16)
    values = {}
    for g in ball(group, radius):
        w = bits.next()
        if (w & 0xFFFF) < threshold:
            values[g] = [field.from_bits(bits.next()) for _ in range(n)]
    return Configuration(group, field, n, values)


@dataclass(frozen=True)
class Expectation:
    """One row of a gallery entry's expected-property table."""

    target: str  # "theta" or "adjoint"
    property: str
    status: Status
    radius: int


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    group: object
    field: Field
    theta: LCAMatrix
    expected: tuple
    description: str = ""

    @property
    def adjoint(self):
        return adjoint(self.theta)


def _corollary_entry(field):
    theta, _ = free_group_corollary(field)
    inc, ref = Status.INCONCLUSIVE, Status.REFUTED
    expected = [Expectation("theta", SURJECTIVE, ref, 0)]
    expected += [Expectation("theta", PRE_INJECTIVE, inc, r) for r in range(4)]
    expected += [Expectation("adjoint", PRE_INJECTIVE, ref, 0)]
    expected += [Expectation("adjoint", SURJECTIVE, inc, r) for r in range(3)]
    return NamedConstruction(
        "free-corollary",
        theta.group,
        field,
        theta,
        tuple(expected),
        "pre-injective, non-surjective automaton on free(2); its adjoint is surjective and not pre-injective",
    )


def _shift_entry(field):
    G = FreeGroup(1)
    theta = shift(G, G.gen(0), 1, field)
    cert, inc = Status.CERTIFIED, Status.INCONCLUSIVE
    return NamedConstruction(
        "shift",
        G,
        field,
        theta,
        (
            Expectation("theta", PRE_INJECTIVE, inc, 2),
            Expectation("theta", SURJECTIVE, inc, 2),
            Expectation("theta", POST_SURJECTIVE, cert, 1),
            Expectation("theta", INJECTIVE, cert, 1),
            Expectation("adjoint", POST_SURJECTIVE, cert, 1),
        ),
        "translation by the generator of free(1): invertible",
    )


def _laplacian_entry(field):
    theta = laplacian(2, field)
    inc = Status.INCONCLUSIVE
    return NamedConstruction(
        "laplacian",
        theta.group,
        field,
        theta,
        (
            Expectation("theta", PRE_INJECTIVE, inc, 3),
            Expectation("theta", SURJECTIVE, inc, 3),
            Expectation("theta", POST_SURJECTIVE, inc, 3),
        ),
        "self-adjoint discrete Laplacian on zd(2)",
    )


def _cyclic_sum_entry(field):
    G = CyclicGroup(2)
    x = GroupRingElement(G, field, {0: 1, 1: 1})
    theta = LCAMatrix([[x]], G, field)
    ref = Status.REFUTED
    return NamedConstruction(
        "cyclic-sum",
        G,
        field,
        theta,
        tuple(Expectation("theta", p, ref, 1) for p in (PRE_INJECTIVE, SURJECTIVE, POST_SURJECTIVE, INJECTIVE)),
        "1 + t on cyclic(2): singular over every field",
    )


GALLERY = {
    "free-corollary": _corollary_entry,
    "shift": _shift_entry,
    "laplacian": _laplacian_entry,
    "cyclic-sum": _cyclic_sum_entry,
}


def named(name: str, field="F2") -> NamedConstruction:
    if isinstance(field, str):
        field = field_from_name(field)
    try:
        factory = GALLERY[name]
    except KeyError:
        raise UsageError(f"unknown construction {name!r}; choose from {', '.join(GALLERY)}") from None
    return factory(field)
