"""Configurations, the evolution rule, translations, the pairing, and windows.

Only finitely supported configurations are ever materialized. Questions
about all of (K^n)^G are answered through window operators: by locality,
the values of ``Theta c`` on a finite window F depend only on ``c`` on
``S^-1 F``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .groupring import GroupRingElement, LCAMatrix
from .linalg import DenseMatrix


class Configuration:
    """Finitely supported map ``G -> K^n``; zero vectors are never stored."""

    __slots__ = ("group", "field", "n", "_values")

    def __init__(self, group, field, n, values=None):
        self.group, self.field, self.n = group, field, n
        clean = {}
        for g, v in (values or {}).items():
            if len(v) != n:
                raise UsageError(f"vector {v!r} has length {len(v)}, expected {n}")
            v = tuple(field(x) for x in v)
            if any(v):
                clean[g] = v
        self._values = clean

    @classmethod
    def _raw(cls, group, field, n, values):
        obj = cls.__new__(cls)
        obj.group, obj.field, obj.n, obj._values = group, field, n, values
        return obj

    @classmethod
    def delta(cls, group, field, n, g, i, c=None):
        """``c * delta_g * e_i`` (i is 0-based)."""
        v = [field.zero] * n
        v[i] = field.one if c is None else field(c)
        return cls(group, field, n, {g: v})

    def zero_vector(self):
        return (self.field.zero,) * self.n

    def __getitem__(self, g):
        return self._values.get(g, self.zero_vector())

    def items(self):
        return [(g, self._values[g]) for g in self.support()]

    def support(self):
        return sorted(self._values, key=self.group.sort_key)

    def __bool__(self):
        return bool(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        return (
            isinstance(other, Configuration)
            and self.group == other.group
            and self.field == other.field
            and self.n == other.n
            and self._values == other._values
        )

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        G, F = self.group, self.field
        body = ", ".join(
            f"{G.format(g)}: ({', '.join(F.format(x) for x in v)})" for g, v in self.items()
        )
        return f"Configuration({{{body}}})"

    def _check(self, other):
        if not isinstance(other, Configuration):
            raise UsageError(f"expected a Configuration, got {type(other).__name__}")
        if (self.group, self.field, self.n) != (other.group, other.field, other.n):
            raise UsageError("configurations over different groups, fields or dimensions")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self._values)
        for g, v in other._values.items():
            w = out.get(g)
            w = v if w is None else tuple(F.add(a, b) for a, b in zip(w, v))
            if any(w):
                out[g] = w
            else:
                out.pop(g, None)
        return Configuration._raw(self.group, F, self.n, out)

    def scale(self, a):
        F = self.field
        a = F(a)
        if not a:
            return Configuration._raw(self.group, F, self.n, {})
        return Configuration._raw(
            self.group, F, self.n, {g: tuple(F.mul(a, x) for x in v) for g, v in self._values.items()}
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)


@dataclass(frozen=True)
class WindowPattern:
    """Values on a finite window: the image of a configuration under restriction."""

    window: tuple
    values: tuple

    def __post_init__(self):
        if len(self.window) != len(self.values):
            raise UsageError("a pattern needs one value per window element")
        if len(set(self.window)) != len(self.window):
            raise UsageError("window elements must be distinct")

    def as_dict(self):
        return dict(zip(self.window, self.values))

    def flat(self):
        return [x for v in self.values for x in v]


def _check_compatible(theta: LCAMatrix, c: Configuration):
    if (theta.group, theta.field, theta.n) != (c.group, c.field, c.n):
        raise UsageError(
            f"automaton over {theta.field.name}[{theta.group}]^{theta.n} cannot act on a "
            f"configuration over {c.field.name}[{c.group}]^{c.n}"
        )


def evolve(theta: LCAMatrix, c: Configuration) -> Configuration:
    """One step of the automaton: ``(Theta c)(g) = sum_s Theta_s c(s^-1 g)``.

    Computed by pushing each supported value ``c(h)`` to ``g = s h``.
    """
    _check_compatible(theta, c)
    G, F, n = theta.group, theta.field, theta.n
    out = {}
    coeffs = theta._coefficients()
    for h, v in c._values.items():
        for s, mat in coeffs.items():
            g = G.mul(s, h)
            w = [F.dot(row, v) for row in mat]
            acc = out.get(g)
            out[g] = w if acc is None else [F.add(a, b) for a, b in zip(acc, w)]
    return Configuration._raw(G, F, n, {g: tuple(w) for g, w in out.items() if any(w)})


def pair(omega: Configuration, c) -> object:
    """``<omega|c> = sum_g <omega(g)|c(g)>``; omega must be finitely supported.

    ``c`` may be a :class:`Configuration` or a :class:`WindowPattern` whose
    window covers the support of omega.
    """
    F = omega.field
    if isinstance(c, WindowPattern):
        vals = c.as_dict()
        missing = [g for g in omega._values if g not in vals]
        if missing:
            raise UsageError(
                f"support of omega escapes the window at {omega.group.format(missing[0])}"
            )
    else:
        omega._check(c)
        vals = c._values
    total = F.zero
    for g, v in omega._values.items():
        w = vals.get(g)
        if w is not None:
            total = F.add(total, F.dot(v, w))
    return total


def translate(g, c: Configuration) -> Configuration:
    """Left translation ``(g c)(h) = c(g^-1 h)``; ``g`` is a canonical form."""
    G = c.group
    if hasattr(g, "form"):
        if g.group != G:
            raise UsageError("translation by an element of a different group")
        g = g.form
    return Configuration._raw(G, c.field, c.n, {G.mul(g, h): v for h, v in c._values.items()})


def translate_right(g, c: Configuration) -> Configuration:
    """Right translation ``(c g)(h) = c(h g^-1)``, moving the support to ``supp(c) g``.

    The evolution rule multiplies supports on the left, so it commutes with
    this action on every group; it commutes with :func:`translate` only when
    G is abelian.
    """
    G = c.group
    if hasattr(g, "form"):
        if g.group != G:
            raise UsageError("translation by an element of a different group")
        g = g.form
    return Configuration._raw(G, c.field, c.n, {G.mul(h, g): v for h, v in c._values.items()})


def restrict(c: Configuration, window) -> WindowPattern:
    window = tuple(window)
    return WindowPattern(window, tuple(c[g] for g in window))


def pattern_to_configuration(p: WindowPattern, group, field, n) -> Configuration:
    return Configuration(group, field, n, dict(zip(p.window, p.values)))


def _dedupe(items):
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def window_domain(theta: LCAMatrix, window):
    """``S^-1 F``: sites whose values influence ``Theta c`` on the window.

    Ordered by scanning the window and, for each site, the support S.
    """
    G = theta.group
    support = theta.support()
    return _dedupe(G.mul(G.inv(s), g) for g in window for s in support)


def image_window(theta: LCAMatrix, domain):
    """``S D``: sites where ``Theta c`` can be nonzero when c lives on D."""
    G = theta.group
    support = theta.support()
    return _dedupe(G.mul(s, h) for h in domain for s in support)


def local_operator(theta: LCAMatrix, domain, codomain) -> DenseMatrix:
    """Matrix of ``d -> (Theta d) restricted to codomain`` for d supported on domain.

    Rows are indexed by ``(g, i)`` with g in codomain, columns by ``(h, j)``
    with h in domain; index ``= position * n + coordinate``.
    """
    G, F, n = theta.group, theta.field, theta.n
    col_of = {h: k for k, h in enumerate(domain)}
    coeffs = theta._coefficients()
    inv_support = [(G.inv(s), mat) for s, mat in coeffs.items()]
    rows = [[F.zero] * (n * len(domain)) for _ in range(n * len(codomain))]
    for gi, g in enumerate(codomain):
        for s_inv, mat in inv_support:
            k = col_of.get(G.mul(s_inv, g))
            if k is None:
                continue
            for i in range(n):
                row = rows[gi * n + i]
                for j in range(n):
                    c = mat[i][j]
                    if c:
                        row[k * n + j] = F.add(row[k * n + j], c)
    return DenseMatrix(F, rows, n * len(domain))


def window_operator(theta: LCAMatrix, window) -> DenseMatrix:
    """The map ``V^(S^-1 F) -> V^F`` induced by Theta on the window F."""
    return local_operator(theta, window_domain(theta, window), list(window))


def configuration_to_vector(c: Configuration, sites):
    """Flatten c over the given sites (position * n + coordinate)."""
    return [x for g in sites for x in c[g]]


def vector_to_configuration(v, sites, group, field, n) -> Configuration:
    return Configuration(group, field, n, {g: v[k * n : (k + 1) * n] for k, g in enumerate(sites)})


def to_module_vector(c: Configuration):
    """Identify c with an element of (KG)^n: coordinate i is ``sum_g c(g)_i g``."""
    return [
        GroupRingElement(c.group, c.field, {g: v[i] for g, v in c._values.items()})
        for i in range(c.n)
    ]


def from_module_vector(xs, n=None) -> Configuration:
    xs = list(xs)
    n = len(xs) if n is None else n
    group, field = xs[0].group, xs[0].field
    values = {}
    for i, x in enumerate(xs):
        for g, c in x.coeffs.items():
            values.setdefault(g, [field.zero] * n)[i] = c
    return Configuration(group, field, n, values)


def module_action(theta: LCAMatrix, xs):
    """``Theta . x`` computed entirely inside the group ring."""
    n = theta.n
    out = []
    for i in range(n):
        acc = GroupRingElement.zero(theta.group, theta.field)
        for j in range(n):
            acc = acc + theta.entries[i][j] * xs[j]
        out.append(acc)
    return out
