"""The group ring KG, square matrices over it, and the adjoint anti-involution."""

from __future__ import annotations

from types import MappingProxyType

from .errors import UsageError
from .linalg import DenseMatrix


class GroupRingElement:
    """Finitely supported function ``G -> K``; zero coefficients are never stored."""

    __slots__ = ("group", "field", "_coeffs", "_hash")

    def __init__(self, group, field, coeffs=None):
        self.group = group
        self.field = field
        clean = {}
        for g, c in (coeffs or {}).items():
            c = field(c)
            if c:
                clean[g] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, group, field, coeffs):
        # trusted constructor: coeffs already canonical and pruned
        obj = cls.__new__(cls)
        obj.group, obj.field, obj._coeffs, obj._hash = group, field, coeffs, None
        return obj

    @classmethod
    def zero(cls, group, field):
        return cls._raw(group, field, {})

    @classmethod
    def one(cls, group, field):
        return cls._raw(group, field, {group.identity: field.one})

    @classmethod
    def monomial(cls, group, field, g, c=None):
        return cls(group, field, {g: field.one if c is None else c})

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    def __getitem__(self, g):
        return self._coeffs.get(g, self.field.zero)

    def support(self):
        return sorted(self._coeffs, key=self.group.sort_key)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, GroupRingElement):
            return (
                self.group == other.group
                and self.field == other.field
                and self._coeffs == other._coeffs
            )
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            raise UsageError(f"expected a group ring element, got {type(other).__name__}")
        if self.group != other.group or self.field != other.field:
            raise UsageError(
                f"mismatched group rings: {self.field.name}[{self.group}] and "
                f"{other.field.name}[{other.group}]"
            )

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self._coeffs)
        for g, c in other._coeffs.items():
            s = F.add(out.get(g, F.zero), c)
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return GroupRingElement._raw(self.group, F, out)

    def __neg__(self):
        F = self.field
        return GroupRingElement._raw(self.group, F, {g: F.neg(c) for g, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        F = self.field
        a = F(a)
        if not a:
            return GroupRingElement.zero(self.group, F)
        return GroupRingElement._raw(self.group, F, {g: F.mul(a, c) for g, c in self._coeffs.items()})

    def __mul__(self, other):
        """Convolution: ``(xy)(g) = sum over h*k = g of x(h) y(k)``."""
        self._check(other)
        G, F = self.group, self.field
        out = {}
        for h, a in self._coeffs.items():
            for k, b in other._coeffs.items():
                g = G.mul(h, k)
                out[g] = F.add(out.get(g, F.zero), F.mul(a, b))
        return GroupRingElement._raw(G, F, {g: c for g, c in out.items() if c})

    def star(self):
        """The anti-involution ``sum c_g g  ->  sum c_g g^-1``."""
        G = self.group
        return GroupRingElement._raw(G, self.field, {G.inv(g): c for g, c in self._coeffs.items()})

    def format(self) -> str:
        terms = []
        F, G = self.field, self.group
        for g in self.support():
            c = self._coeffs[g]
            word = G.format(g)
            neg = False
            text = F.format(c)
            if F.characteristic == 0 and c < 0:
                neg, text = True, F.format(-c)
            if word == "1":
                body = text
            elif text == "1":
                body = word
            else:
                body = f"{text}*{word}"
            terms.append(("-" if neg else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<{self.format()} in {self.field.name}[{self.group}]>"


def involution(x: GroupRingElement) -> GroupRingElement:
    return x.star()


class LCAMatrix:
    """An n x n matrix over KG, i.e. a linear cellular automaton on (K^n)^G.

    Entries are stored cell by cell; the decomposition
    ``Theta = sum_s Theta_s s`` into scalar matrices is derived on demand.
    """

    def __init__(self, entries, group=None, field=None):
        rows = [list(r) for r in entries]
        n = len(rows)
        if n == 0:
            raise UsageError("an automaton needs dimension n >= 1")
        for r in rows:
            if len(r) != n:
                raise UsageError(f"matrix must be square, got a row of length {len(r)} with {n} rows")
        first = rows[0][0]
        self.group = group if group is not None else first.group
        self.field = field if field is not None else first.field
        for r in rows:
            for x in r:
                if x.group != self.group or x.field != self.field:
                    raise UsageError("all entries must live in the same group ring")
        self.n = n
        self.entries = tuple(tuple(r) for r in rows)
        self._coeff_mats = None

    @classmethod
    def from_coefficients(cls, group, field, n, coeff_mats):
        """Rebuild from ``{s: n x n scalar matrix}``."""
        cells = [[{} for _ in range(n)] for _ in range(n)]
        for s, mat in coeff_mats.items():
            for i in range(n):
                for j in range(n):
                    if mat[i][j]:
                        cells[i][j][s] = mat[i][j]
        return cls([[GroupRingElement(group, field, c) for c in row] for row in cells], group, field)

    @classmethod
    def identity(cls, group, field, n):
        one, zero = GroupRingElement.one(group, field), GroupRingElement.zero(group, field)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], group, field)

    @classmethod
    def scalar(cls, group, field, mat):
        """Matrix supported at the identity only."""
        n = len(mat)
        return cls.from_coefficients(group, field, n, {group.identity: mat})

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, LCAMatrix)
            and self.group == other.group
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"LCAMatrix({self.format_grid()!r} over {self.field.name}[{self.group}])"

    def format_grid(self):
        return [[x.format() for x in row] for row in self.entries]

    def support(self):
        """The minimal S: union of entry supports, in ``sort_key`` order."""
        return list(self.coefficient_matrices())

    def coefficient_matrices(self):
        """``{s: Theta_s}`` with each Theta_s a nonzero n x n list-of-lists."""
        if self._coeff_mats is None:
            F, n = self.field, self.n
            mats = {}
            for i, row in enumerate(self.entries):
                for j, x in enumerate(row):
                    for s, c in x._coeffs.items():
                        mat = mats.get(s)
                        if mat is None:
                            mat = mats[s] = [[F.zero] * n for _ in range(n)]
                        mat[i][j] = c
            key = self.group.sort_key
            self._coeff_mats = {s: mats[s] for s in sorted(mats, key=key)}
        return {s: [list(r) for r in m] for s, m in self._coeff_mats.items()}

    def _coefficients(self):
        # shared, read-only view for internal hot loops
        if self._coeff_mats is None:
            self.coefficient_matrices()
        return self._coeff_mats

    def coefficient_dense(self):
        return {s: DenseMatrix(self.field, m, self.n) for s, m in self._coefficients().items()}

    def _check(self, other):
        if not isinstance(other, LCAMatrix):
            raise UsageError(f"expected an LCAMatrix, got {type(other).__name__}")
        if self.n != other.n:
            raise UsageError(f"dimension mismatch: {self.n} vs {other.n}")
        if self.group != other.group or self.field != other.field:
            raise UsageError("automata live over different group rings")

    def __add__(self, other):
        self._check(other)
        return LCAMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.group,
            self.field,
        )

    def __matmul__(self, other):
        self._check(other)
        n = self.n
        zero = GroupRingElement.zero(self.group, self.field)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LCAMatrix(out, self.group, self.field)

    def adjoint(self):
        return adjoint(self)


def adjoint(theta: LCAMatrix) -> LCAMatrix:
    """Transpose and apply the involution entrywise: ``(Theta*)_ij = (Theta_ji)*``."""
    n = theta.n
    return LCAMatrix(
        [[theta.entries[j][i].star() for j in range(n)] for i in range(n)],
        theta.group,
        theta.field,
    )


def mat_mul(theta: LCAMatrix, phi: LCAMatrix) -> LCAMatrix:
    return theta @ phi
