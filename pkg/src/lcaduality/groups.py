"""Finitely generated groups with solvable word problem.

Elements are stored in canonical form as plain hashable Python values, and
the group object performs the arithmetic on them:

* free group: tuple of ``(generator_index, exponent)`` syllables, exponents
  nonzero and no two adjacent syllables on the same generator;
* free abelian group: tuple of integers;
* cyclic and table groups: an ``int`` index, identity ``0``.

:class:`GroupElement` wraps a form together with its group for interactive
use; the hot paths elsewhere in the package work on raw forms.
"""

from __future__ import annotations

import itertools
import re
import string
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import ResourceError, UnsupportedOperation, UsageError

DEFAULT_BALL_CAP = 10**6

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_ATOM_RE = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(-?\s*\d+))?\s*\Z")


def default_names(k):
    if k == 1:
        return ("t",)
    if k <= 26:
        return tuple(string.ascii_lowercase[:k])
    return tuple(f"x{i}" for i in range(1, k + 1))


def _check_names(names, k):
    names = tuple(names)
    if len(names) != k:
        raise UsageError(f"expected {k} generator names, got {len(names)}")
    for name in names:
        if not _NAME_RE.match(name):
            raise UsageError(f"invalid generator name {name!r}")
    if len(set(names)) != len(names):
        raise UsageError(f"generator names must be distinct: {names}")
    return names


class Group:
    """Base class. Subclasses implement the canonical-form arithmetic."""

    kind = ""
    order = None  # None for infinite groups
    identity = None

    def __init__(self, names):
        self.generator_names = tuple(names)
        self._index = {name: i for i, name in enumerate(self.generator_names)}

    # equality is structural so that descriptors parsed twice compare equal
    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__, self._key()))
            self.__dict__["_hash"] = h
        return h

    @property
    def rank(self):
        return len(self.generator_names)

    @property
    def is_finite(self):
        return self.order is not None

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def gen(self, i, e=1):
        """Canonical form of ``generator_i ** e``."""
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def length(self, x) -> int:
        """Word length with respect to the generators and their inverses."""
        raise NotImplementedError

    def syllables(self, x):
        """A word for ``x`` as a list of ``(generator_index, exponent)``."""
        raise NotImplementedError

    def sort_key(self, x):
        return (self.length(x), x)

    def element(self, x):
        if not self.contains(x):
            raise UsageError(f"{x!r} is not a canonical element of {self}")
        return GroupElement(self, x)

    def generators(self):
        return [GroupElement(self, self.gen(i)) for i in range(self.rank)]

    def generator_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown generator {name!r} for {self}") from None

    def format(self, x) -> str:
        parts = []
        for i, e in self.syllables(x):
            name = self.generator_names[i]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse_word(self, text: str):
        """Inverse of :meth:`format`: ``"a*b^-1"``, ``"1"``."""
        x = self.identity
        text = text.strip()
        if text == "1":
            return x
        for atom in text.split("*"):
            m = _ATOM_RE.match(atom)
            if not m:
                raise UsageError(f"malformed word {text!r}")
            e = int(m.group(2).replace(" ", "")) if m.group(2) else 1
            x = self.mul(x, self.gen(self.generator_index(m.group(1)), e))
        return x

    def word_product(self, syllables):
        x = self.identity
        for i, e in syllables:
            x = self.mul(x, self.gen(i, e))
        return x

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()

    def ball(self, r, cap=DEFAULT_BALL_CAP):
        return ball(self, r, cap)

    def enumerate(self):
        return enumerate_elements(self)


@dataclass(frozen=True)
class GroupElement:
    """A canonical form bound to its group."""

    group: Group
    form: object

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, e):
        G = self.group
        x, base = G.identity, self.form if e >= 0 else G.inv(self.form)
        for _ in range(abs(e)):
            x = G.mul(x, base)
        return GroupElement(G, x)

    def __str__(self):
        return self.group.format(self.form)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    if x.group != y.group:
        raise UsageError(f"cannot multiply elements of {x.group} and {y.group}")
    return GroupElement(x.group, x.group.mul(x.form, y.form))


def invert(x: GroupElement) -> GroupElement:
    return GroupElement(x.group, x.group.inv(x.form))


class FreeGroup(Group):
    kind = "free"
    identity = ()

    def __init__(self, k, names=None):
        if k < 1:
            raise UsageError(f"free group rank must be >= 1, got {k}")
        super().__init__(_check_names(names or default_names(k), k))

    def _key(self):
        return self.generator_names

    def describe(self):
        return f"free({self.rank})"

    def mul(self, x, y):
        if not x:
            return y
        if not y:
            return x
        w = list(x)
        for j, (g, e) in enumerate(y):
            if w and w[-1][0] == g:
                s = w[-1][1] + e
                if s:
                    w[-1] = (g, s)
                    w.extend(y[j + 1 :])
                    break
                w.pop()
            else:
                w.extend(y[j:])
                break
        return tuple(w)

    def inv(self, x):
        return tuple((g, -e) for g, e in reversed(x))

    def gen(self, i, e=1):
        return ((i, e),) if e else ()

    def contains(self, x):
        if not isinstance(x, tuple):
            return False
        prev = None
        for s in x:
            if not (isinstance(s, tuple) and len(s) == 2):
                return False
            g, e = s
            if not (0 <= g < self.rank) or e == 0 or g == prev:
                return False
            prev = g
        return True

    def length(self, x):
        return sum(abs(e) for _, e in x)

    def syllables(self, x):
        return list(x)

    def reduce(self, syllables):
        """Canonical form of an arbitrary (unreduced) syllable list."""
        return self.word_product(syllables)


class FreeAbelianGroup(Group):
    kind = "free-abelian"

    def __init__(self, d, names=None):
        if d < 1:
            raise UsageError(f"free abelian group dimension must be >= 1, got {d}")
        super().__init__(_check_names(names or default_names(d), d))
        self.identity = (0,) * d

    def _key(self):
        return self.generator_names

    def describe(self):
        return f"zd({self.rank})"

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv(self, x):
        return tuple(-a for a in x)

    def gen(self, i, e=1):
        v = [0] * self.rank
        v[i] = e
        return tuple(v)

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == self.rank and all(type(a) is int for a in x)

    def length(self, x):
        return sum(abs(a) for a in x)

    def syllables(self, x):
        return [(i, a) for i, a in enumerate(x) if a]


class _FiniteGroup(Group):
    identity = 0

    def contains(self, x):
        return type(x) is int and 0 <= x < self.order

    def length(self, x):
        return self._distance[x]

    def syllables(self, x):
        return self._words[x]

    def sort_key(self, x):
        return (self._distance[x], x)

    def _build_words(self):
        # shortest words by BFS from the identity; ties broken by ball order
        words = {0: []}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(self.rank):
                    for sign in (1, -1):
                        y = self.mul(x, self.gen(i, sign))
                        if y not in words:
                            w = list(words[x])
                            if w and w[-1][0] == i:
                                w[-1] = (i, w[-1][1] + sign)
                            else:
                                w.append((i, sign))
                            words[y] = w
                            nxt.append(y)
            frontier = nxt
        if len(words) != self.order:
            raise UsageError(
                f"generators {self.generator_names} generate only {len(words)} of {self.order} elements"
            )
        self._words = [words[x] for x in range(self.order)]
        self._distance = [sum(abs(e) for _, e in words[x]) for x in range(self.order)]


class CyclicGroup(_FiniteGroup):
    kind = "cyclic"

    def __init__(self, m, names=None):
        if m < 1:
            raise UsageError(f"cyclic group order must be >= 1, got {m}")
        super().__init__(_check_names(names or ("t",), 1))
        self.order = m
        self._distance = [min(k, m - k) for k in range(m)]

    def _key(self):
        return (self.order, self.generator_names)

    def describe(self):
        return f"cyclic({self.order})"

    def mul(self, x, y):
        return (x + y) % self.order

    def inv(self, x):
        return -x % self.order

    def gen(self, i, e=1):
        return e % self.order

    def syllables(self, x):
        return [(0, x)] if x else []


class TableGroup(_FiniteGroup):
    """Finite group given by its multiplication table (identity at index 0).

    ``generators`` lists element indices; when omitted a generating set is
    chosen greedily in index order. Generator ``names`` default to ``g<index>``.
    """

    kind = "finite-table"

    def __init__(self, table, generators=None, names=None, source=None):
        table = tuple(tuple(int(v) for v in row) for row in table)
        m = len(table)
        self.order = m
        self.table = table
        self.source = source
        _validate_table(table)
        self._inverse = tuple(row.index(0) for row in table)
        if generators is None:
            generators = _greedy_generators(table)
        generators = tuple(int(g) for g in generators)
        for g in generators:
            if not 0 <= g < m:
                raise UsageError(f"generator index {g} out of range for a table of size {m}")
        self.generator_elements = generators
        super().__init__(_check_names(names or tuple(f"g{g}" for g in generators), len(generators)))
        self._build_words()

    def _key(self):
        return (self.table, self.generator_elements, self.generator_names)

    def describe(self):
        if self.source is not None:
            return f'table("{self.source}")'
        return f"table({self.order})"

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self._inverse[x]

    def gen(self, i, e=1):
        g = self.generator_elements[i]
        base = g if e >= 0 else self._inverse[g]
        x = 0
        for _ in range(abs(e)):
            x = self.table[x][base]
        return x


def _validate_table(table):
    m = len(table)
    if m == 0:
        raise UsageError("multiplication table is empty")
    full = set(range(m))
    for i, row in enumerate(table):
        if len(row) != m:
            raise UsageError(f"table row {i} has length {len(row)}, expected {m}")
        if set(row) != full:
            raise UsageError(f"table row {i} is not a permutation of 0..{m - 1} (not a Latin square)")
    for j in range(m):
        if {table[i][j] for i in range(m)} != full:
            raise UsageError(f"table column {j} is not a permutation of 0..{m - 1} (not a Latin square)")
    if table[0] != tuple(range(m)) or any(table[i][0] != i for i in range(m)):
        raise UsageError("index 0 must be the identity of the table")
    for x in range(m):
        y = table[x].index(0)
        if table[y][x] != 0:
            raise UsageError(f"element {x} has no two-sided inverse")
    for x, y, z in itertools.product(range(m), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise UsageError(f"table is not associative at ({x}, {y}, {z})")


def _greedy_generators(table):
    m = len(table)
    gens = []
    reached = {0}
    for x in range(1, m):
        if x in reached:
            continue
        gens.append(x)
        reached = _closure(table, gens)
        if len(reached) == m:
            break
    return gens


def _closure(table, gens):
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def load_table(path, generators=None, names=None):
    """Read a whitespace-separated m x m table file.

    Lines starting with ``#`` are comments, except ``# gen <name> <index>``
    which declares a named generator.
    """
    path = Path(path)
    rows = []
    declared = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "gen":
                declared.append((parts[1], int(parts[2])))
            continue
        rows.append([int(tok) for tok in line.replace(",", " ").split()])
    if declared and generators is None:
        names = [n for n, _ in declared]
        generators = [g for _, g in declared]
    return TableGroup(rows, generators, names, source=str(path))


def symmetric_group(k=3):
    """S_k as a table group; generators ``s`` = (0 1) and ``r`` = (0 1 ... k-1)."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (x*y)(i) = x(y(i))
    table = [[index[tuple(x[y[i]] for i in range(k))] for y in perms] for x in perms]
    s = list(range(k))
    s[0], s[1] = 1, 0
    r = [(i + 1) % k for i in range(k)]
    return TableGroup(table, [index[tuple(s)], index[tuple(r)]], ["s", "r"])


@lru_cache(maxsize=256)
def _ball(group, r, cap):
    seen = {group.identity}
    order = [group.identity]
    frontier = [group.identity]
    steps = [group.gen(i, sign) for i in range(group.rank) for sign in (1, -1)]
    for _ in range(r):
        nxt = []
        for x in frontier:
            for s in steps:
                y = group.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(order) > cap:
                        raise ResourceError(
                            f"ball of radius {r} in {group} exceeds the cap of {cap} elements"
                        )
        if not nxt:
            break
        frontier = nxt
    return tuple(order)


def ball(group: Group, r: int, cap: int = DEFAULT_BALL_CAP):
    """Elements at word distance <= r, breadth-first.

    Within a distance level, elements appear in the order they are reached
    from the previous level, trying generators by index and ``+1`` before
    ``-1``. Finite groups saturate at the whole group.
    """
    if r < 0:
        raise UsageError(f"radius must be >= 0, got {r}")
    return list(_ball(group, int(r), int(cap)))


def enumerate_elements(group: Group):
    if not group.is_finite:
        raise UnsupportedOperation(f"{group} is infinite and cannot be enumerated")
    return list(range(group.order))


def saturation_radius(group: Group) -> int:
    """Smallest r with ball(r) equal to the whole (finite) group."""
    if not group.is_finite:
        raise UnsupportedOperation(f"{group} is infinite")
    return max(group.length(x) for x in range(group.order))


def free_ball_size(k: int, r: int) -> int:
    """Closed form for the size of a radius-r ball in the free group of rank k."""
    if k == 1:
        return 2 * r + 1
    return 1 + 2 * k * ((2 * k - 1) ** r - 1) // (2 * k - 2)


def group_from_spec(text: str, base_dir=None) -> Group:
    """Parse ``free(k)``, ``zd(d)``, ``cyclic(m)`` or ``table("<path>")``."""
    text = text.strip()
    m = re.fullmatch(r"(free|zd|cyclic)\s*\(\s*(\d+)\s*\)", text)
    if m:
        kind, k = m.group(1), int(m.group(2))
        return {"free": FreeGroup, "zd": FreeAbelianGroup, "cyclic": CyclicGroup}[kind](k)
    m = re.fullmatch(r'table\s*\(\s*"([^"]*)"\s*\)', text)
    if m:
        path = Path(m.group(1))
        full = path if path.is_absolute() or base_dir is None else Path(base_dir) / path
        group = load_table(full)
        group.source = m.group(1)
        return group
    raise UsageError(f"unknown group {text!r}; expected free(k), zd(d), cyclic(m) or table(\"path\")")
