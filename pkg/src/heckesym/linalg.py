"""Exact dense matrices and the tensor-index calculus on V^{(x)n}.

Multi-index convention (used everywhere): the tuple (i_1, ..., i_n) with
0 <= i_k < d has composite index sum_k i_k * d**(n-k), i.e. big-endian.
An operator entry at (row=composite(K), col=composite(I)) is the
coefficient of x_K in the image of x_I.

Entries are exact scalars: ``fractions.Fraction`` or
:class:`heckesym.scalars.RatFunc`.  Storage is dense; products and
elimination skip zero entries, which is where the tensor-power operators
get their speed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import IndexOutOfRange, NotInvertible

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _exact(x):
    return Fraction(x) if isinstance(x, int) else x


def composite(idx, d):
    c = 0
    for i in idx:
        c = c * d + i
    return c


def multi_index(c, d, n):
    out = [0] * n
    for k in range(n - 1, -1, -1):
        c, out[k] = divmod(c, d)
    return tuple(out)


def multi_indices(d, n):
    """All length-n multi-indices in composite order."""
    return list(product(range(d), repeat=n))


class Operator:
    """Immutable-by-convention dense matrix with exact entries."""

    __slots__ = ("rows", "cols", "entries", "shape")

    def __init__(self, entries, shape=None):
        self.entries = [[_exact(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged entry grid")
        if shape is not None:
            d, n = shape
            if self.rows != d ** n or self.cols != d ** n:
                raise ValueError(f"shape tag {shape} does not match {self.rows}x{self.cols}")
        self.shape = shape

    @classmethod
    def _wrap(cls, entries, shape=None):
        obj = object.__new__(cls)
        obj.entries = entries
        obj.rows = len(entries)
        obj.cols = len(entries[0]) if entries else 0
        obj.shape = shape
        return obj

    @classmethod
    def zeros(cls, rows, cols=None, shape=None):
        cols = rows if cols is None else cols
        return cls._wrap([[_ZERO] * cols for _ in range(rows)], shape)

    @classmethod
    def identity(cls, size, shape=None):
        m = [[_ZERO] * size for _ in range(size)]
        for i in range(size):
            m[i][i] = _ONE
        return cls._wrap(m, shape)

    @classmethod
    def from_columns(cls, columns, rows):
        if not columns:
            return cls._wrap([[] for _ in range(rows)])
        return cls._wrap([[c[i] for c in columns] for i in range(rows)])

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def nonzero_rows(self):
        """Per row, the list of (col, value) pairs with nonzero value."""
        return [[(j, x) for j, x in enumerate(row) if x] for row in self.entries]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bnz = other.nonzero_rows()
        out = []
        for row in self.entries:
            acc = [_ZERO] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in bnz[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        shape = self.shape if self.shape == other.shape else None
        return Operator._wrap(out, shape)

    def apply(self, vec):
        out = []
        for row in self.entries:
            acc = _ZERO
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def __add__(self, other):
        self._same(other)
        return Operator._wrap([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                              self.shape if self.shape == other.shape else None)

    def __sub__(self, other):
        self._same(other)
        return Operator._wrap([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                              self.shape if self.shape == other.shape else None)

    def __neg__(self):
        return Operator._wrap([[-a for a in r] for r in self.entries], self.shape)

    def scale(self, c):
        c = _exact(c)
        return Operator._wrap([[a * c if a else a for a in r] for r in self.entries], self.shape)

    def _same(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    __hash__ = None

    def is_zero(self):
        return not any(x for r in self.entries for x in r)

    def first_nonzero(self):
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x:
                    return i, j
        return None

    def transpose(self):
        return Operator._wrap([list(c) for c in zip(*self.entries)] if self.rows else [], self.shape)

    def trace(self):
        acc = _ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def map(self, f):
        return Operator._wrap([[f(a) for a in r] for r in self.entries], self.shape)

    def __repr__(self):
        return f"Operator({self.rows}x{self.cols}, shape={self.shape})"


def identity(d, n=1):
    return Operator.identity(d ** n, shape=(d, n))


def kron(a, b):
    """Kronecker product: (A (x) B)(x_I (x) x_J) = A x_I (x) B x_J."""
    out = [[_ZERO] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    bnz = b.nonzero_rows()
    for i, arow in enumerate(a.entries):
        for j, x in enumerate(arow):
            if not x:
                continue
            for k, brow in enumerate(bnz):
                target = out[i * b.rows + k]
                off = j * b.cols
                for l, y in brow:
                    target[off + l] = x * y
    shape = None
    if a.shape and b.shape and a.shape[0] == b.shape[0]:
        shape = (a.shape[0], a.shape[1] + b.shape[1])
    return Operator._wrap(out, shape)


def lift(r, n, i):
    """R_i = id^{i-1} (x) R (x) id^{n-i-1} on V^{(x)n}, 1 <= i <= n-1."""
    if r.shape is None or r.shape[1] != 2:
        raise ValueError("lift needs an operator tagged with shape (d, 2)")
    d = r.shape[0]
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"lift index {i} outside 1..{n - 1}", witness=(n, i))
    op = r
    if i > 1:
        op = kron(identity(d, i - 1), op)
    if n - i - 1 > 0:
        op = kron(op, identity(d, n - i - 1))
    return op


def tensor_power(a, n):
    d = a.shape[0] if a.shape else a.rows
    out = Operator.identity(1, shape=(d, 0))
    for _ in range(n):
        out = kron(out, a)
    if out.shape is None:
        out.shape = (d, n)
    return out


# elimination --------------------------------------------------------------


def _components(rows):
    """Connected components of the bipartite row/column support graph."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, row in enumerate(rows):
        ri = find(("r", i))
        for j, _ in row:
            rj = find(("c", j))
            if rj != ri:
                parent[rj] = ri
    comps = {}
    for i, row in enumerate(rows):
        if row:
            comps.setdefault(find(("r", i)), []).append(i)
    return list(comps.values())


def _echelon(rows, ncols, full=True):
    """Row-reduce sparse rows (dict col->val) in place; return pivot list.

    Pivot rule: columns in increasing order, first row with a nonzero
    entry.  Returns [(pivot_col, row_dict)] with pivot entries scaled to 1
    and the pivot column cleared from every other pivot row (RREF).
    """
    pivots = []
    remaining = [r for r in rows if r]
    for col in range(ncols):
        k = next((idx for idx, r in enumerate(remaining) if r.get(col)), None)
        if k is None:
            continue
        prow = remaining.pop(k)
        inv = 1 / _exact(prow[col])
        prow = {j: x * inv for j, x in prow.items()}
        nxt = []
        for r in remaining:
            f = r.get(col)
            if f:
                for j, x in prow.items():
                    y = r.get(j, _ZERO) - f * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
            if r:
                nxt.append(r)
        remaining = nxt
        for _, r in (pivots if full else ()):
            f = r.get(col)
            if f:
                for j, x in prow.items():
                    y = r.get(j, _ZERO) - f * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        pivots.append((col, prow))
        if not remaining:
            break
    return pivots


def _row_dicts(a):
    return [{j: x for j, x in enumerate(row) if x} for row in a.entries]


def exact_rank(a):
    """Rank by exact elimination, block by block over the support graph."""
    rows = _row_dicts(a)
    total = 0
    for comp in _components([list(r.items()) for r in rows]):
        sub = [dict(rows[i]) for i in comp]
        cols = sorted({j for r in sub for j in r})
        remap = {j: k for k, j in enumerate(cols)}
        sub = [{remap[j]: x for j, x in r.items()} for r in sub]
        total += len(_echelon(sub, len(cols), full=False))
    return total


def rref(a):
    """(pivot columns, reduced nonzero rows as dicts)."""
    piv = _echelon(_row_dicts(a), a.cols)
    return [c for c, _ in piv], [r for _, r in piv]


def exact_kernel(a):
    """Basis of {x : A x = 0}, one vector per free column."""
    pivots, red = rref(a)
    pivset = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivset:
            continue
        vec = [_ZERO] * a.cols
        vec[free] = _ONE
        for pc, row in zip(pivots, red):
            x = row.get(free)
            if x:
                vec[pc] = -x
        basis.append(vec)
    return basis


def column_basis(a):
    """Indices of a maximal independent set of columns (pivot columns)."""
    return rref(a)[0]


def exact_inverse(a):
    if a.rows != a.cols:
        raise NotInvertible(f"non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    rows = []
    for i, row in enumerate(a.entries):
        r = {j: x for j, x in enumerate(row) if x}
        r[n + i] = _ONE
        rows.append(r)
    piv = _echelon(rows, n)
    if len(piv) < n or any(c >= n for c, _ in piv):
        raise NotInvertible("singular matrix", witness=len([c for c, _ in piv if c < n]))
    inv = [[_ZERO] * n for _ in range(n)]
    for c, r in piv:
        for j, x in r.items():
            if j >= n:
                inv[c][j - n] = x
    return Operator._wrap(inv, a.shape)


def determinant(a):
    """Exact determinant by elimination (used on small matrices)."""
    if a.rows != a.cols:
        raise ValueError("determinant of non-square matrix")
    m = [list(map(_exact, r)) for r in a.entries]
    n = a.rows
    det = _ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return _ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f = f * inv
                for j in range(c, n):
                    m[i][j] = m[i][j] - f * m[c][j]
    return det
