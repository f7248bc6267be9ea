"""Partitions, Young diagrams and the coefficient systems p_lambda, k_lambda.

Nodes are 1-based (row, col) pairs.  The content of a node is col - row.
``n_lambda`` is the classical n(lambda) = sum (i-1) lambda_i; with it
k_lambda is the inverse Schur element of the Hecke algebra.  The sum of
contents is kept as ``content_sum`` and selectable in :func:`k_coeff`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial

from .scalars import GENERIC

# Conventions for the comodule-support sets.  "hook" is validated by the
# determinantal dimensions and the integral contraction checks; "literal"
# keeps the bare inequalities (lambda_r <= s, lambda_r = s).
GAMMA_VARIANTS = ("hook", "literal")
OMEGA_VARIANTS = ("hook", "literal")
# Orientation of the rectangle removed in p_lambda: "rows_r" is r rows of
# length s; "rows_s" is s rows of length r.
RECTANGLES = ("rows_r", "rows_s")


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def part(self, i):
        """lambda_i (1-based), zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def nodes(self):
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    @cached_property
    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def contains(self, other):
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    @classmethod
    def parse(cls, text):
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(tuple(sorted((int(t) for t in text.replace(" ", "").split(",") if t), reverse=True)))


def rectangle(rows, cols):
    return Partition((cols,) * rows if cols > 0 else ())


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n, lexicographically descending: (n), (n-1,1), ..."""
    if n < 0:
        return []

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def hook_length(lam, node):
    i, j = node
    arm = lam.part(i) - j
    leg = lam.conjugate.part(j) - i
    return arm + leg + 1


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """Standard tableaux of shape lam, each as a dict-like tuple row_of[k-1].

    A tableau is encoded by the row (1-based) of each letter 1..n; columns
    follow from the order of filling.  Order: sorted by the tuple of rows
    of n, n-1, ..., 1 ("last letter" order).
    """
    n = lam.n
    out = []

    def fill(shape, k, rows):
        if k == 0:
            out.append(tuple(reversed(rows)))
            return
        # remove letter k from a removable corner
        for i in range(len(shape)):
            if shape[i] > 0 and (i + 1 == len(shape) or shape[i + 1] < shape[i]):
                nxt = list(shape)
                nxt[i] -= 1
                fill(nxt, k - 1, rows + [i + 1])

    fill(list(lam.parts), n, [])
    out.sort(key=lambda t: tuple(reversed(t)))
    return tuple(out)


def tableau_positions(rows_of):
    """Map a row-encoded tableau to the (row, col) of each letter."""
    lengths = {}
    pos = []
    for r in rows_of:
        lengths[r] = lengths.get(r, 0) + 1
        pos.append((r, lengths[r]))
    return pos


@dataclass(frozen=True)
class TableauData:
    hooks: dict
    contents: dict
    n_lambda: int
    content_sum: int
    d_lambda: int


def tableau_data(lam):
    nodes = lam.nodes()
    hooks = {x: hook_length(lam, x) for x in nodes}
    contents = {x: x[1] - x[0] for x in nodes}
    n_classical = sum(i * p for i, p in enumerate(lam.parts))
    return TableauData(hooks, contents, n_classical, sum(contents.values()), len(standard_tableaux(lam)))


def hook_product(lam):
    out = 1
    for x in lam.nodes():
        out *= hook_length(lam, x)
    return out


def dimension(lam):
    """d_lambda by the hook length formula."""
    return factorial(lam.n) // hook_product(lam)


# supports -------------------------------------------------------------------


def in_gamma(lam, r, s, variant="hook"):
    if variant == "hook":
        return lam.part(r + 1) <= s
    if variant == "literal":
        # lambda_0 is read as +infinity, so r = 0 admits nothing
        return r >= 1 and lam.part(r) <= s
    raise ValueError(f"unknown gamma variant {variant!r}")


def gamma_set(n, r, s, variant="hook"):
    return [lam for lam in partitions(n) if in_gamma(lam, r, s, variant)]


def omega_set(n, r, s, variant="hook", field=GENERIC, rect="rows_r"):
    if variant == "hook":
        return [lam for lam in partitions(n) if p_coeff(lam, r, s, field, rect)]
    if variant == "literal":
        return [lam for lam in partitions(n) if r >= 1 and lam.part(r) == s]
    raise ValueError(f"unknown omega variant {variant!r}")


def excluded_rectangle(r, s, rect="rows_r"):
    if rect == "rows_r":
        return rectangle(r, s)
    if rect == "rows_s":
        return rectangle(s, r)
    raise ValueError(f"unknown rectangle orientation {rect!r}")


def p_coeff(lam, r, s, field=GENERIC, rect="rows_r"):
    """p_lambda = prod over nodes outside the rectangle of q^{r-s} / [c(x)+r-s]_q.

    Zero when lam does not contain the rectangle or when a q-integer in the
    product vanishes (a node of content s - r outside the rectangle).
    """
    box = excluded_rectangle(r, s, rect)
    if not lam.contains(box):
        return field.zero
    out = field.one
    qrs = field.q_power(r - s)
    for (i, j) in lam.nodes():
        if i <= len(box) and j <= box.part(i):
            continue
        denom = field.q_int(j - i + r - s)
        if not denom:
            return field.zero
        out = out * qrs / denom
    return out


K_VARIANTS = ("classical", "content")


def k_coeff(lam, field=GENERIC, variant="classical"):
    """k_lambda = q^{n(lambda)} / prod_x [h(x)]_q.

    variant "classical" uses n(lambda) = sum (i-1) lambda_i, "content" the
    sum of contents (the integral checks fail with the latter from n = 2).
    """
    data = tableau_data(lam)
    if variant not in K_VARIANTS:
        raise ValueError(f"unknown k variant {variant!r}")
    out = field.q_power(data.n_lambda if variant == "classical" else data.content_sum)
    for h in data.hooks.values():
        out = out / field.q_int(h)
    return out
