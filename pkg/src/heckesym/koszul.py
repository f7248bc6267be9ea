"""Koszul complexes K^a with terms Lambda_k (x) S_l^* (k - l = a).

Everything lives in the ambient space V^{(x)k} (x) V^{*(x)l}, indexed by
the composite of (I, J) with I a k-index and J an l-index.  Lambda_k is
the image of rho_k(Y_k); S_l^* is the image of rho_l(X_l)^T acting on the
dual tensor power.  The differential inserts the canonical element
sum_i x_i (x) x^i, appending x_i to the Lambda factor and x^i to the S^*
factor, then reprojects.  With that pairing d o d contains Y_2 X_2 = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .comodules import DEFAULT_BUDGET, _check_budget, birank, ext_dim, sym_dim
from .errors import InvariantViolation
from .hecke import rho_symmetrizer
from .linalg import Operator, column_basis, exact_rank, kron


def _projector(h, k, l):
    """Y_k (x) X_l^T on the ambient space of K^{k,l}."""
    key = ("koszul_proj", k, l)
    if key not in h.cache:
        y = rho_symmetrizer(h, k, True) if k else Operator.identity(1)
        x = rho_symmetrizer(h, l, False).transpose() if l else Operator.identity(1)
        h.cache[key] = kron(y, x)
    return h.cache[key]


@dataclass
class KoszulTerm:
    k: int
    l: int
    lam_basis: list   # pivot columns of rho_k(Y_k)
    sym_basis: list   # pivot columns of rho_l(X_l)^T

    @property
    def dim(self):
        return len(self.lam_basis) * len(self.sym_basis)


def koszul_term(h, k, l, budget=DEFAULT_BUDGET):
    """Bases of Lambda_k and S_l^* as column indices of their projectors."""
    if k < 0 or l < 0:
        return KoszulTerm(k, l, [], [])
    _check_budget(h, k + l, budget)
    y = rho_symmetrizer(h, k, True) if k else Operator.identity(1)
    x = rho_symmetrizer(h, l, False).transpose() if l else Operator.identity(1)
    return KoszulTerm(k, l, column_basis(y), column_basis(x))


def _insertion(d, k, l):
    """(I, J) -> sum_i (I i, J i) from V^k (x) V*^l into V^{k+1} (x) V*^{l+1}."""
    src = d ** (k + l)
    dst = d ** (k + l + 2)
    grid = [[0] * src for _ in range(dst)]
    dl = d ** l
    for c in range(src):
        a, b = divmod(c, dl)
        for i in range(d):
            grid[((a * d + i) * dl * d) + b * d + i][c] = 1
    return Operator(grid)


def koszul_differential(h, k, l, budget=DEFAULT_BUDGET):
    """d^{k,l} as an operator between ambient spaces, zero off the term.

    Returns an Operator of size d^{k+l+2} x d^{k+l}; its restriction to
    K^{k,l} is the differential and it kills the complement.
    """
    d = h.d
    if k < 0 or l < 0:
        return Operator.zeros(d ** max(k + l + 2, 0), d ** max(k + l, 0))
    _check_budget(h, k + l + 2, budget)
    key = ("koszul_d", k, l)
    if key not in h.cache:
        h.cache[key] = _projector(h, k + 1, l + 1) @ _insertion(d, k, l) @ _projector(h, k, l)
    return h.cache[key]


def check_d_squared(h, k, l, budget=DEFAULT_BUDGET):
    """Raise InvariantViolation unless d^{k+1,l+1} d^{k,l} = 0."""
    if k < 0 or l < 0:
        return True
    dd = koszul_differential(h, k + 1, l + 1, budget) @ koszul_differential(h, k, l, budget)
    if not dd.is_zero():
        raise InvariantViolation(f"d o d != 0 starting at K^{{{k},{l}}}", witness=(k, l))
    return True


def window(a, size):
    """The first ``size`` terms (k, l) of K^a with k, l >= 0."""
    start = (a, 0) if a >= 0 else (0, -a)
    return [(start[0] + t, start[1] + t) for t in range(size)]


def _rank(h, k, l, budget):
    if k < 0 or l < 0:
        return 0
    key = ("koszul_rank", k, l)
    if key not in h.cache:
        h.cache[key] = exact_rank(koszul_differential(h, k, l, budget))
    return h.cache[key]


@dataclass
class KoszulReport:
    a: int
    rows: list = field(default_factory=list)   # (k, l, term dim, rank d_out, homology)

    @property
    def concentrated_at(self):
        nz = [(k, l) for k, l, _, _, hom in self.rows if hom]
        return list(nz[0]) if len(nz) == 1 else None

    @property
    def homological_determinant_dim(self):
        return sum(hom for *_, hom in self.rows)

    def euler_terms(self):
        return sum((-1) ** k * dim for k, _, dim, _, _ in self.rows)

    def euler_homology(self):
        return sum((-1) ** k * hom for k, *_, hom in self.rows)

    def to_dict(self):
        return {
            "a": self.a,
            "window": [[k, l] for k, l, *_ in self.rows],
            "terms": [{"k": k, "l": l, "dim": dim, "rank_d": rk, "homology": hom}
                      for k, l, dim, rk, hom in self.rows],
            "concentrated_at": self.concentrated_at,
            "homological_determinant_dim": self.homological_determinant_dim,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def homology_dims(h, a, window_size=4, budget=DEFAULT_BUDGET, check=True):
    """Homology of K^a over a window; d o d = 0 is checked on every step.

    dim H^{k,l} = dim K^{k,l} - rank d^{k,l} - rank d^{k-1,l-1}.
    """
    report = KoszulReport(a)
    for k, l in window(a, window_size):
        dim = ext_dim(h, k, budget) * sym_dim(h, l, budget)
        if check:
            check_d_squared(h, k - 1, l - 1, budget)
        rk_out = _rank(h, k, l, budget)
        rk_in = _rank(h, k - 1, l - 1, budget)
        hom = dim - rk_out - rk_in
        if hom < 0:
            raise InvariantViolation(f"negative homology at ({k},{l})", witness=(k, l))
        report.rows.append((k, l, dim, rk_out, hom))
    return report


def check_euler(report):
    """Euler characteristic of terms equals that of homology.

    Only meaningful when the window ends where the complex does (last
    outgoing differential zero); otherwise the truncation term is added.
    """
    k, l, dim, rk_out, hom = report.rows[-1]
    boundary = (-1) ** k * rk_out
    return report.euler_terms() == report.euler_homology() + boundary


def distinguished_index(h):
    """a = r - s, where the homology should sit at (r, s)."""
    r, s = birank(h)
    return r - s
