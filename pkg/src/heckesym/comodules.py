"""Comodule dimensions, the Poincare series of the exterior algebra and the bi-rank."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import Partition, gamma_set, partitions, tableau_data
from .errors import DegreeOverflow, InvariantViolation, RecurrenceUnstable
from .hecke import rho_symmetrizer, unit_operators
from .linalg import Operator, determinant, exact_rank

DEFAULT_BUDGET = 4096
DEFAULT_GUARD = 2


def _check_budget(h, n, budget):
    if h.d ** n > budget:
        raise DegreeOverflow(f"d^n = {h.d}^{n} exceeds the budget {budget}", witness=(h.d, n))


def _dim(h, n, antisym, budget):
    if n < 0:
        return 0
    if n == 0:
        return 1
    key = ("dim", antisym)
    cache = h.cache.setdefault(key, {})
    if n not in cache:
        _check_budget(h, n, budget)
        cache[n] = exact_rank(rho_symmetrizer(h, n, antisym))
    return cache[n]


def sym_dim(h, n, budget=DEFAULT_BUDGET):
    """dim S_n = rank rho_n(X_n)."""
    return _dim(h, n, False, budget)


def ext_dim(h, n, budget=DEFAULT_BUDGET):
    """dim Lambda_n = rank rho_n(Y_n)."""
    return _dim(h, n, True, budget)


# -- Poincare series ------------------------------------------------------------


def _poly_str(coeffs, var="t"):
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += sign + body
    return s


@dataclass
class PoincareProfile:
    dims: list
    numerator: list      # coefficients, constant first
    denominator: list
    birank: tuple

    @property
    def numerator_str(self):
        return _poly_str(self.numerator)

    @property
    def denominator_str(self):
        return _poly_str(self.denominator)

    def series(self, terms):
        """Power-series expansion of numerator/denominator."""
        out = []
        for k in range(terms):
            acc = Fraction(self.numerator[k]) if k < len(self.numerator) else Fraction(0)
            for j in range(1, min(k, len(self.denominator) - 1) + 1):
                acc -= self.denominator[j] * out[k - j]
            out.append(acc)
        return out


def _solve_denominator(a, r, s):
    """D (deg <= s, D(0)=1) with sum_j D_j a_{k-j} = 0 for r < k < len(a), or None."""
    rows = []
    for k in range(r + 1, len(a)):
        rows.append([Fraction(a[k - j]) if k - j >= 0 else Fraction(0) for j in range(1, s + 1)]
                    + [-Fraction(a[k])])
    # Gaussian elimination on the augmented system
    m = [r_[:] for r_ in rows]
    piv_cols = []
    row = 0
    for col in range(s):
        p = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        piv_cols.append(col)
        row += 1
    if any(all(x == 0 for x in r_[:-1]) and r_[-1] != 0 for r_ in m):
        return None
    if len(piv_cols) < s:
        # underdetermined: the caller only accepts overdetermined systems
        return None
    sol = [Fraction(0)] * s
    for i, col in enumerate(piv_cols):
        sol[col] = m[i][-1]
    return [Fraction(1)] + sol


def poincare_rational(dims, guard=DEFAULT_GUARD):
    """Smallest rational function N/D (N(0)=D(0)=1) reproducing ``dims``.

    Candidates are tried by increasing deg N + deg D; a candidate (r, s) is
    only admissible when the data overdetermine it by ``guard`` terms,
    i.e. len(dims) >= r + s + 1 + guard.  The bi-rank is (deg N, deg D).
    """
    dims = list(dims)
    if not dims or dims[0] != 1:
        raise ValueError("dims must start with dim Lambda_0 = 1")
    m = len(dims)
    for total in range(m):
        if m < total + 1 + guard:
            break
        found = []
        for s in range(total + 1):
            r = total - s
            den = _solve_denominator(dims, r, s)
            if den is None or den[-1] == 0 and s > 0:
                continue
            num = []
            for k in range(r + 1):
                num.append(sum(den[j] * dims[k - j] for j in range(min(k, s) + 1)))
            if num[-1] == 0 and r > 0:
                continue
            found.append((r, s, num, den))
        if len(found) > 1:
            raise RecurrenceUnstable(f"ambiguous rational fit for {dims}: "
                                     f"{[(r, s) for r, s, _, _ in found]}")
        if found:
            r, s, num, den = found[0]
            num = [_as_int(x) for x in num]
            den = [_as_int(x) for x in den]
            return PoincareProfile(dims, num, den, (r, s))
    raise RecurrenceUnstable(f"no rational fit stable over {guard} extra terms for dims {dims}; extend dims")


def _as_int(x):
    return int(x) if x.denominator == 1 else x


def ext_dims(h, n_max, budget=DEFAULT_BUDGET):
    return [ext_dim(h, n, budget) for n in range(n_max + 1)]


def birank(h, n_max=None, guard=DEFAULT_GUARD, budget=DEFAULT_BUDGET, check_rank=True):
    """(r, s) from the Poincare series of Lambda; cached on h.

    With ``n_max`` the fit uses exactly dims 0..n_max; otherwise dims are
    extended one degree at a time until a fit is admissible or the budget
    is exhausted (DegreeOverflow carries the partial dims).
    """
    if n_max is None and h.birank_cache is not None:
        return h.birank_cache.birank
    if n_max is not None:
        profile = poincare_rational(ext_dims(h, n_max, budget), guard)
    else:
        dims = [1]
        n = 0
        while True:
            try:
                profile = poincare_rational(dims, guard)
                break
            except RecurrenceUnstable:
                n += 1
                try:
                    dims.append(ext_dim(h, n, budget))
                except DegreeOverflow as exc:
                    raise DegreeOverflow(str(exc), exc.witness, partial=dims) from None
    r, s = profile.birank
    if r + s > h.d:
        warnings.warn(f"bi-rank {(r, s)} exceeds d = {h.d}", stacklevel=2)
    if check_rank:
        from .symmetry import quantum_rank
        if quantum_rank(h) != -h.field.q_int(s - r):
            raise InvariantViolation(f"tr C = {quantum_rank(h)} but -[s-r]_q = {-h.field.q_int(s - r)}")
    h.birank_cache = profile
    return profile.birank


def poincare_profile(h, n_max=None, guard=DEFAULT_GUARD, budget=DEFAULT_BUDGET):
    birank(h, n_max, guard, budget)
    return h.birank_cache


# -- simple comodules ---------------------------------------------------------


def simple_dim(h, lam, budget=DEFAULT_BUDGET):
    """dim I_lam = det(dim S_{lam_i - i + j}) over the length of lam."""
    k = len(lam)
    if k == 0:
        return 1
    grid = [[sym_dim(h, lam.part(i) - i + j, budget) for j in range(1, k + 1)] for i in range(1, k + 1)]
    return int(determinant(Operator(grid)))


def unit_image_dim(h, lam):
    """rank rho(e_lam^{11}): the idempotent-image oracle for simple_dim."""
    return exact_rank(unit_operators(h, lam.n)[lam][0][0])


@dataclass
class Decomposition:
    n: int
    parts: dict  # Partition -> (multiplicity, dim I_lam)

    @property
    def total(self):
        return sum(m * dim for m, dim in self.parts.values())


def decompose_tensor_power(h, n, budget=DEFAULT_BUDGET):
    """V^{(x)n} = sum over lam of d_lam copies of I_lam; cross-checked two ways."""
    _check_budget(h, n, budget)
    parts = {}
    for lam in partitions(n):
        det_dim = simple_dim(h, lam, budget)
        img_dim = unit_image_dim(h, lam)
        if det_dim != img_dim:
            raise InvariantViolation(f"dim I_{lam}: determinant gives {det_dim}, idempotent image {img_dim}")
        d_lam = tableau_data(lam).d_lambda
        parts[lam] = (d_lam if det_dim > 0 else 0, det_dim)
    dec = Decomposition(n, parts)
    if dec.total != h.d ** n:
        raise InvariantViolation(f"sum d_lam dim I_lam = {dec.total} != d^n = {h.d ** n}")
    return dec


def support_matches_gamma(h, n, variant="hook"):
    """dim I_lam > 0 exactly on Gamma^{r,s}_n."""
    r, s = birank(h)
    gamma = set(gamma_set(n, r, s, variant))
    return all((simple_dim(h, lam) > 0) == (lam in gamma) for lam in partitions(n))
