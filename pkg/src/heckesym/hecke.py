"""The Hecke algebra H_{q,n} of type A and its action on V^{(x)n}.

Conventions
-----------
* Permutations are one-line tuples of 0..n-1; (w v)(i) = w[v[i]].
* s_i (1 <= i <= n-1) swaps i-1 and i; t_i is the matching generator with
  (t_i - q)(t_i + 1) = 0 and t_w t_v = t_{wv} when lengths add.
* t_w acts on V^{(x)n} through its lexicographically smallest reduced word,
  t_i -> R_i.
* Irreducible representations use Young's seminormal form on standard
  tableaux in last-letter order; matrix units are obtained by Fourier
  inversion against the trace tau(t_w) = delta_{w,1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import permutations as _perms

from .combinatorics import partitions, standard_tableaux, tableau_positions
from .errors import DegenerateQ
from .linalg import Operator, identity, lift
from .scalars import GENERIC

# -- permutations -------------------------------------------------------------


def perm_identity(n):
    return tuple(range(n))


def perm_mul(w, v):
    return tuple(w[i] for i in v)


def perm_inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_mul_s(w, i):
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_mul_s(w, i):
    return tuple(i if x == i - 1 else i - 1 if x == i else x for x in w)


def is_right_descent(w, i):
    return w[i - 1] > w[i]


def is_left_descent(w, i):
    inv = perm_inverse(w)
    return inv[i - 1] > inv[i]


@lru_cache(maxsize=None)
def reduced_word(w):
    """Lexicographically smallest reduced word (letters 1..n-1)."""
    for i in range(1, len(w)):
        if is_left_descent(w, i):
            return (i,) + reduced_word(left_mul_s(w, i))
    return ()


@lru_cache(maxsize=None)
def symmetric_group(n):
    """S_n sorted by (length, one-line form)."""
    return tuple(sorted(_perms(range(n)), key=lambda w: (length(w), w)))


def coset_representatives(n):
    """Minimal right coset reps of S_{n-1} in S_n: 1, s_{n-1}, s_{n-1}s_{n-2}, ..."""
    reps = [perm_identity(n)]
    w = perm_identity(n)
    for j in range(n - 1, 0, -1):
        w = right_mul_s(w, j)
        reps.append(w)
    return reps


# -- algebra elements ---------------------------------------------------------


@dataclass
class HeckeElement:
    n: int
    coeffs: dict = dc_field(default_factory=dict)
    field: object = GENERIC

    def __post_init__(self):
        self.coeffs = {w: c for w, c in self.coeffs.items() if c}

    @classmethod
    def one(cls, n, field=GENERIC):
        return cls(n, {perm_identity(n): field.one}, field)

    @classmethod
    def basis(cls, w, field=GENERIC):
        return cls(len(w), {tuple(w): field.one}, field)

    @classmethod
    def generator(cls, n, i, field=GENERIC):
        return cls.basis(right_mul_s(perm_identity(n), i), field)

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, self.field.zero) + c
        return HeckeElement(self.n, out, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        return HeckeElement(self.n, {w: x * c for w, x in self.coeffs.items()}, self.field)

    def __mul__(self, other):
        return hecke_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        z = self.field.zero
        return self.n == other.n and all(self.coeffs.get(k, z) == other.coeffs.get(k, z) for k in keys)

    def trace(self):
        """tau(a): coefficient of t_1."""
        return self.coeffs.get(perm_identity(self.n), self.field.zero)

    def is_zero(self):
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for w in sorted(self.coeffs, key=lambda w: (length(w), w)):
            word = reduced_word(w)
            basis = "t[" + ",".join(map(str, word)) + "]" if word else "1"
            terms.append(f"({self.coeffs[w]})*{basis}")
        return " + ".join(terms)


def _times_generator(coeffs, i, field):
    """Right multiplication of a coefficient dict by t_i."""
    out = {}
    q = field.q
    for w, c in coeffs.items():
        ws = right_mul_s(w, i)
        if not is_right_descent(w, i):
            out[ws] = out.get(ws, field.zero) + c
        else:
            out[w] = out.get(w, field.zero) + c * (q - 1)
            out[ws] = out.get(ws, field.zero) + c * q
    return {w: c for w, c in out.items() if c}


def hecke_mul(a, b):
    if a.n != b.n:
        raise ValueError("hecke_mul needs elements of the same H_n")
    field = a.field
    # a * t_v for every v in supp(b), built along reduced words
    memo = {perm_identity(a.n): a.coeffs}

    def times(v):
        if v in memo:
            return memo[v]
        i = next(i for i in range(1, a.n) if is_right_descent(v, i))
        res = _times_generator(times(right_mul_s(v, i)), i, field)
        memo[v] = res
        return res

    out = {}
    for v, c in b.coeffs.items():
        for w, x in times(v).items():
            out[w] = out.get(w, field.zero) + x * c
    return HeckeElement(a.n, out, field)


def _normalizer(n, kind, antisym, field):
    if kind == "factorial":
        norm = field.q_factorial(n)
    elif kind == "q_integer":
        norm = field.q_int(n)
    else:
        raise ValueError(f"unknown normalizer {kind!r}")
    if antisym:
        # [n]_{1/q}! = q^{-n(n-1)/2} [n]_q! ; [n]_{1/q} = q^{1-n} [n]_q
        shift = -n * (n - 1) // 2 if kind == "factorial" else 1 - n
        norm = norm * field.q_power(shift)
    return norm


def _sign_weight(w, antisym, field):
    if not antisym:
        return field.one
    l = length(w)
    return (-field.one) ** l * field.q_power(-l)


def symmetrizer_direct(n, antisym=False, normalizer="factorial", field=GENERIC):
    """Sum over all of S_n; the oracle for the recursive construction."""
    norm = _normalizer(n, normalizer, antisym, field)
    return HeckeElement(n, {w: _sign_weight(w, antisym, field) / norm for w in symmetric_group(n)}, field)


@lru_cache(maxsize=None)
def _symmetrizer(n, antisym, normalizer, field):
    if n <= 1:
        return HeckeElement.one(max(n, 0), field)
    if normalizer != "factorial":
        return symmetrizer_direct(n, antisym, normalizer, field)
    prev = _symmetrizer(n - 1, antisym, normalizer, field)
    prev = HeckeElement(n, {w + (n - 1,): c for w, c in prev.coeffs.items()}, field)
    partial = HeckeElement(n, {c: _sign_weight(c, antisym, field) for c in coset_representatives(n)}, field)
    step = field.q_int(n) * (field.q_power(1 - n) if antisym else field.one)
    return hecke_mul(prev, partial).scale(field.one / step)


def symmetrizer(n, normalizer="factorial", field=GENERIC):
    """X_n = ([n]_q!)^{-1} sum_w t_w."""
    return _symmetrizer(n, False, normalizer, field)


def antisymmetrizer(n, normalizer="factorial", field=GENERIC):
    """Y_n = ([n]_{1/q}!)^{-1} sum_w (-q)^{-l(w)} t_w."""
    return _symmetrizer(n, True, normalizer, field)


# -- seminormal representations -----------------------------------------------


def _check_q(field, n):
    for h in range(1, n + 1):
        if not field.q_int(h):
            raise DegenerateQ(f"[{h}]_q vanishes for q = {field.q}")


@lru_cache(maxsize=None)
def seminormal_irrep(lam, field=GENERIC):
    """Images of t_1..t_{n-1} in the seminormal representation of shape lam."""
    n = lam.n
    _check_q(field, n)
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    m = len(tabs)
    mats = []
    for i in range(1, n):
        grid = [[field.zero] * m for _ in range(m)]
        for t, k in index.items():
            pos = tableau_positions(t)
            (r1, c1), (r2, c2) = pos[i - 1], pos[i]
            rho = (c2 - r2) - (c1 - r1)
            grid[k][k] = field.q_power(rho) / field.q_int(rho)
            if r1 == r2 or c1 == c2:
                continue
            swapped = list(t)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            k2 = index[tuple(swapped)]
            if r1 < r2:
                grid[k2][k] = field.one
            else:
                grid[k2][k] = field.q * field.q_int(rho + 1) * field.q_int(rho - 1) / field.q_int(rho) ** 2
        mats.append(Operator(grid))
    return mats


@lru_cache(maxsize=None)
def irrep_matrices(lam, field=GENERIC):
    """rho_lam(t_w) for every w in S_n."""
    n = lam.n
    gens = seminormal_irrep(lam, field)
    m = len(standard_tableaux(lam))
    out = {}
    for w in symmetric_group(n):
        word = reduced_word(w)
        if not word:
            out[w] = Operator.identity(m)
        else:
            out[w] = gens[word[0] - 1] @ out[left_mul_s(w, word[0])]
    return out


@lru_cache(maxsize=None)
def schur_element(lam, field=GENERIC):
    """s_lam with tau = sum_lam s_lam^{-1} chi_lam."""
    mats = irrep_matrices(lam, field)
    total = field.zero
    for w, m in mats.items():
        dual = mats[perm_inverse(w)][0, 0] * field.q_power(-length(w))
        total = total + m[0, 0] * dual
    if not total:
        raise DegenerateQ(f"Schur element of {lam} vanishes")
    return total


@dataclass
class MatrixUnits:
    """Abstract matrix units e_lam^{ij} of H_n (0-based i, j)."""
    n: int
    units: dict  # lam -> list of lists of HeckeElement
    field: object = GENERIC

    def dim(self, lam):
        return len(self.units[lam])

    def __getitem__(self, key):
        lam, i, j = key
        return self.units[lam][i][j]


@lru_cache(maxsize=None)
def matrix_units(n, field=GENERIC):
    """e_lam^{ij} = s_lam^{-1} sum_w rho_lam(t_w^vee)_{ji} t_w, t_w^vee = q^{-l(w)} t_{w^{-1}}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_q(field, n)
    units = {}
    for lam in partitions(n):
        mats = irrep_matrices(lam, field)
        s = schur_element(lam, field)
        m = len(standard_tableaux(lam))
        grid = []
        for i in range(m):
            row = []
            for j in range(m):
                coeffs = {}
                for w in mats:
                    c = mats[perm_inverse(w)][j, i] * field.q_power(-length(w))
                    if c:
                        coeffs[w] = c / s
                row.append(HeckeElement(n, coeffs, field))
            grid.append(row)
        units[lam] = grid
    return MatrixUnits(n, units, field)


# -- the action on V^{(x)n} ---------------------------------------------------


def _cache(h, key):
    return h.cache.setdefault(key, {})


def rho_basis(h, n, w):
    """R_w on V^{(x)n} via the lexicographically smallest reduced word."""
    cache = _cache(h, ("rho_t", n))
    if w in cache:
        return cache[w]
    word = reduced_word(w)
    if not word:
        op = identity(h.d, n)
    else:
        op = _lifted(h, n, word[0]) @ rho_basis(h, n, left_mul_s(w, word[0]))
    cache[w] = op
    return op


def _lifted(h, n, i):
    cache = _cache(h, ("lift", n))
    if i not in cache:
        cache[i] = lift(h.R, n, i)
    return cache[i]


def rho(h, n, a):
    """Image of a HeckeElement under t_i -> R_i."""
    if a.n != n:
        raise ValueError(f"element of H_{a.n} applied on V^(x){n}")
    out = Operator.zeros(h.d ** n, shape=(h.d, n))
    for w, c in sorted(a.coeffs.items(), key=lambda kv: (length(kv[0]), kv[0])):
        out = out + rho_basis(h, n, w).scale(c)
    return out


def _unnormalized_sum(h, n, antisym):
    """rho(sum_w weight(w) t_w) by the coset recursion, cached on h."""
    cache = _cache(h, ("sum", antisym))
    if n in cache:
        return cache[n]
    if n <= 1:
        op = identity(h.d, max(n, 0))
    else:
        field = h.field
        prev = _unnormalized_sum(h, n - 1, antisym)
        from .linalg import kron
        prev = kron(prev, identity(h.d, 1))
        factor = identity(h.d, n)
        chain = identity(h.d, n)
        weight = field.one
        step = -field.one / field.q if antisym else field.one
        for j in range(n - 1, 0, -1):
            weight = weight * step
            chain = chain @ _lifted(h, n, j)
            factor = factor + chain.scale(weight)
        op = prev @ factor
    cache[n] = op
    return op


def rho_symmetrizer(h, n, antisym=False):
    """rho_n(X_n) (or rho_n(Y_n) with antisym=True), q-factorial normalized."""
    op = _unnormalized_sum(h, n, antisym)
    norm = _normalizer(n, "factorial", antisym, h.field)
    return op.scale(h.field.one / norm)


def unit_operators(h, n):
    """E_lam^{ij} = rho_n(e_lam^{ij}) for all lam |- n."""
    cache = _cache(h, ("units", n))
    if cache:
        return cache
    mu = matrix_units(n, h.field)
    for lam, grid in mu.units.items():
        cache[lam] = [[rho(h, n, e) for e in row] for row in grid]
    return cache
