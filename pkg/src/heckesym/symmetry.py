"""Hecke symmetries: construction, loading and axiom verification.

Index conventions follow :mod:`heckesym.linalg`: R^{kl}_{ij} is the entry
at row composite(k, l), column composite(i, j), i.e.
R(x_i (x) x_j) = sum_{k,l} R^{kl}_{ij} x_k (x) x_l.

Closedness data: P is the unique matrix with
P^{im}_{jn} R^{nk}_{ml} = delta^i_l delta^k_j; it is stored with rows
composite(i, m) and columns composite(j, n).  C^i_j = sum_m P^{im}_{jm}.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import (NotClosed, NotHecke, NotInvertible, NotYangBaxter, ParseError,
                     VerificationFailed, AxiomFailure)
from .linalg import Operator, exact_inverse, identity, kron, lift, multi_index
from .scalars import GENERIC, GenericField, NumericField, format_scalar


class HeckeSymmetry:
    """A verified Hecke symmetry with its closedness data.

    Use :meth:`build` (or the constructors below) rather than calling the
    class directly; ``build`` runs all three axiom checks.
    """

    def __init__(self, R, field, P, C, parity=None, name=None):
        self.R = R
        self.field = field
        self.d = R.shape[0]
        self.P = P
        self.C = C
        self.parity = parity
        self.name = name or f"R(d={self.d})"
        self.birank_cache = None
        self.cache = {}

    @property
    def q(self):
        return self.field.q

    @classmethod
    def build(cls, R, field=GENERIC, parity=None, name=None):
        d = _dimension_of(R)
        R = Operator._wrap(R.entries, (d, 2))
        check_yang_baxter(R)
        check_hecke(R, field)
        P = solve_closedness(R)
        d = R.shape[0]
        C = Operator._wrap([[sum((P[i * d + m, j * d + m] for m in range(d)), field.zero)
                             for j in range(d)] for i in range(d)], (d, 1))
        return cls(R, field, P, C, parity, name)

    def __repr__(self):
        return f"HeckeSymmetry({self.name}, field={self.field!r})"


def _dimension_of(R):
    from math import isqrt
    d = isqrt(R.rows)
    if d * d != R.rows or R.rows != R.cols or d < 1:
        raise ParseError(f"R must be d^2 x d^2, got {R.rows}x{R.cols}")
    return d


# -- axioms -------------------------------------------------------------------


def _witness(diff, d, n):
    loc = diff.first_nonzero()
    if loc is None:
        return None
    return multi_index(loc[0], d, n), multi_index(loc[1], d, n)


def check_yang_baxter(R):
    """R_1 R_2 R_1 == R_2 R_1 R_2 on V^{(x)3}; raises NotYangBaxter with a witness."""
    d = R.shape[0]
    r1, r2 = lift(R, 3, 1), lift(R, 3, 2)
    diff = r1 @ r2 @ r1 - r2 @ r1 @ r2
    if not diff.is_zero():
        w = _witness(diff, d, 3)
        raise NotYangBaxter(f"braid relation fails at (row, col) = {w}", witness=w)


def check_hecke(R, field):
    """(R + 1)(R - q) == 0; raises NotHecke with a witness."""
    d = R.shape[0]
    one = identity(d, 2)
    diff = (R + one) @ (R - one.scale(field.q))
    if not diff.is_zero():
        w = _witness(diff, d, 2)
        raise NotHecke(f"(R+1)(R-q) != 0 at (row, col) = {w}", witness=w)


def half_dual(R):
    """B[(m,n),(l,k)] = R^{nk}_{ml}; closedness means B is invertible (P = B^{-1})."""
    d = R.shape[0]
    grid = [[None] * (d * d) for _ in range(d * d)]
    for m in range(d):
        for n in range(d):
            for l in range(d):
                for k in range(d):
                    grid[m * d + n][l * d + k] = R[n * d + k, m * d + l]
    return Operator._wrap(grid)


def solve_closedness(R):
    d = R.shape[0]
    B = half_dual(R)
    try:
        A = exact_inverse(B)
    except NotInvertible:
        from .linalg import exact_kernel
        ker = exact_kernel(B)
        idx = next((k for k, x in enumerate(ker[0]) if x), None) if ker else None
        w = multi_index(idx, d, 2) if idx is not None else None
        raise NotClosed(f"half-dual of R is singular (kernel vector supported at {w})", witness=w) from None
    # A[(i,j),(m,n)] = P^{im}_{jn}; store P[(i,m),(j,n)]
    grid = [[None] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            for m in range(d):
                for n in range(d):
                    grid[i * d + m][j * d + n] = A[i * d + j, m * d + n]
    P = Operator._wrap(grid, (d, 2))
    if not closedness_holds(R, P):
        raise VerificationFailed("solved P does not satisfy the closedness contraction")
    return P


def closedness_holds(R, P):
    d = R.shape[0]
    for i in range(d):
        for k in range(d):
            for j in range(d):
                for l in range(d):
                    acc = 0
                    for m in range(d):
                        for n in range(d):
                            a = P[i * d + m, j * d + n]
                            if a:
                                acc = acc + a * R[n * d + k, m * d + l]
                    want = 1 if (i == l and k == j) else 0
                    if acc != want:
                        return False
    return True


def quantum_rank(h):
    """tr C."""
    return h.C.trace()


# -- constructors ---------------------------------------------------------------


def _gated(R, field, parity, name):
    try:
        return HeckeSymmetry.build(R, field, parity, name)
    except AxiomFailure as exc:
        raise VerificationFailed(f"built-in {name} failed verification: {exc}") from exc


def _super_matrix(parity, field):
    d = len(parity)
    q, v, one = field.q, field.v, field.one
    grid = [[field.zero] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            col = i * d + j
            if i == j:
                grid[col][col] = -one if parity[i] else q
                continue
            sign = -one if parity[i] and parity[j] else one
            grid[j * d + i][col] = sign * v
            if i < j:
                grid[col][col] = q - one
    return Operator._wrap(grid, (d, 2))


def standard_R(d, field=GENERIC):
    """Drinfeld-Jimbo symmetry; the (q-1) term sits on x_i (x) x_j with i < j."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return _gated(_super_matrix([0] * d, field), field, (0,) * d, f"standard:{d}")


def super_R(r, s, field=GENERIC):
    """Super symmetry on V of super-dimension (r|s): x_1..x_r even, then s odd vectors."""
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("need r, s >= 0 and r + s >= 1")
    parity = (0,) * r + (1,) * s
    return _gated(_super_matrix(parity, field), field, parity, f"super:{r}:{s}")


def conjugate_R(h, g):
    """(g (x) g) R (g (x) g)^{-1}."""
    gg = kron(g, g)
    gg_inv = exact_inverse(gg)
    R = gg @ h.R @ gg_inv
    R = Operator._wrap(R.entries, (h.d, 2))
    return HeckeSymmetry.build(R, h.field, None, f"conj({h.name})")


# -- file format ----------------------------------------------------------------


def _field_from_data(data):
    q_text = data.get("q", "q")
    v_text = data.get("v")
    if v_text is not None:
        try:
            v0 = GENERIC.parse(str(v_text))
        except ParseError as exc:
            raise ParseError(f"bad v: {exc}") from None
        if not v0.is_constant():
            if v0 != GENERIC.v:
                raise ParseError("v must be a rational literal or the symbol v")
            field = GENERIC
        else:
            field = NumericField(v=v0.constant())
            if "q" in data:
                declared = field.parse(str(q_text))
                if declared != field.q:
                    raise ParseError(f"declared q = {declared} but v^2 = {field.q}")
            return field
    else:
        field = GENERIC
    try:
        q_val = GENERIC.parse(str(q_text)) if not isinstance(q_text, int) else GENERIC(q_text)
    except ParseError as exc:
        raise ParseError(f"bad q: {exc}") from None
    if q_val.is_constant():
        return NumericField(q=q_val.constant())
    if q_val != GENERIC.q:
        raise ParseError("generic mode requires q = v^2 (declare \"q\": \"q\")")
    return field


def symmetry_from_dict(data, name=None):
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "entries" not in data:
        raise ParseError("missing 'entries'")
    field = _field_from_data(data)
    entries = data["entries"]
    if not isinstance(entries, list) or not entries or not all(isinstance(r, list) for r in entries):
        raise ParseError("'entries' must be a non-empty list of rows")
    size = len(entries)
    if any(len(r) != size for r in entries):
        raise ParseError("'entries' grid is not square")
    d = data.get("dimension")
    if d is None or not isinstance(d, int) or d * d != size:
        raise ParseError(f"'dimension' must be an integer d with d^2 = {size}")
    grid = [[field.parse(x) if isinstance(x, str) else field.parse(str(x)) for x in row] for row in entries]
    parity = data.get("parity")
    if parity is not None:
        if len(parity) != d or any(p not in (0, 1) for p in parity):
            raise ParseError("'parity' must list d values in {0, 1}")
        parity = tuple(parity)
    R = Operator._wrap(grid, (d, 2))
    return HeckeSymmetry.build(R, field, parity, name)


def load_R(path):
    """Parse and verify a symmetry file (see README for the schema)."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return symmetry_from_dict(data, name=path.name)


def symmetry_to_dict(h):
    d = h.d
    out = {"dimension": d}
    if h.field.mode == "generic":
        out["q"] = "q"
    else:
        desc = h.field.describe()
        out["q"] = desc["q"]
        if "v" in desc:
            out["v"] = desc["v"]
    if h.parity is not None:
        out["parity"] = list(h.parity)
    out["entries"] = [[_expr(x) for x in row] for row in h.R.entries]
    return out


def _expr(x):
    if isinstance(x, Fraction):
        return str(x)
    # generic: write in v so the text round-trips exactly
    num = " + ".join(f"({int(c)})*v^{k}" for k, c in enumerate(x.num.coeffs()) if c) or "0"
    den = " + ".join(f"({int(c)})*v^{k}" for k, c in enumerate(x.den.coeffs()) if c)
    return num if den == "(1)*v^0" else f"({num})/({den})"


def dump_R(h, path):
    Path(path).write_text(json.dumps(symmetry_to_dict(h), indent=1) + "\n")


def resolve(source, field=None):
    """Load from a path or a pseudo-path builtin:standard:d / builtin:super:r:s."""
    if isinstance(source, str) and source.startswith("builtin:"):
        parts = source.split(":")
        fld = field or GENERIC
        try:
            if parts[1] == "standard" and len(parts) == 3:
                return standard_R(int(parts[2]), fld)
            if parts[1] == "super" and len(parts) == 4:
                return super_R(int(parts[2]), int(parts[3]), fld)
        except ValueError as exc:
            raise ParseError(f"bad builtin {source!r}: {exc}") from None
        raise ParseError(f"unknown builtin {source!r}")
    return load_R(source)


def format_matrix(op):
    return [[format_scalar(x) for x in row] for row in op.entries]
