"""The functional on the algebra M(R, Rbar) and equivalence certificates.

M is generated by a^j_lam and b^gam_k (upper a and lower b indices run
over the R range, the others over the Rbar range) subject to

    R a1 a2 = a1 a2 Rbar,   a^i_lam b^lam_j = delta,   b^lam_i a^i_mu = delta.

M itself is never built.  A balanced monomial of degree n

    a^{j_1}_{lam_1} ... a^{j_n}_{lam_n} b^{gam_n}_{k_n} ... b^{gam_1}_{k_1}

is keyed by (Lam, J, K, Gam), and the functional is

    sum over lam in Omega, i, j of (p/k) (Cbar^n Ebar^{ij})[Gam, Lam] E^{ji}[J, K]

with the index reading frozen by the integral calibration.  For Rbar = R
it is the integral with (I, J, K, L) = (J, Lam, Gam, K).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .combinatorics import k_coeff, omega_set, p_coeff
from .comodules import DEFAULT_BUDGET, _check_budget, birank
from .errors import DegreeOverflow, HeckeError, Inconclusive
from .hecke import unit_operators
from .integral import CheckReport
from .linalg import Operator, composite, lift, multi_index, tensor_power


@dataclass
class FunctionalTable:
    n: int
    d: int        # R range
    dbar: int     # Rbar range
    values: dict  # (Lam, J, K, Gam) composites -> scalar
    zero: object = 0

    def __call__(self, Lam, J, K, Gam):
        return self.values.get((composite(Lam, self.dbar), composite(J, self.d),
                                composite(K, self.d), composite(Gam, self.dbar)), self.zero)

    def get(self, key):
        return self.values.get(key, self.zero)

    def is_zero(self):
        return not self.values


def _same_q(hL, hR):
    return hL.field == hR.field and hL.q == hR.q


def functional_table(hL, hR, n, omega="hook", rect="rows_r", budget=DEFAULT_BUDGET, force=False):
    """All nonzero values of the functional at degree n.

    Unless ``force`` is set, unequal bi-ranks or q give the zero table.
    With ``force`` the sum runs over Omega(hL) intersected with Omega(hR),
    using hL's p_lam.
    """
    _check_budget(hL, n, budget)
    _check_budget(hR, n, budget)
    zero = hL.field.zero
    rl, sl = birank(hL)
    rr, sr = birank(hR)
    if not force and ((rl, sl) != (rr, sr) or not _same_q(hL, hR)):
        return FunctionalTable(n, hL.d, hR.d, {}, zero)
    fld = hL.field
    lams = [lam for lam in omega_set(n, rl, sl, omega, fld, rect)
            if lam in set(omega_set(n, rr, sr, omega, hR.field, rect))]
    units, ubar = unit_operators(hL, n), unit_operators(hR, n)
    cbar = tensor_power(hR.C, n)
    values = {}
    for lam in lams:
        coef = p_coeff(lam, rl, sl, fld, rect) / k_coeff(lam, fld)
        m = len(units[lam])
        for i in range(m):
            for j in range(m):
                a_nz = [(g, l, x) for g, row in enumerate((cbar @ ubar[lam][i][j]).entries)
                        for l, x in enumerate(row) if x]
                b_nz = [(jj, k, y) for jj, row in enumerate(units[lam][j][i].entries)
                        for k, y in enumerate(row) if y]
                for g, l, x in a_nz:
                    cx = coef * x
                    for jj, k, y in b_nz:
                        key = (l, jj, k, g)
                        val = values.get(key, zero) + cx * y
                        if val:
                            values[key] = val
                        else:
                            values.pop(key, None)
    return FunctionalTable(n, hL.d, hR.d, values, zero)


def m_functional(hL, hR, n, Lam, J, K, Gam):
    """Value of the functional on a^J_Lam b^Gam'_K'."""
    return functional_table(hL, hR, n)(Lam, J, K, Gam)


@dataclass
class Witness:
    n: int
    indices: tuple   # (Lam, J, K, Gam) multi-indices
    value: object

    def to_dict(self):
        return {"n": self.n, "indices": [list(x) for x in self.indices], "value": str(self.value)}


def m_nonzero_witness(hL, hR, n_max):
    """First nonzero value, scanning degrees from r*s upward; None with a reason otherwise.

    Within a degree, entries on the diagonal Lam = Gam, J = K (the
    E^{ii}-sandwiched form) are preferred.
    """
    rl, sl = birank(hL)
    if (rl, sl) != birank(hR):
        return None, "bi-ranks differ"
    if not _same_q(hL, hR):
        return None, "q differs"
    for n in range(rl * sl, n_max + 1):
        table = functional_table(hL, hR, n)
        if table.is_zero():
            continue
        keys = sorted(table.values)
        diag = [k for k in keys if k[0] == k[3] and k[1] == k[2]]
        key = (diag or keys)[0]
        idx = (multi_index(key[0], hR.d, n), multi_index(key[1], hL.d, n),
               multi_index(key[2], hL.d, n), multi_index(key[3], hR.d, n))
        return Witness(n, idx, table.values[key]), None
    return None, f"no nonzero value up to degree {n_max}"


# -- relation checks ----------------------------------------------------------


def _matrix(table, rows, cols, fn):
    return Operator._wrap([[table.get(fn(a, b)) for b in range(cols)] for a in range(rows)])


def _aa_check(hL, hR, n, table, rep):
    """R_a F = F Rbar_a for F[J, Lam] at fixed (K, Gam)."""
    d, db = hL.d, hR.d
    lifts = [(lift(hL.R, n, a), lift(hR.R, n, a)) for a in range(1, n)]
    for k in range(d ** n):
        for g in range(db ** n):
            F = _matrix(table, d ** n, db ** n, lambda j, l: (l, j, k, g))
            if F.is_zero():
                continue
            for a, (Ra, Rb) in enumerate(lifts, start=1):
                rep.checked += 1
                loc = (Ra @ F - F @ Rb).first_nonzero()
                if loc is not None:
                    rep.fail(("aa", a, multi_index(k, d, n), multi_index(g, db, n)),
                             f"a-a relation fails at position {a}")
                    return


def _bb_check(hL, hR, n, table, rep):
    """G R_a = Rbar_a G for G[Gam, K] at fixed (Lam, J)."""
    d, db = hL.d, hR.d
    lifts = [(lift(hL.R, n, a), lift(hR.R, n, a)) for a in range(1, n)]
    for l in range(db ** n):
        for j in range(d ** n):
            G = _matrix(table, db ** n, d ** n, lambda g, k: (l, j, k, g))
            if G.is_zero():
                continue
            for a, (Ra, Rb) in enumerate(lifts, start=1):
                rep.checked += 1
                loc = (G @ Ra - Rb @ G).first_nonzero()
                if loc is not None:
                    rep.fail(("bb", a, multi_index(l, db, n), multi_index(j, d, n)),
                             f"b-b relation fails at position {a}")
                    return


def _contraction_checks(hL, hR, n, top, low, rep_ab, rep_c):
    """a b = delta and a C b = Cbar on the innermost pair."""
    d, db = hL.d, hR.d
    zero = hL.field.zero
    for L0, G0 in product(product(range(db), repeat=n - 1), repeat=2):
        for J0, K0 in product(product(range(d), repeat=n - 1), repeat=2):
            base = low(L0, J0, K0, G0)
            for j, k in product(range(d), repeat=2):
                total = zero
                for m in range(db):
                    total = total + top(L0 + (m,), J0 + (j,), K0 + (k,), G0 + (m,))
                want = base if j == k else zero
                rep_ab.checked += 1
                if total != want and rep_ab.passed:
                    rep_ab.fail((L0, J0 + (j,), K0 + (k,), G0), f"sum = {total}, expected {want}")
            for lam, gam in product(range(db), repeat=2):
                total = zero
                for j, k in product(range(d), repeat=2):
                    c = hL.C[k, j]
                    if c:
                        total = total + c * top(L0 + (lam,), J0 + (j,), K0 + (k,), G0 + (gam,))
                want = hR.C[gam, lam] * base
                rep_c.checked += 1
                if total != want and rep_c.passed:
                    rep_c.fail((L0 + (lam,), J0, K0, G0 + (gam,)), f"sum = {total}, expected {want}")


def m_relation_check(hL, hR, n, force=False):
    """Reports for the a-a, b-b, a b = delta and a C b = Cbar suites at degree n."""
    reps = [CheckReport(name, n) for name in ("aa", "bb", "ab_contraction", "aCb")]
    top = functional_table(hL, hR, n, force=force)
    if n >= 2:
        _aa_check(hL, hR, n, top, reps[0])
        _bb_check(hL, hR, n, top, reps[1])
    if n >= 1:
        low = functional_table(hL, hR, n - 1, force=force)
        _contraction_checks(hL, hR, n, top, low, reps[2], reps[3])
    return reps


# -- equivalence --------------------------------------------------------------


@dataclass
class EquivalenceReport:
    q_match: bool
    birank_left: tuple | None
    birank_right: tuple | None
    verdict: str                       # equivalent | not_equivalent | inconclusive
    witness: Witness | None = None
    reason: str = ""
    suites: list = field(default_factory=list)

    def to_dict(self):
        return {
            "q_match": self.q_match,
            "birank_left": list(self.birank_left) if self.birank_left else None,
            "birank_right": list(self.birank_right) if self.birank_right else None,
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness else None,
            "reason": self.reason,
            "suites": [r.to_dict() for r in self.suites],
        }


def equivalence_report(hL, hR, n_max=None, budget=DEFAULT_BUDGET, check_relations=False):
    """Compare q and bi-ranks; attach a nonzero functional witness when equivalent."""
    q_match = _same_q(hL, hR)
    try:
        bl, br = birank(hL, budget=budget), birank(hR, budget=budget)
    except Inconclusive as exc:
        return EquivalenceReport(q_match, None, None, "inconclusive", reason=str(exc))
    if not q_match or bl != br:
        why = "q differs" if not q_match else f"bi-ranks {bl} and {br} differ"
        return EquivalenceReport(q_match, bl, br, "not_equivalent", reason=why)
    top = n_max if n_max is not None else max(bl[0] * bl[1], 1) + 1
    try:
        witness, why = m_nonzero_witness(hL, hR, top)
    except DegreeOverflow as exc:
        return EquivalenceReport(q_match, bl, br, "equivalent", reason=f"witness search stopped: {exc}")
    rep = EquivalenceReport(q_match, bl, br, "equivalent", witness, why or "")
    if check_relations and witness is not None:
        for n in range(0, witness.n + 2):
            try:
                rep.suites.extend(m_relation_check(hL, hR, n))
            except HeckeError as exc:
                rep.reason = f"relation suite stopped at degree {n}: {exc}"
                break
    return rep
