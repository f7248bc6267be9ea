"""Exact coefficient fields.

Two coefficient domains are supported:

* ``GenericField``: the rational function field Q(v), with q := v**2.
  Elements are :class:`RatFunc` values kept in canonical form (coprime
  integer polynomials, positive leading coefficient in the denominator),
  so ``==`` is structural.
* ``NumericField``: Q with a fixed rational q (and optionally a rational
  square root v).  Elements are plain :class:`fractions.Fraction`.

Both fields expose the same small surface (``zero``, ``one``, ``q``, ``v``,
``q_int``, ``q_factorial``, ``parse``), which is all the rest of the
package relies on.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache

import flint

from .errors import DegenerateQ, ParseError, PoleAtEvaluationPoint

_Poly = flint.fmpz_poly

__all__ = [
    "RatFunc",
    "GenericField",
    "NumericField",
    "GENERIC",
    "q_int",
    "q_factorial",
    "eval_at",
    "format_scalar",
]


def _to_poly(x):
    if isinstance(x, _Poly):
        return x
    if isinstance(x, int):
        return _Poly([x])
    if isinstance(x, (list, tuple)):
        return _Poly(list(x))
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


class RatFunc:
    """Element of Q(v) as a canonical fraction of integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Fraction):
            num, den0 = num.numerator, num.denominator
            den = _to_poly(den) * den0
        num = _to_poly(num)
        den = _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            self.num, self.den = num, _Poly([1])
            return
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc._raw(_Poly([x]), _Poly([1]))
        if isinstance(x, Fraction):
            return RatFunc._raw(_Poly([x.numerator]), _Poly([x.denominator]))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            if self.den.is_one():
                return RatFunc._raw(self.num + o.num, self.den)
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc._raw(_Poly([]), _Poly([1]))
        if self.den.is_one() and o.den.is_one():
            return RatFunc._raw(self.num * o.num, self.den)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(v)")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k >= 0:
            return RatFunc._raw(self.num ** k, self.den ** k) if k else RatFunc(1)
        return RatFunc(1) / RatFunc._raw(self.num ** (-k), self.den ** (-k))

    # comparison -----------------------------------------------------------

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((tuple(int(c) for c in self.num.coeffs()),
                     tuple(int(c) for c in self.den.coeffs())))

    # inspection -----------------------------------------------------------

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(int(self.num[0]), int(self.den[0]))

    def evaluate(self, v0):
        """Value at v = v0 as a Fraction; raises PoleAtEvaluationPoint."""
        v0 = Fraction(v0)
        d = _horner(self.den, v0)
        if d == 0:
            raise PoleAtEvaluationPoint(f"denominator of {self} vanishes at v={v0}")
        return _horner(self.num, v0) / d

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _horner(p, x):
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


# fields -------------------------------------------------------------------


class GenericField:
    """Q(v) with q = v**2 and v transcendental."""

    mode = "generic"

    def __init__(self):
        self.zero = RatFunc(0)
        self.one = RatFunc(1)
        self.v = RatFunc([0, 1])
        self.q = RatFunc([0, 0, 1])

    def __call__(self, x):
        return RatFunc.coerce(x)

    def __eq__(self, other):
        return isinstance(other, GenericField)

    def __hash__(self):
        return hash("generic")

    def __repr__(self):
        return "GenericField()"

    def describe(self):
        return {"mode": "generic", "q": "v^2"}

    def q_power(self, k):
        return self.q ** k

    def q_int(self, n):
        return _q_int_generic(n)

    def q_factorial(self, n):
        return _q_factorial_generic(n)

    def parse(self, text):
        return _parse(text, self.v, self.q, self.one)


class NumericField:
    """Q with a fixed rational q (optionally with a rational v, q = v**2)."""

    mode = "numeric"

    def __init__(self, q=None, v=None):
        if v is not None:
            v = Fraction(v)
            if v == 0:
                raise DegenerateQ("v = 0 gives q = 0")
            q_from_v = v * v
            if q is not None and Fraction(q) != q_from_v:
                raise ParseError(f"declared q = {q} but v^2 = {q_from_v}")
            q = q_from_v
        elif q is None:
            raise ValueError("NumericField needs q or v")
        else:
            q = Fraction(q)
            v = _rational_sqrt(q)
        if q == 0 or q == -1:
            raise DegenerateQ(f"q = {q} is excluded by the Hecke equation")
        self.q = q
        self._v = v
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @property
    def v(self):
        if self._v is None:
            raise DegenerateQ(f"q = {self.q} has no rational square root; supply v")
        return self._v

    def __call__(self, x):
        if isinstance(x, RatFunc):
            raise TypeError("generic scalar in numeric field; use eval_at")
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, NumericField) and other.q == self.q

    def __hash__(self):
        return hash(("numeric", self.q))

    def __repr__(self):
        return f"NumericField(q={self.q})"

    def describe(self):
        d = {"mode": "numeric", "q": str(self.q)}
        if self._v is not None:
            d["v"] = str(self._v)
        return d

    def q_power(self, k):
        return self.q ** k

    def q_int(self, n):
        if n >= 0:
            return sum((self.q ** k for k in range(n)), Fraction(0))
        return -self.q ** n * self.q_int(-n)

    def q_factorial(self, n):
        out = Fraction(1)
        for k in range(1, n + 1):
            out *= self.q_int(k)
        return out

    def parse(self, text):
        v = self._v
        return _parse(text, v, self.q, Fraction(1), numeric=True)


def _rational_sqrt(q):
    if q < 0:
        return None
    from math import isqrt
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


GENERIC = GenericField()


@lru_cache(maxsize=None)
def _q_int_generic(n):
    if n >= 0:
        return RatFunc(_Poly([1 if k % 2 == 0 else 0 for k in range(2 * n - 1)]) if n else 0)
    return -(GENERIC.q ** n) * _q_int_generic(-n)


@lru_cache(maxsize=None)
def _q_factorial_generic(n):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = RatFunc(1)
    for k in range(1, n + 1):
        out = out * _q_int_generic(k)
    return out


def q_int(n, field=GENERIC):
    """[n]_q = (q^n - 1)/(q - 1); equals n at q = 1."""
    return field.q_int(n)


def q_factorial(n, field=GENERIC):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return field.q_factorial(n)


def eval_at(s, v0):
    """Specialize a generic scalar at v = v0 (so q = v0**2)."""
    v0 = Fraction(v0)
    if v0 == 0:
        raise DegenerateQ("v0 = 0 gives q = 0")
    if isinstance(s, RatFunc):
        return s.evaluate(v0)
    return Fraction(s)


# parsing ------------------------------------------------------------------

_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
           ast.Mult: lambda a, b: a * b, ast.Div: lambda a, b: a / b}


def _parse(text, v, q, one, numeric=False):
    if not isinstance(text, str):
        if isinstance(text, (int, Fraction)):
            return one * text
        raise ParseError(f"scalar must be a string or integer, got {text!r}")
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty scalar expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse scalar {text!r}: {exc.msg}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return one * node.value
        if isinstance(node, ast.Name):
            if node.id == "q":
                return q
            if node.id == "v":
                if v is None:
                    raise ParseError(f"{text!r} uses v but no rational v is available")
                return v
            raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = _int_literal(node.right, text)
                base = walk(node.left)
                if exp < 0 and not base:
                    raise ParseError(f"zero to a negative power in {text!r}")
                return base ** exp
            op = _BINOPS.get(type(node.op))
            if op is None:
                raise ParseError(f"unsupported operator in {text!r}")
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Div) and not right:
                raise ParseError(f"division by zero in {text!r}")
            return op(left, right)
        raise ParseError(f"unsupported syntax in scalar {text!r}")

    return walk(tree)


def _int_literal(node, text):
    sign = 1
    while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        if isinstance(node.op, ast.USub):
            sign = -sign
        node = node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return sign * node.value
    raise ParseError(f"exponent must be an integer literal in {text!r}")


# formatting ---------------------------------------------------------------


def _poly_terms(p):
    return [(k, int(c)) for k, c in enumerate(p.coeffs()) if c != 0]


def _fmt_terms(terms, var):
    # terms: list of (exponent, coefficient), exponent may be negative
    if not terms:
        return "0"
    out = []
    for e, c in sorted(terms, key=lambda t: t[0]):
        if e == 0:
            mono = str(abs(c))
        else:
            pw = var if e == 1 else f"{var}^{e}"
            mono = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
        sign = "-" if c < 0 else "+"
        out.append((sign, mono))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, mono in out[1:]:
        s += f" {sign} {mono}"
    return s


def format_scalar(x):
    """Deterministic human-readable form; uses q when only even powers of v occur."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    num, den = _poly_terms(x.num), _poly_terms(x.den)
    if not num:
        return "0"
    even = all(e % 2 == 0 for e, _ in num + den)
    var, scale = ("q", 2) if even else ("v", 1)
    # monomial denominator: print as a Laurent polynomial
    if len(den) == 1:
        (e0, c0), = den
        if all(c % c0 == 0 for _, c in num):
            return _fmt_terms([((e - e0) // scale, c // c0) for e, c in num], var)
    ns = _fmt_terms([(e // scale, c) for e, c in num], var)
    ds = _fmt_terms([(e // scale, c) for e, c in den], var)
    return f"({ns})/({ds})"
