"""Exact arithmetic in the coefficient field Q(v), where v**4 = q.

Every scalar the engine ever produces lives in the fraction field of Z[v].
Working with v = q**(1/4) instead of q itself makes each exponent that
occurs (integer powers of q, q**(1/2) from the short-root normalization,
q**(1/4)-scale factors from half-integer zero-mode eigenvalues) an integer
power of the base variable, so everything is a ratio of honest integer
polynomials and equality is decidable.

A Coeff is stored as a reduced fraction ``num/den`` of dense integer
coefficient tuples (index = exponent of v).  Canonical form: num and den
are coprime in Z[v], share no factor v**k, and den has positive leading
coefficient.  The zero polynomial is the empty tuple.

All values are immutable and hashable; arithmetic never mutates inputs.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce

# ---------------------------------------------------------------------------
# dense integer polynomials as tuples (no trailing zeros, () == 0)


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)

def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _pval(a):
    """Valuation: index of the lowest nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _pshift(a, k):
    """Divide by v**k (caller guarantees exactness) or multiply for k < 0."""
    if k > 0:
        return tuple(a[k:])
    if k < 0:
        return (0,) * (-k) + tuple(a)
    return tuple(a)


def _content(a):
    return reduce(math.gcd, (abs(x) for x in a), 0)


def _pdiv_int(a, n):
    return tuple(x // n for x in a)


def _pdiv_exact(a, b):
    """Exact quotient a // b in Z[v]; b must divide a."""
    if not a:
        return ()
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        f = c // lb
        q[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] -= f * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _prem(a, b):
    """Pseudo-remainder of a by b (both nonzero, deg a >= deg b)."""
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        # scale so the leading term cancels without fractions
        for j in range(len(rem)):
            rem[j] *= lb
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    return _trim(rem)


def _primitive(a):
    c = _content(a)
    if c > 1:
        a = _pdiv_int(a, c)
    if a and a[-1] < 0:
        a = _pneg(a)
    return a


def _pgcd(a, b):
    """Primitive gcd in Z[v] with positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        r = _primitive(_prem(a, b))
        a, b = b, r
        if a and b and len(a) < len(b):
            a, b = b, a
    return a


# ---------------------------------------------------------------------------


class Coeff:
    """An element of Q(v) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _canonical=False):
        if not _canonical:
            num, den = _canon(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def integer(n):
        return Coeff((n,) if n else (), (1,), _canonical=True)

    @staticmethod
    def rational(f):
        f = Fraction(f)
        return Coeff((f.numerator,) if f.numerator else (), (f.denominator,),
                     _canonical=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_coeff(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return Coeff(_padd(self.num, other.num), self.den)
        return Coeff(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Coeff(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-_as_coeff(other))

    def __rsub__(self, other):
        return _as_coeff(other) + (-self)

    def __mul__(self, other):
        other = _as_coeff(other)
        if not self.num or not other.num:
            return ZERO
        return Coeff(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_coeff(other)
        if not other.num:
            raise ZeroDivisionError("division by zero Coeff")
        if not self.num:
            return ZERO
        return Coeff(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _as_coeff(other) / self

    def __pow__(self, n):
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        return ONE / self

    # -- structure ---------------------------------------------------------

    def q_inverted(self):
        """Image under the bar involution q -> q**-1 (v -> v**-1)."""
        rn = tuple(reversed(self.num))
        rd = tuple(reversed(self.den))
        # reversing multiplies by v**-(deg); rebalance as a fraction
        dn, dd = len(self.num) - 1, len(self.den) - 1
        if dn >= dd:
            return Coeff(rn, _pshift(rd, -(dn - dd)))
        return Coeff(_pshift(rn, -(dd - dn)), rd)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coeff.integer(other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Coeff({render(self)!r})"

    def __str__(self):
        return render(self)


def _canon(num, den):
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    v = min(_pval(num), _pval(den))
    if v:
        num, den = _pshift(num, v), _pshift(den, v)
    cn, cd = _content(num), _content(den)
    g = math.gcd(cn, cd)
    if g > 1:
        num, den = _pdiv_int(num, g), _pdiv_int(den, g)
    if len(den) > 1 and len(num) > 1:
        h = _pgcd(num, den)
        if len(h) > 1:
            num, den = _pdiv_exact(num, h), _pdiv_exact(den, h)
            g = math.gcd(_content(num), _content(den))
            if g > 1:
                num, den = _pdiv_int(num, g), _pdiv_int(den, g)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


def _as_coeff(x):
    if isinstance(x, Coeff):
        return x
    if isinstance(x, int):
        return Coeff.integer(x)
    if isinstance(x, Fraction):
        return Coeff.rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Coeff")


ZERO = Coeff.integer(0)
ONE = Coeff.integer(1)

_QPOW_CACHE: dict[Fraction, Coeff] = {}


def qpow(e) -> Coeff:
    """The monomial q**e = v**(4e); e must be a quarter integer."""
    e = Fraction(e)
    c = _QPOW_CACHE.get(e)
    if c is not None:
        return c
    k = e * 4
    if k.denominator != 1:
        raise ValueError(f"exponent {e} of q is not a quarter integer")
    k = k.numerator
    if k >= 0:
        c = Coeff((0,) * k + (1,), (1,), _canonical=True)
    else:
        c = Coeff((1,), (0,) * (-k) + (1,), _canonical=True)
    _QPOW_CACHE[e] = c
    return c


def qint(m, d=Fraction(1)) -> Coeff:
    """Quantum integer [m] in base q**d: (q**(dm) - q**(-dm))/(q**d - q**(-d)).

    The division is exact; the result is the Laurent polynomial
    q**(d(m-1)) + q**(d(m-3)) + ... + q**(-d(m-1)).
    """
    if m == 0:
        return ZERO
    if m < 0:
        return -qint(-m, d)
    d = Fraction(d)
    acc = ZERO
    for j in range(m):
        acc = acc + qpow(d * (m - 1 - 2 * j))
    return acc


def q_bracket(x) -> Coeff:
    """[x] = (q**x - q**(-x))/(q - q**(-1)) for rational x (quarter units).

    For half-integer x this is a genuine rational function, e.g.
    [1/2] = 1/(q**(1/2) + q**(-1/2)).
    """
    x = Fraction(x)
    if x == 0:
        return ZERO
    return (qpow(x) - qpow(-x)) / (qpow(1) - qpow(-1))


def qfactorial(m, d=Fraction(1)) -> Coeff:
    out = ONE
    for j in range(2, m + 1):
        out = out * qint(j, d)
    return out


def qbinom(m, k, d=Fraction(1)) -> Coeff:
    """Quantum binomial [m choose k] in base q**d, as an exact Laurent polynomial."""
    if not 0 <= k <= m:
        raise ValueError(f"qbinom outside range: ({m}, {k})")
    k = min(k, m - k)
    out = ONE
    for j in range(1, k + 1):
        out = out * qint(m - k + j, d) / qint(j, d)
    return out


# ---------------------------------------------------------------------------
# rendering and parsing.  Machine form writes powers of v, human form powers
# of q with rational exponents; both round-trip through parse().


def _render_poly(p, human):
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        if human:
            e = Fraction(k, 4)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{{{e}}}"
        else:
            mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
        if mono:
            if c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c}*{mono}"
        else:
            term = str(c)
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def render(c: Coeff, human=False) -> str:
    """Canonical text form; human=True writes q**r with rational r."""
    num = _render_poly(c.num, human)
    if c.den == (1,):
        return num
    den = _render_poly(c.den, human)
    return f"({num})/({den})"


_TOKEN = re.compile(
    r"\s*(?:(?P<brace_frac>\{-?\d+(?:/\d+)?\})|(?P<int>-?\d+)|(?P<var>[vq])|"
    r"(?P<op>[\^*/+\-(){}]))"
)


def _tokenize(s):
    pos, out = 0, []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            if s[pos:].strip():
                raise ValueError(f"cannot parse coefficient text at: {s[pos:]!r}")
            break
        pos = m.end()
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int"))))
        elif m.lastgroup == "var":
            out.append(("var", m.group("var")))
        elif m.lastgroup == "brace_frac":
            out.append(("frac", Fraction(m.group("brace_frac")[1:-1])))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse_expr(self) -> Coeff:
        # sums of terms with explicit signs
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.parse_term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.parse_term()
                acc = acc + (t if val == "+" else -t)
            else:
                return acc

    def parse_term(self) -> Coeff:
        acc = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.parse_factor()
            elif kind == "op" and val == "/":
                self.take()
                acc = acc / self.parse_factor()
            elif kind in ("int", "var") or (kind == "op" and val == "("):
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> Coeff:
        kind, val = self.take()
        if kind == "int":
            base = Coeff.integer(val)
        elif kind == "op" and val == "(":
            base = self.parse_expr()
            k2, v2 = self.take()
            if (k2, v2) != ("op", ")"):
                raise ValueError("unbalanced parenthesis in coefficient text")
        elif kind == "var":
            e = self.parse_exponent()
            base = qpow(e / 4 if val == "v" else e)
        else:
            raise ValueError(f"unexpected token {val!r} in coefficient text")
        return base

    def parse_exponent(self) -> Fraction:
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.peek()
            if kind == "frac":
                self.take()
                return val
            if kind == "op" and val == "(":
                self.take()
                num = self._expect_int()
                kind, val = self.peek()
                if kind == "op" and val == "/":
                    self.take()
                    den = self._expect_int()
                else:
                    den = 1
                k2, v2 = self.take()
                if (k2, v2) != ("op", ")"):
                    raise ValueError("unbalanced parenthesis in exponent")
                return Fraction(num, den)
            if kind == "int":
                self.take()
                return Fraction(val)
            if kind == "op" and val == "-":
                self.take()
                return -Fraction(self._expect_int())
            raise ValueError("malformed exponent")
        return Fraction(1)

    def _expect_int(self):
        kind, val = self.take()
        if kind != "int":
            raise ValueError("expected integer in exponent")
        return val


def parse(text: str) -> Coeff:
    """Parse either rendering (v powers or q powers) back into a Coeff."""
    p = _Parser(_tokenize(text))
    out = p.parse_expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in coefficient text: {text!r}")
    return out
