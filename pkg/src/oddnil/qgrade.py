"""Integer Laurent polynomials in q and balanced q-combinatorics.

All graded-rank bookkeeping in this package runs through this module.
Conventions: the balanced q-integer is [n] = q^{n-1} + q^{n-3} + ... + q^{1-n},
[n]! = [n][n-1]...[1], and the balanced q-binomial [n choose k] is the exact
quotient [n]!/([k]![n-k]!).  Coefficients are arbitrary-precision ints and
exponents are stored sparsely; nothing is ever truncated.
"""

from math import comb


class QLaurent:
    """A Laurent polynomial in q with integer coefficients.

    Stored as a map from exponent to nonzero coefficient.  Values are
    immutable by convention: no method mutates self.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    d[int(e)] = int(c)
        self.coeffs = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, e, coeff=1):
        return cls({e: coeff})

    @classmethod
    def from_int(cls, n):
        return cls({0: n})

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return QLaurent(d)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QLaurent({e: c * other for e, c in self.coeffs.items()})
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                else:
                    d.pop(e, None)
        return QLaurent(d)

    __rmul__ = __mul__

    def coefficient(self, e):
        return self.coeffs.get(e, 0)

    def bar(self):
        """The bar involution q -> q^{-1}."""
        return QLaurent({-e: c for e, c in self.coeffs.items()})

    def is_bar_invariant(self):
        return self.coeffs == {-e: c for e, c in self.coeffs.items()}

    def at_one(self):
        """Specialize q = 1."""
        return sum(self.coeffs.values())

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def exponent_multiset(self):
        """Sorted list of exponents, each repeated coefficient-many times.

        Only meaningful for nonnegative coefficients.
        """
        out = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if c < 0:
                raise ValueError("exponent multiset needs nonnegative coefficients")
            out.extend([e] * c)
        return out

    def exact_div(self, other):
        """Exact quotient self/other; raises if the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("division of QLaurent by zero")
        rem = dict(self.coeffs)
        quot = {}
        top = max(other.coeffs)
        lead = other.coeffs[top]
        while rem:
            e = max(rem)
            qe = e - top
            qc, r = divmod(rem[e], lead)
            if r:
                raise ArithmeticError("nonzero remainder in exact QLaurent division")
            quot[qe] = qc
            for e2, c2 in other.coeffs.items():
                k = qe + e2
                v = rem.get(k, 0) - qc * c2
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return QLaurent(quot)

    def __str__(self):
        return format_qlaurent(self)

    def __repr__(self):
        return "QLaurent(%s)" % format_qlaurent(self)


def format_qlaurent(p):
    """Render as e.g. "q^4 + q^2 + 2 + q^-2 + q^-4" (descending exponents)."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qpow = "q" if e == 1 else "q^%d" % e
            body = qpow if mag == 1 else "%d*%s" % (mag, qpow)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_QTERM = None


def parse_qlaurent(text):
    """Inverse of format_qlaurent (also accepts arbitrary term order)."""
    global _QTERM
    if _QTERM is None:
        import re

        _QTERM = re.compile(
            r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?(?:(q)(?:\^(-?\d+))?|(\d+))\s*"
        )
    s = text.strip()
    if s == "0":
        return QLaurent.zero()
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _QTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("bad q-Laurent text at %r" % s[pos:])
        sign_s, cpart, qmark, qexp, bare = m.groups()
        if sign_s is None and not first:
            raise ValueError("missing sign between terms in %r" % text)
        sign = -1 if sign_s == "-" else 1
        if qmark:
            coeff = int(cpart) if cpart else 1
            e = int(qexp) if qexp is not None else 1
        else:
            if cpart is not None:
                raise ValueError("bad q-Laurent term at %r" % s[pos:])
            coeff, e = int(bare), 0
        coeffs[e] = coeffs.get(e, 0) + sign * coeff
        pos = m.end()
        first = False
    return QLaurent(coeffs)


def q_int(n):
    """Balanced q-integer [n] = sum_{j=0}^{n-1} q^{n-1-2j}; [0] = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QLaurent({n - 1 - 2 * j: 1 for j in range(n)})


def q_factorial(n):
    """[n]! = [n][n-1]...[1]."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = QLaurent.one()
    for j in range(1, n + 1):
        out = out * q_int(j)
    return out


def q_binomial(n, k):
    """Balanced q-binomial, computed by exact polynomial division."""
    if not 0 <= k <= n:
        raise ValueError("q_binomial needs 0 <= k <= n")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def q_cardinality_box(a, b):
    """Sum of q^{2|alpha| - ab} over partitions alpha in an a x b box."""
    from . import combinat

    out = QLaurent.zero()
    for alpha in combinat.partitions_in_box(a, b):
        out = out + QLaurent.q_power(2 * sum(alpha) - a * b)
    return out


def gaussian_binomial_check(n, k):
    """Cross-check value: q_binomial at q=1 is the ordinary binomial."""
    return q_binomial(n, k).at_one() == comb(n, k)
