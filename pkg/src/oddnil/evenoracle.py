"""Classical (even) symmetric-function oracle over Z and Z/2.

Everything here is ordinary commutative algebra, implemented independently
of the skew machinery so it can serve as a mod-2 cross-check: commutative
polynomials as exponent-vector dicts, classical divided differences, even
elementary/complete/Schur polynomials, and GF(2) ranks of the even
Grassmannian quotient slices.
"""

from functools import lru_cache
import itertools


class Gf2Poly:
    """Commutative polynomial over Z/2 (dict of exponent vectors)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        d = {}
        if terms:
            for m, c in terms.items():
                if c % 2:
                    d[tuple(m)] = 1
        self.terms = d

    def __eq__(self, other):
        return (
            isinstance(other, Gf2Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms)))

    def __add__(self, other):
        d = dict(self.terms)
        for m in other.terms:
            if m in d:
                del d[m]
            else:
                d[m] = 1
        out = Gf2Poly(self.nvars)
        out.terms = d
        return out

    def __mul__(self, other):
        d = {}
        for ma in self.terms:
            for mb in other.terms:
                m = tuple(x + y for x, y in zip(ma, mb))
                if m in d:
                    del d[m]
                else:
                    d[m] = 1
        out = Gf2Poly(self.nvars)
        out.terms = d
        return out

    def is_zero(self):
        return not self.terms


# ---------------------------------------------------------------------------
# commutative polynomials over Z


def zpoly_add(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def zpoly_scale(p, c):
    return {m: c * v for m, v in p.items()} if c else {}


def zpoly_mul(p, q):
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def zpoly_mono(nvars, exps, coeff=1):
    return {tuple(exps): coeff} if coeff else {}


def even_divided_difference(i, p, nvars):
    """Classical d_i(f) = (f - s_i f)/(x_i - x_{i+1}) on exponent dicts."""
    out = {}
    for m, c in p.items():
        a, b = m[i - 1], m[i]
        if a == b:
            continue
        lo, hi = min(a, b), max(a, b)
        sign = 1 if a > b else -1
        for t in range(hi - lo):
            e = list(m)
            e[i - 1] = hi - 1 - t
            e[i] = lo + t
            e = tuple(e)
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


@lru_cache(maxsize=None)
def even_elementary(k, a):
    if k == 0:
        return {(0,) * a: 1}
    if k < 0 or k > a:
        return {}
    out = {}
    for subset in itertools.combinations(range(a), k):
        e = [0] * a
        for i in subset:
            e[i] = 1
        out[tuple(e)] = 1
    return out


@lru_cache(maxsize=None)
def even_complete(k, a):
    if k == 0:
        return {(0,) * a: 1}
    if k < 0:
        return {}
    out = {}
    for multiset in itertools.combinations_with_replacement(range(a), k):
        e = [0] * a
        for i in multiset:
            e[i] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


@lru_cache(maxsize=None)
def even_schur(alpha, a):
    """Even Schur polynomial via the classical divided-difference chain
    applied to x^{delta + alpha}."""
    from . import combinat

    alpha = combinat.normalize_partition(alpha)
    if len(alpha) > a:
        return {}
    padded = list(alpha) + [0] * (a - len(alpha))
    exps = tuple(padded[j] + (a - 1 - j) for j in range(a))
    p = zpoly_mono(a, exps)
    w0 = combinat.longest_element(a)
    for i in reversed(combinat.canonical_reduced_word(w0)):
        p = even_divided_difference(i, p, a)
    return p


def to_gf2(p, nvars):
    return Gf2Poly(nvars, p)


# ---------------------------------------------------------------------------
# even Grassmannian quotient ranks over GF(2)


def _gf2_rank(rows):
    mat = [row[:] for row in rows if any(row)]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                mat[r] = [x ^ y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _even_eword(word, a):
    out = {(0,) * a: 1}
    for k in word:
        out = zpoly_mul(out, even_elementary(k, a))
    return out


def _even_expand(p, a):
    """Expand a symmetric even polynomial into sorted e-words (over Z)."""
    from . import combinat

    out = {}
    residual = dict(p)
    while residual:
        exps = max(residual)
        c = residual[exps]
        if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
            raise ValueError("not symmetric: leading exponent %r" % (exps,))
        lam = combinat.conjugate(tuple(e for e in exps if e))
        word_poly = _even_eword(lam, a)
        lead = max(word_poly)
        q, r = divmod(c, word_poly[lead])
        if r or lead != exps:
            raise ValueError("even expansion failed")
        out[lam] = out.get(lam, 0) + q
        residual = zpoly_add(residual, zpoly_scale(word_poly, -q))
    return out


def even_quotient_rank_gf2(a, n_param, halfdeg):
    """dim over GF(2) of degree-2*halfdeg slice of Lambda_a / <h_m : m > N-a>."""
    from . import combinat

    ambient = combinat.partitions_of(halfdeg, maxpart=a)
    if not ambient:
        return 0
    index = {lam: i for i, lam in enumerate(ambient)}
    rows = []
    for m in range(n_param - a + 1, halfdeg + 1):
        hm = even_complete(m, a)
        rest = halfdeg - m
        for s1 in range(rest + 1):
            for lam in combinat.partitions_of(s1, maxpart=a):
                for mu in combinat.partitions_of(rest - s1, maxpart=a):
                    gen = zpoly_mul(
                        zpoly_mul(_even_eword(lam, a), hm), _even_eword(mu, a)
                    )
                    coeffs = _even_expand(gen, a)
                    row = [0] * len(ambient)
                    for nu, c in coeffs.items():
                        row[index[nu]] = c % 2
                    rows.append(row)
    return len(ambient) - _gf2_rank(rows)
