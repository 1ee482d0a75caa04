"""Odd symmetric polynomials: elementary/complete families, Schubert and
Schur polynomials, basis expansions, and the odd Pieri rule.

Odd symmetric elements are ordinary SkewPolynomials that happen to lie in
the joint kernel of all odd divided differences; membership is a predicate,
not a type.  The sorted products eps_{l_1} ... eps_{l_r} (l_1 >= ... >= l_r,
each <= a) are an integral basis, and expansion into that basis proceeds by
greedy elimination of the lex-leading monomial: the leading monomial of
eps_lambda is x^{conjugate(lambda)} with coefficient +-1.
"""

from functools import lru_cache
from math import comb

from . import combinat, oddops
from .skewpoly import SkewPolynomial, apply_w0, staircase


class NotOddSymmetricError(ValueError):
    """Input expected to be odd symmetric is not."""


def x_tilde(a, i):
    """x~_i = (-1)^{i-1} x_i."""
    return SkewPolynomial.variable(a, i).scale((-1) ** (i - 1))


@lru_cache(maxsize=None)
def elementary(k, a):
    """eps_k in a variables; 1 for k = 0, 0 for k < 0 or k > a."""
    if k == 0:
        return SkewPolynomial.one(a)
    if k < 0 or k > a:
        return SkewPolynomial.zero(a)
    import itertools

    out = SkewPolynomial.zero(a)
    for subset in itertools.combinations(range(1, a + 1), k):
        t = SkewPolynomial.one(a)
        for i in subset:
            t = t * x_tilde(a, i)
        out = out + t
    return out


@lru_cache(maxsize=None)
def complete(k, a):
    """h_k in a variables; 1 for k = 0, 0 for k < 0."""
    if k == 0:
        return SkewPolynomial.one(a)
    if k < 0:
        return SkewPolynomial.zero(a)
    import itertools

    out = SkewPolynomial.zero(a)
    for multiset in itertools.combinations_with_replacement(range(1, a + 1), k):
        t = SkewPolynomial.one(a)
        for i in multiset:
            t = t * x_tilde(a, i)
        out = out + t
    return out


def elementary_in_fewer_vars(k, a):
    """eps_k of x_1..x_{a-1}, embedded in a variables."""
    import itertools

    if k == 0:
        return SkewPolynomial.one(a)
    if k < 0 or k > a - 1:
        return SkewPolynomial.zero(a)
    out = SkewPolynomial.zero(a)
    for subset in itertools.combinations(range(1, a), k):
        t = SkewPolynomial.one(a)
        for i in subset:
            t = t * x_tilde(a, i)
        out = out + t
    return out


def is_odd_symmetric(p):
    return all(oddops.divided_difference(i, p).is_zero() for i in range(1, p.nvars))


# ---------------------------------------------------------------------------
# Schubert polynomials


@lru_cache(maxsize=None)
def schubert(w, a):
    """Odd Schubert polynomial: the canonical word of w^{-1} w_0 applied to
    the staircase monomial."""
    if len(w) != a:
        raise ValueError("permutation %r is not on %d letters" % (w, a))
    u = combinat.perm_compose(combinat.perm_inverse(w), combinat.longest_element(a))
    word = combinat.canonical_reduced_word(u)
    return oddops.dd_word(word, staircase(a))


@lru_cache(maxsize=None)
def schubert_basis(a):
    """All odd Schubert polynomials, keyed by permutation."""
    return {w: schubert(w, a) for w in combinat.all_permutations(a)}


# ---------------------------------------------------------------------------
# Schur polynomials


def chi(alpha, a):
    """The normal-ordering parity ledger chi_alpha^a (an integer; only its
    parity matters)."""
    alpha = combinat.normalize_partition(alpha)
    if len(alpha) > a:
        raise combinat.BoxViolationError("%r has more than %d parts" % (alpha, a))
    total = comb(a, 3) + sum(alpha) * comb(a, 2)
    for j, part in enumerate(alpha, start=1):
        total += part * comb(a - j + 1, 2)
    return total


@lru_cache(maxsize=None)
def schur(alpha, a):
    """Odd Schur polynomial s_alpha: odd symmetrization of x^alpha.

    Partitions with more than a rows give 0 (the even-case convention; used
    by the Grassmannian quotient checks).
    """
    alpha = combinat.normalize_partition(alpha)
    if len(alpha) > a:
        return SkewPolynomial.zero(a)
    exps = list(alpha) + [0] * (a - len(alpha))
    return oddops.odd_symmetrize(SkewPolynomial.monomial(a, exps))


@lru_cache(maxsize=None)
def schur_via_staircase(alpha, a):
    """Second route: (-1)^{chi_alpha^a} w_0 . D_a(x^{delta_a + alpha}).

    Must agree with schur(); the agreement is asserted in the test suite.
    """
    alpha = combinat.normalize_partition(alpha)
    if len(alpha) > a:
        return SkewPolynomial.zero(a)
    padded = list(alpha) + [0] * (a - len(alpha))
    exps = tuple(padded[j] + (a - 1 - j) for j in range(a))
    sign = (-1) ** chi(alpha, a)
    return apply_w0(oddops.longest_dd(a, SkewPolynomial.monomial(a, exps))).scale(sign)


@lru_cache(maxsize=None)
def dual_schur(alpha, a):
    """Dual Schur polynomial via the reversed staircase:
    (-1)^{chi_alpha^a} w_0 . D_a(x_1^{alpha_a} x_2^{1+alpha_{a-1}} ...)."""
    alpha = combinat.normalize_partition(alpha)
    if len(alpha) > a:
        raise combinat.BoxViolationError("%r has more than %d parts" % (alpha, a))
    padded = list(alpha) + [0] * (a - len(alpha))
    exps = tuple(padded[a - 1 - j] + j for j in range(a))
    sign = (-1) ** chi(alpha, a)
    return apply_w0(oddops.longest_dd(a, SkewPolynomial.monomial(a, exps))).scale(sign)


# ---------------------------------------------------------------------------
# expansion in the elementary-word basis


@lru_cache(maxsize=None)
def elementary_word_value(word, a):
    """The product eps_{word_1} ... eps_{word_r} as a polynomial."""
    out = SkewPolynomial.one(a)
    for k in word:
        out = out * elementary(k, a)
    return out


def expand_in_elementary(f):
    """Expand an odd symmetric f as an integer combination of sorted
    eps-words; returns {partition: coefficient}.

    Greedy leading-term elimination: the lex-leading exponent vector must
    always be weakly decreasing, and conjugating it names the word to strip.
    """
    a = f.nvars
    out = {}
    residual = f
    while residual:
        exps, c = residual.lead()
        if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
            raise NotOddSymmetricError(
                "leading monomial %r is not partition-shaped; input not odd symmetric" % (exps,)
            )
        mu = tuple(e for e in exps if e)
        lam = combinat.conjugate(mu)
        word_poly = elementary_word_value(lam, a)
        lead_exps, lead_c = word_poly.lead()
        if lead_exps != exps:
            raise NotOddSymmetricError("leading-term mismatch while expanding")
        q, r = divmod(c, lead_c)
        if r:
            raise NotOddSymmetricError("non-integral elementary expansion")
        out[lam] = out.get(lam, 0) + q
        residual = residual - word_poly.scale(q)
    return {lam: c for lam, c in out.items() if c}


# ---------------------------------------------------------------------------
# odd Pieri rule


def pieri_expected(alpha, k, a):
    """Signed list of partitions in s_alpha s_{(1^k)} = sum +- s_mu.

    mu runs over partitions obtained by adding one box each to rows
    i_1 < ... < i_k (indices <= a); the sign is the parity of
    |alpha after row i_1| + ... + |alpha after row i_k|.  Compositions that
    are not partitions are discarded.
    """
    import itertools

    alpha = combinat.normalize_partition(alpha)
    if k > a or k < 1:
        return []
    out = []
    for rows in itertools.combinations(range(1, a + 1), k):
        padded = list(alpha) + [0] * (a - len(alpha))
        for i in rows:
            padded[i - 1] += 1
        if any(padded[i] < padded[i + 1] for i in range(a - 1)):
            continue
        sign_exp = sum(combinat.partition_tail_weight(alpha, i) for i in rows)
        out.append(((-1) ** sign_exp, combinat.normalize_partition(padded)))
    return out


# ---------------------------------------------------------------------------
# reduction mod 2


def mod2_reduction(f):
    """Forget signs and reduce coefficients mod 2 (lands in the commutative
    polynomial ring over Z/2)."""
    from . import evenoracle

    return evenoracle.Gf2Poly(f.nvars, {m: c % 2 for m, c in f.terms.items()})


# ---------------------------------------------------------------------------
# graded ranks


def monomials_of_degree(a, halfdeg):
    """Exponent vectors with entry sum = halfdeg (Z-degree 2*halfdeg)."""
    import itertools

    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    if a == 0:
        return [()] if halfdeg == 0 else []
    rec([], halfdeg, a)
    return out


_RANK_PRIME = (1 << 61) - 1


def _rank_mod_p(rows, p=_RANK_PRIME):
    """Row rank of an integer matrix over GF(p)."""
    mat = [[v % p for v in row] for row in rows if any(row)]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while mat and col < ncols:
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(v - factor * w) % p for v, w in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def odd_symmetric_rank(a, halfdeg):
    """Exact rank of the odd symmetric slice of Z-degree 2*halfdeg.

    Certificate: the kernel of the stacked divided-difference matrices has
    dimension <= (#monomials - rank over GF(p)), while the eps-words of this
    degree are independent (distinct lex-leading monomials) and lie in the
    kernel, giving the matching lower bound.  Raises if the two disagree.
    """
    monos = monomials_of_degree(a, halfdeg)
    idx = {m: t for t, m in enumerate(monos)}
    lower_monos = monomials_of_degree(a, halfdeg - 1)
    lower_idx = {m: t for t, m in enumerate(lower_monos)}
    rows = []
    for m in monos:
        row = [0] * (len(lower_monos) * max(1, a - 1))
        for i in range(1, a):
            img = oddops._dd_mono(i, a, m)
            for mm, c in img.terms.items():
                row[(i - 1) * len(lower_monos) + lower_idx[mm]] = c
        rows.append(row)
    # transpose so rows are monomials' images; rank of the map
    rank = _rank_mod_p(rows) if rows and rows[0] else 0
    upper = len(monos) - rank
    words = combinat.partitions_of(halfdeg, maxpart=a)
    lower = len(words)
    if upper != lower:
        raise RuntimeError(
            "rank certificate failed at a=%d degree=%d: kernel <= %d, eps-words %d"
            % (a, 2 * halfdeg, upper, lower)
        )
    return upper
