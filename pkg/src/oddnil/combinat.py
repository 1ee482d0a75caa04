"""Partitions, permutations, reduced words, and the index sets Sq(a), P(a,b).

Partitions are tuples of positive ints in weakly decreasing order (the empty
tuple is the empty partition); functions normalize away trailing zeros.
Permutations are tuples in one-line notation, 1-based: w = (w(1), ..., w(a)).
A reduced word (j_1, ..., j_l) stands for w = s_{j_1} o ... o s_{j_l} as a
composite of functions, so the rightmost letter acts first.
"""

import itertools
from functools import lru_cache


class BoxViolationError(ValueError):
    """A partition does not fit in the required box."""


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(parts):
    out = tuple(p for p in parts if p)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError("not weakly decreasing: %r" % (parts,))
    if any(p < 0 for p in out):
        raise ValueError("negative part in %r" % (parts,))
    return out


def fits_in_box(alpha, a, b):
    alpha = normalize_partition(alpha)
    return len(alpha) <= a and (not alpha or alpha[0] <= b)


def check_box(alpha, a, b):
    alpha = normalize_partition(alpha)
    if not fits_in_box(alpha, a, b):
        raise BoxViolationError("%r does not fit in a %d x %d box" % (alpha, a, b))
    return alpha


@lru_cache(maxsize=None)
def partitions_in_box(a, b):
    """All partitions fitting in an a x b box, in graded lexicographic order."""
    out = []

    def rec(prefix, maxpart, rows):
        out.append(tuple(prefix))
        if rows == 0:
            return
        for p in range(1, maxpart + 1):
            prefix.append(p)
            rec(prefix, p, rows - 1)
            prefix.pop()

    rec([], b, a)
    out.sort(key=lambda alpha: (sum(alpha), alpha))
    return out


@lru_cache(maxsize=None)
def partitions_of(n, maxpart=None):
    """Partitions of n with parts bounded by maxpart (graded lex = lex here)."""
    if maxpart is None:
        maxpart = n
    out = []

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            rec(prefix, remaining - p, p)
            prefix.pop()

    rec([], n, maxpart)
    out.sort()
    return out


def conjugate(alpha):
    alpha = normalize_partition(alpha)
    if not alpha:
        return ()
    return tuple(sum(1 for p in alpha if p >= j) for j in range(1, alpha[0] + 1))


def complement(alpha, a, b):
    """(b - alpha_a, ..., b - alpha_1) for alpha in P(a,b)."""
    alpha = check_box(alpha, a, b)
    padded = list(alpha) + [0] * (a - len(alpha))
    return normalize_partition(sorted((b - p for p in padded), reverse=True))


def hat_partition(alpha, a, b):
    """conjugate(complement(alpha)); lands in P(b,a)."""
    return conjugate(complement(alpha, a, b))


hat = hat_partition


def partition_tail_weight(alpha, m):
    """|alpha| after removing rows 1..m (the Pieri sign ingredient)."""
    alpha = normalize_partition(alpha)
    return sum(alpha[m:])


def format_partition(alpha):
    return ",".join(str(p) for p in normalize_partition(alpha))


def parse_partition(text):
    toks = [t for t in text.strip().split(",") if t.strip() != ""]
    return normalize_partition(sorted((int(t) for t in toks), reverse=True))


# ---------------------------------------------------------------------------
# permutations


def identity_perm(a):
    return tuple(range(1, a + 1))


def longest_element(a):
    return tuple(range(a, 0, -1))


def all_permutations(a):
    return [tuple(p) for p in itertools.permutations(range(1, a + 1))]


def perm_length(w):
    """Coxeter length = inversion count."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_inverse(w):
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def perm_compose(u, v):
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def simple_transposition(i, a):
    w = list(range(1, a + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(i, j, a):
    w = list(range(1, a + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def canonical_reduced_word(w):
    """Deterministic reduced word for w by the leftmost-descent scheme.

    Repeatedly pick the smallest i with w(i) > w(i+1) and strip s_i off on
    the right.  Returns (j_1, ..., j_l) with w = s_{j_1} o ... o s_{j_l}.
    """
    v = list(w)
    letters = []
    while True:
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                letters.append(i + 1)
                v[i], v[i + 1] = v[i + 1], v[i]
                break
        else:
            break
    letters.reverse()
    return tuple(letters)


def word_to_perm(word, a):
    w = identity_perm(a)
    for j in word:
        w = perm_compose(w, simple_transposition(j, a))
    return w


def reduced_word_for_w0_starting_with(i, a):
    """A reduced word for w_0 whose rightmost (first-acting) letter is s_i."""
    w0 = longest_element(a)
    v = perm_compose(w0, simple_transposition(i, a))
    word = canonical_reduced_word(v) + (i,)
    if len(word) != perm_length(w0) or word_to_perm(word, a) != w0:
        raise RuntimeError("failed to build reduced word for w_0 ending in s_%d" % i)
    return word


def format_permutation(w):
    return " ".join(str(v) for v in w)


def parse_permutation(text):
    w = tuple(int(t) for t in text.split())
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("not a permutation in one-line notation: %r" % text)
    return w


# ---------------------------------------------------------------------------
# the index set Sq(a)


def enumerate_sq(a):
    """All sequences l_1..l_{a-1} with 0 <= l_nu <= nu; there are a! of them."""
    if a < 1:
        raise ValueError("enumerate_sq needs a >= 1")
    ranges = [range(nu + 1) for nu in range(1, a)]
    return [tuple(t) for t in itertools.product(*ranges)]


def seq_hat(ell):
    """Complementary dot counts: hat(l)_nu = nu - l_nu."""
    return tuple(nu + 1 - l for nu, l in enumerate(ell))
