"""The odd nilHecke algebra as an operator algebra on skew polynomials.

Elements are integer combinations of generator words over dots x_r and
crossings d_r.  A word is a tuple of nonzero ints: +r is the dot x_r
(left multiplication), -r is the crossing d_r (odd divided difference).
Word concatenation is operator composition with the LEFT factor acting
LAST; diagrammatically, left-to-right in the word is top-to-bottom in
the picture.

Equality is decided by evaluation on the odd Schubert basis: an element
is zero iff it kills every Schubert polynomial (the representation is
faithful and the action is right-linear over the odd symmetric subring,
which is why the a! Schubert polynomials suffice).  No rewriting system
is used anywhere.

Thick calculus conventions (all signs downstream depend on these):

* e_a is the 0-Hecke product (x_r d_r) along the canonical reduced word
  of w_0.
* crossing_word(a, b): the t-th of the b right strands crosses leftward
  over all a left strands, for t = 1..b in order; ab crossings.
* up_splitter(a, b) = (e_a (x) e_b) over the mirror crossing with bottom
  bundles (b, a) and top legs (a, b); the bottom e_{a+b} is absorbed.
  The two crossing orientations coincide whenever a bundle is thin.
* merge(a, b) = e_{a+b}.
* box(f, a) = e_a f e_a for odd symmetric f.
* sigma/lambda elements as in the orthogonal-idempotent decompositions;
  the parity ledgers chi, Omega, X live here.
"""

from functools import lru_cache
from math import comb

from . import combinat, oddops, oddsym
from .skewpoly import SkewPolynomial

NORMALIZE_THRESHOLD = 10_000


# ---------------------------------------------------------------------------
# words


def word_degree(word):
    """Z-degree: +2 per dot, -2 per crossing."""
    return 2 * sum(1 if l > 0 else -1 for l in word)


def word_super_degree(word):
    return (word_degree(word) // 2) % 2


def check_word(word, strands):
    for l in word:
        if l == 0:
            raise ValueError("zero letter in word")
        if l > 0 and not 1 <= l <= strands:
            raise ValueError("dot x_%d out of range for %d strands" % (l, strands))
        if l < 0 and not 1 <= -l <= strands - 1:
            raise ValueError("crossing d_%d out of range for %d strands" % (-l, strands))


def shift_word(word, offset):
    return tuple((l + offset) if l > 0 else (l - offset) for l in word)


def apply_word(word, p):
    """Apply a word to a polynomial; rightmost letter acts first."""
    out = p
    for l in reversed(word):
        if not out.terms:
            return out
        if l > 0:
            out = SkewPolynomial.variable(out.nvars, l) * out
        else:
            out = oddops.divided_difference(-l, out)
    return out


def format_word(word):
    return " ".join(("x%d" % l) if l > 0 else ("d%d" % -l) for l in word)


def parse_word(text):
    letters = []
    for tok in text.split():
        if tok.startswith("x"):
            letters.append(int(tok[1:]))
        elif tok.startswith("d"):
            letters.append(-int(tok[1:]))
        else:
            raise ValueError("bad word letter %r" % tok)
    if any(l == 0 for l in letters):
        raise ValueError("bad word letter index 0")
    return tuple(letters)


# ---------------------------------------------------------------------------
# elements


class OnhElement:
    __slots__ = ("strands", "combo")

    def __init__(self, strands, combo=None):
        self.strands = strands
        d = {}
        if combo:
            for word, c in combo.items():
                if c:
                    word = tuple(word)
                    check_word(word, strands)
                    d[word] = int(c)
        self.combo = d

    @classmethod
    def zero(cls, strands):
        return cls(strands)

    @classmethod
    def identity(cls, strands):
        return cls(strands, {(): 1})

    @classmethod
    def from_word(cls, strands, word, coeff=1):
        return cls(strands, {tuple(word): coeff})

    def __eq__(self, other):
        """Semantic equality, via evaluation on the Schubert basis."""
        if not isinstance(other, OnhElement):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("strand mismatch: %d vs %d" % (self.strands, other.strands))
        return (self - other).is_zero()

    def __add__(self, other):
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        d = dict(self.combo)
        for w, c in other.combo.items():
            v = d.get(w, 0) + c
            if v:
                d[w] = v
            else:
                d.pop(w, None)
        out = OnhElement.__new__(OnhElement)
        out.strands = self.strands
        out.combo = d
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return OnhElement.zero(self.strands)
        out = OnhElement.__new__(OnhElement)
        out.strands = self.strands
        out.combo = {w: c * v for w, v in self.combo.items()}
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        """Lazy concatenation; normalizes when the word count explodes."""
        if isinstance(other, int):
            return self.scale(other)
        if self.strands != other.strands:
            raise ValueError("strand mismatch: %d vs %d" % (self.strands, other.strands))
        d = {}
        for wa, ca in self.combo.items():
            for wb, cb in other.combo.items():
                w = wa + wb
                v = d.get(w, 0) + ca * cb
                if v:
                    d[w] = v
                else:
                    d.pop(w, None)
        out = OnhElement.__new__(OnhElement)
        out.strands = self.strands
        out.combo = d
        if len(d) > NORMALIZE_THRESHOLD:
            out = out.normalize()
        return out

    def evaluate(self, p):
        if p.nvars != self.strands:
            raise ValueError("polynomial in %d variables, element on %d strands" % (p.nvars, self.strands))
        out = SkewPolynomial.zero(self.strands)
        for w, c in self.combo.items():
            out = out + apply_word(w, p).scale(c)
        return out

    def is_zero(self):
        basis = schubert_basis_list(self.strands)
        return all(self.evaluate(p).is_zero() for p in basis)

    def degrees(self):
        return sorted({word_degree(w) for w in self.combo})

    def normalize(self):
        """Re-express through the standard basis; caps word length."""
        return assemble_standard_basis(self.strands, extract_standard_basis(self))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "OnhElement(%d, %s)" % (self.strands, format_element(self))


def dot(strands, r):
    return OnhElement.from_word(strands, (r,))


def cross(strands, r):
    return OnhElement.from_word(strands, (-r,))


def from_polynomial(f):
    """Left multiplication by f, as an element (one word per monomial)."""
    combo = {}
    for mono, c in f.terms.items():
        word = []
        for i, e in enumerate(mono, start=1):
            word.extend([i] * e)
        combo[tuple(word)] = combo.get(tuple(word), 0) + c
    return OnhElement(f.nvars, combo)


def dots_word(exps):
    """Word of dots realizing left multiplication by the normal-ordered
    monomial with the given exponents."""
    word = []
    for i, e in enumerate(exps, start=1):
        word.extend([i] * e)
    return tuple(word)


# ---------------------------------------------------------------------------
# Schubert basis and the standard basis {x^A d_w}


@lru_cache(maxsize=None)
def schubert_basis_list(a):
    return [oddsym.schubert(w, a) for w in combinat.all_permutations(a)]


@lru_cache(maxsize=None)
def _perms_by_length(a):
    perms = combinat.all_permutations(a)
    return sorted(perms, key=lambda w: (combinat.perm_length(w), w))


@lru_cache(maxsize=None)
def _unit_value(w, a):
    """d_{canonical(w)} applied to the Schubert polynomial of w; always a
    unit, computed by evaluation and never by a hand sign rule.

    With words acting rightmost-first, the surviving length-equal pairing
    on the Schubert polynomial of w is d_w itself (the inverse-free index
    is forced by the composition convention).
    """
    word = combinat.canonical_reduced_word(w)
    val = oddops.dd_word(word, oddsym.schubert(w, a))
    c = val.constant_term()
    if val != SkewPolynomial.constant(a, c) or c not in (1, -1):
        raise RuntimeError("Schubert unit evaluation failed for %r" % (w,))
    return c


def extract_standard_basis(element):
    """Coefficients of an element in the basis {x^A d_w} (canonical words).

    Triangular extraction by increasing Coxeter length: on the Schubert
    polynomial of w, words with longer d-part vanish and the length-equal
    survivors are read off monomial by monomial.
    """
    a = element.strands
    residual = element
    out = {}
    for w in _perms_by_length(a):
        val = residual.evaluate(oddsym.schubert(w, a))
        if val.is_zero():
            continue
        unit = _unit_value(w, a)
        uword = tuple(-l for l in combinat.canonical_reduced_word(w))
        delta = {}
        for mono, c in val.terms.items():
            coeff = c // unit
            out[(mono, w)] = coeff
            word = dots_word(mono) + uword
            delta[word] = delta.get(word, 0) - coeff
        residual = residual + OnhElement(a, delta)
    return {k: v for k, v in out.items() if v}


def assemble_standard_basis(a, coeffs):
    combo = {}
    for (mono, u), c in coeffs.items():
        word = dots_word(mono) + tuple(-l for l in combinat.canonical_reduced_word(u))
        combo[word] = combo.get(word, 0) + c
    return OnhElement(a, combo)


# ---------------------------------------------------------------------------
# 0-Hecke generators and thick idempotents


def zero_hecke(strands, r):
    """The 0-Hecke generator x_r d_r."""
    if not 1 <= r <= strands - 1:
        raise ValueError("0-Hecke index %d out of range" % r)
    return OnhElement.from_word(strands, (r, -r))


@lru_cache(maxsize=None)
def e_word(a):
    """Word of e_a: the 0-Hecke product along the canonical word of w_0."""
    word = []
    for j in combinat.canonical_reduced_word(combinat.longest_element(a)):
        word.extend((j, -j))
    return tuple(word)


def idempotent_e(a):
    return OnhElement.from_word(a, e_word(a))


def e_embedded(a, offset, n):
    """e_a on strands offset+1 .. offset+a inside n strands."""
    if offset < 0 or offset + a > n:
        raise ValueError("embedding of e_%d at offset %d does not fit in %d strands" % (a, offset, n))
    return OnhElement.from_word(n, shift_word(e_word(a), offset))


@lru_cache(maxsize=None)
def crossing_word_letters(a, b, offset=0):
    """Crossing word for bundles (a, b): each right strand crosses leftward
    over all a left strands; degree -2ab."""
    word = []
    for t in range(b, 0, -1):
        word.extend(range(-(t + offset), -(t + offset + a), -1))
    # letters were appended as -(t), -(t+1), ..., -(t+a-1)
    return tuple(word)


def crossing_element(a, b, offset, n):
    if offset < 0 or offset + a + b > n:
        raise ValueError("crossing of (%d, %d) at offset %d does not fit in %d strands" % (a, b, offset, n))
    return OnhElement.from_word(n, crossing_word_letters(a, b, offset))


crossing_word = crossing_element


@lru_cache(maxsize=None)
def mirror_crossing_letters(a, b, offset=0):
    """The left-right mirror of crossing_word_letters(a, b): bottom bundles
    (b, a), top (a, b), with the left b-bundle sweeping right.

    The splitter diagrams use this orientation; the plain crossing uses
    crossing_word_letters.  The two coincide when either bundle is thin.
    """
    n = a + b
    base = crossing_word_letters(a, b)
    # sigma image: crossing index i becomes n - i; letters are negative
    return tuple(-((n + l) + offset) for l in base)


def up_splitter(a, b):
    """Split a thick a+b strand into legs (a, b); the bottom projector is
    absorbed.  The crossing inside is the mirror orientation: the unique
    choice under which associativity carries the sign (-1)^{ab binom(c,2)}
    and the sign bookkeeping of bigX makes the sigma/lambda contractions
    close."""
    n = a + b
    word = shift_word(e_word(a), 0) + shift_word(e_word(b), a) + mirror_crossing_letters(a, b)
    return OnhElement.from_word(n, word)


def merge(a, b):
    """Merge legs (a, b) into a thick a+b strand; equals e_{a+b}."""
    return idempotent_e(a + b)


def box(f, a):
    """e_a f e_a for odd symmetric f."""
    if f.nvars != a:
        raise ValueError("box needs a polynomial in %d variables" % a)
    if not oddsym.is_odd_symmetric(f):
        raise oddsym.NotOddSymmetricError("box label must be odd symmetric")
    ea = e_word(a)
    combo = {}
    for mono, c in f.terms.items():
        word = ea + dots_word(mono) + ea
        combo[word] = combo.get(word, 0) + c
    return OnhElement(a, combo)


def box_embedded(f, a, offset, n):
    base = box(f, a)
    return OnhElement(n, {shift_word(w, offset): c for w, c in base.combo.items()})


# ---------------------------------------------------------------------------
# parity ledgers


def chi(alpha, a):
    """Parity of the Schur normal-ordering sign (mod 2)."""
    return oddsym.chi(alpha, a) % 2


def omega(beta, b):
    """Omega(beta) = sum_j binom(beta_{b-j} + j, 3) for beta with <= b parts."""
    beta = combinat.normalize_partition(beta)
    if len(beta) > b:
        raise combinat.BoxViolationError("%r has more than %d parts" % (beta, b))
    padded = list(beta) + [0] * (b - len(beta))
    return sum(comb(padded[b - 1 - j] + j, 3) for j in range(b)) % 2


def bigX(alpha, a, b):
    """The thick-calculus sign X_alpha^{a,b} (mod 2):

        |alpha| |hat alpha| + chi_alpha^a + chi_{hat alpha}^b
        + binom(a,2)(|hat alpha| + binom(b,2)) + Omega(hat alpha)
        + binom(a+b,3).

    Tied to the mirror crossing orientation inside up_splitter; with the
    plain crossing orientation instead, the binom(a,2)binom(b,2) term
    would have to be dropped to keep lambda_beta sigma_alpha = delta e.
    """
    alpha = combinat.check_box(alpha, a, b)
    ahat = combinat.hat_partition(alpha, a, b)
    total = (
        sum(alpha) * sum(ahat)
        + oddsym.chi(alpha, a)
        + oddsym.chi(ahat, b)
        + comb(a, 2) * (sum(ahat) + comb(b, 2))
        + comb(a + b, 3)
    )
    return (total + omega(ahat, b)) % 2


# ---------------------------------------------------------------------------
# sigma/lambda families


def sigma_seq(ell, a=None):
    """sigma_l: nested splitters (nu+1) -> (nu, 1) from thickness a down,
    with an eps_{l_nu} box right above the thickness-nu leg."""
    if a is None:
        a = len(ell) + 1
    if len(ell) != a - 1 or any(not 0 <= l <= nu for nu, l in enumerate(ell, start=1)):
        raise ValueError("%r is not in Sq(%d)" % (ell, a))
    out = OnhElement.identity(a)
    for nu in range(1, a):
        split_nu = OnhElement.from_word(
            a, shift_word(e_word(nu), 0) + shift_word(e_word(1), nu) + crossing_word_letters(1, nu)
        )
        boxed = box_embedded(oddsym.elementary(ell[nu - 1], nu), nu, 0, a)
        # the thickness-(nu+1) split acts below everything built so far
        out = out * (boxed * split_nu)
    return out


def lambda_seq(ell, a=None):
    """lambda_l = (-1)^{binom(a,3)} e_a x_a^{hat l_{a-1}} e_{a-1}
    x_{a-1}^{hat l_{a-2}} ... e_2 x_2^{hat l_1}, with hat l_nu = nu - l_nu.

    The hat-l_nu dots sit on the thin strand directly below the merge at
    thickness nu+1; flattening all dots below the single top merge flips
    some diagonal signs and fails the orthogonality contract, so the
    intermediate merges are kept.
    """
    if a is None:
        a = len(ell) + 1
    if len(ell) != a - 1 or any(not 0 <= l <= nu for nu, l in enumerate(ell, start=1)):
        raise ValueError("%r is not in Sq(%d)" % (ell, a))
    hat = combinat.seq_hat(ell)
    word = []
    for nu in range(a - 1, 0, -1):
        word.extend(e_word(nu + 1))
        word.extend([nu + 1] * hat[nu - 1])
    return OnhElement.from_word(a, tuple(word), (-1) ** comb(a, 3))


def sigma_part(alpha, a, b):
    """sigma_alpha = (box(s_alpha, a) (x) e_b) . up_splitter(a, b)."""
    alpha = combinat.check_box(alpha, a, b)
    n = a + b
    top = box_embedded(oddsym.schur(alpha, a), a, 0, n) * e_embedded(b, a, n)
    return top * up_splitter(a, b)


def lambda_part(alpha, a, b):
    """lambda_alpha = (-1)^{X_alpha^{a,b}} e_{a+b} (e_a (x) box(dual s_{hat alpha}, b))."""
    alpha = combinat.check_box(alpha, a, b)
    n = a + b
    ahat = combinat.hat_partition(alpha, a, b)
    bottom = e_embedded(a, 0, n) * box_embedded(oddsym.dual_schur(ahat, b), b, a, n)
    out = idempotent_e(n) * bottom
    return out.scale((-1) ** bigX(alpha, a, b))


# ---------------------------------------------------------------------------
# diagram automorphisms


def automorphism_apply(kind, element):
    """kind in {"sigma", "psi", "sigma.psi"}: reflect across the vertical
    axis (sigma, an automorphism), the horizontal axis (psi, an
    anti-automorphism reversing words), or both."""
    a = element.strands

    def sigma_word(word):
        return tuple((a + 1 - l) if l > 0 else -(a + l) for l in word)

    if kind == "sigma":
        combo = {sigma_word(w): c for w, c in element.combo.items()}
    elif kind == "psi":
        combo = {tuple(reversed(w)): c for w, c in element.combo.items()}
    elif kind in ("sigma.psi", "psi.sigma"):
        combo = {tuple(reversed(sigma_word(w))): c for w, c in element.combo.items()}
    else:
        raise ValueError("unknown automorphism %r" % kind)
    return OnhElement(a, combo)


def d_element(a):
    """D_a as an element (the fixed word of oddops.da_word)."""
    return OnhElement.from_word(a, tuple(-l for l in oddops.da_word(a)))


def staircase_element(a):
    return OnhElement.from_word(a, dots_word(tuple(range(a - 1, -1, -1))))


# ---------------------------------------------------------------------------
# serialization: signed sums of quoted words


def format_element(element):
    if not element.combo:
        return "0"
    parts = []
    for w in sorted(element.combo):
        c = element.combo[w]
        mag = abs(c)
        body = '"%s"' % format_word(w)
        if mag != 1:
            body = "%d*%s" % (mag, body)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_element(text, strands):
    s = text.strip()
    if s == "0":
        return OnhElement.zero(strands)
    combo = {}
    pos = 0
    sign = 1
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        if s[pos] in "+-":
            sign = 1 if s[pos] == "+" else -1
            pos += 1
            continue
        elif not first and s[pos] != '"' and not s[pos].isdigit():
            raise ValueError("expected sign or term at %r" % s[pos:])
        coeff = sign
        if s[pos].isdigit():
            end = pos
            while end < len(s) and s[end].isdigit():
                end += 1
            coeff *= int(s[pos:end])
            pos = end
            if pos >= len(s) or s[pos] != "*":
                raise ValueError("expected '*' after coefficient")
            pos += 1
        if pos >= len(s) or s[pos] != '"':
            raise ValueError("expected quoted word at %r" % s[pos:])
        end = s.index('"', pos + 1)
        word = parse_word(s[pos + 1 : end])
        combo[word] = combo.get(word, 0) + coeff
        pos = end + 1
        sign = 1
        first = False
    return OnhElement(strands, combo)
