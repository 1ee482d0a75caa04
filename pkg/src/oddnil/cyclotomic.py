"""Cyclotomic quotients through the odd Grassmannian ring: per-degree
integer lattices for the ideal <h_m : m > N-a>, the Grassmann matrix and
its relation recursion, and the Schur box basis.

Degree-d slices of the two-sided ideal are spanned by the products
eps_lambda h_m eps_mu (the eps generate the whole ring), expanded in the
sorted eps-word basis; ranks and invariant factors come from exact
integer Hermite/Smith forms.  Everything is fraction free.
"""

from dataclasses import dataclass, field
from math import comb

from . import combinat, oddsym
from .qgrade import QLaurent
from .skewpoly import SkewPolynomial


class IncompleteCertificationError(RuntimeError):
    """d_max too small: quotient not certified zero above the expected top."""


# ---------------------------------------------------------------------------
# integer matrix normal forms


def hermite_normal_form(rows):
    """Row-style Hermite normal form over Z (nonnegative pivots, echelon).

    Returns a new list of nonzero rows; the input is not modified.
    """
    if not rows:
        return []
    mat = [list(r) for r in rows]
    ncols = len(mat[0])
    out = []
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_idx, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row_idx], mat[pivot] = mat[pivot], mat[row_idx]
        # euclidean elimination below the pivot
        for r in range(row_idx + 1, len(mat)):
            while mat[r][col]:
                q = mat[row_idx][col] // mat[r][col]
                for j in range(ncols):
                    mat[row_idx][j] -= q * mat[r][j]
                mat[row_idx], mat[r] = mat[r], mat[row_idx]
        if mat[row_idx][col] < 0:
            mat[row_idx] = [-v for v in mat[row_idx]]
        row_idx += 1
        if row_idx == len(mat):
            break
    mat = mat[:row_idx]
    # reduce above pivots
    for r in range(len(mat) - 1, -1, -1):
        col = next(j for j, v in enumerate(mat[r]) if v)
        for rr in range(r):
            q = mat[rr][col] // mat[r][col]
            if q:
                mat[rr] = [x - q * y for x, y in zip(mat[rr], mat[r])]
    return mat


def smith_invariant_factors(rows):
    """Nonzero invariant factors of an integer matrix (Smith normal form)."""
    mat = [list(r) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    factors = []
    top = 0
    left = 0
    while top < nrows and left < ncols:
        # find a nonzero entry
        pr = pc = None
        best = None
        for r in range(top, nrows):
            for c in range(left, ncols):
                v = abs(mat[r][c])
                if v and (best is None or v < best):
                    best, pr, pc = v, r, c
        if best is None:
            break
        mat[top], mat[pr] = mat[pr], mat[top]
        for r in range(nrows):
            mat[r][left], mat[r][pc] = mat[r][pc], mat[r][left]
        while True:
            # clear the pivot column
            dirty = False
            for r in range(top + 1, nrows):
                if mat[r][left]:
                    q = mat[r][left] // mat[top][left]
                    mat[r] = [x - q * y for x, y in zip(mat[r], mat[top])]
                    if mat[r][left]:
                        mat[top], mat[r] = mat[r], mat[top]
                        dirty = True
            for c in range(left + 1, ncols):
                if mat[top][c]:
                    q = mat[top][c] // mat[top][left]
                    for r in range(nrows):
                        mat[r][c] -= q * mat[r][left]
                    if mat[top][c]:
                        for r in range(nrows):
                            mat[r][left], mat[r][c] = mat[r][c], mat[r][left]
                        dirty = True
            if not dirty:
                break
        pivot = abs(mat[top][left])
        # pivot must divide every remaining entry
        fixed = False
        for r in range(top + 1, nrows):
            for c in range(left + 1, ncols):
                if mat[r][c] % pivot:
                    mat[top] = [x + y for x, y in zip(mat[top], mat[r])]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        factors.append(pivot)
        top += 1
        left += 1
    return factors


def int_rank(rows):
    return len(hermite_normal_form(rows))


def in_row_lattice(rows, vector):
    """Is the vector an integer combination of the rows?"""
    hnf = hermite_normal_form(rows)
    v = list(vector)
    for row in hnf:
        col = next(j for j, x in enumerate(row) if x)
        q, r = divmod(v[col], row[col])
        if r:
            return False
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------------
# Grassmann matrix and relation series


def grassmann_matrix(a):
    """a x a matrix of the multiplication operator for x~_1 on the odd
    polynomial ring over the symmetric subring: first column is
    (-1)^{binom(j-1,2)} eps_j, superdiagonal is the identity."""
    if a < 1:
        raise ValueError("grassmann_matrix needs a >= 1")
    mat = []
    for j in range(1, a + 1):
        row = [SkewPolynomial.zero(a) for _ in range(a)]
        row[0] = oddsym.elementary(j, a).scale((-1) ** comb(j - 1, 2))
        if j < a:
            row[j] = SkewPolynomial.one(a)
        mat.append(row)
    return mat


def z_poly(k, a):
    """z_k = (-1)^{binom(k+1,2)} h_k."""
    return oddsym.complete(k, a).scale((-1) ** comb(k + 1, 2))


def series_relation(a, n_param, m):
    """f_m: coefficient of t^m in (sum eps_i t^i)(sum z_j t^j) = 1 with t
    super-central, so f_m = sum_{i+j=m} (-1)^{ij} eps_i z_j with 0 <= i <= a
    and 0 <= j <= N-a."""
    if not 1 <= m <= n_param:
        raise ValueError("series_relation needs 1 <= m <= N")
    out = SkewPolynomial.zero(a)
    for i in range(0, min(a, m) + 1):
        j = m - i
        if j < 0 or j > n_param - a:
            continue
        term = oddsym.elementary(i, a) * z_poly(j, a)
        out = out + term.scale((-1) ** ((i * j) % 2))
    return out


def grassmann_power_column(a, n_param):
    """The column M^{N-a+1} v with v = (1, 0, ..., 0)^T; entries multiply on
    the left at each step."""
    mat = grassmann_matrix(a)
    col = [SkewPolynomial.one(a)] + [SkewPolynomial.zero(a) for _ in range(a - 1)]
    for _ in range(n_param - a + 1):
        col = [
            sum((mat[i][k] * col[k] for k in range(a)), SkewPolynomial.zero(a))
            for i in range(a)
        ]
    return col


# ---------------------------------------------------------------------------
# ideal degree slices


@dataclass
class DegreeLattice:
    """Degree slice of a two-sided ideal inside the odd symmetric ring."""

    degree: int
    ambient_basis: list
    generators: list
    hermite: list = field(default=None)
    smith_diagonal: list = field(default=None)

    def __post_init__(self):
        if self.hermite is None:
            self.hermite = hermite_normal_form(self.generators)
        if self.smith_diagonal is None:
            self.smith_diagonal = smith_invariant_factors(self.generators)

    @property
    def rank(self):
        return len(self.hermite)

    @property
    def quotient_rank(self):
        return len(self.ambient_basis) - self.rank

    def is_torsion_free(self):
        return all(f == 1 for f in self.smith_diagonal)

    def reduce(self, coeffs):
        """Reduce an eps-word coefficient dict modulo the slice lattice."""
        v = [0] * len(self.ambient_basis)
        index = {lam: i for i, lam in enumerate(self.ambient_basis)}
        for lam, c in coeffs.items():
            v[index[lam]] = c
        for row in self.hermite:
            col = next(j for j, x in enumerate(row) if x)
            q = v[col] // row[col]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return v


def _slice_generator_rows(a, degree, ideal_gens):
    """Rows for span{eps_lambda g eps_mu} in the given Z-degree.

    ideal_gens: list of (polynomial, Z-degree) pairs.
    """
    halfdeg = degree // 2
    ambient = combinat.partitions_of(halfdeg, maxpart=a)
    index = {lam: i for i, lam in enumerate(ambient)}
    rows = []
    for g, gdeg in ideal_gens:
        rest = halfdeg - gdeg // 2
        if rest < 0:
            continue
        for s1 in range(rest + 1):
            for lam in combinat.partitions_of(s1, maxpart=a):
                left = oddsym.elementary_word_value(lam, a)
                for mu in combinat.partitions_of(rest - s1, maxpart=a):
                    right = oddsym.elementary_word_value(mu, a)
                    prod = left * g * right
                    if prod.is_zero():
                        continue
                    coeffs = oddsym.expand_in_elementary(prod)
                    row = [0] * len(ambient)
                    for nu, c in coeffs.items():
                        row[index[nu]] = c
                    rows.append(row)
    return ambient, rows


def ideal_degree_slice(a, n_param, degree):
    """Degree slice of <h_m : m > N-a> expressed in the eps-word basis."""
    if degree % 2 or degree < 0:
        raise ValueError("Z-degree must be even and nonnegative")
    if a == 0:
        return DegreeLattice(degree, [()] if degree == 0 else [], [])
    gens = []
    for m in range(n_param - a + 1, degree // 2 + 1):
        if m >= 1:
            gens.append((oddsym.complete(m, a), 2 * m))
    ambient, rows = _slice_generator_rows(a, degree, gens)
    return DegreeLattice(degree, ambient, rows)


def first_column_degree_slice(a, n_param, degree):
    """Degree slice of the ideal generated by the first column of
    M^{N-a+1}; used to compare against the h-ideal."""
    if degree % 2 or degree < 0:
        raise ValueError("Z-degree must be even and nonnegative")
    col = grassmann_power_column(a, n_param)
    gens = []
    for j, g in enumerate(col, start=1):
        gens.append((g, 2 * (n_param - a + j)))
    ambient, rows = _slice_generator_rows(a, degree, gens)
    return DegreeLattice(degree, ambient, rows)


def default_dmax(a, n_param):
    return 2 * a * (n_param - a) + 4


def quotient_graded_rank(a, n_param, d_max=None):
    """Graded rank of the odd Grassmannian quotient as a QLaurent in q
    (exponent = Z-degree); certifies that every slice above the expected
    top degree 2a(N-a) and up to d_max is entirely ideal."""
    if not 0 <= a <= n_param:
        raise ValueError("need 0 <= a <= N")
    top = 2 * a * (n_param - a)
    if d_max is None:
        d_max = default_dmax(a, n_param)
    if d_max < top:
        raise ValueError("d_max=%d below expected top degree %d" % (d_max, top))
    coeffs = {}
    boundary_rank = 0
    for d in range(0, d_max + 1, 2):
        r = ideal_degree_slice(a, n_param, d).quotient_rank
        if r:
            if d > top:
                raise IncompleteCertificationError(
                    "quotient nonzero in degree %d > %d for (a, N) = (%d, %d)"
                    % (d, top, a, n_param)
                )
            coeffs[d] = r
        if d == d_max:
            boundary_rank = r
    if boundary_rank and a not in (0, n_param):
        raise IncompleteCertificationError(
            "quotient nonzero at the boundary degree %d; raise d_max to certify"
            % d_max
        )
    return QLaurent(coeffs)


def quotient_rank_per_degree(a, n_param, d_max=None):
    q = quotient_graded_rank(a, n_param, d_max)
    return dict(q.coeffs)


def schur_box_images(a, n_param, d_max=None):
    """Check the Schur polynomial picture of the quotient basis.

    Returns a report dict: partitions in the a x (N-a) box stay linearly
    independent per degree, while Schur polynomials sticking out of the box
    (too many rows or columns) reduce to zero, within the degree bound.
    """
    if d_max is None:
        d_max = default_dmax(a, n_param)
    b = n_param - a
    box = combinat.partitions_in_box(a, b)
    vanish = []
    independent = {}
    for d in range(0, d_max + 1, 2):
        slice_ = ideal_degree_slice(a, n_param, d)
        halfdeg = d // 2
        inside = [lam for lam in box if sum(lam) == halfdeg]
        outside = [
            lam
            for lam in combinat.partitions_of(halfdeg, maxpart=None)
            if not combinat.fits_in_box(lam, a, b)
        ]
        for lam in outside:
            s = oddsym.schur(lam, a)
            coeffs = oddsym.expand_in_elementary(s) if not s.is_zero() else {}
            reduced = slice_.reduce(coeffs)
            vanish.append((lam, not any(reduced)))
        if inside:
            rows = list(slice_.generators)
            base_rank = slice_.rank
            for lam in inside:
                rows.append(
                    _coeff_vector(oddsym.expand_in_elementary(oddsym.schur(lam, a)), slice_.ambient_basis)
                )
            full_rank = int_rank(rows)
            independent[d] = full_rank - base_rank == len(inside)
    return {
        "box": box,
        "vanishing": vanish,
        "vanishing_ok": all(v for _, v in vanish),
        "independent_per_degree": independent,
        "independent_ok": all(independent.values()),
    }


def _coeff_vector(coeffs, ambient):
    index = {lam: i for i, lam in enumerate(ambient)}
    v = [0] * len(ambient)
    for lam, c in coeffs.items():
        v[index[lam]] = c
    return v
