"""Registry of named, parameterized checks: one per identity family in
scope, each producing a machine-readable pass/fail report with concrete
counterexamples on failure.

Every check is deterministic given its params and seed; randomized sweeps
draw from a generator seeded by (seed, check id), and the default sweeps
always include exhaustive small cases so a pass never depends on luck.
Two sentinel checks (the mirrored projector slide and the non-central
x_1^2) fail by design; harnesses assert their status is "fail".
"""

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from math import comb

from . import combinat, cyclotomic, evenoracle, oddops, oddsym, onh, qgrade
from .skewpoly import SkewPolynomial, apply_w0, reverse_staircase, staircase

DEFAULT_SEED = 24680


class UnknownCheckError(ValueError):
    pass


@dataclass
class CheckReport:
    check_id: str
    params: dict
    status: str  # pass | fail | skipped
    details: list = field(default_factory=list)
    seed: int = DEFAULT_SEED
    wall_time: float = 0.0
    instances: int = 0

    def to_json_dict(self, deterministic=True):
        return {
            "check": self.check_id,
            "params": self.params,
            "status": self.status,
            "seed": self.seed,
            "details": [list(t) for t in self.details],
            "wall_time_s": 0.0 if deterministic else round(self.wall_time, 6),
        }


def _triple(inp, expected, actual):
    return (str(inp), str(expected), str(actual))


class _Sweep:
    """Collects instance results; keeps every counterexample triple."""

    def __init__(self):
        self.instances = 0
        self.failures = []
        self.notes = []

    def check(self, inp, expected, actual):
        self.instances += 1
        if expected != actual:
            self.failures.append(_triple(inp, expected, actual))

    def require(self, inp, condition, expected="True", actual="False"):
        self.instances += 1
        if not condition:
            self.failures.append(_triple(inp, expected, actual))

    def note(self, inp, expected, actual):
        """Informational triple shown even on pass (e.g. object counts)."""
        self.notes.append(_triple(inp, expected, actual))

    @property
    def passed(self):
        return not self.failures


def _monomials_up_to(a, maxhalf):
    out = []
    for hd in range(maxhalf + 1):
        out.extend(oddsym.monomials_of_degree(a, hd))
    return out


def _emb(el, off, n):
    return onh.OnhElement(n, {onh.shift_word(w, off): c for w, c in el.combo.items()})


# ---------------------------------------------------------------------------
# checks


def check_defining_relations(params, rng):
    sw = _Sweep()
    for a in params["a_list"]:
        monos = _monomials_up_to(a, params["dmax"] // 2)
        xs = [SkewPolynomial.variable(a, i) for i in range(1, a + 1)]
        for m in monos:
            p = SkewPolynomial.monomial(a, m)
            dd = {i: oddops.divided_difference(i, p) for i in range(1, a)}
            for i in range(1, a):
                sw.check(("d%d^2" % i, a, m), SkewPolynomial.zero(a), oddops.divided_difference(i, dd[i]))
                if i + 1 < a:
                    lhs = oddops.dd_word((i, i + 1, i), p)
                    rhs = oddops.dd_word((i + 1, i, i + 1), p)
                    sw.check(("braid", a, i, m), lhs, rhs)
                sw.check(
                    ("x_i d_i + d_i x_{i+1}", a, i, m),
                    p,
                    xs[i - 1] * dd[i] + oddops.divided_difference(i, xs[i] * p),
                )
                sw.check(
                    ("d_i x_i + x_{i+1} d_i", a, i, m),
                    p,
                    oddops.divided_difference(i, xs[i - 1] * p) + xs[i] * dd[i],
                )
                for j in range(1, a + 1):
                    if j not in (i, i + 1):
                        sw.check(
                            ("x_j d_i + d_i x_j", a, i, j, m),
                            SkewPolynomial.zero(a),
                            xs[j - 1] * dd[i] + oddops.divided_difference(i, xs[j - 1] * p),
                        )
                for j in range(i + 2, a):
                    sw.check(
                        ("d_i d_j + d_j d_i", a, i, j, m),
                        SkewPolynomial.zero(a),
                        oddops.divided_difference(i, dd[j]) + oddops.divided_difference(j, dd[i]),
                    )
            for i in range(1, a + 1):
                for j in range(i + 1, a + 1):
                    sw.check(
                        ("x_i x_j + x_j x_i", a, i, j, m),
                        SkewPolynomial.zero(a),
                        xs[i - 1] * (xs[j - 1] * p) + xs[j - 1] * (xs[i - 1] * p),
                    )
    return sw


def check_e_h_relation(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        for m in range(1, params["m_max"] + 1):
            tot = SkewPolynomial.zero(a)
            for k in range(0, m + 1):
                term = oddsym.elementary(k, a) * oddsym.complete(m - k, a)
                tot = tot + term.scale((-1) ** (k * (k + 1) // 2))
            sw.check(("e-h relation", a, m), SkewPolynomial.zero(a), tot)
    return sw


def check_eps_relations(params, rng):
    sw = _Sweep()

    def fam(f, name, a):
        for m in range(1, params["m_max"] + 1):
            for i in range(1, 2 * m):
                j = 2 * m - i
                if 1 <= i <= a and 1 <= j <= a:
                    sw.check((name + " even-sum", a, i, j), f(i, a) * f(j, a), f(j, a) * f(i, a))
            for i in range(0, 2 * m + 1):
                j = 2 * m + 1 - i
                if 1 <= i <= a - 1 and 1 <= 2 * m - i <= a - 1:
                    lhs = f(i, a) * f(j, a) + (f(j, a) * f(i, a)).scale((-1) ** i)
                    rhs = (f(i + 1, a) * f(2 * m - i, a)).scale((-1) ** i) + f(2 * m - i, a) * f(i + 1, a)
                    sw.check((name + " odd-sum", a, i, j), lhs, rhs)
            if 1 < 2 * m <= a - 1:
                sw.check(
                    (name + " doubling", a, m),
                    f(2 * m + 1, a).scale(2),
                    f(1, a) * f(2 * m, a) + f(2 * m, a) * f(1, a),
                )

    for a in range(2, params["a_max"] + 1):
        fam(oddsym.elementary, "eps", a)
        fam(oddsym.complete, "h", a)
        # mixed relations
        for m in range(1, params["m_max"] + 1):
            for i in range(1, 2 * m):
                j = 2 * m - i
                if 1 <= i <= a and 1 <= j <= a:
                    sw.check(
                        ("mixed even-sum", a, i, j),
                        oddsym.elementary(i, a) * oddsym.complete(j, a),
                        oddsym.complete(j, a) * oddsym.elementary(i, a),
                    )
            for i in range(0, 2 * m + 1):
                j = 2 * m + 1 - i
                if 1 <= i <= a - 1 and 1 <= 2 * m - i <= a - 1:
                    lhs = oddsym.elementary(i, a) * oddsym.complete(j, a) + (
                        oddsym.complete(j, a) * oddsym.elementary(i, a)
                    ).scale((-1) ** i)
                    rhs = (oddsym.elementary(i + 1, a) * oddsym.complete(2 * m - i, a)).scale(
                        (-1) ** i
                    ) + oddsym.complete(2 * m - i, a) * oddsym.elementary(i + 1, a)
                    sw.check(("mixed odd-sum", a, i, j), lhs, rhs)
        # variable reduction
        for k in range(0, a + 1):
            lhs = oddsym.elementary_in_fewer_vars(k, a)
            rhs = SkewPolynomial.zero(a)
            for j in range(0, k + 1):
                rhs = rhs + (oddsym.elementary(k - j, a) * (oddsym.x_tilde(a, a) ** j)).scale((-1) ** j)
            sw.check(("variable reduction", a, k), lhs, rhs)
        # w_0 action
        for k in range(0, a + 1):
            sw.check(
                ("w0 on eps", a, k),
                oddsym.elementary(k, a).scale((-1) ** (comb(k, 2) + k * comb(a - 1, 2))),
                apply_w0(oddsym.elementary(k, a)),
            )
    return sw


def check_pieri(params, rng):
    sw = _Sweep()
    for a in params["a_list"]:
        for alpha in combinat.partitions_in_box(params["rows"], params["cols"]):
            for k in range(1, params["k_max"] + 1):
                lhs = oddsym.schur(alpha, a) * oddsym.elementary(k, a).scale(
                    (-1) ** comb(k, 2)
                )
                rhs = SkewPolynomial.zero(a)
                for sign, mu in oddsym.pieri_expected(alpha, k, a):
                    rhs = rhs + oddsym.schur(mu, a).scale(sign)
                sw.check(("pieri", a, alpha, k), rhs, lhs)
    return sw


def check_owl_corollary(params, rng):
    sw = _Sweep()
    for a in range(2, params["a_max"] + 1):
        eps_words = [
            lam
            for hd in range(0, params["f_dmax"] // 2 + 1)
            for lam in combinat.partitions_of(hd, maxpart=a)
        ]
        monos = _monomials_up_to(a, params["g_dmax"] // 2)
        for lam in eps_words:
            f = oddsym.elementary_word_value(lam, a)
            fw0 = apply_w0(f)
            for m in monos:
                g = SkewPolynomial.monomial(a, m)
                sw.check(
                    ("D(fg) = f^w0 D(g)", a, lam, m),
                    fw0 * oddops.longest_dd(a, g),
                    oddops.longest_dd(a, f * g),
                )
        # second corollary on random polynomials
        allm = _monomials_up_to(a, 3)
        for _ in range(params["random_sweeps"]):
            f = SkewPolynomial.zero(a)
            for m in rng.sample(allm, min(4, len(allm))):
                f = f + SkewPolynomial.monomial(a, m, rng.randint(-3, 3))
            sw.check(
                ("D(f)^w0 = (-1)^C(a,2) D(f^w0)", a, str(f)),
                oddops.longest_dd(a, apply_w0(f)).scale((-1) ** comb(a, 2)),
                apply_w0(oddops.longest_dd(a, f)),
            )
    return sw


def check_da_values(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        sw.check(
            ("D_a(staircase)", a),
            SkewPolynomial.constant(a, (-1) ** comb(a, 3)),
            oddops.longest_dd(a, staircase(a)),
        )
        from .skewpoly import psi_staircase

        sw.check(
            ("D_a(psi staircase)", a),
            SkewPolynomial.constant(a, (-1) ** comb(a + 1, 4)),
            oddops.longest_dd(a, psi_staircase(a)),
        )
    return sw


def check_crossing_slide(params, rng):
    sw = _Sweep()
    for a in range(3, params["a_max"] + 1):
        lhs = onh.OnhElement.from_word(
            a, tuple(-i for i in list(range(a - 2, 0, -1)) + list(range(a - 1, 0, -1)))
        )
        rhs = onh.OnhElement.from_word(
            a, tuple(-i for i in list(range(a - 1, 0, -1)) + list(range(a - 1, 1, -1)))
        )
        sw.require(("crossing slide", a), lhs == rhs)
    return sw


def check_da_slide(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        n = a + 1
        chain = onh.OnhElement.from_word(n, tuple(-i for i in range(a, 0, -1)))
        d_lo = _emb(onh.d_element(a), 0, n)
        d_hi = _emb(onh.d_element(a), 1, n)
        sw.require(
            ("D_a slide", a),
            d_lo * chain == (chain * d_hi).scale((-1) ** comb(a, 3)),
        )
        # alternative definition of D_a
        if a >= 2:
            alt = _emb(onh.d_element(a - 1), 1, a) * onh.OnhElement.from_word(
                a, tuple(-i for i in range(1, a))
            )
            sw.require(("alt def D_a", a), alt == onh.d_element(a))
        # sigma invariance
        sw.require(
            ("sigma(D_a) = D_a", a),
            onh.automorphism_apply("sigma", onh.d_element(a)) == onh.d_element(a),
        )
    return sw


def check_ea_standard(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        sw.require(
            ("e_a = (-1)^C(a,3) x^delta D_a", a),
            onh.idempotent_e(a)
            == (onh.staircase_element(a) * onh.d_element(a)).scale((-1) ** comb(a, 3)),
        )
    for a in range(2, min(params["a_max"], 4) + 1):
        for t in range(params["random_boxes"]):
            f = SkewPolynomial.one(a)
            deg = 0
            while deg < 8:
                k = rng.randint(1, a)
                f = f * oddsym.elementary(k, a)
                deg += 2 * k
                if rng.random() < 0.4:
                    break
            sw.require(
                ("e_a f e_a = e_a f", a, t),
                onh.box(f, a) == onh.idempotent_e(a) * onh.from_polynomial(f),
            )
    return sw


def check_ea_idem(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        ea = onh.idempotent_e(a)
        sw.require(("e_a^2 = e_a", a), ea * ea == ea)
        sw.require(("D_a e_a = D_a", a), onh.d_element(a) * ea == onh.d_element(a))
    # 0-Hecke relations
    for a in range(2, min(params["a_max"], 4) + 1):
        for r in range(1, a):
            z = onh.zero_hecke(a, r)
            sw.require(("0-Hecke idempotent", a, r), z * z == z)
            if r + 1 < a:
                z2 = onh.zero_hecke(a, r + 1)
                sw.require(("0-Hecke braid", a, r), z * z2 * z == z2 * z * z2)
            for s in range(r + 2, a):
                z2 = onh.zero_hecke(a, s)
                sw.require(("0-Hecke distant", a, r, s), z * z2 == z2 * z)
    # absorption of embedded projectors
    for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2)]:
        n = a + b + c
        if n > params["a_max"] + 1:
            continue
        e_n = onh.idempotent_e(n)
        mid = onh.e_embedded(b, a, n)
        sw.require(("absorb above", a, b, c), mid * e_n == e_n)
        sw.require(("absorb below", a, b, c), e_n * mid == e_n)
    # e_a slide (positive direction)
    for a in range(2, min(params["a_max"], 4) + 1):
        n = a + 1
        chain = onh.OnhElement.from_word(n, tuple(-i for i in range(a, 0, -1)))
        sw.require(
            ("e_a slide", a),
            onh.e_embedded(a, 0, n) * chain == chain * onh.e_embedded(a, 1, n),
        )
    return sw


def check_splitter_assoc(params, rng):
    sw = _Sweep()
    total = params["total_max"]
    for a in range(1, total - 1):
        for b in range(1, total - a):
            for c in range(1, total - a - b + 1):
                n = a + b + c
                lhs = _emb(onh.up_splitter(a, b), 0, n) * onh.up_splitter(a + b, c)
                rhs = _emb(onh.up_splitter(b, c), a, n) * onh.up_splitter(a, b + c)
                sign = (-1) ** ((a * b * comb(c, 2)) % 2)
                sw.require(("up-splitter assoc", a, b, c), lhs == rhs.scale(sign))
                e_n = onh.idempotent_e(n)
                sw.require(("merge assoc left", a, b, c), e_n * _emb(onh.idempotent_e(a + b), 0, n) == e_n)
                sw.require(("merge assoc right", a, b, c), e_n * _emb(onh.idempotent_e(b + c), a, n) == e_n)
                # triangle: crossing a c-strand under a splitter
                tcross = onh.OnhElement.from_word(
                    n,
                    onh.shift_word(onh.e_word(a), 0)
                    + onh.shift_word(onh.e_word(c), a)
                    + onh.crossing_word_letters(c, a),
                )
                lhs_t = _emb(onh.idempotent_e(b + c), a, n) * tcross * _emb(onh.up_splitter(a, b), c, n)
                rhs_t = onh.up_splitter(a, b + c) * onh.idempotent_e(n)
                sw.require(("triangle", a, b, c), lhs_t == rhs_t)
    # merge identities for plain crossings
    for (a, b, c) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 2, 1), (2, 1, 2), (1, 1, 3)]:
        n = a + b + c
        if n > total + 1:
            continue
        sw.require(
            ("crossings combine flat", a, b, c),
            onh.crossing_element(a, b + c, 0, n)
            == onh.crossing_element(a, c, b, n) * onh.crossing_element(a, b, 0, n),
        )
        sw.require(
            ("crossings combine signed", a, b, c),
            onh.crossing_element(a + b, c, 0, n)
            == (
                onh.crossing_element(a, c, 0, n) * onh.crossing_element(b, c, a, n)
            ).scale((-1) ** ((a * b * comb(c, 2)) % 2)),
        )
    # D through crossing
    for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)]:
        n = a + b
        if n > total + 1:
            continue
        lhs = _emb(onh.d_element(a), 0, n) * _emb(onh.d_element(b), a, n) * onh.OnhElement.from_word(
            n, onh.crossing_word_letters(b, a)
        )
        sw.require(
            ("D_a D_b over crossing", a, b),
            lhs == onh.d_element(n).scale((-1) ** ((comb(a, 2) * comb(b, 2)) % 2)),
        )
        lhs_m = _emb(onh.d_element(a), 0, n) * _emb(onh.d_element(b), a, n) * onh.OnhElement.from_word(
            n, onh.mirror_crossing_letters(a, b)
        )
        sw.require(("D_a D_b over mirror crossing", a, b), lhs_m == onh.d_element(n))
    return sw


def check_oval(params, rng):
    sw = _Sweep()
    pairs = params["pairs"]
    for (a, b) in pairs:
        n = a + b
        en = onh.idempotent_e(n)
        basis = onh.schubert_basis_list(n)
        envals = [en.evaluate(p) for p in basis]
        parts = combinat.partitions_in_box(a, b)
        sig = {al: onh.sigma_part(al, a, b) for al in parts}
        lam = {al: onh.lambda_part(al, a, b) for al in parts}
        for alpha in parts:
            sw.check(("deg sigma_alpha", a, b, alpha), [2 * sum(alpha) - 2 * a * b], sig[alpha].degrees())
            for beta in parts:
                for i, p in enumerate(basis):
                    v = lam[beta].evaluate(sig[alpha].evaluate(p))
                    want = envals[i] if alpha == beta else SkewPolynomial.zero(n)
                    sw.check(("lambda_beta sigma_alpha", a, b, alpha, beta, i), want, v)
    return sw


def check_dapb(params, rng):
    sw = _Sweep()
    for (a, b) in params["pairs"]:
        for alpha in combinat.partitions_in_box(a, b):
            pa = list(alpha) + [0] * (a - len(alpha))
            for beta in combinat.partitions_in_box(b, a):
                pb = list(beta) + [0] * (b - len(beta))
                exps = tuple(
                    [(a - 1 - j) + pa[j] for j in range(a)]
                    + [j + pb[b - 1 - j] for j in range(b)]
                )
                val = oddops.longest_dd(a + b, SkewPolynomial.monomial(a + b, exps))
                if alpha == combinat.hat_partition(beta, b, a):
                    want = SkewPolynomial.constant(
                        a + b, (-1) ** ((onh.omega(beta, b) + comb(a + b, 3)) % 2)
                    )
                else:
                    want = SkewPolynomial.zero(a + b)
                sw.check(("D_{a+b} dotted", a, b, alpha, beta), want, val)
    return sw


def check_shuffle(params, rng):
    sw = _Sweep()
    for a in (2, 3):
        for i in range(1, a):
            for m in range(0, params["m_max"] + 1):
                for k in range(1, params["k_max"] + 1):

                    def mono(p, q):
                        e = [0] * a
                        e[i - 1], e[i] = p, q
                        return SkewPolynomial.monomial(a, e)

                    lhs = oddops.divided_difference(i, mono(m, m + k))
                    if k == 1:
                        want = oddops.divided_difference(i, mono(m + 1, m)).scale((-1) ** m)
                    elif k % 2 == 0:
                        want = oddops.divided_difference(i, mono(m + k, m)).scale(-1)
                    else:
                        want = (
                            oddops.divided_difference(i, mono(m + k, m)).scale((-1) ** m)
                            - oddops.divided_difference(i, mono(m + k - 1, m + 1))
                            + oddops.divided_difference(i, mono(m + 1, m + k - 1)).scale((-1) ** m)
                        )
                    sw.check(("shuffle", a, i, m, k), want, lhs)
                    if k % 2 == 1:
                        big = oddops.divided_difference(i, mono(m + k, m)).scale((-1) ** m)
                        for j in range(1, k // 2 + 1):
                            big = big - oddops.divided_difference(i, mono(m + k - j, m + j)).scale(
                                2 * (-1) ** ((m * (j + 1)) % 2)
                            )
                        sw.check(("big odd shuffle", a, i, m, k), big, lhs)
    return sw


def check_staircase_vanish(params, rng):
    sw = _Sweep()
    for a in range(2, params["a_max"] + 1):
        for m in range(2, a + 1):
            for p in range(a - (m - 1), a):
                exps = tuple([a - 1 - j for j in range(m - 1)] + [p])
                sw.check(
                    ("partial staircase", a, m, p),
                    SkewPolynomial.zero(m),
                    oddops.longest_dd(m, SkewPolynomial.monomial(m, exps)),
                )
    return sw


def check_add_step(params, rng):
    sw = _Sweep()
    for a in range(2, params["a_max"] + 1):
        exps = tuple([a - 2 - j for j in range(a - 1)] + [a - 1])
        sw.check(
            ("add step", a),
            SkewPolynomial.constant(a, (-1) ** comb(a - 1, 2)),
            oddops.longest_dd(a, SkewPolynomial.monomial(a, exps)),
        )
    return sw


def check_reorder_revstair(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        sw.check(
            ("reverse staircase", a),
            oddops.longest_dd(a, staircase(a)).scale((-1) ** comb(a, 4)),
            oddops.longest_dd(a, reverse_staircase(a)),
        )
    return sw


def check_nil_orth(params, rng):
    sw = _Sweep()
    for a in params["a_list"]:
        ea = onh.idempotent_e(a)
        basis = onh.schubert_basis_list(a)
        eavals = [ea.evaluate(p) for p in basis]
        sq = combinat.enumerate_sq(a)
        sig = {l: onh.sigma_seq(l) for l in sq}
        lam = {l: onh.lambda_seq(l) for l in sq}
        for lp in sq:
            for l in sq:
                for i, p in enumerate(basis):
                    v = lam[lp].evaluate(sig[l].evaluate(p))
                    want = eavals[i] if lp == l else SkewPolynomial.zero(a)
                    sw.check(("lambda sigma", a, lp, l, i), want, v)
    return sw


def check_identity_decomposition(params, rng):
    import math

    sw = _Sweep()
    for a in params["a_list"]:
        basis = onh.schubert_basis_list(a)
        sq = combinat.enumerate_sq(a)
        sw.note(("idempotents at a=%d" % a), math.factorial(a), len(sq))
        sig = {l: onh.sigma_seq(l) for l in sq}
        lam = {l: onh.lambda_seq(l) for l in sq}
        evals = {l: [sig[l].evaluate(lam[l].evaluate(p)) for p in basis] for l in sq}
        for i, p in enumerate(basis):
            tot = SkewPolynomial.zero(a)
            for l in sq:
                tot = tot + evals[l][i]
            sw.check(("sum e_l = 1", a, i), p, tot)
        for l in sq:
            for lp in sq:
                for i, p in enumerate(basis):
                    v = sig[l].evaluate(lam[l].evaluate(evals[lp][i]))
                    want = evals[l][i] if l == lp else SkewPolynomial.zero(a)
                    sw.check(("e_l e_l'", a, l, lp, i), want, v)
    return sw


def check_eaeb_decomposition(params, rng):
    sw = _Sweep()
    for (a, b) in params["pairs"]:
        n = a + b
        basis = onh.schubert_basis_list(n)
        parts = combinat.partitions_in_box(a, b)
        sw.note(("idempotents at (a,b)=(%d,%d)" % (a, b)), comb(n, a), len(parts))
        sig = {al: onh.sigma_part(al, a, b) for al in parts}
        lam = {al: onh.lambda_part(al, a, b) for al in parts}
        eab = onh.e_embedded(a, 0, n) * onh.e_embedded(b, a, n)
        evals = {al: [sig[al].evaluate(lam[al].evaluate(p)) for p in basis] for al in parts}
        for i, p in enumerate(basis):
            tot = SkewPolynomial.zero(n)
            for al in parts:
                tot = tot + evals[al][i]
            sw.check(("sum e_alpha = e_a x e_b", a, b, i), eab.evaluate(p), tot)
        for al in parts:
            for be in parts:
                for i, p in enumerate(basis):
                    v = sig[be].evaluate(lam[be].evaluate(evals[al][i]))
                    want = evals[be][i] if al == be else SkewPolynomial.zero(n)
                    sw.check(("e_beta e_alpha", a, b, al, be, i), want, v)
        ms = sorted(2 * sum(al) - a * b for al in parts)
        sw.check(
            ("degree multiset", a, b),
            qgrade.q_binomial(a + b, a).exponent_multiset(),
            ms,
        )
    return sw


def check_ea_eone(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        n = a + 1
        lhs = onh.e_embedded(a, 0, n)
        tot = onh.OnhElement.zero(n)
        for s in range(0, a + 1):
            term = (
                onh.box_embedded(oddsym.elementary(a - s, a), a, 0, n)
                * onh.up_splitter(a, 1)
                * onh.idempotent_e(n)
                * onh.OnhElement.from_word(n, (n,) * s)
            )
            tot = tot + term
        sw.require(("e_a x 1 expansion", a), lhs == tot.scale((-1) ** comb(a, 2)))
    return sw


def check_center(params, rng):
    sw = _Sweep()
    for a in params["a_list"]:
        gens = [onh.dot(a, r) for r in range(1, a + 1)] + [onh.cross(a, r) for r in range(1, a)]
        for k in range(1, a + 1):
            f = SkewPolynomial.zero(a)
            for subset in itertools.combinations(range(1, a + 1), k):
                e = [0] * a
                for i in subset:
                    e[i - 1] = 2
                f = f + SkewPolynomial.monomial(a, e)
            F = onh.from_polynomial(f)
            for t, g in enumerate(gens):
                sw.require(("central e_k(x^2)", a, k, t), F * g == g * F)
        # power sums of squares, degree <= 8
        for k in (1, 2, 3, 4):
            if 4 * k > 8:
                continue
            f = SkewPolynomial.zero(a)
            for i in range(1, a + 1):
                e = [0] * a
                e[i - 1] = 2 * k
                f = f + SkewPolynomial.monomial(a, e)
            F = onh.from_polynomial(f)
            for t, g in enumerate(gens):
                sw.require(("central p_k(x^2)", a, k, t), F * g == g * F)
    return sw


def check_jacobi_trudi_failure(params, rng):
    sw = _Sweep()
    a = params["a"]
    gens = {("h", k): oddsym.complete(k, a) for k in (1, 2, 3)}
    gens.update({("e", k): oddsym.elementary(k, a) for k in (1, 2, 3)})

    def comps(n):
        if n == 0:
            yield ()
            return
        for p in (1, 2, 3):
            if p <= n:
                for rest in comps(n - p):
                    yield (p,) + rest

    basis = combinat.partitions_of(4, maxpart=a)
    bidx = {lam: i for i, lam in enumerate(basis)}
    rows = []
    for compn in comps(4):
        for flavors in itertools.product("he", repeat=len(compn)):
            f = SkewPolynomial.one(a)
            for fl, k in zip(flavors, compn):
                f = f * gens[(fl, k)]
            row = [0] * len(basis)
            for lam, c in oddsym.expand_in_elementary(f).items():
                row[bidx[lam]] = c
            rows.append(row)
    target = [0] * len(basis)
    target[bidx[(4,)]] = 1
    r1 = cyclotomic.int_rank(rows)
    r2 = cyclotomic.int_rank(rows + [target])
    sw.check(("rank jump certifies eps_4 not in span", a), r1 + 1, r2)
    sw.require(("eps_4 not in lattice", a), not cyclotomic.in_row_lattice(rows, target))
    return sw


def check_schubert_basis(params, rng):
    sw = _Sweep()
    for a in range(2, params["a_max"] + 1):
        monos = sorted(itertools.product(*[range(a - i) for i in range(a)]))
        idx = {m: t for t, m in enumerate(monos)}
        mat = []
        for w in combinat.all_permutations(a):
            sp = oddsym.schubert(w, a)
            row = [0] * len(monos)
            for m, c in sp.terms.items():
                row[idx[m]] = c
            mat.append(row)
        factors = cyclotomic.smith_invariant_factors(mat)
        sw.check(("unimodular Schubert matrix", a), [1] * len(monos), factors)
    return sw


def check_matrix_iso(params, rng):
    sw = _Sweep()
    for a in params["a_list"]:
        sq = combinat.enumerate_sq(a)
        basis = onh.schubert_basis_list(a)
        sig = {l: onh.sigma_seq(l) for l in sq}
        lam = {l: onh.lambda_seq(l) for l in sq}
        lam_vals = {l: [lam[l].evaluate(p) for p in basis] for l in sq}
        e_vals = {
            (l1, l2): [sig[l1].evaluate(v) for v in lam_vals[l2]] for l1 in sq for l2 in sq
        }
        for l1 in sq:
            for l2 in sq:
                for m1 in sq:
                    for m2 in sq:
                        for i in range(len(basis)):
                            v = sig[l1].evaluate(lam[l2].evaluate(e_vals[(m1, m2)][i]))
                            want = (
                                e_vals[(l1, m2)][i]
                                if l2 == m1
                                else SkewPolynomial.zero(a)
                            )
                            sw.check(("matrix units", a, l1, l2, m1, m2, i), want, v)
    return sw


def check_grassmann_recursion(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        mat = cyclotomic.grassmann_matrix(a)
        for j in range(1, a + 1):
            sw.check(
                ("first column", a, j),
                oddsym.elementary(j, a).scale((-1) ** comb(j - 1, 2)),
                mat[j - 1][0],
            )
        for k in range(0, params["n_max"] + 1):
            sw.check(
                ("z_k", a, k),
                oddsym.complete(k, a).scale((-1) ** comb(k + 1, 2)),
                cyclotomic.z_poly(k, a),
            )
        for n_param in range(a, params["n_max"] + 1):
            col = cyclotomic.grassmann_power_column(a, n_param)
            if n_param - a >= 1:
                sw.check(
                    ("f_1 vanishes", a, n_param),
                    SkewPolynomial.zero(a),
                    cyclotomic.series_relation(a, n_param, 1),
                )
            for j in range(1, a + 1):
                want = cyclotomic.series_relation(a, n_param, n_param - a + j).scale(
                    (-1) ** comb(n_param - a + j - 1, 2)
                )
                sw.check(("M^{N-a+1} v entry", a, n_param, j), want, col[j - 1])
    return sw


def check_oh_rank(params, rng):
    sw = _Sweep()
    for (a, n_param) in params["pairs"]:
        q = cyclotomic.quotient_graded_rank(a, n_param)
        sw.check(("total rank", a, n_param), comb(n_param, a), q.at_one())
        centered = q * qgrade.QLaurent.q_power(-a * (n_param - a))
        sw.require(("palindromic", a, n_param), centered.is_bar_invariant())
        sw.check(
            ("matches balanced q-binomial", a, n_param),
            qgrade.q_cardinality_box(a, n_param - a),
            centered,
        )
        for d in range(0, cyclotomic.default_dmax(a, n_param) + 1, 2):
            sl = cyclotomic.ideal_degree_slice(a, n_param, d)
            sw.require(("torsion-free slice", a, n_param, d), sl.is_torsion_free())
        # first-column ideal comparison (small a only: a=2 mandated)
        if a == 2 and n_param <= 5:
            for d in range(0, cyclotomic.default_dmax(a, n_param) + 1, 2):
                s1 = cyclotomic.ideal_degree_slice(a, n_param, d)
                s2 = cyclotomic.first_column_degree_slice(a, n_param, d)
                sw.check(("h-ideal = column ideal", a, n_param, d), s1.hermite, s2.hermite)
    return sw


def check_schur_box(params, rng):
    sw = _Sweep()
    for (a, n_param) in params["pairs"]:
        rep = cyclotomic.schur_box_images(a, n_param)
        for lam, okv in rep["vanishing"]:
            sw.require(("outside Schur vanishes", a, n_param, lam), okv)
        for d, oki in rep["independent_per_degree"].items():
            sw.require(("box Schurs independent", a, n_param, d), oki)
        sw.require(
            ("s_empty nonzero", a, n_param),
            cyclotomic.ideal_degree_slice(a, n_param, 0).quotient_rank == 1,
        )
    return sw


def check_mod2(params, rng):
    sw = _Sweep()
    for a in range(1, params["a_max"] + 1):
        for k in range(0, min(a, 4) + 1):
            sw.check(
                ("eps_k mod 2", a, k),
                evenoracle.to_gf2(evenoracle.even_elementary(k, a), a),
                oddsym.mod2_reduction(oddsym.elementary(k, a)),
            )
        for k in range(0, params["deg_max"] // 2 + 1):
            sw.check(
                ("h_k mod 2", a, k),
                evenoracle.to_gf2(evenoracle.even_complete(k, a), a),
                oddsym.mod2_reduction(oddsym.complete(k, a)),
            )
        for alpha in combinat.partitions_in_box(min(a, 2), 2):
            sw.check(
                ("schur mod 2", a, alpha),
                evenoracle.to_gf2(evenoracle.even_schur(alpha, a), a),
                oddsym.mod2_reduction(oddsym.schur(alpha, a)),
            )
        # skew multiplication reduces to commutative multiplication mod 2
        allm = _monomials_up_to(a, 2)
        for _ in range(params["random_sweeps"]):
            f = SkewPolynomial.zero(a)
            g = SkewPolynomial.zero(a)
            for m in rng.sample(allm, min(3, len(allm))):
                f = f + SkewPolynomial.monomial(a, m, rng.randint(-2, 2))
            for m in rng.sample(allm, min(3, len(allm))):
                g = g + SkewPolynomial.monomial(a, m, rng.randint(-2, 2))
            lhs = oddsym.mod2_reduction(f * g)
            rhs = oddsym.mod2_reduction(f) * oddsym.mod2_reduction(g)
            sw.check(("multiply mod 2", a, str(f), str(g)), rhs, lhs)
    for (a, n_param) in params["quotient_pairs"]:
        for d in range(0, 2 * a * (n_param - a) + 1, 2):
            sw.check(
                ("OH rank mod 2 oracle", a, n_param, d),
                evenoracle.even_quotient_rank_gf2(a, n_param, d // 2),
                cyclotomic.ideal_degree_slice(a, n_param, d).quotient_rank,
            )
    return sw


def check_sentinel_mirror_ea_slide(params, rng):
    sw = _Sweep()
    for a in range(2, params["a_max"] + 1):
        n = a + 1
        chain = onh.OnhElement.from_word(n, tuple(-i for i in range(a, 0, -1)))
        lhs = onh.e_embedded(a, 1, n) * chain
        rhs = chain * onh.e_embedded(a, 0, n)
        # this SHOULD differ; finding a witness makes the sentinel "fail"
        basis = onh.schubert_basis_list(n)
        for i, p in enumerate(basis):
            vl, vr = lhs.evaluate(p), rhs.evaluate(p)
            if vl != vr:
                sw.instances += 1
                sw.failures.append(
                    _triple(("mirror slide witness", a, i), str(vr), str(vl))
                )
                break
        else:
            sw.instances += 1
    return sw


def check_sentinel_x1sq_central(params, rng):
    sw = _Sweep()
    a = params["a"]
    F = onh.from_polynomial(SkewPolynomial.monomial(a, tuple([2] + [0] * (a - 1))))
    d1 = onh.cross(a, 1)
    lhs, rhs = F * d1, d1 * F
    basis = onh.schubert_basis_list(a)
    for i, p in enumerate(basis):
        vl, vr = lhs.evaluate(p), rhs.evaluate(p)
        if vl != vr:
            sw.instances += 1
            sw.failures.append(_triple(("x_1^2 commutator witness", a, i), str(vl), str(vr)))
            break
    else:
        sw.instances += 1
    return sw


# ---------------------------------------------------------------------------
# registry


REGISTRY = {
    "defining_relations": (check_defining_relations, {"a_list": [2, 3, 4], "dmax": 8}),
    "e_h_relation": (check_e_h_relation, {"a_max": 5, "m_max": 8}),
    "eps_relations": (check_eps_relations, {"a_max": 5, "m_max": 5}),
    "pieri": (check_pieri, {"a_list": [3, 4], "rows": 3, "cols": 3, "k_max": 3}),
    "owl_corollary": (check_owl_corollary, {"a_max": 4, "f_dmax": 8, "g_dmax": 6, "random_sweeps": 10}),
    "da_values": (check_da_values, {"a_max": 5}),
    "crossing_slide": (check_crossing_slide, {"a_max": 5}),
    "da_slide": (check_da_slide, {"a_max": 5}),
    "ea_standard": (check_ea_standard, {"a_max": 5, "random_boxes": 20}),
    "ea_idem": (check_ea_idem, {"a_max": 5}),
    "splitter_assoc": (check_splitter_assoc, {"total_max": 4}),
    "oval": (check_oval, {"pairs": [(1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (2, 2)]}),
    "dapb": (check_dapb, {"pairs": [(1, 1), (2, 1), (2, 2), (2, 3)]}),
    "shuffle": (check_shuffle, {"m_max": 4, "k_max": 4}),
    "staircase_vanish": (check_staircase_vanish, {"a_max": 5}),
    "add_step": (check_add_step, {"a_max": 5}),
    "reorder_revstair": (check_reorder_revstair, {"a_max": 5}),
    "nil_orth": (check_nil_orth, {"a_list": [2, 3, 4]}),
    "identity_decomposition": (check_identity_decomposition, {"a_list": [2, 3, 4]}),
    "eaeb_decomposition": (check_eaeb_decomposition, {"pairs": [(1, 1), (2, 1), (1, 2), (2, 2)]}),
    "ea_eone": (check_ea_eone, {"a_max": 4}),
    "center": (check_center, {"a_list": [2, 3]}),
    "jacobi_trudi_failure": (check_jacobi_trudi_failure, {"a": 6}),
    "schubert_basis": (check_schubert_basis, {"a_max": 4}),
    "matrix_iso": (check_matrix_iso, {"a_list": [2, 3]}),
    "grassmann_recursion": (check_grassmann_recursion, {"a_max": 3, "n_max": 6}),
    "oh_rank": (check_oh_rank, {"pairs": [(1, 3), (2, 3), (2, 4), (3, 4), (2, 5)]}),
    "schur_box": (check_schur_box, {"pairs": [(2, 3), (2, 4)]}),
    "mod2": (check_mod2, {"a_max": 4, "deg_max": 8, "random_sweeps": 10, "quotient_pairs": [(1, 3), (2, 3), (2, 4), (3, 4)]}),
    "sentinel_mirror_ea_slide": (check_sentinel_mirror_ea_slide, {"a_max": 4}),
    "sentinel_x1sq_central": (check_sentinel_x1sq_central, {"a": 2}),
}

# sentinels are must-fail by design
EXPECTED_STATUS = {cid: "pass" for cid in REGISTRY}
EXPECTED_STATUS["sentinel_mirror_ea_slide"] = "fail"
EXPECTED_STATUS["sentinel_x1sq_central"] = "fail"

ENVELOPE = {"a": 5, "ab_total": 5, "N": 6, "degree": 12}


def _envelope_violation(params):
    if params.get("a_max", 0) > ENVELOPE["a"]:
        return "a_max=%d exceeds a <= %d" % (params["a_max"], ENVELOPE["a"])
    # single-a checks (Jacobi-Trudi runs at 6 by design)
    if params.get("a", 0) > 6:
        return "a=%d exceeds the supported envelope" % params["a"]
    if any(v > ENVELOPE["a"] for v in params.get("a_list", [])):
        return "a_list=%r exceeds a <= %d" % (params["a_list"], ENVELOPE["a"])
    for pr in params.get("pairs", []):
        if isinstance(pr, (list, tuple)) and len(pr) == 2:
            x, y = pr
            if params.get("pair_kind") == "aN":
                if x > ENVELOPE["a"] or y > ENVELOPE["N"]:
                    return "pair %r exceeds a <= %d, N <= %d" % (pr, ENVELOPE["a"], ENVELOPE["N"])
            elif x + y > ENVELOPE["ab_total"]:
                return "pair %r exceeds a+b <= %d" % (pr, ENVELOPE["ab_total"])
    for key in ("dmax", "deg_max", "f_dmax"):
        if params.get(key, 0) > ENVELOPE["degree"]:
            return "%s=%d exceeds degree <= %d" % (key, params[key], ENVELOPE["degree"])
    if params.get("n_max", 0) > ENVELOPE["N"]:
        return "n_max=%d exceeds N <= %d" % (params["n_max"], ENVELOPE["N"])
    if params.get("total_max", 0) > ENVELOPE["ab_total"]:
        return "total_max=%d exceeds a+b+c <= %d" % (params["total_max"], ENVELOPE["ab_total"])
    return None


def check_ids():
    return list(REGISTRY)


def params_from_flags(check_id, a=None, b=None, n_param=None, dmax=None):
    """Translate the generic CLI flags onto a check's own parameters."""
    defaults = default_params(check_id)
    out = {}
    if a is not None:
        if "a" in defaults:
            out["a"] = a
        elif "a_max" in defaults:
            out["a_max"] = a
        elif "a_list" in defaults:
            out["a_list"] = [a]
        elif "pairs" in defaults and b is not None:
            out["pairs"] = [(a, b)]
        elif "pairs" in defaults and n_param is not None:
            out["pairs"] = [(a, n_param)]
        elif "total_max" in defaults:
            out["total_max"] = a
        else:
            raise ValueError("check %r does not take --a" % check_id)
    if b is not None and "pairs" not in out:
        raise ValueError("--b needs a check indexed by (a, b) pairs, with --a")
    if n_param is not None:
        if "n_max" in defaults:
            out["n_max"] = n_param
        elif "pairs" in defaults and "pairs" not in out and a is not None:
            out["pairs"] = [(a, n_param)]
        elif "pairs" not in out and "quotient_pairs" not in defaults:
            raise ValueError("check %r does not take --N" % check_id)
    if dmax is not None:
        for key in ("dmax", "deg_max", "f_dmax", "m_max"):
            if key in defaults:
                out[key] = dmax
                break
        else:
            raise ValueError("check %r does not take --dmax" % check_id)
    return out


_AB_PAIR_CHECKS = {"oval", "eaeb_decomposition", "dapb"}
_AN_PAIR_CHECKS = {"oh_rank", "schur_box"}


def params_for_max_rank(check_id, max_rank):
    """Clamp a check's default sweep to thickness <= max_rank."""
    defaults = default_params(check_id)
    out = {}
    if "a_max" in defaults:
        out["a_max"] = min(defaults["a_max"], max_rank)
    if "a_list" in defaults:
        lst = [v for v in defaults["a_list"] if v <= max_rank]
        out["a_list"] = lst or [min(defaults["a_list"])]
    if "pairs" in defaults:
        if check_id in _AB_PAIR_CHECKS:
            kept = [p for p in defaults["pairs"] if p[0] + p[1] <= max_rank + 1]
        else:
            kept = [p for p in defaults["pairs"] if p[0] <= max_rank]
        out["pairs"] = kept or defaults["pairs"][:1]
    if "total_max" in defaults:
        out["total_max"] = min(defaults["total_max"], max_rank + 1)
    if "quotient_pairs" in defaults:
        out["quotient_pairs"] = [
            p for p in defaults["quotient_pairs"] if p[0] <= max_rank
        ] or defaults["quotient_pairs"][:1]
    return out


def default_params(check_id):
    if check_id not in REGISTRY:
        raise UnknownCheckError("unknown check id %r" % check_id)
    return dict(REGISTRY[check_id][1])


def run_check(check_id, params=None, seed=DEFAULT_SEED):
    if check_id not in REGISTRY:
        raise UnknownCheckError("unknown check id %r" % check_id)
    fn, defaults = REGISTRY[check_id]
    merged = dict(defaults)
    if params:
        for k, v in params.items():
            if k not in defaults:
                raise ValueError("check %r has no parameter %r" % (check_id, k))
            merged[k] = v
    probe = dict(merged)
    if check_id in _AN_PAIR_CHECKS:
        probe["pair_kind"] = "aN"
    reason = _envelope_violation(probe)
    start = time.perf_counter()
    if reason is not None:
        return CheckReport(check_id, merged, "skipped", [_triple("envelope", "within limits", reason)], seed)
    rng = random.Random("%s:%s" % (seed, check_id))
    sweep = fn(merged, rng)
    wall = time.perf_counter() - start
    status = "pass" if sweep.passed else "fail"
    details = sweep.failures[:32] if sweep.failures else list(sweep.notes)
    return CheckReport(check_id, merged, status, details, seed, wall, sweep.instances)


def _run_one(args):
    return run_check(*args)


def run_many(ids, params=None, seed=DEFAULT_SEED, parallel=1):
    jobs = [(cid, params, seed) for cid in ids]
    if parallel > 1 and len(jobs) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return results


def all_match_expected(reports):
    return all(r.status == EXPECTED_STATUS.get(r.check_id, "pass") for r in reports)


def reports_to_json(reports, deterministic=True):
    return json.dumps(
        [r.to_json_dict(deterministic=deterministic) for r in reports],
        indent=2,
        sort_keys=True,
    )
