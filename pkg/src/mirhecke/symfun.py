"""Symmetric polynomials in r variables over the Laurent scalar ring.

A `SymPoly` stores a symmetric polynomial in x_1..x_r as a finitely
supported map from partitions to coefficients, in the monomial basis
m_lambda.  The Schur basis is a triangular view through Kostka numbers, so
`schur_expand` is exact elimination by dominance order.

The character theory lives in two one-parameter families evaluated at
(x_1, ..., x_r, 1):

- `qtilde(m, r)`: the weighted trace of a long braid cycle on m tensor
  factors, equal to sum over partitions mu of m of
  (-1)^(m - len(mu)) (q-1)^(len(mu)-1) m_mu;
- `g_poly(m, r)`: the weakly-increasing-sequence sum with weights
  q^(#equal adjacents) (q-1)^(#strict ascents).

They are exchanged by q -> q^-1 up to the factor (-q)^(m-1); that identity
and the generating-function description are exposed as exact checks.  The
strip Pieri rule `pieri_qtilde` expands qtilde * schur through strip weights
and is always verifiable against the brute-force product expansion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import Partition, check_partition, contains, kostka, partitions_of
from .ring import LaurentScalar, MINUS_ONE, ONE, Q, Q_MINUS_1, ZERO


class SchurExpandError(ValueError):
    """Raised when a polynomial cannot be written in the Schur span."""


@dataclass
class SymPoly:
    """A symmetric polynomial in r variables, monomial-basis coefficients."""

    r: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, c in self.terms.items():
            mu = check_partition(mu)
            if len(mu) > self.r:
                raise ValueError(f"partition {mu} has more than r={self.r} parts")
            if c:
                clean[mu] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mu) -> LaurentScalar:
        return self.terms.get(tuple(mu), ZERO)

    def scale(self, s: LaurentScalar | int) -> "SymPoly":
        if isinstance(s, int):
            s = LaurentScalar.from_int(s)
        if not s:
            return SymPoly(self.r, {})
        return SymPoly(self.r, {mu: c * s for mu, c in self.terms.items()})

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.r != other.r:
            raise ValueError("variable-count mismatch")
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            s = terms.get(mu, ZERO) + c
            if s:
                terms[mu] = s
            else:
                terms.pop(mu, None)
        return SymPoly(self.r, terms)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        return mul_sym(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.r == other.r and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "SymPoly(0)"
        bits = [
            f"({self.terms[mu].to_string()})*m{list(mu)}"
            for mu in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True)
        ]
        return "SymPoly(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        order = sorted(self.terms, key=lambda t: (sum(t), [-a for a in t]))
        return {
            "r": self.r,
            "basis": "m",
            "terms": [
                {"partition": list(mu), "coeff": self.terms[mu].to_json()} for mu in order
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymPoly":
        r = obj["r"]
        coeffs = {
            tuple(t["partition"]): LaurentScalar.from_json(t["coeff"]) for t in obj["terms"]
        }
        if obj.get("basis", "m") == "m":
            return cls(r, coeffs)
        return from_schur_coeffs(coeffs, r)


def sym_zero(r: int) -> SymPoly:
    return SymPoly(r, {})


def sym_one(r: int) -> SymPoly:
    return SymPoly(r, {(): ONE})


def m_sym(mu, r: int) -> SymPoly:
    """The monomial symmetric polynomial m_mu(x_1..x_r)."""
    mu = check_partition(mu)
    if len(mu) > r:
        raise ValueError(f"m_sym needs len(mu) <= r, got {mu} with r={r}")
    return SymPoly(r, {mu: ONE})


def schur(lam, r: int) -> SymPoly:
    """The Schur polynomial s_lam(x_1..x_r); zero when lam has more than r rows."""
    lam = check_partition(lam)
    if len(lam) > r:
        return sym_zero(r)
    terms = {}
    for mu in partitions_of(sum(lam)):
        if len(mu) > r:
            continue
        k = kostka(lam, mu)
        if k:
            terms[mu] = LaurentScalar.from_int(k)
    return SymPoly(r, terms)


# ---------------------------------------------------------------------------
# monomial-level expansion (products)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _m_monomials(mu: Partition, r: int) -> tuple:
    """All distinct exponent vectors of m_mu in r variables."""
    padded = tuple(mu) + (0,) * (r - len(mu))
    return tuple(sorted(set(itertools.permutations(padded))))


def _to_monomials(p: SymPoly) -> dict:
    out = {}
    for mu, c in p.terms.items():
        for e in _m_monomials(mu, p.r):
            out[e] = c
    return out


def _from_monomials(monos: dict, r: int) -> SymPoly:
    """Fold an exponent-vector dict into partition keys, checking symmetry."""
    terms: dict[Partition, LaurentScalar] = {}
    for e, c in monos.items():
        if not c:
            continue
        key = tuple(sorted((a for a in e if a), reverse=True))
        prev = terms.get(key)
        if prev is None:
            terms[key] = c
        elif prev != c:
            raise AssertionError(f"asymmetric coefficients on orbit of {key}")
    total = sum(len(_m_monomials(mu, r)) for mu in terms)
    if total != sum(1 for c in monos.values() if c):
        raise AssertionError("incomplete monomial orbit: polynomial is not symmetric")
    return SymPoly(r, terms)


def mul_sym(p: SymPoly, q: SymPoly) -> SymPoly:
    if p.r != q.r:
        raise ValueError(f"variable-count mismatch: {p.r} != {q.r}")
    if p.is_zero() or q.is_zero():
        return sym_zero(p.r)
    a = _to_monomials(p)
    b = _to_monomials(q)
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e)
            s = c1 * c2 if s is None else s + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return _from_monomials(out, p.r)


def schur_expand(p: SymPoly) -> dict:
    """Write p = sum c_lam s_lam(x_1..x_r); returns {lam: c_lam}.

    Elimination proceeds from the lexicographically largest partition in
    each degree; unitriangularity of the Kostka matrix (K_{ll} = 1) makes
    this exact.
    """
    rem = dict(p.terms)
    out: dict[Partition, LaurentScalar] = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 100_000:
            raise SchurExpandError("Schur elimination failed to terminate")
        kappa = max(rem, key=lambda t: (sum(t), t))
        c = rem[kappa]
        out[kappa] = c
        for mu, k in schur(kappa, p.r).terms.items():
            s = rem.get(mu, ZERO) - c * k
            if s:
                rem[mu] = s
            else:
                rem.pop(mu, None)
        if kappa in rem:
            raise SchurExpandError(f"head term {kappa} did not eliminate")
    return out


def from_schur_coeffs(coeffs: dict, r: int) -> SymPoly:
    out = sym_zero(r)
    for lam, c in coeffs.items():
        out = out + schur(lam, r).scale(c)
    return out


# ---------------------------------------------------------------------------
# the Hall-Littlewood-type families at (x_1..x_r, 1)
# ---------------------------------------------------------------------------


def _m_with_trailing_one(mu: Partition, r: int) -> SymPoly:
    """m_mu(x_1, ..., x_r, 1): delete at most one part into the extra slot."""
    terms: dict[Partition, LaurentScalar] = {}
    if len(mu) <= r:
        terms[mu] = ONE
    for a in sorted(set(mu)):
        nu = list(mu)
        nu.remove(a)
        nu_t = tuple(nu)
        if len(nu_t) <= r:
            terms[nu_t] = terms.get(nu_t, ZERO) + ONE
    return SymPoly(r, terms)


def qtilde(m: int, r: int) -> SymPoly:
    """The normalized Hall-Littlewood generator evaluated at (x_1..x_r, 1).

    qtilde(0) is 1 by convention (empty product of parts).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return sym_one(r)
    out = sym_zero(r)
    for mu in partitions_of(m):
        ell = len(mu)
        coeff = Q_MINUS_1 ** (ell - 1)
        if (m - ell) % 2:
            coeff = -coeff
        out = out + _m_with_trailing_one(mu, r).scale(coeff)
    return out


def qtilde_mu(mu, r: int) -> SymPoly:
    """Product of qtilde over the parts of mu (partition or composition)."""
    out = sym_one(r)
    for a in mu:
        out = mul_sym(out, qtilde(int(a), r))
    return out


def g_poly(m: int, r: int) -> SymPoly:
    """The ascent-weighted sequence sum g_m evaluated at (x_1..x_r, 1).

    Sums q^(#equal adjacent pairs) (q-1)^(#strict ascents) over weakly
    increasing sequences in {1..r+1}, the last letter standing for the
    variable specialized to 1.  g_0 = 1.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return sym_one(r)
    monos: dict = {}
    for seq in itertools.combinations_with_replacement(range(1, r + 2), m):
        e_cnt = sum(1 for a in range(m - 1) if seq[a] == seq[a + 1])
        g_cnt = sum(1 for a in range(m - 1) if seq[a] < seq[a + 1])
        coeff = LaurentScalar.q_power(e_cnt) * Q_MINUS_1**g_cnt
        expo = [0] * r
        for v in seq:
            if v <= r:
                expo[v - 1] += 1
        e = tuple(expo)
        s = monos.get(e, ZERO) + coeff
        if s:
            monos[e] = s
        else:
            monos.pop(e, None)
    return _from_monomials(monos, r)


def _bar_coeffs(p: SymPoly) -> SymPoly:
    """Apply q -> q^-1 to every coefficient (variables untouched)."""
    return SymPoly(p.r, {mu: c.bar() for mu, c in p.terms.items()})


def _neg_q_pow(e: int) -> LaurentScalar:
    s = LaurentScalar.q_power(e)
    return -s if e % 2 else s


def check_two_symmetric(m: int, r: int) -> bool:
    """Exact identity qtilde_m(y; q) = (-q)^(m-1) g_m(y; q^-1), m >= 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    rhs = _bar_coeffs(g_poly(m, r)).scale(_neg_q_pow(m - 1))
    return qtilde(m, r) == rhs


# ---------------------------------------------------------------------------
# independent reconstructions of qtilde (verification routes)
# ---------------------------------------------------------------------------


def qtilde_from_sequences(m: int, r: int) -> SymPoly:
    """qtilde via the weakly decreasing sequence sum (descent-weighted)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    monos: dict = {}
    for inc in itertools.combinations_with_replacement(range(1, r + 2), m):
        seq = tuple(reversed(inc))
        e_cnt = sum(1 for a in range(m - 1) if seq[a] == seq[a + 1])
        g_cnt = sum(1 for a in range(m - 1) if seq[a] > seq[a + 1])
        coeff = Q_MINUS_1**g_cnt
        if e_cnt % 2:
            coeff = -coeff
        expo = [0] * r
        for v in seq:
            if v <= r:
                expo[v - 1] += 1
        e = tuple(expo)
        s = monos.get(e, ZERO) + coeff
        if s:
            monos[e] = s
        else:
            monos.pop(e, None)
    return _from_monomials(monos, r)


def hl_q_from_generating(m: int, r: int) -> SymPoly:
    """The y^m coefficient of prod_{i=1}^{r+1} (1 - q x_i y)/(1 - x_i y), x_{r+1} = 1.

    Each factor expands as 1 + (1-q) sum_{j>=1} (x_i y)^j; the product is
    truncated at y-degree m.
    """
    one_minus_q = -Q_MINUS_1
    width = r + 1
    series: list[dict] = [{(0,) * r: ONE}] + [{} for _ in range(m)]
    for i in range(1, width + 1):
        factor: list[dict] = []
        for j in range(m + 1):
            if j == 0:
                factor.append({(0,) * r: ONE})
            else:
                expo = [0] * r
                if i <= r:
                    expo[i - 1] = j
                factor.append({tuple(expo): one_minus_q})
        new: list[dict] = [{} for _ in range(m + 1)]
        for d1, c1 in enumerate(series):
            for e1, a1 in c1.items():
                for d2 in range(m + 1 - d1):
                    for e2, a2 in factor[d2].items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        tgt = new[d1 + d2]
                        s = tgt.get(e, ZERO) + a1 * a2
                        if s:
                            tgt[e] = s
                        else:
                            tgt.pop(e, None)
        series = new
    return _from_monomials(series[m], r)


def check_generating(m: int, r: int) -> bool:
    """Exact cross-multiplied identity (q-1) qtilde_m = (-1)^m q_m from the product."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lhs = qtilde(m, r).scale(Q_MINUS_1)
    rhs = hl_q_from_generating(m, r)
    if m % 2:
        rhs = rhs.scale(-1)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the strip Pieri rule
# ---------------------------------------------------------------------------


def _strip_supersets(nu: Partition, m: int, r: int):
    """Partitions lam containing nu with |lam/nu| <= m and at most r rows."""
    if len(nu) > r:
        return
    max_rows = min(r, len(nu) + m)

    def gen(i: int, remaining: int, prefix: tuple):
        if i == max_rows:
            yield prefix
            return
        lo = nu[i] if i < len(nu) else 0
        hi = min(prefix[-1] if prefix else lo + remaining, lo + remaining)
        for a in range(hi, max(lo, 1) - 1, -1):
            yield from gen(i + 1, remaining - (a - lo), prefix + (a,))
        if lo == 0:
            # end the diagram at row i
            yield prefix

    yield from gen(0, m, ())


def pieri_qtilde(m: int, nu, r: int, variant: str = "oracle") -> dict:
    """Schur coefficients of qtilde_m * s_nu via the strip expansion.

    Sums the transition coefficient g_{t,m} times the inverted strip weight
    over all strips lam/nu of size t <= m.  The result must agree with the
    brute-force `schur_expand(mul_sym(qtilde(m, r), schur(nu, r)))`; the
    "paper" variant of the transition coefficients is provided for the
    documented comparison and fails that oracle at m = 2.
    """
    from . import characters

    nu = check_partition(nu)
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return {nu: ONE} if len(nu) <= r else {}
    out: dict[Partition, LaurentScalar] = {}
    for lam in _strip_supersets(nu, m, r):
        wt = characters.wtbar(lam, nu)
        if not wt:
            continue
        t = sum(lam) - sum(nu)
        c = characters.g_coeff(t, m, variant) * wt
        if c:
            out[lam] = c
    return out


def pieri_bruteforce(m: int, nu, r: int) -> dict:
    """Independent oracle: expand the product and read off Schur coefficients."""
    nu = check_partition(nu)
    return schur_expand(mul_sym(qtilde(m, r), schur(nu, r)))
