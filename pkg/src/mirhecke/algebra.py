"""The mirabolic Hecke algebra: exact arithmetic in the standard basis.

The rank-n algebra is generated by braid generators T_1..T_{n-1} (quadratic
relation T_i^2 = (q-1)T_i + q) and idempotents P_1..P_n, with P_j absorbing
lower braid letters up to sign (P_j T_i = T_i P_j = -P_j for i < j) and
commuting with higher ones.  Its standard basis is indexed by triples
(A, B, w): the element is T_A * P_k * T_w * T_B^{-1} where T_A and T_B are
canonical shuffle words attached to the k-subsets A and B and w fixes 1..k.

Normal forms are computed through an internal *working basis* of elements
T_A * P_k * T_d, with d running over the minimal-length representatives of
the cosets S_k \\ S_n.  In that basis the generator actions are local:

- right multiplication by T_i is the usual two-term Hecke step followed by
  re-minimizing d (each discarded S_k-letter contributes a sign, since
  P_k T_j = -P_k for j < k);
- right multiplication by P_1 follows from the closed form
  P_k T_k T_{k-1} ... T_1 P_1
    = sum_{j=1}^{k-1} (-q)^{j-1}(q-1) P_k T_k...T_{j+1}
      + (-q)^{k-1}(q-1) P_k + (-1)^k q^k P_{k+1},
  obtained by repeatedly rewriting P_j T_j P_j = (q-1)P_j - q P_{j+1}.

Conversion between the working and standard bases is unitriangular with
respect to permutation length (the tail T_w T_B^{-1} expands as
q^{-len} T_{w c_B^{-1}} plus strictly shorter terms), so both directions are
exact over Z[q, q^-1].  Higher idempotents appearing in input words are
first expanded through P_j = -P_{j-1} T_{j-1}^{-1} P_{j-1}.

All coefficients live in Z[v, v^-1] with q = v^2; purely algebraic
computations stay in even v-exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .combinatorics import (
    BasisIndex,
    Permutation,
    apply_left_s,
    apply_right_s,
    identity_perm,
    iter_standard_basis,
    pcompose,
    pinverse,
    plength,
    reduced_word,
)
from .ring import LaurentScalar, MINUS_ONE, ONE, Q, QINV, Q_MINUS_1, ZERO

# a generator letter is ("T", i, +1 | -1) or ("P", j)
Letter = tuple
_MINUS_QINV_QM1 = MINUS_ONE * QINV * Q_MINUS_1
_MINUS_Q = -Q


class GeneratorWord:
    """A word in the generators T_i, T_i^-1 (1 <= i <= n-1) and P_j (1 <= j <= n)."""

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Letter]):
        self.n = n
        self.letters = tuple(letters)
        for lt in self.letters:
            if lt[0] == "T":
                _, i, e = lt
                if not (1 <= i <= n - 1) or e not in (1, -1):
                    raise ValueError(f"bad letter {lt} for rank {n}")
            elif lt[0] == "P":
                _, j = lt
                if not (1 <= j <= n):
                    raise ValueError(f"bad letter {lt} for rank {n}")
            else:
                raise ValueError(f"unknown letter {lt}")

    def reversed(self) -> "GeneratorWord":
        return GeneratorWord(self.n, tuple(reversed(self.letters)))

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorWord)
            and self.n == other.n
            and self.letters == other.letters
        )

    def __repr__(self):
        def fmt(lt):
            if lt[0] == "P":
                return f"P{lt[1]}"
            return f"T{lt[1]}" + ("" if lt[2] == 1 else "^-1")

        return " ".join(fmt(lt) for lt in self.letters) or "1"


# ---------------------------------------------------------------------------
# permutation scaffolding for the working basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cycle_perm(n: int, m: int, i: int) -> Permutation:
    """Permutation of the word T_{m-1} T_{m-2} ... T_i: i -> m, t -> t-1 on (i, m]."""
    out = list(range(1, n + 1))
    if m > i:
        out[i - 1] = m
        for t in range(i + 1, m + 1):
            out[t - 1] = t - 1
    return tuple(out)


@lru_cache(maxsize=None)
def _subset_perm(n: int, A: tuple[int, ...]) -> Permutation:
    """The permutation of the word T_A: j -> a_j on 1..k, increasing elsewhere."""
    k = len(A)
    rest = [x for x in range(1, n + 1) if x not in set(A)]
    return tuple(A) + tuple(rest) if k else tuple(rest)


def _subset_word(A: tuple[int, ...]) -> tuple[int, ...]:
    """Letters of T_A = T_{a_1,1} T_{a_2,2} ... (1-based T indices)."""
    letters = []
    for j, a in enumerate(A, start=1):
        letters.extend(range(a - 1, j - 1, -1))
    return tuple(letters)


def _absorb(k: int, u: Permutation) -> tuple[int, Permutation]:
    """Split u = u1 * d with u1 in S_k and d minimal in the coset S_k u.

    Returns ((-1)^length(u1), d); multiplying P_k by the S_k-part contributes
    exactly that sign.
    """
    if k <= 1:
        return 1, u
    inv = pinverse(u)
    seq = inv[:k]
    sign = 1
    for a in range(k):
        for b in range(a + 1, k):
            if seq[a] > seq[b]:
                sign = -sign
    order = sorted(range(k), key=lambda t: seq[t])
    relabel = [0] * (k + 1)
    for t, jm1 in enumerate(order):
        relabel[jm1 + 1] = t + 1
    d = tuple(relabel[a] if a <= k else a for a in u)
    return sign, d


# ---------------------------------------------------------------------------
# plain Hecke arithmetic on {T_u : u in S_n}
# ---------------------------------------------------------------------------


def _hecke_rmul_letter(terms: dict, i: int, inv: bool) -> dict:
    out: dict[Permutation, LaurentScalar] = {}

    def acc(key, val):
        s = out.get(key)
        s = val if s is None else s + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for u, c in terms.items():
        u2 = apply_right_s(u, i)
        ascent = u[i - 1] < u[i]
        if not inv:
            if ascent:
                acc(u2, c)
            else:
                acc(u, c * Q_MINUS_1)
                acc(u2, c * Q)
        else:
            if not ascent:
                acc(u2, c)
            else:
                acc(u2, c * QINV)
                acc(u, c * _MINUS_QINV_QM1)
    return out


def _hecke_rmul_perm(terms: dict, d: Permutation) -> dict:
    for i in reduced_word(d):
        terms = _hecke_rmul_letter(terms, i, inv=False)
    return terms


# ---------------------------------------------------------------------------
# the working-basis engine
# ---------------------------------------------------------------------------

# working element: {(A, d): LaurentScalar}; k = len(A), rank = len(d)

_P1_CACHE: dict = {}
_LMUL_CACHE: dict = {}
_TAIL_CACHE: dict = {}
_TO_WORKING_CACHE: dict = {}


def clear_caches() -> None:
    """Drop all memoized engine state (useful in long-running processes)."""
    _P1_CACHE.clear()
    _LMUL_CACHE.clear()
    _TAIL_CACHE.clear()
    _TO_WORKING_CACHE.clear()


def _acc(elem: dict, key, val: LaurentScalar) -> None:
    s = elem.get(key)
    s = val if s is None else s + val
    if s:
        elem[key] = s
    else:
        elem.pop(key, None)


def _w_rmul_T(elem: dict, i: int, inv: bool) -> dict:
    out: dict = {}
    for (A, d), c in elem.items():
        k = len(A)
        d2 = apply_right_s(d, i)
        ascent = d[i - 1] < d[i]
        if not inv:
            branches = ((d2, ONE),) if ascent else ((d, Q_MINUS_1), (d2, Q))
        else:
            branches = ((d2, ONE),) if not ascent else ((d2, QINV), (d, _MINUS_QINV_QM1))
        for u, s in branches:
            if u is d:
                _acc(out, (A, d), c * s)
            else:
                sign, dd = _absorb(k, u)
                val = c * s
                _acc(out, (A, dd), -val if sign < 0 else val)
    return out


def _w_lmul_T_key(i: int, A: tuple, d: Permutation) -> dict:
    """T_i * (T_A P_k T_d) expanded in the working basis (memoized)."""
    key = (i, A, d)
    hit = _LMUL_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(d)
    k = len(A)
    cA = _subset_perm(n, A)
    cAinv = pinverse(cA)
    ascent = cAinv[i - 1] < cAinv[i]
    x2 = apply_left_s(cA, i)
    branches = ((x2, ONE),) if ascent else ((cA, Q_MINUS_1), (x2, Q))
    out: dict = {}
    for x, s in branches:
        if x == cA:
            _acc(out, (A, d), s)
            continue
        head = x[:k]
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if head[a] > head[b]:
                    sign = -sign
        A2 = tuple(sorted(head))
        e = A2 + x[k:]
        wt = pcompose(pinverse(_subset_perm(n, A2)), e)
        hecke = _hecke_rmul_perm({wt: ONE}, d)
        for u, su in hecke.items():
            sg2, dd = _absorb(k, u)
            val = s * su
            _acc(out, (A2, dd), -val if sign * sg2 < 0 else val)
    _LMUL_CACHE[key] = out
    return out


def _w_lmul_T(elem: dict, i: int) -> dict:
    out: dict = {}
    for (A, d), c in elem.items():
        for key, s in _w_lmul_T_key(i, A, d).items():
            _acc(out, key, c * s)
    return out


def _w_rmul_P1_key(A: tuple, d: Permutation) -> dict:
    """(T_A P_k T_d) * P_1 expanded in the working basis (memoized)."""
    key = (A, d)
    hit = _P1_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(d)
    k = len(A)
    m = d[0]
    z = pcompose(pinverse(_cycle_perm(n, m, 1)), d)
    out: dict = {}
    if k >= 1 and m <= k:
        sign, dd = _absorb(k, z)
        if (m - 1) % 2:
            sign = -sign
        out[(A, dd)] = ONE if sign > 0 else MINUS_ONE
    elif k == 0:
        out[((m,), z)] = ONE
    else:
        # tail terms of T_{m,k+1} E_k T_z before the left word is applied
        base: dict = {}
        Ak = tuple(range(1, k + 1))
        Ak1 = tuple(range(1, k + 2))
        coeff = Q_MINUS_1
        for j in range(1, k):
            hecke = _hecke_rmul_perm({_cycle_perm(n, k + 1, j + 1): ONE}, z)
            for u, su in hecke.items():
                sign, dd = _absorb(k, u)
                val = coeff * su
                _acc(base, (Ak, dd), -val if sign < 0 else val)
            coeff = coeff * _MINUS_Q
        sign, dd = _absorb(k, z)
        _acc(base, (Ak, dd), -coeff if sign < 0 else coeff)
        coeffp = _MINUS_Q**k
        sign, dd = _absorb(k + 1, z)
        _acc(base, (Ak1, dd), -coeffp if sign < 0 else coeffp)
        word = _subset_word(A) + tuple(range(m - 1, k, -1))
        for i in reversed(word):
            base = _w_lmul_T(base, i)
        out = base
    _P1_CACHE[key] = out
    return out


@lru_cache(maxsize=None)
def _pi_expansion(j: int) -> tuple[int, tuple[Letter, ...]]:
    """P_j as (sign, word) over {P_1, T_i^-1}: P_j = sign * product(word)."""
    if j == 1:
        return 1, (("P", 1),)
    _, prev = _pi_expansion(j - 1)
    return -1, prev + (("T", j - 1, -1),) + prev


def _w_rmul_letter(elem: dict, letter: Letter) -> dict:
    if letter[0] == "T":
        return _w_rmul_T(elem, letter[1], letter[2] == -1)
    j = letter[1]
    if j == 1:
        out: dict = {}
        for (A, d), c in elem.items():
            for key, s in _w_rmul_P1_key(A, d).items():
                _acc(out, key, c * s)
        return out
    sign, word = _pi_expansion(j)
    for lt in word:
        elem = _w_rmul_letter(elem, lt)
    if sign < 0:
        elem = {key: -c for key, c in elem.items()}
    return elem


# -- working <-> standard conversion ----------------------------------------


def _tail_expansion(B: tuple, w: Permutation) -> dict:
    """P_k (T_w T_B^{-1}) as {d: coeff} over minimal coset representatives."""
    key = (B, w)
    hit = _TAIL_CACHE.get(key)
    if hit is not None:
        return hit
    k = len(B)
    terms = {w: ONE}
    for j in range(k, 0, -1):
        for t in range(j, B[j - 1]):
            terms = _hecke_rmul_letter(terms, t, inv=True)
    out: dict = {}
    for u, c in terms.items():
        sign, d = _absorb(k, u)
        _acc(out, d, -c if sign < 0 else c)
    _TAIL_CACHE[key] = out
    return out


def _to_working(idx: BasisIndex) -> dict:
    hit = _TO_WORKING_CACHE.get(idx)
    if hit is not None:
        return hit
    out = {(idx.A, d): c for d, c in _tail_expansion(idx.B, idx.w).items()}
    _TO_WORKING_CACHE[idx] = out
    return out


def _to_standard(welem: dict) -> dict:
    """Greedy unitriangular elimination from the working to the standard basis."""
    out: dict[BasisIndex, LaurentScalar] = {}
    work = dict(welem)
    guard = 0
    while work:
        guard += 1
        if guard > 10_000_000:
            raise AssertionError("normal-form elimination failed to terminate")
        A, d = max(work, key=lambda kd: (plength(kd[1]), kd[1], kd[0]))
        k = len(A)
        n = len(d)
        dinv = pinverse(d)
        B = dinv[:k]
        w = pcompose(d, _subset_perm(n, B))
        idx = BasisIndex(A, B, w)
        tail = _tail_expansion(B, w)
        lead = tail[d]
        if not lead.is_unit():
            raise AssertionError(f"non-unit leading coefficient for {idx}")
        coeff = work[(A, d)] * lead.inverse_unit()
        _acc(out, idx, coeff)
        ld = plength(d)
        for d2, s in tail.items():
            if d2 != d and plength(d2) >= ld:
                raise AssertionError("length triangularity violated")
            _acc(work, (A, d2), -(coeff * s))
    return out


# ---------------------------------------------------------------------------
# public element type and operations
# ---------------------------------------------------------------------------


def _canonical_key(idx: BasisIndex):
    return (idx.k, idx.A, idx.B, idx.w)


@dataclass
class AlgebraElement:
    """A linear combination of standard basis elements of the rank-n algebra.

    Immutable by convention: all operations return fresh elements; term maps
    are never mutated after construction.
    """

    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {i: c for i, c in self.terms.items() if c}
        for idx in self.terms:
            if idx.n != self.n:
                raise ValueError(f"index {idx} has wrong rank (expected {self.n})")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, idx: BasisIndex) -> LaurentScalar:
        return self.terms.get(idx, ZERO)

    def support(self) -> list[BasisIndex]:
        return sorted(self.terms, key=_canonical_key)

    def scale(self, s: LaurentScalar | int) -> "AlgebraElement":
        if isinstance(s, int):
            s = LaurentScalar.from_int(s)
        if not s:
            return AlgebraElement(self.n, {})
        return AlgebraElement(self.n, {i: c * s for i, c in self.terms.items()})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for i, c in other.terms.items():
            _acc(terms, i, c)
        return AlgebraElement(self.n, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "AlgebraElement(0)"
        bits = []
        for idx in self.support():
            c = self.terms[idx]
            bits.append(f"({c.to_string()})*T[A={list(idx.A)},B={list(idx.B)},w={list(idx.w)}]")
        return "AlgebraElement(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"index": idx.to_json(), "coeff": self.terms[idx].to_json()}
                for idx in self.support()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        terms = {
            BasisIndex.from_json(t["index"]): LaurentScalar.from_json(t["coeff"])
            for t in obj["terms"]
        }
        return cls(obj["n"], terms)


def identity_element(n: int) -> AlgebraElement:
    idx = BasisIndex((), (), identity_perm(n))
    return AlgebraElement(n, {idx: ONE})


def basis_element(idx: BasisIndex) -> AlgebraElement:
    return AlgebraElement(idx.n, {idx: ONE})


def gen_T(n: int, i: int, power: int = 1) -> AlgebraElement:
    return reduce_word(GeneratorWord(n, [("T", i, power)]))


def gen_P(n: int, j: int) -> AlgebraElement:
    return reduce_word(GeneratorWord(n, [("P", j)]))


def t0_element(n: int) -> AlgebraElement:
    """The affine generator expressed through P_1: q(1 - P_1) - 1."""
    return identity_element(n).scale(Q_MINUS_1) - gen_P(n, 1).scale(Q)


def basis_word(idx: BasisIndex) -> GeneratorWord:
    """The defining word T_A P_k T_w T_B^{-1} of a standard basis element."""
    n = idx.n
    k = idx.k
    letters: list[Letter] = [("T", i, 1) for i in _subset_word(idx.A)]
    if k >= 1:
        letters.append(("P", k))
    letters.extend(("T", i, 1) for i in reduced_word(idx.w))
    for j in range(k, 0, -1):
        letters.extend(("T", t, -1) for t in range(j, idx.B[j - 1]))
    return GeneratorWord(n, letters)


def _finish(n: int, welem: dict, check_even: bool = True) -> AlgebraElement:
    out = AlgebraElement(n, _to_standard(welem))
    # intrinsic computations on even inputs never leave the Z[q, q^-1] subring
    if check_even:
        assert even_exponent_ok(out), f"odd v-exponent escaped the engine: {out!r}"
    return out


def reduce_word(word: GeneratorWord) -> AlgebraElement:
    """Normal form of a product of generators, starting from the identity."""
    elem = {((), identity_perm(word.n)): ONE}
    for lt in word:
        elem = _w_rmul_letter(elem, lt)
    return _finish(word.n, elem)


def rmul_gen(x: AlgebraElement, letter: Letter) -> AlgebraElement:
    """Right multiplication x * g for a single generator letter g."""
    GeneratorWord(x.n, [letter])  # validate
    welem: dict = {}
    for idx, c in x.terms.items():
        for key, s in _to_working(idx).items():
            _acc(welem, key, c * s)
    welem = _w_rmul_letter(welem, letter)
    return _finish(x.n, welem, check_even=even_exponent_ok(x))


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Exact product x * y in basis normal form."""
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} != {y.n}")
    xw: dict = {}
    for idx, c in x.terms.items():
        for key, s in _to_working(idx).items():
            _acc(xw, key, c * s)
    total: dict = {}
    for idx, c in y.terms.items():
        cur = xw
        for lt in basis_word(idx):
            cur = _w_rmul_letter(cur, lt)
        for key, s in cur.items():
            _acc(total, key, c * s)
    return _finish(x.n, total, check_even=even_exponent_ok(x) and even_exponent_ok(y))


def hat_T(n: int, mu) -> AlgebraElement:
    """The cocenter representative attached to a partition or composition mu.

    This is P_{n-|mu|} followed by the long-cycle braid word of each part of
    mu, acting on consecutive blocks after an identity prefix of length
    n - |mu|.  The empty mu gives P_n; mu of full size n has no idempotent.
    """
    parts = tuple(int(a) for a in mu)
    if any(a < 1 for a in parts):
        raise ValueError(f"parts must be >= 1: {parts}")
    k = sum(parts)
    if k > n:
        raise ValueError(f"|mu| = {k} exceeds n = {n}")
    letters: list[Letter] = []
    if n - k >= 1:
        letters.append(("P", n - k))
    offset = n - k
    for a in parts:
        letters.extend(("T", t, 1) for t in range(offset + 1, offset + a))
        offset += a
    return reduce_word(GeneratorWord(n, letters))


def iota_embed(x: AlgebraElement) -> AlgebraElement:
    """The index-shifting embedding of rank n-1 into rank n (T_i -> T_{i+1}, P_j -> P_{j+1}).

    On the standard basis this relabels (A, B, w) to ({1} u (A+1), {1} u (B+1),
    shifted w) for k >= 1 and to (0, 0, shifted w) for k = 0.
    """
    n = x.n + 1
    if n < 2:
        raise ValueError("rank must be >= 2 after embedding")
    terms = {}
    for idx, c in x.terms.items():
        w2 = (1,) + tuple(a + 1 for a in idx.w)
        if idx.k == 0:
            terms[BasisIndex((), (), w2)] = c
        else:
            A2 = (1,) + tuple(a + 1 for a in idx.A)
            B2 = (1,) + tuple(a + 1 for a in idx.B)
            terms[BasisIndex(A2, B2, w2)] = c
    return AlgebraElement(n, terms)


def rho(x: AlgebraElement) -> AlgebraElement:
    """The corner embedding T_i -> P_1 T_{i+1}, P_j -> P_{j+1} of rank n-1 into rank n.

    Images of basis elements are basis elements: (A, B, w) maps to
    ({1} u (A+1), {1} u (B+1), shifted w) with unit coefficient.
    """
    n = x.n + 1
    terms = {}
    for idx, c in x.terms.items():
        w2 = (1,) + tuple(a + 1 for a in idx.w)
        A2 = (1,) + tuple(a + 1 for a in idx.A)
        B2 = (1,) + tuple(a + 1 for a in idx.B)
        terms[BasisIndex(A2, B2, w2)] = c
    return AlgebraElement(n, terms)


def star(x: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism fixing every generator (word reversal)."""
    out = AlgebraElement(x.n, {})
    for idx, c in x.terms.items():
        out = out + reduce_word(basis_word(idx).reversed()).scale(c)
    return out


# ---------------------------------------------------------------------------
# relation verification harness
# ---------------------------------------------------------------------------


def check_relations(n: int) -> list[dict]:
    """Evaluate every defining relation through the rewrite engine.

    Returns one report entry per relation instance; failures are entries
    with status "fail", never exceptions.
    """
    one = identity_element(n)
    t0 = t0_element(n)
    T = {i: gen_T(n, i) for i in range(1, n)}
    P = {j: gen_P(n, j) for j in range(1, n + 1)}
    reports: list[dict] = []

    def record(name: str, diff: AlgebraElement):
        reports.append(
            {
                "relation": name,
                "n": n,
                "status": "pass" if diff.is_zero() else "fail",
                "witness": None if diff.is_zero() else repr(diff),
            }
        )

    q, qm1 = Q, Q_MINUS_1
    record(
        "T0^2 = (q-2)T0 + (q-1)",
        mul(t0, t0) - t0.scale(q - LaurentScalar.from_int(2)) - one.scale(qm1),
    )
    for i in range(1, n):
        record(
            f"T{i}^2 = (q-1)T{i} + q",
            mul(T[i], T[i]) - T[i].scale(qm1) - one.scale(q),
        )
    for i in range(0, n - 1):
        for j in range(i + 2, n):
            a = t0 if i == 0 else T[i]
            record(f"T{i}T{j} = T{j}T{i}", mul(a, T[j]) - mul(T[j], a))
    for i in range(1, n - 1):
        record(
            f"T{i}T{i+1}T{i} = T{i+1}T{i}T{i+1}",
            mul(mul(T[i], T[i + 1]), T[i]) - mul(mul(T[i + 1], T[i]), T[i + 1]),
        )
    if n >= 2:
        t1 = T[1]
        lhs = mul(mul(mul(t0, t1), t0), t1)
        rhs = (mul(mul(t1, t0), t1) + mul(t1, t0)).scale(qm1) - mul(mul(t0, t1), t0)
        record("T0T1T0T1 = (q-1)(T1T0T1 + T1T0) - T0T1T0", lhs - rhs)
        lhs = mul(mul(mul(t1, t0), t1), t0)
        rhs = (mul(mul(t1, t0), t1) + mul(t0, t1)).scale(qm1) - mul(mul(t0, t1), t0)
        record("T1T0T1T0 = (q-1)(T1T0T1 + T0T1) - T0T1T0", lhs - rhs)
    for i in range(1, n + 1):
        record(f"P{i}^2 = P{i}", mul(P[i], P[i]) - P[i])
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            record(f"P{i}P{j} = P{i}", mul(P[i], P[j]) - P[i])
            record(f"P{j}P{i} = P{i}", mul(P[j], P[i]) - P[i])
    for i in range(1, n + 1):
        for j in range(1, n):
            if i < j:
                record(f"P{i}T{j} = T{j}P{i}", mul(P[i], T[j]) - mul(T[j], P[i]))
            elif j < i:
                record(f"P{i}T{j} = -P{i}", mul(P[i], T[j]) + P[i])
                record(f"T{j}P{i} = -P{i}", mul(T[j], P[i]) + P[i])
    for i in range(2, n + 1):
        record(
            f"P{i} = -P{i-1}T{i-1}^-1 P{i-1}",
            P[i] + mul(mul(P[i - 1], gen_T(n, i - 1, -1)), P[i - 1]),
        )
    return reports


def relations_all_pass(reports: list[dict]) -> bool:
    return all(r["status"] == "pass" for r in reports)


def even_exponent_ok(x: AlgebraElement) -> bool:
    """Intrinsic computations must stay in the Z[q, q^-1] subring."""
    return all(c.is_even() for c in x.terms.values())


def all_basis_elements(n: int) -> list[AlgebraElement]:
    return [basis_element(idx) for idx in iter_standard_basis(n)]
