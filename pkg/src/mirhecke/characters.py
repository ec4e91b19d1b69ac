"""Irreducible characters of the mirabolic Hecke algebra.

Rows of the character table are labelled by pairs (lambda, k) with lambda a
partition of k <= n; columns by the cocenter representatives attached to
partitions mu of size <= n.  Entries are computed by a recursion that strips
the last (smallest) part m of mu and sums over all ways of removing a strip
of size at most m from lambda:

    chi[lam](mu) = sum_nu g(|lam/nu|, m) * wtbar(lam, nu) * chi[nu](mu - last part)

with the base case chi[lam](empty) = [lam == empty].

`wtbar` is the q -> q^-1 inversion of the classical strip weight; the empty
strip has weight 1 (the Pieri oracle at m = 1 forces that convention).

The transition coefficients g(t, m) ship in two variants.  The default
"oracle" variant is (-q)^(m-1) f(t, m) with f evaluated at q^-1, which is
what the substitution of the two-parameter symmetry into the classical
Pieri expansion actually produces, and it passes the brute-force product
oracle for every tested size.  The "paper" variant reproduces a published
case list that fails that oracle at m = 2 (kept selectable so the
discrepancy is demonstrable, never used by default).

Class polynomials express any standard basis element through the cocenter
representatives: the coefficient vector is the unique solution of the linear
system given by the character table against the Schur-Weyl trace oracle, and
it must come out Laurent-polynomial (denominators clear exactly).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .combinatorics import BasisIndex, Partition, check_partition, partitions_up_to, strip_data
from .ring import LaurentScalar, ONE, Q_MINUS_1, ZERO, solve_linear

G_VARIANTS = ("oracle", "paper")


class ClassPolynomialDefect(RuntimeError):
    """Raised when a class-polynomial solution is not Laurent-polynomial."""


# ---------------------------------------------------------------------------
# strip weights and transition coefficients
# ---------------------------------------------------------------------------


def _neg_q_pow(e: int) -> LaurentScalar:
    s = LaurentScalar.q_power(e)
    return -s if e % 2 else s


def wtbar(lam, nu) -> LaurentScalar:
    """The inverted strip weight of lam/nu.

    Zero when lam/nu is not a strip; 1 when lam == nu; otherwise
    (-q)^(1 - size) (q-1)^(cc - 1) prod_b q^(rows(b)-1) (-1)^(cols(b)-1)
    over connected components b.
    """
    data = strip_data(check_partition(lam), check_partition(nu))
    if not data.is_strip:
        return ZERO
    if data.size == 0:
        return ONE
    out = _neg_q_pow(1 - data.size) * Q_MINUS_1 ** (data.cc - 1)
    for ro, co in data.components:
        out = out * LaurentScalar.q_power(ro - 1)
        if (co - 1) % 2:
            out = -out
    return out


def g_coeff(t: int, m: int, variant: str = "oracle") -> LaurentScalar:
    """Transition coefficient g_{t,m}(q) of the strip Pieri rule, m >= 1.

    oracle: t=0 -> (-1)^(m-1); 0<t<m -> (-1)^m (q-1) q^(t-1); t=m -> (-q)^(m-1).
    paper:  t=0 -> (-1)^m q;   0<t<m -> (-1)^(m-t+1) (q-1);   t=m -> 1.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= t <= m:
        raise ValueError(f"t = {t} out of range 0..{m}")
    if variant not in G_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "oracle":
        if t == 0:
            return LaurentScalar.from_int(-1 if (m - 1) % 2 else 1)
        if t == m:
            return _neg_q_pow(m - 1)
        out = Q_MINUS_1 * LaurentScalar.q_power(t - 1)
        return -out if m % 2 else out
    if t == 0:
        out = LaurentScalar.q_power(1)
        return -out if m % 2 else out
    if t == m:
        return ONE
    return -Q_MINUS_1 if (m - t + 1) % 2 else Q_MINUS_1


# ---------------------------------------------------------------------------
# the recursive character engine
# ---------------------------------------------------------------------------

_MN_CACHE: dict = {}
_CACHE_LOADED = False


def cache_dir() -> Path:
    return Path(os.environ.get("MIRHECKE_CACHE", ".mirhecke-cache"))


def _cache_key(variant: str, n: int, lam, mu) -> str:
    return f"{variant}|{n}|{partition_string(lam)}|{partition_string(mu)}"


def load_mn_cache() -> int:
    """Merge the on-disk memo into the in-process cache; returns entries read."""
    global _CACHE_LOADED
    _CACHE_LOADED = True
    path = cache_dir() / "mn_characters.json"
    try:
        raw = json.loads(path.read_text())
    except (OSError, ValueError):
        return 0
    count = 0
    for key, val in raw.items():
        try:
            variant, ns, ls, ms = key.split("|")
            tup = (variant, int(ns), parse_partition(ls), parse_partition(ms))
            _MN_CACHE[tup] = LaurentScalar.from_json(val)
            count += 1
        except (ValueError, KeyError, TypeError):
            continue
    return count


def save_mn_cache() -> int:
    """Write the in-process memo to disk; returns entries written."""
    path = cache_dir() / "mn_characters.json"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            _cache_key(variant, n, lam, mu): _MN_CACHE[(variant, n, lam, mu)].to_json()
            for (variant, n, lam, mu) in sorted(_MN_CACHE)
        }
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(path)
        return len(payload)
    except OSError:
        return 0


def mn_character(n: int, lam, mu, variant: str = "oracle") -> LaurentScalar:
    """Character value chi[(lam, |lam|)] on the representative of mu, rank n.

    The recursion removes the last part of mu; removing any other part gives
    the same value (see `mn_character_removing_first` for the cross-check).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) > n or sum(mu) > n:
        raise ValueError(f"|lam| and |mu| must be <= n = {n}")
    return _mn(n, lam, mu, variant, last=True)


def _mn(n: int, lam: Partition, mu: Partition, variant: str, last: bool) -> LaurentScalar:
    if not mu:
        return ONE if not lam else ZERO
    key = (variant, n, lam, mu) if last else (variant + "!first", n, lam, mu)
    hit = _MN_CACHE.get(key)
    if hit is not None:
        return hit
    if last:
        m, rest = mu[-1], mu[:-1]
    else:
        m, rest = mu[0], mu[1:]
    total = ZERO
    for nu in _strip_subsets(lam, m):
        if sum(nu) > n - m:
            continue
        w = wtbar(lam, nu)
        if not w:
            continue
        t = sum(lam) - sum(nu)
        total = total + g_coeff(t, m, variant) * w * _mn(n - m, nu, rest, variant, last)
    _MN_CACHE[key] = total
    return total


def mn_character_removing_first(n: int, lam, mu, variant: str = "oracle") -> LaurentScalar:
    """Cross-check mode: the same recursion stripping the first (largest) part."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) > n or sum(mu) > n:
        raise ValueError(f"|lam| and |mu| must be <= n = {n}")
    return _mn(n, lam, mu, variant, last=False)


def _strip_subsets(lam: Partition, m: int):
    """Partitions nu inside lam with lam/nu a strip of size <= m."""

    def gen(i: int, removed: int, prefix: tuple):
        if i == len(lam):
            yield prefix
            return
        hi = lam[i]
        lo = max(hi - (m - removed), 0)
        for a in range(hi, lo - 1, -1):
            if prefix and a > prefix[-1]:
                continue
            yield from gen(i + 1, removed + hi - a, prefix + (a,))

    # over-enumerates all sub-diagrams with <= m boxes removed; the strip
    # condition is decided by strip_data, not re-encoded here
    for nu_raw in gen(0, 0, ()):
        nu = tuple(a for a in nu_raw if a)
        if strip_data(lam, nu).is_strip:
            yield nu


# ---------------------------------------------------------------------------
# the character table
# ---------------------------------------------------------------------------


@dataclass
class CharacterTable:
    """Square table of character values, rows and columns in canonical order."""

    n: int
    labels: list
    entries: dict  # (row partition, col partition) -> LaurentScalar
    variant: str = "oracle"

    def value(self, lam, mu) -> LaurentScalar:
        return self.entries[(tuple(lam), tuple(mu))]

    def matrix(self) -> list:
        return [[self.entries[(lam, mu)] for mu in self.labels] for lam in self.labels]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "labels": [partition_string(p) for p in self.labels],
            "entries": [
                [self.entries[(lam, mu)].to_json() for mu in self.labels]
                for lam in self.labels
            ],
        }

    def to_csv(self) -> str:
        lines = ["lambda\\mu," + ",".join(partition_string(p) for p in self.labels)]
        for lam in self.labels:
            cells = [self.entries[(lam, mu)].to_string() for mu in self.labels]
            lines.append(partition_string(lam) + "," + ",".join(cells))
        return "\n".join(lines) + "\n"


def character_table(n: int, variant: str = "oracle", jobs: int = 1) -> CharacterTable:
    """The full table of chi[(lam, |lam|)] on the mu-representatives, |lam|, |mu| <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not _CACHE_LOADED:
        load_mn_cache()
    labels = partitions_up_to(n)
    pairs = [(lam, mu) for lam in labels for mu in labels]
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vals = list(pool.map(lambda p: mn_character(n, p[0], p[1], variant), pairs))
        entries = {pair: val for pair, val in zip(pairs, vals)}
    else:
        entries = {(lam, mu): mn_character(n, lam, mu, variant) for lam, mu in pairs}
    save_mn_cache()
    return CharacterTable(n, labels, entries, variant)


def vanishing_check(n: int) -> bool:
    """True iff every entry with |lam| > |mu| is exactly zero."""
    table = character_table(n)
    return all(
        table.entries[(lam, mu)].is_zero()
        for lam in table.labels
        for mu in table.labels
        if sum(lam) > sum(mu)
    )


def table_determinant_at(table: CharacterTable, q0) -> "Fraction":
    """Determinant of the table specialized at a rational q0 (entries are even)."""
    from fractions import Fraction

    size = len(table.labels)
    m = [
        [table.entries[(lam, mu)].specialize(q0) for mu in table.labels]
        for lam in table.labels
    ]
    det = Fraction(1)
    for k in range(size):
        piv = None
        for i in range(k, size):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = Fraction(1) / m[k][k]
        for i in range(k + 1, size):
            f = m[i][k] * inv
            if f:
                for j in range(k, size):
                    m[i][j] -= f * m[k][j]
    return det


# ---------------------------------------------------------------------------
# class polynomials
# ---------------------------------------------------------------------------


@dataclass
class ClassPolyVector:
    """Coefficients expressing a basis element through the cocenter representatives."""

    index: BasisIndex
    coeffs: dict  # partition -> LaurentScalar

    def to_json(self) -> dict:
        order = sorted(self.coeffs, key=lambda p: (sum(p), [-a for a in p]))
        return {
            "index": self.index.to_json(),
            "f": {partition_string(p): self.coeffs[p].to_json() for p in order},
        }


def class_polynomials(
    n: int, idx: BasisIndex, table: CharacterTable | None = None
) -> ClassPolyVector:
    """Solve for the coefficients f with chi[lam](T_idx) = sum_mu f[mu] chi[lam](mu-rep).

    The right side comes from the independent tensor trace oracle at r = n;
    the solution is exact over the fraction field and must clear to Laurent
    polynomials (a non-polynomial solution is a defect, not a result).
    """
    from . import tensorrep
    from .algebra import basis_element

    if idx.n != n:
        raise ValueError("index rank mismatch")
    if table is None:
        table = character_table(n)
    labels = table.labels
    traces = tensorrep.char_oracle(basis_element(idx), r=n)
    matrix = [[table.entries[(lam, mu)] for mu in labels] for lam in labels]
    rhs = [traces.get(lam, ZERO) for lam in labels]
    sol = solve_linear(matrix, rhs)
    coeffs = {}
    for mu, f in zip(labels, sol):
        if f.is_zero():
            continue
        if not f.is_laurent():
            raise ClassPolynomialDefect(f"non-polynomial coefficient at {mu}: {f!r}")
        coeffs[mu] = f.as_laurent()
    return ClassPolyVector(idx, coeffs)


# ---------------------------------------------------------------------------
# partition strings (CSV-safe, dot-separated)
# ---------------------------------------------------------------------------


def partition_string(p) -> str:
    p = tuple(p)
    return ".".join(str(a) for a in p) if p else "0"


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if s in ("", "0"):
        return ()
    try:
        parts = tuple(int(a) for a in s.split("."))
    except ValueError as exc:
        raise ValueError(f"bad partition string {s!r}") from exc
    return check_partition(parts)
