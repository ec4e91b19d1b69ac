"""Partitions, skew strips, Kostka numbers, permutations, and basis indices.

Partitions are plain tuples of weakly decreasing positive ints (the empty
tuple is the partition of 0), so they can key dictionaries everywhere.
Permutations are tuples of images `(w(1), ..., w(n))` with 1-based values and
compose right-to-left: `pcompose(u, v)(x) = u(v(x))`.

The standard basis of the rank-n algebra is indexed by triples (A, B, w)
with A, B equal-size subsets of {1..n} and w a permutation fixing 1..k
pointwise (k = |A|); `standard_basis(n)` enumerates them in a fixed order so
serialized output is byte-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, lru_cache
from math import comb, factorial

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


class ContainmentError(ValueError):
    """Raised when a skew shape lambda/nu is requested with nu not inside lambda."""


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def check_partition(parts) -> Partition:
    p = tuple(int(a) for a in parts)
    if any(a <= 0 for a in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


@cache
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k, lexicographically descending ((k) first, (1^k) last)."""
    if k < 0:
        return ()
    if k == 0:
        return ((),)

    def gen(remaining: int, maxpart: int, prefix: tuple):
        if remaining == 0:
            yield prefix
            return
        for a in range(min(remaining, maxpart), 0, -1):
            yield from gen(remaining - a, a, prefix + (a,))

    return tuple(gen(k, k, ()))


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of every k <= n, graded by size then lex-descending."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def contains(lam: Partition, nu: Partition) -> bool:
    """Componentwise containment nu subset-of lambda of Young diagrams."""
    if len(nu) > len(lam):
        return False
    return all(nu[i] <= lam[i] for i in range(len(nu)))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for a in lam:
        for j in range(a):
            out[j] += 1
    return tuple(out)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


# ---------------------------------------------------------------------------
# skew strips
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewStripData:
    """Strip analysis of a skew shape lambda/nu.

    A strip is a skew diagram containing no 2x2 block of boxes; its connected
    components (boxes joined edge-to-edge) are recorded as (rows occupied,
    columns occupied) pairs, ordered top to bottom.  The empty shape is a
    strip with size 0 and cc = 0.
    """

    is_strip: bool
    size: int
    cc: int
    components: tuple[tuple[int, int], ...]


def _skew_boxes(lam: Partition, nu: Partition) -> list[tuple[int, int]]:
    boxes = []
    for i, a in enumerate(lam):
        lo = nu[i] if i < len(nu) else 0
        boxes.extend((i + 1, j) for j in range(lo + 1, a + 1))
    return boxes


def strip_data(lam: Partition, nu: Partition) -> SkewStripData:
    lam = check_partition(lam)
    nu = check_partition(nu)
    if not contains(lam, nu):
        raise ContainmentError(f"{nu} is not contained in {lam}")
    boxes = _skew_boxes(lam, nu)
    if not boxes:
        return SkewStripData(True, 0, 0, ())
    box_set = set(boxes)
    has_block = any(
        (i, j + 1) in box_set and (i + 1, j) in box_set and (i + 1, j + 1) in box_set
        for (i, j) in box_set
    )
    # connected components by shared edges
    seen: set[tuple[int, int]] = set()
    comps = []
    for b in boxes:
        if b in seen:
            continue
        stack = [b]
        comp = set()
        while stack:
            i, j = stack.pop()
            if (i, j) in comp:
                continue
            comp.add((i, j))
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if nb in box_set and nb not in comp:
                    stack.append(nb)
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: min(i for i, _ in c))
    data = tuple(
        (len({i for i, _ in c}), len({j for _, j in c})) for c in comps
    )
    return SkewStripData(not has_block, len(boxes), len(comps), data)


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Computed by peeling the horizontal strip of the largest entry; the cache
    is shared process-wide (lru_cache insertion is atomic per key).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if not lam:
        return 1
    if not dominates(lam, mu):
        return 0
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strip_removals(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strip_removals(lam: Partition, m: int):
    """Partitions nu inside lam with lam/nu a horizontal strip of size m."""

    def gen(i: int, remaining: int, prefix: list[int]):
        if i == len(lam):
            if remaining == 0:
                yield check_partition([a for a in prefix if a])
            return
        below = lam[i + 1] if i + 1 < len(lam) else 0
        hi = lam[i]
        lo = max(below, lam[i] - remaining)
        # horizontal strip: nu_i >= lam_{i+1}
        for nu_i in range(hi, lo - 1, -1):
            if prefix and nu_i > prefix[-1]:
                continue
            yield from gen(i + 1, remaining - (lam[i] - nu_i), prefix + [nu_i])

    yield from gen(0, m, [])


def count_ssyt(lam: Partition, max_entry: int) -> int:
    """Number of SSYT of shape lam with entries <= max_entry (test oracle aid)."""
    total = 0
    for mu in partitions_of(sum(lam)):
        if len(mu) > max_entry:
            continue
        total += kostka(lam, mu) * _n_rearrangements(mu, max_entry)
    return total


def _n_rearrangements(mu: Partition, r: int) -> int:
    """Number of distinct compositions of length r with parts a rearrangement of mu."""
    counts = {}
    for a in mu:
        counts[a] = counts.get(a, 0) + 1
    if len(mu) > r:
        return 0
    n = factorial(r)
    for c in counts.values():
        n //= factorial(c)
    n //= factorial(r - len(mu))
    return n


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def pcompose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(x) = u(v(x))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def pinverse(u: Permutation) -> Permutation:
    out = [0] * len(u)
    for i, a in enumerate(u):
        out[a - 1] = i + 1
    return tuple(out)


def plength(u: Permutation) -> int:
    """Coxeter length = number of inversions."""
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A deterministic reduced word (s_{i_1} ... s_{i_l} = w, 1-based indices).

    Repeatedly strips the leftmost descent on the right, so each step removes
    exactly one inversion.
    """
    w = list(w)
    rev = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                rev.append(i + 1)
                break
        else:
            break
    return tuple(reversed(rev))


def apply_right_s(w: Permutation, i: int) -> Permutation:
    """w * s_i (swap the images at positions i, i+1; 1-based)."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def apply_left_s(w: Permutation, i: int) -> Permutation:
    """s_i * w (swap the values i, i+1 in the image list)."""
    out = list(w)
    for p, a in enumerate(out):
        if a == i:
            out[p] = i + 1
        elif a == i + 1:
            out[p] = i
    return tuple(out)


# ---------------------------------------------------------------------------
# basis indices
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class BasisIndex:
    """Index (A, B, w) of a standard basis element of the rank-n algebra.

    A and B are sorted tuples of equal size k; w (stored as a full image
    list of length n) fixes 1..k pointwise.
    """

    A: tuple[int, ...]
    B: tuple[int, ...]
    w: Permutation

    def __post_init__(self):
        n = len(self.w)
        k = len(self.A)
        if len(self.B) != k:
            raise ValueError("|A| != |B|")
        for s in (self.A, self.B):
            if list(s) != sorted(set(s)) or any(not 1 <= a <= n for a in s):
                raise ValueError(f"invalid subset {s} of 1..{n}")
        if sorted(self.w) != list(range(1, n + 1)):
            raise ValueError(f"invalid permutation {self.w}")
        if any(self.w[i] != i + 1 for i in range(k)):
            raise ValueError(f"w = {self.w} must fix 1..{k} pointwise")

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def k(self) -> int:
        return len(self.A)

    def to_json(self) -> dict:
        return {"A": list(self.A), "B": list(self.B), "w": list(self.w)}

    @classmethod
    def from_json(cls, obj: dict) -> "BasisIndex":
        return cls(tuple(obj["A"]), tuple(obj["B"]), tuple(obj["w"]))


def fixing_permutations(n: int, k: int):
    """Permutations of {1..n} fixing 1..k, lexicographic by image list."""
    head = tuple(range(1, k + 1))
    for tail in itertools.permutations(range(k + 1, n + 1)):
        yield head + tail


def iter_standard_basis(n: int):
    """Yield the basis indices of rank n in the canonical order.

    Order: k ascending, then A and B lexicographic, then w lexicographic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    universe = range(1, n + 1)
    for k in range(n + 1):
        for A in itertools.combinations(universe, k):
            for B in itertools.combinations(universe, k):
                for w in fixing_permutations(n, k):
                    yield BasisIndex(A, B, w)


def standard_basis(n: int) -> list[BasisIndex]:
    basis = list(iter_standard_basis(n))
    expected = standard_basis_count(n)
    if len(basis) != expected:
        raise AssertionError(
            f"basis enumeration mismatch at n={n}: {len(basis)} != {expected}"
        )
    return basis


def count_standard_basis_by_enumeration(n: int) -> int:
    """Count the index set by generating every (A, B, w) triple.

    Skips BasisIndex construction so ranks up to 8 stay cheap; the result
    must agree with `standard_basis_count`.
    """
    universe = range(1, n + 1)
    total = 0
    for k in range(n + 1):
        subs = list(itertools.combinations(universe, k))
        perms = list(itertools.permutations(range(k + 1, n + 1)))
        total += sum(1 for _ in itertools.product(subs, subs, perms))
    return total


def standard_basis_count(n: int) -> int:
    """Closed-form dimension sum_k C(n,k)^2 k! (equal to sum_k C(n,k)^2 (n-k)!)."""
    total = sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    mirrored = sum(comb(n, k) ** 2 * factorial(n - k) for k in range(n + 1))
    if total != mirrored:
        raise AssertionError("dimension formulas disagree; enumeration defect")
    return total
