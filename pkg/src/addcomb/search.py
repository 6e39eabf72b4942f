"""Exhaustive bounded-diameter enumeration over subsets of {0..n}.

A set lives in one Python int: bit a set means a is an element. Sumsets and
difference sets come from shift-or convolution, cardinalities from popcount.
The enumerator walks subsets containing 0 depth-first, maintaining the
sumset and the nonnegative half of the difference set incrementally, so
each of the 2^n nodes costs a handful of word operations.

The reflection trick: rmask keeps the elements mirrored at fixed width n,
so when element a joins, the new differences {a - a' : a' in A} are one
right-shift of rmask. No per-element inner loop.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceededError
from .model import DIFFERENCE_FORM, SUM_FORM, FiniteSet, LinearForm

JOBS_ENV_VAR = "ADDCOMB_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV_VAR, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SearchConfig:
    max_diameter: int
    size_filter: int | None = None
    require_endpoints: bool = False
    forms: tuple = (SUM_FORM, DIFFERENCE_FORM)

    def __post_init__(self):
        if not 1 <= self.max_diameter <= 63:
            raise BudgetExceededError("max_diameter must lie in 1..63")
        if self.size_filter is not None and self.size_filter < 1:
            raise ValueError("size_filter must be positive")
        for f in self.forms:
            if not f.is_integral():
                raise ValueError("search forms need integer coefficients")


@dataclass(frozen=True)
class CanonicalSet:
    """One representative per integer affine class: min 0, gcd 1, and not
    lexicographically above its own reflection."""

    bits: int
    normalized: bool = True

    @property
    def elements(self) -> tuple:
        return mask_elements(self.bits)

    def to_finite_set(self) -> FiniteSet:
        return FiniteSet(self.elements)

    def __str__(self):
        return ",".join(str(e) for e in self.elements)


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise ValueError("masks hold nonnegative integers only")
        m |= 1 << e
    return m


def mask_elements(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def sumset_bits(mask: int) -> int:
    """Bitset of {a + a'} for the set encoded by mask."""
    acc = 0
    m = mask
    while m:
        low = m & -m
        acc |= mask << (low.bit_length() - 1)
        m ^= low
    return acc


def diffset_nonneg_bits(mask: int) -> int:
    """Bitset of {a - a' : a >= a'}; the full difference set mirrors it."""
    acc = 0
    m = mask
    while m:
        low = m & -m
        acc |= mask >> (low.bit_length() - 1)
        m ^= low
    return acc


def sum_diff_counts(mask: int) -> tuple[int, int]:
    return sumset_bits(mask).bit_count(), 2 * diffset_nonneg_bits(mask).bit_count() - 1


def form_image_bits(form: LinearForm, mask: int, n: int) -> tuple[int, int]:
    """Image of an integer-coefficient form over the mask set.

    Returns (bits, offset): value v is present iff bit (v - offset) is set.
    Built one slot at a time; a negative coefficient c shifts by c*(a - n)
    and pushes the offset down by c*n to keep indices nonnegative.
    """
    if not form.is_integral():
        raise ValueError("bitset images need integer coefficients")
    els = mask_elements(mask)
    bits = 1
    offset = 0
    for c in form.coeffs:
        layer = 0
        if c >= 0:
            for a in els:
                layer |= bits << (c * a)
        else:
            for a in els:
                layer |= bits << (c * (a - n))
            offset += c * n
        bits = layer
    return bits, offset


def mask_values(bits: int, offset: int) -> tuple:
    return tuple(e + offset for e in mask_elements(bits))


def is_symmetric_mask(mask: int) -> bool:
    hi = mask.bit_length() - 1
    r = 0
    m = mask
    while m:
        low = m & -m
        r |= 1 << (hi - (low.bit_length() - 1))
        m ^= low
    return r == mask


def _canonical_tuple(els: tuple) -> tuple:
    base = els[0]
    t = tuple(e - base for e in els)
    if len(t) > 1:
        g = math.gcd(*t[1:])
        if g > 1:
            t = tuple(e // g for e in t)
    r = tuple(t[-1] - e for e in reversed(t))
    return min(t, r)


def normalize_affine(A: FiniteSet) -> CanonicalSet:
    """Translate the minimum to 0, divide by the gcd, and take the
    lexicographically smaller of the set and its reflection."""
    if not A.is_integer():
        raise ValueError("affine normalization applies to integer sets")
    return CanonicalSet(mask_of(_canonical_tuple(A.elements)))


def _canonical_mask(mask: int) -> int:
    return mask_of(_canonical_tuple(mask_elements(mask)))


def _passes_filters(mask: int, cfg: SearchConfig) -> bool:
    if cfg.require_endpoints and not (mask >> cfg.max_diameter) & 1:
        return False
    if cfg.size_filter is not None and mask.bit_count() != cfg.size_filter:
        return False
    return True


def _reflection_preferred(mask: int) -> bool:
    """Cheap pre-test: when the first gap exceeds the last gap the mirrored
    set is lexicographically smaller and will be scanned on its own, so this
    copy can skip evaluation. Ties evaluate both; dedup merges later."""
    rest = mask ^ 1
    if not rest:
        return False
    first = (rest & -rest).bit_length() - 1
    hi = mask.bit_length() - 1
    hi2 = (mask ^ (1 << hi)).bit_length() - 1
    return first > hi - hi2


def _mstd_walk(n: int, start: int, mask: int, rmask: int, sumb: int, dpos: int,
               cfg: SearchConfig, out: list):
    """DFS over supersets of `mask` using elements start..n."""
    emit = out.append
    stack = [(start, mask, rmask, sumb, dpos)]
    pop = stack.pop
    push = stack.append
    while stack:
        a0, mask, rmask, sumb, dpos = pop()
        for a in range(a0, n + 1):
            m2 = mask | (1 << a)
            s2 = sumb | (mask << a) | (1 << (a + a))
            d2 = dpos | (rmask >> (n - a))
            r2 = rmask | (1 << (n - a))
            if (
                _passes_filters(m2, cfg)
                and not _reflection_preferred(m2)
                and s2.bit_count() > 2 * d2.bit_count() - 1
            ):
                emit(m2)
            push((a + 1, m2, r2, s2, d2))
    return out


def _mstd_chunk(args) -> list:
    """Worker: the subtree whose smallest element above 0 is `first`."""
    n, first, cfg = args
    mask = 1 | (1 << first)
    rmask = (1 << n) | (1 << (n - first))
    sumb = 1 | (1 << first) | (1 << (2 * first))
    dpos = 1 | (1 << first)
    out: list = []
    if (
        _passes_filters(mask, cfg)
        and not _reflection_preferred(mask)
        and sumb.bit_count() > 2 * dpos.bit_count() - 1
    ):
        out.append(mask)
    return _mstd_walk(n, first + 1, mask, rmask, sumb, dpos, cfg, out)


def _generic_predicate_scan(cfg: SearchConfig) -> list:
    """Per-mask fallback when the comparison forms are not sum vs difference."""
    n = cfg.max_diameter
    f1, f2 = cfg.forms
    hits = []
    for mask in range(1, 1 << (n + 1), 2):
        if not _passes_filters(mask, cfg):
            continue
        b1, _ = form_image_bits(f1, mask, n)
        b2, _ = form_image_bits(f2, mask, n)
        if b1.bit_count() > b2.bit_count():
            hits.append(mask)
    return hits


def enumerate_mstd(cfg: SearchConfig, jobs: int | None = None) -> list[CanonicalSet]:
    """All canonical sets of diameter <= n whose first-form image is strictly
    larger than the second-form image (sum vs difference by default),
    deduplicated per affine class and sorted lexicographically."""
    n = cfg.max_diameter
    if jobs is None:
        jobs = default_jobs()
    if cfg.forms != (SUM_FORM, DIFFERENCE_FORM):
        raw = _generic_predicate_scan(cfg)
    else:
        tasks = [(n, first, cfg) for first in range(1, n + 1)]
        raw = []
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for chunk in pool.map(_mstd_chunk, tasks):
                    raw.extend(chunk)
        else:
            for t in tasks:
                raw.extend(_mstd_chunk(t))
        # the root set {0} alone: never MSTD, nothing to check
    canon = {_canonical_mask(m) for m in raw}
    return [CanonicalSet(m) for m in sorted(canon, key=mask_elements)]


def triple_form_scan(
    cfg: SearchConfig, report_equal: bool = False
) -> list[tuple[CanonicalSet, int, int]]:
    """Scan for |A+A+A| > |A+A-A| within diameter n.

    Emits (canonical set, triple-sum count, mixed count). A symmetric set can
    never be emitted; that is asserted on every hit. With report_equal the
    equality cases are returned instead.
    """
    n = cfg.max_diameter
    found: dict = {}
    for mask in range(1, 1 << (n + 1), 2):
        if not _passes_filters(mask, cfg):
            continue
        els = mask_elements(mask)
        sum2 = 0
        for a in els:
            sum2 |= mask << a
        s3 = 0
        d3 = 0
        for a in els:
            s3 |= sum2 << a
            d3 |= sum2 << (n - a)
        c1 = s3.bit_count()
        c2 = d3.bit_count()
        if report_equal:
            if c1 != c2:
                continue
        else:
            if c1 <= c2:
                continue
            if is_symmetric_mask(mask):
                raise AssertionError(
                    f"symmetric set {els} emitted with {c1} > {c2}; "
                    "this contradicts the sign-flip lemma"
                )
        cm = _canonical_mask(mask)
        found.setdefault(cm, (c1, c2))
    return [
        (CanonicalSet(m), found[m][0], found[m][1])
        for m in sorted(found, key=mask_elements)
    ]


def random_symmetric_set(seed: int, n: int, k: int) -> FiniteSet:
    """A deterministic random subset of {0..n} with A = n - A and |A| = k."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > n + 1:
        raise ValueError(f"no {k}-element subset of 0..{n} exists")
    has_center = n % 2 == 0
    npairs = (n + 1) // 2
    if k % 2 == 1 and not has_center:
        raise ValueError(f"k = {k} odd needs the center n/2, but n = {n} is odd")
    need = k // 2
    if need > npairs:
        raise ValueError(f"only {npairs} mirror pairs available below {n}")
    rng = random.Random(seed)
    chosen = rng.sample(range(npairs), need)
    out = []
    for i in chosen:
        out.extend((i, n - i))
    if k % 2 == 1:
        out.append(n // 2)
    return FiniteSet(out)
