"""Deciding whether a bijection between finite sets preserves form coincidences.

A bijection f preserves a form when two tuples share a form value on the
domain side exactly when their images share a value on the codomain side.
The check groups index tuples by exact value on each side and compares the
two partitions, which is O(k^h) groupings instead of all k^{2h} pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateError
from .images import form_image, is_mstd
from .model import (
    SUM_FORM,
    FiniteSet,
    LinearForm,
    RealElement,
    Scalar,
    as_rational,
    check_tuple_budget,
    signed_form,
    value_table,
)

#: the unique 8-element integer set, up to affine maps, with more sums than
#: differences at diameter 14; the reference domain for the classification
CANONICAL_MSTD8 = FiniteSet((0, 2, 3, 4, 7, 11, 12, 14))


@dataclass(frozen=True)
class SetBijection:
    """An indexed pairing a_i -> b_{perm[i]} between two equal-size sets."""

    domain: FiniteSet
    codomain: FiniteSet
    perm: tuple

    def __post_init__(self):
        k = len(self.domain)
        if len(self.codomain) != k:
            raise ValueError("domain and codomain sizes differ")
        if sorted(self.perm) != list(range(k)):
            raise ValueError("perm is not a permutation of the codomain indices")

    @classmethod
    def by_order(cls, A: FiniteSet, B: FiniteSet) -> "SetBijection":
        """Pair the i-th smallest element of A with the i-th smallest of B."""
        return cls(A, B, tuple(range(len(A))))

    @classmethod
    def from_function(cls, A: FiniteSet, B: FiniteSet, fn) -> "SetBijection":
        index = {b: i for i, b in enumerate(B.elements)}
        perm = []
        for a in A:
            y = fn(a)
            if y not in index:
                raise ValueError(f"f({a}) = {y} is not an element of the codomain")
            perm.append(index[y])
        return cls(A, B, tuple(perm))

    @classmethod
    def from_pairs(cls, A: FiniteSet, B: FiniteSet, pairs) -> "SetBijection":
        mapping = dict(pairs)
        return cls.from_function(A, B, lambda a: mapping[a])

    def __call__(self, a) -> Scalar:
        i = self.domain.elements.index(a)
        return self.codomain.elements[self.perm[i]]

    def mapped_elements(self) -> list:
        """Codomain elements listed in domain order."""
        return [self.codomain.elements[p] for p in self.perm]

    def pairs(self) -> list:
        return list(zip(self.domain.elements, self.mapped_elements()))

    def inverse(self) -> "SetBijection":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return SetBijection(self.codomain, self.domain, tuple(inv))

    def compose(self, other: "SetBijection") -> "SetBijection":
        """other after self: domain of self -> codomain of other."""
        if self.codomain != other.domain:
            raise ValueError("bijections do not chain")
        return SetBijection(
            self.domain, other.codomain, tuple(other.perm[p] for p in self.perm)
        )


@dataclass(frozen=True)
class IsoVerdict:
    is_homomorphism: bool
    is_isomorphism: bool
    #: two h-tuples of element indices whose coincidence status differs,
    #: present exactly when the check fails
    witness: tuple | None


def _unrank(pos: int, k: int, h: int) -> tuple:
    out = [0] * h
    for j in range(h - 1, -1, -1):
        pos, out[j] = divmod(pos, k)
    return tuple(out)


def is_phi_isomorphism(form: LinearForm, f: SetBijection) -> IsoVerdict:
    """Compare the coincidence partitions of index-tuple space on both sides.

    The witness, when present, is the lexicographically first offending pair
    of index tuples: same value on one side, different on the other.
    """
    k = len(f.domain)
    h = form.arity
    check_tuple_budget(k, h)
    avals = value_table(form, f.domain.elements)
    bvals = value_table(form, f.mapped_elements())
    forward: dict = {}
    backward: dict = {}
    a_first: dict = {}
    b_first: dict = {}
    homo_fail = None
    inv_fail = None
    for pos, (va, vb) in enumerate(zip(avals, bvals)):
        if va in forward:
            if homo_fail is None and forward[va] != vb:
                homo_fail = (a_first[va], pos)
        else:
            forward[va] = vb
            a_first[va] = pos
        if vb in backward:
            if inv_fail is None and backward[vb] != va:
                inv_fail = (b_first[vb], pos)
        else:
            backward[vb] = va
            b_first[vb] = pos
        if homo_fail is not None and inv_fail is not None:
            break
    is_homo = homo_fail is None
    is_iso = is_homo and inv_fail is None
    witness = None
    if not is_iso:
        fail = homo_fail if homo_fail is not None else inv_fail
        if homo_fail is not None and inv_fail is not None:
            fail = min(homo_fail, inv_fail, key=lambda t: t[1])
        witness = (_unrank(fail[0], k, h), _unrank(fail[1], k, h))
    return IsoVerdict(is_homo, is_iso, witness)


@dataclass(frozen=True)
class InducedMap:
    """The value-level bijection image(A) -> image(B) induced by an
    isomorphism, with the shared multiplicity of each pair."""

    pairs: tuple  # ((x, y, multiplicity), ...) sorted by x

    def __call__(self, x):
        for a, b, _ in self.pairs:
            if a == x:
                return b
        raise KeyError(x)

    def __len__(self):
        return len(self.pairs)


def induced_bijection(form: LinearForm, f: SetBijection) -> InducedMap:
    """Build the induced value map and verify multiplicities transfer."""
    verdict = is_phi_isomorphism(form, f)
    if not verdict.is_isomorphism:
        raise ValueError(f"bijection is not an isomorphism (witness {verdict.witness})")
    ra = form_image(form, f.domain)
    rb = form_image(form, FiniteSet(f.mapped_elements()))
    mapped: dict = {}
    avals = value_table(form, f.domain.elements)
    bvals = value_table(form, f.mapped_elements())
    for va, vb in zip(avals, bvals):
        mapped.setdefault(va, vb)
    pairs = []
    for x in ra.image:
        y = mapped[x]
        mx, my = ra.multiplicity(x), rb.multiplicity(y)
        if mx != my:
            raise CertificateError(
                f"multiplicity mismatch at {x} -> {y}: {mx} != {my}"
            )
        pairs.append((x, y, mx))
    if len({y for _, y, _ in pairs}) != len(pairs):
        raise CertificateError("induced map is not injective")
    return InducedMap(tuple(pairs))


def check_signed_transfer(form: LinearForm, flip, f: SetBijection) -> bool:
    """An isomorphism for the base form must remain one for every
    sign-flipped variant, with equal image sizes on both sides. A False
    return signals an implementation bug, never valid input behavior.
    """
    if not is_phi_isomorphism(form, f).is_isomorphism:
        raise ValueError("bijection is not an isomorphism for the base form")
    flipped = signed_form(form, flip)
    if not is_phi_isomorphism(flipped, f).is_isomorphism:
        return False
    na = form_image(flipped, f.domain).size
    nb = form_image(flipped, f.codomain).size
    return na == nb


@dataclass(frozen=True)
class AffineClassification:
    lam: Fraction
    mu: Fraction
    matches: bool


def affine_reconstruct(f: SetBijection) -> AffineClassification:
    """Recover the affine map behind a Freiman isomorphism out of the
    canonical 8-point set: slope (f(2)-f(0))/2, intercept f(0).

    The codomain must consist of rationals (the ambient 2-divisible group
    here is Q). `matches` reports whether the reconstructed map reproduces
    all eight images; False on a verified isomorphism signals a bug.
    """
    if f.domain != CANONICAL_MSTD8:
        raise ValueError("domain must be the canonical 8-element set")
    if f.codomain.kind != "rational":
        raise ValueError("codomain must be rational scalars")
    verdict = is_phi_isomorphism(SUM_FORM, f)
    if not verdict.is_isomorphism:
        raise ValueError(f"not a Freiman isomorphism (witness {verdict.witness})")
    f0 = f(0)
    f2 = f(2)
    lam = as_rational(Fraction(f2 - f0) / 2)
    mu = as_rational(f0)
    matches = all(y == lam * x + mu for x, y in f.pairs())
    return AffineClassification(lam, mu, matches)


def anchor_normalize(A: FiniteSet) -> FiniteSet:
    """Rescale A by x -> 2(x - a_1)/(a_2 - a_1) so the two smallest elements
    land on 0 and 2. For symbolic reals the divisions must come out rational;
    when they do not, A cannot be affinely equivalent to an integer set."""
    a1, a2 = A.elements[0], A.elements[1]
    den = a2 - a1
    out = []
    for x in A:
        num = x - a1
        if isinstance(num, RealElement):
            try:
                ratio = num.ratio_to(den)
            except ValueError:
                raise CertificateError(
                    "elements do not lie on one affine line over Q; "
                    "the basis declaration is inconsistent with an MSTD set"
                ) from None
        else:
            ratio = Fraction(num) / Fraction(den)
        out.append(as_rational(2 * Fraction(ratio)))
    B = FiniteSet(out)
    if len(B) != len(A):
        raise CertificateError("normalization collapsed elements; inconsistent input")
    return B


def _freiman_bijection_search(domain: FiniteSet, codomain: FiniteSet):
    """Backtracking search for the lexicographically least permutation that
    is a Freiman isomorphism. Prunes on pairwise-sum partition mismatches as
    images are assigned, so the 8! worst case never materializes."""
    a = domain.elements
    b = codomain.elements
    k = len(a)
    perm: list = []
    used = [False] * k
    fwd: dict = {}
    bwd: dict = {}

    def extend() -> bool:
        m = len(perm)
        if m == k:
            return True
        for p in range(k):
            if used[p]:
                continue
            added = []
            ok = True
            for i in range(m + 1):
                q = perm[i] if i < m else p
                ka = a[i] + a[m]
                kb = b[q] + b[p]
                va = fwd.get(ka)
                vb = bwd.get(kb)
                if va is None and vb is None:
                    fwd[ka] = kb
                    bwd[kb] = ka
                    added.append((ka, kb))
                elif va != kb or vb != ka:
                    ok = False
                    break
            if ok:
                used[p] = True
                perm.append(p)
                if extend():
                    return True
                perm.pop()
                used[p] = False
            for ka, kb in added:
                del fwd[ka]
                del bwd[kb]
        return False

    if extend():
        return tuple(perm)
    return None


def classify_mstd8(A: FiniteSet, f: SetBijection | None = None) -> AffineClassification:
    """Normalize an 8-element MSTD set onto {0, 2, ...} scale and classify it.

    The normalized set must be the canonical one or its reflection; the
    returned classification is (1, 0) for the former and (-1, 14) for the
    latter. A supplied bijection from the canonical set is verified instead
    of searched for.
    """
    if len(A) != 8:
        raise ValueError("classification applies to sets of exactly 8 elements")
    verdict = is_mstd(A)
    if not verdict.is_mstd:
        raise ValueError(f"set is not MSTD (sums {verdict.sum_count}, diffs {verdict.diff_count})")
    B = anchor_normalize(A)
    if f is None:
        perm = _freiman_bijection_search(CANONICAL_MSTD8, B)
        if perm is None:
            raise CertificateError(
                "no Freiman isomorphism from the canonical set; input arithmetic is inconsistent"
            )
        f = SetBijection(CANONICAL_MSTD8, B, perm)
    else:
        if f.domain != CANONICAL_MSTD8 or f.codomain != B:
            raise ValueError("supplied bijection must map the canonical set onto the normalized one")
    result = affine_reconstruct(f)
    if (result.lam, result.mu) not in ((1, 0), (-1, 14)):
        raise CertificateError(
            f"normalized set matched neither orientation (lam={result.lam}, mu={result.mu})"
        )
    return result
