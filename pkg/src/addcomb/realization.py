"""Constructing a set of positive integers that preserves all form
coincidences of a given finite set of (symbolic) reals.

Three independent routes produce the integer set:

* ``group``     scale coordinates integral, then base-lambda encode Z^d -> Z;
* ``dirichlet`` simultaneous rational approximation q*a_i ~ b_i with a
                residual bound small enough to separate distinct form values;
* ``lp``        exact rational feasibility of the full coincidence-order
                constraint system, solved by phase-1 simplex.

Every route ends the same way: an exhaustive exact verification that the
element pairing preserves coincidences (the certificate). The float work in
the dirichlet route can only cause retries, never a wrong accepted answer.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ApproximationError, BudgetExceededError, CertificateError
from .images import form_image
from .isomorphism import IsoVerdict, SetBijection, is_phi_isomorphism
from .model import FiniteSet, LinearForm, clear_denominators
from .simplex import feasible_point


def _exact_int(x) -> int:
    if isinstance(x, int):
        return x
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError(f"lattice coordinate {x} is not an integer")
    return int(f)


@dataclass(frozen=True)
class LatticeSet:
    """A finite set of distinct integer vectors in Z^d."""

    dimension: int
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(_exact_int(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("lattice set must be nonempty")
        if any(len(p) != self.dimension for p in pts):
            raise ValueError("point dimension mismatch")
        if len(set(pts)) != len(pts):
            raise ValueError("lattice points must be distinct")


@dataclass(frozen=True)
class EmbeddingParams:
    a_star: int
    phi_star: int
    arity: int
    lam: int


@dataclass(frozen=True)
class DirichletParams:
    delta_star: float
    epsilon: Fraction
    q: int
    thetas: tuple


@dataclass(frozen=True)
class LpParams:
    coefvecs: int
    equations: int
    inequalities: int
    pivots: int


@dataclass(frozen=True)
class RealizationResult:
    B: FiniteSet
    method: str
    certificate: IsoVerdict
    mapping: SetBijection
    params: object


def translate_positive(B: FiniteSet) -> FiniteSet:
    """Shift an integer set up so its minimum is at least 1."""
    if not B.is_integer():
        raise ValueError("translate_positive applies to integer sets")
    lo = B.min()
    if lo >= 1:
        return B
    return FiniteSet(b + (1 - lo) for b in B)


def lattice_embed(A: LatticeSet, form: LinearForm) -> tuple[FiniteSet, EmbeddingParams]:
    """Encode lattice points injectively into Z by digits in base lambda.

    lambda is the smallest integer strictly above 2 * a* * phi* * h + 1,
    which makes the per-coordinate carry terms too small to create or
    destroy any coincidence of the form.
    """
    if not form.is_integral():
        raise ValueError("clear the form's denominators before lattice embedding")
    a_star = max(abs(x) for p in A.points for x in p)
    phi_star = int(form.max_abs_coeff())
    h = form.arity
    lam = 2 * a_star * phi_star * h + 2
    powers = [lam**i for i in range(A.dimension)]
    values = [sum(x * w for x, w in zip(p, powers)) for p in A.points]
    if len(set(values)) != len(values):
        raise CertificateError("base encoding collided; lambda bound violated")
    return FiniteSet(values), EmbeddingParams(a_star, phi_star, h, lam)


def _coordinate_rows(A: FiniteSet) -> tuple[list, int]:
    """Element coordinate vectors (rationals) and the ambient dimension."""
    if A.basis is None:
        return [(a,) for a in A.elements], 1
    return [x.coords for x in A.elements], A.basis.dimension


def _finish(A: FiniteSet, form: LinearForm, raw_values: list, method: str, params) -> RealizationResult:
    """Translate positive, build the pairing, and verify it exhaustively."""
    lo = min(raw_values)
    shift = 1 - lo if lo < 1 else 0
    final = [v + shift for v in raw_values]
    if len(set(final)) != len(final):
        raise CertificateError(f"{method} produced colliding images")
    B = FiniteSet(final)
    mapping = SetBijection.from_pairs(A, B, zip(A.elements, final))
    certificate = is_phi_isomorphism(form, mapping)
    if not certificate.is_isomorphism:
        raise CertificateError(
            f"{method} certificate failed at witness {certificate.witness}"
        )
    return RealizationResult(B, method, certificate, mapping, params)


def realize_group(A: FiniteSet, form: LinearForm) -> RealizationResult:
    """Clear coordinate denominators, then lattice-embed.

    Scaling by a positive integer and the coordinate map itself both
    preserve coincidences exactly, so only the embedding needs a certificate.
    """
    rows, dim = _coordinate_rows(A)
    m = math.lcm(*(Fraction(c).denominator for row in rows for c in row))
    lattice = LatticeSet(dim, [tuple(m * c for c in row) for row in rows])
    iform, _ = clear_denominators(form)
    _, params = lattice_embed(lattice, iform)
    powers = [params.lam**i for i in range(dim)]
    raw = [sum(x * w for x, w in zip(p, powers)) for p in lattice.points]
    return _finish(A, form, raw, "group", params)


def realize_dirichlet(
    A: FiniteSet,
    form: LinearForm,
    q_bound: int = 10**9,
    _block: int = 1 << 18,
) -> RealizationResult:
    """Find q with every q*a_i within epsilon of an integer b_i, epsilon
    chosen so integer-side coincidences match exact-side ones.

    The scan is the plain increasing one over q, block-vectorized on the
    float approximations. A certificate failure (possible only if the float
    gap estimate lied) halves epsilon and resumes the scan.
    """
    k = len(A)
    iform, _ = clear_denominators(form)
    if k == 1:
        return _finish(A, form, [1], "dirichlet", None)

    h = iform.arity
    phi_star = int(iform.max_abs_coeff())
    try:
        image = form_image(iform, A).image
    except ValueError as exc:
        raise ApproximationError(f"cannot order the form image: {exc}") from None
    floats = [float(x) for x in image.elements]
    gap = min(b - a for a, b in zip(floats, floats[1:])) if len(floats) > 1 else 1.0
    if gap < 1e-12:
        raise ApproximationError(
            f"minimum image gap {gap:.3e} is indistinguishable from 0 in floats; "
            "elements are too close for the denominator search"
        )
    delta_star = gap * (1.0 - 1e-6)
    eps = Fraction(min(delta_star, 1.0)) / (2 * h * phi_star) / 2

    elems = A.elements
    approx = np.array([float(a) for a in elems], dtype=np.float64)
    if A.basis is None:
        rational_elems = list(elems)
    elif all(x.is_rational() for x in elems):
        rational_elems = [x.rational_value() for x in elems]
    else:
        rational_elems = None  # genuinely irrational: float residuals only
    best_residual = math.inf
    q = 0
    while q < q_bound:
        eps_f = float(eps)
        lo = q + 1
        hi = min(q + _block, q_bound)
        qs = np.arange(lo, hi + 1, dtype=np.float64)
        ok = np.ones(len(qs), dtype=bool)
        worst = np.zeros(len(qs), dtype=np.float64)
        for v in approx:
            x = qs * v
            r = np.abs(x - np.round(x))
            np.maximum(worst, r, out=worst)
            ok &= r < eps_f
        best_residual = min(best_residual, float(worst.min()))
        q = hi
        for cand in np.flatnonzero(ok):
            qc = lo + int(cand)
            if rational_elems is not None:
                bs = [round(qc * Fraction(a)) for a in rational_elems]
                thetas = [qc * Fraction(a) - b for a, b in zip(rational_elems, bs)]
                if any(abs(t) >= eps for t in thetas):
                    continue
            else:
                bs = [round(qc * float(a)) for a in elems]
                thetas = [qc * float(a) - b for a, b in zip(elems, bs)]
            if len(set(bs)) != k:
                continue
            params = DirichletParams(
                delta_star, eps, qc, tuple(float(t) for t in thetas)
            )
            try:
                return _finish(A, form, bs, "dirichlet", params)
            except CertificateError:
                # float delta* overestimated the safe gap; tighten and resume
                eps = eps / 2
                q = qc
                break
    raise ApproximationError(
        f"no q <= {q_bound} reached residuals below {float(eps):.3e} "
        f"(best max-residual seen {best_residual:.3e})"
    )


def realize_lp(
    A: FiniteSet,
    form: LinearForm,
    pair_budget: int = 10**6,
) -> RealizationResult:
    """Solve the coincidence-order constraint system exactly.

    Every ordered pair of index tuples contributes an equation (values equal
    on A) or a strict inequality (homogenized to >= 1). A pair's constraint
    depends only on the two slot-coefficient vectors, so constraints are
    built per distinct vector pair; within a value class only differences to
    the class representative are kept, and between classes only the
    consecutive chain, which implies the rest by transitivity. The solution
    is checked against the class structure and then certificate-verified.
    """
    k = len(A)
    h = form.arity
    if k ** (2 * h) > pair_budget:
        raise BudgetExceededError(
            f"k^2h = {k}^{2 * h} exceeds the constraint budget {pair_budget}"
        )
    iform, _ = clear_denominators(form)
    coeffs = iform.coeffs

    vecs: set = set()
    for tup in itertools.product(range(k), repeat=h):
        v = [0] * k
        for c, i in zip(coeffs, tup):
            v[i] += c
        vecs.add(tuple(v))

    zero = 0 * A.elements[0]  # zero of the right kind (rational or symbolic)

    def dot(vec):
        acc = None
        for c, a in zip(vec, A.elements):
            if c == 0:
                continue
            term = c * a
            acc = term if acc is None else acc + term
        return acc if acc is not None else zero

    groups: dict = {}
    for vec in vecs:
        groups.setdefault(dot(vec), []).append(vec)
    try:
        ordering = FiniteSet(groups.keys())
    except ValueError as exc:
        raise ApproximationError(f"cannot order the form values: {exc}") from None
    classes = [sorted(groups[val]) for val in ordering]

    equations = []
    for cls in classes:
        rep = cls[0]
        for other in cls[1:]:
            equations.append(tuple(a - b for a, b in zip(other, rep)))
    inequalities = [
        tuple(a - b for a, b in zip(nxt[0], cur[0]))
        for cur, nxt in zip(classes, classes[1:])
    ]

    t, stats = feasible_point(equations, inequalities, k)
    if t is None:
        # A itself satisfies the system over the reals, and rational points
        # are dense in its solution set, so infeasibility means a bug.
        raise CertificateError("constraint system infeasible; internal error")
    _check_class_structure(classes, t)
    m = math.lcm(*(x.denominator for x in t)) if t else 1
    raw = [int(m * x) for x in t]
    params = LpParams(len(vecs), stats.equations, stats.inequalities, stats.pivots)
    return _finish(A, form, raw, "lp", params)


def _check_class_structure(classes, t) -> None:
    """The rational solution must reproduce every pairwise relation: equal
    dot products inside each class, strictly increasing across classes."""
    prev = None
    for cls in classes:
        vals = {sum((c * x for c, x in zip(vec, t) if c), Fraction(0)) for vec in cls}
        if len(vals) != 1:
            raise CertificateError("solution breaks an equality constraint")
        (val,) = vals
        if prev is not None and not val > prev:
            raise CertificateError("solution breaks an order constraint")
        prev = val


def realize_auto(A: FiniteSet, form: LinearForm) -> RealizationResult:
    """The group route, falling back to the denominator search if its
    certificate fails (possible only under an inconsistent basis)."""
    try:
        return realize_group(A, form)
    except CertificateError:
        return realize_dirichlet(A, form)


METHODS = {
    "group": realize_group,
    "dirichlet": realize_dirichlet,
    "lp": realize_lp,
    "auto": realize_auto,
}


def realize(A: FiniteSet, form: LinearForm, method: str = "auto") -> RealizationResult:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(A, form)
