"""Core value types: exact scalars, symbolic reals, finite sets, linear forms.

Every quantity in this package is exact. Plain ints and ``fractions.Fraction``
carry the rational arithmetic; a real number that is not rational is a
:class:`RealElement`, a vector of rational coordinates over a declared basis
of reals that the caller asserts to be linearly independent over Q. Floats
appear in exactly two places: ordering RealElements and the Dirichlet
denominator search. They never decide an equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import BudgetExceededError

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "RealElement"]

#: hard ceiling on |A|^h wherever ordered tuples are enumerated
TUPLE_BUDGET = 1_000_000


def as_rational(x) -> Rational:
    """Normalize a rational-valued input: ints stay ints, integral fractions
    collapse to int, anything else must already be a Fraction."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class BasisDecl:
    """A declared basis of real numbers, assumed Q-linearly independent.

    The first entry is always the literal constant 1, so rational numbers
    embed as first-coordinate vectors. Independence of the remaining entries
    is *trusted*, not verified; see the README warning.
    """

    labels: tuple[str, ...]
    approx: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.approx):
            raise ValueError("labels and approx lengths differ")
        if not self.labels:
            raise ValueError("basis must have dimension >= 1")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        if self.labels[0] != "1" or self.approx[0] != 1.0:
            raise ValueError("first basis element must be the constant 1 with approx 1.0")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def element(self, coords: Sequence) -> "RealElement":
        return RealElement(self, tuple(as_rational(c) for c in coords))

    def unit(self, label: str) -> "RealElement":
        """The basis element named `label` as a RealElement."""
        i = self.labels.index(label)
        return self.element(tuple(1 if j == i else 0 for j in range(self.dimension)))


@dataclass(frozen=True)
class RealElement:
    """A real number given by exact rational coordinates over a BasisDecl.

    Equality is coordinate equality. Order comes from the float value
    sum(coord_i * approx_i); a float tie between unequal coordinate vectors
    is a hard error, not a silent misordering.
    """

    basis: BasisDecl
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.basis.dimension:
            raise ValueError("coordinate count does not match basis dimension")

    def __float__(self) -> float:
        return math.fsum(float(c) * a for c, a in zip(self.coords, self.basis.approx))

    def _check_basis(self, other: "RealElement"):
        if self.basis != other.basis:
            raise ValueError("RealElements over different bases cannot be combined")

    def __add__(self, other):
        if isinstance(other, RealElement):
            self._check_basis(other)
            return RealElement(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))
        q = as_rational(other)
        first = as_rational(self.coords[0] + q)
        return RealElement(self.basis, (first,) + self.coords[1:])

    __radd__ = __add__

    def __neg__(self):
        return RealElement(self.basis, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other if isinstance(other, RealElement) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, q):
        q = as_rational(q)
        return RealElement(self.basis, tuple(as_rational(q * c) for c in self.coords))

    __rmul__ = __mul__

    def _order_key(self, other: "RealElement") -> int:
        self._check_basis(other)
        if self.coords == other.coords:
            return 0
        a, b = float(self), float(other)
        if a == b:
            raise ValueError(
                f"float tie between distinct symbolic reals {self.coords} and "
                f"{other.coords}; basis approximations cannot order them"
            )
        return -1 if a < b else 1

    def __lt__(self, other):
        if isinstance(other, RealElement):
            return self._order_key(other) < 0
        return float(self) < float(other)

    def __le__(self, other):
        if isinstance(other, RealElement):
            return self._order_key(other) <= 0
        return float(self) <= float(other)

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return as_rational(self.coords[0])

    def ratio_to(self, other: "RealElement") -> Rational:
        """The rational c with self = c * other, if one exists."""
        self._check_basis(other)
        c = None
        for u, v in zip(self.coords, other.coords):
            if v == 0:
                if u != 0:
                    raise ValueError("not a rational multiple")
                continue
            r = as_rational(Fraction(u) / Fraction(v))
            if c is None:
                c = r
            elif c != r:
                raise ValueError("not a rational multiple")
        if c is None:
            raise ValueError("cannot divide by zero element")
        return c

    def __repr__(self):
        terms = [f"{c}*{l}" for c, l in zip(self.coords, self.basis.labels) if c != 0]
        return "<" + (" + ".join(terms) or "0") + ">"


class FiniteSet:
    """A nonempty, strictly increasing, duplicate-free collection of scalars.

    All elements are of one kind: exact rationals, or RealElements over one
    shared basis. Construction sorts and deduplicates.
    """

    __slots__ = ("elements", "basis")

    def __init__(self, elements: Iterable):
        items = list(elements)
        if not items:
            raise ValueError("FiniteSet must be nonempty")
        if isinstance(items[0], RealElement):
            basis = items[0].basis
            for x in items:
                if not isinstance(x, RealElement):
                    raise TypeError("cannot mix symbolic reals with plain rationals")
                if x.basis != basis:
                    raise ValueError("elements lie over different bases")
            distinct = list({x.coords: x for x in items}.values())
            distinct.sort(key=float)
            for a, b in zip(distinct, distinct[1:]):
                if float(a) == float(b):
                    raise ValueError(
                        f"float tie between distinct elements {a!r} and {b!r}"
                    )
            self.elements: tuple = tuple(distinct)
            self.basis: BasisDecl | None = basis
        else:
            rats = sorted({as_rational(x) for x in items})
            self.elements = tuple(rats)
            self.basis = None

    @property
    def kind(self) -> str:
        return "rational" if self.basis is None else "real"

    def is_integer(self) -> bool:
        return self.basis is None and all(isinstance(x, int) for x in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSet)
            and self.basis == other.basis
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.basis, self.elements))

    def min(self):
        return self.elements[0]

    def max(self):
        return self.elements[-1]

    def __repr__(self):
        inner = ", ".join(str(x) for x in self.elements)
        return "{" + inner + "}"


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form sum(coeffs[j] * t_j) with rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("a linear form needs at least one variable")
        if all(c == 0 for c in coeffs):
            raise ValueError("the zero form is not allowed")

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def __call__(self, args: Sequence[Scalar]) -> Scalar:
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        acc = self.coeffs[0] * args[0]
        for c, t in zip(self.coeffs[1:], args[1:]):
            acc = acc + c * t
        return acc

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def max_abs_coeff(self) -> Rational:
        return max(abs(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text: str) -> "LinearForm":
        """Parse comma-separated rational coefficients, e.g. "1,1,-1"."""
        parts = [p.strip() for p in text.split(",")]
        return cls(tuple(Fraction(p) for p in parts))

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else str(mag) + '*'}t{j}")
        return "".join(parts)


SUM_FORM = LinearForm((1, 1))
DIFFERENCE_FORM = LinearForm((1, -1))


@dataclass(frozen=True)
class SignedForm:
    """A base form with the coefficients at positions in ``flip`` negated.

    Positions are 1-based, matching the t_j numbering.
    """

    base: LinearForm
    flip: frozenset

    def __post_init__(self):
        object.__setattr__(self, "flip", frozenset(self.flip))
        bad = [j for j in self.flip if not (1 <= j <= self.base.arity)]
        if bad:
            raise ValueError(f"flip indices out of range 1..{self.base.arity}: {sorted(bad)}")

    def realized(self) -> LinearForm:
        return LinearForm(
            tuple(-c if (j + 1) in self.flip else c for j, c in enumerate(self.base.coeffs))
        )


def signed_form(form: LinearForm, flip: Iterable[int]) -> LinearForm:
    """The form with coefficients at the given 1-based positions negated."""
    return SignedForm(form, frozenset(flip)).realized()


def all_sign_flips(form: LinearForm):
    """Yield (flip-set, realized form) over every subset of {1..h}."""
    h = form.arity
    for mask in range(1 << h):
        flip = frozenset(j + 1 for j in range(h) if (mask >> j) & 1)
        yield flip, signed_form(form, flip)


def clear_denominators(form: LinearForm) -> tuple[LinearForm, int]:
    """Scale a form by the least positive common denominator multiple.

    Returns (integral form, multiplier m). Scaling by a positive rational
    never changes which tuple pairs share a value.
    """
    m = math.lcm(*(Fraction(c).denominator for c in form.coeffs))
    if m == 1 and form.is_integral():
        return form, 1
    return LinearForm(tuple(as_rational(m * c) for c in form.coeffs)), m


def affine_image(A: FiniteSet, lam, mu) -> FiniteSet:
    """The set {lam*a + mu : a in A}; lam must be nonzero so the map is
    injective. mu may be rational even when A is symbolic (the constant-1
    basis coordinate absorbs it)."""
    lam = as_rational(lam)
    mu = as_rational(mu)
    if lam == 0:
        raise ValueError("lam = 0 does not give an affine bijection")
    return FiniteSet(lam * a + mu for a in A)


def check_tuple_budget(k: int, h: int):
    if k**h > TUPLE_BUDGET:
        raise BudgetExceededError(
            f"|A|^h = {k}^{h} exceeds the enumeration budget of {TUPLE_BUDGET}"
        )


def value_table(form: LinearForm, elements: Sequence[Scalar]) -> list:
    """Values of the form over all ordered tuples, in lexicographic index
    order (first slot most significant). Built by partial sums, so the cost
    is O(k + k^2 + ... + k^h) additions."""
    check_tuple_budget(len(elements), form.arity)
    scaled = [[c * e for e in elements] for c in form.coeffs]
    vals = scaled[0]
    for layer in scaled[1:]:
        vals = [v + w for v in vals for w in layer]
    return vals
