"""Fundamental functionals of shape and polynomials in them.

``S_k(lam) = (k-1) * integral over lam of (x - y)^(k-2) dx dy`` (French
coordinates).  The family ``S_2, S_3, ...`` generates the algebra of
polynomial functions on Young diagrams; :class:`SPolynomial` is an element
of that algebra written in these generators.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .diagrams import Partition, Profile
from .rationals import format_rational, parse_rational


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"S_k needs k >= 2, got {k}")


def s_k_partition(lam: Partition, k: int) -> Fraction:
    """Exact ``S_k`` of a partition by summing over its boxes.

    A unit box of content ``c`` contributes
    ``((c+1)^k - 2 c^k + (c-1)^k) / k`` to the defining integral.
    """
    _check_k(k)
    total = 0
    for c in lam.contents():
        total += (c + 1) ** k - 2 * c ** k + (c - 1) ** k
    return Fraction(total, k)


def _integrate_monomial_times_affine(k: int, a, b, p, q) -> Fraction:
    # integral over [a, b] of z^(k-2) * (p + q z)
    return (p * (b ** (k - 1) - a ** (k - 1)) / (k - 1)
            + q * (b ** k - a ** k) / k)


def s_k_profile(omega: Profile, k: int) -> Fraction:
    """Exact ``S_k`` of a generalized diagram.

    Integrates ``(k-1)/2 * z^(k-2) * (omega(z) - |z|)`` piece by piece; on each
    affine piece (split at ``z = 0``) the integrand is a polynomial.
    """
    _check_k(k)
    total = Fraction(0)
    for (z0, w0), (z1, w1) in omega.segments():
        slope = (w1 - w0) / (z1 - z0)
        intercept = w0 - slope * z0
        cuts = [z0, z1] if not (z0 < 0 < z1) else [z0, Fraction(0), z1]
        for a, b in zip(cuts, cuts[1:]):
            sign = 1 if a >= 0 else -1
            total += _integrate_monomial_times_affine(k, a, b, intercept, slope - sign)
    return (k - 1) * total / 2


Monomial = tuple[int, ...]


class SPolynomial:
    """Rational polynomial in the commuting generators ``S_2, S_3, ...``.

    Monomials are sorted tuples of generator indices; ``()`` is the constant.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for gens, coeff in (terms or {}).items():
            gens = tuple(sorted(int(g) for g in gens))
            if any(g < 2 for g in gens):
                raise ValueError(f"generator index below 2 in {gens}")
            acc[gens] += Fraction(coeff)
        self.terms = {m: c for m, c in sorted(acc.items()) if c != 0}

    @classmethod
    def generator(cls, k: int) -> "SPolynomial":
        _check_k(k)
        return cls({(k,): 1})

    @classmethod
    def constant(cls, c) -> "SPolynomial":
        return cls({(): c})

    def __repr__(self):
        if not self.terms:
            return "SPolynomial(0)"
        parts = []
        for gens, c in self.terms.items():
            mono = "*".join(f"S{g}" for g in gens) or "1"
            parts.append(f"{c}*{mono}")
        return "SPolynomial(" + " + ".join(parts) + ")"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPolynomial.constant(other)
        return isinstance(other, SPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPolynomial.constant(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return SPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return SPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SPolynomial({m: c * other for m, c in self.terms.items()})
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                acc[m1 + m2] += c1 * c2
        return SPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = SPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        """Graded degree (``S_k`` has degree ``k``); ``-1`` for zero."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(m) == degree for m in self.terms)

    def evaluate(self, value_of: Callable[[int], Fraction]) -> Fraction:
        cache: dict[int, Fraction] = {}
        total = Fraction(0)
        for gens, c in self.terms.items():
            term = c
            for g in gens:
                if g not in cache:
                    cache[g] = Fraction(value_of(g))
                term *= cache[g]
            total += term
        return total

    def to_json(self) -> dict:
        return {"terms": [{"gens": list(m), "coeff": format_rational(c)}
                          for m, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data) -> "SPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for term in data["terms"]:
            acc[tuple(sorted(term["gens"]))] += parse_rational(term["coeff"])
        return cls(acc)


def evaluate_s_polynomial(poly: SPolynomial, omega: Profile | Partition) -> Fraction:
    if isinstance(omega, Partition):
        return poly.evaluate(lambda k: s_k_partition(omega, k))
    return poly.evaluate(lambda k: s_k_profile(omega, k))


class ZPolynomial:
    """Polynomial in ``z`` whose coefficients are :class:`SPolynomial`."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[SPolynomial] = ()):
        coeffs = [c if isinstance(c, SPolynomial) else SPolynomial.constant(c)
                  for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def __repr__(self):
        return f"ZPolynomial({list(self.coeffs)!r})"

    def __eq__(self, other):
        return isinstance(other, ZPolynomial) and self.coeffs == other.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        zero = SPolynomial()
        return ZPolynomial(
            (self.coeffs[i] if i < len(self.coeffs) else zero)
            + (other.coeffs[i] if i < len(other.coeffs) else zero)
            for i in range(n))

    def __mul__(self, scalar: SPolynomial | Fraction | int):
        return ZPolynomial(c * scalar for c in self.coeffs)

    __rmul__ = __mul__

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> SPolynomial:
        return self.coeffs[i] if i < len(self.coeffs) else SPolynomial()

    def evaluate(self, z, omega: Profile | Partition) -> Fraction:
        z = Fraction(z)
        return sum((evaluate_s_polynomial(c, omega) * z ** i
                    for i, c in enumerate(self.coeffs)), Fraction(0))

    def at(self, z) -> SPolynomial:
        """Fix ``z``; the result is again an element of the S-algebra."""
        z = Fraction(z)
        return sum((c * z ** i for i, c in enumerate(self.coeffs)), SPolynomial())

    def to_json(self) -> dict:
        return {"z_coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "ZPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(SPolynomial.from_json(c) for c in data["z_coeffs"])


def content_derivative(poly: SPolynomial) -> ZPolynomial:
    """Symbolic content-derivative.

    Uses ``d S_k = (k-1) z^(k-2)`` and the Leibniz rule on each monomial.
    """
    acc: dict[int, SPolynomial] = defaultdict(SPolynomial)
    for gens, c in poly.terms.items():
        for i, k in enumerate(gens):
            rest = gens[:i] + gens[i + 1:]
            acc[k - 2] = acc[k - 2] + SPolynomial({rest: c * (k - 1)})
    if not acc:
        return ZPolynomial()
    return ZPolynomial(acc.get(i, SPolynomial()) for i in range(max(acc) + 1))


def monomials_of_degree(m: int) -> list[Monomial]:
    """All S-monomials of graded degree ``m`` (partitions of m into parts >= 2)."""
    out = []

    def rec(rest, bound, prefix):
        if rest == 0:
            out.append(tuple(sorted(prefix)))
            return
        for k in range(min(rest, bound), 1, -1):
            rec(rest - k, k, prefix + [k])

    rec(m, m, [])
    return sorted(out)
