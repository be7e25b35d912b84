"""Dense polynomial arithmetic over F_p, plus the root-multiplicity bound.

The bound in question: a non-zero polynomial of degree below p cannot vanish
at a non-zero point a to order as high as its number of non-zero
coefficients. Both hypotheses are sharp (x has multiplicity 1 = count at 0;
(x-1)^p = x^p - 1 has multiplicity p with two non-zero coefficients), so the
checker rejects inputs outside them instead of reporting a violation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Union

from .cyclotomic import Prime
from .errors import (
    MalformedInput,
    PreconditionViolated,
    PrimeMismatch,
    TheoremViolation,
    TooLarge,
    ZeroPolynomial,
)


@dataclass(frozen=True)
class FpScalar:
    """Residue in F_p, reduced at construction."""

    prime: Prime
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int):
            raise MalformedInput("FpScalar value must be an int")
        object.__setattr__(self, "value", self.value % self.prime.p)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _val(self, other) -> int:
        if isinstance(other, int):
            return other
        if isinstance(other, FpScalar):
            if other.prime != self.prime:
                raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpScalar(self.prime, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpScalar(self.prime, self.value - v)

    def __mul__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpScalar(self.prime, self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(self.prime, -self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FpScalar({self.value} mod {self.prime.p})"


ScalarLike = Union[FpScalar, int]


def _scalar_value(prime: Prime, a: ScalarLike) -> int:
    if isinstance(a, FpScalar):
        if a.prime != prime:
            raise PrimeMismatch(f"p={prime.p} vs p={a.prime.p}")
        return a.value
    if isinstance(a, int):
        return a % prime.p
    raise MalformedInput(f"expected FpScalar or int, got {type(a).__name__}")


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p as a little-endian coefficient tuple.

    Normalized: coefficients reduced mod p and trailing zeros trimmed, so the
    zero polynomial is the empty tuple and the last stored coefficient of
    anything else is non-zero.
    """

    prime: Prime
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.prime.p
        cs = [c % p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, prime: Prime, coeffs: Iterable[int]) -> "FpPoly":
        return cls(prime, tuple(coeffs))

    @classmethod
    def zero(cls, prime: Prime) -> "FpPoly":
        return cls(prime, ())

    @classmethod
    def one(cls, prime: Prime) -> "FpPoly":
        return cls(prime, (1,))

    @classmethod
    def monomial(cls, prime: Prime, degree: int, c: int = 1) -> "FpPoly":
        return cls(prime, (0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "FpPoly"):
        if not isinstance(other, FpPoly):
            raise MalformedInput("expected FpPoly")
        if other.prime != self.prime:
            raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.prime, tuple(out))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        out = [0] * max(len(self.coeffs), len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return FpPoly(self.prime, tuple(out))

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.prime, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return FpPoly.zero(self.prime)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.prime, tuple(out))

    def evaluate(self, a: ScalarLike) -> FpScalar:
        """Horner evaluation at a point of F_p."""
        p = self.prime.p
        av = _scalar_value(self.prime, a)
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * av + c) % p
        return FpScalar(self.prime, acc)

    def derivative(self) -> "FpPoly":
        """Formal derivative; note x^p differentiates to 0 in characteristic p."""
        return FpPoly(self.prime, tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def nonzero_coeff_count(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def divide_by_linear(self, a: ScalarLike) -> tuple["FpPoly", FpScalar]:
        """Synthetic division by (x - a): returns (quotient, remainder) with
        g = (x - a) * quotient + remainder and deg(quotient) = deg(g) - 1."""
        if self.is_zero:
            raise ZeroPolynomial("cannot divide the zero polynomial")
        p = self.prime.p
        av = _scalar_value(self.prime, a)
        acc = 0
        down = []
        for c in reversed(self.coeffs):
            acc = (acc * av + c) % p
            down.append(acc)
        quotient = tuple(reversed(down[:-1]))
        return FpPoly(self.prime, quotient), FpScalar(self.prime, down[-1])

    def root_multiplicity(self, a: ScalarLike) -> int:
        """Largest m with (x - a)^m dividing g, by repeated exact division.

        Division counting is used instead of derivatives on purpose: in
        characteristic p the derivative test breaks down at multiplicity p.
        """
        if self.is_zero:
            raise ZeroPolynomial("multiplicity undefined for the zero polynomial")
        g = self
        m = 0
        while not g.evaluate(a).value:
            g, _ = g.divide_by_linear(a)
            m += 1
        return m

    def json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, prime: Prime, data) -> "FpPoly":
        if not isinstance(data, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in data
        ):
            raise MalformedInput("serialized polynomial must be a JSON array of integers")
        return cls(prime, tuple(data))

    def __repr__(self) -> str:
        return f"FpPoly(p={self.prime.p}, {list(self.coeffs)})"


@dataclass(frozen=True)
class MultiplicityBound:
    """Witness pair for one bound check: the root multiplicity and the number
    of non-zero coefficients."""

    multiplicity: int
    nonzero_coeffs: int

    @property
    def holds(self) -> bool:
        return self.multiplicity < self.nonzero_coeffs

    def json(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "nonzero_coefficients": self.nonzero_coeffs,
            "holds": self.holds,
        }


def multiplicity_bound(g: FpPoly, a: ScalarLike) -> MultiplicityBound:
    """Check multiplicity < non-zero coefficient count for a root a of g.

    Requires g != 0, deg(g) < p and a != 0; under those hypotheses the strict
    bound always holds, so a failed comparison raises instead of being
    returned quietly.
    """
    p = g.prime.p
    if g.is_zero:
        raise PreconditionViolated("polynomial must be non-zero")
    if g.degree >= p:
        raise PreconditionViolated(f"degree must be below p={p}, got {g.degree}")
    av = _scalar_value(g.prime, a)
    if av == 0:
        raise PreconditionViolated("root must be non-zero in F_p")
    report = MultiplicityBound(g.root_multiplicity(av), g.nonzero_coeff_count())
    if not report.holds:
        raise TheoremViolation(
            f"multiplicity bound failed for p={p}, g={list(g.coeffs)}, a={av}: {report}"
        )
    return report


@dataclass(frozen=True)
class BoundScanReport:
    p: int
    mode: str
    polynomials_checked: int
    checks: int
    violations: int
    seed: int | None = None

    def json(self) -> dict:
        out = {
            "p": self.p,
            "mode": self.mode,
            "polynomials_checked": self.polynomials_checked,
            "checks": self.checks,
            "violations": self.violations,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def exhaustive_bound_scan(p: Prime) -> BoundScanReport:
    """Run the bound check over every non-zero polynomial of degree < p and
    every non-zero root. Guarded to p <= 3 where the p^p enumeration is tiny."""
    if p.p > 3:
        raise TooLarge(f"exhaustive scan is guarded to p <= 3, got {p.p}")
    polys = 0
    checks = 0
    for coeffs in itertools.product(range(p.p), repeat=p.p):
        if not any(coeffs):
            continue
        g = FpPoly(p, coeffs)
        polys += 1
        for a in range(1, p.p):
            multiplicity_bound(g, a)
            checks += 1
    return BoundScanReport(p.p, "exhaustive", polys, checks, 0)


def random_bound_scan(p: Prime, count: int, seed: int) -> BoundScanReport:
    """Run the bound check on ``count`` seeded random non-zero polynomials of
    degree < p, each against every non-zero root."""
    rng = random.Random(seed)
    checks = 0
    for _ in range(count):
        coeffs = [rng.randrange(p.p) for _ in range(p.p)]
        while not any(coeffs):
            coeffs = [rng.randrange(p.p) for _ in range(p.p)]
        g = FpPoly(p, tuple(coeffs))
        for a in range(1, p.p):
            multiplicity_bound(g, a)
            checks += 1
    return BoundScanReport(p.p, "random", count, checks, 0, seed)
