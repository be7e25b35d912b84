"""Exact discrete Fourier transform on Z/p with values in Q(w), support
computation, the support-size inequality |supp f| + |supp fhat| >= p + 1 for
non-zero f, and signals meeting it with equality for every split.

Conventions: forward transform fhat(j) = sum_i f(i) w^(i*j), unnormalized,
so the transform matrix is literally (w^(i*j)); the inverse carries the 1/p.
Values live in Q(w) rather than all of C because support decisions need
exact zero tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .cyclotomic import CycInt, CycRat, Prime, Scalar, _fold
from .errors import (
    MalformedInput,
    OutOfRange,
    PrimeMismatch,
    TheoremViolation,
    ZeroSignal,
)
from .fourier_minors import IndexSet
from .linalg import solve_gaussian


def _as_value(prime: Prime, v) -> CycRat:
    if isinstance(v, CycRat):
        if v.prime != prime:
            raise PrimeMismatch(f"p={prime.p} vs p={v.prime.p}")
        return v
    if isinstance(v, CycInt):
        if v.prime != prime:
            raise PrimeMismatch(f"p={prime.p} vs p={v.prime.p}")
        return v.to_cycrat()
    if isinstance(v, (int, Fraction)):
        return CycRat.from_rational(prime, v)
    raise MalformedInput(f"signal values must be CycRat-like, got {type(v).__name__}")


@dataclass(frozen=True)
class Signal:
    """Function on Z/p: a length-p vector of Q(w) values."""

    prime: Prime
    values: tuple[CycRat, ...]

    def __post_init__(self):
        if len(self.values) != self.prime.p:
            raise MalformedInput(
                f"signal for p={self.prime.p} needs {self.prime.p} values, got {len(self.values)}"
            )
        object.__setattr__(
            self, "values", tuple(_as_value(self.prime, v) for v in self.values)
        )

    @classmethod
    def from_values(cls, prime: Prime, values: Iterable) -> "Signal":
        return cls(prime, tuple(values))

    @classmethod
    def zero(cls, prime: Prime) -> "Signal":
        return cls(prime, (CycRat.zero(prime),) * prime.p)

    @classmethod
    def delta(cls, prime: Prime, at: int, value: Union[Scalar, CycRat] = 1) -> "Signal":
        if not 0 <= at < prime.p:
            raise OutOfRange(f"position {at} outside 0..{prime.p - 1}")
        vals = [CycRat.zero(prime)] * prime.p
        vals[at] = _as_value(prime, value)
        return cls(prime, tuple(vals))

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values)

    def json(self) -> dict:
        return {"p": self.prime.p, "values": [v.json() for v in self.values]}

    @classmethod
    def from_json(cls, prime: Prime, data) -> "Signal":
        if not isinstance(data, dict) or "values" not in data:
            raise MalformedInput("signal must be an object with a 'values' array")
        if "p" in data and data["p"] != prime.p:
            raise MalformedInput(f"signal file is for p={data['p']}, expected {prime.p}")
        if not isinstance(data["values"], list) or len(data["values"]) != prime.p:
            raise MalformedInput(f"signal needs exactly {prime.p} values")
        return cls(prime, tuple(CycRat.from_json(prime, v) for v in data["values"]))


@dataclass(frozen=True)
class Spectrum:
    """Fourier transform of a signal; same representation, indexed by frequency."""

    prime: Prime
    values: tuple[CycRat, ...]

    def __post_init__(self):
        if len(self.values) != self.prime.p:
            raise MalformedInput(
                f"spectrum for p={self.prime.p} needs {self.prime.p} values, got {len(self.values)}"
            )
        object.__setattr__(
            self, "values", tuple(_as_value(self.prime, v) for v in self.values)
        )

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values)

    def json(self) -> dict:
        return {"p": self.prime.p, "values": [v.json() for v in self.values]}


def transform_value(values: tuple[CycRat, ...], p: Prime, j: int, inverse: bool = False):
    """One output coefficient vector of the (possibly sign-flipped) transform,
    accumulated in the length-p power basis and folded once at the end."""
    n = p.p
    acc = [0] * n
    for i, v in enumerate(values):
        e0 = (-i * j if inverse else i * j) % n
        for k, c in enumerate(v.coeffs):
            if c:
                idx = e0 + k
                acc[idx - n if idx >= n else idx] += c
    return _fold(n, acc)


def dft(f: Signal) -> Spectrum:
    """Exact forward transform fhat(j) = sum_i f(i) w^(i*j)."""
    p = f.prime
    return Spectrum(
        p, tuple(CycRat(p, transform_value(f.values, p, j)) for j in range(p.p))
    )


def idft(spectrum: Spectrum) -> Signal:
    """Exact inverse transform f(i) = (1/p) sum_j fhat(j) w^(-i*j)."""
    p = spectrum.prime
    values = []
    for i in range(p.p):
        raw = transform_value(spectrum.values, p, i, inverse=True)
        values.append(CycRat(p, tuple(_div_by_int(c, p.p) for c in raw)))
    return Signal(p, tuple(values))


def _div_by_int(c: Scalar, n: int) -> Scalar:
    if isinstance(c, int):
        q, r = divmod(c, n)
        return q if r == 0 else Fraction(c, n)
    return c / n


def support(v: Union[Signal, Spectrum]) -> IndexSet:
    """Positions carrying a non-zero value."""
    return IndexSet(v.prime, tuple(i for i, x in enumerate(v.values) if not x.is_zero))


@dataclass(frozen=True)
class UncertaintyReport:
    """Both supports of a non-zero signal and the (always true) comparison
    |supp f| + |supp fhat| >= p + 1."""

    support_f: IndexSet
    support_fhat: IndexSet
    holds: bool

    @property
    def size_f(self) -> int:
        return len(self.support_f)

    @property
    def size_fhat(self) -> int:
        return len(self.support_fhat)

    @property
    def total(self) -> int:
        return self.size_f + self.size_fhat

    def json(self) -> dict:
        return {
            "p": self.support_f.prime.p,
            "support_f": self.support_f.json(),
            "support_fhat": self.support_fhat.json(),
            "size_f": self.size_f,
            "size_fhat": self.size_fhat,
            "sum": self.total,
            "holds": self.holds,
        }


def uncertainty_check(f: Signal) -> UncertaintyReport:
    """Compute both supports exactly and assert the inequality; a violation
    would disprove the minor theorem and is raised, never returned."""
    if f.is_zero:
        raise ZeroSignal("the support inequality is stated for non-zero signals")
    supp_f = support(f)
    supp_fhat = support(dft(f))
    total = len(supp_f) + len(supp_fhat)
    if total < f.prime.p + 1:
        raise TheoremViolation(
            f"support inequality failed at p={f.prime.p}: "
            f"|supp f|={len(supp_f)}, |supp fhat|={len(supp_fhat)}"
        )
    return UncertaintyReport(supp_f, supp_fhat, True)


def construct_extremal(p: Prime, k: int) -> Signal:
    """A signal with |supp f| = k and |supp fhat| = p + 1 - k exactly.

    Support is anchored at {0, ..., k-1} with forced spectral zeros at
    {1, ..., k-1}: f(k-1) = 1 and the remaining k-1 values solve the
    homogeneous vanishing conditions, a square system whose matrix is itself
    a nonsingular Fourier minor. Both support sizes then come out exact:
    any slack anywhere would push the support sum below p + 1.
    """
    if not 1 <= k <= p.p:
        raise OutOfRange(f"support size must be in 1..{p.p}, got {k}")
    if k == 1:
        f = Signal.delta(p, 0)
    else:
        from .cyclotomic import omega_pow

        matrix = [
            [omega_pow(p, i * j).to_cycrat() for j in range(k - 1)]
            for i in range(1, k)
        ]
        rhs = [(-omega_pow(p, i * (k - 1))).to_cycrat() for i in range(1, k)]
        head = solve_gaussian(p, matrix, rhs)
        values = head + [CycRat.one(p)] + [CycRat.zero(p)] * (p.p - k)
        f = Signal(p, tuple(values))
    sizes = (len(support(f)), len(support(dft(f))))
    if sizes != (k, p.p + 1 - k):
        raise TheoremViolation(
            f"extremal construction for p={p.p}, k={k} produced support sizes {sizes}"
        )
    return f
