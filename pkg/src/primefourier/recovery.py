"""Exact recovery of k-sparse signals on Z/p from 2k of their Fourier values.

Uniqueness is a direct corollary of the non-vanishing of square Fourier
minors: two distinct signals of sparsity <= k agreeing on 2k spectral samples
would put a non-zero <=2k-sparse vector in the kernel of a square minor.
Recovery is by exhaustive search over candidate supports in ascending size
and lexicographic order, which also makes the reported support the exact
support of the recovered signal.

Candidate rejection is accelerated by imaging the linear system in a prime
field F_q with q = 1 (mod p): if the imaged system has full column rank and
is inconsistent, the exact system is inconsistent too, so the candidate can
be skipped without exact elimination. Anything the filter cannot decide, and
every accepted candidate, goes through exact arithmetic, so results are
identical with the filter on or off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .cyclotomic import CycInt, CycRat, Prime, _fold, is_prime, omega_pow
from .errors import (
    Inconsistent,
    InsufficientSamples,
    MalformedInput,
    OutOfRange,
    PrimeMismatch,
    SizeMismatch,
    TheoremViolation,
    TooLarge,
)
from .fourier_minors import IndexSet
from .linalg import solve_gaussian
from .uncertainty import Signal, support, transform_value


@dataclass(frozen=True)
class MeasurementSet:
    """Observed spectral positions and the transform values taken there."""

    prime: Prime
    samples: IndexSet
    values: tuple[CycRat, ...]

    def __post_init__(self):
        if self.samples.prime != self.prime:
            raise PrimeMismatch("sample set built over a different prime")
        if len(self.values) != len(self.samples):
            raise SizeMismatch(
                f"{len(self.values)} values against {len(self.samples)} samples"
            )
        for v in self.values:
            if not isinstance(v, CycRat) or v.prime != self.prime:
                raise MalformedInput("measurement values must be CycRat over the same prime")

    def json(self) -> dict:
        return {
            "p": self.prime.p,
            "samples": self.samples.json(),
            "values": [v.json() for v in self.values],
        }

    @classmethod
    def from_json(cls, prime: Prime, data) -> "MeasurementSet":
        if not isinstance(data, dict) or "samples" not in data or "values" not in data:
            raise MalformedInput("measurements must be an object with 'samples' and 'values'")
        if "p" in data and data["p"] != prime.p:
            raise MalformedInput(f"measurement file is for p={data['p']}, expected {prime.p}")
        samples = IndexSet.of(prime, data["samples"])
        if not isinstance(data["values"], list):
            raise MalformedInput("'values' must be an array")
        values = tuple(CycRat.from_json(prime, v) for v in data["values"])
        return cls(prime, samples, values)


def measure(f: Signal, samples: IndexSet) -> MeasurementSet:
    """Restriction of the transform of ``f`` to the sampled frequencies."""
    if samples.prime != f.prime:
        raise PrimeMismatch("sample set built over a different prime")
    p = f.prime
    values = tuple(
        CycRat(p, transform_value(f.values, p, s)) for s in samples.elems
    )
    return MeasurementSet(p, samples, values)


@dataclass(frozen=True)
class RecoveryResult:
    signal: Signal
    support: IndexSet
    residual_checked: bool

    def json(self) -> dict:
        return {
            "p": self.signal.prime.p,
            "signal": [v.json() for v in self.signal.values],
            "support": self.support.json(),
            "residual_checked": self.residual_checked,
        }


class _ModularFilter:
    """Images the candidate systems in F_q for a prime q = 1 (mod p).

    Only ever used to *reject*: a candidate is skipped when its image has
    full column rank but no solution, which forces exact inconsistency. Rank
    deficiency mod q proves nothing, so those candidates fall through.
    """

    def __init__(self, m: MeasurementSet):
        p = m.prime.p
        denominators = set()
        for v in m.values:
            for c in v.coeffs:
                if isinstance(c, Fraction):
                    denominators.add(c.denominator)
        q = self._find_modulus(p, denominators)
        self.q = q
        g = self._order_p_element(p, q)
        gpow = [1] * p
        for k in range(1, p):
            gpow[k] = gpow[k - 1] * g % q
        self.gpow = gpow
        # canonical basis has p-1 entries; image(w^k) = g^k
        self.values_q = [self._image(v, q, gpow) for v in m.values]
        self.samples = m.samples.elems
        self.p = p

    @staticmethod
    def _find_modulus(p: int, denominators: set[int]) -> int:
        q = 1 << 20
        q += (1 - q) % p  # smallest value >= 2^20 with q = 1 mod p
        while True:
            if is_prime(q) and all(d % q for d in denominators):
                return q
            q += p

    @staticmethod
    def _order_p_element(p: int, q: int) -> int:
        for h in range(2, q):
            g = pow(h, (q - 1) // p, q)
            if g != 1:
                return g
        raise AssertionError("unreachable: F_q* is cyclic of order divisible by p")

    @staticmethod
    def _image(v: CycRat, q: int, gpow: list[int]) -> int:
        acc = 0
        for k, c in enumerate(v.coeffs):
            if isinstance(c, Fraction):
                acc += c.numerator * pow(c.denominator, -1, q) % q * gpow[k]
            elif c:
                acc += c % q * gpow[k]
        return acc % q

    def rejects(self, cand: tuple[int, ...]) -> bool:
        q = self.q
        width = len(cand)
        rows = [
            [self.gpow[(s * j) % self.p] for j in cand] + [vq]
            for s, vq in zip(self.samples, self.values_q)
        ]
        n = len(rows)
        for col in range(width):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                return False  # rank-deficient image: cannot conclude anything
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
            inv = pow(rows[col][col], -1, q)
            prow = rows[col]
            for r in range(col + 1, n):
                lead = rows[r][col]
                if lead:
                    factor = lead * inv % q
                    row = rows[r]
                    for j in range(col, width + 1):
                        row[j] = (row[j] - factor * prow[j]) % q
        return any(rows[r][width] for r in range(width, n))


def _weighted_power_sum(p: Prime, pairs: Sequence[tuple[int, CycRat]], s: int) -> tuple:
    """Canonical coefficients of sum_j x_j w^(s*j) for sparse pairs (j, x_j)."""
    n = p.p
    acc = [0] * n
    for j, x in pairs:
        e0 = (s * j) % n
        for k, c in enumerate(x.coeffs):
            if c:
                idx = e0 + k
                acc[idx - n if idx >= n else idx] += c
    return _fold(n, acc)


def recover(m: MeasurementSet, k: int, use_modular_filter: bool = True) -> RecoveryResult:
    """The unique signal of sparsity <= k consistent with the measurements.

    Candidate supports are searched in ascending size and lexicographic
    order. Each candidate's square system on the first |candidate| samples is
    solved exactly (the matrix is a Fourier minor, hence nonsingular) and the
    solution checked against the remaining samples; the first fully
    consistent candidate wins. Ascending order makes the reported support
    exact, and uniqueness of the consistent signal comes from the minor
    theorem whenever |samples| >= 2k.
    """
    if k < 0:
        raise OutOfRange(f"sparsity bound must be non-negative, got {k}")
    if len(m.samples) < 2 * k:
        raise InsufficientSamples(
            f"need at least {2 * k} samples for sparsity {k}, got {len(m.samples)}"
        )
    p = m.prime

    if all(v.is_zero for v in m.values):
        zero = Signal.zero(p)
        return RecoveryResult(zero, IndexSet(p, ()), True)

    filt = _ModularFilter(m) if use_modular_filter and k > 0 else None
    samples = m.samples.elems
    for width in range(1, k + 1):
        for cand in itertools.combinations(range(p.p), width):
            if filt is not None and filt.rejects(cand):
                continue
            matrix = [
                [omega_pow(p, s * j).to_cycrat() for j in cand]
                for s in samples[:width]
            ]
            xs = solve_gaussian(p, matrix, list(m.values[:width]))
            pairs = list(zip(cand, xs))
            if all(
                _weighted_power_sum(p, pairs, s) == m.values[r].coeffs
                for r, s in enumerate(samples[width:], start=width)
            ):
                values = [CycRat.zero(p)] * p.p
                for j, x in pairs:
                    values[j] = x
                signal = Signal(p, tuple(values))
                return RecoveryResult(signal, support(signal), True)
    raise Inconsistent(
        f"no signal with at most {k} non-zero values matches the measurements"
    )


@dataclass(frozen=True)
class AuditReport:
    p: int
    k: int
    samples: tuple[int, ...]
    signals_enumerated: int
    pairs_compared: int
    collisions: int

    def json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "samples": list(self.samples),
            "signals_enumerated": self.signals_enumerated,
            "pairs_compared": self.pairs_compared,
            "collisions": self.collisions,
        }


def _pool_value(prime: Prime, v) -> CycRat:
    if isinstance(v, CycInt):
        v = v.to_cycrat()
    if isinstance(v, (int, Fraction)):
        v = CycRat.from_rational(prime, v)
    if not isinstance(v, CycRat) or v.prime != prime:
        raise MalformedInput("pool values must be CycRat over the audited prime")
    if v.is_zero:
        raise MalformedInput("pool values must be non-zero")
    return v


def uniqueness_audit(p: Prime, k: int, samples: IndexSet, value_pool: Iterable) -> AuditReport:
    """Enumerate every signal of sparsity <= k with values from the pool and
    assert no two share their measurements on the given samples.

    A collision would contradict the minor theorem, so it raises. Guarded to
    tiny instances: the enumeration is quadratic in spirit even though the
    comparison runs through a hash map.
    """
    pool = tuple(_pool_value(p, v) for v in value_pool)
    if p.p > 7 or k > 2 or len(pool) > 3:
        raise TooLarge(
            f"audit guard is p <= 7, k <= 2, pool <= 3; got p={p.p}, k={k}, pool={len(pool)}"
        )
    if samples.prime != p:
        raise PrimeMismatch("sample set built over a different prime")
    if len(samples) < 2 * k:
        raise InsufficientSamples(
            f"need at least {2 * k} samples for sparsity {k}, got {len(samples)}"
        )

    seen: dict[tuple, Signal] = {}
    count = 0
    collisions = 0
    for width in range(0, k + 1):
        for supp in itertools.combinations(range(p.p), width):
            for assignment in itertools.product(pool, repeat=width):
                values = [CycRat.zero(p)] * p.p
                for j, v in zip(supp, assignment):
                    values[j] = v
                signal = Signal(p, tuple(values))
                count += 1
                key = tuple(
                    CycRat(p, transform_value(signal.values, p, s))
                    for s in samples.elems
                )
                if key in seen:
                    collisions += 1
                    raise TheoremViolation(
                        f"measurement collision at p={p.p}, samples={list(samples.elems)}: "
                        f"{seen[key]!r} vs {signal!r}"
                    )
                seen[key] = signal
    return AuditReport(
        p.p, k, samples.elems, count, comb(count, 2), collisions
    )
