"""Exact arithmetic in Z[w] and Q(w) for a prime p, with w a primitive
p-th root of unity.

Elements are coefficient vectors over the integral basis {1, w, ..., w^(p-2)}.
Higher powers fold onto the basis through w^p = 1 together with
w^(p-1) = -(1 + w + ... + w^(p-2)), the relation coming from the p-th
cyclotomic polynomial 1 + x + ... + x^(p-1), which is the minimal polynomial
of w. The representation is therefore unique and equality is plain tuple
comparison. For p = 2 the basis is {1} and w = -1.

:class:`CycInt` carries arbitrary-precision integer coefficients;
:class:`CycRat` carries exact rationals. Inside CycRat a coefficient without
a denominator is stored as a plain int, and Fraction shows up only once an
operation actually produces one, which keeps all-integer data on the cheap
integer path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Union

from .errors import (
    MalformedInput,
    NotDivisible,
    NotPrime,
    OutOfRange,
    PrimeMismatch,
    ZeroInverse,
)

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class Prime:
    """A modulus verified prime at construction time."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool) or not is_prime(self.p):
            raise NotPrime(f"{self.p!r} is not a prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"Prime({self.p})"


@dataclass(frozen=True)
class Valuation:
    """(1-w)-adic valuation; ``value is None`` encodes the infinite valuation,
    which occurs exactly for the zero element."""

    value: int | None

    INFINITE: ClassVar["Valuation"]

    def __post_init__(self):
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise OutOfRange(f"valuation must be a non-negative integer, got {self.value!r}")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "Valuation") -> "Valuation":
        if self.is_infinite or other.is_infinite:
            return Valuation(None)
        return Valuation(self.value + other.value)

    def json(self):
        return "infinite" if self.is_infinite else self.value

    def __repr__(self) -> str:
        return "Valuation(infinite)" if self.is_infinite else f"Valuation({self.value})"


Valuation.INFINITE = Valuation(None)


def _fold(p: int, powers) -> tuple:
    """Fold a coefficient list indexed by powers of w (any length) onto the
    canonical basis of length p - 1."""
    acc = [0] * p
    for e, c in enumerate(powers):
        if c:
            acc[e % p] += c
    top = acc[p - 1]
    if top:
        return tuple(a - top for a in acc[: p - 1])
    return tuple(acc[: p - 1])


def _mul_coeffs(p: int, a, b) -> tuple:
    """Schoolbook product of two basis vectors, folded back onto the basis."""
    n = p - 1
    conv = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
    return _fold(p, conv)


def _norm_scalar(x) -> Scalar:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise MalformedInput(f"expected int or Fraction coefficient, got {type(x).__name__}")


@dataclass(frozen=True)
class CycInt:
    """Element of Z[w] on the basis {1, w, ..., w^(p-2)}."""

    prime: Prime
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.prime.p - 1:
            raise MalformedInput(
                f"need {self.prime.p - 1} coefficients for p={self.prime.p}, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int):
                raise MalformedInput("CycInt coefficients must be ints")

    @classmethod
    def from_coeffs(cls, prime: Prime, coeffs: Iterable[int]) -> "CycInt":
        return cls(prime, tuple(coeffs))

    @classmethod
    def from_int(cls, prime: Prime, n: int) -> "CycInt":
        c = [0] * (prime.p - 1)
        c[0] = n
        return cls(prime, tuple(c))

    @classmethod
    def zero(cls, prime: Prime) -> "CycInt":
        return cls(prime, (0,) * (prime.p - 1))

    @classmethod
    def one(cls, prime: Prime) -> "CycInt":
        return cls.from_int(prime, 1)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.prime, other)
        if isinstance(other, CycInt):
            if other.prime != self.prime:
                raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")
            return other
        return NotImplemented

    def __add__(self, other) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.prime, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.prime, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.prime, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "CycInt":
        return (-self) + other

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.prime, tuple(other * x for x in self.coeffs))
        if isinstance(other, CycInt):
            if other.prime != self.prime:
                raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")
            return CycInt(self.prime, _mul_coeffs(self.prime.p, self.coeffs, other.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise OutOfRange("CycInt powers must be non-negative")
        acc = CycInt.one(self.prime)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def to_cycrat(self) -> "CycRat":
        return CycRat(self.prime, self.coeffs)

    def json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, prime: Prime, data) -> "CycInt":
        coeffs = _coeffs_from_json(prime, data)
        out = []
        for c in coeffs:
            if not isinstance(c, int):
                raise MalformedInput(f"integer coefficient expected, got {c}")
            out.append(c)
        return cls(prime, tuple(out))

    def __repr__(self) -> str:
        return f"CycInt(p={self.prime.p}, {list(self.coeffs)})"


@dataclass(frozen=True)
class CycRat:
    """Element of Q(w) on the same basis as :class:`CycInt`."""

    prime: Prime
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.prime.p - 1:
            raise MalformedInput(
                f"need {self.prime.p - 1} coefficients for p={self.prime.p}, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(_norm_scalar(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, prime: Prime, coeffs: Iterable[Scalar]) -> "CycRat":
        return cls(prime, tuple(coeffs))

    @classmethod
    def from_rational(cls, prime: Prime, q: Scalar) -> "CycRat":
        c = [0] * (prime.p - 1)
        c[0] = q
        return cls(prime, tuple(c))

    @classmethod
    def zero(cls, prime: Prime) -> "CycRat":
        return cls(prime, (0,) * (prime.p - 1))

    @classmethod
    def one(cls, prime: Prime) -> "CycRat":
        return cls.from_rational(prime, 1)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def _coerce(self, other) -> "CycRat":
        if isinstance(other, (int, Fraction)):
            return CycRat.from_rational(self.prime, other)
        if isinstance(other, CycInt):
            other = other.to_cycrat()
        if isinstance(other, CycRat):
            if other.prime != self.prime:
                raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")
            return other
        return NotImplemented

    def __add__(self, other) -> "CycRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycRat(self.prime, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycRat":
        return CycRat(self.prime, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "CycRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycRat(self.prime, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "CycRat":
        return (-self) + other

    def __mul__(self, other) -> "CycRat":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, CycInt):
            other = other.to_cycrat()
        if isinstance(other, CycRat):
            if other.prime != self.prime:
                raise PrimeMismatch(f"p={self.prime.p} vs p={other.prime.p}")
            return CycRat(self.prime, _mul_coeffs(self.prime.p, self.coeffs, other.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, q: Scalar) -> "CycRat":
        return CycRat(self.prime, tuple(c * q for c in self.coeffs))

    def to_cycint(self) -> CycInt:
        if not self.is_integral:
            raise MalformedInput(f"{self!r} has non-integer coefficients")
        return CycInt(self.prime, self.coeffs)

    def json(self) -> list[str]:
        return [scalar_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, prime: Prime, data) -> "CycRat":
        return cls(prime, tuple(_coeffs_from_json(prime, data)))

    def __repr__(self) -> str:
        return f"CycRat(p={self.prime.p}, {[str(c) for c in self.coeffs]})"


def scalar_to_str(c: Scalar) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def scalar_from_str(s) -> Scalar:
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if isinstance(s, str):
        try:
            return _norm_scalar(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"cannot parse coefficient {s!r}") from exc
    raise MalformedInput(f"coefficient must be a decimal string, got {s!r}")


def _coeffs_from_json(prime: Prime, data) -> list[Scalar]:
    if not isinstance(data, list):
        raise MalformedInput("serialized element must be a JSON array of strings")
    if len(data) != prime.p - 1:
        raise MalformedInput(
            f"serialized element for p={prime.p} must have {prime.p - 1} entries, got {len(data)}"
        )
    return [scalar_from_str(s) for s in data]


def omega(p: Prime) -> CycInt:
    """The basis root of unity w (equal to -1 when p = 2)."""
    return omega_pow(p, 1)


def omega_pow(p: Prime, e: int) -> CycInt:
    """Canonical form of w**e for any integer exponent, reduced mod p."""
    acc = [0] * p.p
    acc[e % p.p] = 1
    return CycInt(p, _fold(p.p, acc))


def one_minus_omega(p: Prime) -> CycInt:
    return CycInt.one(p) - omega(p)


def reduce_mod_one_minus_omega(a: CycInt) -> int:
    """Image of ``a`` under the ring map Z[w] -> F_p sending w to 1.

    On the basis this is just the coefficient sum mod p; its kernel is the
    principal ideal generated by 1 - w.
    """
    return sum(a.coeffs) % a.prime.p


def divide_by_one_minus_omega(a: CycInt) -> CycInt:
    """Exact quotient a / (1 - w) in Z[w].

    Closed form on the basis: with S the coefficient sum and P_k the prefix
    sums, the quotient has coefficients P_k - (k+1) * S/p. It exists exactly
    when p divides S, i.e. when ``a`` reduces to zero in F_p.
    """
    p = a.prime.p
    s = sum(a.coeffs)
    if s % p:
        raise NotDivisible(f"element reduces to {s % p} != 0 mod {p}")
    t = s // p
    out = []
    prefix = 0
    for k, c in enumerate(a.coeffs):
        prefix += c
        out.append(prefix - (k + 1) * t)
    return CycInt(a.prime, tuple(out))


def valuation_one_minus_omega(a: CycInt) -> Valuation:
    """Largest m such that (1-w)^m divides ``a``; infinite exactly for 0.

    Computed by iterated exact division. Terminates because each division
    strictly shrinks the field norm of a non-zero element.
    """
    if a.is_zero:
        return Valuation.INFINITE
    v = 0
    p = a.prime.p
    while sum(a.coeffs) % p == 0:
        a = divide_by_one_minus_omega(a)
        v += 1
    return Valuation(v)


def valuation_and_cofactor(a: CycInt) -> tuple[Valuation, CycInt | None]:
    """Valuation together with the unit-part cofactor: a = (1-w)^v * cofactor
    with the cofactor of valuation zero. The cofactor is None for a = 0."""
    if a.is_zero:
        return Valuation.INFINITE, None
    v = 0
    p = a.prime.p
    while sum(a.coeffs) % p == 0:
        a = divide_by_one_minus_omega(a)
        v += 1
    return Valuation(v), a


def _poly_trim(cs: list[Scalar]) -> list[Scalar]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dd = len(den)
    dlead = den[-1]
    q = [0] * max(0, len(num) - dd + 1)
    for k in range(len(num) - dd, -1, -1):
        c = Fraction(num[k + dd - 1]) / dlead
        if c:
            q[k] = c
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    return _poly_trim(q), _poly_trim(num[: dd - 1])


def _poly_xgcd(a: list, b: list) -> tuple[list, list]:
    """Extended Euclid on rational polynomials: returns (g, s) with
    s*a congruent to g modulo b."""
    r0, s0 = list(a), [Fraction(1)]
    r1, s1 = list(b), []
    while r1:
        q, r2 = _poly_divmod(r0, r1)
        s2 = _poly_sub(s0, _poly_mul(q, s1))
        r0, s0 = r1, s1
        r1, s1 = r2, s2
    return r0, s0


def cycrat_inverse(a: CycRat) -> CycRat:
    """Multiplicative inverse in Q(w), via the extended Euclidean algorithm
    on the representative polynomial and 1 + x + ... + x^(p-1)."""
    if a.is_zero:
        raise ZeroInverse("0 has no inverse in Q(w)")
    p = a.prime.p
    phi = [Fraction(1)] * p
    rep = _poly_trim(list(a.coeffs))
    g, s = _poly_xgcd(rep, phi)
    # the modulus is irreducible over Q, so the gcd is a non-zero constant
    c = g[0]
    inv = [Fraction(x) / c for x in s]
    return CycRat(a.prime, _fold(p, inv))


def galois_conjugate(a, k: int):
    """Automorphism w -> w**k of Q(w) (or Z[w]), for k not divisible by p.

    Fixes rationals, and composing the maps for k and k' gives the map for
    k*k' mod p. Accepts CycInt or CycRat and returns the same type.
    """
    p = a.prime.p
    k %= p
    if k == 0:
        raise OutOfRange("conjugation exponent must be non-zero mod p")
    acc = [0] * p
    for j, c in enumerate(a.coeffs):
        if c:
            acc[(j * k) % p] += c
    return type(a)(a.prime, _fold(p, acc))
