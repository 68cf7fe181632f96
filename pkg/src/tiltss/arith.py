"""Exact integer arithmetic: p-adic digits, binomials, Lucas, Weyl dimensions.

Everything here works on Python integers (arbitrary precision) or on
:class:`fractions.Fraction`.  Residues mod a prime are wrapped in
:class:`FpScalar`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

Scalar = Fraction


class ArithmeticDomainError(ValueError):
    pass


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ArithmeticDomainError(f"{p!r} is not a prime")


@dataclass(frozen=True)
class FpScalar:
    """An element of the prime field F_p."""

    value: int
    p: int

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ArithmeticDomainError("mixing residues of different primes")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        return FpScalar(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpScalar(o, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def p_adic_digits(n: int, p: int) -> tuple[int, ...]:
    """Digits (n_0, ..., n_r) of n in base p, least significant first.

    >>> p_adic_digits(13, 5)
    (3, 2)
    >>> p_adic_digits(0, 7)
    ()
    """
    require_prime(p)
    if n < 0:
        raise ArithmeticDomainError("n must be nonnegative")
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return tuple(digits)


def digit(n: int, p: int, i: int) -> int:
    """The i-th p-adic digit of n (zero beyond the top digit)."""
    return (n // p**i) % p


def binomial(n: int, k: int) -> int:
    """binom(n, k), zero when k < 0.

    For n >= 0 this is also zero for k > n.  A negative upper index uses
    the polynomial extension binom(n, k) = (-1)^k binom(k - n - 1, k).
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts!) for nonnegative parts."""
    total, out = 0, 1
    for a in parts:
        if a < 0:
            return 0
        total += a
        out *= comb(total, a)
    return out


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p computed digit by digit (Lucas)."""
    require_prime(p)
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return 0
        out = out * comb(ni, ki) % p
    return out


def lucas_product(n: int, k: int, p: int) -> int:
    """prod_i binom(n_i, k_i) as an integer (not reduced)."""
    nd, kd = p_adic_digits(n, p), p_adic_digits(k, p)
    width = max(len(nd), len(kd))
    nd += (0,) * (width - len(nd))
    kd += (0,) * (width - len(kd))
    return prod(binomial(a, b) for a, b in zip(nd, kd))


def density_scalar(k: int, p: int) -> FpScalar:
    """k! / (k_0! (k_1 p)! ... (k_r p^r)!) reduced mod p."""
    require_prime(p)
    if k < 0:
        raise ArithmeticDomainError("k must be nonnegative")
    blocks = [ki * p**i for i, ki in enumerate(p_adic_digits(k, p))]
    return FpScalar(multinomial(blocks), p)


def weyl_dim(lam: Sequence[int]) -> int:
    """Dimension of the Weyl module of highest weight lam.

    >>> weyl_dim((2, 1, 0))
    8
    """
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ArithmeticDomainError(f"{lam} is not dominant")
    num, den = 1, 1
    n = len(lam)
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def falling(x: int, n: int) -> int:
    return prod(x - i for i in range(n))


def trinomial_sum(m: int, n: int) -> int:
    """sum over r + s = n of (-1)^s (m+r)(m+r-1)...(m+r-n+1) / (r! s!).

    The summand is the trinomial coefficient binom(m+r; r, s), extended
    polynomially in m.  The sum is always 1; it is computed term by term.
    """
    if n < 0:
        raise ArithmeticDomainError("n must be nonnegative")
    total = Fraction(0)
    for r in range(n + 1):
        s = n - r
        total += Fraction((-1) ** s * falling(m + r, n), factorial(r) * factorial(s))
    assert total.denominator == 1
    return int(total)
