"""Dense univariate polynomials over the integers and over prime fields.

Coefficients are stored in ascending degree order with no trailing
zeros; the zero polynomial has an empty coefficient tuple.  Integer
coefficients are arbitrary precision.  Multiplication is schoolbook
below degree 32 and Karatsuba above.

The text format shared with the CLI is one line of whitespace-separated
decimal coefficients in ascending degree, e.g. ``-3 0 1`` for x^2 - 3.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidModulusError, RingMismatchError
from .primes import is_prime

_KARATSUBA_CUTOFF = 32


def _normalized(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _raw_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _raw_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= _KARATSUBA_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    h = min(len(a), len(b)) // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _raw_mul(a0, b0)
    z2 = _raw_mul(a1, b1)
    z1 = _raw_mul(_raw_add(a0, a1), _raw_add(b0, b1))
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(z0):
        out[i] += x
        z1[i] -= x
    for i, x in enumerate(z2):
        out[2 * h + i] += x
        z1[i] -= x
    for i, x in enumerate(z1):
        if x:
            out[h + i] += x
    return out


class IntPoly:
    """Polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _normalized(coeffs)

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        return cls(int(tok) for tok in text.split())

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_raw_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_raw_add(self.coeffs, [-c for c in other.coeffs]))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_raw_mul(self.coeffs, other.coeffs))

    def eval(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def rem_monic(self, divisor: "IntPoly") -> "IntPoly":
        """Exact remainder modulo a monic divisor."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        n = divisor.degree
        work = list(self.coeffs)
        for k in range(len(work) - 1, n - 1, -1):
            t = work[k]
            if t:
                for j in range(n):
                    work[k - n + j] -= t * divisor.coeffs[j]
                work[k] = 0
        return IntPoly(work[:n])

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


class ModPoly:
    """Polynomial over F_p.  The modulus is checked for primality once."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int], modulus: int):
        if not is_prime(modulus):
            raise InvalidModulusError(f"modulus {modulus} is not prime")
        self.modulus = modulus
        self.coeffs: tuple[int, ...] = _normalized(c % modulus for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: Sequence[int], modulus: int) -> "ModPoly":
        # Internal constructor: coeffs already reduced and normalized.
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        object.__setattr__(obj, "modulus", modulus)
        return obj

    def _check_ring(self, other: "ModPoly") -> None:
        if self.modulus != other.modulus:
            raise RingMismatchError(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.modulus))

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check_ring(other)
        p = self.modulus
        return ModPoly._raw(
            _normalized(c % p for c in _raw_add(self.coeffs, other.coeffs)), p
        )

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check_ring(other)
        p = self.modulus
        out = _raw_add(self.coeffs, [-c for c in other.coeffs])
        return ModPoly._raw(_normalized(c % p for c in out), p)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check_ring(other)
        p = self.modulus
        out = _raw_mul(self.coeffs, other.coeffs)
        return ModPoly._raw(_normalized(c % p for c in out), p)

    def eval(self, x: int) -> int:
        return _meval(self.coeffs, x % self.modulus, self.modulus)

    def derivative(self) -> "ModPoly":
        p = self.modulus
        out = _normalized(i * c % p for i, c in enumerate(self.coeffs) if i)
        return ModPoly._raw(out, p)

    def monic(self) -> "ModPoly":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        p = self.modulus
        inv = pow(self.coeffs[-1], -1, p)
        return ModPoly._raw(tuple(c * inv % p for c in self.coeffs), p)

    def __repr__(self) -> str:
        return f"ModPoly({list(self.coeffs)!r}, {self.modulus})"


def reduce_mod(a: IntPoly, p: int) -> ModPoly:
    """Project an integer polynomial to F_p[x]; degree may drop."""
    return ModPoly(a.coeffs, p)


def gcd_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic greatest common divisor over F_p."""
    a._check_ring(b)
    p = a.modulus
    return ModPoly._raw(_mgcd(list(a.coeffs), list(b.coeffs), p), p)


def x_pow_mod(exponent: int, f: ModPoly) -> ModPoly:
    """x**exponent reduced modulo f, by square-and-multiply."""
    if f.degree < 1:
        raise ValueError("modulus polynomial must be nonconstant")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    p = f.modulus
    fm = list(f.monic().coeffs)
    return ModPoly._raw(_x_pow_raw(exponent, fm, p), p)


def pow_mod(h: ModPoly, exponent: int, f: ModPoly) -> ModPoly:
    """h**exponent reduced modulo f."""
    h._check_ring(f)
    if f.degree < 1:
        raise ValueError("modulus polynomial must be nonconstant")
    p = f.modulus
    fm = list(f.monic().coeffs)
    base = _mrem(list(h.coeffs), fm, p)
    acc = [1]
    e = exponent
    while e:
        if e & 1:
            acc = _mrem(_mmul(acc, base, p), fm, p)
        e >>= 1
        if e:
            base = _mrem(_msqr(base, p), fm, p)
    return ModPoly._raw(acc, p)


def divmod_mod(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly]:
    """Quotient and remainder over F_p; b must be nonzero."""
    a._check_ring(b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    p = a.modulus
    q, r = _mdivmod(list(a.coeffs), list(b.coeffs), p)
    return ModPoly._raw(q, p), ModPoly._raw(r, p)


# ---------------------------------------------------------------------------
# Raw list-based kernels over F_p.  These avoid object churn in the per-prime
# hot path (root finding for factor-base generation).  Lists are ascending,
# normalized unless stated otherwise.


def _mnorm(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _meval(c: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = (acc * x + v) % p
    return acc


def _mmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = _raw_mul(a, b)
    for i, v in enumerate(out):
        out[i] = v % p
    return _mnorm(out)


def _msqr(a: Sequence[int], p: int) -> list[int]:
    # Symmetric schoolbook square; coefficient reduction deferred to _mrem.
    n = len(a)
    if n == 0:
        return []
    out = [0] * (2 * n - 1)
    for i in range(n):
        ai = a[i]
        if ai:
            out[2 * i] += ai * ai
            twice = ai + ai
            for j in range(i + 1, n):
                out[i + j] += twice * a[j]
    return out


def _mrem(c: list[int], f: Sequence[int], p: int) -> list[int]:
    # f monic; c may carry unreduced (but bounded) coefficients.
    n = len(f) - 1
    for k in range(len(c) - 1, n - 1, -1):
        t = c[k] % p
        if t:
            base = k - n
            for j in range(n):
                c[base + j] -= t * f[j]
    del c[n:]
    for i, v in enumerate(c):
        c[i] = v % p
    return _mnorm(c)


def _mul_by_x(c: list[int], f: Sequence[int], p: int) -> list[int]:
    n = len(f) - 1
    c.insert(0, 0)
    if len(c) > n:
        t = c[n] % p
        del c[n]
        if t:
            for j in range(n):
                c[j] = (c[j] - t * f[j]) % p
    return _mnorm(c)


def _x_pow_raw(e: int, f: Sequence[int], p: int) -> list[int]:
    # x^e mod f for monic f of degree >= 1.
    n = len(f) - 1
    if n == 1:
        return _mnorm([pow((-f[0]) % p, e, p)])
    if e < n:
        return [0] * e + [1]
    acc = [0, 1]
    for bit in bin(e)[3:]:
        acc = _mrem(_msqr(acc, p), f, p)
        if bit == "1":
            acc = _mul_by_x(acc, f, p)
    return acc


def _linear_pow_raw(a: int, e: int, f: Sequence[int], p: int) -> list[int]:
    # (x + a)^e mod f for monic f of degree >= 2.
    acc = [1]
    base = [a % p, 1]
    while e:
        if e & 1:
            acc = _mrem(_mmul_small(acc, base, p), f, p)
        e >>= 1
        if e:
            base = _mrem(_msqr(base, p), f, p)
    return acc


def _mmul_small(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = _raw_mul(a, b)
    return out  # reduction happens in the following _mrem


def _mdivmod(a: list[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    n = len(b) - 1
    if len(a) - 1 < n:
        return [], _mnorm([v % p for v in a])
    inv = pow(b[-1], -1, p)
    rem = [v % p for v in a]
    quot = [0] * (len(a) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        t = rem[k] * inv % p
        if t:
            quot[k - n] = t
            base = k - n
            for j in range(n):
                rem[base + j] = (rem[base + j] - t * b[j]) % p
        rem[k] = 0
    del rem[n:]
    return _mnorm(quot), _mnorm(rem)


def _make_monic(c: list[int], p: int) -> list[int]:
    if not c or c[-1] == 1:
        return c
    inv = pow(c[-1], -1, p)
    for i, v in enumerate(c):
        c[i] = v * inv % p
    return c


def _mgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _mnorm([v % p for v in a])
    b = _mnorm([v % p for v in b])
    while b:
        _, r = _mdivmod(a, b, p)
        a, b = b, r
    return _make_monic(a, p)
