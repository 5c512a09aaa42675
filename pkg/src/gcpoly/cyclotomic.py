"""Exact arithmetic in the cyclotomic field Q(zeta_N).

A value is a vector of rationals over the power basis 1, z, ..., z^(d-1)
where z is a primitive N-th root of unity and d = deg Phi_N.  Every
operation reduces modulo Phi_N immediately, so two equal values always
have identical coefficient vectors and equality is plain comparison.

Values from different conductors never mix: arithmetic raises unless one
side is rational, in which case it is coerced.  Each factorisation run is
expected to pick one conductor (the exponent of its voltage group) and
stay inside it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; plain long division, exact over the integers
    num = list(num)
    d = len(den) - 1
    q = [0] * max(len(num) - d, 0)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            q[i - d] = c
            for k, dc in enumerate(den):
                num[i - d + k] -= c * dc
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.  Phi_1 = x - 1."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [0] * n + [1]
    num[0] = -1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _int_poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return tuple(num)


@lru_cache(maxsize=None)
def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(conductor: int, raw: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(conductor)
    d = len(phi) - 1
    raw = list(raw)
    for i in range(len(raw) - 1, d - 1, -1):
        c = raw[i]
        if c:
            raw[i] = Fraction(0)
            for k in range(d):
                raw[i - d + k] -= c * phi[k]
    raw = raw[:d] + [Fraction(0)] * (d - len(raw))
    return tuple(Fraction(c) for c in raw[:d])


class CyclotomicNumber:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        self.conductor = conductor
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != _phi_degree(conductor):
            raise ValueError("coefficient vector has the wrong length")
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_raw(cls, conductor: int, raw) -> CyclotomicNumber:
        return cls(conductor, _reduce(conductor, [Fraction(c) for c in raw]))

    @classmethod
    def zero(cls, conductor: int) -> CyclotomicNumber:
        return cls(conductor, [0] * _phi_degree(conductor))

    @classmethod
    def one(cls, conductor: int) -> CyclotomicNumber:
        return cls.from_rational(conductor, 1)

    @classmethod
    def from_rational(cls, conductor: int, q) -> CyclotomicNumber:
        raw = [Fraction(q)] + [Fraction(0)] * (_phi_degree(conductor) - 1)
        return cls.from_raw(conductor, raw)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CyclotomicNumber:
        p = power % conductor
        raw = [Fraction(0)] * (p + 1)
        raw[p] = Fraction(1)
        return cls.from_raw(conductor, raw)

    # coercion

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            if other.conductor == self.conductor:
                return other
            if other.is_rational():
                return CyclotomicNumber.from_rational(
                    self.conductor, other.rational_value())
            if self.is_rational():
                # handled by the caller swapping roles
                return None
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}")
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.conductor, other)
        return None

    # ring operations

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CyclotomicNumber):
                return other + self.rational_value()
            return NotImplemented
        return CyclotomicNumber(
            self.conductor,
            [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CyclotomicNumber):
                return -(other - self.rational_value())
            return NotImplemented
        return CyclotomicNumber(
            self.conductor,
            [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CyclotomicNumber):
                return other * self.rational_value()
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        raw = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicNumber.from_raw(self.conductor, raw)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = CyclotomicNumber.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        f = list(self.coeffs)
        while f and not f[-1]:
            f.pop()
        # extended euclid over Q[x]: u*f + v*phi = g with g constant
        r0, r1 = phi, f
        s0, s1 = [], [Fraction(1)]

        def deg(p):
            return len(p) - 1

        def sub_scaled(p, q, c, shift):
            out = list(p) + [Fraction(0)] * max(0, len(q) + shift - len(p))
            for i, x in enumerate(q):
                out[i + shift] -= c * x
            while out and not out[-1]:
                out.pop()
            return out

        while deg(r1) > 0:
            # one division step at a time keeps this short
            q_shift = deg(r0) - deg(r1)
            if q_shift < 0:
                r0, r1 = r1, r0
                s0, s1 = s1, s0
                continue
            c = r0[-1] / r1[-1]
            r0 = sub_scaled(r0, r1, c, q_shift)
            s0 = sub_scaled(s0, s1, c, q_shift)
            if deg(r0) < deg(r1):
                r0, r1 = r1, r0
                s0, s1 = s1, s0
        if not r1:
            raise ZeroDivisionError("element is not invertible")
        g = r1[0]
        inv = [c / g for c in s1]
        return CyclotomicNumber.from_raw(self.conductor, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CyclotomicNumber):
                return other.__rtruediv__(self)
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # structure

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugation, the Galois action z -> z^(N-1)."""
        n = self.conductor
        raw = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                raw[(n - i) % n] += c
        return CyclotomicNumber.from_raw(n, raw)

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            return False
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = f"{mag}"
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {self!s})"
