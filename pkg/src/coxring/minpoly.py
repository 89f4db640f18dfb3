"""
Integer polynomials ``C_n(t)``, the minimal polynomial of ``4 cos^2(pi/n)``.

``C_n`` is obtained from the commutative shadow ``e_n(t)`` of the two-term
recurrence ``c_n(a, b, e, f)`` (substitute ``ba = t``, ``e = f = 1`` and drop the
single left factor ``a`` of the even terms) by exact division by the ``C_N``
of the proper divisors ``N >= 3`` of ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def t(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def divmod_monic(self, d: IntPoly) -> tuple[IntPoly, IntPoly]:
        if not d.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - d.degree)
        for k in range(len(rem) - 1, d.degree - 1, -1):
            c = rem[k]
            if c:
                q[k - d.degree] = c
                for i, b in enumerate(d.coeffs):
                    rem[k - d.degree + i] -= c * b
        return IntPoly(q), IntPoly(rem)

    def exact_div(self, d: IntPoly) -> IntPoly:
        q, r = self.divmod_monic(d)
        if not r.is_zero():
            raise ArithmeticError(f"{d} does not divide {self}")
        return q

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or k == 0) else ""
            body = body + mono if body and mono else body or mono
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def commutative_shadow(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    t = IntPoly.t()
    seq = [IntPoly(), IntPoly.const(1)]
    for k in range(2, n + 1):
        if k % 2 == 0:
            seq.append(seq[k - 1] - seq[k - 2])
        else:
            seq.append(t * seq[k - 1] - seq[k - 2])
    return seq[n]


@lru_cache(maxsize=None)
def min_poly_4cos2(n: int) -> IntPoly:
    if n < 3:
        raise ValueError(f"C_n is defined as a polynomial only for n >= 3, got {n}")
    p = commutative_shadow(n)
    for d in range(3, n):
        if n % d == 0:
            p = p.exact_div(min_poly_4cos2(d))
    return p


def degree_check(n: int) -> bool:
    return min_poly_4cos2(n).degree == euler_phi(n) // 2


def residue_at_root(n: int, dps: int = 60) -> float:
    """``|C_n(4 cos^2(pi/n))|``, evaluated with ``dps`` decimal digits.

    Double precision is not enough: the coefficients grow like ``4^deg``.
    """
    with mpmath.workdps(dps):
        x = 4 * mpmath.cos(mpmath.pi / n) ** 2
        return float(abs(min_poly_4cos2(n)(x)))
