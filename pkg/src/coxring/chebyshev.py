"""
The two-term recurrence ``c_n(a, b, e, f)`` and the polynomials
``C_n(a, b, e, f)``, evaluated in any ring whose elements support ``+``,
``-`` and a multiplication (``*`` by default, or a supplied ``mul``).

Arguments follow the convention ``e, f`` idempotent, ``a in fBe``,
``b in eBf``; nothing here checks that.
"""
from __future__ import annotations

import operator

from .minpoly import min_poly_4cos2


def cheb_c(n: int, a, b, e, f, mul=operator.mul):
    if n < 0:
        raise ValueError("cheb_c is only implemented for n >= 0")
    zero = e - e
    if n == 0:
        return zero
    prev, cur = zero, e
    for k in range(2, n + 1):
        step = a if k % 2 == 0 else b
        prev, cur = cur, mul(step, cur) - prev
    return cur


def cheb_C(n: int, a, b, e, f, mul=operator.mul):
    if n < 2:
        raise ValueError("C_n(a, b, e, f) needs n >= 2")
    if n == 2:
        return a
    poly = min_poly_4cos2(n)
    t = mul(b, a)
    power = e
    acc = e - e
    for k, c in enumerate(poly.coeffs):
        if k:
            power = mul(power, t)
        if c:
            acc = acc + power * c
    return acc
