# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rational kernels.

Every operand is brought to a common denominator once, the arithmetic runs
on plain integers, and a single Fraction is built at the end. This skips the
gcd normalisation Fraction performs after every intermediate operation.
"""
from fractions import Fraction
from math import gcd


cdef inline object _lcm(object x, object y):
    return x // gcd(x, y) * y


cdef tuple _cleared3(object u):
    cdef object a = u[0], b = u[1], c = u[2]
    cdef object da = a.denominator, db = b.denominator, dc = c.denominator
    cdef object d = _lcm(_lcm(da, db), dc)
    return (a.numerator * (d // da), b.numerator * (d // db),
            c.numerator * (d // dc), d)


def bilinear(k, u, v):
    cdef object d = 1
    cdef int i
    for i in range(9):
        d = _lcm(d, k[i].denominator)
    cdef list ki = [k[i].numerator * (d // k[i].denominator) for i in range(9)]
    cdef tuple uu = _cleared3(u)
    cdef tuple vv = _cleared3(v)
    cdef object u0 = uu[0], u1 = uu[1], u2 = uu[2]
    cdef object v0 = vv[0], v1 = vv[1], v2 = vv[2]
    cdef object num = (
        u0 * (ki[0] * v0 + ki[1] * v1 + ki[2] * v2)
        + u1 * (ki[3] * v0 + ki[4] * v1 + ki[5] * v2)
        + u2 * (ki[6] * v0 + ki[7] * v1 + ki[8] * v2)
    )
    return Fraction(num, d * uu[3] * vv[3])


def bilinear_diag(d, u, v):
    cdef tuple dd = _cleared3(d)
    cdef tuple uu = _cleared3(u)
    cdef tuple vv = _cleared3(v)
    cdef object num = uu[0] * dd[0] * vv[0] + uu[1] * dd[1] * vv[1] + uu[2] * dd[2] * vv[2]
    return Fraction(num, dd[3] * uu[3] * vv[3])


def det3(u, v, w):
    cdef tuple a = _cleared3(u)
    cdef tuple b = _cleared3(v)
    cdef tuple c = _cleared3(w)
    cdef object num = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
    )
    return Fraction(num, a[3] * b[3] * c[3])
