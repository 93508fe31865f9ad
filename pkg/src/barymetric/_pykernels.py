"""Pure-Python rational kernels.

Straight Fraction arithmetic, one term at a time. Used when the compiled
module is unavailable, and as the reference the compiled kernels are
benchmarked and tested against.
"""
from fractions import Fraction


def bilinear(k, u, v):
    """Return u·K·vᵀ for a row-major 9-entry matrix ``k``."""
    total = Fraction(0)
    for i in range(3):
        if not u[i]:
            continue
        row = 0
        for j in range(3):
            row += k[3 * i + j] * v[j]
        total += u[i] * row
    return Fraction(total)


def bilinear_diag(d, u, v):
    """Return u·diag(d)·vᵀ."""
    return Fraction(u[0] * d[0] * v[0] + u[1] * d[1] * v[1] + u[2] * d[2] * v[2])


def det3(u, v, w):
    """Determinant of the matrix with columns u, v, w."""
    return Fraction(
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
    )
