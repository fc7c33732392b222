"""Contiguous relations of 2F1 and reduction to the basis {F(A,B;C), F(A+1,B;C)}.

Shifts are transported with 2x2 matrices acting on the auxiliary basis
[F, theta F] (theta = z d/dz); theta^2 F is eliminated with the
hypergeometric equation.  Only the final step converts to [F, F(A+1)]
through theta F = A (F(A+1) - F).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PathDegeneracyError
from .poly import Poly, RationalFunction
from .series import PuiseuxSeries
from .hypergeom import hypergeometric_coefficients


def _rf(c) -> RationalFunction:
    return RationalFunction.const(Fraction(c), "z")


_Z = RationalFunction(Poly.gen("z"))
_ONE = _rf(1)


@dataclass(frozen=True)
class ShiftVector:
    k: int
    l: int
    m: int

    def __add__(self, other):
        return ShiftVector(self.k + other.k, self.l + other.l, self.m + other.m)


@dataclass(frozen=True)
class BasisExpression:
    """p F(A,B;C) + q F(A+1,B;C) with p, q rational in z."""

    p: RationalFunction
    q: RationalFunction

    def scale(self, c) -> "BasisExpression":
        return BasisExpression(self.p * c, self.q * c)

    def series(self, A, B, C, order: int) -> PuiseuxSeries:
        """Series of the expression, exact through z**order."""
        return _combine_series(self.p, self.q, A, B, C, order)


def rational_function_series(f: RationalFunction, prec) -> PuiseuxSeries:
    """Laurent expansion of f at z=0, known modulo z**prec."""
    den_val = f.den.valuation()
    extra = den_val + 1
    num = PuiseuxSeries.from_poly(f.num, prec + 2 * extra)
    den = PuiseuxSeries.from_poly(f.den, prec + 2 * extra)
    return (num / den).truncate(prec)


def _combine_series(p, q, A, B, C, order):
    prec = order + 1
    shift = max(p.den.valuation(), q.den.valuation())
    n = prec + shift + 1
    f0 = PuiseuxSeries(hypergeometric_coefficients(A, B, C, n), 0, 1, n)
    f1 = PuiseuxSeries(hypergeometric_coefficients(Fraction(A) + 1, B, C, n), 0, 1, n)
    ps = rational_function_series(p, n) if p else PuiseuxSeries.zero(n)
    qs = rational_function_series(q, n) if q else PuiseuxSeries.zero(n)
    return (ps * f0 + qs * f1).truncate(prec)


# --- the three classical relations ------------------------------------------

def relation_b_up(A, B, C) -> BasisExpression:
    """F(A,B+1;C) = ((B-A)/B) F + (A/B) F(A+1,B;C)."""
    A, B = Fraction(A), Fraction(B)
    if B == 0:
        raise PathDegeneracyError("b+1", (A, B, Fraction(C)))
    return BasisExpression(_rf((B - A) / B), _rf(A / B))


def relation_c_down(A, B, C) -> BasisExpression:
    """F(A,B;C-1) = ((C-A-1)/(C-1)) F + (A/(C-1)) F(A+1,B;C)."""
    A, C = Fraction(A), Fraction(C)
    if C == 1:
        raise PathDegeneracyError("c-1", (A, Fraction(B), C))
    return BasisExpression(_rf((C - A - 1) / (C - 1)), _rf(A / (C - 1)))


def relation_a_down(A, B, C) -> BasisExpression:
    """From A(1-z)F(A+1) = (2A-C-Az+Bz)F + (C-A)F(A-1)."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if C == A:
        raise PathDegeneracyError("a-1", (A, B, C))
    lin = RationalFunction(Poly([2 * A - C, B - A], "z"))
    p = -lin / (C - A)
    q = RationalFunction(Poly([A, -A], "z")) / (C - A)
    return BasisExpression(p, q)


# --- transport matrices on [F, theta F] -------------------------------------

def _theta2(a, b, c):
    """theta^2 F = u F + v theta F, from the hypergeometric equation."""
    one_minus_z = _ONE - _Z
    u = _Z * (a * b) / one_minus_z
    v = (_rf(1 - c) + _Z * (a + b)) / one_minus_z
    return u, v


def _raise_matrix(a, b, c, which):
    """Matrix M with W(shifted) = M W for a+1, b+1 or c-1."""
    if which == "a":
        d = a
    elif which == "b":
        d = b
    else:
        d = c - 1
    if d == 0:
        step = {"a": "a+1", "b": "b+1", "c": "c-1"}[which]
        raise PathDegeneracyError(step, (a, b, c))
    u, v = _theta2(a, b, c)
    # shifted F = F + theta F / d ; shifted theta F = theta F + theta^2 F / d
    return ((_ONE, _rf(1 / d)), (u / d, _ONE + v / d))


def _mat_mul(M, N):
    return tuple(
        tuple(M[i][0] * N[0][j] + M[i][1] * N[1][j] for j in range(2)) for i in range(2)
    )


def _mat_inv(M, step, params):
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if det.is_zero():
        raise PathDegeneracyError(step, params)
    inv = det.inverse()
    return ((M[1][1] * inv, -M[0][1] * inv), (-M[1][0] * inv, M[0][0] * inv))


def _step(a, b, c, move):
    """(matrix, new params) for a single unit move."""
    if move == "a+1":
        return _raise_matrix(a, b, c, "a"), (a + 1, b, c)
    if move == "b+1":
        return _raise_matrix(a, b, c, "b"), (a, b + 1, c)
    if move == "c-1":
        return _raise_matrix(a, b, c, "c"), (a, b, c - 1)
    if move == "a-1":
        new = (a - 1, b, c)
        try:
            M = _raise_matrix(*new, "a")
        except PathDegeneracyError:
            raise PathDegeneracyError(move, (a, b, c)) from None
        return _mat_inv(M, move, (a, b, c)), new
    if move == "b-1":
        new = (a, b - 1, c)
        try:
            M = _raise_matrix(*new, "b")
        except PathDegeneracyError:
            raise PathDegeneracyError(move, (a, b, c)) from None
        return _mat_inv(M, move, (a, b, c)), new
    if move == "c+1":
        new = (a, b, c + 1)
        try:
            M = _raise_matrix(*new, "c")
        except PathDegeneracyError:
            raise PathDegeneracyError(move, (a, b, c)) from None
        return _mat_inv(M, move, (a, b, c)), new
    raise ValueError(move)


def elimination_path(shift: ShiftVector) -> list[str]:
    """Unit moves from the base parameters to the target.

    Read backwards from the target this removes the C shift first, then
    the B shift, then the A shift.
    """
    moves = []
    moves += ["a+1" if shift.k > 0 else "a-1"] * abs(shift.k)
    moves += ["b+1" if shift.l > 0 else "b-1"] * abs(shift.l)
    moves += ["c-1" if shift.m < 0 else "c+1"] * abs(shift.m)
    return moves


def theta_basis_matrix(A, B, C, shift: ShiftVector):
    """Matrix expressing [F', theta F'] (shifted params) in [F, theta F]."""
    a, b, c = Fraction(A), Fraction(B), Fraction(C)
    M = ((_ONE, _rf(0)), (_rf(0), _ONE))
    for move in elimination_path(shift):
        S, (a, b, c) = _step(a, b, c, move)
        M = _mat_mul(S, M)
    return M


def express_in_basis(A, B, C, shift) -> BasisExpression:
    """F(A+k,B+l;C+m) = p F(A,B;C) + q F(A+1,B;C)."""
    if not isinstance(shift, ShiftVector):
        shift = ShiftVector(*shift)
    A = Fraction(A)
    M = theta_basis_matrix(A, B, C, shift)
    w0, w1 = M[0]
    # theta F = A (F(A+1) - F)
    return BasisExpression(w0 - w1 * A, w1 * A)


def express_in_basis_any_order(A, B, C, shift) -> tuple[BasisExpression, bool]:
    """express_in_basis, retrying with A and B exchanged on a degenerate path.

    Returns the expression and whether the swap was used.  After a swap
    the basis is {F(A,B;C), F(A,B+1;C)}.
    """
    if not isinstance(shift, ShiftVector):
        shift = ShiftVector(*shift)
    try:
        return express_in_basis(A, B, C, shift), False
    except PathDegeneracyError:
        swapped = ShiftVector(shift.l, shift.k, shift.m)
        return express_in_basis(B, A, C, swapped), True


def derivative_as_contiguous(A, B, C) -> BasisExpression:
    """dF/dz in the basis.

    Equal to (AB/C) F(A+1,B+1;C+1); computed as (A/z)(F(A+1) - F), which
    avoids the intermediate parameters of the (1,1,1) shift path.
    """
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if A * B == 0:
        zero = _rf(0)
        return BasisExpression(zero, zero)
    w = _rf(A) / _Z
    return BasisExpression(-w, w)
