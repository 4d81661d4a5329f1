"""Exact circulant-matrix verification of the coloring impossibility proofs.

The residue counts of a balanced coloring of G(m, j) or P(m, j, m/2) modulo
n = 3^a satisfy a circulant block system; nonsingularity of that system
forces constant counts, which is the engine behind the nonexistence results.
Everything here is exact: integer Bareiss determinants, rational solves, and
zero tests for sums of roots of unity by divisibility by the cyclotomic
polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import cos, pi
from typing import Iterable, Sequence

from .families import PappusParams, PetersenParams

Matrix = list[list[int]]


class BadSpecError(ValueError):
    """Circulant spec parameters outside the supported setting."""


class NotSquareError(ValueError):
    """Matrix operation on a non-square matrix."""


class SingularMatrixError(ValueError):
    """Exact solve attempted on a singular matrix."""


class LayoutUnknownError(ValueError):
    """Residue counting needs a known family vertex layout."""


@dataclass(frozen=True)
class CirculantSpec:
    """Block parameters: n = 3^a, inner step j, optional Pappus period m."""

    a: int
    j: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.a < 1:
            raise BadSpecError(f"a={self.a} < 1")
        if self.j < 1:
            raise BadSpecError(f"j={self.j} < 1")
        if self.m is not None:
            if self.m % 2:
                raise BadSpecError(f"m={self.m} must be even")
            if self.m % self.n:
                raise BadSpecError(f"n={self.n} must divide m={self.m}")

    @property
    def n(self) -> int:
        return 3**self.a


def circulant(n: int, offsets: Iterable[int]) -> Matrix:
    """Circulant matrix whose row i has entry count of offset d at column i+d.

    Offsets accumulate: the degenerate B block at n = 3, j = 3 has both
    offsets congruent to 0 and comes out as 2I.
    """
    first = [0] * n
    for d in offsets:
        first[d % n] += 1
    return [[first[(c - r) % n] for c in range(n)] for r in range(n)]


def identity_matrix(n: int) -> Matrix:
    return [[1 if r == c else 0 for c in range(n)] for r in range(n)]


def zero_matrix(n: int) -> Matrix:
    return [[0] * n for _ in range(n)]


def build_blocks(spec: CirculantSpec) -> dict[str, Matrix]:
    """The blocks A (outer cycle), B (inner step) and, with m, C (antipode)."""
    n = spec.n
    blocks = {
        "A": circulant(n, [1, -1]),
        "B": circulant(n, [spec.j, -spec.j]),
    }
    if spec.m is not None:
        blocks["C"] = circulant(n, [-(spec.m // 2)])
    return blocks


def _stack(rows: list[list[Matrix]]) -> Matrix:
    out: Matrix = []
    for row in rows:
        height = len(row[0])
        for r in range(height):
            out.append([x for block in row for x in block[r]])
    return out


def assemble_petersen_system(spec: CirculantSpec) -> Matrix:
    """M = [[A, I], [I, B]], the 2n x 2n residue-count system for G(m, j)."""
    blocks = build_blocks(spec)
    n = spec.n
    i = identity_matrix(n)
    return _stack([[blocks["A"], i], [i, blocks["B"]]])


def assemble_pappus_system(spec: CirculantSpec) -> Matrix:
    """L = [[A, I, 0], [I, 0, B], [0, B, C]], the 3n x 3n system for P(m, j, m/2)."""
    if spec.m is None:
        raise BadSpecError("Pappus system needs m")
    blocks = build_blocks(spec)
    n = spec.n
    i = identity_matrix(n)
    z = zero_matrix(n)
    return _stack(
        [[blocks["A"], i, z], [i, z, blocks["B"]], [z, blocks["B"], blocks["C"]]]
    )


def determinant(mat: Matrix) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise NotSquareError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * pivot - a[r][k] * a[k][c]) // prev
            a[r][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_nonzero(mat: Matrix) -> bool:
    return determinant(mat) != 0


def solve_all_ones(mat: Matrix, rhs: Fraction | int) -> list[Fraction]:
    """Exact solution of mat * x = rhs * (1, ..., 1)^T.

    Gaussian elimination over Fractions with partial pivoting; raises
    SingularMatrixError when the matrix is singular.
    """
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise NotSquareError("solve needs a square matrix")
    rhs = Fraction(rhs)
    aug = [[Fraction(x) for x in row] + [rhs] for row in mat]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for r in range(k + 1, n):
            factor = aug[r][k] / pivot
            if factor:
                for c in range(k, n + 1):
                    aug[r][c] -= factor * aug[k][c]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = aug[k][n] - sum(aug[k][c] * x[c] for c in range(k + 1, n))
        x[k] = acc / aug[k][k]
    return x


def eigenvalue_exponents(spec: CirculantSpec, k: int) -> dict[str, list[int]]:
    """Exponent multisets e with lambda_k = sum of omega^(e*k) per block.

    For the Fourier eigenvector v_k = (1, w^k, w^2k, ...), w = e^(2 pi i/n):
    A has w^k + w^-k, B has w^jk + w^-jk, C has w^(-mk/2).
    """
    n = spec.n
    out = {
        "A": sorted([k % n, (-k) % n]),
        "B": sorted([(spec.j * k) % n, (-spec.j * k) % n]),
    }
    if spec.m is not None:
        out["C"] = [(-(spec.m // 2) * k) % n]
    return out


# ---------------------------------------------------------------------------
# cyclotomic zero testing

@lru_cache(maxsize=None)
def cyclotomic(order: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the cyclotomic polynomial Phi_order.

    Computed by dividing x^order - 1 by the product of Phi_d over proper
    divisors d; exact integer arithmetic throughout.
    """
    if order < 1:
        raise ValueError("order must be positive")
    numerator = [0] * (order + 1)
    numerator[0] = -1
    numerator[order] = 1
    for d in range(1, order):
        if order % d == 0:
            numerator = _poly_divide_exact(numerator, list(cyclotomic(d)))
    return tuple(numerator)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of an exact polynomial division (monic-leading divisor)."""
    num = num[:]
    dd = len(den) - 1
    lead = den[dd]
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        coeff = num[k]
        if coeff == 0:
            continue
        q, r = divmod(coeff, lead)
        if r:
            raise ArithmeticError("division not exact")
        quot[k - dd] = q
        for i in range(dd + 1):
            num[k - dd + i] -= q * den[i]
    if any(num):
        raise ArithmeticError("division left a remainder")
    return quot


def is_zero_rootsum(coeffs: Sequence[int]) -> bool:
    """Whether sum of c_e * zeta^e vanishes, zeta = e^(2 pi i / len(coeffs)).

    Exact: the sum is zero iff Phi_N divides the polynomial with those
    coefficients.  Floating point is never consulted; near-misses among
    root sums make approximate tests unreliable.
    """
    order = len(coeffs)
    if order < 1:
        raise ValueError("need at least one coefficient")
    phi = cyclotomic(order)
    rem = list(coeffs)
    dd = len(phi) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        q = rem[k]
        if q == 0:
            continue
        for i in range(dd + 1):
            rem[k - dd + i] -= q * phi[i]
    return not any(rem)


# ---------------------------------------------------------------------------
# vanishing-sum searches

def _pair_poly(order: int, terms: list[tuple[int, int]]) -> list[int]:
    coeffs = [0] * order
    for coeff, exp in terms:
        coeffs[exp % order] += coeff
    return coeffs


def search_vanishing_sums_petersen() -> list[tuple[int, int]]:
    """All solutions of 1 = z1 + 1/z1 + z2 + 1/z2 over 30th roots of unity.

    Scans all 900 ordered exponent pairs exactly, then folds the symmetries
    e -> -e (conjugation, per variable) and z1 <-> z2; canonical pairs are
    sorted with exponents in 0..15.
    """
    solutions = set()
    for e1 in range(30):
        for e2 in range(30):
            coeffs = _pair_poly(
                30, [(-1, 0), (1, e1), (1, -e1), (1, e2), (1, -e2)]
            )
            if is_zero_rootsum(coeffs):
                a, b = min(e1, 30 - e1), min(e2, 30 - e2)
                solutions.add(tuple(sorted((a, b))))
    return sorted(solutions)


def petersen_split_solutions() -> tuple[list[int], list[int]]:
    """Solutions of the split system 1 = z1 + 1/z1 and 0 = z2 + 1/z2.

    The vanishing-sum bound puts z1 among 6th roots and z2 among 4th roots;
    both equations are scanned exhaustively at those orders.  Returns the
    raw exponent lists (expected: +-1 mod 6 and +-1 mod 4).
    """
    unit = [
        e
        for e in range(6)
        if is_zero_rootsum(_pair_poly(6, [(-1, 0), (1, e), (1, -e)]))
    ]
    zero = [
        e
        for e in range(4)
        if is_zero_rootsum(_pair_poly(4, [(1, e), (1, -e)]))
    ]
    return unit, zero


def search_vanishing_sums_pappus() -> list[tuple[int, int, int]]:
    """All solutions of 0 = 1 + z1 + 1/z1 + z2 + 1/z2 + 2*z3 + 2/z3
    over 210th roots of unity.

    The equation only sees t(e) = zeta^e + zeta^-e, so exponents are folded
    to 0..105 and z1 <-> z2 is quotiented; remaining candidates are filtered
    by the real value in floating point with a 1e-6 margin (true zeros sit
    twelve orders of magnitude below it) and every survivor is confirmed
    exactly via Phi_210 divisibility.  Canonical triples: (e1 <= e2, e3).
    """
    t = [2 * cos(2 * pi * e / 210) for e in range(106)]
    survivors = []
    for e1 in range(106):
        base1 = 1.0 + t[e1]
        for e2 in range(e1, 106):
            base2 = base1 + t[e2]
            for e3 in range(106):
                if abs(base2 + 2 * t[e3]) < 1e-6:
                    survivors.append((e1, e2, e3))
    solutions = []
    for e1, e2, e3 in survivors:
        coeffs = _pair_poly(
            210,
            [(1, 0), (1, e1), (1, -e1), (1, e2), (1, -e2), (2, e3), (2, -e3)],
        )
        if is_zero_rootsum(coeffs):
            solutions.append((e1, e2, e3))
    return sorted(solutions)


def pappus_subcase_solutions() -> dict[str, list[int]]:
    """Exhaustive checks of the subcases ruled out in the Pappus argument.

    2*z + 2/z = +-1 has no solution among 6th roots (the candidates are
    quadratic irrationals), and z + 1/z = 0 has no solution among roots of
    odd order (here 105).  All three scans are expected empty.
    """
    plus = [
        e
        for e in range(6)
        if is_zero_rootsum(_pair_poly(6, [(-1, 0), (2, e), (2, -e)]))
    ]
    minus = [
        e
        for e in range(6)
        if is_zero_rootsum(_pair_poly(6, [(1, 0), (2, e), (2, -e)]))
    ]
    odd_zero = [
        e
        for e in range(105)
        if is_zero_rootsum(_pair_poly(105, [(1, e), (1, -e)]))
    ]
    return {"double_pair_plus_one": plus, "double_pair_minus_one": minus, "odd_order_zero_pair": odd_zero}


# ---------------------------------------------------------------------------
# residue-count witnesses

@dataclass(frozen=True)
class ResidueWitness:
    """Residue-class counts of one color and their block-system residual."""

    counts: tuple[tuple[int, ...], ...]
    lhs: tuple[int, ...]
    rhs: int

    @property
    def system_holds(self) -> bool:
        return all(x == self.rhs for x in self.lhs)


def residue_count_witness(
    params: PetersenParams | PappusParams,
    coloring: Sequence[int],
    n: int,
    alpha0: int,
) -> ResidueWitness:
    """Count color-alpha0 vertices per index residue mod n on each ring.

    For G(m, j): x_i counts outer vertices v_t with t = i mod n, y_i inner;
    the balanced-coloring identity is M (x, y) = (m/n) * 1 with
    M = [[A, I], [I, B]] over residues mod n.  For P(m, j, m/2) the three
    ring counts satisfy the L system likewise.  Requires n | m.
    """
    if alpha0 not in (0, 1, 2):
        raise ValueError("alpha0 must be 0, 1 or 2")
    m = params.m
    if n < 1 or m % n:
        raise BadSpecError(f"modulus {n} must divide m={m}")
    if isinstance(params, PetersenParams):
        rings = 2
    elif isinstance(params, PappusParams):
        if 2 * params.k != m:
            raise LayoutUnknownError("Pappus residue system needs k = m/2")
        rings = 3
    else:
        raise LayoutUnknownError(f"unknown family params {type(params).__name__}")
    if len(coloring) != rings * m:
        raise ValueError("coloring length does not match the family layout")
    counts = []
    for ring in range(rings):
        row = [0] * n
        for t in range(m):
            if coloring[ring * m + t] == alpha0:
                row[t % n] += 1
        counts.append(tuple(row))
    aye = circulant(n, [1, -1])
    bee = circulant(n, [params.j, -params.j])
    lhs = []
    if rings == 2:
        x, y = counts
        for i in range(n):
            lhs.append(sum(aye[i][c] * x[c] for c in range(n)) + y[i])
        for i in range(n):
            lhs.append(x[i] + sum(bee[i][c] * y[c] for c in range(n)))
    else:
        cee = circulant(n, [-(m // 2)])
        x, y, z = counts
        for i in range(n):
            lhs.append(sum(aye[i][c] * x[c] for c in range(n)) + y[i])
        for i in range(n):
            lhs.append(x[i] + sum(bee[i][c] * z[c] for c in range(n)))
        for i in range(n):
            lhs.append(
                sum(bee[i][c] * y[c] for c in range(n))
                + sum(cee[i][c] * z[c] for c in range(n))
            )
    return ResidueWitness(tuple(counts), tuple(lhs), m // n)
