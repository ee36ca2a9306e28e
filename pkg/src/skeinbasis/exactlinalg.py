"""Exact integer linear algebra: determinants over Z and over Z/N."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _square(m: IntMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    rows = m.tolist() if isinstance(m, IntMatrix) else [list(r) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant needs a square matrix")
    return rows


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {n}")


def det_exact(m) -> int:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    a = _square(m)
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def det_mod(m, n: int) -> int:
    """Determinant in Z/n using only ring operations.

    Works for composite ``n``: pivots are produced by Euclid-style row
    subtraction, which never divides.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    a = [[x % n for x in r] for r in _square(m)]
    size = len(a)
    det = 1
    for k in range(size):
        for i in range(k + 1, size):
            while a[i][k]:
                q = a[k][k] // a[i][k]
                a[k] = [(x - q * y) % n for x, y in zip(a[k], a[i])]
                a[k], a[i] = a[i], a[k]
                det = -det
        if a[k][k] == 0:
            return 0
        det = det * a[k][k] % n
    return det % n


def is_unit_mod(d: int, n: int) -> bool:
    _check_odd(n)
    return gcd(d, n) == 1


def is_basis_mod(m, n: int) -> bool:
    """Whether the rows of square ``m`` form a basis of (Z/n)^k."""
    _check_odd(n)
    return is_unit_mod(det_exact(m), n)


def _solve_right(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """X with X·a = b, by Gauss-Jordan on the transposed system."""
    n = len(a)
    at = [[a[j][i] for j in range(n)] for i in range(n)]
    bt = [[b[r][i] for r in range(len(b))] for i in range(n)]
    aug = [at[i] + bt[i] for i in range(n)]
    width = len(aug[0]) if aug else 0
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("trailing block is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    xt = [row[n:width] for row in aug]
    return [[xt[i][r] for i in range(n)] for r in range(len(b))]


def block_reduce(m, sizes: Sequence[int]) -> list[list[list[Fraction]]]:
    """Reduce to block lower-triangular form and return the diagonal blocks.

    For each block of rows, the entries to the right of its diagonal block
    are cleared by subtracting rational combinations of the rows below.  The
    determinant of ``m`` is then the product of the block determinants.
    """
    rows = [[Fraction(x) for x in r] for r in _square(m)]
    n = len(rows)
    if sum(sizes) != n or any(s <= 0 for s in sizes):
        raise ValueError(f"block sizes {list(sizes)} do not partition {n}")
    blocks = []
    start = 0
    for s in sizes:
        end = start + s
        diag = [r[start:end] for r in rows[start:end]]
        if end < n:
            upper = [r[end:] for r in rows[start:end]]
            lower_right = [r[end:] for r in rows[end:]]
            lower_left = [r[start:end] for r in rows[end:]]
            x = _solve_right(lower_right, upper)
            diag = [
                [diag[i][j] - sum(x[i][k] * lower_left[k][j] for k in range(n - end)) for j in range(s)]
                for i in range(s)
            ]
        blocks.append(diag)
        start = end
    return blocks


def det_fraction(m: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / a[k][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def power_of_two(d: int) -> int | None:
    """K with |d| = 2**K, or None."""
    d = abs(d)
    if d == 0 or d & (d - 1):
        return None
    return d.bit_length() - 1
