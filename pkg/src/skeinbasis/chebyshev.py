"""Chebyshev polynomials of the first kind, normalized so T_0 = 2.

T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.  With this normalization
T_k(z + 1/z) = z^k + z^-k and T_a T_b = T_{a+b} + T_{|a-b|}.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb

import mpmath


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for d, v in terms.items():
            c[d] += v
        return cls(tuple(c))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, v: int) -> "IntPolynomial":
        return cls((v,))

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {d: v for d, v in enumerate(self.coeffs) if v}

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """self(inner(x)), by Horner."""
        out = IntPolynomial()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mag = abs(c)
            body = str(mag) if d == 0 or mag != 1 else ""
            if d >= 1:
                body += "x" if d == 1 else f"x^{d}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(v) -> IntPolynomial:
    return v if isinstance(v, IntPolynomial) else IntPolynomial.const(v)


_table: list[IntPolynomial] = [IntPolynomial.const(2), IntPolynomial.x()]
_lock = threading.Lock()


def chebyshev_T(k: int) -> IntPolynomial:
    """T_k from the three-term recursion (memoized)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= len(_table):
        with _lock:
            x = IntPolynomial.x()
            while len(_table) <= k:
                _table.append(x * _table[-1] - _table[-2])
    return _table[k]


def chebyshev_T_closed(k: int) -> IntPolynomial:
    """T_k from the explicit sum of (-1)^i k/(k-i) C(k-i, i) x^(k-2i)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return IntPolynomial.const(2)
    terms = {}
    for i in range(k // 2 + 1):
        num = k * comb(k - i, i)
        q, r = divmod(num, k - i)
        assert r == 0, (k, i)
        terms[k - 2 * i] = (-1) ** i * q
    return IntPolynomial.from_terms(terms)


def product_to_sum_check(a: int, b: int) -> bool:
    return chebyshev_T(a) * chebyshev_T(b) == chebyshev_T(a + b) + chebyshev_T(abs(a - b))


def compose_check(a: int, b: int) -> bool:
    return chebyshev_T(a).compose(chebyshev_T(b)) == chebyshev_T(a * b)


def de_moivre_check(k: int, z: complex, tol: float = 1e-9) -> bool:
    """|T_k(z + 1/z) - (z^k + z^-k)| < tol.

    Evaluated with 50 significant digits: plain double-precision Horner
    loses about 1e-8 on T_20 near the unit circle.
    """
    if z == 0:
        raise ValueError("z must be nonzero")
    with mpmath.workdps(50):
        w = mpmath.mpc(z)
        lhs = chebyshev_T(k)(w + 1 / w)
        rhs = w**k + w ** (-k)
        return bool(abs(lhs - rhs) < tol)


def verify_identities(max_k: int) -> dict[str, bool]:
    """Run all identity suites up to ``max_k`` (composition up to min(max_k, 12))."""
    closed = all(chebyshev_T_closed(k) == chebyshev_T(k) for k in range(max_k + 1))
    pts = all(product_to_sum_check(a, b) for a in range(max_k + 1) for b in range(max_k + 1))
    cmax = min(max_k, 12)
    comp = all(compose_check(a, b) for a in range(cmax + 1) for b in range(cmax + 1))
    angles = [mpmath.expjpi(mpmath.mpf(2 * j) / 100) for j in range(100)]
    dm = all(de_moivre_check(k, complex(z)) for k in range(min(max_k, 20) + 1) for z in angles)
    return {"closed_form": closed, "product_to_sum": pts, "composition": comp, "de_moivre": dm}
