"""Exact polynomials in one variable q with integer coefficients.

Coefficients are Python ints, so nothing ever overflows.  Values are
immutable and hashable; ``QPoly.coeffs[k]`` is the coefficient of ``q**k``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(x) for x in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def low_degree(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.const(other)
        raise TypeError(f"cannot combine QPoly with {type(other).__name__}")

    def __add__(self, other) -> "QPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def divmod(self, divisor: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division; the divisor must have leading coefficient dividing every step."""
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        if len(rem) < len(d):
            return ZERO, self
        quot = [0] * (len(rem) - len(d) + 1)
        lead = d[-1]
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                raise ArithmeticError("non-integral quotient coefficient")
            c //= lead
            quot[k] = c
            if c:
                for i, y in enumerate(d):
                    rem[k + i] -= c * y
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quot, rem = self.divmod(divisor)
        if rem:
            raise ArithmeticError(f"inexact division: remainder {rem}")
        return quot

    def __floordiv__(self, other) -> "QPoly":
        return self.exact_div(self._coerce(other))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                terms.append(f"{c}*{mono}" if c != 1 else mono)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "QPoly":
        return cls(int(c) for c in data)


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


@lru_cache(maxsize=None)
def q_int(k: int) -> QPoly:
    """[k]_q = 1 + q + ... + q^(k-1); zero when k = 0."""
    if k < 0:
        raise ValueError("q-integer of a negative number")
    return QPoly((1,) * k)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q-factorial of a negative number")
    p = ONE
    for i in range(2, n + 1):
        p = p * q_int(i)
    return p


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial, by exact division of q-factorials."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


@lru_cache(maxsize=None)
def q_binomial_pascal(n: int, k: int) -> QPoly:
    """Gaussian binomial via binom(n,k) = q^k binom(n-1,k) + binom(n-1,k-1)."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial_pascal(n - 1, k).shift(k) + q_binomial_pascal(n - 1, k - 1)


# -- shape predicates --------------------------------------------------
# The zero polynomial passes all three.


def is_palindromic(p: QPoly, twice_center: int) -> bool:
    """Coefficient of q^k equals that of q^(twice_center - k) for every k."""
    if p.is_zero():
        return True
    top = max(len(p.coeffs) - 1, twice_center)
    return all(p[k] == p[twice_center - k] if twice_center - k >= 0 else p[k] == 0
               for k in range(0, top + 1))


def is_unimodal(p: QPoly) -> bool:
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def is_log_concave(p: QPoly) -> bool:
    c = p.coeffs
    return all(c[k] * c[k] >= c[k - 1] * c[k + 1] for k in range(1, len(c) - 1))


def is_nonnegative(p: QPoly) -> bool:
    return all(c >= 0 for c in p.coeffs)
