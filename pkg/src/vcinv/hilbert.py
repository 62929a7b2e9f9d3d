"""Exact rational Hilbert series: integer numerator over a product of (1 - t^d).

A series is stored exactly as constructed (no implicit cancellation); equality
cross-multiplies the two representations.  Numerator coefficients are Python
ints, so counts never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NotGorensteinSymmetricError(ValueError):
    """Numerator fails the palindromy required for H(1/t) = t^i H(t)."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"numerator not symmetric: coefficient pair {pair}")


def _trim(coeffs: list[int]) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / product over d in denominator of (1 - t^d)."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(sorted(self.denominator)))
        if any(d < 1 for d in self.denominator):
            raise ValueError("denominator degrees must be positive")

    def numerator_degree(self) -> int:
        c = _trim(list(self.numerator))
        if not c:
            raise ValueError("zero numerator")
        return len(c) - 1

    def expand(self, dmax: int) -> list[int]:
        """Power-series coefficients through degree dmax, exactly."""
        if dmax < 0:
            raise ValueError("dmax must be nonnegative")
        c = list(self.numerator[: dmax + 1])
        c += [0] * (dmax + 1 - len(c))
        for d in self.denominator:
            for i in range(d, dmax + 1):
                c[i] += c[i - d]
        return c

    def __eq__(self, other) -> bool:
        """Equality as rational functions, by cross-multiplication."""
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        # cancel shared denominator factors first to keep products small
        mine = list(self.denominator)
        theirs = list(other.denominator)
        for d in list(mine):
            if d in theirs:
                mine.remove(d)
                theirs.remove(d)
        lhs = list(self.numerator)
        for d in theirs:
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            lhs = _polymul(lhs, f)
        rhs = list(other.numerator)
        for d in mine:
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            rhs = _polymul(rhs, f)
        return _trim(lhs) == _trim(rhs)

    def __hash__(self):
        return hash((tuple(_trim(list(self.numerator))), self.denominator))

    def to_json_dict(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "denominator": list(self.denominator),
        }

    def __repr__(self):
        return f"HilbertSeries(numerator={list(self.numerator)}, denominator={list(self.denominator)})"


def from_free_module(basis_degrees: Iterable[int], hsop_degrees: Iterable[int]) -> HilbertSeries:
    """Series of a free module: sum of t^e over basis degrees / prod (1 - t^d)."""
    degrees = list(basis_degrees)
    hsop = tuple(hsop_degrees)
    if not hsop:
        raise ValueError("empty denominator")
    numerator = [0] * (max(degrees, default=0) + 1)
    for e in degrees:
        if e < 0:
            raise ValueError("negative basis degree")
        numerator[e] += 1
    return HilbertSeries(tuple(numerator), hsop)


def series_equal(a: HilbertSeries, b: HilbertSeries) -> bool:
    return a == b


# -- closed-form numerator for the special-linear invariant ring ---------------


def sl2_numerator_first(q: int) -> list[int]:
    """Coefficients 1,2,...,q,...,2,1 on exponents j(q+1): the u-power block."""
    out = [0] * (2 * q * q - 1)
    for j in range(2 * q - 1):
        out[j * (q + 1)] = j + 1 if j <= q - 1 else 2 * q - 1 - j
    return out


def sl2_numerator_second(q: int, k: int) -> list[int]:
    """Coefficients 1,...,q-1,...,1 on exponents 2k + j(q+1), 0 <= j <= 2q-4."""
    out = [0] * (2 * k + (2 * q - 4) * (q + 1) + 1)
    for j in range(2 * q - 3):
        out[2 * k + j * (q + 1)] = j + 1 if j <= q - 2 else 2 * q - 3 - j
    return out


def sl2_numerator_second_total(q: int) -> list[int]:
    total: list[int] = []
    for k in range(1, q + 1):
        part = sl2_numerator_second(q, k)
        if len(part) > len(total):
            total += [0] * (len(part) - len(total))
        for i, c in enumerate(part):
            total[i] += c
    return total


def sl2_numerator_third(q: int) -> list[int]:
    """Coefficient q-2 on exponents q^2-q+2k, 0 <= k <= q-1; empty at q = 2."""
    if q == 2:
        return []
    out = [0] * (q * q + q - 1)
    for k in range(q):
        out[q * q - q + 2 * k] = q - 2
    return out


def sl2_series_closed_form(q: int) -> HilbertSeries:
    """The special-linear invariant-ring series over (1-t^{q+1})^2 (1-t^{q^2-q})^2."""
    if q < 2:
        raise ValueError("q must be at least 2")
    total = sl2_numerator_first(q)
    for part in (sl2_numerator_second_total(q), sl2_numerator_third(q)):
        if len(part) > len(total):
            total += [0] * (len(part) - len(total))
        for i, c in enumerate(part):
            total[i] += c
    return HilbertSeries(tuple(total), (q + 1, q + 1, q * q - q, q * q - q))


def gorenstein_exponent(series: HilbertSeries) -> int:
    """The exponent i with H(1/t) = t^i H(t), via numerator palindromy.

    Substituting 1/t turns each denominator factor into -t^(-d)(1 - t^d), so
    the functional equation holds iff the numerator window is palindromic up
    to the sign (-1)^m, and then i = sum(d_i) - deg - low.
    """
    c = list(series.numerator)
    hi = len(_trim(c)) - 1
    if hi < 0:
        raise ValueError("zero numerator")
    lo = next(i for i, x in enumerate(c) if x != 0)
    sign = 1 if len(series.denominator) % 2 == 0 else -1
    for k in range(hi - lo + 1):
        if c[lo + k] != sign * c[hi - k]:
            raise NotGorensteinSymmetricError(((lo + k, c[lo + k]), (hi - k, c[hi - k])))
    return sum(series.denominator) - hi - lo
