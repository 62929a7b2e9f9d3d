"""Exact arithmetic in small finite fields F_q, q = p^r.

Elements are stored as integer codes in [0, q): the code is the value of the
representative polynomial's coefficient vector read in base p, low degree
first.  A ``FieldSpec`` fixes the characteristic, the extension degree and a
canonical irreducible modulus, so codes are comparable across the whole
program.  Specs and elements are immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

SIZE_LIMIT = 1 << 16
_TABLE_LIMIT = 1024  # build q x q lookup tables only below this size


class FieldMismatchError(ValueError):
    """Two operands belong to different field specs."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of num by monic den, coefficients mod p, low degree first."""
    num = list(num)
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dn + 1):
                num[i - dn + j] = (num[i - dn + j] - c * den[j]) % p
    res = [c % p for c in num[:dn]]
    return tuple(res)


def _poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive factor test for a monic polynomial over F_p (small degrees)."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] != 1:
        return False
    if coeffs[0] == 0:  # divisible by T
        return deg == 1
    for fdeg in range(1, deg // 2 + 1):
        for code in range(p**fdeg):
            f = _decode(code, p, fdeg) + (1,)
            if not any(_poly_mod(coeffs, f, p)):
                return False
    return True


def _decode(code: int, p: int, r: int) -> tuple[int, ...]:
    out = []
    for _ in range(r):
        out.append(code % p)
        code //= p
    return tuple(out)


def _encode(coords: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(coords):
        code = code * p + (c % p)
    return code


def _canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree r.

    Candidate low-degree coefficient tuples (c0, ..., c_{r-1}) are compared
    lexicographically with c0 most significant.
    """
    if r == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=r):
        cand = low + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """A finite field F_{p^r} with a fixed monic irreducible modulus."""

    __slots__ = ("p", "r", "q", "modulus", "_mul_table", "_inv_table", "_neg_table")

    def __init__(self, p: int, r: int, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        if p**r > SIZE_LIMIT:
            raise ValueError(f"field size {p}^{r} exceeds guard {SIZE_LIMIT}")
        self.p = p
        self.r = r
        self.q = p**r
        if modulus is None:
            self.modulus = _canonical_modulus(p, r)
        else:
            mod = tuple(c % p for c in modulus)
            if r == 1:
                if mod != (0, 1):
                    raise ValueError("prime fields use the modulus convention T")
            elif len(mod) != r + 1 or not _poly_is_irreducible(mod, p):
                raise ValueError("modulus must be monic irreducible of degree r")
            self.modulus = mod
        self._mul_table = None
        self._inv_table = None
        self._neg_table = None

    # -- code-level arithmetic -------------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        ca, cb = _decode(a, p, self.r), _decode(b, p, self.r)
        return _encode([(x + y) % p for x, y in zip(ca, cb)], p)

    def sub_codes(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        p = self.p
        ca, cb = _decode(a, p, self.r), _decode(b, p, self.r)
        return _encode([(x - y) % p for x, y in zip(ca, cb)], p)

    def neg_code(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        p = self.p
        return _encode([(-x) % p for x in _decode(a, p, self.r)], p)

    def mul_codes(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        tab = self._mul_table
        if tab is not None:
            return tab[a][b]
        return self._mul_codes_slow(a, b)

    def _mul_codes_slow(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        ca, cb = _decode(a, p, r), _decode(b, p, r)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return _encode(_poly_mod(tuple(prod), self.modulus, p), p)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.r == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow_code(a, self.q - 2)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv_code(a)
            e = -e
        result = 1
        base = a
        while e > 0:
            if e & 1:
                result = self.mul_codes(result, base)
            base = self.mul_codes(base, base)
            e >>= 1
        return result

    def build_tables(self) -> None:
        """Precompute q x q multiplication and length-q inverse/negation tables."""
        if self._mul_table is not None:
            return
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"lookup tables unsupported for q = {self.q} > {_TABLE_LIMIT}")
        q = self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self._mul_codes_slow(a, b) if self.r > 1 else (a * b) % self.p
                mul[a][b] = v
                mul[b][a] = v
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow_code(a, self.q - 2) if self.r > 1 else pow(a, -1, self.p)
        self._neg_table = [self.neg_code(a) for a in range(q)]
        self._inv_table = inv
        self._mul_table = mul

    # -- elements ---------------------------------------------------------

    def element(self, value) -> "FieldElem":
        """Coerce an int (reduced mod p), coordinate sequence or element."""
        if isinstance(value, FieldElem):
            if value.spec is not self:
                raise FieldMismatchError("element from a different field spec")
            return value
        if isinstance(value, int):
            return FieldElem(self, value % self.p)
        coords = list(value)
        if len(coords) != self.r:
            raise ValueError(f"expected {self.r} coordinates")
        return FieldElem(self, _encode(coords, self.p))

    def from_code(self, code: int) -> "FieldElem":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range [0, {self.q})")
        return FieldElem(self, code)

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self) -> Iterator["FieldElem"]:
        """All q elements in deterministic (code) order."""
        return (FieldElem(self, c) for c in range(self.q))

    def nonzero_elements(self) -> Iterator["FieldElem"]:
        return (FieldElem(self, c) for c in range(1, self.q))

    def power_sum(self, a: int) -> "FieldElem":
        """Sum of z^a over all nonzero z, by direct summation.

        Equals 0 when a is not a multiple of q-1 and -1 when it is; a = 0 is
        the degenerate sum of q-1 copies of 1 (which also equals -1).
        """
        if a < 0:
            raise ValueError("exponent must be nonnegative")
        acc = 0
        for z in range(1, self.q):
            acc = self.add_codes(acc, self.pow_code(z, a))
        return FieldElem(self, acc)

    def primitive_element(self) -> "FieldElem":
        """Least nonzero element (code order) of multiplicative order q - 1."""
        for c in range(1, self.q):
            e, n = c, 1
            while e != 1:
                e = self.mul_codes(e, c)
                n += 1
            if n == self.q - 1:
                return FieldElem(self, c)
        raise AssertionError("no primitive element found")  # unreachable

    # -- misc ---------------------------------------------------------------

    def basis_over_prime_field(self) -> list["FieldElem"]:
        """The powers 1, T, ..., T^(r-1) as an F_p-basis of F_q."""
        return [FieldElem(self, self.p**i) for i in range(self.r)]

    def elem_str(self, code: int) -> str:
        if self.r == 1:
            return str(code)
        coords = _decode(code, self.p, self.r)
        parts = []
        for i, c in enumerate(coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "T" if i == 1 else f"T^{i}"
                parts.append(t if c == 1 else f"{c}*{t}")
        return "+".join(parts) if parts else "0"

    def parse_elem(self, text: str) -> "FieldElem":
        text = text.strip()
        coords = [0] * self.r
        for part in text.split("+"):
            part = part.strip()
            if not part:
                raise ValueError(f"malformed field element {text!r}")
            if "T" not in part:
                coords[0] = (coords[0] + int(part)) % self.p
                continue
            if self.r == 1:
                raise ValueError("prime field elements are plain residues")
            if "*" in part:
                cs, ts = part.split("*", 1)
                c = int(cs)
            else:
                c, ts = 1, part
            ts = ts.strip()
            i = 1 if ts == "T" else int(ts.removeprefix("T^"))
            if i >= self.r:
                raise ValueError(f"exponent {i} too large in {text!r}")
            coords[i] = (coords[i] + c) % self.p
        return self.element(coords)

    def to_text(self) -> str:
        return f"{self.p}^{self.r}/" + ",".join(str(c) for c in self.modulus)

    def __repr__(self):
        return f"FieldSpec(p={self.p}, r={self.r})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))


class FieldElem:
    """An element of F_q in canonical coordinates over the spec's modulus."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coords(self) -> tuple[int, ...]:
        return _decode(self.code, self.spec.p, self.spec.r)

    def is_zero(self) -> bool:
        return self.code == 0

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatchError("operands from different field specs")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.add_codes(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub_codes(self.code, o.code))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.sub_codes(o.code, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.spec, self.spec.mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_code(self.code))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv_code(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.pow_code(self.code, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == other % self.spec.p
        return (
            isinstance(other, FieldElem)
            and self.spec == other.spec
            and self.code == other.code
        )

    def __hash__(self):
        return hash((self.spec.p, self.spec.r, self.code))

    def __repr__(self):
        return self.spec.elem_str(self.code)


@lru_cache(maxsize=None)
def field_make(p: int, r: int = 1) -> FieldSpec:
    """Build (and cache) the field F_{p^r} with its canonical modulus."""
    return FieldSpec(p, r)


def parse_field_spec(text: str) -> FieldSpec:
    head, _, tail = text.partition("/")
    ps, _, rs = head.partition("^")
    spec = FieldSpec(int(ps), int(rs) if rs else 1)
    if tail:
        given = tuple(int(c) for c in tail.split(","))
        if given != spec.modulus:
            raise ValueError(f"non-canonical modulus {tail!r}")
    return spec
