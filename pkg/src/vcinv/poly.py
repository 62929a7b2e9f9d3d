"""Sparse exact polynomials in x1, x2, y1, y2 over a finite field.

Monomials are 4-tuples of exponents in the variable order (x1, x2, y1, y2)
and are compared in graded reverse lexicographic order with x1 > x2 > y1 > y2.
``Poly`` values are immutable; every operation returns a fresh canonical
polynomial (no zero coefficients, no duplicate monomials), so equal
polynomials always serialize identically.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator

from .gf import FieldElem, FieldMismatchError, FieldSpec

Monomial = tuple[int, int, int, int]

VARIABLES = ("x1", "x2", "y1", "y2")
_ZERO_MONO: Monomial = (0, 0, 0, 0)


class NotDivisibleError(ArithmeticError):
    """Single-divisor division left a nonzero remainder."""

    def __init__(self, leading_term):
        self.leading_term = leading_term
        super().__init__(f"not exactly divisible; remainder leads with {leading_term}")


def monomial_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2] + m[3]


def monomial_key(m: Monomial):
    """Sort key realizing grevlex: bigger key = bigger monomial."""
    return (m[0] + m[1] + m[2] + m[3], -m[3], -m[2], -m[1], -m[0])


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b componentwise."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2] and a[3] <= b[3]


def monomials_of_degree(d: int) -> list[Monomial]:
    """All C(d+3, 3) degree-d monomials, descending in the global order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for e1 in range(d + 1):
        for e2 in range(d - e1 + 1):
            for e3 in range(d - e1 - e2 + 1):
                out.append((e1, e2, e3, d - e1 - e2 - e3))
    out.sort(key=monomial_key, reverse=True)
    assert len(out) == comb(d + 3, 3)
    return out


class Poly:
    """A canonical sparse polynomial over a fixed ``FieldSpec``."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: FieldSpec, terms: dict[Monomial, int] | None = None):
        self.spec = spec
        self._terms = terms if terms is not None else {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec)

    @classmethod
    def constant(cls, spec: FieldSpec, value) -> "Poly":
        code = spec.element(value).code
        return cls(spec, {_ZERO_MONO: code} if code else {})

    @classmethod
    def variable(cls, spec: FieldSpec, index: int) -> "Poly":
        m = [0, 0, 0, 0]
        m[index] = 1
        return cls(spec, {tuple(m): 1})

    @classmethod
    def monomial(cls, spec: FieldSpec, m: Monomial, coeff=1) -> "Poly":
        code = spec.element(coeff).code
        return cls(spec, {tuple(m): code} if code else {})

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: Iterable[tuple[Monomial, object]]) -> "Poly":
        acc: dict[Monomial, int] = {}
        for m, c in terms:
            code = c.code if isinstance(c, FieldElem) else spec.element(c).code
            m = tuple(m)
            s = spec.add_codes(acc.get(m, 0), code)
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return cls(spec, acc)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Monomial, FieldElem], ...]:
        """Term sequence, strictly descending in the monomial order."""
        monos = sorted(self._terms, key=monomial_key, reverse=True)
        return tuple((m, FieldElem(self.spec, self._terms[m])) for m in monos)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(monomial_degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(m) for m in self._terms}
        return len(degrees) <= 1

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(
            self.spec,
            {m: c for m, c in self._terms.items() if monomial_degree(m) == d},
        )

    def leading_term(self) -> tuple[Monomial, FieldElem]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=monomial_key)
        return m, FieldElem(self.spec, self._terms[m])

    def coeff(self, m: Monomial) -> FieldElem:
        return FieldElem(self.spec, self._terms.get(tuple(m), 0))

    def iter_codes(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    # -- ring arithmetic ----------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldMismatchError("polynomials over different field specs")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        spec = self.spec
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = spec.add_codes(acc.get(m, 0), c)
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Poly(spec, acc)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        spec = self.spec
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = spec.sub_codes(acc.get(m, 0), c)
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Poly(spec, acc)

    def __neg__(self) -> "Poly":
        spec = self.spec
        return Poly(spec, {m: spec.neg_code(c) for m, c in self._terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        spec = self.spec
        acc: dict[Monomial, int] = {}
        add, mul = spec.add_codes, spec.mul_codes
        for (a1, a2, a3, a4), ca in self._terms.items():
            for (b1, b2, b3, b4), cb in other._terms.items():
                m = (a1 + b1, a2 + b2, a3 + b3, a4 + b4)
                s = add(acc.get(m, 0), mul(ca, cb))
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Poly(spec, acc)

    def scale(self, value) -> "Poly":
        spec = self.spec
        code = spec.element(value).code
        if code == 0:
            return Poly(spec)
        if code == 1:
            return self
        mul = spec.mul_codes
        return Poly(spec, {m: mul(code, c) for m, c in self._terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.spec, 1)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.spec == other.spec
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.spec, frozenset(self._terms.items())))

    # -- structural operations ----------------------------------------------

    def substitute_linear(self, images: list["Poly"]) -> "Poly":
        """Apply the ring homomorphism sending each variable to a linear form.

        Every image must be homogeneous of degree 1 (or zero); substitution
        then preserves homogeneity and total degree of homogeneous inputs.
        """
        if len(images) != 4:
            raise ValueError("need exactly 4 images")
        spec = self.spec
        for g in images:
            self._check(g)
            if not g.is_zero() and (not g.is_homogeneous() or g.degree() != 1):
                raise ValueError("image is not a homogeneous linear form")
        max_exp = [0, 0, 0, 0]
        for m in self._terms:
            for v in range(4):
                if m[v] > max_exp[v]:
                    max_exp[v] = m[v]
        powers: list[list[Poly]] = []
        for v in range(4):
            pw = [Poly.constant(spec, 1)]
            for _ in range(max_exp[v]):
                pw.append(pw[-1] * images[v])
            powers.append(pw)
        acc = Poly(spec)
        for m, c in self._terms.items():
            prod = powers[0][m[0]]
            for v in range(1, 4):
                if m[v]:
                    prod = prod * powers[v][m[v]]
            acc = acc + prod.scale(FieldElem(spec, c))
        return acc

    def star(self) -> "Poly":
        """The involution x1 -> y2, x2 -> y1, y1 -> x2, y2 -> x1.

        On exponent tuples this is plain reversal, so it is exact and cheap.
        """
        return Poly(self.spec, {m[::-1]: c for m, c in self._terms.items()})

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact single-divisor division; raises ``NotDivisibleError`` otherwise.

        Runs multivariate division with remainder against one divisor; the
        remainder is zero exactly when the divisor divides self.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        spec = self.spec
        lm_g, lc_g = divisor.leading_term()
        lc_g_inv = spec.inv_code(lc_g.code)
        rem: dict[Monomial, int] = {}
        quot: dict[Monomial, int] = {}
        cur = dict(self._terms)
        while cur:
            m = max(cur, key=monomial_key)
            c = cur.pop(m)
            if not monomial_divides(lm_g, m):
                rem[m] = c
                continue
            qm = (m[0] - lm_g[0], m[1] - lm_g[1], m[2] - lm_g[2], m[3] - lm_g[3])
            qc = spec.mul_codes(c, lc_g_inv)
            quot[qm] = spec.add_codes(quot.get(qm, 0), qc)
            if not quot[qm]:
                del quot[qm]
            for (g1, g2, g3, g4), gc in divisor._terms.items():
                t = (qm[0] + g1, qm[1] + g2, qm[2] + g3, qm[3] + g4)
                if t == m:
                    continue
                s = spec.sub_codes(cur.get(t, 0), spec.mul_codes(qc, gc))
                if s:
                    cur[t] = s
                else:
                    cur.pop(t, None)
        if rem:
            lead = max(rem, key=monomial_key)
            raise NotDivisibleError((lead, FieldElem(spec, rem[lead])))
        return Poly(spec, quot)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    # -- text form ------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: terms joined by " + ", e.g. "x1^2*y1 + 2*x2*y2^2"."""
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms:
            factors = []
            for v in range(4):
                if m[v] == 1:
                    factors.append(VARIABLES[v])
                elif m[v] > 1:
                    factors.append(f"{VARIABLES[v]}^{m[v]}")
            ctext = self.spec.elem_str(c.code)
            needs_paren = self.spec.r > 1 and ("+" in ctext or "T" in ctext)
            if needs_paren:
                ctext = f"({ctext})"
            if not factors:
                parts.append(ctext)
            elif c.code == 1:
                parts.append("*".join(factors))
            else:
                parts.append(ctext + "*" + "*".join(factors))
        return " + ".join(parts)

    __repr__ = to_text


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse the canonical text grammar produced by ``Poly.to_text``."""
    text = text.strip()
    if text == "0":
        return Poly.zero(spec)
    terms = []
    for chunk in text.split("+"):
        # re-join pieces that were split inside a parenthesized coefficient
        if terms and terms[-1].count("(") > terms[-1].count(")"):
            terms[-1] += "+" + chunk
        else:
            terms.append(chunk)
    acc = Poly.zero(spec)
    for raw in terms:
        raw = raw.strip()
        if not raw:
            raise ValueError(f"malformed polynomial text {text!r}")
        coeff = spec.one()
        exps = [0, 0, 0, 0]
        if raw.startswith("("):
            j = raw.index(")")
            coeff = spec.parse_elem(raw[1:j])
            rest = raw[j + 1 :].lstrip("*").strip()
        else:
            rest = raw
        if rest and rest[0].isdigit():
            head, _, tail = rest.partition("*")
            coeff = coeff * spec.element(int(head))
            rest = tail.strip()
        for factor in filter(None, (f.strip() for f in rest.split("*"))):
            name, _, exp = factor.partition("^")
            e = int(exp) if exp else 1
            if name in VARIABLES:
                exps[VARIABLES.index(name)] += e
            elif name == "T":
                coeff = coeff * spec.parse_elem(factor)
            elif name.isdigit():
                coeff = coeff * spec.element(int(name)) ** e
            else:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
        acc = acc + Poly.monomial(spec, tuple(exps), coeff)
    return acc
