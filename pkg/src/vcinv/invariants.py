"""Named invariants of the 2x2 groups and the symbolic identity suite.

Builds the Dickson generators of the product-group invariant ring, the
hypersurface generators phi1, phi2 (and star images) with u0, the bilinear
invariants u1, u1*, and the quotient family h_0..h_{q-1} obtained by exact
division by u0^q.  ``verify_identity`` checks the catalog of polynomial
identities these satisfy, keyed by short tags; ``basis_catalog`` enumerates
the four free-module bases P, S, G, D.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .gf import FieldSpec
from .poly import Poly

IDENTITY_TAGS = (
    "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9",
    "3.2", "3.3", "3.4", "3.5", "3.6",
    "3.9a", "3.9b", "3.10", "3.11",
)

EXTRA_IDENTITY_TAGS = ("3.8",)  # binomial-expansion form; heavier, checked at small q

BASIS_IDS = ("P", "S", "G", "D")


def dickson_invariants(spec: FieldSpec) -> tuple[Poly, Poly, Poly, Poly]:
    """The generators d22, c21 of the x-side Dickson algebra and their star images.

    d22 is the q-power determinant in x1, x2; c21 is the exact quotient of the
    q^2-power determinant by d22.  The star images are the same constructions
    on the y side.
    """
    q = spec.q
    d22 = Poly.from_terms(spec, [((q, 1, 0, 0), 1), ((1, q, 0, 0), -1)])
    c21 = Poly.from_terms(
        spec, [((q * q, 1, 0, 0), 1), ((1, q * q, 0, 0), -1)]
    ).exact_div(d22)
    d22s = Poly.from_terms(spec, [((0, 0, 1, q), 1), ((0, 0, q, 1), -1)])
    c21s = Poly.from_terms(
        spec, [((0, 0, 1, q * q), 1), ((0, 0, q * q, 1), -1)]
    ).exact_div(d22s)
    return d22, c21, d22s, c21s


def hypersurface_generators(spec: FieldSpec) -> dict[str, Poly]:
    """phi1, phi2, their star images, and the pairing invariants u0, u1, u1*."""
    q = spec.q
    return {
        "phi1": Poly.variable(spec, 0),
        "phi2": Poly.from_terms(spec, [((0, q, 0, 0), 1), ((q - 1, 1, 0, 0), -1)]),
        "phi1s": Poly.variable(spec, 3),
        "phi2s": Poly.from_terms(spec, [((0, 0, q, 0), 1), ((0, 0, 1, q - 1), -1)]),
        "u0": Poly.from_terms(spec, [((1, 0, 1, 0), 1), ((0, 1, 0, 1), 1)]),
        "u1": Poly.from_terms(spec, [((q, 0, 1, 0), 1), ((0, q, 0, 1), 1)]),
        "u1s": Poly.from_terms(spec, [((1, 0, q, 0), 1), ((0, 1, 0, q), 1)]),
    }


def h_invariant(spec: FieldSpec, s: int, _cat: dict[str, Poly] | None = None) -> Poly:
    """The degree q^2-q invariant h_s, built by exact division by u0^q."""
    q = spec.q
    if not 0 <= s <= q - 1:
        raise ValueError(f"s must lie in [0, {q - 1}], got {s}")
    ent = _cat if _cat is not None else {
        **hypersurface_generators(spec),
        **dict(zip(("d22", "c21", "d22s", "c21s"), dickson_invariants(spec))),
    }
    numerator = (
        ent["u1"] ** (s + 1) * ent["d22s"] ** (q - s - 1)
        + ent["u1s"] ** (q - s) * ent["d22"] ** s
    )
    return numerator.exact_div(ent["u0"] ** q)


def declared_degree(name: str, q: int) -> int:
    """Homogeneous degree each catalog entry must have."""
    if name.startswith("h_"):
        return q * q - q
    return {
        "phi1": 1, "phi1s": 1,
        "phi2": q, "phi2s": q,
        "u0": 2,
        "u1": q + 1, "u1s": q + 1,
        "d22": q + 1, "d22s": q + 1,
        "c21": q * q - q, "c21s": q * q - q,
    }[name]


class InvariantCatalog:
    """Lookup table name -> (polynomial, degree) for one field size."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.q = spec.q
        entries = dict(zip(("d22", "c21", "d22s", "c21s"), dickson_invariants(spec)))
        entries.update(hypersurface_generators(spec))
        for s in range(self.q):
            entries[f"h_{s}"] = h_invariant(spec, s, entries)
        for name, p in entries.items():
            d = declared_degree(name, self.q)
            assert p.is_homogeneous() and p.degree() == d, f"{name} is not homogeneous of degree {d}"
        self._entries = entries

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def get(self, name: str) -> Poly:
        return self._entries[name]

    def degree(self, name: str) -> int:
        return declared_degree(name, self.q)

    def h(self, s: int) -> Poly:
        return self._entries[f"h_{s}"]


@lru_cache(maxsize=None)
def catalog(spec: FieldSpec) -> InvariantCatalog:
    return InvariantCatalog(spec)


# -- identity suite ---------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    tag: str
    q: int
    passed: bool
    witness: Poly | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def witness_text(self, max_terms: int = 10) -> str:
        if self.witness is None or self.witness.is_zero():
            return ""
        terms = self.witness.terms
        shown = Poly.from_terms(self.witness.spec, terms[:max_terms]).to_text()
        if len(terms) > max_terms:
            shown += f" + ... ({len(terms)} terms total)"
        return shown


def _identity_sides(cat: InvariantCatalog, tag: str) -> list[tuple[str, Poly, Poly]]:
    """(label, lhs, rhs) triples for one tag; multi-parameter tags expand."""
    q = cat.q
    e = cat.get
    if tag == "2.3":
        # hypersurface relation; the degree-correct form with (phi1 phi1*)^(q-1)
        lhs = e("u0") ** q
        rhs = (
            (e("phi1") * e("phi1s")) ** (q - 1) * e("u0")
            + e("phi1") ** q * e("phi2s")
            + e("phi1s") ** q * e("phi2")
        )
        return [(tag, lhs, rhs)]
    if tag == "2.4":
        return [(tag, e("phi1") * e("phi2"), -e("d22"))]
    if tag == "2.5":
        return [(tag, e("phi1s") * e("phi2s"), -e("d22s"))]
    if tag == "2.6":
        # sign forced by the 2.4/2.8 pair: phi1^(q(q-1)+1) = phi1 c21 + d22 phi2^(q-2)
        lhs = e("phi1") ** (q * (q - 1) + 1)
        rhs = e("phi1") * e("c21") + e("d22") * e("phi2") ** (q - 2)
        return [(tag, lhs, rhs)]
    if tag == "2.7":
        lhs = e("phi1s") ** (q * (q - 1) + 1)
        rhs = e("phi1s") * e("c21s") + e("d22s") * e("phi2s") ** (q - 2)
        return [(tag, lhs, rhs)]
    if tag == "2.8":
        return [(tag, e("phi2") ** (q - 1), -(e("phi1") ** (q * (q - 1))) + e("c21"))]
    if tag == "2.9":
        return [(tag, e("phi2s") ** (q - 1), -(e("phi1s") ** (q * (q - 1))) + e("c21s"))]
    if tag == "3.2":
        return [(tag, e("u0") ** (q + 1), e("u1") * e("u1s") - e("d22") * e("d22s"))]
    if tag == "3.3":
        lhs = e("u1") ** q
        rhs = e("c21") * e("u0") ** q - e("d22") ** (q - 1) * e("u1s")
        return [(tag, lhs, rhs)]
    if tag == "3.4":
        lhs = e("u1s") ** q
        rhs = e("c21s") * e("u0") ** q - e("d22s") ** (q - 1) * e("u1")
        return [(tag, lhs, rhs)]
    if tag == "3.5":
        return [(tag, e("u1"), e("phi1") ** (q - 1) * e("u0") + e("phi1s") * e("phi2"))]
    if tag == "3.6":
        return [(tag, e("u1s"), e("phi1s") ** (q - 1) * e("u0") + e("phi1") * e("phi2s"))]
    if tag == "3.8":
        out = []
        for s in range(q):
            lhs = cat.h(s) * e("u0") ** q * e("d22s") ** s
            rhs = e("c21s") * e("u0") ** q * e("u1") ** s
            for k in range(s):
                sign = comb(s, k) if (s - k) % 2 == 0 else -comb(s, k)
                rhs = rhs + (
                    e("u1s") ** (q - s)
                    * (e("u1") * e("u1s")) ** k
                    * e("u0") ** ((q + 1) * (s - k))
                ).scale(sign)
            out.append((f"{tag}[s={s}]", lhs, rhs))
        return out
    if tag == "3.9a":
        out = []
        for s in range(1, q):
            lhs = e("u1s") * cat.h(s)
            rhs = e("u0") * e("u1") ** s * e("d22s") ** (q - s - 1) + e("d22") * cat.h(s - 1)
            out.append((f"{tag}[s={s}]", lhs, rhs))
        return out
    if tag == "3.9b":
        out = []
        for s in range(q - 1):
            lhs = e("u1") * cat.h(s)
            rhs = e("u0") * e("u1s") ** (q - s - 1) * e("d22") ** s + e("d22s") * cat.h(s + 1)
            out.append((f"{tag}[s={s}]", lhs, rhs))
        return out
    if tag == "3.10":
        lhs = e("u0") * e("u1s") ** (q - 1)
        rhs = e("u1") * cat.h(0) - e("d22s") * cat.h(1)
        return [(tag, lhs, rhs)]
    if tag == "3.11":
        lhs = e("u0") * e("u1") ** (q - 1)
        rhs = e("u1s") * cat.h(q - 1) - e("d22") * cat.h(q - 2)
        return [(tag, lhs, rhs)]
    raise ValueError(f"unknown identity tag {tag!r}")


def verify_identity(spec: FieldSpec, tag: str) -> IdentityResult:
    """PASS iff both sides agree exactly; FAIL carries the nonzero difference."""
    cat = catalog(spec)
    for label, lhs, rhs in _identity_sides(cat, tag):
        diff = lhs - rhs
        if not diff.is_zero():
            return IdentityResult(tag, cat.q, False, witness=diff, detail=label)
    return IdentityResult(tag, cat.q, True)


def run_identity_suite(spec: FieldSpec) -> list[IdentityResult]:
    return [verify_identity(spec, tag) for tag in IDENTITY_TAGS]


def verify_h_star_symmetry(spec: FieldSpec) -> list[IdentityResult]:
    """star(h_s) = h_{q-1-s}, h_0 = c21*, h_{q-1} = c21."""
    cat = catalog(spec)
    q = cat.q
    out = []
    for s in range(q):
        diff = cat.h(s).star() - cat.h(q - 1 - s)
        out.append(
            IdentityResult(f"h-star[s={s}]", q, diff.is_zero(), witness=None if diff.is_zero() else diff)
        )
    d0 = cat.h(0) - cat.get("c21s")
    out.append(IdentityResult("h0=c21s", q, d0.is_zero(), witness=None if d0.is_zero() else d0))
    d1 = cat.h(q - 1) - cat.get("c21")
    out.append(IdentityResult("h(q-1)=c21", q, d1.is_zero(), witness=None if d1.is_zero() else d1))
    return out


# -- free-module bases --------------------------------------------------------


@dataclass(frozen=True)
class BasisEntry:
    name: str
    poly: Poly
    degree: int


@dataclass(frozen=True)
class BasisCatalog:
    which: str
    q: int
    entries: tuple[BasisEntry, ...]

    def degrees(self) -> list[int]:
        return [e.degree for e in self.entries]

    def __len__(self):
        return len(self.entries)


def basis_cardinality(q: int, which: str) -> int:
    return {
        "P": q * (q * q - 1) ** 2,
        "S": q * (q * q - 1),
        "G": q * (q * q - 1) * (q - 1) ** 2,
        "D": (q * q - 1) * (q * q - q),
    }[which]


def _basis_factors(q: int, which: str):
    """Yield (factor-list) per basis element, factors = [(catalog key, exponent)]."""
    if which == "P":
        t = q * (q - 1)
        for i in range(t + 1):
            for j in range(t + 1):
                for k in range(q):
                    yield [("phi1", i), ("phi1s", j), ("u0", k)]
        for i in range(t + 1):
            for j in range(1, q - 1):
                for k in range(q):
                    yield [("phi1", i), ("phi2s", j), ("u0", k)]
        for i in range(t + 1):
            for j in range(1, q - 1):
                for k in range(q):
                    yield [("phi1s", i), ("phi2", j), ("u0", k)]
        for i in range(1, q - 1):
            for j in range(1, q - 1):
                for k in range(q):
                    yield [("phi2", i), ("phi2s", j), ("u0", k)]
    elif which == "S":
        for i in range(q):
            for j in range(q):
                yield [("u1s", i), ("u1", j)]
        for i in range(q - 1):
            for j in range(q - 1):
                for k in range(1, q + 1):
                    yield [("u1s", i), ("u1", j), ("u0", k)]
        for s in range(1, q - 1):
            for k in range(q):
                yield [(f"h_{s}", 1), ("u0", k)]
    elif which == "G":
        for a in range(q - 1):
            for b in range(q - 1):
                for factors in _basis_factors(q, "S"):
                    yield [("d22s", a), ("d22", b)] + factors
    elif which == "D":
        for i in range(q):
            for j in range(q):
                for a in range(q - 1):
                    yield [("u1s", i), ("u1", j), ("d22s", a), ("d22", a)]
        for i in range(q - 1):
            for j in range(q - 1):
                for k in range(1, q + 1):
                    for a in range(q - 1):
                        yield [("u1s", i), ("u1", j), ("u0", k), ("d22s", a), ("d22", a)]
        # star-side exponent wraps mod q-1: these are the trace-fixed elements
        # with d-power weights congruent to s
        for s in range(1, q - 1):
            for k in range(q):
                for b in range(q - 1):
                    yield [(f"h_{s}", 1), ("u0", k), ("d22s", (b + s) % (q - 1)), ("d22", b)]
    else:
        raise ValueError(f"unknown basis id {which!r}; expected one of {BASIS_IDS}")


def _factors_name(factors) -> str:
    parts = []
    for key, e in factors:
        if e == 0:
            continue
        parts.append(key if e == 1 else f"{key}^{e}")
    return "*".join(parts) if parts else "1"


def basis_degrees(q: int, which: str) -> list[int]:
    """Degree multiset of a basis, computed combinatorially (any q >= 2)."""
    out = [
        sum(declared_degree(key, q) * e for key, e in factors)
        for factors in _basis_factors(q, which)
    ]
    assert len(out) == basis_cardinality(q, which)
    return out


@lru_cache(maxsize=None)
def basis_catalog(spec: FieldSpec, which: str) -> BasisCatalog:
    """The fully expanded basis polynomials, named and degree-annotated."""
    cat = catalog(spec)
    q = cat.q
    entries = []
    for factors in _basis_factors(q, which):
        poly = Poly.constant(spec, 1)
        for key, e in factors:
            if e:
                poly = poly * cat.get(key) ** e
        entries.append(
            BasisEntry(
                _factors_name(factors),
                poly,
                sum(declared_degree(key, q) * e for key, e in factors),
            )
        )
    assert len(entries) == basis_cardinality(q, which)
    return BasisCatalog(which, q, tuple(entries))
