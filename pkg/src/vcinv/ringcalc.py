"""Graded invariant-ring computations: dimensions, trace, basis certificates.

Dimensions of graded invariant pieces are computed by exact linear algebra on
the monomial basis (fixed space of the generator action matrices).  Free-basis
and generating-set claims are certified degree by degree through the
count = rank = dimension criterion.  Degree computations are independent and
cacheable; everything works on immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from . import kernels
from .gf import FieldSpec
from .groups import (
    ActionSpec,
    GroupId,
    GroupName,
    coset_reps_gl2_over_sl2,
    generators,
    group_id,
    is_invariant,
)
from .invariants import basis_catalog, catalog
from .poly import Poly, monomials_of_degree

DIMENSION_GUARD = 5000  # max number of monomial-basis columns C(d+3, 3)

BASIS_GROUP = {"P": GroupName.P2, "S": GroupName.SL2, "G": GroupName.SL2, "D": GroupName.GL2}


class DegreeGuardError(ValueError):
    """Requested degree exceeds the dense linear-algebra guard."""


def _coeff_dtype(spec: FieldSpec):
    return np.int8 if spec.q < 128 else np.int64


def _check_degree(d: int) -> int:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = comb(d + 3, 3)
    if n > DIMENSION_GUARD:
        raise DegreeGuardError(
            f"degree {d} needs {n} monomial columns, over the guard {DIMENSION_GUARD}"
        )
    return n


def action_matrix(aspec: ActionSpec, d: int) -> np.ndarray:
    """Matrix of the action on the degree-d monomial basis (codes, column-wise).

    Column j holds the coefficients of the image of the j-th monomial, so
    coefficient vectors transform by left multiplication.
    """
    n = _check_degree(d)
    spec = aspec.spec
    images = aspec.images()
    pows: list[list[Poly]] = []
    for v in range(4):
        pw = [Poly.constant(spec, 1)]
        for _ in range(d):
            pw.append(pw[-1] * images[v])
        pows.append(pw)
    xcache: dict[tuple[int, int], Poly] = {}
    ycache: dict[tuple[int, int], Poly] = {}
    monos = monomials_of_degree(d)
    index = {m: i for i, m in enumerate(monos)}
    A = np.zeros((n, n), dtype=_coeff_dtype(spec))
    for j, m in enumerate(monos):
        px = xcache.get(m[:2])
        if px is None:
            px = xcache[m[:2]] = pows[0][m[0]] * pows[1][m[1]]
        py = ycache.get(m[2:])
        if py is None:
            py = ycache[m[2:]] = pows[2][m[2]] * pows[3][m[3]]
        for mono, c in (px * py).iter_codes():
            A[index[mono], j] = c
    return A


@lru_cache(maxsize=None)
def invariant_dimension(gid: GroupId, d: int) -> int:
    """Exact dimension of the degree-d invariant subspace for the group."""
    n = _check_degree(d)
    spec = gid.spec
    blocks = []
    for g in generators(gid):
        A = action_matrix(g, d)
        for i in range(n):
            A[i, i] = spec.sub_codes(int(A[i, i]), 1)
        blocks.append(A)
    stacked = np.concatenate(blocks, axis=0)
    return n - kernels.rank(stacked, spec)


@dataclass(frozen=True)
class DimensionTable:
    group: str
    q: int
    dims: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"group": self.group, "q": self.q, "dims": list(self.dims)}

    def to_csv_rows(self) -> list[str]:
        return [f"{d},{v}" for d, v in enumerate(self.dims)]


def dimension_table(gid: GroupId, dmax: int) -> DimensionTable:
    dims = tuple(invariant_dimension(gid, d) for d in range(dmax + 1))
    return DimensionTable(gid.name.value, gid.spec.q, dims)


# -- relative trace -----------------------------------------------------------


def relative_trace(f: Poly, spec: FieldSpec) -> Poly:
    """Project a special-linear invariant onto the general-linear invariants.

    The index of the subgroup is q - 1 = -1 in the field, so the projection is
    minus the sum over the diagonal coset representatives diag(z, 1).
    """
    if not is_invariant(f, group_id("sl2", spec)):
        raise ValueError("input polynomial is not special-linear invariant")
    total = Poly.zero(spec)
    for rep in coset_reps_gl2_over_sl2(spec):
        total = total + rep.act(f)
    result = -total
    assert is_invariant(result, group_id("gl2", spec)), "trace output not invariant"
    return result


# -- hsop and named generating sets -------------------------------------------


def hsop_degrees(group: str | GroupName, q: int) -> tuple[int, int, int, int]:
    """Degrees of the homogeneous system of parameters used for each group."""
    name = GroupName(group)
    if name in (GroupName.P2, GroupName.SL2):
        return (q + 1, q * q - q, q + 1, q * q - q)
    if name is GroupName.GL2:
        return (q * q - 1, q * q - q, q * q - 1, q * q - q)
    raise ValueError(f"no hsop defined for group {name.value!r}")


def hsop_polys(spec: FieldSpec, basis_id: str) -> list[tuple[str, Poly, int]]:
    """(name, poly, degree) for the hsop the basis is free over."""
    cat = catalog(spec)
    q = cat.q
    if basis_id in ("P", "S"):
        names = ("d22", "c21", "d22s", "c21s")
        return [(nm, cat.get(nm), cat.degree(nm)) for nm in names]
    if basis_id in ("G", "D"):
        return [
            ("d22^%d" % (q - 1), cat.get("d22") ** (q - 1), q * q - 1),
            ("c21", cat.get("c21"), q * q - q),
            ("d22s^%d" % (q - 1), cat.get("d22s") ** (q - 1), q * q - 1),
            ("c21s", cat.get("c21s"), q * q - q),
        ]
    raise ValueError(f"unknown basis id {basis_id!r}")


def gl2_generator_polys(spec: FieldSpec) -> list[tuple[str, Poly, int]]:
    """The seven generators of the general-linear invariant ring."""
    cat = catalog(spec)
    q = cat.q
    return [
        (f"d22^{q - 1}", cat.get("d22") ** (q - 1), q * q - 1),
        ("c21", cat.get("c21"), q * q - q),
        (f"d22s^{q - 1}", cat.get("d22s") ** (q - 1), q * q - 1),
        ("c21s", cat.get("c21s"), q * q - q),
        ("u1s", cat.get("u1s"), q + 1),
        ("u0", cat.get("u0"), 2),
        ("u1", cat.get("u1"), q + 1),
    ]


def sl2_generator_polys(spec: FieldSpec) -> list[tuple[str, Poly, int]]:
    """Dickson generators, u-invariants and the middle h family."""
    cat = catalog(spec)
    q = cat.q
    out = [
        ("d22", cat.get("d22"), q + 1),
        ("c21", cat.get("c21"), q * q - q),
        ("d22s", cat.get("d22s"), q + 1),
        ("c21s", cat.get("c21s"), q * q - q),
        ("u1s", cat.get("u1s"), q + 1),
        ("u0", cat.get("u0"), 2),
        ("u1", cat.get("u1"), q + 1),
    ]
    for s in range(1, q - 1):
        out.append((f"h_{s}", cat.h(s), q * q - q))
    return out


def _products_by_degree(spec: FieldSpec, gens, dmax: int) -> dict[int, list[Poly]]:
    """All monomials in the given generators, grouped by total degree <= dmax."""
    out: dict[int, list[Poly]] = {d: [] for d in range(dmax + 1)}

    def rec(i: int, prod: Poly, deg: int) -> None:
        if i == len(gens):
            out[deg].append(prod)
            return
        _, g, gd = gens[i]
        rec(i + 1, prod, deg)
        cur = prod
        e = 1
        while deg + e * gd <= dmax:
            cur = cur * g
            rec(i + 1, cur, deg + e * gd)
            e += 1

    rec(0, Poly.constant(spec, 1), 0)
    return out


def _coefficient_matrix(spec: FieldSpec, polys, d: int) -> np.ndarray:
    n = comb(d + 3, 3)
    index = {m: i for i, m in enumerate(monomials_of_degree(d))}
    M = np.zeros((len(polys), n), dtype=_coeff_dtype(spec))
    for r, p in enumerate(polys):
        for mono, c in p.iter_codes():
            M[r, index[mono]] = c
    return M


@dataclass(frozen=True)
class FreeBasisReport:
    basis_id: str
    q: int
    group: str
    hsop_degrees: tuple[int, ...]
    rows: tuple[tuple[int, int, int, int], ...]  # (degree, count, rank, dim)
    verdict: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "verdict",
            all(count == rank == dim for _, count, rank, dim in self.rows),
        )

    @property
    def verified_through_degree(self) -> int:
        return max((d for d, *_ in self.rows), default=-1)

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis_id,
            "q": self.q,
            "group": self.group,
            "hsop_degrees": list(self.hsop_degrees),
            "rows": [
                {"degree": d, "count": c, "rank": r, "dim": m}
                for d, c, r, m in self.rows
            ],
            "verified_through_degree": self.verified_through_degree,
            "verdict": "PASS" if self.verdict else "FAIL",
        }

    def to_csv_rows(self) -> list[str]:
        return [f"{d},{c},{r},{m}" for d, c, r, m in self.rows]


def verify_free_basis(spec: FieldSpec, basis_id: str, dmax: int) -> FreeBasisReport:
    """Certify freeness and spanning of a basis through degree dmax.

    For each degree, every product (hsop monomial) x (basis element) of that
    degree is formed; the certificate requires the number of products, the
    rank of their coefficient matrix, and the invariant dimension to agree.
    """
    basis = basis_catalog(spec, basis_id)
    hsop = hsop_polys(spec, basis_id)
    gid = GroupId(BASIS_GROUP[basis_id], spec)
    hsop_monos = _products_by_degree(spec, hsop, dmax)
    rows = []
    for d in range(dmax + 1):
        products = [
            mono * entry.poly
            for entry in basis.entries
            if entry.degree <= d
            for mono in hsop_monos.get(d - entry.degree, ())
        ]
        count = len(products)
        rk = kernels.rank(_coefficient_matrix(spec, products, d), spec) if products else 0
        dim = invariant_dimension(gid, d)
        rows.append((d, count, rk, dim))
    return FreeBasisReport(
        basis_id, spec.q, gid.name.value, tuple(h[2] for h in hsop), tuple(rows)
    )


@dataclass(frozen=True)
class GeneratorSpanReport:
    group: str
    q: int
    generator_names: tuple[str, ...]
    rows: tuple[tuple[int, int, int, int], ...]  # (degree, count, rank, dim)
    verdict: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "verdict", all(rank == dim for _, _, rank, dim in self.rows)
        )

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "q": self.q,
            "generators": list(self.generator_names),
            "rows": [
                {"degree": d, "count": c, "rank": r, "dim": m}
                for d, c, r, m in self.rows
            ],
            "verdict": "PASS" if self.verdict else "FAIL",
        }

    def to_csv_rows(self) -> list[str]:
        return [f"{d},{c},{r},{m}" for d, c, r, m in self.rows]


def verify_generators(spec: FieldSpec, group: str | GroupName, dmax: int) -> GeneratorSpanReport:
    """Check that monomials in the named generators span every graded piece."""
    name = GroupName(group)
    if name is GroupName.GL2:
        gens = gl2_generator_polys(spec)
    elif name is GroupName.SL2:
        gens = sl2_generator_polys(spec)
    else:
        raise ValueError("generator spanning check supports sl2 and gl2")
    gid = GroupId(name, spec)
    products = _products_by_degree(spec, gens, dmax)
    rows = []
    for d in range(dmax + 1):
        polys = products.get(d, ())
        rk = kernels.rank(_coefficient_matrix(spec, polys, d), spec) if polys else 0
        dim = invariant_dimension(gid, d)
        rows.append((d, len(polys), rk, dim))
    return GeneratorSpanReport(
        name.value, spec.q, tuple(nm for nm, _, _ in gens), tuple(rows)
    )


@dataclass(frozen=True)
class NonmembershipReport:
    q: int
    degree: int
    span_rank: int
    rank_with_h1: int
    h1_outside_span: bool
    c21_in_span: bool
    h0_in_span: bool

    @property
    def verdict(self) -> bool:
        return self.h1_outside_span and self.c21_in_span and self.h0_in_span

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "degree": self.degree,
            "span_rank": self.span_rank,
            "rank_with_h1": self.rank_with_h1,
            "h1_outside_span": self.h1_outside_span,
            "c21_in_span": self.c21_in_span,
            "h0_in_span": self.h0_in_span,
            "verdict": "PASS" if self.verdict else "FAIL",
        }


def subalgebra_nonmembership_h1(spec: FieldSpec) -> NonmembershipReport:
    """Decide whether h_1 lies in the span of the seven u/Dickson generators.

    Works in the single degree q^2 - q: the rank of the degree-graded span
    jumps when h_1 is appended iff h_1 is outside.  Two membership controls
    (c21 itself and h_0 = c21*) guard the method.
    """
    if spec.q != 3:
        raise ValueError("the h_1 membership question is posed at q = 3")
    cat = catalog(spec)
    q = cat.q
    d = q * q - q
    gens = [
        (nm, cat.get(nm), cat.degree(nm))
        for nm in ("d22", "c21", "d22s", "c21s", "u1s", "u0", "u1")
    ]
    span = _products_by_degree(spec, gens, d)[d]

    def rank_of(polys):
        return kernels.rank(_coefficient_matrix(spec, polys, d), spec)

    r0 = rank_of(span)
    r_h1 = rank_of(span + [cat.h(1)])
    r_c21 = rank_of(span + [cat.get("c21")])
    r_h0 = rank_of(span + [cat.h(0)])
    return NonmembershipReport(
        q=spec.q,
        degree=d,
        span_rank=r0,
        rank_with_h1=r_h1,
        h1_outside_span=r_h1 == r0 + 1,
        c21_in_span=r_c21 == r0,
        h0_in_span=r_h0 == r0,
    )
