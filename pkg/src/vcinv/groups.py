"""Invertible 2x2 matrix groups over F_q and their action on polynomials.

The x-variables transform by the inverse-transpose (contragredient) of the
x-side matrix, the y-variables by the y-side matrix directly.  A plain group
element acts diagonally (same matrix on both sides); product groups act with
independent matrices on the two sides.  All values here are immutable; group
element lists are cached per group id and safe to share.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .gf import FieldElem, FieldMismatchError, FieldSpec
from .poly import Poly

ENUMERATION_GUARD = 10**7


class Mat2:
    """An invertible 2x2 matrix [[a, b], [c, d]] over a fixed field."""

    __slots__ = ("spec", "a", "b", "c", "d", "det")

    def __init__(self, spec: FieldSpec, a, b, c, d):
        self.spec = spec
        ea, eb, ec, ed = (spec.element(v) for v in (a, b, c, d))
        self.a, self.b, self.c, self.d = ea, eb, ec, ed
        self.det = ea * ed - eb * ec
        if self.det.is_zero():
            raise ValueError("matrix is singular")

    @classmethod
    def identity(cls, spec: FieldSpec) -> "Mat2":
        return cls(spec, 1, 0, 0, 1)

    def __mul__(self, other: "Mat2") -> "Mat2":
        if other.spec != self.spec:
            raise FieldMismatchError("matrices over different field specs")
        return Mat2(
            self.spec,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        di = self.det.inverse()
        return Mat2(self.spec, self.d * di, -self.b * di, -self.c * di, self.a * di)

    def entries(self) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return (
            isinstance(other, Mat2)
            and self.spec == other.spec
            and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        )

    def __hash__(self):
        return hash((self.spec, self.a.code, self.b.code, self.c.code, self.d.code))

    def to_text(self) -> str:
        s = self.spec.elem_str
        return f"[[{s(self.a.code)},{s(self.b.code)}],[{s(self.c.code)},{s(self.d.code)}]]"

    __repr__ = to_text


class ActionSpec:
    """A pair of matrices acting on the x-block (contragrediently) and y-block."""

    __slots__ = ("x_matrix", "y_matrix")

    def __init__(self, x_matrix: Mat2, y_matrix: Mat2):
        if x_matrix.spec != y_matrix.spec:
            raise FieldMismatchError("mixed field specs in action")
        self.x_matrix = x_matrix
        self.y_matrix = y_matrix

    @classmethod
    def diagonal(cls, m: Mat2) -> "ActionSpec":
        return cls(m, m)

    @property
    def spec(self) -> FieldSpec:
        return self.x_matrix.spec

    def images(self) -> list[Poly]:
        """Images of x1, x2, y1, y2 as homogeneous linear forms."""
        spec = self.spec
        xm, ym = self.x_matrix, self.y_matrix
        di = xm.det.inverse()
        return [
            Poly.from_terms(spec, [((1, 0, 0, 0), di * xm.d), ((0, 1, 0, 0), -(di * xm.c))]),
            Poly.from_terms(spec, [((1, 0, 0, 0), -(di * xm.b)), ((0, 1, 0, 0), di * xm.a)]),
            Poly.from_terms(spec, [((0, 0, 1, 0), ym.a), ((0, 0, 0, 1), ym.b)]),
            Poly.from_terms(spec, [((0, 0, 1, 0), ym.c), ((0, 0, 0, 1), ym.d)]),
        ]

    def act(self, f: Poly) -> Poly:
        """Apply the induced degree-preserving algebra automorphism to f."""
        if f.spec != self.spec:
            raise FieldMismatchError("polynomial over a different field spec")
        return f.substitute_linear(self.images())

    def compose(self, other: "ActionSpec") -> "ActionSpec":
        """The action "other first, then self": compose(g, h).act == g.act o h.act."""
        return ActionSpec(
            other.x_matrix * self.x_matrix, other.y_matrix * self.y_matrix
        )

    def __eq__(self, o):
        return (
            isinstance(o, ActionSpec)
            and self.x_matrix == o.x_matrix
            and self.y_matrix == o.y_matrix
        )

    def __hash__(self):
        return hash((self.x_matrix, self.y_matrix))

    def __repr__(self):
        return f"ActionSpec(x={self.x_matrix}, y={self.y_matrix})"


class GroupName(str, enum.Enum):
    P2 = "p2"
    U2 = "u2"
    SL2 = "sl2"
    GL2 = "gl2"
    SL2xSL2 = "sl2xsl2"
    GL2xGL2 = "gl2xgl2"


@dataclass(frozen=True)
class GroupId:
    name: GroupName
    spec: FieldSpec

    @property
    def order(self) -> int:
        q = self.spec.q
        orders = {
            GroupName.P2: q,
            GroupName.U2: q * (q - 1),
            GroupName.SL2: q * (q * q - 1),
            GroupName.GL2: (q * q - 1) * (q * q - q),
            GroupName.SL2xSL2: (q * (q * q - 1)) ** 2,
            GroupName.GL2xGL2: ((q * q - 1) * (q * q - q)) ** 2,
        }
        return orders[self.name]

    def __str__(self):
        return f"{self.name.value}(q={self.spec.q})"


def group_id(name: str | GroupName, spec: FieldSpec) -> GroupId:
    return GroupId(GroupName(name), spec)


def _matrices_p2(spec: FieldSpec) -> list[Mat2]:
    return [Mat2(spec, 1, b, 0, 1) for b in range(spec.q)]


def _matrices_u2(spec: FieldSpec) -> list[Mat2]:
    out = []
    for a in range(1, spec.q):
        ai = spec.inv_code(a)
        for b in range(spec.q):
            out.append(Mat2(spec, spec.from_code(a), b, 0, spec.from_code(ai)))
    return out


def _matrices_sl2(spec: FieldSpec) -> list[Mat2]:
    q = spec.q
    out = []
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            if a != 0:
                ai = spec.inv_code(a)
                for c in range(q):
                    # d = (1 + b c) / a
                    d = spec.mul_codes(spec.add_codes(1, spec.mul_codes(b, c)), ai)
                    out.append(
                        Mat2(spec, spec.from_code(a), spec.from_code(b), spec.from_code(c), spec.from_code(d))
                    )
            else:
                c = spec.neg_code(spec.inv_code(b))
                for d in range(q):
                    out.append(
                        Mat2(spec, spec.from_code(a), spec.from_code(b), spec.from_code(c), spec.from_code(d))
                    )
    return out


def _matrices_gl2(spec: FieldSpec) -> list[Mat2]:
    q = spec.q
    out = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                ad_free = spec.mul_codes(b, c)
                for d in range(q):
                    if spec.sub_codes(spec.mul_codes(a, d), ad_free) != 0:
                        out.append(
                            Mat2(spec, spec.from_code(a), spec.from_code(b), spec.from_code(c), spec.from_code(d))
                        )
    return out


@lru_cache(maxsize=None)
def enumerate_group(gid: GroupId) -> tuple[ActionSpec, ...]:
    """All |G| distinct action elements, in a deterministic order."""
    if gid.order > ENUMERATION_GUARD:
        raise ValueError(f"group order {gid.order} exceeds guard {ENUMERATION_GUARD}")
    spec = gid.spec
    single = {
        GroupName.P2: _matrices_p2,
        GroupName.U2: _matrices_u2,
        GroupName.SL2: _matrices_sl2,
        GroupName.GL2: _matrices_gl2,
    }
    if gid.name in single:
        mats = single[gid.name](spec)
        elems = tuple(ActionSpec.diagonal(m) for m in mats)
    else:
        factor = _matrices_sl2(spec) if gid.name is GroupName.SL2xSL2 else _matrices_gl2(spec)
        elems = tuple(ActionSpec(mx, my) for mx in factor for my in factor)
    assert len(elems) == gid.order
    return elems


@lru_cache(maxsize=None)
def generators(gid: GroupId) -> tuple[ActionSpec, ...]:
    """A small generating set (transvections, plus a primitive torus element)."""
    spec = gid.spec
    basis = spec.basis_over_prime_field()
    upper = [Mat2(spec, 1, lam, 0, 1) for lam in basis]
    lower = [Mat2(spec, 1, 0, lam, 1) for lam in basis]
    if gid.name is GroupName.P2:
        mats = upper
    elif gid.name is GroupName.U2:
        g = spec.primitive_element()
        mats = upper + [Mat2(spec, g, 0, 0, g.inverse())]
    elif gid.name is GroupName.SL2:
        mats = upper + lower
    elif gid.name is GroupName.GL2:
        g = spec.primitive_element()
        mats = upper + lower + [Mat2(spec, g, 0, 0, 1)]
    else:
        base = GroupName.SL2 if gid.name is GroupName.SL2xSL2 else GroupName.GL2
        factor_gens = generators(GroupId(base, spec))
        ident = Mat2.identity(spec)
        return tuple(
            [ActionSpec(a.x_matrix, ident) for a in factor_gens]
            + [ActionSpec(ident, a.y_matrix) for a in factor_gens]
        )
    return tuple(ActionSpec.diagonal(m) for m in mats)


def closure(elems) -> set[ActionSpec]:
    """Multiplicative closure of a set of actions (for generator verification)."""
    gens = list(elems)
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for g in gens:
            for h in frontier:
                c = g.compose(h)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    if len(seen) > ENUMERATION_GUARD:
                        raise ValueError("closure exceeds enumeration guard")
        frontier = new
    return seen


def generators_generate(gid: GroupId) -> bool:
    return len(closure(generators(gid))) == gid.order


def coset_reps_gl2_over_sl2(spec: FieldSpec) -> list[ActionSpec]:
    """The q-1 diagonal actions diag(z, 1), z nonzero, in enumeration order."""
    return [
        ActionSpec.diagonal(Mat2(spec, z, 0, 0, 1)) for z in spec.nonzero_elements()
    ]


def is_invariant(f: Poly, gid: GroupId, exhaustive: bool = False) -> bool:
    """True iff f is fixed by the whole group.

    Checks the generating set by default; ``exhaustive=True`` runs every group
    element instead (an independent oracle for small groups).
    """
    elems = enumerate_group(gid) if exhaustive else generators(gid)
    return all(g.act(f) == f for g in elems)
