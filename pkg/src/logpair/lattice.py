"""Rational surface models and their intersection lattices.

Two concrete models are supported, both presented by an explicit basis
with a fixed Gram matrix:

* ``plane_blowup(n)``: the blow-up of the projective plane at n points,
  basis (H, E1, ..., En) with H^2 = 1, Ei^2 = -1, mixed products 0.
* ``hirzebruch(e, n)``: the blow-up of the degree-e Hirzebruch surface
  at n points, basis (Dinf, Gamma, E1, ..., En) with Dinf^2 = e,
  Dinf.Gamma = 1, Gamma^2 = 0, Ei^2 = -1.

A third, abstract kind carries nothing but a user-supplied Gram matrix;
it exists for dual-graph-only workflows where no global model is needed.
Classes are plain coefficient vectors over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError


class ModelKind(Enum):
    P2_BLOWUP = "p2_blowup"
    HIRZEBRUCH = "hirzebruch"
    CUSTOM = "custom"


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise InputError("floating point coefficients are not accepted")
    return Fraction(x)


class DivisorClass:
    """An immutable coefficient vector in a fixed model basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise InputError("dimension mismatch")
        return DivisorClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise InputError("dimension mismatch")
        return DivisorClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return DivisorClass(-c for c in self.coeffs)

    def __mul__(self, scalar):
        return DivisorClass(c * _frac(scalar) for c in self.coeffs)

    __rmul__ = __mul__

    def __repr__(self):
        return "DivisorClass(%s)" % (", ".join(str(c) for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


@dataclass(frozen=True)
class HodgeData:
    q: int
    p_g: int
    h11: int
    euler_e: int

    @property
    def is_rational_type(self) -> bool:
        return self.q == 0 and self.p_g == 0

    def check(self) -> None:
        # e(S) = 2 - 4q + 2p_g + h11 for the surfaces modeled here
        if self.euler_e != 2 - 4 * self.q + 2 * self.p_g + self.h11:
            raise InputError("inconsistent Hodge data")


@dataclass(frozen=True)
class SurfaceModel:
    kind: ModelKind
    degree_e: int = 0
    num_points: int = 0
    gram_rows: tuple = ()  # custom kind only

    # -- constructors ---------------------------------------------------

    @staticmethod
    def plane_blowup(n: int) -> "SurfaceModel":
        if n < 0:
            raise InputError("number of blown-up points must be >= 0")
        return SurfaceModel(ModelKind.P2_BLOWUP, 0, n)

    @staticmethod
    def hirzebruch(e: int, n: int) -> "SurfaceModel":
        if e < 0:
            raise InputError("Hirzebruch degree must be >= 0")
        if n < 0:
            raise InputError("number of blown-up points must be >= 0")
        return SurfaceModel(ModelKind.HIRZEBRUCH, e, n)

    @staticmethod
    def custom(gram: Sequence[Sequence]) -> "SurfaceModel":
        rows = tuple(tuple(_frac(x) for x in row) for row in gram)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise InputError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InputError("Gram matrix must be symmetric")
        return SurfaceModel(ModelKind.CUSTOM, 0, 0, rows)

    # -- basis bookkeeping ----------------------------------------------

    @property
    def basis_size(self) -> int:
        if self.kind is ModelKind.P2_BLOWUP:
            return 1 + self.num_points
        if self.kind is ModelKind.HIRZEBRUCH:
            return 2 + self.num_points
        return len(self.gram_rows)

    @property
    def basis_labels(self) -> tuple[str, ...]:
        if self.kind is ModelKind.P2_BLOWUP:
            return ("H",) + tuple(f"E{i}" for i in range(1, self.num_points + 1))
        if self.kind is ModelKind.HIRZEBRUCH:
            return ("Dinf", "Gamma") + tuple(
                f"E{i}" for i in range(1, self.num_points + 1)
            )
        return tuple(f"v{i}" for i in range(len(self.gram_rows)))

    @property
    def exceptional_indices(self) -> range:
        """Coordinate positions of the blow-up basis classes E1..En."""
        if self.kind is ModelKind.P2_BLOWUP:
            return range(1, self.basis_size)
        if self.kind is ModelKind.HIRZEBRUCH:
            return range(2, self.basis_size)
        return range(0)

    @property
    def hodge(self) -> HodgeData:
        n = self.num_points
        if self.kind is ModelKind.P2_BLOWUP:
            return HodgeData(q=0, p_g=0, h11=n + 1, euler_e=n + 3)
        if self.kind is ModelKind.HIRZEBRUCH:
            return HodgeData(q=0, p_g=0, h11=n + 2, euler_e=n + 4)
        raise InputError("custom models carry no Hodge data")

    # -- class builders ---------------------------------------------------

    def divisor(self, coeffs: Iterable) -> DivisorClass:
        c = DivisorClass(coeffs)
        if len(c) != self.basis_size:
            raise InputError(
                f"expected {self.basis_size} coefficients, got {len(c)}"
            )
        return c

    def zero(self) -> DivisorClass:
        return DivisorClass([0] * self.basis_size)

    def basis_class(self, i: int) -> DivisorClass:
        if not 0 <= i < self.basis_size:
            raise InputError("basis index out of range")
        return DivisorClass(
            [1 if j == i else 0 for j in range(self.basis_size)]
        )

    def exceptional(self, i: int) -> DivisorClass:
        """Ei as a class (i is 1-based, matching the basis labels)."""
        if i < 1 or i > self.num_points:
            raise InputError("exceptional index out of range")
        offset = 1 if self.kind is ModelKind.P2_BLOWUP else 2
        return self.basis_class(offset + i - 1)

    def plane_class(self, degree, mults: Sequence) -> DivisorClass:
        """degree*H - sum(mults[i] * E(i+1)) for a plane blow-up."""
        if self.kind is not ModelKind.P2_BLOWUP:
            raise InputError("plane_class needs a plane blow-up model")
        if len(mults) > self.num_points:
            raise InputError("more multiplicities than blown-up points")
        ms = list(mults) + [0] * (self.num_points - len(mults))
        return self.divisor([degree] + [-m for m in ms])

    def ruled_class(self, a, b, mults: Sequence = ()) -> DivisorClass:
        """a*Dinf + b*Gamma - sum(mults[i] * E(i+1)) on a Hirzebruch blow-up."""
        if self.kind is not ModelKind.HIRZEBRUCH:
            raise InputError("ruled_class needs a Hirzebruch model")
        if len(mults) > self.num_points:
            raise InputError("more multiplicities than blown-up points")
        ms = list(mults) + [0] * (self.num_points - len(mults))
        return self.divisor([a, b] + [-m for m in ms])

    # -- intersection theory ----------------------------------------------

    def intersect(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        n = self.basis_size
        if len(a) != n or len(b) != n:
            raise InputError("dimension mismatch")
        if self.kind is ModelKind.P2_BLOWUP:
            total = a[0] * b[0]
            for i in range(1, n):
                total -= a[i] * b[i]
            return total
        if self.kind is ModelKind.HIRZEBRUCH:
            total = self.degree_e * a[0] * b[0] + a[0] * b[1] + a[1] * b[0]
            for i in range(2, n):
                total -= a[i] * b[i]
            return total
        total = Fraction(0)
        for i in range(n):
            for j in range(n):
                g = self.gram_rows[i][j]
                if g != 0 and a[i] != 0 and b[j] != 0:
                    total += a[i] * g * b[j]
        return total

    def self_intersection(self, a: DivisorClass) -> Fraction:
        return self.intersect(a, a)

    def gram_matrix(self) -> list[list[Fraction]]:
        basis = [self.basis_class(i) for i in range(self.basis_size)]
        return [[self.intersect(u, v) for v in basis] for u in basis]

    def canonical_class(self) -> DivisorClass:
        if self.kind is ModelKind.P2_BLOWUP:
            return self.divisor([-3] + [1] * self.num_points)
        if self.kind is ModelKind.HIRZEBRUCH:
            return self.divisor([-2, self.degree_e - 2] + [1] * self.num_points)
        raise InputError("custom models have no canonical class")

    def arithmetic_genus(self, c: DivisorClass) -> Fraction:
        """p_a(c) = c.(c+K)/2 + 1 by adjunction."""
        k = self.canonical_class()
        return self.intersect(c, c + k) / 2 + 1

    def describe(self) -> dict:
        """JSON-ready description; inverse of the model file parser."""
        if self.kind is ModelKind.P2_BLOWUP:
            return {"kind": "p2_blowup", "points": self.num_points}
        if self.kind is ModelKind.HIRZEBRUCH:
            return {"kind": "hirzebruch", "e": self.degree_e,
                    "points": self.num_points}
        return {"kind": "custom",
                "gram": [list(row) for row in self.gram_rows]}

    def format_class(self, c: DivisorClass) -> str:
        if len(c) != self.basis_size:
            raise InputError("dimension mismatch")
        parts = []
        for coeff, label in zip(c.coeffs, self.basis_labels):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            term = label if mag == 1 else f"{mag}*{label}"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def blow_up_transform(
    model: SurfaceModel,
    classes: Sequence[DivisorClass],
    mults: Sequence,
) -> tuple[SurfaceModel, list[DivisorClass]]:
    """Blow up one more point; each class picks up -mult * E_new.

    The canonical class needs no explicit handling: on the enlarged model
    canonical_class() already equals pullback(K) + E_new.
    """
    if model.kind is ModelKind.CUSTOM:
        raise InputError("custom models cannot be blown up")
    if len(classes) != len(mults):
        raise InputError("one multiplicity per class required")
    if model.kind is ModelKind.P2_BLOWUP:
        bigger = SurfaceModel.plane_blowup(model.num_points + 1)
    else:
        bigger = SurfaceModel.hirzebruch(model.degree_e, model.num_points + 1)
    out = []
    for c, m in zip(classes, mults):
        if len(c) != model.basis_size:
            raise InputError("dimension mismatch")
        out.append(DivisorClass(list(c.coeffs) + [-_frac(m)]))
    return bigger, out


def contract_exceptional(
    model: SurfaceModel,
    index: int,
    classes: Sequence[DivisorClass],
) -> tuple[SurfaceModel, list[DivisorClass]]:
    """Contract the basis class at coordinate `index` and push classes forward.

    Only basis exceptionals can be contracted here; arbitrary (-1)-classes
    would need a change of basis first and are rejected by construction.
    """
    if index not in model.exceptional_indices:
        raise InputError("only basis exceptional classes can be contracted")
    if model.kind is ModelKind.P2_BLOWUP:
        smaller = SurfaceModel.plane_blowup(model.num_points - 1)
    else:
        smaller = SurfaceModel.hirzebruch(model.degree_e, model.num_points - 1)
    out = []
    for c in classes:
        if len(c) != model.basis_size:
            raise InputError("dimension mismatch")
        out.append(DivisorClass(x for j, x in enumerate(c.coeffs) if j != index))
    return smaller, out
