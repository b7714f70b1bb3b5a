"""Weight-3 monomial spaces for a single binary operation.

For an operation with no symmetry the space is 12-dimensional, with basis
monomials (x_i*x_j)*x_k (Left shape) and x_i*(x_j*x_k) (Right shape) over
the six arrangements of (1,2,3).  For a commutative or anticommutative
operation the space collapses to the 3-dimensional comb basis
m1 = (x1*x2)*x3, m2 = (x2*x3)*x1, m3 = (x3*x1)*x2, indexed by the
unordered inner pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .foundation import Vector, vec, zero_vector
from .group_module import PERMS, GroupVector, Perm3


class SymmetryClass(enum.Enum):
    REGULAR = "regular"
    COMMUTATIVE = "comm"
    ANTICOMMUTATIVE = "anticomm"

    @property
    def dim(self) -> int:
        return 12 if self is SymmetryClass.REGULAR else 3


REGULAR = SymmetryClass.REGULAR
COMMUTATIVE = SymmetryClass.COMMUTATIVE
ANTICOMMUTATIVE = SymmetryClass.ANTICOMMUTATIVE

ARRANGEMENTS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
)
ARRANGEMENT_INDEX = {a: i for i, a in enumerate(ARRANGEMENTS)}

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class Monomial3:
    """One of the 12 weight-3 monomials of the regular class."""

    shape: str  # LEFT: (x_i*x_j)*x_k, RIGHT: x_i*(x_j*x_k)
    labels: tuple[int, int, int]

    @property
    def index(self) -> int:
        base = 0 if self.shape == LEFT else 6
        return base + ARRANGEMENT_INDEX[self.labels]

    def __str__(self):
        i, j, k = self.labels
        if self.shape == LEFT:
            return f"(x{i}*x{j})*x{k}"
        return f"x{i}*(x{j}*x{k})"


MONOMIALS: tuple[Monomial3, ...] = tuple(
    Monomial3(shape, arr) for shape in (LEFT, RIGHT) for arr in ARRANGEMENTS
)

# Comb basis: m_p stands for the class of (x_i*x_j)*x_k with ordered inner
# pair as written below; the order matters for the anticommutative signs.
COMB_PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (3, 1))
COMB_BY_SET = {frozenset(p): i for i, p in enumerate(COMB_PAIRS)}
COMB_NAMES = ("m1", "m2", "m3")


@dataclass(frozen=True)
class Weight3Element:
    """A rational vector over the monomial basis of one symmetry class."""

    symmetry: SymmetryClass
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.symmetry.dim:
            raise ValueError(
                f"{self.symmetry.value} element needs {self.symmetry.dim} "
                f"coordinates, got {len(self.coords)}"
            )

    @classmethod
    def zero(cls, symmetry: SymmetryClass) -> "Weight3Element":
        return cls(symmetry, zero_vector(symmetry.dim))

    @classmethod
    def monomial(cls, shape: str, labels, coeff=1) -> "Weight3Element":
        m = Monomial3(shape, tuple(labels))
        coords = [Fraction(0)] * 12
        coords[m.index] = Fraction(coeff)
        return cls(REGULAR, tuple(coords))

    def _check_same(self, other: "Weight3Element"):
        if self.symmetry is not other.symmetry:
            raise ValueError("mixed symmetry classes")

    def __add__(self, other: "Weight3Element") -> "Weight3Element":
        self._check_same(other)
        return Weight3Element(
            self.symmetry, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "Weight3Element") -> "Weight3Element":
        self._check_same(other)
        return Weight3Element(
            self.symmetry, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "Weight3Element":
        return Weight3Element(self.symmetry, tuple(-a for a in self.coords))

    def scaled(self, c) -> "Weight3Element":
        c = Fraction(c)
        return Weight3Element(self.symmetry, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self):
        from .relation_dsl import format_weight3

        return format_weight3(self)


def comb_in(symmetry: SymmetryClass, p: int, coeff=1) -> Weight3Element:
    if symmetry is REGULAR:
        raise ValueError("comb basis lives in the symmetric classes")
    coords = [Fraction(0)] * 3
    coords[p - 1] = Fraction(coeff)
    return Weight3Element(symmetry, tuple(coords))


def act_monomial(sigma: Perm3, m: Monomial3) -> Monomial3:
    """sigma((x_i*x_j)*x_k) relabels each leaf l to sigma^{-1}(l)."""
    inv = sigma.inverse()
    return Monomial3(m.shape, tuple(inv(l) for l in m.labels))


def act(sigma: Perm3, x: Weight3Element) -> Weight3Element:
    """Linear extension of the leaf-relabelling action."""
    if x.symmetry is REGULAR:
        coords = [Fraction(0)] * 12
        for m in MONOMIALS:
            c = x.coords[m.index]
            if c != 0:
                coords[act_monomial(sigma, m).index] += c
        return Weight3Element(REGULAR, tuple(coords))
    # Symmetric classes: act on the canonical lift, project back.  The
    # projection is equivariant, so this is a genuine group action.
    return project(act(sigma, lift(x)), x.symmetry)


def act_vector(symmetry: SymmetryClass, sigma: Perm3, v: Vector) -> Vector:
    return act(sigma, Weight3Element(symmetry, vec(v))).coords


def lift(x: Weight3Element) -> Weight3Element:
    """Canonical Left-shape lift of a symmetric-class element."""
    if x.symmetry is REGULAR:
        return x
    out = Weight3Element.zero(REGULAR)
    for p, (i, j) in enumerate(COMB_PAIRS):
        c = x.coords[p]
        if c != 0:
            k = 6 - i - j
            out = out + Weight3Element.monomial(LEFT, (i, j, k), c)
    return out


def project(x: Weight3Element, target: SymmetryClass) -> Weight3Element:
    """Rewrite a regular element into the comb basis of a symmetric quotient.

    Commutative: the inner pair is unordered and x_i*(x_j*x_k) = (x_j*x_k)*x_i.
    Anticommutative: (a*b) = -(b*a) and c*(a*b) = -(a*b)*c, so each rewrite
    step contributes a sign.
    """
    if x.symmetry is not REGULAR:
        raise ValueError("project expects a regular-class element")
    if target is REGULAR:
        return x
    coords = [Fraction(0)] * 3
    anti = target is ANTICOMMUTATIVE
    for m in MONOMIALS:
        c = x.coords[m.index]
        if c == 0:
            continue
        i, j, k = m.labels
        if m.shape == LEFT:
            pair, sign = (i, j), 1
        else:
            # x_i*(x_j*x_k) -> -(x_j*x_k)*x_i in the anticommutative case
            pair, sign = (j, k), -1
        idx = COMB_BY_SET[frozenset(pair)]
        if anti:
            if pair != COMB_PAIRS[idx]:
                sign = -sign
            coords[idx] += c * sign
        else:
            coords[idx] += c
    return Weight3Element(target, tuple(coords))


def projection_matrix(target: SymmetryClass) -> list[Vector]:
    """Rows are the comb coordinates of each of the 12 regular monomials."""
    cols = [
        project(Weight3Element.monomial(m.shape, m.labels), target).coords
        for m in MONOMIALS
    ]
    return [tuple(col[p] for col in cols) for p in range(3)]


def psi(v: GroupVector, side: str) -> Weight3Element:
    """The one-shape translation maps applied to the identity-label monomial."""
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    base = Monomial3(side, (1, 2, 3))
    out = Weight3Element.zero(REGULAR)
    for sigma in PERMS:
        c = v[sigma]
        if c != 0:
            m = act_monomial(sigma, base)
            out = out + Weight3Element.monomial(m.shape, m.labels, c)
    return out


def decompose_LR(x: Weight3Element) -> tuple[GroupVector, GroupVector]:
    """The unique (v, w) with x = psi(v, L) - psi(w, R)."""
    if x.symmetry is not REGULAR:
        raise ValueError(
            "symmetric class requires explicit presentation; "
            "decompose_LR is only defined on the regular class"
        )
    v: dict[Perm3, Fraction] = {}
    w: dict[Perm3, Fraction] = {}
    for sigma in PERMS:
        lm = act_monomial(sigma, Monomial3(LEFT, (1, 2, 3)))
        rm = act_monomial(sigma, Monomial3(RIGHT, (1, 2, 3)))
        v[sigma] = x.coords[lm.index]
        w[sigma] = -x.coords[rm.index]
    return GroupVector.from_dict(v), GroupVector.from_dict(w)


ASSOCIATOR = (
    Weight3Element.monomial(LEFT, (1, 2, 3))
    - Weight3Element.monomial(RIGHT, (1, 2, 3))
)


def associator(labels) -> Weight3Element:
    """(x_a*x_b)*x_c - x_a*(x_b*x_c) for an arrangement (a, b, c)."""
    labels = tuple(labels)
    return Weight3Element.monomial(LEFT, labels) - Weight3Element.monomial(
        RIGHT, labels
    )
