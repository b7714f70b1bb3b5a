"""The symmetric group on three letters, its group algebra, and isotypic data.

The six elements are enumerated in the fixed order
(Id, t12, t13, t23, c1, c2) with c1 = (1,2,3) and c2 = (1,3,2); this order
is part of every serialized format.  The "natural" action of the group on
its own group algebra is left translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .foundation import Subspace, Vector, span, vec


@dataclass(frozen=True, order=True)
class Perm3:
    """A permutation of {1,2,3}, stored as its tuple of images."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of (1,2,3): {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        # Left-to-right composition: (self * other)(i) = other(self(i)).
        # With the inverse-relabel action on monomials this makes
        # act(p * q, x) = act(p, act(q, x)) a genuine left action.
        return Perm3(tuple(other(self(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return Perm3(tuple(inv))

    def sign(self) -> int:
        (a, b, c) = self.images
        inversions = (a > b) + (a > c) + (b > c)
        return -1 if inversions % 2 else 1

    @property
    def name(self) -> str:
        return PERM_NAMES[self]

    def __repr__(self):
        return f"Perm3({self.name})"


ID = Perm3((1, 2, 3))
T12 = Perm3((2, 1, 3))
T13 = Perm3((3, 2, 1))
T23 = Perm3((1, 3, 2))
C1 = Perm3((2, 3, 1))
C2 = Perm3((3, 1, 2))

PERMS: tuple[Perm3, ...] = (ID, T12, T13, T23, C1, C2)
PERM_INDEX = {p: i for i, p in enumerate(PERMS)}
PERM_NAMES = {ID: "Id", T12: "t12", T13: "t13", T23: "t23", C1: "c1", C2: "c2"}
PERM_BY_NAME = {name: p for p, name in PERM_NAMES.items()}

SUBGROUPS: dict[int, tuple[Perm3, ...]] = {
    1: (ID,),
    2: (ID, T12),
    3: (ID, T23),
    4: (ID, T13),
    5: (ID, C1, C2),
    6: PERMS,
}


@dataclass(frozen=True)
class GroupVector:
    """An element of the rational group algebra of the symmetric group."""

    coeffs: Vector  # length 6, indexed by PERMS

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError("a group vector has exactly 6 coefficients")

    @classmethod
    def from_dict(cls, d: dict[Perm3, Fraction]) -> "GroupVector":
        return cls(vec(d.get(p, 0) for p in PERMS))

    @classmethod
    def basis(cls, p: Perm3) -> "GroupVector":
        return cls.from_dict({p: Fraction(1)})

    @classmethod
    def zero(cls) -> "GroupVector":
        return cls(vec([0] * 6))

    def __getitem__(self, p: Perm3) -> Fraction:
        return self.coeffs[PERM_INDEX[p]]

    def __add__(self, other: "GroupVector") -> "GroupVector":
        return GroupVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupVector") -> "GroupVector":
        return GroupVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupVector":
        return GroupVector(tuple(-a for a in self.coeffs))

    def scaled(self, c) -> "GroupVector":
        c = Fraction(c)
        return GroupVector(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "GroupVector") -> "GroupVector":
        """Group-algebra convolution product."""
        out = {p: Fraction(0) for p in PERMS}
        for p in PERMS:
            a = self[p]
            if a == 0:
                continue
            for q in PERMS:
                b = other[q]
                if b == 0:
                    continue
                out[p * q] += a * b
        return GroupVector.from_dict(out)

    def translate(self, p: Perm3) -> "GroupVector":
        """Left translation p·v, the natural action on the group algebra."""
        out = {p * q: self[q] for q in PERMS}
        return GroupVector.from_dict(out)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def support(self) -> list[Perm3]:
        return [p for p in PERMS if self[p] != 0]

    def __str__(self):
        from .relation_dsl import format_group_vector

        return format_group_vector(self)


def group_vector(*terms) -> GroupVector:
    """Build a group vector from (coefficient, perm) pairs."""
    d: dict[Perm3, Fraction] = {}
    for c, p in terms:
        d[p] = d.get(p, Fraction(0)) + Fraction(c)
    return GroupVector.from_dict(d)


def subgroup_alternating(i: int) -> GroupVector:
    """Signed sum over the i-th subgroup (the V_i vectors)."""
    return GroupVector.from_dict(
        {p: Fraction(p.sign()) for p in SUBGROUPS[i]}
    )


def subgroup_symmetric(i: int) -> GroupVector:
    """Plain sum over the i-th subgroup (the W_i vectors)."""
    return GroupVector.from_dict({p: Fraction(1) for p in SUBGROUPS[i]})


V_FULL = subgroup_alternating(6)
W_FULL = subgroup_symmetric(6)


def group_orbit_span(v: GroupVector) -> Subspace:
    """Span of the left-translation orbit of v inside the group algebra."""
    return span([v.translate(p).coeffs for p in PERMS], 6)


# ---------------------------------------------------------------------------
# Isotypic decomposition via the central idempotents.

Action = Callable[[Perm3, Vector], Vector]


def translate_action(p: Perm3, v: Vector) -> Vector:
    """Left translation on group-algebra coordinate vectors."""
    return GroupVector(v).translate(p).coeffs


@dataclass(frozen=True)
class IsotypicProfile:
    m_triv: int
    m_sgn: int
    m_std: int

    @property
    def dim(self) -> int:
        return self.m_triv + self.m_sgn + 2 * self.m_std


def _apply_idempotent(kind: str, act: Action, v: Vector) -> Vector:
    n = len(v)
    out = [Fraction(0)] * n
    for p in PERMS:
        w = act(p, v)
        s = Fraction(p.sign() if kind == "sgn" else 1, 6)
        for i in range(n):
            out[i] += s * w[i]
    out = tuple(out)
    if kind == "std":
        triv = _apply_idempotent("triv", act, v)
        sgn = _apply_idempotent("sgn", act, v)
        return tuple(a - b - c for a, b, c in zip(v, triv, sgn))
    return out


def check_invariant(s: Subspace, act: Action) -> None:
    for b in s.basis:
        for p in PERMS:
            if not s.contains(act(p, b)):
                raise ValueError(
                    f"not invariant: image of a basis vector under {p.name} "
                    f"leaves the subspace"
                )


def isotypic_multiplicities(s: Subspace, act: Action) -> IsotypicProfile:
    """Multiplicities of the three irreducibles in an invariant subspace."""
    check_invariant(s, act)
    dims = {}
    for kind in ("triv", "sgn", "std"):
        images = [_apply_idempotent(kind, act, b) for b in s.basis]
        dims[kind] = span(images, s.ambient_dim).dim
    if dims["std"] % 2 != 0:
        raise ValueError("2-dimensional isotypic component has odd dimension")
    return IsotypicProfile(dims["triv"], dims["sgn"], dims["std"] // 2)


def minimal_generator_count(profile: IsotypicProfile) -> int:
    """Minimal number of module generators over the semisimple group algebra."""
    return max(profile.m_triv, profile.m_sgn, -(-profile.m_std // 2))
