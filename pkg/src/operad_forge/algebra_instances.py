"""Concrete finite-dimensional algebras given by structure constants.

Instances corroborate the symbolic layer: relation checking evaluates every
basis relation on every ordered basis triple, and tensor instances are
assembled from a mixed product's coefficients.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .foundation import Vector, span
from .operad_calculus import RelationModule
from .tensor_closure import E2, PAIR_KEYS, SWAP, MixedProduct
from .weight_spaces import (
    ANTICOMMUTATIVE,
    COMMUTATIVE,
    LEFT,
    MONOMIALS,
    REGULAR,
    Monomial3,
    Weight3Element,
    lift,
)

Structure = tuple[tuple[Vector, ...], ...]  # c[i][j] is the vector e_i * e_j


@dataclass(frozen=True)
class AlgebraInstance:
    dim: int
    structure: Structure
    name: Optional[str] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        if len(self.structure) != self.dim or any(
            len(row) != self.dim or any(len(v) != self.dim for v in row)
            for row in self.structure
        ):
            raise ValueError("structure constants have the wrong shape")

    @classmethod
    def from_entries(cls, dim: int, entries, name=None) -> "AlgebraInstance":
        """Build from sparse (i, j, k, value) entries, 1-based indices."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, value in entries:
            c[i - 1][j - 1][k - 1] += Fraction(value)
        return cls(
            dim,
            tuple(tuple(tuple(v) for v in row) for row in c),
            name,
        )

    def entries(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    v = self.structure[i][j][k]
                    if v != 0:
                        yield (i + 1, j + 1, k + 1, v)

    def product(self, u: Vector, v: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for i in range(self.dim):
            if u[i] == 0:
                continue
            for j in range(self.dim):
                if v[j] == 0:
                    continue
                c = self.structure[i][j]
                f = u[i] * v[j]
                for k in range(self.dim):
                    if c[k] != 0:
                        out[k] += f * c[k]
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "structure": [
                [i, j, k, str(v)] for i, j, k, v in self.entries()
            ],
        }

    @classmethod
    def from_json(cls, data: dict, name=None) -> "AlgebraInstance":
        entries = [
            (i, j, k, Fraction(v)) for i, j, k, v in data["structure"]
        ]
        return cls.from_entries(int(data["dim"]), entries, name)


@dataclass(frozen=True)
class Violation:
    relation: Weight3Element
    triple: tuple[int, int, int]  # 1-based basis indices
    value: Vector

    def __str__(self):
        a, b, c = self.triple
        return f"relation fails on (e{a}, e{b}, e{c}): residue {self.value}"


def _eval_monomial(alg: AlgebraInstance, m: Monomial3,
                   triple: Sequence[Vector]) -> Vector:
    i, j, k = m.labels
    xi, xj, xk = triple[i - 1], triple[j - 1], triple[k - 1]
    if m.shape == LEFT:
        return alg.product(alg.product(xi, xj), xk)
    return alg.product(xi, alg.product(xj, xk))


def commutativity_violations(alg: AlgebraInstance,
                             anti: bool = False) -> list[tuple[int, int]]:
    """Basis pairs where e_i e_j differs from (-)e_j e_i."""
    out = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            ij = alg.structure[i][j]
            ji = alg.structure[j][i]
            want = tuple(-v for v in ji) if anti else ji
            if ij != want:
                out.append((i + 1, j + 1))
    return out


def check_relations(alg: AlgebraInstance,
                    r: RelationModule) -> list[Violation]:
    """Evaluate every basis relation on every ordered basis triple."""
    if r.symmetry is not REGULAR:
        anti = r.symmetry is ANTICOMMUTATIVE
        bad = commutativity_violations(alg, anti=anti)
        if bad:
            kind = "anticommutative" if anti else "commutative"
            i, j = bad[0]
            raise ValueError(
                f"product is not {kind}: fails at (e{i}, e{j})"
            )
        relations = [lift(x) for x in r.basis_elements()]
    else:
        relations = r.basis_elements()
    violations = []
    basis = [alg.basis_vector(i) for i in range(alg.dim)]
    for x in relations:
        support = [m for m in MONOMIALS if x.coords[m.index] != 0]
        for triple_idx in itertools.product(range(alg.dim), repeat=3):
            triple = [basis[t] for t in triple_idx]
            total = [Fraction(0)] * alg.dim
            for m in support:
                val = _eval_monomial(alg, m, triple)
                c = x.coords[m.index]
                for k in range(alg.dim):
                    if val[k] != 0:
                        total[k] += c * val[k]
            if any(v != 0 for v in total):
                violations.append(
                    Violation(x, tuple(t + 1 for t in triple_idx),
                              tuple(total))
                )
    return violations


def satisfies(alg: AlgebraInstance, r: RelationModule) -> bool:
    """check_relations wrapper that treats a symmetry mismatch as failure."""
    try:
        return not check_relations(alg, r)
    except ValueError:
        return False


def tensor_instance(a: AlgebraInstance, b: AlgebraInstance,
                    product: MixedProduct,
                    name=None) -> AlgebraInstance:
    """Structure constants of A (x) B under a mixed product."""
    n = a.dim * b.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, p in itertools.product(range(a.dim), range(b.dim)):
        for j, q in itertools.product(range(a.dim), range(b.dim)):
            row = i * b.dim + p
            col = j * b.dim + q
            for s, t in PAIR_KEYS:
                alpha = product[(s, t)]
                if alpha == 0:
                    continue
                ii, jj = (j, i) if s == SWAP else (i, j)
                pp, qq = (q, p) if t == SWAP else (p, q)
                ca = a.structure[ii][jj]
                cb = b.structure[pp][qq]
                for k in range(a.dim):
                    if ca[k] == 0:
                        continue
                    for r in range(b.dim):
                        if cb[r] == 0:
                            continue
                        c[row][col][k * b.dim + r] += alpha * ca[k] * cb[r]
    return AlgebraInstance(
        n, tuple(tuple(tuple(v) for v in row) for row in c), name
    )


# ---------------------------------------------------------------------------
# Fixture catalog.


def _fixtures() -> dict[str, AlgebraInstance]:
    out = {}
    out["leib_tilde_3d"] = AlgebraInstance.from_entries(
        3,
        [(1, 1, 2, 1), (1, 3, 2, 1), (3, 3, 2, 1)],
        "leib_tilde_3d",
    )
    out["abelian_2d"] = AlgebraInstance.from_entries(2, [], "abelian_2d")
    out["lie_nonabelian_2d"] = AlgebraInstance.from_entries(
        2, [(1, 2, 2, 1), (2, 1, 2, -1)], "lie_nonabelian_2d"
    )
    out["heisenberg"] = AlgebraInstance.from_entries(
        3, [(1, 2, 3, 1), (2, 1, 3, -1)], "heisenberg"
    )
    # K[u]/(u^2) with unit: e1 = 1, e2 = u
    out["comm_assoc_2d"] = AlgebraInstance.from_entries(
        2,
        [(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1)],
        "comm_assoc_2d",
    )
    out["leibniz_3d"] = AlgebraInstance.from_entries(
        3, [(1, 1, 2, 1), (2, 1, 3, 1)], "leibniz_3d"
    )
    # Truncated half-shuffle: e1 e1 = e2, e1 e2 = e3, e2 e1 = 2 e3
    out["zinbiel_3d"] = AlgebraInstance.from_entries(
        3, [(1, 1, 2, 1), (1, 2, 3, 1), (2, 1, 3, 2)], "zinbiel_3d"
    )
    # A Lie bracket satisfies the one-operation Poisson identity (zero
    # commutative part); validated at import time below.
    out["poisson_heisenberg"] = AlgebraInstance.from_entries(
        3, [(1, 2, 3, 1), (2, 1, 3, -1)], "poisson_heisenberg"
    )
    # Unit adjoined to the Heisenberg Poisson algebra: e1 = 1, product
    # e_i * e_j = unit action + bracket.
    unital = [(1, k, k, 1) for k in range(1, 5)]
    unital += [(k, 1, k, 1) for k in range(2, 5)]
    unital += [(2, 3, 4, 1), (3, 2, 4, -1)]
    out["poisson_unital_4d"] = AlgebraInstance.from_entries(
        4, unital, "poisson_unital_4d"
    )
    return out


_CATALOG = _fixtures()


def example(name: str) -> AlgebraInstance:
    if name not in _CATALOG:
        raise ValueError(f"unknown example name: {name!r}")
    return _CATALOG[name]


def example_names() -> list[str]:
    return sorted(_CATALOG)


def _validate_catalog():
    from .operad_calculus import preset, tilde

    poiss = preset("poiss").relations
    for name in ("poisson_heisenberg", "poisson_unital_4d"):
        bad = check_relations(_CATALOG[name], poiss)
        if bad:
            raise AssertionError(f"{name} is not a Poisson-type instance")
    leib = preset("leib").relations
    for name in ("leibniz_3d", "leib_tilde_3d"):
        bad = check_relations(_CATALOG[name], leib)
        if bad and name == "leibniz_3d":
            raise AssertionError("leibniz_3d fails the defining relation")


_validate_catalog()


# ---------------------------------------------------------------------------
# Counterexample search.


@dataclass(frozen=True)
class Counterexample:
    left: AlgebraInstance
    right: AlgebraInstance
    violation: Violation


def _random_nilpotent(dim: int, rng: random.Random,
                      name: str) -> AlgebraInstance:
    """Strictly upper-triangular support: e_i e_j lands in span(e_k, k>max)."""
    entries = []
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            lo = max(i, j)
            for k in range(lo + 1, dim + 1):
                c = rng.randint(-2, 2)
                if c:
                    entries.append((i, j, k, c))
    return AlgebraInstance.from_entries(dim, entries, name)


def search_counterexample(r_a: RelationModule, r_b: RelationModule,
                          targets: Sequence[Weight3Element],
                          max_dim: int = 4, seed: int = 0,
                          budget: int = 200) -> Optional[Counterexample]:
    """Look for algebra pairs whose tensor product breaks a target relation.

    Candidates come from the fixture catalog first and then from seeded
    random nilpotent structure constants; absence of a witness within the
    budget proves nothing.
    """
    if max_dim > 4:
        raise ValueError("max_dim is capped at 4")
    targets = [t for t in targets if not t.is_zero()]
    if not targets:
        return None
    target_module = RelationModule(
        REGULAR, span([t.coords for t in targets], 12)
    ) if all(t.symmetry is REGULAR for t in targets) else None
    rng = random.Random(seed)
    candidates_a = [a for a in _CATALOG.values() if a.dim <= max_dim]
    candidates_b = list(candidates_a)
    for _ in range(budget):
        candidates_a.append(
            _random_nilpotent(rng.randint(2, max_dim), rng, "random")
        )
        candidates_b.append(
            _random_nilpotent(rng.randint(2, max_dim), rng, "random")
        )
    lefts = [a for a in candidates_a if satisfies(a, r_a)]
    rights = [b for b in candidates_b if satisfies(b, r_b)]
    for a in lefts:
        for b in rights:
            t = tensor_instance(a, b, MixedProduct.identity())
            if target_module is not None:
                bad = check_relations(t, target_module)
            else:
                bad = []
                for tgt in targets:
                    mod = RelationModule(
                        tgt.symmetry,
                        span([tgt.coords], tgt.symmetry.dim),
                    )
                    bad.extend(check_relations(t, mod))
            if bad:
                return Counterexample(a, b, bad[0])
    return None
