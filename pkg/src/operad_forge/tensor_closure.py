"""Symbolic verification of tensor-product closure.

A relation template in the regular 12-monomial basis is expanded over a
mixed product on A (tensor) B: every internal node of every monomial tree
independently picks one of the four (s, t) argument-swap options, the A-side
and B-side trees are renormalized to standard monomials, and membership of
the expansion in R_A (x) Gamma + Gamma (x) R_B is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .foundation import Vector, span, vec
from .group_module import PERMS, Perm3
from .operad_calculus import (
    QuadraticOperad,
    RelationModule,
    orbit_span,
    presentation_of,
    tilde,
)
from .weight_spaces import (
    LEFT,
    MONOMIALS,
    REGULAR,
    RIGHT,
    Monomial3,
    SymmetryClass,
    Weight3Element,
    act,
    act_monomial,
    projection_matrix,
)

E2 = "e"
SWAP = "s"
PAIR_KEYS = ((E2, E2), (E2, SWAP), (SWAP, E2), (SWAP, SWAP))


@dataclass(frozen=True)
class MixedProduct:
    """Sum of alpha_{st} (mu_A o s) (x) (mu_B o t) over Sigma_2 x Sigma_2."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]  # order PAIR_KEYS

    @classmethod
    def from_dict(cls, d) -> "MixedProduct":
        return cls(tuple(Fraction(d.get(k, 0)) for k in PAIR_KEYS))

    @classmethod
    def identity(cls) -> "MixedProduct":
        return cls.from_dict({(E2, E2): 1})

    @classmethod
    def bracket(cls) -> "MixedProduct":
        """The commutator-style product id(x)id - swap(x)swap."""
        return cls.from_dict({(E2, E2): 1, (SWAP, SWAP): -1})

    @classmethod
    def poisson_twist(cls) -> "MixedProduct":
        """The twist that carries a pair of Poisson-type products to one.

        Splitting each factor's product into its symmetric part s and
        antisymmetric part k, these coefficients give
        4(s(x)s + s(x)k + k(x)s): the commutative parts multiply and the
        brackets act by the usual Leibniz-rule tensor extension, with no
        stray k(x)k term.
        """
        return cls.from_dict(
            {(E2, E2): 3, (E2, SWAP): 1, (SWAP, E2): 1, (SWAP, SWAP): -1}
        )

    @classmethod
    def poisson_twist_literal(cls) -> "MixedProduct":
        """Same magnitudes with the off-diagonal signs flipped.

        Kept as an informative control: this variant leaves a bracket(x)bracket
        term in the expansion and the closure check rejects it.
        """
        return cls.from_dict(
            {(E2, E2): 3, (E2, SWAP): -1, (SWAP, E2): -1, (SWAP, SWAP): 1}
        )

    def __getitem__(self, key) -> Fraction:
        return self.coeffs[PAIR_KEYS.index(key)]

    def precompose_swap(self) -> "MixedProduct":
        """The product (a, b) -> product(b, a)."""
        flip = {E2: SWAP, SWAP: E2}
        return MixedProduct.from_dict(
            {(flip[s], flip[t]): self[(s, t)] for s, t in PAIR_KEYS}
        )

    def negated(self) -> "MixedProduct":
        return MixedProduct(tuple(-c for c in self.coeffs))


def apply_node_swaps(m: Monomial3, root_swap: bool, inner_swap: bool) -> Monomial3:
    """Renormalize a monomial tree after swapping node arguments.

    The inner node holds the adjacent pair of leaves; swapping the root's
    arguments flips the tree between the Left and Right shapes.
    """
    i, j, k = m.labels
    if m.shape == LEFT:
        if inner_swap:
            i, j = j, i
        if root_swap:
            return Monomial3(RIGHT, (k, i, j))
        return Monomial3(LEFT, (i, j, k))
    if inner_swap:
        j, k = k, j
    if root_swap:
        return Monomial3(LEFT, (j, k, i))
    return Monomial3(RIGHT, (i, j, k))


@dataclass(frozen=True)
class TensorElement3:
    """An element of (weight-3 space of A) (x) (weight-3 space of B)."""

    sym_a: SymmetryClass
    sym_b: SymmetryClass
    coords: tuple[Vector, ...]  # matrix, rows indexed by A-side monomials

    @property
    def dim_a(self) -> int:
        return self.sym_a.dim

    @property
    def dim_b(self) -> int:
        return self.sym_b.dim

    def is_zero(self) -> bool:
        return all(all(c == 0 for c in row) for row in self.coords)

    def terms(self):
        for ia, row in enumerate(self.coords):
            for ib, c in enumerate(row):
                if c != 0:
                    yield ia, ib, c


def _regular_expand_matrix(relation: Weight3Element,
                           product: MixedProduct) -> list[list[Fraction]]:
    out = [[Fraction(0)] * 12 for _ in range(12)]
    for m in MONOMIALS:
        c = relation.coords[m.index]
        if c == 0:
            continue
        for s_r, t_r in PAIR_KEYS:
            a_r = product[(s_r, t_r)]
            if a_r == 0:
                continue
            for s_i, t_i in PAIR_KEYS:
                a_i = product[(s_i, t_i)]
                if a_i == 0:
                    continue
                ma = apply_node_swaps(m, s_r == SWAP, s_i == SWAP)
                mb = apply_node_swaps(m, t_r == SWAP, t_i == SWAP)
                out[ma.index][mb.index] += c * a_r * a_i
    return out


def _matmul(a, b):
    return [
        [sum((x * y for x, y in zip(row, col)), Fraction(0))
         for col in zip(*b)]
        for row in a
    ]


def expand(relation: Weight3Element, product: MixedProduct,
           sym_a: SymmetryClass = REGULAR,
           sym_b: SymmetryClass = REGULAR) -> TensorElement3:
    """Expand a regular relation template over the mixed product.

    The expansion happens in the regular (x) regular space first and each
    factor is then projected to its symmetry class.
    """
    if relation.symmetry is not REGULAR:
        raise ValueError("expansion templates live in the regular class")
    mat = _regular_expand_matrix(relation, product)
    if sym_a is not REGULAR:
        mat = _matmul(projection_matrix(sym_a), mat)
    if sym_b is not REGULAR:
        pb = projection_matrix(sym_b)
        mat = [list(row) for row in zip(*_matmul(pb, [list(c) for c in zip(*mat)]))]
    return TensorElement3(sym_a, sym_b, tuple(tuple(row) for row in mat))


def action_matrix(symmetry: SymmetryClass, sigma: Perm3) -> list[list[Fraction]]:
    """Matrix of the action on a weight space, columns = images of basis."""
    n = symmetry.dim
    cols = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        cols.append(act(sigma, Weight3Element(symmetry, tuple(e))).coords)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def act_tensor(sigma: Perm3, t: TensorElement3) -> TensorElement3:
    """The diagonal (sigma, sigma) action on both tensor factors."""
    a_mat = action_matrix(t.sym_a, sigma)
    b_mat = action_matrix(t.sym_b, sigma)
    m = _matmul(a_mat, [list(r) for r in t.coords])
    m = _matmul(m, [list(r) for r in zip(*b_mat)])
    return TensorElement3(t.sym_a, t.sym_b, tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class ClosureCertificate:
    """Witness or refutation for one membership check."""

    holds: bool
    target: Weight3Element
    residuals: tuple[tuple[int, Vector], ...] = ()
    # (complement coordinate on the A side, leaking B-side component)

    def describe(self) -> str:
        if self.holds:
            return "absorbed"
        parts = []
        for col, res in self.residuals:
            parts.append(f"coset coordinate {col}: residual {res}")
        return "; ".join(parts)


def membership(t: TensorElement3, r_a: RelationModule,
               r_b: RelationModule) -> ClosureCertificate:
    """Decide t in R_A (x) Gamma_B + Gamma_A (x) R_B with a certificate.

    The A side is reduced modulo R_A; every surviving coset component must
    land in R_B.
    """
    if r_a.symmetry is not t.sym_a or r_b.symmetry is not t.sym_b:
        raise ValueError("relation modules do not match the expansion classes")
    mat = [list(row) for row in t.coords]
    for row_basis in r_a.space.basis:
        p = None
        for idx, e in enumerate(row_basis):
            if e != 0:
                p = idx
                break
        # Subtract the outer product of the basis row with the matrix's pivot
        # row, so the pivot row of the matrix becomes zero.
        pivot_row = mat[p][:]
        for i in range(t.dim_a):
            f = row_basis[i]
            if f != 0:
                mat[i] = [a - f * b for a, b in zip(mat[i], pivot_row)]
    residuals = []
    for i in r_a.space.complement_columns():
        component = tuple(mat[i])
        if not r_b.space.contains(component):
            residuals.append((i, r_b.space.reduce(component)))
    target = Weight3Element.zero(REGULAR)
    return ClosureCertificate(not residuals, target, tuple(residuals))


def closure_holds(r_a: RelationModule, r_b: RelationModule,
                  product: MixedProduct,
                  targets: Sequence[Weight3Element]
                  ) -> tuple[bool, list[ClosureCertificate]]:
    """Check every target's expansion against R_A (x) Gamma + Gamma (x) R_B."""
    certs = []
    ok = True
    for tgt in targets:
        t = expand(tgt, product, r_a.symmetry, r_b.symmetry)
        cert = membership(t, r_a, r_b)
        cert = ClosureCertificate(cert.holds, tgt, cert.residuals)
        certs.append(cert)
        ok = ok and cert.holds
    return ok, certs


def theorem1_check(p: QuadraticOperad, seed: int = 0) -> tuple[bool, list]:
    """Closure of P against its tilde companion over P's own relation basis."""
    companion = tilde(p, seed=seed)
    return closure_holds(
        p.relations, companion.relations, MixedProduct.identity(),
        p.relations.basis_elements() if p.symmetry is REGULAR
        else _symmetric_targets(p),
    )


def _symmetric_targets(p: QuadraticOperad) -> list[Weight3Element]:
    """Regular templates projecting onto a basis of a symmetric module."""
    # Use the presentation: psi(v,L) - psi(w,R) is a regular template whose
    # per-factor projection is a module generator; add its orbit.
    from .weight_spaces import psi

    pres = presentation_of(p)
    out = []
    for v, w in pres:
        base = psi(v, LEFT) - psi(w, RIGHT)
        for sigma in PERMS:
            out.append(act(sigma, base))
    return out


def minimal_companion(p: QuadraticOperad) -> RelationModule:
    """Least invariant module S with Delta(R) inside R (x) Gamma + Gamma (x) S."""
    if p.symmetry is not REGULAR:
        raise ValueError("minimal companion is computed for the regular class")
    r = p.relations
    collected = []
    for tgt in r.basis_elements():
        t = expand(tgt, MixedProduct.identity(), REGULAR, REGULAR)
        mat = [list(row) for row in t.coords]
        for row_basis in r.space.basis:
            pcol = None
            for idx, e in enumerate(row_basis):
                if e != 0:
                    pcol = idx
                    break
            pivot_row = mat[pcol][:]
            for i in range(12):
                f = row_basis[i]
                if f != 0:
                    mat[i] = [a - f * b for a, b in zip(mat[i], pivot_row)]
        for i in r.space.complement_columns():
            component = tuple(mat[i])
            if any(c != 0 for c in component):
                collected.append(Weight3Element(REGULAR, component))
    if not collected:
        return RelationModule(REGULAR, span([], 12))
    return orbit_span(collected, REGULAR)


def jacobiator_template() -> Weight3Element:
    """The Jacobi sum of nested commutators, written over a generic product.

    Built programmatically by expanding [[a,b],c] with [x,y] = xy - yx at
    both nodes, summed over the cyclic arrangements.
    """
    out = Weight3Element.zero(REGULAR)
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        base = Monomial3(LEFT, (a, b, c))
        for root_swap in (False, True):
            for inner_swap in (False, True):
                sign = (-1 if root_swap else 1) * (-1 if inner_swap else 1)
                m = apply_node_swaps(base, root_swap, inner_swap)
                out = out + Weight3Element.monomial(m.shape, m.labels, sign)
    return out


def bracket_antisymmetric() -> bool:
    """Coefficient identity: the commutator-style product is antisymmetric."""
    beta = MixedProduct.bracket()
    return beta.precompose_swap() == beta.negated()


def bracket_is_lie(r_a: RelationModule, r_b: RelationModule) -> bool:
    """Does the commutator-style product on A (x) B satisfy Jacobi?"""
    if r_a.symmetry is not REGULAR or r_b.symmetry is not REGULAR:
        raise ValueError("the bracket check expects regular classes")
    if not bracket_antisymmetric():
        return False
    ok, _ = closure_holds(
        r_a, r_b, MixedProduct.bracket(), [jacobiator_template()]
    )
    return ok


def twisted_poisson_check() -> tuple[bool, list[ClosureCertificate]]:
    """The twisted product of two Poisson-type factors stays Poisson-type."""
    from .operad_calculus import preset

    poiss = preset("poiss")
    return closure_holds(
        poiss.relations, poiss.relations, MixedProduct.poisson_twist(),
        poiss.relations.basis_elements(),
    )
