"""Exact linear algebra over Q: reduced row echelon form and subspaces."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rational import Q, dot, fmt, unit, vec


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(vec(r)) for r in rows]
    for r in M:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[top], M[piv] = M[piv], M[top]
        p = M[top][col]
        M[top] = [x / p for x in M[top]]
        for i in range(len(M)):
            if i != top and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[top])]
        pivots.append(col)
        top += 1
        if top == len(M):
            break
    return [tuple(r) for r in M[:top]], pivots


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> tuple | None:
    """One solution of A x = b, or None when inconsistent."""
    A = [vec(r) for r in A]
    n = len(A[0]) if A else 0
    aug = [r + (Q(bi),) for r, bi in zip(A, b)]
    R, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(R, piv):
        x[c] = row[n]
    return tuple(x)


class Subspace:
    """A linear subspace of Q^n with a canonical (RREF) basis.

    Two subspaces are equal exactly when their bases are equal, so golden
    tests can compare them structurally.
    """

    __slots__ = ("ambient", "basis", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        basis, piv = rref(vectors, ambient)
        self.ambient = ambient
        self.basis: tuple[tuple[Fraction, ...], ...] = tuple(basis)
        self._pivots = tuple(piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit(n, j) for j in range(n)])

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, [unit(n, j) for j in sorted(set(indices))])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        self._check(len(v))
        # reduce v against the RREF basis using pivot columns
        r = list(v)
        for row, c in zip(self.basis, self._pivots):
            if r[c] != 0:
                f = r[c]
                r = [a - f * b for a, b in zip(r, row)]
        return all(x == 0 for x in r)

    __contains__ = contains

    def issubset(self, other: "Subspace") -> bool:
        self._check(other.ambient)
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def __lt__(self, other: "Subspace") -> bool:
        return self.issubset(other) and self.dim < other.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other.ambient)
        return Subspace(self.ambient, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> "Subspace":
        """All functionals (as vectors) vanishing on this subspace."""
        return kernel_basis(self.basis, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other.ambient)
        rows = self.annihilator().basis + other.annihilator().basis
        return kernel_basis(rows, self.ambient)

    __and__ = intersect

    def image(self, M: Sequence[Sequence]) -> "Subspace":
        """Image under x -> M x."""
        m = len(M)
        cols = [tuple(dot(row, b) for row in M) for b in self.basis]
        return Subspace(m, cols)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients c with v = sum c_k basis_k (v must lie in the subspace)."""
        v = vec(v)
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self._pivots)

    def support(self) -> frozenset[int]:
        """Union of coordinate supports of all members."""
        return frozenset(j for b in self.basis for j, x in enumerate(b) if x != 0)

    def is_coordinate(self) -> bool:
        return self == Subspace.coordinate(self.ambient, self.support())

    def _check(self, n: int) -> None:
        if n != self.ambient:
            raise ValueError(f"dimension mismatch: {n} vs ambient {self.ambient}")

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "basis": [[fmt(x) for x in b] for b in self.basis]}

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(fmt(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(Q^{self.ambient}: span{{{rows}}})"


def kernel_basis(M: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """{x : M x = 0} as a canonical subspace."""
    M = [vec(r) for r in M]
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return Subspace.full(n)
    R, piv = rref(M, n)
    free = [c for c in range(n) if c not in piv]
    vectors = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, c in zip(R, piv):
            x[c] = -row[f]
        vectors.append(x)
    return Subspace(n, vectors)


def preimage(M: Sequence[Sequence], J: Subspace, ncols: int) -> Subspace:
    """{x in Q^ncols : M x in J}."""
    A = J.annihilator().basis
    rows = [tuple(sum((a[k] * M[k][j] for k in range(len(M))), Fraction(0)) for j in range(ncols)) for a in A]
    return kernel_basis(rows, ncols)
