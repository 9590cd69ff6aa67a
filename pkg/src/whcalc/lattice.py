"""Exact integer linear algebra: solving, kernels, lattices, subquotients.

All vectors are tuples/lists of Python ints, matrices are lists of rows.
Everything here reduces to the Smith normal form kernel in ``_snf``.
"""

from __future__ import annotations

from . import _snf


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    n = len(b)
    cols = len(b[0]) if n else 0
    bt = list(zip(*b)) if n else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []


def from_columns(cols, dim):
    """Matrix (list of rows) whose columns are the given vectors."""
    return [[col[i] for col in cols] for i in range(dim)]


def columns_of(a):
    return [list(c) for c in zip(*a)] if a else []


def smith(rows, want_transforms=True):
    return _snf.smith(rows, want_transforms)


class Solver:
    """Reusable exact solver for A x = b (the SNF is computed once)."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.diag, self.left, self.right = _snf.smith(self.rows, True)
        self.rank = len(self.diag)

    def solve(self, b):
        """One integer solution of A x = b, or None."""
        if self.m == 0:
            return [0] * self.n
        c = mat_vec(self.left, b)
        y = [0] * self.n
        for i in range(self.rank):
            if c[i] % self.diag[i]:
                return None
            y[i] = c[i] // self.diag[i]
        for i in range(self.rank, self.m):
            if c[i]:
                return None
        return mat_vec(self.right, y)

    def kernel(self):
        """Basis vectors of the integer kernel."""
        return [[self.right[i][j] for i in range(self.n)]
                for j in range(self.rank, self.n)]


def solve(rows, b):
    return Solver(rows).solve(b)


def kernel_basis(rows):
    return Solver(rows).kernel()


def unimodular_inverse(u):
    """Exact inverse of a unimodular integer matrix."""
    diag, left, right = _snf.smith(u, True)
    if len(diag) != len(u) or any(d != 1 for d in diag):
        raise ValueError("matrix is not unimodular")
    return mat_mul(right, left)


def lattice_basis(gens, dim):
    """Independent vectors spanning the same lattice as ``gens`` in Z^dim."""
    cols = [g for g in gens if any(g)]
    if not cols:
        return []
    a = from_columns(cols, dim)
    diag, _left, right = _snf.smith(a, True)
    ar = mat_mul(a, right)
    return [[ar[i][j] for i in range(dim)] for j in range(len(diag))]


def cokernel_factors(gens, dim):
    """Invariant factors of Z^dim / span(gens): torsion >1 first, then 0s."""
    cols = [g for g in gens if any(g)]
    if not cols:
        return [0] * dim
    a = from_columns(cols, dim)
    diag, _, _ = _snf.smith(a, False)
    return [d for d in diag if d != 1] + [0] * (dim - len(diag))


def kernel_with_denominator(c_rows, den_cols, n_unknowns):
    """Basis of the lattice {x in Z^n : C x lies in span(den_cols)}.

    ``den_cols`` are vectors in the row space Z^m of C; an empty list asks
    for the plain integer kernel.
    """
    if not c_rows:
        return [e for e in identity(n_unknowns)]
    aug = [list(r) + [-col[i] for col in den_cols] for i, r in enumerate(c_rows)]
    ker = kernel_basis(aug)
    projected = [v[:n_unknowns] for v in ker]
    return lattice_basis(projected, n_unknowns)


def quotient_factors(num_basis, den_gens, dim):
    """Invariant factors of span(num_basis)/span(den_gens), den inside num."""
    basis = [b for b in num_basis if any(b)]
    if not basis:
        for d in den_gens:
            if any(d):
                raise ValueError("denominator not contained in numerator")
        return []
    solver = Solver(from_columns(basis, dim))
    rel = []
    for d in den_gens:
        y = solver.solve(d)
        if y is None:
            raise ValueError("denominator not contained in numerator")
        rel.append(y)
    return cokernel_factors(rel, len(basis))


def quotient_with_generators(num_basis, den_gens, dim):
    """Like ``quotient_factors`` but also returns aligned generator vectors.

    Returns ``(factors, gens)`` where generator i has order factors[i]
    (0 meaning infinite) in the quotient, expressed in ambient Z^dim.
    Trivial (order-1) cyclic summands are dropped.
    """
    basis = [b for b in num_basis if any(b)]
    if not basis:
        return [], []
    k = len(basis)
    solver = Solver(from_columns(basis, dim))
    rel = []
    for d in den_gens:
        y = solver.solve(d)
        if y is None:
            raise ValueError("denominator not contained in numerator")
        rel.append(y)
    if not rel:
        rel_mat_diag, left = [], identity(k)
    else:
        rel_mat = from_columns(rel, k)
        rel_mat_diag, left, _right = _snf.smith(rel_mat, True)
    left_inv = unimodular_inverse(left)
    b_mat = from_columns(basis, dim)
    full = rel_mat_diag + [0] * (k - len(rel_mat_diag))
    factors, gens = [], []
    for j, d in enumerate(full):
        if d == 1:
            continue
        coord = [left_inv[i][j] for i in range(k)]
        vec = mat_vec(b_mat, coord)
        factors.append(d)
        gens.append(vec)
    return factors, gens


class Lattice:
    """Sublattice of Z^dim with echelon basis and canonical coset reps."""

    def __init__(self, gens, dim):
        self.dim = dim
        self.pivots = []  # (row, column vector) by increasing row
        work = [list(g) for g in gens if any(g)]
        for row in range(dim):
            sel = [c for c in work if c[row] != 0]
            rest = [c for c in work if c[row] == 0]
            while len(sel) > 1:
                sel.sort(key=lambda c: (abs(c[row]), c))
                piv = sel[0]
                out = [piv]
                for c in sel[1:]:
                    q = c[row] // piv[row]
                    if q:
                        c = [x - q * y for x, y in zip(c, piv)]
                    if c[row] != 0:
                        out.append(c)
                    elif any(c):
                        rest.append(c)
                sel = out
            if sel:
                piv = sel[0]
                if piv[row] < 0:
                    piv = [-x for x in piv]
                self.pivots.append((row, piv))
            work = rest

    def reduce(self, v):
        """Canonical representative of ``v`` modulo the lattice."""
        v = list(v)
        for row, col in self.pivots:
            q = v[row] // col[row]
            if q:
                v = [x - q * y for x, y in zip(v, col)]
        return tuple(v)

    def contains(self, v):
        return not any(self.reduce(v))

    def basis(self):
        return [list(col) for _row, col in self.pivots]
