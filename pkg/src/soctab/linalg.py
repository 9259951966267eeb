"""Exact linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries reduced mod p.  Vectors are
rows; a subspace is represented by its reduced row-echelon basis, which
makes subspace equality plain array equality.
"""

import numpy as np


def asmat(rows, n, p):
    """Normalize ``rows`` to a 2-D int64 array with n columns, reduced mod p."""
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def rref(mat, p):
    """Reduced row-echelon form and pivot columns."""
    a = mat.copy() % p
    nrows, ncols = a.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(a[row:, col])[0]
        if len(nz) == 0:
            continue
        piv = nz[0] + row
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), -1, p)
        a[row] = (a[row] * inv) % p
        other = np.nonzero(a[:, col])[0]
        for r in other:
            if r != row:
                a[r] = (a[r] - a[r, col] * a[row]) % p
        pivots.append(col)
        row += 1
    return a[: len(pivots)], pivots


def rank(mat, p):
    return rref(mat, p)[0].shape[0]


def row_space(mat, p):
    """Canonical (rref) basis of the row space."""
    return rref(mat, p)[0]


def nullspace(mat, p):
    """Canonical basis of {x : mat @ x = 0}, as rows."""
    nrows, ncols = mat.shape
    r, pivots = rref(mat, p)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, c in enumerate(free):
        basis[i, c] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = (-r[j, c]) % p
    return row_space(basis, p)


def left_annihilator(basis, n, p):
    """Canonical basis of {f : f . v = 0 for every row v of basis}."""
    return nullspace(asmat(basis, n, p), p)


def in_row_space(vec, basis, p):
    """True iff vec lies in the span of the basis rows."""
    if basis.shape[0] == 0:
        return not np.any(vec % p)
    stacked = np.vstack([basis, vec % p])
    return rank(stacked, p) == basis.shape[0]


def is_subspace(small, big, p):
    """True iff span(small) is contained in span(big)."""
    if small.shape[0] == 0:
        return True
    stacked = np.vstack([big, small])
    return rank(stacked, p) == rank(big, p)


def subspace_sum(a, b, p):
    if a.shape[0] == 0:
        return row_space(b, p)
    if b.shape[0] == 0:
        return row_space(a, p)
    return row_space(np.vstack([a, b]), p)


def intersection(a, b, p):
    """Canonical basis of span(a) & span(b)."""
    n = a.shape[1]
    ann = np.vstack([left_annihilator(a, n, p), left_annihilator(b, n, p)])
    return nullspace(ann, p)


def preimage(op, basis, p):
    """Canonical basis of {v : op @ v in span(basis)}; op is n x n, vectors are rows."""
    n = op.shape[1]
    ann = left_annihilator(basis, op.shape[0], p)
    if ann.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    return nullspace((ann @ op) % p, p)


def image(op, basis, p):
    """Canonical basis of op(span(basis)); rows act through op on the left."""
    if basis.shape[0] == 0:
        return basis.copy()
    return row_space((basis @ op.T) % p, p)


def matmul(a, b, p):
    return (a @ b) % p


def inverse(mat, p):
    """Inverse of a square matrix; raises ValueError when singular."""
    n = mat.shape[0]
    aug = np.hstack([mat % p, np.eye(n, dtype=np.int64)])
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return r[:, n:]


def solve_commutant(t_source, t_target, p):
    """Basis of maps F (target_dim x source_dim) with F @ t_source = t_target @ F.

    Returned as a list of matrices; the basis is canonical in the
    flattened coordinates.
    """
    ns, nt = t_source.shape[0], t_target.shape[0]
    if ns == 0 or nt == 0:
        return []
    lhs = np.kron(t_source.T, np.eye(nt, dtype=np.int64)) - np.kron(
        np.eye(ns, dtype=np.int64), t_target
    )
    sols = nullspace(lhs % p, p)
    return [v.reshape(ns, nt).T.copy() for v in sols]
