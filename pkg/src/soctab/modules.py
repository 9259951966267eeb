"""Finite-length modules over F_p[T]/(T^N) as vector spaces with a nilpotent operator.

The operator plays multiplication by the uniformizer.  A module is
isomorphic to a direct sum of Jordan blocks; the block sizes, sorted,
are its type.  Subspaces carry their ambient module and a reduced
row-echelon basis, so equal subspaces have equal basis arrays.
"""

import numpy as np

from . import linalg
from .partitions import partition, transpose


class NotInvariant(ValueError):
    """Raised when a subspace is required to be stable under the operator."""


class FpModule:
    """F_p vector space with a nilpotent operator acting on column vectors."""

    __slots__ = ("prime", "op", "dim", "_powers")

    def __init__(self, prime, op):
        self.prime = int(prime)
        op = np.array(op, dtype=np.int64) % self.prime
        if op.ndim != 2 or op.shape[0] != op.shape[1]:
            raise ValueError("operator must be square")
        self.op = op
        self.dim = op.shape[0]
        self._powers = [np.eye(self.dim, dtype=np.int64)]
        # cache powers up to the nilpotency index; fail fast otherwise
        cur = self._powers[0]
        for _ in range(self.dim):
            if not cur.any():
                break
            cur = (cur @ op) % self.prime
            self._powers.append(cur)
        if self._powers[-1].any():
            raise ValueError("operator is not nilpotent")

    def power(self, r):
        """T^r as a matrix; saturates at zero beyond the nilpotency index."""
        if r < len(self._powers):
            return self._powers[r]
        return np.zeros((self.dim, self.dim), dtype=np.int64)

    @property
    def nilpotency_index(self):
        return len(self._powers) - 1

    def __eq__(self, other):
        if not isinstance(other, FpModule):
            return NotImplemented
        return self.prime == other.prime and np.array_equal(self.op, other.op)

    def __repr__(self):
        return f"FpModule(p={self.prime}, dim={self.dim})"


class Subspace:
    """Subspace of an FpModule, held as reduced row-echelon basis rows."""

    __slots__ = ("module", "basis")

    def __init__(self, module, basis):
        self.module = module
        self.basis = linalg.row_space(
            linalg.asmat(basis, module.dim, module.prime), module.prime
        )

    @property
    def dim(self):
        return self.basis.shape[0]

    def contains(self, vec):
        return linalg.in_row_space(
            np.array(vec, dtype=np.int64), self.basis, self.module.prime
        )

    def is_invariant(self):
        """True iff the operator maps this subspace into itself."""
        img = linalg.image(self.module.op, self.basis, self.module.prime)
        return linalg.is_subspace(img, self.basis, self.module.prime)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.module == other.module and np.array_equal(self.basis, other.basis)

    def __le__(self, other):
        return linalg.is_subspace(self.basis, other.basis, self.module.prime)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.module!r})"


def zero_subspace(module):
    return Subspace(module, np.zeros((0, module.dim), dtype=np.int64))


def full_subspace(module):
    return Subspace(module, np.eye(module.dim, dtype=np.int64))


def standard_module(prime, parts):
    """Direct sum of Jordan blocks of the given sizes.

    Basis vector offset+i of block j represents p^i times the j-th
    generator, so the operator sends it to the next one in the block.
    """
    parts = partition(parts)
    n = sum(parts)
    op = np.zeros((n, n), dtype=np.int64)
    off = 0
    for size in parts:
        for i in range(size - 1):
            op[off + i + 1, off + i] = 1
        off += size
    return FpModule(prime, op)


def block_offsets(parts):
    """Starting index of each block of a standard module."""
    offs = []
    off = 0
    for size in parts:
        offs.append(off)
        off += size
    return offs


def module_type(module):
    """Type partition: the r-th row length is dim ker T^r - dim ker T^(r-1)."""
    p = module.prime
    rows = []
    prev = 0
    total = 0
    r = 1
    while total < module.dim:
        cur = module.dim - linalg.rank(module.power(r), p)
        rows.append(cur - prev)
        total += cur - prev
        prev = cur
        r += 1
    return transpose(tuple(rows))


def submodule_span(module, generators):
    """Smallest invariant subspace containing the generators."""
    p = module.prime
    gens = linalg.asmat(generators, module.dim, p)
    rows = [gens]
    cur = gens
    for _ in range(module.nilpotency_index):
        cur = (cur @ module.op.T) % p
        if not cur.any():
            break
        rows.append(cur)
    return Subspace(module, np.vstack(rows))


def _require_invariant(sub):
    if not sub.is_invariant():
        raise NotInvariant("subspace is not stable under the operator")


def quotient_type(module, sub):
    """Type of module/sub under the induced operator."""
    _require_invariant(sub)
    p = module.prime
    ann = linalg.left_annihilator(sub.basis, module.dim, p)
    qdim = module.dim - sub.dim
    rows = []
    prev = 0
    total = 0
    r = 1
    while total < qdim:
        # dim ker of the induced T^r equals dim {v : T^r v in sub} - dim sub
        if ann.shape[0] == 0:
            cur = qdim
        else:
            mat = (ann @ module.power(r)) % p
            cur = (module.dim - linalg.rank(mat, p)) - sub.dim
        rows.append(cur - prev)
        total += cur - prev
        prev = cur
        r += 1
    return transpose(tuple(rows))


def soc_layer(module, sub, ell):
    """{a in sub : T^ell a = 0}."""
    p = module.prime
    if ell <= 0 or sub.dim == 0:
        return zero_subspace(module)
    # coefficients x with T^ell (x . basis) = 0
    mat = (module.power(ell) @ sub.basis.T) % p
    coeffs = linalg.nullspace(mat, p)
    return Subspace(module, (coeffs @ sub.basis) % p)


def rad_layer(module, sub, m):
    """T^m applied to sub."""
    return Subspace(module, linalg.image(module.power(m), sub.basis, module.prime))


def preimage(module, sub, r):
    """{b in module : T^r b in sub}."""
    return Subspace(module, linalg.preimage(module.power(r), sub.basis, module.prime))


def dual_module(module):
    """Linear dual with the transposed operator."""
    return FpModule(module.prime, module.op.T % module.prime)


def jordan_basis_matrix(module):
    """Invertible U whose columns are chain vectors v, Tv, ... per block,
    blocks ordered by decreasing length; then T U = U T_std."""
    p = module.prime
    n = module.dim
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    top_h = module.nilpotency_index
    kers = [linalg.nullspace(module.power(h), p) for h in range(top_h + 1)]
    tops = []
    for h in range(top_h, 0, -1):
        rows = [kers[h - 1]]
        for v, hh in tops:
            rows.append(((module.power(hh - h) @ v) % p).reshape(1, -1))
        span = linalg.row_space(np.vstack(rows), p)
        for cand in kers[h]:
            if not linalg.in_row_space(cand, span, p):
                tops.append((cand, h))
                span = linalg.row_space(np.vstack([span, cand.reshape(1, -1)]), p)
    cols = []
    for v, h in sorted(tops, key=lambda t: -t[1]):
        cur = v.copy()
        for _ in range(h):
            cols.append(cur)
            cur = (module.op @ cur) % p
    u = np.array(cols, dtype=np.int64).T % p
    linalg.inverse(u, p)  # raises if the chains are dependent; never expected
    return u


def annihilator(module, sub):
    """Functionals vanishing on sub, as a subspace of the dual module."""
    basis = linalg.left_annihilator(sub.basis, module.dim, module.prime)
    return Subspace(dual_module(module), basis)
