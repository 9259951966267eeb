"""Embeddings of an invariant subspace in a module, and their invariants.

An embedding is a pair (sub inside ambient) with the subspace stable
under the operator.  Its shape triple is (type(sub), type(ambient),
type(ambient/sub)).  The socle tableau records the quotient types along
the socle filtration of the subspace, the LR tableau those along the
radical filtration; pickets are the single-block embeddings, and the
Hom-matrix collects the dimensions of homomorphism spaces from all
pickets into the embedding.
"""

import json
import random
from importlib import resources

import numpy as np

from . import linalg
from .modules import (
    FpModule,
    Subspace,
    annihilator,
    dual_module,
    module_type,
    quotient_type,
    rad_layer,
    soc_layer,
    standard_module,
    submodule_span,
    zero_subspace,
)
from .partitions import Shape, partition, transpose
from .tableaux import SkewTableau, from_chain


class PrimeMismatch(ValueError):
    pass


class BadIndex(ValueError):
    pass


class Embedding:
    """Pair (sub inside ambient); sub must be invariant under the operator."""

    __slots__ = ("ambient", "sub", "_shape")

    def __init__(self, ambient, sub):
        if sub.module is not ambient and sub.module != ambient:
            raise ValueError("subspace does not live in the ambient module")
        if not sub.is_invariant():
            raise ValueError("subspace is not invariant under the operator")
        self.ambient = ambient
        self.sub = sub
        self._shape = None

    @property
    def prime(self):
        return self.ambient.prime

    @property
    def shape(self) -> Shape:
        if self._shape is None:
            a = _sub_type(self)
            b = module_type(self.ambient)
            g = quotient_type(self.ambient, self.sub)
            self._shape = Shape(a, b, g)
        return self._shape

    @property
    def alpha(self):
        return self.shape.alpha

    @property
    def beta(self):
        return self.shape.beta

    @property
    def gamma(self):
        return self.shape.gamma

    def __repr__(self):
        a, b, g = self.shape
        return f"Embedding(alpha={a}, beta={b}, gamma={g}, p={self.prime})"


def _sub_type(x: Embedding):
    """Type of the subspace as a module under the restricted operator."""
    p = x.prime
    basis = x.sub.basis
    if basis.shape[0] == 0:
        return ()
    rows = []
    prev = 0
    total = 0
    r = 1
    while total < basis.shape[0]:
        mat = (x.ambient.power(r) @ basis.T) % p
        cur = basis.shape[0] - linalg.rank(mat, p)
        rows.append(cur - prev)
        total += cur - prev
        prev = cur
        r += 1
    return transpose(tuple(rows))


def zero_embedding(prime):
    m = FpModule(prime, np.zeros((0, 0), dtype=np.int64))
    return Embedding(m, zero_subspace(m))


def picket(prime, ell, m):
    """Single block of length m with its unique invariant subspace of length ell."""
    if ell < 0 or m < 0 or ell > m:
        raise BadIndex(f"picket requires 0 <= ell <= m, got ({ell}, {m})")
    if m == 0:
        return zero_embedding(prime)
    mod = standard_module(prime, (m,))
    basis = np.zeros((ell, m), dtype=np.int64)
    for i in range(ell):
        basis[i, m - ell + i] = 1
    return Embedding(mod, Subspace(mod, basis))


def direct_sum(x: Embedding, y: Embedding) -> Embedding:
    if x.prime != y.prime:
        raise PrimeMismatch(f"primes differ: {x.prime} vs {y.prime}")
    nx, ny = x.ambient.dim, y.ambient.dim
    op = np.zeros((nx + ny, nx + ny), dtype=np.int64)
    op[:nx, :nx] = x.ambient.op
    op[nx:, nx:] = y.ambient.op
    mod = FpModule(x.prime, op)
    rows = []
    for v in x.sub.basis:
        rows.append(np.concatenate([v, np.zeros(ny, dtype=np.int64)]))
    for v in y.sub.basis:
        rows.append(np.concatenate([np.zeros(nx, dtype=np.int64), v]))
    return Embedding(mod, Subspace(mod, rows))


def socle_tableau(x: Embedding) -> SkewTableau:
    """Tableau of the socle filtration: layer i is the type of ambient / soc^i(sub)."""
    s = x.alpha[0] if x.alpha else 0
    chain = [
        quotient_type(x.ambient, soc_layer(x.ambient, x.sub, i)) for i in range(s + 1)
    ]
    return from_chain(chain, "socle")


def lr_tableau(x: Embedding) -> SkewTableau:
    """Tableau of the radical filtration: layer i is the type of ambient / rad^i(sub)."""
    s = x.alpha[0] if x.alpha else 0
    chain = [
        quotient_type(x.ambient, rad_layer(x.ambient, x.sub, i)) for i in range(s + 1)
    ]
    return from_chain(chain, "lr")


def dual_embedding(x: Embedding) -> Embedding:
    """Annihilator of the subspace inside the dual module; swaps alpha and gamma."""
    return Embedding(dual_module(x.ambient), annihilator(x.ambient, x.sub))


def standardize(x: Embedding) -> Embedding:
    """Isomorphic embedding whose ambient is in standard block form."""
    from .modules import jordan_basis_matrix

    p = x.prime
    u = jordan_basis_matrix(x.ambient)
    std = standard_module(p, module_type(x.ambient))
    uinv = linalg.inverse(u, p) if x.ambient.dim else u
    basis = (x.sub.basis @ uinv.T) % p if x.sub.dim else x.sub.basis
    return Embedding(std, Subspace(std, basis))


def hom_dim(x: Embedding, y: Embedding) -> int:
    """Dimension of {f : ambient_x -> ambient_y, f T = T f, f(sub_x) <= sub_y}."""
    if x.prime != y.prime:
        raise PrimeMismatch(f"primes differ: {x.prime} vs {y.prime}")
    p = x.prime
    nx, ny = x.ambient.dim, y.ambient.dim
    if nx == 0 or ny == 0:
        return 0
    ix = np.eye(nx, dtype=np.int64)
    iy = np.eye(ny, dtype=np.int64)
    # vec is column-major: vec(F Tx) = (Tx^T kron I) vec F, vec(Ty F) = (I kron Ty) vec F
    blocks = [np.kron(x.ambient.op.T, iy) - np.kron(ix, y.ambient.op)]
    ann = linalg.left_annihilator(y.sub.basis, ny, p)
    if ann.shape[0] > 0:
        for a in x.sub.basis:
            blocks.append(np.kron(a.reshape(1, nx), ann))
    mat = np.vstack(blocks) % p
    return nx * ny - linalg.rank(mat, p)


class HomMatrix:
    """Triangular integer matrix h[ell][m], 0 <= ell <= L, ell <= m <= M."""

    __slots__ = ("L", "M", "rows")

    def __init__(self, L, M, rows):
        self.L = L
        self.M = M
        self.rows = [list(r) for r in rows]
        if len(self.rows) != L + 1:
            raise ValueError("expected L+1 rows")
        for ell, row in enumerate(self.rows):
            if len(row) != M + 1:
                raise ValueError("expected M+1 cells per row")
            for m, v in enumerate(row):
                if m < ell and v is not None:
                    raise ValueError(f"cell ({ell},{m}) must be absent")
                if m >= ell and (not isinstance(v, int) or v < 0):
                    raise ValueError(f"cell ({ell},{m}) must be a nonnegative integer")

    def value(self, ell, m):
        """Entry with the boundary conventions: 0 for any negative index."""
        if ell < 0 or m < 0:
            return 0
        if ell > self.L or m > self.M or m < ell:
            raise BadIndex(f"({ell},{m}) outside the stored triangle")
        return self.rows[ell][m]

    def __eq__(self, other):
        if not isinstance(other, HomMatrix):
            return NotImplemented
        return self.L == other.L and self.M == other.M and self.rows == other.rows

    def __repr__(self):
        return f"HomMatrix(L={self.L}, M={self.M})"

    def render(self) -> str:
        lines = []
        for ell, row in enumerate(self.rows):
            cells = [("." if v is None else str(v)).rjust(3) for v in row]
            lines.append(f"l={ell}:" + "".join(cells))
        return "\n".join(lines)

    def to_json_dict(self):
        return {"L": self.L, "M": self.M, "h": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["L"], data["M"], data["h"])


def _picket_hom_dim(x: Embedding, ell, m):
    """dim {b : T^m b = 0 and T^(m-ell) b in sub}; equals hom_dim(picket, x)."""
    p = x.prime
    n = x.ambient.dim
    if n == 0 or m == 0:
        return 0
    blocks = [x.ambient.power(m)]
    ann = linalg.left_annihilator(x.sub.basis, n, p)
    if ann.shape[0] > 0 and m > ell:
        blocks.append((ann @ x.ambient.power(m - ell)) % p)
    elif ann.shape[0] > 0 and m == ell:
        blocks.append(ann)
    return n - linalg.rank(np.vstack(blocks) % p, p)


def hom_matrix(x: Embedding) -> HomMatrix:
    """Hom dimensions from every picket into x, with one stabilized margin."""
    alpha, beta = x.alpha, x.beta
    L = (alpha[0] if alpha else 0) + 1
    M = (alpha[0] if alpha else 0) + (beta[0] if beta else 0) + 1
    rows = []
    for ell in range(L + 1):
        row = [None] * (M + 1)
        for m in range(ell, M + 1):
            row[m] = _picket_hom_dim(x, ell, m)
        rows.append(row)
    return HomMatrix(L, M, rows)


def entries_below(x: Embedding, ell, r) -> int:
    """dim of (soc^ell sub & rad^(r-1) ambient) over (soc^(ell-1) sub & rad^(r-1) ambient)."""
    if ell < 1 or r < 1:
        raise BadIndex("entries_below requires ell, r >= 1")
    p = x.prime
    radb = rad_layer(x.ambient, Subspace(x.ambient, np.eye(x.ambient.dim, dtype=np.int64)), r - 1)
    hi = linalg.intersection(soc_layer(x.ambient, x.sub, ell).basis, radb.basis, p)
    lo = linalg.intersection(soc_layer(x.ambient, x.sub, ell - 1).basis, radb.basis, p)
    return hi.shape[0] - lo.shape[0]


# ---------------------------------------------------------------------------
# serialization and fixtures

def embedding_spec(beta, generators) -> dict:
    """Prime-free description: ambient block sizes plus per-block generator coefficients."""
    beta = partition(beta)
    gens = []
    for gen in generators:
        if len(gen) != len(beta):
            raise ValueError("each generator needs one coefficient list per block")
        for coeffs, size in zip(gen, beta):
            if len(coeffs) != size:
                raise ValueError("coefficient list length must match the block size")
        gens.append([list(map(int, coeffs)) for coeffs in gen])
    return {"beta": list(beta), "generators": gens}


def embedding_from_spec(spec, prime) -> Embedding:
    beta = partition(spec["beta"])
    mod = standard_module(prime, beta)
    vecs = []
    for gen in spec["generators"]:
        vecs.append(np.concatenate([np.array(c, dtype=np.int64) for c in gen])
                    if beta else np.zeros(0, dtype=np.int64))
    sub = submodule_span(mod, vecs) if vecs else zero_subspace(mod)
    return Embedding(mod, sub)


def embedding_to_json(x: Embedding, blocks=None) -> dict:
    """JSON form; the ambient must be a standard module with the given block sizes."""
    beta = partition(blocks) if blocks is not None else module_type(x.ambient)
    if standard_module(x.prime, beta) != x.ambient:
        raise ValueError("only standard-form ambient modules can be serialized")
    offs = []
    off = 0
    for size in beta:
        offs.append((off, size))
        off += size
    gens = []
    for v in x.sub.basis:
        gens.append([[int(v[o + i]) for i in range(size)] for (o, size) in offs])
    d = embedding_spec(beta, gens)
    return {"prime": x.prime, **d}


def embedding_from_json(data, prime=None) -> Embedding:
    p = prime if prime is not None else data.get("prime", 2)
    return embedding_from_spec(data, p)


def load_fixture(name, prime=None) -> Embedding:
    """Bundled example embeddings: 'm1', 'm2', 'm3'."""
    text = resources.files("soctab").joinpath(f"fixtures/{name}.json").read_text()
    return embedding_from_json(json.loads(text), prime=prime)


# ---------------------------------------------------------------------------
# random corpus

def random_embedding_spec(rng: random.Random, max_weight: int) -> dict:
    """Random ambient type and generator coefficients; prime-independent (0/1 entries)."""
    w = rng.randint(1, max_weight)
    parts = _random_partition(rng, w)
    g = rng.randint(1, 3)
    gens = []
    for _ in range(g):
        gens.append([[rng.randint(0, 1) for _ in range(size)] for size in parts])
    return embedding_spec(parts, gens)


def _random_partition(rng: random.Random, n: int) -> tuple:
    parts = []
    remaining = n
    bound = n
    while remaining > 0:
        x = rng.randint(1, min(bound, remaining))
        parts.append(x)
        bound = x
        remaining -= x
    return partition(parts)


def random_corpus(seed: int, count: int, max_weight: int) -> list:
    """Deterministic list of embedding specs; duplicates are discarded."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        spec = random_embedding_spec(rng, max_weight)
        key = json.dumps(spec, sort_keys=True)
        if key in seen:
            continue
        seen.add(key)
        out.append(spec)
    return out
