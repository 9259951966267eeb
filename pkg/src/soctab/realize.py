"""Construct an embedding realizing a prescribed socle tableau.

The construction builds a chain of surjections with semisimple kernels
between the standard modules of the chain layers.  Column pairs found by
the level matching receive a unipotent correction so that the kernel of
each two-step composite has socle equal to the kernel of the first step;
the kernel of the full composite is then the subspace sought.  LR
tableaux are realized through the dual correspondence.
"""

import numpy as np

from . import linalg
from .convert import duallr_to_socle
from .embeddings import Embedding, dual_embedding
from .modules import (
    Subspace,
    module_type,
    quotient_type,
    soc_layer,
    standard_module,
    zero_subspace,
)
from .partitions import part, partition, transpose
from .tableaux import (
    InvalidTableau,
    SkewTableau,
    build_matching,
    check_lr,
    check_socle,
    to_chain,
)


class ConditionStarViolated(RuntimeError):
    """Internal construction invariant failed; indicates a bug, never expected."""


class EpiChain:
    """Stage modules C0..Cs and matrices of the surjections between them."""

    __slots__ = ("prime", "stages", "maps")

    def __init__(self, prime, stages, maps):
        self.prime = prime
        self.stages = list(stages)
        self.maps = list(maps)
        if len(self.maps) != len(self.stages) - 1:
            raise ValueError("need exactly one map per consecutive stage pair")

    def composite(self):
        """Matrix of the full composition C0 -> Cs."""
        p = self.prime
        out = np.eye(self.stages[0].dim, dtype=np.int64)
        for f in self.maps:
            out = (f @ out) % p
        return out

    def __repr__(self):
        dims = [c.dim for c in self.stages]
        return f"EpiChain(p={self.prime}, dims={dims})"


def _can_block(u, v):
    """Canonical surjection between blocks of lengths u >= v: p^i -> p^i, i < v."""
    m = np.zeros((v, u), dtype=np.int64)
    for i in range(v):
        m[i, i] = 1
    return m


def _incl_block(v, u):
    """Inclusion of the length-v block into the length-u one: p^i -> p^(u-v+i)."""
    m = np.zeros((u, v), dtype=np.int64)
    for i in range(v):
        m[u - v + i, i] = 1
    return m


def _offsets(cols):
    offs = []
    off = 0
    for c in cols:
        offs.append(off)
        off += c
    return offs


def build_chain(t: SkewTableau, prime: int, with_corrections: bool = True) -> EpiChain:
    """Epimorphism chain realizing the socle tableau ``t``.

    ``with_corrections=False`` drops the unipotent column corrections and
    generally breaks the kernel condition; it exists for diagnostics.
    """
    if not check_socle(t):
        raise InvalidTableau("socle tableau expected")
    chain = to_chain(t, "socle")
    s = len(chain) - 1
    width = len(t.beta)
    # pad every layer to the full column count of the ambient shape
    layers = [tuple(part(c, j + 1) for j in range(width)) for c in chain]
    acols = transpose(t.alpha)
    stages = [standard_module(prime, chain[i]) for i in range(s + 1)]
    maps = []
    for ell in range(1, s + 1):
        src, dst = layers[ell - 1], layers[ell]
        soffs, doffs = _offsets(src), _offsets(dst)
        g = np.zeros((sum(dst), sum(src)), dtype=np.int64)
        for j in range(width):
            blk = _can_block(src[j], dst[j])
            g[doffs[j] : doffs[j] + dst[j], soffs[j] : soffs[j] + src[j]] = blk
        if with_corrections and ell < s:
            h = _correction(t, layers[ell], doffs, ell, prime)
            g = (h @ g) % prime
        maps.append(g)
        if linalg.rank(maps[-1], prime) != sum(dst):
            raise ConditionStarViolated(f"stage {ell} map is not surjective")
        kdim = sum(src) - sum(dst)
        if kdim != acols[ell - 1]:
            raise ConditionStarViolated(f"stage {ell} kernel has the wrong length")
    epi = EpiChain(prime, stages, maps)
    if with_corrections:
        _assert_condition_star(epi)
    return epi


def _correction(t, layer, offs, ell, prime):
    """Unipotent automorphism pairing columns along the cross matches at level ell."""
    n = sum(layer)
    h = np.eye(n, dtype=np.int64)
    matching = build_matching(t, ell)
    used = set()
    for hi_box, lo_box in matching.pairs.items():
        j, i = hi_box[1] - 1, lo_box[1] - 1
        if i == j:
            continue  # same-column match needs no correction
        if i in used or j in used:
            raise ConditionStarViolated("column pairing is not disjoint")
        used.update((i, j))
        u, v = layer[i], layer[j]
        # u == v is possible and harmless: the inclusion degenerates to the identity
        if not (i < j and u >= v >= 1):
            raise ConditionStarViolated(f"bad column pair ({i+1},{j+1}) at level {ell}")
        blk = _incl_block(v, u)
        h[offs[i] : offs[i] + u, offs[j] : offs[j] + v] = blk
    return h


def _assert_condition_star(epi: EpiChain):
    """soc(Ker f_(l+1) f_l) must equal Ker f_l for every interior l."""
    p = epi.prime
    for idx in range(len(epi.maps) - 1):
        f1, f2 = epi.maps[idx], epi.maps[idx + 1]
        src = epi.stages[idx]
        ker1 = linalg.nullspace(f1, p)
        ker12 = linalg.nullspace((f2 @ f1) % p, p)
        soc = Subspace(src, ker12)
        soc = soc_layer(src, soc, 1).basis
        if not np.array_equal(soc, ker1):
            raise ConditionStarViolated(f"socle condition fails between stages {idx+1},{idx+2}")


def verify_epi_chain(epi: EpiChain, expected_alpha=None) -> list:
    """Diagnostic report: list of violation descriptions, empty when clean."""
    p = epi.prime
    problems = []
    for i, f in enumerate(epi.maps, 1):
        src, dst = epi.stages[i - 1], epi.stages[i]
        if f.shape != (dst.dim, src.dim):
            problems.append(f"map {i} has shape {f.shape}, expected {(dst.dim, src.dim)}")
            continue
        if linalg.rank(f, p) != dst.dim:
            problems.append(f"map {i} is not surjective")
        ker = linalg.nullspace(f, p)
        if ker.shape[0] and ((ker @ src.op.T) % p).any():
            problems.append(f"kernel of map {i} is not semisimple")
    for idx in range(len(epi.maps) - 1):
        f1, f2 = epi.maps[idx], epi.maps[idx + 1]
        src = epi.stages[idx]
        ker1 = linalg.nullspace(f1, p)
        ker12 = linalg.nullspace((f2 @ f1) % p, p)
        soc = soc_layer(src, Subspace(src, ker12), 1).basis
        if not np.array_equal(soc, ker1):
            problems.append(f"socle condition fails between maps {idx+1} and {idx+2}")
    if expected_alpha is not None:
        acols = transpose(partition(expected_alpha))
        for i, f in enumerate(epi.maps, 1):
            kdim = epi.stages[i - 1].dim - linalg.rank(f, p)
            want = acols[i - 1] if i <= len(acols) else 0
            if kdim != want:
                problems.append(f"kernel of map {i} has length {kdim}, expected {want}")
    # quotients along the socle filtration of the composite kernel
    if not problems and epi.maps:
        amb = epi.stages[0]
        sub = Subspace(amb, linalg.nullspace(epi.composite(), p))
        for ell in range(len(epi.stages)):
            got = quotient_type(amb, soc_layer(amb, sub, ell))
            want = module_type(epi.stages[ell])
            if got != want:
                problems.append(
                    f"quotient by socle layer {ell} has type {got}, expected {want}"
                )
    return problems


def realize_socle(t: SkewTableau, prime: int = 2) -> Embedding:
    """Embedding whose socle tableau is exactly ``t``."""
    epi = build_chain(t, prime)
    amb = epi.stages[0]
    if not epi.maps:
        return Embedding(amb, zero_subspace(amb))
    sub = Subspace(amb, linalg.nullspace(epi.composite(), prime))
    return Embedding(amb, sub)


def realize_lr(t: SkewTableau, prime: int = 2) -> Embedding:
    """Embedding whose LR tableau is exactly ``t``, via the dual correspondence."""
    if not check_lr(t):
        raise InvalidTableau("LR tableau expected")
    mirror = duallr_to_socle(t)
    return dual_embedding(realize_socle(mirror, prime))
