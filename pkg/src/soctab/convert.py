"""Closed-form conversions between the socle tableau, the dual LR tableau,
and the Hom-matrix, plus the cokernel defect of a fixed picket map.

Entry multiplicities are plain dicts mu[(entry, row)] -> count; a tableau
of known kind and ambient is reconstructible from its multiplicity map by
placing the entries of each row in the unique admissible order.
"""

from functools import lru_cache

import numpy as np

from . import linalg
from .embeddings import BadIndex, Embedding, HomMatrix, picket, direct_sum
from .modules import Subspace, quotient_type
from .partitions import partition, transpose
from .tableaux import InvalidTableau, SkewTableau, check_lr, check_socle, from_chain, to_chain


class InconsistentMatrix(ValueError):
    """Raised when a Hom-matrix does not come from any tableau."""


def entry_multiplicities(t: SkewTableau) -> dict:
    """mu[(entry, row)] -> count for all present entries."""
    mu = {}
    for (r, _c), v in t.entries.items():
        mu[(v, r)] = mu.get((v, r), 0) + 1
    return mu


def _mu(mu, entry, row):
    return mu.get((entry, row), 0)


def tableau_from_mu(kind: str, beta: tuple, mu: dict) -> SkewTableau:
    """Rebuild a tableau of the given kind on ambient beta from its multiplicities."""
    beta = partition(beta)
    rows = transpose(beta)
    nrows = len(rows)
    for (entry, row), cnt in mu.items():
        if cnt < 0:
            raise InconsistentMatrix(f"negative multiplicity at {(entry, row)}")
        if cnt > 0 and not (1 <= row <= nrows and entry >= 1):
            raise InconsistentMatrix(f"multiplicity outside the diagram at {(entry, row)}")
    inner_rows = []
    for r in range(1, nrows + 1):
        filled = sum(cnt for (e, row), cnt in mu.items() if row == r)
        if filled > rows[r - 1]:
            raise InconsistentMatrix(f"row {r} overfilled")
        inner_rows.append(rows[r - 1] - filled)
    for a, b in zip(inner_rows, inner_rows[1:]):
        if b > a:
            raise InconsistentMatrix("leftover boxes do not form a partition")
    inner = transpose(tuple(inner_rows))
    counts = {}
    for (e, _r), cnt in mu.items():
        if cnt:
            counts[e] = counts.get(e, 0) + cnt
    alpha_rows = [counts.get(e, 0) for e in range(1, max(counts, default=0) + 1)]
    for a, b in zip(alpha_rows, alpha_rows[1:]):
        if b > a:
            raise InconsistentMatrix("entry content is not the transpose of a partition")
    if any(x == 0 for x in alpha_rows):
        raise InconsistentMatrix("entry content has gaps")
    alpha = transpose(tuple(alpha_rows))
    entries = {}
    reverse = kind == "socle"
    for r in range(1, nrows + 1):
        vals = []
        for (e, row), cnt in mu.items():
            if row == r:
                vals.extend([e] * cnt)
        vals.sort(reverse=reverse)
        for i, v in enumerate(vals):
            entries[(r, inner_rows[r - 1] + 1 + i)] = v
    try:
        t = SkewTableau(alpha, beta, inner, entries)
    except InvalidTableau as exc:
        raise InconsistentMatrix(str(exc)) from exc
    ok = check_socle(t) if kind == "socle" else check_lr(t)
    if not ok:
        raise InconsistentMatrix(f"reconstructed filling violates the {kind} axioms")
    return t


# ---------------------------------------------------------------------------
# socle tableau <-> Hom-matrix


def socle_to_hom(t: SkewTableau) -> HomMatrix:
    """h[l][m] = |soc^l(sub)| + first (m - l) row lengths of the level-l layer."""
    if not check_socle(t):
        raise InvalidTableau("socle tableau expected")
    chain = to_chain(t, "socle")
    s = len(chain) - 1
    acols = transpose(t.alpha)
    a1 = t.alpha[0] if t.alpha else 0
    b1 = t.beta[0] if t.beta else 0
    L, M = a1 + 1, a1 + b1 + 1
    rows = []
    for ell in range(L + 1):
        soc = sum(acols[:min(ell, len(acols))])
        layer = transpose(chain[min(ell, s)])
        row = [None] * (M + 1)
        for m in range(ell, M + 1):
            row[m] = soc + sum(layer[: m - ell])
        rows.append(row)
    return HomMatrix(L, M, rows)


def _socle_params_from_hom(h: HomMatrix):
    """Derive (beta, alpha_rows) from a Hom-matrix; raise when malformed."""
    if h.value(0, 0) != 0:
        raise InconsistentMatrix("h[0][0] must be 0")
    beta_rows = [h.value(0, m) - h.value(0, m - 1) for m in range(1, h.M + 1)]
    if any(x < 0 for x in beta_rows) or any(
        b > a for a, b in zip(beta_rows, beta_rows[1:])
    ):
        raise InconsistentMatrix("row 0 differences are not a transposed partition")
    if beta_rows and beta_rows[-1] != 0:
        raise InconsistentMatrix("row 0 did not stabilize inside the matrix")
    alpha_rows = [h.value(ell, ell) - h.value(ell - 1, ell - 1) for ell in range(1, h.L + 1)]
    if any(x < 0 for x in alpha_rows) or any(
        b > a for a, b in zip(alpha_rows, alpha_rows[1:])
    ):
        raise InconsistentMatrix("diagonal differences are not a transposed partition")
    if alpha_rows and alpha_rows[-1] != 0:
        raise InconsistentMatrix("diagonal did not stabilize inside the matrix")
    while beta_rows and beta_rows[-1] == 0:
        beta_rows.pop()
    while alpha_rows and alpha_rows[-1] == 0:
        alpha_rows.pop()
    return transpose(tuple(beta_rows)), alpha_rows


def hom_to_socle(h: HomMatrix) -> SkewTableau:
    """Inverse of socle_to_hom via the four-term multiplicity formula."""
    beta, alpha_rows = _socle_params_from_hom(h)
    s = len(alpha_rows)
    b1 = beta[0] if beta else 0
    if s + b1 > h.M:
        raise InconsistentMatrix("matrix too small for the derived shape")
    mu = {}
    for ell in range(1, s + 1):
        for r in range(1, b1 + 1):
            m = r + ell
            v = (
                h.value(ell, m - 1)
                - h.value(ell, m)
                - h.value(ell - 1, m - 2)
                + h.value(ell - 1, m - 1)
            )
            if v < 0:
                raise InconsistentMatrix(f"negative multiplicity for entry {ell} row {r}")
            if v:
                mu[(ell, r)] = v
    for ell in range(1, s + 1):
        if sum(_mu(mu, ell, r) for r in range(1, b1 + 1)) != alpha_rows[ell - 1]:
            raise InconsistentMatrix(f"entry {ell} count disagrees with the diagonal")
    t = tableau_from_mu("socle", beta, mu)
    if socle_to_hom(t) != h:
        raise InconsistentMatrix("matrix is not realized by any socle tableau")
    return t


# ---------------------------------------------------------------------------
# dual LR tableau <-> Hom-matrix


def duallr_to_hom(t: SkewTableau) -> HomMatrix:
    """h[r][m] = first m row lengths of the layer m - r of the dual LR chain."""
    if not check_lr(t):
        raise InvalidTableau("LR tableau expected")
    chain = to_chain(t, "lr")
    tmax = len(chain) - 1
    layers = [transpose(lam) for lam in chain]
    a1 = t.gamma[0] if t.gamma else 0  # inner shape of the dual LR tableau
    b1 = t.beta[0] if t.beta else 0
    L, M = a1 + 1, a1 + b1 + 1
    rows = []
    for r in range(L + 1):
        row = [None] * (M + 1)
        for m in range(r, M + 1):
            lam = layers[min(m - r, tmax)]
            row[m] = sum(lam[:m])
        rows.append(row)
    return HomMatrix(L, M, rows)


def _hom_value_saturated(h: HomMatrix, s: int, ell: int, m: int) -> int:
    """Stored value extended by the shift rule h[l][m] = h[s][m-l+s] for l > s."""
    if ell < 0 or m < 0:
        return 0
    if m < ell:
        raise BadIndex(f"no picket with ({ell},{m})")
    if ell <= h.L and m <= h.M:
        return h.value(ell, m)
    if ell > s:
        return _hom_value_saturated(h, s, s, m - (ell - s))
    # column saturation: values are constant once m reaches beta_1 + ell
    return h.value(ell, h.M)


def hom_to_duallr(h: HomMatrix) -> SkewTableau:
    """Inverse of duallr_to_hom via the two-case multiplicity formula."""
    beta, alpha_rows = _socle_params_from_hom(h)
    s = len(alpha_rows)
    b1 = beta[0] if beta else 0
    mu = {}
    for m in range(1, b1 + 1):
        for ell in range(1, m + 1):
            if ell == m:
                v = h.value(0, m) - _hom_value_saturated(h, s, 1, m)
            else:
                r = m - ell
                v = (
                    _hom_value_saturated(h, s, r, m)
                    - _hom_value_saturated(h, s, r + 1, m)
                    - _hom_value_saturated(h, s, r - 1, m - 1)
                    + _hom_value_saturated(h, s, r, m - 1)
                )
            if v < 0:
                raise InconsistentMatrix(f"negative multiplicity for entry {ell} row {m}")
            if v:
                mu[(ell, m)] = v
    t = tableau_from_mu("lr", beta, mu)
    if duallr_to_hom(t) != h:
        raise InconsistentMatrix("matrix is not realized by any dual LR tableau")
    return t


# ---------------------------------------------------------------------------
# socle tableau <-> dual LR tableau, directly


def socle_to_duallr(t: SkewTableau) -> SkewTableau:
    """Dual LR tableau with the same Hom-matrix, built without the matrix."""
    if not check_socle(t):
        raise InvalidTableau("socle tableau expected")
    mu = entry_multiplicities(t)
    beta_rows = transpose(t.beta)
    b1 = t.beta[0] if t.beta else 0
    nrows = len(beta_rows)
    tmax = t.gamma[0] if t.gamma else 0
    chain = []
    for ell in range(tmax + 1):
        lam_rows = []
        for m in range(1, b1 + 1):
            if m <= ell:
                v = beta_rows[m - 1]
            else:
                v = sum(_mu(mu, m - ell, j) for j in range(ell + 1, nrows + 1))
            lam_rows.append(v)
        while lam_rows and lam_rows[-1] == 0:
            lam_rows.pop()
        for a, b in zip(lam_rows, lam_rows[1:]):
            if b > a:
                raise InvalidTableau("derived layer is not a partition")
        chain.append(transpose(tuple(lam_rows)))
    if chain[-1] != t.beta:
        raise InvalidTableau("derived chain does not reach the ambient shape")
    out = from_chain(chain, "lr")
    assert out.shape == (t.gamma, t.beta, t.alpha)
    return out


def duallr_to_socle(t: SkewTableau) -> SkewTableau:
    """Socle tableau with the same Hom-matrix, built without the matrix."""
    if not check_lr(t):
        raise InvalidTableau("LR tableau expected")
    chain = to_chain(t, "lr")
    tmax = len(chain) - 1
    layers = [transpose(lam) for lam in chain]

    def lam_row(j, m):
        if m < 1:
            return 0
        lam = layers[min(j, tmax)]
        return lam[m - 1] if m <= len(lam) else 0

    alpha = t.gamma  # inner shape of the dual LR tableau is the subspace type
    s = alpha[0] if alpha else 0
    b1 = t.beta[0] if t.beta else 0
    mu = {}
    for ell in range(1, s + 1):
        for r in range(1, b1 + 1):
            m = ell + r
            v = lam_row(r - 1, m - 1) - lam_row(r, m)
            if v < 0:
                raise InvalidTableau(f"negative multiplicity for entry {ell} row {r}")
            if v:
                mu[(ell, r)] = v
    out = tableau_from_mu("socle", t.beta, mu)
    assert out.shape == (t.gamma, t.beta, t.alpha)
    return out


# ---------------------------------------------------------------------------
# the defect of the canonical picket map


def _picket_solutions(x: Embedding, a: int, b: int):
    """Basis of {v : T^b v = 0 and T^(b-a) v in sub}; coordinates of picket maps."""
    p = x.prime
    n = x.ambient.dim
    if n == 0 or b == 0:
        return np.zeros((0, n), dtype=np.int64)
    blocks = [x.ambient.power(b)]
    ann = linalg.left_annihilator(x.sub.basis, n, p)
    if ann.shape[0] > 0:
        blocks.append((ann @ x.ambient.power(b - a)) % p)
    return linalg.nullspace(np.vstack(blocks) % p, p)


@lru_cache(maxsize=None)
def _verify_defect_sequence(prime: int, ell: int, m: int) -> bool:
    """Structural check of the short exact sequence behind the defect.

    The map from the length-(m-1) picket into the direct sum of the
    length-m and length-(m-2) pickets is injective, compatible with the
    subspaces, and has cokernel of type (m-1).
    """
    top = picket(prime, ell, m - 1)
    mid = direct_sum(picket(prime, ell, m), picket(prime, ell - 1, m - 2))
    f = np.zeros((mid.ambient.dim, m - 1), dtype=np.int64)
    for i in range(m - 1):
        f[i + 1, i] = 1  # multiplication by the uniformizer into the first block
    for i in range(m - 2):
        f[m + i, i] = (-1) % prime  # negated canonical surjection into the second
    if linalg.rank(f, prime) != m - 1:
        raise AssertionError("picket map is not injective")
    img_sub = linalg.row_space((top.sub.basis @ f.T) % prime, prime)
    if not linalg.is_subspace(img_sub, mid.sub.basis, prime):
        raise AssertionError("picket map does not respect the subspaces")
    img = Subspace(mid.ambient, (np.eye(m - 1, dtype=np.int64) @ f.T) % prime)
    if quotient_type(mid.ambient, img) != (m - 1,):
        raise AssertionError("cokernel of the picket map has the wrong type")
    # sub-level exactness: the middle subspace meets the image exactly in the
    # image of the top subspace, so the quotient carries a length-(ell-1) sub
    met = linalg.intersection(mid.sub.basis, img.basis, prime)
    if met.shape[0] != ell:
        raise AssertionError("picket map subs are not exact in the middle")
    return True


def defect(x: Embedding, ell: int, m: int) -> int:
    """Cokernel length of precomposition with the canonical picket map.

    Equals the multiplicity of entry ell in row m - ell of the socle
    tableau of x.
    """
    if ell < 1 or m <= ell:
        raise BadIndex(f"defect requires 1 <= ell < m, got ({ell},{m})")
    _verify_defect_sequence(x.prime, ell, m)
    p = x.prime
    top = _picket_solutions(x, ell, m - 1)
    v1 = _picket_solutions(x, ell, m)
    v2 = _picket_solutions(x, ell - 1, m - 2)
    tv1 = linalg.image(x.ambient.op, v1, p)
    img = linalg.subspace_sum(tv1, v2, p)
    return top.shape[0] - img.shape[0]
