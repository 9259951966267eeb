"""Skew tableaux with the LR axioms and their socle-tableau mirror.

A tableau of shape (alpha, beta, gamma) fills the skew diagram
beta \\ gamma with transpose(alpha)[l-1] copies of each entry l.  An LR
tableau has weakly increasing rows, strictly increasing columns and the
lattice permutation property counted from the right; a socle tableau has
weakly decreasing rows, strictly decreasing columns and the mirrored
lattice condition counted from the left.

Tableaux are equivalently partition chains: for the socle kind the chain
decreases from beta to gamma and entry l occupies chain[l-1] \\ chain[l];
for the LR kind the chain increases from gamma to beta and entry l
occupies chain[l] \\ chain[l-1].
"""

from typing import Iterator, NamedTuple

from .partitions import (
    Shape,
    contains,
    is_horizontal_strip,
    part,
    partition,
    skew_boxes,
    transpose,
    weight,
)


class InvalidTableau(ValueError):
    """Raised for fillings violating shape, content, or the requested axioms."""


class MatchingFailed(InvalidTableau):
    """Raised when no level matching exists; equivalent to a mirrored-lattice failure."""


class ChainNotNested(InvalidTableau):
    pass


class NotHorizontalStrip(InvalidTableau):
    pass


class SkewTableau:
    """Immutable filling of beta \\ gamma; entries is a dict (row, col) -> value."""

    __slots__ = ("alpha", "beta", "gamma", "entries", "_hash")

    def __init__(self, alpha, beta, gamma, entries):
        self.alpha = partition(alpha)
        self.beta = partition(beta)
        self.gamma = partition(gamma)
        self.entries = dict(entries)
        self._hash = None
        boxes = skew_boxes(self.beta, self.gamma)
        if set(self.entries) != set(boxes):
            raise InvalidTableau("entries must cover exactly the skew boxes")
        counts = {}
        for v in self.entries.values():
            if not isinstance(v, int) or v < 1:
                raise InvalidTableau(f"entries must be positive integers, got {v!r}")
            counts[v] = counts.get(v, 0) + 1
        cols = transpose(self.alpha)
        expected = {l + 1: cols[l] for l in range(len(cols))}
        if counts != expected:
            raise InvalidTableau(
                f"content {counts} does not match transpose(alpha) = {cols}"
            )

    @property
    def shape(self) -> Shape:
        return Shape(self.alpha, self.beta, self.gamma)

    def boxes(self) -> list:
        return skew_boxes(self.beta, self.gamma)

    def row_sequence(self) -> tuple:
        """Entries read box by box in row-major order; used as the sort key."""
        return tuple(self.entries[b] for b in self.boxes())

    def max_entry(self) -> int:
        return self.alpha[0] if self.alpha else 0

    def __eq__(self, other):
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and self.beta == other.beta
            and self.gamma == other.gamma
            and self.entries == other.entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.alpha, self.beta, self.gamma, tuple(sorted(self.entries.items())))
            )
        return self._hash

    def __repr__(self):
        return f"SkewTableau(alpha={self.alpha}, beta={self.beta}, gamma={self.gamma})"

    def render(self) -> str:
        """Rows top-down, one cell per box: '.' marks removed (gamma) boxes."""
        rows = transpose(self.beta)
        grows = transpose(self.gamma)
        lines = []
        for r in range(1, len(rows) + 1):
            cells = []
            for c in range(1, rows[r - 1] + 1):
                if c <= (grows[r - 1] if r <= len(grows) else 0):
                    cells.append(".")
                else:
                    v = self.entries[(r, c)]
                    cells.append(str(v) if v < 10 else f"[{v}]")
            lines.append("".join(cells))
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        rows = transpose(self.beta)
        grows = transpose(self.gamma)
        grid = []
        for r in range(1, len(rows) + 1):
            glen = grows[r - 1] if r <= len(grows) else 0
            row = [0] * glen
            row += [self.entries[(r, c)] for c in range(glen + 1, rows[r - 1] + 1)]
            grid.append(row)
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "grid": grid,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SkewTableau":
        beta = partition(data["beta"])
        gamma = partition(data["gamma"])
        rows = transpose(beta)
        grows = transpose(gamma)
        grid = data["grid"]
        if len(grid) != len(rows):
            raise InvalidTableau("grid has the wrong number of rows")
        entries = {}
        for r in range(1, len(rows) + 1):
            row = grid[r - 1]
            if len(row) != rows[r - 1]:
                raise InvalidTableau(f"row {r} has length {len(row)}, expected {rows[r-1]}")
            glen = grows[r - 1] if r <= len(grows) else 0
            for c in range(1, rows[r - 1] + 1):
                v = row[c - 1]
                if c <= glen:
                    if v != 0:
                        raise InvalidTableau(f"cell ({r},{c}) lies in gamma and must be 0")
                else:
                    entries[(r, c)] = v
        return cls(data["alpha"], beta, gamma, entries)


def _row_cols(t: SkewTableau):
    """Skew columns present in each row, as {row: [cols ascending]}."""
    rows = {}
    for (r, c) in t.entries:
        rows.setdefault(r, []).append(c)
    for cols in rows.values():
        cols.sort()
    return rows


def _col_rows(t: SkewTableau):
    cols = {}
    for (r, c) in t.entries:
        cols.setdefault(c, []).append(r)
    for rows in cols.values():
        rows.sort()
    return cols


def check_lr(t: SkewTableau) -> bool:
    """Weakly increasing rows, strictly increasing columns, lattice word from the right."""
    e = t.entries
    for r, cols in _row_cols(t).items():
        for a, b in zip(cols, cols[1:]):
            if e[(r, a)] > e[(r, b)]:
                return False
    col_rows = _col_rows(t)
    for c, rows in col_rows.items():
        for a, b in zip(rows, rows[1:]):
            if e[(a, c)] >= e[(b, c)]:
                return False
    s = t.max_entry()
    width = len(t.beta)
    for l in range(1, s):
        # count entries l and l+1 in columns > c, sweeping c from the right
        hi = lo = 0
        for c in range(width, 0, -1):
            for r in col_rows.get(c, []):
                v = e[(r, c)]
                if v == l:
                    lo += 1
                elif v == l + 1:
                    hi += 1
            if hi > lo:
                return False
    return True


def check_socle(t: SkewTableau) -> bool:
    """Weakly decreasing rows, strictly decreasing columns, mirrored lattice from the left."""
    e = t.entries
    for r, cols in _row_cols(t).items():
        for a, b in zip(cols, cols[1:]):
            if e[(r, a)] < e[(r, b)]:
                return False
    col_rows = _col_rows(t)
    for c, rows in col_rows.items():
        for a, b in zip(rows, rows[1:]):
            if e[(a, c)] <= e[(b, c)]:
                return False
    s = t.max_entry()
    width = len(t.beta)
    for l in range(1, s):
        hi = lo = 0
        for c in range(1, width + 1):
            for r in col_rows.get(c, []):
                v = e[(r, c)]
                if v == l:
                    lo += 1
                elif v == l + 1:
                    hi += 1
            if hi > lo:
                return False
    return True


def check_st3_prime(t: SkewTableau) -> bool:
    """Row form of the mirrored lattice condition.

    For every row r and level l, the entries l+1 in row r or below are at
    most the entries l strictly below row r.  Assumes weakly decreasing
    rows and strictly decreasing columns.
    """
    s = t.max_entry()
    nrows = len(transpose(t.beta))
    by_row = {}
    for (r, c), v in t.entries.items():
        by_row.setdefault(r, []).append(v)
    for l in range(1, s):
        below_lo = 0  # entries l strictly below the sweep row
        at_or_below_hi = 0  # entries l+1 in the sweep row or below
        for r in range(nrows, 0, -1):
            vals = by_row.get(r, [])
            at_or_below_hi += sum(1 for v in vals if v == l + 1)
            if at_or_below_hi > below_lo:
                return False
            below_lo += sum(1 for v in vals if v == l)
    return True


class EntryMatching(NamedTuple):
    """Injection from entry-(level+1) boxes to entry-level boxes.

    Each pair maps a box to one in the same column when that column holds
    an entry ``level``, and to a strictly smaller column otherwise.
    """

    level: int
    pairs: dict


def build_matching(t: SkewTableau, level: int) -> EntryMatching:
    """Greedy right-to-left matching; MatchingFailed signals a lattice violation."""
    lo_boxes = [b for b, v in t.entries.items() if v == level]
    hi_boxes = [b for b, v in t.entries.items() if v == level + 1]
    lo_by_col = {}
    for b in lo_boxes:
        # strictly decreasing columns leave at most one entry per value per column
        if b[1] in lo_by_col:
            raise InvalidTableau(f"two entries {level} in column {b[1]}")
        lo_by_col[b[1]] = b
    pairs = {}
    used = set()
    cross = []
    for b in sorted(hi_boxes, key=lambda b: -b[1]):
        same = lo_by_col.get(b[1])
        if same is not None:
            pairs[b] = same
            used.add(same)
        else:
            cross.append(b)
    for b in cross:
        # nearest unused entry `level` strictly to the left
        candidates = [
            lb
            for c, lb in lo_by_col.items()
            if c < b[1] and lb not in used
        ]
        if not candidates:
            raise MatchingFailed(
                f"no partner for entry {level + 1} at {b} (level {level})"
            )
        chosen = max(candidates, key=lambda lb: lb[1])
        pairs[b] = chosen
        used.add(chosen)
    return EntryMatching(level, pairs)


def to_chain(t: SkewTableau, view: str) -> tuple:
    """Partition chain of ``t``; view is 'socle' (decreasing) or 'lr' (increasing)."""
    s = t.max_entry()
    width = len(t.beta)
    col_entries = {c: [] for c in range(1, width + 1)}
    for (r, c), v in t.entries.items():
        col_entries[c].append(v)
    chain = []
    for i in range(s + 1):
        cols = []
        for c in range(1, width + 1):
            base = part(t.gamma, c)
            if view == "socle":
                extra = sum(1 for v in col_entries[c] if v > i)
            elif view == "lr":
                extra = sum(1 for v in col_entries[c] if v <= i)
            else:
                raise ValueError(f"view must be 'socle' or 'lr', got {view!r}")
            cols.append(base + extra)
        try:
            chain.append(partition(cols))
        except ValueError:
            raise InvalidTableau(
                f"level-{i} layer is not a partition; tableau violates the {view} axioms"
            )
    _validate_chain(chain, view)
    return tuple(chain)


def _validate_chain(chain, view):
    if view == "socle":
        steps = zip(chain[1:], chain[:-1])
    else:
        steps = zip(chain[:-1], chain[1:])
    sizes = []
    for small, big in steps:
        if not contains(big, small):
            raise ChainNotNested(f"{small} not contained in {big}")
        if not is_horizontal_strip(big, small):
            raise NotHorizontalStrip(f"{big} \\ {small} has a column with two boxes")
        sizes.append(weight(big) - weight(small))
    for a, b in zip(sizes, sizes[1:]):
        if b > a:
            raise InvalidTableau(f"strip sizes {sizes} are not weakly decreasing")
    return sizes


def from_chain(chain, view: str) -> SkewTableau:
    """Inverse of to_chain; accepts trailing constant repeats and canonicalizes."""
    chain = [partition(p) for p in chain]
    if not chain:
        raise InvalidTableau("chain must contain at least one partition")
    if view not in ("socle", "lr"):
        raise ValueError(f"view must be 'socle' or 'lr', got {view!r}")
    sizes = _validate_chain(chain, view)
    while len(chain) > 1 and chain[-1] == chain[-2]:
        chain.pop()
        sizes.pop()
    if any(x == 0 for x in sizes):
        raise InvalidTableau(f"interior strip of size 0 in chain sizes {sizes}")
    alpha = transpose(tuple(sizes))
    entries = {}
    for l in range(1, len(chain)):
        if view == "socle":
            big, small = chain[l - 1], chain[l]
        else:
            big, small = chain[l], chain[l - 1]
        for c in range(1, len(big) + 1):
            if big[c - 1] != part(small, c):
                entries[(big[c - 1], c)] = l
    beta = chain[0] if view == "socle" else chain[-1]
    gamma = chain[-1] if view == "socle" else chain[0]
    return SkewTableau(alpha, beta, gamma, entries)


# ---------------------------------------------------------------------------
# enumeration


def _remove_strip_columns(sigma, floor, k, cap):
    """Column index sets C (sorted) with sigma - 1_C a partition >= floor.

    Only columns with sigma[c] > floor[c] are eligible, the removed
    columns form a suffix of every block of equal parts, and afterwards
    every column must satisfy sigma[c] - floor[c] <= cap (so that the
    remaining strips can still reach the floor).
    """
    n = len(sigma)
    blocks = []
    i = 0
    while i < n:
        j = i
        while j < n and sigma[j] == sigma[i]:
            j += 1
        blocks.append((i, j))
        i = j
    # per block: how many trailing columns may be removed
    choices = []
    for (i, j) in blocks:
        free = 0
        c = j - 1
        while c >= i and sigma[c] > (floor[c] if c < len(floor) else 0):
            free += 1
            c -= 1
        choices.append((i, j, free))

    out = []

    def feasible(cols_removed):
        removed = set(cols_removed)
        for c in range(n):
            rest = sigma[c] - (1 if c in removed else 0) - (floor[c] if c < len(floor) else 0)
            if rest > cap:
                return False
        return True

    def rec(bi, remaining, acc):
        if remaining == 0:
            cols = [c for block in acc for c in block]
            if feasible(cols):
                out.append(sorted(cols))
            return
        if bi == len(blocks):
            return
        i, j, free = choices[bi]
        maxtake = min(free, remaining)
        for take in range(0, maxtake + 1):
            rec(bi + 1, remaining - take, acc + [list(range(j - take, j))])

    rec(0, k, [])
    return out


def _add_strip_columns(lam, ceil, k, cap):
    """Column index sets C with lam + 1_C a partition <= ceil.

    Added columns form a prefix of every block of equal parts; afterwards
    ceil[c] - lam[c] <= cap must hold everywhere.
    """
    n = len(ceil)
    lam = list(lam) + [0] * (n - len(lam))
    blocks = []
    i = 0
    while i < n:
        j = i
        while j < n and lam[j] == lam[i]:
            j += 1
        blocks.append((i, j))
        i = j
    choices = []
    for (i, j) in blocks:
        free = 0
        c = i
        while c < j and lam[c] < ceil[c]:
            free += 1
            c += 1
        choices.append((i, j, free))

    out = []

    def feasible(cols_added):
        added = set(cols_added)
        for c in range(n):
            rest = ceil[c] - lam[c] - (1 if c in added else 0)
            if rest > cap:
                return False
        return True

    def rec(bi, remaining, acc):
        if remaining == 0:
            cols = [c for block in acc for c in block]
            if feasible(cols):
                out.append(sorted(cols))
            return
        if bi == len(blocks):
            return
        i, j, free = choices[bi]
        maxtake = min(free, remaining)
        for take in range(0, maxtake + 1):
            rec(bi + 1, remaining - take, acc + [list(range(i, i + take))])

    rec(0, k, [])
    return out


def _prefix_dominates(prev_cols, next_cols):
    """Mirrored lattice step: i-th smallest next >= i-th smallest prev."""
    return all(b >= a for a, b in zip(prev_cols, next_cols))


def _suffix_dominated(prev_cols, next_cols):
    """Lattice step: i-th largest next <= i-th largest prev."""
    pa = prev_cols[::-1]
    nb = next_cols[::-1]
    return all(b <= a for a, b in zip(pa, nb))


def iter_socle_chains(alpha, beta, gamma) -> Iterator[tuple]:
    """All socle chains of shape (alpha, beta, gamma); no particular order."""
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    if weight(alpha) + weight(gamma) != weight(beta) or not contains(beta, gamma):
        return
    sizes = transpose(alpha)
    s = len(sizes)
    n = len(beta)
    floor = tuple(gamma) + (0,) * (n - len(gamma))
    if any(beta[c] - floor[c] > s for c in range(n)):
        return

    def rec(level, sigma, prev_cols, acc):
        if level > s:
            yield acc
            return
        remaining = s - level
        for cols in _remove_strip_columns(sigma, floor, sizes[level - 1], remaining):
            if prev_cols is not None and not _prefix_dominates(prev_cols, cols):
                continue
            nxt = list(sigma)
            for c in cols:
                nxt[c] -= 1
            nxt = tuple(nxt)
            yield from rec(level + 1, nxt, cols, acc + (nxt,))

    start = tuple(beta)
    yield from rec(1, start, None, (start,))


def iter_lr_chains(alpha, beta, gamma) -> Iterator[tuple]:
    """All LR chains of shape (alpha, beta, gamma); no particular order."""
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    if weight(alpha) + weight(gamma) != weight(beta) or not contains(beta, gamma):
        return
    sizes = transpose(alpha)
    s = len(sizes)
    n = len(beta)
    if any(beta[c] - part(gamma, c + 1) > s for c in range(n)):
        return

    def rec(level, lam, prev_cols, acc):
        if level > s:
            yield acc
            return
        remaining = s - level
        for cols in _add_strip_columns(lam, beta, sizes[level - 1], remaining):
            if prev_cols is not None and not _suffix_dominated(prev_cols, cols):
                continue
            nxt = list(lam) + [0] * (n - len(lam))
            for c in cols:
                nxt[c] += 1
            nxt = tuple(nxt)
            yield from rec(level + 1, nxt, cols, acc + (nxt,))

    start = tuple(gamma) + (0,) * (n - len(gamma))
    yield from rec(1, start, None, (start,))


def _chain_to_tableau(chain, view, alpha, beta, gamma):
    """Entries from a padded chain; faster than from_chain, no revalidation."""
    entries = {}
    for l in range(1, len(chain)):
        if view == "socle":
            big, small = chain[l - 1], chain[l]
        else:
            big, small = chain[l], chain[l - 1]
        for c in range(len(big)):
            if big[c] != small[c]:
                entries[(big[c], c + 1)] = l
    return SkewTableau(alpha, beta, gamma, entries)


def iter_st12_fillings(alpha, beta, gamma) -> Iterator[SkewTableau]:
    """All fillings with weakly decreasing rows and strictly decreasing columns.

    Same chain enumeration as the socle kind but without the mirrored
    lattice pruning; used to compare the three lattice validators.
    """
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    if weight(alpha) + weight(gamma) != weight(beta) or not contains(beta, gamma):
        return
    sizes = transpose(alpha)
    s = len(sizes)
    n = len(beta)
    floor = tuple(gamma) + (0,) * (n - len(gamma))
    if any(beta[c] - floor[c] > s for c in range(n)):
        return

    def rec(level, sigma, acc):
        if level > s:
            yield acc
            return
        remaining = s - level
        for cols in _remove_strip_columns(sigma, floor, sizes[level - 1], remaining):
            nxt = list(sigma)
            for c in cols:
                nxt[c] -= 1
            nxt = tuple(nxt)
            yield from rec(level + 1, nxt, acc + (nxt,))

    start = tuple(beta)
    for chain in rec(1, start, (start,)):
        yield _chain_to_tableau(chain, "socle", alpha, beta, gamma)


def iter_tableaux(shape_or_alpha, beta=None, gamma=None, kind="socle") -> Iterator[SkewTableau]:
    """Generate all tableaux of the given kind, in no particular order."""
    if beta is None:
        alpha, beta, gamma = shape_or_alpha
    else:
        alpha = shape_or_alpha
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    if kind == "socle":
        for chain in iter_socle_chains(alpha, beta, gamma):
            yield _chain_to_tableau(chain, "socle", alpha, beta, gamma)
    elif kind == "lr":
        for chain in iter_lr_chains(alpha, beta, gamma):
            yield _chain_to_tableau(chain, "lr", alpha, beta, gamma)
    else:
        raise ValueError(f"kind must be 'socle' or 'lr', got {kind!r}")


def enumerate_tableaux(shape_or_alpha, beta=None, gamma=None, kind="socle") -> list:
    """All tableaux of the kind, sorted lexicographically by row-major entries."""
    ts = list(iter_tableaux(shape_or_alpha, beta, gamma, kind=kind))
    ts.sort(key=SkewTableau.row_sequence)
    return ts


def count_tableaux(shape_or_alpha, beta=None, gamma=None, kind="socle") -> int:
    return sum(1 for _ in iter_tableaux(shape_or_alpha, beta, gamma, kind=kind))


def lr_coefficient(alpha, beta, gamma) -> int:
    """Number of LR tableaux of shape (alpha, beta, gamma); 0 when none fit."""
    return count_tableaux(alpha, beta, gamma, kind="lr")
