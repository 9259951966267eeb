"""Exhaustive and randomized verification sweeps.

Each sweep returns a small report with counters and a list of failure
descriptions; an empty list means the property held everywhere.  The
switching sweep lives in the switching module because a mismatch there
is a reportable result rather than a bug.
"""

from .convert import (
    defect,
    duallr_to_hom,
    entry_multiplicities,
    hom_to_duallr,
    hom_to_socle,
    socle_to_duallr,
    socle_to_hom,
)
from .embeddings import (
    dual_embedding,
    embedding_from_spec,
    hom_matrix,
    load_fixture,
    lr_tableau,
    random_corpus,
    socle_tableau,
)
from .partitions import partitions_of, subdiagrams, weight
from .realize import realize_lr, realize_socle
from .tableaux import check_lr, count_tableaux, iter_tableaux


class SweepReport:
    def __init__(self, name, **params):
        self.name = name
        self.params = params
        self.cases = 0
        self.failures = []

    @property
    def ok(self):
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)

    def to_json_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
        }

    def render(self):
        status = "ok" if self.ok else f"{len(self.failures)} failures"
        head = f"{self.name} ({', '.join(f'{k}={v}' for k, v in self.params.items())}): {self.cases} cases, {status}"
        return "\n".join([head] + [f"  {f}" for f in self.failures[:20]])


def _shapes(max_beta_weight):
    for wgt in range(0, max_beta_weight + 1):
        for beta in sorted(partitions_of(wgt)):
            for gamma in sorted(subdiagrams(beta)):
                rem = weight(beta) - weight(gamma)
                for alpha in sorted(partitions_of(rem)):
                    yield alpha, beta, gamma


def count_symmetry_sweep(max_beta_weight: int) -> SweepReport:
    """Socle and LR counts agree, swapping the end shapes preserves the LR
    count, and the direct conversion maps the socle set bijectively onto the
    swapped LR set."""
    rep = SweepReport("count-symmetry", max_beta=max_beta_weight)
    for alpha, beta, gamma in _shapes(max_beta_weight):
        rep.cases += 1
        socle = list(iter_tableaux(alpha, beta, gamma, kind="socle"))
        n_lr = count_tableaux(alpha, beta, gamma, kind="lr")
        n_lr_swapped = count_tableaux(gamma, beta, alpha, kind="lr")
        if not (len(socle) == n_lr == n_lr_swapped):
            rep.fail(
                f"{(alpha, beta, gamma)}: socle={len(socle)} lr={n_lr} swapped={n_lr_swapped}"
            )
            continue
        images = set()
        for t in socle:
            img = socle_to_duallr(t)
            if img.shape != (gamma, beta, alpha) or not check_lr(img):
                rep.fail(f"{(alpha, beta, gamma)}: conversion left the target set")
                break
            images.add(img)
        if len(images) != len(socle):
            rep.fail(f"{(alpha, beta, gamma)}: conversion is not injective")
    return rep


def realize_sweep(max_beta_weight: int, primes=(2, 3)) -> SweepReport:
    """Every socle tableau is realized exactly by its constructed embedding."""
    rep = SweepReport("realize-roundtrip", max_beta=max_beta_weight, primes=list(primes))
    for alpha, beta, gamma in _shapes(max_beta_weight):
        for t in iter_tableaux(alpha, beta, gamma, kind="socle"):
            rep.cases += 1
            for p in primes:
                x = realize_socle(t, p)
                if x.shape != (alpha, beta, gamma):
                    rep.fail(f"{(alpha, beta, gamma)} p={p}: wrong shape {tuple(x.shape)}")
                    continue
                got = socle_tableau(x)
                if got != t:
                    rep.fail(f"{(alpha, beta, gamma)} p={p}: socle tableau differs")
    return rep


def realize_lr_sweep(max_beta_weight: int, primes=(2, 3)) -> SweepReport:
    """Dual counterpart of realize_sweep for LR tableaux."""
    rep = SweepReport("realize-lr-roundtrip", max_beta=max_beta_weight, primes=list(primes))
    for alpha, beta, gamma in _shapes(max_beta_weight):
        for t in iter_tableaux(alpha, beta, gamma, kind="lr"):
            rep.cases += 1
            for p in primes:
                x = realize_lr(t, p)
                if lr_tableau(x) != t:
                    rep.fail(f"{(alpha, beta, gamma)} p={p}: lr tableau differs")
    return rep


def _corpus_embeddings(corpus_seed, corpus_count, max_beta_weight, primes):
    specs = [fx for fx in ("m1", "m2", "m3")]
    out = []
    for name in specs:
        per_prime = {p: load_fixture(name, prime=p) for p in primes}
        out.append((name, per_prime))
    for i, spec in enumerate(random_corpus(corpus_seed, corpus_count, max_beta_weight)):
        out.append((f"corpus[{i}]", {p: embedding_from_spec(spec, p) for p in primes}))
    return out


def hom_triple_sweep(
    corpus_seed=20260810, corpus_count=200, max_beta_weight=10, primes=(2, 3)
) -> SweepReport:
    """Engine Hom-matrix equals both closed forms; inverses reconstruct; all
    integer outputs are independent of the prime."""
    rep = SweepReport(
        "hom-triple",
        seed=corpus_seed,
        count=corpus_count,
        max_beta=max_beta_weight,
        primes=list(primes),
    )
    from .tableaux import check_socle

    for name, per_prime in _corpus_embeddings(corpus_seed, corpus_count, max_beta_weight, primes):
        rep.cases += 1
        results = {}
        for p, x in per_prime.items():
            sigma = socle_tableau(x)
            dlr = lr_tableau(dual_embedding(x))
            if not check_socle(sigma):
                rep.fail(f"{name} p={p}: socle tableau fails its axioms")
            if not check_lr(dlr):
                rep.fail(f"{name} p={p}: dual LR tableau fails its axioms")
            h = hom_matrix(x)
            if socle_to_hom(sigma) != h:
                rep.fail(f"{name} p={p}: socle closed form differs from engine")
            if duallr_to_hom(dlr) != h:
                rep.fail(f"{name} p={p}: dual LR closed form differs from engine")
            if hom_to_socle(h) != sigma:
                rep.fail(f"{name} p={p}: socle reconstruction differs")
            if hom_to_duallr(h) != dlr:
                rep.fail(f"{name} p={p}: dual LR reconstruction differs")
            results[p] = (sigma, dlr, h)
        first = results[primes[0]]
        for p in primes[1:]:
            if results[p] != first:
                rep.fail(f"{name}: outputs differ between primes {primes[0]} and {p}")
    return rep


def defect_sweep(
    corpus_seed=20260810, corpus_count=200, max_beta_weight=10, primes=(2, 3)
) -> SweepReport:
    """Defect equals the tableau multiplicity and the four-term Hom expression."""
    rep = SweepReport(
        "defect",
        seed=corpus_seed,
        count=corpus_count,
        max_beta=max_beta_weight,
        primes=list(primes),
    )
    for name, per_prime in _corpus_embeddings(corpus_seed, corpus_count, max_beta_weight, primes):
        rep.cases += 1
        tables = {}
        for p, x in per_prime.items():
            mu = entry_multiplicities(socle_tableau(x))
            h = hom_matrix(x)
            a1 = x.alpha[0] if x.alpha else 0
            b1 = x.beta[0] if x.beta else 0
            table = {}
            for ell in range(1, a1 + 1):
                for m in range(ell + 1, a1 + b1 + 1):
                    d = defect(x, ell, m)
                    table[(ell, m)] = d
                    expected_mu = mu.get((ell, m - ell), 0)
                    expected_h = (
                        h.value(ell, m - 1)
                        - h.value(ell, m)
                        - h.value(ell - 1, m - 2)
                        + h.value(ell - 1, m - 1)
                    )
                    if not (d == expected_mu == expected_h):
                        rep.fail(
                            f"{name} p={p} ({ell},{m}): defect={d} mu={expected_mu} hom={expected_h}"
                        )
            tables[p] = table
        first = tables[primes[0]]
        for p in primes[1:]:
            if tables[p] != first:
                rep.fail(f"{name}: defect tables differ between primes")
    return rep


def lattice_validator_sweep(max_beta_weight: int = 8) -> SweepReport:
    """The three socle-lattice validators agree on every row/column-monotone filling."""
    from .tableaux import (
        MatchingFailed,
        build_matching,
        check_socle,
        check_st3_prime,
        iter_st12_fillings,
    )

    rep = SweepReport("lattice-equivalence", max_beta=max_beta_weight)
    for alpha, beta, gamma in _shapes(max_beta_weight):
        for t in iter_st12_fillings(alpha, beta, gamma):
            rep.cases += 1
            a = check_socle(t)
            b = check_st3_prime(t)
            try:
                for level in range(1, t.max_entry()):
                    build_matching(t, level)
                c = True
            except MatchingFailed:
                c = False
            if not (a == b == c):
                rep.fail(f"{(alpha, beta, gamma)}: validators disagree ({a},{b},{c})")
    return rep
