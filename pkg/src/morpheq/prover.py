"""Constructing simultaneous-induction proofs that two coded fixed points agree.

The certificate is a table of safe pairs (u_i, v_i): equal-length words whose
images under the two (already power-equalized) morphisms also have equal
length.  If the coded words tau(u_i) and rho(v_i) agree, both images decompose
into table entries along a shared index word w_i, and u_0, v_0 start the two
fixed points, then tau(f^oo(0)) = rho(g^oo(0)) follows by induction on n from
the claims tau(f^n(u_i)) = rho(g^n(v_i)).

Two constructions are provided.  The general one greedily closes the table:
scan f(u_i) against g(v_i) left to right, at each cut take the smallest safe
pair, reuse or append it, and record its index; there is no backtracking, and
the first coding violation aborts the attempt.  The basic one tries the fixed
shape v_i = w_i = g(i) with u_i cut out of f's fixed point at the position
where symbol i first occurs in g's fixed point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .scaling import DEFAULT_TOLERANCE, equalize
from .words import (
    Coding,
    FixedPoint,
    Morphism,
    NotProlongableError,
    Word,
    format_word,
    prune_unreachable,
)


class FailureStage(enum.Enum):
    EIGENVALUE_MISMATCH = "eigenvalue-mismatch"
    NO_INITIAL_SAFE_PAIR = "no-initial-safe-pair"
    DECOMPOSITION_STUCK = "decomposition-stuck"
    CODING_MISMATCH = "coding-mismatch"
    PAIR_BUDGET_EXCEEDED = "pair-budget-exceeded"


class ProveFailure(Exception):
    """A proof attempt gave up; stage says where, detail says why."""

    def __init__(self, stage: FailureStage, detail: str):
        super().__init__(f"{stage.value}: {detail}")
        self.stage = stage
        self.detail = detail


class ProofMode(enum.Enum):
    GENERAL = "general"
    BASIC = "basic"


@dataclass(frozen=True)
class ProverConfig:
    max_pair_len: int = 10
    max_pairs: int = 64
    prefix_budget: int = 10**6
    horizon: int = 10**5
    tol: float = DEFAULT_TOLERANCE
    eigen_iterations: int = 8


@dataclass(frozen=True)
class EqualityProblem:
    """Are tau(f^oo(0)) and rho(g^oo(0)) the same sequence?"""

    f: Morphism
    tau: Coding
    g: Morphism
    rho: Coding

    def __post_init__(self):
        if self.tau.source_size != self.f.alphabet_size:
            raise ValueError("tau does not cover f's alphabet")
        if self.rho.source_size != self.g.alphabet_size:
            raise ValueError("rho does not cover g's alphabet")
        for name, m in (("f", self.f), ("g", self.g)):
            if not m.is_prolongable(0):
                raise NotProlongableError(
                    f"{name}(0) must start with 0 and have length >= 2"
                )


@dataclass(frozen=True)
class SafePairTable:
    """Safe pairs plus, per pair, the index word decomposing both images."""

    pairs: tuple[tuple[Word, Word], ...]
    decompositions: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((tuple(u), tuple(v)) for u, v in self.pairs)
        )
        object.__setattr__(
            self, "decompositions", tuple(tuple(w) for w in self.decompositions)
        )
        if len(self.pairs) == 0:
            raise ValueError("table needs at least one pair")
        if len(self.pairs) != len(self.decompositions):
            raise ValueError("each pair needs exactly one decomposition")

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Proof:
    """A checkable equality certificate for problem, at exponents (p, q).

    The table speaks about f^p and g^q; those are recomputed from the stored
    problem on demand rather than stored, so they cannot drift out of sync.
    """

    problem: EqualityProblem
    p: int
    q: int
    table: SafePairTable
    mode: ProofMode = ProofMode.GENERAL

    @property
    def scaled_f(self) -> Morphism:
        return self.problem.f.power(self.p)

    @property
    def scaled_g(self) -> Morphism:
        return self.problem.g.power(self.q)


def _show(w: Word) -> str:
    try:
        return format_word(w)
    except ValueError:
        return ",".join(str(s) for s in w)


def is_safe_pair(f: Morphism, g: Morphism, u: Word, v: Word) -> bool:
    """Equal lengths, and equal image lengths under f and g respectively.

    Empty pairs are vacuously safe; callers that need non-empty words must
    exclude them separately.
    """
    if len(u) != len(v):
        return False
    flen = sum(len(f.images[s]) for s in u)
    glen = sum(len(g.images[s]) for s in v)
    return flen == glen


def find_initial_safe_pair(
    f: Morphism, g: Morphism, max_len: int = 10
) -> tuple[Word, Word]:
    """Smallest equal-length prefixes of the two fixed points forming a safe pair."""
    sf = FixedPoint(f, 0)
    sg = FixedPoint(g, 0)
    flen = 0
    glen = 0
    for length in range(1, max_len + 1):
        flen += len(f.images[sf.at(length - 1)])
        glen += len(g.images[sg.at(length - 1)])
        if flen == glen:
            return sf.prefix(length), sg.prefix(length)
    raise ProveFailure(
        FailureStage.NO_INITIAL_SAFE_PAIR,
        f"no safe prefix pair up to length {max_len}",
    )


def derive_table(
    f: Morphism,
    tau: Coding,
    g: Morphism,
    rho: Coding,
    config: ProverConfig = ProverConfig(),
) -> SafePairTable:
    """Close the safe-pair table starting from the smallest safe prefix pair.

    f and g must already be scaled to a common growth rate; the closure
    fails as decomposition-stuck otherwise, because the image lengths of
    candidate cuts drift apart.
    """
    initial = find_initial_safe_pair(f, g, config.max_pair_len)
    flen_of = f.image_lengths()
    glen_of = g.image_lengths()

    pairs: list[tuple[Word, Word]] = []
    index: dict[tuple[Word, Word], int] = {}
    decompositions: list[tuple[int, ...]] = []

    def intern(u: Word, v: Word) -> int:
        key = (u, v)
        known = index.get(key)
        if known is not None:
            return known
        if len(pairs) >= config.max_pairs:
            raise ProveFailure(
                FailureStage.PAIR_BUDGET_EXCEEDED,
                f"more than {config.max_pairs} safe pairs needed",
            )
        if tau.apply(u) != rho.apply(v):
            raise ProveFailure(
                FailureStage.CODING_MISMATCH,
                f"coded words differ on pair ({_show(u)}, {_show(v)})",
            )
        index[key] = len(pairs)
        pairs.append(key)
        return index[key]

    intern(*initial)
    i = 0
    while i < len(pairs):
        u, v = pairs[i]
        fu = f.apply(u)
        gv = g.apply(v)
        w: list[int] = []
        pos = 0
        total = len(fu)
        while pos < total:
            cut = None
            flen = 0
            glen = 0
            for length in range(1, min(config.max_pair_len, total - pos) + 1):
                flen += flen_of[fu[pos + length - 1]]
                glen += glen_of[gv[pos + length - 1]]
                if flen == glen:
                    cut = length
                    break
            if cut is None:
                raise ProveFailure(
                    FailureStage.DECOMPOSITION_STUCK,
                    f"no safe pair at offset {pos} while decomposing pair {i}",
                )
            w.append(intern(fu[pos : pos + cut], gv[pos : pos + cut]))
            pos += cut
        decompositions.append(tuple(w))
        i += 1
    return SafePairTable(tuple(pairs), tuple(decompositions))


def _normalize(problem: EqualityProblem) -> EqualityProblem:
    f, tau, _ = prune_unreachable(problem.f, problem.tau, 0)
    g, rho, _ = prune_unreachable(problem.g, problem.rho, 0)
    return EqualityProblem(f, tau, g, rho)


def _equalized(problem: EqualityProblem, config: ProverConfig) -> tuple[int, int]:
    scaling = equalize(problem.f, problem.g, config.tol, config.eigen_iterations)
    if scaling is None:
        raise ProveFailure(
            FailureStage.EIGENVALUE_MISMATCH,
            f"no exponent pair brings the growth rates within {config.tol}",
        )
    return scaling.p, scaling.q


def prove_general(
    problem: EqualityProblem, config: ProverConfig = ProverConfig()
) -> Proof:
    """Prune, equalize growth rates, then close the safe-pair table."""
    norm = _normalize(problem)
    p, q = _equalized(norm, config)
    table = derive_table(
        norm.f.power(p), norm.tau, norm.g.power(q), norm.rho, config
    )
    return Proof(norm, p, q, table, ProofMode.GENERAL)


def prove_basic(
    problem: EqualityProblem, config: ProverConfig = ProverConfig()
) -> Proof:
    """Try the fixed table shape v_i = w_i = g(i), one pair per symbol of g.

    u_i is the factor of f's fixed point spanning the same positions that
    g(i) spans in g's fixed point right after the first occurrence of i.
    """
    norm = _normalize(problem)
    p, q = _equalized(norm, config)
    fp = norm.f.power(p)
    gq = norm.g.power(q)
    n = gq.alphabet_size

    seq_g = FixedPoint(gq, 0)
    first_cum: dict[int, int] = {}
    cum = 0
    pos = 0
    while len(first_cum) < n and pos < config.horizon:
        s = seq_g.at(pos)
        if s not in first_cum:
            first_cum[s] = cum
        cum += len(gq.images[s])
        pos += 1
    if len(first_cum) < n:
        missing = min(set(range(n)) - set(first_cum))
        raise ProveFailure(
            FailureStage.CODING_MISMATCH,
            f"symbol {missing} does not occur in the first {config.horizon} "
            "symbols of g's fixed point",
        )

    seq_f = FixedPoint(fp, 0)
    us: list[Word] = []
    for i in range(n):
        v = gq.images[i]
        start = first_cum[i]
        end = start + len(v)
        if end > config.prefix_budget:
            raise ProveFailure(
                FailureStage.DECOMPOSITION_STUCK,
                f"pair for symbol {i} needs more than {config.prefix_budget} "
                "symbols of f's fixed point",
            )
        us.append(seq_f.factor(start, end))

    for i in range(n):
        u = us[i]
        v = gq.images[i]
        if norm.tau.apply(u) != norm.rho.apply(v):
            raise ProveFailure(
                FailureStage.DECOMPOSITION_STUCK,
                f"coded words differ on pair ({_show(u)}, {_show(v)}) for symbol {i}",
            )
        expected = tuple(s for a in v for s in us[a])
        if fp.apply(u) != expected:
            raise ProveFailure(
                FailureStage.DECOMPOSITION_STUCK,
                f"f-image of {_show(u)} does not decompose along g({i}) = {_show(v)}",
            )

    table = SafePairTable(
        tuple((us[i], gq.images[i]) for i in range(n)),
        tuple(gq.images[i] for i in range(n)),
    )
    return Proof(norm, p, q, table, ProofMode.BASIC)
