"""Constructive matching of prime intervals between two maximal chains.

Given a semimodular join semilattice with bottom and top and two maximal
chains C = (c_0, ..., c_n) and D = (d_0, ..., d_n), `jh_match` computes the
unique permutation pi with [c_{i-1}, c_i] up-and-down projective to
[d_{pi(i)-1}, d_{pi(i)}], together with an explicit witness per index, by
recursion on height.  No witness search happens anywhere: every witness is
produced constructively and re-verified before being returned, so each run
doubles as a check of the structural facts the recursion relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from . import semilattice as sl
from .errors import (
    ChainLengthMismatchError,
    InternalInvariantError,
    MissingBoundsError,
    NotMaximalChainError,
    NotSemimodularError,
    NotJoinSemilatticeError,
)
from .poset import Chain, Poset
from .projectivity import prime_up_projective

if TYPE_CHECKING:  # pragma: no cover
    from .oracle import ProjectivityRelation


@dataclass(frozen=True)
class RecursionFrame:
    """One level of the induction: the split index and the lifted chain.

    `l` is the largest index with c_1 not below d_l.  `lifted_chain` is the
    deduplicated sequence of joins of c_1 with the d_j (the collapse at l
    removed), a maximal chain of the interval above c_1.  `sigma` records the
    sub-permutation returned by the recursive call, already translated to
    this level's indices: pairs (i, sigma(i)) for i = 2..n.
    """

    level: int
    l: int
    lifted_chain: tuple[str, ...]
    sigma: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "l": self.l,
            "lifted_chain": list(self.lifted_chain),
            "sigma": [list(pair) for pair in self.sigma],
        }


@dataclass(frozen=True)
class MatchingResult:
    """Permutation and witnesses matching the prime intervals of two chains.

    `pi` is 1-indexed to follow the usual numbering of chain steps:
    pi[i-1] == j means interval i of the first chain, [c_{i-1}, c_i], maps to
    interval j of the second, [d_{j-1}, d_j].  `witnesses[i-1]` is the middle
    interval certifying that up-and-down projectivity.
    """

    n: int
    pi: tuple[int, ...]
    witnesses: tuple[tuple[str, str], ...]
    trace: tuple[RecursionFrame, ...] | None = None

    def image_of(self, i: int) -> int:
        """pi(i) with 1-indexed i."""
        return self.pi[i - 1]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pi": list(self.pi),
            "witnesses": [list(w) for w in self.witnesses],
            "trace": None if self.trace is None else [f.to_dict() for f in self.trace],
        }


@dataclass(frozen=True)
class MatchingCheck:
    """Outcome of re-verifying a MatchingResult; empty failures means valid."""

    ok: bool
    failures: tuple[str, ...]


def _validate_inputs(p: Poset, chain_a, chain_b) -> tuple[Chain, Chain]:
    ok, pair = sl.is_join_semilattice(p)
    if not ok:
        raise NotJoinSemilatticeError(pair)
    report = sl.is_semimodular(p)
    if not report.holds:
        raise NotSemimodularError(report.counterexample)
    if p.bottom() is None or p.top() is None:
        raise MissingBoundsError(f"poset {p.name!r} lacks a bottom or top element")
    C = chain_a if isinstance(chain_a, Chain) else p.chain(chain_a)
    D = chain_b if isinstance(chain_b, Chain) else p.chain(chain_b)
    for label, ch in (("first", C), ("second", D)):
        if not sl.is_maximal_chain(p, ch):
            raise NotMaximalChainError(f"{label} chain {list(ch)} is not maximal in {p.name!r}")
    if C.length != D.length:
        raise ChainLengthMismatchError(
            f"maximal chains of lengths {C.length} and {D.length}; "
            f"equal length is guaranteed for valid inputs, so a precondition is broken")
    return C, D


def _match(p: Poset, c: Sequence[str], d: Sequence[str], level: int,
           frames: list[RecursionFrame] | None) -> tuple[list[int], list[tuple[str, str]]]:
    n = len(c) - 1
    if n <= 1:
        if n == 0:
            return [], []
        return [1], [(d[0], d[1])]

    c1 = c[1]
    m = len(d) - 1
    not_below = [j for j in range(m + 1) if not p.leq(c1, d[j])]
    if not not_below or len(not_below) == m + 1:
        raise InternalInvariantError("c_1 must be above d_0 and below d_m")
    l = max(not_below)

    lifted = [sl.join(p, c1, dj) for dj in d]
    if lifted[0] != c1 or lifted[l] != d[l + 1] or lifted[l + 1:] != list(d[l + 1 :]):
        raise InternalInvariantError("lifted chain does not collapse onto the tail of d")
    collapses = [j for j in range(m) if lifted[j] == lifted[j + 1]]
    if collapses != [l]:
        raise InternalInvariantError(f"expected the unique collapse at {l}, found {collapses}")
    dedup = lifted[: l + 1] + lifted[l + 2 :]
    for u, v in zip(dedup, dedup[1:]):
        if not p.is_cover(u, v):
            raise InternalInvariantError(f"lifted step ({u}, {v}) is not a cover")

    sub = p.interval(c1, c[-1])
    if not sl.is_maximal_chain(sub, dedup):
        raise InternalInvariantError("lifted chain is not maximal above c_1")

    sub_pi, sub_wits = _match(sub, c[1:], dedup, level + 1, frames)

    # Translate sub indices: position j in the deduplicated chain names the
    # original interval j when j <= l, and j+1 past the collapse.
    sigma = {i: (s if s <= l else s + 1) for i, s in enumerate(sub_pi, start=2)}
    pi = [l + 1] + [sigma[i] for i in range(2, n + 1)]
    witnesses = [(d[l], d[l + 1])] + sub_wits
    if frames is not None:
        frames.append(RecursionFrame(level, l, tuple(dedup), tuple(sorted(sigma.items()))))
    return pi, witnesses


def jh_match(p: Poset, chain_a, chain_b, keep_trace: bool = False) -> MatchingResult:
    """Match the prime intervals of two maximal chains of p.

    Validates that p is a semimodular join semilattice with bottom and top
    and that both chains are maximal of equal length, then runs the inductive
    construction.  Every witness in the result satisfies the up-projectivity
    checks against both chains; this is re-verified before returning.
    """
    C, D = _validate_inputs(p, chain_a, chain_b)
    frames: list[RecursionFrame] | None = [] if keep_trace else None
    pi, witnesses = _match(p, C.elements, D.elements, 0, frames)

    n = C.length
    if sorted(pi) != list(range(1, n + 1)):
        raise InternalInvariantError(f"pi is not a permutation: {pi}")
    for i in range(1, n + 1):
        w = witnesses[i - 1]
        src = (C.elements[i - 1], C.elements[i])
        tgt = (D.elements[pi[i - 1] - 1], D.elements[pi[i - 1]])
        if not (prime_up_projective(p, src, w) and prime_up_projective(p, tgt, w)):
            raise InternalInvariantError(f"witness {w} fails re-verification at index {i}")

    trace = None
    if frames is not None:
        trace = tuple(sorted(frames, key=lambda f: f.level))
    return MatchingResult(n=n, pi=tuple(pi), witnesses=tuple(witnesses), trace=trace)


def verify_matching(p: Poset, chain_a, chain_b, result: MatchingResult,
                    relation: "ProjectivityRelation | None" = None) -> MatchingCheck:
    """Re-check a MatchingResult: shape, bijectivity, witness validity, and,
    when an independently computed relation is supplied, maximality of pi."""
    C = chain_a if isinstance(chain_a, Chain) else p.chain(chain_a)
    D = chain_b if isinstance(chain_b, Chain) else p.chain(chain_b)
    failures: list[str] = []
    n = result.n
    if n != C.length or n != D.length:
        failures.append(f"result size {n} does not match chain lengths "
                        f"{C.length} and {D.length}")
        return MatchingCheck(False, tuple(failures))
    if sorted(result.pi) != list(range(1, n + 1)):
        failures.append(f"pi is not a bijection on 1..{n}: {list(result.pi)}")
    if len(result.witnesses) != n:
        failures.append(f"expected {n} witnesses, got {len(result.witnesses)}")
    for i in range(1, min(n, len(result.witnesses)) + 1):
        w = result.witnesses[i - 1]
        j = result.pi[i - 1]
        if not (1 <= j <= n):
            continue
        src = (C.elements[i - 1], C.elements[i])
        tgt = (D.elements[j - 1], D.elements[j])
        if not prime_up_projective(p, src, w):
            failures.append(f"index {i}: witness {tuple(w)} fails on the source interval {src}")
        elif not prime_up_projective(p, tgt, w):
            failures.append(f"index {i}: witness {tuple(w)} fails on the target interval {tgt}")
    if relation is not None:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if relation.related[i - 1][j - 1] and j > result.pi[i - 1]:
                    failures.append(
                        f"maximality: intervals {i} and {j} are related but j > pi({i}) = "
                        f"{result.pi[i - 1]}")
    return MatchingCheck(not failures, tuple(failures))
