"""Up-, down-, and up-and-down projectivity of prime intervals.

For a prime interval [a, b] the lattice definition of [a,b] up-projective to
[x,y] (meet(b,x) = a and join(b,x) = y) is equivalent to the join-only form
x != y, join(a,x) = x, join(b,x) = y, which is the one that makes sense in a
join semilattice.  Both are exposed; property tests pin their agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import semilattice as sl
from .errors import (
    InternalInvariantError,
    NoMeetError,
    NotPrimeIntervalError,
    PreconditionError,
)
from .poset import Poset


@dataclass(frozen=True)
class PrimeInterval:
    """A cover pair [lower, upper] of some ambient poset."""

    lower: str
    upper: str

    def __iter__(self):
        yield self.lower
        yield self.upper


@dataclass(frozen=True)
class ProjectivityWitness:
    """The middle interval (x, y) realizing source up to (x,y) down to target."""

    x: str
    y: str

    def __iter__(self):
        yield self.x
        yield self.y


def _endpoints(interval: PrimeInterval | Sequence[str]) -> tuple[str, str]:
    lo, hi = interval
    return lo, hi


def _require_prime(p: Poset, interval) -> tuple[str, str]:
    lo, hi = _endpoints(interval)
    if not p.is_cover(lo, hi):
        raise NotPrimeIntervalError(f"[{lo}, {hi}] is not a prime interval of {p.name!r}")
    return lo, hi


def lattice_up_projective(p: Poset, ab, xy) -> bool:
    """Lattice form: meet(b, x) == a and join(b, x) == y.

    Works for general intervals; requires meet(b, x) to exist.
    """
    a, b = _endpoints(ab)
    x, y = _endpoints(xy)
    m = sl.meet(p, b, x)
    if m is None:
        raise NoMeetError(f"meet({b}, {x}) does not exist in {p.name!r}")
    return m == a and sl.join(p, b, x) == y


def prime_up_projective(p: Poset, ab, xy) -> bool:
    """Join-only form for a prime source interval: x != y, a∨x = x, b∨x = y."""
    a, b = _require_prime(p, ab)
    x, y = _endpoints(xy)
    return x != y and sl.join(p, a, x) == x and sl.join(p, b, x) == y


def updown_projective(p: Poset, source, target) -> ProjectivityWitness | None:
    """First witness (x, y), in lexicographic pair order, with both
    prime_up_projective(source, (x,y)) and prime_up_projective(target, (x,y)).

    Directional: this realizes source-to-target, not the converse.
    """
    a, b = _require_prime(p, source)
    c, d = _require_prime(p, target)
    # For a fixed x the only y that can satisfy the source side is join(b, x),
    # so scanning x in canonical order yields the lexicographically least pair.
    for x in p.elements:
        if sl.join(p, a, x) != x or sl.join(p, c, x) != x:
            continue
        y = sl.join(p, b, x)
        if y == x or sl.join(p, d, x) != y:
            continue
        return ProjectivityWitness(x, y)
    return None


def compose_up(p: Poset, ab, cd, ef) -> bool:
    """Transitivity of up-projectivity in a semimodular join semilattice.

    Preconditions are re-verified rather than trusted: the poset must be
    semimodular, [a,b] prime, and both given up-projectivities must hold.
    Under those the result is guaranteed true; callers treat False as a bug.
    """
    report = sl.is_semimodular(p)
    if not report.holds:
        raise PreconditionError(
            f"compose_up needs a semimodular poset; counterexample {report.counterexample}")
    a, b = _require_prime(p, ab)
    if not prime_up_projective(p, (a, b), cd):
        raise PreconditionError(f"[{a}, {b}] is not up-projective to {tuple(cd)}")
    c, d = _endpoints(cd)
    # Semimodularity forces c ⋖ d here; if not, a theorem broke, not the caller.
    if not p.is_cover(c, d):
        raise InternalInvariantError(
            f"({c}, {d}) should be a cover pair under semimodularity")
    if not prime_up_projective(p, (c, d), ef):
        raise PreconditionError(f"[{c}, {d}] is not up-projective to {tuple(ef)}")
    return prime_up_projective(p, (a, b), ef)
