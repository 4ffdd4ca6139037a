"""Exact power indexes over 0/1 coalition games induced by semantics.

The characteristic function marks a coalition winning exactly when it is a
member of the chosen family: extensions for the ``in`` polarity, sets
attacked by extensions for ``out``. Membership is exact, not
superset-closed, so marginal contributions can be negative.

All four indexes are computed in exact rational arithmetic. The summations
iterate only over coalitions adjacent to a winning one: a marginal
contribution is nonzero only when the coalition with the player or the
coalition without the player is winning, so it suffices to walk the winning
family once per player.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm

from .framework import ArgSet, ArgumentationFramework, _bits, _popcount
from .semantics import (
    ExtensionFamily,
    check_semantics,
    enumerate_extensions,
    out_family,
)

INDEXES = ("shapley", "banzhaf", "deegan-packel", "johnston")

POLARITIES = ("in", "out")


def check_index(index: str) -> str:
    if index not in INDEXES:
        raise ValueError(f"unknown index {index!r} (expected one of {', '.join(INDEXES)})")
    return index


class CharacteristicFunction:
    """0/1 valuation of coalitions by exact membership in a winning family."""

    __slots__ = ("frame", "winning", "polarity")

    def __init__(self, frame: ArgumentationFramework, winning: ExtensionFamily, polarity: str):
        if polarity not in POLARITIES:
            raise ValueError(f"polarity must be 'in' or 'out', got {polarity!r}")
        if winning.frame != frame:
            raise ValueError("winning family does not belong to this framework")
        self.frame = frame
        self.winning = winning
        self.polarity = polarity

    @property
    def n(self) -> int:
        return self.frame.n

    @property
    def winning_masks(self) -> tuple[int, ...]:
        return self.winning.masks

    def value_mask(self, mask: int) -> int:
        return 1 if self.winning.contains_mask(mask) else 0

    def value(self, s: ArgSet) -> int:
        if s.frame != self.frame:
            raise ValueError("ArgSet does not belong to this game's framework")
        return self.value_mask(s.mask)

    def __repr__(self) -> str:
        return (
            f"CharacteristicFunction(polarity={self.polarity!r}, "
            f"winning={self.winning.render()})"
        )


def characteristic(
    af: ArgumentationFramework, sigma: str, polarity: str, deadline=None
) -> CharacteristicFunction:
    """Build the coalition game for one semantics and polarity."""
    check_semantics(sigma)
    family = enumerate_extensions(af, sigma, deadline)
    if polarity == "out":
        family = out_family(af, family)
    return CharacteristicFunction(af, family, polarity)


def marginal(v: CharacteristicFunction, s: ArgSet, name: str) -> int:
    """v(S + i) - v(S); requires i not already in S."""
    if s.frame != v.frame:
        raise ValueError("ArgSet does not belong to this game's framework")
    bit = 1 << v.frame.index(name)
    if s.mask & bit:
        raise ValueError(f"argument {name!r} is already in the coalition")
    return v.value_mask(s.mask | bit) - v.value_mask(s.mask)


def _swing_terms(v: CharacteristicFunction, i: int):
    """Yield (coalition-without-i mask, +-1 marginal) for all nonzero terms.

    Every nonzero marginal touches a winning coalition: a positive swing at
    W minus i when i's presence makes W win, a negative one at W when
    adding i spoils a winning W.
    """
    bit = 1 << i
    contains = v.winning.contains_mask
    for w in v.winning_masks:
        if w & bit:
            s = w & ~bit
            if not contains(s):
                yield s, 1
        else:
            if not contains(w | bit):
                yield w, -1


def shapley(v: CharacteristicFunction, name: str) -> Fraction:
    """Order-averaged marginal contribution of one argument."""
    n = v.n
    i = v.frame.index(name)
    num = 0
    weights = _shapley_weight_numerators(n)
    for s, sign in _swing_terms(v, i):
        num += sign * weights[_popcount(s)]
    return Fraction(num, factorial(n))


def _shapley_weight_numerators(n: int) -> tuple[int, ...]:
    # |S|! (n - |S| - 1)! for |S| = 0..n-1, in units of 1/n!
    return tuple(factorial(s) * factorial(n - s - 1) for s in range(n))


def banzhaf(v: CharacteristicFunction, name: str) -> Fraction:
    """Uniform-probability swing count of one argument."""
    i = v.frame.index(name)
    total = sum(sign for _, sign in _swing_terms(v, i))
    return Fraction(total, 1 << (v.n - 1)) if v.n else Fraction(0)


def minimal_winning(v: CharacteristicFunction) -> ExtensionFamily:
    """Inclusion-minimal winning coalitions (just the empty set if it wins)."""
    masks = v.winning_masks
    minimal = [
        w
        for w in masks
        if not any(other != w and other & ~w == 0 for other in masks)
    ]
    return ExtensionFamily(v.frame, minimal)


def deegan_packel(v: CharacteristicFunction, name: str) -> Fraction:
    """Minimal-winning-coalition share of one argument.

    The divisor counts the minimal winning coalitions padded with the empty
    set; the summation runs over subsets of the union of the minimal
    winning coalitions containing the argument, weighting each marginal by
    the inverse coalition size.
    """
    i = v.frame.index(name)
    bit = 1 << i
    minimal = minimal_winning(v).masks
    m_count = len(minimal) + (0 if 0 in minimal else 1)
    union = 0
    for w in minimal:
        if w & bit:
            union |= w
    pool = union & ~bit
    if union == 0:
        return Fraction(0)
    unit = lcm(*range(1, _popcount(pool) + 1)) if pool else 1
    acc = 0
    contains = v.winning.contains_mask
    sub = pool
    while sub:
        size = _popcount(sub)
        diff = (1 if contains(sub | bit) else 0) - (1 if contains(sub) else 0)
        if diff:
            acc += diff * (unit // size)
        sub = (sub - 1) & pool
    return Fraction(acc, unit * m_count)


def kappa(v: CharacteristicFunction, t: ArgSet) -> int:
    """Members of ``t`` whose removal leaves a losing coalition."""
    if t.frame != v.frame:
        raise ValueError("ArgSet does not belong to this game's framework")
    return _kappa_mask(v, t.mask)


def _kappa_mask(v: CharacteristicFunction, t: int) -> int:
    contains = v.winning.contains_mask
    count = 0
    for j in _bits(t):
        if not contains(t & ~(1 << j)):
            count += 1
    return count


def johnston(v: CharacteristicFunction, name: str) -> Fraction:
    """Swing score split equally among the critical members.

    Each nonzero marginal at S is divided by the number of critical members
    of S + i; coalitions without any critical member contribute nothing.
    """
    n = v.n
    i = v.frame.index(name)
    bit = 1 << i
    unit = lcm(*range(1, n + 1)) if n else 1
    acc = 0
    for s, sign in _swing_terms(v, i):
        k = _kappa_mask(v, s | bit)
        if k >= 1:
            acc += sign * (unit // k)
    return Fraction(acc, unit)


_INDEX_FUNCTIONS = {
    "shapley": shapley,
    "banzhaf": banzhaf,
    "deegan-packel": deegan_packel,
    "johnston": johnston,
}


def index_function(index: str):
    check_index(index)
    return _INDEX_FUNCTIONS[index]


def score_all(
    af: ArgumentationFramework, sigma: str, index: str, deadline=None
) -> dict[str, tuple[Fraction, Fraction]]:
    """(pi_in, pi_out) for every argument under one semantics and index."""
    fn = index_function(index)
    v_in = characteristic(af, sigma, "in", deadline)
    v_out = characteristic(af, sigma, "out", deadline)
    scores = {}
    for name in af.arguments:
        if deadline is not None:
            deadline.check()
        scores[name] = (fn(v_in, name), fn(v_out, name))
    return scores
