"""Lexicographic ranking of arguments from per-argument score pairs.

Scores are compared on their 5-decimal roundings (half away from zero), the
observable precision of the emitted tables; an ``exact`` switch compares the
underlying rationals instead. Higher in-score wins; ties break in favour of
the lower out-score; arguments tying on both form one equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping

from .framework import ArgumentationFramework
from .indexes import score_all

_QUANTUM = Decimal("0.00001")


def round5(x: Fraction | int) -> Decimal:
    """Nearest multiple of 1e-5, exact halves rounded away from zero."""
    frac = Fraction(x) * 100000
    p, q = frac.numerator, frac.denominator
    if p >= 0:
        units = (2 * p + q) // (2 * q)
    else:
        units = -((-2 * p + q) // (2 * q))
    return Decimal(units).scaleb(-5).quantize(_QUANTUM)


@dataclass(frozen=True)
class PIScore:
    """One argument's exact score pair plus the rounded presentation pair."""

    argument: str
    pi_in: Fraction
    pi_out: Fraction
    pi_in_5dp: Decimal
    pi_out_5dp: Decimal

    @classmethod
    def build(cls, argument: str, pi_in: Fraction, pi_out: Fraction) -> "PIScore":
        return cls(argument, pi_in, pi_out, round5(pi_in), round5(pi_out))


def scores_from_map(values: Mapping[str, tuple[Fraction, Fraction]]) -> list[PIScore]:
    return [PIScore.build(name, vin, vout) for name, (vin, vout) in values.items()]


def _sort_key(score: PIScore, exact: bool):
    if exact:
        return (-score.pi_in, score.pi_out)
    return (-score.pi_in_5dp, score.pi_out_5dp)


def compare(s1: PIScore, s2: PIScore, exact: bool = False) -> str:
    """'greater', 'less' or 'equivalent' under the lexicographic rule."""
    k1, k2 = _sort_key(s1, exact), _sort_key(s2, exact)
    if k1 < k2:
        return "greater"
    if k1 > k2:
        return "less"
    return "equivalent"


class Ranking:
    """Ordered equivalence classes; earlier class means strictly preferred."""

    __slots__ = ("classes", "_position")

    def __init__(self, classes: Iterable[Iterable[str]]):
        self.classes = tuple(tuple(c) for c in classes)
        position = {}
        for ci, members in enumerate(self.classes):
            for name in members:
                if name in position:
                    raise ValueError(f"argument {name!r} appears in two classes")
                position[name] = ci
        self._position = position

    @property
    def arguments(self) -> tuple[str, ...]:
        return tuple(name for c in self.classes for name in c)

    def class_index(self, name: str) -> int:
        try:
            return self._position[name]
        except KeyError:
            raise ValueError(f"argument {name!r} is not ranked") from None

    def at_least(self, a: str, b: str) -> bool:
        return self.class_index(a) <= self.class_index(b)

    def strictly_preferred(self, a: str, b: str) -> bool:
        return self.class_index(a) < self.class_index(b)

    def equivalent(self, a: str, b: str) -> bool:
        return self.class_index(a) == self.class_index(b)

    def relation(self, a: str, b: str) -> str:
        ca, cb = self.class_index(a), self.class_index(b)
        if ca < cb:
            return "greater"
        if ca > cb:
            return "less"
        return "equivalent"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ranking):
            return NotImplemented
        return self.classes == other.classes

    def __hash__(self) -> int:
        return hash(self.classes)

    def __repr__(self) -> str:
        return f"Ranking({render_ranking(self)!r})"


def rank(scores: Iterable[PIScore], exact: bool = False) -> Ranking:
    """Group scores into ordered equivalence classes.

    Within a class arguments are listed alphabetically; the result is
    independent of the input order.
    """
    scores = list(scores)
    names = [s.argument for s in scores]
    if len(set(names)) != len(names):
        raise ValueError("duplicate argument in scores")
    buckets: dict[tuple, list[str]] = {}
    for s in scores:
        buckets.setdefault(_sort_key(s, exact), []).append(s.argument)
    classes = [sorted(buckets[k]) for k in sorted(buckets)]
    return Ranking(classes)


def render_ranking(r: Ranking) -> str:
    """'a = c > d = e > b' style rendering."""
    return " > ".join(" = ".join(members) for members in r.classes)


def greyscale(r: Ranking) -> dict[str, float]:
    """Shades in [0,1], 1.0 for the top class, evenly spaced, 0.0 at bottom."""
    k = len(r.classes)
    shades = {}
    for ci, members in enumerate(r.classes):
        shade = 1.0 if k == 1 else 1.0 - ci / (k - 1)
        for name in members:
            shades[name] = shade
    return shades


def rank_framework(
    af: ArgumentationFramework,
    sigma: str,
    index: str,
    exact: bool = False,
    deadline=None,
) -> tuple[list[PIScore], Ranking]:
    """Score every argument and rank the framework in one step."""
    values = score_all(af, sigma, index, deadline)
    scores = scores_from_map(values)
    return scores, rank(scores, exact=exact)
