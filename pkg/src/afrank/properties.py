"""Ranking-property checkers and an automated counterexample search.

Each checker evaluates one universally quantified property on a single
framework instance and reports either ``holds-on-instance`` or ``violated``
with a re-checkable witness. Instances whose extension family is empty are
reported ``skipped-degenerate`` for the properties that depend on family
content, since every score collapses to zero there.

The search harness sweeps all digraphs with up to four arguments (one
representative per relabelling class) and then seeded random digraphs,
returning the first violation found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from string import ascii_lowercase

from .framework import (
    ArgSet,
    ArgumentationFramework,
    BudgetExceededError,
    Deadline,
    Isomorphism,
    apply_isomorphism,
    connected_components,
    direct_attackers,
    serialize,
    parse_apx,
)
from .indexes import check_index
from .ranking import Ranking, rank_framework
from .semantics import check_semantics, enumerate_extensions

PROPERTIES = (
    "abstraction",
    "independence",
    "self-contradiction",
    "cardinality-precedence",
    "quality-precedence",
    "non-attacked-equivalence",
    "totality",
    "scp",
    "crp",
)

#: properties checked even when the extension family is empty
_STRUCTURAL = ("totality", "abstraction")

VERDICTS = (
    "holds-on-instance",
    "violated",
    "skipped-degenerate",
    "holds-on-all-tested",
    "budget-exhausted",
)


def check_property_id(prop: str) -> str:
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r} (expected one of {', '.join(PROPERTIES)})")
    return prop


@dataclass
class PropertyReport:
    """Outcome of one property evaluation (or one whole search run)."""

    property: str
    semantics: str
    index: str
    verdict: str
    witness: dict | None = None
    tested: int | None = None
    skipped: int | None = None

    def to_json(self) -> dict:
        obj = {
            "property": self.property,
            "semantics": self.semantics,
            "index": self.index,
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if self.tested is not None:
            obj["tested"] = self.tested
        if self.skipped is not None:
            obj["skipped"] = self.skipped
        return obj


def _statuses(af: ArgumentationFramework, sigma: str) -> dict[str, str]:
    family = enumerate_extensions(af, sigma)
    if not family.masks:
        return {name: "degenerate" for name in af.arguments}
    total = len(family.masks)
    statuses = {}
    for i, name in enumerate(af.arguments):
        bit = 1 << i
        hits = sum(1 for m in family.masks if m & bit)
        if hits == total:
            statuses[name] = "sceptical"
        elif hits:
            statuses[name] = "credulous-only"
        else:
            statuses[name] = "rejected"
    return statuses


def _witness(af: ArgumentationFramework, pair, iso: Isomorphism | None = None) -> dict:
    w = {"apx": serialize(af, "apx"), "pair": list(pair)}
    if iso is not None:
        w["iso"] = dict(iso.mapping)
    return w


def check_property(
    af: ArgumentationFramework,
    sigma: str,
    index: str,
    prop: str,
    *,
    iso: Isomorphism | None = None,
    rng: random.Random | None = None,
) -> PropertyReport:
    """Evaluate one property on all argument pairs of one framework."""
    check_semantics(sigma)
    check_index(index)
    check_property_id(prop)

    def report(verdict, witness=None):
        return PropertyReport(prop, sigma, index, verdict, witness)

    degenerate = len(enumerate_extensions(af, sigma)) == 0
    if degenerate and prop not in _STRUCTURAL:
        return report("skipped-degenerate")

    _, ranking = rank_framework(af, sigma, index)

    if prop == "totality":
        ranked = set(ranking.arguments)
        for a in af.arguments:
            for b in af.arguments:
                if a not in ranked or b not in ranked:
                    return report("violated", _witness(af, (a, b)))
        return report("holds-on-instance")

    if prop == "abstraction":
        if iso is None:
            rng = rng or random.Random(0)
            shuffled = list(af.arguments)
            rng.shuffle(shuffled)
            iso = Isomorphism(dict(zip(af.arguments, shuffled)))
        image = apply_isomorphism(af, iso)
        _, image_ranking = rank_framework(image, sigma, index)
        for a in af.arguments:
            for b in af.arguments:
                if ranking.relation(a, b) != image_ranking.relation(iso(a), iso(b)):
                    return report("violated", _witness(af, (a, b), iso))
        return report("holds-on-instance")

    if prop == "independence":
        # component order must carry over: a >= b inside a component implies
        # a >= b in the whole framework (strict order may not flip, ties must
        # stay ties)
        for component in connected_components(af):
            if len(enumerate_extensions(component, sigma)) == 0:
                return report("skipped-degenerate")
            _, comp_ranking = rank_framework(component, sigma, index)
            for a in component.arguments:
                for b in component.arguments:
                    if comp_ranking.at_least(a, b) and not ranking.at_least(a, b):
                        return report("violated", _witness(af, (a, b)))
        return report("holds-on-instance")

    if prop in ("scp", "crp"):
        statuses = _statuses(af, sigma)
        for a in af.arguments:
            for b in af.arguments:
                if prop == "scp":
                    premise = statuses[a] == "sceptical" and statuses[b] != "sceptical"
                else:
                    premise = (
                        statuses[a] in ("sceptical", "credulous-only")
                        and statuses[b] == "rejected"
                    )
                if premise and not ranking.strictly_preferred(a, b):
                    return report("violated", _witness(af, (a, b)))
        return report("holds-on-instance")

    attackers = {name: direct_attackers(af, name) for name in af.arguments}
    for a in af.arguments:
        for b in af.arguments:
            if prop == "self-contradiction":
                premise = not af.has_attack(a, a) and af.has_attack(b, b)
                expected_strict = True
            elif prop == "cardinality-precedence":
                premise = len(attackers[a]) < len(attackers[b])
                expected_strict = True
            elif prop == "quality-precedence":
                premise = any(
                    all(ranking.strictly_preferred(c, d) for d in attackers[a])
                    for c in attackers[b]
                )
                expected_strict = True
            else:  # non-attacked-equivalence
                premise = a != b and not attackers[a] and not attackers[b]
                expected_strict = False
            if not premise:
                continue
            ok = (
                ranking.strictly_preferred(a, b)
                if expected_strict
                else ranking.equivalent(a, b)
            )
            if not ok:
                return report("violated", _witness(af, (a, b)))
    return report("holds-on-instance")


def group_compare(ranking: Ranking, s1: ArgSet, s2: ArgSet) -> str:
    """'geq', 'strict' or 'neither' for S1 versus S2 under group comparison.

    S1 dominates when some injection from S2 into S1 maps every argument to
    one ranked at least as high; matching the sorted sequences rank-by-rank
    decides this. Strict dominance additionally needs a size gap or one
    strictly better match.
    """
    a1 = sorted(s1.members, key=ranking.class_index)
    a2 = sorted(s2.members, key=ranking.class_index)
    if len(a2) > len(a1):
        return "neither"
    matched = list(zip(a1, a2))
    if any(ranking.class_index(y) > ranking.class_index(x) for y, x in matched):
        return "neither"
    if len(a2) < len(a1) or any(
        ranking.class_index(y) < ranking.class_index(x) for y, x in matched
    ):
        return "strict"
    return "geq"


# -- candidate framework generation -------------------------------------------

_CANONICAL_CACHE: dict[int, tuple[int, ...]] = {}


def digraph_from_mask(n: int, mask: int, names: str | None = None) -> ArgumentationFramework:
    """Framework on ``n`` arguments from an adjacency bitmask (bit i*n+j = (i,j))."""
    labels = list(names or ascii_lowercase[:n])
    attacks = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(n)
        if mask >> (i * n + j) & 1
    ]
    return ArgumentationFramework(labels, attacks)


def canonical_digraph_masks(n: int) -> tuple[int, ...]:
    """Adjacency masks of all n-argument digraphs, one per relabelling class.

    A mask is kept when it is the numerically smallest among all its
    relabellings, so iterating these visits every digraph shape exactly once.
    """
    if n in _CANONICAL_CACHE:
        return _CANONICAL_CACHE[n]
    tables = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        # result bit k corresponds to source bit table[k]
        inverse = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                inverse[perm[i] * n + perm[j]] = i * n + j
        tables.append(tuple(inverse))
    keep = []
    for mask in range(1 << (n * n)):
        canonical = True
        for inverse in tables:
            relabeled = 0
            rest = mask
            while rest:
                low = rest & -rest
                relabeled |= 1 << inverse[low.bit_length() - 1]
                rest ^= low
            if relabeled < mask:
                canonical = False
                break
        if canonical:
            keep.append(mask)
    _CANONICAL_CACHE[n] = tuple(keep)
    return _CANONICAL_CACHE[n]


def random_framework(
    rng: random.Random, n: int, edge_probability: float | None = None
) -> ArgumentationFramework:
    names = list(ascii_lowercase[:n])
    p = edge_probability if edge_probability is not None else rng.choice((0.15, 0.3, 0.5))
    attacks = [(a, b) for a in names for b in names if rng.random() < p]
    return ArgumentationFramework(names, attacks)


# -- search -------------------------------------------------------------------

def search_counterexample(
    prop: str,
    sigma: str,
    index: str,
    max_args: int = 6,
    samples: int = 10000,
    seed: int = 0,
    time_budget_s: float | None = None,
) -> PropertyReport:
    """Look for a framework violating ``prop``; deterministic under ``seed``.

    Sweeps every digraph shape with up to four arguments and then
    ``samples`` seeded random digraphs with up to ``max_args`` arguments.
    Returns the first re-verified violation, ``holds-on-all-tested`` after a
    full sweep, or ``budget-exhausted`` when the optional time budget ends
    the search early.
    """
    check_property_id(prop)
    check_semantics(sigma)
    check_index(index)
    if not 1 <= max_args <= 7:
        raise ValueError("max_args must be between 1 and 7")
    rng = random.Random(seed)
    deadline = Deadline(time_budget_s) if time_budget_s is not None else None
    tested = 0
    skipped = 0

    def out_of_budget() -> bool:
        if deadline is None:
            return False
        try:
            deadline.check()
            return False
        except BudgetExceededError:
            return True

    def consider(af: ArgumentationFramework) -> PropertyReport | None:
        nonlocal tested, skipped
        result = check_property(af, sigma, index, prop, rng=rng)
        tested += 1
        if result.verdict == "skipped-degenerate":
            skipped += 1
            return None
        if result.verdict == "violated":
            if not reverify(result):
                raise AssertionError("witness failed re-verification")
            result.tested = tested
            result.skipped = skipped
            return result
        return None

    for n in range(1, min(4, max_args) + 1):
        for mask in canonical_digraph_masks(n):
            if out_of_budget():
                return PropertyReport(
                    prop, sigma, index, "budget-exhausted", tested=tested, skipped=skipped
                )
            hit = consider(digraph_from_mask(n, mask))
            if hit is not None:
                return hit

    for _ in range(samples):
        if out_of_budget():
            return PropertyReport(
                prop, sigma, index, "budget-exhausted", tested=tested, skipped=skipped
            )
        hit = consider(random_framework(rng, rng.randint(1, max_args)))
        if hit is not None:
            return hit

    return PropertyReport(
        prop, sigma, index, "holds-on-all-tested", tested=tested, skipped=skipped
    )


def reverify(report: PropertyReport) -> bool:
    """Re-run a violated report's witness through check_property."""
    if report.verdict != "violated" or not report.witness:
        return False
    af = parse_apx(report.witness["apx"])
    iso = None
    if "iso" in report.witness:
        iso = Isomorphism(dict(report.witness["iso"]))
    again = check_property(af, report.semantics, report.index, report.property, iso=iso)
    return again.verdict == "violated"
