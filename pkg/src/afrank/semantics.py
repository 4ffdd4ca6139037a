"""Labelling-based semantics: predicates, exhaustive enumeration, grounded
fixpoint, acceptance status and out-set families.

All extension sets are in-sets of labellings. The out-set of a labelling is
always the set of arguments attacked by the in-set; the undecided set is
whatever remains. Enumeration is exact brute force over subsets, which keeps
everything oracle-checkable at the sizes this tool accepts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .framework import (
    ArgSet,
    ArgumentationFramework,
    BudgetExceededError,
    _bits,
    _owned,
    _popcount,
)

LABEL_IN = "in"
LABEL_OUT = "out"
LABEL_UNDEC = "undec"
LABELS = (LABEL_IN, LABEL_OUT, LABEL_UNDEC)

SEMANTICS = (
    "conflict-free",
    "admissible",
    "complete",
    "grounded",
    "preferred",
    "stable",
)

ACCEPTANCE_STATUSES = ("sceptical", "credulous-only", "rejected", "degenerate")


def check_semantics(sigma: str) -> str:
    if sigma not in SEMANTICS:
        raise ValueError(f"unknown semantics {sigma!r} (expected one of {', '.join(SEMANTICS)})")
    return sigma


@dataclass(frozen=True)
class Labelling:
    """Total in/out/undec assignment over one framework's arguments."""

    frame: ArgumentationFramework
    in_set: ArgSet
    out_set: ArgSet
    undec_set: ArgSet

    def label(self, name: str) -> str:
        i = self.frame.index(name)
        if self.in_set.mask >> i & 1:
            return LABEL_IN
        if self.out_set.mask >> i & 1:
            return LABEL_OUT
        return LABEL_UNDEC

    @property
    def assignment(self) -> dict[str, str]:
        return {a: self.label(a) for a in self.frame.arguments}


class ExtensionFamily:
    """Deduplicated set of argument subsets, kept in canonical order.

    Canonical order: ascending size, then ascending member-index tuple.
    """

    __slots__ = ("frame", "masks", "_mask_set")

    def __init__(self, frame: ArgumentationFramework, masks: Iterable[int]):
        unique = set(masks)
        self.frame = frame
        self.masks = tuple(sorted(unique, key=lambda m: (_popcount(m), tuple(_bits(m)))))
        self._mask_set = frozenset(unique)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[ArgSet]:
        return (ArgSet(self.frame, m) for m in self.masks)

    def __contains__(self, item) -> bool:
        if isinstance(item, ArgSet):
            _owned(self.frame, item)
            return item.mask in self._mask_set
        return item in self._mask_set

    def contains_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    def members(self) -> tuple[ArgSet, ...]:
        return tuple(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtensionFamily):
            return NotImplemented
        return self.frame == other.frame and self._mask_set == other._mask_set

    def __hash__(self) -> int:
        return hash((self.frame, self._mask_set))

    def render(self) -> str:
        return ",".join(ArgSet(self.frame, m).render() for m in self.masks)

    def __repr__(self) -> str:
        return f"ExtensionFamily({self.render()})"


def labelling_from_inset(af: ArgumentationFramework, e: ArgSet) -> Labelling:
    """Labelling with in = E, out = E+, undec = the rest."""
    _owned(af, e)
    out = 0
    for i in _bits(e.mask):
        out |= af.targets_mask(i)
    out &= ~e.mask
    undec = af.full_mask & ~(e.mask | out)
    return Labelling(af, e, ArgSet(af, out), ArgSet(af, undec))


# -- subset predicates (bitmask level) ----------------------------------------

def _splus(af: ArgumentationFramework, s: int) -> int:
    out = 0
    for i in _bits(s):
        out |= af.targets_mask(i)
    return out


def _is_conflict_free(af: ArgumentationFramework, s: int) -> bool:
    # no attack with both endpoints inside s (covers self-attacks)
    return _splus(af, s) & s == 0


def _is_admissible(af: ArgumentationFramework, s: int) -> bool:
    if not _is_conflict_free(af, s):
        return False
    splus = _splus(af, s)
    attackers = 0
    for i in _bits(s):
        attackers |= af.attackers_mask(i)
    return attackers & ~splus == 0


def _is_complete(af: ArgumentationFramework, s: int) -> bool:
    if not _is_admissible(af, s):
        return False
    splus = _splus(af, s)
    # every argument whose attackers are all out must already be in
    for i in range(af.n):
        if s >> i & 1:
            continue
        if af.attackers_mask(i) & ~splus == 0:
            return False
    return True


def _is_stable(af: ArgumentationFramework, s: int) -> bool:
    return _is_complete(af, s) and (s | _splus(af, s)) == af.full_mask


def grounded_fixpoint(af: ArgumentationFramework) -> ArgSet:
    """Least fixpoint: accept arguments whose attackers are all defeated."""
    in_mask = 0
    out_mask = 0
    while True:
        new_in = in_mask
        for i in range(af.n):
            if new_in >> i & 1:
                continue
            if af.attackers_mask(i) & ~out_mask == 0:
                new_in |= 1 << i
        if new_in == in_mask:
            return ArgSet(af, in_mask)
        in_mask = new_in
        out_mask = _splus(af, in_mask)


def _complete_masks(af: ArgumentationFramework, deadline=None) -> list[int]:
    masks = []
    for s in range(1 << af.n):
        if deadline is not None and s & 1023 == 0:
            deadline.check()
        if _is_complete(af, s):
            masks.append(s)
    return masks


def enumerate_extensions(
    af: ArgumentationFramework, sigma: str, deadline=None
) -> ExtensionFamily:
    """All in-sets of labellings satisfying ``sigma``, in canonical order.

    Preferred extensions are the inclusion-maximal complete in-sets; the
    grounded extension is the unique inclusion-minimal one and is returned
    as a one-member family.
    """
    check_semantics(sigma)
    if sigma == "grounded":
        return ExtensionFamily(af, [grounded_fixpoint(af).mask])
    if sigma in ("preferred", "stable", "complete"):
        complete = _complete_masks(af, deadline)
        if sigma == "complete":
            return ExtensionFamily(af, complete)
        if sigma == "stable":
            full = af.full_mask
            return ExtensionFamily(
                af, [s for s in complete if (s | _splus(af, s)) == full]
            )
        maximal = [
            s
            for s in complete
            if not any(other != s and s & ~other == 0 for other in complete)
        ]
        return ExtensionFamily(af, maximal)

    predicate = _is_conflict_free if sigma == "conflict-free" else _is_admissible
    masks = []
    for s in range(1 << af.n):
        if deadline is not None and s & 1023 == 0:
            deadline.check()
        if predicate(af, s):
            masks.append(s)
    return ExtensionFamily(af, masks)


def satisfies(af: ArgumentationFramework, e: ArgSet, sigma: str) -> bool:
    """Does the labelling induced by in-set ``e`` satisfy ``sigma``?"""
    _owned(af, e)
    check_semantics(sigma)
    s = e.mask
    if sigma == "conflict-free":
        return _is_conflict_free(af, s)
    if sigma == "admissible":
        return _is_admissible(af, s)
    if sigma == "complete":
        return _is_complete(af, s)
    if sigma == "stable":
        return _is_stable(af, s)
    if sigma == "grounded":
        return s == grounded_fixpoint(af).mask
    return e.mask in enumerate_extensions(af, "preferred")._mask_set


def out_family(af: ArgumentationFramework, family: ExtensionFamily) -> ExtensionFamily:
    """Deduplicated family of out-sets E+ of the given extensions."""
    if family.frame != af:
        raise ValueError("family does not belong to this framework")
    return ExtensionFamily(af, [_splus(af, m) for m in family.masks])


def acceptance_status(af: ArgumentationFramework, sigma: str, name: str) -> str:
    """Sceptical / credulous-only / rejected status of one argument.

    With an empty extension family (possible for stable) every argument is
    reported ``degenerate`` and nothing counts as sceptically accepted.
    """
    bit = 1 << af.index(name)
    family = enumerate_extensions(af, sigma)
    if not family.masks:
        return "degenerate"
    hits = sum(1 for m in family.masks if m & bit)
    if hits == len(family.masks):
        return "sceptical"
    if hits > 0:
        return "credulous-only"
    return "rejected"


def labellings(af: ArgumentationFramework, sigma: str, deadline=None) -> list[Labelling]:
    """The labellings whose in-sets form ``enumerate_extensions(af, sigma)``."""
    family = enumerate_extensions(af, sigma, deadline)
    return [labelling_from_inset(af, ArgSet(af, m)) for m in family.masks]
