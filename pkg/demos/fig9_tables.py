#!/usr/bin/env python3
"""Walkthrough: score and rank the five-argument example framework.

Parses the FIG9 fixture, enumerates every extension family, then prints the
pi_in/pi_out table and the lexicographic ranking for each power index and
semantics, the way the interactive tool's output panel shows them.

Run: python demos/fig9_tables.py
"""

from afrank import (
    INDEXES,
    SEMANTICS,
    enumerate_extensions,
    grounded_fixpoint,
    greyscale,
    rank_framework,
    render_ranking,
)
from afrank.fixtures import fig9

af = fig9()
print("framework:", ", ".join(af.arguments))
print("attacks:  ", ", ".join(f"{s}->{t}" for s, t in af.attacks))
print()

# Every labelling-based extension family, exactly enumerated.
print("extension families")
for sigma in SEMANTICS:
    family = enumerate_extensions(af, sigma)
    print(f"  {sigma:>14} ({len(family):2d}): {family.render()}")
print(f"  grounded fixpoint: {grounded_fixpoint(af).render()}")
print()

# The four power indexes over the in- and out-games. Deegan-Packel is
# omitted for conflict-free/admissible: the empty set is the only minimal
# winning coalition there, so every argument scores zero.
for index in INDEXES:
    print(f"== {index} ==")
    for sigma in ("conflict-free", "admissible", "complete", "preferred"):
        if index == "deegan-packel" and sigma in ("conflict-free", "admissible"):
            continue
        scores, ranking = rank_framework(af, sigma, index)
        print(f"  {sigma}")
        for s in sorted(scores, key=lambda s: s.argument):
            print(f"    {s.argument}  pi_in={s.pi_in_5dp!s:>9}  pi_out={s.pi_out_5dp!s:>9}")
        print(f"    ranking: {render_ranking(ranking)}")
    print()

# Greyscale shades drive the canvas colouring: 1.0 is the lightest (top
# class), 0.0 the darkest.
_, ranking = rank_framework(af, "complete", "shapley")
print("greyscale for complete/shapley:", greyscale(ranking))
