#!/usr/bin/env python3
"""Walkthrough: the ranking-property catalogue and counterexample search.

Checks all nine properties on the FIG9 fixture, compares two argument
groups, then hunts for small frameworks violating cardinality precedence
and quality precedence (they always exist) and re-verifies the witnesses.

Run: python demos/property_tour.py
"""

from afrank import check_property, group_compare, rank_framework, search_counterexample
from afrank.fixtures import fig9
from afrank.properties import PROPERTIES, reverify

af = fig9()

print("property verdicts on FIG9 (complete semantics, shapley)")
for prop in PROPERTIES:
    report = check_property(af, "complete", "shapley", prop)
    line = f"  {prop:>24}: {report.verdict}"
    if report.witness:
        line += f"  (pair {', '.join(report.witness['pair'])})"
    print(line)
print()

# Group comparison: match the weaker group injectively into the stronger.
_, ranking = rank_framework(af, "conflict-free", "shapley")
print("conflict-free/shapley ranking:", " > ".join("=".join(c) for c in ranking.classes))
print("{a,c} vs {d,b}:", group_compare(ranking, af.argset("ac"), af.argset("db")))
print("{a} vs {a}:   ", group_compare(ranking, af.argset("a"), af.argset("a")))
print()

# Cardinality and quality precedence fail for this ranking semantics; the
# search sweeps every digraph shape with up to four arguments, then seeded
# random ones, and returns the first violation it can re-verify.
for prop in ("cardinality-precedence", "quality-precedence"):
    report = search_counterexample(prop, "conflict-free", "shapley", max_args=6, samples=500, seed=1)
    print(f"{prop}: {report.verdict} after {report.tested} candidates")
    print(f"  witness pair {', '.join(report.witness['pair'])}, re-verified: {reverify(report)}")
    print("  " + report.witness["apx"].replace("\n", " "))
