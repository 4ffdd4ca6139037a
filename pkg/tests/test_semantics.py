import random

import pytest

from afrank.framework import ArgumentationFramework
from afrank.properties import random_framework
from afrank.semantics import (
    SEMANTICS,
    acceptance_status,
    enumerate_extensions,
    grounded_fixpoint,
    labelling_from_inset,
    labellings,
    out_family,
    satisfies,
)

import oracles
from expected import FIG9_FAMILIES, FIG9_FAMILY_SIZES


def as_frozensets(family):
    return {frozenset(e.members) for e in family}


# -- fixture families -------------------------------------------------------------

@pytest.mark.parametrize("sigma", SEMANTICS)
def test_fig9_families_match_fixture(fig9, sigma):
    family = enumerate_extensions(fig9, sigma)
    assert as_frozensets(family) == FIG9_FAMILIES[sigma]
    assert len(family) == FIG9_FAMILY_SIZES[sigma]


def test_fig9_family_render_is_canonical(fig9):
    fam = enumerate_extensions(fig9, "complete")
    assert fam.render() == "{a,c},{a,c,d},{a,c,e}"


def test_grounded_fixpoint(fig9, f8a):
    assert set(grounded_fixpoint(fig9).members) == {"a", "c"}
    deadlock = ArgumentationFramework(["a", "b"], [("a", "b"), ("b", "a")])
    assert grounded_fixpoint(deadlock).members == ()
    assert set(grounded_fixpoint(f8a).members) == {"a", "c"}


def test_stable_can_be_empty(selfloop):
    assert len(enumerate_extensions(selfloop, "stable")) == 0


# -- labellings --------------------------------------------------------------------

def test_labelling_from_inset_grounded(fig9):
    lab = labelling_from_inset(fig9, fig9.argset("ac"))
    assert set(lab.in_set.members) == {"a", "c"}
    assert set(lab.out_set.members) == {"b"}
    assert set(lab.undec_set.members) == {"d", "e"}
    assert lab.label("d") == "undec"


def test_labelling_from_inset_empty(fig9):
    lab = labelling_from_inset(fig9, fig9.argset())
    assert lab.out_set.members == ()
    assert set(lab.undec_set.members) == set(fig9.arguments)


def test_labelling_from_inset_stable(fig9):
    lab = labelling_from_inset(fig9, fig9.argset("acd"))
    assert set(lab.out_set.members) == {"b", "e"}
    assert lab.undec_set.members == ()


def test_labelling_soundness_for_reinstatement_semantics(fig9):
    # in arguments have all attackers out; out arguments have an in attacker
    for sigma in ("complete", "grounded", "preferred", "stable"):
        for lab in labellings(fig9, sigma):
            for name in lab.in_set:
                attackers = fig9.attackers_mask(fig9.index(name))
                assert attackers & ~lab.out_set.mask == 0
            for name in lab.out_set:
                attackers = fig9.attackers_mask(fig9.index(name))
                assert attackers & lab.in_set.mask != 0


# -- satisfies ---------------------------------------------------------------------

def test_satisfies_examples(fig9):
    assert satisfies(fig9, fig9.argset("cd"), "admissible")
    assert not satisfies(fig9, fig9.argset("b"), "admissible")
    assert satisfies(fig9, fig9.argset(), "conflict-free")
    assert satisfies(fig9, fig9.argset("ac"), "grounded")
    assert not satisfies(fig9, fig9.argset("acd"), "grounded")
    assert satisfies(fig9, fig9.argset("acd"), "preferred")
    assert not satisfies(fig9, fig9.argset("ac"), "preferred")


@pytest.mark.parametrize("sigma", SEMANTICS)
def test_enumerate_agrees_with_satisfies_filter(fig9, sigma):
    family = {m for m in range(1 << fig9.n) if satisfies(fig9, fig9.argset_from_mask(m), sigma)}
    assert set(enumerate_extensions(fig9, sigma).masks) == family


# -- family invariants ---------------------------------------------------------------

def test_family_inclusion_chain():
    rng = random.Random(5)
    for _ in range(25):
        af = random_framework(rng, rng.randint(1, 5))
        fams = {s: set(enumerate_extensions(af, s).masks) for s in SEMANTICS}
        assert fams["stable"] <= fams["preferred"] <= fams["complete"]
        assert fams["complete"] <= fams["admissible"] <= fams["conflict-free"]
        grounded = grounded_fixpoint(af).mask
        assert grounded in fams["complete"]
        assert all(grounded & ~m == 0 for m in fams["complete"])
        for pref in fams["preferred"]:
            assert not any(other != pref and pref & ~other == 0 for other in fams["complete"])
        for stb in fams["stable"]:
            s = af.argset_from_mask(stb)
            lab = labelling_from_inset(af, s)
            assert lab.undec_set.members == ()


def test_oracle_equivalence_random_sample():
    rng = random.Random(11)
    for _ in range(30):
        af = random_framework(rng, rng.randint(1, 6))
        expected = oracles.families(af.arguments, set(af.attacks))
        for sigma in SEMANTICS:
            assert as_frozensets(enumerate_extensions(af, sigma)) == expected[sigma]


# -- out-sets and acceptance ----------------------------------------------------------

def test_out_family_fig9(fig9):
    com = enumerate_extensions(fig9, "complete")
    outs = out_family(fig9, com)
    assert as_frozensets(outs) == {frozenset("b"), frozenset("be"), frozenset("bd")}
    adm = enumerate_extensions(fig9, "admissible")
    outs = out_family(fig9, adm)
    assert as_frozensets(outs) == {
        frozenset(),
        frozenset("b"),
        frozenset("be"),
        frozenset("bd"),
    }


def test_out_family_of_empty_inset(fig9):
    from afrank.semantics import ExtensionFamily

    fam = ExtensionFamily(fig9, [0])
    assert as_frozensets(out_family(fig9, fam)) == {frozenset()}


def test_acceptance_status(fig9, selfloop):
    assert acceptance_status(fig9, "preferred", "a") == "sceptical"
    assert acceptance_status(fig9, "preferred", "d") == "credulous-only"
    assert acceptance_status(fig9, "complete", "b") == "rejected"
    assert acceptance_status(selfloop, "stable", "x") == "degenerate"
