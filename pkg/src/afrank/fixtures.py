"""Named example frameworks shipped with the package.

FIG9 is the five-argument running example used throughout the test suite:
``a`` is unattacked and attacks ``b``; ``b`` attacks ``c`` and ``d``; ``d``
and ``e`` attack each other and both attack ``b``. F8A and F8B are two
small reinstatement/rebuttal shapes, and SELFLOOP is the one-argument
framework with a self-attack (it has no stable extension).
"""

from __future__ import annotations

from .framework import ArgumentationFramework, parse_apx

FIG9_APX = """\
arg(a).
arg(b).
arg(c).
arg(d).
arg(e).
att(a,b).
att(b,c).
att(b,d).
att(d,b).
att(e,b).
att(d,e).
att(e,d)."""

F8A_APX = """\
arg(a).
arg(b).
arg(c).
att(a,b).
att(b,a).
att(c,b)."""

F8B_APX = """\
arg(a).
arg(b).
arg(c).
att(b,a).
att(b,c).
att(c,b)."""

SELFLOOP_APX = """\
arg(x).
att(x,x)."""

EMPTY_APX = ""


def fig9() -> ArgumentationFramework:
    return parse_apx(FIG9_APX)


def f8a() -> ArgumentationFramework:
    return parse_apx(F8A_APX)


def f8b() -> ArgumentationFramework:
    return parse_apx(F8B_APX)


def selfloop() -> ArgumentationFramework:
    return parse_apx(SELFLOOP_APX)
