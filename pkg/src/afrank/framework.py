"""Data model for abstract argumentation frameworks.

A framework is a finite directed graph: a list of named arguments plus a
binary attack relation between them. Argument order is first-appearance
order and doubles as the bit index of the canonical bitset representation
used everywhere downstream, so all derived output is reproducible.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_MAX_ARGS = 20

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class ParseError(ValueError):
    """Raised on malformed or inconsistent input text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitError(ValueError):
    """Raised when a framework exceeds the configured argument cap."""


class BudgetExceededError(RuntimeError):
    """Raised when a cooperative deadline expires mid-computation."""


class Deadline:
    """Wall-clock budget checked cooperatively inside long loops."""

    __slots__ = ("expires_at",)

    def __init__(self, seconds: float):
        self.expires_at = time.monotonic() + seconds

    def check(self) -> None:
        if time.monotonic() > self.expires_at:
            raise BudgetExceededError("computation exceeded its time budget")


def _check_id(token: str) -> str:
    if not isinstance(token, str) or not _ID_RE.match(token):
        raise ValueError(f"invalid argument id {token!r} (need [A-Za-z0-9_]+)")
    return token


class ArgumentationFramework:
    """Immutable framework: argument tuple plus attack-pair tuple.

    Self-attacks are allowed. Duplicate arguments, duplicate attacks and
    attacks naming undeclared arguments are rejected at construction.
    """

    __slots__ = (
        "arguments",
        "attacks",
        "max_args",
        "_index",
        "_attack_set",
        "_attackers",
        "_targets",
        "_hash",
    )

    def __init__(
        self,
        arguments: Iterable[str],
        attacks: Iterable[tuple[str, str]] = (),
        max_args: int = DEFAULT_MAX_ARGS,
    ):
        args = tuple(_check_id(a) for a in arguments)
        if len(set(args)) != len(args):
            raise ValueError("duplicate argument ids")
        if len(args) > max_args:
            raise SizeLimitError(
                f"{len(args)} arguments exceed the configured maximum of {max_args}"
            )
        index = {a: i for i, a in enumerate(args)}
        atts = []
        seen = set()
        for src, dst in attacks:
            if src not in index or dst not in index:
                missing = src if src not in index else dst
                raise ValueError(f"attack endpoint {missing!r} is not a declared argument")
            if (src, dst) in seen:
                raise ValueError(f"duplicate attack ({src},{dst})")
            seen.add((src, dst))
            atts.append((src, dst))

        self.arguments = args
        self.attacks = tuple(atts)
        self.max_args = max_args
        self._index = index
        self._attack_set = frozenset(atts)
        attackers = [0] * len(args)
        targets = [0] * len(args)
        for src, dst in atts:
            attackers[index[dst]] |= 1 << index[src]
            targets[index[src]] |= 1 << index[dst]
        self._attackers = tuple(attackers)
        self._targets = tuple(targets)
        self._hash = hash((args, self._attack_set))

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.arguments)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown argument {name!r}") from None

    def has_attack(self, src: str, dst: str) -> bool:
        return (src, dst) in self._attack_set

    def attackers_mask(self, i: int) -> int:
        return self._attackers[i]

    def targets_mask(self, i: int) -> int:
        return self._targets[i]

    # -- ArgSet construction ----------------------------------------------

    def argset(self, members: Iterable[str] = ()) -> ArgSet:
        mask = 0
        for name in members:
            mask |= 1 << self.index(name)
        return ArgSet(self, mask)

    def argset_from_mask(self, mask: int) -> ArgSet:
        if mask < 0 or mask > self.full_mask:
            raise ValueError("mask outside this framework's argument range")
        return ArgSet(self, mask)

    def empty_set(self) -> ArgSet:
        return ArgSet(self, 0)

    def full_set(self) -> ArgSet:
        return ArgSet(self, self.full_mask)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.arguments == other.arguments and self._attack_set == other._attack_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ArgumentationFramework({list(self.arguments)!r}, {list(self.attacks)!r})"

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("ArgumentationFramework is immutable")
        super().__setattr__(name, value)


class ArgSet:
    """A subset of one framework's arguments, stored as a bitmask.

    Equality is member-set equality within the same framework.
    """

    __slots__ = ("frame", "mask")

    def __init__(self, frame: ArgumentationFramework, mask: int):
        super().__setattr__("frame", frame)
        super().__setattr__("mask", mask)

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(self.frame.arguments[i] for i in _bits(self.mask))

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.frame.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __len__(self) -> int:
        return _popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __le__(self, other: ArgSet) -> bool:
        _same_frame(self, other)
        return self.mask & ~other.mask == 0

    def union(self, other: ArgSet) -> ArgSet:
        _same_frame(self, other)
        return ArgSet(self.frame, self.mask | other.mask)

    def intersection(self, other: ArgSet) -> ArgSet:
        _same_frame(self, other)
        return ArgSet(self.frame, self.mask & other.mask)

    def difference(self, other: ArgSet) -> ArgSet:
        _same_frame(self, other)
        return ArgSet(self.frame, self.mask & ~other.mask)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgSet):
            return NotImplemented
        return self.frame == other.frame and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.frame, self.mask))

    def __setattr__(self, name, value):
        raise AttributeError("ArgSet is immutable")

    def render(self) -> str:
        return "{" + ",".join(self.members) + "}"

    def __repr__(self) -> str:
        return f"ArgSet({self.render()})"


@dataclass(frozen=True)
class Isomorphism:
    """A bijective renaming of arguments, applied via apply_isomorphism."""

    mapping: dict[str, str]

    def inverse(self) -> "Isomorphism":
        inv = {v: k for k, v in self.mapping.items()}
        if len(inv) != len(self.mapping):
            raise ValueError("mapping is not injective")
        return Isomorphism(inv)

    def __call__(self, name: str) -> str:
        return self.mapping[name]


# -- bit helpers ------------------------------------------------------------

try:  # int.bit_count is 3.10's fast path
    _popcount = int.bit_count  # type: ignore[attr-defined]
except AttributeError:  # pragma: no cover
    def _popcount(x: int) -> int:
        return bin(x).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _same_frame(a: ArgSet, b: ArgSet) -> None:
    if a.frame != b.frame:
        raise ValueError("ArgSets belong to different frameworks")


def _owned(af: ArgumentationFramework, s: ArgSet) -> None:
    if s.frame != af:
        raise ValueError("ArgSet does not belong to this framework")


# -- structural operations ---------------------------------------------------

def attacked_by(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    """Arguments attacked by at least one member of ``s`` (the set S+)."""
    _owned(af, s)
    out = 0
    for i in _bits(s.mask):
        out |= af.targets_mask(i)
    return ArgSet(af, out)


def direct_attackers(af: ArgumentationFramework, name: str) -> ArgSet:
    """The set of arguments attacking ``name`` directly."""
    return ArgSet(af, af.attackers_mask(af.index(name)))


def apply_isomorphism(af: ArgumentationFramework, iso: Isomorphism) -> ArgumentationFramework:
    """Rename every argument through ``iso``, preserving attack structure."""
    mapping = iso.mapping
    images = [mapping.get(a) for a in af.arguments]
    if any(img is None for img in images):
        raise ValueError("mapping is not total on the framework's arguments")
    if len(set(images)) != len(images):
        raise ValueError("mapping is not injective")
    renamed_args = [_check_id(img) for img in images]
    renamed_atts = [(mapping[s], mapping[t]) for s, t in af.attacks]
    return ArgumentationFramework(renamed_args, renamed_atts, max_args=af.max_args)


def connected_components(af: ArgumentationFramework) -> list[ArgumentationFramework]:
    """Partition by weak (undirected) connectivity.

    Components are ordered by their smallest argument index in ``af``;
    each inherits the induced attacks and the parent's relative argument
    order.
    """
    n = af.n
    neighbour = [af.attackers_mask(i) | af.targets_mask(i) for i in range(n)]
    seen = 0
    components = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= neighbour[i]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        names = [af.arguments[i] for i in _bits(comp)]
        member = set(names)
        atts = [(s, t) for s, t in af.attacks if s in member]
        components.append(ArgumentationFramework(names, atts, max_args=af.max_args))
    return components


def disjoint_union(
    af1: ArgumentationFramework, af2: ArgumentationFramework
) -> ArgumentationFramework:
    """Union of two frameworks over disjoint argument-id sets."""
    clash = set(af1.arguments) & set(af2.arguments)
    if clash:
        raise ValueError(f"argument ids occur in both frameworks: {sorted(clash)}")
    return ArgumentationFramework(
        af1.arguments + af2.arguments,
        af1.attacks + af2.attacks,
        max_args=max(af1.max_args, af2.max_args),
    )


# -- text formats -------------------------------------------------------------

_TOKEN_RE = re.compile(r"arg|att|[A-Za-z0-9_]+|[(),.]|\S")


def parse_apx(text: str, max_args: int = DEFAULT_MAX_ARGS) -> ArgumentationFramework:
    """Parse ``arg(x).`` / ``att(x,y).`` facts into a framework.

    Whitespace and newlines between tokens are insignificant; lines whose
    first non-blank character is ``%`` are comments. Arguments must be
    declared before they are attacked; duplicates are rejected.
    """
    tokens: list[tuple[str, int]] = []  # (token, line number)
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("%"):
            continue
        for tok in _TOKEN_RE.findall(line):
            tokens.append((tok, lineno))

    args: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    attack_set: set[tuple[str, str]] = set()

    pos = 0

    def expect(symbol: str, line: int) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != symbol:
            found = tokens[pos][0] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {symbol!r}, found {found!r}", line)
        pos += 1

    def expect_id(line: int) -> str:
        nonlocal pos
        if pos >= len(tokens) or not _ID_RE.match(tokens[pos][0]):
            found = tokens[pos][0] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected an argument id, found {found!r}", line)
        name = tokens[pos][0]
        pos += 1
        return name

    while pos < len(tokens):
        head, line = tokens[pos]
        if head == "arg":
            pos += 1
            expect("(", line)
            name = expect_id(line)
            expect(")", line)
            expect(".", line)
            if name in declared:
                raise ParseError(f"duplicate declaration of argument {name!r}", line)
            declared.add(name)
            args.append(name)
            if len(args) > max_args:
                raise SizeLimitError(
                    f"{len(args)} arguments exceed the configured maximum of {max_args}"
                )
        elif head == "att":
            pos += 1
            expect("(", line)
            src = expect_id(line)
            expect(",", line)
            dst = expect_id(line)
            expect(")", line)
            expect(".", line)
            if src not in declared:
                raise ParseError(f"undeclared argument {src!r} in att", line)
            if dst not in declared:
                raise ParseError(f"undeclared argument {dst!r} in att", line)
            if (src, dst) in attack_set:
                raise ParseError(f"duplicate attack ({src},{dst})", line)
            attack_set.add((src, dst))
            attacks.append((src, dst))
        else:
            raise ParseError(f"expected 'arg' or 'att' fact, found {head!r}", line)

    return ArgumentationFramework(args, attacks, max_args=max_args)


def serialize(af: ArgumentationFramework, format: str = "apx") -> str:
    """Render a framework as APX facts or as a JSON object."""
    if format == "apx":
        facts = [f"arg({a})." for a in af.arguments]
        facts += [f"att({s},{t})." for s, t in af.attacks]
        return "\n".join(facts)
    if format == "json":
        obj = {
            "arguments": list(af.arguments),
            "attacks": [list(pair) for pair in af.attacks],
        }
        return json.dumps(obj, separators=(",", ":"))
    raise ValueError(f"unknown format {format!r} (expected 'apx' or 'json')")


def parse_json(text: str, max_args: int = DEFAULT_MAX_ARGS) -> ArgumentationFramework:
    """Parse the JSON form produced by :func:`serialize`."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return framework_from_json(obj, max_args=max_args)


def framework_from_json(obj, max_args: int = DEFAULT_MAX_ARGS) -> ArgumentationFramework:
    """Build a framework from a decoded ``{"arguments": [...], "attacks": [...]}``."""
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object with 'arguments' and 'attacks'")
    args = obj.get("arguments")
    atts = obj.get("attacks", [])
    if not isinstance(args, list):
        raise ParseError("'arguments' must be a list of strings")
    if not isinstance(atts, list):
        raise ParseError("'attacks' must be a list of [attacker, target] pairs")
    pairs = []
    for item in atts:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise ParseError(f"bad attack entry {item!r}")
        pairs.append((item[0], item[1]))
    try:
        return ArgumentationFramework(args, pairs, max_args=max_args)
    except SizeLimitError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
