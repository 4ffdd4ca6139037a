"""Request/response layer shared by the CLI and the HTTP service.

A solve request carries the framework itself plus the task parameters; the
response payload is a plain JSON-serializable dict. Both front ends emit
the canonical serialization produced by :func:`payload_bytes`, so identical
requests yield byte-identical payloads no matter which entry point handled
them. Timing is attached outside the payload.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .framework import (
    ArgumentationFramework,
    Deadline,
    DEFAULT_MAX_ARGS,
    ParseError,
    SizeLimitError,
    framework_from_json,
)
from .indexes import INDEXES, score_all
from .ranking import PIScore, Ranking, greyscale, rank, render_ranking, scores_from_map
from .properties import PROPERTIES, check_property
from .semantics import (
    SEMANTICS,
    check_semantics,
    enumerate_extensions,
    labellings,
)

TASKS = ("extensions", "labellings", "rank", "properties")


class RequestError(ValueError):
    """Malformed solve request (bad shape, unknown task, missing field)."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise RequestError(message)


def parse_request(request: dict, max_args_cap: int = DEFAULT_MAX_ARGS):
    """Validate a request dict; returns (af, sigma, task, index, options)."""
    _require(isinstance(request, dict), "request body must be a JSON object")
    task = request.get("task")
    _require(task in TASKS, f"task must be one of {', '.join(TASKS)}")
    sigma = request.get("semantics")
    _require(
        sigma in SEMANTICS, f"semantics must be one of {', '.join(SEMANTICS)}"
    )
    index = request.get("index")
    if task == "rank":
        _require(index is not None, "task 'rank' requires an index")
    if index is None and task == "properties":
        index = "shapley"
    if index is not None:
        _require(index in INDEXES, f"index must be one of {', '.join(INDEXES)}")

    options = request.get("options") or {}
    _require(isinstance(options, dict), "options must be an object")
    exact = bool(options.get("exact", False))
    max_args = options.get("max_args", max_args_cap)
    _require(
        isinstance(max_args, int) and max_args > 0,
        "options.max_args must be a positive integer",
    )
    max_args = min(max_args, max_args_cap)

    framework = request.get("framework")
    _require(framework is not None, "missing framework")
    af = framework_from_json(framework, max_args=max_args)

    prop = request.get("property", "all")
    if task == "properties":
        _require(
            prop == "all" or prop in PROPERTIES,
            f"property must be 'all' or one of {', '.join(PROPERTIES)}",
        )
    return af, sigma, task, index, {"exact": exact, "property": prop}


def _frac_str(x: Fraction) -> str:
    return str(x)


def _render_scores(
    scores: list[PIScore], ranking: Ranking, exact: bool
) -> list[dict]:
    rows = []
    by_name = {s.argument: s for s in scores}
    for name in ranking.arguments:
        s = by_name[name]
        row = {
            "argument": name,
            "pi_in": str(s.pi_in_5dp),
            "pi_out": str(s.pi_out_5dp),
            "class": ranking.class_index(name),
        }
        if exact:
            row["pi_in_exact"] = _frac_str(s.pi_in)
            row["pi_out_exact"] = _frac_str(s.pi_out)
        rows.append(row)
    return rows


def solve(
    request: dict,
    max_args_cap: int = DEFAULT_MAX_ARGS,
    deadline: Deadline | None = None,
) -> dict:
    """Execute a request; returns the response payload (without timing)."""
    af, sigma, task, index, options = parse_request(request, max_args_cap)
    warnings: list[str] = []
    if af.n == 0:
        warnings.append("empty framework")

    if task == "extensions":
        family = enumerate_extensions(af, sigma, deadline)
        if len(family) == 0:
            warnings.append(f"no {sigma} extension")
        result = {
            "count": len(family),
            "extensions": [list(e.members) for e in family],
            "rendered": family.render(),
        }
    elif task == "labellings":
        labs = labellings(af, sigma, deadline)
        if not labs:
            warnings.append(f"no {sigma} extension")
        result = {
            "labellings": [
                {
                    "in": list(lab.in_set.members),
                    "out": list(lab.out_set.members),
                    "undec": list(lab.undec_set.members),
                }
                for lab in labs
            ]
        }
    elif task == "rank":
        family = enumerate_extensions(af, sigma, deadline)
        if len(family) == 0:
            warnings.append(
                f"degenerate input: no {sigma} extension, all scores are zero"
            )
        if index == "deegan-packel" and sigma in ("conflict-free", "admissible"):
            warnings.append(
                "deegan-packel is uninformative for conflict-free and admissible "
                "semantics: the empty set is the only minimal winning coalition, "
                "so every argument scores 0"
            )
        values = score_all(af, sigma, index, deadline)
        scores = scores_from_map(values)
        ranking = rank(scores, exact=options["exact"])
        result = {
            "scores": _render_scores(scores, ranking, options["exact"]),
            "classes": [list(c) for c in ranking.classes],
            "ranking": render_ranking(ranking),
            "greyscale": greyscale(ranking),
        }
    else:  # properties
        props = PROPERTIES if options["property"] == "all" else (options["property"],)
        reports = []
        for prop in props:
            if deadline is not None:
                deadline.check()
            reports.append(check_property(af, sigma, index, prop).to_json())
        result = {"reports": reports}

    return {
        "task": task,
        "semantics": sigma,
        "index": index,
        "result": result,
        "warnings": warnings,
    }


def payload_bytes(payload: dict) -> bytes:
    """Canonical byte serialization of a payload, timing excluded."""
    trimmed = {k: v for k, v in payload.items() if k != "timing_ms"}
    return json.dumps(trimmed, sort_keys=True, separators=(",", ":")).encode("utf-8")


__all__ = [
    "TASKS",
    "RequestError",
    "ParseError",
    "SizeLimitError",
    "parse_request",
    "solve",
    "payload_bytes",
]
