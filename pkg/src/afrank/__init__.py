"""Exact workbench for ranking arguments of abstract argumentation
frameworks with cooperative-game power indexes."""

from .framework import (
    ArgSet,
    ArgumentationFramework,
    BudgetExceededError,
    Deadline,
    DEFAULT_MAX_ARGS,
    Isomorphism,
    ParseError,
    SizeLimitError,
    apply_isomorphism,
    attacked_by,
    connected_components,
    direct_attackers,
    disjoint_union,
    framework_from_json,
    parse_apx,
    parse_json,
    serialize,
)
from .semantics import (
    ExtensionFamily,
    Labelling,
    SEMANTICS,
    acceptance_status,
    enumerate_extensions,
    grounded_fixpoint,
    labelling_from_inset,
    labellings,
    out_family,
    satisfies,
)
from .indexes import (
    CharacteristicFunction,
    INDEXES,
    banzhaf,
    characteristic,
    deegan_packel,
    johnston,
    kappa,
    marginal,
    minimal_winning,
    score_all,
    shapley,
)
from .ranking import (
    PIScore,
    Ranking,
    compare,
    greyscale,
    rank,
    rank_framework,
    render_ranking,
    round5,
    scores_from_map,
)
from .properties import (
    PROPERTIES,
    PropertyReport,
    check_property,
    group_compare,
    random_framework,
    search_counterexample,
)
from .solve import RequestError, payload_bytes, solve
from . import fixtures

__version__ = "0.1.0"
