"""Fixture names addressable from experiment configs."""

import re
from typing import Callable, Dict, List, Tuple

from inexact_euler.core import ProblemSpec
from inexact_euler.exceptions import ConfigurationError
from inexact_euler.problems.fixtures import (
    adversarial_pair,
    holder_time_probe,
    linear_autonomous,
    lipschitz_state_probe,
    stability_problem,
)

_NAME_PATTERN = re.compile(r"^\s*([a-z]+)\s*(?:\(([^)]*)\))?\s*$")

FIXTURE_NAMES = ("linear", "holder", "state", "adversarial", "stability")


def parse_fixture_name(name: str) -> Tuple[str, List[float]]:
    """
    Split "holder(0.25)" into ("holder", [0.25]).

    Raises:
        ConfigurationError: If the name is malformed or unknown
    """
    match = _NAME_PATTERN.match(name)
    if match is None or match.group(1) not in FIXTURE_NAMES:
        raise ConfigurationError(f"unknown fixture '{name}'; expected one of {', '.join(FIXTURE_NAMES)}")
    raw_args = match.group(2)
    try:
        args = [float(x) for x in raw_args.split(",")] if raw_args and raw_args.strip() else []
    except ValueError:
        raise ConfigurationError(f"fixture arguments of '{name}' must be numbers")
    return match.group(1), args


def resolve_fixture(
    name: str, a: float = 0.0, b: float = 1.0, K: float = 1.0, L: float = 1.0
) -> ProblemSpec:
    """
    Build the fixture a config names.

    `adversarial(delta)` resolves to the +delta member of the pair.

    Args:
        name: One of linear, holder(rho), state(d), adversarial(delta), stability(re,im)
        a: Start time
        b: End time (ignored by stability, which runs on [0, b] truncated)
        K: Growth constant for fixtures that take one
        L: Lipschitz / Hölder constant for fixtures that take one

    Raises:
        ConfigurationError: If the name or its arguments are invalid

    Returns:
        ProblemSpec
    """
    kind, args = parse_fixture_name(name)
    builders: Dict[str, Tuple[int, Callable[[], ProblemSpec]]] = {
        "linear": (0, lambda: linear_autonomous(K, L, a, b)),
        "holder": (1, lambda: holder_time_probe(args[0], L, a, b)),
        "state": (1, lambda: lipschitz_state_probe(K, L, int(args[0]), a, b)),
        "adversarial": (1, lambda: adversarial_pair(args[0], a, b)[0]),
        "stability": (2, lambda: stability_problem(complex(args[0], args[1]), horizon=b)),
    }
    arity, build = builders[kind]
    if len(args) != arity:
        raise ConfigurationError(f"fixture '{kind}' takes {arity} argument(s), got {len(args)}")
    return build()
