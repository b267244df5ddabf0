"""Indirect QAOA for small job-shop scheduling instances."""

import json

from ._iqaoa import (
    BudgetError,
    Instance,
    IoError,
    ParseError,
    ValidationError,
    __version__,
    bits_to_rank,
    decode,
    enumerate_distribution,
    evaluate_objective,
    fixtures,
    load_fixture,
    lower_quartile,
    objective_from_makespans,
    qubit_count,
    rank_of,
    run_circuit,
    sample,
    total_vector_count,
    unrank,
)
from . import _iqaoa


def default_config():
    """Genetic-search settings as a plain dict."""
    return json.loads(_iqaoa._default_config_json())


def run_ga(instance, label="instance", **overrides):
    """Optimize circuit angles; keyword overrides use the keys of default_config()."""
    config = default_config()
    unknown = set(overrides) - set(config)
    if unknown:
        raise TypeError(f"unknown config keys: {sorted(unknown)}")
    config.update(overrides)
    return json.loads(_iqaoa._run_ga_json(instance, json.dumps(config), label))


__all__ = [
    "BudgetError",
    "Instance",
    "IoError",
    "ParseError",
    "ValidationError",
    "bits_to_rank",
    "decode",
    "default_config",
    "enumerate_distribution",
    "evaluate_objective",
    "fixtures",
    "load_fixture",
    "lower_quartile",
    "objective_from_makespans",
    "qubit_count",
    "rank_of",
    "run_circuit",
    "run_ga",
    "sample",
    "total_vector_count",
    "unrank",
]
