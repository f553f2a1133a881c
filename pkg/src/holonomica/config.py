import os
from dataclasses import dataclass, field

MAX_DEGREE_ENV = "HOLONOMICA_MAX_DEGREE"


def _env_max_degree():
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None or not raw.strip():
        return 10000
    return int(raw)


@dataclass(frozen=True)
class Defaults:
    """Knobs shared by the library and the CLI."""

    series_order: int = 120
    horizon: int = 500
    max_degree: int = field(default_factory=_env_max_degree)


def defaults() -> Defaults:
    # rebuilt on each call so the environment variable is honoured at runtime
    return Defaults()
