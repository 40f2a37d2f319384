"""
Runtime configuration.

Layering: dataclass defaults < YAML file < CLI flags. The YAML file is the
one given with ``--config``, else the one named by GAUSS_HOMOTOPY_CONFIG.
"""

import dataclasses
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigError
from .moves import POLICIES, HomotopyPolicy, policy_by_name
from .search import DEFAULT_NODE_CAP, DEFAULT_RANK_SLACK, SearchConfig

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "GAUSS_HOMOTOPY_CONFIG"


# ---------------------------------------------------------------------------
# Configuration data-class
# ---------------------------------------------------------------------------

@dataclass
class HomotopyConfig:
    """Runtime configuration for searches, reports and batch runs."""

    policy: str = "closed"
    derived_moves: bool = True
    rank_slack: int = DEFAULT_RANK_SLACK
    rank_cap: Optional[int] = None  # None = max endpoint rank + rank_slack
    node_cap: int = DEFAULT_NODE_CAP
    emit_certificate: bool = True
    # Height bounds only try bounded search on tower steps up to this rank
    refine_rank_limit: int = 5
    table_trials: int = 20
    selftest_seed: int = 0
    workers: int = 1
    checkpoint_interval: int = 50
    validate_reports: bool = True

    def __post_init__(self) -> None:
        if self.policy not in POLICIES:
            raise ConfigError(f"Unknown policy {self.policy!r}; expected one of {', '.join(POLICIES)}.")
        for name in ("rank_slack", "refine_rank_limit", "table_trials", "selftest_seed"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative, got {getattr(self, name)}.")
        for name in ("node_cap", "workers", "checkpoint_interval"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}.")

    def homotopy_policy(self, name: Optional[str] = None) -> HomotopyPolicy:
        return policy_by_name(name or self.policy, self.derived_moves)

    def search_config(self, policy: Optional[str] = None, rank_cap: Optional[int] = None) -> SearchConfig:
        return SearchConfig(
            policy=self.homotopy_policy(policy),
            rank_cap=rank_cap if rank_cap is not None else self.rank_cap,
            node_cap=self.node_cap,
            emit_certificate=self.emit_certificate,
            rank_slack=self.rank_slack,
        )


def _load_yaml_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as exc:
        raise ConfigError(f"Cannot read config file {path}: {exc}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid YAML in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping, got {type(data).__name__}.")
    return data


def _check_type(name: str, value: Any, default: Any, annotation: Any) -> Any:
    if value is None and (default is None or "Optional" in str(annotation)):
        return value
    expected = type(default) if default is not None else int
    if expected is int and isinstance(value, bool):
        raise ConfigError(f"Config key {name!r} must be an integer, got {value!r}.")
    if not isinstance(value, expected):
        raise ConfigError(f"Config key {name!r} must be {expected.__name__}, got {value!r}.")
    return value


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> HomotopyConfig:
    """Build a HomotopyConfig from defaults, an optional YAML file and overrides.

    ``overrides`` holds explicit CLI flags; keys mapped to None are ignored.
    """
    path = path or os.environ.get(CONFIG_ENV_VAR) or None
    cfg_dict = _load_yaml_config(path) if path else {}
    if path:
        logger.debug("Loaded config from %s", path)

    fields = {f.name: f for f in dataclasses.fields(HomotopyConfig)}
    values: Dict[str, Any] = {}
    for key, value in cfg_dict.items():
        if key not in fields:
            logger.warning("Ignoring unknown config key %r in %s", key, path)
            continue
        f = fields[key]
        values[key] = _check_type(key, value, f.default, f.type)
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    return HomotopyConfig(**values)
