"""
Configuration management for g2lts

Settings are nested JSON sections addressed with dotted keys such as
``tolerances.membership``.  A partial ``config.json`` overrides the defaults
key by key and ``G2LTS_TOL`` overrides the membership tolerance last.
"""

import copy
import json
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, MutableMapping, Optional

from ..utils.logger import logger
from ..utils.validators import ensure_positive_tol


def _deep_merge(target: MutableMapping[str, Any], source: Mapping[str, Any], prefix: str = "") -> None:
    for key, value in source.items():
        current = target.get(key)
        if isinstance(current, dict) and isinstance(value, Mapping):
            _deep_merge(current, value, f"{prefix}{key}.")
        else:
            if key not in target:
                logger.debug(f"New configuration key {prefix}{key}")
            target[key] = copy.deepcopy(value)


class ConfigManager:
    """Tolerances, sampling, logging and output settings of the library."""

    ENV_TOLERANCE = "G2LTS_TOL"

    DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
        "tolerances": {
            "membership": 1e-8,
            "eigen": 1e-10,
            "cluster": 1e-6,
            "closure": 1e-9,
            "frame": 1e-10,
        },
        "sampling": {"seed": 0, "samples": 200, "geodesics": 20},
        "logging": {"enabled": False, "level": "INFO", "log_file": "g2lts.log", "max_log_size_mb": 10},
        "output": {"significant_digits": 17, "indent": 2},
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Args:
            config_path: JSON file to read (``config.json`` in the working directory by default)
        """
        self.config_path = Path(config_path or "config.json")
        self.config: Dict[str, Any] = copy.deepcopy(self.DEFAULT_CONFIG)
        self.load()

    def load(self) -> None:
        """Merge the config file over the defaults, then apply the environment override."""
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        if not self.config_path.exists():
            logger.debug(f"No config file at {self.config_path}, using defaults")
        else:
            try:
                data = json.loads(self.config_path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as e:
                logger.error(f"Ignoring config file {self.config_path}: {e}")
            else:
                if isinstance(data, dict):
                    _deep_merge(self.config, data)
                    self._check_tolerances()
                    logger.info(f"Loaded configuration from {self.config_path}")
                else:
                    logger.error(f"Ignoring config file {self.config_path}: top level is not an object")
        self._apply_environment()

    def _check_tolerances(self) -> None:
        tolerances = self.config.get("tolerances")
        if not isinstance(tolerances, dict):
            logger.warning("tolerances must be an object; using the defaults")
            self.config["tolerances"] = copy.deepcopy(self.DEFAULT_CONFIG["tolerances"])
            return
        for name, default in self.DEFAULT_CONFIG["tolerances"].items():
            try:
                tolerances[name] = ensure_positive_tol(tolerances.get(name, default))
            except (TypeError, ValueError) as e:
                logger.warning(f"tolerances.{name}: {e}; using {default}")
                tolerances[name] = default

    def _apply_environment(self) -> None:
        raw = os.environ.get(self.ENV_TOLERANCE)
        if raw is None:
            return
        try:
            value = ensure_positive_tol(raw)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring {self.ENV_TOLERANCE}={raw!r}: not a positive number")
            return
        self.config["tolerances"]["membership"] = value
        logger.info(f"Membership tolerance {value} from {self.ENV_TOLERANCE}")

    def save(self) -> None:
        """Write the current settings as JSON."""
        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            self.config_path.write_text(json.dumps(self.config, indent=2), encoding="utf-8")
        except OSError as e:
            logger.error(f"Could not save configuration to {self.config_path}: {e}")
            return
        logger.info(f"Saved configuration to {self.config_path}")

    def _walk(self, parts: List[str], create: bool) -> Optional[MutableMapping[str, Any]]:
        node: Any = self.config
        for part in parts:
            if create and not isinstance(node.get(part), dict):
                node[part] = {}
            node = node.get(part) if isinstance(node, dict) else None
            if not isinstance(node, dict):
                return None
        return node

    def get(self, key: str, default: Any = None) -> Any:
        """
        Value at a dotted key.

        Args:
            key: Dotted key, e.g. ``sampling.seed``
            default: Returned when any part of the key is missing
        """
        *parents, leaf = key.split(".")
        section = self._walk(parents, create=False)
        if section is None or leaf not in section:
            return default
        return section[leaf]

    def set(self, key: str, value: Any) -> None:
        """Store ``value`` at a dotted key, creating missing sections."""
        *parents, leaf = key.split(".")
        section = self._walk(parents, create=True)
        assert section is not None
        section[leaf] = value

    def tolerance(self, name: str = "membership") -> float:
        return float(self.get(f"tolerances.{name}", self.DEFAULT_CONFIG["tolerances"][name]))


config = ConfigManager()


def resolve_tol(tol: Optional[float], name: str = "membership") -> float:
    """Return ``tol`` when given, otherwise the configured tolerance ``name``."""
    return config.tolerance(name) if tol is None else ensure_positive_tol(tol)
