"""
JSON serialization of subspaces, planes and frames.

Floats are written by ``json`` through ``repr``, i.e. with the 17 significant
digits needed to read back the identical double.
"""

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import numpy as np

from .errors import ShapeError, ValidationError
from .logger import logger
from .validators import ensure_orthonormal, ensure_quaternion_array
from ..cartan.frame import Frame
from ..config.manager import config
from ..lts.subspace import RealSubspace
from ..model.tangent import Plane, TangentVector


def _default(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dump_json(data: Any, indent: Optional[int] = None) -> str:
    """Serialize to a JSON string with the configured indentation."""
    indent = int(config.get("output.indent", 2)) if indent is None else indent
    return json.dumps(data, indent=indent, default=_default)


def load_json(source: Union[str, Path]) -> Any:
    """
    Read JSON from a file path.

    Raises:
        ValidationError: if the file cannot be read or parsed
    """
    path = Path(source)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON in {path}: {e}") from e
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e}") from e


def subspace_to_dict(subspace: RealSubspace) -> Dict[str, Any]:
    data = subspace.to_dict()
    data["dim"] = subspace.dim
    return data


def subspace_from_dict(data: Mapping[str, Any], tol: float = 1e-10) -> RealSubspace:
    """
    Read a subspace, keeping its basis when it is already orthonormal.

    Raises:
        ShapeError: on malformed vectors
        ValidationError: if a declared dimension disagrees with the basis
    """
    try:
        n = int(data["n"])
        items = list(data["basis"])
    except (KeyError, TypeError, ValueError) as e:
        raise ShapeError(f"Malformed subspace record: {e}") from e
    vectors = []
    for item in items:
        ensure_quaternion_array(item["cols"], ndim=2)
        vectors.append(TangentVector.from_dict(item))
    if "dim" in data and int(data["dim"]) != len(vectors):
        raise ValidationError(f"Declared dim {data['dim']} but {len(vectors)} basis vectors given")
    if not vectors:
        return RealSubspace.zero(n)
    rows = np.array([v.flat for v in vectors])
    try:
        ensure_orthonormal(rows, tol)
    except ValidationError:
        logger.debug("Stored basis is not orthonormal; orthonormalizing")
        return RealSubspace.from_vectors(vectors, n)
    return RealSubspace(n, rows, tol)


def plane_to_dict(plane: Plane) -> Dict[str, Any]:
    data = plane.to_dict()
    data["n"] = plane.n
    return data


def frame_to_dict(frame: Frame) -> Dict[str, Any]:
    return frame.to_dict()


def write_json(data: Any, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(data), encoding="utf-8")
    logger.info(f"Wrote {path}")
