"""
Tests for JSON input and output
"""

import json

import numpy as np
import pytest

from src.cartan.frame import standard_frame
from src.constructors.build import construct, randomize
from src.lts.subspace import RealSubspace
from src.model.tangent import Plane, TangentVector
from src.utils.errors import ShapeError, ValidationError
from src.utils.serialization import (
    dump_json,
    frame_to_dict,
    load_json,
    plane_to_dict,
    subspace_from_dict,
    subspace_to_dict,
    write_json,
)


class TestDumpJson:
    """Serialization of numpy values"""

    def test_numpy_values(self):
        """Arrays and numpy scalars are converted"""
        data = json.loads(dump_json({"a": np.arange(3), "b": np.float64(0.5), "c": np.bool_(True)}))
        assert data == {"a": [0, 1, 2], "b": 0.5, "c": True}

    def test_full_precision(self):
        """Doubles are written so that they read back exactly"""
        value = 1.0 / 3.0
        assert json.loads(dump_json([value]))[0] == value

    def test_unknown_type(self):
        """Other objects are refused"""
        with pytest.raises(TypeError):
            dump_json({"x": object()})


class TestLoadJson:
    """Reading files"""

    def test_missing_file(self, tmp_path):
        """A missing file raises ValidationError"""
        with pytest.raises(ValidationError):
            load_json(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path):
        """Broken JSON raises ValidationError"""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ValidationError, match="Invalid JSON"):
            load_json(path)

    def test_write_then_load(self, tmp_path):
        """write_json creates parent directories"""
        path = tmp_path / "nested" / "out.json"
        write_json({"dim": 3}, path)
        assert load_json(path) == {"dim": 3}


class TestSubspaceRecords:
    """Subspaces as JSON records"""

    def test_round_trip(self, tmp_path):
        """A written subspace is read back to 1e-12"""
        subspace = randomize(construct("P12:C2", 4), 3)
        path = tmp_path / "s.json"
        write_json(subspace_to_dict(subspace), path)
        again = subspace_from_dict(load_json(path))
        assert again.dim == subspace.dim
        assert np.max(np.abs(again.flat - subspace.flat)) < 1e-12

    def test_declared_dimension(self):
        """A wrong declared dim is rejected"""
        data = subspace_to_dict(construct("S5", 2))
        data["dim"] = 4
        with pytest.raises(ValidationError):
            subspace_from_dict(data)

    def test_malformed(self):
        """Missing keys and bad column shapes raise ShapeError"""
        with pytest.raises(ShapeError):
            subspace_from_dict({"basis": []})
        with pytest.raises(ShapeError):
            subspace_from_dict({"n": 2, "basis": [{"n": 2, "cols": [[1.0, 0.0, 0.0]]}]})

    def test_non_orthonormal_basis(self):
        """A non-orthonormal basis is orthonormalized"""
        first = TangentVector.from_entries(2, {(0, 0): (2.0, 0.0, 0.0, 0.0)})
        second = TangentVector.from_entries(2, {(1, 0): (1.0, 0.0, 0.0, 0.0)})
        subspace = subspace_from_dict({"n": 2, "basis": [first.to_dict(), second.to_dict()]})
        assert subspace.equal(construct("P0:R2", 2))

    def test_empty_basis(self):
        """No vectors means the zero subspace"""
        assert subspace_from_dict({"n": 3, "basis": []}).dim == 0

    def test_plane_and_frame(self):
        """Planes carry n and frames serialize"""
        assert plane_to_dict(Plane.origin(3))["n"] == 3
        assert json.loads(dump_json(frame_to_dict(standard_frame(2))))

    def test_dict_matches_subspace(self):
        """subspace_to_dict records the dimension"""
        data = subspace_to_dict(RealSubspace.full(2))
        assert data["dim"] == 16
        assert len(data["basis"]) == 16
