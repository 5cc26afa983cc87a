# models/generator_file.py
"""
Generator files: a JSON document naming an ambient field and a list of
rotations, given as matrices and/or quaternions.

    {
      "ambient_d": 3,
      "matrices": [[["1", "0", "0"], ["0", "1/2", "-1/2√3"], ["0", "1/2√3", "1/2"]]],
      "quaternions": [["1", "2", "0", "0"]]
    }
"""
import json
import logging
from dataclasses import dataclass, field
from typing import List

from models.quaternion import Quaternion
from models.rotation import Rot3, theta
from models.scalar import check_ambient
from utils.codec import parse_matrix, parse_quaternion
from utils.errors import ExactRotError, ParseError

logger = logging.getLogger(__name__)


@dataclass
class GeneratorFile:
    ambient_d: int = 0
    matrices: List[Rot3] = field(default_factory=list)
    quaternions: List[Quaternion] = field(default_factory=list)

    @property
    def generators(self) -> List[Rot3]:
        """Matrices first, then theta of every quaternion, in file order."""
        return list(self.matrices) + [theta(x) for x in self.quaternions]

    @classmethod
    def from_json(cls, data) -> "GeneratorFile":
        if not isinstance(data, dict):
            raise ParseError("a generator file must be a JSON object")
        unknown = set(data) - {"ambient_d", "matrices", "quaternions"}
        if unknown:
            raise ParseError(f"unknown keys in generator file: {sorted(unknown)}")

        d = data.get("ambient_d", 0)
        if not isinstance(d, int) or isinstance(d, bool):
            raise ParseError("ambient_d must be an integer")
        try:
            check_ambient(d)
        except ExactRotError as e:
            raise ParseError(str(e))

        matrices = data.get("matrices", [])
        quaternions = data.get("quaternions", [])
        if not isinstance(matrices, list) or not isinstance(quaternions, list):
            raise ParseError("'matrices' and 'quaternions' must be lists")

        parsed = []
        for n, rows in enumerate(matrices):
            try:
                entries = parse_matrix(rows, d)
            except ParseError as e:
                raise ParseError(f"matrix {n}: {e}")
            # Rot3 validation raises NotARotation, a domain error
            parsed.append(Rot3(entries, d))

        quats = []
        for n, parts in enumerate(quaternions):
            try:
                quats.append(Quaternion(*parse_quaternion(parts, d), d=d))
            except ParseError as e:
                raise ParseError(f"quaternion {n}: {e}")

        logger.debug("generator file: d=%d, %d matrices, %d quaternions", d, len(parsed), len(quats))
        return cls(d, parsed, quats)

    @classmethod
    def load(cls, path: str) -> "GeneratorFile":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")
        except UnicodeDecodeError as e:
            raise ParseError(f"{path}: not UTF-8 text (byte {e.start})")
        return cls.from_json(data)

    def to_json(self):
        data = {"ambient_d": self.ambient_d, "matrices": [m.to_json() for m in self.matrices]}
        if self.quaternions:
            data["quaternions"] = [x.to_json() for x in self.quaternions]
        return data
