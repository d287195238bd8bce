"""State vectors in u[r]-coordinates, with CSV and JSON import/export."""

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from latticeq.core.universe import FiniteUniverse, Interval
from latticeq.errors import PreconditionError


class StateVector(BaseModel):
    """Coefficients over the orthonormal basis u[r], r ∈ [-n/2, n/2).

    Storage index j holds lattice point r = j - n/2. The array is read-only.
    """

    universe: FiniteUniverse
    amplitudes: np.ndarray = Field(..., description="Complex coefficients, length n")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=np.complex128, copy=True)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check(self) -> "StateVector":
        if self.amplitudes.shape != (self.universe.n,):
            raise ValueError(
                f"State for n={self.universe.n} needs {self.universe.n} amplitudes, "
                f"got shape {self.amplitudes.shape}"
            )
        if not np.all(np.isfinite(self.amplitudes)):
            raise ValueError("State amplitudes must be finite")
        return self

    @classmethod
    def basis(cls, u: FiniteUniverse, r: int) -> "StateVector":
        """The position basis vector u[r]."""
        if not u.contains(r):
            raise PreconditionError(f"Lattice point {r} outside [{u.lo}, {u.hi}] for n={u.n}")
        amps = np.zeros(u.n, dtype=np.complex128)
        amps[r - u.lo] = 1.0
        return cls(universe=u, amplitudes=amps)

    @classmethod
    def random(cls, u: FiniteUniverse, rng: np.random.Generator) -> "StateVector":
        amps = rng.standard_normal(u.n) + 1j * rng.standard_normal(u.n)
        return cls(universe=u, amplitudes=amps / np.linalg.norm(amps))

    @classmethod
    def from_function(
        cls, u: FiniteUniverse, fn: Any, domain: Optional[Interval] = None
    ) -> "StateVector":
        """Coefficients spacing·ψ(x_r) of the lattice function ψ = E_x ψ(x) u[x]."""
        x = u.points() * u.spacing
        values = np.asarray(fn(x), dtype=np.complex128) * u.spacing
        if domain is not None:
            values = np.where((x >= domain.lo) & (x <= domain.hi), values, 0.0)
        return cls(universe=u, amplitudes=values)

    def with_amplitudes(self, amps: np.ndarray) -> "StateVector":
        return StateVector(universe=self.universe, amplitudes=amps)

    def amplitude(self, r: int) -> complex:
        if not self.universe.contains(r):
            raise PreconditionError(f"Lattice point {r} outside the universe")
        return complex(self.amplitudes[r - self.universe.lo])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def distance(self, other: "StateVector") -> float:
        return float(np.linalg.norm(self.amplitudes - other.amplitudes))

    # serialization

    def to_json(self) -> str:
        payload = {
            "n": self.universe.n,
            "h_n": self.universe.h_n,
            "amplitudes": [[float(z.real), float(z.imag)] for z in self.amplitudes],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "StateVector":
        data = json.loads(text)
        u = FiniteUniverse(n=int(data["n"]), h_n=int(data.get("h_n", 1)))
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        return cls(universe=u, amplitudes=amps)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["index", "re", "im"])
        for r, z in zip(self.universe.points(), self.amplitudes):
            writer.writerow([int(r), repr(float(z.real)), repr(float(z.imag))])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, u: FiniteUniverse) -> "StateVector":
        amps = np.zeros(u.n, dtype=np.complex128)
        seen = 0
        for row in csv.DictReader(io.StringIO(text)):
            r = int(row["index"])
            if not u.contains(r):
                raise PreconditionError(f"CSV index {r} outside [{u.lo}, {u.hi}]")
            amps[r - u.lo] = complex(float(row["re"]), float(row["im"]))
            seen += 1
        if seen != u.n:
            raise PreconditionError(f"CSV holds {seen} amplitudes, universe needs {u.n}")
        return cls(universe=u, amplitudes=amps)

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.write_text(self.to_csv() if path.suffix == ".csv" else self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path, u: Optional[FiniteUniverse] = None) -> "StateVector":
        path = Path(path)
        text = path.read_text(encoding="utf-8")
        if path.suffix == ".csv":
            if u is None:
                raise PreconditionError("Loading a CSV state needs the universe")
            return cls.from_csv(text, u)
        return cls.from_json(text)


def relative_defect(a: StateVector, b: StateVector) -> float:
    scale = max(b.norm(), math.ulp(1.0))
    return a.distance(b) / scale
