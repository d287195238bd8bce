"""Verification report schemas."""

import json
import math
from typing import Any, Optional

from pydantic import BaseModel, Field

from latticeq.config import Tolerances
from latticeq.sign_ledger import SIGN_LEDGER_VERSION


def complex_pair(z: complex) -> list[float]:
    """[re, im] for JSON rows."""
    return [float(z.real), float(z.imag)]


class VerificationReport(BaseModel):
    """Outcome of one verification run.

    Serializes to {"kind", "params", "rows", "pass", "tolerances",
    "sign_ledger_version"} in that order.
    """

    kind: str = Field(..., description="Suite or harness that produced the report")
    params: dict[str, Any] = Field(default_factory=dict, description="Inputs and effective run config")
    rows: list[dict[str, Any]] = Field(default_factory=list, description="One entry per measurement")
    passed: bool = Field(..., alias="pass", description="True iff every check passed")
    tolerances: dict[str, float] = Field(default_factory=dict, description="Tolerances applied")
    sign_ledger_version: str = Field(default=SIGN_LEDGER_VERSION, description="Sign convention version")

    model_config = {"populate_by_name": True}

    def to_document(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True, mode="json")

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)

    @classmethod
    def from_document(cls, data: dict[str, Any]) -> "VerificationReport":
        return cls.model_validate(data)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_document(json.loads(text))

    def with_params(self, extra: dict[str, Any]) -> "VerificationReport":
        return self.model_copy(update={"params": {**self.params, **extra}})

    @classmethod
    def combine(cls, kind: str, parts: list["VerificationReport"]) -> "VerificationReport":
        """One report out of several; each row is tagged with the kind it came from."""
        if not parts:
            raise ValueError(f"Report '{kind}' has no parts to combine")
        tolerances: dict[str, float] = {}
        for part in parts:
            tolerances.update(part.tolerances)
        return cls(
            kind=kind,
            params={part.kind: part.params for part in parts},
            rows=[{"check": part.kind, **row} for part in parts for row in part.rows],
            passed=all(part.passed for part in parts),
            tolerances=tolerances,
            sign_ledger_version=parts[0].sign_ledger_version,
        )


class ErrorBound(BaseModel):
    """Left-rule Riemann bound M_f·(m2 - m1)·spacing/2."""

    M_f: float = Field(..., ge=0.0, description="max |f'| on the window")
    window_length: float = Field(..., gt=0.0, description="m2 - m1")
    n: int = Field(..., description="Universe size")
    bound: float = Field(..., ge=0.0, description="Bound value")


class ConvergenceRow(BaseModel):
    n: int
    value: float = Field(..., description="Finite quantifier value")
    reference: float = Field(..., description="Continuum value over the nominal window")
    realized_reference: float = Field(..., description="Continuum value over [k_lo·s, k_hi·s]")
    error: float = Field(..., ge=0.0, description="|value - reference|")
    realized_error: float = Field(..., ge=0.0, description="|value - realized_reference|")
    bound: float = Field(..., ge=0.0, description="Riemann bound plus edge term")
    k_range: tuple[int, int]


class ConvergenceReport(BaseModel):
    """Finite values against continuum references over a sweep of n."""

    quantity: str
    window: tuple[float, float]
    rows: list[ConvergenceRow] = Field(default_factory=list)
    alpha: Optional[float] = Field(default=None, description="Fitted decay exponent, error ~ C·n^-α")

    def dominated(self) -> bool:
        return all(r.error <= r.bound * (1 + 1e-9) + 1e-15 for r in self.rows)

    def to_verification_report(self, tolerances: Tolerances) -> VerificationReport:
        alpha_ok = self.alpha is not None and tolerances.alpha_min <= self.alpha <= tolerances.alpha_max
        return VerificationReport(
            kind="converge",
            params={"quantity": self.quantity, "window": list(self.window), "alpha": self.alpha},
            rows=[r.model_dump(mode="json") for r in self.rows],
            passed=alpha_ok and self.dominated(),
            tolerances={"alpha_min": tolerances.alpha_min, "alpha_max": tolerances.alpha_max},
        )


class AnharmonicReport(BaseModel):
    """Global sum of e^{-πiH(k²+k⁴/L)/n} split into its Gaussian part and remainder."""

    n: int
    H: int
    L: Optional[int]
    h: float
    lam: float = Field(..., description="λ = n/L (0 when L is None)")
    lambda_h: float
    Eglob: complex
    T0: complex
    Tphi: complex
    ratio: complex = Field(..., description="Eglob/(sqrt(2πh)·e^{σiπ/4})")
    predicted: complex = Field(..., description="1 + c1·λh with the exact lattice c1")
    c1: complex = Field(..., description="Lattice first-order coefficient")
    residual: float
    tolerance: float = Field(..., description="Second-order Taylor remainder bound")
    split_defect: float = Field(..., description="|Eglob - sqrt(h)(T0 + Tphi)|")
    t0_defect: float = Field(..., description="|sqrt(h)·T0 - Gauss closed form|")
    fp_err: float

    model_config = {"arbitrary_types_allowed": True}

    def checks(self, t0_tolerance: float) -> dict[str, bool]:
        return {
            "residual": self.residual <= self.tolerance + 10 * self.fp_err,
            "split": self.split_defect <= 10 * self.fp_err + 1e-12,
            "t0": self.t0_defect <= t0_tolerance,
        }

    def row(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "H": self.H,
            "L": self.L,
            "h": self.h,
            "lambda": self.lam,
            "lambda_h": self.lambda_h,
            "Eglob": complex_pair(self.Eglob),
            "T0": complex_pair(self.T0),
            "Tphi": complex_pair(self.Tphi),
            "ratio": complex_pair(self.ratio),
            "predicted": complex_pair(self.predicted),
            "c1": complex_pair(self.c1),
            "residual": self.residual,
            "tolerance": self.tolerance,
            "split_defect": self.split_defect,
            "t0_defect": self.t0_defect,
        }

    def to_verification_report(self, t0_tolerance: float) -> VerificationReport:
        checks = self.checks(t0_tolerance)
        return VerificationReport(
            kind="anharmonic",
            params={"n": self.n, "H": self.H, "L": self.L, "lambda_h": self.lambda_h},
            rows=[{**self.row(), "checks": checks}],
            passed=all(checks.values()) and math.isfinite(self.residual),
            tolerances={"t0": t0_tolerance},
        )
