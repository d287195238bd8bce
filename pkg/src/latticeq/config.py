"""Run configuration: defaults, key=value config files and environment fallback.

Precedence is flags > config file > environment > defaults. The effective
RunConfig is echoed into every report.
"""

import logging
import os
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator

from latticeq.sign_ledger import SIGN_LEDGER_VERSION

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "LATTICEQ_THREADS"


class Tolerances(BaseModel):
    """Check tolerances shared by the verification harnesses."""

    gauss_dense: float = Field(default=1e-8, description="Closed-form residual on the d-dense set")
    gauss_zero: float = Field(default=1e-10, description="Full-cycle sum magnitude off the d-dense set")
    gauss_continuum: float = Field(default=1e-8, description="Scaled one-period sum against the continuum Gauss integral")
    delta: float = Field(default=1e-10, description="Discrete delta residual")
    commutation: float = Field(default=1e-12, description="Weyl commutation defect")
    isometry: float = Field(default=1e-9, description="Norm defect of unitary operators")
    fourier_inverse: float = Field(default=1e-10, description="Elementwise inverse-after-forward defect")
    parseval: float = Field(default=1e-9, description="Fourier norm defect")
    fast_vs_dense: float = Field(default=1e-9, description="Fast and dense Fourier path agreement")
    propagator_rel: float = Field(default=0.02, description="Relative modulus error of evolved point states")
    anharmonic_continuum_factor: float = Field(default=20.0, description="Second-order factor for the continuum anharmonic check")
    alpha_min: float = Field(default=0.35, description="Lower end of accepted decay exponents")
    alpha_max: float = Field(default=0.65, description="Upper end of accepted decay exponents")
    scaling_factor: float = Field(default=3.0, description="Allowed max/min spread of normalized T_phi")

    model_config = {"extra": "forbid"}


class RunConfig(BaseModel):
    """Validated configuration of a single CLI run."""

    n: Optional[int] = Field(default=None, description="Universe size (even)")
    h_n: int = Field(default=1, description="Discrete Planck integer, coprime to n")
    threads: int = Field(default=1, description="Worker threads for chunked summation")
    c_tail: float = Field(default=3.0, description="Tail constant of the local=global check")
    lambda_h_max: float = Field(default=0.05, description="Largest admissible lambda*h")
    terms_ceiling: int = Field(default=500_000_000, description="Refuse summations above this many terms")
    out_dir: Optional[str] = Field(default=None, description="Directory for report files")
    format: str = Field(default="json", description="Report format: json, csv or table")
    sign_ledger_version: str = Field(default=SIGN_LEDGER_VERSION, description="Sign ledger the run was computed under")
    tolerances: Tolerances = Field(default_factory=Tolerances)

    model_config = {"extra": "forbid"}

    @field_validator("threads")
    @classmethod
    def _threads_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"threads must be >= 1, got {value}")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("json", "csv", "table"):
            raise ValueError(f"format must be one of json, csv, table; got '{value}'")
        return value

    def echo(self) -> dict[str, Any]:
        """Configuration as embedded in reports (output location and thread count excluded)."""
        return self.model_dump(exclude={"out_dir", "format", "threads"})


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Read a plain key=value file.

    Blank lines and lines starting with '#' are skipped. Keys of the form
    ``tolerances.<name>`` address the nested tolerance block. Values stay
    strings; pydantic coerces them on validation.
    """
    values: dict[str, Any] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got '{line}'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key.startswith("tolerances."):
            values.setdefault("tolerances", {})[key.split(".", 1)[1]] = value
        else:
            values[key.replace("-", "_")] = value
    return values


def resolve_run_config(
    flags: Optional[dict[str, Any]] = None,
    config_path: Optional[str | Path] = None,
) -> RunConfig:
    """Merge flags, config file, environment and defaults into a RunConfig."""
    merged: dict[str, Any] = {}

    env_threads = os.getenv(THREADS_ENV_VAR)
    if env_threads:
        merged["threads"] = env_threads

    if config_path is not None:
        file_values = load_config_file(config_path)
        tolerances = {**merged.get("tolerances", {}), **file_values.pop("tolerances", {})}
        merged.update(file_values)
        if tolerances:
            merged["tolerances"] = tolerances
        logger.debug("Loaded config file %s: %s", config_path, sorted(file_values))

    for key, value in (flags or {}).items():
        if value is None:
            continue
        if key == "tolerances":
            merged["tolerances"] = {**merged.get("tolerances", {}), **value}
        else:
            merged[key] = value

    return RunConfig.model_validate(merged)
