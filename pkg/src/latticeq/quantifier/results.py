"""Quantifier windows and results."""

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class Window(BaseModel):
    """Closed window [m1, m2] in embedded coordinates."""

    m1: float
    m2: float

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check(self) -> "Window":
        if not self.m1 < self.m2:
            raise ValueError(f"Window requires m1 < m2, got ({self.m1}, {self.m2})")
        return self

    @classmethod
    def symmetric(cls, m: float) -> "Window":
        return cls(m1=-m, m2=m)

    @property
    def length(self) -> float:
        return self.m2 - self.m1


WindowTag = Literal["global", "universe", "cycle", "support"]


class QuantifierResult(BaseModel):
    """Value of a quantifier together with its summation metadata."""

    value: tuple[float, float] = Field(..., description="(re, im)")
    window: Union[Window, WindowTag] = Field(..., description="Window or summation scheme")
    terms: int = Field(..., ge=0, description="Number of summands")
    fp_error_estimate: float = Field(..., ge=0.0, alias="fp_err", description="Floating-point error estimate")
    k_range: Optional[tuple[int, int]] = Field(default=None, description="First and last summed lattice point")

    model_config = {"frozen": True, "populate_by_name": True}

    @classmethod
    def of(
        cls,
        value: complex,
        window: Union[Window, WindowTag],
        terms: int,
        fp_err: float,
        k_range: Optional[tuple[int, int]] = None,
    ) -> "QuantifierResult":
        return cls(
            value=(value.real, value.imag),
            window=window,
            terms=terms,
            fp_err=fp_err,
            k_range=k_range,
        )

    @property
    def complex_value(self) -> complex:
        return complex(*self.value)

    def to_json_dict(self) -> dict[str, Any]:
        data = self.model_dump(by_alias=True, mode="json")
        if data.get("k_range") is None:
            data.pop("k_range", None)
        return data
