"""Verification suite schema definitions."""

from enum import Enum
from typing import Any, Callable, Optional

from pydantic import BaseModel, Field

from latticeq.errors import error_kind
from latticeq.schemas.report import VerificationReport


class ParameterType(str, Enum):
    """Supported parameter types for suite inputs."""
    STRING = "string"
    INTEGER = "integer"
    NUMBER = "number"
    BOOLEAN = "boolean"
    ARRAY = "array"


class SuiteParameter(BaseModel):
    """Definition of a single suite parameter."""

    name: str = Field(..., description="Parameter name")
    type: ParameterType = Field(..., description="Parameter type")
    description: str = Field(..., description="Description of the parameter")
    required: bool = Field(default=True, description="Whether the parameter is required")
    default: Optional[Any] = Field(default=None, description="Default value if not required")
    enum: Optional[list[Any]] = Field(default=None, description="Allowed values (for enums)")
    items_type: Optional[ParameterType] = Field(default=None, description="Type of array items (if type is array)")

    model_config = {"extra": "allow"}

    @property
    def flag(self) -> str:
        """Command-line spelling: --lambda-h for lambda_h."""
        return "--" + self.name.replace("_", "-")


class SuiteResult(BaseModel):
    """Result returned from suite execution."""

    success: bool = Field(..., description="Whether the suite ran to completion")
    data: Optional[VerificationReport] = Field(default=None, description="Report on success")
    error: Optional[str] = Field(default=None, description="Error message on failure")
    error_kind: Optional[str] = Field(default=None, description="parse, io, precondition or internal")

    @classmethod
    def ok(cls, data: VerificationReport) -> "SuiteResult":
        """Create a successful result."""
        return cls(success=True, data=data)

    @classmethod
    def fail(cls, error: str, kind: str = "internal") -> "SuiteResult":
        """Create a failed result."""
        return cls(success=False, error=error, error_kind=kind)

    @property
    def passed(self) -> bool:
        return self.success and self.data is not None and self.data.passed


class Suite(BaseModel):
    """
    A named verification suite.

    The handler receives the suite parameters as keyword arguments (plus the
    effective RunConfig as ``config``) and returns a VerificationReport.
    """

    name: str = Field(..., description="Unique suite name (kebab-case)")
    description: str = Field(..., description="What the suite verifies")
    parameters: list[SuiteParameter] = Field(default_factory=list, description="Suite parameters")

    # Metadata
    category: Optional[str] = Field(default=None, description="Suite category (e.g., 'summation', 'operators')")
    tags: list[str] = Field(default_factory=list, description="Searchable tags")
    version: str = Field(default="1.0.0", description="Suite version")

    # The actual implementation function (not serialized)
    _handler: Optional[Callable[..., Any]] = None

    model_config = {"extra": "allow"}

    def set_handler(self, handler: Callable[..., Any]) -> "Suite":
        """Set the handler function for this suite."""
        self._handler = handler
        return self

    def parameter(self, name: str) -> Optional[SuiteParameter]:
        return next((p for p in self.parameters if p.name == name), None)

    async def execute(self, **kwargs: Any) -> SuiteResult:
        """Execute the suite with the given parameters."""
        if self._handler is None:
            return SuiteResult.fail(f"No handler set for suite '{self.name}'")

        try:
            for param in self.parameters:
                if param.name not in kwargs or kwargs[param.name] is None:
                    if param.required:
                        return SuiteResult.fail(f"Missing required parameter: {param.name}", "precondition")
                    kwargs[param.name] = param.default
                elif param.enum and kwargs[param.name] not in param.enum:
                    return SuiteResult.fail(
                        f"Parameter {param.name} must be one of {param.enum}, got {kwargs[param.name]!r}",
                        "precondition",
                    )

            result = self._handler(**kwargs)

            # Handle async handlers
            if hasattr(result, "__await__"):
                result = await result

            return SuiteResult.ok(result)

        except Exception as e:
            return SuiteResult.fail(str(e), error_kind(e))

    def to_json_schema(self) -> dict[str, Any]:
        """Convert suite parameters to JSON Schema format."""
        properties: dict[str, Any] = {}
        required: list[str] = []

        for param in self.parameters:
            prop: dict[str, Any] = {
                "type": param.type.value,
                "description": param.description,
            }
            if param.enum:
                prop["enum"] = param.enum
            if param.type == ParameterType.ARRAY and param.items_type:
                prop["items"] = {"type": param.items_type.value}
            if param.default is not None:
                prop["default"] = param.default

            properties[param.name] = prop
            if param.required:
                required.append(param.name)

        return {
            "type": "object",
            "properties": properties,
            "required": required,
        }
