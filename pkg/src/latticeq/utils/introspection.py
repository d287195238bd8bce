"""Introspection utilities for building suites from handler functions."""

import collections.abc
import inspect
import types
import typing
from typing import Any, Callable, Optional, get_type_hints

from latticeq.schemas.suite import ParameterType, Suite, SuiteParameter

# handler arguments supplied by the runner, never by the user
RESERVED_PARAMETERS = frozenset({"config"})

_SCALARS = {
    str: ParameterType.STRING,
    int: ParameterType.INTEGER,
    float: ParameterType.NUMBER,
    bool: ParameterType.BOOLEAN,
}

_SEQUENCES = (list, tuple, collections.abc.Sequence, collections.abc.Iterable)


def _strip_optional(python_type: Any) -> Any:
    origin = typing.get_origin(python_type)
    if origin is typing.Union or origin is types.UnionType:
        args = [a for a in typing.get_args(python_type) if a is not type(None)]
        if len(args) == 1:
            return args[0]
    return python_type


def python_type_to_param_type(python_type: Any) -> tuple[ParameterType, Optional[ParameterType]]:
    """Map an annotation to (type, items_type); unknown annotations become strings."""
    python_type = _strip_optional(python_type)
    origin = typing.get_origin(python_type)
    if python_type in _SEQUENCES or origin in _SEQUENCES:
        args = [a for a in typing.get_args(python_type) if a is not Ellipsis]
        items = _SCALARS.get(_strip_optional(args[0])) if args else None
        return ParameterType.ARRAY, items
    return _SCALARS.get(python_type, ParameterType.STRING), None


def _docstring_descriptions(func: Callable) -> dict[str, str]:
    """Pick up ``name: text`` lines from an Args section."""
    found: dict[str, str] = {}
    doc = inspect.getdoc(func) or ""
    for line in doc.splitlines():
        name, sep, text = line.strip().partition(":")
        if sep and name.isidentifier() and text.strip():
            found.setdefault(name, text.strip())
    return found


def suite_from_function(
    func: Callable,
    name: Optional[str] = None,
    description: Optional[str] = None,
    category: Optional[str] = None,
    tags: Optional[list[str]] = None,
) -> Suite:
    """
    Create a Suite from a report-returning function.

    Args:
        func: Handler returning a VerificationReport
        name: Suite name (defaults to the function name, kebab-cased)
        description: Defaults to the first docstring line
        category: Suite category
        tags: Suite tags

    Returns:
        A Suite with the function as its handler
    """
    sig = inspect.signature(func)
    try:
        hints = get_type_hints(func)
    except Exception:
        hints = {}
    docs = _docstring_descriptions(func)

    parameters: list[SuiteParameter] = []
    for param_name, param in sig.parameters.items():
        if param.kind in (inspect.Parameter.VAR_POSITIONAL, inspect.Parameter.VAR_KEYWORD):
            continue
        if param_name in RESERVED_PARAMETERS:
            continue

        param_type, items_type = python_type_to_param_type(hints.get(param_name, str))
        has_default = param.default is not inspect.Parameter.empty
        default = param.default if has_default else None
        if isinstance(default, tuple):
            default = list(default)

        parameters.append(
            SuiteParameter(
                name=param_name,
                type=param_type,
                items_type=items_type,
                description=docs.get(param_name, f"Parameter: {param_name}"),
                required=not has_default,
                default=default,
            )
        )

    summary = (inspect.getdoc(func) or "").split("\n", 1)[0]
    result = Suite(
        name=name or func.__name__.replace("_", "-"),
        description=description or summary or f"Suite: {func.__name__}",
        parameters=parameters,
        category=category,
        tags=tags or [],
    )
    result.set_handler(func)
    return result
