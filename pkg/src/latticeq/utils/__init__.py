"""Utility functions for latticeq."""

from latticeq.utils.introspection import python_type_to_param_type, suite_from_function

__all__ = ["python_type_to_param_type", "suite_from_function"]
