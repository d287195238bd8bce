"""Suite registry for discovering verification suites."""

from latticeq.registry.registry import SuiteRegistry, get_default_registry

__all__ = ["SuiteRegistry", "get_default_registry"]
