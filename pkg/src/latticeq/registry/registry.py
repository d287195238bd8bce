"""Central registry of verification suites."""

from typing import Optional

from latticeq.schemas.suite import Suite


class SuiteRegistry:
    """
    Registry for discovering verification suites.

    Suites are looked up by name (what ``latticeq verify <name>`` resolves),
    by category, or by tags.
    """

    def __init__(self) -> None:
        self._suites: dict[str, Suite] = {}
        self._categories: dict[str, set[str]] = {}
        self._tags: dict[str, set[str]] = {}

    def register(self, suite: Suite) -> None:
        """
        Register a suite.

        Raises:
            ValueError: If a suite with the same name already exists
        """
        if suite.name in self._suites:
            raise ValueError(f"Suite '{suite.name}' is already registered")

        self._suites[suite.name] = suite

        if suite.category:
            self._categories.setdefault(suite.category, set()).add(suite.name)

        for tag in suite.tags:
            self._tags.setdefault(tag, set()).add(suite.name)

    def get(self, name: str) -> Optional[Suite]:
        return self._suites.get(name)

    def get_by_tags(self, tags: list[str], match_all: bool = False) -> list[Suite]:
        """
        Get suites matching several tags.

        Args:
            tags: Tags to match
            match_all: If True, suites must carry ALL tags; otherwise ANY
        """
        if not tags:
            return []

        tag_sets = [self._tags.get(tag, set()) for tag in tags]
        if match_all:
            matching = set.intersection(*tag_sets)
        else:
            matching = set.union(*tag_sets)

        return [self._suites[name] for name in sorted(matching) if name in self._suites]

    def search(
        self,
        query: Optional[str] = None,
        category: Optional[str] = None,
        tags: Optional[list[str]] = None,
    ) -> list[Suite]:
        """Filter suites by text in name/description, category and tags (any)."""
        results = self.all()

        if category:
            results = [s for s in results if s.category == category]

        if tags:
            tag_names: set[str] = set()
            for tag in tags:
                tag_names.update(self._tags.get(tag, set()))
            results = [s for s in results if s.name in tag_names]

        if query:
            query_lower = query.lower()
            results = [
                s for s in results
                if query_lower in s.name.lower() or query_lower in s.description.lower()
            ]

        return results

    def all(self) -> list[Suite]:
        """All suites, in registration order."""
        return list(self._suites.values())

    def names(self) -> list[str]:
        return list(self._suites)

    def categories(self) -> list[str]:
        """Categories with at least one suite."""
        return [cat for cat, names in self._categories.items() if names]

    def tags_list(self) -> list[str]:
        """Tags with at least one suite."""
        return [tag for tag, names in self._tags.items() if names]

    def __len__(self) -> int:
        return len(self._suites)

    def __contains__(self, name: str) -> bool:
        return name in self._suites


# Global default registry
_default_registry: Optional[SuiteRegistry] = None


def get_default_registry() -> SuiteRegistry:
    """Get or create the default registry, populated with the built-in suites."""
    global _default_registry
    if _default_registry is None:
        _default_registry = SuiteRegistry()
        from latticeq.suites import BUILTIN_SUITES

        for builtin in BUILTIN_SUITES:
            _default_registry.register(builtin)
    return _default_registry

