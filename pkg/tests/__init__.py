"""latticeq tests."""
