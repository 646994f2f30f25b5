"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A grid enumeration would exceed the configured cell budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"grid needs {required} cells, budget is {budget} "
            f"(raise PEANO_MAX_CELLS to allow it)"
        )
