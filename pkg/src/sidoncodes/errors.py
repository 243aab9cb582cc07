"""Exception types shared across the package."""


class SizeGuardError(ValueError):
    """An exhaustive operation was requested beyond the enumeration guard."""


class LevelMismatchError(ValueError):
    """Two field elements live at different tower levels."""


class TowerMismatchError(ValueError):
    """Two objects belong to different field towers."""


class ConstructionError(ValueError):
    """Construction parameters violate a family precondition."""
