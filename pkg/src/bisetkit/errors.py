"""Exception hierarchy. Cap violations carry the offending size."""


class BisetKitError(Exception):
    pass


class CapExceeded(BisetKitError):
    """Base for explicit resource-cap failures."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} of order {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class AmbientCapExceeded(CapExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__("ambient group", size, cap)


class LatticeCapExceeded(CapExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__("lattice group", size, cap)


class ClosureCapExceeded(CapExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__("generated closure", size, cap)


class InvalidPermutation(BisetKitError):
    pass


class NotASubgroup(BisetKitError):
    pass


class NotNormal(BisetKitError):
    pass


class NotBijective(BisetKitError):
    pass


class NotInInterval(BisetKitError):
    pass


class GroupMismatch(BisetKitError):
    pass


class NotInCommutant(BisetKitError):
    pass


class FamilyInvalid(BisetKitError):
    pass


class SpecParseError(BisetKitError):
    """Group/expression parse failure with position info."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, col {column}: {message}"
        super().__init__(message)
