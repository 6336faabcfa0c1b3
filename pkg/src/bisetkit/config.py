"""Resource caps. Failure past a cap is explicit, never silent truncation."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientCapExceeded, ClosureCapExceeded, LatticeCapExceeded


@dataclass(frozen=True)
class Caps:
    ambient: int = 5000
    lattice: int = 200
    closure: int = 2000

    def check_ambient(self, order: int) -> None:
        if order > self.ambient:
            raise AmbientCapExceeded(order, self.ambient)

    def check_lattice(self, order: int) -> None:
        if order > self.lattice:
            raise LatticeCapExceeded(order, self.lattice)

    def check_closure(self, size: int) -> None:
        if size > self.closure:
            raise ClosureCapExceeded(size, self.closure)


DEFAULT_CAPS = Caps()
