"""Group spec files and group expressions.

Spec file format, one definition per line (# starts a comment):

    name = perm_group(degree; gen1; gen2; ...)

where generators use cycle notation like ``(0 1)(2 3)`` on points
0..degree-1. The right-hand side may also be any group expression.

Group expressions combine built-ins and defined names with the product
operator ``x`` and parentheses: ``C2xC3``, ``(C2xC2)xS3``. Built-ins:
``trivial`` (or ``1``), ``Cn``, ``Sn`` for n <= 5, and ``V4``. Names may
not contain the character ``x``.
"""

from __future__ import annotations

import re

from .config import DEFAULT_CAPS, Caps
from .errors import SpecParseError
from .groups import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    group_from_generators,
    klein_four,
    symmetric_group,
    trivial_group,
)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
# Name tokens exclude the product operator 'x'.
_NAME_RE = re.compile(r"[0-9_A-Za-wy-z]+")


def parse_cycles(text: str, degree: int, line: int = 0, col: int = 0) -> tuple[int, ...]:
    """A permutation of 0..degree-1 from cycle notation; cycles compose right-to-left."""
    text = text.strip()
    if not text or text in ("e", "()"):
        return tuple(range(degree))
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(text):
        if text[pos : m.start()].strip():
            raise SpecParseError(f"unexpected text {text[pos:m.start()]!r} in cycles", line, col)
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = [int(p) for p in body]
        except ValueError:
            raise SpecParseError(f"non-integer point in cycle {m.group(0)!r}", line, col)
        for p in cyc:
            if not 0 <= p < degree:
                raise SpecParseError(f"point {p} out of range for degree {degree}", line, col)
        if len(set(cyc)) != len(cyc):
            raise SpecParseError(f"repeated point in cycle {m.group(0)!r}", line, col)
        cycles.append(cyc)
        pos = m.end()
    if text[pos:].strip():
        raise SpecParseError(f"unexpected trailing text {text[pos:]!r}", line, col)
    perm = list(range(degree))
    for cyc in reversed(cycles):
        prev = perm
        mapping = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        perm = [mapping.get(prev[i], prev[i]) for i in range(degree)]
    return tuple(perm)


def _builtin(name: str) -> FiniteGroup | None:
    if name in ("trivial", "1"):
        return trivial_group()
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        return cyclic_group(int(m.group(1)))
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        n = int(m.group(1))
        if n > 5:
            raise SpecParseError(f"S{n} is not built in (n <= 5)")
        return symmetric_group(n)
    if name == "V4":
        return klein_four()
    return None


class GroupRegistry:
    """Named groups: built-ins plus definitions from a spec file."""

    def __init__(self, caps: Caps = DEFAULT_CAPS):
        self.caps = caps
        self._defs: dict[str, FiniteGroup] = {}

    def define(self, name: str, group: FiniteGroup) -> None:
        self._defs[name] = group

    def names(self) -> list[str]:
        return sorted(self._defs)

    def resolve(self, expr: str) -> FiniteGroup:
        """Evaluate a group expression: term (x term)* with parentheses."""
        s = re.sub(r"\s+", "", expr)
        if not s:
            raise SpecParseError("empty group expression")
        group, rest = self._parse_expr(s)
        if rest:
            raise SpecParseError(f"unexpected trailing text {rest!r} in group expression {expr!r}")
        return group

    def _parse_expr(self, s: str) -> tuple[FiniteGroup, str]:
        group, s = self._parse_term(s)
        while s.startswith("x"):
            right, s = self._parse_term(s[1:])
            group = direct_product(group, right, caps=self.caps)
        return group, s

    def _parse_term(self, s: str) -> tuple[FiniteGroup, str]:
        if not s:
            raise SpecParseError("unexpected end of group expression")
        if s[0] == "(":
            group, rest = self._parse_expr(s[1:])
            if not rest.startswith(")"):
                raise SpecParseError("unbalanced parenthesis in group expression")
            return group, rest[1:]
        m = _NAME_RE.match(s)
        if not m:
            raise SpecParseError(f"cannot parse group expression at {s!r}")
        name = m.group(0)
        rest = s[m.end():]
        if name in self._defs:
            return self._defs[name], rest
        builtin = _builtin(name)
        if builtin is None:
            raise SpecParseError(f"unknown group name {name!r}")
        return builtin, rest

    def load_file(self, path: str) -> None:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        self.load_text(text)

    def load_text(self, text: str) -> None:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SpecParseError("expected `name = ...`", lineno, 1)
            name, _, rhs = line.partition("=")
            name = name.strip()
            rhs = rhs.strip()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) or "x" in name:
                raise SpecParseError(
                    f"bad group name {name!r} (identifier without 'x' required)",
                    lineno,
                    1,
                )
            if rhs.startswith("perm_group"):
                self._defs[name] = self._parse_perm_group(name, rhs, lineno)
            else:
                self._defs[name] = self.resolve(rhs)

    def _parse_perm_group(self, name: str, rhs: str, lineno: int) -> FiniteGroup:
        m = re.fullmatch(r"perm_group\s*\((.*)\)\s*", rhs)
        if not m:
            raise SpecParseError("expected perm_group(degree; gen; ...)", lineno, 1)
        parts = [p.strip() for p in m.group(1).split(";")]
        if not parts or not parts[0]:
            raise SpecParseError("perm_group needs a degree", lineno, 1)
        try:
            degree = int(parts[0])
        except ValueError:
            raise SpecParseError(f"bad degree {parts[0]!r}", lineno, 1)
        gens = [
            parse_cycles(p, degree, lineno, 1) for p in parts[1:] if p
        ]
        return group_from_generators(degree, gens, name=name, caps=self.caps)
