"""Algebra definition files and the builtin-spec mini language.

Definition files are line oriented::

    # gl(1,1)
    generator x even
    generator y even
    generator u odd
    generator v odd
    bracket [u,v] = x
    bracket [y,u] = u
    bracket [y,v] = -v

Generators are declared first, in basis order. Each ``bracket`` line gives
one bracket as a rational-linear combination of generators; the opposite
order is filled in by super antisymmetry and omitted brackets are zero.

Builtin specs: ``gl(m,n)``, ``sl(m,n)``, ``abelian(p|q)`` and direct sums
``A (+) B (+) ...``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .expr import ParseError, linear_form, parse
from .superlie import (
    EVEN,
    ODD,
    AlgebraError,
    LieSuperalgebra,
    abelian,
    build_gl,
    build_sl,
    complete_brackets,
    direct_sum,
)

_GEN = re.compile(r"generator\s+(\S+)\s+(\S+)\s*\Z")
_BRACKET = re.compile(r"bracket\s*\[\s*([^,\]\s]+)\s*,\s*([^,\]\s]+)\s*\]\s*=(.*)\Z")


class AlgebraFileError(AlgebraError):
    def __init__(self, msg: str, line: int):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_algebra(text: str, label: str = "g") -> LieSuperalgebra:
    names: list[str] = []
    parities: list[int] = []
    raw: list[tuple[int, str, str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _GEN.match(line)
        if m:
            if raw:
                raise AlgebraFileError("generator declared after a bracket", lineno)
            name, par = m.groups()
            if par not in ("even", "odd"):
                raise AlgebraFileError(f"parity must be 'even' or 'odd', got {par!r}", lineno)
            if name in names:
                raise AlgebraFileError(f"generator {name!r} declared twice", lineno)
            names.append(name)
            parities.append(EVEN if par == "even" else ODD)
            continue
        m = _BRACKET.match(line)
        if m:
            raw.append((lineno, *m.groups()))
            continue
        raise AlgebraFileError(f"cannot parse {line!r}", lineno)
    try:
        shell = LieSuperalgebra(names, parities, label=label)
    except AlgebraError as exc:
        raise AlgebraFileError(str(exc), 0) from None
    given = []
    for lineno, a, b, rhs in raw:
        for s in (a, b):
            if s not in names:
                raise AlgebraFileError(f"unknown generator {s!r}", lineno)
        try:
            coords = linear_form(parse(rhs, names), shell)
        except (ParseError, ValueError) as exc:
            raise AlgebraFileError(str(exc), lineno) from None
        given.append((names.index(a), names.index(b), coords))
    try:
        table = complete_brackets(names, parities, given)
    except AlgebraError as exc:
        raise AlgebraFileError(str(exc), raw[-1][0] if raw else 0) from None
    return LieSuperalgebra(names, parities, table, label=label)


def load_algebra(path: str | Path) -> LieSuperalgebra:
    path = Path(path)
    return parse_algebra(path.read_text(), label=path.stem)


def dump_algebra(g: LieSuperalgebra) -> str:
    """Definition-file text for ``g`` (brackets with i <= j only)."""
    from .pbw import UElement

    lines = [f"# {g.label}"]
    for nm, p in zip(g.names, g.parities):
        lines.append(f"generator {nm} {'odd' if p else 'even'}")
    for (i, j), row in g.table_items():
        if i <= j:
            rhs = UElement(g, {tuple(int(k == c) for k in range(g.dim)): v for c, v in row.items()})
            lines.append(f"bracket [{g.names[i]},{g.names[j]}] = {rhs}")
    return "\n".join(lines) + "\n"


_ATOM = re.compile(
    r"\s*(?:(gl|sl)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)|abelian\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\))\s*\Z"
)


def builtin(spec: str) -> LieSuperalgebra:
    """Build ``gl(m,n)``, ``sl(m,n)``, ``abelian(p|q)`` or a ``(+)``-separated direct sum."""
    parts = spec.split("(+)")
    algs = []
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise AlgebraError(f"unknown builtin {part.strip()!r}")
        kind, a, b, p, q = m.groups()
        if kind == "gl":
            algs.append(build_gl(int(a), int(b)))
        elif kind == "sl":
            algs.append(build_sl(int(a), int(b)))
        else:
            algs.append(abelian(int(p), int(q)))
    if len(algs) == 1:
        return algs[0]
    return direct_sum(*algs)
