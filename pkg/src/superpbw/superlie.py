"""Finite-dimensional Lie superalgebras given by structure constants.

A :class:`LieSuperalgebra` holds an ordered basis (names + parities) and a
sparse table ``brackets[(i, j)] = {k: c}`` meaning ``[b_i, b_j] = sum c*b_k``.
The constructor only checks shapes; use :func:`validate` for the axioms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .exactq import PolyQ, poly_det
from .linalg import CoordinateSolver

EVEN, ODD = 0, 1

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"t"})


class AlgebraError(ValueError):
    """Raised for malformed or invalid algebra definitions."""


class LieSuperalgebra:
    def __init__(
        self,
        names: Sequence[str],
        parities: Sequence[int],
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction]] | None = None,
        label: str | None = None,
    ):
        self.names = tuple(names)
        self.parities = tuple(int(p) for p in parities)
        if len(self.names) != len(self.parities):
            raise AlgebraError("names and parities differ in length")
        if len(set(self.names)) != len(self.names):
            raise AlgebraError("duplicate generator names")
        for nm in self.names:
            if not NAME_RE.match(nm):
                raise AlgebraError(f"bad generator name {nm!r}")
            if nm in RESERVED:
                raise AlgebraError(f"generator name {nm!r} is reserved")
        if any(p not in (EVEN, ODD) for p in self.parities):
            raise AlgebraError("parities must be 0 (even) or 1 (odd)")
        n = len(self.names)
        table = {}
        for (i, j), row in (brackets or {}).items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"bracket index ({i}, {j}) out of range")
            clean = {}
            for k, c in row.items():
                if not 0 <= k < n:
                    raise AlgebraError(f"bracket target {k} out of range")
                c = Fraction(c)
                if c:
                    clean[k] = c
            if clean:
                table[(i, j)] = clean
        self._table = table
        self.label = label or "g"
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def even(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == EVEN]

    @property
    def odd(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == ODD]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown generator {name!r}") from None

    def structure(self, i: int, j: int) -> dict[int, Fraction]:
        """``[b_i, b_j]`` as a sparse ``{k: coeff}`` dict (a copy)."""
        return dict(self._table.get((i, j), {}))

    def table_items(self):
        return sorted(self._table.items())

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        return (self.names, self.parities, self._table) == (other.names, other.parities, other._table)

    def __hash__(self) -> int:
        return hash((self.names, self.parities, frozenset((k, frozenset(v.items())) for k, v in self._table.items())))

    def __repr__(self) -> str:
        return f"LieSuperalgebra({self.label!r}, dim={self.dim}, even={len(self.even)}, odd={len(self.odd)})"

    def relabel(self, label: str) -> LieSuperalgebra:
        return LieSuperalgebra(self.names, self.parities, self._table, label=label)


def complete_brackets(
    names: Sequence[str], parities: Sequence[int], given: Sequence[tuple[int, int, Mapping[int, Fraction]]]
) -> dict:
    """Fill in the table by super antisymmetry from a list of ``(i, j, value)`` entries.

    Entries may come in either order; a pair given twice must agree, and an even
    diagonal must vanish.
    """
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j, val in given:
        val = {k: Fraction(c) for k, c in val.items() if c}
        sign = -((-1) ** (parities[i] * parities[j]))
        pairs = [((i, j), val), ((j, i), {k: sign * c for k, c in val.items()})]
        if i == j and pairs[0][1] != pairs[1][1]:
            raise AlgebraError(f"[{names[i]},{names[i]}] must be zero for an even generator")
        for key, v in pairs:
            if key in seen and seen[key] != v:
                raise AlgebraError(f"contradictory entries for [{names[key[0]]},{names[key[1]]}]")
            seen[key] = v
    for key, v in seen.items():
        if v:
            table[key] = v
    return table


# -- vectors and brackets ---------------------------------------------------

def _check_vec(g: LieSuperalgebra, a: Sequence) -> list[Fraction]:
    if len(a) != g.dim:
        raise ValueError(f"coordinate vector of length {len(a)} for algebra of dimension {g.dim}")
    return [Fraction(c) for c in a]


def bracket(g: LieSuperalgebra, a: Sequence, b: Sequence) -> list[Fraction]:
    """Bilinear extension of the structure constants to coordinate vectors."""
    a = _check_vec(g, a)
    b = _check_vec(g, b)
    out = [Fraction(0)] * g.dim
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            for k, c in g.structure(i, j).items():
                out[k] += ai * bj * c
    return out


def basis_vector(g: LieSuperalgebra, i: int) -> list[Fraction]:
    v = [Fraction(0)] * g.dim
    v[i] = Fraction(1)
    return v


# -- validation -------------------------------------------------------------

@dataclass
class Violation:
    axiom: str  # "grading" | "antisymmetry" | "jacobi"
    indices: tuple[str, ...]
    detail: str = ""

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "indices": list(self.indices), "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        lines = ["fail"]
        for v in self.violations:
            lines.append(f"  {v.axiom} at ({','.join(v.indices)}){': ' + v.detail if v.detail else ''}")
        return "\n".join(lines)


def validate(g: LieSuperalgebra) -> ValidationReport:
    """Check grading, super antisymmetry and the super Jacobi identity on basis elements."""
    rep = ValidationReport()
    n, par, nm = g.dim, g.parities, g.names
    for (i, j), row in g.table_items():
        for k in row:
            if par[k] != (par[i] + par[j]) % 2:
                rep.violations.append(Violation("grading", (nm[i], nm[j]), f"component along {nm[k]}"))
                break
    for i in range(n):
        for j in range(i, n):
            sign = -((-1) ** (par[i] * par[j]))
            fwd = g.structure(i, j)
            back = g.structure(j, i)
            if {k: sign * c for k, c in fwd.items()} != back:
                rep.violations.append(Violation("antisymmetry", (nm[i], nm[j])))
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                if any(_jacobi_defect(g, i, j, k)):
                    rep.violations.append(Violation("jacobi", (nm[i], nm[j], nm[k])))
    return rep


def sparse_bracket(g: LieSuperalgebra, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, ai in a.items():
        for j, bj in b.items():
            for k, c in g._table.get((i, j), {}).items():
                out[k] = out.get(k, 0) + ai * bj * c
    return {k: c for k, c in out.items() if c}


def _jacobi_defect(g: LieSuperalgebra, i: int, j: int, k: int) -> dict[int, Fraction]:
    # (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
    p = g.parities
    out: dict[int, Fraction] = {}
    for s, x, y, z in (
        ((-1) ** (p[i] * p[k]), i, j, k),
        ((-1) ** (p[j] * p[i]), j, k, i),
        ((-1) ** (p[k] * p[j]), k, i, j),
    ):
        inner = g._table.get((y, z))
        if not inner:
            continue
        for m, val in sparse_bracket(g, {x: Fraction(1)}, inner).items():
            out[m] = out.get(m, 0) + s * val
    return {m: c for m, c in out.items() if c}


# -- matrix algebras ----------------------------------------------------------

@dataclass(frozen=True)
class MatrixElement:
    """Square block matrix in gl(m|n); ``entries`` is a tuple of rows of Fractions."""

    entries: tuple
    m: int
    n: int

    def __post_init__(self):
        size = self.m + self.n
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.entries)
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"matrix must be {size}x{size} for block sizes ({self.m}, {self.n})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def unit(cls, i: int, j: int, m: int, n: int) -> MatrixElement:
        """Matrix unit e_ij (1-based indices)."""
        size = m + n
        rows = [[0] * size for _ in range(size)]
        rows[i - 1][j - 1] = 1
        return cls(rows, m, n)

    def parity(self) -> int | None:
        """0 or 1 for homogeneous matrices, None for mixed, 0 for zero."""
        m = self.m
        diag = any(c for r, row in enumerate(self.entries) for s, c in enumerate(row) if (r < m) == (s < m))
        off = any(c for r, row in enumerate(self.entries) for s, c in enumerate(row) if (r < m) != (s < m))
        if diag and off:
            return None
        return ODD if off else EVEN

    def __add__(self, other: MatrixElement) -> MatrixElement:
        return MatrixElement(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.m, self.n
        )

    def __sub__(self, other: MatrixElement) -> MatrixElement:
        return self + other.scale(-1)

    def scale(self, c) -> MatrixElement:
        return MatrixElement([[c * a for a in r] for r in self.entries], self.m, self.n)

    def __matmul__(self, other: MatrixElement) -> MatrixElement:
        size = self.m + self.n
        out = [[Fraction(0)] * size for _ in range(size)]
        for i, row in enumerate(self.entries):
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.entries[k]):
                        if b:
                            out[i][j] += a * b
        return MatrixElement(out, self.m, self.n)

    def flat(self) -> list[Fraction]:
        return [c for row in self.entries for c in row]


def supertrace(X: MatrixElement) -> Fraction:
    """tr(A) - tr(D) for the block decomposition of X."""
    size = X.m + X.n
    return sum((X.entries[i][i] for i in range(X.m)), Fraction(0)) - sum(
        (X.entries[i][i] for i in range(X.m, size)), Fraction(0)
    )


def supercommutator(X: MatrixElement, Y: MatrixElement) -> MatrixElement:
    px, py = X.parity(), Y.parity()
    if px is None or py is None:
        raise ValueError("supercommutator needs homogeneous matrices")
    return (X @ Y) - (Y @ X).scale((-1) ** (px * py))


def from_matrix_basis(
    names: Sequence[str], mats: Sequence[MatrixElement], label: str | None = None
) -> LieSuperalgebra:
    """Structure constants of the span of homogeneous matrices under the supercommutator."""
    parities = []
    for nm, X in zip(names, mats):
        p = X.parity()
        if p is None:
            raise AlgebraError(f"basis matrix {nm} is not homogeneous")
        parities.append(p)
    solver = CoordinateSolver([X.flat() for X in mats])
    table = {}
    for (i, X), (j, Y) in product(enumerate(mats), repeat=2):
        coords = solver.coords(supercommutator(X, Y).flat())
        row = {k: c for k, c in enumerate(coords) if c}
        if row:
            table[(i, j)] = row
    return LieSuperalgebra(names, parities, table, label=label)


def _unit_name(i: int, j: int, size: int) -> str:
    return f"e{i}{j}" if size < 10 else f"e{i}_{j}"


def _block_units(m: int, n: int, diagonal: bool = True):
    size = m + n
    even, odd = [], []
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i == j and not diagonal:
                continue
            (even if (i <= m) == (j <= m) else odd).append((i, j))
    return even, odd


def gl_matrices(m: int, n: int) -> tuple[list[str], list[MatrixElement]]:
    """Named basis matrices used by :func:`build_gl`."""
    if m < 1 or n < 1:
        raise AlgebraError("gl(m,n) needs m, n >= 1")
    if (m, n) == (1, 1):
        e = lambda i, j: MatrixElement.unit(i, j, 1, 1)
        return ["x", "y", "u", "v"], [e(1, 1) + e(2, 2), e(1, 1), e(1, 2), e(2, 1)]
    even, odd = _block_units(m, n)
    size = m + n
    units = even + odd
    return [_unit_name(i, j, size) for i, j in units], [MatrixElement.unit(i, j, m, n) for i, j in units]


def build_gl(m: int, n: int) -> LieSuperalgebra:
    """gl(m,n) on matrix units, even units first; gl(1,1) uses x = id, y = e11, u = e12, v = e21."""
    names, mats = gl_matrices(m, n)
    return from_matrix_basis(names, mats, label=f"gl({m},{n})")


def sl_matrices(m: int, n: int) -> tuple[list[str], list[MatrixElement]]:
    if m < 1 or n < 1:
        raise AlgebraError("sl(m,n) needs m, n >= 1")
    size = m + n
    e = lambda i, j: MatrixElement.unit(i, j, m, n)
    if (m, n) == (1, 1):
        return ["x", "u", "v"], [e(1, 1) + e(2, 2), e(1, 2), e(2, 1)]
    diag = []
    for k in range(1, size):
        # e_kk - e_k+1,k+1 has supertrace 0 inside a block; across the block boundary use the sum
        diag.append(e(k, k) + e(k + 1, k + 1) if k == m else e(k, k) - e(k + 1, k + 1))
    even, odd = _block_units(m, n, diagonal=False)
    names = [f"h{k}" for k in range(1, size)] + [_unit_name(i, j, size) for i, j in even + odd]
    return names, diag + [e(i, j) for i, j in even + odd]


def build_sl(m: int, n: int) -> LieSuperalgebra:
    """Supertrace-zero subalgebra of gl(m,n)."""
    names, mats = sl_matrices(m, n)
    return from_matrix_basis(names, mats, label=f"sl({m},{n})")


def abelian(p: int, q: int) -> LieSuperalgebra:
    """Abelian superalgebra with even generators a1..ap and odd generators b1..bq."""
    if p < 0 or q < 0:
        raise AlgebraError("abelian(p|q) needs p, q >= 0")
    names = [f"a{i}" for i in range(1, p + 1)] + [f"b{i}" for i in range(1, q + 1)]
    return LieSuperalgebra(names, [EVEN] * p + [ODD] * q, {}, label=f"abelian({p}|{q})")


def direct_sum(*parts: LieSuperalgebra) -> LieSuperalgebra:
    """Direct sum; names clashing across summands get a ``_k`` suffix (k = summand number)."""
    all_names = [nm for g in parts for nm in g.names]
    clash = {nm for nm in all_names if all_names.count(nm) > 1}
    names, parities, table = [], [], {}
    offset = 0
    for k, g in enumerate(parts, 1):
        rename = any(nm in clash for nm in g.names)
        names += [f"{nm}_{k}" if rename else nm for nm in g.names]
        parities += g.parities
        for (i, j), row in g.table_items():
            table[(i + offset, j + offset)] = {c + offset: v for c, v in row.items()}
        offset += g.dim
    return LieSuperalgebra(names, parities, table, label=" (+) ".join(g.label for g in parts))


# -- invariants of the algebra -------------------------------------------------

def dg(g: LieSuperalgebra) -> PolyQ:
    """det([y_i, y_j]) over S(g_0), odd basis y_1..y_m in declaration order."""
    rep = validate(g)
    if not rep.ok:
        raise AlgebraError(f"invalid algebra {g.label}: {rep}")
    even = g.even
    variables = tuple(g.names[i] for i in even)
    pos = {idx: n for n, idx in enumerate(even)}
    mat = []
    for i in g.odd:
        row = []
        for j in g.odd:
            terms = {}
            for k, c in g.structure(i, j).items():
                exps = [0] * len(even)
                exps[pos[k]] = 1
                terms[tuple(exps)] = c
            row.append(PolyQ(variables, terms))
        mat.append(row)
    return poly_det(mat, variables)


def is_pi(g: LieSuperalgebra) -> bool:
    """True iff the even part is abelian; the answer is the same for U(g) and its bosonization."""
    return all(not g.structure(i, j) for i in g.even for j in g.even)
