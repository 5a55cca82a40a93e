"""Sparse multivariate polynomials over Python's exact integers, plus small
rectangular matrices over that ring.

Monomials are stored in a canonical sorted form, so polynomial equality is
structural and exact; this is what makes symbolic representation images
directly comparable.  No division, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass

# A monomial: ((var_index, exponent), ...) sorted by var index, exponents >= 1.
Mono = tuple

KINDS = ("tau", "eta", "zeta")


@dataclass(frozen=True)
class Variable:
    """A formal transcendental attached to an arrow.

    Variables are globally ordered by (arrow declaration position, kind
    order tau < eta < zeta); ``index`` is that position.
    """

    arrow: str
    kind: str
    index: int

    @property
    def name(self) -> str:
        return f"{self.kind}({self.arrow})"


def variable_table(arrow_names) -> dict[tuple[str, str], Variable]:
    """The tau/eta/zeta triple for each arrow, canonically indexed."""
    table: dict[tuple[str, str], Variable] = {}
    for i, arrow in enumerate(arrow_names):
        for j, kind in enumerate(KINDS):
            table[(arrow, kind)] = Variable(arrow, kind, 3 * i + j)
    return table


def variable_names(arrow_names) -> list[str]:
    """Names in global index order, for rendering polynomials."""
    return [f"{kind}({arrow})" for arrow in arrow_names for kind in KINDS]


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


class MultiPoly:
    """A sparse polynomial: map from monomial to nonzero integer coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Mono, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def variable(cls, index: int) -> "MultiPoly":
        return cls({((index, 1),): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def _coerce(value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return MultiPoly.const(value)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                del terms[m]
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = MultiPoly.const(1)
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        """Terms in the canonical graded order (total degree, then monomial)."""
        return sorted(self.terms.items(), key=lambda item: (_mono_deg(item[0]), item[0]))

    def key(self) -> tuple:
        """Canonical hashable form; equal polynomials have equal keys."""
        return tuple((m, c) for m, c in self.sorted_terms())

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if mixed or zero."""
        degrees = {_mono_deg(m) for m in self.terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def render(self, names) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [names[v] if e == 1 else f"{names[v]}^{e}" for v, e in mono]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        if self.is_zero:
            return "MultiPoly(0)"
        return f"MultiPoly({dict(self.sorted_terms())!r})"

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "exps": [[v, e] for v, e in m]}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        terms = {}
        for term in data:
            mono = tuple(sorted((int(v), int(e)) for v, e in term["exps"]))
            terms[mono] = int(term["coeff"])
        return cls(terms)


class PolyMatrix:
    """A rectangular matrix over MultiPoly, stored densely row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(
            e if isinstance(e, MultiPoly) else MultiPoly.const(e) for e in entries
        )
        if rows < 1 or cols < 1 or len(entries) != rows * cols:
            raise ValueError(f"need {rows}x{cols} = {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, [MultiPoly.zero()] * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls(
            size,
            size,
            [MultiPoly.const(1) if i == j else MultiPoly.zero() for i in range(size) for j in range(size)],
        )

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = MultiPoly.zero()
                for k in range(self.cols):
                    acc = acc + self.entry(i, k) * other.entry(k, j)
                entries.append(acc)
        return PolyMatrix(self.rows, other.cols, entries)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def key(self) -> tuple:
        return (self.rows, self.cols, tuple(e.key() for e in self.entries))

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    def to_json(self) -> list:
        return [
            [self.entry(i, j).to_json() for j in range(self.cols)]
            for i in range(self.rows)
        ]

    @classmethod
    def from_json(cls, data) -> "PolyMatrix":
        rows = [[MultiPoly.from_json(e) for e in row] for row in data]
        return cls.from_rows(rows)
