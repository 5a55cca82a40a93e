"""Construction of the two faithful representations: the symbolic block
representation of the full path semigroup, and the prime-labelled graded
representation of a truncation.

The symbolic construction gives each commutative-cycle vertex one dimension
and each noncommutative one two, and fills arrow matrices from a four-case
template over the formal variables tau/eta/zeta.  The graded construction
gives each vertex one basis vector per admissible grade (or a single
ungraded vector), and sends a grade-k vector along an arrow to the next
admissible grade above k, scaled by an injectively allocated label (a prime
by default, or a fresh formal variable).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimension import classify_path, k_profile
from .paths import Path
from .polyring import KINDS, MultiPoly, PolyMatrix, Variable, variable_table
from .quiver import Quiver


def _primes():
    known: list[int] = []
    c = 2
    while True:
        if all(c % p for p in known):
            known.append(c)
            yield c
        c += 1


def _entry_is_zero(e) -> bool:
    return e.is_zero if isinstance(e, MultiPoly) else e == 0


def _identity(size: int, symbolic: bool):
    one = MultiPoly.const(1) if symbolic else 1
    zero = MultiPoly.zero() if symbolic else 0
    return tuple(
        tuple(one if i == j else zero for j in range(size)) for i in range(size)
    )


def _mat_mul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0])
    if len(a[0]) != mid:
        raise ValueError(f"shape mismatch: {rows}x{len(a[0])} @ {mid}x{cols}")
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(mid)) for j in range(cols))
        for i in range(rows)
    )


def mat_is_zero(m) -> bool:
    return all(_entry_is_zero(e) for row in m for e in row)


@dataclass(frozen=True)
class SymbolicRep:
    """Two-block symbolic representation of the full path semigroup.

    ``dims`` and ``matrices`` are keyed by vertex / arrow id in declaration
    order; ``variables`` lists the tau/eta/zeta generators in their global
    index order.
    """

    dims: dict[str, int]
    matrices: dict[str, PolyMatrix]
    variables: tuple[Variable, ...]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def variable_names(self) -> list[str]:
        return [v.name for v in self.variables]

    def to_json(self) -> dict:
        return {
            "kind": "path",
            "vertex_dims": dict(self.dims),
            "variables": [
                {"arrow": v.arrow, "kind": v.kind, "index": v.index}
                for v in self.variables
            ],
            "arrows": [
                {
                    "id": name,
                    "shape": [m.rows, m.cols],
                    "matrix": m.to_json(),
                }
                for name, m in self.matrices.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SymbolicRep":
        if data.get("kind") != "path":
            raise ValueError("not a path-semigroup representation")
        dims = {str(k): int(v) for k, v in data["vertex_dims"].items()}
        variables = tuple(
            Variable(v["arrow"], v["kind"], int(v["index"])) for v in data["variables"]
        )
        matrices = {
            a["id"]: PolyMatrix.from_json(a["matrix"]) for a in data["arrows"]
        }
        return cls(dims, matrices, variables)


def build_path_rep(q: Quiver) -> SymbolicRep:
    """One dimension per commutative-cycle vertex, two per noncommutative one.

    Arrow matrices, shaped target-dim x source-dim:
    2x2 [[tau, eta], [0, zeta]] between two-dimensional vertices, the row
    (tau zeta) into a one-dimensional target, the column (tau; zeta) out of
    a one-dimensional source, and the scalar (tau) between one-dimensional
    vertices.  eta appears only in the 2x2 case.
    """
    doubled = set(classify_path(q).noncommutative)
    table = variable_table(q.arrow_names())
    dims = {x: 2 if x in doubled else 1 for x in q.vertices}
    matrices: dict[str, PolyMatrix] = {}
    for a in q.arrows:
        tau = MultiPoly.variable(table[(a.name, "tau")].index)
        eta = MultiPoly.variable(table[(a.name, "eta")].index)
        zeta = MultiPoly.variable(table[(a.name, "zeta")].index)
        source_doubled = q.vertices[a.tail] in doubled
        target_doubled = q.vertices[a.head] in doubled
        if source_doubled and target_doubled:
            rows = [[tau, eta], [MultiPoly.zero(), zeta]]
        elif source_doubled:
            rows = [[tau, zeta]]
        elif target_doubled:
            rows = [[tau], [zeta]]
        else:
            rows = [[tau]]
        matrices[a.name] = PolyMatrix.from_rows(rows)
    variables = tuple(sorted(table.values(), key=lambda v: v.index))
    return SymbolicRep(dims, matrices, variables)


def allocate_primes(q: Quiver, N: int) -> dict[tuple[str, int], int]:
    """Injective (arrow, grade) -> prime table: pairs in declaration-then-
    grade order get 2, 3, 5, 7, ..."""
    if N < 1:
        raise ValueError("N must be >= 1")
    gen = _primes()
    return {(a.name, k): next(gen) for a in q.arrows for k in range(N)}


def _symbolic_labels(q: Quiver, N: int):
    labels = {}
    names = []
    idx = 0
    for a in q.arrows:
        for k in range(N):
            labels[(a.name, k)] = MultiPoly.variable(idx)
            names.append(f"p({a.name},{k})")
            idx += 1
    return labels, names


@dataclass(frozen=True)
class GradedRep:
    """Graded representation of the level-N truncated path semigroup.

    ``grades[x]`` lists the basis grades in descending order (so grade-
    raising arrow matrices are strictly upper triangular), or is None for a
    vertex carrying a single ungraded vector.  Matrices are dense tuples of
    tuples with at most one nonzero entry per column, namely the label of
    (arrow, source grade).  ``label_kind`` is "primes" or "symbolic".
    """

    N: int
    dims: dict[str, int]
    grades: dict[str, tuple[int, ...] | None]
    matrices: dict[str, tuple]
    labels: dict[tuple[str, int], object]
    label_kind: str = "primes"
    label_variable_names: tuple[str, ...] = ()

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def _entry_json(self, e):
        return e.to_json() if isinstance(e, MultiPoly) else int(e)

    def to_json(self) -> dict:
        data = {
            "kind": "truncated",
            "truncation": self.N,
            "labels": self.label_kind,
            "vertex_dims": dict(self.dims),
            "basis_labels": {
                x: None if g is None else list(g) for x, g in self.grades.items()
            },
            "arrows": [
                {
                    "id": name,
                    "shape": [len(m), len(m[0])],
                    "matrix": [[self._entry_json(e) for e in row] for row in m],
                }
                for name, m in self.matrices.items()
            ],
        }
        table_key = "prime_table" if self.label_kind == "primes" else "label_table"
        data[table_key] = [
            [arrow, k, self._entry_json(v)]
            for (arrow, k), v in sorted(self.labels.items())
        ]
        if self.label_kind == "symbolic":
            data["label_variables"] = list(self.label_variable_names)
        return data

    @classmethod
    def from_json(cls, data) -> "GradedRep":
        if data.get("kind") != "truncated":
            raise ValueError("not a truncated-semigroup representation")
        kind = data["labels"]
        symbolic = kind == "symbolic"

        def entry(e):
            return MultiPoly.from_json(e) if symbolic else int(e)

        dims = {str(k): int(v) for k, v in data["vertex_dims"].items()}
        grades = {
            str(k): None if g is None else tuple(int(i) for i in g)
            for k, g in data["basis_labels"].items()
        }
        matrices = {
            a["id"]: tuple(tuple(entry(e) for e in row) for row in a["matrix"])
            for a in data["arrows"]
        }
        table = data["label_table" if symbolic else "prime_table"]
        labels = {(arrow, int(k)): entry(v) for arrow, k, v in table}
        names = tuple(data.get("label_variables", ()))
        return cls(int(data["truncation"]), dims, grades, matrices, labels, kind, names)


def build_truncated_rep(q: Quiver, N: int, labels: str = "primes") -> GradedRep:
    """Basis per admissible grade, arrows jump to the next admissible grade.

    Rules, for an arrow x -> y and a source basis vector:
      - grade N-1 at a graded source with graded target dies;
      - grade k < N-1 between graded vertices goes to the least admissible
        grade of y above k;
      - a graded source feeding an ungraded target hits its single vector
        (full-length grades cannot occur here);
      - an ungraded source acts with the grade-0 label, landing on the
        least admissible grade of a graded target or the single vector.
    Paths of length >= N then vanish automatically: they only ever traverse
    graded vertices and each step strictly raises the grade.
    """
    if labels not in ("primes", "symbolic"):
        raise ValueError("labels must be 'primes' or 'symbolic'")
    kp = k_profile(q, N)
    symbolic = labels == "symbolic"
    if symbolic:
        label_map, label_names = _symbolic_labels(q, N)
    else:
        label_map, label_names = allocate_primes(q, N), []
    zero = MultiPoly.zero() if symbolic else 0
    grades: dict[str, tuple[int, ...] | None] = {}
    pos: dict[str, dict[int, int]] = {}
    dims: dict[str, int] = {}
    for x in q.vertices:
        w = kp.window[x]
        if w is None:
            grades[x] = None
            dims[x] = 1
        else:
            lo, hi = w
            desc = tuple(range(hi, lo - 1, -1))
            grades[x] = desc
            dims[x] = len(desc)
            pos[x] = {g: i for i, g in enumerate(desc)}
    matrices: dict[str, tuple] = {}
    for a in q.arrows:
        x = q.vertices[a.tail]
        y = q.vertices[a.head]
        m = [[zero] * dims[x] for _ in range(dims[y])]
        wx = kp.window[x]
        wy = kp.window[y]
        if wx is not None:
            for k in range(wx[0], wx[1] + 1):
                col = pos[x][k]
                if wy is not None:
                    if k == N - 1:
                        continue
                    j = max(wy[0], k + 1)
                    assert j <= wy[1], "no admissible grade above the source grade"
                    m[pos[y][j]][col] = label_map[(a.name, k)]
                else:
                    # a grade-(N-1) source would force the target to carry a
                    # full-length path too, contradicting its empty window
                    assert k < N - 1
                    m[0][col] = label_map[(a.name, k)]
        else:
            row = pos[y][wy[0]] if wy is not None else 0
            m[row][0] = label_map[(a.name, 0)]
        matrices[a.name] = tuple(tuple(r) for r in m)
    return GradedRep(N, dims, grades, matrices, label_map, labels, tuple(label_names))


@dataclass(frozen=True)
class RepImage:
    """The value of a path: endpoints plus a matrix.

    The zero path maps to a flagged zero without endpoints; any all-zero
    matrix counts as the single semigroup zero regardless of its shape.
    """

    source: str | None
    target: str | None
    matrix: object | None

    @property
    def is_zero(self) -> bool:
        if self.matrix is None:
            return True
        if isinstance(self.matrix, PolyMatrix):
            return self.matrix.is_zero
        return mat_is_zero(self.matrix)


def rep_of_path(rep, p: Path) -> RepImage:
    """Evaluate a representation on a path.

    Trivial paths give identity blocks, composites multiply the arrow
    matrices in composition order (last arrow leftmost); in a truncated
    representation any path of length >= N comes out all-zero by the grade
    structure, with no special-casing.
    """
    if p.is_zero:
        return RepImage(None, None, None)
    vertex_ids = tuple(rep.dims)
    arrow_ids = tuple(rep.matrices)
    src = vertex_ids[p.tail]
    tgt = vertex_ids[p.head]
    if isinstance(rep, SymbolicRep):
        m = PolyMatrix.identity(rep.dims[src])
        for ai in p.arrows:
            m = rep.matrices[arrow_ids[ai]] @ m
    else:
        m = _identity(rep.dims[src], rep.label_kind == "symbolic")
        for ai in p.arrows:
            m = _mat_mul(rep.matrices[arrow_ids[ai]], m)
    return RepImage(src, tgt, m)


def loop_matrices(letters) -> dict[str, PolyMatrix]:
    """Upper-triangular 2x2 matrices [[tau, eta], [0, zeta]], one per letter."""
    letters = list(letters)
    table = variable_table(letters)
    out = {}
    for letter in letters:
        tau, eta, zeta = (
            MultiPoly.variable(table[(letter, kind)].index) for kind in KINDS
        )
        out[letter] = PolyMatrix.from_rows([[tau, eta], [MultiPoly.zero(), zeta]])
    return out


def corner_entry(word, letters=None) -> MultiPoly:
    """Closed form for the upper-right entry of a product of letter matrices.

    For a word w1...wl multiplied in the written order the entry is the sum
    over positions i of tau(w1)...tau(w_{i-1}) * eta(w_i) *
    zeta(w_{i+1})...zeta(wl).  ``letters`` fixes the variable indexing and
    defaults to the sorted letters of the word.
    """
    word = list(word)
    if not word:
        raise ValueError("word must be nonempty")
    if letters is None:
        letters = sorted(set(word))
    table = variable_table(letters)
    total = MultiPoly.zero()
    for i in range(len(word)):
        term = MultiPoly.const(1)
        for j in range(i):
            term = term * MultiPoly.variable(table[(word[j], "tau")].index)
        term = term * MultiPoly.variable(table[(word[i], "eta")].index)
        for j in range(i + 1, len(word)):
            term = term * MultiPoly.variable(table[(word[j], "zeta")].index)
        total = total + term
    return total
