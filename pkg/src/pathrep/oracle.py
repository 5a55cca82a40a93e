"""Independent brute-force verification of representations.

A truncated representation is checked completely: every semigroup element
is enumerated and compared.  A path-semigroup representation is checked up
to a length bound (faithfulness beyond the bound is a theorem; the bound
guards the implementation).  The lower-bound search over the two-element
field exhausts every dimension splitting and every arrow assignment on
deliberately tiny instances.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .paths import Path, enumerate_paths, path_str
from .polyring import PolyMatrix
from .quiver import Quiver, length_profile
from .repbuild import GradedRep, SymbolicRep, _entry_is_zero, _identity, _mat_mul, mat_is_zero

EFFECTIVE = "effective"
COLLISION = "collision"
ZERO_ACTION = "zero_action"
RELATION_VIOLATION = "relation_violation"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a verification run.

    ``checked`` counts the semigroup elements examined, the zero element
    included.  A non-effective status always carries a concrete witness:
    the offending path, or the colliding pair.
    """

    status: str
    checked: int
    max_length: int
    witness: tuple[str, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.status == EFFECTIVE

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "checked": self.checked,
            "max_length": self.max_length,
            "witness": None if self.witness is None else list(self.witness),
        }


def _check_match(rep, q: Quiver):
    if tuple(rep.dims) != q.vertices or tuple(rep.matrices) != q.arrow_names():
        raise ValueError("representation does not match the quiver")


def _matrix_key(m):
    return m.key() if isinstance(m, PolyMatrix) else m


def _image_is_zero(m) -> bool:
    return m.is_zero if isinstance(m, PolyMatrix) else mat_is_zero(m)


def _level_stream(rep, q: Quiver, max_len: int, threads: int = 1):
    """Yield (length, [(path, matrix), ...]) for lengths 0..max_len.

    Each level reuses the previous level's images, so every path costs one
    matrix product.  With threads > 1 the products of a level are computed
    on a thread pool; ordering stays deterministic.
    """
    arrow_ids = tuple(rep.matrices)
    if isinstance(rep, SymbolicRep):
        def idmat(d):
            return PolyMatrix.identity(d)

        def mul(a, b):
            return a @ b
    else:
        symbolic_labels = rep.label_kind == "symbolic"

        def idmat(d):
            return _identity(d, symbolic_labels)

        mul = _mat_mul
    level = [
        (Path(v, v), idmat(rep.dims[q.vertices[v]])) for v in range(q.n)
    ]
    yield 0, level
    for length in range(1, max_len + 1):
        tasks = []
        for p, m in level:
            for ai in q.out_arrows[p.head]:
                nxt = Path(p.tail, q.arrows[ai].head, p.arrows + (ai,))
                tasks.append((nxt, rep.matrices[arrow_ids[ai]], m))
        if not tasks:
            return
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                mats = list(ex.map(lambda t: mul(t[1], t[2]), tasks))
        else:
            mats = [mul(am, m) for _, am, m in tasks]
        level = [(t[0], mat) for t, mat in zip(tasks, mats)]
        yield length, level


def verify_truncated(rep: GradedRep, q: Quiver, N: int, threads: int = 1) -> VerifyReport:
    """Complete faithfulness check of a truncated representation.

    Enumerates every element (all nonzero paths of length < N, the trivial
    paths, and the zero element) and checks that short paths act nonzero,
    that all images are pairwise distinct, and that every length-N
    composite acts as zero.  Images with different endpoints act on
    different blocks, so comparisons group by (source, target).
    """
    if not isinstance(rep, GradedRep):
        raise ValueError("verify_truncated needs a truncated representation")
    if rep.N != N:
        raise ValueError(f"representation was built for N={rep.N}, not N={N}")
    _check_match(rep, q)
    checked = 1  # the zero element
    seen: dict[tuple[int, int], dict] = {}
    for length, level in _level_stream(rep, q, N, threads):
        for p, m in level:
            if length == N:
                if not _image_is_zero(m):
                    return VerifyReport(RELATION_VIOLATION, checked, N - 1, (path_str(q, p),))
                continue
            checked += 1
            if _image_is_zero(m):
                return VerifyReport(ZERO_ACTION, checked, N - 1, (path_str(q, p),))
            group = seen.setdefault((p.tail, p.head), {})
            key = _matrix_key(m)
            other = group.get(key)
            if other is not None:
                return VerifyReport(
                    COLLISION, checked, N - 1, (path_str(q, other), path_str(q, p))
                )
            group[key] = p
    return VerifyReport(EFFECTIVE, checked, N - 1)


def verify_path_rep(rep: SymbolicRep, q: Quiver, max_len: int | None = None, threads: int = 1) -> VerifyReport:
    """Bounded faithfulness check of a path-semigroup representation.

    All paths of length <= max_len (default 2n + 2, enough to exercise
    every first-return cycle and inter-component transition at this scale)
    must act nonzero and pairwise differently.
    """
    if not isinstance(rep, SymbolicRep):
        raise ValueError("verify_path_rep needs a path-semigroup representation")
    _check_match(rep, q)
    if max_len is None:
        max_len = 2 * q.n + 2
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    checked = 1  # the zero element
    seen: dict[tuple[int, int], dict] = {}
    for _, level in _level_stream(rep, q, max_len, threads):
        for p, m in level:
            checked += 1
            if _image_is_zero(m):
                return VerifyReport(ZERO_ACTION, checked, max_len, (path_str(q, p),))
            group = seen.setdefault((p.tail, p.head), {})
            key = _matrix_key(m)
            other = group.get(key)
            if other is not None:
                return VerifyReport(
                    COLLISION, checked, max_len, (path_str(q, other), path_str(q, p))
                )
            group[key] = p
    return VerifyReport(EFFECTIVE, checked, max_len)


def verify_filtration(rep: GradedRep, q: Quiver) -> VerifyReport:
    """Audit the grade structure of a truncated representation.

    Every arrow matrix must have at most one nonzero entry per column, and
    that entry must send its basis vector strictly upward in grade without
    ever reaching grade N.  Vertices with an ungraded vector sit at an
    effective grade equal to the longest path into them.
    """
    if not isinstance(rep, GradedRep):
        raise ValueError("verify_filtration needs a truncated representation")
    _check_match(rep, q)
    prof = length_profile(q)
    basis_grades: dict[str, tuple[int, ...]] = {}
    for x in q.vertices:
        g = rep.grades[x]
        basis_grades[x] = g if g is not None else (int(prof[x][0]),)
    checked = 0
    for a in q.arrows:
        src = basis_grades[q.vertices[a.tail]]
        tgt = basis_grades[q.vertices[a.head]]
        m = rep.matrices[a.name]
        for col in range(len(src)):
            checked += 1
            nonzero_rows = [
                row for row in range(len(tgt)) if not _entry_is_zero(m[row][col])
            ]
            if len(nonzero_rows) > 1:
                return VerifyReport(RELATION_VIOLATION, checked, 0, (a.name,))
            if nonzero_rows:
                g_src = src[col]
                g_tgt = tgt[nonzero_rows[0]]
                if not (g_src < g_tgt <= rep.N - 1):
                    return VerifyReport(RELATION_VIOLATION, checked, 0, (a.name,))
    return VerifyReport(EFFECTIVE, checked, 0)


def exhaustive_lower_bound_f2(q: Quiver, N: int, total_dim: int) -> bool:
    """Whether some faithful representation of the level-N truncation exists
    with the given total dimension, over the two-element field.

    Tries every splitting of total_dim over the vertices and every 0/1
    assignment of arrow matrices, checking the truncation relations and
    pairwise distinctness of all element images.  Refuses instances beyond
    the tractability guard.
    """
    if N < 1 or total_dim < 1:
        raise ValueError("N and total_dim must be >= 1")
    if total_dim > 4 or len(q.arrows) * total_dim * total_dim > 20:
        raise ValueError(
            "exhaustive search bounds exceeded: "
            "need total_dim <= 4 and |arrows| * total_dim^2 <= 20"
        )
    paths = enumerate_paths(q, N)
    for dims in _compositions(total_dim, q.n):
        if 0 in dims:
            continue  # a trivial path would act as zero, clashing with the zero element
        if _f2_assignment_exists(q, N, dims, paths):
            return True
    return False


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _f2_assignment_exists(q: Quiver, N: int, dims, paths) -> bool:
    shapes = [(dims[a.head], dims[a.tail]) for a in q.arrows]
    choices = [range(2 ** (r * c)) for r, c in shapes]
    for assignment in itertools.product(*choices):
        mats = [
            _bits_to_matrix(bits, r, c) for bits, (r, c) in zip(assignment, shapes)
        ]
        if _f2_effective(q, N, dims, mats, paths):
            return True
    return False


def _bits_to_matrix(bits: int, rows: int, cols: int):
    return tuple(
        tuple((bits >> (i * cols + j)) & 1 for j in range(cols)) for i in range(rows)
    )


def _f2_mul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(mid)) % 2 for j in range(cols))
        for i in range(rows)
    )


def _f2_effective(q: Quiver, N: int, dims, mats, paths) -> bool:
    images: dict[Path, tuple] = {}
    seen: set = set()
    for p in paths:
        if p.is_trivial:
            d = dims[p.tail]
            m = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
        else:
            last = p.arrows[-1]
            prefix = Path(p.tail, q.arrows[last].tail, p.arrows[:-1])
            m = _f2_mul(mats[last], images[prefix])
        images[p] = m
        zero = all(e == 0 for row in m for e in row)
        if p.length >= N:
            if not zero:
                return False  # the truncation relation fails
            continue
        if zero:
            return False  # collides with the zero element
        key = (p.tail, p.head, m)
        if key in seen:
            return False
        seen.add(key)
    return True
