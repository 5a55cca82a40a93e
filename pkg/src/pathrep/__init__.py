"""Exact computation of minimal faithful matrix representations of path
semigroups and truncated path semigroups of finite quivers."""

from .dimension import (
    KProfile,
    PathClassification,
    Stabilization,
    classify_path,
    d_value,
    effdim_path,
    effdim_truncated,
    k_profile,
    line_quiver_effdim,
    report,
    stabilization,
)
from .oracle import (
    VerifyReport,
    exhaustive_lower_bound_f2,
    verify_filtration,
    verify_path_rep,
    verify_truncated,
)
from .paths import (
    ZERO,
    CycleBasis,
    Path,
    arrow_path,
    compose,
    enumerate_paths,
    factorize_cycle,
    first_return_cycles,
    is_commutative_at,
    make_path,
    path_str,
    trivial,
)
from .polyring import KINDS, MultiPoly, PolyMatrix, Variable, variable_table
from .quiver import (
    INF,
    Arrow,
    ExtLen,
    Quiver,
    QuiverError,
    SccPartition,
    length_profile,
    parse_quiver,
    sccs,
)
from .repbuild import (
    GradedRep,
    RepImage,
    SymbolicRep,
    allocate_primes,
    build_path_rep,
    build_truncated_rep,
    corner_entry,
    loop_matrices,
    rep_of_path,
)

__all__ = [
    "INF",
    "Arrow",
    "CycleBasis",
    "ExtLen",
    "GradedRep",
    "KINDS",
    "KProfile",
    "MultiPoly",
    "Path",
    "PathClassification",
    "PolyMatrix",
    "Quiver",
    "QuiverError",
    "RepImage",
    "SccPartition",
    "Stabilization",
    "SymbolicRep",
    "Variable",
    "VerifyReport",
    "ZERO",
    "allocate_primes",
    "arrow_path",
    "build_path_rep",
    "build_truncated_rep",
    "classify_path",
    "compose",
    "corner_entry",
    "d_value",
    "effdim_path",
    "effdim_truncated",
    "enumerate_paths",
    "exhaustive_lower_bound_f2",
    "factorize_cycle",
    "first_return_cycles",
    "is_commutative_at",
    "k_profile",
    "length_profile",
    "line_quiver_effdim",
    "loop_matrices",
    "make_path",
    "parse_quiver",
    "path_str",
    "rep_of_path",
    "report",
    "sccs",
    "stabilization",
    "trivial",
    "variable_table",
    "verify_filtration",
    "verify_path_rep",
    "verify_truncated",
]
