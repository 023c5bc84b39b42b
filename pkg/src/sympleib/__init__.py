"""Exact-arithmetic toolkit for symplectic left and right Leibniz algebras.

Everything runs over the rationals: identity checks return witnesses at
exact basis triples, compatible skew forms are solved for as linear
systems, star products and core decompositions come out of exact solves,
and double extensions are checked and rebuilt entry for entry.  The
``catalog`` module carries the verified example families; ``cli`` exposes
the whole kernel on files.
"""

from sympleib.algebra import (
    Algebra,
    IdentityReport,
    Witness,
    center,
    change_basis,
    derivations,
    is_left_leibniz,
    is_left_symmetric,
    is_lie,
    is_right_leibniz,
    is_symmetric_leibniz,
    leibniz_ideal,
    multiply,
    opposite,
    quotient,
)
from sympleib.core import CoreDecomposition, CoreError, core, verify_core_properties
from sympleib.exactlin import (
    Matrix,
    Rational,
    Subspace,
    basis_vector,
    intersect,
    kernel,
    rat,
    rref,
    solve,
    span,
    vector,
)
from sympleib.extension import (
    ExtensionData,
    LagrangianExtension,
    SymplecticLie,
    build_bisymplectic_from_T,
    build_commutative_bisymplectic,
    build_double_extension,
    build_inner_extension,
    build_lagrangian,
    build_left_symmetric,
    build_rank_one,
    check_full_system,
    check_isotropic_system,
    check_rank_one,
    check_reduced_system,
    rank_one_star,
)
from sympleib.fileformat import (
    FileFormatError,
    load_algebra,
    load_extension,
    parse_algebra,
    parse_extension,
    serialize_algebra,
)
from sympleib.reporting import Check, SystemReport
from sympleib.symplectic import (
    SkewForm,
    SymplecticAlgebra,
    find_nondegenerate,
    form_from_pairs,
    is_bi_symplectic,
    is_isotropic,
    is_lagrangian,
    is_symplectic_left,
    is_symplectic_right,
    omega,
    orthogonal,
    solve_symplectic_forms,
    star_left,
    star_right,
)

__all__ = [
    "Algebra",
    "Check",
    "CoreDecomposition",
    "CoreError",
    "ExtensionData",
    "FileFormatError",
    "IdentityReport",
    "LagrangianExtension",
    "Matrix",
    "Rational",
    "SkewForm",
    "Subspace",
    "SymplecticAlgebra",
    "SymplecticLie",
    "SystemReport",
    "Witness",
    "basis_vector",
    "build_bisymplectic_from_T",
    "build_commutative_bisymplectic",
    "build_double_extension",
    "build_inner_extension",
    "build_lagrangian",
    "build_left_symmetric",
    "build_rank_one",
    "center",
    "change_basis",
    "check_full_system",
    "check_isotropic_system",
    "check_rank_one",
    "check_reduced_system",
    "core",
    "derivations",
    "find_nondegenerate",
    "form_from_pairs",
    "intersect",
    "is_bi_symplectic",
    "is_isotropic",
    "is_lagrangian",
    "is_left_leibniz",
    "is_left_symmetric",
    "is_lie",
    "is_right_leibniz",
    "is_symmetric_leibniz",
    "is_symplectic_left",
    "is_symplectic_right",
    "kernel",
    "leibniz_ideal",
    "load_algebra",
    "load_extension",
    "multiply",
    "omega",
    "opposite",
    "orthogonal",
    "parse_algebra",
    "parse_extension",
    "quotient",
    "rank_one_star",
    "rat",
    "rref",
    "serialize_algebra",
    "solve",
    "solve_symplectic_forms",
    "span",
    "star_left",
    "star_right",
    "vector",
    "verify_core_properties",
]
