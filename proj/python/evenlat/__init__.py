"""Exact lattice and discriminant form computations."""

from ._evenlat import (
    GuardExceeded,
    ParseError,
    PreconditionError,
    are_isomorphic,
    complement,
    disc,
    embed_check,
    hnf,
    inverse,
    isotropic,
    isotropic_subgroups,
    lattice,
    overlattices,
    reconstruct,
    result_ids,
    signature,
    snf,
    snf_rational,
    verify,
)

__all__ = [
    "GuardExceeded",
    "ParseError",
    "PreconditionError",
    "are_isomorphic",
    "complement",
    "disc",
    "embed_check",
    "hnf",
    "inverse",
    "isotropic",
    "isotropic_subgroups",
    "lattice",
    "overlattices",
    "reconstruct",
    "result_ids",
    "signature",
    "snf",
    "snf_rational",
    "verify",
]
