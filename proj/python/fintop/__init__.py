"""Finite topological spaces: subspaces, closure operators and initial topologies."""

from ._core import (
    MAX_POINTS,
    CarrierMismatch,
    ClosureOperator,
    Error,
    Function,
    LimitExceeded,
    NotRelativelyOpen,
    ParseError,
    PartialTable,
    PreconditionError,
    Topology,
    census,
    initial_topology,
    is_continuous,
    is_finer,
    maximal_open_representative,
    random_topology,
    subspace,
    subspace_canonical,
    subspace_via_closure,
    validate,
    validate_kuratowski,
    verify_weakest,
)

__all__ = [name for name in dir() if not name.startswith("_")]
