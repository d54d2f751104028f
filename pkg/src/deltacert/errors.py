"""Exception hierarchy for the toolkit.

Input problems (bad tables, bad specs, oversized constructions) and
verification negatives (a group genuinely failing a check) are kept on
separate branches so the CLI can map them to distinct exit codes.
"""

from __future__ import annotations


class DeltaCertError(Exception):
    """Base class for all toolkit errors."""


class InputError(DeltaCertError):
    """Malformed or unsupported input; maps to CLI exit 2."""


class VerificationError(DeltaCertError):
    """A check ran and produced a negative outcome; maps to CLI exit 1."""


class NotAGroup(InputError):
    """A multiplication table violates one of the group axioms.

    ``kind`` is one of ``shape``, ``row``, ``column``, ``identity``,
    ``inverse``, ``associativity``; ``witness`` carries the failing row,
    column, element, or (i, j, k) triple.
    """

    def __init__(self, message: str, *, kind: str, witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class SizeLimitExceeded(InputError):
    """A construction would exceed the configured group-size bound."""


class InvalidAction(InputError):
    """A twisting action is not a homomorphism into the automorphisms."""


class UnsupportedC(InputError):
    """The requested target order is outside the supported set.

    In particular 720 is rejected: the supported orders stop at 120.
    """


class InvalidSpec(InputError):
    """A target spec violates its own consistency rules."""


class UnsupportedParams(InputError):
    """An unknown standard-construction name or bad parameter."""


class NotIndexTwo(InputError):
    """The supplied subgroup does not have index 2."""


class SearchBudgetExceeded(DeltaCertError):
    """The isomorphism search exhausted its node budget inconclusively."""


class NotStable(VerificationError):
    """Conjugation moved a marking-set block outside the block family."""


class PropertyViolation(VerificationError):
    """A structural expectation failed on the input group.

    Raised when a construction or replay step that is guaranteed for a
    certified group fails, which signals the input never satisfied the
    certified properties in the first place.
    """


class UniquenessViolated(VerificationError):
    """A catalog sweep found zero or more than one certified group."""
