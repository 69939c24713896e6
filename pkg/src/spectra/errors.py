"""Exception types shared across the package.

Every error raised on bad input or a failed structural check derives from
SpectraError, so callers (and the CLI) can distinguish "the input was not a
topology / ring / filter" from a genuine bug.
"""

from __future__ import annotations


class SpectraError(Exception):
    """Base class for validation and verification failures."""


class ValidationError(SpectraError):
    """Structurally malformed input (bad shapes, unknown labels, duplicates)."""


class MissingEmptyOrFull(SpectraError):
    """A candidate open-set family lacks the empty set or the full point set."""


class NotClosedUnderUnion(SpectraError):
    """A candidate open-set family with a witness pair whose union is missing."""

    def __init__(self, first, second):
        self.witness = (first, second)
        super().__init__(f"union of {first!r} and {second!r} is not in the family")


class NotClosedUnderIntersection(SpectraError):
    """A candidate open-set family with a witness pair whose intersection is missing."""

    def __init__(self, first, second):
        self.witness = (first, second)
        super().__init__(f"intersection of {first!r} and {second!r} is not in the family")


class NotContinuous(SpectraError):
    """A point assignment whose preimage of some open set is not open."""

    def __init__(self, open_labels):
        self.witness = open_labels
        super().__init__(f"preimage of open {open_labels!r} is not open in the source")


class InvalidPartition(SpectraError):
    """Blocks that are empty, overlapping, or fail to cover the space."""


class AlgebraAxiomError(SpectraError):
    """An operation table violating a lattice or complement axiom, with witness."""

    def __init__(self, law: str, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"{law} fails at {witness!r}")


class RingAxiomError(SpectraError):
    """An operation table violating a commutative-ring axiom, with witness."""

    def __init__(self, law: str, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"{law} fails at {witness!r}")


class NotAFilter(SpectraError):
    """A member set violating one of the filter axioms."""


class NotUltrafilter(SpectraError):
    """A filter that is not maximal proper."""


class NotIdempotent(SpectraError):
    """A ring element e with e*e != e passed where an idempotent is required."""


class NotProfiniteTarget(SpectraError):
    """A reflection target that is not a finite profinite (discrete) space."""


class MismatchWitness(SpectraError):
    """A verified correspondence failed; carries the offending object."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class CapExceeded(SpectraError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, what: str, requested, limit):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds cap {limit}")
