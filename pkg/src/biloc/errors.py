"""Exception types shared across the workbench."""

from __future__ import annotations


class BilocError(Exception):
    """Base class for all structured errors raised by this package."""


class CycleInOrder(BilocError):
    """The generating order relation violates antisymmetry."""

    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"order cycle: {a} <= {b} and {b} <= {a}")


class NotALattice(BilocError):
    """Some pair of elements has no meet or no join."""

    def __init__(self, kind, a, b):
        self.kind = kind
        self.witness = (a, b)
        super().__init__(f"pair ({a}, {b}) has no {kind}")


class NotAFrame(BilocError):
    """Distributivity fails, so Heyting operations are unavailable."""

    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"distributivity fails at ({a}, {b}, {c})")


class TooLarge(BilocError):
    """A size cap was exceeded; pass an explicit override to proceed."""


class MixedParents(BilocError):
    """Sublocale operands live in different lattices."""


class NotInPart(BilocError):
    """Element is outside the bilocale part it was claimed to be in."""

    def __init__(self, element, part):
        self.element = element
        self.part = part
        super().__init__(f"element {element} is not in part {part}")


class NotASubframe(BilocError):
    """A claimed part is not a subframe of the total lattice."""

    def __init__(self, part, witness):
        self.part = part
        self.witness = witness
        super().__init__(f"part {part} is not a subframe: {witness}")


class GenerationFails(BilocError):
    """The bilocale generation axiom fails at a witness element."""

    def __init__(self, element):
        self.witness = element
        super().__init__(f"generation axiom fails at element {element}")


class NotATopology(BilocError):
    """A declared open-set family is not closed as required."""

    def __init__(self, family, witness):
        self.family = family
        self.witness = witness
        super().__init__(f"open family {family}: {witness}")


class NotMeetPreserving(BilocError):
    """A map table does not preserve all meets."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"meet preservation fails: {witness}")


class AdjointNotFrameHom(BilocError):
    """The left adjoint of a meet-preserving map is not a frame hom."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"adjoint is not a frame homomorphism: {witness}")


class PartViolation(BilocError):
    """A bilocalic map does not respect the indexed parts."""

    def __init__(self, index, witness):
        self.index = index
        self.witness = witness
        super().__init__(f"part {index} condition fails: {witness}")


class HypothesisViolated(BilocError):
    """A categorical law was asked about a diagram outside its scope."""


class UnknownCheckId(BilocError):
    """A property id is not present in the check registry."""


class UnknownVerb(BilocError):
    """The CLI was invoked with an unrecognized subcommand."""


class ParseError(BilocError):
    """A structure file is malformed."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
