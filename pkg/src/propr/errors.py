"""Exception hierarchy.

User-facing problems (bad input, groups too large to enumerate) derive from
InputError and map to CLI exit code 1.  InternalInvariantError marks a
violated structural guarantee -- something the library promises is always
true of its own output -- and maps to exit code 2.
"""


class ProprError(Exception):
    """Base class for all library errors."""


class InputError(ProprError):
    """Invalid user input: bad parameters, malformed text, oversized jobs."""


class SpecParseError(InputError):
    """Group specification text could not be parsed."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position} in {text!r})")


class SignatureParseError(InputError):
    """Star signature text could not be parsed."""


class ElementCapError(InputError):
    """Element enumeration exceeded the configured cap."""


class NotAHomomorphismError(ProprError):
    """The supplied generator images do not extend to a homomorphism.

    ``witness`` is a domain element that would need two distinct images.
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class InternalInvariantError(ProprError):
    """A structural guarantee of the library failed to hold."""
