"""Exception types shared across the library.

The command line maps these onto exit codes, so keeping them in one place
keeps that mapping honest: format/syntax problems are distinct from size-cap
refusals, which are distinct from order-theoretic dead ends.
"""


class ModelFormatError(Exception):
    """A model file or document is structurally unusable (not schema-valid JSON)."""


class FormulaSyntaxError(Exception):
    """A formula string fails to parse.  Carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BindingError(Exception):
    """A formula mentions a name the signature does not declare for its role."""


class SizeCapExceeded(Exception):
    """An operation would exceed its configured size cap.

    Caps are hard errors by design: no silent truncation, the caller must
    raise the cap explicitly.
    """


class TrivialModelError(Exception):
    """An argument model admits no ultrafilters, so no epistemic model can be read off it."""
