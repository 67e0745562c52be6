"""Shared exception types."""


class StructuralError(RuntimeError):
    """An internal identity that must hold by construction failed; signals a
    convention or data-corruption bug, never bad user input."""


class ExpansionError(RuntimeError):
    """A basis expansion left a nonzero remainder inside its trusted window."""


class VerificationFailure(RuntimeError):
    """A verification suite found a violated invariant."""
