"""Exception types shared across the package."""


class LatSpecError(Exception):
    """Base class for every error raised by this package."""


class SourceError(LatSpecError):
    """Malformed input: syntax errors, unknown names, incomplete tables."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = str(path)
            if line is not None:
                prefix += f":{line}"
            prefix += ": "
        elif line is not None:
            prefix = f"line {line}: "
        super().__init__(prefix + message)


class VerificationError(LatSpecError):
    """A mathematical invariant failed; carries the offending witness."""

    def __init__(self, message, witness=None):
        self.witness = tuple(witness) if witness is not None else None
        if self.witness:
            message = f"{message} [witness: {', '.join(map(str, self.witness))}]"
        super().__init__(message)


class LatticeError(VerificationError):
    """Lattice axiom or precondition violated."""


class SpaceError(VerificationError):
    """Topology invariant or precondition violated."""


class MorphismError(VerificationError):
    """A map between lattices or spaces breaks a preservation law."""


class DatumError(VerificationError):
    """A spectrum or support assignment breaks one of its axioms."""


class SemiringError(VerificationError):
    """Semiring axiom violated, or an instance is too large to enumerate."""


class ClosureError(VerificationError):
    """A closure system breaks meet, directed-join, or projection laws."""


class DecompositionError(VerificationError):
    """Decomposition precondition violated."""
