class LatnakException(Exception):
    """
    Base exception for latnak
    """

    pass


class PreconditionError(LatnakException):
    """
    Raised when an operation is called outside its hypotheses, e.g. a mutation whose
    M-gate fails or a Nakayama family with pq <= q + 1
    """

    def __init__(self, operation: str, message: str, witness: object | None = None):
        self.operation = operation
        self.message = message
        self.witness = witness
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        text = f"{self.operation}: {self.message}"

        if self.witness is not None:
            text += f" [{self.witness}]"

        return text


class ConfigError(LatnakException):
    """
    Raised when there is an error in the configuration of latnak
    """

    pass


class NonUnimodularCartan(LatnakException):
    """
    Raised when a Cartan matrix has determinant other than +1 or -1
    """

    def __init__(self, determinant: int):
        self.determinant = determinant
        super().__init__(f"Cartan matrix is not unimodular (det = {determinant})")


class AlgebraMismatch(LatnakException):
    """
    Raised when objects over different algebras are combined
    """

    pass


class ComplexError(LatnakException):
    """
    Raised when a complex of projectives is malformed (d^2 != 0, entries between wrong vertices)
    """

    pass


class NotAChainMap(ComplexError):
    """
    Raised when a cone is requested for a degreewise map that does not commute with the differentials
    """

    pass


class ResolutionError(LatnakException):
    """
    Raised when a projective resolution does not terminate within the global dimension bound
    """

    pass


class VerificationError(LatnakException):
    """
    Raised when a runtime post-condition fails (orthogonality of a projection, membership in a
    thick subcategory, transport of a family)
    """

    pass


class IsoSearchError(LatnakException):
    """
    Raised when the degree-zero Hom space searched by is_iso exceeds the configured cap
    """

    pass


class SerializationError(LatnakException):
    """
    Raised when a JSON artifact cannot be decoded
    """

    pass
