"""Domain errors.  Each carries a stable ``code`` used by the CLI."""


class G2RollError(Exception):
    code = "DomainError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        out.update(self.details)
        return out


class NotNull(G2RollError):
    code = "NotNull"


class ZeroVector(G2RollError):
    code = "Zero"


class NotCanonical(G2RollError):
    code = "NotCanonical"


class NotCollinear(G2RollError):
    code = "NotCollinear"


class NotTwoRolls(G2RollError):
    code = "NotTwoRolls"


class WrongDistance(G2RollError):
    code = "WrongDistance"


class InvalidTriple(G2RollError):
    code = "InvalidTriple"

    def __init__(self, message: str, failures):
        super().__init__(message, failures=list(failures))
        self.failures = list(failures)


class DifferentOrbits(G2RollError):
    code = "DifferentOrbits"


class NotInG2(G2RollError):
    code = "NotInG2"
