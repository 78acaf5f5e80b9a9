"""Exception types shared across gmtkit."""


class GMTError(Exception):
    pass


class InvalidParams(GMTError, ValueError):
    pass


class NonExactDivision(GMTError, ArithmeticError):
    pass


class ZeroConstantTerm(GMTError, ArithmeticError):
    pass


class NonzeroConstantTerm(GMTError, ArithmeticError):
    pass


class CertificateNotFound(GMTError, RuntimeError):
    pass


class NotApplicable(GMTError, ValueError):
    pass


class NeedsCorrelator(GMTError, LookupError):
    """Raised when the recursion needs a multi-point correlator nobody supplied."""

    def __init__(self, key):
        self.key = key
        super().__init__(f"missing correlator {key}")


class ConflictError(GMTError, ValueError):
    pass


class ParseError(GMTError, ValueError):
    def __init__(self, msg, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = "" if line is None else f" (line {line}, offset {offset})"
        super().__init__(msg + where)


class MismatchReport(GMTError, AssertionError):
    def __init__(self, rows):
        self.rows = rows
        bad = [r for r in rows if not r["ok"]]
        super().__init__(f"{len(bad)} mismatching degree(s): {bad}")
