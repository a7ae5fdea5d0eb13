"""Structured exceptions.

Every domain error carries a short ``code`` so the CLI can embed it in a
report without string matching.
"""


class NLAlgError(Exception):
    code = "Error"

    def details(self):
        return {}


class DivisionByZero(NLAlgError, ZeroDivisionError):
    code = "DivisionByZero"


class DescriptorMismatch(NLAlgError, ValueError):
    code = "DescriptorMismatch"


class InvalidField(NLAlgError, ValueError):
    code = "InvalidField"


class ContainmentViolation(NLAlgError, ValueError):
    code = "ContainmentViolation"

    def __init__(self, i, j, sub, sup):
        # i, j are 1-based component indices; F_i embeds in F_j
        self.i, self.j = i, j
        super().__init__(f"component {i} ({sub}) embeds in component {j} ({sup})")

    def details(self):
        return {"i": self.i, "j": self.j}


class ArityTooSmall(NLAlgError, ValueError):
    code = "ArityTooSmall"


class ParseError(NLAlgError, ValueError):
    code = "SyntaxError"

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

    def details(self):
        return {"line": self.line} if self.line is not None else {}


class NotInField(NLAlgError, ValueError):
    code = "NotInField"


class DivisionByZeroPoly(DivisionByZero):
    code = "DivisionByZeroPoly"


class BothZero(NLAlgError, ValueError):
    code = "BothZero"


class ZeroPolynomial(NLAlgError, ValueError):
    code = "ZeroPolynomial"


class PositiveCharacteristic(NLAlgError, ValueError):
    code = "PositiveCharacteristic"


class DuplicateAbscissa(NLAlgError, ValueError):
    code = "DuplicateAbscissa"


class FactorizationIncomplete(NLAlgError):
    code = "FactorizationIncomplete"

    def __init__(self, factorization):
        self.factorization = factorization
        super().__init__("factorization contains factors that may be reducible")


class ShapeMismatch(NLAlgError, ValueError):
    code = "ShapeMismatch"


class SingularMatrix(NLAlgError, ValueError):
    code = "SingularMatrix"


class NotABasis(NLAlgError, ValueError):
    code = "NotABasis"


class AmbientMismatch(NLAlgError, ValueError):
    code = "AmbientMismatch"


class FieldMismatch(NLAlgError, ValueError):
    code = "FieldMismatch"


class NotInSpan(NLAlgError, ValueError):
    code = "NotInSpan"


class SplitFailure(NLAlgError):
    code = "SplitFailure"

    def __init__(self, component, factor):
        self.component = component
        self.factor = factor
        where = f"component {component}: " if component is not None else ""
        super().__init__(f"{where}factor {factor} does not split")

    def details(self):
        return {"component": self.component, "factor": str(self.factor)}


class NeedsFactorization(NLAlgError):
    code = "NeedsFactorization"


class NotInvariant(NLAlgError, ValueError):
    code = "NotInvariant"


class NotADirectSum(NLAlgError, ValueError):
    code = "NotADirectSum"

    def __init__(self, condition, component=None):
        self.condition = condition
        self.component = component
        super().__init__(f"not a direct sum: {condition}")

    def details(self):
        return {"condition": self.condition, "component": self.component}


class NotCommuting(NLAlgError, ValueError):
    code = "NotCommuting"

    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"operators {i} and {j} do not commute")

    def details(self):
        return {"i": self.i, "j": self.j}


class NotDiagonalizable(NLAlgError, ValueError):
    code = "NotDiagonalizable"

    def __init__(self, k):
        self.k = k
        super().__init__(f"operator {k} is not diagonalizable")

    def details(self):
        return {"k": self.k}


class UnorderedField(NLAlgError, ValueError):
    code = "UnorderedField"


class DependentInput(NLAlgError, ValueError):
    code = "DependentInput"


class NotSelfAdjoint(NLAlgError, ValueError):
    code = "NotSelfAdjoint"


class NotSymmetric(NLAlgError, ValueError):
    code = "NotSymmetric"


class CharacteristicTwo(NLAlgError, ValueError):
    code = "CharacteristicTwo"


class UndefinedName(NLAlgError, KeyError):
    code = "UndefinedName"

    def __str__(self):
        return Exception.__str__(self)


class UnknownField(NLAlgError, ValueError):
    code = "UnknownField"


class TooLargeForOracle(NLAlgError, ValueError):
    code = "TooLargeForOracle"
