class PunctureMetricError(Exception):
    message: str


class InvalidBellIndex(PunctureMetricError):
    def __init__(self, n: int, k: int, detail: str):
        self.message = f"[KRM:001] Invalid Bell polynomial index B({n},{k}): {detail}"
        super().__init__(self.message)


class SeriesPreconditionViolated(PunctureMetricError):
    def __init__(self, operation: str, detail: str):
        self.message = f"[KRM:002] {operation}: {detail}"
        super().__init__(self.message)


class NonInvertibleLeadingCoefficient(PunctureMetricError):
    def __init__(self, name: str):
        self.message = f"[KRM:003] {name} must be nonzero"
        super().__init__(self.message)


class UnsupportedLevel(PunctureMetricError):
    def __init__(self, level):
        self.message = (
            f"[KRM:004] Level N={level} is not supported by the Eisenstein recursion, "
            "expected one of 2, 3, 4, 5"
        )
        super().__init__(self.message)


class NonIntegralEtaQuotient(PunctureMetricError):
    def __init__(self, detail: str):
        self.message = f"[KRM:005] Eta quotient cannot be expanded in integral powers: {detail}"
        super().__init__(self.message)


class SingularLogarithm(PunctureMetricError):
    def __init__(self, modulus):
        self.message = f"[KRM:006] log|b1 p| vanishes or is undefined at |b1 p| = {modulus}"
        super().__init__(self.message)


class TruncationExceedsData(PunctureMetricError):
    def __init__(self, requested: int, available: int):
        self.message = (
            f"[KRM:007] Truncation order {requested} exceeds the covering data, "
            f"at most {available} terms are available"
        )
        super().__init__(self.message)


class SeriesDivergenceGuardTripped(PunctureMetricError):
    def __init__(self, detail: str):
        self.message = f"[KRM:008] Truncated series is not a reliable approximation here: {detail}"
        super().__init__(self.message)


class OutsideValidityRegion(PunctureMetricError):
    def __init__(self, modulus, radius):
        self.message = (
            f"[KRM:009] |b1 p| = {modulus} lies outside the validity region |b1 p| <= {radius}"
        )
        super().__init__(self.message)


class InvalidRationalLiteral(PunctureMetricError):
    def __init__(self, literal):
        self.message = f"[KRM:010] Not an exact rational literal: {literal!r}"
        super().__init__(self.message)


class InsufficientCoefficients(PunctureMetricError):
    def __init__(self, name: str, required: int, given: int):
        self.message = f"[KRM:011] {name} needs at least {required} coefficients, got {given}"
        super().__init__(self.message)


class InconsistentCoveringData(PunctureMetricError):
    def __init__(self, detail: str):
        self.message = f"[KRM:012] Covering data is inconsistent: {detail}"
        super().__init__(self.message)


class InvalidConfiguration(PunctureMetricError):
    def __init__(self, detail: str):
        self.message = f"[KRM:013] Configuration is invalid: {detail}"
        super().__init__(self.message)


class InvalidEvaluationPoint(PunctureMetricError):
    def __init__(self, detail: str):
        self.message = f"[KRM:014] Invalid evaluation point: {detail}"
        super().__init__(self.message)
