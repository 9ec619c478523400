"""Exception hierarchy shared across the package."""


class KamtoriError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(KamtoriError, ValueError):
    """A scalar/vector argument violates its documented precondition."""


class DimensionMismatchError(InvalidParameterError):
    """Operands live on tori of different dimension."""


class InvalidSequenceError(InvalidParameterError):
    """A threshold sequence entry is nonpositive, increasing, or missing."""


class EnumerationBudgetError(KamtoriError, RuntimeError):
    """Lattice enumeration would exceed the configured point budget."""

    def __init__(self, required, budget):
        self.required = int(required)
        self.budget = int(budget)
        super().__init__(
            f"enumeration needs {self.required} lattice points, "
            f"budget is {self.budget}"
        )


class NotClosedError(KamtoriError, ValueError):
    """A 1-form fails the closedness test; carries the worst witness."""

    def __init__(self, defect, mode, k, l):
        self.defect = float(defect)
        self.mode = tuple(int(x) for x in mode)
        self.pair = (int(k), int(l))
        super().__init__(
            f"form is not closed: |I_k b_l - I_l b_k| = {self.defect:.3e} "
            f"at mode {self.mode}, components {self.pair}"
        )


class SmallDivisorError(KamtoriError, ArithmeticError):
    """A divisor <omega, I> inside the truncation range is (near) zero."""

    def __init__(self, mode, value, floor):
        self.mode = tuple(int(x) for x in mode)
        self.value = float(value)
        self.floor = float(floor)
        super().__init__(
            f"divisor {self.value:.3e} at mode {self.mode} is below the "
            f"resonance floor {self.floor:.1e}"
        )


class LieSeriesDivergenceError(KamtoriError, RuntimeError):
    """Lie-series term norms grew over three consecutive orders."""


class LieSeriesOrderError(KamtoriError, RuntimeError):
    """Lie series failed to reach the tolerance within max_order terms."""


class InvalidReportError(KamtoriError, ValueError):
    """An iteration report misses data needed for replay/verification."""


class ConfigError(KamtoriError, ValueError):
    """A CLI/JSON config is malformed; message names the offending field."""

    def __init__(self, field, message):
        self.field = str(field)
        super().__init__(f"config field '{self.field}': {message}")
