class ConifoldDTError(Exception):
    pass


class RingError(ConifoldDTError):
    pass


class HalfPowerResidueError(RingError):
    pass


class PoleAtPrimeError(RingError):
    pass


class PoleAtOneError(RingError):
    pass


class SeriesError(ConifoldDTError):
    pass


class OrderMismatchError(SeriesError):
    pass


class NonUnitConstantTermError(SeriesError):
    pass


class NegativeCurveExponentError(SeriesError):
    pass


class PlethysticError(ConifoldDTError):
    pass


class NonzeroConstantTermError(PlethysticError):
    pass


class ConstantTermNotOneError(PlethysticError):
    pass


class TorusError(ConifoldDTError):
    pass


class ZeroDimensionError(TorusError):
    pass


class ChamberError(ConifoldDTError):
    pass


class NotGenericError(ChamberError):
    def __init__(self, witness, *args, **kwargs):
        """Raised for stability parameters lying on a wall

        The root (or dimension vector) orthogonal to the stability
        parameter is stored in the ``witness`` property.
        """
        #: root witnessing the failure of genericity
        self.witness = witness
        super(NotGenericError, self).__init__(*args, **kwargs)


class OracleError(ConifoldDTError):
    pass


class EnumerationTooLargeError(OracleError):
    def __init__(self, size, cap, *args, **kwargs):
        """Raised when an exhaustive enumeration exceeds the cap

        The enumeration size and the cap are stored in the
        ``size`` and ``cap`` properties.
        """
        #: number of elements that would have to be enumerated
        self.size = size
        #: maximum enumeration size allowed
        self.cap = cap
        super(EnumerationTooLargeError, self).__init__(*args, **kwargs)


__all__ = [e for e in dir() if not e.startswith("__")]
