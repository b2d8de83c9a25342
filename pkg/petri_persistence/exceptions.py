class PetriNetError(Exception):
    """
    Base class of every error raised by the analyzer. Management commands
    turn these into ``CommandError`` with exit code 3.
    """


class NetStructureError(PetriNetError, ValueError):
    pass


class UnknownTransitionError(NetStructureError, KeyError):

    def __init__(self, transition):
        super().__init__("Unknown transition %r" % (transition,))
        self.transition = transition

    def __str__(self):
        return self.args[0]


class DimensionError(PetriNetError, ValueError):
    pass


class FiringError(PetriNetError):
    """
    A transition was fired in a marking that does not enable it. For words,
    ``position`` is the index of the first disabled transition and
    ``marking`` the intermediate marking reached before it.
    """

    def __init__(self, marking, transition, position=None):
        if position is None:
            message = "%s is not enabled in %s" % (transition, list(marking))
        else:
            message = "%s at position %d is not enabled in %s" % (
                transition, position, list(marking))
        super().__init__(message)
        self.marking = marking
        self.transition = transition
        self.position = position


class UnsupportedNetError(PetriNetError):
    pass


class SameTransitionError(PetriNetError, ValueError):

    def __init__(self, transition):
        super().__init__("Expected two distinct transitions, got %r twice" % (transition,))
        self.transition = transition


class ExactnessError(PetriNetError):
    pass


class OracleContractError(PetriNetError):
    pass


class AnalysisLimitError(PetriNetError):
    pass


class NetFileError(PetriNetError, ValueError):

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "line %d, column %d: %s" % (line, column or 1, message)
        super().__init__(message)
        self.line = line
        self.column = column


class NetSyntaxError(NetFileError):
    pass


class DuplicateIdentifierError(NetFileError):
    pass


class UnknownPlaceError(NetFileError):
    pass
