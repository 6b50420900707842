"""
Exceptions raised by SINRsched.

Faults of the input (bad instances, unknown ids) and violated operation
preconditions are raised; infeasibility of a schedule is data, reported by
SINRsched.report.verify.
"""


class SchedError(Exception):
    """ Base class for all SINRsched errors. """
    pass


class InvalidInstance(SchedError, ValueError):
    """
    A link instance violates its invariants.
    self.violations holds every violation found by geometry.validate.
    """
    def __init__(self, violations):
        self.violations = list(violations)
        SchedError.__init__(self, "invalid instance: " + "; ".join(self.violations))


class InvalidPowerAssignment(SchedError, ValueError):
    pass


class MissingPower(SchedError, KeyError):
    """ An explicit power assignment has no power for the requested link. """
    def __str__(self):
        return Exception.__str__(self)


class InvalidSchedule(SchedError, ValueError):
    """ Unknown link ids, overlapping slots or empty slots. """
    pass


class PreconditionError(SchedError, ValueError):
    pass


class InstanceTooLarge(SchedError):
    """ An exhaustive oracle was called above its size cap. """
    def __init__(self, n, cap, what='links'):
        self.n = n
        self.cap = cap
        SchedError.__init__(self, "%d %s exceed the oracle cap of %d" % (n, what, cap))


class ConvergenceError(SchedError, RuntimeError):
    """ Power iteration did not reach the requested tolerance. """
    pass
