"""Exception hierarchy shared across the package."""


class WstsVerifyError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(WstsVerifyError):
    """Two vectors of different dimension were combined."""


class UnknownLabelError(WstsVerifyError):
    """A transition label that is not part of the net's alphabet."""


class UnknownSymbolError(WstsVerifyError):
    """A word symbol that is not part of an automaton's alphabet."""


class AlphabetMismatchError(WstsVerifyError):
    """Two automata or systems with different alphabets were combined."""


class NetFormatError(WstsVerifyError):
    """A net (or automaton) file failed to parse or validate.

    ``problems`` lists every violation found, each as a human-readable
    string carrying line/column information where available.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class BudgetExceededError(WstsVerifyError):
    """Tree construction exceeded its node budget.

    For very-WSTS inputs the construction always terminates, so hitting the
    budget signals either a model outside the supported classes or a bug.
    """

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"node budget of {budget} exhausted")


class StateBlowupError(WstsVerifyError):
    """Subset construction exceeded the configured state guard."""


class SearchInconclusiveError(WstsVerifyError):
    """The positive-sequence search exhausted its flow caps without a proof.

    Raised instead of guessing: the answer is neither a witness nor a
    certified absence.  Does not occur on the shipped model classes at desk
    scale.
    """
