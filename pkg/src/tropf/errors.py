"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
2 for unparsable input, 3 for a violated mathematical precondition and 4
for a broken internal invariant (which should never happen on valid data).
"""


class TropfError(Exception):
    exit_code = 3

    @property
    def name(self):
        return type(self).__name__


class ParseError(TropfError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({loc})"
        super().__init__(message)


class DimensionError(TropfError):
    pass


class DirectionError(TropfError):
    pass


class NotSkewSymmetrizable(TropfError):
    pass


class NotCompatible(TropfError):
    pass


class InvalidExtension(TropfError):
    pass


class NotAMonomial(TropfError):
    pass


class NotFullRank(TropfError):
    pass


class NotPointed(TropfError):
    pass


class MissingConstantTerm(TropfError):
    pass


class NotAClusterMonomial(TropfError):
    pass


class _AtVertex(TropfError):
    """Failure located at a vertex of the exchange tree."""

    def __init__(self, word, detail=""):
        self.word = tuple(word)
        shown = " ".join(map(str, self.word)) or "ε"
        super().__init__(f"at vertex [{shown}]" + (f": {detail}" if detail else ""))


class NotPointedAt(_AtVertex):
    pass


class NegativeCoefficientAt(_AtVertex):
    pass


class TropicalMismatchAt(_AtVertex):
    pass


class NonExactDivision(TropfError):
    exit_code = 4


class InvariantBreach(TropfError):
    exit_code = 4
