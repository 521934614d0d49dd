"""Exception types shared across the package."""


class FlatsepError(Exception):
    """Base class for every error raised by flatsep."""


class ParseError(FlatsepError, ValueError):
    """A text file (DFA, grammar, TM) could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownSymbol(FlatsepError, KeyError):
    def __init__(self, symbol, alphabet=None):
        self.symbol = symbol
        msg = f"symbol {symbol!r} is not in the alphabet"
        if alphabet is not None:
            msg += f" {sorted(alphabet)!r}"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class AlphabetClash(FlatsepError, ValueError):
    """The structural symbols are already part of an alphabet."""


class EmptyBaseAlphabet(FlatsepError, ValueError):
    pass


class ShortWordsAccepted(FlatsepError, ValueError):
    """The grammar accepts the empty word or a word of length one."""

    def __init__(self, word):
        self.word = tuple(word)
        super().__init__(f"grammar accepts a word of length {len(self.word)}: {self.word!r}")


class BudgetExceeded(FlatsepError, RuntimeError):
    pass


class NoDerivation(FlatsepError, ValueError):
    pass


class NotCnf(FlatsepError, ValueError):
    pass


class BadShape(FlatsepError, ValueError):
    """A production does not have one of the three BFG shapes."""

    def __init__(self, production):
        self.production = production
        lhs, rhs = production
        super().__init__(f"not a BFG production: {lhs} -> {' '.join(rhs) or 'ε'}")


class EmptyWord(FlatsepError, ValueError):
    pass


class ShortDerivation(FlatsepError, ValueError):
    pass


class NotASeparator(FlatsepError):
    """A DFA fails to separate two languages; `word` is a witness."""

    def __init__(self, word, side):
        self.word = tuple(word)
        self.side = side
        what = "rejects" if side == 1 else "accepts"
        super().__init__(f"automaton {what} {' '.join(self.word)!r} from language {side}")


class MalformedConfiguration(FlatsepError, ValueError):
    pass
