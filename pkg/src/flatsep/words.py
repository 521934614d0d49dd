"""Words are tuples of symbol tokens.

A plain ``str`` is accepted wherever a word is expected and is split into
single characters, so ``"<a>b"`` is the word ``("<", "a", ">", "b")``.
Multi-character tokens need a tuple or list.
"""

OPEN = "<"
CLOSE = ">"
STRUCTURAL = (OPEN, CLOSE)


def as_word(w):
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def show(w):
    """Render a word compactly; tokens are space-joined unless all are 1 char."""
    w = as_word(w)
    if all(len(t) == 1 for t in w):
        return "".join(w)
    return " ".join(w)


def power(w, k):
    return as_word(w) * k


def is_well_matched(w):
    depth = 0
    for t in as_word(w):
        if t == OPEN:
            depth += 1
        elif t == CLOSE:
            depth -= 1
            if depth < 0:
                return False
    return depth == 0
