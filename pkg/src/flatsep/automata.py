"""Deterministic automata, transition monoids and the idempotent exponent."""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass, field

from flatsep import kernels
from flatsep.errors import AlphabetClash, EmptyBaseAlphabet, ParseError, UnknownSymbol
from flatsep.words import STRUCTURAL, as_word


@dataclass(frozen=True)
class Dfa:
    """A complete DFA over an ordered alphabet.

    ``delta[q][i]`` is the successor of state ``q`` on ``alphabet[i]``.
    States are the integers ``0 .. n_states - 1``.
    """

    n_states: int
    alphabet: tuple
    initial: int
    accepting: frozenset
    delta: tuple
    _index: dict = field(init=False, repr=False, compare=False)
    _flat: array = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n_states
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if n < 1:
            raise ValueError("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate symbols in alphabet")
        for s in self.alphabet:
            if not isinstance(s, str) or not s or any(ch.isspace() for ch in s):
                raise ValueError(f"bad symbol {s!r}")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        if any(not 0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")
        if len(self.delta) != n or any(len(row) != len(self.alphabet) for row in self.delta):
            raise ValueError("transition table must be total over states x alphabet")
        if any(not 0 <= t < n for row in self.delta for t in row):
            raise ValueError("transition target out of range")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.alphabet)})
        object.__setattr__(self, "_flat", array("i", [t for row in self.delta for t in row]))

    @classmethod
    def from_transitions(cls, n_states, alphabet, initial, accepting, transitions):
        """Build from a ``{(state, symbol): state}`` mapping."""
        alphabet = tuple(alphabet)
        delta = []
        for q in range(n_states):
            row = []
            for s in alphabet:
                if (q, s) not in transitions:
                    raise ValueError(f"missing transition for ({q}, {s!r})")
                row.append(transitions[q, s])
            delta.append(row)
        return cls(n_states, alphabet, initial, frozenset(accepting), tuple(delta))

    def encode(self, w):
        idx = self._index
        try:
            return array("i", [idx[s] for s in as_word(w)])
        except KeyError as exc:
            raise UnknownSymbol(exc.args[0], self.alphabet) from None

    def step(self, q, symbol):
        try:
            return self.delta[q][self._index[symbol]]
        except KeyError:
            raise UnknownSymbol(symbol, self.alphabet) from None

    def run(self, w, state=None):
        start = self.initial if state is None else state
        return kernels.run(self._flat, len(self.alphabet), start, self.encode(w))

    def accepts(self, w):
        return self.run(w) in self.accepting

    __contains__ = accepts

    def action(self, w):
        """The monoid element of `w`: where each state goes after reading it."""
        return MonoidElement(
            kernels.word_action(self._flat, self.n_states, len(self.alphabet), self.encode(w))
        )


def run(dfa, w):
    return dfa.run(w)


@dataclass(frozen=True, slots=True)
class MonoidElement:
    """A state-to-state map. ``s * t`` means "first s, then t"."""

    action: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    def __mul__(self, other):
        b = other.action
        return MonoidElement(tuple(b[q] for q in self.action))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = MonoidElement.identity(len(self.action))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_idempotent(self):
        return self * self == self

    def __len__(self):
        return len(self.action)


@dataclass(frozen=True)
class TransitionMonoid:
    """Elements in discovery order, each with a shortest witnessing word."""

    elements: tuple
    generator_word: dict
    omega: int

    def __len__(self):
        return len(self.elements)

    def __contains__(self, s):
        return s in self.generator_word


def _closure(dfa, letters):
    ident = MonoidElement.identity(dfa.n_states)
    gens = [(a, dfa.action((a,))) for a in letters]
    words = {ident: ()}
    order = [ident]
    queue = deque([ident])
    # right-multiplication BFS: first visit gives a shortest word
    while queue:
        s = queue.popleft()
        for a, g in gens:
            t = s * g
            if t not in words:
                words[t] = words[s] + (a,)
                order.append(t)
                queue.append(t)
    return tuple(order), words


def transition_monoid(dfa, letters=None):
    """Closure of the letter actions (identity included) with its exponent.

    `letters` restricts the generators to a sub-alphabet; by default every
    symbol of the DFA is a generator.
    """
    letters = dfa.alphabet if letters is None else tuple(letters)
    for a in letters:
        if a not in dfa._index:
            raise UnknownSymbol(a, dfa.alphabet)
    elements, words = _closure(dfa, letters)
    return TransitionMonoid(elements, words, _omega_of(elements))


def index_period(s):
    """Return ``(i, p)``: least i, p >= 1 with ``s**i == s**(i + p)``."""
    seen = {}
    k, t = 1, s
    while t not in seen:
        seen[t] = k
        t = t * s
        k += 1
    i = seen[t]
    return i, k - i


def _omega_of(elements):
    idx, per = 1, 1
    for s in elements:
        i, p = index_period(s)
        idx = max(idx, i)
        per = math.lcm(per, p)
    return per * -(-idx // per)


def compute_omega(m):
    """Least ω >= 1 with ``s**ω == s**(2ω)`` for every element of `m`."""
    if isinstance(m, TransitionMonoid):
        return _omega_of(m.elements)
    return _omega_of(tuple(m))


def _reduced_power(s, k, i, p):
    if k >= i:
        k = i + (k - i) % p
    return s**k


def factorial_certificate(m):
    """Check that ``|S|!`` is also a valid exponent for every element."""
    k = math.factorial(len(m.elements))
    for s in m.elements:
        i, p = index_period(s)
        if _reduced_power(s, k, i, p) != _reduced_power(s, 2 * k, i, p):
            return False
    return True


def syntactically_equivalent(dfa, w1, w2):
    """Transition-function equality, which implies syntactic equivalence."""
    return dfa.action(w1) == dfa.action(w2)


def inverse_projection_dfa(dfa):
    """The same DFA with self-loops on ``<`` and ``>``: accepts w iff dfa accepts π(w)."""
    clash = [s for s in STRUCTURAL if s in dfa.alphabet]
    if clash:
        raise AlphabetClash(f"alphabet already contains {clash!r}")
    delta = tuple(row + (q, q) for q, row in enumerate(dfa.delta))
    return Dfa(dfa.n_states, dfa.alphabet + STRUCTURAL, dfa.initial, dfa.accepting, delta)


def normalize_initial(dfa):
    """Return an equivalent DFA whose initial state has no incoming transitions.

    If the initial state is already a pure source the DFA is returned as is;
    otherwise a fresh copy of it becomes the new (last) initial state.
    """
    q0 = dfa.initial
    if all(q0 not in row for row in dfa.delta):
        return dfa
    n = dfa.n_states
    delta = dfa.delta + (dfa.delta[q0],)
    accepting = dfa.accepting | ({n} if q0 in dfa.accepting else set())
    return Dfa(n + 1, dfa.alphabet, n, accepting, delta)


def pad_automaton(dfa, e_left, e_mid, e_right):
    """Automaton over the base alphabet accepting w iff `dfa` accepts T(w).

    T(t1 ... tn) = e_left t1 e_mid t2 ... e_mid tn e_right. The result is only
    meaningful on nonempty words.
    """
    base = tuple(s for s in dfa.alphabet if s not in STRUCTURAL)
    if not base:
        raise EmptyBaseAlphabet("no symbols left after removing '<' and '>'")
    a = normalize_initial(dfa)
    e_left, e_mid, e_right = as_word(e_left), as_word(e_mid), as_word(e_right)
    a.encode(e_left + e_mid + e_right)
    q0 = a.initial
    delta = []
    for q in range(a.n_states):
        pre = e_left if q == q0 else e_mid
        delta.append(tuple(a.run(pre + (t,), state=q) for t in base))
    accepting = frozenset(q for q in range(a.n_states) if a.run(e_right, state=q) in a.accepting)
    return Dfa(a.n_states, base, q0, accepting, tuple(delta))


def random_dfa(rng, n_states, alphabet, accept_prob=0.5):
    """Uniform random transitions; each state accepting with `accept_prob`."""
    alphabet = tuple(alphabet)
    delta = tuple(tuple(rng.randrange(n_states) for _ in alphabet) for _ in range(n_states))
    accepting = frozenset(q for q in range(n_states) if rng.random() < accept_prob)
    return Dfa(n_states, alphabet, rng.randrange(n_states), accepting, delta)


# text format


def _strip_comment(line):
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def parse_dfa(text):
    n = alphabet = initial = None
    accepting = set()
    transitions = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = _strip_comment(raw).split()
        if not tokens:
            continue
        head = tokens[0]
        try:
            if head == "states":
                (n,) = map(int, tokens[1:])
            elif head == "alphabet":
                alphabet = tuple(tokens[1:])
            elif head == "initial":
                (initial,) = map(int, tokens[1:])
            elif head == "accepting":
                accepting.update(map(int, tokens[1:]))
            elif len(tokens) == 3:
                src, sym, dst = tokens
                key = (int(src), sym)
                if key in transitions:
                    raise ParseError(f"duplicate transition {key}", lineno)
                transitions[key] = int(dst)
            else:
                raise ParseError(f"cannot parse {raw.strip()!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad line {raw.strip()!r}: {exc}", lineno) from None
    if n is None or alphabet is None or initial is None:
        raise ParseError("missing 'states', 'alphabet' or 'initial' header")
    for q, s in transitions:
        if s not in alphabet:
            raise ParseError(f"transition on undeclared symbol {s!r}")
    try:
        return Dfa.from_transitions(n, alphabet, initial, accepting, transitions)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_dfa(dfa):
    lines = [
        f"states {dfa.n_states}",
        "alphabet " + " ".join(dfa.alphabet),
        f"initial {dfa.initial}",
        "accepting " + " ".join(str(q) for q in sorted(dfa.accepting)),
    ]
    for q, row in enumerate(dfa.delta):
        for s, t in zip(dfa.alphabet, row):
            lines.append(f"{q} {s} {t}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def load_dfa(path):
    with open(path, encoding="utf-8") as fh:
        return parse_dfa(fh.read())
