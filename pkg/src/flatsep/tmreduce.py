"""Turing-machine step relation as context-free pair languages.

A configuration is the word ``left · q · right``: the state marker sits
immediately left of the scanned cell, so ``right`` is never empty. When the
head moves past either end one blank cell is added on that side; cells are
never trimmed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from flatsep.errors import MalformedConfiguration, ParseError
from flatsep.grammars import Cfg

SEP = "#"
MOVES = ("L", "R")
SECOND, FIRST = "second", "first"


@dataclass(frozen=True)
class TuringMachine:
    states: tuple
    tape_alphabet: tuple
    blank: str
    rules: dict = field(hash=False)
    initial: str = ""
    halting: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "halting", frozenset(self.halting))
        alphabet = tuple(dict.fromkeys((self.blank,) + tuple(self.tape_alphabet)))
        object.__setattr__(self, "tape_alphabet", alphabet)
        if set(self.states) & set(alphabet):
            raise ValueError("state names and tape symbols must differ")
        if SEP in self.states or SEP in alphabet:
            raise ValueError(f"{SEP!r} is reserved as the configuration separator")
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial!r} is not declared")
        if not self.halting <= set(self.states):
            raise ValueError("halting states must be declared states")
        for (q, a), (p, b, move) in self.rules.items():
            if q not in self.states or p not in self.states:
                raise ValueError(f"rule uses undeclared state: {q} {a} -> {p} {b} {move}")
            if a not in alphabet or b not in alphabet:
                raise ValueError(f"rule uses undeclared tape symbol: {q} {a} -> {p} {b} {move}")
            if move not in MOVES:
                raise ValueError(f"move must be L or R, got {move!r}")

    def active_rules(self):
        """Rules that can fire, in a fixed order."""
        return sorted(
            (k, v) for k, v in self.rules.items() if k[0] not in self.halting
        )


@dataclass(frozen=True)
class Configuration:
    left: tuple
    state: str
    right: tuple

    @property
    def word(self):
        return self.left + (self.state,) + self.right

    def __str__(self):
        return " ".join(self.word)


class _Halted:
    def __repr__(self):
        return "Halted"

    def __bool__(self):
        return False


Halted = _Halted()


def parse_configuration(tm, word):
    if isinstance(word, Configuration):
        word = word.word
    elif isinstance(word, str):
        word = tuple(word.split())
    word = tuple(word)
    marks = [i for i, t in enumerate(word) if t in tm.states]
    if len(marks) != 1:
        raise MalformedConfiguration(f"expected exactly one state marker in {word!r}")
    i = marks[0]
    if i == len(word) - 1:
        raise MalformedConfiguration("the state marker must precede the scanned cell")
    for t in word[:i] + word[i + 1:]:
        if t not in tm.tape_alphabet:
            raise MalformedConfiguration(f"unknown tape symbol {t!r}")
    return Configuration(word[:i], word[i], word[i + 1:])


def initial_configuration(tm, tape=()):
    tape = tuple(tape) or (tm.blank,)
    return Configuration((), tm.initial, tape)


def step(tm, c):
    """The successor configuration, or ``Halted``."""
    c = parse_configuration(tm, c)
    if c.state in tm.halting:
        return Halted
    a = c.right[0]
    if (c.state, a) not in tm.rules:
        return Halted
    p, b, move = tm.rules[c.state, a]
    rest = c.right[1:]
    if move == "R":
        return Configuration(c.left + (b,), p, rest or (tm.blank,))
    if c.left:
        return Configuration(c.left[:-1], p, (c.left[-1], b) + rest)
    return Configuration((), p, (tm.blank, b) + rest)


def run(tm, c, max_steps):
    """Configurations visited from `c` (inclusive), stopping at a halt or the step cap."""
    c = parse_configuration(tm, c)
    trace = [c]
    for _ in range(max_steps):
        nxt = step(tm, c)
        if nxt is Halted:
            break
        trace.append(nxt)
        c = nxt
    return trace


# grammars


class _Namer:
    def __init__(self, used):
        self.used = set(used)

    def __call__(self, base):
        name = base
        while name in self.used:
            name += "_"
        self.used.add(name)
        return name


def _pair_rules(tm, orientation, name, prefix=""):
    """Productions for the pair language, rooted at the returned start name."""
    gamma = tm.tape_alphabet
    blank = tm.blank
    start = name(prefix + "Pair")
    wrap = name(prefix + "Wrap")
    inner = name(prefix + "Mid")
    rules = []
    # inner: v # v^R (second) or v^R # v (first); both are c X c | #
    for c in gamma:
        rules.append((inner, (c, inner, c)))
    rules.append((inner, (SEP,)))
    rules.append((start, (wrap,)))
    for c in gamma:
        rules.append((wrap, (c, wrap, c)))
    if orientation == SECOND:
        inner1 = name(prefix + "Mid1")
        for c in gamma:
            rules.append((inner1, (c, inner, c)))
        for (q, a), (p, b, move) in tm.active_rules():
            if move == "R":
                rules.append((wrap, (q, a, inner1, p, b)))
                rules.append((wrap, (q, a, SEP, blank, p, b)))
            else:
                for c in gamma:
                    rules.append((wrap, (c, q, a, inner, b, c, p)))
                rules.append((start, (q, a, inner, b, blank, p)))
    elif orientation == FIRST:
        plus = name(prefix + "Wrap1")
        core = name(prefix + "Core1")
        rules.append((start, (plus,)))
        for c in gamma:
            rules.append((plus, (c, plus, c)))
            rules.append((plus, (c, core, c)))
        for (q, a), (p, b, move) in tm.active_rules():
            if move == "R":
                rules.append((core, (a, q, inner, b, p)))
                rules.append((start, (a, q, inner, b, p, blank)))
            else:
                for c in gamma:
                    rules.append((wrap, (a, q, c, inner, p, c, b)))
                rules.append((wrap, (a, q, SEP, p, blank, b)))
    else:
        raise ValueError(f"orientation must be {SECOND!r} or {FIRST!r}")
    return start, rules


def _terminals(tm, extra=()):
    return frozenset(tm.states) | frozenset(tm.tape_alphabet) | {SEP} | frozenset(extra)


def _grammar(rules, start, terminals):
    # a helper like Core1 has no rules when the machine has no move of that
    # direction; drop whatever refers to such names
    while True:
        nts = {lhs for lhs, _ in rules} | {start}
        kept = [(lhs, rhs) for lhs, rhs in rules if all(x in terminals or x in nts for x in rhs)]
        if len(kept) == len(rules):
            return Cfg(frozenset(nts), terminals, tuple(rules), start)
        rules = kept


def step_pair_grammar(tm, reversed_side=SECOND):
    """Grammar for ``{u # w^R : u -> w}`` (``"second"``) or ``{u^R # w : u -> w}`` (``"first"``)."""
    terms = _terminals(tm)
    start, rules = _pair_rules(tm, reversed_side, _Namer(terms))
    return _grammar(rules, start, terms)


def build_history_languages(tm, w_init, counter="a"):
    """The two computation-history grammars (L1, L2).

    L1 = { w1 # w2 # ... # w2k # a^(2k) : w1 = wI, w(2i-1) -> reverse(w2i) }
    L2 = { w1 # w2 # ... # w2k # a^k    : w1 = wI, reverse(w2i) -> w(2i+1) }
    with k >= 1, even-indexed configurations written reversed, and w2k in L2
    any reversed configuration. Both have 2k separators per word, so the
    counters make them disjoint; their words agree on the configuration part
    exactly when it is a valid computation history.
    """
    c0 = parse_configuration(tm, w_init)
    terms = _terminals(tm, (counter,))
    if counter in _terminals(tm):
        raise ValueError(f"counter symbol {counter!r} collides with the machine's symbols")
    name = _Namer(terms)

    pair_start, pair_rules = _pair_rules(tm, SECOND, name, prefix="P")
    s1, first, more = name("S"), name("First"), name("Steps")
    nxt = step(tm, c0)
    rules1 = [(s1, (first, SEP, more, counter, counter))]
    if nxt is Halted:
        # no successor: L1 is empty
        rules1.append((first, (first,)))
    else:
        rules1.append((first, c0.word + (SEP,) + tuple(reversed(nxt.word))))
    rules1.append((more, (pair_start, SEP, more, counter, counter)))
    rules1.append((more, ()))
    rules1.extend(pair_rules)
    l1 = _grammar(rules1, s1, terms)

    name = _Namer(terms)
    pair_start, pair_rules = _pair_rules(tm, FIRST, name, prefix="Q")
    s2, more, rconf, tape, mid = name("S"), name("Steps"), name("RConf"), name("Tape"), name("Scan")
    rules2 = [(s2, c0.word + (SEP, more))]
    rules2.append((more, (pair_start, SEP, more, counter)))
    rules2.append((more, (rconf, SEP, counter)))
    rules2.append((rconf, (tape, mid, tape)))
    for c in tm.tape_alphabet:
        rules2.append((tape, (c, tape)))
        for q in tm.states:
            rules2.append((mid, (c, q)))
    rules2.append((tape, ()))
    rules2.extend(pair_rules)
    l2 = _grammar(rules2, s2, terms)
    return l1, l2


def history_word(trace_pairs, counter="a", second_language=False):
    """Encode configurations w1 .. w2k (even ones reversed) plus the counter."""
    out = []
    for i, c in enumerate(trace_pairs):
        word = c.word if isinstance(c, Configuration) else tuple(c)
        out.extend(reversed(word) if i % 2 else word)
        out.append(SEP)
    k = len(trace_pairs) // 2
    out.extend([counter] * (k if second_language else 2 * k))
    return tuple(out)


def configurations(tm, length):
    """All well-formed configurations with exactly `length` tokens."""
    if length < 2:
        return
    for pos in range(length - 1):
        for q in tm.states:
            for tape in itertools.product(tm.tape_alphabet, repeat=length - 1):
                yield Configuration(tape[:pos], q, tape[pos:])


def simulator_pairs(tm, max_len, reversed_side=SECOND):
    """Pair words ``u # w^R`` (or ``u^R # w``) of length <= max_len from the simulator."""
    out = set()
    for n in range(2, max_len):
        for c in configurations(tm, n):
            nxt = step(tm, c)
            if nxt is Halted:
                continue
            if reversed_side == SECOND:
                word = c.word + (SEP,) + tuple(reversed(nxt.word))
            else:
                word = tuple(reversed(c.word)) + (SEP,) + nxt.word
            if len(word) <= max_len:
                out.add(word)
    return out


def random_tm(rng, n_states=2, symbols=("_", "1"), halt_prob=0.2):
    states = tuple(f"q{i}" for i in range(n_states)) + ("h",)
    rules = {}
    for q in states[:-1]:
        for a in symbols:
            if rng.random() < halt_prob:
                continue
            rules[q, a] = (rng.choice(states), rng.choice(symbols), rng.choice(MOVES))
    return TuringMachine(states, symbols, symbols[0], rules, "q0", {"h"})


# text format


def parse_tm(text):
    headers = {}
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] in ("states", "blank", "initial", "halting", "alphabet"):
            headers[tokens[0]] = tokens[1:]
            continue
        if len(tokens) != 6 or tokens[2] != "->":
            raise ParseError(f"expected 'q a -> p b L|R', got {line!r}", lineno)
        q, a, _, p, b, move = tokens
        if (q, a) in rules:
            raise ParseError(f"two rules for ({q}, {a}): machine must be deterministic", lineno)
        rules[q, a] = (p, b, move)
    for key in ("states", "blank", "initial"):
        if key not in headers:
            raise ParseError(f"missing '{key}' header")
    if len(headers["blank"]) != 1 or len(headers["initial"]) != 1:
        raise ParseError("'blank' and 'initial' take exactly one value")
    blank = headers["blank"][0]
    symbols = list(headers.get("alphabet", []))
    for (q, a), (p, b, move) in rules.items():
        symbols += [a, b]
    try:
        return TuringMachine(
            tuple(headers["states"]),
            tuple(dict.fromkeys([blank] + symbols)),
            blank,
            rules,
            headers["initial"][0],
            frozenset(headers.get("halting", [])),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_tm(tm):
    lines = [
        "states " + " ".join(tm.states),
        "alphabet " + " ".join(tm.tape_alphabet),
        f"blank {tm.blank}",
        f"initial {tm.initial}",
        "halting " + " ".join(sorted(tm.halting)),
    ]
    for (q, a), (p, b, move) in sorted(tm.rules.items()):
        lines.append(f"{q} {a} -> {p} {b} {move}")
    return "\n".join(lines) + "\n"


def load_tm(path):
    with open(path, encoding="utf-8") as fh:
        return parse_tm(fh.read())
