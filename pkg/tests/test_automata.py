import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatsep.automata import (
    Dfa,
    MonoidElement,
    compute_omega,
    factorial_certificate,
    format_dfa,
    index_period,
    inverse_projection_dfa,
    load_dfa,
    normalize_initial,
    pad_automaton,
    parse_dfa,
    random_dfa,
    run,
    syntactically_equivalent,
    transition_monoid,
)
from flatsep.errors import AlphabetClash, EmptyBaseAlphabet, ParseError, UnknownSymbol
from flatsep.reduction import apply_padding, build_padding


def a_star_with_sink():
    # states: 0 accepting, 1 sink
    return Dfa.from_transitions(2, ("a", "b"), 0, {0}, {(0, "a"): 0, (0, "b"): 1, (1, "a"): 1, (1, "b"): 1})


def ab_star():
    # a b*: 0 -a-> 1, 1 -b-> 1, everything else to the sink 2
    t = {(q, s): 2 for q in range(3) for s in "ab"}
    t[(0, "a")] = 1
    t[(1, "b")] = 1
    return Dfa.from_transitions(3, ("a", "b"), 0, {1}, t)


def all_words(alphabet, lo, hi):
    for n in range(lo, hi + 1):
        yield from itertools.product(alphabet, repeat=n)


def test_run_examples(even_a):
    assert run(even_a, "") == even_a.initial
    assert run(even_a, "aa") == 0
    assert run(even_a, "aaa") == 1
    assert even_a.accepts("aa") and not even_a.accepts("aaa")
    assert "aaaa" in even_a


def test_unknown_symbol(even_a):
    with pytest.raises(UnknownSymbol):
        even_a.run("ab")
    with pytest.raises(KeyError):
        even_a.accepts("b")


def test_monoid_sizes(even_a, one_state):
    assert len(transition_monoid(one_state)) == 1
    m = transition_monoid(even_a)
    assert set(m.elements) == {MonoidElement((0, 1)), MonoidElement((1, 0))}


def test_monoid_closed_under_composition():
    m = transition_monoid(a_star_with_sink())
    elems = set(m.elements)
    assert MonoidElement.identity(2) in elems
    for s, t in itertools.product(elems, repeat=2):
        assert s * t in elems
    for s in elems:
        assert a_star_with_sink().action(m.generator_word[s]) == s


def test_generator_words_are_shortest():
    rng = random.Random(3)
    for _ in range(20):
        d = random_dfa(rng, 3, "ab")
        m = transition_monoid(d)
        for s, w in m.generator_word.items():
            shorter = {d.action(u) for u in all_words("ab", 0, len(w) - 1)}
            assert s not in shorter


def test_omega_examples(even_a, one_state):
    assert compute_omega(transition_monoid(one_state)) == 1
    m = transition_monoid(even_a)
    assert compute_omega(m) == 2
    swap = MonoidElement((1, 0))
    assert swap**2 == MonoidElement.identity(2) == swap**4


def brute_omega(elements):
    k = 1
    while not all(s**k == s ** (2 * k) for s in elements):
        k += 1
    return k


def test_omega_matches_brute_force():
    rng = random.Random(11)
    for _ in range(100):
        d = random_dfa(rng, rng.randint(1, 5), "abc"[: rng.randint(1, 3)])
        m = transition_monoid(d)
        assert compute_omega(m) == brute_omega(m.elements) == m.omega
        assert factorial_certificate(m)


def test_index_period():
    # a 4-cycle with a tail of length 2: 0 -> 1 -> 2 -> 3 -> 4 -> 5 -> 2
    s = MonoidElement((1, 2, 3, 4, 5, 2))
    i, p = index_period(s)
    assert (i, p) == (2, 4)
    assert s**i == s ** (i + p)
    assert s ** (i - 1) != s ** (i - 1 + p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=4), st.lists(st.integers(0, 3), min_size=4, max_size=4),
       st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_composition_is_associative(a, b, c):
    a, b, c = MonoidElement(tuple(a)), MonoidElement(tuple(b)), MonoidElement(tuple(c))
    assert (a * b) * c == a * (b * c)
    assert a * MonoidElement.identity(4) == a == MonoidElement.identity(4) * a


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=5, max_size=5), st.integers(0, 40))
def test_power_matches_repeated_product(a, k):
    s = MonoidElement(tuple(a))
    t = MonoidElement.identity(5)
    for _ in range(k):
        t = t * s
    assert s**k == t


def test_action_is_word_homomorphism():
    rng = random.Random(5)
    d = random_dfa(rng, 4, "ab")
    for u in all_words("ab", 0, 3):
        for v in all_words("ab", 0, 3):
            assert d.action(u + v) == d.action(u) * d.action(v)


def test_syntactic_equivalence(even_a):
    assert syntactically_equivalent(even_a, "aa", "aa")
    assert syntactically_equivalent(a_star_with_sink(), "b", "ba")
    assert not syntactically_equivalent(even_a, "a", "aa")


def test_inverse_projection(one_state):
    base = Dfa.from_transitions(1, ("a",), 0, {0}, {(0, "a"): 0})
    lifted = inverse_projection_dfa(base)
    assert lifted.alphabet == ("a", "<", ">") and lifted.accepting == base.accepting
    d = inverse_projection_dfa(ab_star())
    assert d.n_states == 3 and len(d.alphabet) == 4
    assert d.accepts("<a>b") and d.accepts("a<<>>bb") and not d.accepts("<b>")
    with pytest.raises(AlphabetClash):
        inverse_projection_dfa(one_state)


def test_inverse_projection_matches_erasure():
    rng = random.Random(8)
    for _ in range(10):
        d = random_dfa(rng, 3, "ab")
        lifted = inverse_projection_dfa(d)
        for w in all_words("ab<>", 0, 4):
            erased = tuple(t for t in w if t not in "<>")
            assert lifted.accepts(w) == d.accepts(erased)


def test_normalize_initial():
    d = Dfa.from_transitions(2, ("a",), 0, {0}, {(0, "a"): 1, (1, "a"): 0})
    n = normalize_initial(d)
    assert n.n_states == 3
    assert all(n.initial not in row for row in n.delta)
    for w in all_words("a", 0, 6):
        assert n.accepts(w) == d.accepts(w)
    assert normalize_initial(n) is n


def test_pad_automaton_all_accepting(one_state):
    p = build_padding(2)
    a = pad_automaton(one_state, *p.words)
    assert all(a.accepts(w) for w in all_words("ab", 1, 5))


def test_pad_automaton_of_inverse_projection():
    d = ab_star()
    lifted = inverse_projection_dfa(d)
    for omega in (1, 2, 3):
        a = pad_automaton(lifted, *build_padding(omega).words)
        for w in all_words("ab", 1, 6):
            assert a.accepts(w) == d.accepts(w)


def test_pad_automaton_simulation_oracle():
    rng = random.Random(21)
    for _ in range(20):
        d = random_dfa(rng, rng.randint(1, 5), ("<", ">", "a", "b"))
        p = build_padding(rng.randint(1, 3))
        a = pad_automaton(d, *p.words)
        for w in all_words("ab", 1, 5):
            assert a.accepts(w) == d.accepts(apply_padding(p, w))


def test_pad_automaton_needs_base_letters():
    d = Dfa.from_transitions(1, ("<", ">"), 0, {0}, {(0, "<"): 0, (0, ">"): 0})
    with pytest.raises(EmptyBaseAlphabet):
        pad_automaton(d, "<", "", ">")


def test_dfa_text_roundtrip(fx):
    d = load_dfa(fx("bracket_parity.dfa"))
    assert parse_dfa(format_dfa(d)) == d
    assert compute_omega(transition_monoid(d)) == 2


@pytest.mark.parametrize("text", [
    "states 1\nalphabet a\n0 a 0\n",
    "states 1\nalphabet a\ninitial 0\n0 a 0\n0 a 0\n",
    "states 1\nalphabet a\ninitial 0\n0 b 0\n",
    "states 2\nalphabet a\ninitial 0\n0 a 1\n",
    "states x\n",
])
def test_dfa_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dfa(text)


def test_factorial_is_valid_exponent():
    rng = random.Random(2)
    for _ in range(30):
        m = transition_monoid(random_dfa(rng, 3, "ab"))
        k = math.factorial(len(m)) if len(m) <= 8 else None
        if k is not None:
            assert all(s**k == s ** (2 * k) for s in m.elements)
