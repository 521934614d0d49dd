import itertools
import random
from collections import Counter

import pytest

from flatsep.errors import BudgetExceeded, NoDerivation, NotCnf, ParseError, ShortWordsAccepted, UnknownSymbol
from flatsep.grammars import (
    Cfg,
    CnfCfg,
    cyk_member,
    enumerate_words,
    format_grammar,
    load_grammar,
    parse_grammar,
    random_cfg,
    random_cnf,
    remove_useless,
    sample_derivation,
    to_cnf,
)

AB = CnfCfg.from_cfg(Cfg.from_rules({"S": ["A B"], "A": ["a"], "B": ["b"]}, "S"))


def words_over(alphabet, lo, hi):
    for n in range(lo, hi + 1):
        yield from itertools.product(sorted(alphabet), repeat=n)


def test_cyk_examples():
    assert cyk_member(AB, "ab")
    assert not cyk_member(AB, "ba")
    assert not cyk_member(AB, "a")
    assert not cyk_member(AB, "")
    with pytest.raises(UnknownSymbol):
        cyk_member(AB, "ac")


def test_enumerate_examples():
    assert enumerate_words(AB, 4) == {("a", "b")}
    assert enumerate_words(AB, 0) == set()
    g = Cfg.from_rules({"S": ["a S", ()]}, "S")
    assert enumerate_words(g, 0) == {()}
    assert enumerate_words(g, 3) == {(), ("a",), ("a", "a"), ("a", "a", "a")}


def test_enumerate_budget_and_cap():
    g = Cfg.from_rules({"S": ["a S", "b S", "a", "b"]}, "S")
    with pytest.raises(BudgetExceeded):
        enumerate_words(g, 12, budget=100)
    with pytest.raises(BudgetExceeded):
        enumerate_words(g, 17)
    assert len(enumerate_words(g, 17, max_len_cap=17, budget=10**6)) == 2**18 - 2


def test_enumerate_handles_unit_cycles():
    g = Cfg.from_rules({"S": ["A", "a b"], "A": ["S", "A A", ()]}, "S")
    got = enumerate_words(g, 6)
    assert () in got and ("a", "b") in got and ("a", "b", "a", "b") in got
    assert all(len(w) % 2 == 0 for w in got)


def test_cyk_agrees_with_enumeration():
    rng = random.Random(4)
    for _ in range(40):
        g = random_cnf(rng, rng.randint(2, 4))
        lang = enumerate_words(g, 5)
        for w in words_over(g.terminals, 1, 5):
            assert cyk_member(g, w) == (w in lang), (format_grammar(g), w)


def test_dense_and_sparse_cyk_agree():
    rng = random.Random(6)
    for _ in range(30):
        g = random_cnf(rng, 4)
        for w in words_over(g.terminals, 1, 6):
            assert cyk_member(g, w, method="dense") == cyk_member(g, w, method="sparse")


def test_cyk_bad_method():
    with pytest.raises(ValueError):
        cyk_member(AB, "ab", method="fast")


def test_to_cnf_palindromes():
    g = Cfg.from_rules({"S": ["a S a", "a a"]}, "S")
    h = to_cnf(g)
    assert h.is_cnf()
    assert enumerate_words(h, 7) == enumerate_words(g, 7)


def test_to_cnf_keeps_cnf_input():
    h = to_cnf(AB)
    assert len(h.productions) == len(AB.productions)
    assert enumerate_words(h, 6) == enumerate_words(AB, 6)


def test_to_cnf_rejects_short_words():
    with pytest.raises(ShortWordsAccepted):
        to_cnf(Cfg.from_rules({"S": ["a"]}, "S"))
    with pytest.raises(ShortWordsAccepted):
        to_cnf(Cfg.from_rules({"S": ["a b", ()]}, "S"))
    with pytest.raises(ShortWordsAccepted):
        to_cnf(Cfg.from_rules({"S": ["A a"], "A": [(), "a"]}, "S"))


def test_to_cnf_random_grammars():
    rng = random.Random(9)
    for _ in range(25):
        g = random_cfg(rng)
        h = to_cnf(g)
        src = {w for w in enumerate_words(g, 7) if len(w) >= 2}
        assert enumerate_words(h, 7) == src


def test_to_cnf_is_deterministic():
    g = Cfg.from_rules({"S": ["a S b", "A B"], "A": ["a", ()], "B": ["b b A"]}, "S")
    assert to_cnf(g) == to_cnf(g)
    assert format_grammar(to_cnf(g)) == format_grammar(to_cnf(g))


def test_cnfcfg_validation():
    with pytest.raises(NotCnf):
        CnfCfg.from_cfg(Cfg.from_rules({"S": ["a A"], "A": ["a"]}, "S"))
    with pytest.raises(ShortWordsAccepted):
        CnfCfg.from_cfg(Cfg.from_rules({"S": ["A A", "a"], "A": ["a"]}, "S"))


def test_remove_useless():
    g = Cfg.from_rules({"S": ["A B", "a a"], "A": ["A a"], "B": ["b"], "C": ["c"]}, "S")
    h = remove_useless(g)
    assert h.nonterminals == {"S"}
    assert h.productions == (("S", ("a", "a")),)


def test_sample_unique_tree():
    for seed in range(5):
        t = sample_derivation(AB, 2, seed)
        assert t.yield_word() == ("a", "b")
        assert [c.symbol for c in t.children] == ["A", "B"]


def test_sample_reproducible_and_valid():
    rng = random.Random(13)
    for _ in range(10):
        g = random_cnf(rng, 4)
        try:
            t1 = sample_derivation(g, 8, seed=77)
        except NoDerivation:
            continue
        t2 = sample_derivation(g, 8, seed=77)
        assert t1 == t2
        assert cyk_member(g, t1.yield_word())
        assert t1.leaves() <= 8


def test_sample_is_uniform_over_trees():
    # S -> S S | A A, A -> a: trees with 2 leaves: 1, with 4 leaves: 1 (S S with A A each)
    # and with 3 leaves none, so up to 4 leaves there are exactly two trees
    g = CnfCfg.from_cfg(Cfg.from_rules({"S": ["S S", "A A"], "A": ["a"]}, "S"))
    counts = Counter(sample_derivation(g, 4, s).leaves() for s in range(2000))
    assert set(counts) == {2, 4}
    assert abs(counts[2] - 1000) < 120


def test_sample_no_derivation():
    g = CnfCfg.from_cfg(Cfg.from_rules({"S": ["A A"], "A": ["A A", "a"]}, "S"))
    with pytest.raises(NoDerivation):
        sample_derivation(g, 1, 0)


def test_tree_pretty_and_leaves():
    t = sample_derivation(AB, 2, 0)
    assert "S" in t.pretty() and "a" in t.pretty()
    assert t.leaves() == 2 and not t.is_leaf()
    assert [c.symbol for c in t.children] == ["A", "B"]


GRAMMAR_TEXT = """
# comment
start S
S -> 'a' S 'b' | A
   | 'x'   # trailing comment
A -> ε | '|' '#'
"""


def test_parse_grammar():
    g = parse_grammar(GRAMMAR_TEXT)
    assert g.start == "S"
    assert g.terminals == {"a", "b", "x", "|", "#"}
    assert ("A", ()) in g.productions
    assert ("A", ("|", "#")) in g.productions
    assert parse_grammar(format_grammar(g)) == g


def test_parse_grammar_brackets():
    g = parse_grammar("start N\nN -> < N N > | < > | 'a'\n")
    assert g.terminals == {"<", ">", "a"}


@pytest.mark.parametrize("text", [
    "",
    "start S\n",
    "start S\nS -> A\n",
    "start S S\nS -> 'a'\n",
    "S 'a'\n",
    "| 'a'\n",
    "start T\nS -> 'a'\n",
    "S -> 'a' ε\n",
    "S -> 'a' | \n",
    "'a' -> 'b'\n",
])
def test_parse_grammar_errors(text):
    with pytest.raises(ParseError):
        parse_grammar(text)


def test_fixture_grammars(fx):
    assert enumerate_words(load_grammar(fx("ab.cfg")), 6) == {("a", "b")}
    anbn = load_grammar(fx("anbn.cfg"))
    assert enumerate_words(anbn, 6) == {tuple("ab"), tuple("aabb"), tuple("aaabbb")}
    pal = enumerate_words(load_grammar(fx("palindromes.cfg")), 6)
    assert all(w == w[::-1] and len(w) % 2 == 0 for w in pal)
    assert len(pal) == 2 + 4 + 8
