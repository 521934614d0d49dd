"""Context-free grammars: CNF conversion, CYK, bounded enumeration, derivations."""

from __future__ import annotations

import random
import re
from array import array
from dataclasses import dataclass, field
from itertools import product

from flatsep import kernels
from flatsep.errors import (
    BudgetExceeded,
    NoDerivation,
    NotCnf,
    ParseError,
    ShortWordsAccepted,
    UnknownSymbol,
)
from flatsep.words import STRUCTURAL, as_word

#: enumeration refuses longer bounds unless the caller raises the cap
MAX_ENUM_LEN = 16
DEFAULT_BUDGET = 3_000_000
#: words up to this length go to the dense bitset CYK kernel
DENSE_CYK_MAX_LEN = 32


def _dedupe(items):
    return tuple(dict.fromkeys(items))


@dataclass(frozen=True)
class Cfg:
    """A grammar ``(V, Σ, R, S)``; a production is ``(lhs, rhs_tuple)``."""

    nonterminals: frozenset
    terminals: frozenset
    productions: tuple
    start: str

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        prods = _dedupe((lhs, tuple(rhs)) for lhs, rhs in self.productions)
        object.__setattr__(self, "productions", prods)
        if self.start not in self.nonterminals:
            raise ValueError(f"start symbol {self.start!r} is not a nonterminal")
        clash = self.nonterminals & self.terminals
        if clash:
            raise ValueError(f"names used as both terminal and nonterminal: {sorted(clash)}")
        for lhs, rhs in self.productions:
            if lhs not in self.nonterminals:
                raise ValueError(f"undeclared nonterminal {lhs!r}")
            for x in rhs:
                if x not in self.nonterminals and x not in self.terminals:
                    raise ValueError(f"undeclared symbol {x!r} in production of {lhs!r}")

    def rules_for(self, lhs):
        return [rhs for a, rhs in self.productions if a == lhs]

    def is_cnf(self):
        return all(_cnf_shape(self, rhs) for _, rhs in self.productions)

    @classmethod
    def from_rules(cls, rules, start, terminals=None):
        """Build from ``{lhs: [rhs, ...]}``; rhs items are strings or tuples.

        Symbols that are keys of `rules` are nonterminals; everything else is
        a terminal unless `terminals` is given explicitly.
        """
        nts = set(rules)
        prods = []
        terms = set()
        for lhs, alts in rules.items():
            for rhs in alts:
                rhs = tuple(rhs.split()) if isinstance(rhs, str) else tuple(rhs)
                prods.append((lhs, rhs))
                terms.update(x for x in rhs if x not in nts)
        if terminals is not None:
            terms = set(terminals)
        return cls(frozenset(nts), frozenset(terms), tuple(prods), start)


def _cnf_shape(g, rhs):
    if len(rhs) == 1:
        return rhs[0] in g.terminals
    return len(rhs) == 2 and rhs[0] in g.nonterminals and rhs[1] in g.nonterminals


@dataclass(frozen=True)
class CnfCfg(Cfg):
    """A grammar in Chomsky normal form accepting no word of length < 2."""

    _compiled: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        super().__post_init__()
        for lhs, rhs in self.productions:
            if not _cnf_shape(self, rhs):
                raise NotCnf(f"not in CNF: {lhs} -> {' '.join(rhs) or 'ε'}")
            # without unit or ε rules, length-1 words come only from S -> t
            if lhs == self.start and len(rhs) == 1:
                raise ShortWordsAccepted(rhs)

    @classmethod
    def from_cfg(cls, g):
        return cls(g.nonterminals, g.terminals, g.productions, g.start)

    def compiled(self):
        if self._compiled is None:
            object.__setattr__(self, "_compiled", _CompiledCnf(self))
        return self._compiled


class _CompiledCnf:
    """Integer-indexed view of a CNF grammar for the CYK routines."""

    def __init__(self, g):
        self.nts = sorted(g.nonterminals)
        self.nt_index = {a: i for i, a in enumerate(self.nts)}
        self.terms = sorted(g.terminals)
        self.term_index = {t: i for i, t in enumerate(self.terms)}
        self.start = self.nt_index[g.start]
        unary = [0] * len(self.terms)
        by_term = {t: set() for t in self.terms}
        rules = []
        for lhs, rhs in g.productions:
            a = self.nt_index[lhs]
            if len(rhs) == 1:
                unary[self.term_index[rhs[0]]] |= 1 << a
                by_term[rhs[0]].add(a)
            else:
                rules.append((a, self.nt_index[rhs[0]], self.nt_index[rhs[1]]))
        self.by_term = by_term
        self.rules = rules
        self.by_left = {}
        self.by_right = {}
        for a, b, c in rules:
            self.by_left.setdefault(b, []).append((a, c))
            self.by_right.setdefault(c, []).append((a, b))
        self.dense_ok = len(self.nts) <= kernels.DENSE_MAX_NONTERMINALS
        if self.dense_ok:
            self.unary = array("Q", unary)
            self.rule_array = array("i", [x for r in rules for x in r])


def cyk_member(g, w, method="auto"):
    """CYK membership for a CNF grammar.

    `method` is ``"dense"`` (bitset chart, compiled kernel when available),
    ``"sparse"`` (agenda-driven chart that only stores derivable spans; near
    linear on bracket-structured grammars), or ``"auto"``.
    """
    if not isinstance(g, CnfCfg):
        g = CnfCfg.from_cfg(g)
    w = as_word(w)
    c = g.compiled()
    for t in w:
        if t not in c.term_index:
            raise UnknownSymbol(t, g.terminals)
    if not w:
        return False
    if method == "auto":
        method = "dense" if len(w) <= DENSE_CYK_MAX_LEN and c.dense_ok else "sparse"
    if method == "dense":
        if not c.dense_ok:
            raise ValueError("dense CYK supports at most 64 nonterminals")
        codes = array("i", [c.term_index[t] for t in w])
        return kernels.cyk_dense(codes, c.unary, c.rule_array, c.start)
    if method == "sparse":
        return _cyk_sparse(c, w)
    raise ValueError(f"unknown CYK method {method!r}")


def _cyk_sparse(c, w):
    n = len(w)
    by_start = [dict() for _ in range(n + 1)]
    by_end = [dict() for _ in range(n + 1)]
    agenda = []

    def add(i, j, a):
        cell = by_start[i].setdefault(j, set())
        if a not in cell:
            cell.add(a)
            by_end[j].setdefault(i, set()).add(a)
            agenda.append((i, j, a))

    for i, t in enumerate(w):
        for a in c.by_term[t]:
            add(i, i + 1, a)
    while agenda:
        i, j, b = agenda.pop()
        for a, right in c.by_left.get(b, ()):
            for k, cell in list(by_start[j].items()):
                if right in cell:
                    add(i, k, a)
        for a, left in c.by_right.get(b, ()):
            for h, cell in list(by_end[i].items()):
                if left in cell:
                    add(h, j, a)
    return c.start in by_start[0].get(n, ())


# analysis helpers


def nullable_set(g):
    nullable = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if lhs not in nullable and all(x in nullable for x in rhs):
                nullable.add(lhs)
                changed = True
    return nullable


def generating_set(g):
    gen = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if lhs not in gen and all(x in g.terminals or x in gen for x in rhs):
                gen.add(lhs)
                changed = True
    return gen


def reachable_set(g):
    seen = {g.start}
    stack = [g.start]
    while stack:
        a = stack.pop()
        for rhs in g.rules_for(a):
            for x in rhs:
                if x in g.nonterminals and x not in seen:
                    seen.add(x)
                    stack.append(x)
    return seen


def remove_useless(g):
    gen = generating_set(g)
    prods = [(l, r) for l, r in g.productions if l in gen and all(x in g.terminals or x in gen for x in r)]
    keep = Cfg(g.nonterminals, g.terminals, tuple(prods), g.start)
    reach = reachable_set(keep)
    prods = [(l, r) for l, r in prods if l in reach]
    return Cfg(frozenset(reach), g.terminals, tuple(prods), g.start)


class _Fresh:
    def __init__(self, used):
        self.used = set(used)

    def __call__(self, prefix):
        k = 0
        while f"{prefix}{k}" in self.used:
            k += 1
        name = f"{prefix}{k}"
        self.used.add(name)
        return name


def to_cnf(g):
    """Convert to Chomsky normal form (TERM, BIN, DEL, UNIT, then trim).

    Raises ShortWordsAccepted if the language contains ε or a one-letter word.
    """
    if nullable_set(g) >= {g.start}:
        raise ShortWordsAccepted(())
    fresh = _Fresh(g.nonterminals | g.terminals)
    nts = set(g.nonterminals)

    # TERM
    term_nt = {}
    prods = []
    for lhs, rhs in g.productions:
        if len(rhs) >= 2:
            new_rhs = []
            for x in rhs:
                if x in g.terminals:
                    if x not in term_nt:
                        term_nt[x] = fresh("T")
                    x = term_nt[x]
                new_rhs.append(x)
            rhs = tuple(new_rhs)
        prods.append((lhs, rhs))
    for t in sorted(term_nt):
        prods.append((term_nt[t], (t,)))
    nts.update(term_nt.values())

    # BIN
    binned = []
    for lhs, rhs in prods:
        while len(rhs) > 2:
            nxt = fresh("B")
            nts.add(nxt)
            binned.append((lhs, (rhs[0], nxt)))
            lhs, rhs = nxt, rhs[1:]
        binned.append((lhs, rhs))
    prods = binned

    # DEL
    tmp = Cfg(frozenset(nts), g.terminals, tuple(prods), g.start)
    nullable = nullable_set(tmp)
    deleted = []
    for lhs, rhs in prods:
        options = [((x,), ()) if x in nullable else ((x,),) for x in rhs]
        for choice in product(*options):
            new_rhs = tuple(x for part in choice for x in part)
            if new_rhs:
                deleted.append((lhs, new_rhs))
    prods = list(_dedupe(deleted))

    # UNIT
    unit = {a: {a} for a in nts}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in prods:
            if len(rhs) == 1 and rhs[0] in nts:
                for a in nts:
                    if lhs in unit[a] and rhs[0] not in unit[a]:
                        unit[a].add(rhs[0])
                        changed = True
    by_lhs = {}
    for lhs, rhs in prods:
        if not (len(rhs) == 1 and rhs[0] in nts):
            by_lhs.setdefault(lhs, []).append(rhs)
    order = sorted(nts, key=lambda a: (a != g.start, a))
    final = []
    for a in order:
        # targets in a fixed order keeps the output deterministic
        for b in sorted(unit[a], key=lambda x: (x != a, x)):
            for rhs in by_lhs.get(b, ()):
                final.append((a, rhs))
    out = remove_useless(Cfg(frozenset(nts), g.terminals, tuple(final), g.start))
    for lhs, rhs in out.productions:
        if lhs == out.start and len(rhs) == 1:
            raise ShortWordsAccepted(rhs)
    return CnfCfg(out.nonterminals, out.terminals, out.productions, out.start)


# enumeration oracle


INF = float("inf")


def _min_lengths(g):
    m = {a: INF for a in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            v = sum(1 if x in g.terminals else m[x] for x in rhs)
            if v < m[lhs]:
                m[lhs] = v
                changed = True
    return m


def _same_length_order(g, rules, minlen):
    """SCCs of the "same length" dependency graph, dependencies first.

    A -> X is an edge when some rule A -> uXv has u, v nullable, so the words
    of A at length n may need those of X at length n. Each SCC is returned
    with a flag telling whether it needs a fixpoint (it has a cycle).
    """
    succ = {a: set() for a in g.nonterminals}
    for lhs, rhs in rules:
        zero = [y not in g.terminals and minlen[y] == 0 for y in rhs]
        for i, x in enumerate(rhs):
            if x in g.terminals or minlen[x] == INF:
                continue
            if all(zero[:i]) and all(zero[i + 1:]):
                succ[lhs].add(x)
    index, low, on_stack, stack, out = {}, {}, set(), [], []

    def strongconnect(v):
        # iterative Tarjan
        work = [(v, iter(sorted(succ[v])))]
        index[v] = low[v] = len(index)
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = len(index)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(succ[w]))))
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            else:
                work.pop()
                if work:
                    low[work[-1][0]] = min(low[work[-1][0]], low[node])
                if low[node] == index[node]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == node:
                            break
                    cyclic = len(comp) > 1 or node in succ[node]
                    out.append((frozenset(comp), cyclic))

    for v in sorted(g.nonterminals):
        if v not in index:
            strongconnect(v)
    return out


def _min_context(g, minlen):
    """Least number of terminals any sentential form adds around each nonterminal."""
    ctx = {a: INF for a in g.nonterminals}
    ctx[g.start] = 0
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if ctx[lhs] == INF:
                continue
            lens = [1 if y in g.terminals else minlen[y] for y in rhs]
            if INF in lens:
                continue
            total = sum(lens)
            for x, k in zip(rhs, lens):
                if x in g.terminals:
                    continue
                v = ctx[lhs] + total - k
                if v < ctx[x]:
                    ctx[x] = v
                    changed = True
    return ctx


def enumerate_by_length(g, max_len, budget=DEFAULT_BUDGET, max_len_cap=MAX_ENUM_LEN):
    """Return ``{nonterminal: [set of words of length n for n in 0..max_len]}``.

    Works on arbitrary grammars (ε and unit rules included). Nonterminals are
    filled one strongly connected component at a time, dependencies first;
    inside a cyclic component each length is iterated to a fixpoint.
    Cells of a nonterminal X are only filled up to ``max_len`` minus the least
    context any derivation puts around X, so only the start symbol row is
    complete.
    """
    if max_len > max_len_cap:
        raise BudgetExceeded(f"max_len {max_len} exceeds the cap {max_len_cap}")
    terms = g.terminals
    minlen = _min_lengths(g)
    table = {a: [set() for _ in range(max_len + 1)] for a in g.nonterminals}
    stored = 0

    def seq_words(rhs, n):
        memo = {}

        def rec(i, remaining):
            if i == len(rhs):
                return {()} if remaining == 0 else set()
            key = (i, remaining)
            if key in memo:
                return memo[key]
            x = rhs[i]
            rest_min = sum(1 if y in terms else minlen[y] for y in rhs[i + 1:])
            out = set()
            if rest_min <= remaining:
                if x in terms:
                    for tail in rec(i + 1, remaining - 1) if remaining >= 1 else ():
                        out.add((x,) + tail)
                elif minlen[x] != INF:
                    for k in range(minlen[x], remaining - rest_min + 1):
                        heads = table[x][k]
                        if not heads:
                            continue
                        tails = rec(i + 1, remaining - k)
                        for h in heads:
                            for tail in tails:
                                out.add(h + tail)
            memo[key] = out
            return out

        return rec(0, n)

    rules = [(lhs, rhs) for lhs, rhs in g.productions if minlen[lhs] != INF]
    # words of X longer than max_len - ctx[X] never reach the start symbol
    ctx = _min_context(g, minlen)
    groups = [
        ([r for r in rules if r[0] in comp], cyclic)
        for comp, cyclic in _same_length_order(g, rules, minlen)
    ]
    for n in range(max_len + 1):
        for group_rules, cyclic in groups:
            changed = True
            while changed:
                changed = False
                for lhs, rhs in group_rules:
                    if ctx[lhs] + n > max_len:
                        continue
                    cell = table[lhs][n]
                    before = len(cell)
                    cell |= seq_words(rhs, n)
                    if len(cell) != before:
                        stored += len(cell) - before
                        changed = cyclic
                        if stored > budget:
                            raise BudgetExceeded(f"more than {budget} words stored")
    return table


def enumerate_words(g, max_len, budget=DEFAULT_BUDGET, max_len_cap=MAX_ENUM_LEN):
    """All words of L(g) with length at most `max_len`."""
    table = enumerate_by_length(g, max_len, budget, max_len_cap)
    out = set()
    for cell in table[g.start]:
        out |= cell
    return out


# derivation trees


@dataclass(frozen=True)
class DerivationTree:
    """A CNF derivation: children are two subtrees, or one terminal string."""

    symbol: str
    production: tuple
    children: tuple

    def is_leaf(self):
        return len(self.children) == 1 and isinstance(self.children[0], str)

    def yield_word(self):
        if self.is_leaf():
            return (self.children[0],)
        return self.children[0].yield_word() + self.children[1].yield_word()

    def leaves(self):
        return len(self.yield_word())

    def pretty(self):
        if self.is_leaf():
            return f"{self.symbol}[{self.children[0]}]"
        return f"{self.symbol}({self.children[0].pretty()} {self.children[1].pretty()})"


def leaf(symbol, terminal):
    return DerivationTree(symbol, (symbol, (terminal,)), (terminal,))


def node(symbol, left, right):
    return DerivationTree(symbol, (symbol, (left.symbol, right.symbol)), (left, right))


def _tree_counts(g, max_leaves):
    counts = {a: [0] * (max_leaves + 1) for a in g.nonterminals}
    term_rules = {a: [] for a in g.nonterminals}
    bin_rules = {a: [] for a in g.nonterminals}
    for lhs, rhs in g.productions:
        (term_rules if len(rhs) == 1 else bin_rules)[lhs].append(rhs)
    for n in range(1, max_leaves + 1):
        for a in g.nonterminals:
            total = len(term_rules[a]) if n == 1 else 0
            for b, c in bin_rules[a]:
                total += sum(counts[b][i] * counts[c][n - i] for i in range(1, n))
            counts[a][n] = total
    return counts, term_rules, bin_rules


def sample_derivation(g, max_leaves, seed):
    """A derivation tree drawn uniformly among all trees with <= max_leaves leaves."""
    if not isinstance(g, CnfCfg):
        g = CnfCfg.from_cfg(g)
    counts, term_rules, bin_rules = _tree_counts(g, max_leaves)
    totals = counts[g.start]
    grand = sum(totals)
    if grand == 0:
        raise NoDerivation(f"no derivation with at most {max_leaves} leaves")
    rng = random.Random(seed)

    def pick(weighted, r):
        for weight, item in weighted:
            if r < weight:
                return item
            r -= weight
        raise AssertionError("weights do not cover the draw")

    def build(a, n):
        options = []
        if n == 1:
            options += [(1, ("t", rhs, 0)) for rhs in term_rules[a]]
        for rhs in bin_rules[a]:
            b, c = rhs
            for i in range(1, n):
                wgt = counts[b][i] * counts[c][n - i]
                if wgt:
                    options.append((wgt, ("b", rhs, i)))
        kind, rhs, i = pick(options, rng.randrange(counts[a][n]))
        if kind == "t":
            return leaf(a, rhs[0])
        return node(a, build(rhs[0], i), build(rhs[1], n - i))

    n = pick([(c, k) for k, c in enumerate(totals)], rng.randrange(grand))
    return build(g.start, n)


# random grammars


def random_cnf(rng, n_nonterminals=4, terminals=("a", "b"), max_rules=3):
    """A random CNF grammar with start ``S`` and at least one derivation."""
    names = ["S", "A", "B", "C", "D", "F", "H", "J"][:n_nonterminals]
    if len(names) < 2:
        raise ValueError("need at least two nonterminals")
    rules = {a: [] for a in names}
    others = names[1:]
    rules["S"].append((rng.choice(others), rng.choice(others)))
    for _ in range(rng.randrange(max_rules)):
        rules["S"].append((rng.choice(names), rng.choice(names)))
    for a in others:
        rules[a].append((rng.choice(terminals),))
        for _ in range(rng.randrange(max_rules)):
            if rng.random() < 0.3:
                rules[a].append((rng.choice(terminals),))
            else:
                rules[a].append((rng.choice(names), rng.choice(names)))
    g = Cfg.from_rules(rules, "S", terminals=terminals)
    trimmed = remove_useless(g)
    return CnfCfg(trimmed.nonterminals, frozenset(terminals), trimmed.productions, "S")


def random_cfg(rng, n_nonterminals=3, terminals=("a", "b"), max_rules=3, max_rhs=4):
    """A random unrestricted grammar whose language has no word shorter than 2.

    ε rules, unit rules and long mixed right-hand sides all occur.
    """
    names = ["S", "A", "B", "C", "D"][:n_nonterminals]
    while True:
        rules = {a: [] for a in names}
        for a in names:
            for _ in range(1 + rng.randrange(max_rules)):
                k = rng.randrange(max_rhs + 1)
                rhs = tuple(rng.choice(names + list(terminals)) for _ in range(k))
                rules[a].append(rhs)
        g = Cfg.from_rules(rules, "S", terminals=terminals)
        short = enumerate_words(g, 1)
        if not short and enumerate_words(g, 5):
            return g


# text format

_TOKEN = re.compile(r"'[^'\s]*'|\S+")
EPSILON = "ε"


def _strip_comment(line):
    quoted = False
    for i, ch in enumerate(line):
        if ch == "'":
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:i]
    return line


def parse_grammar(text):
    """Parse ``start S`` plus lines like ``S -> A B | 'a'``.

    Quoted tokens are terminals, ``<`` and ``>`` are the reserved bare
    terminals, ``ε`` denotes the empty right-hand side, everything else is a
    nonterminal. A line starting with ``|`` continues the previous rule.
    """
    start = None
    raw_prods = []
    lhs = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("start ") or line == "start":
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected 'start <nonterminal>'", lineno)
            start = parts[1]
            continue
        if line.startswith("|"):
            if lhs is None:
                raise ParseError("continuation line without a rule", lineno)
            body = line[1:]
        else:
            m = re.match(r"(\S+)\s*(->|→)(.*)$", line)
            if not m:
                raise ParseError(f"cannot parse {raw.strip()!r}", lineno)
            lhs, body = m.group(1), m.group(3)
            if lhs.startswith("'") or lhs in STRUCTURAL:
                raise ParseError(f"left-hand side must be a nonterminal, got {lhs}", lineno)
        for alt in _split_alts(body):
            tokens = _TOKEN.findall(alt)
            if not tokens:
                raise ParseError(f"empty alternative for {lhs} (write ε)", lineno)
            raw_prods.append((lhs, tokens, lineno))
    if not raw_prods:
        raise ParseError("grammar has no productions")
    nts = {lhs for lhs, _, _ in raw_prods}
    terms = set()
    prods = []
    for lhs, tokens, lineno in raw_prods:
        if tokens == [EPSILON]:
            prods.append((lhs, ()))
            continue
        rhs = []
        for tok in tokens:
            if tok.startswith("'"):
                if len(tok) < 3 or not tok.endswith("'"):
                    raise ParseError(f"bad terminal {tok}", lineno)
                sym = tok[1:-1]
                terms.add(sym)
            elif tok in STRUCTURAL:
                sym = tok
                terms.add(sym)
            elif tok == EPSILON:
                raise ParseError("ε must stand alone", lineno)
            else:
                if tok not in nts:
                    raise ParseError(f"nonterminal {tok} has no productions", lineno)
                sym = tok
            rhs.append(sym)
        prods.append((lhs, tuple(rhs)))
    if start is None:
        start = raw_prods[0][0]
    if start not in nts:
        raise ParseError(f"start symbol {start} has no productions")
    try:
        return Cfg(frozenset(nts), frozenset(terms), tuple(prods), start)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _split_alts(body):
    alts, cur, quoted = [], [], False
    for ch in body:
        if ch == "'":
            quoted = not quoted
        if ch == "|" and not quoted:
            alts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    alts.append("".join(cur))
    return alts


def _fmt_symbol(g, x):
    if x in g.terminals:
        return x if x in STRUCTURAL else f"'{x}'"
    return x


def format_grammar(g):
    lines = [f"start {g.start}"]
    order = []
    alts = {}
    for lhs, rhs in g.productions:
        if lhs not in alts:
            order.append(lhs)
            alts[lhs] = []
        alts[lhs].append(" ".join(_fmt_symbol(g, x) for x in rhs) or EPSILON)
    for lhs in order:
        lines.append(f"{lhs} -> " + " | ".join(alts[lhs]))
    return "\n".join(lines) + "\n"


def load_grammar(path):
    with open(path, encoding="utf-8") as fh:
        return parse_grammar(fh.read())
