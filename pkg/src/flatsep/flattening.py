"""Binary flattened tree grammars and the lift G -> G'."""

from __future__ import annotations

from dataclasses import dataclass, field

from flatsep.errors import BadShape, NotCnf
from flatsep.grammars import Cfg, CnfCfg, cyk_member, to_cnf
from flatsep.words import CLOSE, OPEN, STRUCTURAL, as_word


def _bfg_shape_ok(g, rhs):
    if len(rhs) == 1:
        return rhs[0] in g.terminals and rhs[0] not in STRUCTURAL
    if len(rhs) == 2:
        return rhs == STRUCTURAL
    if len(rhs) == 4:
        return (
            rhs[0] == OPEN
            and rhs[3] == CLOSE
            and rhs[1] in g.nonterminals
            and rhs[2] in g.nonterminals
        )
    return False


@dataclass(frozen=True)
class Bfg(Cfg):
    """A CFG over Σ ∪ {<, >} whose rules are ``N -> t``, ``N -> < >`` or ``N -> < A B >``."""

    _cnf: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals) | frozenset(STRUCTURAL))
        super().__post_init__()
        for prod in self.productions:
            if not _bfg_shape_ok(self, prod[1]):
                raise BadShape(prod)

    @property
    def base_alphabet(self):
        return frozenset(self.terminals) - frozenset(STRUCTURAL)

    def cnf(self):
        """The CNF form used for CYK membership (computed once)."""
        if self._cnf is None:
            object.__setattr__(self, "_cnf", to_cnf(self))
        return self._cnf


@dataclass(frozen=True)
class LiftedBfg(Bfg):
    """G' built from a CNF grammar; `primed` maps each X to X', `empty` names E'."""

    primed: dict = field(default=None, compare=False, hash=False)
    empty: str = field(default="E'", compare=False)
    source: object = field(default=None, compare=False, hash=False, repr=False)


def validate_bfg(g):
    """Re-type a grammar as a Bfg; BadShape names the first offending rule."""
    if isinstance(g, Bfg):
        return g
    return Bfg(g.nonterminals, g.terminals, g.productions, g.start)


def _empty_name(nonterminals):
    name = "E'"
    used = {x + "'" for x in nonterminals}
    k = 0
    while name in used:
        name = f"E{k}'"
        k += 1
    return name


def lift_grammar(g):
    """Lift a CNF grammar into the BFG with rule families (1)-(6):

    1. ``N' -> t`` for each ``N -> t``
    2. ``N' -> < N1' N2' >`` for each ``N -> N1 N2``
    3. ``X' -> < E' X' >`` and 4. ``X' -> < X' E' >`` for every nonterminal X
    5. ``E' -> < >`` and 6. ``E' -> < E' E' >``
    """
    if not isinstance(g, CnfCfg):
        if not g.is_cnf():
            raise NotCnf("lift_grammar needs a grammar in Chomsky normal form")
        g = CnfCfg.from_cfg(g)
    if set(STRUCTURAL) & g.terminals:
        raise NotCnf("source grammar already uses '<' or '>'")
    primed = {x: x + "'" for x in sorted(g.nonterminals)}
    e = _empty_name(g.nonterminals)
    term_prods = []
    bin_prods = []
    for lhs, rhs in g.productions:
        if len(rhs) == 1:
            term_prods.append((primed[lhs], rhs))
        else:
            bin_prods.append((primed[lhs], (OPEN, primed[rhs[0]], primed[rhs[1]], CLOSE)))
    pump = []
    for x in sorted(g.nonterminals):
        xp = primed[x]
        pump.append((xp, (OPEN, e, xp, CLOSE)))
        pump.append((xp, (OPEN, xp, e, CLOSE)))
    empties = [(e, (OPEN, CLOSE)), (e, (OPEN, e, e, CLOSE))]
    prods = tuple(term_prods + bin_prods + pump + empties)
    nts = frozenset(primed.values()) | {e}
    return LiftedBfg(nts, g.terminals, prods, primed[g.start], primed=primed, empty=e, source=g)


def project(w):
    """Erase ``<`` and ``>``."""
    return tuple(t for t in as_word(w) if t not in STRUCTURAL)


def project_grammar(g):
    """Apply the projection to every right-hand side."""
    prods = tuple((lhs, project(rhs)) for lhs, rhs in g.productions)
    return Cfg(g.nonterminals, g.terminals - frozenset(STRUCTURAL), prods, g.start)


def bfg_member(g, w):
    return cyk_member(g.cnf(), w)
