"""Padding words, the padding transform, pumped witnesses and separator transfer."""

from __future__ import annotations

from dataclasses import dataclass

from flatsep.automata import compute_omega, inverse_projection_dfa, pad_automaton, transition_monoid
from flatsep.errors import EmptyWord, NotASeparator, ShortDerivation
from flatsep.flattening import lift_grammar
from flatsep.grammars import CnfCfg, enumerate_words
from flatsep.words import CLOSE, OPEN, as_word

HEART = (OPEN, OPEN, CLOSE)
CHEART = (OPEN, CLOSE, CLOSE)

SOURCE_BOUND = 6
LIFTED_BOUND = 9

IDENTITY_NAMES = ("eL.eL=eL", "eR.eR=eR", "e.eL=e", "eR.e=e")


@dataclass(frozen=True)
class PaddingTriple:
    omega: int
    nu: int
    b1: tuple
    b2: tuple
    c1: tuple
    c2: tuple
    eL: tuple
    e: tuple
    eR: tuple
    heart: tuple = HEART
    cheart: tuple = CHEART

    @property
    def words(self):
        return self.eL, self.e, self.eR


def build_padding(omega):
    """Expand b1, b2, c1, c2 and (eL, e, eR) for the exponent `omega`."""
    if omega < 1:
        raise ValueError("omega must be at least 1")
    w, v = omega, omega - 1
    o, c = (OPEN,), (CLOSE,)
    b1 = (o * v + HEART * v) * w + o * v
    b2 = CHEART * v + (c * v + CHEART * v) * w
    # leading run is ♥^ν (not ♥^ω): with ♥^ω the pair c1, c2 is unbalanced and
    # cannot come from pumping moves, so w' would fall outside L(G')
    c1 = HEART * v + (HEART * v + o * v) * w
    c2 = (CHEART * v + c * v) * w + c * v
    return PaddingTriple(w, v, b1, b2, c1, c2, o + b1, b2 + c1, c2 + c)


def padding_from_words(eL, e, eR, omega=0):
    """Wrap an arbitrary triple (e.g. a search result) as a PaddingTriple."""
    return PaddingTriple(omega, max(omega - 1, 0), (), (), (), (), as_word(eL), as_word(e), as_word(eR))


def apply_padding(p, w):
    """T(t1 ... tn) = eL t1 e t2 e ... e tn eR."""
    w = as_word(w)
    if not w:
        raise EmptyWord("the padding of the empty word is undefined")
    out = list(p.eL)
    for i, t in enumerate(w):
        if i:
            out.extend(p.e)
        out.append(t)
    out.extend(p.eR)
    return tuple(out)


def witness_word(tree, p):
    """Replay a CNF derivation in G', turning each N -> K L into N' ->* eL K' e L' eR."""
    if tree.is_leaf():
        raise ShortDerivation("the derivation must have at least two leaves")

    def replay(t):
        if t.is_leaf():
            return (t.children[0],)
        left, right = t.children
        return p.eL + replay(left) + p.e + replay(right) + p.eR

    return replay(tree)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    state: int | None = None
    lhs_target: int | None = None
    rhs_target: int | None = None

    def to_json(self):
        out = {"check": self.name, "pass": self.passed}
        if not self.passed:
            out["counterexample"] = {
                "state": self.state,
                "lhs_target": self.lhs_target,
                "rhs_target": self.rhs_target,
            }
        return out


@dataclass(frozen=True)
class EquivalenceReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return [c.to_json() for c in self.checks]


def _compare(dfa, name, lhs, rhs):
    a, b = dfa.action(lhs).action, dfa.action(rhs).action
    for q, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return IdentityCheck(name, False, q, x, y)
    return IdentityCheck(name, True)


def check_identities(dfa, p):
    """Evaluate the four padding identities by transition-function equality."""
    eL, e, eR = p.words
    pairs = [
        (eL + eL, eL),
        (eR + eR, eR),
        (e + eL, e),
        (eR + e, e),
    ]
    return EquivalenceReport(
        tuple(_compare(dfa, name, lhs, rhs) for name, (lhs, rhs) in zip(IDENTITY_NAMES, pairs))
    )


def check_auxiliary(dfa, p):
    """The two absorption steps used inside the identity calculations."""
    w, v = p.omega, p.nu
    o, c = (OPEN,), (CLOSE,)
    return EquivalenceReport((
        _compare(dfa, "<^(w+v).heart=<^v.heart", o * (w + v) + HEART, o * v + HEART),
        _compare(dfa, "cheart.>^(w+v)=cheart.>^v", CHEART + c * (w + v), CHEART + c * v),
    ))


def padding_exponent(m):
    """The exponent the padding is built from: ω, raised to 2 when ω = 1.

    With ν = 0 the identities need e.g. ``< ≡ ε`` and fail in bands (every
    element idempotent, monoid nontrivial); 2 is still a valid exponent there.
    """
    omega = compute_omega(m)
    if omega == 1 and len(m) > 1:
        return 2
    return omega


def padding_for(dfa):
    return build_padding(padding_exponent(transition_monoid(dfa)))


def equivalence_of_witness(dfa, g, tree, p=None):
    """True iff the pumped witness and T(yield) act identically on `dfa`."""
    if p is None:
        p = padding_for(dfa)
    w_prime = witness_word(tree, p)
    padded = apply_padding(p, tree.yield_word())
    return dfa.action(w_prime) == dfa.action(padded)


def _ordered(words):
    return sorted(words, key=lambda w: (len(w), w))


def check_separates(dfa, words1, words2):
    """Raise NotASeparator on the first misclassified word (length-lex order)."""
    for w in _ordered(words1):
        if not dfa.accepts(w):
            raise NotASeparator(w, 1)
    for w in _ordered(words2):
        if dfa.accepts(w):
            raise NotASeparator(w, 2)


def _as_cnf(g):
    return g if isinstance(g, CnfCfg) else CnfCfg.from_cfg(g)


def transfer_separator(r, g1, g2, source_bound=SOURCE_BOUND, lifted_bound=LIFTED_BOUND):
    """Lift a separator of L(g1), L(g2) to one of the lifted languages."""
    g1, g2 = _as_cnf(g1), _as_cnf(g2)
    check_separates(r, enumerate_words(g1, source_bound), enumerate_words(g2, source_bound))
    lifted = inverse_projection_dfa(r)
    h1, h2 = lift_grammar(g1), lift_grammar(g2)
    check_separates(lifted, enumerate_words(h1, lifted_bound), enumerate_words(h2, lifted_bound))
    return lifted


def recover_separator(a, g1, g2, source_bound=SOURCE_BOUND, lifted_bound=LIFTED_BOUND):
    """Turn a separator of the lifted languages back into one over Σ."""
    g1, g2 = _as_cnf(g1), _as_cnf(g2)
    h1, h2 = lift_grammar(g1), lift_grammar(g2)
    check_separates(a, enumerate_words(h1, lifted_bound), enumerate_words(h2, lifted_bound))
    p = padding_for(a)
    recovered = pad_automaton(a, *p.words)
    check_separates(recovered, enumerate_words(g1, source_bound), enumerate_words(g2, source_bound))
    return recovered
