"""Search for padding triples built from pumping moves of the lifted grammar.

A move pumps a nonterminal with rule 3 (``X' -> < E' X' >``, "left") or rule 4
(``X' -> < X' E' >``, "right"), E' being replaced by a filler word. Moves
on K' extend the contexts around K' in ``N' -> < K' L' >``, moves on L' those
around L'. The search state is the triple of transition-monoid elements of
(eL, e, eR), which is all that the four identities depend on.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

from flatsep.automata import MonoidElement
from flatsep.errors import UnknownSymbol
from flatsep.words import CLOSE, OPEN, show

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class PumpMove:
    side: str
    filler: tuple

    @property
    def context(self):
        """The (before, after) words this move wraps around the pumped nonterminal."""
        if self.side == LEFT:
            return (OPEN,) + self.filler, (CLOSE,)
        return (OPEN,), self.filler + (CLOSE,)

    def to_json(self):
        return {"side": self.side, "filler": show(self.filler)}


def contexts(moves):
    left, right = (), ()
    for m in moves:
        before, after = m.context
        left = left + before
        right = after + right
    return left, right


@dataclass(frozen=True)
class CandidateTriple:
    moves_K: tuple
    moves_L: tuple

    @property
    def words(self):
        lk, rk = contexts(self.moves_K)
        ll, rl = contexts(self.moves_L)
        return (OPEN,) + lk, rk + ll, rl + (CLOSE,)

    @property
    def eL(self):
        return self.words[0]

    @property
    def e(self):
        return self.words[1]

    @property
    def eR(self):
        return self.words[2]

    def to_json(self):
        eL, e, eR = self.words
        return {
            "eL": show(eL),
            "e": show(e),
            "eR": show(eR),
            "moves": {
                "K": [m.to_json() for m in self.moves_K],
                "L": [m.to_json() for m in self.moves_L],
            },
        }


@lru_cache(maxsize=None)
def fillers(max_leaves):
    """Flattened binary trees (words of E') with up to `max_leaves` leaves, length-lex ordered."""
    by_leaves = {1: [(OPEN, CLOSE)]}
    for k in range(2, max_leaves + 1):
        words = set()
        for i in range(1, k):
            for x in by_leaves[i]:
                for y in by_leaves[k - i]:
                    words.add((OPEN,) + x + y + (CLOSE,))
        by_leaves[k] = sorted(words)
    out = [w for k in range(1, max_leaves + 1) for w in by_leaves[k]]
    return tuple(sorted(out, key=lambda w: (len(w), w)))


def closed_form_moves(omega):
    """The move sequences that produce ``build_padding(omega)``."""
    v = omega - 1
    heart = PumpMove(LEFT, (OPEN, CLOSE))
    diamond = PumpMove(RIGHT, (OPEN, CLOSE))
    moves_K = ((diamond,) * v + (heart,) * v) * omega + (diamond,) * v
    moves_L = (heart,) * v + ((heart,) * v + (diamond,) * v) * omega
    return CandidateTriple(moves_K, moves_L)


def _satisfies(eL, e, eR):
    return eL * eL == eL and eR * eR == eR and e * eL == e and eR * e == e


def search_padding(dfa, max_moves, max_filler_leaves=1):
    """Cheapest move-built triple passing all four identities, or None.

    Candidates are explored by total word length, then lexicographically by
    move log, so the result is deterministic. States already expanded with
    no more moves are skipped.
    """
    for s in (OPEN, CLOSE):
        if s not in dfa.alphabet:
            raise UnknownSymbol(s, dfa.alphabet)
    act = dfa.action
    ident = MonoidElement.identity(dfa.n_states)
    move_table = []
    for f in fillers(max_filler_leaves):
        for side in (LEFT, RIGHT):
            m = PumpMove(side, f)
            before, after = m.context
            move_table.append((m, act(before), act(after), len(before) + len(after)))
    # each choice: (index, on K?, move row)
    choices = [(2 * i + k, k == 0, row) for i, row in enumerate(move_table) for k in (0, 1)]
    choices.sort(key=lambda c: c[0])

    start = (act((OPEN,)), ident, act((CLOSE,)))
    heap = [(2, (), start, (), ())]
    best = {}
    while heap:
        length, key, state, mk, ml = heapq.heappop(heap)
        n_moves = len(key)
        if best.get(state, max_moves + 1) <= n_moves:
            continue
        best[state] = n_moves
        if _satisfies(*state):
            return CandidateTriple(mk, ml)
        if n_moves == max_moves:
            continue
        eL, e, eR = state
        for code, on_k, (m, a_before, a_after, cost) in choices:
            if on_k:
                nxt = (eL * a_before, a_after * e, eR)
                item = (length + cost, key + (code,), nxt, mk + (m,), ml)
            else:
                nxt = (eL, e * a_before, a_after * eR)
                item = (length + cost, key + (code,), nxt, mk, ml + (m,))
            if best.get(nxt, max_moves + 1) > n_moves + 1:
                heapq.heappush(heap, item)
    return None
