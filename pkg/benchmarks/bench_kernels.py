"""Compiled vs pure-Python kernels on the workloads the test suite exercises.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit
from array import array

from flatsep import _pykernels
from flatsep.automata import random_dfa
from flatsep.grammars import random_cnf, sample_derivation
from flatsep.reduction import build_padding, witness_word

try:
    from flatsep import _ckernels
except ImportError:
    _ckernels = None


def workloads(seed):
    rng = random.Random(seed)
    dfa = random_dfa(rng, 5, ("<", ">", "a", "b"))
    g = random_cnf(rng, 4)
    tree = sample_derivation(g, 8, seed)
    w = witness_word(tree, build_padding(4))
    delta = dfa._flat
    codes = dfa.encode(w)
    c = g.compiled()
    cyk_word = array("i", [rng.randrange(len(c.terms)) for _ in range(32)])
    return {
        f"word_action (|w|={len(w)}, 5 states)": lambda k: k.word_action(delta, dfa.n_states, len(dfa.alphabet), codes),
        f"run (|w|={len(w)})": lambda k: k.run(delta, len(dfa.alphabet), dfa.initial, codes),
        "cyk_dense (n=32, 4 nonterminals)": lambda k: k.cyk_dense(cyk_word, c.unary, c.rule_array, c.start),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'kernel':40s} " + " ".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in workloads(args.seed).items():
        times = []
        for _, mod in backends:
            t = min(timeit.repeat(lambda: fn(mod), number=args.repeat, repeat=3)) / args.repeat
            times.append(t)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:40s} " + " ".join(f"{t * 1e6:10.1f}us" for t in times) + "   " + speed)


if __name__ == "__main__":
    main()
