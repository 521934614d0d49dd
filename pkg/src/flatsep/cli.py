"""Command-line frontend: ``flatsep <command> ...`` with JSON reports.

Exit status is 0 when every check in the report passed, 1 when some check
failed and 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time

from flatsep.automata import (
    compute_omega,
    factorial_certificate,
    inverse_projection_dfa,
    load_dfa,
    pad_automaton,
    transition_monoid,
)
from flatsep.errors import FlatsepError, NotASeparator
from flatsep.flattening import lift_grammar, project, validate_bfg
from flatsep.grammars import (
    CnfCfg,
    cyk_member,
    enumerate_words,
    format_grammar,
    load_grammar,
    parse_grammar,
    sample_derivation,
    to_cnf,
)
from flatsep.padsearch import search_padding
from flatsep.reduction import (
    LIFTED_BOUND,
    SOURCE_BOUND,
    apply_padding,
    build_padding,
    check_identities,
    check_separates,
    padding_from_words,
    padding_exponent,
    witness_word,
)
from flatsep.tmreduce import (
    FIRST,
    SECOND,
    build_history_languages,
    initial_configuration,
    load_tm,
    parse_configuration,
    simulator_pairs,
    step_pair_grammar,
)
from flatsep.words import show

DEFAULT_SEED = 0
HISTORY_BOUND = 20
PAIR_BOUND = 10
HISTORY_BUDGET = 10_000_000


_FLAG_MINIMA = {"bound": 1, "samples": 0, "max_leaves": 2, "max_moves": 0, "max_filler": 1, "lifted_bound": 1}


class InputError(Exception):
    pass


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _inputs(**paths):
    return {k: {"path": p, "sha256": _digest(p)} for k, p in paths.items()}


def _check(name, passed, counterexample=None):
    out = {"check": name, "pass": bool(passed)}
    if not passed and counterexample is not None:
        out["counterexample"] = counterexample
    return out


def _report(command, inputs, checks, **extra):
    checks = sorted(checks, key=lambda c: c["check"])
    out = {
        "command": command,
        "inputs": inputs,
        "checks": checks,
        "passed": all(c["pass"] for c in checks),
    }
    out.update(extra)
    return out


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _separation_check(name, dfa, words1, words2):
    try:
        check_separates(dfa, words1, words2)
    except NotASeparator as exc:
        return _check(name, False, {"word": show(exc.word), "language": exc.side})
    return _check(name, True)


def _language_diff(a, b):
    diff = sorted(a ^ b, key=lambda w: (len(w), w))
    if not diff:
        return None
    w = diff[0]
    return {"word": show(w), "only_in": "first" if w in a else "second"}


# commands


def cmd_cnf(args):
    g = load_grammar(args.grammar)
    h = to_cnf(g)
    bound = args.bound if args.bound is not None else SOURCE_BOUND
    src = {w for w in enumerate_words(g, bound) if len(w) >= 2}
    res = enumerate_words(h, bound)
    diff = _language_diff(src, res)
    checks = [_check(f"same language, lengths 2..{bound}", diff is None, diff)]
    rep = _report("cnf", _inputs(grammar=args.grammar), checks, bound=bound,
                  productions=len(h.productions))
    return format_grammar(h), rep


def cmd_lift(args):
    g = load_grammar(args.grammar)
    lifted = lift_grammar(g)
    text = format_grammar(lifted)
    checks = []
    try:
        validate_bfg(parse_grammar(text))
        checks.append(_check("output is a BFG", True))
    except FlatsepError as exc:
        checks.append(_check("output is a BFG", False, str(exc)))
    bound = args.bound if args.bound is not None else LIFTED_BOUND
    src_bound = (bound + 2) // 3
    projected = {project(w) for w in enumerate_words(lifted, bound)}
    expected = {w for w in enumerate_words(g, src_bound) if 3 * len(w) - 2 <= bound}
    diff = _language_diff(projected, expected)
    checks.append(_check(f"projection of lifted words <= {bound}", diff is None, diff))
    rep = _report("lift", _inputs(grammar=args.grammar), checks, bound=bound,
                  productions=len(lifted.productions), source_productions=len(g.productions))
    return text, rep


def cmd_omega(args):
    dfa = load_dfa(args.dfa)
    m = transition_monoid(dfa)
    omega = compute_omega(m)
    checks = [_check("factorial certificate", factorial_certificate(m))]
    minimal = omega == 1 or any((s ** (omega - 1)) * (s ** (omega - 1)) != s ** (omega - 1) for s in m.elements)
    checks.append(_check("omega is minimal", minimal))
    return None, _report("omega", _inputs(dfa=args.dfa), checks, omega=omega, monoid_size=len(m))


def cmd_verify(args):
    dfa = load_dfa(args.dfa)
    g = CnfCfg.from_cfg(to_cnf(load_grammar(args.grammar)))
    for t in sorted(g.terminals):
        dfa.encode((t,))
    m = transition_monoid(dfa)
    omega = args.omega if args.omega is not None else padding_exponent(m)
    p = build_padding(omega)
    checks = [c.to_json() for c in check_identities(dfa, p).checks]
    lifted = lift_grammar(g)
    cnf_lifted = lifted.cnf()
    rng = random.Random(args.seed)
    width = len(str(max(args.samples - 1, 0)))
    for i in range(args.samples):
        tree = sample_derivation(g, args.max_leaves, rng.randrange(2**32))
        w = tree.yield_word()
        wp = witness_word(tree, p)
        tag = f"witness {i:0{width}d}"
        same = dfa.action(wp) == dfa.action(apply_padding(p, w))
        checks.append(_check(f"{tag} equivalent to padding", same, {"word": show(w)}))
        member = cyk_member(cnf_lifted, wp)
        checks.append(_check(f"{tag} in lifted language", member, {"word": show(w), "length": len(wp)}))
    rep = _report(
        "verify",
        _inputs(dfa=args.dfa, grammar=args.grammar),
        checks,
        seed=args.seed,
        samples=args.samples,
        max_leaves=args.max_leaves,
        omega=omega,
        monoid_omega=compute_omega(m),
        padding={"eL": show(p.eL), "e": show(p.e), "eR": show(p.eR)},
    )
    return None, rep


def cmd_pipeline(args):
    g1 = CnfCfg.from_cfg(to_cnf(load_grammar(args.g1)))
    g2 = CnfCfg.from_cfg(to_cnf(load_grammar(args.g2)))
    r = load_dfa(args.dfa)
    sb = args.bound if args.bound is not None else SOURCE_BOUND
    lb = args.lifted_bound
    w1, w2 = enumerate_words(g1, sb), enumerate_words(g2, sb)
    h1, h2 = lift_grammar(g1), lift_grammar(g2)
    v1, v2 = enumerate_words(h1, lb), enumerate_words(h2, lb)
    checks = [_separation_check("1 source separation", r, w1, w2)]
    lifted = inverse_projection_dfa(r)
    checks.append(_separation_check("2 transfer: lifted separation", lifted, v1, v2))
    p = build_padding(padding_exponent(transition_monoid(lifted)))
    recovered = pad_automaton(lifted, *p.words)
    checks.append(_separation_check("3 recover: source separation", recovered, w1, w2))
    agree = next((w for w in sorted(w1 | w2, key=lambda w: (len(w), w))
                  if recovered.accepts(w) != lifted.accepts(apply_padding(p, w))), None)
    checks.append(_check("4 recovered(w) = lifted(T(w))", agree is None,
                         None if agree is None else {"word": show(agree)}))
    rep = _report(
        "pipeline",
        _inputs(g1=args.g1, g2=args.g2, dfa=args.dfa),
        checks,
        bounds={"source": sb, "lifted": lb},
        words={"g1": len(w1), "g2": len(w2), "lifted_g1": len(v1), "lifted_g2": len(v2)},
        padding={"eL": show(p.eL), "e": show(p.e), "eR": show(p.eR), "omega": p.omega},
    )
    return None, rep


def cmd_search_padding(args):
    dfa = load_dfa(args.dfa)
    max_moves = args.max_moves
    if max_moves is None:
        max_moves = 4 * padding_exponent(transition_monoid(dfa))
    found = search_padding(dfa, max_moves, args.max_filler)
    extra = {"max_moves": max_moves, "max_filler": args.max_filler}
    if found is None:
        checks = [_check("triple found", False, {"max_moves": max_moves})]
        return None, _report("search-padding", _inputs(dfa=args.dfa), checks, triple=None, **extra)
    p = padding_from_words(*found.words)
    checks = [_check("triple found", True)] + [c.to_json() for c in check_identities(dfa, p).checks]
    return None, _report("search-padding", _inputs(dfa=args.dfa), checks, triple=found.to_json(), **extra)


def cmd_tm2cfg(args):
    tm = load_tm(args.tm)
    if args.wI is None:
        c0 = initial_configuration(tm)
    else:
        c0 = parse_configuration(tm, args.wI)
    l1, l2 = build_history_languages(tm, " ".join(c0.word))
    t1, t2 = format_grammar(l1), format_grammar(l2)
    checks = []
    reparsed = all(format_grammar(parse_grammar(t)) == t for t in (t1, t2))
    checks.append(_check("grammars re-parse", reparsed))
    for side in (SECOND, FIRST):
        got = enumerate_words(step_pair_grammar(tm, side), PAIR_BOUND)
        want = simulator_pairs(tm, PAIR_BOUND, side)
        diff = _language_diff(got, want)
        checks.append(_check(f"step pairs ({side} reversed) <= {PAIR_BOUND}", diff is None, diff))
    bound = args.bound if args.bound is not None else HISTORY_BOUND
    e1 = enumerate_words(l1, bound, HISTORY_BUDGET, max_len_cap=bound)
    e2 = enumerate_words(l2, bound, HISTORY_BUDGET, max_len_cap=bound)
    common = sorted(e1 & e2, key=lambda w: (len(w), w))
    checks.append(_check(f"L1, L2 disjoint <= {bound}", not common,
                         {"word": show(common[0])} if common else None))
    extra = {"bound": bound, "initial": " ".join(c0.word), "words": {"L1": len(e1), "L2": len(e2)}}
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for fname, text in (("L1.cfg", t1), ("L2.cfg", t2)):
            with open(os.path.join(args.output, fname), "w", encoding="utf-8") as fh:
                fh.write(text)
        extra["files"] = ["L1.cfg", "L2.cfg"]
    else:
        extra["grammars"] = {"L1": t1, "L2": t2}
    return None, _report("tm2cfg", _inputs(tm=args.tm), checks, **extra)


# argument parsing


def _common(p, output_help="write the report here instead of stdout"):
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default 0)")
    p.add_argument("--bound", type=int, default=None, help="enumeration bound, where the command enumerates")
    p.add_argument("-o", "--output", default=None, help=output_help)
    p.add_argument("--timing", action="store_true", help="add wall-clock timing (makes reports non-reproducible)")


def build_parser():
    parser = argparse.ArgumentParser(prog="flatsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cnf", help="convert a grammar to Chomsky normal form")
    p.add_argument("grammar")
    _common(p, "write the CNF grammar here (the report then goes to stdout)")
    p.set_defaults(func=cmd_cnf)

    p = sub.add_parser("lift", help="lift a CNF grammar to its binary flattened tree grammar")
    p.add_argument("grammar")
    _common(p, "write the lifted grammar here (the report then goes to stdout)")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("omega", help="idempotent exponent of a DFA's transition monoid")
    p.add_argument("dfa")
    _common(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("verify", help="padding identities and sampled witness checks")
    p.add_argument("dfa")
    p.add_argument("grammar")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--max-leaves", type=int, default=8)
    p.add_argument("--omega", type=int, default=None, help="override the padding exponent")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipeline", help="transfer a separator to the lifted languages and back")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("dfa")
    p.add_argument("--lifted-bound", type=int, default=LIFTED_BOUND)
    _common(p)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("search-padding", help="search pumping moves for a padding triple")
    p.add_argument("dfa")
    p.add_argument("--max-moves", type=int, default=None, help="default: 4 times the padding exponent")
    p.add_argument("--max-filler", type=int, default=1, help="largest filler tree, in leaves")
    _common(p)
    p.set_defaults(func=cmd_search_padding)

    p = sub.add_parser("tm2cfg", help="computation-history grammars of a Turing machine")
    p.add_argument("tm")
    p.add_argument("--wI", default=None, help="initial configuration, e.g. 'q0 1 1' (default: blank tape)")
    _common(p, "directory for L1.cfg and L2.cfg (default: embed them in the report)")
    p.set_defaults(func=cmd_tm2cfg, output_is_dir=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        for flag, least in _FLAG_MINIMA.items():
            v = getattr(args, flag, None)
            if v is not None and v < least:
                raise InputError(f"--{flag.replace('_', '-')} must be at least {least}")
        artifact, report = args.func(args)
    except (FlatsepError, OSError, InputError) as exc:
        print(f"flatsep {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 3)
    text = _dumps(report)
    if getattr(args, "output_is_dir", False):
        sys.stdout.write(text)
    elif artifact is None:
        _write(args.output, text)
    elif args.output:
        _write(args.output, artifact)
        sys.stdout.write(text)
    else:
        sys.stdout.write(artifact)
        sys.stderr.write(text)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
