import json
import subprocess
import sys

import pytest

from flatsep.cli import main
from flatsep.flattening import validate_bfg
from flatsep.grammars import load_grammar, parse_grammar


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cnf(capsys, fx, tmp_path):
    out_file = tmp_path / "ab.cnf"
    code, out, _ = call(capsys, "cnf", fx("anbn.cfg"), "-o", str(out_file))
    assert code == 0
    rep = json.loads(out)
    assert rep["command"] == "cnf" and rep["passed"]
    assert load_grammar(str(out_file)).is_cnf()
    code, out, err = call(capsys, "cnf", fx("ab.cfg"))
    assert code == 0 and parse_grammar(out).is_cnf() and json.loads(err)["passed"]


def test_cnf_errors(capsys, tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("S => 'a'\n")
    code, _, err = call(capsys, "cnf", str(bad))
    assert code == 2 and "error" in err
    short = tmp_path / "short.cfg"
    short.write_text("S -> 'a' | 'a' 'b'\n")
    assert call(capsys, "cnf", str(short))[0] == 2


def test_lift(capsys, fx, tmp_path):
    cnf = tmp_path / "ab.cnf"
    call(capsys, "cnf", fx("ab.cfg"), "-o", str(cnf))
    lifted = tmp_path / "ab.bfg"
    code, out, _ = call(capsys, "lift", str(cnf), "-o", str(lifted))
    rep = json.loads(out)
    assert code == 0 and rep["productions"] == 11
    validate_bfg(load_grammar(str(lifted)))
    assert call(capsys, "lift", fx("anbn.cfg"))[0] == 2


def test_omega(capsys, fx):
    code, out, _ = call(capsys, "omega", fx("one_state.dfa"))
    rep = json.loads(out)
    assert code == 0 and rep["omega"] == 1 and rep["monoid_size"] == 1
    rep = json.loads(call(capsys, "omega", fx("even_a.dfa"))[1])
    assert rep["omega"] == 2 and rep["monoid_size"] == 2
    assert {c["check"] for c in rep["checks"]} == {"factorial certificate", "omega is minimal"}


def test_verify(capsys, fx):
    code, out, _ = call(capsys, "verify", fx("bracket_parity.dfa"), fx("anbn.cfg"), "--samples", "4")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert len(rep["checks"]) == 4 + 2 * 4
    names = [c["check"] for c in rep["checks"]]
    assert names == sorted(names)


def test_verify_wrong_omega(capsys, fx):
    code, out, _ = call(capsys, "verify", fx("bracket_parity.dfa"), fx("anbn.cfg"), "--samples", "2", "--omega", "1")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    bad = [c for c in rep["checks"] if not c["pass"]]
    assert any(c["check"] == "eL.eL=eL" and "counterexample" in c for c in bad)


def test_verify_alphabet_mismatch(capsys, fx):
    assert call(capsys, "verify", fx("even_a.dfa"), fx("anbn.cfg"))[0] == 2


def test_pipeline(capsys, fx):
    code, out, _ = call(capsys, "pipeline", fx("ab.cfg"), fx("ba.cfg"), fx("starts_with_a.dfa"))
    rep = json.loads(out)
    assert code == 0 and rep["bounds"] == {"source": 6, "lifted": 9}
    code, out, _ = call(capsys, "pipeline", fx("anbn.cfg"), fx("bnan.cfg"), fx("starts_with_a.dfa"), "--bound", "4")
    assert code == 0 and json.loads(out)["bounds"]["source"] == 4


def test_pipeline_non_separator(capsys, fx, tmp_path):
    everything = tmp_path / "all.dfa"
    everything.write_text("states 1\nalphabet a b\ninitial 0\naccepting 0\n0 a 0\n0 b 0\n")
    code, out, _ = call(capsys, "pipeline", fx("ab.cfg"), fx("ba.cfg"), str(everything))
    rep = json.loads(out)
    assert code == 1
    first = rep["checks"][0]
    assert first["pass"] is False and first["counterexample"] == {"word": "ba", "language": 2}


def test_search_padding(capsys, fx):
    code, out, _ = call(capsys, "search-padding", fx("bracket_parity.dfa"))
    rep = json.loads(out)
    assert code == 0 and rep["max_moves"] == 8
    assert set(rep["triple"]) == {"eL", "e", "eR", "moves"}
    code, out, _ = call(capsys, "search-padding", fx("one_state.dfa"))
    assert json.loads(out)["triple"]["e"] == ""


def test_search_padding_not_found(capsys, fx):
    code, out, _ = call(capsys, "search-padding", fx("bracket_parity.dfa"), "--max-moves", "0")
    rep = json.loads(out)
    assert code == 1 and rep["triple"] is None and not rep["passed"]


def test_search_padding_needs_brackets(capsys, fx):
    assert call(capsys, "search-padding", fx("even_a.dfa"))[0] == 2


def test_tm2cfg(capsys, fx, tmp_path):
    code, out, _ = call(capsys, "tm2cfg", fx("parity.tm"), "--wI", "q0 1 1 1", "--bound", "16", "-o", str(tmp_path))
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["files"] == ["L1.cfg", "L2.cfg"]
    for name in rep["files"]:
        load_grammar(str(tmp_path / name))
    code, out, _ = call(capsys, "tm2cfg", fx("two_state.tm"), "--bound", "12")
    rep = json.loads(out)
    assert code == 0 and set(rep["grammars"]) == {"L1", "L2"}
    parse_grammar(rep["grammars"]["L2"])


def test_tm2cfg_errors(capsys, fx, tmp_path):
    bad = tmp_path / "bad.tm"
    bad.write_text("states q0\nblank _\ninitial q0\nq0 _ -> q0\n")
    assert call(capsys, "tm2cfg", str(bad))[0] == 2
    assert call(capsys, "tm2cfg", fx("parity.tm"), "--wI", "1 1")[0] == 2


def test_missing_file_and_bad_flags(capsys, tmp_path):
    assert call(capsys, "omega", str(tmp_path / "nope.dfa"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert call(capsys, "omega", str(tmp_path / "nope.dfa"), "--bound", "0")[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "bracket_parity.dfa", "anbn.cfg", "--samples", "5", "--seed", "7"],
    ["pipeline", "ab.cfg", "ba.cfg", "starts_with_a.dfa", "--seed", "7"],
])
def test_reports_are_byte_identical(fx, tmp_path, argv):
    argv = [fx(a) if "." in a and not a[0].isdigit() else a for a in argv]
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert main(argv + ["-o", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_different_seed_changes_samples(fx, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", fx("bracket_parity.dfa"), fx("palindromes.cfg"), "--seed", "1", "-o", str(a)])
    main(["verify", fx("bracket_parity.dfa"), fx("palindromes.cfg"), "--seed", "2", "-o", str(b)])
    assert json.loads(a.read_text())["seed"] == 1
    assert a.read_bytes() != b.read_bytes()


def test_timing_flag(capsys, fx):
    rep = json.loads(call(capsys, "omega", fx("even_a.dfa"), "--timing")[1])
    assert "timing_seconds" in rep
    rep = json.loads(call(capsys, "omega", fx("even_a.dfa"))[1])
    assert "timing_seconds" not in rep


def test_module_entry_point(fx):
    proc = subprocess.run([sys.executable, "-m", "flatsep", "omega", fx("even_a.dfa")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["omega"] == 2
