import io
import json
import subprocess
import sys

import pytest

from fockpol.cli import main
from fockpol.pats import TwoModePats, pats_degrees
from fockpol.sweep import read_csv
from fockpol.thermal import ThermalPair, thermal_degrees


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_degree_json_matches_library():
    code, text = run(["degree", '{"kind":"thermal","n1":2,"n2":1}'])
    assert code == 0
    payload = json.loads(text)
    ref = thermal_degrees(ThermalPair(2, 1)).as_dict()
    assert payload == ref


def test_degree_csv():
    code, text = run(["degree", "--format", "csv", '{"kind":"fock","M":1,"S":0}'])
    assert code == 0
    header, row = text.strip().splitlines()
    assert header == "P1,P2,P_HS,P_B,P_RE"
    assert row.split(",")[0] == "1"


def test_degree_vacuum_marks_stokes_undefined():
    code, text = run(["degree", '{"kind":"thermal","n1":0,"n2":0}'])
    payload = json.loads(text)
    assert code == 0
    assert payload["p1"] is None and payload["stokes_undefined"] == "vacuum"


def test_degree_from_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"kind":"pats","n1":1,"M":2,"n2":1,"S":1}'))
    code, text = run(["degree", "-"])
    assert code == 0
    assert json.loads(text)["p_hs"] == pats_degrees(TwoModePats.of(1, 2, 1, 1)).p_hs


@pytest.mark.parametrize("state", ['{"kind":"squeezed"}', "{oops", '{"kind":"thermal","n1":-1,"n2":0}'])
def test_degree_usage_errors(state, capsys):
    code, _ = run(["degree", state])
    assert code == 2
    assert "fockpol: error" in capsys.readouterr().err


def test_truncation_overflow_is_usage_error():
    code, _ = run(["degree", "--n-max-cap", "10", '{"kind":"thermal","n1":40,"n2":1}'])
    assert code == 2


def test_sweep_to_file_round_trip(tmp_path):
    path = tmp_path / "sweep.csv"
    code, _ = run(["sweep", "--family", "pats", "--n2", "1", "--M", "2", "--S", "2",
                   "--eps-stop", "2", "--eps-step", "0.5", "-o", str(path)])
    assert code == 0
    with open(path) as fh:
        rows = read_csv(fh)
    assert [r["epsilon"] for r in rows] == [0.0, 0.5, 1.0, 1.5, 2.0]
    for r in rows:
        rep = pats_degrees(TwoModePats.of(1 + r["epsilon"], 2, 1, 2))
        assert [r[k] for k in ("P1", "P2", "P_HS", "P_B", "P_RE")] == list(rep.values())


def test_sweep_explicit_grid_and_json():
    code, text = run(["sweep", "--family", "thermal", "--n2", "1", "--eps", "0,1", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert [p["epsilon"] for p in payload] == [0.0, 1.0]


def test_sweep_bad_grid():
    code, _ = run(["sweep", "--family", "thermal", "--n2", "1", "--eps", "1,0.5"])
    assert code == 2


def test_sweep_unwritable_path(tmp_path):
    code, _ = run(["sweep", "--family", "thermal", "--n2", "1", "--eps", "0",
                   "-o", str(tmp_path / "missing" / "x.csv")])
    assert code == 2


def test_verify_fast_passes():
    code, text = run(["verify", "--level", "fast"])
    assert code == 0, text
    assert text.strip().endswith("verification passed")


def test_verify_negative_control():
    # a zero tolerance cannot be met, so the harness must report failure
    code, text = run(["verify", "--level", "fast", "--tol-scale", "0"])
    assert code == 1
    assert "FAIL" in text


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"], io.StringIO())
    assert exc.value.code == 2


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "fockpol.cli", "degree", '{"kind":"fock","M":2,"S":2}'],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["p_hs"] == 0.8
