import json

from fixtures import DUAL_LR_M2, SOCLE_M2
from soctab.cli import main
from soctab.embeddings import embedding_from_json, socle_tableau
from soctab.tableaux import SkewTableau

M2_PATH = "src/soctab/fixtures/m2.json"


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_enum_text(capsys):
    rc, out, _ = run_cli(capsys, "enum", "--shape", "42/532/31", "--kind", "socle")
    assert rc == 0
    assert out.startswith("2 socle tableaux")
    assert "..4" in out


def test_enum_json(capsys):
    rc, out, _ = run_cli(capsys, "enum", "--shape", "42/532/31", "--kind", "lr", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["version"] == 1
    assert data["command"] == "enum"
    assert data["result"]["count"] == 2


def test_lr_coeff(capsys):
    rc, out, _ = run_cli(capsys, "lr-coeff", "--shape", "42/642/42")
    assert rc == 0 and out.strip() == "3"
    rc, out, _ = run_cli(capsys, "lr-coeff", "--shape", "42/532/32")
    assert rc == 0 and out.strip() == "0"


def test_analyze(capsys):
    rc, out, _ = run_cli(capsys, "analyze", M2_PATH)
    assert rc == 0
    # the socle block of the analysis equals the fixture rendering
    assert SOCLE_M2.render().splitlines()[0] in out
    rc, out, _ = run_cli(capsys, "analyze", M2_PATH, "--format", "json")
    data = json.loads(out)["result"]
    assert SkewTableau.from_json_dict(data["socle"]) == SOCLE_M2
    assert SkewTableau.from_json_dict(data["dual_lr"]) == DUAL_LR_M2
    assert data["hom"]["h"][0][1] == 3


def test_analyze_prime_override(capsys):
    rc, out, _ = run_cli(capsys, "analyze", M2_PATH, "--prime", "3", "--format", "json")
    assert rc == 0
    assert json.loads(out)["result"]["prime"] == 3


def test_realize_and_round_trip(tmp_path, capsys):
    tfile = tmp_path / "sigma2.json"
    tfile.write_text(json.dumps(SOCLE_M2.to_json_dict()))
    ofile = tmp_path / "emb.json"
    rc, out, _ = run_cli(capsys, "realize", str(tfile), "-o", str(ofile))
    assert rc == 0
    x = embedding_from_json(json.loads(ofile.read_text()))
    assert socle_tableau(x) == SOCLE_M2


def test_realize_lr_kind(tmp_path, capsys):
    tfile = tmp_path / "g.json"
    tfile.write_text(json.dumps(DUAL_LR_M2.to_json_dict()))
    rc, out, _ = run_cli(capsys, "realize", str(tfile), "--kind", "lr", "--format", "json")
    assert rc == 0
    data = json.loads(out)["result"]
    from soctab.embeddings import lr_tableau

    assert lr_tableau(embedding_from_json(data)) == DUAL_LR_M2


def test_convert_paths(tmp_path, capsys):
    tfile = tmp_path / "sigma2.json"
    tfile.write_text(json.dumps(SOCLE_M2.to_json_dict()))
    hfile = tmp_path / "h.json"
    rc, _, _ = run_cli(capsys, "convert", "--from", "socle", "--to", "hom", str(tfile), "-o", str(hfile))
    assert rc == 0
    rc, out, _ = run_cli(capsys, "convert", "--from", "hom", "--to", "duallr", str(hfile), "--format", "json")
    assert rc == 0
    assert SkewTableau.from_json_dict(json.loads(out)["result"]) == DUAL_LR_M2
    rc, out, _ = run_cli(capsys, "convert", "--from", "socle", "--to", "duallr", str(tfile), "--format", "json")
    assert SkewTableau.from_json_dict(json.loads(out)["result"]) == DUAL_LR_M2
    rc, _, err = run_cli(capsys, "convert", "--from", "socle", "--to", "socle", str(tfile))
    assert rc == 1


def test_switch(tmp_path, capsys):
    tfile = tmp_path / "sigma2.json"
    tfile.write_text(json.dumps(SOCLE_M2.to_json_dict()))
    rc, out, _ = run_cli(capsys, "switch", str(tfile), "--format", "json")
    assert rc == 0
    data = json.loads(out)["result"]
    assert data["swaps"] == 8
    assert SkewTableau.from_json_dict(data["tableau"]) == DUAL_LR_M2
    rc, out, _ = run_cli(capsys, "switch", str(tfile), "--trace", "--format", "json")
    trace = json.loads(out)["result"]["trace"]
    assert len(trace) == 9  # initial grid plus one per swap
    assert all("owner" in cell for row in trace[0]["grid"] for cell in row)
    rc, out, _ = run_cli(capsys, "switch", str(tfile), "--seed", "5", "--format", "json")
    assert json.loads(out)["result"]["swaps"] == 8


def test_check_exit_codes(capsys):
    rc, out, _ = run_cli(capsys, "check", "--max-beta", "4", "--suite", "all", "--corpus-count", "5")
    assert rc == 0
    assert "mismatches: none" in out


def test_invalid_inputs(tmp_path, capsys):
    rc, _, err = run_cli(capsys, "enum", "--shape", "garbage")
    assert rc == 1 and "invalid input" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc, _, err = run_cli(capsys, "analyze", str(bad))
    assert rc == 1
    rc, _, err = run_cli(capsys, "analyze", str(tmp_path / "missing.json"))
    assert rc == 1
    # tableau failing the socle axioms is invalid input for switch
    badt = tmp_path / "bad_tableau.json"
    entries = dict(SOCLE_M2.entries)
    entries[(4, 1)], entries[(5, 1)] = 1, 2
    t = SkewTableau((4, 2), (5, 3, 2), (3, 1), entries)
    badt.write_text(json.dumps(t.to_json_dict()))
    rc, _, err = run_cli(capsys, "switch", str(badt))
    assert rc == 1


def test_exit_code_3_on_counterexample(capsys, monkeypatch):
    import soctab.cli as cli

    class FakeReport:
        ok = False
        mismatches = [{"order": "deterministic"}]

        def to_json_dict(self):
            return {"mismatches": self.mismatches}

        def render(self):
            return "mismatches: 1"

    monkeypatch.setattr(cli, "check_conjecture", lambda *a, **k: FakeReport())
    rc, out, _ = run_cli(capsys, "check", "--max-beta", "2", "--suite", "switching")
    assert rc == 3


def test_exit_code_2_on_internal_assertion(capsys, monkeypatch):
    import soctab.cli as cli
    from soctab.realize import ConditionStarViolated

    def boom(*a, **k):
        raise ConditionStarViolated("forced for the test")

    monkeypatch.setattr(cli, "realize_socle", boom)
    import json as _json
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        _json.dump(SOCLE_M2.to_json_dict(), fh)
        path = fh.name
    rc, _, err = run_cli(capsys, "realize", path)
    assert rc == 2 and "internal assertion" in err


def test_byte_identical_runs(capsys):
    rc1, out1, _ = run_cli(capsys, "analyze", M2_PATH, "--format", "json")
    rc2, out2, _ = run_cli(capsys, "analyze", M2_PATH, "--format", "json")
    assert rc1 == rc2 == 0
    assert out1 == out2
