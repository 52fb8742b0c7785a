import io
import json
import subprocess
import sys

import pytest

from quasimodular.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_expand_csv():
    code, text = run("expand", "Q2", "--order", "8", "--format", "csv")
    assert code == 0
    assert text == "0,1\n1,24\n2,24\n3,96\n4,24\n5,144\n6,96\n7,192\n"


def test_expand_bfile_laurent():
    code, text = run("expand", "j3", "--order", "5", "--format", "bfile")
    assert code == 0
    assert text.splitlines()[:3] == ["-1 1", "0 42", "1 783"]
    assert text.splitlines()[-1] == "4 371520"


def test_expand_json():
    code, text = run("expand", "Delta", "--order", "3", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert data == {"valuation": 1, "precision": 3, "coeffs": ["1", "-24"]}


def test_expand_defaults_and_global_flags_first():
    code, text = run("--order", "4", "expand", "Delta2")
    assert code == 0 and text == "1,1\n2,-8\n3,12\n"


def test_expand_errors(capsys):
    assert run("expand", "E8")[0] == 2
    assert run("expand", "Q2", "--format", "xml")[0] == 3
    assert run("expand", "Q2", "--order", "0")[0] == 3
    assert "unknown form" in capsys.readouterr().err


def test_bfile_rejects_fractions(monkeypatch):
    from quasimodular import cli
    from quasimodular.forms import Form, FormDescriptor
    from quasimodular.qseries import QSeries

    half = Form(QSeries(["1/2"], 0, 2), FormDescriptor(0, None, "modular"))
    monkeypatch.setattr(cli, "catalog", lambda name, order: half)
    assert run("expand", "X", "--format", "bfile")[0] == 3
    assert run("expand", "X", "--format", "csv") == (0, "0,1/2\n1,0\n")


def test_verify_sl2_order_zero():
    code, text = run("verify", "sl2", "--order", "0")
    assert code == 0
    assert text.count("PASS") == 9
    assert text.endswith("9/9 checks passed\n")


def test_verify_systems():
    code, text = run("verify", "systems", "--order", "200")
    assert code == 0
    assert "FAIL" not in text
    assert "O(q^200)" in text


def test_verify_order_floor_for_series_suites():
    assert run("verify", "identities", "--order", "4")[0] == 1


def test_verify_quiet_and_json():
    code, text = run("verify", "chazy", "--quiet")
    assert code == 0 and text == "2/2 checks passed\n"
    code, text = run("verify", "bases", "--format", "json")
    rows = json.loads(text)
    assert code == 0 and all(r["passed"] for r in rows)


def test_verify_failure_exit_code(monkeypatch):
    from quasimodular import verify
    from quasimodular.report import Check

    monkeypatch.setitem(verify._RUNNERS, "chazy", lambda order: [Check("broken", False, "residual 1 at q^3")])
    code, text = run("verify", "chazy")
    assert code == 1
    assert "FAIL broken: residual 1 at q^3" in text


def test_tau_command():
    assert run("tau", "--which", "tau2", "--n", "5", "--method", "eta") == (0, "-210\n")
    assert run("tau", "--which", "tau3", "--n", "7", "--method", "recursion") == (0, "-40\n")
    assert run("tau", "--which", "tau", "--n", "12", "--method", "formula") == (0, "-370944\n")
    code, text = run("tau", "--which", "tau", "--n", "1", "--method", "crosscheck")
    assert code == 0 and text.endswith("agreement\n")
    assert run("tau", "--n", "0")[0] == 1


def test_tau_crosscheck_mismatch(monkeypatch):
    from quasimodular import tau

    real = tau.tau_table

    def broken(which, n, method):
        t = real(which, n, method)
        if method == "explicit_formula":
            return type(t)(which, method, t.values[:-1] + (t.values[-1] + 1,))
        return t

    monkeypatch.setattr(tau, "tau_table", broken)
    code, text = run("tau", "--n", "10", "--method", "crosscheck")
    assert code == 1 and "MISMATCH" in text


def test_scan_command():
    code, text = run("scan", "tau2-mod24", "--upto", "2000")
    assert code == 0 and text.startswith("tau2-mod24: no violation up to 2000")
    assert run("scan", "sigma-mod8", "--upto", "5000")[0] == 0
    assert run("scan", "tau3-mod3", "--upto", "2000")[0] == 0
    assert run("scan", "tau-mod691", "--upto", "10")[0] == 2
    code, text = run("scan", "all", "--upto", "200")
    assert code == 0 and len(text.splitlines()) == 18


def test_scan_violation_exit_code(monkeypatch):
    from quasimodular import tau

    bogus = tau.CongruenceRule("bogus", "tau(n) = 0 mod 7", lambda n, d: d.tau("tau")[n] % 7 == 0)
    monkeypatch.setitem(tau.RULES, "bogus", bogus)
    code, text = run("scan", "bogus", "--upto", "10")
    assert code == 1 and text == "bogus: violated at n = 1\n"


def test_dims_basis_sturm():
    code, text = run("dims", "--p", "2", "--k", "8")
    assert code == 0 and "dim_modular 3\n" in text and "dim_cusp 1\n" in text
    code, text = run("dims", "--p", "3", "--k", "6", "--format", "json")
    assert json.loads(text)["eps3"] == 1
    assert run("dims", "--p", "9", "--k", "2")[0] == 2
    assert run("dims", "--p", "3", "--k", "5")[0] == 2
    code, text = run("basis", "--group", "2", "--k", "8", "--check")
    assert code == 0
    assert text.splitlines()[:3] == ["Q2^4", "Q2^2 R2", "R2^2"]
    assert "rank 3, dimension 3" in text
    assert run("basis", "--group", "Gamma0_3", "--k", "0") == (0, "1\n")
    assert run("basis", "--group", "7", "--k", "4")[0] == 2
    assert run("sturm", "--group", "3", "--k", "6") == (0, "2\n")
    assert run("sturm", "--group", "SL2Z", "--k", "12") == (0, "1\n")


def test_deterministic_output():
    a = run("verify", "identities", "--order", "16")
    b = run("verify", "identities", "--order", "16")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasimodular", "sturm", "--group", "2", "--k", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"


@pytest.mark.parametrize("argv", [["verify", "nonsense"], ["tau", "--which", "tau9", "--n", "1"]])
def test_argparse_rejections(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, io.StringIO())
    assert exc.value.code == 2
