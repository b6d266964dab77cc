import json
import subprocess
import sys

import pytest

from kstrong.cli import dumps, run
from kstrong.connectivity import connectivity_report
from kstrong.constructions import KTreePlan, du, ktree, ktree_random
from kstrong.detection import contains_k_strong
from kstrong.digraph import Digraph, read_dg, write_dg
from kstrong.formulas import bounds_report
from kstrong.oracle import oracle_sat_ex
from kstrong.saturation import is_saturated


@pytest.fixture
def cli(capsys):
    def call(*argv):
        code = run([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return call


@pytest.fixture
def du63(tmp_path):
    path = tmp_path / "du.dg"
    write_dg(du(6, 3), path)
    return path


def test_construct_matches_library(cli, tmp_path):
    code, out, _ = cli("construct", "du", "--n", 6, "--k", 3)
    assert code == 0 and out == du(6, 3).serialize()
    code, out, _ = cli("construct", "ktree", "--n", 7, "--k", 3, "--seed", 4)
    assert code == 0 and out == ktree_random(2, 7, 4)[1].serialize()
    code, out, _ = cli("construct", "tournament", "--n", 3)
    assert Digraph.parse(out).arcs() == [(0, 1), (0, 2), (1, 2)]


def test_plan_replay(cli, tmp_path):
    plan_path, out_path = tmp_path / "plan.json", tmp_path / "t.dg"
    code, _, _ = cli("construct", "ktree", "--n", 8, "--k", 4, "--seed", 9,
                     "--plan-out", plan_path, "-o", out_path)
    assert code == 0
    plan = KTreePlan.from_json(plan_path.read_text())
    assert read_dg(out_path) == ktree(plan)
    code, out, _ = cli("construct", "ktree", "--plan", plan_path)
    assert code == 0 and Digraph.parse(out) == ktree(plan)
    code, _, err = cli("construct", "ktree", "--plan", plan_path, "--n", 5)
    assert code == 2 and "disagrees" in err


def test_check_json_matches_library(cli, du63):
    d = du(6, 3)
    code, out, _ = cli("check", "saturated", du63, "--k", 3, "--json")
    assert code == 0 and out == dumps(is_saturated(d, 3).to_dict())
    code, out, _ = cli("check", "kappa", du63, "--json")
    assert code == 0 and out == dumps(connectivity_report(d))
    code, out, _ = cli("check", "ksub", du63, "--k", 2, "--json")
    assert code == 0 and out == dumps(contains_k_strong(d, 2).to_dict())


def test_check_exit_codes(cli, du63):
    assert cli("check", "saturated", du63, "--k", 3)[0] == 0
    assert cli("check", "saturated", du63, "--k", 2)[0] == 1
    assert cli("check", "ksub", du63, "--k", 3)[0] == 1
    assert cli("check", "kappa", du63, "--expect", 2)[0] == 0
    assert cli("check", "kappa", du63, "--expect", 3)[0] == 1
    assert cli("check", "scc", du63)[0] == 0
    assert cli("check", "ctree", du63, "--c", 2)[0] == 1
    assert cli("check", "ksub", du63)[0] == 2


def test_check_text_output(cli, du63):
    code, out, _ = cli("check", "kappa", du63)
    assert out.splitlines()[0] == "kappa 2"
    code, out, _ = cli("check", "ksub", du63, "--k", 2)
    assert out.startswith("contains true\nwitness ")


def test_check_scc_with_expect(cli, tmp_path):
    path = tmp_path / "t.dg"
    write_dg(Digraph(3, [(0, 1), (1, 2)]), path)
    code, out, _ = cli("check", "scc", path)
    assert code == 1 and out == "0\n1\n2\n"
    assert cli("check", "scc", path, "--expect", 3)[0] == 0


def test_ctree_check(cli, tmp_path):
    path = tmp_path / "t.dg"
    write_dg(ktree_random(2, 7, 1)[1], path)
    assert cli("check", "ctree", path, "--k", 3)[0] == 0
    assert cli("check", "ctree", path)[0] == 2


def test_parse_error_exit_code(cli, tmp_path):
    path = tmp_path / "bad.dg"
    path.write_text("n 3\n0 7\n")
    code, _, err = cli("check", "kappa", path)
    assert code == 2 and "line 2" in err
    assert cli("check", "kappa", tmp_path / "missing.dg")[0] == 2


def test_oracle_json(cli):
    code, out, _ = cli("oracle", "--n", 4, "--k", 2, "--json", "--canonical")
    doc = json.loads(out)
    expected = oracle_sat_ex(4, 2, canonical=True).to_dict()
    doc.pop("elapsed"), expected.pop("elapsed")
    assert code == 0 and doc == expected
    assert doc["sat"] == 9 and doc["canonical_saturated_count"] == 4


def test_oracle_progress_and_guard(cli):
    code, out, err = cli("oracle", "--n", 3, "--k", 2, "--progress")
    assert code == 0 and "sat 5" in out
    assert err.splitlines()[-1] == "progress 4 4"
    code, _, err = cli("oracle", "--n", 6, "--k", 2)
    assert code == 2 and "allow-large" in err


def test_bounds(cli):
    code, out, _ = cli("bounds", "--n", 4, "--k", 2, "--json")
    assert code == 0 and out == dumps(bounds_report(4, 2).to_dict())
    code, out, _ = cli("bounds", "--n", 4, "--k", 2)
    assert "free_bound 28/3 (9.333333)" in out
    assert cli("bounds", "--n", 2, "--k", 3)[0] == 2


def test_export_dot(cli, du63, tmp_path):
    code, out, _ = cli("export", "dot", du63)
    assert code == 0 and out == du(6, 3).to_dot()


def test_usage_errors(cli):
    assert cli()[0] == 2
    assert cli("construct", "du", "--n", 4)[0] == 2
    assert cli("frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kstrong", "bounds", "--n", "6", "--k", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "sat_value 24" in proc.stdout
