import json
import subprocess
import sys

import pytest

from exactplane import render_figure

BASE = [sys.executable, "-m", "exactplane.cli"]

PIC1 = [
    "--line-g-s", "y=2x+4",
    "--line-g-t", "y=2x+2",
    "--line-l", "y=1",
]


def run_cli(*args):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, timeout=120
    )


class TestProjectionCommands:
    def test_phor_human_output(self):
        r = run_cli("phor", *PIC1)
        assert r.returncode == 0
        assert "p: (-5/2, 1)" in r.stdout
        assert "rho: -1" in r.stdout

    def test_pver_human_output(self):
        r = run_cli("pver", *PIC1)
        assert r.returncode == 0
        assert "p: (3/2, 1)" in r.stdout

    def test_phor_json_document(self):
        r = run_cli("phor", *PIC1, "--json")
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["construction"] == "phor"
        assert doc["outputs"]["p"] == {"x": "-5/2", "y": "1"}
        assert doc["case"] == "HORIZONTAL_A"
        assert doc["witnesses"]["rho"] == "-1"
        assert doc["inputs"]["g_s"] == "y=2*x+4"  # canonical echo
        assert "error" not in doc

    def test_json_is_deterministic(self):
        a = run_cli("phor", *PIC1, "--json").stdout
        b = run_cli("phor", *PIC1, "--json").stdout
        assert a == b

    def test_svg_out(self, tmp_path):
        out = tmp_path / "scene.svg"
        r = run_cli("phor", *PIC1, "--svg-out", str(out))
        assert r.returncode == 0
        svg = out.read_text()
        assert 'data-x="-5/2" data-y="1"' in svg


class TestExitCodes:
    def test_parse_error_is_2(self):
        r = run_cli("phor", "--line-g-s", "nonsense", "--line-g-t", "y=1", "--line-l", "y=2")
        assert r.returncode == 2
        assert "E_PARSE" in r.stderr

    def test_parse_error_json_document(self):
        r = run_cli(
            "phor", "--line-g-s", "y=2x+4", "--line-g-t", "y=2x+2",
            "--line-l", "y=(1", "--json",
        )
        assert r.returncode == 2
        doc = json.loads(r.stdout)
        assert doc["error"]["code"] == "E_PARSE"
        assert doc["inputs"]["l"] == "y=(1"  # raw echo on failure
        assert "outputs" not in doc

    def test_precondition_error_is_3(self):
        r = run_cli("phor", "--line-g-s", "y=2x+4", "--line-g-t", "y=2x+2", "--line-l", "y=2x+9")
        assert r.returncode == 3
        assert "E_PARALLEL" in r.stderr

    def test_origin_on_transversal_is_3_with_specific_code(self):
        r = run_cli(
            "phor", "--line-g-s", "y=2x+4", "--line-g-t", "y=2x+2",
            "--line-l", "y=3x", "--json",
        )
        assert r.returncode == 3
        assert json.loads(r.stdout)["error"]["code"] == "E_ORIGIN_ON_L"

    def test_unknown_property_is_2(self):
        r = run_cli("check", "--only", "no-such-property")
        assert r.returncode == 2
        assert "no-such-property" in r.stderr

    def test_failing_check_suite_is_1(self):
        # sabotage one closed form in-process, then drive the real main()
        script = (
            "import sys\n"
            "from exactplane import double_projection as dp\n"
            "from exactplane.kernel import Point\n"
            "real = dp.p_hor_closed_form\n"
            "dp.p_hor_closed_form = lambda scene: (lambda q: Point(q.x + 1, q.y))(real(scene))\n"
            "from exactplane.cli import main\n"
            "sys.exit(main(['check', '--seed', '1', '--trials', '25',"
            " '--only', 'closed-form-agreement']))\n"
        )
        r = subprocess.run(
            [sys.executable, "-c", script], capture_output=True, text=True, timeout=120
        )
        assert r.returncode == 1
        assert "FAIL closed-form-agreement" in r.stdout
        assert "replay: exactplane" in r.stdout


class TestConstructionCommands:
    def test_construct_p(self):
        r = run_cli(
            "construct-p",
            "--line-g-s", "y=x+2", "--line-g-t", "y=x-1",
            "--line-l", "1x+1y=4", "--line-axis", "1x-3y=3",
            "--origin", "(3, 0)", "--json",
        )
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["outputs"]["p"] == {"x": "-10", "y": "14"}
        assert doc["case"] == "MAIN"
        assert all(doc["witnesses"]["checks"].values())

    def test_nu(self):
        r = run_cli(
            "nu", "--line-g", "y=2x+4", "--line-p", "y=2x+2",
            "--epsilon", "4", "--sample", "(0, 4)",
        )
        assert r.returncode == 0
        assert "nu: 2" in r.stdout

    def test_mu(self):
        r = run_cli(
            "mu", "--line-g", "1x-2y=4", "--line-p", "1x-2y=2",
            "--epsilon", "4", "--sample", "(4, 0)", "--json",
        )
        assert r.returncode == 0
        assert json.loads(r.stdout)["outputs"]["mu"] == "2"

    def test_nu_general(self):
        r = run_cli(
            "nu-general", "--line-g", "y=2x+4", "--line-p", "y=2x+2",
            "--line-axis", "1x-4y=4", "--origin", "(4, 0)",
            "--offset", "3", "--sample", "(0, 4)", "--json",
        )
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["outputs"]["nu_point"] == {"x": "13/2", "y": "5/8"}

    def test_sample_off_line_is_3(self):
        r = run_cli(
            "nu", "--line-g", "y=2x+4", "--line-p", "y=2x+2",
            "--epsilon", "4", "--sample", "(0, 5)",
        )
        assert r.returncode == 3


class TestFigureCommand:
    def test_stdout_matches_library(self):
        r = run_cli("figure", "pic1")
        assert r.returncode == 0
        assert r.stdout == render_figure("pic1")

    def test_deterministic(self):
        assert run_cli("figure", "pic3").stdout == run_cli("figure", "pic3").stdout

    def test_svg_out(self, tmp_path):
        out = tmp_path / "fig.svg"
        r = run_cli("figure", "pic2", "--svg-out", str(out))
        assert r.returncode == 0
        assert out.read_text() == render_figure("pic2")

    def test_viewport_flags(self):
        default = run_cli("figure", "pic1").stdout
        wide = run_cli("figure", "pic1", "--xmin", "-20", "--xmax", "20").stdout
        assert wide != default

    def test_unknown_figure_is_2(self):
        r = run_cli("figure", "pic99")
        assert r.returncode == 2
        assert "pic1" in r.stderr


class TestCheckCommand:
    def test_small_run_passes_and_is_deterministic(self):
        a = run_cli("check", "--seed", "7", "--trials", "5")
        b = run_cli("check", "--seed", "7", "--trials", "5")
        assert a.returncode == 0
        assert a.stdout == b.stdout
        assert "PASS kernel-intersection: 5/5" in a.stdout
        assert "all 21 properties passed" in a.stdout

    def test_only_subset(self):
        r = run_cli("check", "--trials", "3", "--only", "strip-closed-forms,swap-invariance")
        assert r.returncode == 0
        assert "strip-closed-forms" in r.stdout
        assert "kernel-intersection" not in r.stdout
