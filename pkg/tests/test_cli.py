import json
import os
import subprocess
import sys

import pytest

from schubcalc import cli

CORPUS = os.path.join(os.path.dirname(__file__), "corpus")


def run(argv, stdin=None):
    out = subprocess.run([sys.executable, "-m", "schubcalc.cli"] + argv,
                         capture_output=True, text=True, input=stdin)
    return out


GOLDEN = {
    "schub_1432.txt": ["schub", "1432"],
    "schub_2413.txt": ["schub", "2413"],
    "expand_x1px2_pow4.txt": ["expand", "(x1+x2)^4"],
    "monk_2_4132.txt": ["monk", "2", "4132"],
    "pieri_row_2_2_4132.txt": ["pieri", "row", "2", "2", "4132"],
    "kl_45312.txt": ["kl", "12345", "45312"],
    "kl_52341.txt": ["kl", "12345", "52341"],
    "poincare_3412.txt": ["poincare", "3412"],
    "stanley_35124786.txt": ["stanley", "35124786"],
    "pipedreams_1432.txt": ["pipedreams", "1432"],
    "bpd_2143.txt": ["bpd", "2143"],
    "dschub_2143.txt": ["dschub", "2143"],
    "horn_2.txt": ["horn", "2"],
    "plucker_example.txt": ["plucker", "6,4,9,0;3,0,0,1;0,2,1,0;0,0,1,0"],
    "minors_3124.txt": ["minors", "3124"],
    "isom_4.txt": ["isom-classes", "4"],
    "mult_json_1324_2134.json": ["--json", "mult", "1324", "2134"],
    "stanley_json_2143.json": ["--json", "stanley", "2143"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_corpus(name):
    out = run(GOLDEN[name])
    assert out.returncode == 0, out.stderr
    with open(os.path.join(CORPUS, name)) as fh:
        assert out.stdout == fh.read()


def test_golden_values_spot_checks():
    with open(os.path.join(CORPUS, "schub_1432.txt")) as fh:
        assert fh.read().strip() == \
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"
    with open(os.path.join(CORPUS, "kl_45312.txt")) as fh:
        assert fh.read().strip() == "q^2+1"
    with open(os.path.join(CORPUS, "expand_x1px2_pow4.txt")) as fh:
        # terms sorted by (length, lex of one-line)
        assert fh.read().strip() == "S(162345) + 3*S(25134) + 2*S(3412)"
    with open(os.path.join(CORPUS, "monk_2_4132.txt")) as fh:
        assert fh.read().strip() == "S(4231) + S(4312) + S(51324)"


def test_singular_locus_corpus():
    with open(os.path.join(CORPUS, "singular_87432651.txt")) as fh:
        assert fh.read().strip() == "84321765"


def test_exit_codes():
    assert cli.dispatch(["schub", "0x"]) == 2
    assert cli.dispatch(["interval", "321", "213"]) == 3
    assert cli.dispatch(["schub", "987654321"]) == 4  # over --max-n default
    assert cli.dispatch(["schub", "1432"]) == 0
    assert cli.dispatch(["pieri", "column", "1", "2", "1432"]) == 3


def test_json_round_trips():
    out = run(["--json", "stanley", "2143"])
    payload = json.loads(out.stdout)
    assert payload == {"basis": "schur",
                       "terms": [{"shape": [1, 1], "coeff": "1"},
                                 {"shape": [2], "coeff": "1"}]}
    out2 = run(["--json", "mult", "1324", "2134"])
    payload2 = json.loads(out2.stdout)
    assert payload2["basis"] == "schubert"
    assert json.loads(json.dumps(payload2)) == payload2


def test_cuvw_and_more():
    assert run(["cuvw", "2134", "1324", "3124"]).stdout.strip() == "1"
    assert run(["cuvw", "2134", "1324", "1423"]).stdout.strip() == "0"
    assert run(["smooth", "4231"]).stdout.strip() == "singular"
    assert run(["smooth", "--count", "5"]).stdout.strip() == "88"
    assert run(["zero-one", "1432"]).stdout.strip() == "true"
    assert run(["bruhat", "1324", "2341"]).stdout.strip() == "true"
    assert run(["bruhat", "1423", "2314"]).stdout.strip() == "false"
    assert run(["poincare-factor", "4321"]).stdout.strip() == "1,2,3"
    assert run(["poincare-factor", "3412"]).stdout.strip() == \
        "non-factorable"
    assert run(["rpoly", "12", "21"]).stdout.strip() == "q-1"
    out = run(["word-stats", "1432"])
    assert "pipe_dreams: 5" in out.stdout
    out2 = run(["egr", "1,2,1"])
    assert "P: 1,2 / 2" in out2.stdout
    out3 = run(["schubitope", "32154", "--alpha", "3,1,0,0"])
    assert "member=true" in out3.stdout


def test_bump_golden_cli():
    out = run(["bump", "4,3,5,6,4,3,5", "4", "-",
               "--bound", "2,2,2,2,2,2,1"])
    assert "outcome: deleted" in out.stdout
    assert "word:    4,3,4,5,4,3" in out.stdout


def test_mitosis_cli():
    out = run(["mitosis", "1,1;2,1;2,2;2,3;2,4;3,2;4,2", "2"])
    assert out.returncode == 0
    assert out.stdout.count("+") > 0


def test_permarray_cli():
    out = run(["permarray", "--n", "4", "--d", "3", "--dots",
               "3,4,1;4,2,2;1,4,3;3,3,3;2,3,4;3,2,4;4,1,4",
               "--rank-at", "3,4,4"])
    assert out.stdout.strip() == "3"
    out2 = run(["permarray", "--generate", "3", "2"])
    assert "# 6 arrays" in out2.stdout


def test_matrix_schubert_cli():
    out = run(["matrix-schubert", "3124", "0,0,0,0;1,0,0,0;0,1,0,0;0,0,0,1"])
    assert out.returncode == 0
    assert out.stdout.strip() in ("member", "not-member")


def test_batch_mode():
    out = run(["batch"], stdin="schub 1432\nkl 12345 45312\n")
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0].startswith("x1^2*x2")
    assert lines[-1] == "q^2+1"
    out_bad = run(["batch"], stdin="schub 1432\nschub 0x\n")
    assert out_bad.returncode == 2


def test_cache_env(tmp_path):
    env = dict(os.environ)
    env[cli.CACHE_ENV] = str(tmp_path)
    out = subprocess.run(
        [sys.executable, "-m", "schubcalc.cli", "schub", "35124"],
        capture_output=True, text=True, env=env)
    assert out.returncode == 0
    assert (tmp_path / "schubert.jsonl").exists()


def test_report_path(tmp_path):
    out = run(["report", "pipedreams", "--perm", "1432",
               "--out", str(tmp_path)])
    assert out.returncode == 0
    assert (tmp_path / "pipedreams.csv").exists()
    assert (tmp_path / "pipedreams.png").exists()
    csv_text = (tmp_path / "pipedreams.csv").read_text()
    assert csv_text.splitlines()[0] == "index,crossings,monomial"
    assert len(csv_text.splitlines()) == 6  # header + five pipe dreams


def test_report_interval(tmp_path):
    out = run(["report", "interval", "--u", "1234", "--perm", "3412",
               "--out", str(tmp_path)])
    assert out.returncode == 0
    assert (tmp_path / "interval.csv").exists()
    assert (tmp_path / "interval.png").exists()


def test_bpd_asm_output():
    out = run(["bpd", "321", "--asm"])
    assert out.returncode == 0
    assert "# 1 bumpless pipe dreams" in out.stdout
    rows = [r.strip() for r in out.stdout.splitlines()[:3]]
    assert rows == ["0  0  1", "0  1  0", "1  0  0"]


def test_puzzle_inputs():
    # binary words, subsets, and partitions all name the same boundary
    assert run(["puzzle", "4", "0101", "0101", "1001"]).stdout.strip() == "1"
    assert run(["puzzle", "4", "1,3", "1,3", "2,3"]).stdout.strip() == "1"
    assert run(["puzzle", "4", "1", "1", "1,1",
                "--k", "2"]).stdout.strip() == "1"
    assert run(["puzzle", "4", "2,1", "1", "2,2",
                "--k", "2"]).stdout.strip() == "1"
    out = run(["puzzle", "4", "2,1", "1", "2,2"])
    assert out.returncode == 2  # partitions without --k


def test_render_flags(tmp_path):
    png = tmp_path / "pd.png"
    out = run(["pipedreams", "1432", "--render", str(png)])
    assert out.returncode == 0 and png.exists()
    png2 = tmp_path / "puz.png"
    out2 = run(["puzzle", "4", "0101", "0101", "1001",
                "--render", str(png2)])
    assert out2.returncode == 0 and png2.exists()
    assert out2.stdout.strip() == "1"


def test_parse_poly():
    f = cli.parse_poly("2*x1^2*x2 - x2 + 3")
    assert f.coeff((2, 1)) == 2
    assert f.coeff((0, 1)) == -1
    assert f.coeff(()) == 3
    g = cli.parse_poly("(x1 + y2)^2")
    assert g.coeff((2,)) == 1
    assert g.coeff((1,), (0, 1)) == 2
    with pytest.raises(ValueError):
        cli.parse_poly("x1 +")
    with pytest.raises(ValueError):
        cli.parse_poly("q + 1")
