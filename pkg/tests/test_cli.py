import json
import math

import pytest

from fermispeed.cli import main, parse_angle, parse_angle_list

PI = math.pi


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_angle_forms():
    assert parse_angle("pi") == pytest.approx(PI)
    assert parse_angle("-pi/4") == pytest.approx(-PI / 4)
    assert parse_angle("2pi/3") == pytest.approx(2 * PI / 3)
    assert parse_angle("0.5pi") == pytest.approx(PI / 2)
    assert parse_angle("2*pi") == pytest.approx(2 * PI)
    assert parse_angle("1.25") == pytest.approx(1.25)
    assert parse_angle("3/4") == pytest.approx(0.75)
    with pytest.raises(ValueError):
        parse_angle("one")
    assert parse_angle_list("0,0;pi,pi/2") == [
        (0.0, 0.0),
        (pytest.approx(PI), pytest.approx(PI / 2)),
    ]


def test_qsl_uniform(capsys):
    code, out = run(capsys, "qsl", "--dist", "1/6,1/6,1/6,1/6,1/6,1/6")
    assert code == 0
    payload = json.loads(out)
    assert payload["tau_qsl"] == pytest.approx((PI / 2) * math.sqrt(3 / 5), abs=1e-12)
    assert payload["active_bound"] == "MT"


def test_qsl_qubit_equal(capsys):
    code, out = run(capsys, "qsl", "--dist", "0.5,0,0,0,0,0.5")
    payload = json.loads(out)
    assert code == 0
    assert payload["tau_qsl"] == pytest.approx(PI / 4, abs=1e-12)
    assert payload["active_bound"] == "EQUAL"


def test_qsl_stationary_inf(capsys):
    code, out = run(capsys, "qsl", "--dist", "0,0,1,0,0,0")
    assert code == 0
    assert json.loads(out)["tau_qsl"] == "inf"


def test_qsl_pi_units_and_csv(capsys):
    code, out = run(capsys, "qsl", "--dist", "0.5,0,0,0,0,0.5", "--pi-units", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    fields = dict(zip(header.split(","), row.split(",")))
    assert float(fields["tau_qsl"]) == pytest.approx(0.25, abs=1e-12)
    assert fields["time_units"] == "pi*hbar/epsilon"


def test_ortho_worked_values(capsys):
    code, out = run(capsys, "ortho", "--dist", "1/6,1/6,1/6,1/6,1/6,1/6")
    payload = json.loads(out)
    assert code == 0
    assert payload["phi_1_in_pi"] == pytest.approx(0.5, abs=1e-9)
    code, out = run(capsys, "ortho", "--dist", "0.2,0.2,0.1,0.1,0.2,0.2")
    assert json.loads(out)["phi_1_in_pi"] == pytest.approx(0.4, abs=1e-9)


def test_ortho_unreachable_exit_zero(capsys):
    code, out = run(capsys, "ortho", "--dist", "0,0,1,0,0,0")
    payload = json.loads(out)
    assert code == 0
    assert payload["reachable"] is False
    assert payload["roots"] == []


def test_concurrence_command(capsys):
    code, out = run(
        capsys,
        "concurrence",
        "--dist",
        "1/6,1/6,1/6,1/6,1/6,1/6",
        "--alpha",
        "pi",
        "--beta",
        "0",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["cf2"] == pytest.approx(1.0, abs=1e-12)


def test_bad_input_exit_code(capsys):
    code = main(["qsl", "--dist", "0.5,0.5"])
    assert code == 2
    code = main(["ortho", "--dist", "1/6,1/6,1/6,1/6,1/6,1/6", "--tol", "0.1"])
    assert code == 2


def test_dist_file_input(tmp_path, capsys):
    path = tmp_path / "dist.txt"
    path.write_text("0.5,0,0,0,0,0.5\n")
    code, out = run(capsys, "qsl", "--dist-file", str(path))
    assert code == 0
    assert json.loads(out)["tau_qsl"] == pytest.approx(PI / 4, abs=1e-12)


def test_survival_csv(tmp_path):
    out = tmp_path / "p.csv"
    code = main(
        ["survival", "--dist", "0.5,0,0,0,0,0.5", "--steps", "9", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "phi,P"
    assert len(lines) == 10


def test_map_csv_manifest_and_determinism(tmp_path):
    out1 = tmp_path / "m1.csv"
    out2 = tmp_path / "m2.csv"
    for out in (out1, out2):
        code = main(["map", "--which", "xu", "--res", "16", "--out", str(out)])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    manifest = json.loads((tmp_path / "m1.csv.manifest.json").read_text())
    assert manifest["kind"] == "xu-region"
    assert manifest["value_units"] == "fractions of pi"
    assert manifest["branch"] == "plus"


def test_map_json_format(capsys):
    code, out = run(capsys, "map", "--which", "yv", "--res", "8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["manifest"]["kind"] == "yv-region"
    assert len(doc["cells"]) == 64


def test_scatter_csv_and_determinism(tmp_path):
    out1 = tmp_path / "s1.csv"
    out2 = tmp_path / "s2.csv"
    for out in (out1, out2):
        code = main(
            [
                "scatter",
                "--class",
                "a",
                "--count",
                "50",
                "--seed",
                "7",
                "--out",
                str(out),
            ]
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    assert lines[0].startswith("p1,p2,p3,p4,p5,p6,")
    assert len(lines) == 51
    ratios = [float(line.split(",")[11]) for line in lines[1:]]
    assert all(r >= 1.0 - 1e-9 for r in ratios)


def test_scatter_requires_seed(capsys):
    with pytest.raises(SystemExit) as err:
        main(["scatter", "--class", "a", "--count", "5"])
    assert err.value.code == 2


def test_sweep_command(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main(
        [
            "sweep",
            "--family",
            "I",
            "--angles",
            "0,0;pi,pi",
            "--count",
            "20",
            "--seed",
            "3",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 41


def test_plot_requires_out(capsys):
    code = main(["survival", "--dist", "0.5,0,0,0,0,0.5", "--plot"])
    assert code == 2


def test_plot_renders_png(tmp_path):
    out = tmp_path / "p.csv"
    code = main(
        [
            "survival",
            "--dist",
            "0.5,0,0,0,0,0.5",
            "--steps",
            "64",
            "--out",
            str(out),
            "--plot",
        ]
    )
    assert code == 0
    png = tmp_path / "p.png"
    assert png.exists() and png.stat().st_size > 1000
    # map path renders too
    out = tmp_path / "m.csv"
    code = main(["map", "--which", "qsl", "--res", "12", "--out", str(out), "--plot"])
    assert code == 0
    assert (tmp_path / "m.png").exists()
