"""Scenario files, validation diagnostics, CLI behavior, output format."""

import json
from importlib import resources

import numpy as np
import pytest

from zeenoise import ScenarioError, load_scenario, validate_scenario
from zeenoise.cli import PRESET_GROUPS, main
from zeenoise.scenario import GridSpec

GOOD = """
[scenario]
name = demo

[transition]
fg = 1
fe = 2
gamma = 1.0

[drive]
polarization = linear
rabi = 0.5
detuning = 0.25

[medium]
b0 = 0.2

[input]
eps_a = 0.0
eps_p = 3.0

[grid]
omega_min = 1e-3
omega_max = 5.0
count = 7
spacing = log

[sweep]
parameter = rabi
values = 0.5, 1.0

[output]
oracles = qrt
quadrature = amplitude
"""


def write(tmp_path, text, name="scn.ini"):
    p = tmp_path / name
    p.write_text(text)
    return p


class TestLoading:
    def test_full_roundtrip(self, tmp_path):
        s = load_scenario(write(tmp_path, GOOD))
        assert s.name == "demo"
        assert (s.fg, s.fe, s.gamma) == (1.0, 2.0, 1.0)
        assert s.polarization == "linear"
        assert s.rabi == 0.5
        assert s.detuning == 0.25
        assert s.b0 == 0.2
        assert s.eps_p == 3.0
        assert s.grid.count == 7
        assert s.grid.spacing == "log"
        assert s.sweep.parameter == "rabi"
        assert s.sweep.values == (0.5, 1.0)
        assert s.oracles == ("qrt",)
        assert s.quadrature_theta is None

    def test_name_defaults_to_file_stem(self, tmp_path):
        text = GOOD.replace("[scenario]\nname = demo\n", "")
        s = load_scenario(write(tmp_path, text, name="myrun.ini"))
        assert s.name == "myrun"

    def test_defaults(self, tmp_path):
        text = """
[transition]
fg = 1
fe = 2
[drive]
polarization = circular
rabi = 1.0
[medium]
b0 = 0.1
[grid]
omega_min = 0.1
omega_max = 1.0
count = 3
"""
        s = load_scenario(write(tmp_path, text))
        assert s.gamma == 1.0
        assert s.detuning == 0.0
        assert s.eps_a == 0.0 and s.eps_p == 0.0
        assert s.sweep is None
        assert s.oracles == ()

    def test_bad_number_names_section_and_key(self, tmp_path):
        text = GOOD.replace("rabi = 0.5", "rabi = fast")
        with pytest.raises(ScenarioError) as err:
            load_scenario(write(tmp_path, text))
        assert "[drive]" in str(err.value)
        assert "rabi" in str(err.value)

    def test_missing_section(self, tmp_path):
        text = GOOD.replace("[medium]\nb0 = 0.2\n", "")
        with pytest.raises(ScenarioError) as err:
            load_scenario(write(tmp_path, text))
        assert "medium" in str(err.value)

    def test_bad_polarization(self, tmp_path):
        text = GOOD.replace("polarization = linear", "polarization = radial")
        with pytest.raises(ScenarioError):
            load_scenario(write(tmp_path, text))

    def test_unknown_oracle(self, tmp_path):
        text = GOOD.replace("oracles = qrt", "oracles = tarot")
        with pytest.raises(ScenarioError):
            load_scenario(write(tmp_path, text))

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ScenarioError):
            load_scenario(tmp_path / "absent.ini")

    def test_quadrature_angle(self, tmp_path):
        text = GOOD.replace("quadrature = amplitude", "quadrature = 1.5708")
        s = load_scenario(write(tmp_path, text))
        assert s.quadrature_theta == pytest.approx(1.5708)


class TestGridSpec:
    def test_log_build(self):
        g = GridSpec(1e-2, 1e2, 5, "log").build()
        assert g[0] == pytest.approx(1e-2)
        assert g[-1] == pytest.approx(1e2)
        assert np.allclose(np.diff(np.log10(g)), 1.0)

    def test_linear_build(self):
        g = GridSpec(0.0, 1.0, 5, "linear").build()
        assert np.allclose(g, [0, 0.25, 0.5, 0.75, 1.0])

    def test_symmetrize(self):
        g = GridSpec(0.1, 10.0, 4, "log", symmetrize=True).build()
        assert g.size == 8
        assert np.allclose(g, -g[::-1])


class TestValidation:
    def base(self, tmp_path, **replacements):
        text = GOOD
        for old, new in replacements.items():
            assert old in text
            text = text.replace(old, new)
        return load_scenario(write(tmp_path, text))

    def test_good_scenario_is_clean(self, tmp_path):
        warnings, errors = validate_scenario(self.base(tmp_path))
        assert errors == []
        assert warnings == []

    def test_high_density_warns(self, tmp_path):
        s = self.base(tmp_path, **{"b0 = 0.2": "b0 = 5"})
        warnings, errors = validate_scenario(s)
        assert errors == []
        assert any("b0" in w for w in warnings)

    def test_negative_excess_noise_is_error(self, tmp_path):
        s = self.base(tmp_path, **{"eps_p = 3.0": "eps_p = -1"})
        warnings, errors = validate_scenario(s)
        assert any("eps_p" in e for e in errors)

    def test_missing_grid_is_error(self, tmp_path):
        text = GOOD
        start = text.index("[grid]")
        end = text.index("[sweep]")
        s = load_scenario(write(tmp_path, text[:start] + text[end:]))
        warnings, errors = validate_scenario(s)
        assert any("grid" in e for e in errors)

    def test_tiny_grid_is_error(self, tmp_path):
        s = self.base(tmp_path, **{"count = 7": "count = 1"})
        _, errors = validate_scenario(s)
        assert any("count" in e for e in errors)

    def test_log_grid_must_be_positive(self, tmp_path):
        s = self.base(tmp_path, **{"omega_min = 1e-3": "omega_min = 0"})
        _, errors = validate_scenario(s)
        assert errors

    def test_zero_frequency_on_linear_grid_is_error(self, tmp_path):
        s = self.base(
            tmp_path,
            **{
                "omega_min = 1e-3": "omega_min = -1.0",
                "omega_max = 5.0": "omega_max = 1.0",
                "spacing = log": "spacing = linear",
                "count = 7": "count = 5",
            },
        )
        _, errors = validate_scenario(s)
        assert any("Omega = 0" in e for e in errors)

    def test_zero_rabi_warns(self, tmp_path):
        text = GOOD.replace("rabi = 0.5", "rabi = 0")
        start = text.index("[sweep]")
        end = text.index("[output]")
        s = load_scenario(write(tmp_path, text[:start] + text[end:]))
        warnings, _ = validate_scenario(s)
        assert any("rabi" in w for w in warnings)

    def test_unknown_sweep_parameter(self, tmp_path):
        s = self.base(tmp_path, **{"parameter = rabi": "parameter = phase"})
        _, errors = validate_scenario(s)
        assert any("sweep" in e for e in errors)


NOSWEEP = """
[transition]
fg = 1
fe = 2

[drive]
polarization = circular
rabi = 1.0

[medium]
b0 = 0.1

[grid]
omega_min = 0.1
omega_max = 2.0
count = 5

[output]
oracles = qrt mollow
"""


class TestCli:
    def test_run_writes_tables(self, tmp_path, capsys):
        scn = write(tmp_path, NOSWEEP, name="tls.ini")
        out = tmp_path / "results"
        rc = main(["run", str(scn), "--out", str(out), "--threads", "1"])
        assert rc == 0
        csv = out / "tls.csv"
        sidecar = out / "tls.json"
        assert csv.exists() and sidecar.exists()
        lines = csv.read_text().splitlines()
        assert lines[0] == (
            "omega_over_gamma, s_opt_e1, s_opt_e2, s_x_e1, s_x_e2, "
            "qrt_opt_e1, qrt_opt_e2, mollow_opt_e1"
        )
        assert len(lines) == 6  # header + 5 grid points
        meta = json.loads(sidecar.read_text())
        assert meta["conventions_version"]
        assert meta["parameters"]["rabi"] == 1.0
        assert "orthogonal_mode_phase" in meta["quadrature_conventions"]

    def test_sweep_writes_one_table_per_value(self, tmp_path):
        scn = write(tmp_path, GOOD, name="demo.ini")
        out = tmp_path / "results"
        rc = main(["run", str(scn), "--out", str(out)])
        assert rc == 0
        names = sorted(p.name for p in out.glob("*.csv"))
        assert names == ["demo_rabi_0.5.csv", "demo_rabi_1.csv"]

    def test_empty_fields_for_inapplicable_oracle(self, tmp_path):
        text = NOSWEEP.replace("polarization = circular", "polarization = linear")
        scn = write(tmp_path, text, name="mls.ini")
        out = tmp_path / "results"
        rc = main(["run", str(scn), "--out", str(out)])
        assert rc == 0
        rows = (out / "mls.csv").read_text().splitlines()[1:]
        for row in rows:
            assert row.endswith(",")  # mollow column present but empty
            assert "nan" not in row
        # and the empty field is not a zero
        assert all(r.rsplit(",", 1)[1] == "" for r in rows)

    def test_determinism_across_thread_counts(self, tmp_path):
        scn = write(tmp_path, NOSWEEP, name="t.ini")
        a = tmp_path / "a"
        b = tmp_path / "b"
        assert main(["run", str(scn), "--out", str(a), "--threads", "1"]) == 0
        assert main(["run", str(scn), "--out", str(b), "--threads", "3"]) == 0
        assert (a / "t.csv").read_bytes() == (b / "t.csv").read_bytes()

    def test_env_var_sets_default_output_dir(self, tmp_path, monkeypatch):
        scn = write(tmp_path, NOSWEEP, name="envrun.ini")
        target = tmp_path / "from-env"
        monkeypatch.setenv("ZEENOISE_OUT", str(target))
        assert main(["run", str(scn)]) == 0
        assert (target / "envrun.csv").exists()

    def test_parse_error_exits_2(self, tmp_path, capsys):
        bad = write(tmp_path, "[drive]\nrabi = fast\n", name="bad.ini")
        assert main(["run", str(bad), "--out", str(tmp_path)]) == 2
        assert "configuration error" in capsys.readouterr().err

    def test_validation_error_exits_2(self, tmp_path, capsys):
        text = NOSWEEP.replace("b0 = 0.1", "b0 = -1")
        scn = write(tmp_path, text, name="neg.ini")
        assert main(["run", str(scn), "--out", str(tmp_path)]) == 2
        assert "b0" in capsys.readouterr().err

    def test_degenerate_point_exits_3_and_names_point(self, tmp_path, capsys):
        text = NOSWEEP.replace("rabi = 1.0", "rabi = 0")
        scn = write(tmp_path, text, name="undriven.ini")
        rc = main(["run", str(scn), "--out", str(tmp_path / "o")])
        assert rc == 3
        err = capsys.readouterr().err
        assert "undriven" in err

    def test_io_failure_exits_4(self, tmp_path, capsys):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        scn = write(tmp_path, NOSWEEP, name="io.ini")
        rc = main(["run", str(scn), "--out", str(blocker / "sub")])
        assert rc == 4

    def test_validate_ok_exits_0(self, tmp_path, capsys):
        scn = write(tmp_path, NOSWEEP, name="v.ini")
        assert main(["validate", str(scn)]) == 0
        assert "ok" in capsys.readouterr().out

    def test_validate_broken_exits_2(self, tmp_path, capsys):
        text = NOSWEEP.replace("b0 = 0.1", "b0 = -2")
        scn = write(tmp_path, text, name="v2.ini")
        assert main(["validate", str(scn)]) == 2
        assert "error" in capsys.readouterr().out

    def test_run_without_scenario_or_preset_exits_2(self, capsys):
        assert main(["run"]) == 2


class TestPresets:
    def test_all_presets_load_and_validate(self):
        base = resources.files("zeenoise").joinpath("presets")
        for group, names in PRESET_GROUPS.items():
            for name in names:
                with resources.as_file(base.joinpath(f"{name}.ini")) as p:
                    s = load_scenario(p)
                warnings, errors = validate_scenario(s)
                assert errors == [], (name, errors)
                assert s.name == name

    def test_fig2_parameters(self):
        base = resources.files("zeenoise").joinpath("presets")
        with resources.as_file(base.joinpath("fig2_tls.ini")) as p:
            s = load_scenario(p)
        assert s.polarization == "circular"
        assert s.detuning == 0.0
        assert s.b0 == 0.1
        assert s.sweep.values == (0.1, 1.0, 5.0)
        assert s.grid.omega_min == pytest.approx(1e-4)
        assert s.grid.omega_max == pytest.approx(1e2)

    def test_fig5_parameters(self):
        base = resources.files("zeenoise").joinpath("presets")
        with resources.as_file(base.joinpath("fig5_mls_ep100.ini")) as p:
            s = load_scenario(p)
        assert s.polarization == "linear"
        assert s.detuning == 1.0
        assert s.rabi == 0.2
        assert s.eps_p == 100.0
        assert s.sweep.parameter == "b0"
        assert s.sweep.values[0] == pytest.approx(1e-3)
        assert s.sweep.values[-1] == pytest.approx(0.5)
