"""Tests for the command-line application."""

import json

import pytest

import tensegrity_strata.app as app_module
from tensegrity_strata.app import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main
from tensegrity_strata.config import Config
from tensegrity_strata.formats import dumps_framework
from tensegrity_strata.models import Configuration, Framework, Graph


@pytest.fixture(autouse=True)
def workdir(monkeypatch, tmp_path):
    """Run every command in an empty directory without user config."""
    monkeypatch.setattr(Config, "CONFIG_FILE", tmp_path / "user" / "config.toml")
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def k4_file(workdir, k4_framework, k4_stress):
    path = workdir / "k4.json"
    path.write_text(dumps_framework(k4_framework, k4_stress))
    return str(path)


def write(path, data):
    path.write_text(json.dumps(data))
    return str(path)


class TestStressCommands:
    """Tests for stress, signs and decompose."""

    def test_stress(self, k4_file, capsys):
        """The worked K4 has a one-dimensional fiber."""
        assert main(["stress", k4_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dim = 1" in out
        assert "self-stress" in out

    def test_signs(self, k4_file, capsys):
        """A general-position K4 has three stratum symbols."""
        assert main(["signs", k4_file]) == EXIT_OK
        assert "symbols: 3" in capsys.readouterr().out

    def test_decompose(self, k4_file, capsys):
        """The K4 stress is a single atom."""
        assert main(["decompose", k4_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert "atoms: 1" in out
        assert "sum matches: yes" in out


class TestSameStratum:
    """Tests for same-stratum exit codes."""

    def test_same_framework(self, k4_file, capsys):
        """A framework is fiber-equivalent to itself."""
        assert main(["same-stratum", k4_file, k4_file]) == EXIT_OK
        assert "fiber-equivalent: yes" in capsys.readouterr().out

    def test_different_strata(self, k4_file, workdir, capsys):
        """Collinear points change the stratum."""
        flat = Framework(Graph.complete(4), Configuration.from_values(2, [[0, 0], [1, 0], [2, 0], [0, 1]]))
        other = workdir / "flat.json"
        other.write_text(dumps_framework(flat))
        assert main(["same-stratum", k4_file, str(other)]) == EXIT_NEGATIVE


class TestTc:
    """Tests for the characteristic command."""

    def test_k33_has_conic_witness(self, workdir, capsys):
        """K3,3 reports a conic witness."""
        path = write(workdir / "k33.json", {"n": 6, "edges": [[i, j] for i in (1, 2, 3) for j in (4, 5, 6)]})
        assert main(["tc", path, "--dim", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "tau ≤ 0; witness: conic → tau = 0" in out
        assert "witness-system: conic_123456" in out

    def test_k5(self, workdir, capsys):
        """K5 in the plane."""
        path = write(workdir / "k5.json", {"n": 5, "edges": [[i, j] for i in range(1, 6) for j in range(i + 1, 6)]})
        assert main(["tc", path]) == EXIT_OK
        assert "tau = 3" in capsys.readouterr().out


class TestErrors:
    """Errors go to stderr with exit code 2."""

    def test_float_coordinate(self, workdir, capsys):
        """Floating point input is refused."""
        path = workdir / "bad.json"
        path.write_text('{"d": 2, "vertices": [[0.5, 0]], "edges": []}')
        assert main(["stress", str(path)]) == EXIT_ERROR
        err = capsys.readouterr().err
        assert err.startswith("error:")
        assert "floating point forbidden" in err

    def test_zero_samples(self, k4_file, capsys):
        """--samples must be positive."""
        assert main(["--samples", "0", "stress", k4_file]) == EXIT_ERROR

    def test_unknown_catalog_entry(self, capsys):
        """Unknown catalog names are input errors."""
        assert main(["catalog", "verify", "k99_d2"]) == EXIT_ERROR


class TestConditionCommands:
    """Tests for condition eval and sample."""

    def test_eval_satisfied(self, workdir, capsys):
        """Six circle points satisfy the conic system."""
        system = write(workdir / "conic.json", {"library": "conic_123456"})
        points = write(
            workdir / "points.json",
            {"points": [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"], ["3/5", "4/5"], ["-4/5", "3/5"]]},
        )
        assert main(["condition", "eval", system, points]) == EXIT_OK
        assert "satisfied: yes" in capsys.readouterr().out

    def test_eval_unsatisfied(self, workdir, capsys):
        """Points off the conic fail it."""
        system = write(workdir / "conic.json", {"library": "conic_123456"})
        points = write(
            workdir / "points.json",
            {"points": [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"], ["3/5", "4/5"], ["2", "3"]]},
        )
        assert main(["condition", "eval", system, points]) == EXIT_NEGATIVE

    def test_sample_then_eval(self, workdir, capsys):
        """Sampled points satisfy the system they were built for."""
        system = write(workdir / "concurrent.json", {"library": "concurrent_12_34_56"})
        output = workdir / "sampled.json"
        assert main(["condition", "sample", system, "-o", str(output)]) == EXIT_OK
        assert main(["condition", "eval", system, str(output)]) == EXIT_OK


class TestCatalogCommands:
    """Tests for catalog subcommands."""

    def test_list(self, capsys):
        """Every entry is listed with its provenance."""
        assert main(["catalog", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "example_k4: paper-text" in out
        assert "prism_g61: derived-reconstruction" in out

    def test_verify_one(self, capsys):
        """A single entry verifies."""
        assert main(["catalog", "verify", "example_k4"]) == EXIT_OK
        assert "example_k4: PASS" in capsys.readouterr().out


class TestRender:
    """Tests for the render command."""

    def test_writes_svg(self, k4_file, workdir):
        """The SVG lands at the output path."""
        output = workdir / "k4.svg"
        assert main(["render", k4_file, "-o", str(output)]) == EXIT_OK
        assert output.read_text().count('class="cable"') == 2


class TestFlagPlacement:
    """--seed and --samples are accepted before or after the subcommand."""

    def k4_graph(self, workdir):
        return write(workdir / "k4g.json", {"n": 4, "edges": [[i, j] for i in range(1, 5) for j in range(i + 1, 5)]})

    def test_tc_flags_after_subcommand(self, workdir, capsys):
        """Flags trailing the tc arguments are parsed and used."""
        path = self.k4_graph(workdir)
        assert main(["tc", path, "--dim", "2", "--samples", "3", "--seed", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "samples: 3" in out
        assert "generic dim: 1" in out

    def test_flags_before_subcommand(self, workdir, capsys):
        """The global position still works."""
        path = self.k4_graph(workdir)
        assert main(["--seed", "1", "--samples", "2", "tc", path]) == EXIT_OK
        assert "samples: 2" in capsys.readouterr().out

    def test_trailing_flag_overrides_config(self, workdir, capsys):
        """A trailing --samples is not lost to the subcommand defaults."""
        path = self.k4_graph(workdir)
        assert main(["tc", path, "--samples", "4"]) == EXIT_OK
        assert "samples: 4" in capsys.readouterr().out

    def test_catalog_verify_seed(self, capsys):
        """catalog verify takes --seed after the entry name."""
        assert main(["catalog", "verify", "example_k4", "--seed", "5"]) == EXIT_OK
        assert "example_k4: PASS" in capsys.readouterr().out

    def test_trailing_zero_samples_rejected(self, k4_file, capsys):
        """The positivity check applies to the trailing form too."""
        assert main(["stress", k4_file, "--samples", "0"]) == EXIT_ERROR


class TestRenderDimension:
    """render refuses non-planar input before any computation."""

    def test_three_dimensional_input(self, workdir, capsys, monkeypatch):
        """A 3-D framework fails with exit 2 and no self-stress work."""

        def fail(*args, **kwargs):
            raise AssertionError("self-stress space computed for a 3-D render")

        monkeypatch.setattr(app_module, "self_stress_space", fail)
        f = Framework(Graph.complete(4), Configuration.from_values(3, [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        path = workdir / "k4_3d.json"
        path.write_text(dumps_framework(f))
        assert main(["render", str(path), "-o", str(workdir / "out.svg")]) == EXIT_ERROR
        assert "d=2 only" in capsys.readouterr().err
        assert not (workdir / "out.svg").exists()
