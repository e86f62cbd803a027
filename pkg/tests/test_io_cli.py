import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from sympow import InputError, fano_ideal
from sympow.cli import main
from sympow.io import load_complex, load_graph, load_ideal

from conftest import SAMPLE_INPUTS

TRIANGLE = str(SAMPLE_INPUTS / "triangle.json")
MAXIMAL3 = str(SAMPLE_INPUTS / "maximal3.json")
FANO = str(SAMPLE_INPUTS / "fano.json")
C4 = str(SAMPLE_INPUTS / "c4.json")
C5 = str(SAMPLE_INPUTS / "c5.json")
PATH_COMPLEX = str(SAMPLE_INPUTS / "path_complex.json")


def run_cli(capsys, *argv) -> tuple[int, dict | None]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def validate(payload: dict, schema_name: str) -> None:
    schema_text = (
        resources.files("sympow") / "schemas" / f"{schema_name}.schema.json"
    ).read_text()
    schema = json.loads(schema_text)
    jsonschema.Draft202012Validator.check_schema(schema)
    jsonschema.validate(payload, schema)


class TestParsing:
    def test_ideal_round_trip(self):
        ideal, names = load_ideal(TRIANGLE)
        assert names == ["x", "y", "z"]
        assert len(ideal.generators) == 3

    def test_fano_file_matches_fixture(self):
        ideal, names = load_ideal(FANO)
        assert ideal == fano_ideal()
        assert names == [f"x{i}" for i in range(1, 8)]

    def test_rejects_ragged_rows(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"variables": ["x", "y"], "generators": [[1]]}')
        with pytest.raises(InputError):
            load_ideal(str(bad))

    def test_rejects_negative_exponents(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"variables": ["x", "y"], "generators": [[1, -1]]}')
        with pytest.raises(InputError):
            load_ideal(str(bad))

    def test_rejects_duplicate_variables(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"variables": ["x", "x"], "generators": []}')
        with pytest.raises(InputError):
            load_ideal(str(bad))

    def test_graph_loads(self):
        graph = load_graph(C5)
        assert graph.num_vertices == 5
        assert len(graph.edges) == 5

    def test_graph_rejects_loops(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": 2, "edges": [[0, 0]]}')
        with pytest.raises(InputError):
            load_graph(str(bad))

    def test_complex_loads(self):
        complex_ = load_complex(PATH_COMPLEX)
        assert complex_.facets == ((0, 1), (1, 2))

    def test_not_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("not json")
        with pytest.raises(InputError):
            load_ideal(str(bad))


class TestSubcommands:
    def test_power(self, capsys):
        code, payload = run_cli(capsys, "power", "--ideal", TRIANGLE, "-n", "2")
        assert code == 0
        validate(payload, "ideal")
        assert payload["variables"] == ["x", "y", "z"]
        assert len(payload["generators"]) == 6

    def test_symbolic_identity(self, capsys):
        code, payload = run_cli(capsys, "symbolic", "--ideal", TRIANGLE, "-n", "1")
        assert code == 0
        validate(payload, "ideal")
        with open(TRIANGLE) as fh:
            original = json.load(fh)
        assert sorted(payload["generators"]) == sorted(original["generators"])

    def test_equal_fano(self, capsys):
        code, payload = run_cli(capsys, "equal", "--ideal", FANO, "-n", "2")
        assert code == 0
        validate(payload, "equal")
        assert payload["equal"] is False
        assert payload["witness"] is not None

    def test_equal_true_still_exit_zero(self, capsys):
        code, payload = run_cli(capsys, "equal", "--ideal", MAXIMAL3, "-n", "3")
        assert code == 0
        assert payload["equal"] is True
        assert payload["witness"] is None

    def test_contain(self, capsys):
        code, payload = run_cli(capsys, "contain", "--ideal", TRIANGLE, "-a", "4", "-b", "2")
        assert code == 0
        validate(payload, "contain")
        assert payload["contains"] is True

    def test_koenig(self, capsys):
        code, payload = run_cli(capsys, "koenig", "--ideal", TRIANGLE)
        assert code == 0
        validate(payload, "koenig")
        assert payload == {
            "koenig": False,
            "height": 2,
            "matching": 1,
            "regular_sequence": [[0, 1, 1]],
        }

    def test_packing(self, capsys):
        code, payload = run_cli(capsys, "packing", "--ideal", TRIANGLE)
        assert code == 0
        validate(payload, "packing")
        assert payload["packing"] is False
        assert payload["counterexample"] == {"zero": [], "one": []}

    def test_kpacked(self, capsys):
        code, payload = run_cli(capsys, "kpacked", "--ideal", TRIANGLE, "-k", "2")
        assert code == 0
        validate(payload, "kpacked")
        assert payload["k_packed"] is False

    def test_minor(self, capsys):
        code, payload = run_cli(
            capsys, "minor", "--ideal", TRIANGLE, "--zero", "z"
        )
        assert code == 0
        validate(payload, "ideal")
        assert payload["generators"] == [[1, 1, 0]]

    def test_minor_unknown_variable(self, capsys):
        code, _ = run_cli(capsys, "minor", "--ideal", TRIANGLE, "--zero", "w")
        assert code == 2

    def test_edge_analyze(self, capsys):
        code, payload = run_cli(
            capsys, "edge-analyze", "--graph", C5, "--verify", "3"
        )
        assert code == 0
        validate(payload, "edge_analyze")
        assert payload["bipartite"] is False
        assert payload["odd_girth"] == 5
        assert payload["threshold"] == 3
        assert [e["computed_equal"] for e in payload["verify"]] == [True, True, False]
        assert all(e["agree"] for e in payload["verify"])

    def test_edge_analyze_bipartite(self, capsys):
        code, payload = run_cli(capsys, "edge-analyze", "--graph", C4)
        assert code == 0
        validate(payload, "edge_analyze")
        assert payload["bipartite"] is True
        assert payload["odd_girth"] is None
        assert payload["threshold"] is None
        assert payload["witness_monomial"] is None

    def test_sr_ideal(self, capsys):
        code, payload = run_cli(capsys, "sr-ideal", "--complex", PATH_COMPLEX)
        assert code == 0
        validate(payload, "ideal")
        assert payload["generators"] == [[1, 0, 1]]

    def test_sr_complex(self, capsys):
        code, payload = run_cli(capsys, "sr-complex", "--ideal", TRIANGLE)
        assert code == 0
        validate(payload, "complex")
        assert payload["facets"] == [[0], [1], [2]]

    def test_matroid(self, capsys):
        code, payload = run_cli(capsys, "matroid", "--complex", PATH_COMPLEX)
        assert code == 0
        validate(payload, "matroid")
        assert payload["matroid"] is True

    def test_alpha(self, capsys):
        code, payload = run_cli(capsys, "alpha", "--ideal", FANO)
        assert code == 0
        validate(payload, "alpha")
        assert payload == {"alpha": 3}

    def test_waldschmidt(self, capsys):
        code, payload = run_cli(
            capsys, "waldschmidt", "--ideal", TRIANGLE, "--sequence", "4"
        )
        assert code == 0
        validate(payload, "waldschmidt")
        assert payload["waldschmidt"] == {"num": 3, "den": 2}
        assert payload["sequence"] == [
            {"num": 2, "den": 1},
            {"num": 3, "den": 2},
            {"num": 5, "den": 3},
            {"num": 3, "den": 2},
        ]

    def test_resurgence(self, capsys):
        code, payload = run_cli(capsys, "resurgence", "--ideal", TRIANGLE, "-N", "3")
        assert code == 0
        validate(payload, "resurgence")
        assert payload["alpha"] == 2
        assert payload["waldschmidt"] == {"num": 3, "den": 2}
        assert payload["rho_upper"] == 3
        assert [2, 2] in payload["failures"]

    def test_hunt(self, capsys):
        code, payload = run_cli(
            capsys, "hunt", "--family", "edge_ideals", "-k", "2",
            "--vars", "5", "--count", "10", "--seed", "42",
        )
        assert code == 0
        validate(payload, "hunt")
        assert payload["disagreements"] == []


class TestExitCodes:
    def test_missing_file_is_two(self, capsys):
        code, _ = run_cli(capsys, "alpha", "--ideal", "/nonexistent.json")
        assert code == 2

    def test_validation_error_is_two(self, capsys, tmp_path):
        bad = tmp_path / "nonsf.json"
        bad.write_text('{"variables": ["x", "y"], "generators": [[2, 0]]}')
        code, _ = run_cli(capsys, "symbolic", "--ideal", str(bad), "-n", "1")
        assert code == 2

    def test_guard_is_three(self, capsys):
        code, _ = run_cli(
            capsys, "symbolic", "--ideal", MAXIMAL3, "-n", "6",
            "--max-symbolic-gens", "3",
        )
        assert code == 3

    def test_verify_guard_is_three(self, capsys):
        code, _ = run_cli(capsys, "edge-analyze", "--graph", C5, "--verify", "7")
        assert code == 3

    def test_unknown_subcommand_is_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


class TestDeterminism:
    def test_byte_identical_across_hash_seeds(self):
        commands = [
            ["symbolic", "--ideal", TRIANGLE, "-n", "3"],
            ["equal", "--ideal", FANO, "-n", "2"],
            ["packing", "--ideal", TRIANGLE],
            ["edge-analyze", "--graph", C5, "--verify", "3"],
            ["waldschmidt", "--ideal", TRIANGLE, "--sequence", "4"],
            ["resurgence", "--ideal", TRIANGLE, "-N", "3"],
            ["hunt", "--seed", "42", "--count", "10", "--vars", "5"],
        ]
        for argv in commands:
            outputs = []
            for hash_seed in ("0", "1"):
                env = dict(os.environ, PYTHONHASHSEED=hash_seed)
                proc = subprocess.run(
                    [sys.executable, "-m", "sympow.cli", *argv],
                    capture_output=True,
                    env=env,
                    check=True,
                )
                outputs.append(proc.stdout)
            assert outputs[0] == outputs[1], argv


class TestPlots:
    def test_figures_written(self, capsys, tmp_path):
        targets = {
            "edge": tmp_path / "edge.png",
            "wald": tmp_path / "wald.png",
            "res": tmp_path / "res.png",
            "hunt": tmp_path / "hunt.png",
        }
        assert main(["edge-analyze", "--graph", C5, "--verify", "3",
                     "--plot", str(targets["edge"])]) == 0
        assert main(["waldschmidt", "--ideal", TRIANGLE, "--sequence", "4",
                     "--plot", str(targets["wald"])]) == 0
        assert main(["resurgence", "--ideal", TRIANGLE, "-N", "3",
                     "--plot", str(targets["res"])]) == 0
        assert main(["hunt", "--seed", "1", "--count", "5", "--vars", "4",
                     "--plot", str(targets["hunt"])]) == 0
        capsys.readouterr()
        for path in targets.values():
            assert path.exists() and path.stat().st_size > 0
