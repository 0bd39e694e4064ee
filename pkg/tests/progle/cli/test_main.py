#
#   Copyright 2021 The Progle Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

import io

import numpy as np
import pytest

from progle import constants
from progle.cli import main as cliMain
from progle.exceptions import ConvergenceError


def run(*argv):
    stdout = io.StringIO()
    code = cliMain.main([str(a) for a in argv], stdout=stdout)
    return code, stdout.getvalue()


def reportValues(text):
    return dict(line.split("\t") for line in text.splitlines())


def embeddingRows(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    return lines[0], [line.split() for line in lines[1:]]


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("a b\nb c\nc a\n", encoding="utf-8")
    return path


@pytest.fixture
def block_model(tmp_path):
    """
    A two-block graph with its label file.
    """
    edges = tmp_path / "blocks.txt"
    labels = tmp_path / "blocks.labels"
    code, _ = run("synth", "--nodes", 60, "--blocks", "30,30", "--p-in", 0.4, "--p-out", 0.01,
                  "--out", edges, "--labels-out", labels, "--seed", 3)
    assert code == constants.kExitCode_Success
    return edges, labels


class Test_main_embed():

    def test_when_triangle_then_header_matches_the_matrix(self, triangle_file, tmp_path):
        out = tmp_path / "out.txt"

        code, report = run("embed", triangle_file, "--out", out, "--dim", 2)

        assert code == constants.kExitCode_Success
        header, rows = embeddingRows(out)
        assert header == "3 2"
        assert [row[0] for row in rows] == ["a", "b", "c"]
        assert all(len(row) == 3 for row in rows)
        values = reportValues(report)
        assert values["nodes"] == "3" and values["edges"] == "3"
        assert {"proximity_ms", "shiftedLog_ms", "svd_ms", "propagation_ms", "total_ms",
                "proximity_nnz"} <= set(values)

    def test_same_input_and_seed_give_identical_files(self, block_model, tmp_path):
        edges, _ = block_model
        first, second = tmp_path / "first.txt", tmp_path / "second.txt"

        assert run("embed", edges, "--out", first, "--dim", 8)[0] == 0
        assert run("embed", edges, "--out", second, "--dim", 8)[0] == 0

        assert first.read_bytes() == second.read_bytes()

    def test_binary_output_has_a_sidecar_with_the_config(self, triangle_file, tmp_path):
        out = tmp_path / "out.bin"
        assert run("embed", triangle_file, "--out", out, "--dim", 2, "--binary")[0] == 0
        assert out.stat().st_size == 3 * 2 * 8
        assert '"dim": 2' in (tmp_path / "out.bin.json").read_text(encoding="utf-8")

    def test_node_map_is_written(self, triangle_file, tmp_path):
        nodeMap = tmp_path / "nodes.txt"
        run("embed", triangle_file, "--out", tmp_path / "out.txt", "--dim", 2,
            "--node-map", nodeMap)
        assert nodeMap.read_text(encoding="utf-8") == "a 0\nb 1\nc 2\n"


class Test_main_enhance():

    def test_enhancing_the_raw_output_reproduces_the_embedding(self, block_model, tmp_path):
        edges, _ = block_model
        final, raw, enhanced = (tmp_path / n for n in ("final.txt", "raw.txt", "enhanced.txt"))

        assert run("embed", edges, "--out", final, "--raw-out", raw, "--dim", 8)[0] == 0
        assert run("enhance", edges, raw, "--out", enhanced)[0] == 0

        assert enhanced.read_bytes() == final.read_bytes()

    def test_when_embedding_zero_then_output_is_zero(self, triangle_file, tmp_path):
        zero = tmp_path / "zero.txt"
        zero.write_text("3 2\nc 0 0\na 0 0\nb 0 0\n", encoding="utf-8")
        out = tmp_path / "out.txt"

        assert run("enhance", triangle_file, zero, "--out", out)[0] == 0

        _, rows = embeddingRows(out)
        assert [row[0] for row in rows] == ["a", "b", "c"]
        assert all(float(v) == 0.0 for row in rows for v in row[1:])

    def test_groups_separate_after_enhancing_a_random_embedding(self, block_model, tmp_path):
        edges, labels = block_model
        vectors = np.random.default_rng(0).standard_normal((60, 8))
        random = tmp_path / "random.txt"
        random.write_text("60 8\n" + "".join(
            "%d %s\n" % (i, " ".join(map(repr, row))) for i, row in enumerate(vectors.tolist())),
            encoding="utf-8")

        code, report = run("enhance", edges, random, "--out", tmp_path / "out.txt",
                           "--groups", labels)

        assert code == constants.kExitCode_Success
        values = reportValues(report)
        assert float(values["separation_after"]) > float(values["separation_before"])

    def test_when_labels_mismatch_then_validation_code_returned(self, triangle_file, tmp_path,
                                                                capsys):
        other = tmp_path / "other.txt"
        other.write_text("3 1\na 1\nb 2\nzz 3\n", encoding="utf-8")

        code, _ = run("enhance", triangle_file, other, "--out", tmp_path / "out.txt")

        assert code == constants.kExitCode_Validation
        err = capsys.readouterr().err
        assert "missing: c" in err and "extra: zz" in err


class Test_main_evaluate():

    def test_report_has_a_row_per_run_and_per_ratio(self, block_model, tmp_path):
        edges, labels = block_model
        embedding = tmp_path / "out.txt"
        run("embed", edges, "--out", embedding, "--dim", 8)

        code, report = run("evaluate", embedding, labels, "--ratios", "0.1,0.5,0.9",
                           "--trials", 10)

        assert code == constants.kExitCode_Success
        runTable, summaryTable = report.rstrip("\n").split("\n\n")
        assert len(runTable.split("\n")) == 1 + 30
        assert len(summaryTable.split("\n")) == 1 + 3

    def test_report_can_be_written_to_a_file(self, block_model, tmp_path):
        edges, labels = block_model
        embedding, out = tmp_path / "emb.bin", tmp_path / "report.tsv"
        run("embed", edges, "--out", embedding, "--dim", 8, "--binary")

        code, report = run("evaluate", embedding, labels, "--ratios", "0.5", "--trials", 2,
                           "--out", out)

        assert code == constants.kExitCode_Success
        assert report == ""
        assert out.read_text(encoding="utf-8").startswith("ratio\ttrial\tmicro\tmacro\n")


class Test_main_synth():

    def test_regular_graph_has_n_times_degree_over_two_edges(self, tmp_path):
        out = tmp_path / "regular.txt"

        code, report = run("synth", "--nodes", 1000, "--degree", 10, "--out", out)

        assert code == constants.kExitCode_Success
        assert reportValues(report) == {"nodes": "1000", "edges": "5000"}
        assert len(out.read_text(encoding="utf-8").splitlines()) == 1 + 5000

    def test_when_degree_two_then_every_node_has_two_edges(self, tmp_path):
        out = tmp_path / "cycles.txt"
        run("synth", "--nodes", 50, "--degree", 2, "--out", out)

        edges = np.loadtxt(str(out), skiprows=1, dtype=np.int64)
        assert np.bincount(edges.ravel(), minlength=50).tolist() == [2] * 50

    def test_same_seed_gives_the_same_file(self, tmp_path):
        first, second = tmp_path / "first.txt", tmp_path / "second.txt"
        run("synth", "--nodes", 100, "--degree", 4, "--seed", 9, "--out", first)
        run("synth", "--nodes", 100, "--degree", 4, "--seed", 9, "--out", second)
        assert first.read_bytes() == second.read_bytes()

    def test_when_infeasible_then_validation_code_returned(self, tmp_path):
        code, _ = run("synth", "--nodes", 5, "--degree", 3, "--out", tmp_path / "g.txt")
        assert code == constants.kExitCode_Validation

    def test_when_labels_requested_without_blocks_then_validation_code_returned(self, tmp_path):
        code, _ = run("synth", "--nodes", 10, "--degree", 2, "--out", tmp_path / "g.txt",
                      "--labels-out", tmp_path / "l.txt")
        assert code == constants.kExitCode_Validation


class Test_main_bench():

    def test_each_scale_has_a_row_with_both_phases(self, tmp_path):
        code, report = run("bench", "--scales", "100,200", "--degree", 4, "--dim", 8)

        assert code == constants.kExitCode_Success
        header, *rows = [line.split("\t") for line in report.splitlines()]
        assert header[:6] == ["nodes", "degree", "edges", "sparse_ms", "propagation_ms",
                              "total_ms"]
        assert [row[:3] for row in rows] == [["100", "4", "200"], ["200", "4", "400"]]
        assert all(row[-1] == "ok" and float(row[3]) >= 0 and float(row[4]) >= 0
                   for row in rows)

    def test_degree_sweep_holds_nodes_fixed(self):
        code, report = run("bench", "--degrees", "4,8", "--nodes", 100, "--dim", 8)
        assert code == constants.kExitCode_Success
        rows = [line.split("\t") for line in report.splitlines()[1:]]
        assert [row[:3] for row in rows] == [["100", "4", "200"], ["100", "8", "400"]]


class Test_main_exitCodes():

    def test_when_arguments_invalid_then_parser_code_returned(self, capsys):
        code, _ = run("embed", "edges.txt")
        assert code == 2

    def test_when_edge_list_malformed_then_parse_code_returned(self, tmp_path, capsys):
        edges = tmp_path / "bad.txt"
        edges.write_text("a b\na b c d\n", encoding="utf-8")

        code, _ = run("embed", edges, "--out", tmp_path / "out.txt", "--dim", 1)

        assert code == constants.kExitCode_Parse
        assert "bad.txt:2" in capsys.readouterr().err

    def test_when_parameter_invalid_then_validation_code_returned(self, triangle_file, tmp_path):
        code, _ = run("embed", triangle_file, "--out", tmp_path / "out.txt", "--dropout", 1.0)
        assert code == constants.kExitCode_Validation

    def test_when_svd_fails_then_convergence_code_returned(self, triangle_file, tmp_path,
                                                           monkeypatch):
        def failing(*args, **kwargs):
            raise ConvergenceError("no convergence", residual=1.0)

        monkeypatch.setattr("progle.pipeline.truncatedSvd", failing)

        code, _ = run("embed", triangle_file, "--out", tmp_path / "out.txt", "--dim", 2)

        assert code == constants.kExitCode_Convergence

    def test_when_file_missing_then_failure_code_returned(self, tmp_path):
        code, _ = run("embed", tmp_path / "missing.txt", "--out", tmp_path / "out.txt")
        assert code == constants.kExitCode_Failure

    def test_when_threads_invalid_then_validation_code_returned(self, triangle_file, tmp_path):
        code, _ = run("embed", triangle_file, "--out", tmp_path / "out.txt", "--threads", "x")
        assert code == constants.kExitCode_Validation
