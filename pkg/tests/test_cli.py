#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

"""
This module contains unit tests for the `painted-trees` command line: argument parsing, the
verbs and their exit codes, and the verification check records.

Classes:
    `TestParseRange`: Tests for the range syntax of count parameters.
    `TestMain`: Tests for the verbs run through `main`.
    `TestChecks`: Tests for `CheckResult` and the verification suites.
"""

# Standard library imports
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from unittest.mock import patch

# Local application/library specific imports
from painted_trees.cli.checks import (
    DEFAULT_MAX_DEGREE,
    SUITES,
    CheckResult,
    count_checks,
    hopf_checks,
    poset_checks,
    run_suites,
    tubing_checks,
)
from painted_trees.cli.main import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_range,
)
from painted_trees.errors import InvalidArgumentError


def run(argv):
    """Runs the command line and returns the exit code with captured stdout and stderr."""
    stdout, stderr = StringIO(), StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(argv)
    return code, stdout.getvalue(), stderr.getvalue()


class TestParseRange(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `parse_range`.
    """

    def test_forms(self):
        self.assertEqual(parse_range("0..3"), [0, 1, 2, 3])
        self.assertEqual(parse_range("1,2,5"), [1, 2, 5])
        self.assertEqual(parse_range("4"), [4])

    def test_invalid(self):
        for text in ["a..b", "3..1", "-1", "", "1,x"]:
            with self.assertRaises(InvalidArgumentError):
                parse_range(text)


class TestMain(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for the verbs of the command line.
    """

    def test_count_ptera_json(self):
        code, output, _ = run(["count", "ptera", "--n", "0..9", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        rows = json.loads(output)
        self.assertEqual(
            [row["value"] for row in rows],
            [1, 2, 6, 22, 94, 464, 2652, 17562, 133934, 1162504],
        )
        self.assertEqual({row["provenance"] for row in rows}, {"formula"})

    def test_count_csv(self):
        code, output, _ = run(["count", "stello", "--n", "1,2", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.splitlines(), ["n,value,provenance", "1,2,formula", "2,5,formula"])

    @patch("pandas.DataFrame.to_csv")
    def test_count_to_file(self, mock_to_csv):
        code, output, _ = run(["count", "catalan", "--n", "1..3", "--output", "c.csv"])
        self.assertEqual(code, EXIT_OK)
        mock_to_csv.assert_called_once_with("c.csv", index=False)
        self.assertIn("c.csv", output)

    def test_two_parameter_count_needs_m(self):
        code, _, error = run(["count", "fan_tubes", "--n", "1..2"])
        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue(error.startswith("error: InvalidArgumentError:"))

    def test_two_parameter_count(self):
        code, output, _ = run(
            ["count", "fan_tubes", "--m", "1", "--n", "1..2", "--format", "json"]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([row["value"] for row in json.loads(output)], [2, 6])

    def test_enumerate(self):
        code, output, _ = run(["enumerate", "--family", "plane/wo", "--degree", "1"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(output.splitlines()), 3)

        code, output, _ = run(
            ["enumerate", "--family", "plane/wo", "--degree", "1", "--vertices", "--format", "json"]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(output)), 2)

    @patch("pathlib.Path.write_text")
    def test_enumerate_to_file(self, mock_write_text):
        code, output, _ = run(
            ["enumerate", "--family", "wof/wo", "--degree", "0", "--output", "trees.txt"]
        )
        self.assertEqual(code, EXIT_OK)
        mock_write_text.assert_called_once()
        self.assertIn("Output saved successfully to: trees.txt", output)

    def test_unknown_family(self):
        code, output, error = run(["enumerate", "--family", "nope/wo", "--degree", "1"])
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(output, "")
        self.assertTrue(error.startswith("error: "))

    def test_usage_errors(self):
        self.assertEqual(run([])[0], EXIT_USAGE)
        self.assertEqual(run(["count", "nope"])[0], EXIT_USAGE)
        self.assertEqual(run(["--help"])[0], EXIT_OK)

    def test_coproduct(self):
        code, output, _ = run(["coproduct", "--family", "wof/wo", ".|[..]"])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(output))

    def test_invalid_tree(self):
        code, _, error = run(["coproduct", "--family", "wof/wo", "xyz"])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", error)

    def test_antipode(self):
        code, output, _ = run(
            ["antipode", "--family", "plane/plane", "--format", "text", ".|[..]"]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.strip())

    def test_poset_of_family(self):
        code, output, _ = run(["poset", "--family", "wof/wo", "--degree", "2"])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.strip().endswith("13 elements, f-vector [6, 6, 1]"))

    def test_poset_of_graph(self):
        code, output, _ = run(["poset", "--graph", "path", "--sizes", "3"])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.strip().endswith("11 elements, f-vector [5, 5, 1]"))

        code, output, _ = run(["poset", "--graph", "path", "--sizes", "2", "--format", "dot"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("->", output)

    def test_poset_needs_family_or_graph(self):
        self.assertEqual(run(["poset"])[0], EXIT_USAGE)

    def test_tubings(self):
        code, output, _ = run(["tubings", "--graph", "star", "--sizes", "3", "--maximal"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(output.splitlines()), 16)

        code, output, _ = run(["tubings", "--graph", "complete", "--sizes", "1", "--marked"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(output.splitlines()), 3)

    def test_bijection(self):
        code, output, _ = run(["bijection", "stella1", "--degree", "2"])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(output)
        self.assertTrue(report["ok"])
        self.assertEqual(report["sourceFVector"], [5, 5, 1])

    def test_shuffle_product(self):
        code, output, _ = run(["shuffle-product", "Tub_0(1)", "Tub_0(1)", "--format", "text"])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.strip())

    def test_verify_shuffle(self):
        code, output, _ = run(["verify", "shuffle", "--max-degree", "2"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("shuffle shuffle counts: pass", output.splitlines())

    @patch("painted_trees.cli.main.run_suites")
    def test_verify_failure_exit_code(self, mock_run_suites):
        mock_run_suites.return_value = [CheckResult("posets", "x", False, "broken")]
        code, output, _ = run(["verify", "posets", "--format", "json"])
        self.assertEqual(code, EXIT_CHECK_FAILED)
        self.assertFalse(json.loads(output)["ok"])

    @patch("painted_trees.cli.main.run_suites")
    def test_verify_informational_failure(self, mock_run_suites):
        mock_run_suites.return_value = [CheckResult("posets", "x", False, informational=True)]
        code, output, _ = run(["verify", "posets"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.strip(), "posets x: note")

    @patch("pandas.DataFrame.to_csv")
    def test_export_count(self, mock_to_csv):
        code, _, _ = run(["export", "count", "catalan", "--n", "0..4", "--output", "c.csv"])
        self.assertEqual(code, EXIT_OK)
        mock_to_csv.assert_called_once_with("c.csv", index=False)

    @patch("matplotlib.figure.Figure.savefig")
    def test_export_fvectors(self, mock_savefig):
        code, output, _ = run(
            ["export", "fvectors", "--families", "wof/wo", "plane/wo", "--degree", "1",
             "--output", "f.png"]
        )
        self.assertEqual(code, EXIT_OK)
        mock_savefig.assert_called_once()
        self.assertIn("Plot saved successfully to: f.png", output)


class TestChecks(unittest.TestCase):  # pylint: disable=unused-variable
    """
    Test suite for `CheckResult` and the verification suites.
    """

    def test_check_result_strings(self):
        self.assertEqual(str(CheckResult("counts", "ptera", True)), "counts ptera: pass")
        failed = CheckResult("counts", "ptera", False, "n=3")
        self.assertEqual(str(failed), "counts ptera: FAIL (n=3)")
        self.assertTrue(failed.counts_as_failure)
        note = CheckResult("posets", "wof/plane n=2", False, informational=True)
        self.assertEqual(str(note), "posets wof/plane n=2: note")
        self.assertFalse(note.counts_as_failure)
        self.assertEqual(note.to_json()["informational"], True)

    def test_count_checks(self):
        results = count_checks(2)
        self.assertTrue(all(result.ok for result in results))
        self.assertEqual(results[-1].name, "closed form, double sum and transform")

    def test_count_checks_reach_the_last_parameter(self):
        seen = []

        def record(first, second):
            seen.append((first, second))
            return 0

        kinds = {"pairs": (record, 2, lambda first, second: 0)}
        with patch.dict("painted_trees.cli.checks.COUNT_KINDS", kinds, clear=True):
            results = count_checks(3)
        self.assertIn((3, 3), seen)
        self.assertEqual(len(seen), 9)
        self.assertTrue(results[0].ok)

    def test_poset_checks_report_euler(self):
        results = poset_checks(2)
        euler = [result for result in results if result.name.startswith("euler ")]
        self.assertEqual(len(euler), 24)
        self.assertFalse(any(result.counts_as_failure for result in euler))
        self.assertIn("euler wof/wo n=2", [result.name for result in euler])

    def test_hopf_checks(self):
        results = hopf_checks(2)
        self.assertTrue(all(result.ok for result in results), [str(result) for result in results])
        names = [result.name for result in results]
        self.assertIn("coassociativity wof/wo n=2", names)
        self.assertIn("counit corolla/corolla n=0", names)
        self.assertIn("action plane/plane left n<=1", names)
        self.assertIn("associativity plane/plane right n<=1", names)
        self.assertNotIn("unit wof/wo left n<=1", names)

    def test_suites_and_default(self):
        self.assertEqual(DEFAULT_MAX_DEGREE, 4)
        self.assertIn("hopf", SUITES)

    def test_tubing_checks(self):
        results = tubing_checks(2)
        self.assertEqual(len(results), 8)
        self.assertTrue(all(result.ok for result in results))
        self.assertEqual(results[0].name, "facets of path n=2")

    def test_run_suites_order(self):
        results = run_suites(["counts", "shuffle"], max_degree=1)
        suites = [result.suite for result in results]
        self.assertEqual(suites[0], "counts")
        self.assertEqual(suites[-1], "shuffle")
        self.assertFalse(any(result.counts_as_failure for result in results))


if __name__ == "__main__":
    unittest.main()
