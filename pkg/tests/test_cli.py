import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

from tangle_shadow.cli import main
from tangle_shadow.models import CheckStatus, VerificationReport


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCommands(unittest.TestCase):

    def test_eval(self):
        code, out, _ = run("eval", "[1]*[2]")
        self.assertEqual(code, 0)
        self.assertEqual(out, "a = 2x+3, b = x+2\n")

    def test_close(self):
        code, out, _ = run("close", "[1]", "--kind", "D", "--rep", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out, "x^5+4x^4+6x^3+4x^2+x\n")

    def test_close_ascending(self):
        _, out, _ = run("--asc", "close", "[1]", "--kind", "d", "--rep", "4")
        self.assertEqual(out, "x+4x^2+6x^3+4x^4+x^5\n")
        _, out, _ = run("--desc", "close", "[3]", "--kind", "N")
        self.assertEqual(out, "x^3+4x^2+3x\n")

    def test_classify(self):
        code, out, _ = run("classify", "[1]#K1")
        self.assertEqual(code, 0)
        self.assertEqual(out, "A18 = skeleton A1 # K1\n")

    def test_table_csv(self):
        code, out, _ = run("table", "--entry", "A1", "--kind", "D", "--n", "0..2", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out, "n,k0,k1,k2,k3\n0,0,1,,\n1,0,1,1,\n2,0,1,2,1\n")

    def test_table_json_by_number(self):
        _, out, _ = run("table", "--table", "1", "--n", "0..1", "--format", "json")
        self.assertEqual(json.loads(out), {"1": {"0": [0, 1], "1": [0, 1, 1]}})

    def test_table_markdown_with_width(self):
        _, out, _ = run("table", "--table", "8", "--n", "2", "--k-max", "5", "--format", "md")
        self.assertEqual(out.splitlines()[-1], "| 2 | 0 | 4 | 7 | 4 | 1 | 0 |")

    def test_table_xlsx_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "t13.xlsx"
            code, out, _ = run("table", "--table", "13", "--format", "xlsx", "--output", str(path))
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            self.assertTrue(path.is_file())

    def test_oracle_check(self):
        code, out, _ = run("oracle-check", "[1]*[2]")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "tangle:    [1]*[2]")
        self.assertIn("crossings: 3", out)
        self.assertEqual(out.splitlines()[-1], "match")

    def test_verify(self):
        code, out, _ = run("verify", "--no-oracle")
        self.assertEqual(code, 0)
        self.assertIn("WARN  erratum B5", out)
        self.assertIn("WARN 4, FAIL 0", out.splitlines()[-1])

    @patch("tangle_shadow.catalog.verify_catalog")
    def test_verify_mismatch(self, mock_verify):
        report = VerificationReport()
        report.add("table T1", CheckStatus.FAIL, "row 0")
        mock_verify.return_value = report

        code, out, _ = run("verify")
        self.assertEqual(code, 2)
        self.assertIn("FAIL  table T1: row 0", out)

    def test_oeis_check(self):
        code, out, _ = run("oeis-check")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 4)
        with tempfile.TemporaryDirectory() as tmp:
            code, out, _ = run("--bfile-dir", tmp, "oeis-check", "--table", "79")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("SKIP"))


class TestExitCodes(unittest.TestCase):

    def test_parse_error(self):
        code, out, err = run("eval", "[1]+")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("position 4", err)

    def test_negative_twist(self):
        code, _, _ = run("eval", "[-1]")
        self.assertEqual(code, 1)

    def test_incomplete_table_request(self):
        code, _, err = run("table", "--entry", "A1")
        self.assertEqual(code, 1)
        self.assertIn("--kind", err)

    def test_unknown_entry(self):
        code, _, _ = run("table", "--entry", "A99", "--kind", "N")
        self.assertEqual(code, 1)

    def test_budget_exceeded(self):
        code, _, err = run("oracle-check", "[1]*[3]", "--budget", "8")
        self.assertEqual(code, 3)
        self.assertIn("budget", err)

    def test_usage_errors(self):
        for argv in [[], ["frobnicate"], ["close", "[1]"], ["close", "[1]", "--kind", "Q"]]:
            with self.subTest(argv=argv):
                with self.assertRaises(SystemExit) as ctx:
                    run(*argv)
                self.assertEqual(ctx.exception.code, 1)


if __name__ == '__main__':
    unittest.main()
