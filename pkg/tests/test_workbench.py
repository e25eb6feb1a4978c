import os
import unittest
from pathlib import Path
from unittest.mock import patch

from tangle_shadow import TangleWorkbench
from tangle_shadow.exceptions import BudgetExceededError, ConfigurationError
from tangle_shadow.models import CheckStatus, ClassificationStatus
from tangle_shadow.oeis import DEFAULT_BFILE_DIR
from tangle_shadow.poly import from_string


class TestConfiguration(unittest.TestCase):

    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        bench = TangleWorkbench()
        self.assertEqual(bench.state_budget, 2 ** 20)
        self.assertEqual(bench.workers, 1)
        self.assertEqual(bench.bfile_dir, DEFAULT_BFILE_DIR)
        self.assertFalse(bench.ascending)

    @patch.dict(os.environ, {
        "TANGLE_SHADOW_STATE_BUDGET": "2^10",
        "TANGLE_SHADOW_WORKERS": "3",
        "TANGLE_SHADOW_BFILE_DIR": "/srv/oeis",
    }, clear=True)
    def test_environment(self):
        bench = TangleWorkbench()
        self.assertEqual(bench.state_budget, 1024)
        self.assertEqual(bench.workers, 3)
        self.assertEqual(bench.bfile_dir, Path("/srv/oeis"))

    @patch.dict(os.environ, {"TANGLE_SHADOW_STATE_BUDGET": "2^10", "TANGLE_SHADOW_WORKERS": "3"}, clear=True)
    def test_arguments_win(self):
        bench = TangleWorkbench(state_budget=64, workers=2, bfile_dir="/data")
        self.assertEqual(bench.state_budget, 64)
        self.assertEqual(bench.workers, 2)
        self.assertEqual(bench.bfile_dir, Path("/data"))

    @patch.dict(os.environ, {}, clear=True)
    def test_invalid_values(self):
        invalid = [
            {"workers": "many"},
            {"workers": 0},
            {"state_budget": "lots"},
            {"state_budget": 0},
        ]
        for kwargs in invalid:
            with self.subTest(**kwargs):
                with self.assertRaises(ConfigurationError):
                    TangleWorkbench(**kwargs)

    @patch.dict(os.environ, {"TANGLE_SHADOW_WORKERS": "-1"}, clear=True)
    def test_invalid_environment(self):
        with self.assertRaises(ConfigurationError):
            TangleWorkbench()


class TestOperations(unittest.TestCase):

    def setUp(self):
        self.bench = TangleWorkbench(state_budget="2^12", workers=1)

    def test_evaluate_and_format(self):
        pair = self.bench.evaluate("[1]*[2]")
        self.assertEqual(self.bench.format_pair(pair), "a = 2x+3, b = x+2")
        self.assertEqual(TangleWorkbench(ascending=True).format_pair(pair), "a = 3+2x, b = 2+x")

    def test_close(self):
        self.assertEqual(self.bench.close("[1]", "D", rep=4), from_string("x^5+4x^4+6x^3+4x^2+x"))
        self.assertEqual(self.bench.close("[2]", "N"), from_string("2x^2+2x"))
        self.assertEqual(self.bench.close("[2]", "R", rep=0), from_string("x^2+x"))

    def test_table(self):
        by_entry = self.bench.table(entry_id="A7", kind="N", n_range=(0, 3))
        by_number = self.bench.table(table_no=19, n_range=(0, 3))
        self.assertTrue(by_entry.equals(by_number))
        self.assertEqual(list(by_entry.index), [0, 1, 2, 3])
        with self.assertRaises(ValueError):
            self.bench.table(entry_id="A7")

    def test_classify(self):
        result = self.bench.classify("[1]#K1")
        self.assertIs(result.status, ClassificationStatus.EXACT)
        self.assertEqual(result.describe(), "A18 = skeleton A1 # K1")

    def test_oracle_budget(self):
        self.assertTrue(self.bench.oracle_check("[1]*[3]").match)
        with self.assertRaises(BudgetExceededError):
            TangleWorkbench(state_budget=8).oracle_check("[1]*[3]")

    def test_oeis_check(self):
        results = self.bench.oeis_check()
        self.assertEqual(len(results), 4)
        self.assertTrue(all(r.status is CheckStatus.PASS for r in results))
        self.assertEqual(len(self.bench.oeis_check(7)), 1)

    def test_export(self):
        frame = self.bench.table(table_no=1, n_range=(0, 1))
        self.assertEqual(self.bench.export(frame, "csv"), "n,k0,k1,k2\n0,0,1,\n1,0,1,1\n")


if __name__ == '__main__':
    unittest.main()
