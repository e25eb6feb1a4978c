import tempfile
import unittest
from pathlib import Path

from tangle_shadow import catalog
from tangle_shadow.exceptions import TableNotFoundError
from tangle_shadow.models import CheckStatus
from tangle_shadow.oeis import DEFAULT_BFILE_DIR, OEIS_LAYOUTS, bfile_path, crosscheck, flatten_rows, read_bfile


class TestBFiles(unittest.TestCase):

    def test_read_packaged_bfile(self):
        terms = read_bfile(bfile_path("A007318"))
        self.assertEqual([terms[i] for i in range(6)], [1, 1, 1, 1, 2, 1])

    def test_large_values_keep_precision(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "b000001.txt"
            path.write_text("# header\n0 123456789012345678901234567890\n\n1 7\n")
            self.assertEqual(read_bfile(path), {0: 123456789012345678901234567890, 1: 7})

    def test_flatten_rows(self):
        rows = [[0, 1], [0, 1, 1]]
        self.assertEqual(flatten_rows(rows, drop_leading=True), [1, 1, 1])
        self.assertEqual(flatten_rows(rows, drop_leading=False), [0, 1, 0, 1, 1])


class TestCrosscheck(unittest.TestCase):

    def test_packaged_snapshots_agree(self):
        for table_no, (oeis_id, _) in OEIS_LAYOUTS.items():
            with self.subTest(table=table_no):
                self.assertTrue(bfile_path(oeis_id, DEFAULT_BFILE_DIR).is_file())
                result = crosscheck(table_no, catalog.table(catalog.table_spec(table_no)))
                self.assertIs(result.status, CheckStatus.PASS)

    def test_missing_bfile_skips(self):
        with tempfile.TemporaryDirectory() as tmp:
            result = crosscheck(1, catalog.printed_table(1), tmp)
        self.assertIs(result.status, CheckStatus.SKIP)

    def test_disagreement_fails(self):
        with tempfile.TemporaryDirectory() as tmp:
            (Path(tmp) / "b007318.txt").write_text("0 1\n1 1\n2 2\n")
            result = crosscheck(1, catalog.printed_table(1), tmp)
        self.assertIs(result.status, CheckStatus.FAIL)
        self.assertIn("term 2", result.detail)

    def test_table_without_sequence(self):
        with self.assertRaises(TableNotFoundError):
            crosscheck(2, catalog.printed_table(2))


if __name__ == '__main__':
    unittest.main()
