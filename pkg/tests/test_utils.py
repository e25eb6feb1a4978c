import json
import tempfile
import unittest
from pathlib import Path

import pandas as pd

from tangle_shadow.exceptions import ConfigurationError
from tangle_shadow.poly import from_string
from tangle_shadow.utils import (
    export_table,
    format_pair,
    format_polynomial,
    parse_budget,
    parse_range,
    rows_from_frame,
    table_frame,
    table_to_csv,
    table_to_json,
    table_to_markdown,
)


class TestUtils(unittest.TestCase):

    def setUp(self):
        self.rows = [[0, 1], [0, 1, 1]]
        self.frame = table_frame(self.rows)

    def test_format_polynomial(self):
        test_cases = [
            ("x^2+4x+3", False, "x^2+4x+3"),
            ("x^2+4x+3", True, "3+4x+x^2"),
            ("x^5+4x^4+6x^3+4x^2+x", False, "x^5+4x^4+6x^3+4x^2+x"),
            ("2-x^3", False, "-x^3+2"),
            ("0", False, "0"),
            ("-1", True, "-1"),
            ("x", False, "x"),
        ]

        for text, ascending, expected in test_cases:
            with self.subTest(text=text, ascending=ascending):
                self.assertEqual(format_polynomial(from_string(text), ascending), expected)

    def test_format_pair(self):
        result = format_pair(from_string("2x+3"), from_string("x+2"))
        self.assertEqual(result, "a = 2x+3, b = x+2")

    def test_parse_range(self):
        self.assertEqual(parse_range("0..5"), (0, 5))
        self.assertEqual(parse_range(" 2 .. 4 "), (2, 4))
        self.assertEqual(parse_range("3"), (3, 3))

        for invalid in ["5..2", "a..b", "-1..3", ""]:
            with self.subTest(invalid=invalid):
                with self.assertRaises(ValueError):
                    parse_range(invalid)

    def test_parse_budget(self):
        self.assertEqual(parse_budget("2^20"), 2 ** 20)
        self.assertEqual(parse_budget(" 2 ^ 10 "), 1024)
        self.assertEqual(parse_budget("4096"), 4096)
        self.assertEqual(parse_budget(64), 64)

        for invalid in ["0", "two", "2**20", 0, -8]:
            with self.subTest(invalid=invalid):
                with self.assertRaises(ConfigurationError):
                    parse_budget(invalid)

    def test_table_frame(self):
        self.assertEqual(list(self.frame.columns), ["k0", "k1", "k2"])
        self.assertEqual(self.frame.index.name, "n")
        self.assertIsNone(self.frame.loc[0, "k2"])
        self.assertEqual(list(table_frame(self.rows, n_min=3).index), [3, 4])

    def test_csv(self):
        self.assertEqual(table_to_csv(self.frame), "n,k0,k1,k2\n0,0,1,\n1,0,1,1\n")

    def test_markdown(self):
        lines = table_to_markdown(self.frame).splitlines()
        self.assertEqual(lines[0], "| n | k0 | k1 | k2 |")
        self.assertEqual(lines[1], "|---:|---:|---:|---:|")
        self.assertEqual(lines[2], "| 0 | 0 | 1 |  |")
        self.assertEqual(lines[3], "| 1 | 0 | 1 | 1 |")

    def test_json(self):
        payload = json.loads(table_to_json({1: self.frame}))
        self.assertEqual(payload, {"1": {"0": [0, 1], "1": [0, 1, 1]}})

    def test_export_text_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "table.md"
            text = export_table(self.frame, "md", output=path)
            self.assertEqual(path.read_text(encoding="utf-8"), text)

    def test_export_xlsx(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "table.xlsx"
            self.assertIsNone(export_table(self.frame, "xlsx", 1, path))
            frame = pd.read_excel(path, index_col=0, engine="openpyxl")
        self.assertEqual(rows_from_frame(frame), self.rows)

    def test_export_errors(self):
        with self.assertRaises(ValueError):
            export_table(self.frame, "xlsx")
        with self.assertRaises(ValueError):
            export_table(self.frame, "html")


if __name__ == '__main__':
    unittest.main()
