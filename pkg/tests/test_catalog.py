import unittest
from dataclasses import replace
from unittest.mock import patch

from tangle_shadow import catalog
from tangle_shadow.exceptions import EntryNotFoundError, TableNotFoundError
from tangle_shadow.fraction import skeleton
from tangle_shadow.models import CheckStatus, ClosureKind
from tangle_shadow.poly import from_string
from tangle_shadow.tangle import bracket_pair, crossing_count, parse

N, D, R = ClosureKind.NUMERATOR, ClosureKind.DENOMINATOR, ClosureKind.R_CLOSURE


class TestEntries(unittest.TestCase):

    def setUp(self):
        self.entries = catalog.load_catalog()

    def test_size_and_order(self):
        self.assertEqual(len(self.entries), 35)
        self.assertEqual([e.id for e in self.entries[:3]], ["A1", "A2", "A3"])
        self.assertEqual(self.entries[-1].id, "A35")

    def test_members_evaluate_to_entry_pair(self):
        for item in self.entries:
            for member in item.members:
                with self.subTest(entry=item.id, member=member):
                    e = parse(member)
                    self.assertEqual(bracket_pair(e), item.pair)
                    self.assertEqual(item.pair.state_count, 2 ** crossing_count(e))

    def test_prime_entries(self):
        for item in self.entries[:17]:
            with self.subTest(entry=item.id):
                self.assertTrue(skeleton(item.pair).is_prime)
                self.assertFalse(item.is_locally_knotted)

    def test_multi_knot_members(self):
        self.assertIn("[1]#K1#K1", catalog.entry("A25").members)
        self.assertIn("[1]#K2#K1", catalog.entry("A31").members)
        self.assertIn("[1]#K3#K1", catalog.entry("A33").members)

    def test_errata_applied(self):
        a5 = catalog.entry("A5")
        self.assertEqual(a5.printed_pair.a, from_string("x^3+3x+3"))
        self.assertEqual(a5.pair.a, from_string("x^2+3x+3"))
        self.assertEqual(catalog.entry("A19").pair.b, from_string("x^2+3x+2"))
        self.assertEqual(catalog.entry("A20").pair.a, from_string("x^2+3x+2"))
        self.assertEqual(catalog.entry("A33").formula.r_factor, from_string("x+2"))

    def test_entry_lookup(self):
        self.assertEqual(catalog.entry(" a7 ").id, "A7")
        with self.assertRaises(EntryNotFoundError):
            catalog.entry("A36")

    def test_knot_classes(self):
        knots = {k.id: k for k in catalog.knot_classes()}
        self.assertEqual(sorted(knots), ["K1", "K2", "K3", "K4", "K5", "K6"])
        self.assertEqual({k: v.crossings for k, v in knots.items()},
                         {"K1": 1, "K2": 2, "K3": 2, "K4": 3, "K5": 3, "K6": 3})
        self.assertEqual(knots["K6"].composition, ("K3", "K1"))


class TestTables(unittest.TestCase):

    def test_all_printed_tables_reproduce(self):
        specs = catalog.table_specs()
        self.assertEqual(len(specs), 81)
        for spec in specs:
            with self.subTest(table=spec.table_no):
                rows = catalog.table(spec, n_max=len(spec.rows) - 1)
                self.assertEqual(catalog.compare_table(spec, rows), [])

    def test_anchor_rows(self):
        self.assertEqual(catalog.table(catalog.table_spec(1))[4], [0, 1, 4, 6, 4, 1])
        self.assertEqual(catalog.table(catalog.table_spec(8))[2], [0, 4, 7, 4, 1])
        self.assertEqual(catalog.table(catalog.table_spec(13))[2], [0, 9, 24, 22, 8, 1])
        self.assertEqual(catalog.table(catalog.table_spec(35))[1], [0, 2, 6, 6, 2])
        self.assertEqual(catalog.table(catalog.table_spec(29))[5][:7],
                         [0, 1024, 10240, 46080, 122880, 215040, 258048])
        self.assertEqual(catalog.table(catalog.table_spec(78))[0], [0, 1, 1])

    def test_truncated_rows(self):
        spec = catalog.table_spec(29)
        self.assertTrue(spec.truncated[5])
        self.assertFalse(spec.truncated[4])
        self.assertEqual(len(catalog.printed_table(29)[5]), 10)
        self.assertEqual(len(catalog.table(spec)[5]), 12)
        self.assertEqual(spec.suffixes[5], ())

    def test_truncated_row_endings(self):
        spec = catalog.table_spec(22)
        self.assertEqual(spec.rows[5][-1], 184756)
        self.assertEqual(spec.suffixes[5][-4:], (1140, 190, 20, 1))
        self.assertEqual(catalog.table(spec)[5][-10:], list(spec.suffixes[5]))
        self.assertEqual(sum(len(tail) for s in catalog.table_specs() for tail in s.suffixes), 315)

    def test_wrong_row_ending_is_reported(self):
        spec = catalog.table_spec(22)
        tail = list(spec.suffixes[5])
        tail[-3] = 191
        suffixes = spec.suffixes[:5] + (tuple(tail),)
        rows = catalog.table(spec)
        problems = catalog.compare_table(replace(spec, suffixes=suffixes), rows)
        self.assertEqual(len(problems), 1)
        self.assertTrue(problems[0].startswith("row 5: printed ending"))

        specs = [replace(s, suffixes=suffixes) if s.table_no == 22 else s for s in catalog.table_specs()]
        with patch("tangle_shadow.catalog.table_specs", return_value=specs):
            report = catalog.verify_catalog(oracle=False)
        failed = [c.name for c in report.by_status(CheckStatus.FAIL)]
        self.assertEqual(failed, ["table T22"])

    def test_shared_tables(self):
        spec = catalog.table_spec(13)
        self.assertEqual(spec.refs, ((D, "A5"), (D, "A7")))
        self.assertEqual(catalog.entry_table("A7", D), catalog.entry_table("A5", D))
        self.assertEqual(catalog.find_table("A7", D).table_no, 13)

    def test_row_range_and_width(self):
        spec = catalog.table_spec(1)
        self.assertEqual(catalog.table(spec, n_max=2, k_max=3), [[0, 1, 0, 0], [0, 1, 1, 0], [0, 1, 2, 1]])
        self.assertEqual(catalog.table(spec, n_min=2, n_max=3), [[0, 1, 2, 1], [0, 1, 3, 3, 1]])
        with self.assertRaises(ValueError):
            catalog.entry_table("A1", D, n_max=-1)

    def test_unprinted_closure(self):
        self.assertEqual(catalog.entry_table("A34", N, n_max=2), [[0, 0, 1]] * 3)
        with self.assertRaises(TableNotFoundError):
            catalog.find_table("A34", N)

    def test_unknown_table(self):
        for number in (0, 82):
            with self.subTest(table=number):
                with self.assertRaises(TableNotFoundError):
                    catalog.table_spec(number)


class TestGrouping(unittest.TestCase):

    def test_group_by_bracket(self):
        exprs = [m for entry_id in ("A12", "A13", "A14", "A15") for m in catalog.entry(entry_id).members]
        groups = catalog.group_by_bracket(exprs)
        self.assertEqual(len(groups), 4)
        self.assertEqual([len(g) for g in groups], [3, 3, 4, 4])
        self.assertEqual(groups[0][0], "[2]*1/[2]")

    def test_group_order_is_first_seen(self):
        groups = catalog.group_by_bracket(["[2]*[1]", "[1]", "[1]*[2]"])
        self.assertEqual(groups, [["[2]*[1]", "[1]*[2]"], ["[1]"]])


class TestVerifyCatalog(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.report = catalog.verify_catalog()

    def test_exactly_four_flagged_typos(self):
        warnings = self.report.by_status(CheckStatus.WARN)
        self.assertEqual(sorted(c.name for c in warnings),
                         ["erratum B19", "erratum B20", "erratum B5", "erratum R33"])
        self.assertEqual(self.report.by_status(CheckStatus.FAIL), [])
        self.assertTrue(self.report.ok)

    def test_typo_reports_printed_text(self):
        details = {c.name: c.detail for c in self.report.by_status(CheckStatus.WARN)}
        self.assertEqual(details["erratum B19"], "printed b = x+3x+2, recomputed x^2+3x+2")
        self.assertEqual(details["erratum B20"], "printed a = x+3x+2, recomputed x^2+3x+2")
        self.assertEqual(details["erratum B5"], "printed a = x^3+3x+3, recomputed x^2+3x+3")

    def test_oracle_and_oeis_ran(self):
        names = [c.name for c in self.report.checks]
        self.assertIn("oracle A17 [1]*[3]", names)
        self.assertIn("oracle K6", names)
        self.assertIn("oeis T79 A129185", names)
        self.assertEqual(len(self.report.by_status(CheckStatus.SKIP)), 0)

    def test_summary(self):
        summary = self.report.summary()
        self.assertEqual(summary["WARN"], 4)
        self.assertEqual(summary["FAIL"], 0)
        self.assertEqual(sum(summary.values()), len(self.report.checks))


if __name__ == '__main__':
    unittest.main()
