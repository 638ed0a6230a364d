"""End-to-end checks of the svol command-line tool.

Usage: cli_test.py PATH_TO_SVOL SCHEMA_DIR
"""

import json
import subprocess
import sys
import unittest
from pathlib import Path

SVOL = None
SCHEMAS = None


def run(*args):
    return subprocess.run([SVOL, *args], capture_output=True, text=True)


def validate(doc, name):
    try:
        import jsonschema
    except ImportError:
        return
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(doc, schema)


class TableTests(unittest.TestCase):
    def test_a1_sampled(self):
        p = run("table", "A", "1", "--r", "0..3", "--q", "2", "--format", "json")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "table")
        self.assertEqual([row["sv"] for row in doc["rows"]], ["1", "4", "10", "22"])

    def test_c2_symbolic(self):
        p = run("table", "C", "2", "--r", "1", "--symbolic")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertIn("SSA=2*q^3 + 2*q^2 + 2*q + 2 ", p.stdout)

    def test_a2_sampled(self):
        p = run("table", "A", "2", "--r", "1", "--q", "2", "--format", "csv")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(p.stdout.splitlines()[1], "A,2,all,2,1,14,15")

    def test_csv_quotes_polynomials(self):
        p = run("table", "--family", "C", "--rank", "2", "--r", "1", "--format", "csv")
        self.assertEqual(p.stdout.splitlines()[1].split(",", 5)[5], '"2*q^3 + 2*q^2 + 2*q + 2","2*q^3 + 2*q^2 + 2*q + 3"')

    def test_methods_agree(self):
        for fam, n in [("B", 3), ("D", 4), ("C", 3)]:
            for extra in ([], ["--special"]):
                args = ["table", fam, str(n), "--r", "0..6", "--q", "3", *extra]
                exact = run(*args, "--method", "exact")
                closed = run(*args, "--method", "closed")
                both = run(*args, "--method", "both")
                self.assertEqual(both.returncode, 0, both.stderr)
                strip = lambda s: s.splitlines()[1:]
                self.assertEqual(strip(exact.stdout), strip(closed.stdout))

    def test_deterministic_bytes(self):
        args = ("table", "B", "4", "--r", "0..4", "--format", "json")
        self.assertEqual(run(*args).stdout, run(*args).stdout)


class AsymptoteTests(unittest.TestCase):
    def profile(self, *args):
        p = run("asymptote", *args, "--format", "json")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "asymptote")
        return doc

    def test_b3(self):
        doc = self.profile("B", "3")
        self.assertEqual((doc["epsilon"], doc["pi"]), (0, "5"))
        self.assertTrue(doc["explicit_matches"])

    def test_a5(self):
        doc = self.profile("A", "5")
        self.assertEqual((doc["epsilon"], doc["pi"]), (0, "9"))

    def test_c3_special(self):
        doc = self.profile("C", "3", "--special")
        self.assertEqual(doc["pi"], "6")
        self.assertTrue(doc["explicit_matches"])

    def test_d4_printed(self):
        doc = self.profile("D", "4")
        self.assertEqual((doc["epsilon"], doc["pi"]), (2, "6"))
        self.assertTrue(doc["printed_matches"])


class VerifyTests(unittest.TestCase):
    def report(self, *args, code=0):
        p = run("verify", *args)
        self.assertEqual(p.returncode, code, p.stdout[-2000:] + p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "verify")
        return doc

    def test_multisum(self):
        self.assertTrue(self.report("multisum", "--seed", "7", "--count", "100")["pass"])

    def test_table1_single(self):
        doc = self.report("table1", "--family", "D", "--rank", "5")
        row = doc["systems"][0]
        self.assertEqual(row["exact_vs_closed"], "pass")
        self.assertEqual(row["table1"]["expected"], {"epsilon": 1, "pi": "10"})

    def test_enum(self):
        self.assertTrue(self.report("enum", "--max-r", "8")["pass"])

    def test_constants_fail_is_localized(self):
        doc = self.report("constants", code=1)
        self.assertEqual(doc["first_failure"]["check"], "C_dagger(3)")


class ErrorTests(unittest.TestCase):
    def test_exit_codes(self):
        for args in (["table", "E", "3"], ["table", "B", "2"], ["table", "A", "2", "--r", "5..3"],
                     ["table", "A", "2", "--q", "1"], ["table", "A", "2", "--q", "2", "--symbolic"],
                     ["table", "D", "6", "--r", "0..60"], ["table", "A", "2", "--variant", "some"],
                     ["verify", "nothing"], []):
            self.assertEqual(run(*args).returncode, 2, args)

    def test_dump_rootsystem(self):
        p = run("dump-rootsystem", "B", "3")
        self.assertEqual(p.returncode, 0)
        doc = json.loads(p.stdout)
        self.assertEqual(doc["highest_root"], [1, 2, 2])

    def test_sphere_methods(self):
        fast = run("sphere", "D", "4", "--r", "3")
        brute = run("sphere", "D", "4", "--r", "3", "--enum", "brute")
        self.assertEqual(fast.returncode, 0)
        self.assertEqual(fast.stdout, brute.stdout)


if __name__ == "__main__":
    SVOL = sys.argv[1]
    SCHEMAS = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0]], verbosity=2)
