"""End-to-end checks of the fibered command-line tool.

usage: cli_test.py <fibered binary> <data directory>
"""

import json
import os
import subprocess
import sys
import unittest

BIN = None
DATA = None


def run(*args):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, cwd=DATA)
    return proc.returncode, proc.stdout, proc.stderr


class ExitCodes(unittest.TestCase):
    def test_five_two_scan_finds_witness_at_trivial_quotient(self):
        rc, out, _ = run("scan", "five_two.grp", "--max-degree", "3", "--json")
        self.assertEqual(rc, 3)
        rep = json.loads(out)
        self.assertEqual(rep["conclusion"], "NOT fibered (certified)")
        self.assertEqual(rep["verdicts"][rep["witness"]]["index"], 1)
        self.assertEqual(rep["verdicts"][rep["witness"]]["verdict"], "NonMonic")

    def test_trefoil_scan_has_no_obstruction(self):
        rc, out, _ = run("scan", "trefoil.grp", "--max-degree", "4")
        self.assertEqual(rc, 0)
        self.assertIn("no obstruction up to degree 4", out)

    def test_malformed_input(self):
        rc, _, err = run("scan", "malformed.grp")
        self.assertEqual(rc, 2)
        self.assertIn("line 2", err)

    def test_other_invalid_inputs(self):
        self.assertEqual(run("scan", "missing.grp")[0], 2)
        self.assertEqual(run("scan", "trefoil.grp", "--max-degree", "8")[0], 2)
        self.assertEqual(run("alexander", "trefoil.grp", "--u", "1,2")[0], 2)
        self.assertEqual(run("nv", "invert", "--series", "2+t", "--cutoff", "3")[0], 2)
        self.assertEqual(run("twisted", "trefoil.grp", "--images", "1 0;0 1")[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)


class Outputs(unittest.TestCase):
    def test_alexander(self):
        self.assertEqual(run("alexander", "trefoil.grp")[1].splitlines()[0],
                         "order: t^2 - t + 1, monic: true")
        self.assertEqual(run("alexander", "five_two.grp")[1].splitlines()[0],
                         "order: 2*t^2 - 3*t + 2, monic: false")
        self.assertEqual(run("alexander", "free_z.grp")[1].splitlines()[0],
                         "order: 1, monic: true")

    def test_quotients_list_symmetric_group(self):
        rc, out, _ = run("quotients", "trefoil.grp", "--max-degree", "3", "--json")
        self.assertEqual(rc, 0)
        indices = [q["index"] for q in json.loads(out)["quotients"]]
        self.assertIn(6, indices)

    def test_nv_invert(self):
        rc, out, _ = run("nv", "invert", "--series", "1+t", "--cutoff", "3")
        self.assertEqual(rc, 0)
        self.assertEqual(out.splitlines()[0], "1 - t + t^2 - t^3")

    def test_cyclo_res(self):
        self.assertEqual(run("cyclo", "res", "1", "3")[1].strip(), "3")
        self.assertEqual(run("cyclo", "res", "4", "20")[1].strip(), "25")

    def test_cyclo_divides_and_scan(self):
        self.assertEqual(run("cyclo", "divides", "--p", "2", "--q", "t", "--n", "3")[1].strip(), "false")
        rc, out, _ = run("cyclo", "scan", "--p", "t^2+1", "--q", "t+1", "--json")
        self.assertEqual(rc, 0)
        rep = json.loads(out)
        self.assertEqual(rep["first-failure"], 8)
        self.assertFalse(rep["divides-in-Z[t]"])

    def test_rs_counts(self):
        rc, out, _ = run("rs", "trefoil.grp", "--images", "1 0;1 0", "--json")
        self.assertEqual(rc, 0)
        rep = json.loads(out)
        self.assertEqual(len(rep["generators"]), 3)
        self.assertEqual(len(rep["relators"]), 2)


class JsonContract(unittest.TestCase):
    def test_scan_schema(self):
        _, out, _ = run("scan", "figure_eight.grp", "--max-degree", "3", "--json")
        rep = json.loads(out)
        for key in ("presentation-hash", "u", "degree-bound", "verdicts", "conclusion"):
            self.assertIn(key, rep)
        self.assertEqual(rep["degree-bound"], 3)
        self.assertIsNone(rep["witness"])
        for v in rep["verdicts"]:
            self.assertEqual(set(v), {"quotient", "index", "order", "verdict"})
            self.assertEqual(set(v["quotient"]), {"degree", "images"})
            self.assertEqual(v["verdict"], "Monic")

    def test_byte_identical_output(self):
        for args in (("scan", "trefoil.grp", "--max-degree", "5", "--json", "--all", "--seed", "7"),
                     ("quotients", "figure_eight.grp", "--max-degree", "4", "--json", "--seed", "7"),
                     ("alexander", "z2.grp", "--json", "--seed", "7")):
            first, second = run(*args)[1], run(*args)[1]
            self.assertTrue(first)
            self.assertEqual(first, second)


if __name__ == "__main__":
    BIN = os.path.abspath(sys.argv[1])
    DATA = os.path.abspath(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
