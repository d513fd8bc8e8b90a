import sys
import os
import io
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import orjson

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import EXIT_OK, EXIT_PARSE_ERROR
from main import parse_config, run
from models.run_config import OutputFormat

Q_PRIME = "(2,1), (3,2), (1,3), (4,3), (5,4), (6,3)"


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv + ["--log-level", "ERROR"])
    return code, out.getvalue(), err.getvalue()


class TestParseConfig(unittest.TestCase):

    def test_common_options_after_command(self):
        cfg, _ = parse_config(["invariants", "(1,2)", "--format", "json", "--workers", "2"])
        self.assertEqual(cfg.command, "invariants")
        self.assertEqual(cfg.fmt, OutputFormat.JSON)
        self.assertEqual(cfg.workers, 2)

    def test_report_alias(self):
        cfg, _ = parse_config(["classify", "--type", "E6", "--report", "md", "--no-closure"])
        self.assertEqual(cfg.fmt, OutputFormat.MD)
        self.assertFalse(cfg.closure)


class TestRun(unittest.TestCase):

    def test_invariants(self):
        code, out, _ = invoke(["invariants", "(1,2)"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("det: 1", out)
        self.assertIn("polynomial: x^2-x+1", out)

    def test_invariants_json(self):
        code, out, _ = invoke(["invariants", "(1,2), (2,3), (3,1)", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        data = orjson.loads(out)
        self.assertEqual(data["determinant"], 2)
        self.assertEqual(data["polynomial"], "2(x^3-1)")

    def test_loop_is_a_parse_error(self):
        code, _, err = invoke(["invariants", "(1,1)"])
        self.assertEqual(code, EXIT_PARSE_ERROR)
        self.assertIn("Loop", err)

    def test_unsupported_type(self):
        code, _, err = invoke(["enumerate", "--type", "E9"])
        self.assertEqual(code, EXIT_PARSE_ERROR)
        self.assertIn("E9", err)

    def test_unknown_command(self):
        with redirect_stderr(io.StringIO()):
            code = run(["frobnicate"])
        self.assertEqual(code, EXIT_PARSE_ERROR)

    def test_enumerate_json(self):
        code, out, _ = invoke(["enumerate", "--type", "A3", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        data = orjson.loads(out)
        self.assertEqual(data["size"], 4)
        self.assertEqual(data["orbits"], 2)

    def test_classify_markdown(self):
        code, out, _ = invoke(["classify", "--type", "E6", "--report", "md", "--no-closure"])
        self.assertEqual(code, EXIT_OK)
        rows = [line for line in out.splitlines() if line.startswith("| ") and "polynomial" not in line]
        self.assertEqual(len(rows), 6)
        self.assertTrue(rows[0].startswith("| x^6-x^5+x^3-x+1 | 20 |"))

    def test_enumerate_orbits(self):
        code, out, _ = invoke(["enumerate", "--type", "E6", "--orbits"])
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "E6: 67 quivers, 21 sink/source orbits")
        self.assertEqual(len([line for line in lines if line.startswith("orbit ")]), 21)

    def test_enumerate_json_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "e6.json")
            code, _, _ = invoke(["enumerate", "--type", "E6", "--orbits", "--json", path])
            self.assertEqual(code, EXIT_OK)
            with open(path, "rb") as handle:
                data = orjson.loads(handle.read())
        self.assertEqual(data["size"], 67)
        self.assertEqual(len(data["orbits"]), 21)
        self.assertEqual(sum(len(orbit["members"]) for orbit in data["orbits"]), 67)
        self.assertEqual(len(data["edges"]), 6 * 67)
        self.assertEqual(len({m["label"] for m in data["members"]}), 21)
        self.assertNotIn("cartan", data["members"][0])

    def test_good_mutation(self):
        code, out, _ = invoke(["verify-good-mutation", "--quiver", Q_PRIME, "--vertex", "3"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("T_3 = (3;1,4,6)", out)
        self.assertIn("verdict: good", out)

    def test_good_mutation_json(self):
        code, out, _ = invoke(["verify-good-mutation", "--quiver", Q_PRIME, "--vertex", "3", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        data = orjson.loads(out)
        self.assertEqual(data["kind"], "good")
        self.assertTrue(data["passed"])

    def test_bad_vertex(self):
        code, _, _ = invoke(["verify-good-mutation", "--quiver", Q_PRIME, "--vertex", "9"])
        self.assertEqual(code, EXIT_PARSE_ERROR)

    def test_export(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "a3.json")
            code, out, _ = invoke(["export", "--type", "A3", "--out", path])
            self.assertEqual(code, EXIT_OK)
            self.assertIn("wrote 4 quivers", out)
            with open(path, "rb") as handle:
                data = orjson.loads(handle.read())
        self.assertEqual(data["size"], 4)
        self.assertEqual(len(data["members"]), 4)
        self.assertEqual(sorted({m["polynomial"] for m in data["members"]}), ["2(x^3-1)", "x^3-x^2+x-1"])
        self.assertTrue(all(m["label"] is None for m in data["members"]))


if __name__ == "__main__":
    unittest.main()
