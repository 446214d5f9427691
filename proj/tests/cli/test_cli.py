"""Contract tests for the liftlab command-line tool.

usage: test_cli.py LIFTLAB_BINARY SCHEMA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = None
SCHEMAS = None


def run(*args, env=None, check_code=0):
    full_env = dict(os.environ)
    full_env.pop("LIFTLAB_SEED", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env, timeout=300)
    if check_code is not None and proc.returncode != check_code:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {check_code}\nstdout: {proc.stdout[:2000]}\n"
            f"stderr: {proc.stderr[:2000]}"
        )
    return proc


def schema(name):
    with open(SCHEMAS / f"{name}.schema.json") as f:
        return json.load(f)


def validate_lines(testcase, text, name):
    lines = [line for line in text.splitlines() if line]
    testcase.assertTrue(lines, "no output")
    validator = jsonschema.Draft202012Validator(schema(name))
    records = []
    for line in lines:
        record = json.loads(line)
        validator.validate(record)
        records.append(record)
    return records


class Colour(unittest.TestCase):
    def test_single_trial_record(self):
        out = run("colour", "--k", "3", "--s", "2", "--h", "100000", "--seed", "7").stdout
        records = validate_lines(self, out, "trial_record")
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["h"], 100000)
        self.assertEqual(records[0]["seed"], 7)

    def test_byte_identical(self):
        a = run("colour", "--h", "20000", "--seed", "11").stdout
        b = run("colour", "--h", "20000", "--seed", "11").stdout
        self.assertEqual(a, b)

    def test_seed_from_environment(self):
        a = run("colour", "--h", "5000", env={"LIFTLAB_SEED": "7"}).stdout
        b = run("colour", "--h", "5000", "--seed", "7").stdout
        self.assertEqual(a, b)
        self.assertEqual(json.loads(a)["seed"], 7)

    def test_chunk_graph_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "chunks.json"
            statuses = set()
            for seed in range(6):
                out = run("colour", "--h", "3000", "--seed", str(seed), "--chunk-graph", str(path)).stdout
                record = json.loads(out)
                graph = json.loads(path.read_text())
                jsonschema.validate(graph, schema("chunk_graph"))
                if graph is None:
                    self.assertIsNone(record["chunks"])
                else:
                    self.assertEqual(len(graph["chunks"]), record["chunks"])
                    self.assertEqual(max(graph["chunks"], default=0), record["max_chunk"])
                statuses.add(graph is None)
            self.assertIn(False, statuses)

    def test_csv(self):
        out = run("colour", "--h", "1000", "--seed", "3", "--format", "csv").stdout.splitlines()
        self.assertEqual(out[0], "seed,h,k,s,status,cycles,r0,T,pT,chunks,max_chunk,chunk_cycles,millis")
        self.assertEqual(len(out), 2)


class Oracle(unittest.TestCase):
    def test_base_graph_is_four_chromatic(self):
        out = run("oracle", "--k", "3", "--s", "2", "--h", "1", "--seed", "0").stdout
        (record,) = validate_lines(self, out, "oracle")
        self.assertEqual(record["chromatic_number"], 4)
        self.assertEqual(record["vertices"], 5)
        self.assertEqual(record["edges"], 9)

    def test_generated_lift_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            lift = Path(tmp) / "lift.txt"
            edges = Path(tmp) / "edges.txt"
            run("gen", "--h", "6", "--seed", "4", "-o", str(lift))
            run("gen", "--h", "6", "--seed", "4", "--edge-list", "-o", str(edges))
            direct = json.loads(run("oracle", "--h", "6", "--seed", "4").stdout)
            from_lift = json.loads(run("oracle", "--input", str(lift)).stdout)
            from_edges = json.loads(run("oracle", "--input", str(edges)).stdout)
            for record in (direct, from_lift, from_edges):
                jsonschema.validate(record, schema("oracle"))
            self.assertEqual(direct["chromatic_number"], from_lift["chromatic_number"])
            self.assertEqual(direct["chromatic_number"], from_edges["chromatic_number"])
            self.assertIn(direct["chromatic_number"], (2, 3, 4))
            self.assertEqual(len(lift.read_text().splitlines()), 9)

    def test_size_guard(self):
        run("oracle", "--h", "100", check_code=2)


class Sweep(unittest.TestCase):
    def test_records_and_summaries(self):
        with tempfile.TemporaryDirectory() as tmp:
            summary = Path(tmp) / "summary.jsonl"
            out = run("sweep", "--h-list", "100,1000", "--trials", "25", "--seed", "5", "--summary", str(summary)).stdout
            records = validate_lines(self, out, "trial_record")
            self.assertEqual(len(records), 50)
            self.assertEqual([r["h"] for r in records], [100] * 25 + [1000] * 25)
            summaries = validate_lines(self, summary.read_text(), "sweep_summary")
            self.assertEqual([s["h"] for s in summaries], [100, 1000])
            self.assertEqual(summaries[0]["trials"], 25)

    def test_independent_of_workers(self):
        args = ("sweep", "--h-list", "500,2000", "--trials", "40", "--seed", "9")
        self.assertEqual(run(*args).stdout, run(*args, "--workers", "3").stdout)
        self.assertEqual(run(*args, "--summary-only").stdout, run(*args, "--summary-only", "--workers", "4").stdout)

    def test_summary_only(self):
        out = run("sweep", "--h-list", "300", "--trials", "10", "--summary-only").stdout
        validate_lines(self, out, "sweep_summary")

    def test_resource_cap(self):
        run("sweep", "--h-list", "100000000", "--trials", "100000", check_code=2)


class Lemma(unittest.TestCase):
    def test_cycles(self):
        out = run("lemma", "cycles", "--h", "1000", "--trials", "2000", "--seed", "1").stdout
        (record,) = validate_lines(self, out, "lemma_cycles")
        self.assertTrue(record["passed"])

    def test_gaps_cont(self):
        out = run("lemma", "gaps-cont", "--n", "100", "--samples", "10000", "--seed", "1").stdout
        (record,) = validate_lines(self, out, "lemma_gaps_cont")
        self.assertGreater(record["min_p"], 0.01)
        self.assertEqual(len(record["p_values"]), 101)

    def test_gaps_cont_csv(self):
        out = run("lemma", "gaps-cont", "--n", "50", "--samples", "2000", "--seed", "1", "--format", "csv").stdout
        lines = out.splitlines()
        self.assertEqual(lines[0], "a,empirical,exact_or_bound")
        self.assertGreater(len(lines), 2)
        for line in lines[1:]:
            self.assertEqual(len(line.split(",")), 3)

    def test_bound_checks(self):
        for name in ("gaps-disc", "subset-gaps"):
            out = run("lemma", name, "--samples", "2000", "--seed", "2").stdout
            (record,) = validate_lines(self, out, "lemma_bound_check")
            self.assertEqual(record["experiment"], name)
            self.assertEqual(len(record["held_out"]), 6)

    def test_trends(self):
        for name in ("max-chunk", "chunk-cycles"):
            out = run("lemma", name, "--h-list", "200,2000", "--trials", "30", "--seed", "3", check_code=None).stdout
            (record,) = validate_lines(self, out, "lemma_trend")
            self.assertEqual(len(record["per_h"]), 2)

    def test_assertion_failure_exit_code(self):
        # One trial has zero standard error, so the 3-SE check cannot hold.
        proc = run("lemma", "cycles", "--h", "1000", "--trials", "1", "--seed", "1", check_code=3)
        (record,) = validate_lines(self, proc.stdout, "lemma_cycles")
        self.assertFalse(record["passed"])
        self.assertIsNone(record["z"])


class Usage(unittest.TestCase):
    def test_usage_errors(self):
        for args in (
            (),
            ("frobnicate",),
            ("colour", "--k", "2"),
            ("colour", "--s", "0"),
            ("colour", "--h", "0"),
            ("colour", "--format", "xml"),
            ("lemma", "nope"),
            ("sweep",),
            ("sweep", "--h-list", "100", "--trials", "0"),
            ("lemma", "gaps-cont", "--samples", "10"),
            ("oracle", "--input", "/nonexistent/file"),
        ):
            with self.subTest(args=args):
                proc = run(*args, check_code=2)
                self.assertEqual(proc.stdout, "")

    def test_help(self):
        self.assertIn("colour", run("--help").stdout)


def main():
    global BINARY, SCHEMAS
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    BINARY = sys.argv[1]
    SCHEMAS = Path(sys.argv[2])
    for path in SCHEMAS.glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))
    result = unittest.main(argv=[sys.argv[0], "-v"], exit=False).result
    return 0 if result.wasSuccessful() else 1


if __name__ == "__main__":
    sys.exit(main())
