#!/usr/bin/env python3
"""End-to-end checks of the flagx command line.

Run as: cli_test.py --binary path/to/flagx --schema schemas/report-v1.json
        --golden tests/golden [--update]
"""

import argparse
import hashlib
import json
import os
import subprocess
import sys
import unittest

import jsonschema

ARGS = None

# Pinned digest of the published schema. Editing the schema means a new
# schema version, not a silent change of v1.
SCHEMA_SHA256 = "3376e179a9a0450375b9e5570de74e75be4d0cb6c7a2b7a05b93ff2e50727170"

GOLDEN = {
    "roots_A3.json": ["roots", "A", "3"],
    "roots_B2.table": ["roots", "B", "2", "--format", "table"],
    "flag_A6_p135.json": ["flag", "A", "6", "--parabolic", "1,3,5"],
    "extremal_A3.json": ["extremal", "A", "3"],
    "extremal_C3.table": ["extremal", "C", "3", "--format", "table"],
    "survey_default.json": ["survey"],
    "survey_default.table": ["survey", "--format", "table"],
    "spectrum_A3.json": ["spectrum", "A", "3"],
    "spectrum_B2.table": ["spectrum", "B", "2", "--format", "table"],
    "spectrum_A3_xi.table": ["spectrum", "A", "3", "--xi", "1/2,1/5", "--format", "table"],
    "su3_optimize.json": ["su3", "optimize"],
}


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("FLAGX_THREADS", None)
    if env:
        full_env.update(env)
    return subprocess.run([ARGS.binary] + args, capture_output=True, env=full_env, check=False)


def run_json(args):
    res = run(args)
    if res.returncode != 0:
        raise AssertionError(f"{args} exited {res.returncode}: {res.stderr.decode()}")
    return json.loads(res.stdout)


class Schema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(ARGS.schema, "rb") as fh:
            cls.raw = fh.read()
        cls.schema = json.loads(cls.raw)
        jsonschema.Draft202012Validator.check_schema(cls.schema)
        cls.validator = jsonschema.Draft202012Validator(cls.schema)

    def test_pinned_digest(self):
        self.assertEqual(hashlib.sha256(self.raw).hexdigest(), SCHEMA_SHA256)

    def test_every_command_validates(self):
        invocations = list(GOLDEN.values()) + [
            ["flag", "D", "4", "--parabolic", "2"],
            ["extremal", "A", "2"],
            ["extremal", "B", "3", "--scale", "7/3"],
            ["survey", "--families", "C,A", "--min-rank", "1", "--max-rank", "4"],
            ["spectrum", "A", "6", "--parabolic", "1,3,5"],
            ["spectrum", "C", "3", "--xi", "0.7,0.4,0.1", "--float"],
            ["su3", "scan", "--samples", "5", "--emit-samples"],
            ["su3", "scan"],
        ]
        for args in invocations:
            if "table" in args:
                continue
            with self.subTest(args=args):
                self.validator.validate(run_json(args))

    def test_schema_rejects_drift(self):
        doc = run_json(["extremal", "A", "3"])
        doc["outputs"]["mu"] = 2.6666
        self.assertFalse(self.validator.is_valid(doc))
        doc = run_json(["roots", "A", "3"])
        doc["outputs"]["extra"] = 1
        self.assertFalse(self.validator.is_valid(doc))
        doc = run_json(["su3", "optimize"])
        doc["schema_version"] = 2
        self.assertFalse(self.validator.is_valid(doc))


class Golden(unittest.TestCase):
    def test_outputs_match(self):
        for name, args in GOLDEN.items():
            with self.subTest(name=name):
                res = run(args)
                self.assertEqual(res.returncode, 0, res.stderr.decode())
                path = os.path.join(ARGS.golden, name)
                if ARGS.update:
                    with open(path, "wb") as fh:
                        fh.write(res.stdout)
                    continue
                with open(path, "rb") as fh:
                    self.assertEqual(res.stdout, fh.read())

    def test_repeatable_and_thread_independent(self):
        for args in (["survey"], ["su3", "scan", "--samples", "2000", "--emit-samples"], ["spectrum", "D", "4"]):
            with self.subTest(args=args):
                first = run(args).stdout
                self.assertEqual(first, run(args).stdout)
                self.assertEqual(first, run(args, {"FLAGX_THREADS": "1"}).stdout)
                self.assertEqual(first, run(args, {"FLAGX_THREADS": "3"}).stdout)


class ExitCodes(unittest.TestCase):
    CASES = [
        (["roots", "A", "3"], 0),
        (["roots", "A", "1"], 1),
        (["roots", "E", "6"], 1),
        (["roots", "C", "2"], 1),
        (["roots", "A", "x"], 1),
        ([], 1),
        (["bogus"], 1),
        (["roots", "A", "3", "--format", "xml"], 1),
        (["flag", "A", "3", "--parabolic", "7"], 2),
        (["flag", "A", "3", "--parabolic", "1,2"], 2),
        (["extremal", "B", "2", "--scale", "0"], 1),
        (["extremal", "B", "2", "--scale", "a/b"], 1),
        (["survey", "--families", ""], 1),
        (["survey", "--families", "A,A"], 1),
        (["survey", "--families", "C", "--max-rank", "2"], 1),
        (["spectrum", "A", "3", "--xi", "-1/3,0"], 2),
        (["spectrum", "A", "3", "--xi", "1/3,1/3"], 2),
        (["spectrum", "A", "3", "--xi", "1/3"], 2),
        (["spectrum", "A", "3", "--xi", "1/x,0"], 1),
        (["spectrum", "A", "3", "--float"], 1),
        (["su3", "scan", "--s-min", "1", "--s-max", "0.5"], 1),
        (["su3", "scan", "--samples", "1"], 1),
        (["su3", "optimize", "--tol", "0"], 1),
        (["su3", "optimize", "--bracket", "0.5,1.0"], 2),
        (["su3", "walk"], 1),
    ]

    def test_codes(self):
        for args, code in self.CASES:
            with self.subTest(args=args):
                res = run(args)
                self.assertEqual(res.returncode, code, res.stderr.decode())
                if code != 0:
                    self.assertEqual(res.stdout, b"")
                    self.assertTrue(res.stderr)

    def test_help(self):
        self.assertEqual(run(["--help"]).returncode, 0)


class Content(unittest.TestCase):
    def test_roots(self):
        self.assertEqual(run_json(["roots", "A", "3"])["outputs"]["root_count"], 6)
        self.assertEqual(run_json(["roots", "B", "2"])["outputs"]["root_count"], 8)

    def test_flag_classes(self):
        out = run_json(["flag", "A", "6", "--parabolic", "1,3,5"])["outputs"]
        self.assertEqual([c["multiplicity"] for c in out["t_roots"]], [4, 4, 4])
        self.assertEqual(sorted(c["beta"] for c in out["t_roots"]), ["4", "4", "8"])
        full = run_json(["flag", "A", "3"])["outputs"]
        self.assertEqual([c["multiplicity"] for c in full["t_roots"]], [1, 1, 1])

    def test_verdicts(self):
        self.assertEqual(run_json(["extremal", "A", "3"])["outputs"]["verdict"], "EXTREMAL")
        self.assertEqual(run_json(["extremal", "C", "3"])["outputs"]["verdict"], "NOT_EXTREMAL")
        self.assertEqual(run_json(["extremal", "A", "2"])["outputs"]["verdict"], "NOT_APPLICABLE")
        for scale in ("1", "2", "7/3"):
            out = run_json(["extremal", "B", "3", "--scale", scale])["outputs"]
            self.assertEqual(out["verdict"], "NOT_EXTREMAL")

    def test_survey(self):
        rows = run_json(["survey"])["outputs"]["rows"]
        self.assertEqual(len(rows), 8 + 7 + 6 + 6)
        extremal = [(r["family"], r["rank"]) for r in rows if r["verdict"] == "EXTREMAL"]
        self.assertEqual(extremal, [("A", 2)])

    def test_spectrum(self):
        out = run_json(["spectrum", "A", "3"])["outputs"]
        self.assertEqual(out["spectrum"]["eigenvalues"], [2.0, 3.0])
        self.assertEqual(out["xi"], ["1/3", "0"])
        b2 = run_json(["spectrum", "B", "2"])["outputs"]["spectrum"]
        self.assertTrue(b2["eigenvalue_two_exact"])
        self.assertEqual(b2["char_poly_at_two"], "0")

    def test_su3(self):
        opt = run_json(["su3", "optimize"])["outputs"]
        self.assertLessEqual(abs(opt["f_star"] - 2.0), 1e-9)
        self.assertLessEqual(abs(opt["s_star"] - 1.0 / 3.0), 1e-6)
        scan = run_json(["su3", "scan", "--samples", "10000"])["outputs"]
        self.assertLessEqual(scan["max_value"], 2.0 + 1e-12)


def main():
    global ARGS
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--golden", required=True)
    parser.add_argument("--update", action="store_true", help="rewrite golden files")
    ARGS, rest = parser.parse_known_args()
    unittest.main(argv=[sys.argv[0]] + rest, verbosity=2)


if __name__ == "__main__":
    main()
