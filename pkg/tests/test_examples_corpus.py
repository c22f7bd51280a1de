#!/usr/bin/env python3
"""
Runs the packaged corpus of worked examples as unit tests.

One test method is generated per expanded corpus entry, so a failing
example shows up under its own id.

Run with:
python -m unittest tests.test_examples_corpus
"""

import io
import json
import os
import re
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stderr
from unittest import mock

# Add project root to path for imports
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, project_root)

from zariski_lab.verify_examples import CHECKS, expand_entry, load_corpus, run_corpus, run_entry


class ExamplesCorpusTest(unittest.TestCase):
    """Each corpus entry becomes one test_<id> method"""

    entries = load_corpus()

    def test_corpus_covers_every_check(self):
        self.assertEqual({entry["kind"] for entry in self.entries}, set(CHECKS))

    def test_ids_are_filled(self):
        for entry in self.entries:
            self.assertNotIn("{", entry["id"])


class CorpusMechanicsTest(unittest.TestCase):

    def test_params_expand_as_grid(self):
        entry = {"id": "e-{a}-{b}", "kind": "colon", "k": "{a}", "params": {"a": [1, 2], "b": ["u", "v", "w"]}}
        expanded = expand_entry(entry)
        self.assertEqual(len(expanded), 6)
        self.assertEqual(expanded[0], {"id": "e-1-u", "kind": "colon", "k": 1})

    def test_cases_keep_types(self):
        entry = {"id": "c-{n}", "kind": "koszul", "q": "{q}", "rank": "{n}",
                 "cases": [{"n": 2, "q": [[1, 1], [0, 1]]}]}
        self.assertEqual(expand_entry(entry), [{"id": "c-2", "kind": "koszul", "q": [[1, 1], [0, 1]], "rank": 2}])

    def test_unknown_kind_fails(self):
        result = run_entry({"id": "odd", "kind": "nonsense"})
        self.assertFalse(result.passed)
        self.assertIn("unknown check kind", result.detail)

    def test_library_errors_are_failures(self):
        result = run_entry({"id": "low-order", "kind": "matrix", "ideal": "(x^2,y)", "rank": 3, "expected": []})
        self.assertFalse(result.passed)
        self.assertIn("OrderTooSmall", result.detail)

    def test_unexpected_errors_are_failures(self):
        def broken_check(entry, cap=None):
            raise ArithmeticError("0**0")

        with mock.patch.dict(CHECKS, {"normalize": broken_check}):
            result = run_entry({"id": "broken", "kind": "normalize", "ideal": "m", "expected": "(x,y)"})
            temp_dir = tempfile.mkdtemp()
            try:
                path = os.path.join(temp_dir, "corpus.json")
                with open(path, 'w') as f:
                    json.dump({"examples": [
                        {"id": "broken", "kind": "normalize", "ideal": "m", "expected": "(x,y)"},
                        {"id": "fine", "kind": "closure", "ideal": "(x^3,y^2)", "expected": "(x^3,x^2y,y^2)"},
                    ]}, f)
                err = io.StringIO()
                with redirect_stderr(err):
                    results = run_corpus(path, progress=False)
            finally:
                shutil.rmtree(temp_dir)
        self.assertFalse(result.passed)
        self.assertEqual(result.detail, "ArithmeticError: 0**0")
        self.assertEqual([r.passed for r in results], [False, True])
        self.assertIn("1 of 2 examples failed", err.getvalue())

    def test_run_corpus_reports_failures(self):
        temp_dir = tempfile.mkdtemp()
        try:
            path = os.path.join(temp_dir, "corpus.json")
            with open(path, 'w') as f:
                json.dump({"examples": [
                    {"id": "good", "kind": "normalize", "ideal": "m^2", "expected": "(x^2,xy,y^2)"},
                    {"id": "bad", "kind": "normalize", "ideal": "m^2", "expected": "(x,y)"},
                ]}, f)
            err = io.StringIO()
            with redirect_stderr(err):
                results = run_corpus(path, progress=False)
            self.assertEqual([r.passed for r in results], [True, False])
            self.assertIn("1 of 2 examples failed", err.getvalue())
        finally:
            shutil.rmtree(temp_dir)


def generate_test_methods():
    """Generate a test method for each entry in the packaged corpus."""
    if not ExamplesCorpusTest.entries:
        def test_no_data(self):
            self.skipTest("The corpus file holds no examples.")
        setattr(ExamplesCorpusTest, 'test_no_data', test_no_data)
        return

    seen = {}
    for entry in ExamplesCorpusTest.entries:
        name = "test_" + re.sub(r"\W", "_", entry["id"])
        seen[name] = seen.get(name, 0) + 1
        if seen[name] > 1:
            name = f"{name}_{seen[name]}"

        def create_test_method(e):
            def test_method(self):
                result = run_entry(e)
                self.assertTrue(result.passed, f"{e['id']} [{e['kind']}]: {result.detail}")
            return test_method

        setattr(ExamplesCorpusTest, name, create_test_method(entry))


# Generate test methods
generate_test_methods()

if __name__ == "__main__":
    unittest.main()
