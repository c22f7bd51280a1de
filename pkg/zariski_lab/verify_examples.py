"""
Runner for the built-in corpus of worked examples (data/worked_examples.json).

Each corpus entry names a check kind and its inputs. Entries may carry
"params" (a grid of values, expanded as a cartesian product) or "cases"
(an explicit list of value sets); every string field is formatted with
those values, so one entry can describe a whole family of ideals.
"""

import json
import os
from dataclasses import dataclass
from itertools import product as cartesian
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from .decide import Verdict, exists_rank_r
from .expressions import parse_ideal, parse_polynomial
from .module_lab import (
    FreeVector,
    ModulePresentation,
    build_mr,
    buchsbaum_rim,
    cofree_colength,
    colon_inclusion_holds,
    contains_m_times_free,
    fitting_ideal,
    koszul_identity_holds,
    member_mr,
    parameter_identity_holds,
    presentation_colength,
)
from .monomial_ideal import MonomialIdeal, mpower
from .polynomials import PolyMatrix, det, format_poly
from .utils import print_status

DEFAULT_CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "worked_examples.json")
INT_FIELDS = ("rank", "k")

CheckResult = Tuple[bool, str]


@dataclass(frozen=True)
class CorpusResult:
    id: str
    kind: str
    passed: bool
    detail: str = ""


def load_corpus(path: Optional[str] = None) -> List[Dict[str, Any]]:
    """Read the corpus file and expand parametrized entries"""
    path = path or DEFAULT_CORPUS
    if not os.path.exists(path):
        raise FileNotFoundError(f"Corpus file not found: {path}")
    with open(path, 'r') as f:
        data = json.load(f)
    entries: List[Dict[str, Any]] = []
    for entry in data.get("examples", []):
        entries.extend(expand_entry(entry))
    return entries


def _fill(value: Any, values: Dict[str, Any]) -> Any:
    if isinstance(value, str):
        # a bare "{name}" keeps the parameter's own type
        if value.startswith("{") and value.endswith("}") and value[1:-1] in values:
            return values[value[1:-1]]
        return value.format(**values)
    if isinstance(value, list):
        return [_fill(v, values) for v in value]
    if isinstance(value, dict):
        return {k: _fill(v, values) for k, v in value.items()}
    return value


def expand_entry(entry: Dict[str, Any]) -> List[Dict[str, Any]]:
    if "params" in entry:
        keys = sorted(entry["params"])
        value_sets = [dict(zip(keys, combo)) for combo in cartesian(*(entry["params"][k] for k in keys))]
    elif "cases" in entry:
        value_sets = list(entry["cases"])
    else:
        return [entry]

    expanded = []
    for values in value_sets:
        filled = {k: _fill(v, values) for k, v in entry.items() if k not in ("params", "cases")}
        for key in INT_FIELDS:
            if isinstance(filled.get(key), str):
                filled[key] = int(filled[key])
        expanded.append(filled)
    return expanded


def extremality_start(i: MonomialIdeal, r: int) -> int:
    """m^(mem_index - r + 1) F lies in M_r(I), so no smaller bound needs trying"""
    return max(1, i.mem_index() - r + 1)


def _check_normalize(entry, cap: Optional[int] = None) -> CheckResult:
    got = str(parse_ideal(entry["ideal"]))
    return got == entry["expected"], got


def _check_closure(entry, cap: Optional[int] = None) -> CheckResult:
    got = str(parse_ideal(entry["ideal"]).integral_closure())
    return got == entry["expected"], got


def _check_factor(entry, cap: Optional[int] = None) -> CheckResult:
    got = sorted(str(f) for f in parse_ideal(entry["ideal"]).zariski_factor())
    return got == sorted(entry["expected"]), " * ".join(got)


def _check_invariants(entry, cap: Optional[int] = None) -> CheckResult:
    i = parse_ideal(entry["ideal"])
    got = {
        "order": i.order(),
        "colength": i.colength(),
        "multiplicity": i.multiplicity(),
        "mem_index": i.mem_index(),
        "num_generators": i.num_generators(),
        "initial_degree_dim": i.initial_degree_dim(),
    }
    mismatched = {k: got[k] for k, v in entry["expected"].items() if got[k] != v}
    return not mismatched, f"mismatched {mismatched}" if mismatched else ""


def _check_colon(entry, cap: Optional[int] = None) -> CheckResult:
    got = str(parse_ideal(entry["ideal"]).colon_mpow(entry["k"]))
    return got == entry["expected"], got


def _check_matrix(entry, cap: Optional[int] = None) -> CheckResult:
    got = build_mr(parse_ideal(entry["ideal"]), entry["rank"]).matrix.to_strings()
    return got == entry["expected"], json.dumps(got)


def _presentation_from_strings(rows: List[List[str]]) -> PolyMatrix:
    return PolyMatrix.from_rows([[parse_polynomial(cell) for cell in row] for row in rows])


def _check_matrix_equivalent(entry, cap: Optional[int] = None) -> CheckResult:
    """Same submodule of F: columns lie in M_r(I) and the colengths agree"""
    i, r = parse_ideal(entry["ideal"]), entry["rank"]
    given = ModulePresentation(rank=r, matrix=_presentation_from_strings(entry["expected"]))
    outside = [str(v) for v in given.columns() if not member_mr(v, i, r)]
    if outside:
        return False, f"columns outside M_{r}(I): {outside}"
    expected_length = cofree_colength(i, r)
    length = presentation_colength(given, start=extremality_start(i, r), cap=cap)
    return length == expected_length, f"lambda(F/M) = {length}, expected {expected_length}"


def _check_fitting_chain(entry, cap: Optional[int] = None) -> CheckResult:
    i, r = parse_ideal(entry["ideal"]), entry["rank"]
    m = build_mr(i, r)
    failed = [k for k in range(1, r + 1)
              if not fitting_ideal(m, k).equals_monomial(mpower(k) if k < r else i)]
    return not failed, f"failed at k = {failed}" if failed else ""


def _check_extremal(entry, cap: Optional[int] = None) -> CheckResult:
    i, r = parse_ideal(entry["ideal"]), entry["rank"]
    length = presentation_colength(build_mr(i, r), start=extremality_start(i, r), cap=cap)
    passed = length == cofree_colength(i, r) and i.colength() - length == comb(r, 2)
    return passed, f"lambda(R/I) = {i.colength()}, lambda(F/M) = {length}"


def _check_buchsbaum_rim(entry, cap: Optional[int] = None) -> CheckResult:
    got = buchsbaum_rim(parse_ideal(entry["ideal"]), entry["rank"])
    return got == entry["expected"], str(got)


def _check_decide(entry, cap: Optional[int] = None) -> CheckResult:
    decision = exists_rank_r(parse_ideal(entry["ideal"]), entry["rank"])
    problems = []
    if decision.verdict != Verdict(entry["expected"]):
        problems.append(f"verdict {decision.verdict.value}")
    if "reason" in entry and decision.reason.value != entry["reason"]:
        problems.append(f"reason {decision.reason.value}")
    if "witness" in entry:
        witness = decision.witness
        expected = tuple(parse_ideal(text) for text in entry["witness"])
        if witness is None or (witness.j, witness.k) != expected:
            problems.append(f"witness {witness.to_json() if witness else None}")
    if "gap" in entry:
        gaps = [s.check.gap for s in decision.evidence]
        if not gaps or any(g != entry["gap"] for g in gaps):
            problems.append(f"gaps {gaps}")
    if "note" in entry and not any(entry["note"] in note for note in decision.notes):
        problems.append(f"missing note '{entry['note']}'")
    return not problems, "; ".join(problems) or decision.verdict.value


def _check_mtother(entry, cap: Optional[int] = None) -> CheckResult:
    i, r = parse_ideal(entry["ideal"]), entry["rank"]
    return contains_m_times_free(i, r) == entry.get("expected", True), ""


def _check_colon_inclusion(entry, cap: Optional[int] = None) -> CheckResult:
    return colon_inclusion_holds(parse_ideal(entry["ideal"]), entry["rank"]), ""


def _check_koszul(entry, cap: Optional[int] = None) -> CheckResult:
    return koszul_identity_holds(PolyMatrix.from_rows(entry["q"]), entry["rank"]), ""


def _check_parameter_identity(entry, cap: Optional[int] = None) -> CheckResult:
    a, b = parse_polynomial(entry["a"]), parse_polynomial(entry["b"])
    return parameter_identity_holds(a, b, entry["rank"], cap=cap), ""


def _check_det(entry, cap: Optional[int] = None) -> CheckResult:
    got = det(_presentation_from_strings(entry["matrix"]))
    return got == parse_polynomial(entry["expected"]), format_poly(got)


def _check_member(entry, cap: Optional[int] = None) -> CheckResult:
    i, r = parse_ideal(entry["ideal"]), entry["rank"]
    v = FreeVector(tuple(parse_polynomial(p) for p in entry["vector"]))
    got = member_mr(v, i, r)
    return got == entry["expected"], str(got)


CHECKS: Dict[str, Callable[[Dict[str, Any], Optional[int]], CheckResult]] = {
    "normalize": _check_normalize,
    "closure": _check_closure,
    "factor": _check_factor,
    "invariants": _check_invariants,
    "colon": _check_colon,
    "matrix": _check_matrix,
    "matrix_equivalent": _check_matrix_equivalent,
    "fitting_chain": _check_fitting_chain,
    "extremal": _check_extremal,
    "buchsbaum_rim": _check_buchsbaum_rim,
    "decide": _check_decide,
    "mtother": _check_mtother,
    "colon_inclusion": _check_colon_inclusion,
    "koszul": _check_koszul,
    "parameter_identity": _check_parameter_identity,
    "det": _check_det,
    "member": _check_member,
}


def run_entry(entry: Dict[str, Any], cap: Optional[int] = None) -> CorpusResult:
    kind = entry.get("kind", "")
    check = CHECKS.get(kind)
    if check is None:
        return CorpusResult(entry.get("id", "?"), kind, False, f"unknown check kind '{kind}'")
    try:
        passed, detail = check(entry, cap)
    except Exception as e:
        # one broken entry fails alone
        passed, detail = False, f"{type(e).__name__}: {e}"
    return CorpusResult(entry["id"], kind, passed, detail)


def run_corpus(path: Optional[str] = None, progress: bool = True, verbose: bool = False,
               cap: Optional[int] = None) -> List[CorpusResult]:
    """
    Run every corpus entry and report pass/fail per example.

    Args:
        path: Corpus JSON; the packaged corpus by default
        progress: Show a tqdm progress bar
        verbose: Print details for passing entries too
        cap: Truncation cap for local computations (defaults to the local-ideal cap)

    Returns:
        One CorpusResult per expanded entry
    """
    entries = load_corpus(path)
    results = [run_entry(entry, cap) for entry in tqdm(entries, desc="Verifying examples", disable=not progress)]

    for result in results:
        if not result.passed:
            print_status(f"{result.id} [{result.kind}]: {result.detail}", 'fail')
        elif verbose:
            print_status(f"{result.id} [{result.kind}]" + (f": {result.detail}" if result.detail else ""), 'ok')

    failed = sum(1 for r in results if not r.passed)
    if failed:
        print_status(f"{failed} of {len(results)} examples failed", 'fail')
    else:
        print_status(f"All {len(results)} examples passed", 'ok')
    return results
