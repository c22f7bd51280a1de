"""
Survey of all integrally closed monomial ideals up to a colength bound.

Ideals are enumerated as products of simple factors IC(x^c, y^d) taken in a
fixed order, so every ideal appears once (Zariski factorization is unique).
Each ideal is decided in a worker thread; rows are written in canonical
ideal order.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from math import gcd
from typing import Any, Dict, List, Optional

import pandas as pd
from tqdm import tqdm

from .decide import exists_rank_r
from .monomial_ideal import MonomialIdeal, SimpleFactor
from .utils import print_status

SURVEY_COLUMNS = ["ideal", "order", "colength", "verdict", "reason", "witnessJ", "witnessK"]


def simple_factors_up_to(max_colength: int) -> List[SimpleFactor]:
    """Simple factors whose own colength is within the bound"""
    factors = []
    for c in range(1, max_colength + 1):
        for d in range(1, max_colength + 1):
            if gcd(c, d) == 1:
                factor = SimpleFactor(c, d)
                if factor.ideal().colength() <= max_colength:
                    factors.append(factor)
    return sorted(factors)


def enumerate_closed_ideals(max_colength: int) -> List[MonomialIdeal]:
    """All proper integrally closed monomial ideals with colength <= max_colength"""
    factors = simple_factors_up_to(max_colength)
    ideals = [f.ideal() for f in factors]
    lengths = [i.colength() for i in ideals]
    found: Dict[MonomialIdeal, None] = {}

    def extend(start: int, current: MonomialIdeal):
        base = current.colength()
        for idx in range(start, len(factors)):
            # colength is superadditive on products of proper ideals
            if base + lengths[idx] > max_colength:
                continue
            grown = current.product(ideals[idx])
            if grown.colength() > max_colength:
                continue
            found.setdefault(grown, None)
            extend(idx, grown)

    extend(0, MonomialIdeal.unit())
    return sorted(found, key=MonomialIdeal.sort_key)


def survey_row(ideal: MonomialIdeal, rank: int) -> Dict[str, Any]:
    decision = exists_rank_r(ideal, rank)
    witness = decision.witness
    return {
        "ideal": str(ideal),
        "order": ideal.order(),
        "colength": ideal.colength(),
        "verdict": decision.verdict.value,
        "reason": decision.reason.value,
        "witnessJ": str(witness.j) if witness else "",
        "witnessK": str(witness.k) if witness else "",
    }


def run_survey(max_colength: int, rank: int = 3, workers: int = 4,
               output_file: Optional[str] = None, progress: bool = True) -> pd.DataFrame:
    """
    Decide every integrally closed monomial ideal up to a colength bound.

    Args:
        max_colength: Largest colength enumerated
        rank: Rank passed to the existence test
        workers: Number of worker threads
        output_file: CSV path; nothing is written when None
        progress: Show a tqdm progress bar

    Returns:
        DataFrame with SURVEY_COLUMNS in canonical ideal order
    """
    ideals = enumerate_closed_ideals(max_colength)
    print_status(f"Enumerated {len(ideals)} integrally closed ideals with colength <= {max_colength}", 'info')

    rows: List[Dict[str, Any]] = []
    pbar = tqdm(total=len(ideals), desc="Deciding ideals", disable=not progress)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        process_func = partial(survey_row, rank=rank)
        for row in executor.map(process_func, ideals):
            rows.append(row)
            pbar.update(1)
    pbar.close()

    df = pd.DataFrame(rows, columns=SURVEY_COLUMNS)
    counts = df["verdict"].value_counts().to_dict() if not df.empty else {}
    print_status("Verdicts: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())), 'ok')

    if output_file:
        os.makedirs(os.path.dirname(os.path.abspath(output_file)), exist_ok=True)
        df.to_csv(output_file, index=False)
        print_status(f"Survey written to {output_file}", 'ok')
    return df
