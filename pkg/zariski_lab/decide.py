"""
Existence of indecomposable integrally closed modules with a given ideal of minors.

For an integrally closed m-primary monomial ideal I of order n and a rank r:
  - n > r: M_r(I) is indecomposable, so a module exists;
  - n < r: I(M) lies in m^r for every module without free summand, so none exists;
  - n = r: look for a factorization I = JK into integrally closed ideals of
    orders r1 + r2 = r with
        (a) lambda(R/JK) = lambda(R/J) + lambda(R/K) + r1 r2
        (b) m^(r-1) = m^(r2-1) J + m^(r1-1) K.
    No such split means a module exists. A split means none exists when
    r <= 3; for r >= 4 the answer is left open.
Factorizations are enumerated through the Zariski factors of I.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as cartesian
from typing import Any, Dict, List, Optional, Tuple

from .errors import NotIntegrallyClosed, RankTooSmall, VerificationError
from .monomial_ideal import MonomialIdeal, SimpleFactor, mpower, product_of_factors


class Verdict(str, Enum):
    EXISTS = "EXISTS"
    NOT_EXISTS = "NOT_EXISTS"
    UNKNOWN = "UNKNOWN"
    INVALID = "INVALID"


class Reason(str, Enum):
    ORDER_GREATER_THAN_RANK = "OrderGreaterThanRank"
    NO_QUALIFYING_SPLIT = "NoQualifyingSplit"
    QUALIFYING_SPLIT = "QualifyingSplit"
    ORDER_LESS_THAN_RANK = "OrderLessThanRank"
    RANK_ABOVE_3_INCONCLUSIVE = "RankAbove3Inconclusive"


NOTE_ZARISKI = (
    "Splits range over products of the monomial simple factors of I; by Zariski's "
    "unique factorization these are all factorizations into integrally closed ideals."
)
NOTE_PURE_POWER = (
    "I = m^{r}: any integrally closed module of rank {r} without free summand and "
    "I(M) = m^{r} contains mF and equals it, so no indecomposable one exists."
)
NOTE_INITIAL_FORMS = (
    "The initial forms of I span {dim} dimensions of m^{r}/m^{r_plus}: an integrally "
    "closed module of rank {r} without free summand and I(M) = I has m as a direct summand, "
    "so no indecomposable one exists."
)
NOTE_LOW_RANK = "For rank {r} every decomposable module splits off an ideal, so a qualifying split rules existence out."


@dataclass(frozen=True)
class PairCheck:
    """Outcome of the two split conditions"""
    cond_a: bool
    cond_b: bool
    lengths: Tuple[int, int, int, int]

    @property
    def qualifies(self) -> bool:
        return self.cond_a and self.cond_b

    @property
    def gap(self) -> int:
        """lambda(R/JK) - lambda(R/J) - lambda(R/K) - r1 r2, never negative"""
        product, first, second, cross = self.lengths
        return product - first - second - cross


@dataclass(frozen=True)
class SplitCandidate:
    j: MonomialIdeal
    k: MonomialIdeal
    r1: int
    r2: int
    check: Optional[PairCheck] = None

    @property
    def qualifies(self) -> bool:
        return self.check is not None and self.check.qualifies

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"J": str(self.j), "K": str(self.k), "r1": self.r1, "r2": self.r2}
        if self.check is not None:
            data.update({
                "condA": self.check.cond_a,
                "condB": self.check.cond_b,
                "lengths": list(self.check.lengths),
            })
        return data


@dataclass(frozen=True)
class Decision:
    ideal: MonomialIdeal
    rank: int
    verdict: Verdict
    reason: Reason
    evidence: Tuple[SplitCandidate, ...] = ()
    notes: Tuple[str, ...] = ()
    source: Optional[str] = field(default=None, compare=False)

    @property
    def witness(self) -> Optional[SplitCandidate]:
        return next((s for s in self.evidence if s.qualifies), None)

    def to_json(self) -> Dict[str, Any]:
        return {
            "input": self.source if self.source is not None else str(self.ideal),
            "normalized": str(self.ideal),
            "rank": self.rank,
            "order": self.ideal.order(),
            "colength": self.ideal.colength(),
            "verdict": self.verdict.value,
            "reason": self.reason.value,
            "splits": [s.to_json() for s in self.evidence],
            "notes": list(self.notes),
        }


def _require_closed(*ideals: MonomialIdeal):
    for ideal in ideals:
        if not ideal.is_integrally_closed():
            raise NotIntegrallyClosed(f"{ideal} is not integrally closed")


def check_pair(j: MonomialIdeal, k: MonomialIdeal) -> PairCheck:
    """
    Evaluate the length condition (a) and the sum condition (b) for I = JK.

    Args:
        j: Integrally closed ideal of order r1
        k: Integrally closed ideal of order r2

    Returns:
        PairCheck with lengths (lambda(R/JK), lambda(R/J), lambda(R/K), r1 r2)
    """
    _require_closed(j, k)
    r1, r2 = j.order(), k.order()
    lengths = (j.product(k).colength(), j.colength(), k.colength(), r1 * r2)
    cond_a = lengths[0] == lengths[1] + lengths[2] + lengths[3]
    cond_b = mpower(r2 - 1).product(j).sum(mpower(r1 - 1).product(k)) == mpower(r1 + r2 - 1)
    return PairCheck(cond_a=cond_a, cond_b=cond_b, lengths=lengths)


def _evaluate(split: SplitCandidate) -> SplitCandidate:
    return SplitCandidate(split.j, split.k, split.r1, split.r2, check_pair(split.j, split.k))


def enumerate_splits(i: MonomialIdeal, r1: int, r2: int) -> List[SplitCandidate]:
    """All I = JK with order(J) = r1, order(K) = r2, from sub-multisets of the Zariski factors"""
    _require_closed(i)
    if i.order() != r1 + r2:
        raise ValueError(f"{i} has order {i.order()}, not {r1} + {r2}")
    counts: List[Tuple[SimpleFactor, int]] = sorted(Counter(i.zariski_factor()).items())
    splits: Dict[Tuple[MonomialIdeal, MonomialIdeal], SplitCandidate] = {}
    for choice in cartesian(*(range(mult + 1) for _, mult in counts)):
        if sum(n * f.order() for (f, _), n in zip(counts, choice)) != r1:
            continue
        j = product_of_factors(f for (f, _), n in zip(counts, choice) for _ in range(n))
        k = product_of_factors(f for (f, mult), n in zip(counts, choice) for _ in range(mult - n))
        if j.product(k) != i:
            raise VerificationError(f"Split {j} * {k} does not recompose {i}")
        if r1 == r2 and k.sort_key() < j.sort_key():
            j, k = k, j
        splits.setdefault((j, k), SplitCandidate(j, k, r1, r2))
    return sorted(splits.values(), key=lambda s: (s.j.sort_key(), s.k.sort_key()))


def _notes(i: MonomialIdeal, r: int) -> List[str]:
    notes = [NOTE_ZARISKI]
    if i == mpower(r):
        notes.append(NOTE_PURE_POWER.replace("{r}", str(r)))
    dim = i.initial_degree_dim()
    if dim >= 2:
        notes.append(NOTE_INITIAL_FORMS.format(dim=dim, r=r, r_plus=r + 1))
    return notes


def exists_rank_r(i: MonomialIdeal, r: int, workers: int = 1, source: Optional[str] = None) -> Decision:
    """
    Decide whether I = I(M) for an indecomposable integrally closed module M of rank r.

    Args:
        i: Integrally closed m-primary monomial ideal
        r: Rank, at least 2
        workers: Threads used to evaluate splits (results keep enumeration order)
        source: Original input text recorded in the decision

    Returns:
        Decision with verdict, reason, evaluated splits and notes
    """
    if r < 2:
        raise RankTooSmall(f"Rank must be at least 2, got {r}")
    _require_closed(i)
    n = i.order()
    if n > r:
        return Decision(i, r, Verdict.EXISTS, Reason.ORDER_GREATER_THAN_RANK, source=source)
    if n < r:
        return Decision(i, r, Verdict.NOT_EXISTS, Reason.ORDER_LESS_THAN_RANK, source=source)

    candidates = [s for r1 in range(1, r // 2 + 1) for s in enumerate_splits(i, r1, r - r1)]
    if workers > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            evaluated = list(executor.map(_evaluate, candidates))
    else:
        evaluated = [_evaluate(s) for s in candidates]

    notes = _notes(i, r)
    if not any(s.qualifies for s in evaluated):
        verdict, reason = Verdict.EXISTS, Reason.NO_QUALIFYING_SPLIT
    elif r <= 3:
        verdict, reason = Verdict.NOT_EXISTS, Reason.QUALIFYING_SPLIT
        notes.append(NOTE_LOW_RANK.format(r=r))
    else:
        verdict, reason = Verdict.UNKNOWN, Reason.RANK_ABOVE_3_INCONCLUSIVE
    return Decision(i, r, verdict, reason, tuple(evaluated), tuple(notes), source=source)


def decide_rank3(i: MonomialIdeal, workers: int = 1, source: Optional[str] = None) -> Decision:
    """Rank-3 characterization: the split test is both necessary and sufficient"""
    return exists_rank_r(i, 3, workers=workers, source=source)
